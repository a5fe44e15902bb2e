"""Model documents and verification reports (JSON, exact rationals as strings).

Model data never passes through floating point: rationals are serialized as
"numerator/denominator" strings so jumping numbers survive round trips
exactly.  Reports are self-contained: they embed the metric conventions and
the reproducibility block (seeds, grid sizes, tolerances) needed to re-run
every check, and each check record carries the formula it verifies in its
``ref`` field.
"""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field
from datetime import datetime, timezone
from fractions import Fraction
from pathlib import Path
from typing import Any

from mispec import __version__
from mispec.snc import DivisorComponent, ModelError, MonomialModel, SncModel


class DocumentError(ValueError):
    """Malformed model or report document; carries the failing field name."""

    def __init__(self, field_name: str, message: str) -> None:
        self.field_name = field_name
        super().__init__(f"{field_name}: {message}")


def parse_rational(value: Any, field_name: str) -> Fraction:
    if isinstance(value, bool) or isinstance(value, float):
        raise DocumentError(field_name, f"exact rational required (int or 'p/q' string), got {value!r}")
    try:
        return Fraction(value)
    except (ValueError, TypeError, ZeroDivisionError) as exc:
        raise DocumentError(field_name, f"cannot parse rational from {value!r}: {exc}") from None


def rational_str(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


# --------------------------------------------------------------------------- #
# model documents
# --------------------------------------------------------------------------- #

@dataclass(frozen=True)
class ModelDocument:
    kind: str                      # "snc" | "monomial"
    model: SncModel | MonomialModel
    label: dict[str, str] = field(default_factory=dict)


def model_from_dict(doc: dict) -> ModelDocument:
    kind = doc.get("kind")
    label = doc.get("label", {})
    if not isinstance(label, dict):
        raise DocumentError("label", "must be an object of strings")
    try:
        if kind == "snc":
            comps = []
            raw_comps = doc.get("components")
            if not isinstance(raw_comps, list) or not raw_comps:
                raise DocumentError("components", "must be a nonempty list")
            for i, rc in enumerate(raw_comps):
                name = rc.get("name", f"D{i + 1}")
                a = rc.get("a")
                b = rc.get("b", 0)
                if not isinstance(a, int):
                    raise DocumentError(f"components[{i}].a", f"must be an integer, got {a!r}")
                if not isinstance(b, int):
                    raise DocumentError(f"components[{i}].b", f"must be an integer, got {b!r}")
                comps.append(DivisorComponent(str(name), a, b))
            names = [c.name for c in comps]
            pairs = set()
            for i, pair in enumerate(doc.get("intersections", [])):
                if not (isinstance(pair, list) and len(pair) == 2):
                    raise DocumentError(f"intersections[{i}]", "must be a pair of component names")
                try:
                    pairs.add(frozenset((names.index(pair[0]), names.index(pair[1]))))
                except ValueError:
                    raise DocumentError(f"intersections[{i}]", f"unknown component in {pair}") from None
            c = parse_rational(doc.get("c", 1), "c")
            return ModelDocument("snc", SncModel(c, tuple(comps), frozenset(pairs)), label)
        if kind == "monomial":
            raw = doc.get("alpha")
            if not isinstance(raw, list) or not raw:
                raise DocumentError("alpha", "must be a nonempty list of rationals")
            alpha = tuple(parse_rational(x, f"alpha[{i}]") for i, x in enumerate(raw))
            return ModelDocument("monomial", MonomialModel(alpha), label)
    except ModelError as exc:
        raise DocumentError("model", str(exc)) from None
    raise DocumentError("kind", f"must be 'snc' or 'monomial', got {kind!r}")


def model_to_dict(doc: ModelDocument) -> dict:
    if doc.kind == "snc":
        model = doc.model
        assert isinstance(model, SncModel)
        names = model.names
        return {
            "kind": "snc",
            "c": rational_str(model.c),
            "components": [{"name": c.name, "a": c.a, "b": c.b} for c in model.components],
            "intersections": sorted(sorted([names[i] for i in pair]) for pair in model.intersections),
            "label": dict(doc.label),
        }
    model = doc.model
    assert isinstance(model, MonomialModel)
    return {"kind": "monomial", "alpha": [rational_str(x) for x in model.alpha],
            "label": dict(doc.label)}


def load_model(path: str | Path) -> ModelDocument:
    try:
        raw = json.loads(Path(path).read_text())
    except FileNotFoundError:
        raise DocumentError("path", f"no such file: {path}") from None
    except json.JSONDecodeError as exc:
        raise DocumentError("json", f"invalid JSON in {path}: {exc}") from None
    if not isinstance(raw, dict):
        raise DocumentError("document", "top level must be an object")
    return model_from_dict(raw)


def save_model(doc: ModelDocument, path: str | Path) -> None:
    Path(path).write_text(json.dumps(model_to_dict(doc), indent=2, sort_keys=True) + "\n")


# --------------------------------------------------------------------------- #
# verification reports
# --------------------------------------------------------------------------- #

CONVENTIONS = {
    "ambient_form": "omega = i sum_k dz_k wedge dzbar_k on C^n (flat)",
    "volume": "dV = omega^n / n! = 2^n * Lebesgue",
    "covector_norm": "|dz_k|^2 = 2, extended multiplicatively to wedges",
    "lefschetz_wedge": "L = wedge with (i/2) sum_k dz_k wedge dzbar_k "
                       "(the fundamental form of the same metric)",
    "bracket_order": "curvature commutators taken curvature-first: [i Theta, Lambda]",
    "singular_integral_domain_radius": 0.5,
}


@dataclass
class CheckRecord:
    id: str
    ref: str
    status: str          # "pass" | "fail"
    margin: float | None = None
    details: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.status == "pass"


def check(check_id: str, ref: str, passed: bool, margin: float | None = None,
          **details: Any) -> CheckRecord:
    return CheckRecord(check_id, ref, "pass" if passed else "fail", margin, details)


@dataclass
class VerificationReport:
    suites: list[str]
    checks: list[CheckRecord]
    reproducibility: dict
    tool_version: str = __version__
    timestamp: str = ""

    def __post_init__(self) -> None:
        if not self.timestamp:
            self.timestamp = datetime.now(timezone.utc).isoformat()
        ids = [c.id for c in self.checks]
        if len(set(ids)) != len(ids):
            dupes = sorted({i for i in ids if ids.count(i) > 1})
            raise ValueError(f"duplicate check ids: {dupes}")

    @property
    def all_passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def to_dict(self) -> dict:
        return {
            "toolVersion": self.tool_version,
            "timestamp": self.timestamp,
            "suites": list(self.suites),
            "conventions": dict(CONVENTIONS),
            "reproducibility": dict(self.reproducibility),
            "checks": [asdict(c) for c in self.checks],
        }


def _json_safe(obj: Any) -> Any:
    if isinstance(obj, Fraction):
        return rational_str(obj)
    if isinstance(obj, (list, tuple)):
        return [_json_safe(x) for x in obj]
    if isinstance(obj, dict):
        return {str(k): _json_safe(v) for k, v in obj.items()}
    if hasattr(obj, "item"):  # numpy scalars
        return obj.item()
    return obj


def save_report(report: VerificationReport, path: str | Path) -> None:
    Path(path).write_text(json.dumps(_json_safe(report.to_dict()), indent=2, sort_keys=True) + "\n")


def load_report_dict(path: str | Path) -> dict:
    try:
        raw = json.loads(Path(path).read_text())
    except FileNotFoundError:
        raise DocumentError("path", f"no such file: {path}") from None
    except json.JSONDecodeError as exc:
        raise DocumentError("json", f"invalid JSON in {path}: {exc}") from None
    if not isinstance(raw, dict) or "checks" not in raw:
        raise DocumentError("document", "not a verification report (missing 'checks')")
    return raw


def render_report_lines(report_dict: dict) -> list[str]:
    lines = []
    for c in report_dict["checks"]:
        margin = c.get("margin")
        margin_txt = "" if margin is None else f" margin={margin:.3e}"
        lines.append(f"{c['status'].upper():4s} {c['id']}{margin_txt}  [{c['ref']}]")
    n_pass = sum(1 for c in report_dict["checks"] if c["status"] == "pass")
    lines.append(f"{n_pass}/{len(report_dict['checks'])} checks passed")
    return lines
