"""mispec: multiplier-ideal spectra on SNC models + numerical verification kernels.

Subpackages:

* :mod:`mispec.snc`     exact-rational combinatorics of multiplier ideals
  (coefficient vectors, jumping spectra, log canonical threshold,
  restricted ideals) on simple-normal-crossing resolution models;
* :mod:`mispec.oracle`  independent numerical verification of integrability,
  tube-limit measures and singular integrals;
* :mod:`mispec.fiber`   pointwise Hermitian multilinear algebra (forms with
  bundle values, Lefschetz pair, Nakano/Griffiths positivity, curvature
  commutators);
* :mod:`mispec.cutoff`  construction and certification of the auxiliary
  cut-off family (chi, eta, lambda, theta, gamma, psi_A);
* :mod:`mispec.cli`     document ingestion, subcommands, verification reports.
"""

__version__ = "0.1.0"

from mispec.snc import (  # noqa: F401
    DivisorComponent,
    JumpingSpectrum,
    MonomialModel,
    RestrictedIdealData,
    SncModel,
    inclusion_chain,
    jumping_spectrum,
    lct,
    monomial_membership,
    multiplier_coeffs,
    restricted_multiplier_ideal,
)
