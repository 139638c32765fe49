"""Certified enclosures for the positive zeros of Bessel functions.

The three-term uniform expansion zhat = z0 + zhat1/nu^2 + zhat2/nu^4 +
zhat3/nu^6 of the Liouville-transformed zero is combined with a proved
two-sided remainder bound to produce an interval guaranteed to contain
j_{nu,m}.  Supporting modules expose the transform itself, the Airy zero
bookkeeping, an independent numerical oracle, and the lemma lab that
recomputes every constant the proof relies on.
"""

from .airy import AiryZeroRecord, airy_ai, airy_ai_prime, airy_bi, \
    airy_zero, mcmahon_zero, modulus_M, quwong_minima
from .engine import ExpansionCoefficients, ZeroEnclosure, chi, \
    coefficients, enclosure, point_estimate, solve_zm0, zhat_root
from .expansion import CoefficientSet, UpsilonSet, coefficient_set, eta, \
    script_Z3, upsilon, upsilon_set, zhat
from .lab import ScanReport, UnsupportedScanError, calF, calG, \
    gamma_fixed_nu, psi0_constant, psi_of_zeta, scan, structural_constants
from .liouville import MappedPoint, mapped_point, sigma_of_z, z_of_zeta, \
    zeta_derivatives, zeta_of_z
from .oracle import EXTENDED, STANDARD, PrecisionPolicy, bessel_j, \
    reference_zero

__version__ = "1.0.0"

__all__ = [
    "AiryZeroRecord", "CoefficientSet", "ExpansionCoefficients",
    "MappedPoint", "PrecisionPolicy", "ScanReport", "UnsupportedScanError",
    "UpsilonSet", "ZeroEnclosure", "STANDARD", "EXTENDED",
    "airy_ai", "airy_ai_prime", "airy_bi", "airy_zero", "bessel_j",
    "calF", "calG", "chi", "coefficient_set",
    "coefficients", "enclosure", "eta", "gamma_fixed_nu", "mapped_point",
    "mcmahon_zero", "modulus_M", "point_estimate", "psi0_constant",
    "psi_of_zeta", "quwong_minima", "reference_zero", "scan",
    "script_Z3", "sigma_of_z", "solve_zm0", "structural_constants",
    "upsilon", "upsilon_set", "z_of_zeta", "zeta_derivatives", "zeta_of_z",
    "zhat", "zhat_root", "__version__",
]
