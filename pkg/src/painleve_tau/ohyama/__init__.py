"""Painleve III (D7) side: Ohyama polynomials and their Wronskian representation."""

from .coefficients import CoeffTable, coeff_A, coeff_table, entry_W
from .family import OhyamaFamily
from .gauged import SIGMA0, gauged_objects, gen_eigenfunction_psi, phi, phi_tilde, sigma, theta
from .profiles import ALTERNATE, CANONICAL, PROFILES, Profile, custom_profile, get_profile
from .rho import ROUTES, reflect, rho, rho_bc, rho_recurrence, rho_wronskian, s_to_zeta, sign_symmetry_factor
from .solutions import V0, Z, algebraic_P, backlund, backlund_alt, eta, p3d7_residual, potential_V, y_pm
from .verify import verify_family

__all__ = [
    "ALTERNATE",
    "CANONICAL",
    "PROFILES",
    "ROUTES",
    "SIGMA0",
    "V0",
    "Z",
    "CoeffTable",
    "OhyamaFamily",
    "Profile",
    "algebraic_P",
    "backlund",
    "backlund_alt",
    "coeff_A",
    "coeff_table",
    "custom_profile",
    "entry_W",
    "eta",
    "gauged_objects",
    "gen_eigenfunction_psi",
    "get_profile",
    "p3d7_residual",
    "phi",
    "phi_tilde",
    "potential_V",
    "reflect",
    "rho",
    "rho_bc",
    "rho_recurrence",
    "rho_wronskian",
    "s_to_zeta",
    "sigma",
    "sign_symmetry_factor",
    "theta",
    "verify_family",
    "y_pm",
]
