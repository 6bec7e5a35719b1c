"""Continued fractions, Diophantine approximation and small-exponent RSA attacks."""

from .approx import (
    ApproxQuery,
    ApproxSolution,
    brute_force_solutions,
    classify_solution,
    enumerate_solutions,
    worley_form_check,
)
from .attacks import (
    AttackConfig,
    AttackOutcome,
    RsaPublicKey,
    locate_m_shortcut,
    modpow_test,
    phi_test,
    search_bounds,
    variant_attack,
    vvt_attack,
    wiener_attack,
    wiener_f_attack,
)
from .cf import CFExpansion, cf_expand, cmp_with_sqrt_scaled, convergent, isqrt, semiconvergent
from .keygen import KeyGenSpec, RsaKeySet, gen_key
from .sweeps import quotient_distribution, sweep, variant_sweep, vvt_sweep

__version__ = "0.1.0"
