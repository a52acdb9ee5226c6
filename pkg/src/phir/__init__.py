"""phi-r-ideals of computable commutative rings.

Rings are finite products of Z, Z/n, Z[1/S] and explicit finite tables,
closed under quotients, idealizations and localizations.  Ideal classes are
decided exactly on finite rings and by closed forms or bounded search on
infinite ones; results come back as :class:`Verdict` values with witnesses.
"""

from .classifiers import (
    ClassificationReport,
    IdealClass,
    check,
    classify,
    idempotent_verdict,
    is_idempotent,
    is_phi_prime,
    is_phi_pr_ideal,
    is_phi_pure,
    is_phi_r_ideal,
    is_phi_vnr,
    is_prime,
    is_pure,
    is_r_ideal,
    is_regular_ideal,
    is_strongly_phi_r,
    is_vnr_ideal,
    is_weakly_r_ideal,
    satisfies_sac,
    validate_witness,
)
from .constructions import (
    QuotientModule,
    RegularModule,
    make_idealization,
    make_localization,
    make_quotient,
    pair_ideal,
)
from .dsl import parse_corpus, parse_ideal, parse_phi, parse_ring, ring_from_text
from .errors import *  # noqa: F403
from .ideals import (
    Ideal,
    annihilator,
    colon,
    colon_set,
    enumerate_ideals,
    ideal_from_generators,
    omega_power,
    principal,
    proper_ideals,
    radical,
    unit_ideal,
    zero_ideal,
)
from .phi import (
    EMPTY,
    PhiCustom,
    PhiEmpty,
    PhiIdentity,
    PhiLocalizationInduced,
    PhiMap,
    PhiOmega,
    PhiPower,
    PhiProduct,
    PhiQuotientInduced,
    PhiZero,
    order_chain_check,
    phi_apply,
    phi_leq,
    product_power,
)
from .ringspec import build_ring, print_ring
from .rings import LocZ, Ring, Z, Zn, is_regular, is_total_quotient_ring, make_product, zerodivisors
from .verdict import Status, Verdict
from .verifier import THEOREMS, NotFound, Separation, TheoremReport, search_separating, verify, verify_corpus

__version__ = "0.1.0"
