"""The claim catalog: every identity and inequality as a checkable statement.

A claim couples a hypothesis predicate, a conclusion predicate and the seeded
ensemble it is exercised against.  Claims expected to hold always are run over
many random trials; the five fixed counterexample instances live in a registry
with their known verdict structure.  ``run_suite`` drives everything and
aggregates a replayable report.
"""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from .core import (
    DEFAULT_POLICY,
    TolerancePolicy,
    adjoint,
    approx_eq,
    as_matrix,
    frobenius,
    operator_norm,
    rel_residual,
)
from .calculus import (
    MAX_CONDITION,
    abs_value,
    inverse,
    condition_estimate,
    loewner_leq,
    psd_power,
    psd_sqrt,
)
from .predicates import (
    PredicateResult,
    commutes,
    is_anti_symmetric,
    is_hyponormal,
    is_normal,
    is_positive,
    is_self_adjoint,
)
from .generators import EnsembleSpec, Seed, gen_general, sample

ALWAYS_HOLDS = "ALWAYS_HOLDS"
REGISTRY_VIOLATION = "REGISTRY_VIOLATION"

PASS = "PASS"
VIOLATION = "VIOLATION"
HYPOTHESIS_FAIL = "HYPOTHESIS_FAIL"

# Annotation attached to claims whose hypotheses mention hyponormality; the
# hyponormal predicate is still evaluated, never assumed.
_COLLAPSE_NOTE = (
    "hyponormal slot instantiated with normal witnesses: in finite dimension "
    "a hyponormal matrix is already normal"
)


@dataclass(frozen=True)
class Claim:
    id: str
    description: str
    arity: int  # -1 means the ensemble decides per trial
    ensemble: EnsembleSpec | None
    hypothesis: Callable
    conclusion: Callable
    expect: str = ALWAYS_HOLDS
    note: str = ""


@dataclass(frozen=True)
class ClaimInstance:
    claim_id: str
    matrices: tuple
    seed: Seed | None = None  # None marks a registry instance

    def __post_init__(self):
        claim = catalog()[self.claim_id]
        if claim.arity > 0 and len(self.matrices) != claim.arity:
            raise ValueError(
                f"{self.claim_id} takes {claim.arity} matrices, got {len(self.matrices)}"
            )


@dataclass(frozen=True)
class ClaimResult:
    claim_id: str
    hypothesis_ok: bool
    conclusion_ok: bool | None
    hypothesis_flags: dict
    residuals: dict
    verdict: str


# ---------------------------------------------------------------------------
# hypothesis / conclusion building blocks


def _hypothesis(**parts: PredicateResult):
    flags = {name: bool(res) for name, res in parts.items()}
    residuals = {f"hyp_{name}": float(res.residual) for name, res in parts.items()}
    return all(flags.values()), flags, residuals


def _loewner_pred(a, b, pol) -> PredicateResult:
    v = loewner_leq(a, b, pol)
    return PredicateResult(v.holds, v.witness_lambda_min)


def _invertible_pred(a) -> PredicateResult:
    kappa = condition_estimate(a)
    return PredicateResult(kappa <= MAX_CONDITION, kappa)


def _concl_equal(x, y, pol):
    """Equality conclusion; residual is the shared relative Frobenius residual."""
    return approx_eq(x, y, pol), rel_residual(x, y), {}


def _concl_loewner(x, y, pol):
    """Order conclusion x <= y; residual is the negated witness eigenvalue,
    so larger means closer to (or deeper into) violation."""
    v = loewner_leq(x, y, pol)
    return v.holds, -v.witness_lambda_min, {"witness_lambda_min": v.witness_lambda_min}


def _concl_opnorm_leq(x, y, pol, scale_of):
    """Norm conclusion ||x|| <= ||y|| with additive slack tol*max(1, scales)."""
    lhs, rhs = operator_norm(x), operator_norm(y)
    slack = pol.rel * max(1.0, *(operator_norm(m) for m in scale_of)) + pol.abs
    return lhs <= rhs + slack, lhs - rhs, {"lhs_norm": lhs, "rhs_norm": rhs}


def _zero_like(a):
    return np.zeros_like(a)


# --- hypotheses ------------------------------------------------------------


def _hyp_commuting_positive(mats, pol):
    a, b = mats
    return _hypothesis(
        commutes=commutes(a, b, pol), positive_a=is_positive(a, pol), positive_b=is_positive(b, pol)
    )


def _hyp_ordered_psd(mats, pol):
    a, b = mats
    return _hypothesis(order_b_leq_a=_loewner_pred(b, a, pol), positive_b=is_positive(b, pol))


def _hyp_ordered_psd_commuting(mats, pol):
    a, b = mats
    return _hypothesis(
        order_b_leq_a=_loewner_pred(b, a, pol),
        positive_b=is_positive(b, pol),
        commutes=commutes(a, b, pol),
    )


def _hyp_normal_a(mats, pol):
    return _hypothesis(normal_a=is_normal(mats[0], pol))


def _hyp_commuting_normal_a(mats, pol):
    a, b = mats
    return _hypothesis(commutes=commutes(a, b, pol), normal_a=is_normal(a, pol))


def _hyp_commuting_both_normal(mats, pol):
    a, b = mats
    return _hypothesis(
        commutes=commutes(a, b, pol), normal_a=is_normal(a, pol), normal_b=is_normal(b, pol)
    )


def _hyp_sa_pair_normal_product(mats, pol):
    a, b = mats
    return _hypothesis(
        self_adjoint_a=is_self_adjoint(a, pol),
        self_adjoint_b=is_self_adjoint(b, pol),
        normal_product=is_normal(a @ b, pol),
    )


def _hyp_commuting_normal_a_invertible_b(mats, pol):
    a, b = mats
    return _hypothesis(
        commutes=commutes(a, b, pol),
        normal_a=is_normal(a, pol),
        invertible_b=_invertible_pred(b),
    )


def _hyp_normal_invertible(mats, pol):
    (a,) = mats
    return _hypothesis(normal_a=is_normal(a, pol), invertible_a=_invertible_pred(a))


def _pairwise_commute(mats, pol) -> PredicateResult:
    worst = 0.0
    ok = True
    for i in range(len(mats)):
        for j in range(i + 1, len(mats)):
            res = commutes(mats[i], mats[j], pol)
            ok = ok and res.holds
            worst = max(worst, res.residual)
    return PredicateResult(ok, worst)


def _all_but_one_normal(mats, pol) -> PredicateResult:
    results = [is_normal(m, pol) for m in mats]
    non_normal = [r for r in results if not r.holds]
    residual = max((r.residual for r in results), default=0.0)
    return PredicateResult(len(non_normal) <= 1, residual)


def _hyp_family_one_nonnormal(mats, pol):
    return _hypothesis(
        pairwise_commute=_pairwise_commute(mats, pol),
        all_but_one_normal=_all_but_one_normal(mats, pol),
    )


def _hyp_anti_symmetric(mats, pol):
    return _hypothesis(anti_symmetric=is_anti_symmetric(mats[0], pol))


def _hyp_hyponormal(mats, pol):
    return _hypothesis(hyponormal=is_hyponormal(mats[0], pol))


def _hyp_commuting_normal_a_hypo_b(mats, pol):
    a, b = mats
    return _hypothesis(
        commutes=commutes(a, b, pol),
        normal_a=is_normal(a, pol),
        hyponormal_b=is_hyponormal(b, pol),
    )


def _hyp_family_hypo(mats, pol):
    hypo = [is_hyponormal(m, pol) for m in mats]
    return _hypothesis(
        pairwise_commute=_pairwise_commute(mats, pol),
        all_but_one_normal=_all_but_one_normal(mats, pol),
        all_hyponormal=PredicateResult(
            all(r.holds for r in hypo), min((r.residual for r in hypo), default=0.0)
        ),
    )


def _hyp_family_normal(mats, pol):
    normal = [is_normal(m, pol) for m in mats]
    return _hypothesis(
        pairwise_commute=_pairwise_commute(mats, pol),
        all_normal=PredicateResult(
            all(r.holds for r in normal), max((r.residual for r in normal), default=0.0)
        ),
    )


def _hyp_sandwich(mats, pol):
    t, s = mats
    return _hypothesis(
        self_adjoint_t=is_self_adjoint(t, pol),
        self_adjoint_s=is_self_adjoint(s, pol),
        positive_s=is_positive(s, pol),
        lower=_loewner_pred(-s, t, pol),
        upper=_loewner_pred(t, s, pol),
    )


def _hyp_negcross(mats, pol):
    a, b = mats
    cross = adjoint(a) @ b + adjoint(b) @ a
    return _hypothesis(
        commutes=commutes(a, b, pol),
        normal_a=is_normal(a, pol),
        cross_nonpositive=_loewner_pred(cross, _zero_like(cross), pol),
    )


# --- conclusions -----------------------------------------------------------


def _concl_product_positive(mats, pol):
    a, b = mats
    res = is_positive(a @ b, pol)
    return res.holds, -res.residual, {"lambda_min": res.residual}


def _concl_sqrt_factor(mats, pol):
    a, b = mats
    return _concl_equal(psd_sqrt(a @ b, pol), psd_sqrt(a, pol) @ psd_sqrt(b, pol), pol)


def _concl_sqrt_sum(mats, pol):
    a, b = mats
    return _concl_loewner(psd_sqrt(a + b, pol), psd_sqrt(a, pol) + psd_sqrt(b, pol), pol)


_LH_ALPHAS = (0.25, 0.5, 0.75)


def _concl_loewner_heinz(mats, pol):
    a, b = mats
    ok = True
    worst = -np.inf
    extras = {}
    for alpha in _LH_ALPHAS:
        v = loewner_leq(psd_power(b, alpha, pol), psd_power(a, alpha, pol), pol)
        ok = ok and v.holds
        worst = max(worst, -v.witness_lambda_min)
        extras[f"witness_alpha_{alpha}"] = v.witness_lambda_min
    return ok, worst, extras


def _concl_square_mono(mats, pol):
    a, b = mats
    return _concl_loewner(b @ b, a @ a, pol)


def _concl_fuglede(mats, pol):
    a, b = mats
    astar, bstar = adjoint(a), adjoint(b)
    residuals = {
        "comm": frobenius(a @ b - b @ a),
        "comm_astar": frobenius(astar @ b - b @ astar),
        "comm_bstar": frobenius(a @ bstar - bstar @ a),
        "comm_both": frobenius(astar @ bstar - bstar @ astar),
    }
    tol = pol.rel * max(1.0, frobenius(a) * frobenius(b)) + pol.abs
    flags = [r <= tol for r in residuals.values()]
    ok = len(set(flags)) == 1
    spread = 0.0 if ok else max(residuals.values()) - min(residuals.values())
    return ok, spread, residuals


def _concl_abs_commute(mats, pol):
    a, b = mats
    aa, ab = abs_value(a, pol), abs_value(b, pol)
    return _concl_equal(aa @ ab, ab @ aa, pol)


def _concl_abs_product(mats, pol):
    a, b = mats
    return _concl_equal(abs_value(a @ b, pol), abs_value(a, pol) @ abs_value(b, pol), pol)


def _concl_prodsa_cor(mats, pol):
    a, b = mats
    aa, ab = abs_value(a, pol), abs_value(b, pol)
    p = aa @ ab
    sa = is_self_adjoint(p, pol)
    ok = sa.holds and approx_eq(p, ab @ aa, pol)
    residual = max(sa.residual, rel_residual(p, ab @ aa))
    extras = {"self_adjoint_residual": sa.residual}
    if is_positive(a, pol) and is_positive(b, pol):
        pos = is_positive(a @ b, pol)
        ok = ok and pos.holds
        residual = max(residual, -pos.residual)
        extras["product_lambda_min"] = pos.residual
    return ok, residual, extras


def _concl_eight_products(mats, pol):
    a, b = mats
    astar, bstar = adjoint(a), adjoint(b)
    products = (a @ b, astar @ b, a @ bstar, astar @ bstar, bstar @ astar, bstar @ a, b @ astar, b @ a)
    values = [abs_value(p, pol) for p in products]
    worst = 0.0
    ok = True
    for v in values[1:]:
        ok = ok and approx_eq(values[0], v, pol)
        worst = max(worst, rel_residual(values[0], v))
    return ok, worst, {}


def _concl_inv_product(mats, pol):
    a, b = mats
    binv = inverse(b)
    return _concl_equal(abs_value(a @ binv, pol), abs_value(a, pol) @ abs_value(binv, pol), pol)


def _concl_inverse_abs(mats, pol):
    (a,) = mats
    kappa = condition_estimate(a)
    prod = abs_value(inverse(a), pol) @ abs_value(a, pol)
    r = frobenius(prod - np.eye(a.shape[0]))
    tol = pol.rel * max(1.0, kappa) + pol.abs
    return r <= tol, r / max(1.0, kappa), {"identity_residual": r, "condition": kappa}


def _concl_nfold_product(mats, pol):
    prod = mats[0]
    for m in mats[1:]:
        prod = prod @ m
    rhs = abs_value(mats[0], pol)
    for m in mats[1:]:
        rhs = rhs @ abs_value(m, pol)
    return _concl_equal(abs_value(prod, pol), rhs, pol)


_POWZ_EXPONENTS = (-3, -2, -1, 0, 1, 2, 3)


def _concl_integer_powers(mats, pol):
    (a,) = mats
    n = a.shape[0]
    eye = np.eye(n, dtype=complex)
    abs_a = abs_value(a, pol)
    a_inv = inverse(a)
    abs_inv = inverse(abs_a)
    ok = True
    worst = 0.0
    for exponent in _POWZ_EXPONENTS:
        base = a if exponent >= 0 else a_inv
        abs_base = abs_a if exponent >= 0 else abs_inv
        power, abs_power = eye, eye
        for _ in range(abs(exponent)):
            power = power @ base
            abs_power = abs_power @ abs_base
        ok = ok and approx_eq(abs_value(power, pol), abs_power, pol)
        worst = max(worst, rel_residual(abs_value(power, pol), abs_power))
    return ok, worst, {}


def _concl_square_nonpositive(mats, pol):
    (a,) = mats
    sq = a @ a
    return _concl_loewner(sq, _zero_like(sq), pol)


def _concl_re_below_abs(mats, pol):
    (t,) = mats
    return _concl_loewner((t + adjoint(t)) / 2, abs_value(t, pol), pol)


def _concl_adjoint_product_hyponormal(mats, pol):
    a, b = mats
    res = is_hyponormal(adjoint(a) @ b, pol)
    return res.holds, -res.residual, {"witness_lambda_min": res.residual}


def _concl_triangle_sum(mats, pol):
    a, b = mats
    return _concl_loewner(abs_value(a + b, pol), abs_value(a, pol) + abs_value(b, pol), pol)


def _concl_triangle_diff(mats, pol):
    a, b = mats
    return _concl_loewner(abs_value(a - b, pol), abs_value(a, pol) + abs_value(b, pol), pol)


def _concl_re_im_split(mats, pol):
    (t,) = mats
    re = (t + adjoint(t)) / 2
    im = (t - adjoint(t)) / 2j
    return _concl_loewner(abs_value(t, pol), abs_value(re, pol) + abs_value(im, pol), pol)


def _concl_triangle_n(mats, pol):
    total = sum(mats[1:], start=mats[0])
    bound = abs_value(mats[0], pol)
    for m in mats[1:]:
        bound = bound + abs_value(m, pol)
    return _concl_loewner(abs_value(total, pol), bound, pol)


def _concl_sum_normal(mats, pol):
    total = sum(mats[1:], start=mats[0])
    res = is_normal(total, pol)
    return res.holds, res.residual, {"normality_residual": res.residual}


def _concl_normdiff_plus(mats, pol):
    a, b = mats
    return _concl_opnorm_leq(abs_value(a, pol) - abs_value(b, pol), a + b, pol, (a, b))


def _concl_normdiff_minus(mats, pol):
    a, b = mats
    return _concl_opnorm_leq(abs_value(a, pol) - abs_value(b, pol), a - b, pol, (a, b))


def _concl_sandwich_norm(mats, pol):
    t, s = mats
    return _concl_opnorm_leq(t, s, pol, (t, s))


def _concl_absdiff_minus(mats, pol):
    a, b = mats
    gap = abs_value(a, pol) - abs_value(b, pol)
    return _concl_loewner(abs_value(gap, pol), abs_value(a - b, pol), pol)


def _concl_absdiff_plus(mats, pol):
    a, b = mats
    gap = abs_value(a, pol) - abs_value(b, pol)
    return _concl_loewner(abs_value(gap, pol), abs_value(a + b, pol), pol)


# ---------------------------------------------------------------------------
# catalog


def _family(kind: str, **kwargs) -> EnsembleSpec:
    return EnsembleSpec(kind=kind, **kwargs)


_CATALOG: dict[str, Claim] | None = None


def _build_catalog() -> dict[str, Claim]:
    claims = [
        Claim(
            "L-SQRT-PROD",
            "commuting A, B >= 0 imply AB >= 0",
            2,
            _family("commuting_positive_pair"),
            _hyp_commuting_positive,
            _concl_product_positive,
        ),
        Claim(
            "L-SQRT-FACTOR",
            "commuting A, B >= 0 imply sqrt(AB) = sqrt(A) sqrt(B)",
            2,
            _family("commuting_positive_pair"),
            _hyp_commuting_positive,
            _concl_sqrt_factor,
        ),
        Claim(
            "L-SQRT-SUM",
            "commuting A, B >= 0 imply sqrt(A+B) <= sqrt(A) + sqrt(B)",
            2,
            _family("commuting_positive_pair"),
            _hyp_commuting_positive,
            _concl_sqrt_sum,
        ),
        Claim(
            "T-LH",
            "A >= B >= 0 implies A^t >= B^t for t in {0.25, 0.5, 0.75}",
            2,
            _family("ordered_psd_pair"),
            _hyp_ordered_psd,
            _concl_loewner_heinz,
        ),
        Claim(
            "R-SQMONO",
            "A >= B >= 0 with AB = BA implies A^2 >= B^2",
            2,
            _family("ordered_psd_pair", commuting=True),
            _hyp_ordered_psd_commuting,
            _concl_square_mono,
        ),
        Claim(
            "L-FUG",
            "for normal A the four conditions AB=BA, A*B=BA*, AB*=B*A, A*B*=B*A* agree",
            2,
            _family("fuglede_pair"),
            _hyp_normal_a,
            _concl_fuglede,
        ),
        Claim(
            "C-ABSCOMM",
            "AB = BA with A normal implies |A||B| = |B||A|",
            2,
            _family("commuting_normal_family", k=2),
            _hyp_commuting_normal_a,
            _concl_abs_commute,
        ),
        Claim(
            "C-PRODSA",
            "self-adjoint A, B with AB normal satisfy |AB| = |A||B|",
            2,
            _family("sa_pair_normal_product", dim=2),
            _hyp_sa_pair_normal_product,
            _concl_abs_product,
        ),
        Claim(
            "C-PRODSA-COR",
            "self-adjoint A, B with AB normal: |A||B| is self-adjoint, and AB >= 0 when A, B >= 0",
            2,
            _family("sa_pair_normal_product", dim=2),
            _hyp_sa_pair_normal_product,
            _concl_prodsa_cor,
        ),
        Claim(
            "C-PRODNORM",
            "AB = BA with A normal implies |AB| = |A||B|",
            2,
            _family("commuting_normal_family", k=2),
            _hyp_commuting_normal_a,
            _concl_abs_product,
        ),
        Claim(
            "C-EIGHT",
            "commuting normal A, B: the eight products AB, A*B, ..., BA share one absolute value",
            2,
            _family("commuting_normal_family", k=2),
            _hyp_commuting_both_normal,
            _concl_eight_products,
        ),
        Claim(
            "C-INV1",
            "AB = BA, A normal, B invertible imply |A B^-1| = |A| |B^-1|",
            2,
            _family("commuting_normal_family", k=2, invertible=True),
            _hyp_commuting_normal_a_invertible_b,
            _concl_inv_product,
        ),
        Claim(
            "C-INV2",
            "normal invertible A satisfies |A^-1| = |A|^-1",
            1,
            _family("normal", invertible=True),
            _hyp_normal_invertible,
            _concl_inverse_abs,
        ),
        Claim(
            "C-NFOLD",
            "pairwise commuting family with all but one member normal: |prod A_i| = prod |A_i|",
            -1,
            _family("commuting_family_one_nonnormal"),
            _hyp_family_one_nonnormal,
            _concl_nfold_product,
        ),
        Claim(
            "C-POWZ",
            "normal invertible A satisfies |A^n| = |A|^n for n in -3..3",
            1,
            _family("normal", invertible=True),
            _hyp_normal_invertible,
            _concl_integer_powers,
        ),
        Claim(
            "L-ANTI",
            "A* = -A implies A^2 <= 0",
            1,
            _family("anti_symmetric"),
            _hyp_anti_symmetric,
            _concl_square_nonpositive,
        ),
        Claim(
            "L-REPART",
            "hyponormal T satisfies (T + T*)/2 <= |T|",
            1,
            _family("normal"),
            _hyp_hyponormal,
            _concl_re_below_abs,
            note=_COLLAPSE_NOTE,
        ),
        Claim(
            "L-HYPROD",
            "A normal, B hyponormal, AB = BA imply A*B hyponormal",
            2,
            _family("commuting_normal_family", k=2),
            _hyp_commuting_normal_a_hypo_b,
            _concl_adjoint_product_hyponormal,
            note=_COLLAPSE_NOTE,
        ),
        Claim(
            "C-TRI",
            "AB = BA, A normal, B hyponormal imply |A + B| <= |A| + |B|",
            2,
            _family("commuting_normal_family", k=2),
            _hyp_commuting_normal_a_hypo_b,
            _concl_triangle_sum,
            note=_COLLAPSE_NOTE,
        ),
        Claim(
            "C-REIM",
            "normal T satisfies |T| <= |Re T| + |Im T|",
            1,
            _family("normal"),
            _hyp_normal_a,
            _concl_re_im_split,
        ),
        Claim(
            "C-TRIMINUS",
            "AB = BA, A normal, B hyponormal imply |A - B| <= |A| + |B|",
            2,
            _family("commuting_normal_family", k=2),
            _hyp_commuting_normal_a_hypo_b,
            _concl_triangle_diff,
            note=_COLLAPSE_NOTE,
        ),
        Claim(
            "C-TRIN",
            "pairwise commuting family, normal except one hyponormal member: "
            "|sum A_i| <= sum |A_i|",
            3,
            _family("commuting_normal_family", k=3),
            _hyp_family_hypo,
            _concl_triangle_n,
            note=_COLLAPSE_NOTE,
        ),
        Claim(
            "C-SUMNORM",
            "a pairwise commuting normal family has a normal sum",
            3,
            _family("commuting_normal_family", k=3),
            _hyp_family_normal,
            _concl_sum_normal,
        ),
        Claim(
            "C-NORMDIFF+",
            "AB = BA with A, B normal implies || |A| - |B| || <= ||A + B||",
            2,
            _family("commuting_normal_family", k=2),
            _hyp_commuting_both_normal,
            _concl_normdiff_plus,
        ),
        Claim(
            "C-NORMDIFF-",
            "AB = BA with A, B normal implies || |A| - |B| || <= ||A - B||",
            2,
            _family("commuting_normal_family", k=2),
            _hyp_commuting_both_normal,
            _concl_normdiff_minus,
        ),
        Claim(
            "L-SANDWICH",
            "self-adjoint T, S with -S <= T <= S satisfy ||T|| <= ||S||",
            2,
            _family("sandwich_pair"),
            _hyp_sandwich,
            _concl_sandwich_norm,
        ),
        Claim(
            "C-ABSDIFF-",
            "AB = BA, A normal, B hyponormal imply ||A| - |B|| <= |A - B|",
            2,
            _family("commuting_normal_family", k=2),
            _hyp_commuting_normal_a_hypo_b,
            _concl_absdiff_minus,
            note=_COLLAPSE_NOTE,
        ),
        Claim(
            "C-ABSDIFF+",
            "AB = BA, A normal, B hyponormal imply ||A| - |B|| <= |A + B|",
            2,
            _family("commuting_normal_family", k=2),
            _hyp_commuting_normal_a_hypo_b,
            _concl_absdiff_plus,
            note=_COLLAPSE_NOTE,
        ),
        Claim(
            "C-NEGCROSS",
            "AB = BA, A normal, A*B + B*A <= 0 imply |A + B| <= |A| + |B|",
            2,
            _family("negative_cross_pair"),
            _hyp_negcross,
            _concl_triangle_sum,
        ),
    ]
    claims.extend(_registry_claims())
    table = {}
    for claim in claims:
        if claim.id in table:
            raise RuntimeError(f"duplicate claim id {claim.id}")
        table[claim.id] = claim
    return table


def catalog() -> dict[str, Claim]:
    global _CATALOG
    if _CATALOG is None:
        _CATALOG = _build_catalog()
    return _CATALOG


# ---------------------------------------------------------------------------
# counterexample registry


@dataclass(frozen=True)
class RegistryInstance:
    """A fixed counterexample with its known verdict structure."""

    ce_id: str
    target_claim: str
    matrices: tuple
    expected_flags: dict
    expected_values: dict
    values: Callable
    caveat: str = ""


def _m(rows) -> np.ndarray:
    return as_matrix(rows)


_SQRT5 = float(np.sqrt(5.0))
_SQRT2 = float(np.sqrt(2.0))


def _registry_instances() -> tuple[RegistryInstance, ...]:
    ce0_a = _m([[1, 1], [0, 1]])
    ce0_b = _m([[0, 1], [0, 0]])
    ce1_a = _m([[2, 0], [0, -1]])
    ce1_b = _m([[0, 1], [1, 0]])
    ce2_a = _m([[0, 1], [2, 0]])
    ce2_b = _m([[0, 2], [1, 0]])
    ce3_a = _m([[0, 2], [1, 0]])
    ce4_a = _m([[-1, 1], [1, -1]])
    ce4_b = _m([[2, 0], [0, 0]])

    def pair_values(mats, pol):
        a, b = mats
        return {
            "abs_a": abs_value(a, pol),
            "abs_b": abs_value(b, pol),
            "abs_product": abs_value(a @ b, pol),
        }

    def square_values(mats, pol):
        (a,) = mats
        aa = abs_value(a, pol)
        return {"abs_square": abs_value(a @ a, pol), "abs_a_squared": aa @ aa}

    def sum_values(mats, pol):
        a, b = mats
        return {
            "abs_a": abs_value(a, pol),
            "abs_b": abs_value(b, pol),
            "abs_sum": abs_value(a + b, pol),
        }

    return (
        RegistryInstance(
            "CE-0",
            "C-ABSCOMM",
            (ce0_a, ce0_b),
            {"commutes": True, "normal_a": False},
            {
                "abs_a": _m([[2, 1], [1, 3]]) / _SQRT5,
                "abs_b": _m([[0, 0], [0, 1]]),
            },
            pair_values,
        ),
        RegistryInstance(
            "CE-1",
            "C-PRODSA",
            (ce1_a, ce1_b),
            {"self_adjoint_a": True, "self_adjoint_b": True, "normal_product": False},
            {
                "abs_a": _m([[2, 0], [0, 1]]),
                "abs_b": _m([[1, 0], [0, 1]]),
                "abs_product": _m([[1, 0], [0, 2]]),
            },
            pair_values,
        ),
        RegistryInstance(
            "CE-2",
            "C-PRODNORM",
            (ce2_a, ce2_b),
            {"commutes": False, "normal_a": False},
            {
                "abs_a": _m([[2, 0], [0, 1]]),
                "abs_b": _m([[1, 0], [0, 2]]),
                "abs_product": _m([[1, 0], [0, 4]]),
            },
            pair_values,
            caveat=(
                "|AB| equals diag(1, 4): the product AB = diag(1, 4) is already "
                "positive, so it is its own absolute value; the diag(1, 2) "
                "sometimes quoted for this example is |B|, not |AB|"
            ),
        ),
        RegistryInstance(
            "CE-3",
            "C-POWZ",
            (ce3_a,),
            {"normal_a": False, "invertible_a": True},
            {
                "abs_square": _m([[2, 0], [0, 2]]),
                "abs_a_squared": _m([[1, 0], [0, 4]]),
            },
            square_values,
            caveat=(
                "computed values: A^2 = 2I gives |A^2| = 2I, and A*A = diag(1, 4) "
                "gives |A|^2 = diag(1, 4); the sqrt(2) I and diag(2, 1) sometimes "
                "quoted for this example contradict direct computation, though the "
                "inequality |A^2| != |A|^2 survives either way"
            ),
        ),
        RegistryInstance(
            "CE-4",
            "C-TRI",
            (ce4_a, ce4_b),
            {"commutes": False, "normal_a": True, "hyponormal_b": True},
            {
                "abs_a": _m([[1, -1], [-1, 1]]),
                "abs_b": _m([[2, 0], [0, 0]]),
                "abs_sum": _SQRT2 * _m([[1, 0], [0, 1]]),
            },
            sum_values,
        ),
    )


_REGISTRY: tuple[RegistryInstance, ...] | None = None


def registry() -> tuple[RegistryInstance, ...]:
    global _REGISTRY
    if _REGISTRY is None:
        _REGISTRY = _registry_instances()
    return _REGISTRY


_CE_DESCRIPTIONS = {
    "CE-0": "commuting non-normal pair with |A||B| != |B||A|",
    "CE-1": "self-adjoint pair with non-normal product: |AB| != |A||B|",
    "CE-2": "non-normal pair with self-adjoint product: |AB| != |A||B|",
    "CE-3": "non-normal A with |A^2| != |A|^2",
    "CE-4": "non-commuting self-adjoint pair violating |A+B| <= |A|+|B|",
}


def _registry_claims() -> list[Claim]:
    out = []
    for inst in registry():
        target_id = inst.target_claim
        out.append(
            Claim(
                id=inst.ce_id,
                description=_CE_DESCRIPTIONS[inst.ce_id],
                arity=len(inst.matrices),
                ensemble=None,
                hypothesis=_TARGET_HYPOTHESES[target_id],
                conclusion=_TARGET_CONCLUSIONS[target_id],
                expect=REGISTRY_VIOLATION,
            )
        )
    return out


# Registry claims reuse the hypothesis/conclusion of the statement they
# witness against; resolved by name to keep catalog construction one-pass.
_TARGET_HYPOTHESES = {
    "C-ABSCOMM": _hyp_commuting_normal_a,
    "C-PRODSA": _hyp_sa_pair_normal_product,
    "C-PRODNORM": _hyp_commuting_normal_a,
    "C-POWZ": _hyp_normal_invertible,
    "C-TRI": _hyp_commuting_normal_a_hypo_b,
}
_TARGET_CONCLUSIONS = {
    "C-ABSCOMM": _concl_abs_commute,
    "C-PRODSA": _concl_abs_product,
    "C-PRODNORM": _concl_abs_product,
    "C-POWZ": _concl_integer_powers,
    "C-TRI": _concl_triangle_sum,
}


@dataclass(frozen=True)
class RegistryResult:
    ce_id: str
    ok: bool
    mismatches: tuple
    result: ClaimResult
    value_residuals: dict
    caveat: str = ""


def check_registry_instance(
    inst: RegistryInstance, pol: TolerancePolicy = DEFAULT_POLICY
) -> RegistryResult:
    """Re-derive one counterexample and compare against its known structure.

    The expected structure is: the recorded hypothesis flags, a failing
    conclusion, and the recorded matrix values (within 1e-10)."""
    result = check_claim(ClaimInstance(inst.ce_id, inst.matrices), pol)
    mismatches = []
    for name, expected in inst.expected_flags.items():
        got = result.hypothesis_flags.get(name)
        if got is not expected:
            mismatches.append(f"hypothesis flag {name}: expected {expected}, got {got}")
    if result.conclusion_ok is not False:
        mismatches.append(f"conclusion expected to fail, got {result.conclusion_ok}")
    value_residuals = {}
    actual = inst.values(inst.matrices, pol)
    for name, expected in inst.expected_values.items():
        r = frobenius(actual[name] - expected)
        value_residuals[name] = r
        if r > 1e-10 * max(1.0, frobenius(expected)):
            mismatches.append(f"value {name}: residual {r:.3e} beyond 1e-10")
    return RegistryResult(
        inst.ce_id, not mismatches, tuple(mismatches), result, value_residuals, inst.caveat
    )


# ---------------------------------------------------------------------------
# claim evaluation and suites


def check_claim(instance: ClaimInstance, pol: TolerancePolicy = DEFAULT_POLICY) -> ClaimResult:
    """Evaluate hypothesis then conclusion on one bound tuple of matrices.

    The conclusion is evaluated even under a failed hypothesis (the registry
    counterexamples need both flags); a conclusion that cannot be computed is
    only an error when the hypothesis held.
    """
    claim = catalog()[instance.claim_id]
    hyp_ok, flags, residuals = claim.hypothesis(instance.matrices, pol)
    residuals = dict(residuals)
    try:
        concl_ok, concl_residual, extras = claim.conclusion(instance.matrices, pol)
    except Exception:
        if hyp_ok:
            raise
        concl_ok, concl_residual, extras = None, float("nan"), {}
    residuals["conclusion"] = float(concl_residual)
    for name, value in extras.items():
        residuals[name] = float(value)
    if hyp_ok and concl_ok:
        verdict = PASS
    elif hyp_ok:
        verdict = VIOLATION
    else:
        verdict = HYPOTHESIS_FAIL
    return ClaimResult(
        claim_id=instance.claim_id,
        hypothesis_ok=hyp_ok,
        conclusion_ok=concl_ok,
        hypothesis_flags=flags,
        residuals=residuals,
        verdict=verdict,
    )


@dataclass
class ClaimStats:
    claim_id: str
    trials: int = 0
    passes: int = 0
    violations: list = field(default_factory=list)
    hypothesis_failures: int = 0
    errors: list = field(default_factory=list)
    worst_residual: float = float("-inf")
    worst_residual_seed: dict | None = None
    note: str = ""

    def to_dict(self) -> dict:
        return {
            "id": self.claim_id,
            "trials": self.trials,
            "passes": self.passes,
            "violations": self.violations,
            "hypothesis_failures": self.hypothesis_failures,
            "errors": self.errors,
            "worst_residual": self.worst_residual if self.worst_residual_seed else None,
            "worst_residual_seed": self.worst_residual_seed,
            "note": self.note,
        }


@dataclass
class SuiteReport:
    config: dict
    claims: list
    wall_time: float
    verdict: str

    def to_dict(self) -> dict:
        return {
            "config": self.config,
            "claims": [c.to_dict() for c in self.claims],
            "wall_time_seconds": self.wall_time,
            "verdict": self.verdict,
        }


def _seed_record(seed: Seed, dim: int) -> dict:
    return {
        "seed": seed.replay_master,
        "claim_tag": seed.claim_tag,
        "dim": dim,
        "trial": seed.trial,
    }


def _run_block(claim_id: str, dim: int, start: int, count: int, master: int, pol: TolerancePolicy):
    """Run a contiguous block of trials for one (claim, dim); returns a plain
    dict so process pools can ship it back cheaply."""
    claim = catalog()[claim_id]
    stats = {
        "trials": 0,
        "passes": 0,
        "violations": [],
        "hypothesis_failures": 0,
        "errors": [],
        "worst": None,  # (residual, dim, trial, seed_record)
    }
    for trial in range(start, start + count):
        seed = Seed(master, f"{claim_id}:{dim}", trial)
        stats["trials"] += 1
        try:
            mats = sample(claim.ensemble, dim, seed)
            result = check_claim(ClaimInstance(claim_id, mats, seed), pol)
        except Exception as exc:
            stats["errors"].append({**_seed_record(seed, dim), "message": str(exc)})
            continue
        if result.verdict == PASS:
            stats["passes"] += 1
        elif result.verdict == VIOLATION:
            stats["violations"].append({**_seed_record(seed, dim), "residuals": result.residuals})
        else:
            stats["hypothesis_failures"] += 1
        residual = result.residuals.get("conclusion")
        if residual is not None and np.isfinite(residual):
            key = (residual, dim, trial)
            if stats["worst"] is None or key > stats["worst"][:3]:
                stats["worst"] = (residual, dim, trial, _seed_record(seed, dim))
    return claim_id, stats


def _merge_block(agg: ClaimStats, block: dict):
    agg.trials += block["trials"]
    agg.passes += block["passes"]
    agg.violations.extend(block["violations"])
    agg.hypothesis_failures += block["hypothesis_failures"]
    agg.errors.extend(block["errors"])
    if block["worst"] is not None:
        current = (
            None
            if agg.worst_residual_seed is None
            else (agg.worst_residual, agg.worst_residual_seed["dim"], agg.worst_residual_seed["trial"])
        )
        if current is None or block["worst"][:3] > current:
            agg.worst_residual = block["worst"][0]
            agg.worst_residual_seed = block["worst"][3]


def run_suite(
    claim_ids,
    dims,
    trials: int,
    master_seed: int,
    pol: TolerancePolicy = DEFAULT_POLICY,
    jobs: int = 1,
) -> SuiteReport:
    """Check claims over seeded trials and aggregate a replayable report.

    Claims that always hold run ``trials`` times per requested dimension
    (dimension-pinned families run at their own size); registry
    counterexamples are re-derived once each.  The report is identical for
    serial and parallel execution: every trial's matrices depend only on its
    own seed and aggregation is order-insensitive.
    """
    if trials < 1:
        raise ValueError("trials must be >= 1")
    if not dims:
        raise ValueError("dims must be nonempty")
    table = catalog()
    unknown = [c for c in claim_ids if c not in table]
    if unknown:
        raise KeyError(f"unknown claim ids: {unknown}")
    started = time.perf_counter()
    stats = {cid: ClaimStats(claim_id=cid, note=table[cid].note) for cid in claim_ids}

    tasks = []
    block = 250
    for cid in claim_ids:
        claim = table[cid]
        if claim.expect == REGISTRY_VIOLATION:
            continue
        claim_dims = [claim.ensemble.dim] if claim.ensemble.dim is not None else list(dims)
        for dim in claim_dims:
            for start in range(0, trials, block):
                tasks.append((cid, dim, start, min(block, trials - start), master_seed, pol))

    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_run_block_star, tasks, chunksize=1))
    else:
        results = [_run_block(*t) for t in tasks]
    for cid, blk in results:
        _merge_block(stats[cid], blk)

    by_ce = {inst.ce_id: inst for inst in registry()}
    for cid in claim_ids:
        if table[cid].expect != REGISTRY_VIOLATION:
            continue
        reg = check_registry_instance(by_ce[cid], pol)
        st = stats[cid]
        st.trials = 1
        st.note = reg.caveat
        residual = reg.result.residuals.get("conclusion", float("nan"))
        if np.isfinite(residual):
            st.worst_residual = residual
            st.worst_residual_seed = {"seed": "REGISTRY", "claim_tag": cid, "dim": None, "trial": 0}
        if reg.ok:
            st.passes = 1
        else:
            st.violations.append(
                {
                    "seed": "REGISTRY",
                    "claim_tag": cid,
                    "dim": None,
                    "trial": 0,
                    "residuals": reg.result.residuals,
                    "mismatches": list(reg.mismatches),
                }
            )

    for st in stats.values():
        st.violations.sort(key=lambda v: (v["claim_tag"], v["dim"] if v["dim"] else 0, v["trial"]))
        st.errors.sort(key=lambda v: (v["claim_tag"], v["dim"] if v["dim"] else 0, v["trial"]))

    failed = any(st.violations or st.errors for st in stats.values())
    config = {
        "claims": list(claim_ids),
        "dims": list(dims),
        "trials": trials,
        "master_seed": master_seed,
        "tol_rel": pol.rel,
        "tol_abs": pol.abs,
        "jobs": jobs,
    }
    return SuiteReport(
        config=config,
        claims=[stats[cid] for cid in claim_ids],
        wall_time=time.perf_counter() - started,
        verdict="fail" if failed else "pass",
    )


def _run_block_star(args):
    return _run_block(*args)


@dataclass(frozen=True)
class ProbeStats:
    claim_id: str
    evaluated: int
    conclusion_failures: int
    errors: int
    first_failure_seed: int | None


def probe_conclusions(
    claim_ids,
    dim: int,
    count: int,
    master_seed: int,
    pol: TolerancePolicy = DEFAULT_POLICY,
) -> list[ProbeStats]:
    """Run conclusions alone against unconstrained general matrices.

    This is the non-vacuity check: a conclusion that can never fail on
    arbitrary input is not testing anything.  Conclusions that cannot even be
    evaluated off-hypothesis (e.g. square roots of indefinite matrices) are
    counted as errors, not failures.
    """
    table = catalog()
    out = []
    for cid in claim_ids:
        claim = table[cid]
        arity = claim.arity if claim.arity > 0 else 3
        failures = errors = evaluated = 0
        first = None
        for trial in range(count):
            seed = Seed(master_seed, f"probe:{cid}:{dim}", trial)
            rng = seed.generator()
            mats = tuple(gen_general(dim, rng) for _ in range(arity))
            try:
                ok, _, _ = claim.conclusion(mats, pol)
            except Exception:
                errors += 1
                continue
            evaluated += 1
            if not ok:
                failures += 1
                if first is None:
                    first = seed.replay_master
        out.append(ProbeStats(cid, evaluated, failures, errors, first))
    return out
