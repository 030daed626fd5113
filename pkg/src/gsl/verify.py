"""Verification suites: each statement about fuzzy/crisp ideal transfer is run
as a falsifiable check over exhaustively enumerated objects.

Every suite returns a VerificationReport.  Biconditionals are checked as two
independent implications so a failure localizes; clause-level preconditions
(unity presence) are gated as precondition-unmet rather than guessed around.
All enumeration happens at grade-chain scale, which is sound for these
statements because min/max over finite index sets never leaves the chain;
each report says so in its notes.
"""

from __future__ import annotations

import time
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Optional

from . import core
from .config import RunConfig
from .fuzzy import (
    CrispSubset,
    FuzzySubset,
    GradeChain,
    carrier_of,
    characteristic,
    enumerate_crisp_ideals,
    enumerate_fuzzy_ideals,
    fuzzy_intersection,
    fuzzy_sum,
    is_crisp_ideal_gamma,
    is_crisp_ideal_semiring,
    is_fuzzy_ideal_gamma,
    is_fuzzy_ideal_semiring,
)
from .matrix import check_operator_matrix_iso, verify_theorem_3_19
from .operators import (
    OperatorSemiring,
    build_operator_semiring,
    find_unity,
    plus_set,
    plusprime_set,
)
from .report import FAIL, PASS, UNMET, VerificationReport, chain_scope_note, combine_status
from .transfer import lift_plusprime, lift_starprime, restrict_plus, restrict_star

__all__ = [
    "verify_prop_3_4",
    "verify_theorem_3_8",
    "verify_lemmas_3_11_3_12",
    "verify_theorem_3_15",
    "verify_theorem_3_17",
    "verify_theorem_3_18",
    "verify_semifield_transfer",
    "run_all",
    "SUITE_CHOICES",
]

SUITE_CHOICES = (
    "prop3.4",
    "th3.8",
    "lemmas",
    "th3.15",
    "th3.17",
    "th3.18",
    "transfer-semifield",
    "matrix",
    "all",
)


def _grades(mu: FuzzySubset) -> dict:
    return mu.to_mapping()


def _ids(subset: CrispSubset) -> list[str]:
    return list(subset.sorted_ids())


# ---------------------------------------------------------------------------
# transfer-map clause engine (shared by the primal L side and the dual R side)


def _clause_rows(
    g: core.GammaSemiring,
    op: OperatorSemiring,
    ideals_s: list[FuzzySubset],
    ideals_op: list[FuzzySubset],
    lift: Callable[[FuzzySubset], FuzzySubset],
    restrict: Callable[[FuzzySubset], FuzzySubset],
    lift_roundtrip_ok: bool,
    restrict_roundtrip_ok: bool,
    tag: str,
) -> list[tuple[str, str, Optional[dict], int]]:
    """Evaluate the nine transfer clauses; returns (clause, status, witness, checked).

    Round-trip clauses (and the facts whose arguments rest on them: injectivity
    and non-constancy preservation) are gated on the unity whose absence would
    invalidate them: the lift round-trip needs the opposite-side unity, the
    restrict round-trip needs the own-side unity.
    """
    rows: list[tuple[str, str, Optional[dict], int]] = []
    sr = op.semiring
    lifted = [lift(s) for s in ideals_s]
    restricted = [restrict(m) for m in ideals_op]
    npairs = len(ideals_s) ** 2

    def emit(cid, status, witness=None, checked=0):
        rows.append((cid + tag, status, witness, checked))

    def gated(cid, ok):
        if not ok:
            emit(cid, UNMET)
            return True
        return False

    # (i) ideal preservation under the lift
    witness = None
    for s, t in zip(ideals_s, lifted):
        if not is_fuzzy_ideal_semiring(sr, t, "two"):
            witness = {"clause": "i" + tag, "sigma": _grades(s), "lifted": _grades(t)}
            break
    emit("i", FAIL if witness else PASS, witness, len(ideals_s))

    # (i) non-constancy preservation
    if not gated("i-nonconstant", lift_roundtrip_ok):
        witness = None
        for s, t in zip(ideals_s, lifted):
            if not s.is_constant() and t.is_constant():
                witness = {"clause": "i-nonconstant" + tag, "sigma": _grades(s)}
                break
        emit("i-nonconstant", FAIL if witness else PASS, witness, len(ideals_s))

    # (ii) restrict(lift(sigma)) == sigma
    if not gated("ii", lift_roundtrip_ok):
        witness = None
        for s, t in zip(ideals_s, lifted):
            back = restrict(t)
            if back.grades != s.grades:
                witness = {
                    "clause": "ii" + tag,
                    "sigma": _grades(s),
                    "roundtrip": _grades(back),
                }
                break
        emit("ii", FAIL if witness else PASS, witness, len(ideals_s))

    # (iii) injectivity of the lift
    if not gated("iii", lift_roundtrip_ok):
        distinct = len({t.grades for t in lifted})
        witness = None
        if distinct != len(lifted):
            seen: dict[tuple, int] = {}
            for k, t in enumerate(lifted):
                if t.grades in seen:
                    witness = {
                        "clause": "iii" + tag,
                        "sigma1": _grades(ideals_s[seen[t.grades]]),
                        "sigma2": _grades(ideals_s[k]),
                    }
                    break
                seen[t.grades] = k
        emit("iii", FAIL if witness else PASS, witness, len(ideals_s))

    # (iv) lift of a sum is the sum of lifts
    witness = None
    for a, la in zip(ideals_s, lifted):
        for b, lb in zip(ideals_s, lifted):
            if lift(fuzzy_sum(a, b)).grades != fuzzy_sum(la, lb).grades:
                witness = {
                    "clause": "iv" + tag,
                    "sigma1": _grades(a),
                    "sigma2": _grades(b),
                }
                break
        if witness:
            break
    emit("iv", FAIL if witness else PASS, witness, npairs)

    # (v) lift of an intersection is the intersection of lifts
    witness = None
    for a, la in zip(ideals_s, lifted):
        for b, lb in zip(ideals_s, lifted):
            if lift(fuzzy_intersection([a, b])).grades != fuzzy_intersection([la, lb]).grades:
                witness = {
                    "clause": "v" + tag,
                    "sigma1": _grades(a),
                    "sigma2": _grades(b),
                }
                break
        if witness:
            break
    emit("v", FAIL if witness else PASS, witness, npairs)

    # (vi) lift is inclusion-preserving
    witness = None
    for a, la in zip(ideals_s, lifted):
        for b, lb in zip(ideals_s, lifted):
            if (a <= b) and not (la <= lb):
                witness = {"clause": "vi" + tag, "sigma1": _grades(a), "sigma2": _grades(b)}
                break
        if witness:
            break
    emit("vi", FAIL if witness else PASS, witness, npairs)

    # (vii) ideal preservation under the restriction
    witness = None
    for m, rm in zip(ideals_op, restricted):
        if not is_fuzzy_ideal_gamma(g, rm, "two"):
            witness = {"clause": "vii" + tag, "mu": _grades(m), "restricted": _grades(rm)}
            break
    emit("vii", FAIL if witness else PASS, witness, len(ideals_op))

    # (vii) non-constancy preservation
    if not gated("vii-nonconstant", restrict_roundtrip_ok):
        witness = None
        for m, rm in zip(ideals_op, restricted):
            if not m.is_constant() and rm.is_constant():
                witness = {"clause": "vii-nonconstant" + tag, "mu": _grades(m)}
                break
        emit("vii-nonconstant", FAIL if witness else PASS, witness, len(ideals_op))

    # (viii) lift(restrict(mu)) == mu
    if not gated("viii", restrict_roundtrip_ok):
        witness = None
        for m, rm in zip(ideals_op, restricted):
            back = lift(rm)
            if back.grades != m.grades:
                witness = {
                    "clause": "viii" + tag,
                    "mu": _grades(m),
                    "roundtrip": _grades(back),
                }
                break
        emit("viii", FAIL if witness else PASS, witness, len(ideals_op))

    # (ix) restriction is inclusion-preserving
    witness = None
    for a, ra in zip(ideals_op, restricted):
        for b, rb in zip(ideals_op, restricted):
            if (a <= b) and not (ra <= rb):
                witness = {"clause": "ix" + tag, "mu1": _grades(a), "mu2": _grades(b)}
                break
        if witness:
            break
    emit("ix", FAIL if witness else PASS, witness, len(ideals_op) ** 2)

    return rows


def verify_prop_3_4(
    g: core.GammaSemiring,
    chain: Optional[GradeChain] = None,
    config: Optional[RunConfig] = None,
) -> VerificationReport:
    """Nine transfer-map clauses between the fuzzy ideals of the base and of
    its left operator semiring, plus the right-operator duals."""
    config = config or RunConfig()
    chain = chain or config.chain
    t0 = time.perf_counter()

    left = build_operator_semiring(
        g, "left", cap=config.closure_cap, time_budget_s=config.time_budget_s
    )
    right = build_operator_semiring(
        g, "right", cap=config.closure_cap, time_budget_s=config.time_budget_s
    )
    left_unity = find_unity(g, left) is not None
    right_unity = find_unity(g, right) is not None

    ideals_s = enumerate_fuzzy_ideals(g, chain, "two", cap=config.enum_cap)
    ideals_l = enumerate_fuzzy_ideals(left.semiring, chain, "two", cap=config.enum_cap)
    ideals_r = enumerate_fuzzy_ideals(right.semiring, chain, "two", cap=config.enum_cap)

    rows = _clause_rows(
        g, left, ideals_s, ideals_l,
        lift=lambda s: lift_plusprime(left, s),
        restrict=lambda m: restrict_plus(left, m),
        lift_roundtrip_ok=right_unity,
        restrict_roundtrip_ok=left_unity,
        tag="",
    )
    rows += _clause_rows(
        g, right, ideals_s, ideals_r,
        lift=lambda s: lift_starprime(right, s),
        restrict=lambda m: restrict_star(right, m),
        lift_roundtrip_ok=left_unity,
        restrict_roundtrip_ok=right_unity,
        tag="*",
    )

    status = combine_status(st for _, st, _, _ in rows)
    counterexample = next((w for _, st, w, _ in rows if st == FAIL), None)
    notes = [chain_scope_note(chain)]
    notes.append(f"left unity: {'present' if left_unity else 'absent'}")
    notes.append(f"right unity: {'present' if right_unity else 'absent'}")
    notes += [f"clause {cid}: {st}" for cid, st, _, _ in rows]
    counts = {
        "fuzzy_ideals_S": len(ideals_s),
        "fuzzy_ideals_L": len(ideals_l),
        "fuzzy_ideals_R": len(ideals_r),
        "checks": sum(c for _, _, _, c in rows),
    }
    return VerificationReport(
        "prop3.4", g.name, chain, status, counterexample, counts,
        (time.perf_counter() - t0) * 1000.0, tuple(notes),
    )


def verify_theorem_3_8(
    g: core.GammaSemiring,
    chain: Optional[GradeChain] = None,
    kind: str = "two",
    config: Optional[RunConfig] = None,
) -> VerificationReport:
    """The lift is an inclusion-preserving lattice isomorphism between the
    fuzzy ideals (or fuzzy right ideals) of the base and of its left operator
    semiring, at chain scale."""
    if kind not in ("two", "right"):
        raise ValueError("kind must be 'two' or 'right'")
    config = config or RunConfig()
    chain = chain or config.chain
    t0 = time.perf_counter()
    suite = f"th3.8[{kind}]"
    notes = [chain_scope_note(chain)]

    left = build_operator_semiring(
        g, "left", cap=config.closure_cap, time_budget_s=config.time_budget_s
    )
    right = build_operator_semiring(
        g, "right", cap=config.closure_cap, time_budget_s=config.time_budget_s
    )
    if find_unity(g, left) is None or find_unity(g, right) is None:
        return VerificationReport(
            suite, g.name, chain, UNMET, None, {},
            (time.perf_counter() - t0) * 1000.0,
            tuple(notes + ["requires both unities; at least one is absent"]),
        )

    A = enumerate_fuzzy_ideals(g, chain, kind, cap=config.enum_cap)
    B = enumerate_fuzzy_ideals(left.semiring, chain, kind, cap=config.enum_cap)
    lifted = [lift_plusprime(left, s) for s in A]
    counts = {"fuzzy_ideals_S": len(A), "fuzzy_ideals_L": len(B)}
    status = PASS
    counterexample = None

    b_set = {m.grades for m in B}
    for s, t in zip(A, lifted):
        if t.grades not in b_set:
            status, counterexample = FAIL, {
                "check": "image-is-ideal",
                "sigma": _grades(s),
                "lifted": _grades(t),
            }
            break

    if status == PASS and len({t.grades for t in lifted}) != len(A):
        status, counterexample = FAIL, {"check": "injective"}
    if status == PASS and {t.grades for t in lifted} != b_set:
        missing = [m.to_mapping() for m in B if m.grades not in {t.grades for t in lifted}]
        status, counterexample = FAIL, {"check": "surjective", "unmatched": missing[:3]}

    if status == PASS:
        for i, a in enumerate(A):
            for j, b in enumerate(A):
                if (a <= b) != (lifted[i] <= lifted[j]):
                    status, counterexample = FAIL, {
                        "check": "inclusion-both-ways",
                        "sigma1": _grades(a),
                        "sigma2": _grades(b),
                    }
                    break
                if lift_plusprime(left, fuzzy_sum(a, b)).grades != fuzzy_sum(
                    lifted[i], lifted[j]
                ).grades:
                    status, counterexample = FAIL, {
                        "check": "sum-homomorphism",
                        "sigma1": _grades(a),
                        "sigma2": _grades(b),
                    }
                    break
                if lift_plusprime(left, fuzzy_intersection([a, b])).grades != fuzzy_intersection(
                    [lifted[i], lifted[j]]
                ).grades:
                    status, counterexample = FAIL, {
                        "check": "intersection-homomorphism",
                        "sigma1": _grades(a),
                        "sigma2": _grades(b),
                    }
                    break
            if status == FAIL:
                break
        counts["pairs_checked"] = len(A) ** 2

    # chain-scale lattice sanity: closure under both operations, top and bottom
    if status == PASS:
        a_set = {x.grades for x in A}
        closed = all(
            fuzzy_sum(a, b).grades in a_set and fuzzy_intersection([a, b]).grades in a_set
            for a in A
            for b in A
        )
        carrier = carrier_of(g)
        top = FuzzySubset.constant(carrier, 1)
        bottom = characteristic(CrispSubset.of_indices(carrier, [0]))
        has_bounds = top.grades in a_set and bottom.grades in a_set
        if not (closed and has_bounds):
            status, counterexample = FAIL, {"check": "lattice-closure"}
        else:
            notes.append("enumerated ideals are closed under sum/intersection with top and bottom")

    return VerificationReport(
        suite, g.name, chain, status, counterexample, counts,
        (time.perf_counter() - t0) * 1000.0, tuple(notes),
    )


def verify_lemmas_3_11_3_12(
    g: core.GammaSemiring,
    config: Optional[RunConfig] = None,
) -> VerificationReport:
    """Characteristic functions commute with the crisp correspondences:
    lifting the characteristic function of a crisp ideal I of S equals the
    characteristic function of its operator-side image, which is itself a
    crisp ideal; dually from L back to S."""
    config = config or RunConfig()
    t0 = time.perf_counter()
    left = build_operator_semiring(
        g, "left", cap=config.closure_cap, time_budget_s=config.time_budget_s
    )
    status = PASS
    counterexample = None
    checked = 0
    per_kind: dict[str, int] = {}

    for kind in ("two", "right", "left"):
        ideals_s = enumerate_crisp_ideals(g, kind, cap=config.enum_cap)
        ideals_l = enumerate_crisp_ideals(left.semiring, kind, cap=config.enum_cap)
        per_kind[f"ideals_S[{kind}]"] = len(ideals_s)
        per_kind[f"ideals_L[{kind}]"] = len(ideals_l)
        for ideal in ideals_s:
            image = plusprime_set(left, ideal)
            if lift_plusprime(left, characteristic(ideal)).grades != characteristic(image).grades:
                status, counterexample = FAIL, {
                    "check": "characteristic-lift",
                    "kind": kind,
                    "ideal": _ids(ideal),
                }
                break
            if not is_crisp_ideal_semiring(left.semiring, image, kind):
                status, counterexample = FAIL, {
                    "check": "image-is-ideal",
                    "kind": kind,
                    "ideal": _ids(ideal),
                    "image": _ids(image),
                }
                break
            checked += 1
        if status == FAIL:
            break
        for ideal in ideals_l:
            back = plus_set(left, ideal)
            if restrict_plus(left, characteristic(ideal)).grades != characteristic(back).grades:
                status, counterexample = FAIL, {
                    "check": "characteristic-restrict",
                    "kind": kind,
                    "ideal": _ids(ideal),
                }
                break
            if not is_crisp_ideal_gamma(g, back, kind):
                status, counterexample = FAIL, {
                    "check": "preimage-is-ideal",
                    "kind": kind,
                    "ideal": _ids(ideal),
                    "preimage": _ids(back),
                }
                break
            checked += 1
        if status == FAIL:
            break

    counts = {"identities_checked": checked, **per_kind}
    return VerificationReport(
        "lemmas", g.name, None, status, counterexample, counts,
        (time.perf_counter() - t0) * 1000.0, (),
    )


def verify_theorem_3_15(
    g: core.GammaSemiring,
    kind: str = "two",
    config: Optional[RunConfig] = None,
) -> VerificationReport:
    """I -> I+' is an inclusion-preserving bijection between the crisp ideals
    (or right ideals) of the base and of its left operator semiring, with the
    pair-preimage map as inverse."""
    if kind not in ("two", "right"):
        raise ValueError("kind must be 'two' or 'right'")
    config = config or RunConfig()
    t0 = time.perf_counter()
    suite = f"th3.15[{kind}]"

    left = build_operator_semiring(
        g, "left", cap=config.closure_cap, time_budget_s=config.time_budget_s
    )
    right = build_operator_semiring(
        g, "right", cap=config.closure_cap, time_budget_s=config.time_budget_s
    )
    if find_unity(g, left) is None or find_unity(g, right) is None:
        return VerificationReport(
            suite, g.name, None, UNMET, None, {},
            (time.perf_counter() - t0) * 1000.0,
            ("requires both unities; at least one is absent",),
        )

    A = enumerate_crisp_ideals(g, kind, cap=config.enum_cap)
    B = enumerate_crisp_ideals(left.semiring, kind, cap=config.enum_cap)
    images = [plusprime_set(left, ideal) for ideal in A]
    counts = {"ideals_S": len(A), "ideals_L": len(B)}
    status = PASS
    counterexample = None

    b_set = {b.members for b in B}
    for ideal, image in zip(A, images):
        if image.members not in b_set:
            status, counterexample = FAIL, {
                "check": "image-is-ideal",
                "ideal": _ids(ideal),
                "image": _ids(image),
            }
            break
        if plus_set(left, image).members != ideal.members:
            status, counterexample = FAIL, {
                "check": "left-inverse",
                "ideal": _ids(ideal),
                "image": _ids(image),
            }
            break

    if status == PASS and len({im.members for im in images}) != len(A):
        status, counterexample = FAIL, {"check": "injective"}
    if status == PASS and {im.members for im in images} != b_set:
        unmatched = [
            _ids(b) for b in B if b.members not in {im.members for im in images}
        ]
        status, counterexample = FAIL, {"check": "surjective", "unmatched": unmatched[:3]}
    if status == PASS:
        for ideal in B:
            if plusprime_set(left, plus_set(left, ideal)).members != ideal.members:
                status, counterexample = FAIL, {
                    "check": "right-inverse",
                    "ideal": _ids(ideal),
                }
                break
    if status == PASS:
        for i, a in enumerate(A):
            for j, b in enumerate(A):
                if (a.members <= b.members) != (images[i].members <= images[j].members):
                    status, counterexample = FAIL, {
                        "check": "inclusion-both-ways",
                        "ideal1": _ids(a),
                        "ideal2": _ids(b),
                    }
                    break
            if status == FAIL:
                break
        counts["pairs_checked"] = len(A) ** 2

    return VerificationReport(
        suite, g.name, None, status, counterexample, counts,
        (time.perf_counter() - t0) * 1000.0, (),
    )


def _fuzzy_semifield_condition(
    ideals: list[FuzzySubset],
) -> tuple[bool, Optional[FuzzySubset]]:
    """Every non-constant member is constant with a value below 1 on the
    nonzero elements.  Returns (holds, first violator)."""
    for mu in ideals:
        if mu.is_constant():
            continue
        nonzero = mu.grades[1:]
        if len(set(nonzero)) != 1 or nonzero[0] >= mu.grades[0]:
            return False, mu
    return True, None


def verify_theorem_3_17(
    r: core.Semiring,
    chain: Optional[GradeChain] = None,
    config: Optional[RunConfig] = None,
) -> VerificationReport:
    """A commutative semiring is a semifield exactly when every non-constant
    fuzzy ideal is constant below 1 on the nonzero elements (chain scale)."""
    config = config or RunConfig()
    chain = chain or config.chain
    t0 = time.perf_counter()
    notes = [chain_scope_note(chain)]

    if not core.mul_commutative(r):
        return VerificationReport(
            "th3.17", r.name, chain, UNMET, None, {},
            (time.perf_counter() - t0) * 1000.0,
            tuple(notes + ["multiplication is not commutative"]),
        )
    if len(r.carrier) == 1:
        return VerificationReport(
            "th3.17", r.name, chain, UNMET, None, {},
            (time.perf_counter() - t0) * 1000.0,
            tuple(notes + ["degenerate one-element semiring; nonzero quantifiers are vacuous"]),
        )

    semifield = core.is_semifield(r)
    inverse_view = core.semifield_inverse_view(r)
    if inverse_view is None:
        notes.append("inverse-based cross-check undecided (no multiplicative identity)")
    elif inverse_view == semifield:
        notes.append("inverse-based cross-check agrees with the ideal-simplicity predicate")
    else:
        notes.append(
            "PREDICATE DISAGREEMENT: ideal-simplicity says "
            f"{semifield}, inverse-based says {inverse_view}"
        )

    ideals = enumerate_fuzzy_ideals(r, chain, "two", cap=config.enum_cap)
    holds, violator = _fuzzy_semifield_condition(ideals)
    counts = {
        "fuzzy_ideals": len(ideals),
        "nonconstant_ideals": sum(1 for m in ideals if not m.is_constant()),
    }
    status = PASS
    counterexample = None

    if semifield and not holds:
        status = FAIL
        counterexample = {
            "direction": "semifield-but-fuzzy-condition-fails",
            "violating_ideal": _grades(violator),
        }
        notes.append("forward implication failed")
    else:
        notes.append("forward implication holds: "
                     + ("semifield and fuzzy condition verified" if semifield else "vacuous"))

    if status == PASS and not semifield:
        if holds:
            status = FAIL
            counterexample = {
                "direction": "fuzzy-condition-but-not-semifield",
                "nonzero_proper_ideal": [
                    r.carrier[i] for i in (core.semifield_witness(r) or ())
                ],
            }
            notes.append("reverse implication failed")
        else:
            notes.append(
                "reverse implication holds: non-semifield witnessed by fuzzy violator "
                f"{_grades(violator)}"
            )
    elif status == PASS:
        notes.append("reverse implication holds: vacuous")

    return VerificationReport(
        "th3.17", r.name, chain, status, counterexample, counts,
        (time.perf_counter() - t0) * 1000.0, tuple(notes),
    )


def verify_theorem_3_18(
    g: core.GammaSemiring,
    chain: Optional[GradeChain] = None,
    config: Optional[RunConfig] = None,
) -> VerificationReport:
    """Gamma-semiring analogue of the semifield characterization, for
    zero-divisor-free commutative instances."""
    config = config or RunConfig()
    chain = chain or config.chain
    t0 = time.perf_counter()
    notes = [chain_scope_note(chain)]

    commutative = core.is_commutative(g)
    zdf = core.is_zdf(g) if commutative else None
    if not commutative or not zdf or len(g.S) == 1:
        if not commutative:
            notes.append("precondition failed: product is not commutative")
        elif not zdf:
            w = core.zdf_witness(g)
            notes.append(
                "precondition failed: not zero-divisor free, witness "
                f"{g.S[w[0]]}@{g.G[w[1]]}@{g.S[w[2]]} = {g.S[0]}"
            )
        else:
            notes.append("degenerate one-element carrier; nonzero quantifiers are vacuous")
        # diagnostics still run so the report explains the instance
        if commutative and len(g.S) > 1:
            ideals = enumerate_fuzzy_ideals(g, chain, "two", cap=config.enum_cap)
            holds, violator = _fuzzy_semifield_condition(ideals)
            notes.append(f"diagnostic: gamma-semifield predicate = {core.is_gamma_semifield(g)}")
            if violator is not None:
                notes.append(
                    f"diagnostic: fuzzy condition violated by {_grades(violator)}"
                )
            else:
                notes.append("diagnostic: fuzzy condition holds on the enumerated ideals")
        return VerificationReport(
            "th3.18", g.name, chain, UNMET, None, {},
            (time.perf_counter() - t0) * 1000.0, tuple(notes),
        )

    semifield = core.is_gamma_semifield(g)
    ideals = enumerate_fuzzy_ideals(g, chain, "two", cap=config.enum_cap)
    holds, violator = _fuzzy_semifield_condition(ideals)
    counts = {
        "fuzzy_ideals": len(ideals),
        "nonconstant_ideals": sum(1 for m in ideals if not m.is_constant()),
    }
    status = PASS
    counterexample = None

    if semifield and not holds:
        status = FAIL
        counterexample = {
            "direction": "gamma-semifield-but-fuzzy-condition-fails",
            "violating_ideal": _grades(violator),
        }
        notes.append("forward implication failed")
    else:
        notes.append("forward implication holds: "
                     + ("gamma-semifield and fuzzy condition verified" if semifield else "vacuous"))

    if status == PASS and not semifield:
        if holds:
            w = core.gamma_semifield_witness(g)
            status = FAIL
            counterexample = {
                "direction": "fuzzy-condition-but-not-gamma-semifield",
                "pair_without_inverse": None if w is None else [g.S[w[0]], g.G[w[1]]],
            }
            notes.append("reverse implication failed")
        else:
            notes.append(
                "reverse implication holds: non-semifield witnessed by fuzzy violator "
                f"{_grades(violator)}"
            )
    elif status == PASS:
        notes.append("reverse implication holds: vacuous")

    return VerificationReport(
        "th3.18", g.name, chain, status, counterexample, counts,
        (time.perf_counter() - t0) * 1000.0, tuple(notes),
    )


def verify_semifield_transfer(
    g: core.GammaSemiring,
    chain: Optional[GradeChain] = None,
    config: Optional[RunConfig] = None,
) -> VerificationReport:
    """A zero-divisor-free commutative base is a gamma-semifield exactly when
    its left operator semiring is a semifield.  Also reruns both fuzzy
    characterizations and records their outcomes."""
    config = config or RunConfig()
    chain = chain or config.chain
    t0 = time.perf_counter()
    suite = "transfer-semifield"
    notes = [chain_scope_note(chain)]

    commutative = core.is_commutative(g)
    zdf = core.is_zdf(g) if commutative else None
    left = build_operator_semiring(
        g, "left", cap=config.closure_cap, time_budget_s=config.time_budget_s
    )
    right = build_operator_semiring(
        g, "right", cap=config.closure_cap, time_budget_s=config.time_budget_s
    )
    unities = find_unity(g, left) is not None and find_unity(g, right) is not None

    gate_notes = []
    if not commutative:
        gate_notes.append("precondition failed: product is not commutative")
    elif not zdf:
        w = core.zdf_witness(g)
        gate_notes.append(
            "precondition failed: not zero-divisor free, witness "
            f"{g.S[w[0]]}@{g.G[w[1]]}@{g.S[w[2]]} = {g.S[0]}"
        )
    if len(g.S) == 1:
        gate_notes.append("degenerate one-element carrier")
    if not unities:
        gate_notes.append("requires both unities; at least one is absent")
    if gate_notes:
        if commutative and len(g.S) > 1:
            gate_notes.append(
                f"diagnostic: gamma-semifield predicate = {core.is_gamma_semifield(g)}"
            )
            if core.mul_commutative(left.semiring):
                gate_notes.append(
                    f"diagnostic: operator-side semifield predicate = "
                    f"{core.is_semifield(left.semiring)}"
                )
        return VerificationReport(
            suite, g.name, chain, UNMET, None, {},
            (time.perf_counter() - t0) * 1000.0, tuple(notes + gate_notes),
        )

    gamma_side = core.is_gamma_semifield(g)
    if not core.mul_commutative(left.semiring):
        return VerificationReport(
            suite, g.name, chain, UNMET, None, {},
            (time.perf_counter() - t0) * 1000.0,
            tuple(notes + ["operator semiring multiplication is not commutative"]),
        )
    operator_side = core.is_semifield(left.semiring)
    counts = {"carrier_S": len(g.S), "carrier_L": len(left)}
    status = PASS
    counterexample = None

    if gamma_side != operator_side:
        status = FAIL
        counterexample = {
            "gamma_semifield": gamma_side,
            "operator_semifield": operator_side,
        }
    notes.append(f"gamma-semifield predicate: {gamma_side}")
    notes.append(f"operator-side semifield predicate: {operator_side}")

    ideals_s = enumerate_fuzzy_ideals(g, chain, "two", cap=config.enum_cap)
    holds_s, _ = _fuzzy_semifield_condition(ideals_s)
    ideals_l = enumerate_fuzzy_ideals(left.semiring, chain, "two", cap=config.enum_cap)
    holds_l, _ = _fuzzy_semifield_condition(ideals_l)
    counts["fuzzy_ideals_S"] = len(ideals_s)
    counts["fuzzy_ideals_L"] = len(ideals_l)
    notes.append(f"fuzzy characterization on the base: {holds_s}")
    notes.append(f"fuzzy characterization on the operator side: {holds_l}")
    if status == PASS and not (holds_s == holds_l == gamma_side):
        status = FAIL
        counterexample = {
            "gamma_semifield": gamma_side,
            "fuzzy_condition_base": holds_s,
            "fuzzy_condition_operator": holds_l,
        }

    return VerificationReport(
        suite, g.name, chain, status, counterexample, counts,
        (time.perf_counter() - t0) * 1000.0, tuple(notes),
    )


# ---------------------------------------------------------------------------
# orchestration


def _matrix_unmet(suite: str, g: core.GammaSemiring, chain, size: int, cap: int) -> VerificationReport:
    return VerificationReport(
        suite, g.name, chain, UNMET, None, {"matrix_carrier": size},
        0.0,
        (f"matrix carrier would have {size} elements, cap is {cap}",),
    )


def run_all(structure, config: Optional[RunConfig] = None) -> list[VerificationReport]:
    """Every suite applicable to the structure, in a fixed order.

    For a plain semiring only the semifield characterization applies.  The
    matrix suites run at the configured dimension and report
    precondition-unmet when the matrix carrier would exceed the cap.
    """
    config = config or RunConfig.from_env()
    chain = config.chain

    if isinstance(structure, core.Semiring):
        return [verify_theorem_3_17(structure, chain, config)]
    g = structure

    tasks: list[Callable[[], VerificationReport]] = [
        lambda: verify_prop_3_4(g, chain, config),
        lambda: verify_theorem_3_8(g, chain, "two", config),
        lambda: verify_theorem_3_8(g, chain, "right", config),
        lambda: verify_lemmas_3_11_3_12(g, config),
        lambda: verify_theorem_3_15(g, "two", config),
        lambda: verify_theorem_3_15(g, "right", config),
        lambda: _theorem_3_17_on_operator(g, chain, config),
        lambda: verify_theorem_3_18(g, chain, config),
        lambda: verify_semifield_transfer(g, chain, config),
    ]

    size = len(g.S) ** (config.n * config.n)
    size_g = len(g.G) ** (config.n * config.n)
    if max(size, size_g) > config.matrix_cap:
        tasks += [
            lambda: _matrix_unmet("matrix-iso[left]", g, None, size, config.matrix_cap),
            lambda: _matrix_unmet("matrix-iso[right]", g, None, size, config.matrix_cap),
            lambda: _matrix_unmet("th3.19", g, chain, size, config.matrix_cap),
        ]
    else:
        tasks += [
            lambda: check_operator_matrix_iso(g, config.n, "left", config),
            lambda: check_operator_matrix_iso(g, config.n, "right", config),
            lambda: verify_theorem_3_19(g, config.n, chain, config),
        ]

    if config.parallelism > 1:
        with ThreadPoolExecutor(max_workers=config.parallelism) as pool:
            futures = [pool.submit(t) for t in tasks]
            return [f.result() for f in futures]
    return [t() for t in tasks]


def _theorem_3_17_on_operator(g, chain, config) -> VerificationReport:
    left = build_operator_semiring(
        g, "left", cap=config.closure_cap, time_budget_s=config.time_budget_s
    )
    return verify_theorem_3_17(left.semiring, chain, config)
