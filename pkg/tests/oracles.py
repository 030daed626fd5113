"""Independent brute-force oracles.

Everything here is written as plain nested loops over the raw tables, sharing
no scan code with the library: the vectorised validators, the worklist
closure, and the bulk enumerator are all checked against these.
"""

from __future__ import annotations

import itertools
from fractions import Fraction


# ---------------------------------------------------------------------------
# axiom oracles


def naive_gamma_violations(g) -> dict[str, tuple[int, ...]]:
    """First witness (index tuple, loop order = documented witness order)
    for every violated gamma-semiring law."""
    s, gg = len(g.S), len(g.G)
    A, B, P = g.addS, g.addG, g.prod
    out: dict[str, tuple[int, ...]] = {}

    def record(axiom, witness):
        if axiom not in out:
            out[axiom] = witness

    for a in range(s):
        for b in range(s):
            if A[a][b] != A[b][a]:
                record("add_S_commutative", (a, b))
            for c in range(s):
                if A[A[a][b]][c] != A[a][A[b][c]]:
                    record("add_S_associative", (a, b, c))
    for a in range(s):
        if A[0][a] != a or A[a][0] != a:
            record("add_S_identity", (a,))
    for a in range(gg):
        for b in range(gg):
            if B[a][b] != B[b][a]:
                record("add_G_commutative", (a, b))
            for c in range(gg):
                if B[B[a][b]][c] != B[a][B[b][c]]:
                    record("add_G_associative", (a, b, c))
    for a in range(gg):
        if B[0][a] != a or B[a][0] != a:
            record("add_G_identity", (a,))

    for a in range(s):
        for b in range(s):
            for c in range(gg):
                for d in range(s):
                    if P[A[a][b]][c][d] != A[P[a][c][d]][P[b][c][d]]:
                        record("product_left_distributive", (a, b, c, d))
    for a in range(s):
        for c in range(gg):
            for b in range(s):
                for d in range(s):
                    if P[a][c][A[b][d]] != A[P[a][c][b]][P[a][c][d]]:
                        record("product_right_distributive", (a, c, b, d))
    for a in range(s):
        for c in range(gg):
            for d in range(gg):
                for b in range(s):
                    if P[a][B[c][d]][b] != A[P[a][c][b]][P[a][d][b]]:
                        record("product_gamma_distributive", (a, c, d, b))
    for a in range(s):
        for c in range(gg):
            for b in range(s):
                for d in range(gg):
                    for e in range(s):
                        if P[a][c][P[b][d][e]] != P[P[a][c][b]][d][e]:
                            record("product_associative", (a, c, b, d, e))
    for c in range(gg):
        for x in range(s):
            if P[0][c][x] != 0:
                record("zero_s_left", (c, x))
    for x in range(s):
        for c in range(gg):
            if P[x][c][0] != 0:
                record("zero_s_right", (x, c))
    for x in range(s):
        for y in range(s):
            if P[x][0][y] != 0:
                record("zero_gamma", (x, y))
    return out


def naive_semiring_violations(r) -> dict[str, tuple[int, ...]]:
    n = len(r.carrier)
    A, M = r.add, r.mul
    out: dict[str, tuple[int, ...]] = {}

    def record(axiom, witness):
        if axiom not in out:
            out[axiom] = witness

    for a in range(n):
        for b in range(n):
            if A[a][b] != A[b][a]:
                record("add_commutative", (a, b))
            for c in range(n):
                if A[A[a][b]][c] != A[a][A[b][c]]:
                    record("add_associative", (a, b, c))
                if M[M[a][b]][c] != M[a][M[b][c]]:
                    record("mul_associative", (a, b, c))
                if M[a][A[b][c]] != A[M[a][b]][M[a][c]]:
                    record("mul_left_distributive", (a, b, c))
                if M[A[a][b]][c] != A[M[a][c]][M[b][c]]:
                    record("mul_right_distributive", (a, b, c))
    for a in range(n):
        if A[0][a] != a or A[a][0] != a:
            record("add_identity", (a,))
        if M[0][a] != 0:
            record("zero_mul_left", (a,))
        if M[a][0] != 0:
            record("zero_mul_right", (a,))
    return out


# ---------------------------------------------------------------------------
# predicate oracles


def naive_is_commutative(g) -> bool:
    return all(
        g.prod[a][c][b] == g.prod[b][c][a]
        for a in range(len(g.S))
        for c in range(len(g.G))
        for b in range(len(g.S))
    )


def naive_is_zdf(g) -> bool:
    for a in range(len(g.S)):
        for c in range(len(g.G)):
            for b in range(len(g.S)):
                if g.prod[a][c][b] == 0 and a != 0 and c != 0 and b != 0:
                    return False
    return True


def naive_is_gamma_semifield(g) -> bool:
    s, gg = len(g.S), len(g.G)
    if s == 1:
        return False
    for a in range(1, s):
        for c in range(1, gg):
            if not any(
                all(g.prod[g.prod[a][c][b]][beta][d] == d for d in range(s))
                for b in range(s)
                for beta in range(gg)
            ):
                return False
    return True


def naive_is_semifield(r) -> bool:
    """Subset-enumeration version: no nonzero proper two-sided crisp ideal."""
    n = len(r.carrier)
    if n == 1:
        return False
    for bits in itertools.product((0, 1), repeat=n - 1):
        members = {0} | {i + 1 for i, b in enumerate(bits) if b}
        if len(members) in (1, n):
            continue
        closed = all(r.add[x][y] in members for x in members for y in members)
        absorbing = all(
            r.mul[t][x] in members and r.mul[x][t] in members
            for t in range(n)
            for x in members
        )
        if closed and absorbing:
            return False
    return True


# ---------------------------------------------------------------------------
# operator-closure oracle: actions of all formal sums up to a length bound


def naive_operator_actions(g, side: str, max_len: int | None = None) -> set[tuple[int, ...]]:
    s, gg = len(g.S), len(g.G)
    if max_len is None:
        max_len = s * gg
    if side == "left":
        singles = {
            tuple(g.prod[x][c][a] for a in range(s))
            for x in range(s)
            for c in range(gg)
        }
    else:
        singles = {
            tuple(g.prod[a][c][x] for a in range(s))
            for c in range(gg)
            for x in range(s)
        }
    seen = set(singles)
    layer = set(singles)
    for _ in range(max_len - 1):
        nxt = {
            tuple(g.addS[u][v] for u, v in zip(f, h))
            for f in layer
            for h in singles
        }
        fresh = nxt - seen
        if not fresh:
            break
        seen |= fresh
        layer = fresh
    return seen


# ---------------------------------------------------------------------------
# fuzzy-ideal oracles


def naive_is_fuzzy_ideal_gamma(g, grades, kind) -> bool:
    s, gg = len(g.S), len(g.G)
    if all(v == 0 for v in grades):
        return False
    for x in range(s):
        for y in range(s):
            if grades[g.addS[x][y]] < min(grades[x], grades[y]):
                return False
            for c in range(gg):
                v = grades[g.prod[x][c][y]]
                if kind in ("left", "two") and v < grades[y]:
                    return False
                if kind in ("right", "two") and v < grades[x]:
                    return False
    return True


def naive_is_fuzzy_ideal_semiring(r, grades, kind) -> bool:
    n = len(r.carrier)
    if all(v == 0 for v in grades):
        return False
    for x in range(n):
        for y in range(n):
            if grades[r.add[x][y]] < min(grades[x], grades[y]):
                return False
            v = grades[r.mul[x][y]]
            if kind in ("left", "two") and v < grades[y]:
                return False
            if kind in ("right", "two") and v < grades[x]:
                return False
    return True


def brute_fuzzy_ideal_grades(structure, chain_grades, kind, is_gamma: bool) -> list[tuple]:
    """Exhaustive filter over all grade tuples with grade(0) = 1."""
    if is_gamma:
        n = len(structure.S)
        pred = naive_is_fuzzy_ideal_gamma
    else:
        n = len(structure.carrier)
        pred = naive_is_fuzzy_ideal_semiring
    out = []
    for tail in itertools.product(sorted(chain_grades), repeat=n - 1):
        grades = (Fraction(1),) + tail
        if pred(structure, grades, kind):
            out.append(grades)
    return out


def naive_crisp_ideals_gamma(g, kind) -> list[frozenset[int]]:
    s, gg = len(g.S), len(g.G)
    out = []
    for bits in itertools.product((0, 1), repeat=s - 1):
        members = frozenset({0} | {i + 1 for i, b in enumerate(bits) if b})
        if not all(g.addS[x][y] in members for x in members for y in members):
            continue
        ok = True
        for c in range(gg):
            for t in range(s):
                for x in members:
                    if kind in ("left", "two") and g.prod[t][c][x] not in members:
                        ok = False
                    if kind in ("right", "two") and g.prod[x][c][t] not in members:
                        ok = False
        if ok:
            out.append(members)
    return out
