"""Exact-rational fuzzy subsets, ideal predicates, and exhaustive enumeration.

Grades are ``fractions.Fraction`` values in [0, 1]; min/max/sup/inf over
finite carriers are exact, so lattice identities can be asserted with ``==``.
Fuzzy and crisp subsets carry a ``Carrier`` (element ids + addition table),
which is all the structure the lattice operations need; the ideal predicates
take the full algebraic structure explicitly.

Enumeration over a grade chain walks candidates in lexicographic order of
their grade tuples.  The bulk filter is vectorised (grades are encoded as
chain ranks, so comparisons are integer comparisons); the scalar predicates
``is_fuzzy_ideal_*`` are deliberately kept as plain loops so tests can use
brute-force filtering as an independent oracle.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np

from . import core

__all__ = [
    "Grade",
    "as_grade",
    "parse_grade",
    "format_grade",
    "GradeChain",
    "Carrier",
    "carrier_of",
    "CrispSubset",
    "FuzzySubset",
    "characteristic",
    "fuzzy_intersection",
    "fuzzy_sum",
    "is_fuzzy_ideal_gamma",
    "is_fuzzy_ideal_semiring",
    "is_crisp_ideal_gamma",
    "is_crisp_ideal_semiring",
    "enumerate_fuzzy_ideals",
    "enumerate_crisp_ideals",
    "EnumerationCapExceeded",
]

Grade = Fraction

KINDS = ("left", "right", "two")


class EnumerationCapExceeded(RuntimeError):
    """The candidate space exceeds the configured enumeration cap."""


def as_grade(value) -> Fraction:
    g = Fraction(value)
    if not (0 <= g <= 1):
        raise ValueError(f"grade {g} outside [0, 1]")
    return g


def parse_grade(text: str) -> Fraction:
    """Parse 'p/q' or a bare integer; exact rationals only."""
    text = text.strip()
    if "/" in text:
        num, den = text.split("/", 1)
        return as_grade(Fraction(int(num), int(den)))
    return as_grade(Fraction(int(text)))


def format_grade(g: Fraction) -> str:
    return f"{g.numerator}/{g.denominator}"


@dataclass(frozen=True)
class GradeChain:
    """Sorted distinct grades containing 0 and 1 (min/max-closed by being a chain)."""

    grades: tuple[Fraction, ...]

    def __post_init__(self):
        gs = tuple(as_grade(g) for g in self.grades)
        if len(set(gs)) != len(gs):
            raise ValueError("chain grades must be distinct")
        if tuple(sorted(gs)) != gs:
            raise ValueError("chain grades must be sorted ascending")
        if not gs or gs[0] != 0 or gs[-1] != 1:
            raise ValueError("chain must contain 0 and 1")
        object.__setattr__(self, "grades", gs)

    @classmethod
    def of(cls, *values) -> "GradeChain":
        return cls(tuple(sorted({as_grade(v) for v in values})))

    @classmethod
    def parse(cls, text: str) -> "GradeChain":
        return cls.of(*(parse_grade(part) for part in text.split(",") if part.strip()))

    def rank_of(self, g: Fraction) -> int:
        return self.grades.index(g)

    def __len__(self) -> int:
        return len(self.grades)

    def __iter__(self):
        return iter(self.grades)

    def __contains__(self, g) -> bool:
        return g in self.grades

    def __str__(self) -> str:
        return ",".join(format_grade(g) for g in self.grades)


@dataclass(frozen=True)
class Carrier:
    """An additive carrier: ordered element ids plus the addition index table.

    The label is informational only and excluded from equality, so a fuzzy
    subset built from equal tables is interchangeable regardless of origin.
    """

    label: str = field(compare=False)
    ids: tuple[str, ...] = ()
    add: tuple[tuple[int, ...], ...] = ()

    @property
    def size(self) -> int:
        return len(self.ids)


def carrier_of(structure) -> Carrier:
    """The additive carrier a fuzzy subset of `structure` lives on.

    For a gamma-semiring this is S with addS; gamma-side subsets are not used.
    Operator semirings and matrix wrappers are unwrapped via their realized
    plain structures.
    """
    if isinstance(structure, Carrier):
        return structure
    if isinstance(structure, core.GammaSemiring):
        return Carrier(f"{structure.name}.S", structure.S, structure.addS)
    if isinstance(structure, core.Semiring):
        return Carrier(structure.name, structure.carrier, structure.add)
    sem = getattr(structure, "semiring", None)
    if isinstance(sem, core.Semiring):
        return carrier_of(sem)
    gamma = getattr(structure, "gamma", None)
    if isinstance(gamma, core.GammaSemiring):
        return carrier_of(gamma)
    raise TypeError(f"no carrier for {type(structure).__name__}")


@dataclass(frozen=True)
class CrispSubset:
    """Membership bitset over a carrier."""

    carrier: Carrier
    members: frozenset[int]

    def __post_init__(self):
        if any(not (0 <= i < self.carrier.size) for i in self.members):
            raise ValueError("member index out of carrier bounds")

    @classmethod
    def of_indices(cls, carrier, indices: Iterable[int]) -> "CrispSubset":
        return cls(carrier_of(carrier), frozenset(int(i) for i in indices))

    @classmethod
    def of_ids(cls, carrier, ids: Iterable[str]) -> "CrispSubset":
        c = carrier_of(carrier)
        return cls(c, frozenset(c.ids.index(i) for i in ids))

    def sorted_indices(self) -> tuple[int, ...]:
        return tuple(sorted(self.members))

    def sorted_ids(self) -> tuple[str, ...]:
        return tuple(self.carrier.ids[i] for i in self.sorted_indices())

    def __contains__(self, index: int) -> bool:
        return index in self.members

    def __len__(self) -> int:
        return len(self.members)


@dataclass(frozen=True)
class FuzzySubset:
    """Membership function: one grade per carrier element."""

    carrier: Carrier
    grades: tuple[Fraction, ...]

    def __post_init__(self):
        gs = tuple(as_grade(g) for g in self.grades)
        if len(gs) != self.carrier.size:
            raise ValueError(
                f"{len(gs)} grades for carrier of size {self.carrier.size}"
            )
        object.__setattr__(self, "grades", gs)

    @classmethod
    def constant(cls, carrier, value) -> "FuzzySubset":
        c = carrier_of(carrier)
        return cls(c, (as_grade(value),) * c.size)

    @classmethod
    def of_grades(cls, carrier, grades: Sequence) -> "FuzzySubset":
        return cls(carrier_of(carrier), tuple(as_grade(g) for g in grades))

    @classmethod
    def from_mapping(cls, carrier, mapping: dict, default=0) -> "FuzzySubset":
        c = carrier_of(carrier)
        by_index = {c.ids.index(k): as_grade(v) for k, v in mapping.items()}
        return cls(c, tuple(by_index.get(i, as_grade(default)) for i in range(c.size)))

    def __le__(self, other: "FuzzySubset") -> bool:
        _require_same_carrier(self, other)
        return all(a <= b for a, b in zip(self.grades, other.grades))

    def is_constant(self) -> bool:
        return len(set(self.grades)) <= 1

    def is_empty(self) -> bool:
        return all(g == 0 for g in self.grades)

    def to_mapping(self) -> dict[str, str]:
        return {i: format_grade(g) for i, g in zip(self.carrier.ids, self.grades)}


def _require_same_carrier(*subsets) -> Carrier:
    first = subsets[0].carrier
    for s in subsets[1:]:
        if s.carrier != first:
            raise ValueError(
                f"carrier mismatch: {first.label} (size {first.size}) vs "
                f"{s.carrier.label} (size {s.carrier.size})"
            )
    return first


def characteristic(subset: CrispSubset) -> FuzzySubset:
    """Grade 1 on the subset, 0 elsewhere."""
    c = subset.carrier
    return FuzzySubset(
        c, tuple(Fraction(1) if i in subset.members else Fraction(0) for i in range(c.size))
    )


def fuzzy_intersection(subsets: Sequence[FuzzySubset]) -> FuzzySubset:
    """Pointwise minimum of one or more same-carrier subsets."""
    if not subsets:
        raise ValueError("intersection of an empty family is undefined")
    c = _require_same_carrier(*subsets)
    return FuzzySubset(c, tuple(min(col) for col in zip(*(s.grades for s in subsets))))


def fuzzy_sum(mu1: FuzzySubset, mu2: FuzzySubset) -> FuzzySubset:
    """(mu1 (+) mu2)(x) = max over decompositions x = u + v of min(mu1(u), mu2(v)).

    Every x decomposes as x + 0, so the maximum is over a nonempty set.
    """
    c = _require_same_carrier(mu1, mu2)
    n = c.size
    best = [Fraction(0)] * n
    for u in range(n):
        gu = mu1.grades[u]
        for v in range(n):
            x = c.add[u][v]
            m = min(gu, mu2.grades[v])
            if m > best[x]:
                best[x] = m
    return FuzzySubset(c, tuple(best))


# ---------------------------------------------------------------------------
# ideal predicates (plain loops; used as the contract operations and as the
# reference path the vectorised enumerator is checked against)


def _check_kind(kind: str) -> str:
    if kind not in KINDS:
        raise ValueError(f"kind must be one of {KINDS}, got {kind!r}")
    return kind


def is_fuzzy_ideal_gamma(g: core.GammaSemiring, mu: FuzzySubset, kind: str = "two") -> bool:
    """mu(x+y) >= min(mu x, mu y) plus the kind-appropriate absorption:
    left: mu(x@y) >= mu(y); right: mu(x@y) >= mu(x); two: both.

    Also requires mu nonempty (some grade positive).  The mu(0)=1 convention
    is enforced only at enumeration time, not here.
    """
    _check_kind(kind)
    if mu.carrier != carrier_of(g):
        raise ValueError("fuzzy subset does not live on this gamma-semiring's carrier")
    if mu.is_empty():
        return False
    gr = mu.grades
    s, gg = len(g.S), len(g.G)
    for x in range(s):
        for y in range(s):
            if gr[g.addS[x][y]] < min(gr[x], gr[y]):
                return False
    for x in range(s):
        for c in range(gg):
            row = g.prod[x][c]
            for y in range(s):
                v = gr[row[y]]
                if kind in ("left", "two") and v < gr[y]:
                    return False
                if kind in ("right", "two") and v < gr[x]:
                    return False
    return True


def is_fuzzy_ideal_semiring(r: core.Semiring, mu: FuzzySubset, kind: str = "two") -> bool:
    """Semiring analogue: mu(xy) >= mu(y) (left) / mu(x) (right)."""
    _check_kind(kind)
    if mu.carrier != carrier_of(r):
        raise ValueError("fuzzy subset does not live on this semiring's carrier")
    if mu.is_empty():
        return False
    gr = mu.grades
    n = len(r.carrier)
    for x in range(n):
        for y in range(n):
            if gr[r.add[x][y]] < min(gr[x], gr[y]):
                return False
            v = gr[r.mul[x][y]]
            if kind in ("left", "two") and v < gr[y]:
                return False
            if kind in ("right", "two") and v < gr[x]:
                return False
    return True


def is_crisp_ideal_gamma(g: core.GammaSemiring, subset: CrispSubset, kind: str = "two") -> bool:
    """Contains 0, closed under addition, absorbs the ternary product per kind."""
    _check_kind(kind)
    m = subset.members
    if 0 not in m:
        return False
    s, gg = len(g.S), len(g.G)
    for x in m:
        for y in m:
            if g.addS[x][y] not in m:
                return False
    for c in range(gg):
        for t in range(s):
            for x in m:
                if kind in ("left", "two") and g.prod[t][c][x] not in m:
                    return False
                if kind in ("right", "two") and g.prod[x][c][t] not in m:
                    return False
    return True


def is_crisp_ideal_semiring(r: core.Semiring, subset: CrispSubset, kind: str = "two") -> bool:
    _check_kind(kind)
    m = subset.members
    if 0 not in m:
        return False
    n = len(r.carrier)
    for x in m:
        for y in m:
            if r.add[x][y] not in m:
                return False
    for t in range(n):
        for x in m:
            if kind in ("left", "two") and r.mul[t][x] not in m:
                return False
            if kind in ("right", "two") and r.mul[x][t] not in m:
                return False
    return True


# ---------------------------------------------------------------------------
# enumeration


def _ideal_constraints(structure, kind: str):
    """Deduplicated constraint lists for the vectorised filter.

    Returns (additive, absorb) where additive holds (r, x, y) triples meaning
    grade[r] >= min(grade[x], grade[y]) and absorb holds (r, o) pairs meaning
    grade[r] >= grade[o].  Trivially-true constraints (r coinciding with an
    operand) are dropped; the zero laws guarantee nothing involving index 0
    survives except genuine constraints.
    """
    _check_kind(kind)
    if isinstance(structure, core.GammaSemiring):
        add = structure.addS
        s, gg = len(structure.S), len(structure.G)
        products = (
            (structure.prod[x][c][y], x, y)
            for x in range(s)
            for c in range(gg)
            for y in range(s)
        )
        n = s
    elif isinstance(structure, core.Semiring):
        add = structure.add
        n = len(structure.carrier)
        products = ((structure.mul[x][y], x, y) for x in range(n) for y in range(n))
    else:
        sem = getattr(structure, "semiring", None)
        if sem is None:
            raise TypeError(f"cannot enumerate over {type(structure).__name__}")
        return _ideal_constraints(sem, kind)

    additive = set()
    for x in range(n):
        for y in range(x, n):
            r = add[x][y]
            if r != x and r != y:
                additive.add((r, x, y))
    absorb = set()
    for r, x, y in products:
        if kind in ("left", "two") and r != y:
            absorb.add((r, y))
        if kind in ("right", "two") and r != x:
            absorb.add((r, x))
    return sorted(additive), sorted(absorb)


def _filter_chain_candidates(n: int, m: int, additive, absorb, chunk: int = 1 << 18):
    """Yield surviving grade-rank tuples in ascending candidate order.

    Candidates fix rank m-1 (grade 1) at position 0 and run the remaining
    n-1 positions through all m**(n-1) rank combinations, most significant
    digit first, so ascending candidate index is lexicographic order of the
    grade tuple.  Constraints are applied with immediate compaction: the
    survivor set shrinks geometrically, so per-chunk cost is dominated by
    the first few constraints.
    """
    total = m ** (n - 1)
    shape = (m,) * (n - 1)
    for lo in range(0, total, chunk):
        hi = min(total, lo + chunk)
        mat = np.empty((hi - lo, n), dtype=np.int16)
        mat[:, 0] = m - 1
        if n > 1:
            digits = np.unravel_index(np.arange(lo, hi, dtype=np.int64), shape)
            for pos, col in enumerate(digits, start=1):
                mat[:, pos] = col
        for r, x, y in additive:
            keep = mat[:, r] >= np.minimum(mat[:, x], mat[:, y])
            if not keep.all():
                mat = mat[keep]
            if mat.shape[0] == 0:
                break
        else:
            for r, o in absorb:
                keep = mat[:, r] >= mat[:, o]
                if not keep.all():
                    mat = mat[keep]
                if mat.shape[0] == 0:
                    break
        for row in mat:
            yield tuple(int(v) for v in row)


def enumerate_fuzzy_ideals(
    structure,
    chain: GradeChain,
    kind: str = "two",
    cap: int = 10**8,
) -> list[FuzzySubset]:
    """All fuzzy ideals with mu(0) = 1 and grades drawn from the chain,
    in lexicographic order of grade tuples.

    Raises EnumerationCapExceeded when |chain|**(|carrier|-1) > cap.
    """
    carrier = carrier_of(structure)
    n = carrier.size
    m = len(chain)
    total = m ** (n - 1)
    if total > cap:
        raise EnumerationCapExceeded(
            f"{total} candidates (= {m}^{n - 1}) exceed cap {cap}"
        )
    additive, absorb = _ideal_constraints(structure, kind)
    out = []
    for ranks in _filter_chain_candidates(n, m, additive, absorb):
        out.append(FuzzySubset(carrier, tuple(chain.grades[r] for r in ranks)))
    return out


def enumerate_crisp_ideals(structure, kind: str = "two", cap: int = 10**8) -> list[CrispSubset]:
    """All crisp ideals (contain 0, additively closed, absorbing per kind),
    ordered by the indicator tuple of the non-zero positions."""
    _check_kind(kind)
    carrier = carrier_of(structure)
    n = carrier.size
    if 2**n > cap:
        raise EnumerationCapExceeded(f"2^{n} subsets exceed cap {cap}")
    if isinstance(structure, core.GammaSemiring):
        check = lambda sub: is_crisp_ideal_gamma(structure, sub, kind)
    elif isinstance(structure, core.Semiring):
        check = lambda sub: is_crisp_ideal_semiring(structure, sub, kind)
    else:
        sem = getattr(structure, "semiring", None)
        if sem is None:
            raise TypeError(f"cannot enumerate over {type(structure).__name__}")
        return enumerate_crisp_ideals(sem, kind, cap)
    out = []
    for bits in itertools.product((0, 1), repeat=n - 1):
        members = frozenset({0} | {i + 1 for i, b in enumerate(bits) if b})
        sub = CrispSubset(carrier, members)
        if check(sub):
            out.append(sub)
    return out
