"""Finite ordered semirings and finite lattices.

Carriers are canonicalized to indices ``0..n-1`` in input order and every
subset downstream is an int bitmask (bit ``i`` = element ``i``).  All
structures are frozen; axiom checking is always exhaustive -- at desk scale
(n <= 24) there is no reason for a trusted fast path.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Optional, Sequence, Union

from .errors import (
    AxiomViolation,
    LabelError,
    NotALattice,
    NotAQuantale,
    SizeLimit,
)

MAX_ELEMENTS = 24  # ideal enumeration is 2^n in the worst case downstream

Table = tuple[tuple[int, ...], ...]
LePairs = tuple[tuple[str, str], ...]


def bits(mask: int) -> Iterable[int]:
    """Yield the set bit positions of ``mask`` in increasing order."""
    i = 0
    while mask:
        if mask & 1:
            yield i
        mask >>= 1
        i += 1


def popcount(mask: int) -> int:
    return bin(mask).count("1")


def subset_key(mask: int) -> tuple[int, int]:
    """Canonical sort key for carrier subsets: by size, then by bitmask."""
    return (popcount(mask), mask)


def transitive_closure(rows: Sequence[int], n: int) -> tuple[int, ...]:
    """Reflexive-transitive closure of a relation given as bitmask rows.

    ``rows[i]`` has bit ``j`` set iff ``i <= j``.
    """
    out = [rows[i] | (1 << i) for i in range(n)]
    for k in range(n):
        bit = 1 << k
        for i in range(n):
            if out[i] & bit:
                out[i] |= out[k]
    return tuple(out)


@dataclass(frozen=True)
class RawSemiringDescription:
    """Serializable description of an ordered semiring, all in labels.

    ``le`` is the keyword ``"discrete"``, the keyword ``"chain"`` (total
    order in listed element order), or a tuple of ``(smaller, larger)``
    label pairs whose reflexive-transitive closure is taken.
    """

    name: str
    elements: tuple[str, ...]
    le: Union[str, LePairs]
    zero: str
    one: str
    add_table: tuple[tuple[str, ...], ...]
    mul_table: tuple[tuple[str, ...], ...]


@dataclass(frozen=True)
class FiniteOrderedSemiring:
    """A validated finite ordered semiring.

    ``leq[i]`` has bit ``j`` set iff element ``i`` is below element ``j``.
    ``add``/``mul`` are n x n index tables; row i, column j gives
    ``op(element i, element j)``.  Instances are immutable and may be shared
    freely across threads.
    """

    name: str
    labels: tuple[str, ...]
    leq: tuple[int, ...]
    zero: int
    one: int
    add: Table
    mul: Table

    @property
    def n(self) -> int:
        return len(self.labels)

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def le(self, i: int, j: int) -> bool:
        return bool(self.leq[i] >> j & 1)

    @cached_property
    def lower_masks(self) -> tuple[int, ...]:
        """``lower_masks[j]`` = bitmask of ``{i : i <= j}``."""
        out = [0] * self.n
        for i in range(self.n):
            row = self.leq[i]
            for j in bits(row):
                out[j] |= 1 << i
        return tuple(out)

    @property
    def is_discrete(self) -> bool:
        return all(self.leq[i] == 1 << i for i in range(self.n))

    def set_label(self, mask: int) -> str:
        return "{" + ",".join(self.labels[i] for i in bits(mask)) + "}"

    def describe(self) -> RawSemiringDescription:
        """Re-serialize as a description (explicit le pairs)."""
        pairs = tuple(
            (self.labels[i], self.labels[j])
            for i in range(self.n)
            for j in bits(self.leq[i])
            if i != j
        )
        lab = self.labels
        return RawSemiringDescription(
            name=self.name,
            elements=lab,
            le="discrete" if not pairs else pairs,
            zero=lab[self.zero],
            one=lab[self.one],
            add_table=tuple(tuple(lab[v] for v in row) for row in self.add),
            mul_table=tuple(tuple(lab[v] for v in row) for row in self.mul),
        )

    def __repr__(self) -> str:
        return f"FiniteOrderedSemiring({self.name!r}, n={self.n})"


def _resolve(label: str, index: dict, what: str) -> int:
    try:
        return index[label]
    except KeyError:
        raise LabelError(f"{what}: unknown element label {label!r}") from None


def _axiom_failures(A: FiniteOrderedSemiring):
    """Exhaustively check every ordered-semiring law; yield (name, witness)."""
    n, lab = A.n, A.labels
    add, mul, leq = A.add, A.mul, A.leq
    zero, one = A.zero, A.one

    def le(i, j):
        return leq[i] >> j & 1

    for i in range(n):
        if not le(i, i):
            yield ("le-reflexive", (lab[i],))
            break
    found = None
    for i in range(n):
        for j in bits(leq[i]):
            if leq[j] & ~leq[i]:
                k = next(b for b in bits(leq[j] & ~leq[i]))
                found = (lab[i], lab[j], lab[k])
                break
        if found:
            break
    if found:
        yield ("le-transitive", found)

    for opname, op in (("add", add), ("mul", mul)):
        unit = zero if opname == "add" else one
        comm = next(
            (
                (lab[x], lab[y])
                for x in range(n)
                for y in range(x + 1, n)
                if op[x][y] != op[y][x]
            ),
            None,
        )
        if comm:
            yield (f"{opname}-commutative", comm)
        assoc = next(
            (
                (lab[x], lab[y], lab[z])
                for x in range(n)
                for y in range(n)
                for z in range(n)
                if op[op[x][y]][z] != op[x][op[y][z]]
            ),
            None,
        )
        if assoc:
            yield (f"{opname}-associative", assoc)
        ident = next(((lab[x],) for x in range(n) if op[x][unit] != x), None)
        if ident:
            yield (f"{opname}-identity", ident)

    annih = next(((lab[x],) for x in range(n) if mul[x][zero] != zero), None)
    if annih:
        yield ("mul-annihilates", annih)

    dist = next(
        (
            (lab[x], lab[y], lab[z])
            for x in range(n)
            for y in range(n)
            for z in range(n)
            if mul[x][add[y][z]] != add[mul[x][y]][mul[x][z]]
        ),
        None,
    )
    if dist:
        yield ("distributive", dist)

    # monotone in one argument suffices: both ops are commutative
    for opname, op in (("add", add), ("mul", mul)):
        mono = next(
            (
                (lab[x], lab[y], lab[z])
                for x in range(n)
                for y in bits(leq[x])
                for z in range(n)
                if not le(op[x][z], op[y][z])
            ),
            None,
        )
        if mono:
            yield (f"{opname}-monotone", mono)


def validate(desc: RawSemiringDescription) -> FiniteOrderedSemiring:
    """Resolve labels, close the order, and exhaustively check every axiom.

    Raises LabelError for unresolvable labels or malformed tables,
    SizeLimit for carriers above the desk-scale guardrail, and
    AxiomViolation (listing every failed law with a witness) otherwise.
    """
    elements = tuple(desc.elements)
    n = len(elements)
    if n == 0:
        raise LabelError("carrier must be non-empty")
    if n > MAX_ELEMENTS:
        raise SizeLimit(f"carrier has {n} elements; guardrail is {MAX_ELEMENTS}")
    index: dict = {}
    for i, e in enumerate(elements):
        if e in index:
            raise LabelError(f"duplicate element label {e!r}")
        index[e] = i

    zero = _resolve(desc.zero, index, "zero")
    one = _resolve(desc.one, index, "one")

    def table(rows, what) -> Table:
        if len(rows) != n or any(len(r) != n for r in rows):
            raise LabelError(f"{what} table must be {n}x{n}")
        return tuple(
            tuple(_resolve(v, index, f"{what} table") for v in row) for row in rows
        )

    add = table(desc.add_table, "add")
    mul = table(desc.mul_table, "mul")

    if desc.le == "discrete":
        leq = tuple(1 << i for i in range(n))
    elif desc.le == "chain":
        leq = tuple(((1 << n) - 1) & ~((1 << i) - 1) for i in range(n))
    elif isinstance(desc.le, str):
        raise LabelError(f"unknown order keyword {desc.le!r}")
    else:
        rows = [1 << i for i in range(n)]
        for a, b in desc.le:
            rows[_resolve(a, index, "le")] |= 1 << _resolve(b, index, "le")
        leq = transitive_closure(rows, n)

    A = FiniteOrderedSemiring(
        name=desc.name, labels=elements, leq=leq, zero=zero, one=one, add=add, mul=mul
    )
    violations = tuple(_axiom_failures(A))
    if violations:
        raise AxiomViolation(violations)
    return A


# --- finite lattices ---------------------------------------------------------


@dataclass(frozen=True)
class FiniteLattice:
    """A finite lattice, optionally carrying a quantale multiplication.

    ``mul``/``unit`` are present for quantales; ``is_integral_quantale``
    holds when the unit is the top element and ``is_frame`` when meet
    distributes over binary join (at finite scale frames are exactly
    distributive lattices, so ``is_frame == is_distributive``).
    """

    name: str
    labels: tuple[str, ...]
    leq: tuple[int, ...]
    join: Table
    meet: Table
    bottom: int
    top: int
    mul: Optional[Table]
    unit: Optional[int]
    is_distributive: bool
    is_integral_quantale: bool
    is_frame: bool

    @property
    def n(self) -> int:
        return len(self.labels)

    def le(self, i: int, j: int) -> bool:
        return bool(self.leq[i] >> j & 1)

    def join_of(self, idxs: Iterable[int]) -> int:
        out = self.bottom
        for i in idxs:
            out = self.join[out][i]
        return out

    def meet_of(self, idxs: Iterable[int]) -> int:
        out = self.top
        for i in idxs:
            out = self.meet[out][i]
        return out

    @cached_property
    def covers(self) -> tuple[tuple[int, int], ...]:
        """All pairs ``(i, j)`` with ``j`` covering ``i``."""
        out = []
        for i in range(self.n):
            above = self.leq[i] & ~(1 << i)
            for j in bits(above):
                between = self.leq[i] & self._lower(j) & ~(1 << i) & ~(1 << j)
                if not between:
                    out.append((i, j))
        return tuple(out)

    def _lower(self, j: int) -> int:
        return self.lower_masks[j]

    @cached_property
    def lower_masks(self) -> tuple[int, ...]:
        out = [0] * self.n
        for i in range(self.n):
            for j in bits(self.leq[i]):
                out[j] |= 1 << i
        return tuple(out)

    @cached_property
    def join_irreducibles(self) -> tuple[int, ...]:
        """Elements with exactly one lower cover (excludes bottom)."""
        lower_covers: dict[int, int] = {j: 0 for j in range(self.n)}
        for i, j in self.covers:
            lower_covers[j] += 1
        return tuple(
            j for j in range(self.n) if j != self.bottom and lower_covers[j] == 1
        )

    @cached_property
    def meet_primes(self) -> tuple[int, ...]:
        """Elements ``m != top`` with ``a /\\ b <= m  =>  a <= m or b <= m``."""
        out = []
        for m in range(self.n):
            if m == self.top:
                continue
            low = self.lower_masks[m]
            if all(
                not self.le(self.meet[a][b], m)
                for a in range(self.n)
                if not low >> a & 1
                for b in range(self.n)
                if not low >> b & 1
            ):
                out.append(m)
        return tuple(out)

    def __repr__(self) -> str:
        kind = "frame" if self.is_frame else "lattice"
        if self.mul is not None and not self.is_frame:
            kind = "quantale"
        return f"FiniteLattice({self.name!r}, n={self.n}, {kind})"


def lattice_from_order(
    labels: Sequence[str],
    leq: Sequence[int],
    mul: Optional[Table] = None,
    unit: Optional[int] = None,
    name: str = "",
) -> FiniteLattice:
    """Build a FiniteLattice from a partial order given as bitmask rows.

    Computes join/meet tables (NotALattice if some bound is missing or the
    relation is not a partial order) and, when ``mul`` is supplied, checks
    the quantale laws exhaustively (NotAQuantale on failure).
    """
    n = len(labels)
    leq = tuple(leq)
    for i in range(n):
        if not leq[i] >> i & 1:
            raise NotALattice(f"order not reflexive at {labels[i]}")
        for j in bits(leq[i]):
            if leq[j] & ~leq[i]:
                raise NotALattice("order not transitive")
            if i != j and leq[j] >> i & 1:
                raise NotALattice(
                    f"order not antisymmetric: {labels[i]} and {labels[j]}"
                )

    lower = [0] * n
    for i in range(n):
        for j in bits(leq[i]):
            lower[j] |= 1 << i

    def least(candidates: int, what: str) -> int:
        for u in bits(candidates):
            if candidates & ~leq[u] == 0:
                return u
        raise NotALattice(f"no {what}")

    def greatest(candidates: int, what: str) -> int:
        for u in bits(candidates):
            if candidates & ~lower[u] == 0:
                return u
        raise NotALattice(f"no {what}")

    join_t = []
    meet_t = []
    for i in range(n):
        jrow = []
        mrow = []
        for j in range(n):
            jrow.append(least(leq[i] & leq[j], f"join of {labels[i]},{labels[j]}"))
            mrow.append(
                greatest(lower[i] & lower[j], f"meet of {labels[i]},{labels[j]}")
            )
        join_t.append(tuple(jrow))
        meet_t.append(tuple(mrow))
    join: Table = tuple(join_t)
    meet: Table = tuple(meet_t)
    bottom = least((1 << n) - 1, "bottom")
    top = greatest((1 << n) - 1, "top")

    if mul is not None:
        if unit is None:
            raise NotAQuantale("multiplication given without a unit")
        for x in range(n):
            if mul[x][unit] != x:
                raise NotAQuantale(f"unit law fails at {labels[x]}")
            if mul[x][bottom] != bottom:
                raise NotAQuantale(f"bottom not absorbing at {labels[x]}")
            for y in range(n):
                if mul[x][y] != mul[y][x]:
                    raise NotAQuantale(f"not commutative at {labels[x]},{labels[y]}")
                for z in range(n):
                    if mul[mul[x][y]][z] != mul[x][mul[y][z]]:
                        raise NotAQuantale("not associative")
                    if mul[x][join[y][z]] != join[mul[x][y]][mul[x][z]]:
                        raise NotAQuantale(
                            "multiplication does not distribute over join"
                        )

    distributive = all(
        meet[x][join[y][z]] == join[meet[x][y]][meet[x][z]]
        for x in range(n)
        for y in range(n)
        for z in range(n)
    )
    return FiniteLattice(
        name=name or "lattice",
        labels=tuple(labels),
        leq=leq,
        join=join,
        meet=meet,
        bottom=bottom,
        top=top,
        mul=tuple(tuple(r) for r in mul) if mul is not None else None,
        unit=unit,
        is_distributive=distributive,
        is_integral_quantale=mul is not None and unit == top,
        is_frame=distributive,
    )
