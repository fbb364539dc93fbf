"""Built-in example constructions.

Every builder assembles a RawSemiringDescription and funnels it through
``validate``, so the exhaustive axiom check is re-run on each construction
rather than assumed.  Builders are deterministic: the same parameters give
identical tables.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .core import (
    FiniteLattice,
    FiniteOrderedSemiring,
    RawSemiringDescription,
    Table,
    bits,
    lattice_from_order,
    subset_key,
    transitive_closure,
    validate,
)
from .errors import LabelError, NotAPartialOrder, NotAQuantale


def build_zmod(m: int) -> FiniteOrderedSemiring:
    """The ring of integers mod ``m`` as a discretely ordered semiring."""
    if m < 1:
        raise LabelError("modulus must be >= 1")
    lab = tuple(str(i) for i in range(m))
    return validate(
        RawSemiringDescription(
            name=f"zmod{m}",
            elements=lab,
            le="discrete",
            zero="0",
            one=lab[1 % m],
            add_table=tuple(
                tuple(str((i + j) % m) for j in range(m)) for i in range(m)
            ),
            mul_table=tuple(
                tuple(str((i * j) % m) for j in range(m)) for i in range(m)
            ),
        )
    )


def build_chain_lattice(k: int) -> FiniteOrderedSemiring:
    """The k-element chain as a distributive lattice: join adds, meet multiplies.

    ``k=2`` gives the two-element semiring used as the classifying target
    for prime ideals.
    """
    if k < 1:
        raise LabelError("chain length must be >= 1")
    lab = tuple(str(i) for i in range(k))
    return validate(
        RawSemiringDescription(
            name=f"chain{k}",
            elements=lab,
            le="chain",
            zero="0",
            one=lab[-1],
            add_table=tuple(
                tuple(str(max(i, j)) for j in range(k)) for i in range(k)
            ),
            mul_table=tuple(
                tuple(str(min(i, j)) for j in range(k)) for i in range(k)
            ),
        )
    )


def two() -> FiniteOrderedSemiring:
    """The two-element chain semiring (bottom = 0, top = 1)."""
    return build_chain_lattice(2)


def _downsets(npoints: int, closed_rows: Sequence[int]) -> list[int]:
    """All downward-closed subsets of a poset, sorted canonically."""
    out = []
    for s in range(1 << npoints):
        if all(closed_rows[j] & ~s == 0 for j in bits(s)):
            out.append(s)
    out.sort(key=subset_key)
    return out


def _setlab(mask: int) -> str:
    return "{" + ",".join(str(i) for i in bits(mask)) + "}"


def build_dlat_from_poset(
    npoints: int, relation: Iterable[tuple[int, int]]
) -> FiniteOrderedSemiring:
    """The lattice of downsets of a finite poset, as an ordered semiring.

    ``relation`` lists pairs ``(a, b)`` meaning ``a <= b``; the
    reflexive-transitive closure is taken and must be antisymmetric.
    Every lattice arising this way is distributive.
    """
    if not 0 <= npoints <= 6:
        raise NotAPartialOrder("poset must have between 0 and 6 points")
    rows = [1 << i for i in range(npoints)]
    for a, b in relation:
        if not (0 <= a < npoints and 0 <= b < npoints):
            raise NotAPartialOrder(f"point pair ({a}, {b}) out of range")
        rows[a] |= 1 << b
    closed = transitive_closure(rows, npoints)
    for i in range(npoints):
        for j in bits(closed[i]):
            if i != j and closed[j] >> i & 1:
                raise NotAPartialOrder(f"cycle through points {i} and {j}")
    lower = [0] * npoints
    for i in range(npoints):
        for j in bits(closed[i]):
            lower[j] |= 1 << i

    downs = _downsets(npoints, lower)
    lab = tuple(_setlab(s) for s in downs)
    idx = {s: i for i, s in enumerate(downs)}
    pairs = tuple(
        (lab[i], lab[j])
        for i, s in enumerate(downs)
        for j, t in enumerate(downs)
        if i != j and s & ~t == 0
    )
    strict = "".join(
        f"{i}{j}" for i in range(npoints) for j in bits(closed[i]) if i != j
    )
    return validate(
        RawSemiringDescription(
            name=f"downsets{npoints}" + (f"-{strict}" if strict else ""),
            elements=lab,
            le=pairs if pairs else "discrete",
            zero=lab[0],
            one=lab[-1],
            add_table=tuple(
                tuple(lab[idx[s | t]] for t in downs) for s in downs
            ),
            mul_table=tuple(
                tuple(lab[idx[s & t]] for t in downs) for s in downs
            ),
        )
    )


def build_boolean_ring(atoms: int) -> FiniteOrderedSemiring:
    """The Boolean ring on ``2^atoms`` elements, discretely ordered.

    Addition is symmetric difference, multiplication is intersection.
    """
    if not 1 <= atoms <= 3:
        raise LabelError("atoms must be between 1 and 3")
    subsets = sorted(range(1 << atoms), key=subset_key)
    lab = tuple(_setlab(s) for s in subsets)
    idx = {s: i for i, s in enumerate(subsets)}
    return validate(
        RawSemiringDescription(
            name=f"bool{atoms}",
            elements=lab,
            le="discrete",
            zero=lab[0],
            one=lab[-1],
            add_table=tuple(
                tuple(lab[idx[s ^ t]] for t in subsets) for s in subsets
            ),
            mul_table=tuple(
                tuple(lab[idx[s & t]] for t in subsets) for s in subsets
            ),
        )
    )


def build_truncated_naturals(cap: int) -> FiniteOrderedSemiring:
    """Naturals saturating at ``cap``: x (+) y = min(x+y, cap), likewise for *.

    Distributivity of the truncation is re-checked exhaustively by
    ``validate``, not assumed.
    """
    if cap < 1:
        raise LabelError("cap must be >= 1")
    lab = tuple(str(i) for i in range(cap + 1))
    return validate(
        RawSemiringDescription(
            name=f"truncnat{cap}",
            elements=lab,
            le="chain",
            zero="0",
            one="1",
            add_table=tuple(
                tuple(str(min(i + j, cap)) for j in range(cap + 1))
                for i in range(cap + 1)
            ),
            mul_table=tuple(
                tuple(str(min(i * j, cap)) for j in range(cap + 1))
                for i in range(cap + 1)
            ),
        )
    )


def build_truncated_maxplus(cap: int) -> FiniteOrderedSemiring:
    """Max-plus over ``{-inf, 0..cap}`` with addition saturating at ``cap``.

    Semiring addition is max, semiring multiplication is the truncated sum
    extended by ``x * -inf = -inf``; the additive zero is ``-inf`` and the
    multiplicative unit is ``0``.
    """
    if cap < 1:
        raise LabelError("cap must be >= 1")
    lab = ("-inf",) + tuple(str(i) for i in range(cap + 1))
    n = cap + 2

    def add(i: int, j: int) -> str:  # max in chain position
        return lab[max(i, j)]

    def mul(i: int, j: int) -> str:
        if i == 0 or j == 0:
            return "-inf"
        return lab[min((i - 1) + (j - 1), cap) + 1]

    return validate(
        RawSemiringDescription(
            name=f"maxplus{cap}",
            elements=lab,
            le="chain",
            zero="-inf",
            one="0",
            add_table=tuple(tuple(add(i, j) for j in range(n)) for i in range(n)),
            mul_table=tuple(tuple(mul(i, j) for j in range(n)) for i in range(n)),
        )
    )


def build_from_quantale(Q: FiniteLattice) -> FiniteOrderedSemiring:
    """The ordered semiring induced by a quantale: join adds, mul multiplies.

    Element order is preserved, so index ``i`` in the result is element
    ``i`` of ``Q``.
    """
    if Q.mul is None or Q.unit is None:
        raise NotAQuantale(f"{Q.name} carries no multiplication")
    lab = Q.labels
    pairs = tuple(
        (lab[i], lab[j]) for i in range(Q.n) for j in bits(Q.leq[i]) if i != j
    )
    return validate(
        RawSemiringDescription(
            name=f"osr({Q.name})",
            elements=lab,
            le=pairs if pairs else "discrete",
            zero=lab[Q.bottom],
            one=lab[Q.unit],
            add_table=tuple(tuple(lab[v] for v in row) for row in Q.join),
            mul_table=tuple(tuple(lab[v] for v in row) for row in Q.mul),
        )
    )


def discretize(A: FiniteOrderedSemiring) -> FiniteOrderedSemiring:
    """Same tables, identity order.  Monotonicity becomes vacuous."""
    desc = A.describe()
    return validate(
        RawSemiringDescription(
            name=f"{A.name}.discrete",
            elements=desc.elements,
            le="discrete",
            zero=desc.zero,
            one=desc.one,
            add_table=desc.add_table,
            mul_table=desc.mul_table,
        )
    )


def order_dual(A: FiniteOrderedSemiring) -> FiniteOrderedSemiring:
    """Reverse the order, keep the tables.

    The dual of an ordered semiring is an ordered semiring; duals of
    join-induced semirings satisfy ``1 <= 0`` and so have empty spectra.
    """
    lab = A.labels
    pairs = tuple(
        (lab[j], lab[i]) for i in range(A.n) for j in bits(A.leq[i]) if i != j
    )
    desc = A.describe()
    return validate(
        RawSemiringDescription(
            name=f"{A.name}.dual",
            elements=lab,
            le=pairs if pairs else "discrete",
            zero=desc.zero,
            one=desc.one,
            add_table=desc.add_table,
            mul_table=desc.mul_table,
        )
    )


def build_dual_chain(k: int) -> FiniteOrderedSemiring:
    """Order dual of the k-chain lattice semiring: a carrier where 1 <= 0."""
    return order_dual(build_chain_lattice(k))


# --- lattice-side builders (morphism targets, quantale inputs) ---------------


def chain_frame(k: int, name: str = "") -> FiniteLattice:
    """The k-chain as a frame (meet as multiplication, unit = top)."""
    if k < 1:
        raise LabelError("chain length must be >= 1")
    lab = tuple(str(i) for i in range(k))
    leq = tuple(((1 << k) - 1) & ~((1 << i) - 1) for i in range(k))
    meet: Table = tuple(tuple(min(i, j) for j in range(k)) for i in range(k))
    return lattice_from_order(lab, leq, mul=meet, unit=k - 1, name=name or f"chain{k}")


def downset_frame(
    npoints: int, relation: Iterable[tuple[int, int]], name: str = ""
) -> FiniteLattice:
    """Downset lattice of a finite poset as a frame."""
    D = build_dlat_from_poset(npoints, relation)
    meet = D.mul
    return lattice_from_order(
        D.labels, D.leq, mul=meet, unit=D.one, name=name or D.name
    )


def diamond_frame() -> FiniteLattice:
    """The four-element Boolean lattice (downsets of a 2-antichain)."""
    return downset_frame(2, [], name="diamond")


def nilpotent_chain_quantale() -> FiniteLattice:
    """A 3-chain integral quantale whose middle element squares to bottom.

    The smallest integral quantale with a nontrivial nilpotent; its
    semiprime elements are a proper subset of the carrier.
    """
    lab = ("0", "m", "1")
    leq = (0b111, 0b110, 0b100)
    mul: Table = ((0, 0, 0), (0, 0, 1), (0, 1, 2))
    return lattice_from_order(lab, leq, mul=mul, unit=2, name="nilq3")


# --- the desk-scale instance family -------------------------------------------


def builtin_family(max_size: int = 8) -> list[FiniteOrderedSemiring]:
    """Representative desk-scale instances of every builder, by carrier size.

    Used by the verification suites; deterministic order.
    """
    out: list[FiniteOrderedSemiring] = []
    for m in range(1, max_size + 1):
        out.append(build_zmod(m))
    for k in range(1, max_size + 1):
        out.append(build_chain_lattice(k))
    posets = [
        (2, [(0, 1)]),  # 2-chain: downsets form a 3-chain
        (2, []),  # 2-antichain: diamond
        (3, [(0, 1)]),  # chain + isolated point: 2x3 grid
        (3, []),  # 3-antichain: Boolean cube
    ]
    for npts, rel in posets:
        D = build_dlat_from_poset(npts, rel)
        if D.n <= max_size:
            out.append(D)
    for atoms in (1, 2, 3):
        if 1 << atoms <= max_size:
            out.append(build_boolean_ring(atoms))
    for cap in range(1, max_size):
        if cap + 1 <= max_size:
            out.append(build_truncated_naturals(cap))
    for cap in range(1, max_size - 1):
        if cap + 2 <= max_size:
            out.append(build_truncated_maxplus(cap))
    for k in range(2, min(4, max_size) + 1):
        out.append(build_dual_chain(k))
    if max_size >= 3:
        out.append(build_from_quantale(nilpotent_chain_quantale()))
    return [A for A in out if A.n <= max_size]


# --- CLI builder registry ------------------------------------------------------

BUILDER_SPECS = {
    "zmod": build_zmod,
    "chain": build_chain_lattice,
    "bool": build_boolean_ring,
    "truncnat": build_truncated_naturals,
    "maxplus": build_truncated_maxplus,
    "dualq": build_dual_chain,
}


def from_builder_spec(text: str) -> FiniteOrderedSemiring:
    """Parse a ``name:arg`` builder request, e.g. ``zmod:6`` or ``chain:3``."""
    name, sep, arg = text.partition(":")
    if name not in BUILDER_SPECS:
        raise LabelError(
            f"unknown builder {name!r}; expected one of {sorted(BUILDER_SPECS)}"
        )
    if not sep or not arg.isdigit():
        raise LabelError(f"builder {name!r} needs a numeric argument, e.g. {name}:3")
    return BUILDER_SPECS[name](int(arg))
