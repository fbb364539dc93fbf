"""Prime ideals, the spectrum topology, and the point/open-set duality.

Prime ideals are proper ideals whose complement is closed under products;
equivalently, subadditive morphisms to the two-element chain, and the two
enumerations are cross-checked against each other.  The spectrum carries
the topology generated by the basic opens D(x) of primes not containing x.

Points of a finite frame are computed through its meet-prime elements:
the kernel of any frame map to the two-element chain is the principal
downset of a meet-prime, which makes the point enumeration linear after a
prime scan instead of a raw function search.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Optional

from .builders import two
from .core import FiniteLattice, FiniteOrderedSemiring, bits, lattice_from_order, subset_key
from .errors import (
    CorrespondenceFailure,
    CrossCheckFailure,
    EquivalenceViolation,
    HomeoFailure,
    InternalMismatch,
    IsoFailure,
    LemmaViolation,
)
from .ideals import Ideal, IdealQuantale, enumerate_ideals, principal_ideal
from .morphisms import enumerate_subadditive
from .radicals import RadicalFrame, enumerate_radical_ideals, radical_closure


@dataclass(frozen=True)
class FiniteTopSpace:
    """A finite point set with a family of open subsets (as point bitmasks).

    ``opens`` always contains the empty and full sets and is closed under
    pairwise union and intersection, which at finite scale gives closure
    under arbitrary unions.  ``basis`` optionally records a labeled
    generating family.
    """

    name: str
    point_labels: tuple[str, ...]
    opens: frozenset[int]
    basis: Optional[tuple[tuple[str, int], ...]] = None

    @property
    def n(self) -> int:
        return len(self.point_labels)

    @property
    def full(self) -> int:
        return (1 << self.n) - 1

    @cached_property
    def closed_sets(self) -> tuple[int, ...]:
        return tuple(sorted((self.full & ~u for u in self.opens), key=subset_key))

    def closure_of(self, mask: int) -> int:
        out = self.full
        for c in self.closed_sets:
            if mask & ~c == 0:
                out &= c
        return out

    def __repr__(self) -> str:
        return f"FiniteTopSpace({self.name!r}, {self.n} points, {len(self.opens)} opens)"


def make_space(
    name: str,
    point_labels: tuple[str, ...],
    opens,
    basis=None,
) -> FiniteTopSpace:
    """Validate the topology axioms and freeze the space."""
    opens = frozenset(opens)
    full = (1 << len(point_labels)) - 1
    if 0 not in opens or full not in opens:
        raise InternalMismatch(f"{name}: opens must contain the empty and full sets")
    for u in opens:
        for v in opens:
            if u | v not in opens or u & v not in opens:
                raise InternalMismatch(f"{name}: opens not closed under union/intersection")
    if basis is not None:
        for _, b in basis:
            if b not in opens:
                raise InternalMismatch(f"{name}: basis set is not open")
        for u in opens:
            cover = 0
            for _, b in basis:
                if b & ~u == 0:
                    cover |= b
            if cover != u:
                raise InternalMismatch(f"{name}: open set is not a union of basis sets")
    return FiniteTopSpace(
        name=name, point_labels=point_labels, opens=opens, basis=basis
    )


def _is_prime_mask(A: FiniteOrderedSemiring, mask: int) -> bool:
    if mask >> A.one & 1:
        return False
    outside = [x for x in range(A.n) if not mask >> x & 1]
    return all(not mask >> A.mul[x][y] & 1 for x in outside for y in outside)


def enumerate_primes(
    A: FiniteOrderedSemiring, iq: Optional[IdealQuantale] = None
) -> list[Ideal]:
    """All prime ideals, cross-checked against the morphisms into the
    two-element chain via the kernel correspondence."""
    iq = iq or enumerate_ideals(A)
    primes = [I for I in iq.ideals if _is_prime_mask(A, I.mask)]
    kernels = sorted(
        (f.kernel_mask() for f in enumerate_subadditive(A, two())), key=subset_key
    )
    if kernels != [I.mask for I in primes]:
        raise CrossCheckFailure(
            f"{A.name}: prime ideals and two-valued subadditive morphisms disagree"
        )
    return primes


def enumerate_maximal(
    A: FiniteOrderedSemiring, iq: Optional[IdealQuantale] = None
) -> list[Ideal]:
    """Proper ideals maximal in the containment order."""
    iq = iq or enumerate_ideals(A)
    full = A.full_mask
    out = []
    for I in iq.ideals:
        if I.mask == full:
            continue
        if not any(
            J.mask != full and J.mask != I.mask and I.mask & ~J.mask == 0
            for J in iq.ideals
        ):
            out.append(I)
    return out


@dataclass(frozen=True)
class MaximalPrimeReport:
    instance: str
    maximal_count: int
    prime_count: int
    has_prime_non_maximal: bool


def check_maximal_implies_prime(
    A: FiniteOrderedSemiring, iq: Optional[IdealQuantale] = None
) -> MaximalPrimeReport:
    """Every maximal ideal must be prime; the witness on failure is the
    product pair that escapes the ideal."""
    iq = iq or enumerate_ideals(A)
    primes = {I.mask for I in enumerate_primes(A, iq)}
    maximal = enumerate_maximal(A, iq)
    for I in maximal:
        if I.mask not in primes:
            witness = next(
                (x, y)
                for x in range(A.n)
                if not I.mask >> x & 1
                for y in range(A.n)
                if not I.mask >> y & 1
                if I.mask >> A.mul[x][y] & 1
            )
            raise LemmaViolation(
                f"{A.name}: maximal ideal {I.label} is not prime; product of "
                f"{A.labels[witness[0]]} and {A.labels[witness[1]]} falls inside"
            )
    return MaximalPrimeReport(
        instance=A.name,
        maximal_count=len(maximal),
        prime_count=len(primes),
        has_prime_non_maximal=bool(primes - {I.mask for I in maximal}),
    )


@dataclass(frozen=True)
class DegeneracyReport:
    """The four equivalent ways for a spectrum to be empty."""

    instance: str
    all_below_zero: bool
    one_below_zero: bool
    no_primes: bool
    no_maximal: bool

    @property
    def degenerate(self) -> bool:
        return self.all_below_zero


def check_degeneracy_equivalence(
    A: FiniteOrderedSemiring, iq: Optional[IdealQuantale] = None
) -> DegeneracyReport:
    """The four degeneracy conditions must agree, and the first is the same
    as the zero ideal swallowing the carrier."""
    iq = iq or enumerate_ideals(A)
    conds = DegeneracyReport(
        instance=A.name,
        all_below_zero=all(A.le(x, A.zero) for x in range(A.n)),
        one_below_zero=A.le(A.one, A.zero),
        no_primes=not enumerate_primes(A, iq),
        no_maximal=not enumerate_maximal(A, iq),
    )
    flags = (conds.all_below_zero, conds.one_below_zero, conds.no_primes, conds.no_maximal)
    if len(set(flags)) != 1:
        raise EquivalenceViolation(
            f"{A.name}: degeneracy conditions disagree: everything-below-zero="
            f"{flags[0]}, one-below-zero={flags[1]}, no-primes={flags[2]}, "
            f"no-maximal={flags[3]}"
        )
    zero_ideal_is_all = principal_ideal(A, A.zero).mask == A.full_mask
    if zero_ideal_is_all != conds.all_below_zero:
        raise EquivalenceViolation(
            f"{A.name}: zero ideal covers the carrier iff everything is below zero"
        )
    return conds


def spectrum_space(
    A: FiniteOrderedSemiring, iq: Optional[IdealQuantale] = None
) -> FiniteTopSpace:
    """The space of prime ideals with basic opens D(x) = primes omitting x.

    Point order is canonical (by prime bitmask); the basis is closed under
    intersection because D(x) meets D(y) in D(xy), which is asserted.
    """
    primes = enumerate_primes(A, iq)
    d = []
    for x in range(A.n):
        d.append(sum(1 << i for i, P in enumerate(primes) if x not in P))
    for x in range(A.n):
        for y in range(A.n):
            if d[x] & d[y] != d[A.mul[x][y]]:
                raise InternalMismatch(
                    f"{A.name}: basic opens not closed under intersection at "
                    f"{A.labels[x]}, {A.labels[y]}"
                )
    opens = {0} | set(d)
    while True:
        grown = opens | {u | v for u in opens for v in opens}
        if grown == opens:
            break
        opens = grown
    return make_space(
        name=f"spectrum({A.name})",
        point_labels=tuple(P.label for P in primes),
        opens=opens,
        basis=tuple((f"D({A.labels[x]})", d[x]) for x in range(A.n)),
    )


def frame_points(F: FiniteLattice) -> FiniteTopSpace:
    """The space of frame maps to the two-element chain.

    Points are the meet-prime elements (kernels of such maps are exactly
    their principal downsets); the open U(a) collects the points whose
    meet-prime does not dominate ``a``.
    """
    pts = F.meet_primes
    u = {}
    for a in range(F.n):
        u[a] = sum(1 << i for i, m in enumerate(pts) if not F.le(a, m))
    return make_space(
        name=f"points({F.name})",
        point_labels=tuple(F.labels[m] for m in pts),
        opens=set(u.values()) | {0},
        basis=tuple((f"U({F.labels[a]})", u[a]) for a in range(F.n)),
    )


def opens_frame(X: FiniteTopSpace) -> FiniteLattice:
    """The frame of open sets, ordered by inclusion."""
    opens = sorted(X.opens, key=subset_key)
    k = len(opens)
    pos = {u: i for i, u in enumerate(opens)}
    leq = tuple(
        sum(1 << j for j in range(k) if opens[i] & ~opens[j] == 0) for i in range(k)
    )
    meet = tuple(tuple(pos[opens[i] & opens[j]] for j in range(k)) for i in range(k))
    lattice = lattice_from_order(
        labels=tuple("{" + ",".join(str(p) for p in bits(u)) + "}" for u in opens),
        leq=leq,
        mul=meet,
        unit=k - 1,
        name=f"opens({X.name})",
    )
    if not lattice.is_frame:
        raise InternalMismatch(f"opens of {X.name} do not form a frame")
    for i in range(k):
        for j in range(k):
            if opens[lattice.join[i][j]] != opens[i] | opens[j]:
                raise InternalMismatch(f"join of opens of {X.name} is not the union")
    return lattice


@dataclass(frozen=True)
class SpaceIso:
    """A verified homeomorphism between two finite spaces."""

    forward: tuple[int, ...]
    backward: tuple[int, ...]
    open_map: tuple[tuple[int, int], ...]  # (source open, image open) masks
    verified: bool


def check_spectrum_homeomorphism(
    A: FiniteOrderedSemiring,
    iq: Optional[IdealQuantale] = None,
    rad: Optional[RadicalFrame] = None,
) -> SpaceIso:
    """The canonical bijection between frame points of the radical frame
    and prime ideals, verified to be a homeomorphism.

    A meet-prime radical ideal is literally a prime ideal (and conversely),
    so the point bijection matches up underlying member sets; the opens
    correspond with D(x) matching the open of the radical of <x>.
    """
    iq = iq or enumerate_ideals(A)
    rad = rad or enumerate_radical_ideals(A, iq)
    spec = spectrum_space(A, iq)
    pts = frame_points(rad.lattice)
    prime_masks = [rad.ideals[m].mask for m in rad.lattice.meet_primes]
    spec_masks = [P.mask for P in enumerate_primes(A, iq)]
    if sorted(prime_masks) != sorted(spec_masks):
        raise HomeoFailure(
            f"{A.name}: meet-prime radical ideals differ from prime ideals"
        )
    forward = tuple(spec_masks.index(m) for m in prime_masks)
    backward = tuple(prime_masks.index(m) for m in spec_masks)

    def push(mask: int) -> int:
        return sum(1 << forward[i] for i in bits(mask))

    open_map = []
    for u in sorted(pts.opens, key=subset_key):
        image = push(u)
        if image not in spec.opens:
            raise HomeoFailure(f"{A.name}: image of a point-space open is not open")
        open_map.append((u, image))
    for v in spec.opens:
        if sum(1 << backward[i] for i in bits(v)) not in pts.opens:
            raise HomeoFailure(f"{A.name}: preimage of a spectrum open is not open")

    assert spec.basis is not None
    for x in range(A.n):
        r = rad.index_of(radical_closure(A, principal_ideal(A, x)).mask)
        u_r = sum(
            1 << i
            for i, m in enumerate(rad.lattice.meet_primes)
            if not rad.lattice.le(r, m)
        )
        if push(u_r) != spec.basis[x][1]:
            raise HomeoFailure(
                f"{A.name}: D({A.labels[x]}) does not match the open of the "
                f"radical principal ideal"
            )
    return SpaceIso(
        forward=forward,
        backward=backward,
        open_map=tuple(open_map),
        verified=True,
    )


@dataclass(frozen=True)
class RadicalOpensReport:
    instance: str
    radical_count: int
    open_count: int


def check_radical_opens_iso(
    A: FiniteOrderedSemiring,
    iq: Optional[IdealQuantale] = None,
    rad: Optional[RadicalFrame] = None,
) -> RadicalOpensReport:
    """The radical frame is the frame of opens of the spectrum: the map
    sending a radical ideal to the primes not containing it is a frame
    isomorphism carrying radical principal ideals to the basic opens."""
    iq = iq or enumerate_ideals(A)
    rad = rad or enumerate_radical_ideals(A, iq)
    spec = spectrum_space(A, iq)
    primes = enumerate_primes(A, iq)
    O = opens_frame(spec)
    opens_sorted = sorted(spec.opens, key=subset_key)
    pos = {u: i for i, u in enumerate(opens_sorted)}

    if len(rad.ideals) != O.n:
        raise IsoFailure(
            f"{A.name}: {len(rad.ideals)} radical ideals vs {O.n} opens"
        )
    forward = []
    for I in rad.ideals:
        u = sum(1 << i for i, P in enumerate(primes) if I.mask & ~P.mask)
        if u not in pos:
            raise IsoFailure(f"{A.name}: image of {I.label} is not open")
        forward.append(pos[u])
    if len(set(forward)) != len(forward):
        raise IsoFailure(f"{A.name}: radical ideals map onto opens non-injectively")
    k = len(rad.ideals)
    for i in range(k):
        for j in range(k):
            if rad.lattice.le(i, j) != O.le(forward[i], forward[j]):
                raise IsoFailure(f"{A.name}: open-set map does not preserve order")
            if forward[rad.lattice.join[i][j]] != O.join[forward[i]][forward[j]]:
                raise IsoFailure(f"{A.name}: open-set map does not preserve joins")
            if forward[rad.lattice.meet[i][j]] != O.meet[forward[i]][forward[j]]:
                raise IsoFailure(f"{A.name}: open-set map does not preserve meets")
    assert spec.basis is not None
    for x in range(A.n):
        r = rad.index_of(radical_closure(A, principal_ideal(A, x)).mask)
        if opens_sorted[forward[r]] != spec.basis[x][1]:
            raise IsoFailure(
                f"{A.name}: radical of <{A.labels[x]}> does not map to D({A.labels[x]})"
            )
    return RadicalOpensReport(
        instance=A.name, radical_count=k, open_count=O.n
    )


@dataclass(frozen=True)
class PrimeElementReport:
    instance: str
    prime_count: int


def check_prime_element_correspondence(
    A: FiniteOrderedSemiring, iq: Optional[IdealQuantale] = None
) -> PrimeElementReport:
    """An ideal is prime exactly when it is a prime element of the ideal
    quantale: proper, and dividing a product only by dividing a factor."""
    iq = iq or enumerate_ideals(A)
    L = iq.lattice
    assert L.mul is not None
    count = 0
    for i, I in enumerate(iq.ideals):
        as_ideal = _is_prime_mask(A, I.mask)
        as_element = i != iq.unit and all(
            L.le(j, i) or L.le(m, i)
            for j in range(L.n)
            for m in range(L.n)
            if L.le(L.mul[j][m], i)
        )
        if as_ideal != as_element:
            raise CorrespondenceFailure(
                f"{A.name}: {I.label} is prime as an ideal but not as a quantale "
                f"element (or conversely)"
            )
        count += as_ideal
    return PrimeElementReport(instance=A.name, prime_count=count)


@dataclass(frozen=True)
class SoberReport:
    instance: str
    t0: bool
    sober: bool
    witness: Optional[str] = None


def check_sober(X: FiniteTopSpace) -> SoberReport:
    """Is the space T0 with a unique generic point per irreducible closed set?

    Returns the verdict rather than raising: arbitrary spaces may honestly
    fail, and the suites assert soberness only for spectrum outputs.
    """
    for x in range(X.n):
        for y in range(x + 1, X.n):
            if not any(bool(u >> x & 1) != bool(u >> y & 1) for u in X.opens):
                return SoberReport(
                    instance=X.name,
                    t0=False,
                    sober=False,
                    witness=f"points {X.point_labels[x]} and {X.point_labels[y]} "
                    f"share all opens",
                )
    for c in X.closed_sets:
        if c == 0:
            continue
        irreducible = all(
            not (u & c and v & c) or (u & v & c)
            for u in X.opens
            for v in X.opens
        )
        if not irreducible:
            continue
        generic = [x for x in bits(c) if X.closure_of(1 << x) == c]
        if len(generic) != 1:
            return SoberReport(
                instance=X.name,
                t0=True,
                sober=False,
                witness=f"irreducible closed set with {len(generic)} generic points",
            )
    return SoberReport(instance=X.name, t0=True, sober=True)
