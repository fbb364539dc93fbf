"""Radical ideals, the frame they form, and the distributive reflection.

A radical ideal contains every element some power of which it contains.
The root-exponent bound ``n <= |A|`` is exact -- the power sequence of an
element revisits itself within the carrier size -- and stabilization at the
bound is asserted at runtime rather than assumed.

For abstract finite integral quantales the same closure is the semiprime
reflection; the radical ideals of a semiring are exactly the semiprime
elements of its ideal quantale, and the verification suite checks that
equivalence exhaustively.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .builders import build_from_quantale
from .core import (
    FiniteLattice,
    FiniteOrderedSemiring,
    Table,
    lattice_from_order,
)
from .errors import (
    InternalMismatch,
    IsoFailure,
    NotIntegral,
    OwnerMismatch,
    PresentationViolation,
    UniversalityFailure,
)
from .homs import UniversalityReport, check_universal_property
from .ideals import (
    Ideal,
    IdealQuantale,
    _close,
    as_mask,
    enumerate_ideals,
    principal_ideal,
)


def power_set(mul: Table, size: int, x: int) -> set[int]:
    """All positive powers of ``x`` under the given multiplication table.

    Exact with ``size`` steps; the next power is asserted to add nothing.
    """
    out: set[int] = set()
    p = x
    for _ in range(size):
        out.add(p)
        p = mul[p][x]
    if p not in out:
        raise InternalMismatch("power sequence escaped the pigeonhole bound")
    return out


def is_radical(A: FiniteOrderedSemiring, members) -> bool:
    """Does the ideal contain every element with a power inside it?"""
    mask = as_mask(A, members)
    for x in range(A.n):
        if mask >> x & 1:
            continue
        if any(mask >> p & 1 for p in power_set(A.mul, A.n, x)):
            return False
    return True


def radical_closure(A: FiniteOrderedSemiring, I: Ideal) -> Ideal:
    """Least radical ideal containing I: alternate root adjunction with
    ideal closure until stable."""
    if I.owner != A:
        raise OwnerMismatch(f"ideal of {I.owner.name} closed over {A.name}")
    mask = I.mask
    while True:
        prev = mask
        for x in range(A.n):
            if not mask >> x & 1 and any(
                mask >> p & 1 for p in power_set(A.mul, A.n, x)
            ):
                mask |= 1 << x
        mask = _close(A, mask)
        if mask == prev:
            return Ideal(A, mask)


@dataclass(frozen=True)
class RadicalFrame:
    """All radical ideals with their frame structure.

    ``lattice`` is ordered by containment with meet = intersection and
    join = radical closure of the ideal join; its multiplication is the
    meet and its unit the top, so it doubles as an integral quantale.
    """

    owner: FiniteOrderedSemiring
    ideals: tuple[Ideal, ...]
    lattice: FiniteLattice

    def index_of(self, mask: int) -> int:
        for i, I in enumerate(self.ideals):
            if I.mask == mask:
                return i
        raise OwnerMismatch(
            f"{self.owner.set_label(mask)} is not a radical ideal of {self.owner.name}"
        )

    def __len__(self) -> int:
        return len(self.ideals)

    def __repr__(self) -> str:
        return f"RadicalFrame({self.owner.name}, {len(self.ideals)} radical ideals)"


def enumerate_radical_ideals(
    A: FiniteOrderedSemiring, iq: Optional[IdealQuantale] = None
) -> RadicalFrame:
    """Filter the ideal quantale down to its radical ideals and verify the
    frame laws exhaustively."""
    iq = iq or enumerate_ideals(A)
    kept = [i for i, I in enumerate(iq.ideals) if is_radical(A, I.mask)]
    ideals = tuple(iq.ideals[i] for i in kept)
    k = len(ideals)
    leq = tuple(
        sum(1 << j for j in range(k) if ideals[i].is_subset(ideals[j]))
        for i in range(k)
    )
    meet = []
    for i in range(k):
        row = []
        for j in range(k):
            inter = ideals[i].mask & ideals[j].mask
            try:
                row.append(next(t for t in range(k) if ideals[t].mask == inter))
            except StopIteration:
                raise InternalMismatch(
                    f"intersection of radical ideals {ideals[i].label} and "
                    f"{ideals[j].label} of {A.name} is not radical"
                ) from None
        meet.append(tuple(row))
    lattice = lattice_from_order(
        labels=tuple(I.label for I in ideals),
        leq=leq,
        mul=tuple(meet),
        unit=k - 1,
        name=f"radicals({A.name})",
    )
    if not lattice.is_frame:
        raise InternalMismatch(f"radical ideals of {A.name} do not form a frame")
    for i in range(k):
        for j in range(k):
            if lattice.meet[i][j] != meet[i][j]:
                raise InternalMismatch(
                    f"meet of radical ideals of {A.name} is not the intersection"
                )
            joined = radical_closure(
                A, Ideal(A, _close(A, ideals[i].mask | ideals[j].mask))
            )
            if ideals[lattice.join[i][j]].mask != joined.mask:
                raise InternalMismatch(
                    f"join of radical ideals of {A.name} is not the radical "
                    f"closure of the ideal join"
                )
    bottom = radical_closure(A, iq.ideals[iq.bottom])
    if ideals[lattice.bottom].mask != bottom.mask:
        raise InternalMismatch(
            f"least radical ideal of {A.name} is not the radical of the zero ideal"
        )
    return RadicalFrame(owner=A, ideals=ideals, lattice=lattice)


@dataclass(frozen=True)
class SemiprimeReflection:
    """The semiprime elements of an integral quantale, with the reflector."""

    quantale: FiniteLattice
    members: tuple[int, ...]  # quantale indices, ascending
    frame: FiniteLattice
    radical_of: tuple[int, ...]  # quantale index -> least semiprime above


def semiprime_elements(Q: FiniteLattice) -> SemiprimeReflection:
    """Semiprime elements of a finite integral quantale, as a frame.

    An element is semiprime when every element with a power below it is
    itself below it.  Verifies: closure under meets, that the restricted
    order is a frame whose meets coincide with those of Q, and that the
    reflector (least semiprime above) is left adjoint to the inclusion.
    """
    if not Q.is_integral_quantale:
        raise NotIntegral(f"{Q.name} is not an integral quantale")
    assert Q.mul is not None
    members = tuple(
        p
        for p in range(Q.n)
        if all(
            Q.le(q, p)
            for q in range(Q.n)
            if any(Q.le(pw, p) for pw in power_set(Q.mul, Q.n, q))
        )
    )
    pos = {p: i for i, p in enumerate(members)}
    k = len(members)
    for a in members:
        for b in members:
            if Q.meet[a][b] not in pos:
                raise InternalMismatch(
                    f"semiprimes of {Q.name} not closed under meets"
                )
    radical_of = tuple(
        Q.meet_of(p for p in members if Q.le(q, p)) for q in range(Q.n)
    )
    for q in range(Q.n):
        r = radical_of[q]
        if r not in pos or not Q.le(q, r):
            raise InternalMismatch(f"reflector of {Q.name} is not a closure")
        for p in members:
            if Q.le(r, p) != Q.le(q, p):
                raise InternalMismatch(
                    f"reflector of {Q.name} is not left adjoint to the inclusion"
                )
    leq = tuple(
        sum(1 << j for j in range(k) if Q.le(members[i], members[j]))
        for i in range(k)
    )
    meet = tuple(
        tuple(pos[Q.meet[members[i]][members[j]]] for j in range(k)) for i in range(k)
    )
    frame = lattice_from_order(
        labels=tuple(Q.labels[p] for p in members),
        leq=leq,
        mul=meet,
        unit=k - 1,
        name=f"semiprimes({Q.name})",
    )
    if not frame.is_frame:
        raise InternalMismatch(f"semiprimes of {Q.name} do not form a frame")
    for i in range(k):
        for j in range(k):
            expected = radical_of[Q.join[members[i]][members[j]]]
            if members[frame.join[i][j]] != expected:
                raise InternalMismatch(
                    f"semiprime join in {Q.name} is not the reflected join"
                )
    return SemiprimeReflection(
        quantale=Q, members=members, frame=frame, radical_of=radical_of
    )


@dataclass(frozen=True)
class RadicalSemiprimeReport:
    """Outcome of the radical-ideal / semiprime-element comparison."""

    instance: str
    ideal_count: int
    radical_count: int


def check_radical_equals_semiprime(
    A: FiniteOrderedSemiring, iq: Optional[IdealQuantale] = None
) -> RadicalSemiprimeReport:
    """An ideal is radical exactly when it is semiprime in the ideal quantale."""
    iq = iq or enumerate_ideals(A)
    semi = set(semiprime_elements(iq.lattice).members)
    for i, I in enumerate(iq.ideals):
        if is_radical(A, I.mask) != (i in semi):
            raise InternalMismatch(
                f"ideal {I.label} of {A.name}: radical and semiprime disagree"
            )
    return RadicalSemiprimeReport(
        instance=A.name, ideal_count=len(iq.ideals), radical_count=len(semi)
    )


def check_frame_universality(
    A: FiniteOrderedSemiring,
    F: FiniteLattice,
    rad: Optional[RadicalFrame] = None,
    strict_zero: bool = False,
) -> UniversalityReport:
    """Verify that composition with the radical principal-ideal map is a
    bijection from frame homomorphisms out of the radical frame onto
    subadditive morphisms into the frame's semiring."""
    if not F.is_frame or not F.is_integral_quantale or F.mul != F.meet:
        raise NotIntegral(f"{F.name} is not a frame with meet as multiplication")
    rad = rad or enumerate_radical_ideals(A)
    universal = tuple(
        rad.index_of(radical_closure(A, principal_ideal(A, x)).mask)
        for x in range(A.n)
    )
    return check_universal_property(
        A,
        source=rad.lattice,
        universal_values=universal,
        member_masks=tuple(I.mask for I in rad.ideals),
        target=F,
        target_semiring=build_from_quantale(F),
        strict_zero=strict_zero,
    )


@dataclass(frozen=True)
class ReflectionResult:
    """The distributive-lattice reflection of an ordered semiring.

    Realized as the radical frame: at finite scale every ideal of the
    finite reflection lattice is a principal downset, so the lattice
    presented by the carrier generators collapses onto the radical ideals.
    ``universal_map`` sends each element to its radical principal ideal;
    ``radical_iso`` is the witness bijection onto the radical frame.
    """

    owner: FiniteOrderedSemiring
    lattice: FiniteLattice
    universal_map: tuple[int, ...]
    radical_iso: tuple[int, ...]
    targets_checked: int


def small_distributive_lattices() -> list[FiniteLattice]:
    """The stock of reflection test targets: every shape up to six elements
    that the universal-property check exercises."""
    from .builders import chain_frame, diamond_frame, downset_frame

    return [
        chain_frame(1),
        chain_frame(2),
        chain_frame(3),
        diamond_frame(),
        downset_frame(3, [(0, 1)], name="grid2x3"),
    ]


def distributive_reflection(
    A: FiniteOrderedSemiring,
    rad: Optional[RadicalFrame] = None,
    targets: Optional[Sequence[FiniteLattice]] = None,
) -> ReflectionResult:
    """The universal distributive lattice receiving A, with its validation.

    Checks the five presentation relations on the generator images, that
    the images generate the lattice, distributivity, and -- against every
    target lattice -- that composition with the universal map is a
    bijection from lattice homomorphisms onto subadditive morphisms.
    """
    rad = rad or enumerate_radical_ideals(A)
    lattice = rad.lattice
    gen = tuple(
        rad.index_of(radical_closure(A, principal_ideal(A, x)).mask)
        for x in range(A.n)
    )

    for x in range(A.n):
        for y in range(A.n):
            if A.le(x, y) and not lattice.le(gen[x], gen[y]):
                raise PresentationViolation(
                    f"{A.name}: order relation broken at {A.labels[x]} <= {A.labels[y]}"
                )
            if not lattice.le(gen[A.add[x][y]], lattice.join[gen[x]][gen[y]]):
                raise PresentationViolation(
                    f"{A.name}: sum relation broken at {A.labels[x]} + {A.labels[y]}"
                )
            if gen[A.mul[x][y]] != lattice.meet[gen[x]][gen[y]]:
                raise PresentationViolation(
                    f"{A.name}: product relation broken at {A.labels[x]} * {A.labels[y]}"
                )
    if gen[A.zero] != lattice.bottom:
        raise PresentationViolation(f"{A.name}: zero generator is not the bottom")
    if gen[A.one] != lattice.top:
        raise PresentationViolation(f"{A.name}: unit generator is not the top")
    if not lattice.is_distributive:
        raise PresentationViolation(f"{A.name}: reflection lattice not distributive")

    span = set(gen)
    while True:
        grown = set(span)
        for a in span:
            for b in span:
                grown.add(lattice.join[a][b])
                grown.add(lattice.meet[a][b])
        if grown == span:
            break
        span = grown
    if span != set(range(lattice.n)):
        raise PresentationViolation(
            f"{A.name}: generator images do not generate the reflection lattice"
        )

    member_masks = tuple(I.mask for I in rad.ideals)
    checked = 0
    for D in targets if targets is not None else small_distributive_lattices():
        try:
            check_universal_property(
                A,
                source=lattice,
                universal_values=gen,
                member_masks=member_masks,
                target=D,
                target_semiring=build_from_quantale(D),
            )
        except UniversalityFailure as exc:
            raise PresentationViolation(str(exc)) from exc
        checked += 1

    return ReflectionResult(
        owner=A,
        lattice=lattice,
        universal_map=gen,
        radical_iso=tuple(range(lattice.n)),
        targets_checked=checked,
    )


@dataclass(frozen=True)
class CoherenceReport:
    """Witness that the radical frame is the ideal frame of the reflection."""

    instance: str
    radical_count: int
    reflection_ideal_count: int


def check_coherence(
    A: FiniteOrderedSemiring,
    reflection: Optional[ReflectionResult] = None,
) -> CoherenceReport:
    """Verify the explicit frame isomorphism between the radical frame and
    the ideal quantale of the distributive reflection.

    Every ideal of a finite distributive lattice is a principal downset, so
    the map sending a radical ideal to its downset is a bijection; order
    preservation both ways and agreement of the join/meet tables are
    checked exhaustively.  At finite scale this is the whole content of
    coherence: every finite frame is the ideal frame of a finite
    distributive lattice.
    """
    reflection = reflection or distributive_reflection(A)
    L = reflection.lattice
    D = build_from_quantale(L)
    from .ideals import enumerate_ideals as _enum

    iq = _enum(D)
    if len(iq.ideals) != L.n:
        raise IsoFailure(
            f"{A.name}: reflection has {L.n} elements but {len(iq.ideals)} ideals"
        )
    forward = tuple(iq.index_of(L.lower_masks[r]) for r in range(L.n))
    if len(set(forward)) != L.n:
        raise IsoFailure(f"{A.name}: downset map is not injective")
    for r in range(L.n):
        for s in range(L.n):
            if L.le(r, s) != iq.lattice.le(forward[r], forward[s]):
                raise IsoFailure(f"{A.name}: downset map does not preserve order")
            if forward[L.join[r][s]] != iq.lattice.join[forward[r]][forward[s]]:
                raise IsoFailure(f"{A.name}: downset map does not preserve joins")
            if forward[L.meet[r][s]] != iq.lattice.meet[forward[r]][forward[s]]:
                raise IsoFailure(f"{A.name}: downset map does not preserve meets")
    return CoherenceReport(
        instance=A.name,
        radical_count=L.n,
        reflection_ideal_count=len(iq.ideals),
    )
