"""DOT rendering of ideal and radical Hasse diagrams and spectra.

Diagrams carry only the cover relation, drawn bottom to top; node names are
the canonical member-set labels, so output is byte-identical across runs.
For a spectrum the edges are the covers of the specialization order, which
for prime ideals is containment.
"""

from __future__ import annotations

from .core import FiniteOrderedSemiring
from .errors import LabelError
from .ideals import enumerate_ideals
from .radicals import enumerate_radical_ideals
from .spectrum import enumerate_primes

TARGETS = ("idl", "rad", "spec")


def _digraph(kind: str, labels, covers) -> str:
    lines = [f"digraph {kind} {{", "  rankdir=BT;"]
    lines.extend(f'  "{lab}";' for lab in labels)
    lines.extend(f'  "{labels[i]}" -> "{labels[j]}";' for i, j in covers)
    lines.append("}")
    return "\n".join(lines) + "\n"


def _cover_pairs(masks) -> list[tuple[int, int]]:
    out = []
    for i, small in enumerate(masks):
        for j, big in enumerate(masks):
            if i == j or small & ~big:
                continue
            if not any(
                k not in (i, j) and small & ~m == 0 and m & ~big == 0
                for k, m in enumerate(masks)
            ):
                out.append((i, j))
    return out


def emit_dot(target: str, A: FiniteOrderedSemiring) -> str:
    """Render the requested structure of ``A`` as a DOT digraph."""
    if target == "idl":
        iq = enumerate_ideals(A)
        return _digraph("ideals", [I.label for I in iq.ideals], iq.lattice.covers)
    if target == "rad":
        rad = enumerate_radical_ideals(A)
        return _digraph(
            "radicals", [I.label for I in rad.ideals], rad.lattice.covers
        )
    if target == "spec":
        primes = enumerate_primes(A)
        return _digraph(
            "spectrum",
            [P.label for P in primes],
            _cover_pairs([P.mask for P in primes]),
        )
    raise LabelError(f"dot target must be one of {TARGETS}, not {target!r}")
