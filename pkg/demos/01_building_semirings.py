"""Building and validating finite ordered semirings.

Every construction funnels through the exhaustive validator, so nothing
here is trusted: all monoid, distributivity, and monotonicity laws are
checked over every element triple.
"""

import osr
from osr import AxiomViolation, RawSemiringDescription, validate

# Rings are discretely ordered semirings.
z6 = osr.build_zmod(6)
print(z6, "discrete:", z6.is_discrete)

# Distributive lattices are ordered semirings with join as addition.
chain3 = osr.build_chain_lattice(3)
print(chain3, "0 <= 2:", chain3.le(0, 2))

# The downsets of any small poset form one (Birkhoff).
diamond = osr.build_dlat_from_poset(2, [])
print(diamond, "carrier:", diamond.labels)

# Saturating arithmetic stays a semiring; the validator re-proves it.
print(osr.build_truncated_naturals(2), osr.build_truncated_maxplus(1))

# Signed arithmetic does not: multiplication is not monotone once
# negatives are ordered below zero.  The validator pinpoints the law.
lab = ("-1", "0", "1")
val = {"-1": -1, "0": 0, "1": 1}
name = {v % 3: k for k, v in val.items()}
signed = RawSemiringDescription(
    name="signed",
    elements=lab,
    le="chain",
    zero="0",
    one="1",
    add_table=tuple(tuple(name[(val[a] + val[b]) % 3] for b in lab) for a in lab),
    mul_table=tuple(tuple(name[(val[a] * val[b]) % 3] for b in lab) for a in lab),
)
try:
    validate(signed)
except AxiomViolation as exc:
    print("rejected:", exc)

# Order duals flip the picture: the dual of a chain lattice puts the
# multiplicative unit below zero, killing every prime ideal.
dual = osr.build_dual_chain(2)
print(dual, "1 <= 0:", dual.le(dual.one, dual.zero))
