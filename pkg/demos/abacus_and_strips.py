"""Cores, quotients and the tiling of a horizontal ribbon strip.

A partition is read off as beads on an abacus with n runners.  Sliding
beads down their runners as far as they go leaves the n-core; what each
runner held on its own is a component of the n-quotient.
"""

from ribbonlr.shapes import Partition, SkewShape, core_quotient, format_partition, is_horizontal_strip, strip_ribbons

lam = Partition([5, 4, 2, 1])
for n in (2, 3):
    cq = core_quotient(lam, n)
    quot = " | ".join(format_partition(q) or "-" for q in cq.quotient)
    print(f"{lam} with n={n}: core ({cq.core}), quotient [{quot}]")

# A horizontal strip has one tiling with every ribbon head on its top edge.
outer, inner = Partition([4, 4, 1, 1]), Partition([3, 1])
shape = SkewShape(outer, inner)
print(f"\n{shape} is a horizontal 2-ribbon strip: {is_horizontal_strip(shape, 2)}")
for head, spin in sorted(strip_ribbons(outer, inner, 2)):
    kind = "vertical" if spin else "horizontal"
    print(f"  ribbon with head on diagonal {head}: {kind} (spin {spin})")
