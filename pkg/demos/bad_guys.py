"""Bad Guys cancel in pairs.

Every domino tableau whose reading word is not ν-Yamanouchi is paired with
another one of the same spin whose alternant has the opposite sign, so only
the Yamanouchi tableaux survive in the alternant sum.  A Bad Guy paired
with itself has a repeated exponent, so its alternant is already zero.
"""

from ribbonlr.domino import bad_involution, cancellation_sides, find_bad_pair, num_variables, staircase_shift
from ribbonlr.shapes import Partition, SkewShape
from ribbonlr.tableaux import enumerate_tableaux, reading_word, spin

shape, nu = SkewShape(Partition([4, 2]), Partition([])), Partition([1])
m = num_variables(shape, nu)
tableaux = enumerate_tableaux(shape, 2, m)
bad = [t for t in tableaux if find_bad_pair(t, nu)]
print(f"{shape} with nu = ({nu}), {m} variables: {len(tableaux)} tableaux, {len(bad)} Bad Guys\n")

shown = set()
for t in bad:
    if t in shown:
        continue
    d = bad_involution(t, nu)
    shown.update({t, d})
    pair = find_bad_pair(t, nu)
    partner = "itself" if d == t else str(reading_word(d).letters)
    print(f"  {reading_word(t).letters} <-> {partner:9s}   spin {spin(t)}, "
          f"k={pair.row_index}, exponents {staircase_shift(t.weight, nu, m)} <-> {staircase_shift(d.weight, nu, m)}")

everything, survivors = cancellation_sides(shape, nu, m)
print(f"\nalternant sum over all tableaux:        {everything}")
print(f"alternant sum over Yamanouchi tableaux: {survivors}")
