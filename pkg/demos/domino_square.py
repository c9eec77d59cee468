"""Everything about the 2x2 square tiled by dominoes.

Four semistandard fillings with labels 1 and 2 exist.  Their spins give the
ribbon function, its Schur expansion gives the q-Littlewood-Richardson
coefficients, and the Yamanouchi fillings give the same numbers directly.
"""

from ribbonlr.domino import qlr_yamanouchi, is_lambda_yamanouchi
from ribbonlr.functions import ribbon_function
from ribbonlr.polynomials import schur_expand
from ribbonlr.shapes import EMPTY, Partition, SkewShape
from ribbonlr.tableaux import enumerate_tableaux, inversions, reading_word, spin

square = SkewShape(Partition([2, 2]))

print("fillings of the square:")
for t in enumerate_tableaux(square, 2, 2):
    word = reading_word(t).letters
    heads = ", ".join(f"{r.label}@{r.head_diag}" for r in t.ribbons)
    yam = "Yamanouchi" if is_lambda_yamanouchi(word, EMPTY) else ""
    print(f"  weight {t.weight}  heads {heads:12s} spin {spin(t)}  inv {inversions(t)}  word {word} {yam}")

g = ribbon_function(square, 2, 2)
print(f"\nG = {g}")
print("Schur expansion:", {str(k): str(v) for k, v in schur_expand(g).items()})
print("from Yamanouchi tableaux:", {str(k): str(v) for k, v in qlr_yamanouchi(square, EMPTY).coeffs.items()})
