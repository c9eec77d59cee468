"""The two-letter form of the symmetry statement.

Words in 1, 2 and blanks, with no 2 sitting exactly n places before a 1,
have the same distribution of short-range inversions whichever of the two
letters is more frequent.
"""

from ribbonlr.words import enumerate_words, linv_series, local_inversions

m, form, n = 6, {3}, 2
print(f"length {m}, blank at {sorted(form)}, n = {n}")
for weight, series in sorted(linv_series(m, form, n).items()):
    print(f"  weight {weight}: {series}")

print("\nwords of weight (3, 2):")
for w in enumerate_words(m, form, (3, 2), n):
    print(f"  {w}  linv {local_inversions(w)}")
