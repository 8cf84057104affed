"""Eigenvalues of T = sum_j [theta(Z_j), theta*(Zbar_j)] for a top-degree Higgs form.

For omega = dz_1 ^ ... ^ dz_n the operator T is diagonal on holomorphic words
and its eigenvalue only depends on the degree.  We print the table, confirm
the trace vanishes, and then look at a simple 3-form in five variables where
the eigenvalue instead depends on how many blade indices a word shares.
"""

from math import comb

from higgsforms import Form, HiggsField, T_operator, f_table

for n in (3, 5, 7):
    table = f_table(n)
    row = "  ".join(f"{str(table[i]):>3}" for i in range(n + 1))
    trace = sum(comb(n, i) * table[i] for i in range(n + 1))
    print(f"n={n}: {row}   weighted trace {trace}")

n = 5
H = HiggsField(Form.dz(n, 1, 2, 3))
print("\nomega = dz1^dz2^dz3 in dimension 5")
for word in (Form.one(n), Form.dz(n, 4), Form.dz(n, 1), Form.dz(n, 1, 4), Form.dz(n, 1, 2), Form.dz(n, 1, 2, 3)):
    out = T_operator(H, word)
    (m, c), = word.items()
    eig = out.coeff(m) / c
    print(f"  T({word}) = {eig} * word   (shares {(m & 0b111).bit_count()} blade indices)")
