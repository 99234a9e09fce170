# Exact q-series: shifted factorials, Gaussian binomials and the key identity.
from agkey.qseries import (
    gaussian, key_identity_lhs, key_identity_term, lemma2_lhs_cleared,
    lemma2_rhs_cleared, pochhammer_shifted,
)

# (q^7; q)_3 = (1 - q^7)(1 - q^8)(1 - q^9)
print("(q^7;q)_3 =", pochhammer_shifted(7, 3))

# [4 2] counts partitions in a 2x2 box; at q = 1 it is binomial(4, 2)
g = gaussian(4, 2)
print("[4 2]     =", g, "  at q=1:", g(1))

# the key identity for i = 9, j = 6, summand by summand
i, j = 9, 6
for k in range(j + 1):
    print(f"  k={k}:", key_identity_term(i, j, k))
print("sum       =", key_identity_lhs(i, j))

# the companion identity with denominators cleared; both sides are a monomial
print("lemma (4,3):", lemma2_lhs_cleared(4, 3), "==", lemma2_rhs_cleared(4, 3))
