# The weight-preserving map A(i,k) x B(j,k) -> O(i,j,k), checked on one cell.
from agkey.bijection import phi_bar, phi_bar_inv
from agkey.partitions import OContext, enumerate_A, enumerate_B, enumerate_O

ctx = OContext(9, 6, 3)
print("overline weight:", ctx.weight)

lam = phi_bar((8, 7), (3, 3, 2), ctx)
print("phi_bar((8,7), (3,3,2)) =", lam, "  inverse:", phi_bar_inv(lam, ctx))

image = {phi_bar(g, b, ctx) for g in enumerate_A(9, 3) for b in enumerate_B(6, 3)}
members = set(enumerate_O(ctx))
print(f"|A x B| = {len(enumerate_A(9, 3)) * len(enumerate_B(6, 3))}, "
      f"|image| = {len(image)}, |O(9,6,3)| = {len(members)}, equal: {image == members}")
