# The sign-reversing involution on O(i, j): every member but one is paired
# with a partner whose signed monomial cancels it.
from agkey.cli import render
from agkey.involution import classify, companion_rectangle, f_statistic, orbit_check, psi
from agkey.partitions import enumerate_O_all, parse_overpartition

i, j = 9, 6
lam = parse_overpartition("4',3',2")
mu = psi(lam, i, j)
for x in (lam, mu):
    print(f"{str(x):10} {classify(x, i, j)!s:11} f = {f_statistic(x, i, j)}  "
          f"rectangle = {companion_rectangle(x, i, j)}")
    print(render(x, i, j))
    print()

rep = orbit_check(i, j)
print("orbit check:", "PASS" if rep.passed else "FAIL", rep.counts)

# the whole of O(2, 2): nine members, paired off except for (0, 0)
for _, x in enumerate_O_all(2, 2):
    print(f"  {str(x):6} {classify(x, 2, 2)!s:11} -> {psi(x, 2, 2)}")
