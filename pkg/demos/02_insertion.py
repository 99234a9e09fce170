# Joichi-Stanton insertion: a distinct partition alpha is pushed into beta,
# one part at a time, producing an overpartition.
from agkey.bijection import insertion_trace, js_extract
from agkey.cli import render

alpha, beta = (5, 3, 0), (9, 6, 5, 2, 2, 0)
trace = insertion_trace(alpha, beta)
print("beta          ", trace.start)
for m, o in trace.steps:
    print(f"insert {m:<7}", o)

lam = trace.result
print("\nback again:", js_extract(lam))

# Ferrers diagram with every overline carrying weight 3
print()
print(render(lam, weight=3))
