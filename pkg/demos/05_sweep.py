# Every check over every cell up to i = 6, then a JSON report for one cell.
import time

from agkey.verifier import CHECKS, summary_line, sweep, verify_theorem22

for name in CHECKS:
    t0 = time.perf_counter()
    reports = sweep(6, [name])
    print(f"{name:13} {summary_line(reports):22} {time.perf_counter() - t0:.2f}s")

print(verify_theorem22(6, 4).to_json(with_time=False))
