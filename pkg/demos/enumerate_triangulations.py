"""
Enumerating small triangulations
================================

Flip-graph search from a stacked triangulation, deduplicated by a canonical
rotation-system code.
"""

import time

from trilec import degree_sequence_cases, enumerate_triangulations, filter_by_profile

for n in range(4, 12):
    t0 = time.perf_counter()
    s = enumerate_triangulations(n)
    print(f"n={n:2d}  {len(s):5d} triangulations  {time.perf_counter() - t0:.2f}s")

# the degree profiles a maximum-degree-5 triangulation can have
cases = degree_sequence_cases()
print([c.as_tuple() for c in cases])

# how many triangulations realise each profile of 11 or fewer vertices
for i, c in enumerate(cases, start=1):
    if c.order <= 11:
        hits = filter_by_profile(enumerate_triangulations(c.order), c)
        print(f"case {i:2d} {c.as_tuple()}  {len(hits)}")
