"""
Verdicts against exhaustive search
==================================

Each parameter tuple gets a verdict from a fixed list of rules.  On small
spaces an exact-cover search can confirm or refute it directly.
"""

from collections import Counter

from nrtperfect import Params, SearchConfig, search_perfect, verdict
from nrtperfect.feasibility import scan

for args in [(2, 2, 2, 1), (2, 3, 2, 1), (2, 4, 2, 2), (2, 5, 2, 2), (2, 4, 3, 2), (2, 7, 1, 1)]:
    print(args, verdict(*args).summary())

# a small table
tally = Counter(v.outcome.value for v in scan(2, 6, 4, 8))
print(dict(tally))

# search finds the lifted repetition code and refutes delta >= 0 tuples;
# zero nodes means counting alone settled it, (2,2,3,2) needs a real search
for p in (Params(2, 3, 2, 1), Params(2, 3, 2, 2), Params(2, 2, 2, 1), Params(2, 2, 3, 2)):
    out = search_perfect(p)
    size = len(out.code) if out.found else "-"
    print(p, out.status.value, "|C| =", size, "nodes:", out.nodes_explored)

# a tiny node budget leaves the question open rather than answering it
out = search_perfect(Params(2, 3, 3, 1), SearchConfig(max_nodes=5))
print("budget 5:", out.status.value)
