"""
The counterexample family, end to end
=====================================

Five n-simplices around a common (n-2)-simplex. The combinatorial audit
flags the pentagon in the central link, while the metric link test passes
for n >= 4.
"""

# %%
from npcaudit.cli import run_audit
from npcaudit.generators import counterexample
from npcaudit.io import dumps_complex

# %%
K = counterexample(4)
print(dumps_complex(K), end="")

# %%
for n in (3, 4, 5):
    checks = run_audit(counterexample(n), {"flag": True, "snpc": True, "edge-links": True})
    print(n, {c["id"]: c["pass"] for c in checks})
