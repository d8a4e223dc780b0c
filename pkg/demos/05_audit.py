"""
Claim audit
===========

Run every registered claim check and print the report table.
"""

# %%
from fractions import Fraction

from shiftalg import AuditConfig, render_report, run_audit

cfg = AuditConfig(window=4, eps=Fraction(3, 10))
reports = run_audit(cfg)
print(render_report(reports, "text"))

# %%
counts = {}
for r in reports:
    counts[r.status] = counts.get(r.status, 0) + 1
print(counts)
