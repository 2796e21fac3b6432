"""Exercise the proven bounds over seeded random ensembles.

Each check re-derives the quantity it tests (degree bounds, root windows,
sum rule, integrality) and reports violations as data rather than raising,
so a run always produces a full report.

Run:  python3 demos/sampling_bounds.py
"""

from logroots import SampleSpec, conjecture_scan, sample_and_check

suites = [
    (SampleSpec(count=2000, dim=2, ensemble="generic", seed=101),
     ["chern-bound-dim2", "root-bound-dim2", "sum-rule", "integrality"]),
    (SampleSpec(count=500, dim=2, ensemble="unitary", seed=102),
     ["strict-bound-unitary-dim2", "root-bound-dim2"]),
    (SampleSpec(count=400, dim=3, ensemble="blockUpperTriangular", seed=103),
     ["reducible-bound-dim3", "nonroots", "sum-rule"]),
    (SampleSpec(count=100, dim=3, ensemble="rationalAngle", seed=104),
     ["exact-float-agreement"]),
]

for spec, checks in suites:
    report = sample_and_check(spec, checks)
    print(report.summary())
    for v in report.violations[:5]:
        print(f"    violation: {v}")

print("\nconjectured window scan (dim 3, findings are informational):")
report = conjecture_scan(SampleSpec(count=300, dim=3, ensemble="generic",
                                    seed=105))
print(" ", report.findings[-1])
