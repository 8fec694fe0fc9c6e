"""Run the inequality checks over every small candidate in one dimension.

For coordinate sum at most 3 the Stanley and Hibi inequalities (plus the
basic shape constraints) decide realizability exactly; candidates with a
larger sum get a distinct out-of-scope verdict because the inequalities stop
being sufficient there.
"""

from ehrhart import Verdict, enumerate_candidates, inequality_report

DIM = 6

yes = no = 0
for cand, decision in enumerate_candidates(DIM, max_sum=3):
    mark = {"yes": "+", "no": "-"}[decision.verdict.value]
    if decision.verdict is Verdict.YES:
        yes += 1
    else:
        no += 1
    print(f"{mark} {cand}  {decision.reason}")

print(f"\ndimension {DIM}: {yes} realizable, {no} rejected")

# The famous sum-4 sequence: every inequality passes, yet it is not the
# delta-vector of any 7-dimensional polytope, so the checks alone cannot
# decide it.
report = inequality_report((1, 0, 1, 0, 1, 1, 0, 0))
print("\n(1,0,1,0,1,1,0,0): basic/stanley/hibi all pass ->",
      report.basic.ok and report.stanley.ok and report.hibi.ok,
      "(sum 4 is outside the decidable range)")
