"""Walk through the ladder reduction on the gl(8|4) showcase weight.

The weight (7,6,2,3,6,1,3,1|4,3,4,5) has atypical value 3 and a ladder of
length 4.  For each shift p we print the crystal-operator chain that turns
the inclusion question into a classical one, then decide a batch of
gl(4|1) queries with the same machinery.
"""

from primspec.super_inclusion import decide, frame, reduction_trace, theta_representative
from primspec.weights import SuperWeight

alpha = SuperWeight.parse("7,6,2,3,6,1,3,1|4,3,4,5")
f = frame(alpha)
print(f"alpha = {alpha}")
print(f"atypical value {f.a_value}, ladder positions {f.i_set}, length {f.p_value}")
print(f"run lengths {f.q_values}")
print()

for p in range(f.p_value + 1):
    beta = theta_representative(alpha, p)
    trace = reduction_trace(alpha, beta)
    ops = " ".join(s.label for s in trace.steps if s.side == "alpha")
    print(f"p = {p}: alpha-side chain  {ops}")
    print(f"        gamma = {trace.final_gamma}")
print()

print("gl(4|1) queries against J(2,3,1,2|2):")
big = SuperWeight.parse("2,3,1,2|2")
for text in ["1,2,3,3|3", "2,3,3,1|3", "3,3,2,1|3", "2,3,1,2|2", "0,1,2,3|0"]:
    small = SuperWeight.parse(text)
    record = decide(small, big)
    print(f"  J({small})  is {record.relation:>12}  (p = {record.p})")
