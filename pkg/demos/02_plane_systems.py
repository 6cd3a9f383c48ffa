"""Plane curves through fat points: expected dimensions and reductions.

Quintics with two triple points and a double point reduce by a Bezout
split and then hit the double-point classification; quartics through five
general double points are the classical exception where the expected
dimension is zero but a double conic survives.
"""

from leflab.linsys import (
    PlaneSystem,
    bezout_step,
    cremona_step,
    expected_dim,
    fatpoint_dim,
    system_dim,
)

quintic = PlaneSystem(5, (3, 3, 2))
print(quintic, "expected", expected_dim(quintic), "actual", fatpoint_dim(quintic))

dim, trace = system_dim(quintic)
print("reduction to dimension", dim)
for step in trace.steps:
    target = step.after if step.after is not None else f"[{step.reason} -> {step.value}]"
    print(f"  {step.rule:20s} {step.before}  ->  {target}")

print()
exceptional = PlaneSystem(4, (2, 2, 2, 2, 2))
print(exceptional, "expected", expected_dim(exceptional), "actual", fatpoint_dim(exceptional))
print("the unique curve is the double conic through the five points")

print()
sys_ = PlaneSystem(4, (2, 2, 2))
print("one Cremona step:", sys_, "->", cremona_step(sys_))
print("dimensions agree:", fatpoint_dim(sys_), "==", fatpoint_dim(cremona_step(sys_)))

sys_ = PlaneSystem(3, (2, 2))
print("one Bezout split:", sys_, "->", bezout_step(sys_))
print("dimensions agree:", fatpoint_dim(sys_), "==", fatpoint_dim(bezout_step(sys_)))
