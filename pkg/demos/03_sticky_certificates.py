"""
Certificates of non-existence
=============================

If every ``R``-ball containing some point ``m`` outside ``B(R)`` also meets
``B(R)``, then ``B(R)`` cannot be one tile of a perfect tiling.  Such an ``m``
exists whenever ``delta = (r+1)(R+1) - sr - 1 >= 1``.  At ``delta = 0`` one
point is not enough, but a pair of points is.
"""

from nrtperfect import (
    Params,
    audit_sticky_set,
    build_sticky_set,
    build_sticky_vector,
    is_r_closed,
    sticky_vectors,
    verify_sticky_vector,
    zero_ball,
)

p = Params(q=2, s=3, r=2, R=3)
print("delta =", p.delta, " t =", p.t)

cert = build_sticky_vector(p)
print(f"m (ell={cert.ell}, h={cert.h}):", cert.m.to_text())
print("every ball through m meets B(R):", verify_sticky_vector(cert))

# the full set of sticky vectors, by closure
found = sticky_vectors(p)
print(len(found), "sticky vectors; m among them:", cert.m in found)

# delta = 0: m has R+1 rows e_1, m' is its cyclic row shift
p0 = Params(q=3, s=4, r=2, R=2)
pair = build_sticky_set(p0)
print("m  =", pair.m.to_text())
print("m' =", pair.m_prime.to_text())
audit = audit_sticky_set(pair)
print(f"{audit.centers_m} centers avoid B(R) around m, {audit.centers_m_prime} around m'")
print("no disjoint pair covers both:", audit.sticky, " proof side conditions:", audit.proof_conditions_hold)

# For delta <= 0 the single-point argument really fails: B(R) is R-closed.
for s in (4, 5):
    q = Params(2, s, 2, 2)
    print(f"s={s}, delta={q.delta}: B(2) is 2-closed:", is_r_closed(zero_ball(q), 2))
