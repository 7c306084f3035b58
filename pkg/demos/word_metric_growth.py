"""The generator metric on irreducibles: balls, spheres, quasi-isometry.

A self-conjugate generator containing the unit induces a metric by
counting how many tensor factors of the generator are needed to connect
two irreducibles.  On a group dual with the standard symmetric set this
is the word metric; on interval families it measures label separation.
"""

import fusionkit as fk

f2 = fk.GroupDualSystem([None, None], names=["s", "t"])
v = fk.fundamental(f2)
print("free group dual, v =", fk.format_element(f2, v))
print("  growth:", fk.growth_table(f2, v, f2.unit, 6))
print("  d(e, s t^-1 s^2) =",
      fk.distance(f2, v, f2.unit, f2.parse_label("s t^-1 s^2")))

ao = fk.AoSystem(3)
vo = fk.parse_element(ao, "r1 + r2")
print("\ninterval family n = 3, v = r1 + r2")
print("  d(r1, r4) =", fk.distance(ao, vo, ao.r(1), ao.r(4)))
print("  ball(r1, 2) =", sorted(ao.format_label(l) for l in fk.ball(ao, vo, ao.r(1), 2)))

wo = fk.parse_element(ao, "r1 + r3")
pairs = [(ao.r(a), ao.r(b)) for a in range(1, 7) for b in range(1, 7)]
report = fk.quasi_isometry_check(ao, vo, wo, pairs)
print(f"  comparison with w = r1 + r3: K = {report.K}, holds = {report.holds}, "
      f"max ratio = {report.max_ratio:.3f}")

# The free unitary family carries the same construction through the
# generator 1 + u + conj(u); no closed form is asserted here, the engine
# simply computes the balls.
au = fk.AuSystem(2)
vu = fk.parse_element(au, "e + a + b")
print("\nfree unitary family, v = e + a + b")
print("  growth:", fk.growth_table(au, vu, au.unit, 4))
print("  d(e, abab) =", fk.distance(au, vu, au.unit, au.word("abab")))
