# Classifying the ideals of small residue rings

from phir import PhiEmpty, PhiPower, PhiZero, classify, enumerate_ideals, is_r_ideal, principal, ring_from_text, zerodivisors

R = ring_from_text("Z/12")
print("ring:", R)
print("zero divisors:", sorted(zerodivisors(R)))

print("\nproper ideals and their r-ideal verdicts")
for I in enumerate_ideals(R, proper_only=True):
    print(f"  {I}: {is_r_ideal(R, I)}")

# every class at once, for phi in {empty, zero, I^2, I^3}
print("\nfull classification of <4> in Z/12")
report = classify(R, principal(R, 4), phis=[PhiEmpty(), PhiZero(), PhiPower(2), PhiPower(3)])
for cls, verdict in report.results:
    print(f"  {str(cls):<24} {verdict}")

# a product ring: its ideals are products of component ideals
P = ring_from_text("Z/4 x Z/9")
ideals = enumerate_ideals(P, proper_only=True)
print(f"\n{P} has {len(ideals)} proper ideals")
print("all r-ideals:", all(is_r_ideal(P, J).ok for J in ideals))
