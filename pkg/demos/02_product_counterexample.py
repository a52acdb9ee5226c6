# Componentwise 2-almost r-ideals: finite products versus Z x Z/2

from phir import IdealClass, is_phi_r_ideal, phi_apply, product_power, ring_from_text, validate_witness, verify
from phir.phi import member

# on a finite product (a total quotient ring) every proper ideal passes
R = ring_from_text("Z/4 x Z/9")
rep = verify("product-tqr", R, {"n": 2})
print(f"{R}: {rep.instances} ideals checked, conclusion {rep.conclusion}")

# Z is not a total quotient ring, so the equivalence can break
R = ring_from_text("Z x Z/2")
rep = verify("product-tqr", R, {"n": 2})
print(f"\n{R}: conclusion {rep.conclusion}")
I, x, y = rep.conclusion.witness
phi = product_power(2, 2)
xy = R.mul(x, y)
print("ideal:", I)
print("phi(I):", phi_apply(phi, I))
print(f"x = y = {x}, regular: {R.is_regular(x)}")
print(f"xy = {xy} lies in I but not in phi(I): {xy in I and not member(xy, phi_apply(phi, I))}")
print("y in I:", y in I)

v = is_phi_r_ideal(R, I, phi)
print("\ndirect check:", v)
print("witness validates:", validate_witness(IdealClass("phi-r", phi), R, I, v))
