"""Normal forms of a few products in the skein algebra of the 4-holed disk."""

from skein4 import enumerate_basis, mul_normal, normalize, rotate_normal

# a light-light swap produces lower-order corrections
print("t23*t12 =", normalize("t23*t12"))

# the two diagonal curves multiply into a sum of twelve basis words
d = normalize("t13*t24")
print(f"t13*t24 has {len(d)} terms:")
print(" ", d)

# products of normal elements stay normal; t0 is central
sq = mul_normal("t123", "t123")
print(f"t123^2 has {len(sq)} terms, the longest being",
      ", ".join(m.name() for m, _ in sq.sorted_terms()[-3:]))
print("t0*t234 == t234*t0:", mul_normal("t0", "t234") == mul_normal("t234", "t0"))

# rotating the disk permutes generators; normal forms follow
# sigma sends t24*t12 to t13*t23
e = normalize("t24*t12")
print("sigma(nf(t24*t12)) == nf(t13*t23):", rotate_normal(e, 1) == normalize("t13*t23"))

basis = enumerate_basis(2)
print(f"{len(basis)} basis monomials with at most two factors, e.g.",
      ", ".join(m.name() or "1" for m in basis[:6]))
