"""Tour of finite chain ring arithmetic: Z9 and F_3[u]/(u^2).

Both rings share the invariants (q, s) = (3, 2) but are not isomorphic;
everything downstream (codes, duality, contraction) only sees (q, s).
"""

from chaincodes import eu_ring, galois_ring

for ring in (galois_ring(3, 1, 2), eu_ring(3, 1, 2)):
    print(ring)
    print("  theta =", list(ring.theta.coords), " theta^2 =", list((ring.theta * ring.theta).coords))
    print("  Teichmuller set:", [list(b.coords) for b in ring.teichmuller_set()])
    a = ring.element_at(5)
    digits = ring.theta_adic_expansion(a)
    print(
        "  element", list(a.coords), "has theta-adic digits",
        [list(d.coords) for d in digits],
    )
    units = [b for b in ring.elements() if ring.is_unit(b)]
    print("  unit group order:", len(units), "=", ring.unit_group_order())
    u = units[-1]
    print(
        "  inverse of", list(u.coords), "is", list(ring.inv(u).coords),
        "(product:", list((u * ring.inv(u)).coords), ")",
    )
    print()

print("Z8 = GR family with q = 2, s = 3:")
z8 = galois_ring(2, 1, 3)
for a in z8.elements():
    print(
        "  ", a.coords[0], "->",
        [d.coords[0] for d in z8.theta_adic_expansion(a)],
    )
