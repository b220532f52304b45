"""Contraction of a cyclic code of length 20 over Z9 into the self-dual
negacyclic code of length 10."""

from chaincodes import (
    code_from_partition,
    concatenate,
    concatenation_code,
    context,
    contract_code,
    contract_dual,
    galois_ring,
    make_partition,
    weight,
)

Z9 = galois_ring(3, 1, 2)
ctx = context(Z9, 20)
p = make_partition(
    ctx.universe, 2, {0: 2, 1: 0, 2: 2, 4: 2, 5: 1, 10: 2, 11: 2}
)
c = code_from_partition(ctx, p)
print("cyclic code of length 20, levels", p.to_assignment())
print("  type:", list(c.type), " |C| =", c.cardinality)

res = contract_code(c, 2)
k = res.code
print("contracted with u = 2:")
print("  gamma =", list(res.gamma.coords), "(= -1: negacyclic)  omega =", res.omega)
print("  K type:", list(k.type), " |K| =", k.cardinality, "= 3^10")
print("  self-dual:", k.same_code(k.dual()))
print("  star-dual route agrees:", contract_dual(res, 2).same_code(k.dual()))
print("  concatenation restores C:", concatenation_code(k, res.gamma, 2).same_code(c))

w = next(iter(k.sf_rows))
print("weight relation on a generator: wt =", weight(w),
      " doubled after concatenation:", weight(concatenate(w, res.gamma, 2)))
