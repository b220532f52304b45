"""From evaluation codes over the extension to cyclic codes over the base.

Builds every cyclic code of length 4 over Z9 from its partition, checks the
round trip through decomposition, and shows the trace/subring duality."""

from chaincodes import (
    LinearCode,
    decompose_cyclic,
    enumerate_cyclic_codes,
    extend,
    galois_ring,
    res_subring_code,
    sigma_image,
    trace_code,
)

Z9 = galois_ring(3, 1, 2)

print("all cyclic codes of length 4 over Z9:")
for partition, code in enumerate_cyclic_codes(Z9, 4):
    back = decompose_cyclic(code)
    print(
        f"  levels {partition.to_assignment()}  type {list(code.type)}"
        f"  |C| = {code.cardinality}  round-trip: {back == partition}"
    )

print()
ext = extend(Z9, 2)
S = ext.top
b = LinearCode(S, 2, [(S.one, ext.xi)])
print("S = GR(9, 2), B spanned by (1, xi):")
print("  sigma-invariant:", sigma_image(ext, b).same_code(b))
tr = trace_code(ext, b)
rs = res_subring_code(ext, b)
print("  trace code type:", list(tr.type), " subring subcode type:", list(rs.type))
print("  Delsarte: Tr(B^perp) == Res(B)^perp:",
      trace_code(ext, b.dual()).same_code(rs.dual()))
