"""Cyclotomic cosets and partitions: the combinatorial skeleton of cyclic
codes.  Reproduces the coset layout at ell = 20, q = 3 and counts the
cyclic codes it parametrizes."""

from chaincodes import (
    CosetUniverse,
    class_count_formula,
    cosets,
    make_partition,
    partition_count,
    representatives,
)

universe = CosetUniverse(20, 3)
print("cosets mod 20 under multiplication by 3:")
for c in cosets(universe):
    print("  ", c.sorted())
print("representatives:", representatives(universe))
print("count:", len(cosets(universe)), "=", class_count_formula(universe))

print()
print("a (3, 2)-cyclotomic partition assigns each coset a level 0..2:")
p = make_partition(universe, 2, {0: 2, 1: 0, 2: 2, 4: 2, 5: 1, 10: 2, 11: 2})
for t, block in enumerate(p.blocks):
    print(f"  level {t}: {block.sorted()}")
print("tilde dual levels:", p.tilde_dual().to_assignment())
print("star dual (u=2) levels:", p.star_dual(2).to_assignment())
print()
print("partitions (= cyclic codes of length 20 over a (3,2)-ring):",
      partition_count(universe, 2))
