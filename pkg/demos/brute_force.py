"""Explicit groups agree with the character computation."""

from wreathgelfand.chartable import cyclic_table, symmetric_table
from wreathgelfand.crack import is_gelfand, multiplicity_square_sum
from wreathgelfand.oracle import build_wreath, convolution_commutes, permutations_group

for kind, size, table in [("cyclic", 2, cyclic_table(2)), ("cyclic", 3, cyclic_table(3)),
                          ("symmetric", 3, symmetric_table(3))]:
    for n in (1, 2, 3):
        G, K = build_wreath(kind, size, n)
        res = convolution_commutes(G, K)
        print(f"{G.name:10} |G|={G.order:5}  double cosets {res.double_cosets}"
              f"  sum a^2 {multiplicity_square_sum(table, n)}"
              f"  commutes {res.commutes}  verdict {is_gelfand(table, n).verdict}")

# with K trivial the Hecke algebra is the group algebra itself
S3 = permutations_group(3)
print("\nS3 with trivial K commutes:", convolution_commutes(S3, [S3.identity]).commutes)
