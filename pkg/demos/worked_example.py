"""Three copies of S5 irreps and the multiplicity 2 they produce."""

from wreathgelfand.chartable import symmetric_table
from wreathgelfand.wreath import (
    PiMultiset,
    decompose_m_pi,
    dimension_sum_filter,
    kron_multiplicity,
    m_pi_function,
    rho_label,
    stabilizer,
)

s5 = symmetric_table(5)
six, five = s5.irrep_index("3.1.1"), s5.irrep_index("3.2")

pi = PiMultiset(s5, [six, six, five])
young = stabilizer(pi)
print("pi =", pi.label_names(), " stabilizer blocks", young.block_sizes)

for cls, value in m_pi_function(pi).values.items():
    print(f"  M_pi at {rho_label(cls):6} = {value}")

coeffs = decompose_m_pi(pi)
print("decomposition:", {rho_label(r): a for r, a in coeffs.items()})

# the trivial S2 character appears twice, so S5 wr S3 is not a Gelfand pair over the diagonal
print("tensor multiplicity of 3.2 in 3.1.1 x 3.1.1:", kron_multiplicity(s5, [six, six], five))
# the cheap filter cannot see it here
print("dimension-sum filter fires:", dimension_sum_filter(pi))
