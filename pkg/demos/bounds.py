"""Largest S_k irrep against twice the partition count."""

from wreathgelfand.asymptotics import first_crossover, r_ratio
from wreathgelfand.cli import main

main(["bound", "--from", "1", "--to", "16"])

# past the table, the analytic ratio takes over
k0 = first_crossover()
print(f"\nr(k) first reaches 1 at k = {k0}:")
for k in (k0 - 1, k0, 20, 50, 100):
    print(f"  r({k}) = {r_ratio(k):.6g}")
