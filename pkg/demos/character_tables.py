"""Character tables: build, check, save, reload."""

from wreathgelfand.chartable import (
    dihedral_table,
    load_table,
    render_table,
    symmetric_table,
    tables_close,
    validate,
)
from wreathgelfand.cli import main

# S5 straight from Murnaghan-Nakayama
main(["chartable", "symmetric:5"])

s5 = symmetric_table(5)
row = s5.character(s5.irrep_index("3.1.1"))
print("\nthe 6-dimensional character:", row)

# dihedral values are irrational, so this one runs in floating point
d5 = dihedral_table(5)
report = validate(d5)
print(f"\n{d5.name}: backend {d5.backend}, residuals {report.row_residual:.1e} / "
      f"{report.column_residual:.1e}")

# a table survives a trip through its JSON form
text = render_table(d5)
print("round trip ok:", tables_close(d5, load_table(text)))

# the bundled GL(2,3) table, validated on load
main(["validate-table", "gl23.json"])
