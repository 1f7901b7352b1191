"""Where the wreath-product pairs stop being Gelfand pairs."""

import time

from wreathgelfand.chartable import cyclic_table, dihedral_table, load_table, symmetric_table
from wreathgelfand.cli import DATA_DIR
from wreathgelfand.crack import cracking_point

groups = [
    (symmetric_table(3), 7),
    (symmetric_table(4), 5),
    (symmetric_table(5), 4),
    (symmetric_table(6), 3),
    (symmetric_table(7), 3),
    (dihedral_table(5), 7),
    (dihedral_table(7), 7),
    (load_table((DATA_DIR / "gl23.json").read_text()), 4),
    (cyclic_table(4), 4),
]

for table, n_max in groups:
    start = time.perf_counter()
    rep = cracking_point(table, n_max)
    elapsed = time.perf_counter() - start
    last = rep.levels[-1]
    wit = f"  witness {last.witness.pi} rho={last.witness.rho}" if last.witness else ""
    print(f"{table.name:8} |G|={table.order:4}  {rep.as_dict()['result']:24} {elapsed:5.2f}s{wit}")
