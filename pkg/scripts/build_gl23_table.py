"""Write the bundled GL(2, F_3) and C_2 character-table documents.

Classes, sizes and power maps are computed from explicit 2x2 matrices over
F_3.  Character values are the standard ones for GL(2,3), keyed by element
order; the two classes of order-8 elements carry the values +-i*sqrt(2).
Run from the repository root.
"""

import itertools
import json
import math
from pathlib import Path

from wreathgelfand.chartable import cyclic_table, load_table, render_table

P = 3
DATA = Path("src/wreathgelfand/data")


def mul(a, b):
    return (
        (a[0] * b[0] + a[1] * b[2]) % P,
        (a[0] * b[1] + a[1] * b[3]) % P,
        (a[2] * b[0] + a[3] * b[2]) % P,
        (a[2] * b[1] + a[3] * b[3]) % P,
    )


def inv(a, group):
    return next(b for b in group if mul(a, b) == (1, 0, 0, 1))


def power(a, m):
    out = (1, 0, 0, 1)
    for _ in range(m):
        out = mul(out, a)
    return out


def order_of(a):
    m = 1
    while power(a, m) != (1, 0, 0, 1):
        m += 1
    return m


group = [g for g in itertools.product(range(P), repeat=4) if (g[0] * g[3] - g[1] * g[2]) % P]
assert len(group) == 48

seen, classes = set(), []
for g in group:
    if g in seen:
        continue
    cls = {mul(mul(h, g), inv(h, group)) for h in group}
    seen |= cls
    classes.append(sorted(cls))

central = {(2, 0, 0, 2)}


def key(cls):
    o = order_of(cls[0])
    return o, len(cls), cls[0] not in central, cls[0]


classes.sort(key=key)
labels = []
for cls in classes:
    o = order_of(cls[0])
    labels.append(f"{o}{'AB'[sum(1 for l in labels if l.startswith(str(o)))]}")
index = {g: i for i, cls in enumerate(classes) for g in cls}
exponent = math.lcm(*(order_of(c[0]) for c in classes))
power_maps = {
    str(m): [index[power(cls[0], m)] for cls in classes] for m in range(2, exponent + 1)
}

r2 = math.sqrt(2)
by_label = {
    "1A": [1, 1, 2, 3, 3, 2, 2, 4],
    "2A": [1, 1, 2, 3, 3, -2, -2, -4],
    "2B": [1, -1, 0, -1, 1, 0, 0, 0],
    "3A": [1, 1, -1, 0, 0, -1, -1, 1],
    "4A": [1, 1, 2, -1, -1, 0, 0, 0],
    "6A": [1, 1, -1, 0, 0, 1, 1, -1],
    "8A": [1, -1, 0, 1, -1, [0, r2], [0, -r2], 0],
    "8B": [1, -1, 0, 1, -1, [0, -r2], [0, r2], 0],
}
names = ["1", "det", "2a", "3a", "3b", "2b", "2c", "4"]
doc = {
    "name": "GL(2,3)",
    "order": 48,
    "exponent": exponent,
    "backend": "approx",
    "classes": [{"label": l, "size": len(c)} for l, c in zip(labels, classes)],
    "power_maps": power_maps,
    "irreps": [
        {"label": n, "values": [by_label[l][i] for l in labels]} for i, n in enumerate(names)
    ],
}
text = json.dumps(doc, indent=1)
load_table(text)  # raises unless orthogonality and power-map checks pass
(DATA / "gl23.json").write_text(text + "\n")
(DATA / "c2.json").write_text(render_table(cyclic_table(2)) + "\n")
print(labels, [len(c) for c in classes], exponent)
