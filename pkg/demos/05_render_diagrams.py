"""
Diagrams
========

Writes the Hasse diagram of the gaps of <7, 10> with the maximal 1-distinct
witness filled in, plus the bottom edge colored by ledge, as DOT files.
Render them with ``dot -Tpng``.
"""

import sys
from pathlib import Path

from corehook.core_poset import CoreParams
from corehook.maxhook import witness_core
from corehook.render import edge_dot, hasse_dot, young_ascii

out_dir = Path(sys.argv[1]) if len(sys.argv) > 1 else Path("diagrams")
out_dir.mkdir(parents=True, exist_ok=True)

params = CoreParams.from_st(7, 10)
beta, parts = witness_core(7, 10, 1)

(out_dir / "hasse_7_10.dot").write_text(hasse_dot(params, beta) + "\n")
(out_dir / "edge_7_10.dot").write_text(edge_dot(params, beta) + "\n")
print(young_ascii(parts))
print("wrote", sorted(p.name for p in out_dir.iterdir()))
