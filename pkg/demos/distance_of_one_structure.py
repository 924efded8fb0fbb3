"""Walk through the distance of a single structure, three ways."""

from __future__ import annotations

from helixspan.diagram import bfs_distance, parse_dot_bracket, stack_runs
from helixspan.tableaux import beta, census, irreducible_blocks, tableau_distance

s = parse_dot_bracket("..((((...))..((...)))).(((....)))..")
print("structure      ", s)
print("length, arcs   ", s.n, len(s.arcs))

# shortest path along the backbone and arcs
print("BFS distance   ", bfs_distance(s))

# the same number read off the 1-tableau
t = beta(s)
print("tableau        ", t)
blocks = irreducible_blocks(t)
c = census(t)
print("blocks         ", blocks)
print("empty shapes    *:%d  #:%d  plain:%d" % (c.count_star, c.count_hash, c.count_plain))
print("tableau dist.  ", tableau_distance(t))

# and from the top-level shape: two steps per irreducible, one per free vertex
I, V = len(blocks), c.count_plain
print("2I + V - 1     ", 2 * I + V - 1)

print("stacks         ", [(run.outer, run.length) for run in stack_runs(s)])
