"""Systems of perspective simplices: the normal form behind subgraph families.

A configuration of binomial index n+1 containing m complete K_n graphs is
always a system of m perspective simplices over a smaller axis
configuration: simplices are matched through pairwise centers, edges are
labelled into the axis.  ``decompose`` recovers the data, and rebuilding
from it gives the original back up to isomorphism.
"""

from random import Random

from psts import (
    are_isomorphic,
    decompose,
    enumerate_free_complete,
    grassmannian,
    parameters,
    perspective_system,
)
from psts.constructions import random_perspective_data
from psts.fileio import emit_perspective

rng = Random(8)

print("=== build: 3 perspective triangles over a line axis (n = 5) ===")
data = random_perspective_data(5, 3, rng)
cfg = perspective_system(data)
print("result:", parameters(cfg))
subs = enumerate_free_complete(cfg, 5)
print("maximal complete subgraphs found:", len(subs))
for w in subs:
    print("   ", " ".join(w.vertex_labels))

print()
print("=== decompose: read the data back off the subgraphs ===")
recovered = decompose(cfg, subs)
print(f"m={recovered.m} simplex={recovered.simplex} "
      f"axis v={recovered.axis.v} b={recovered.axis.b}")
print()
print(emit_perspective(recovered, "axis.cfg"))

rebuilt = perspective_system(recovered)
print("rebuilt isomorphic to original:", bool(are_isomorphic(rebuilt, cfg)))

print()
print("=== the degenerate extremes ===")
print("all simplices, no axis: the Grassmannian has the maximum n+1 subgraphs")
g6 = grassmannian(6)
print("grassmannian(6) subgraphs:", len(enumerate_free_complete(g6, 5)))
