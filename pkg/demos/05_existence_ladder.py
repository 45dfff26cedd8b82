"""Every admissible subgraph count is realised, constructively.

A configuration of index n+1 can contain 0..n-1 or n+1 maximal complete
subgraphs (exactly n is impossible; more than n+1 too).  The ladder:
the labelling census seeds level 4; the one-more extension lifts count m
to m+1 one level up; the Grassmannian supplies the maximum; a line swap
kills a two-subgraph witness down to zero.
"""

from psts import (
    build_existence_corpus,
    enumerate_free_complete,
    extend_one_more,
    parameters,
)
from psts.transforms import first_swap
from psts.verify import census_entry

print("=== level 4: ten-point configurations ===")
for w in build_existence_corpus(4):
    print(f"m={w.m}: {w.entry.name:24} {parameters(w.entry.configuration)}")

print()
print("=== one extension step, spelled out ===")
fez = census_entry(2)
print("start: the fez class, 2 subgraphs of order 4")
subs = enumerate_free_complete(fez.configuration, 4)
lifted = extend_one_more(fez.configuration, subs)
print("after extension:", parameters(lifted),
      "subgraphs:", len(enumerate_free_complete(lifted, 5)))

print()
print("=== one swap step, spelled out ===")
killed, cert = first_swap(fez.configuration)
print(f"swapped out {cert.removed} for {cert.inserted}")
print("subgraphs now:", len(enumerate_free_complete(killed, 4)))

print()
for n in (5, 6):
    print(f"=== level {n} ===")
    for w in build_existence_corpus(n):
        print(f"m={w.m}: {w.entry.name:32} v={w.entry.configuration.v}")
