"""Build the stock configuration families and inspect their parameters.

Every structure here is a partial Steiner triple system: 3-point lines,
two points on at most one common line.  The families of interest are the
binomial ones, where the counts match a minimal system containing a
complete graph.
"""

from psts import (
    binomial_index,
    collinearity_graph,
    emit_config,
    grassmannian,
    parameters,
    veronesian,
)

print("=== combinatorial Grassmannians ===")
for n in range(3, 8):
    cfg = grassmannian(n)
    p = parameters(cfg)
    print(f"grassmannian({n}): v={p.v} b={p.b} rank={p.rank_profile[0]} "
          f"index={binomial_index(cfg)}")

print()
print("grassmannian(4) is the Veblen (Pasch) configuration,")
print("grassmannian(5) the Desargues configuration.")
print()
print(emit_config(grassmannian(4)))

print("=== combinatorial Veronesians ===")
for k in range(2, 6):
    cfg = veronesian(k)
    p = parameters(cfg)
    print(f"veronesian({k}): v={p.v} b={p.b} index={binomial_index(cfg)}")

print()
print("veronesian(3), written as degree-3 monomials in a, b, c:")
print(emit_config(veronesian(3)))

print("=== collinearity graph ===")
g5 = grassmannian(5)
graph = collinearity_graph(g5)
print(f"Desargues: {graph.edge_count} collinear pairs "
      f"(= 3 per line x {g5.b} lines)")
