"""Enumerate the complete graphs freely contained in a configuration.

Free containment asks more than pairwise collinearity: distinct edges must
lie on distinct lines (the sides), and sides may meet only inside the
vertex set.  The classic counterexample is a complete quadrangle in a
projective plane, whose diagonal points break the last condition.
"""

from psts import (
    complement,
    enumerate_free_complete,
    grassmannian,
    is_freely_contained,
    is_regular_subconfiguration,
    parameters,
    validate_configuration,
)

g5 = grassmannian(5)
print("=== the five K_4's of the Desargues configuration ===")
for w in enumerate_free_complete(g5, 4):
    print("K_4 on", " ".join(w.vertex_labels))

print()
print("=== sides of one of them ===")
star = [lab for lab in g5.labels if "1" in lab.split(".")]
witness = is_freely_contained(g5, star)
for (a, b), ln in sorted(witness.sides.items()):
    print(f"{g5.labels[a]} {g5.labels[b]} -> {'/'.join(g5.line_labels(ln))}")

print()
print("=== the complement is one index lower ===")
comp = complement(g5, witness)
print("complement:", parameters(comp))
print("regularly contained:", is_regular_subconfiguration(g5, comp))

print()
print("=== why p-closure matters: the 7-point plane ===")
fano = validate_configuration(
    [str(i) for i in range(1, 8)],
    [("1", "2", "3"), ("1", "4", "5"), ("1", "6", "7"), ("2", "4", "6"),
     ("2", "5", "7"), ("3", "4", "7"), ("3", "5", "6")])
print("triangles (all free):", len(enumerate_free_complete(fano, 3)))
print("quadrangles (sides meeting in diagonal points):",
      len(enumerate_free_complete(fano, 4)))
