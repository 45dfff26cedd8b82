"""Classify the 10-point configurations containing a K_4 by labelling census.

Attaching a 4-clique to the 6-point complete quadrilateral through each of
the 720 edge labellings produces every 10_3 configuration that freely
contains a K_4.  Deduplicating by canonical form leaves six isomorphism
classes, with subgraph counts 1, 1, 1, 2, 3 and 5: the count-5 class is
Desargues, count-3 the Kantor class, count-2 the fez.
"""

from psts import are_isomorphic, classify_veblen_labellings, grassmannian, veronesian

report = classify_veblen_labellings()
print(f"labellings examined: {report.total_labellings}")
print(f"isomorphism classes: {len(report.classes)}")
print()
print(f"{'class':14} {'free K_4':>8} {'labellings':>11}")
for c in report.classes:
    print(f"{c.digest[:12]:14} {c.count:>8} {c.size:>11}")

print()
print("achievable counts:", sorted(report.achievable_counts()))
print("count 4 impossible: four subgraphs force a fifth")
print()

five = report.by_count(5)[0].representative
three = report.by_count(3)[0].representative
print("count-5 class is Desargues:   ",
      bool(are_isomorphic(five, grassmannian(5))))
print("count-3 class is veronesian(3):",
      bool(are_isomorphic(three, veronesian(3))))
