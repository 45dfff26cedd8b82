"""Executable verification: a constructed corpus, a battery of structural
laws checked over it, the existence ladder producing every admissible
subgraph count, and the census of all 720 labellings of the 6-point
attachment base, which classifies the 10-point configurations freely
containing a complete graph on 4 vertices.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations, permutations
from math import comb
from random import Random

from .analysis import (
    attach_data_from_witness,
    complement,
    enumerate_free_complete,
    intersection_structure,
    is_freely_contained,
    naive_enumerate_free_complete,
    side_crossings,
    structure_report,
)
from .constructions import (
    attach_complete,
    grassmannian,
    labelling_from_sequence,
    perspective_designated_cliques,
    perspective_system,
    random_labelling,
    random_perspective_data,
    two_graph_designated_cliques,
    two_graph_example,
    veronesian,
    veronesian_designated_cliques,
)
from .core import (
    Configuration,
    binomial_index,
    collinearity_graph,
    is_regular_subconfiguration,
    parameters,
    validate_configuration,
)
from .errors import PropertyFailure, WitnessGap
from .isomorphism import apply_relabeling, are_isomorphic, canonical_form
from .transforms import extend_one_more, first_swap

DEFAULT_SEED = 1729
CENSUS_VERTICES = ("1", "2", "3", "4")

_reference_grassmannian = lru_cache(maxsize=None)(grassmannian)


@dataclass
class CorpusEntry:
    """A configuration plus how it was built and what it contains."""
    name: str
    configuration: Configuration
    provenance: dict
    index: int              # binomial index
    order: int              # maximal complete subgraph order = index - 1
    count: int | None = None


@dataclass
class PropertyRecord:
    property: str
    n: int | None
    m: int | None
    entries: int = 0
    failures: int = 0
    notes: list[str] = field(default_factory=list)

    def check(self, ok: bool, note: str) -> None:
        self.entries += 1
        if not ok:
            self.failures += 1
            self.notes.append(note)

    def as_record(self) -> dict:
        return {"property": self.property, "n": self.n, "m": self.m,
                "entries": self.entries, "failures": self.failures,
                "witness_file": None}


@dataclass
class BatteryReport:
    n_max: int
    seed: int
    records: list[PropertyRecord] = field(default_factory=list)
    corpus: list[CorpusEntry] = field(default_factory=list)

    @property
    def total_failures(self) -> int:
        return sum(r.failures for r in self.records)

    def render_text(self) -> str:
        out = [f"property battery: n_max={self.n_max} seed={self.seed} "
               f"corpus={len(self.corpus)}"]
        for r in self.records:
            status = "PASS" if r.failures == 0 else "FAIL"
            out.append(f"{status} {r.property} entries={r.entries} failures={r.failures}")
            for note in r.notes[:5]:
                out.append(f"    {note}")
        out.append(f"total failures: {self.total_failures}")
        return "\n".join(out) + "\n"


@dataclass
class ExistenceWitness:
    n: int
    m: int
    entry: CorpusEntry


@dataclass
class CensusClass:
    count: int               # free K_4 subgraphs of the class
    size: int                # how many of the 720 labellings land here
    digest: str
    representative: Configuration
    labelling_values: tuple[str, ...]   # base points in lexicographic edge order


@dataclass
class CensusReport:
    classes: list[CensusClass]
    total_labellings: int

    def by_count(self, count: int) -> list[CensusClass]:
        return [c for c in self.classes if c.count == count]

    def achievable_counts(self) -> set[int]:
        return {c.count for c in self.classes}

    def render_text(self) -> str:
        out = [f"labellings: {self.total_labellings}  classes: {len(self.classes)}"]
        for c in self.classes:
            out.append(f"class {c.digest[:12]} free-K4={c.count} labellings={c.size}")
        out.append("achievable counts: "
                   + " ".join(str(c) for c in sorted(self.achievable_counts())))
        return "\n".join(out) + "\n"


# -- provenance ---------------------------------------------------------------

def replay(provenance: dict) -> Configuration:
    """Rebuild a corpus configuration from its recipe."""
    op = provenance["op"]
    if op == "grassmannian":
        return grassmannian(provenance["n"])
    if op == "veronesian":
        return veronesian(provenance["k"])
    if op == "attach_random":
        n = provenance["n"]
        rng = Random(provenance["seed"])
        base = grassmannian(n)
        verts = tuple(f"y{k}" for k in range(1, n + 1))
        return attach_complete(verts, random_labelling(verts, base, rng), base)
    if op == "perspective_random":
        rng = Random(provenance["seed"])
        data = random_perspective_data(provenance["n"], provenance["m"], rng)
        return perspective_system(data)
    if op == "two_graph_random":
        n = provenance["n"]
        rng = Random(provenance["seed"])
        base = grassmannian(n - 1) if n >= 4 else None
        verts = tuple(f"y{k}" for k in range(1, n))
        mu1 = random_labelling(verts, base, rng)
        mu2 = mu1 if provenance["equal"] else random_labelling(verts, base, rng)
        return two_graph_example(base, verts, mu1, mu2)
    if op == "census_class":
        report = classify_veblen_labellings()
        matching = report.by_count(provenance["count"])
        return matching[provenance["rank"]].representative
    if op == "extend":
        base = replay(provenance["base"])
        subs = enumerate_free_complete(base, binomial_index(base) - 1)
        return extend_one_more(base, subs)
    if op == "swap_first":
        base = replay(provenance["base"])
        return first_swap(base)[0]
    raise ValueError(f"unknown provenance op {op!r}")


def _entry(name: str, config: Configuration, provenance: dict) -> CorpusEntry:
    index = binomial_index(config)
    if index is None:
        raise WitnessGap(f"corpus entry {name} is not binomial")
    return CorpusEntry(name=name, configuration=config, provenance=provenance,
                       index=index, order=index - 1)


# -- census -------------------------------------------------------------------

@lru_cache(maxsize=1)
def classify_veblen_labellings() -> CensusReport:
    """Attach a 4-clique to the complete-quadrilateral base through every one
    of the 720 labellings, deduplicate up to isomorphism, and record each
    class's exact maximal-subgraph count."""
    base = grassmannian(4)
    verts = CENSUS_VERTICES
    buckets: dict[tuple, CensusClass] = {}
    for values in permutations(base.labels):
        mu = labelling_from_sequence(verts, values)
        config = attach_complete(verts, mu, base)
        cf = canonical_form(config)
        hit = buckets.get(cf.certificate)
        if hit is not None:
            hit.size += 1
            continue
        count = len(enumerate_free_complete(config, 4))
        buckets[cf.certificate] = CensusClass(
            count=count, size=1, digest=cf.digest,
            representative=config, labelling_values=tuple(values))
    classes = sorted(buckets.values(), key=lambda c: (c.count, c.digest))
    report = CensusReport(classes=classes, total_labellings=720)
    counts = report.achievable_counts()
    if counts != {1, 2, 3, 5}:
        raise PropertyFailure(f"census counts came out as {sorted(counts)}")
    five = report.by_count(5)
    if len(five) != 1 or not are_isomorphic(five[0].representative, grassmannian(5)):
        raise PropertyFailure("count-5 census class is not the Grassmannian")
    return report


def census_entry(count: int, rank: int = 0) -> CorpusEntry:
    report = classify_veblen_labellings()
    matching = report.by_count(count)
    if rank >= len(matching):
        raise WitnessGap(f"no census class with count {count} rank {rank}")
    entry = _entry(f"census-k4-{count}.{rank}", matching[rank].representative,
                   {"op": "census_class", "count": count, "rank": rank})
    entry.count = count
    return entry


# -- existence ladder ---------------------------------------------------------

def admissible_counts(n: int) -> set[int]:
    return set(range(n)) | {n + 1}


@lru_cache(maxsize=8)
def _existence_level(n: int) -> dict[int, CorpusEntry]:
    """One index-(n+1) configuration per admissible count of free complete
    order-n subgraphs.  Level 4 is seeded by the census plus one swap; each
    later level lifts the previous one by the one-more extension, takes the
    Grassmannian for the maximum, and swaps a two-subgraph witness to zero.
    """
    if n < 4:
        raise WitnessGap(f"existence levels start at n = 4, got {n}")
    out: dict[int, CorpusEntry] = {}
    if n == 4:
        for count in (1, 2, 3):
            out[count] = census_entry(count)
        gras = _entry("grassmannian-5", grassmannian(5), {"op": "grassmannian", "n": 5})
        out[5] = gras
    else:
        prev = _existence_level(n - 1)
        for m_prev in range(0, n - 1):
            base = prev[m_prev]
            subs = enumerate_free_complete(base.configuration, n - 1)
            lifted = extend_one_more(base.configuration, subs)
            entry = _entry(f"extend-{base.name}", lifted,
                           {"op": "extend", "base": base.provenance})
            out[m_prev + 1] = entry
        out[n + 1] = _entry(f"grassmannian-{n + 1}", grassmannian(n + 1),
                            {"op": "grassmannian", "n": n + 1})
    two = out[2]
    swapped, _ = first_swap(two.configuration)
    out[0] = _entry(f"swap-{two.name}", swapped,
                    {"op": "swap_first", "base": two.provenance})
    return out


def build_existence_corpus(n: int) -> list[ExistenceWitness]:
    """Witnesses for every admissible count at level n, each count confirmed
    by both the pruned enumeration and the naive subset oracle."""
    if not 4 <= n <= 6:
        raise WitnessGap(f"existence corpus is built for 4 <= n <= 6, got {n}")
    level = _existence_level(n)
    witnesses = []
    for m in sorted(admissible_counts(n)):
        if m not in level:
            raise WitnessGap(f"no witness with {m} subgraphs at level {n}")
        entry = level[m]
        found = len(enumerate_free_complete(entry.configuration, n))
        oracle = len(naive_enumerate_free_complete(entry.configuration, n))
        if found != m or oracle != m:
            raise WitnessGap(
                f"witness {entry.name}: pruned={found} oracle={oracle} wanted={m}")
        entry.count = m
        witnesses.append(ExistenceWitness(n=n, m=m, entry=entry))
    return witnesses


# -- corpus -------------------------------------------------------------------

def build_corpus(n_max: int, seed: int = DEFAULT_SEED) -> list[CorpusEntry]:
    entries: list[CorpusEntry] = []
    for k in range(4, n_max + 3):
        entries.append(_entry(f"grassmannian-{k}", grassmannian(k),
                              {"op": "grassmannian", "n": k}))
    for k in range(2, max(3, n_max)):
        entries.append(_entry(f"veronesian-{k}", veronesian(k),
                              {"op": "veronesian", "k": k}))
    for n in range(4, n_max + 1):
        for salt in (1, 2):
            prov = {"op": "attach_random", "n": n, "seed": seed + 100 * n + salt}
            entries.append(_entry(f"attach-{n}.{salt}", replay(prov), prov))
    for n in range(4, n_max + 1):
        for m in range(1, n):
            prov = {"op": "perspective_random", "n": n, "m": m,
                    "seed": seed + 10 * n + m}
            entries.append(_entry(f"perspective-{n}.{m}", replay(prov), prov))
    for n in range(4, n_max + 1):
        for equal in (False, True):
            prov = {"op": "two_graph_random", "n": n, "equal": equal,
                    "seed": seed + n}
            entries.append(_entry(f"two-graph-{n}{'=' if equal else ''}",
                                  replay(prov), prov))
    for count in (1, 2, 3, 5):
        entries.append(census_entry(count))
    fez = census_entry(2)
    swapped, _ = first_swap(fez.configuration)
    entries.append(_entry("swap-census-k4-2", swapped,
                          {"op": "swap_first", "base": fez.provenance}))
    if n_max >= 5:
        for count in (0, 1, 2, 3):
            base = census_entry(count) if count else entries[-1]
            subs = enumerate_free_complete(base.configuration, 4)
            lifted = extend_one_more(base.configuration, subs)
            entries.append(_entry(f"extend-{base.name}", lifted,
                                  {"op": "extend", "base": base.provenance}))
        two = next(e for e in entries if e.name == "extend-census-k4-1.0")
        swapped5, _ = first_swap(two.configuration)
        entries.append(_entry("swap-extend-k5-2", swapped5,
                              {"op": "swap_first", "base": two.provenance}))
    return entries


# -- the battery --------------------------------------------------------------

def run_property_battery(n_max: int, seed: int = DEFAULT_SEED) -> BatteryReport:
    """Build the corpus and assert every structural law over it.

    Failures are collected into the report rather than raised, so a single
    run surfaces everything that is wrong.
    """
    if not 4 <= n_max <= 7:
        raise WitnessGap(f"battery runs for 4 <= n_max <= 7, got {n_max}")
    report = BatteryReport(n_max=n_max, seed=seed)
    corpus = build_corpus(n_max, seed)
    report.corpus = corpus
    rng = Random(seed)

    def record(name: str, n: int | None = None, m: int | None = None) -> PropertyRecord:
        rec = PropertyRecord(property=name, n=n, m=m)
        report.records.append(rec)
        return rec

    subgraphs: dict[str, list] = {}
    for e in corpus:
        subgraphs[e.name] = enumerate_free_complete(e.configuration, e.order)
        e.count = len(subgraphs[e.name])

    rec = record("pair-at-most-one-line")
    for e in corpus:
        cfg = e.configuration
        seen = {}
        ok = True
        for ln in cfg.lines:
            for pr in combinations(ln, 2):
                if pr in seen:
                    ok = False
                seen[pr] = ln
        rec.check(ok, e.name)

    rec = record("grassmannian-parameters")
    for k in range(3, 10):
        p = parameters(grassmannian(k))
        ok = (p.v == comb(k, 2) and p.b == comb(k, 3)
              and set(p.rank_profile) == {k - 2})
        rec.check(ok, f"grassmannian({k})")

    rec = record("collinearity-edge-count")
    for e in corpus:
        g = collinearity_graph(e.configuration)
        rec.check(g.edge_count == 3 * e.configuration.b, e.name)

    rec = record("binomial-index-relabel-invariant")
    for e in rng.sample(corpus, min(6, len(corpus))):
        cfg = e.configuration
        shuffled = list(cfg.labels)
        rng.shuffle(shuffled)
        image = apply_relabeling(cfg, dict(zip(cfg.labels, shuffled)))
        rec.check(binomial_index(image) == e.index, e.name)

    rec = record("construction-validates-with-stated-index")
    for e in corpus:
        redone = validate_configuration(
            list(e.configuration.labels), e.configuration.lines_as_labels())
        rec.check(redone == e.configuration
                  and binomial_index(e.configuration) == e.index, e.name)

    rec = record("grassmannian-count-max")
    for e in corpus:
        if e.provenance["op"] == "grassmannian":
            rec.check(e.count == e.order + 1, f"{e.name}: count={e.count}")

    rec = record("count-at-most-max-never-penultimate")
    for e in corpus:
        rec.check(e.count <= e.order + 1 and e.count != e.order,
                  f"{e.name}: count={e.count}")

    rec = record("count-max-iff-grassmannian")
    for e in corpus:
        expect = _reference_grassmannian(e.index)
        iso = are_isomorphic(e.configuration, expect)
        rec.check((e.count == e.order + 1) == bool(iso),
                  f"{e.name}: count={e.count} iso={bool(iso)}")

    rec = record("attach-contains-designated-clique")
    for e in corpus:
        if e.provenance["op"] != "attach_random":
            continue
        n = e.provenance["n"]
        verts = [f"y{k}" for k in range(1, n + 1)]
        rec.check(is_freely_contained(e.configuration, verts) is not None, e.name)

    rec = record("perspective-designated-cliques-free")
    for e in corpus:
        if e.provenance["op"] != "perspective_random":
            continue
        data = random_perspective_data(
            e.provenance["n"], e.provenance["m"], Random(e.provenance["seed"]))
        ok = True
        for verts in perspective_designated_cliques(data):
            w = is_freely_contained(e.configuration, verts)
            if w is None:
                ok = False
        for i, j in combinations(range(1, data.m + 1), 2):
            xi = data.xi_map(i, j)
            for x in data.simplex:
                ln = (f"q:{i}.{j}", f"s:{x}:{i}", f"s:{xi[x]}:{j}")
                if tuple(sorted(ln)) not in {
                        tuple(sorted(t)) for t in e.configuration.lines_as_labels()}:
                    ok = False
        rec.check(ok, e.name)

    rec = record("veronesian-exactly-three")
    for e in corpus:
        if e.provenance["op"] != "veronesian" or e.provenance["k"] < 3:
            continue
        k = e.provenance["k"]
        designated = {tuple(sorted(v)) for v in veronesian_designated_cliques(k)}
        found = {w.vertex_labels for w in subgraphs[e.name]}
        rec.check(found == designated, f"{e.name}: found {len(found)}")

    rec = record("veronesian-complement-recursion")
    for e in corpus:
        if e.provenance["op"] != "veronesian" or e.provenance["k"] < 3:
            continue
        ok = True
        for w in subgraphs[e.name]:
            comp = complement(e.configuration, w)
            if not are_isomorphic(comp, veronesian(e.provenance["k"] - 1)):
                ok = False
        rec.check(ok, e.name)

    rec = record("pairwise-single-common-vertex")
    for e in corpus:
        for w1, w2 in combinations(subgraphs[e.name], 2):
            shared = set(w1.vertices) & set(w2.vertices)
            rec.check(len(shared) == 1, f"{e.name}: |shared|={len(shared)}")

    rec = record("pairwise-common-side-count")
    for e in corpus:
        for w1, w2 in combinations(subgraphs[e.name], 2):
            shared = w1.side_lines() & w2.side_lines()
            rec.check(len(shared) == e.order - 1,
                      f"{e.name}: {len(shared)} common sides")

    rec = record("triple-centers-collinear")
    for e in corpus:
        line_set = set(e.configuration.lines)
        for w1, w2, w3 in combinations(subgraphs[e.name], 3):
            cs = []
            for a, b in ((w1, w2), (w1, w3), (w2, w3)):
                cs.extend(set(a.vertices) & set(b.vertices))
            rec.check(len(set(cs)) == 3 and tuple(sorted(cs)) in line_set,
                      f"{e.name}: centers {cs}")

    rec = record("complement-regular-binomial")
    for e in corpus:
        if not subgraphs[e.name]:
            continue
        w = subgraphs[e.name][0]
        comp = complement(e.configuration, w)
        rec.check(binomial_index(comp) == e.order
                  and is_regular_subconfiguration(e.configuration, comp), e.name)

    rec = record("complement-reattach-identity")
    for e in corpus:
        if not subgraphs[e.name]:
            continue
        w = subgraphs[e.name][0]
        comp = complement(e.configuration, w)
        verts, mu = attach_data_from_witness(e.configuration, w)
        rec.check(attach_complete(sorted(verts), mu, comp) == e.configuration, e.name)

    rec = record("side-crossing-pairing")
    for e in corpus:
        for w1, w2 in combinations(subgraphs[e.name], 2):
            pairing = side_crossings(e.configuration, w1, w2)
            p = (set(w1.vertices) & set(w2.vertices)).pop()
            outside = set(range(e.configuration.v)) \
                - set(w1.vertices) - set(w2.vertices)
            crossing_points = set()
            ok = len(pairing) == comb(e.order - 1, 2)
            for e1, e2 in pairing.items():
                if p in e2:
                    ok = False
                ln1 = w1.sides[e1]
                crossing_points.add(e.configuration.third_point(ln1, *e1))
            rec.check(ok and crossing_points == outside, e.name)

    rec = record("structure-report-all-items")
    for e in corpus:
        if len(subgraphs[e.name]) < 2:
            continue
        try:
            structure_report(e.configuration, subgraphs[e.name])
            rec.check(True, e.name)
        except Exception as exc:   # noqa: BLE001 - report, never raise
            rec.check(False, f"{e.name}: {exc}")

    rec = record("intersection-embeds-grassmannian")
    for e in corpus:
        if len(subgraphs[e.name]) < 2:
            continue
        inter = intersection_structure(e.configuration, subgraphs[e.name])
        rec.check(inter.embedding_ok, e.name)

    rec = record("oracle-equivalence")
    for e in corpus:
        if e.configuration.v > 21:
            continue
        naive = [w.vertices for w in
                 naive_enumerate_free_complete(e.configuration, e.order)]
        pruned = [w.vertices for w in subgraphs[e.name]]
        rec.check(naive == pruned, e.name)

    rec = record("canonical-relabel-invariance")
    for e in rng.sample(corpus, min(5, len(corpus))):
        cfg = e.configuration
        shuffled = list(cfg.labels)
        rng.shuffle(shuffled)
        image = apply_relabeling(cfg, dict(zip(cfg.labels, shuffled)))
        rec.check(canonical_form(image).certificate
                  == canonical_form(cfg).certificate, e.name)

    rec = record("iso-preserves-count")
    for e in rng.sample(corpus, min(5, len(corpus))):
        cfg = e.configuration
        shuffled = list(cfg.labels)
        rng.shuffle(shuffled)
        image = apply_relabeling(cfg, dict(zip(cfg.labels, shuffled)))

        rec.check(bool(are_isomorphic(cfg, image))
                  and len(enumerate_free_complete(image, e.order)) == e.count,
                  e.name)

    rec = record("ten-point-class-separation", n=4)
    tags = ["census-k4-5.0", "census-k4-3.0", "census-k4-2.0", "swap-census-k4-2"]
    reps = [e for e in corpus if e.name in tags]
    certs = {canonical_form(e.configuration).certificate for e in reps}
    rec.check(len(certs) == len(reps), f"{len(certs)} certificates for {len(reps)}")

    rec = record("extension-adds-exactly-one")
    for e in corpus:
        if e.provenance["op"] != "extend":
            continue
        parent = replay(e.provenance["base"])
        parent_subs = enumerate_free_complete(parent, binomial_index(parent) - 1)
        ok = e.count == len(parent_subs) + 1
        own = [set(w.vertex_labels) for w in subgraphs[e.name]]
        for w in parent_subs:
            old = set(w.vertex_labels)
            if not any(old < new for new in own):
                ok = False
        rec.check(ok, f"{e.name}: count={e.count}")

    rec = record("swap-kill-invariants")
    for e in corpus:
        if e.provenance["op"] != "swap_first":
            continue
        parent = replay(e.provenance["base"])
        g_old = collinearity_graph(parent)
        g_new = collinearity_graph(e.configuration)
        old_edges = {tuple(sorted((parent.labels[a], parent.labels[b])))
                     for a, b in g_old.edge_lines}
        new_edges = {tuple(sorted((e.configuration.labels[a], e.configuration.labels[b])))
                     for a, b in g_new.edge_lines}
        rec.check(parameters(e.configuration) == parameters(parent)
                  and len(old_edges - new_edges) == 2
                  and len(new_edges - old_edges) == 2
                  and e.count == 0, e.name)

    rec = record("perspective-point-count-identity")
    for n in range(2, 9):
        for m in range(1, n):
            data = random_perspective_data(n, m, Random(seed + 31 * n + m))
            cfg = perspective_system(data)
            rec.check(cfg.v == comb(n + 1, 2), f"n={n} m={m}: v={cfg.v}")

    rec = record("two-graph-complement-shapes")
    for e in corpus:
        if e.provenance["op"] != "two_graph_random":
            continue
        n = e.provenance["n"]
        verts = tuple(f"y{k}" for k in range(1, n))
        cliques = two_graph_designated_cliques(verts)
        comps = []
        for verts_i in cliques:
            w = is_freely_contained(e.configuration, verts_i)
            if w is None:
                rec.check(False, f"{e.name}: designated clique missing")
                break
            comps.append(complement(e.configuration, w))
        else:
            if e.provenance["equal"]:
                rec.check(bool(are_isomorphic(comps[0], comps[1])), e.name)
            else:
                rec.check(binomial_index(comps[0]) == n
                          and binomial_index(comps[1]) == n, e.name)

    rec = record("replay-provenance")
    for e in corpus:
        rec.check(replay(e.provenance) == e.configuration, e.name)

    return report
