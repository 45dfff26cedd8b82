"""Relabeling-invariant certificates and isomorphism testing.

The certificate of a configuration is the lexicographically smallest line
list over all relabelings of its points (each line an ascending index
triple, the list sorted).  It is computed in two phases: a fast
individualization-refinement scout produces a strong incumbent labeling
plus automorphism generators, and an exact branch-and-bound over label
sequences then certifies the minimum, pruning with partial line-list lower
bounds, orbit checks against the discovered automorphisms, and jump-backs
to the deepest common ancestor whenever a branch reproduces the incumbent.
Intended scale is v <= 36.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass

from .core import Configuration, Line, parameters


@dataclass(frozen=True)
class CanonicalForm:
    certificate: tuple[Line, ...]
    witness: tuple[int, ...]      # old dense index -> canonical position
    digest: str


@dataclass(frozen=True)
class IsoResult:
    isomorphic: bool
    witness: dict[str, str] | None   # label of A -> label of B

    def __bool__(self) -> bool:
        return self.isomorphic


def _digest(v: int, certificate: tuple[Line, ...]) -> str:
    blob = f"{v}|{certificate}".encode()
    return hashlib.sha256(blob).hexdigest()


def canonical_form(config: Configuration) -> CanonicalForm:
    """Certificate plus one relabeling achieving it (cached per object)."""
    if config._canonical is None:
        config._canonical = _canonicalize(config)
    return config._canonical


def _certificate_of(lines, perm) -> tuple[Line, ...]:
    return tuple(sorted(
        tuple(sorted((perm[a], perm[b], perm[c]))) for a, b, c in lines))


def _partition_scout(v: int, lines) -> tuple[list[int], tuple, tuple, list]:
    """Individualization-refinement pass.

    Returns the stable equitable coloring of the points, one good labeling
    (certificate and witness) and the automorphism generators discovered
    while visiting equally-labelled leaves.  The labeling explores only
    cell-contiguous orders, so it need not be the global minimum; the exact
    phase finishes the job.
    """
    pairs_at: list[list[tuple[int, int]]] = [[] for _ in range(v)]
    for a, b, c in lines:
        pairs_at[a].append((b, c))
        pairs_at[b].append((a, c))
        pairs_at[c].append((a, b))

    def refine(colors: list[int]) -> list[int]:
        while True:
            sigs = []
            for p in range(v):
                local = sorted(
                    (colors[q], colors[r]) if colors[q] <= colors[r]
                    else (colors[r], colors[q])
                    for q, r in pairs_at[p])
                sigs.append((colors[p], tuple(local)))
            ranking = {s: k for k, s in enumerate(sorted(set(sigs)))}
            new = [ranking[s] for s in sigs]
            if new == colors:
                return new
            colors = new

    def individualize(colors: list[int], u: int) -> list[int]:
        keyed = [(colors[p], 0 if p == u else 1) for p in range(v)]
        ranking = {s: k for k, s in enumerate(sorted(set(keyed)))}
        return [ranking[s] for s in keyed]

    state = {"best": None, "witness": None}
    gens: list[tuple[int, ...]] = []
    gen_set: set[tuple[int, ...]] = set()
    fixed_path: list[int] = []

    def search(colors: list[int]) -> None:
        target = None
        cells: dict[int, list[int]] = {}
        for p, c in enumerate(colors):
            cells.setdefault(c, []).append(p)
        for c in sorted(cells):
            if len(cells[c]) > 1:
                target = cells[c]
                break
        if target is None:
            cert = _certificate_of(lines, colors)
            best = state["best"]
            if best is None or cert < best:
                state["best"] = cert
                state["witness"] = tuple(colors)
            elif cert == best:
                inv_best = [0] * v
                for old, lab in enumerate(state["witness"]):
                    inv_best[lab] = old
                g = tuple(inv_best[colors[i]] for i in range(v))
                if g not in gen_set and any(g[i] != i for i in range(v)):
                    gen_set.add(g)
                    gens.append(g)
            return
        explored: set[int] = set()
        for u in target:
            if explored:
                applicable = [g for g in gens
                              if all(g[x] == x for x in fixed_path)]
                orbit = {u}
                queue = [u]
                hit = False
                while queue and not hit:
                    x = queue.pop()
                    for g in applicable:
                        y = g[x]
                        if y in explored:
                            hit = True
                            break
                        if y not in orbit:
                            orbit.add(y)
                            queue.append(y)
                if hit:
                    continue
            fixed_path.append(u)
            search(refine(individualize(colors, u)))
            fixed_path.pop()
            explored.add(u)

    base = refine([0] * v)
    search(base)
    return base, state["best"], state["witness"], gens




_STATS: dict = {}


def _exact_minimum(v: int, lines, colors, incumbent_cert, incumbent_witness,
                   seed_gens) -> tuple[tuple[Line, ...], tuple[int, ...]]:
    """Branch and bound over label sequences, seeded with an incumbent.

    Labels 0, 1, 2, ... are assigned to points one at a time; a branch dies
    when its partially determined sorted line list can no longer reach the
    best certificate (assigned points carry exact labels, unassigned ones
    the lower bound "next label").  Automorphisms discovered at tying
    leaves feed a stabilizer chain based along the best leaf's path; a node
    whose prefix is mapped onto the best path's prefix by a known
    automorphism is skipped outright, siblings are explored once per orbit
    of the prefix stabilizer, and ties jump straight back to the deepest
    node shared with the best path.
    """
    best_cert = incumbent_cert
    best_witness = incumbent_witness
    best_path: list[int] | None = None

    b = len(lines)
    lines_at: list[list[int]] = [[] for _ in range(v)]
    for li, ln in enumerate(lines):
        for p in ln:
            lines_at[p].append(li)
    assigned_in = [0] * b
    state = {"complete": 0}
    pos = [-1] * v
    order: list[int] = []
    no_abort = v + 1
    identity = tuple(range(v))

    def compose(f, g):
        return tuple(f[g[i]] for i in range(v))

    def invert(f):
        out = [0] * v
        for i, fi in enumerate(f):
            out[fi] = i
        return tuple(out)

    class Chain:
        """Incremental Schreier-Sims chain with the base along ``base``.

        Level i holds generators fixing base[:i] pointwise, the orbit of
        base[i] with a transversal, and (lazily) the full orbit partition
        used for sibling merging.  An incomplete chain only weakens the
        pruning, never its soundness: every stored permutation is a
        verified automorphism.
        """

        def __init__(self, base):
            self.base = base
            self.levels = [{"gens": [], "orbit": {pt: identity}, "reps": None}
                           for pt in base]

        def _grow_orbit(self, i):
            lvl = self.levels[i]
            orbit = {self.base[i]: identity}
            queue = [self.base[i]]
            while queue:
                x = queue.pop()
                tx = orbit[x]
                for g in lvl["gens"]:
                    y = g[x]
                    if y not in orbit:
                        orbit[y] = compose(g, tx)
                        queue.append(y)
            lvl["orbit"] = orbit
            lvl["reps"] = None

        def extend(self, g, start=0):
            h = g
            i = start
            while i < len(self.base):
                y = h[self.base[i]]
                if y != self.base[i]:
                    t = self.levels[i]["orbit"].get(y)
                    if t is None:
                        self._insert(i, h)
                        return
                    h = compose(invert(t), h)
                i += 1

        def _insert(self, i, h):
            # no Schreier closure: the chain stays partial, which only
            # weakens (never breaks) the pruning and keeps inserts cheap
            lvl = self.levels[i]
            lvl["gens"].append(h)
            self._grow_orbit(i)

        def coset_element(self, prefix):
            """Some known automorphism mapping prefix onto base[:len], or None."""
            h = identity
            for j, p in enumerate(prefix):
                y = h[p]
                if y != self.base[j]:
                    t = self.levels[j]["orbit"].get(y)
                    if t is None:
                        return None
                    h = compose(invert(t), h)
            return h

        def level_rep(self, i, point):
            lvl = self.levels[i]
            if lvl["reps"] is None:
                reps = {}
                for p in range(v):
                    if p in reps:
                        continue
                    orbit = {p}
                    queue = [p]
                    while queue:
                        x = queue.pop()
                        for g in lvl["gens"]:
                            y = g[x]
                            if y not in orbit:
                                orbit.add(y)
                                queue.append(y)
                    rep = min(orbit)
                    for y in orbit:
                        reps[y] = rep
                lvl["reps"] = reps
            return lvl["reps"][point]

    pending_gens: list[tuple[int, ...]] = list(seed_gens)
    all_gens: list[tuple[int, ...]] = list(seed_gens)
    gen_set = set(seed_gens)
    chain_box = {"chain": None, "stale": True, "version": 0}

    def chain_now() -> Chain | None:
        if best_path is None:
            return None
        box = chain_box
        if box["stale"] or box["chain"] is None:
            base = list(best_path)
            rest = [p for p in range(v) if p not in set(base)]
            chain = Chain(base + rest)
            for g in all_gens:
                chain.extend(g)
            box["chain"] = chain
            box["stale"] = False
            box["version"] += 1
            _STATS['rebuild'] = _STATS.get('rebuild', 0) + 1
            pending_gens.clear()
        elif pending_gens:
            for g in pending_gens:
                box["chain"].extend(g)
            box["version"] += 1
            _STATS['fold'] = _STATS.get('fold', 0) + 1
            pending_gens.clear()
        return box["chain"]

    def finish() -> int:
        nonlocal best_cert, best_witness, best_path
        perm = pos[:]
        nxt = len(order)
        for p in range(v):
            if perm[p] < 0:
                perm[p] = nxt       # points on no remaining line: any order
                nxt += 1
        cert = _certificate_of(lines, perm)
        if cert < best_cert:
            _STATS['improve'] = _STATS.get('improve', 0) + 1
            best_cert = cert
            best_witness = tuple(perm)
            best_path = list(order)
            chain_box["stale"] = True
            return no_abort
        if cert == best_cert:
            adopted = best_path is None
            if adopted:
                best_path = list(order)
                chain_box["stale"] = True
            inv_best = [0] * v
            for old, lab in enumerate(best_witness):
                inv_best[lab] = old
            g = tuple(inv_best[perm[i]] for i in range(v))
            if g != identity and g not in gen_set:
                gen_set.add(g)
                all_gens.append(g)
                pending_gens.append(g)
            if adopted:
                return no_abort
            c = 0
            while c < len(order) and c < len(best_path) \
                    and order[c] == best_path[c]:
                c += 1
            return c
        return no_abort

    def viable() -> bool:
        bound = len(order)
        enc = []
        for ln in lines:
            vals = []
            unknown = 0
            for p in ln:
                lab = pos[p]
                if lab < 0:
                    vals.append(bound + unknown)   # distinct future labels
                    unknown += 1
                else:
                    vals.append(lab)
            vals.sort()
            enc.append((tuple(vals), unknown == 0))
        enc.sort(key=lambda e: e[0])
        first_inexact = next((i for i, e in enumerate(enc) if not e[1]), None)
        if first_inexact is None:
            return tuple(e[0] for e in enc) <= best_cert
        lower = enc[first_inexact][0]
        prefix = first_inexact
        while prefix > 0 and enc[prefix - 1][0] >= lower:
            prefix -= 1
        for i in range(prefix):
            if enc[i][0] < best_cert[i]:
                return True
            if enc[i][0] > best_cert[i]:
                return False
        return lower <= best_cert[prefix]

    def search() -> int:
        if state["complete"] == b or len(order) == v:
            _STATS['finish'] = _STATS.get('finish', 0) + 1
            return finish()
        if not viable():
            return no_abort
        d = len(order)
        cands = [p for p in range(v) if pos[p] < 0]
        sentinel = (v, v)

        def completion_key(p):
            # the sorted label pairs this point would close into triples;
            # candidates contributing the lexicographically smallest new
            # triples come first, so the leftmost leaf is greedily minimal
            pairs = sorted(
                (lo, hi)
                for li in lines_at[p] if assigned_in[li] == 2
                for lo, hi in [sorted(pos[q] for q in lines[li] if pos[q] >= 0)]
            )
            pairs.append(sentinel)
            return pairs

        cands.sort(key=lambda p: (completion_key(p), colors[p], p))
        explored: list[int] = []
        node = {"version": -1, "h": None, "keys": set(), "dead": False}

        def key_of(u2: int):
            chain = chain_box["chain"]
            h = node["h"]
            if chain is not None and h is not None and d < len(chain.base):
                return chain.level_rep(d, h[u2])
            return u2

        def refresh() -> None:
            # keep the coset element and the explored-sibling keys consistent
            # with the current chain; both go stale when the chain grows or
            # is rebuilt around an improved best path
            chain = chain_now()
            if chain_box["version"] == node["version"]:
                return
            node["version"] = chain_box["version"]
            if chain is None or best_path is None or d > len(best_path):
                node["h"] = None
            else:
                node["h"] = chain.coset_element(order)
                if node["h"] is not None and order != best_path[:d]:
                    _STATS['equiv_prune'] = _STATS.get('equiv_prune', 0) + 1
                    node["dead"] = True
                    return
            node["keys"] = {key_of(u2) for u2 in explored}

        refresh()
        if node["dead"]:
            return no_abort
        for u in cands:
            if explored:
                refresh()
                if node["dead"]:
                    return no_abort
                if key_of(u) in node["keys"]:
                    continue
            pos[u] = len(order)
            order.append(u)
            for li in lines_at[u]:
                assigned_in[li] += 1
                if assigned_in[li] == 3:
                    state["complete"] += 1
            result = search()
            for li in lines_at[u]:
                if assigned_in[li] == 3:
                    state["complete"] -= 1
                assigned_in[li] -= 1
            order.pop()
            pos[u] = -1
            if result < len(order):
                return result
            explored.append(u)
            node["keys"].add(key_of(u))
        return no_abort

    search()
    return best_cert, best_witness


def _canonicalize(config: Configuration) -> CanonicalForm:
    v = config.v
    lines = config.lines
    if v == 0:
        return CanonicalForm((), (), _digest(0, ()))
    if not lines:
        witness = tuple(range(v))
        return CanonicalForm((), witness, _digest(v, ()))
    colors, scout_cert, scout_witness, gens = _partition_scout(v, lines)
    cert, witness = _exact_minimum(v, lines, colors, scout_cert,
                                   scout_witness, gens)
    return CanonicalForm(cert, witness, _digest(v, cert))


def are_isomorphic(a: Configuration, b: Configuration) -> IsoResult:
    """Certificate comparison with cheap rejections first.

    The witness, when present, maps each point label of ``a`` to a point
    label of ``b`` carrying lines onto lines.
    """
    if a.v != b.v or a.b != b.b:
        return IsoResult(False, None)
    if parameters(a).rank_profile != parameters(b).rank_profile:
        return IsoResult(False, None)
    for size, ca in a.free_counts.items():
        cb = b.free_counts.get(size)
        if cb is not None and ca != cb:
            return IsoResult(False, None)
    ca, cb = canonical_form(a), canonical_form(b)
    if ca.certificate != cb.certificate:
        return IsoResult(False, None)
    inv_b = [0] * b.v
    for old, pos in enumerate(cb.witness):
        inv_b[pos] = old
    mapping = {a.labels[i]: b.labels[inv_b[ca.witness[i]]] for i in range(a.v)}
    return IsoResult(True, mapping)


def apply_relabeling(config: Configuration, mapping: dict[str, str]) -> Configuration:
    """Rename the points of a configuration through a label bijection."""
    from .core import validate_configuration
    points = [mapping[lab] for lab in config.labels]
    triples = [tuple(mapping[x] for x in ln) for ln in config.lines_as_labels()]
    return validate_configuration(points, triples)


def automorphism_group_order(config: Configuration) -> int:
    """Order of the automorphism group by brute force; test aid for v <= 10."""
    from itertools import permutations
    count = 0
    line_set = set(config.lines)
    for perm in permutations(range(config.v)):
        if all(tuple(sorted(perm[x] for x in ln)) in line_set for ln in config.lines):
            count += 1
    return count
