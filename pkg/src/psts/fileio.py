"""Bit-exact text formats for configurations, labellings, perspective data
and swap certificates.

Configuration documents::

    # optional comment lines
    points <k> <label_1> ... <label_k>
    line <a> <b> <c>

Emission is canonical: points in ascending label order, lines as sorted
triples in lexicographic order, single spaces, trailing newline.  Parsing
an emitted document reproduces the configuration exactly.
"""

from __future__ import annotations

from .constructions import Labelling, PerspectiveData
from .core import Configuration, validate_configuration
from .errors import ConfigSyntaxError
from .transforms import SwapCertificate


def _significant_lines(text: str):
    for num, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.strip()
        if not stripped or stripped.startswith("#"):
            continue
        yield num, stripped


def parse_config(text: str) -> Configuration:
    """Parse a configuration document and validate the result."""
    rows = list(_significant_lines(text))
    if not rows:
        raise ConfigSyntaxError("line 0: empty document")
    num, head = rows[0]
    tokens = head.split()
    if tokens[0] != "points":
        raise ConfigSyntaxError(f"line {num}: expected 'points', got {tokens[0]!r}")
    if len(tokens) < 2:
        raise ConfigSyntaxError(f"line {num}: missing point count")
    try:
        count = int(tokens[1])
    except ValueError:
        raise ConfigSyntaxError(f"line {num}: bad point count {tokens[1]!r}") from None
    labels = tokens[2:]
    if len(labels) != count:
        raise ConfigSyntaxError(
            f"line {num}: declared {count} points but listed {len(labels)}")
    triples = []
    for num, row in rows[1:]:
        tokens = row.split()
        if tokens[0] != "line":
            raise ConfigSyntaxError(f"line {num}: expected 'line', got {tokens[0]!r}")
        if len(tokens) != 4:
            raise ConfigSyntaxError(f"line {num}: a line needs exactly 3 points")
        triples.append(tuple(tokens[1:]))
    return validate_configuration(labels, triples)


def emit_config(config: Configuration) -> str:
    out = ["points " + " ".join([str(config.v)] + list(config.labels))]
    for ln in config.lines:
        out.append("line " + " ".join(config.line_labels(ln)))
    return "\n".join(out) + "\n"


# -- labelling files ----------------------------------------------------------

def _parse_labelling_entries(entries, where: str) -> list[tuple[str, str, str]]:
    out = []
    for token in entries:
        if "->" not in token:
            raise ConfigSyntaxError(f"{where}: bad labelling entry {token!r}")
        pair, value = token.split("->", 1)
        pair = pair.strip()
        if not (pair.startswith("{") and pair.endswith("}")):
            raise ConfigSyntaxError(f"{where}: bad pair syntax {pair!r}")
        parts = pair[1:-1].split(",")
        if len(parts) != 2:
            raise ConfigSyntaxError(f"{where}: pair {pair!r} needs two vertices")
        a, b = parts[0].strip(), parts[1].strip()
        if not a or not b or not value:
            raise ConfigSyntaxError(f"{where}: incomplete entry {token!r}")
        out.append((a, b, value))
    return out


def parse_labelling(text: str) -> Labelling:
    """Labelling document: whitespace-separated ``{a,b}-><value>`` entries."""
    entries = []
    for num, row in _significant_lines(text):
        entries.extend(_parse_labelling_entries(row.split(), f"line {num}"))
    if not entries:
        raise ConfigSyntaxError("line 0: empty labelling")
    domain = sorted({x for a, b, _ in entries for x in (a, b)})
    assignment = {}
    for a, b, value in entries:
        key = frozenset((a, b))
        if key in assignment:
            raise ConfigSyntaxError(f"pair {{{a},{b}}} assigned twice")
        assignment[key] = value
    return Labelling(tuple(domain), assignment)


def emit_labelling(lab: Labelling) -> str:
    entries = [f"{{{a},{b}}}->{v}" for a, b, v in lab.as_pairs()]
    return " ".join(entries) + "\n"


# -- perspective data files ---------------------------------------------------

def emit_perspective(data: PerspectiveData, axis_path: str) -> str:
    """Sectioned document; the axis configuration lives in its own file."""
    out = [f"m={data.m}", f"n={data.n}", f"axis={axis_path}",
           "X=" + " ".join(data.simplex)]
    for i in data.indices:
        entries = [f"{{{a},{b}}}->{v}" for a, b, v in data.mu[i].as_pairs()]
        out.append(f"mu[{i}]: " + " ".join(entries))
    for i in data.indices:
        for j in data.indices:
            if i < j:
                perm = data.xi_map(i, j)
                out.append(f"xi[{i}][{j}]: " + " ".join(perm[x] for x in data.simplex))
    return "\n".join(out) + "\n"


def parse_perspective(text: str, load_axis) -> PerspectiveData:
    """Parse perspective data; ``load_axis(path)`` resolves the axis file."""
    m = n = None
    axis = None
    simplex: tuple[str, ...] | None = None
    mu_rows: dict[int, list[tuple[str, str, str]]] = {}
    xi: dict[tuple[int, int], dict[str, str]] = {}
    for num, row in _significant_lines(text):
        where = f"line {num}"
        if row.startswith("m="):
            m = _parse_int(row[2:], where)
        elif row.startswith("n="):
            n = _parse_int(row[2:], where)
        elif row.startswith("axis="):
            axis = load_axis(row[5:].strip())
        elif row.startswith("X="):
            simplex = tuple(row[2:].split())
        elif row.startswith("mu["):
            head, _, rest = row.partition(":")
            i = _parse_index(head, "mu", where)
            mu_rows.setdefault(i, []).extend(
                _parse_labelling_entries(rest.split(), where))
        elif row.startswith("xi["):
            head, _, rest = row.partition(":")
            i, j = _parse_two_indices(head, where)
            if simplex is None:
                raise ConfigSyntaxError(f"{where}: X= must precede xi sections")
            images = rest.split()
            if len(images) != len(simplex):
                raise ConfigSyntaxError(
                    f"{where}: xi[{i}][{j}] needs {len(simplex)} images")
            xi[i, j] = dict(zip(simplex, images))
        else:
            raise ConfigSyntaxError(f"{where}: unrecognised section {row.split()[0]!r}")
    for name, value in (("m", m), ("n", n), ("axis", axis), ("X", simplex)):
        if value is None:
            raise ConfigSyntaxError(f"missing section {name}=")
    mu = {}
    for i, entries in mu_rows.items():
        assignment = {}
        for a, b, value in entries:
            assignment[frozenset((a, b))] = value
        mu[i] = Labelling(tuple(simplex), assignment)
    data = PerspectiveData(m=m, n=n, simplex=simplex, axis=axis, mu=mu, xi=xi)
    data.check()
    return data


def _parse_int(token: str, where: str) -> int:
    try:
        return int(token.strip())
    except ValueError:
        raise ConfigSyntaxError(f"{where}: bad integer {token!r}") from None


def _parse_index(head: str, name: str, where: str) -> int:
    inner = head[len(name):].strip()
    if not (inner.startswith("[") and inner.endswith("]")):
        raise ConfigSyntaxError(f"{where}: bad section header {head!r}")
    return _parse_int(inner[1:-1], where)


def _parse_two_indices(head: str, where: str) -> tuple[int, int]:
    inner = head[2:].strip()
    parts = inner.replace("][", " ").strip("[]").split()
    if len(parts) != 2:
        raise ConfigSyntaxError(f"{where}: bad section header {head!r}")
    return _parse_int(parts[0], where), _parse_int(parts[1], where)


# -- swap certificates --------------------------------------------------------

def emit_swap_certificate(cert: SwapCertificate) -> str:
    return "\n".join([
        f"center {cert.center}",
        f"crossing {cert.crossing}",
        f"edge1 {cert.edge1[0]} {cert.edge1[1]}",
        f"edge2 {cert.edge2[0]} {cert.edge2[1]}",
    ]) + "\n"


def parse_swap_certificate(text: str) -> SwapCertificate:
    fields: dict[str, list[str]] = {}
    for num, row in _significant_lines(text):
        tokens = row.split()
        if tokens[0] not in ("center", "crossing", "edge1", "edge2"):
            raise ConfigSyntaxError(f"line {num}: unknown field {tokens[0]!r}")
        fields[tokens[0]] = tokens[1:]
    for key, width in (("center", 1), ("crossing", 1), ("edge1", 2), ("edge2", 2)):
        if key not in fields:
            raise ConfigSyntaxError(f"missing field {key!r}")
        if len(fields[key]) != width:
            raise ConfigSyntaxError(f"field {key!r} needs {width} tokens")
    return SwapCertificate(
        center=fields["center"][0], crossing=fields["crossing"][0],
        edge1=tuple(fields["edge1"]), edge2=tuple(fields["edge2"]))
