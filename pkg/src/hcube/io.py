"""HCUBE text files, family directories, and graph / two-graph serialization.

Layout::

    HCUBE 1
    n=<order> d=<dim> alphabet=<pm1|bin|pmz|sym:k>
    [meta key=value ...]
    payload

Character alphabets write one symbol per cell (``+``/``-``, ``0``/``1``,
``+``/``-``/``0``); ``sym:k`` writes decimal integers separated by spaces.
The writer puts one last-axis row per line. The reader ignores whitespace in
the payload and rejects foreign characters and wrong lengths.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from pathlib import Path
from typing import Sequence

import numpy as np

from .core import BIN, SYM, Alphabet, Hypercube, InputError
from .latin import LatinHypercube
from .twographs import Graph, SkewTwoGraph, Tournament, TwoGraph

MAGIC = "HCUBE 1"
MANIFEST = "family.manifest"

_CHARS = {
    "pm1": {"+": 1, "-": -1},
    "bin": {"0": 0, "1": 1},
    "pmz": {"+": 1, "-": -1, "0": 0},
}
_HEADER = re.compile(r"n=(\d+) d=(\d+) alphabet=(pm1|bin|pmz|sym:\d+)")
_META = re.compile(r"meta((?: [a-z]+=-?\d+)+)")


@dataclass(frozen=True)
class Document:
    cube: Hypercube
    meta: dict[str, int] = field(default_factory=dict)


def dumps(cube: Hypercube, meta: dict[str, int] | None = None) -> str:
    n, d = cube.order, cube.dim
    lines = [MAGIC, f"n={n} d={d} alphabet={cube.alphabet}"]
    if meta:
        lines.append("meta " + " ".join(f"{k}={int(v)}" for k, v in meta.items()))
    rows = cube.array.reshape(-1, n)
    if cube.alphabet.kind == "sym":
        lines.extend(" ".join(map(str, row)) for row in rows.tolist())
    else:
        inverse = {v: c for c, v in _CHARS[cube.alphabet.kind].items()}
        lines.extend("".join(inverse[v] for v in row) for row in rows.tolist())
    return "\n".join(lines) + "\n"


def loads(text: str) -> Document:
    lines = text.split("\n")
    if not lines or lines[0].rstrip("\r") != MAGIC:
        raise InputError("missing 'HCUBE 1' header")
    if len(lines) < 2:
        raise InputError("missing size line")
    m = _HEADER.fullmatch(lines[1].rstrip("\r"))
    if not m:
        raise InputError(f"bad size line {lines[1]!r}")
    n, d = int(m.group(1)), int(m.group(2))
    if n < 1 or d < 1:
        raise InputError("n and d must be positive")
    alphabet = Alphabet.parse(m.group(3))
    rest = lines[2:]
    meta: dict[str, int] = {}
    if rest and rest[0].startswith("meta"):
        mm = _META.fullmatch(rest[0].rstrip("\r"))
        if not mm:
            raise InputError(f"bad meta line {rest[0]!r}")
        for item in mm.group(1).split():
            key, value = item.split("=")
            meta[key] = int(value)
        rest = rest[1:]
    payload = "\n".join(rest)
    size = n ** d
    if alphabet.kind == "sym":
        tokens = payload.split()
        if not all(re.fullmatch(r"\d+", t) for t in tokens):
            raise InputError("sym payload must be non-negative decimal integers")
        values = [int(t) for t in tokens]
    else:
        table = _CHARS[alphabet.kind]
        chars = [c for c in payload if not c.isspace()]
        bad = [c for c in chars if c not in table]
        if bad:
            raise InputError(f"unexpected character {bad[0]!r} in {alphabet} payload")
        values = [table[c] for c in chars]
    if len(values) != size:
        raise InputError(f"payload has {len(values)} entries, expected {size}")
    arr = np.array(values, dtype=np.int64).reshape((n,) * d)
    return Document(Hypercube(arr, alphabet), meta)


def save(path, cube: Hypercube, meta: dict[str, int] | None = None) -> None:
    Path(path).write_text(dumps(cube, meta), encoding="utf-8", newline="\n")


def load(path) -> Document:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except (OSError, UnicodeDecodeError) as exc:
        raise InputError(f"cannot read {path}: {exc}") from None
    return loads(text)


def load_cube(path) -> Hypercube:
    return load(path).cube


def save_latin(path, L: LatinHypercube) -> None:
    save(path, L.cube, {"r": L.r, "t": L.claimed_t})


def load_latin(path, r: int | None = None, t: int | None = None) -> LatinHypercube:
    """Read a Latin hypercube; ``r`` and ``t`` default to the file's meta line."""
    doc = load(path)
    r = doc.meta.get("r") if r is None else r
    t = doc.meta.get("t", 1) if t is None else t
    if r is None:
        raise InputError("no r given and none recorded in the file")
    return LatinHypercube(doc.cube, doc.cube.order, doc.cube.dim, r, t)


def save_family(directory, members: Sequence[Hypercube], stem: str = "member") -> Path:
    """Write each member as an HCUBE file plus a manifest of relative paths, in order."""
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    width = len(str(max(len(members) - 1, 0)))
    names = []
    for i, M in enumerate(members):
        name = f"{stem}_{i:0{width}d}.hc"
        save(directory / name, M)
        names.append(name)
    manifest = directory / MANIFEST
    manifest.write_text("\n".join(names) + "\n", encoding="utf-8", newline="\n")
    return manifest


def load_family(manifest) -> list[Hypercube]:
    manifest = Path(manifest)
    try:
        names = [ln.strip() for ln in manifest.read_text(encoding="utf-8").splitlines() if ln.strip()]
    except OSError as exc:
        raise InputError(f"cannot read {manifest}: {exc}") from None
    if not names:
        raise InputError("empty family manifest")
    return [load_cube(manifest.parent / name) for name in names]


def graph_to_cube(G: Graph | Tournament) -> Hypercube:
    return Hypercube(G.adjacency if isinstance(G, Graph) else G.arcs, BIN)


def graph_from_cube(cube: Hypercube) -> Graph:
    return Graph(cube.array)


def tournament_from_cube(cube: Hypercube) -> Tournament:
    return Tournament(cube.array)


def two_graph_to_cube(T: TwoGraph | SkewTwoGraph) -> Hypercube:
    """Indicator over ordered triples as a ``sym:2`` cube."""
    return Hypercube(T.indicator(), SYM(2))


def two_graph_from_cube(cube: Hypercube) -> TwoGraph:
    T = TwoGraph.from_indicator(cube.array)
    if not np.array_equal(T.indicator(), cube.array):
        raise InputError("indicator is not invariant under coordinate permutations")
    return T


def skew_two_graph_from_cube(cube: Hypercube) -> SkewTwoGraph:
    S = SkewTwoGraph.from_indicator(cube.array)
    if not np.array_equal(S.indicator(), cube.array):
        raise InputError("indicator is not a consistent orientation of every triple")
    return S

