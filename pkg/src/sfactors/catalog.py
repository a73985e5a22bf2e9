"""Group descriptors (``cyclic:8``, ``product:cyclic:2xdihedral:3``, ``z``...)
and the built-in catalogs."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from pathlib import Path

from . import groups as _g
from . import enumerable as _e
from .errors import InvalidDescriptor, ParseError

FINITE_KINDS = ("cyclic", "dihedral", "quaternion", "elemabelian", "product", "sym", "alt", "file")
ENUMERABLE_KINDS = ("z", "z2", "free", "dinf", "pruefer", "eab2inf")


@dataclass(frozen=True)
class GroupDescriptor:
    kind: str
    params: tuple = ()

    def __str__(self):
        if self.kind == "product":
            return f"product:{self.params[0]}x{self.params[1]}"
        if not self.params:
            return self.kind
        return f"{self.kind}:" + ",".join(str(p) for p in self.params)

    @property
    def is_finite(self) -> bool:
        return self.kind in FINITE_KINDS


def _ints(kind, rest, count):
    try:
        vals = tuple(int(x) for x in rest.split(","))
    except ValueError:
        raise InvalidDescriptor(f"{kind}: expected integer parameters, got {rest!r}") from None
    if len(vals) != count:
        raise InvalidDescriptor(f"{kind}: expected {count} parameter(s), got {len(vals)}")
    return vals


def parse_descriptor(text: str) -> GroupDescriptor:
    text = text.strip()
    kind, _, rest = text.partition(":")
    kind = kind.lower()
    if kind in ("z", "z2", "dinf", "eab2inf") and not rest:
        return GroupDescriptor(kind)
    if kind == "free":
        if rest not in ("", "2"):
            raise InvalidDescriptor("only the free group of rank 2 is provided")
        return GroupDescriptor("free", (2,))
    if kind == "pruefer":
        (p,) = _ints(kind, rest, 1)
        if p not in (2, 3):
            raise InvalidDescriptor(f"pruefer: p must be 2 or 3, got {p}")
        return GroupDescriptor(kind, (p,))
    if kind in ("cyclic", "dihedral", "quaternion", "sym", "alt"):
        return GroupDescriptor(kind, _ints(kind, rest, 1))
    if kind == "elemabelian":
        return GroupDescriptor(kind, _ints(kind, rest, 2))
    if kind == "file":
        if not rest:
            raise InvalidDescriptor("file: missing path")
        return GroupDescriptor(kind, (rest,))
    if kind == "product":
        # split at the first 'x' leaving two parseable finite descriptors
        for i, ch in enumerate(rest):
            if ch != "x":
                continue
            try:
                left, right = parse_descriptor(rest[:i]), parse_descriptor(rest[i + 1 :])
            except InvalidDescriptor:
                continue
            if left.is_finite and right.is_finite:
                return GroupDescriptor(kind, (left, right))
        raise InvalidDescriptor(f"product: cannot split {rest!r} into two finite groups")
    raise InvalidDescriptor(f"unknown group descriptor {text!r}")


def build_group(d):
    """Build a validated FiniteGroup or an EnumerableGroup from a descriptor
    (or its text form)."""
    if isinstance(d, str):
        d = parse_descriptor(d)
    return _build(d)


@lru_cache(maxsize=128)
def _build(d: GroupDescriptor):
    k, p = d.kind, d.params
    if k == "cyclic":
        G = _g.cyclic(p[0])
    elif k == "dihedral":
        G = _g.dihedral(p[0])
    elif k == "quaternion":
        G = _g.quaternion(p[0])
    elif k == "elemabelian":
        G = _g.elementary_abelian(*p)
    elif k == "product":
        G = _g.direct_product(_build(p[0]), _build(p[1]))
    elif k == "sym":
        G = _g.symmetric(p[0])
    elif k == "alt":
        G = _g.alternating(p[0])
    elif k == "file":
        try:
            text = Path(p[0]).read_text(encoding="utf-8")
        except OSError as exc:
            raise InvalidDescriptor(f"cannot read group table {p[0]!r}: {exc}") from None
        G = _g.parse_group_table(text, label=Path(p[0]).name)
    elif k == "z":
        G = _e.Integers()
    elif k == "z2":
        G = _e.IntegerLattice()
    elif k == "free":
        G = _e.FreeGroup2()
    elif k == "dinf":
        G = _e.InfiniteDihedral()
    elif k == "pruefer":
        G = _e.Pruefer(p[0])
    elif k == "eab2inf":
        G = _e.InfiniteElementaryAbelian2()
    else:  # pragma: no cover - parse_descriptor rejects unknown kinds
        raise InvalidDescriptor(k)
    G.label = str(d)
    return G


ENUMERABLE_CATALOG = ("z", "z2", "free:2", "dinf", "pruefer:2", "pruefer:3", "eab2inf")

_FINITE_CATALOG = (
    [f"cyclic:{n}" for n in range(1, 25)]
    + [f"dihedral:{n}" for n in range(3, 13)]
    + [f"quaternion:{n}" for n in (8, 12, 16, 20, 24)]
    + ["elemabelian:2,2", "elemabelian:2,3", "elemabelian:3,2", "elemabelian:2,4"]
    + [
        "product:cyclic:2xcyclic:4",
        "product:cyclic:2xcyclic:6",
        "product:cyclic:2xcyclic:8",
        "product:cyclic:4xcyclic:4",
        "product:cyclic:2xcyclic:10",
        "product:cyclic:2xcyclic:12",
        "product:cyclic:2xdihedral:4",
        "product:cyclic:2xquaternion:8",
        "product:cyclic:3xdihedral:3",
        "product:cyclic:2xalt:4",
        "product:cyclic:3xcyclic:6",
        "alt:4",
        "sym:4",
    ]
)


def finite_catalog(max_order: int = 24) -> list[tuple[str, _g.FiniteGroup]]:
    """Catalog finite groups of order at most ``max_order``, sorted by order."""
    out = []
    for text in _FINITE_CATALOG:
        G = build_group(text)
        if G.order <= max_order:
            out.append((text, G))
    out.sort(key=lambda item: item[1].order)
    return out


def enumerable_catalog() -> list[tuple[str, _e.EnumerableGroup]]:
    return [(text, build_group(text)) for text in ENUMERABLE_CATALOG]


def parse_elements(G, text: str) -> list:
    """Split a comma-separated element list (commas inside parentheses are kept)."""
    if text is None or not text.strip():
        return []
    tokens, depth, cur = [], 0, []
    for ch in text:
        if ch in "([":
            depth += 1
        elif ch in ")]":
            depth -= 1
        if ch in ",;" and depth == 0:
            tokens.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
    tokens.append("".join(cur))
    out = []
    for tok in tokens:
        if not tok.strip():
            raise ParseError(f"empty element in list {text!r}")
        out.append(G.parse_element(tok))
    return out
