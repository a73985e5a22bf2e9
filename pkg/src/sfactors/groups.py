"""Finite groups stored as multiplication tables, identity pinned to index 0."""

from __future__ import annotations

import itertools
import math
from typing import Iterable, Iterator, Sequence

import numpy as np

from .errors import InvalidDescriptor, OrderInfinite, ParseError, TableInvalid

INFINITE = math.inf
MAX_ORDER = 4096
EXHAUSTIVE_ASSOC_LIMIT = 64
ASSOC_SAMPLES = 100_000


def validate_table(table: np.ndarray, *, seed: int = 0) -> None:
    """Raise TableInvalid naming the first violated group axiom.

    Associativity is checked on every triple up to order 64 and on
    ``ASSOC_SAMPLES`` random triples above that.
    """
    t = np.asarray(table)
    if t.ndim != 2 or t.shape[0] != t.shape[1] or t.shape[0] == 0:
        raise TableInvalid("shape", t.shape, f"table must be a non-empty square array, got {t.shape}")
    n = t.shape[0]
    bad = np.argwhere((t < 0) | (t >= n))
    if len(bad):
        a, b = bad[0]
        raise TableInvalid("range", (a, b), f"entry ({a},{b}) = {t[a, b]} is not in 0..{n - 1}")
    ids = np.arange(n)
    bad = np.flatnonzero(t[0] != ids)
    if len(bad):
        raise TableInvalid("identity", (0, bad[0]), f"0*{bad[0]} != {bad[0]}: index 0 is not a left identity")
    bad = np.flatnonzero(t[:, 0] != ids)
    if len(bad):
        raise TableInvalid("identity", (bad[0], 0), f"{bad[0]}*0 != {bad[0]}: index 0 is not a right identity")
    srt = np.sort(t, axis=1)
    bad = np.flatnonzero((srt != ids).any(axis=1))
    if len(bad):
        raise TableInvalid("latin-row", (bad[0],), f"row {bad[0]} is not a permutation")
    srt = np.sort(t, axis=0)
    bad = np.flatnonzero((srt != ids[:, None]).any(axis=0))
    if len(bad):
        raise TableInvalid("latin-column", (bad[0],), f"column {bad[0]} is not a permutation")
    bad = np.flatnonzero(~(t == 0).any(axis=1))
    if len(bad):
        raise TableInvalid("inverse", (bad[0],), f"element {bad[0]} has no right inverse")

    if n <= EXHAUSTIVE_ASSOC_LIMIT:
        left = t[t]  # left[a, b, c] = (ab)c
        right = t[ids[:, None, None], t[None, :, :]]  # a(bc)
        bad = np.argwhere(left != right)
    else:
        rng = np.random.default_rng(seed)
        a, b, c = rng.integers(0, n, size=(3, ASSOC_SAMPLES))
        mism = np.flatnonzero(t[t[a, b], c] != t[a, t[b, c]])
        bad = [(a[i], b[i], c[i]) for i in mism[:1]]
    if len(bad):
        a, b, c = (int(x) for x in bad[0])
        raise TableInvalid("associativity", (a, b, c), f"({a}*{b})*{c} != {a}*({b}*{c})")


class FiniteGroup:
    """A finite group given by its Cayley table.

    ``table[a][b]`` is the index of the product ``ab``; index 0 is the identity.
    Instances are immutable once built.
    """

    is_finite = True

    def __init__(self, table, names: Sequence[str] | None = None, label: str = "", *, validate: bool = True):
        t = np.array(table, dtype=np.int64)
        if validate:
            validate_table(t)
        n = t.shape[0]
        if names is None:
            names = ["e"] + [f"x{i}" for i in range(1, n)]
        names = tuple(str(s) for s in names)
        if len(names) != n:
            raise ParseError(f"expected {n} element names, got {len(names)}")
        if len(set(names)) != n:
            raise ParseError("element names must be distinct")
        t.setflags(write=False)
        self.table = t
        self.names = names
        self.label = label
        self._rows = tuple(tuple(int(x) for x in row) for row in t)
        self._inv = tuple(row.index(0) for row in self._rows)
        self._by_name = {s: i for i, s in enumerate(names)}

    def __repr__(self):
        return f"FiniteGroup({self.label or '?'}, order={self.order})"

    def __len__(self):
        return self.order

    def __getstate__(self):
        return {"table": self.table, "names": self.names, "label": self.label}

    def __setstate__(self, state):
        self.__init__(state["table"], state["names"], state["label"], validate=False)

    @property
    def order(self) -> int:
        return len(self._rows)

    @property
    def identity(self) -> int:
        return 0

    def mul(self, a: int, b: int) -> int:
        return self._rows[a][b]

    def inv(self, a: int) -> int:
        return self._inv[a]

    def power(self, a: int, k: int) -> int:
        if k < 0:
            a, k = self._inv[a], -k
        x = 0
        row = self._rows
        for _ in range(k):
            x = row[x][a]
        return x

    def elements(self) -> range:
        return range(self.order)

    def enumerate(self) -> Iterator[int]:
        return iter(range(self.order))

    def order_of(self, a: int) -> int:
        k, x = 1, a
        while x != 0:
            x = self._rows[x][a]
            k += 1
        return k

    def name(self, a: int) -> str:
        return self.names[a]

    format = name

    def parse_element(self, token: str) -> int:
        """Resolve an element given by name or by decimal index."""
        token = token.strip()
        if token in self._by_name:
            return self._by_name[token]
        try:
            i = int(token)
        except ValueError:
            raise ParseError(f"unknown element {token!r}") from None
        if not 0 <= i < self.order:
            raise ParseError(f"element index {i} out of range 0..{self.order - 1}")
        return i

    def sort_key(self, a: int):
        return a

    def is_abelian(self) -> bool:
        return bool((self.table == self.table.T).all())


def element_order(G, a) -> int | float:
    """Order of ``a``; ``INFINITE`` is only possible for enumerable groups."""
    return G.order_of(a)


def cyclic_subgroup(G, a) -> frozenset:
    if G.order_of(a) == INFINITE:
        raise OrderInfinite(f"{G.format(a)} has infinite order")
    out = [a]
    x = a
    while x != G.identity:
        x = G.mul(x, a)
        out.append(x)
    return frozenset(out)


def generated_subgroup(G, gens: Iterable, limit: int = MAX_ORDER) -> frozenset:
    """Closure of ``gens`` under multiplication; works for any group whose
    generated subgroup is finite. Raises OrderInfinite past ``limit`` elements."""
    gens = list(gens)
    seen = {G.identity}
    frontier = [G.identity]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = G.mul(x, g)
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
                    if len(seen) > limit:
                        raise OrderInfinite(f"subgroup generated by {gens} exceeds {limit} elements")
        frontier = nxt
    return frozenset(seen)


def is_subgroup(G, H: Iterable) -> bool:
    H = set(H)
    if G.identity not in H:
        return False
    return all(G.mul(a, G.inv(b)) in H for a in H for b in H)


def squares_set(G: FiniteGroup) -> frozenset:
    return frozenset(G.mul(g, g) for g in G.elements())


def involutions(G: FiniteGroup) -> frozenset:
    return frozenset(g for g in G.elements() if g != 0 and G.mul(g, g) == 0)


# --- builders -------------------------------------------------------------


def _check_order(n: int) -> None:
    if not 1 <= n <= MAX_ORDER:
        raise InvalidDescriptor(f"group order must be in 1..{MAX_ORDER}, got {n}")


def _power_name(base: str, k: int) -> str:
    if k == 0:
        return ""
    return base if k == 1 else f"{base}^{k}"


def cyclic(n: int) -> FiniteGroup:
    _check_order(n)
    i = np.arange(n)
    names = ["e"] + [_power_name("g", k) for k in range(1, n)]
    return FiniteGroup((i[:, None] + i[None, :]) % n, names, f"C{n}")


def _metacyclic(rot: int, b_square: int, label: str) -> FiniteGroup:
    # elements a^i b^j at index i + rot*j, with b a b^-1 = a^-1 and b^2 = a^b_square
    n = 2 * rot
    _check_order(n)
    idx = np.arange(n)
    i, j = idx % rot, idx // rot
    I, J = i[:, None], j[:, None]
    K, L = i[None, :], j[None, :]
    exp = np.where(J == 0, I + K, I - K)
    exp = exp + np.where((J == 1) & (L == 1), b_square, 0)
    jj = np.where((J == 1) & (L == 1), 0, J + L)
    table = (exp % rot) + rot * jj
    names = []
    for x in range(n):
        s = _power_name("a", int(i[x])) + ("b" if j[x] else "")
        names.append(s or "e")
    return FiniteGroup(table, names, label)


def dihedral(n: int) -> FiniteGroup:
    """Symmetries of the regular n-gon, order 2n (``a`` rotation, ``b`` reflection)."""
    if n < 1:
        raise InvalidDescriptor(f"dihedral parameter must be >= 1, got {n}")
    return _metacyclic(n, 0, f"D{n}")


def quaternion(order: int) -> FiniteGroup:
    """Generalized quaternion (dicyclic) group of the given order 4n:
    a^{2n} = 1, b^2 = a^n, b a b^-1 = a^-1."""
    if order < 4 or order % 4:
        raise InvalidDescriptor(f"quaternion order must be a positive multiple of 4, got {order}")
    n = order // 4
    return _metacyclic(2 * n, n, f"Q{order}")


def elementary_abelian(p: int, k: int) -> FiniteGroup:
    if p < 2 or any(p % q == 0 for q in range(2, math.isqrt(p) + 1)):
        raise InvalidDescriptor(f"{p} is not prime")
    if k < 1:
        raise InvalidDescriptor(f"rank must be >= 1, got {k}")
    n = p**k
    _check_order(n)
    idx = np.arange(n)
    digits = np.stack([(idx // p**r) % p for r in range(k)])  # little-endian
    table = np.zeros((n, n), dtype=np.int64)
    for r in range(k):
        table += ((digits[r][:, None] + digits[r][None, :]) % p) * p**r
    names = []
    for x in range(n):
        parts = [_power_name(f"e{r + 1}", int(digits[r][x])) for r in range(k)]
        names.append("".join(parts) or "e")
    return FiniteGroup(table, names, f"E{p}^{k}")


def direct_product(G: FiniteGroup, H: FiniteGroup) -> FiniteGroup:
    m = H.order
    _check_order(G.order * m)
    tg, th = G.table, H.table
    table = (tg[:, None, :, None] * m + th[None, :, None, :]).reshape(G.order * m, G.order * m)
    names = ["e"] + [f"({G.names[x // m]},{H.names[x % m]})" for x in range(1, G.order * m)]
    return FiniteGroup(table, names, f"{G.label}x{H.label}")


def _cycle_name(p: tuple[int, ...]) -> str:
    seen, out = set(), []
    for s in range(len(p)):
        if s in seen or p[s] == s:
            continue
        cyc, x = [], s
        while x not in seen:
            seen.add(x)
            cyc.append(str(x + 1))
            x = p[x]
        out.append("(" + "".join(cyc) + ")")
    return "".join(out) or "e"


def _permutation_group(perms: list[tuple[int, ...]], label: str) -> FiniteGroup:
    index = {p: i for i, p in enumerate(perms)}
    n = len(perms[0])
    # (pq)(x) = p(q(x))
    table = [[index[tuple(p[q[x]] for x in range(n))] for q in perms] for p in perms]
    return FiniteGroup(table, [_cycle_name(p) for p in perms], label)


def _parity(p: tuple[int, ...]) -> int:
    return sum(1 for i, j in itertools.combinations(range(len(p)), 2) if p[i] > p[j]) % 2


def symmetric(n: int) -> FiniteGroup:
    if not 1 <= n <= 5:
        raise InvalidDescriptor(f"symmetric groups are supported for 1 <= n <= 5, got {n}")
    return _permutation_group(list(itertools.permutations(range(n))), f"S{n}")


def alternating(n: int) -> FiniteGroup:
    if not 1 <= n <= 5:
        raise InvalidDescriptor(f"alternating groups are supported for 1 <= n <= 5, got {n}")
    perms = [p for p in itertools.permutations(range(n)) if _parity(p) == 0]
    return _permutation_group(perms, f"A{n}")


# --- table file format ----------------------------------------------------


def parse_group_table(text: str, label: str = "") -> FiniteGroup:
    """Parse the plain-text table format: order, optional ``#`` name row, rows."""
    lines = [ln.strip() for ln in text.replace("\r\n", "\n").split("\n")]
    lines = [ln for ln in lines if ln]
    if not lines:
        raise ParseError("empty group table")
    try:
        n = int(lines[0])
    except ValueError:
        raise ParseError(f"first line must be the group order, got {lines[0]!r}") from None
    if not 1 <= n <= MAX_ORDER:
        raise ParseError(f"group order must be in 1..{MAX_ORDER}, got {n}")
    names = None
    body = lines[1:]
    if body and body[0].startswith("#"):
        names = body[0][1:].split()
        body = body[1:]
    if len(body) != n:
        raise ParseError(f"expected {n} table rows, got {len(body)}")
    rows = []
    for r, ln in enumerate(body):
        try:
            row = [int(tok) for tok in ln.split()]
        except ValueError:
            raise ParseError(f"row {r} contains a non-integer entry") from None
        if len(row) != n:
            raise ParseError(f"row {r} has {len(row)} entries, expected {n}")
        rows.append(row)
    return FiniteGroup(rows, names, label)


def format_group_table(G: FiniteGroup) -> str:
    lines = [str(G.order), "# " + " ".join(G.names)]
    lines += [" ".join(str(x) for x in row) for row in G._rows]
    return "\n".join(lines) + "\n"
