"""Countable infinite groups given by canonical element codes.

Each group supplies multiplication, inversion, a closed-form element order
(``INFINITE`` where appropriate) and an injective enumeration starting at
the identity.
"""

from __future__ import annotations

import itertools
import re
from fractions import Fraction
from typing import Hashable, Iterator

from .errors import InvalidDescriptor, ParseError
from .groups import INFINITE


def _integers() -> Iterator[int]:
    yield 0
    for k in itertools.count(1):
        yield k
        yield -k


class EnumerableGroup:
    is_finite = False
    label = "?"

    identity: Hashable

    def mul(self, a, b):
        raise NotImplementedError

    def inv(self, a):
        raise NotImplementedError

    def order_of(self, a):
        raise NotImplementedError

    def enumerate(self) -> Iterator:
        raise NotImplementedError

    def prefix(self, count: int) -> list:
        return list(itertools.islice(self.enumerate(), count))

    def power(self, a, k: int):
        if k < 0:
            a, k = self.inv(a), -k
        x, base = self.identity, a
        while k:
            if k & 1:
                x = self.mul(x, base)
            base = self.mul(base, base)
            k >>= 1
        return x

    def format(self, a) -> str:
        return str(a)

    name = format

    def parse_element(self, token: str):
        raise NotImplementedError

    def sort_key(self, a):
        return a

    def __repr__(self):
        return f"{type(self).__name__}({self.label})"


class Integers(EnumerableGroup):
    label = "Z"
    identity = 0

    def mul(self, a, b):
        return a + b

    def inv(self, a):
        return -a

    def order_of(self, a):
        return 1 if a == 0 else INFINITE

    def power(self, a, k):
        return a * k

    def enumerate(self):
        return _integers()

    def parse_element(self, token):
        try:
            return int(token)
        except ValueError:
            raise ParseError(f"not an integer: {token!r}") from None


class IntegerLattice(EnumerableGroup):
    """Z^2 under addition; enumerated box by box, max(|x|,|y|) = 0, 1, 2, ..."""

    label = "Z2"
    identity = (0, 0)

    def mul(self, a, b):
        return (a[0] + b[0], a[1] + b[1])

    def inv(self, a):
        return (-a[0], -a[1])

    def order_of(self, a):
        return 1 if a == (0, 0) else INFINITE

    def enumerate(self):
        yield (0, 0)
        for r in itertools.count(1):
            # walk the boundary of the box counterclockwise from (r, 1-r)
            for y in range(1 - r, r + 1):
                yield (r, y)
            for x in range(r - 1, -r - 1, -1):
                yield (x, r)
            for y in range(r - 1, -r - 1, -1):
                yield (-r, y)
            for x in range(1 - r, r + 1):
                yield (x, -r)

    def format(self, a):
        return f"({a[0]},{a[1]})"

    def parse_element(self, token):
        m = re.fullmatch(r"\(?\s*(-?\d+)\s*,\s*(-?\d+)\s*\)?", token.strip())
        if not m:
            raise ParseError(f"expected (x,y), got {token!r}")
        return (int(m.group(1)), int(m.group(2)))


_FREE_LETTERS = (1, -1, 2, -2)  # a < a^-1 < b < b^-1
_FREE_NAMES = {1: "a", 2: "b"}


class FreeGroup2(EnumerableGroup):
    """Free group on a, b. Codes are reduced words: tuples over {1, -1, 2, -2}."""

    label = "F2"
    identity = ()

    def mul(self, a, b):
        i = 0
        while i < min(len(a), len(b)) and a[-1 - i] == -b[i]:
            i += 1
        return a[: len(a) - i] + b[i:]

    def inv(self, a):
        return tuple(-x for x in reversed(a))

    def order_of(self, a):
        return 1 if not a else INFINITE

    def enumerate(self):
        yield ()
        for length in itertools.count(1):
            for w in itertools.product(_FREE_LETTERS, repeat=length):
                if all(w[i] != -w[i + 1] for i in range(length - 1)):
                    yield w

    def format(self, a):
        if not a:
            return "e"
        parts = []
        for letter, run in itertools.groupby(a):
            k = len(list(run)) * (1 if letter > 0 else -1)
            name = _FREE_NAMES[abs(letter)]
            parts.append(name if k == 1 else f"{name}^{k}")
        return "*".join(parts)

    def parse_element(self, token):
        token = token.strip()
        if token in ("", "e"):
            return ()
        word = ()
        for part in token.split("*"):
            m = re.fullmatch(r"([ab])(?:\^(-?\d+))?", part.strip())
            if not m:
                raise ParseError(f"bad free-group word {token!r}")
            letter = 1 if m.group(1) == "a" else 2
            k = int(m.group(2) or 1)
            word = self.mul(word, (letter if k > 0 else -letter,) * abs(k))
        return word

    def sort_key(self, a):
        return (len(a), tuple(_FREE_LETTERS.index(x) for x in a))


class InfiniteDihedral(EnumerableGroup):
    """D_inf = <r, t | t^2, t r t = r^-1>; code (k, s) stands for r^k t^s."""

    label = "Dinf"
    identity = (0, 0)

    def mul(self, a, b):
        k, s = a
        m, t = b
        return (k - m if s else k + m, s ^ t)

    def inv(self, a):
        k, s = a
        return a if s else (-k, 0)

    def order_of(self, a):
        if a[1]:
            return 2
        return 1 if a[0] == 0 else INFINITE

    def enumerate(self):
        for k in _integers():
            yield (k, 0)
            yield (k, 1)

    def format(self, a):
        k, s = a
        r = "" if k == 0 else ("r" if k == 1 else f"r^{k}")
        return (r + ("t" if s else "")) or "e"

    def parse_element(self, token):
        m = re.fullmatch(r"(?:r(?:\^(-?\d+))?)?(t)?", token.strip())
        if token.strip() == "e":
            return (0, 0)
        if not m or not token.strip():
            raise ParseError(f"expected r^k or r^k t, got {token!r}")
        has_r = token.strip().startswith("r")
        k = int(m.group(1)) if m.group(1) else (1 if has_r else 0)
        return (k, 1 if m.group(2) else 0)


class Pruefer(EnumerableGroup):
    """Z(p^inf): fractions a/p^k modulo 1 under addition."""

    def __init__(self, p: int):
        if p not in (2, 3):
            raise InvalidDescriptor(f"Pruefer groups are provided for p in (2, 3), got {p}")
        self.p = p
        self.label = f"Pruefer({p})"
        self.identity = Fraction(0)

    def mul(self, a, b):
        return (a + b) % 1

    def inv(self, a):
        return (-a) % 1

    def order_of(self, a):
        return a.denominator

    def power(self, a, k):
        return (a * k) % 1

    def enumerate(self):
        yield Fraction(0)
        for k in itertools.count(1):
            q = self.p**k
            for a in range(1, q):
                if a % self.p:
                    yield Fraction(a, q)

    def parse_element(self, token):
        try:
            x = Fraction(token.strip()) % 1
        except (ValueError, ZeroDivisionError):
            raise ParseError(f"expected a fraction a/p^k, got {token!r}") from None
        d = x.denominator
        while d % self.p == 0:
            d //= self.p
        if d != 1:
            raise ParseError(f"{token!r} is not a {self.p}-power fraction")
        return x


class InfiniteElementaryAbelian2(EnumerableGroup):
    """Direct sum of countably many C2; codes are bitmasks, product is XOR."""

    label = "EAb2inf"
    identity = 0

    def mul(self, a, b):
        return a ^ b

    def inv(self, a):
        return a

    def order_of(self, a):
        return 1 if a == 0 else 2

    def power(self, a, k):
        return a if k % 2 else 0

    def enumerate(self):
        return itertools.count()

    def parse_element(self, token):
        try:
            x = int(token, 0)
        except ValueError:
            raise ParseError(f"expected a non-negative bitmask, got {token!r}") from None
        if x < 0:
            raise ParseError(f"expected a non-negative bitmask, got {token!r}")
        return x
