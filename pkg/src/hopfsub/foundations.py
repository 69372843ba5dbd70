"""Label sets, decompositions, set partitions and exact linear combinations.

Labels are any hashable, totally ordered values.  Ground labels are short
strings; the blocks of a partition are themselves used as labels (a block is
the sorted tuple of its labels), so partitions of partitions nest naturally.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from typing import Callable, Hashable, Iterable, Iterator, Mapping, Sequence

Label = Hashable
LabelSet = tuple
Block = tuple
SetPartition = tuple  # tuple of blocks, sorted by minimum label


class DomainError(ValueError):
    """An argument lies outside the domain an operation is defined on."""


def labelset(labels: Iterable[Label]) -> LabelSet:
    out = tuple(sorted(set(labels)))
    return out


def canonical_labels(n: int) -> LabelSet:
    """The label set ``{"1", ..., "n"}``."""
    if n > 9:
        raise ValueError("canonical labels only go up to 9")
    return tuple(str(i) for i in range(1, n + 1))


def complement(labels: Sequence[Label], part: Iterable[Label]) -> LabelSet:
    part = set(part)
    return tuple(x for x in labels if x not in part)


def is_subset(small: Iterable[Label], big: Iterable[Label]) -> bool:
    return set(small) <= set(big)


# -- decompositions ---------------------------------------------------------

def enumerate_decompositions(labels: Sequence[Label], k: int) -> list[tuple[LabelSet, ...]]:
    """All ordered decompositions of ``labels`` into ``k`` (possibly empty) parts.

    Order is base-k counting over the labels, last label fastest.
    """
    if k < 1:
        raise ValueError("k must be positive")
    labels = labelset(labels)
    out = []
    for assign in itertools.product(range(k), repeat=len(labels)):
        parts = [[] for _ in range(k)]
        for x, slot in zip(labels, assign):
            parts[slot].append(x)
        out.append(tuple(tuple(p) for p in parts))
    return out


def subsets(labels: Sequence[Label]) -> Iterator[LabelSet]:
    labels = labelset(labels)
    for r in range(len(labels) + 1):
        yield from itertools.combinations(labels, r)


# -- set partitions ---------------------------------------------------------

def enumerate_partitions(labels: Sequence[Label]) -> list[SetPartition]:
    """All set partitions of ``labels``, in restricted-growth-string order."""
    labels = labelset(labels)
    n = len(labels)
    if n == 0:
        return [()]
    out = []

    def grow(rgs: list[int], top: int) -> None:
        if len(rgs) == n:
            blocks = [[] for _ in range(top + 1)]
            for x, b in zip(labels, rgs):
                blocks[b].append(x)
            out.append(tuple(tuple(b) for b in blocks))
            return
        for b in range(top + 2):
            rgs.append(b)
            grow(rgs, max(top, b))
            rgs.pop()

    grow([0], 0)
    return out


def make_partition(blocks: Iterable[Iterable[Label]]) -> SetPartition:
    bl = [labelset(b) for b in blocks]
    if any(not b for b in bl):
        raise DomainError("partition blocks must be nonempty")
    seen = set()
    for b in bl:
        if seen & set(b):
            raise DomainError("partition blocks must be disjoint")
        seen |= set(b)
    return tuple(sorted(bl))


def ground(partition: SetPartition) -> LabelSet:
    return labelset(x for b in partition for x in b)


def _check_inside(partition: SetPartition, part: Iterable[Label]) -> set:
    part = set(part)
    if not part <= set(ground(partition)):
        raise DomainError(f"{sorted(part)} is not a subset of the partitioned set")
    return part


def partition_support_restrict(partition: SetPartition, part: Iterable[Label]) -> SetPartition:
    """Blocks of ``partition`` meeting ``part``."""
    part = _check_inside(partition, part)
    return tuple(b for b in partition if part.intersection(b))


def partition_restrict(partition: SetPartition, part: Iterable[Label]) -> SetPartition:
    """The partition of ``part`` cut out by ``partition``."""
    part = _check_inside(partition, part)
    return tuple(sorted(tuple(x for x in b if x in part) for b in partition if part.intersection(b)))


def block_transport(partition: SetPartition, part: Iterable[Label]) -> dict[Block, Block]:
    """Bijection from the blocks meeting ``part`` to their intersections with it."""
    part = _check_inside(partition, part)
    return {b: tuple(x for x in b if x in part) for b in partition if part.intersection(b)}


def group_blocks_by_size(partition: SetPartition) -> tuple[tuple[Block, ...], ...]:
    if not partition:
        return ()
    k = max(len(b) for b in partition)
    return tuple(tuple(b for b in partition if len(b) == i) for i in range(1, k + 1))


def large_small_split(partition: SetPartition, r: int) -> tuple[SetPartition, SetPartition]:
    large = tuple(b for b in partition if len(b) >= r)
    small = tuple(b for b in partition if len(b) < r)
    return large, small


def bell_numbers(n_max: int) -> list[int]:
    """Bell numbers B_0..B_n via the Bell triangle."""
    row = [1]
    out = [1]
    for _ in range(n_max):
        nxt = [row[-1]]
        for v in row:
            nxt.append(nxt[-1] + v)
        row = nxt
        out.append(row[0])
    return out


# -- exact linear combinations ----------------------------------------------

def _frac(c) -> Fraction:
    if isinstance(c, Fraction):
        return c
    if isinstance(c, str):
        return Fraction(c)
    if isinstance(c, float):
        raise TypeError("floating point coefficients are not allowed")
    return Fraction(c)


class LinComb(Mapping):
    """A finite formal sum of hashable terms with rational coefficients.

    Zero coefficients are never stored.  Values are immutable; arithmetic
    returns new objects.
    """

    __slots__ = ("_c", "_hash")

    def __init__(self, data: Mapping | Iterable | None = None):
        c: dict = {}
        if data is not None:
            items = data.items() if isinstance(data, Mapping) else data
            for t, v in items:
                v = _frac(v)
                if v:
                    s = c.get(t, 0) + v
                    if s:
                        c[t] = s
                    else:
                        del c[t]
        self._c = c
        self._hash = None

    @classmethod
    def term(cls, t, coeff=1) -> "LinComb":
        return cls({t: coeff})

    @classmethod
    def _raw(cls, c: dict) -> "LinComb":
        out = cls.__new__(cls)
        out._c = c
        out._hash = None
        return out

    def __getitem__(self, t):
        return self._c[t]

    def __iter__(self):
        return iter(self._c)

    def __len__(self):
        return len(self._c)

    def get(self, t, default=0):
        return self._c.get(t, default)

    def __bool__(self):
        return bool(self._c)

    def __eq__(self, other):
        if isinstance(other, LinComb):
            return self._c == other._c
        if other == 0:
            return not self._c
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._c.items()))
        return self._hash

    def __add__(self, other: "LinComb") -> "LinComb":
        c = dict(self._c)
        for t, v in other._c.items():
            s = c.get(t, 0) + v
            if s:
                c[t] = s
            else:
                c.pop(t, None)
        return LinComb._raw(c)

    def __neg__(self):
        return LinComb._raw({t: -v for t, v in self._c.items()})

    def __sub__(self, other: "LinComb") -> "LinComb":
        return self + (-other)

    def __rmul__(self, scalar) -> "LinComb":
        scalar = _frac(scalar)
        if not scalar:
            return LinComb()
        return LinComb._raw({t: scalar * v for t, v in self._c.items()})

    __mul__ = __rmul__

    def single(self):
        """The ``(term, coeff)`` pair of a one-term combination."""
        if len(self._c) != 1:
            raise ValueError(f"expected a single term, got {len(self._c)}")
        return next(iter(self._c.items()))

    def sorted_items(self, key: Callable | None = None) -> list:
        key = key or (lambda item: repr(item[0]))
        return sorted(self._c.items(), key=key)

    def __repr__(self):
        if not self._c:
            return "0"
        parts = [f"{v}*{t!r}" for t, v in self.sorted_items()]
        return " + ".join(parts)


ZERO = LinComb()


def add(*vs: LinComb) -> LinComb:
    out: dict = {}
    for v in vs:
        for t, c in v.items():
            s = out.get(t, 0) + c
            if s:
                out[t] = s
            else:
                out.pop(t, None)
    return LinComb._raw(out)


def scale(c, v: LinComb) -> LinComb:
    return c * v


def tensor_expand(*vs: LinComb) -> LinComb:
    """Distribute a tuple of combinations into a combination of term tuples."""
    out: dict = {(): Fraction(1)}
    for v in vs:
        nxt: dict = {}
        for key, c in out.items():
            for t, d in v.items():
                k2 = key + (t,)
                nxt[k2] = nxt.get(k2, 0) + c * d
        out = nxt
    return LinComb(out)


def apply_linear(f: Callable, v: LinComb) -> LinComb:
    """Linear extension of ``f`` (term -> LinComb) to ``v``."""
    acc: dict = {}
    for t, c in v.items():
        for s, d in f(t).items():
            x = acc.get(s, 0) + c * d
            if x:
                acc[s] = x
            else:
                acc.pop(s, None)
    return LinComb._raw(acc)


def apply_bilinear(f: Callable, u: LinComb, v: LinComb) -> LinComb:
    acc: dict = {}
    for s, c in u.items():
        for t, d in v.items():
            for w, e in f(s, t).items():
                x = acc.get(w, 0) + c * d * e
                if x:
                    acc[w] = x
                else:
                    acc.pop(w, None)
    return LinComb._raw(acc)


def apply_tensor(fs: Sequence[Callable], v: LinComb) -> LinComb:
    """Apply ``f1 ⊗ f2 ⊗ ...`` to a combination of term tuples."""
    acc: dict = {}
    for key, c in v.items():
        for w, d in tensor_expand(*(f(t) for f, t in zip(fs, key))).items():
            x = acc.get(w, 0) + c * d
            if x:
                acc[w] = x
            else:
                acc.pop(w, None)
    return LinComb._raw(acc)


def identity(t) -> LinComb:
    return LinComb._raw({t: Fraction(1)})


# -- exact linear algebra ---------------------------------------------------

class Echelon:
    """Incremental row echelon form over the rationals.

    Each stored row remembers how it was combined from the inserted vectors,
    so membership queries can report coefficients.
    """

    def __init__(self, universe: Sequence | None = None):
        self._order = None
        self._universe = None
        if universe is not None:
            self._universe = set(universe)
            self._order = {t: i for i, t in enumerate(universe)}
        self.rows: dict = {}  # pivot term -> (vector dict, combination dict)
        self.count = 0

    def _pivot(self, vec: dict):
        if self._order is not None:
            return min(vec, key=self._order.__getitem__)
        return min(vec, key=repr)

    def _check(self, v: LinComb) -> None:
        if self._universe is not None:
            bad = [t for t in v if t not in self._universe]
            if bad:
                raise DomainError(f"term {bad[0]!r} is outside the declared universe")

    def reduce(self, v: LinComb) -> tuple[dict, dict]:
        self._check(v)
        vec = dict(v.items())
        comb: dict = {}
        changed = True
        while changed and vec:
            changed = False
            for t in list(vec):
                if t in self.rows and t in vec:
                    c = vec[t]
                    rv, rc = self.rows[t]
                    for s, d in rv.items():
                        x = vec.get(s, 0) - c * d
                        if x:
                            vec[s] = x
                        else:
                            vec.pop(s, None)
                    for s, d in rc.items():
                        x = comb.get(s, 0) - c * d
                        if x:
                            comb[s] = x
                        else:
                            comb.pop(s, None)
                    changed = True
        return vec, comb

    def insert(self, v: LinComb) -> bool:
        """Add a vector; return True if it increased the rank."""
        idx = self.count
        self.count += 1
        vec, comb = self.reduce(v)
        comb[idx] = comb.get(idx, 0) + 1
        if not vec:
            return False
        p = self._pivot(vec)
        c = vec[p]
        vec = {t: d / c for t, d in vec.items()}
        comb = {t: d / c for t, d in comb.items()}
        self.rows[p] = (vec, comb)
        return True

    @property
    def rank(self) -> int:
        return len(self.rows)

    def contains(self, v: LinComb) -> tuple[bool, dict | None]:
        vec, comb = self.reduce(v)
        if vec:
            return False, None
        return True, {i: -c for i, c in comb.items() if c}


def span_membership(vectors: Sequence[LinComb], candidate: LinComb,
                    universe: Sequence | None = None) -> tuple[bool, list[Fraction] | None]:
    """Decide whether ``candidate`` lies in the span of ``vectors``.

    Returns ``(True, coeffs)`` with ``sum(coeffs[i] * vectors[i]) == candidate``
    when it does, ``(False, None)`` otherwise.
    """
    ech = Echelon(universe)
    for v in vectors:
        ech.insert(v)
    ok, comb = ech.contains(candidate)
    if not ok:
        return False, None
    coeffs = [Fraction(0)] * len(vectors)
    for i, c in comb.items():
        coeffs[i] = c
    return True, coeffs


def rank(vectors: Iterable[LinComb], universe: Sequence | None = None) -> int:
    ech = Echelon(universe)
    for v in vectors:
        ech.insert(v)
    return ech.rank
