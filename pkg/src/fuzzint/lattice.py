"""Finite bounded lattices built from cover relations.

A lattice is described by its elements and a list of ``(lower, upper)``
cover pairs (Hasse edges; redundant transitive edges are tolerated).  The
partial order is the reflexive-transitive closure of the covers, and the
constructor materializes full meet/join tables so that every later query
is a table lookup.  Element subsets are kept as integer bitmasks over the
canonical element order.
"""

from __future__ import annotations

from itertools import product as _cartesian
from typing import Hashable, Iterable, Iterator

from .errors import CycleError, NotALattice, SizeLimit, UnknownElement

Element = Hashable

DEFAULT_MAX_ELEMENTS = 4096


def element_sort_key(element):
    """Stable sort key for the canonical element order; tuples sort after atoms."""
    if isinstance(element, tuple):
        return (1, tuple(element_sort_key(part) for part in element))
    return (0, str(element))


def format_element(element) -> str:
    """Render an element id; product elements become ``(left,right)``."""
    if isinstance(element, tuple):
        return "(" + ",".join(format_element(part) for part in element) + ")"
    return str(element)


def iter_bits(mask: int) -> Iterator[int]:
    """Indices of the set bits of ``mask``, ascending."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class FiniteLattice:
    """A finite lattice with materialized meet/join tables.

    Instances are immutable after construction and safe to share.  Equality
    is structural: same element set and same order relation (names are
    metadata and do not participate).
    """

    __slots__ = ("name", "elements", "_index", "_up", "_down", "_meet", "_join",
                 "_bottom", "_top", "_all_mask", "_between_cache", "_hash")

    def __init__(self, elements: Iterable[Element], covers, *, name: str = "",
                 max_elements: int = DEFAULT_MAX_ELEMENTS):
        elems = list(elements)
        if not elems:
            raise ValueError("a lattice needs at least one element")
        if len(elems) > max_elements:
            raise SizeLimit(len(elems), max_elements)
        if len(set(elems)) != len(elems):
            raise ValueError("duplicate element ids")
        ordered = tuple(sorted(elems, key=element_sort_key))
        index = {e: i for i, e in enumerate(ordered)}
        n = len(ordered)

        succ = [[] for _ in range(n)]
        seen = set()
        for lo, hi in covers:
            if lo not in index:
                raise UnknownElement(lo, name)
            if hi not in index:
                raise UnknownElement(hi, name)
            i, j = index[lo], index[hi]
            if i == j:
                raise CycleError((lo, hi))
            if (i, j) not in seen:
                seen.add((i, j))
                succ[i].append(j)

        topo = self._topological_order(succ, ordered)

        # reflexive-transitive closure as up-set bitmasks
        up = [0] * n
        for i in reversed(topo):
            mask = 1 << i
            for j in succ[i]:
                mask |= up[j]
            up[i] = mask
        down = [0] * n
        for i in range(n):
            for j in iter_bits(up[i]):
                down[j] |= 1 << i

        self.name = name
        self.elements = ordered
        self._index = index
        self._up = up
        self._down = down
        self._all_mask = (1 << n) - 1
        self._between_cache = {}
        self._hash = None

        meet_t = [0] * (n * n)
        join_t = [0] * (n * n)
        for i in range(n):
            for j in range(i, n):
                if up[j] >> i & 1:          # j ⊑ i
                    mi, ji = j, i
                elif up[i] >> j & 1:        # i ⊑ j
                    mi, ji = i, j
                else:
                    mi = self._unique_bound(down[i] & down[j], up, i, j, "meet")
                    ji = self._unique_bound(up[i] & up[j], down, i, j, "join")
                meet_t[i * n + j] = meet_t[j * n + i] = mi
                join_t[i * n + j] = join_t[j * n + i] = ji
        self._meet = meet_t
        self._join = join_t

        minimal = [i for i in range(n) if down[i] == 1 << i]
        maximal = [i for i in range(n) if up[i] == 1 << i]
        assert len(minimal) == 1 and len(maximal) == 1
        self._bottom = minimal[0]
        self._top = maximal[0]

    def _topological_order(self, succ, ordered):
        n = len(ordered)
        indeg = [0] * n
        for i in range(n):
            for j in succ[i]:
                indeg[j] += 1
        stack = [i for i in range(n) if indeg[i] == 0]
        topo = []
        remaining = list(indeg)
        while stack:
            i = stack.pop()
            topo.append(i)
            for j in succ[i]:
                remaining[j] -= 1
                if remaining[j] == 0:
                    stack.append(j)
        if len(topo) < n:
            # every blocked node keeps at least one blocked predecessor, so a
            # predecessor walk inside the blocked set must revisit a node
            blocked = {i for i in range(n) if remaining[i] > 0}
            preds = {i: [] for i in blocked}
            for i in blocked:
                for j in succ[i]:
                    if j in blocked:
                        preds[j].append(i)
            trail, seen_at = [], {}
            node = min(blocked)
            while node not in seen_at:
                seen_at[node] = len(trail)
                trail.append(node)
                node = preds[node][0]
            seg = trail[seen_at[node]:]
            cycle = [seg[0]] + list(reversed(seg[1:])) + [seg[0]]
            raise CycleError(tuple(ordered[i] for i in cycle))
        return topo

    def _unique_bound(self, common: int, toward, i: int, j: int, kind: str) -> int:
        # for meets `common` is the common lower bounds and `toward` the up-sets;
        # the bound is the unique extremal element of `common` (dually for joins)
        if not common:
            raise NotALattice(self.elements[i], self.elements[j], kind)
        extremal = [b for b in iter_bits(common) if toward[b] & common == 1 << b]
        if len(extremal) != 1:
            cands = tuple(self.elements[b] for b in extremal[:2])
            raise NotALattice(self.elements[i], self.elements[j], kind, cands)
        return extremal[0]

    # -- basic queries -------------------------------------------------

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, element) -> bool:
        return element in self._index

    def index(self, element) -> int:
        try:
            return self._index[element]
        except (KeyError, TypeError):
            raise UnknownElement(element, self.name) from None

    @property
    def bottom(self) -> Element:
        return self.elements[self._bottom]

    @property
    def top(self) -> Element:
        return self.elements[self._top]

    def leq(self, x, y) -> bool:
        """x ⊑ y."""
        return self._up[self.index(x)] >> self.index(y) & 1 == 1

    def meet(self, x, y) -> Element:
        return self.elements[self._meet[self.index(x) * len(self.elements) + self.index(y)]]

    def join(self, x, y) -> Element:
        return self.elements[self._join[self.index(x) * len(self.elements) + self.index(y)]]

    def meet_set(self, items: Iterable[Element]) -> Element:
        """Greatest lower bound of a finite family; the empty family gives top."""
        return self.elements[self.meet_indices(self.index(x) for x in items)]

    def join_set(self, items: Iterable[Element]) -> Element:
        """Least upper bound of a finite family; the empty family gives bottom."""
        return self.elements[self.join_indices(self.index(x) for x in items)]

    def between(self, lo, hi) -> tuple:
        """{z : lo ⊑ z ⊑ hi} in canonical order (empty when the bounds cross)."""
        mask = self.between_mask(self.index(lo), self.index(hi))
        return tuple(self.elements[b] for b in iter_bits(mask))

    def covers(self) -> tuple[tuple[Element, Element], ...]:
        """The Hasse edges of the order, in canonical order."""
        n = len(self.elements)
        out = []
        for i in range(n):
            strict_up = self._up[i] ^ (1 << i)
            for j in iter_bits(strict_up):
                if self._up[i] & self._down[j] == (1 << i) | (1 << j):
                    out.append((self.elements[i], self.elements[j]))
        return tuple(out)

    # -- index-level access (hot paths in sibling modules) --------------

    def leq_index(self, i: int, j: int) -> bool:
        return self._up[i] >> j & 1 == 1

    def meet_index(self, i: int, j: int) -> int:
        return self._meet[i * len(self.elements) + j]

    def join_index(self, i: int, j: int) -> int:
        return self._join[i * len(self.elements) + j]

    def meet_indices(self, indices: Iterable[int]) -> int:
        n = len(self.elements)
        table = self._meet
        acc = self._top
        for i in indices:
            acc = table[acc * n + i]
        return acc

    def join_indices(self, indices: Iterable[int]) -> int:
        n = len(self.elements)
        table = self._join
        acc = self._bottom
        for i in indices:
            acc = table[acc * n + i]
        return acc

    def up_mask(self, i: int) -> int:
        return self._up[i]

    def down_mask(self, i: int) -> int:
        return self._down[i]

    @property
    def all_mask(self) -> int:
        return self._all_mask

    def between_mask(self, lo_i: int, hi_i: int) -> int:
        key = lo_i * len(self.elements) + hi_i
        cached = self._between_cache.get(key)
        if cached is None:
            cached = self._up[lo_i] & self._down[hi_i]
            self._between_cache[key] = cached
        return cached

    # -- identity --------------------------------------------------------

    def __eq__(self, other) -> bool:
        if self is other:
            return True
        if not isinstance(other, FiniteLattice):
            return NotImplemented
        return self.elements == other.elements and self._up == other._up

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.elements, tuple(self._up)))
        return self._hash

    def __repr__(self) -> str:
        label = self.name or "lattice"
        return f"<FiniteLattice {label}: {len(self.elements)} elements>"


def build_lattice(elements, covers, *, name: str = "",
                  max_elements: int = DEFAULT_MAX_ELEMENTS) -> FiniteLattice:
    """Construct and validate a lattice from element ids and cover pairs."""
    return FiniteLattice(elements, covers, name=name, max_elements=max_elements)


def is_distributive(lattice: FiniteLattice):
    """Decide x ⊓ (y ⊔ z) = (x ⊓ y) ⊔ (x ⊓ z) by exhaustive triples.

    Returns ``(True, None)`` or ``(False, (x, y, z))`` with the first failing
    triple in canonical element order.  On a finite lattice this binary law
    is equivalent to its complete (arbitrary-family) form.
    """
    n = len(lattice.elements)
    meet, join = lattice._meet, lattice._join
    for i in range(n):
        row_i = i * n
        for j in range(n):
            ij = meet[row_i + j]
            row_j = j * n
            for k in range(n):
                if meet[row_i + join[row_j + k]] != join[ij * n + meet[row_i + k]]:
                    e = lattice.elements
                    return False, (e[i], e[j], e[k])
    return True, None


def is_distributive_dual(lattice: FiniteLattice):
    """Decide the dual law x ⊔ (y ⊓ z) = (x ⊔ y) ⊓ (x ⊔ z); same conventions."""
    n = len(lattice.elements)
    meet, join = lattice._meet, lattice._join
    for i in range(n):
        row_i = i * n
        for j in range(n):
            ij = join[row_i + j]
            row_j = j * n
            for k in range(n):
                if join[row_i + meet[row_j + k]] != meet[ij * n + join[row_i + k]]:
                    e = lattice.elements
                    return False, (e[i], e[j], e[k])
    return True, None


# -- standard fixtures ----------------------------------------------------


def chain(n: int, *, max_elements: int = DEFAULT_MAX_ELEMENTS) -> FiniteLattice:
    """The n-element total order 0 < 1 < ... < n-1."""
    if n < 1:
        raise ValueError("a chain needs at least one element")
    if n > max_elements:
        raise SizeLimit(n, max_elements)
    width = len(str(n - 1))
    labels = [str(i) if n <= 10 else str(i).zfill(width) for i in range(n)]
    return FiniteLattice(labels, list(zip(labels, labels[1:])), name=f"chain{n}")


def boolean_lattice(k: int, *, max_elements: int = DEFAULT_MAX_ELEMENTS) -> FiniteLattice:
    """The powerset of k atoms, elements rendered as k-bit strings."""
    if k < 0:
        raise ValueError("the atom count cannot be negative")
    if 2 ** k > max_elements:
        raise SizeLimit(2 ** k, max_elements)
    labels = ["".join(bits) for bits in _cartesian("01", repeat=k)]
    covers = []
    for label in labels:
        for pos, ch in enumerate(label):
            if ch == "0":
                covers.append((label, label[:pos] + "1" + label[pos + 1:]))
    return FiniteLattice(labels, covers, name=f"boolean{k}")


def m3() -> FiniteLattice:
    """The diamond: three incomparable atoms between 0 and 1 (not distributive)."""
    covers = [("0", "a"), ("0", "b"), ("0", "c"), ("a", "1"), ("b", "1"), ("c", "1")]
    return FiniteLattice(["0", "a", "b", "c", "1"], covers, name="m3")


def n5() -> FiniteLattice:
    """The pentagon: 0 < a < c < 1 and 0 < b < 1, b incomparable to a and c."""
    covers = [("0", "a"), ("a", "c"), ("c", "1"), ("0", "b"), ("b", "1")]
    return FiniteLattice(["0", "a", "b", "c", "1"], covers, name="n5")


def product_lattice(left: FiniteLattice, right: FiniteLattice, *,
                    max_elements: int = DEFAULT_MAX_ELEMENTS) -> FiniteLattice:
    """Componentwise-ordered pairs of the two factors."""
    count = len(left.elements) * len(right.elements)
    if count > max_elements:
        raise SizeLimit(count, max_elements)
    elems = [(x, y) for x in left.elements for y in right.elements]
    covers = [((lo, y), (hi, y)) for lo, hi in left.covers() for y in right.elements]
    covers += [((x, lo), (x, hi)) for lo, hi in right.covers() for x in left.elements]
    return FiniteLattice(elems, covers, name=f"product({left.name},{right.name})")


def standard_lattice(spec: str, *, max_elements: int = DEFAULT_MAX_ELEMENTS) -> FiniteLattice:
    """Build a fixture lattice from a name.

    Accepted forms: ``chain4`` / ``chain(4)``, ``boolean3`` / ``boolean(3)``,
    ``m3``, ``n5``, and ``product(a,b)`` with recursive arguments.
    """
    text = spec.replace(" ", "").lower()
    lattice = _parse_fixture(text, max_elements)
    if lattice is None:
        raise ValueError(f"unknown lattice fixture {spec!r}")
    return lattice


def _parse_fixture(text: str, cap: int):
    if text == "m3":
        return m3()
    if text == "n5":
        return n5()
    for prefix, factory in (("chain", chain), ("boolean", boolean_lattice)):
        arg = None
        if text.startswith(prefix + "(") and text.endswith(")"):
            arg = text[len(prefix) + 1:-1]
        elif text.startswith(prefix):
            arg = text[len(prefix):]
        if arg is not None and arg.isdigit():
            return factory(int(arg), max_elements=cap)
    if text.startswith("product(") and text.endswith(")"):
        inner = text[len("product("):-1]
        depth = 0
        for pos, ch in enumerate(inner):
            if ch == "(":
                depth += 1
            elif ch == ")":
                depth -= 1
            elif ch == "," and depth == 0:
                left = _parse_fixture(inner[:pos], cap)
                right = _parse_fixture(inner[pos + 1:], cap)
                if left is not None and right is not None:
                    return product_lattice(left, right, max_elements=cap)
                return None
    return None
