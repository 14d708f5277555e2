"""Finite graded posets and lattices with explicit bottom and top.

Elements are dense integers ``0..m-1``. Every poset here is graded: covers
raise rank by exactly one, the bottom is the unique rank-0 element, the top
the unique rank-n element, and every element other than top (bottom) has at
least one upper (lower) cover. These invariants are enforced at construction
time, so code downstream never re-checks them.

Instances are immutable after construction and safe to share across workers;
all operations either answer a query or build a fresh poset.
"""

from __future__ import annotations

from functools import cached_property
from itertools import permutations
from typing import Iterable, Iterator, Optional, Sequence


class PosetError(ValueError):
    """Raised for invalid poset data: parse failures or broken invariants."""


class Poset:
    """A finite graded poset given by ranks and cover pairs.

    Parameters
    ----------
    rank_of:
        rank of element ``i`` at position ``i``.
    covers:
        pairs ``(a, b)`` with ``a`` covered by ``b``.
    name:
        display name, carried through serialization.
    labels:
        optional display labels per element (e.g. ``"12|34"`` in a partition
        lattice). Ignored by all structural operations.
    """

    def __init__(
        self,
        rank_of: Sequence[int],
        covers: Iterable[tuple[int, int]],
        name: str = "poset",
        labels: Optional[Sequence[str]] = None,
    ):
        self.rank_of = tuple(int(r) for r in rank_of)
        self.covers = tuple(sorted((int(a), int(b)) for a, b in covers))
        self.name = str(name)
        self.element_count = len(self.rank_of)
        if labels is not None:
            if len(labels) != self.element_count:
                raise PosetError("labels must match element count")
            self.labels = tuple(str(s) for s in labels)
        else:
            self.labels = tuple(str(i) for i in range(self.element_count))
        self._validate()

    def _validate(self) -> None:
        m = self.element_count
        if m == 0:
            raise PosetError("poset needs at least one element")
        if any(r < 0 for r in self.rank_of):
            raise PosetError("ranks must be nonnegative")
        n = max(self.rank_of)
        bottoms = [x for x in range(m) if self.rank_of[x] == 0]
        tops = [x for x in range(m) if self.rank_of[x] == n]
        if len(bottoms) != 1:
            raise PosetError(f"expected a unique rank-0 element, found {len(bottoms)}")
        if len(tops) != 1:
            raise PosetError(f"expected a unique rank-{n} element, found {len(tops)}")
        self.bottom = bottoms[0]
        self.top = tops[0]
        self.rank = n
        if n == 0 and m > 1:
            raise PosetError("rank-0 poset must be a single point")
        seen = set()
        has_upper = [False] * m
        has_lower = [False] * m
        for a, b in self.covers:
            if not (0 <= a < m and 0 <= b < m):
                raise PosetError(f"cover ({a}, {b}) references an unknown element")
            if self.rank_of[b] != self.rank_of[a] + 1:
                raise PosetError(
                    f"cover ({a}, {b}) must raise rank by 1, got "
                    f"{self.rank_of[a]} -> {self.rank_of[b]}"
                )
            if (a, b) in seen:
                raise PosetError(f"duplicate cover ({a}, {b})")
            seen.add((a, b))
            has_upper[a] = True
            has_lower[b] = True
        for x in range(m):
            if x != self.top and not has_upper[x]:
                raise PosetError(f"element {x} has no upper cover")
            if x != self.bottom and not has_lower[x]:
                raise PosetError(f"element {x} has no lower cover")

    # -- basic structure ----------------------------------------------------

    @cached_property
    def levels(self) -> tuple[tuple[int, ...], ...]:
        """Elements grouped by rank, ids ascending within each level."""
        out: list[list[int]] = [[] for _ in range(self.rank + 1)]
        for x in range(self.element_count):
            out[self.rank_of[x]].append(x)
        return tuple(tuple(level) for level in out)

    @cached_property
    def upper_covers(self) -> tuple[tuple[int, ...], ...]:
        out: list[list[int]] = [[] for _ in range(self.element_count)]
        for a, b in self.covers:
            out[a].append(b)
        return tuple(tuple(v) for v in out)

    @cached_property
    def lower_covers(self) -> tuple[tuple[int, ...], ...]:
        out: list[list[int]] = [[] for _ in range(self.element_count)]
        for a, b in self.covers:
            out[b].append(a)
        return tuple(tuple(v) for v in out)

    @cached_property
    def _above(self) -> tuple[int, ...]:
        """Bitmask of {y : x <= y} per element, computed top rank downwards."""
        up = [0] * self.element_count
        for level in reversed(self.levels):
            for x in level:
                acc = 1 << x
                for y in self.upper_covers[x]:
                    acc |= up[y]
                up[x] = acc
        return tuple(up)

    @cached_property
    def _below(self) -> tuple[int, ...]:
        down = [0] * self.element_count
        for level in self.levels:
            for x in level:
                acc = 1 << x
                for y in self.lower_covers[x]:
                    acc |= down[y]
                down[x] = acc
        return tuple(down)

    def leq(self, x: int, y: int) -> bool:
        """Order relation x <= y (reflexive transitive closure of covers)."""
        return bool(self._above[x] >> y & 1)

    def lt(self, x: int, y: int) -> bool:
        return x != y and self.leq(x, y)

    @property
    def atoms(self) -> tuple[int, ...]:
        return self.levels[1] if self.rank >= 1 else ()

    @property
    def coatoms(self) -> tuple[int, ...]:
        return self.levels[self.rank - 1] if self.rank >= 1 else ()

    def proper_part(self) -> tuple[int, ...]:
        """All elements except bottom and top."""
        return tuple(
            x for x in range(self.element_count) if x not in (self.bottom, self.top)
        )

    def open_interval(self, a: int, b: int) -> tuple[int, ...]:
        """Elements strictly between a and b."""
        if not self.leq(a, b):
            raise PosetError(f"open interval requires {a} <= {b}")
        mask = self._above[a] & self._below[b] & ~(1 << a) & ~(1 << b)
        return _mask_elements(mask)

    # -- meets, joins, lattice test ------------------------------------------

    def meet(self, x: int, y: int) -> Optional[int]:
        """Greatest common lower bound, or None when it is not unique."""
        common = self._below[x] & self._below[y]
        maximal = [
            z for z in _mask_elements(common)
            if self._above[z] & common == 1 << z
        ]
        return maximal[0] if len(maximal) == 1 else None

    def join(self, x: int, y: int) -> Optional[int]:
        """Least common upper bound, or None when it is not unique."""
        common = self._above[x] & self._above[y]
        minimal = [
            z for z in _mask_elements(common)
            if self._below[z] & common == 1 << z
        ]
        return minimal[0] if len(minimal) == 1 else None

    def is_lattice(self) -> tuple[bool, Optional[tuple[int, int]]]:
        """All pairwise meets exist (a meet-semilattice with a top is a lattice).

        Returns ``(True, None)`` or ``(False, witness_pair)``.
        """
        m = self.element_count
        for x in range(m):
            for y in range(x + 1, m):
                if self.meet(x, y) is None:
                    return False, (x, y)
        return True, None

    # -- derived posets -------------------------------------------------------

    def interval(self, a: int, b: int) -> "Poset":
        """The induced poset on {x : a <= x <= b}, re-ranked so a has rank 0."""
        if not self.leq(a, b):
            raise PosetError(f"interval requires {a} <= {b}")
        elems = _mask_elements(self._above[a] & self._below[b])
        return self._induced(elems, name=f"{self.name}[{a},{b}]",
                             shift=-self.rank_of[a])

    def dual(self) -> "Poset":
        """Covers reversed and ranks flipped; bottom and top swap roles."""
        n = self.rank
        return Poset(
            [n - r for r in self.rank_of],
            [(b, a) for a, b in self.covers],
            name=f"dual({self.name})",
            labels=self.labels,
        )

    def delete_coatom(self, c: int) -> "Poset":
        """Drop everything that lies below no other coatom, keeping the top.

        The result is the ideal generated by the remaining coatoms with the
        top re-attached; it is again a graded lattice of the same rank whose
        maximal chains are exactly the maximal chains avoiding ``c``.
        """
        if self.rank_of[c] != self.rank - 1:
            raise PosetError(f"{c} is not a coatom")
        others = [d for d in self.coatoms if d != c]
        if not others:
            raise PosetError("cannot delete the only coatom")
        keep_mask = 1 << self.top
        for d in others:
            keep_mask |= self._below[d]
        return self._induced(_mask_elements(keep_mask),
                             name=f"{self.name}-coatom{c}")

    def delete_atom(self, a: int) -> "Poset":
        """Dual surgery: the dual order ideal of the other atoms, plus bottom."""
        if self.rank_of[a] != 1:
            raise PosetError(f"{a} is not an atom")
        if len(self.atoms) < 2:
            raise PosetError("cannot delete the only atom")
        return self.dual().delete_coatom(a).dual()

    def _induced(self, elems: Sequence[int], name: str, shift: int = 0) -> "Poset":
        """Induced subposet on ``elems`` with covers recomputed for the subset."""
        index = {x: i for i, x in enumerate(elems)}
        base = min(self.rank_of[x] for x in elems) if shift == 0 else -shift
        covers = []
        for x, y in self.induced_covers(elems):
            covers.append((index[x], index[y]))
        return Poset(
            [self.rank_of[x] - base for x in elems],
            covers,
            name=name,
            labels=[self.labels[x] for x in elems],
        )

    def induced_covers(self, elems: Sequence[int]) -> list[tuple[int, int]]:
        """Hasse diagram of the induced order on ``elems`` (original ids).

        A pair (x, y) is an induced cover when x < y and no member of
        ``elems`` sits strictly between them.
        """
        member = 0
        for x in elems:
            member |= 1 << x
        out = []
        for x in elems:
            strictly_above = self._above[x] & member & ~(1 << x)
            for y in _mask_elements(strictly_above):
                between = self._above[x] & self._below[y] & member
                if between == (1 << x) | (1 << y):
                    out.append((x, y))
        return out

    # -- isomorphism ----------------------------------------------------------

    @cached_property
    def canonical_form(self) -> tuple:
        """Canonical encoding; equal forms characterize isomorphic posets."""
        masks: list[list[int]] = []
        for k in range(1, self.rank + 1):
            prev = {x: i for i, x in enumerate(self.levels[k - 1])}
            masks.append(
                [sum(1 << prev[u] for u in self.lower_covers[x])
                 for x in self.levels[k]]
            )
        return canonical_level_code(masks)

    def is_isomorphic(self, other: "Poset") -> bool:
        """Rank-preserving order isomorphism test, via canonical forms."""
        if self.element_count != other.element_count or self.rank != other.rank:
            return False
        if tuple(map(len, self.levels)) != tuple(map(len, other.levels)):
            return False
        return self.canonical_form == other.canonical_form

    # -- serialization ---------------------------------------------------------

    def to_text(self) -> str:
        lines = [
            f"poset {self.name}",
            f"rank {self.rank}",
            f"elements {self.element_count}",
        ]
        lines += [f"elem {x} {self.rank_of[x]}" for x in range(self.element_count)]
        lines += [f"cover {a} {b}" for a, b in self.covers]
        return "\n".join(lines) + "\n"

    def __repr__(self) -> str:
        return (f"Poset({self.name!r}, rank={self.rank}, "
                f"elements={self.element_count}, covers={len(self.covers)})")


def _mask_elements(mask: int) -> tuple[int, ...]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return tuple(out)


def canonical_level_code(level_masks: Sequence[Sequence[int]]) -> tuple:
    """Canonical form of a ranked cover structure.

    ``level_masks[k]`` holds, for each element of level k+1, the bitmask of
    its lower covers as positions within level k (level 0 is the single
    bottom element). The code is the lexicographically smallest concatenation
    of per-level cover-mask tuples over all products of within-level
    relabelings, searched with (mask, up-degree) refinement so only tied
    elements ever branch.

    Two structures are isomorphic as ranked posets iff their codes are equal.
    """
    sizes = tuple(len(level) for level in level_masks)
    depth = len(level_masks)
    if depth == 0:
        return (sizes,)

    # up-degree of element e at level k = how many level-(k+1) masks mention it
    updegs: list[list[int]] = []
    for k in range(depth):
        deg = [0] * sizes[k]
        if k + 1 < depth:
            for mask in level_masks[k + 1]:
                for pos in _mask_elements(mask):
                    deg[pos] += 1
        updegs.append(deg)

    best: list[tuple] = []

    def extend(k: int, prev_order: tuple[int, ...], acc: tuple) -> None:
        level = level_masks[k]
        pos_of = {orig: i for i, orig in enumerate(prev_order)}
        relabeled = []
        for e, mask in enumerate(level):
            new_mask = 0
            for pos in _mask_elements(mask):
                new_mask |= 1 << pos_of[pos]
            relabeled.append((new_mask, updegs[k][e], e))
        relabeled.sort(key=lambda t: t[:2])
        code = acc + (tuple(t[0] for t in relabeled),)
        if best:
            prefix = best[0][:len(code)]
            if code > prefix:
                return
        if k + 1 == depth:
            if not best or code < best[0]:
                best[:] = [code]
            return
        # branch only inside (mask, updeg) tie groups
        groups: list[list[int]] = []
        for i, t in enumerate(relabeled):
            if i and t[:2] == relabeled[i - 1][:2]:
                groups[-1].append(t[2])
            else:
                groups.append([t[2]])
        for ordering in _group_orderings(groups):
            extend(k + 1, ordering, code)

    extend(0, (0,), (sizes,))
    return best[0]


def _group_orderings(groups: list[list[int]]) -> Iterator[tuple[int, ...]]:
    """All concatenations of per-group permutations, in deterministic order."""

    def rec(i: int, acc: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
        if i == len(groups):
            yield acc
            return
        if len(groups[i]) == 1:
            yield from rec(i + 1, acc + tuple(groups[i]))
            return
        for perm in permutations(groups[i]):
            yield from rec(i + 1, acc + perm)

    return rec(0, ())


# -- text format ----------------------------------------------------------------

def parse_poset(text: str) -> Poset:
    """Parse the line-oriented poset format; errors carry 1-based line numbers.

    Format::

        poset <name>
        rank <n>
        elements <m>
        elem <id> <rank>     (m lines)
        cover <a> <b>        (one line per cover pair)

    ``#`` starts a comment; blank lines are skipped.
    """
    name = None
    rank = None
    count = None
    ranks: dict[int, int] = {}
    covers: list[tuple[int, int]] = []

    def fail(lineno: int, msg: str) -> PosetError:
        return PosetError(f"line {lineno}: {msg}")

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        kind = parts[0]
        if kind == "poset":
            if len(parts) != 2:
                raise fail(lineno, "expected 'poset <name>'")
            name = parts[1]
        elif kind == "rank":
            rank = _parse_int(parts, 1, lineno, "rank")
        elif kind == "elements":
            count = _parse_int(parts, 1, lineno, "elements")
        elif kind == "elem":
            if len(parts) != 3:
                raise fail(lineno, "expected 'elem <id> <rank>'")
            eid = _parse_int(parts, 1, lineno, "elem id")
            erank = _parse_int(parts, 2, lineno, "elem rank")
            if eid in ranks:
                raise fail(lineno, f"duplicate elem {eid}")
            ranks[eid] = erank
        elif kind == "cover":
            if len(parts) != 3:
                raise fail(lineno, "expected 'cover <a> <b>'")
            covers.append((
                _parse_int(parts, 1, lineno, "cover a"),
                _parse_int(parts, 2, lineno, "cover b"),
            ))
        else:
            raise fail(lineno, f"unknown directive {kind!r}")

    if name is None or rank is None or count is None:
        raise PosetError("missing header: need poset/rank/elements lines")
    if sorted(ranks) != list(range(count)):
        raise PosetError(f"expected elem lines for ids 0..{count - 1}")
    try:
        p = Poset([ranks[i] for i in range(count)], covers, name=name)
    except PosetError as exc:
        raise PosetError(f"invalid poset {name!r}: {exc}") from exc
    if p.rank != rank:
        raise PosetError(f"declared rank {rank} but structure has rank {p.rank}")
    return p


def _parse_int(parts: list[str], i: int, lineno: int, what: str) -> int:
    if i >= len(parts):
        raise PosetError(f"line {lineno}: missing {what}")
    try:
        return int(parts[i])
    except ValueError:
        raise PosetError(f"line {lineno}: {what} must be an integer, "
                         f"got {parts[i]!r}") from None
