"""Permutations in one-line notation and their global descents."""

from __future__ import annotations

from collections.abc import Iterable

from hopf_forest.errors import ParseError


class Permutation:
    """The word ``u(1)...u(n)``; ``n = 0`` gives the empty permutation."""

    __slots__ = ("values", "_str")

    def __init__(self, values: Iterable[int]):
        self.values: tuple[int, ...] = tuple(values)
        if sorted(self.values) != list(range(1, len(self.values) + 1)):
            raise ValueError(f"{self.values} is not a permutation of 1..{len(self.values)}")
        if len(self.values) <= 9:
            self._str = "".join(map(str, self.values))
        else:
            self._str = ",".join(map(str, self.values))

    def __len__(self) -> int:
        return len(self.values)

    @property
    def degree(self) -> int:
        return len(self.values)

    def __str__(self) -> str:
        return self._str

    def __repr__(self) -> str:
        return f"Permutation({self._str!r})"

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Permutation) and other.values == self.values

    def __hash__(self) -> int:
        return hash(("P", self.values))

    def __lt__(self, other: Permutation) -> bool:
        return self._str < other._str


EMPTY_PERMUTATION = Permutation(())


def parse_perm(text: str) -> Permutation:
    s = text.strip()
    try:
        if "," in s:
            values = [int(p) for p in s.split(",")]
        else:
            values = [int(ch) for ch in s]
    except ValueError:
        bad = next((i for i, ch in enumerate(s) if not (ch.isdigit() or ch == ",")), None)
        raise ParseError("permutations are digit words or comma-separated integers", text, bad) from None
    try:
        return Permutation(values)
    except ValueError as exc:
        raise ParseError(str(exc)) from None


def standardize_values(values: Iterable[int]) -> Permutation:
    values = list(values)
    rank = {v: i for i, v in enumerate(sorted(values), 1)}
    return Permutation(rank[v] for v in values)


def perm_backslash(u: Permutation, v: Permutation) -> Permutation:
    """Values of ``u`` shifted by ``|v|``, followed by the values of ``v``."""
    n = len(v)
    return Permutation(tuple(a + n for a in u.values) + v.values)


def perm_global_descents(w: Permutation) -> set[int]:
    """Positions ``p`` (``1 <= p < n``) with ``min(w[:p]) > max(w[p:])``."""
    vals = w.values
    out = set()
    running_min = None
    for p in range(1, len(vals)):
        running_min = vals[p - 1] if running_min is None else min(running_min, vals[p - 1])
        # the p prefix values all exceed n-p iff the prefix is {n-p+1..n}
        if running_min > len(vals) - p:
            out.add(p)
    return out


def perm_is_irreducible(w: Permutation) -> bool:
    return len(w) > 0 and not perm_global_descents(w)


def perm_irreducible_decomposition(w: Permutation) -> list[Permutation]:
    cuts = [0] + sorted(perm_global_descents(w)) + [len(w)]
    return [standardize_values(w.values[a:b]) for a, b in zip(cuts, cuts[1:]) if b > a]
