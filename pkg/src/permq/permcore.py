"""Permutation arithmetic for pattern-replacement work.

Permutations are tuples of the letters ``1..n``.  Positions in every public
interface (occurrence indices, transpositions) are 1-based, matching the
usual one-line notation.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass
from itertools import combinations
from math import factorial
from typing import Iterable, Iterator, Sequence

__all__ = [
    "N_MAX",
    "InvalidInputError",
    "Permutation",
    "PatternSet",
    "Occurrence",
    "Transposition",
    "Parity",
    "standardize",
    "sub_standardize",
    "occurrences",
    "contains_pattern",
    "apply_replacement",
    "inversion_count",
    "inversion_parity",
    "rank",
    "unrank",
    "all_permutations",
    "leader_permutation",
    "leader_permutations",
    "is_adjacent",
    "adjacency_set",
    "leader_adjacencies",
    "is_leader_adjacent",
    "is_primary",
    "longest_increasing_subsequence",
    "parse_permutation",
    "parse_pattern_set",
    "format_permutation",
]

# 12! < 2**31, so ranks fit a signed 32-bit word all the way up to the cap.
N_MAX = 12


class InvalidInputError(ValueError):
    """Raised for malformed permutations, patterns, ranks or occurrences."""


class Permutation(tuple):
    """An immutable permutation of ``1..n`` in one-line notation."""

    __slots__ = ()

    def __new__(cls, letters: Iterable[int] = ()) -> "Permutation":
        letters = tuple(int(x) for x in letters)
        n = len(letters)
        if n == 0:
            raise InvalidInputError("a permutation needs at least one letter")
        if n > N_MAX:
            raise InvalidInputError(f"length {n} exceeds the supported cap {N_MAX}")
        if sorted(letters) != list(range(1, n + 1)):
            raise InvalidInputError(f"{letters} is not a permutation of 1..{n}")
        return super().__new__(cls, letters)

    @property
    def n(self) -> int:
        return len(self)

    def __repr__(self) -> str:
        return f"Permutation({format_permutation(self, compact=len(self) <= 9)})"

    def __str__(self) -> str:
        return format_permutation(self)


def _unchecked(letters: Iterable[int]) -> Permutation:
    # Internal fast path for letters already known to form a permutation.
    return tuple.__new__(Permutation, letters)


@dataclass(frozen=True)
class PatternSet:
    """A set of distinct patterns sharing one length ``c >= 2``."""

    patterns: tuple[Permutation, ...]

    def __post_init__(self):
        pats = tuple(sorted(Permutation(p) for p in self.patterns))
        if not pats:
            raise InvalidInputError("a pattern set needs at least one pattern")
        if len({len(p) for p in pats}) != 1:
            raise InvalidInputError("all patterns must have the same length")
        if len(pats[0]) < 2:
            raise InvalidInputError("patterns must have length at least 2")
        if len(set(pats)) != len(pats):
            raise InvalidInputError("patterns must be pairwise distinct")
        object.__setattr__(self, "patterns", pats)

    @classmethod
    def of(cls, *patterns: Sequence[int] | str) -> "PatternSet":
        return cls(tuple(parse_permutation(p) if isinstance(p, str) else Permutation(p)
                         for p in patterns))

    @property
    def c(self) -> int:
        return len(self.patterns[0])

    def canonical(self) -> str:
        """Sorted, comma-joined text form; equal sets give equal strings."""
        return ",".join(format_permutation(p, compact=self.c <= 9) for p in self.patterns)

    def __iter__(self) -> Iterator[Permutation]:
        return iter(self.patterns)

    def __len__(self) -> int:
        return len(self.patterns)

    def __contains__(self, item) -> bool:
        return tuple(item) in self.patterns

    def __str__(self) -> str:
        return self.canonical()


@dataclass(frozen=True)
class Occurrence:
    """Strictly increasing 1-based ``indices`` whose letters form ``pattern``."""

    indices: tuple[int, ...]
    pattern: Permutation

    def __post_init__(self):
        if len(self.indices) != len(self.pattern):
            raise InvalidInputError("occurrence indices and pattern differ in length")
        if any(a >= b for a, b in zip(self.indices, self.indices[1:])):
            raise InvalidInputError(f"indices {self.indices} are not strictly increasing")
        if self.indices and self.indices[0] < 1:
            raise InvalidInputError("occurrence positions are 1-based")


@dataclass(frozen=True, order=True)
class Transposition:
    """Swap of the letters at two 1-based positions ``pos_a < pos_b``."""

    pos_a: int
    pos_b: int

    def __post_init__(self):
        if not 1 <= self.pos_a < self.pos_b:
            raise InvalidInputError(f"bad transposition ({self.pos_a}, {self.pos_b})")

    def apply(self, p: Sequence[int]) -> Permutation:
        q = list(p)
        i, j = self.pos_a - 1, self.pos_b - 1
        q[i], q[j] = q[j], q[i]
        return _unchecked(q)

    def letters(self, p: Sequence[int]) -> tuple[int, int]:
        """The two letters of ``p`` this transposition moves."""
        return p[self.pos_a - 1], p[self.pos_b - 1]


class Parity(enum.Enum):
    EVEN = 0
    ODD = 1

    def __str__(self) -> str:
        return self.name.lower()


def standardize(word: Sequence[int]) -> Permutation:
    """Replace the i-th smallest letter of ``word`` by ``i``.

    >>> standardize([7, 3, 6, 5])
    Permutation(4132)
    """
    if len(word) == 0:
        raise InvalidInputError("cannot standardize an empty word")
    order = {v: i for i, v in enumerate(sorted(word), start=1)}
    if len(order) != len(word):
        raise InvalidInputError(f"word {tuple(word)} has repeated letters")
    return _unchecked(order[v] for v in word)


def sub_standardize(p: Sequence[int], letter: int) -> Permutation:
    """Standardization of ``p`` with ``letter`` deleted."""
    if letter not in p:
        raise InvalidInputError(f"letter {letter} does not occur in {tuple(p)}")
    return _unchecked(v - (v > letter) for v in p if v != letter)


def occurrences(p: Sequence[int], pattern: Sequence[int]) -> list[Occurrence]:
    """All occurrences of ``pattern`` in ``p`` in lexicographic index order.

    An empty list means ``p`` avoids the pattern.
    """
    pattern = Permutation(pattern)
    c = len(pattern)
    found = []
    for idx in combinations(range(len(p)), c):
        if standardize([p[i] for i in idx]) == pattern:
            found.append(Occurrence(tuple(i + 1 for i in idx), pattern))
    return found


def contains_pattern(p: Sequence[int], pattern: Sequence[int]) -> bool:
    """Whether ``p`` has at least one occurrence of ``pattern``; stops early."""
    c = len(pattern)
    pairs = [(i, j, pattern[i] < pattern[j]) for j in range(c) for i in range(j)]
    for idx in combinations(p, c):
        for i, j, up in pairs:
            if (idx[i] < idx[j]) != up:
                break
        else:
            return True
    return False


def apply_replacement(p: Sequence[int], occ: Occurrence, target: Sequence[int]) -> Permutation:
    """Rearrange the letters at ``occ.indices`` so that they form ``target``.

    Letters off the occurrence are untouched.
    """
    target = Permutation(target)
    if len(target) != len(occ.pattern):
        raise InvalidInputError("target and occurrence pattern differ in length")
    if occ.indices[-1] > len(p):
        raise InvalidInputError(f"occurrence {occ.indices} runs past length {len(p)}")
    sub = [p[i - 1] for i in occ.indices]
    if standardize(sub) != occ.pattern:
        raise InvalidInputError(
            f"letters {tuple(sub)} at {occ.indices} do not form {occ.pattern}")
    ordered = sorted(sub)
    q = list(p)
    for pos, t in zip(occ.indices, target):
        q[pos - 1] = ordered[t - 1]
    return _unchecked(q)


def inversion_count(p: Sequence[int]) -> int:
    n = len(p)
    return sum(1 for i in range(n) for j in range(i + 1, n) if p[i] > p[j])


def inversion_parity(p: Sequence[int]) -> Parity:
    return Parity(inversion_count(p) % 2)


def rank(p: Sequence[int]) -> int:
    """Lehmer rank of ``p``; coincides with its lexicographic index in S_n."""
    n = len(p)
    r = 0
    for i in range(n):
        smaller = sum(1 for j in range(i + 1, n) if p[j] < p[i])
        r += smaller * factorial(n - 1 - i)
    return r


def unrank(n: int, r: int) -> Permutation:
    """Inverse of :func:`rank` on S_n."""
    if not 1 <= n <= N_MAX:
        raise InvalidInputError(f"n = {n} outside 1..{N_MAX}")
    if not 0 <= r < factorial(n):
        raise InvalidInputError(f"rank {r} outside [0, {n}! - 1]")
    pool = list(range(1, n + 1))
    out = []
    for i in range(n - 1, -1, -1):
        digit, r = divmod(r, factorial(i))
        out.append(pool.pop(digit))
    return _unchecked(out)


def all_permutations(n: int) -> Iterator[Permutation]:
    """S_n in rank order."""
    from itertools import permutations

    for q in permutations(range(1, n + 1)):
        yield _unchecked(q)


def leader_permutation(n: int, k: int) -> Permutation:
    """The leader of length ``n`` with break point ``k``.

    It is ``k-1 ... 1`` followed by ``n ... k``.
    """
    if not 2 <= k <= n:
        raise InvalidInputError(f"break point {k} outside [2, {n}]")
    return _unchecked([k - i for i in range(1, k)] + [n + k - i for i in range(k, n + 1)])


def leader_permutations(n: int) -> list[Permutation]:
    if n < 2:
        raise InvalidInputError("leader permutations need n >= 2")
    return [leader_permutation(n, k) for k in range(2, n + 1)]


def _blocked_ends(p: Sequence[int]) -> bool:
    return p[0] == len(p) or p[-1] == 1


def _swap_ok(p: Sequence[int], i: int, j: int) -> bool:
    diff = abs(p[i] - p[j])
    return diff != 1 and diff != len(p) - 1


def is_adjacent(p: Sequence[int], leader: Sequence[int]) -> bool:
    """True iff ``p`` is one admissible transposition away from ``leader``.

    The swapped letters must not differ by 1 or n-1, and neither permutation
    may begin with n or end with 1.
    """
    if len(p) != len(leader):
        return False
    diff = [i for i in range(len(p)) if p[i] != leader[i]]
    if len(diff) != 2:
        return False
    i, j = diff
    if p[i] != leader[j] or p[j] != leader[i]:
        return False
    return _swap_ok(p, i, j) and not _blocked_ends(p) and not _blocked_ends(leader)


def adjacency_set(leader: Sequence[int]) -> set[Permutation]:
    """Every permutation adjacent to ``leader``."""
    n = len(leader)
    out = set()
    if _blocked_ends(leader):
        return out
    for i, j in combinations(range(n), 2):
        if not _swap_ok(leader, i, j):
            continue
        q = Transposition(i + 1, j + 1).apply(leader)
        if not _blocked_ends(q):
            out.add(q)
    return out


_ADJ_CACHE: dict[int, dict[Permutation, list[tuple[int, Transposition]]]] = {}


def leader_adjacencies(p: Sequence[int]) -> list[tuple[int, Transposition]]:
    """``(break point, transposition)`` for each leader that ``p`` is adjacent to.

    Applying the transposition to ``p`` yields the leader.
    """
    n = len(p)
    if n < 2:
        return []
    table = _ADJ_CACHE.get(n)
    if table is None:
        table = {}
        for k in range(2, n + 1):
            lead = leader_permutation(n, k)
            for q in adjacency_set(lead):
                i, j = (t for t in range(n) if q[t] != lead[t])
                table.setdefault(q, []).append((k, Transposition(i + 1, j + 1)))
        _ADJ_CACHE[n] = table
    return list(table.get(tuple(p), ()))


def is_leader_adjacent(p: Sequence[int]) -> bool:
    return bool(leader_adjacencies(p))


def is_primary(p: Sequence[int]) -> bool:
    """Not leader-adjacent, not starting with n, not ending with 1."""
    return not _blocked_ends(p) and not is_leader_adjacent(p)


def longest_increasing_subsequence(p: Sequence[int]) -> int:
    from bisect import bisect_left

    tails: list[int] = []
    for v in p:
        k = bisect_left(tails, v)
        if k == len(tails):
            tails.append(v)
        else:
            tails[k] = v
    return len(tails)


_SPLIT = re.compile(r"[,\s]+")


def parse_permutation(text: str) -> Permutation:
    """Parse ``"7,1,6,2,4,3,5"`` or, for n <= 9, the compact ``"7162435"``."""
    text = text.strip()
    if not text:
        raise InvalidInputError("empty permutation text")
    try:
        if "," in text or " " in text:
            letters = [int(tok) for tok in _SPLIT.split(text) if tok]
        else:
            letters = [int(ch) for ch in text]
    except ValueError:
        raise InvalidInputError(f"cannot parse permutation {text!r}") from None
    return Permutation(letters)


def parse_pattern_set(text: str) -> PatternSet:
    """Parse ``"1234,3412"`` or ``"{1234,3412}"`` (compact patterns only)."""
    body = text.strip()
    if body.startswith("{") and body.endswith("}"):
        body = body[1:-1]
    tokens = [tok for tok in _SPLIT.split(body) if tok]
    if not tokens:
        raise InvalidInputError(f"empty pattern set {text!r}")
    if any(not tok.isdigit() for tok in tokens):
        raise InvalidInputError(f"cannot parse pattern set {text!r}")
    return PatternSet(tuple(parse_permutation(tok) for tok in tokens))


def format_permutation(p: Sequence[int], compact: bool = False) -> str:
    """Comma-separated letters; ``compact`` drops separators (n <= 9 only)."""
    if compact and len(p) > 9:
        raise InvalidInputError("compact form is ambiguous beyond 9 letters")
    return "".join(map(str, p)) if compact else ",".join(map(str, p))
