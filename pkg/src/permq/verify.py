"""Exhaustive and sampled checks of the {1234, 3412} class-structure claims.

Each checker returns a :class:`CheckReport`.  A failing report carries the
smallest witness found (smallest rank, smallest class root, or smallest n).
"""

from __future__ import annotations

import enum
import json
import random
import time
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Any, Callable, Sequence

import numpy as np

from .engine import Census, ClassPartition, census
from .permcore import (
    InvalidInputError,
    Parity,
    PatternSet,
    Permutation,
    _unchecked,
    adjacency_set,
    contains_pattern,
    format_permutation,
    inversion_parity,
    is_primary,
    leader_adjacencies,
    leader_permutations,
    rank,
    sub_standardize,
)

__all__ = [
    "DEFAULT_SEED",
    "STANDARD_PATTERNS",
    "PreconditionError",
    "CheckReport",
    "TagKind",
    "ClassTag",
    "closed_form",
    "identity_perm",
    "psi_perm",
    "class_tags",
    "tag_class",
    "check_closed_form",
    "check_recurrence",
    "check_b_count",
    "check_leader_classes",
    "check_parity",
    "check_parity_moves",
    "check_primary_classes",
    "check_creating_primary",
    "check_assembly",
]

DEFAULT_SEED = 20201103
STANDARD_PATTERNS = PatternSet.of("1234", "3412")


class PreconditionError(InvalidInputError):
    """A checker was asked about an n outside the range its claim covers."""


@dataclass
class CheckReport:
    check: str
    n_range: list[int]
    passed: bool
    counterexample: Any = None
    seed: int | None = None
    elapsed_ms: float = 0.0
    details: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.passed != (self.counterexample is None):
            raise ValueError("a report fails exactly when it carries a counterexample")

    def to_record(self) -> dict:
        return {
            "check": self.check,
            "n_range": self.n_range,
            "passed": self.passed,
            "counterexample": self.counterexample,
            "seed": self.seed,
            "elapsed_ms": round(self.elapsed_ms, 3),
            "details": self.details,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_record(), sort_keys=True)


def _fmt(p: Sequence[int]) -> str:
    return format_permutation(p)


def _report(name: str, n: int | Sequence[int], t0: float, witness=None, **kw) -> CheckReport:
    n_range = [n] if isinstance(n, int) else list(n)
    return CheckReport(name, n_range, witness is None, witness,
                       elapsed_ms=(time.perf_counter() - t0) * 1000, **kw)


def _require_standard(partition: ClassPartition, n: int):
    if partition.patterns != STANDARD_PATTERNS:
        raise InvalidInputError(f"expected a partition under {STANDARD_PATTERNS}")
    if partition.n != n:
        raise InvalidInputError(f"partition is for n = {partition.n}, not {n}")


def _require_at_least(n: int, lo: int, name: str):
    if n < lo:
        raise PreconditionError(f"{name} is only claimed for n >= {lo}")


def closed_form(n: int) -> int:
    num = n**3 + 6 * n**2 - 55 * n + 54
    assert num % 6 == 0
    return num // 6


def identity_perm(n: int) -> Permutation:
    return _unchecked(range(1, n + 1))


def psi_perm(n: int) -> Permutation:
    """``12...(n-2) n (n-1)``."""
    return _unchecked((*range(1, n - 1), n, n - 1))


def check_closed_form(n: int, partition: ClassPartition) -> CheckReport:
    t0 = time.perf_counter()
    _require_at_least(n, 7, "the closed form")
    _require_standard(partition, n)
    got = census(partition).nontrivial_classes
    want = closed_form(n)
    witness = None if got == want else {"n": n, "nontrivial_classes": got, "expected": want}
    return _report("closed-form", n, t0, witness,
                   details={"nontrivial_classes": got, "expected": want})


def check_recurrence(n: int, censuses: Sequence[Census]) -> CheckReport:
    """``A_n - B_n == 2 A_{n-1} - A_{n-2}`` from censuses for n, n-1, n-2."""
    t0 = time.perf_counter()
    _require_at_least(n, 3, "the recurrence")
    if len(censuses) != 3:
        raise InvalidInputError("need censuses for n, n-1 and n-2")
    cn, c1, c2 = censuses
    if len({c.patterns for c in censuses}) != 1:
        raise InvalidInputError("censuses come from different pattern sets")
    if (cn.n, c1.n, c2.n) != (n, n - 1, n - 2):
        raise InvalidInputError("censuses must be ordered n, n-1, n-2")
    lhs = cn.nontrivial_classes - cn.b_count
    rhs = 2 * c1.nontrivial_classes - c2.nontrivial_classes
    witness = None if lhs == rhs else {"n": n, "lhs": lhs, "rhs": rhs}
    return _report("recurrence", n, t0, witness, details={
        "A": [cn.nontrivial_classes, c1.nontrivial_classes, c2.nontrivial_classes],
        "B": cn.b_count})


def check_b_count(n: int, census_n: Census) -> CheckReport:
    t0 = time.perf_counter()
    _require_at_least(n, 7, "the B_n count")
    witness = None
    if census_n.n != n:
        raise InvalidInputError(f"census is for n = {census_n.n}, not {n}")
    if census_n.b_count != n + 1:
        witness = {"n": n, "b_count": census_n.b_count, "expected": n + 1}
    return _report("b-count", n, t0, witness, details={"b_count": census_n.b_count})


@dataclass
class _LeaderInfo:
    k: int
    leader: Permutation
    members: set[Permutation]
    roots: set[int]
    leader_root: int


def _leader_info(partition: ClassPartition) -> list[_LeaderInfo]:
    out = []
    for k, lead in enumerate(leader_permutations(partition.n), start=2):
        members = adjacency_set(lead)
        roots = {partition.root(q) for q in members}
        out.append(_LeaderInfo(k, lead, members, roots, partition.root(lead)))
    return out


def check_leader_classes(n: int, partition: ClassPartition) -> CheckReport:
    """Each leader's adjacency set is exactly one class; the n-1 are distinct."""
    t0 = time.perf_counter()
    _require_at_least(n, 7, "the leader-class structure")
    _require_standard(partition, n)
    witness = None
    seen: dict[int, int] = {}
    for info in _leader_info(partition):
        if partition.size_of(info.leader) != 1:
            witness = {"leader": _fmt(info.leader), "k": info.k, "reason": "leader is not a singleton"}
            break
        if not info.members:
            witness = {"leader": _fmt(info.leader), "k": info.k, "reason": "empty adjacency set"}
            break
        if len(info.roots) != 1:
            split = sorted(info.roots)
            witness = {"leader": _fmt(info.leader), "k": info.k,
                       "reason": "adjacency set spans several classes",
                       "classes": [_fmt(partition.members_of_root(r)[0]) for r in split[:2]]}
            break
        (root,) = info.roots
        size = partition.size_of(next(iter(info.members)))
        if size != len(info.members):
            extra = sorted(set(partition.members_of_root(root)) - info.members, key=rank)
            witness = {"leader": _fmt(info.leader), "k": info.k,
                       "reason": "class is larger than the adjacency set",
                       "member": _fmt(extra[0])}
            break
        if root in seen:
            witness = {"leader": _fmt(info.leader), "k": info.k,
                       "reason": f"same class as the leader with break point {seen[root]}"}
            break
        seen[root] = info.k
    return _report("leader-classes", n, t0, witness, details={"leader_classes": len(seen)})


def check_parity(n: int, partition: ClassPartition) -> CheckReport:
    """Every class is parity-homogeneous."""
    t0 = time.perf_counter()
    st = partition.stats
    mixed = np.flatnonzero((st.even != 0) & (st.even != st.size))
    witness = None
    if mixed.size:
        root = int(st.roots[mixed[0]])
        witness = {"class_min": _fmt(partition.members_of_root(root)[0]),
                   "size": int(st.size[mixed[0]]), "even_members": int(st.even[mixed[0]])}
    return _report("parity", n, t0, witness, details={"classes": int(st.size.shape[0])})


def check_parity_moves(n: int, samples: int = 100_000, seed: int = DEFAULT_SEED,
                       patterns: PatternSet = STANDARD_PATTERNS) -> CheckReport:
    """Random single replacements never change inversion parity."""
    t0 = time.perf_counter()
    c = patterns.c
    if c > n:
        raise PreconditionError(f"patterns of length {c} do not fit in S_{n}")
    rng = np.random.default_rng(seed)
    pats = np.array([[v - 1 for v in p] for p in patterns], dtype=np.int64)
    weights = np.array([c ** (c - 1 - j) for j in range(c)], dtype=np.int64)
    pat_codes = pats @ weights
    done = 0
    witness = None
    iu = np.triu_indices(n, 1)
    while done < samples and witness is None:
        batch = 4 * (samples - done) * len(patterns) + 64
        perms = rng.permuted(np.tile(np.arange(n), (batch, 1)), axis=1)
        pos = np.sort(np.argsort(rng.random((batch, n)), axis=1)[:, :c], axis=1)
        sub = np.take_along_axis(perms, pos, axis=1)
        shape = np.argsort(np.argsort(sub, axis=1), axis=1)
        codes = shape @ weights
        src = np.full(batch, -1)
        for s, code in enumerate(pat_codes):
            src[codes == code] = s
        keep = np.flatnonzero(src >= 0)[: samples - done]
        perms, pos, sub, src = perms[keep], pos[keep], sub[keep], src[keep]
        tgt = (src + 1 + rng.integers(0, len(patterns) - 1, size=len(keep))) % len(patterns) \
            if len(patterns) > 1 else src
        ordered = np.sort(sub, axis=1)
        moved = perms.copy()
        new_sub = np.take_along_axis(ordered, pats[tgt], axis=1)
        np.put_along_axis(moved, pos, new_sub, axis=1)

        def parity(rows):
            return ((rows[:, iu[0]] > rows[:, iu[1]]).sum(axis=1)) % 2

        bad = np.flatnonzero(parity(perms) != parity(moved))
        if bad.size:
            i = bad[0]
            witness = {"before": _fmt(perms[i] + 1), "after": _fmt(moved[i] + 1)}
        done += len(keep)
    return _report("parity-moves", n, t0, witness, seed=seed, details={"moves": int(done)})


def _b_family_mask(partition: ClassPartition) -> np.ndarray:
    st = partition.stats
    return (st.size >= 2) & (st.front == 0) & (st.back == 0)


def _primary_roots(partition: ClassPartition, leaders: list[_LeaderInfo]) -> list[int]:
    st = partition.stats
    leader_roots = set().union(*(info.roots for info in leaders))
    b_roots = st.roots[_b_family_mask(partition)].tolist()
    return [r for r in b_roots if r not in leader_roots]


def check_primary_classes(n: int, partition: ClassPartition) -> CheckReport:
    """Exactly two primary classes, holding 12...n and 12...(n-2)n(n-1)."""
    t0 = time.perf_counter()
    _require_at_least(n, 7, "the primary-class count")
    _require_standard(partition, n)
    st = partition.stats
    leaders = _leader_info(partition)
    primary = _primary_roots(partition, leaders)
    pi, psi = identity_perm(n), psi_perm(n)
    pi_root, psi_root = partition.root(pi), partition.root(psi)
    ids = {int(r): i for i, r in enumerate(st.roots)} if len(primary) <= 2 else None
    witness = None
    adjacent_roots = set().union(*(info.roots for info in leaders))
    if len(primary) != 2:
        extra = [r for r in primary if r not in (pi_root, psi_root)]
        witness = {"primary_classes": len(primary),
                   "unexpected_class": _fmt(partition.members_of_root(extra[0])[0]) if extra else None}
    elif set(primary) != {pi_root, psi_root}:
        witness = {"reason": "primary classes do not hold the identity and its last swap",
                   "classes": [_fmt(partition.members_of_root(r)[0]) for r in primary]}
    elif adjacent_roots & set(primary):
        witness = {"reason": "a primary class holds a leader-adjacent permutation"}
    else:
        pi_i, psi_i = ids[pi_root], ids[psi_root]
        if st.even[pi_i] != st.size[pi_i]:
            witness = {"reason": "identity class is not all even"}
        elif st.even[psi_i] != 0:
            witness = {"reason": "class of 12...n(n-1) is not all odd"}
    details = {"primary_classes": len(primary)}
    if witness is None:
        details["sizes"] = {"even": int(st.size[ids[pi_root]]), "odd": int(st.size[ids[psi_root]])}
    return _report("primary-classes", n, t0, witness, details=details)


class TagKind(enum.Enum):
    LEADER_ADJACENT = "LEADER_ADJACENT"
    PRIMARY_EVEN = "PRIMARY_EVEN"
    PRIMARY_ODD = "PRIMARY_ODD"
    LIFTED_FRONT = "LIFTED_FRONT"
    LIFTED_BACK = "LIFTED_BACK"
    LIFTED_BOTH = "LIFTED_BOTH"
    SINGLETON = "SINGLETON"


@dataclass(frozen=True)
class ClassTag:
    kind: TagKind
    k: int | None = None  # break point, for leader-adjacent classes only

    def __str__(self) -> str:
        return f"{self.kind.value}({self.k})" if self.k is not None else self.kind.value


def class_tags(partition: ClassPartition) -> dict[int, set[ClassTag]]:
    """Tags for every class of a {1234, 3412} partition, keyed by root rank.

    Primary classes are found by elimination: nontrivial classes with no
    member beginning with n or ending with 1 that are not leader-adjacent.
    """
    st = partition.stats
    leaders = _leader_info(partition)
    tags: dict[int, set[ClassTag]] = {int(r): set() for r in st.roots}
    for info in leaders:
        for r in info.roots:
            tags[r].add(ClassTag(TagKind.LEADER_ADJACENT, info.k))
    primary = set(_primary_roots(partition, leaders))
    for i, r in enumerate(st.roots.tolist()):
        size = int(st.size[i])
        if size == 1:
            tags[r].add(ClassTag(TagKind.SINGLETON))
            continue
        if r in primary:
            if st.even[i] == size:
                tags[r].add(ClassTag(TagKind.PRIMARY_EVEN))
            elif st.even[i] == 0:
                tags[r].add(ClassTag(TagKind.PRIMARY_ODD))
        front, back = st.front[i] == size, st.back[i] == size
        if front and back:
            tags[r].add(ClassTag(TagKind.LIFTED_BOTH))
        elif front:
            tags[r].add(ClassTag(TagKind.LIFTED_FRONT))
        elif back:
            tags[r].add(ClassTag(TagKind.LIFTED_BACK))
    return tags


def tag_class(members: set[Permutation]) -> set[ClassTag]:
    """Tags for one explicitly listed class, using the same rules as
    :func:`class_tags`."""
    if len(members) == 1:
        return {ClassTag(TagKind.SINGLETON)}
    n = len(next(iter(members)))
    tags = {ClassTag(TagKind.LEADER_ADJACENT, k)
            for q in members for k, _ in leader_adjacencies(q)}
    front = sum(q[0] == n for q in members)
    back = sum(q[-1] == 1 for q in members)
    if not tags and front == 0 and back == 0:
        odd = {inversion_parity(q) for q in members}
        if odd == {Parity.EVEN}:
            tags.add(ClassTag(TagKind.PRIMARY_EVEN))
        elif odd == {Parity.ODD}:
            tags.add(ClassTag(TagKind.PRIMARY_ODD))
    size = len(members)
    if front == size and back == size:
        tags.add(ClassTag(TagKind.LIFTED_BOTH))
    elif front == size:
        tags.add(ClassTag(TagKind.LIFTED_FRONT))
    elif back == size:
        tags.add(ClassTag(TagKind.LIFTED_BACK))
    return tags


_LIFTED = {TagKind.LIFTED_FRONT, TagKind.LIFTED_BACK, TagKind.LIFTED_BOTH}
_PRIMARY = {TagKind.PRIMARY_EVEN, TagKind.PRIMARY_ODD}


def check_assembly(n: int, partition: ClassPartition) -> CheckReport:
    """The B_n classes are the n-1 leader classes plus the two primary ones."""
    t0 = time.perf_counter()
    _require_at_least(n, 7, "the class assembly")
    _require_standard(partition, n)
    st = partition.stats
    tags = class_tags(partition)
    b_roots = set(st.roots[_b_family_mask(partition)].tolist())
    leader_roots = {r for r, ts in tags.items() if any(t.kind is TagKind.LEADER_ADJACENT for t in ts)}
    kinds = {r: {t.kind for t in ts} for r, ts in tags.items()}
    even = [r for r, ks in kinds.items() if TagKind.PRIMARY_EVEN in ks]
    odd = [r for r, ks in kinds.items() if TagKind.PRIMARY_ODD in ks]

    def first(roots):
        return _fmt(partition.members_of_root(min(roots))[0])

    witness = None
    untagged = [r for r, ks in kinds.items() if not ks]
    both = [r for r, ks in kinds.items() if TagKind.LEADER_ADJACENT in ks and ks & _PRIMARY]
    if untagged:
        witness = {"reason": "class without a tag", "class_min": first(untagged)}
    elif both:
        witness = {"reason": "class is both leader-adjacent and primary", "class_min": first(both)}
    elif len(leader_roots) != n - 1:
        witness = {"reason": "wrong number of leader classes", "leader_classes": len(leader_roots)}
    elif len(even) != 1 or len(odd) != 1:
        witness = {"reason": "wrong primary classes", "even": len(even), "odd": len(odd)}
    elif leader_roots | set(even) | set(odd) != b_roots:
        stray = (leader_roots | set(even) | set(odd)) ^ b_roots
        witness = {"reason": "leader and primary classes do not cover B_n", "class_min": first(stray)}
    elif len(b_roots) != (n - 1) + 2:
        witness = {"reason": "B_n differs from (n-1) + 2", "b_count": len(b_roots)}
    else:
        for i, r in enumerate(st.roots.tolist()):
            if st.size[i] >= 2 and r not in b_roots and not kinds[r] & _LIFTED:
                witness = {"reason": "nontrivial class outside B_n that is not lifted",
                           "class_min": first([r])}
                break
    counts: dict[str, int] = {}
    for ks in kinds.values():
        for k in ks:
            counts[k.value] = counts.get(k.value, 0) + 1
    return _report("assembly", n, t0, witness, details={"tag_counts": dict(sorted(counts.items()))})


# Hypothesis scan for removing a second letter.

def _insert(sigma: Sequence[int], pos: int, value: int) -> Permutation:
    lifted = [v + (v >= value) for v in sigma]
    lifted.insert(pos, value)
    return _unchecked(lifted)


def _adjacent_tables(m: int) -> list[tuple[Permutation, int, tuple[int, int]]]:
    """Every (sigma, k, 0-based swap positions) with sigma leader-adjacent in S_m."""
    rows = []
    for lead in leader_permutations(m):
        for sigma in sorted(adjacency_set(lead)):
            for k, tr in leader_adjacencies(sigma):
                rows.append((sigma, k, (tr.pos_a - 1, tr.pos_b - 1)))
    return sorted(set(rows))


def _mod_adjacent(a: int, b: int, modulus: int) -> bool:
    return (a - b) % modulus in (1, modulus - 1)


def _has_occurrence_avoiding(rho: Sequence[int], letters: set[int], patterns: PatternSet) -> bool:
    rest = [v for v in rho if v not in letters]
    return any(contains_pattern(rest, q) for q in patterns)


def _call_site_ok(rho: Permutation, a: int, b: int) -> bool:
    k = len(rho)
    if a in (1, k) or rho[0] == a or rho[-1] == a:
        return False
    if rho[1] == k and b == rho[0]:
        return False
    if rho[-2] == 1 and b == rho[-1]:
        return False
    if rho[-1] == 2 and b == 1:
        return False
    if rho[0] == k - 1 and b == k:
        return False
    return _has_occurrence_avoiding(rho, {a, b}, STANDARD_PATTERNS)


def _triples(sigma, k, swap, pos, a, n, modulus):
    """Yield candidate b for one (rho, a, tau_1); rho is sigma with a inserted."""
    rho = _insert(sigma, pos, a)
    i, j = swap
    moved = {v + (v >= a) for v in (sigma[i], sigma[j])}
    middle = sigma[i + 1] + (sigma[i + 1] >= a) if j - i == 2 else None
    for b in range(1, n + 1):
        if b == a or b in moved or b == middle:
            continue
        yield rho, b, _mod_adjacent(a, b, modulus)


def check_creating_primary(
    n: int,
    samples: int | None = None,
    seed: int = DEFAULT_SEED,
    mode: str = "lemma",
    exhaustive: bool | None = None,
) -> CheckReport:
    """Removing a well-chosen second letter from a primary permutation never
    lands next to a leader.

    Hypotheses on ``(rho, a, b)``: rho is primary; removing ``a`` leaves a
    leader-adjacent permutation via swap ``tau_1``; ``b`` is not moved by
    ``tau_1``, is not the single letter strictly between the swapped ones,
    and ``a - b`` is not +-1 modulo n.  ``mode="call-site"`` adds the extra
    conditions used when the claim is applied (a not extreme in value or
    position, the four end conditions on b, and a {1234, 3412} occurrence
    avoiding a and b) and then demands that removing b leaves a primary
    permutation.

    n <= 8 is scanned exhaustively; larger n draws ``samples`` (default
    10**5) hypothesis-satisfying triples at random unless ``exhaustive``.
    """
    t0 = time.perf_counter()
    _require_at_least(n, 5, "the second-letter removal claim")
    if mode not in ("lemma", "call-site"):
        raise InvalidInputError(f"unknown mode {mode!r}")
    if exhaustive is None:
        exhaustive = n <= 8
    table = _adjacent_tables(n - 1)

    @lru_cache(maxsize=None)
    def conclusion(rho, b):
        rest = sub_standardize(rho, b)
        if mode == "lemma":
            return not leader_adjacencies(rest)
        return is_primary(rest)

    @lru_cache(maxsize=None)
    def admissible(rho, a, b):
        return is_primary(rho) and (mode == "lemma" or _call_site_ok(rho, a, b))

    checked = failures = 0
    alt_only = 0
    witness = None
    alt_witness = None
    # triples admitted under one modulus reading but not the other
    disagreements = []

    def visit(rho, a, b, skip_n, skip_alt):
        nonlocal checked, failures, alt_only, witness, alt_witness
        if skip_n and skip_alt:
            return
        if not admissible(rho, a, b):
            return
        holds = conclusion(rho, b)
        key = (rank(rho), a, b)
        if not skip_n:
            checked += 1
            failures += not holds
            if not holds and (witness is None or key < witness[0]):
                witness = (key, rho, a, b)
        if not skip_alt and skip_n:
            alt_only += 1
        if not skip_alt and not holds and (alt_witness is None or key < alt_witness[0]):
            alt_witness = (key, rho, a, b)
        if skip_n != skip_alt and not holds:
            disagreements.append((rho, a, b))

    if exhaustive:
        for sigma, k, swap in table:
            for pos in range(n):
                for a in range(1, n + 1):
                    for rho, b, skip in _triples(sigma, k, swap, pos, a, n, n):
                        visit(rho, a, b, skip, _mod_adjacent(a, b, n - 1))
        used_seed = None
    else:
        samples = 100_000 if samples is None else samples
        rng = random.Random(seed)
        draws = 0
        while checked < samples:
            draws += 1
            if draws > 200 * samples:
                raise RuntimeError("sampler could not find enough admissible triples")
            sigma, k, swap = table[rng.randrange(len(table))]
            pos, a = rng.randrange(n), rng.randrange(1, n + 1)
            b = rng.randrange(1, n + 1)
            rho = _insert(sigma, pos, a)
            i, j = swap
            moved = {v + (v >= a) for v in (sigma[i], sigma[j])}
            middle = sigma[i + 1] + (sigma[i + 1] >= a) if j - i == 2 else None
            if b == a or b in moved or b == middle or _mod_adjacent(a, b, n):
                continue
            visit(rho, a, b, False, _mod_adjacent(a, b, n - 1))
        used_seed = seed

    def pack(w):
        if w is None:
            return None
        _, rho, a, b = w
        return {"rho": _fmt(rho), "a": a, "b": b,
                "rho_minus_b": _fmt(sub_standardize(rho, b))}

    details = {"mode": mode, "exhaustive": exhaustive, "triples": checked,
               "counterexamples": failures, "alt_modulus_only_triples": alt_only}
    if disagreements:
        details["modulus_disagreements"] = len(disagreements)
        details["alt_modulus_counterexample"] = pack(alt_witness)
    name = "creating-primary" if mode == "lemma" else "creating-primary-call-site"
    return _report(name, n, t0, pack(witness), seed=used_seed, details=details)


CHECKS: dict[str, Callable] = {
    "closed-form": check_closed_form,
    "recurrence": check_recurrence,
    "b-count": check_b_count,
    "leader-classes": check_leader_classes,
    "parity": check_parity,
    "parity-moves": check_parity_moves,
    "primary-classes": check_primary_classes,
    "creating-primary": check_creating_primary,
    "assembly": check_assembly,
}
