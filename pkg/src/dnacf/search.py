"""Seed-set enumeration, closure under reverse/complement, and the random
construction that drives the lower-bound tables.

The search is deterministic given (spec, config): every trial derives its
randomness from a counter-based mix of the master seed and the trial index,
so results are independent of scheduling and can be replayed one trial at a
time to materialize witness codes.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Iterable

import numpy as np

from . import _kernels, core
from .constraints import DnaCode, verify_code


class InstanceTooLargeError(RuntimeError):
    """Raised when an exact computation is refused at the requested size."""


@dataclass(frozen=True)
class SeedSetSpec:
    """Length, conflict level, and GC target of a seed set."""

    n: int
    ell: int
    g: int

    def __post_init__(self) -> None:
        if self.n < 2:
            raise ValueError("n must be at least 2")
        if not 1 <= self.ell <= self.n // 2:
            raise ValueError(f"ell={self.ell} out of 1..{self.n // 2}")
        if not 0 <= self.g <= self.n:
            raise ValueError(f"g={self.g} out of 0..{self.n}")


@dataclass(frozen=True)
class SearchConfig:
    trials: int = 100_000
    master_seed: int = 1
    subset_law: str = "mixed"

    def __post_init__(self) -> None:
        if self.trials < 1:
            raise ValueError("trials must be positive")
        if not 0 <= self.master_seed < 1 << 63:
            raise ValueError("master_seed must fit in 63 bits")
        if self.subset_law not in _kernels.LAW_CODES:
            raise ValueError(f"unknown subset law {self.subset_law!r}")


def enumerate_seed_set(spec: SeedSetSpec) -> list[str]:
    """All length-n strings with GC content g that are ell conflict free,
    lexicographically sorted.  The GC filter runs before the conflict scan."""
    vals = _kernels.enumerate_seed_values(spec.n, spec.ell, spec.g)
    return core.unpack_all(vals, spec.n)


def orbit_closure(words: Iterable[str]) -> set[str]:
    """Smallest superset closed under reverse and complement (hence also
    under reverse-complement)."""
    out = set()
    frontier = [core.clean(w) for w in words]
    if frontier:
        n = len(frontier[0])
        if any(len(w) != n for w in frontier):
            raise ValueError("mixed lengths")
    while frontier:
        w = frontier.pop()
        if w in out:
            continue
        out.add(w)
        frontier.append(core.reverse(w))
        frontier.append(core.complement(w))
    return out


@dataclass(frozen=True)
class BoundEntry:
    size: int
    trial: int
    code: tuple[str, ...]


@dataclass
class BoundTable:
    """Best code found per Hamming-distance floor for one (n, ell, g)."""

    spec: SeedSetSpec
    config: SearchConfig
    seed_set_size: int
    buckets: dict[int, BoundEntry] = field(default_factory=dict)

    def best_size(self, d: int) -> int:
        entry = self.buckets.get(d)
        return entry.size if entry else 0

    def to_dict(self) -> dict:
        return {
            "parameters": {
                "n": self.spec.n,
                "ell": self.spec.ell,
                "gc": self.spec.g,
                "trials": self.config.trials,
                "master_seed": self.config.master_seed,
                "subset_law": self.config.subset_law,
            },
            "seed_set_size": self.seed_set_size,
            "buckets": {
                str(d): {"size": e.size, "trial": e.trial, "code": list(e.code)}
                for d, e in sorted(self.buckets.items())
            },
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True) + "\n"


def _orbit_partition(vals: np.ndarray, n: int) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """CSR partition of seed values into orbits under reverse/complement.

    The seed set is closed under both maps, so every orbit stays inside it.
    """
    index = {int(v): i for i, v in enumerate(vals)}
    orb_of = np.full(len(vals), -1, dtype=np.int64)
    groups: list[list[int]] = []
    mask = (1 << (2 * n)) - 1
    for i, v in enumerate(vals):
        if orb_of[i] >= 0:
            continue
        v = int(v)
        rv = core.reverse_packed(v, n)
        members = sorted({v, rv, v ^ mask, rv ^ mask})
        gid = len(groups)
        idxs = [index[m] for m in members]
        for ix in idxs:
            orb_of[ix] = gid
        groups.append(idxs)
    orb_ptr = np.zeros(len(groups) + 1, dtype=np.int64)
    for gid, idxs in enumerate(groups):
        orb_ptr[gid + 1] = orb_ptr[gid] + len(idxs)
    orb_members = np.concatenate([np.array(g, dtype=np.int64) for g in groups])
    return orb_of, orb_ptr, orb_members


def random_construction(spec: SeedSetSpec, config: SearchConfig) -> BoundTable:
    """Run the randomized closure construction and keep, per distance floor,
    the largest closure whose measured minimum distance reaches that floor."""
    vals = _kernels.enumerate_seed_values(spec.n, spec.ell, spec.g)
    if vals.size == 0:
        raise ValueError(f"empty seed set for {spec}")
    orb_of, orb_ptr, orb_members = _orbit_partition(vals, spec.n)
    law = _kernels.LAW_CODES[config.subset_law]
    best_size, best_trial = _kernels.run_trials(
        vals, orb_of, orb_ptr, orb_members, spec.n, config.trials, config.master_seed, law
    )
    table = BoundTable(spec=spec, config=config, seed_set_size=int(vals.size))
    for d in range(1, spec.n + 1):
        if best_size[d] > 0:
            trial = int(best_trial[d])
            members = _kernels.replay_trial(
                vals, orb_of, orb_ptr, orb_members, trial, config.master_seed, law
            )
            words = tuple(sorted(core.unpack(int(vals[i]), spec.n) for i in members))
            assert len(words) == int(best_size[d])
            table.buckets[d] = BoundEntry(size=len(words), trial=trial, code=words)
    return table


def extremal_size(n: int) -> int:
    """Maximum size at full distance d = n: 2 for odd n, 4 for even n."""
    if n < 2:
        raise ValueError("n must be at least 2")
    return 2 if n % 2 else 4


# ---------------------------------------------------------------------------
# exact small-instance maxima via branch and bound over orbits
# ---------------------------------------------------------------------------

_CONSTRAINT_OPS = {"r", "rc", "c", "GC"}


def exact_max_size(
    n: int,
    ell: int,
    g: int,
    d: int,
    constraint_set: Iterable[str] = ("r", "rc", "GC"),
) -> int:
    """Exact maximum code size over the seed set, with the code closed under
    the requested involutions and all pairwise distances >= d.

    Only desk-scale instances are accepted (seed set <= 512 or n <= 6).
    """
    ops = set(constraint_set)
    if not ops <= _CONSTRAINT_OPS:
        raise ValueError(f"unknown constraint ops {ops - _CONSTRAINT_OPS}")
    if not 1 <= d <= n:
        raise ValueError("d out of range")
    if "GC" in ops:
        vals = _kernels.enumerate_seed_values(n, ell, g)
    else:
        vals = _enumerate_conflict_free(n, ell)
    if vals.size > 512 and n > 6:
        raise InstanceTooLargeError(
            f"seed set of {vals.size} strings at n={n}; exact search refused"
        )
    closure_ops = ops & {"r", "rc", "c"}
    orbits = _orbits_under(vals, n, closure_ops)
    if d == 1:
        return int(vals.size)  # distinctness alone; the closed seed set is optimal

    # orbit compatibility graph: a clique is a valid closed code
    sizes_all = [len(o) for o in orbits]
    packed = [np.array(o, dtype=np.int64) for o in orbits]
    ok_self = []
    for o in packed:
        good = all(
            _kernels.hamming_packed(int(o[i]), int(o[j])) >= d
            for i in range(len(o))
            for j in range(i + 1, len(o))
        )
        ok_self.append(good)
    idxs = [i for i in range(len(orbits)) if ok_self[i]]
    # renumber vertices 0..V-1, heaviest first
    idxs.sort(key=lambda i: (-sizes_all[i], i))
    v_count = len(idxs)
    weights = [sizes_all[i] for i in idxs]
    adj = [0] * v_count
    for a in range(v_count):
        for b in range(a + 1, v_count):
            if _orbits_compatible(packed[idxs[a]], packed[idxs[b]], d):
                adj[a] |= 1 << b
                adj[b] |= 1 << a
    return _max_weight_clique(weights, adj)


def _max_weight_clique(weights: list[int], adj: list[int]) -> int:
    """Branch and bound with a greedy warm start and a coloring bound."""
    v_count = len(weights)
    if v_count == 0:
        return 0
    # greedy warm start
    best = 0
    for start in range(min(v_count, 32)):
        cur, total = 0, 0
        cand = (1 << v_count) - 1
        v = start
        while True:
            cur |= 1 << v
            total += weights[v]
            cand &= adj[v]
            if cand == 0:
                break
            v = (cand & -cand).bit_length() - 1
        best = max(best, total)

    def color_bound(mask: int) -> int:
        # partition candidates into independent classes; each contributes
        # at most its heaviest member
        bound = 0
        rest = mask
        while rest:
            cls_max = 0
            avail = rest
            while avail:
                v = (avail & -avail).bit_length() - 1
                avail &= avail - 1
                rest &= ~(1 << v)
                cls_max = max(cls_max, weights[v])
                avail &= ~adj[v]
            bound += cls_max
        return bound

    def expand(cand: int, current: int) -> None:
        nonlocal best
        if current > best:
            best = current
        while cand:
            if current + color_bound(cand) <= best:
                return
            v = (cand & -cand).bit_length() - 1
            cand &= ~(1 << v)
            expand(cand & adj[v], current + weights[v])

    expand((1 << v_count) - 1, 0)
    return best


def _enumerate_conflict_free(n: int, ell: int) -> np.ndarray:
    parts = [_kernels.enumerate_seed_values(n, ell, g) for g in range(n + 1)]
    return np.sort(np.concatenate(parts))


def _orbits_under(vals: np.ndarray, n: int, ops: set[str]) -> list[list[int]]:
    """Partition into orbits under the group generated by the chosen maps."""
    mask = (1 << (2 * n)) - 1
    gens = []
    if "r" in ops:
        gens.append(lambda v: core.reverse_packed(v, n))
    if "c" in ops:
        gens.append(lambda v: v ^ mask)
    if "rc" in ops:
        gens.append(lambda v: core.reverse_packed(v, n) ^ mask)
    present = {int(v) for v in vals}
    seen: set[int] = set()
    orbits: list[list[int]] = []
    for v in vals:
        v = int(v)
        if v in seen:
            continue
        orbit = {v}
        frontier = [v]
        while frontier:
            w = frontier.pop()
            for gfun in gens:
                u = gfun(w)
                if u not in orbit:
                    if u not in present:
                        raise AssertionError("seed set not closed under requested ops")
                    orbit.add(u)
                    frontier.append(u)
        seen |= orbit
        orbits.append(sorted(orbit))
    return orbits


def _orbits_compatible(a: np.ndarray, b: np.ndarray, d: int) -> bool:
    for va in a:
        for vb in b:
            if _kernels.hamming_packed(int(va), int(vb)) < d:
                return False
    return True


def verify_table(table: BoundTable) -> bool:
    """Check every stored code against its bucket's distance floor."""
    for d, entry in table.buckets.items():
        report = verify_code(DnaCode(entry.code), claimed_d=d)
        if report.min_hamming < d and report.size > 1:
            return False
        if not (report.reverse_ok and report.reverse_complement_ok and report.complement_ok):
            return False
        if report.gc_constant != table.spec.g:
            return False
    return True
