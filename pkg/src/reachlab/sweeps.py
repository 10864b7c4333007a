"""Exhaustive and sampled sweeps over standardized automata.

These drive the acceptance suite and the scripts in ``scripts/``: every
standardized candidate of a given size is pushed through the jitted checks
and the per-automaton rows are folded into a summary.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import _kernels as K
from .enumeration import candidate_shard, standardized_rows


def standardized_candidates(n: int, even_a0_only: bool = False) -> np.ndarray:
    """All standardized a-maps with excl(a) = {0}; a(0) even if requested."""
    parts = []
    for v0 in range(1, n):
        if even_a0_only and v0 % 2:
            continue
        a = candidate_shard(n, v0)
        parts.append(a[standardized_rows(a)])
    return np.ascontiguousarray(np.vstack(parts))


@dataclass
class TheoremSweep:
    n: int
    candidates: int
    chain_complete: int
    completely_reachable: int
    chain_cr_mismatches: int
    max_excess: int
    max_constructed_len: int
    wrong_words: int
    construction_errors: int
    step_bound_failures: int
    don_violators: int
    don_violators_large_k: int
    witness_failures: int

    @property
    def ok(self) -> bool:
        return (
            self.chain_cr_mismatches == 0
            and self.max_excess <= 0
            and self.wrong_words == 0
            and self.construction_errors == 0
            and self.step_bound_failures == 0
            and self.don_violators_large_k == 0
            and self.witness_failures == 0
        )


def theorem_sweep(n: int) -> TheoremSweep:
    """Constructed words, chain criterion and Don check for every
    standardized candidate with n states."""
    amaps = standardized_candidates(n)
    rows = K.standardized_sweep(amaps, n)
    cr = rows[:, 1] == 1
    large_k = 2 * rows[:, 2] >= n
    done = cr & (rows[:, 0] == 1)
    return TheoremSweep(
        n=n,
        candidates=len(rows),
        chain_complete=int((rows[:, 0] == 1).sum()),
        completely_reachable=int(cr.sum()),
        chain_cr_mismatches=int((rows[:, 0] != rows[:, 1]).sum()),
        max_excess=int(rows[done, 3].max()) if done.any() else 0,
        max_constructed_len=int(rows[:, 8].max()),
        wrong_words=int(rows[:, 4].sum()),
        construction_errors=int(rows[:, 5].sum()),
        step_bound_failures=int(rows[:, 6].sum()),
        don_violators=int(((rows[:, 7] > 0) & cr).sum()),
        don_violators_large_k=int(((rows[:, 7] > 0) & cr & large_k).sum()),
        witness_failures=int((rows[:, 9] == 0).sum()),
    )


@dataclass
class LemmaSweep:
    n: int
    instances: int
    k2_instances: int
    single_orbit: int
    cv23_failures: int
    k_plus_1_failures: int
    k_failures: int
    lemon_failures: int
    extreme_failures: int
    max_dist_k: int

    @property
    def acnes_ok(self) -> bool:
        return self.max_dist_k <= self.n * self.n / 2 or self.n < 10


def _fold_lemma_rows(n: int, rows: np.ndarray) -> LemmaSweep:
    rows = rows[rows[:, 0] == 1]
    k2 = rows[rows[:, 2] == 2] if n % 2 == 0 else rows[:0]
    return LemmaSweep(
        n=n,
        instances=len(rows),
        k2_instances=len(k2),
        single_orbit=int((k2[:, 1] == 1).sum()),
        cv23_failures=int(rows[:, 3].sum()),
        k_plus_1_failures=int((k2[:, 4] == 1).sum()),
        k_failures=int((k2[:, 5] == 1).sum()),
        lemon_failures=int(k2[k2[:, 1] > 1, 6].sum()),
        extreme_failures=int(k2[k2[:, 1] == 1, 7].sum()),
        max_dist_k=int(k2[:, 8].max()) if len(k2) else -1,
    )


def lemma_sweep(n: int, only_k2: bool = False) -> LemmaSweep:
    """Expandability statements over all CR standardized automata of size n
    (only those with orbit subgroup 2Z_n when ``only_k2``)."""
    amaps = standardized_candidates(n, even_a0_only=only_k2)
    return _fold_lemma_rows(n, K.orbit_lemma_sweep(amaps, n, only_k2))


def sample_single_orbit(n: int, count: int, seed: int = 0) -> np.ndarray:
    """Random standardized a-maps with orbit {d} and orbit subgroup 2Z_n."""
    rng = np.random.default_rng(seed)
    ds = [d for d in range(2, n, 2) if np.gcd(d, n) == 2]
    out = np.empty((count, n), np.int64)
    for k in range(count):
        d = int(rng.choice(ds))
        rest_src = [q for q in range(1, n) if q != d]
        rest_dst = [q for q in range(1, n) if q != d]
        rng.shuffle(rest_dst)
        out[k, 0] = d
        out[k, d] = d
        out[k, rest_src] = rest_dst
    return out


def sampled_lemma_sweep(n: int, count: int, seed: int = 0) -> LemmaSweep:
    amaps = sample_single_orbit(n, count, seed)
    return _fold_lemma_rows(n, K.orbit_lemma_sweep(amaps, n, True))
