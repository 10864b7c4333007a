"""Exhaustive enumeration of circular binary automata up to isomorphism.

An isomorphism has to commute with b, so on Z_n it is a rotation; a rotation
by c moves excl(a) to excl(a) + c. Fixing excl(a) = {0} therefore picks
exactly one automaton per class, and the candidates are the surjections of
Z_n onto Z_n minus {0}. Work is sharded by the image of 0 under a.
"""

from __future__ import annotations

import json
import logging
import math
from dataclasses import asdict, dataclass, field
from multiprocessing import Pool
from pathlib import Path
from typing import Iterator, Literal

import numpy as np

from . import _kernels as K
from .core import BinaryDfa
from .errors import OutOfRange

log = logging.getLogger(__name__)

Mode = Literal["binary", "standardized"]
MIN_N, MAX_N, LONG_N = 3, 10, 9

# violating classes per n as published; n <= 7 are all zero
PUBLISHED_VIOLATORS = {
    "binary": {8: 68, 9: 0, 10: 9210},
    "standardized": {8: 0, 9: 0, 10: 0},
}


def published_violators(n: int, mode: Mode) -> int:
    return PUBLISHED_VIOLATORS[mode].get(n, 0)


def candidate_count(n: int) -> int:
    return math.comb(n, 2) * math.factorial(n - 1)


def shard_count(n: int) -> int:
    return candidate_count(n) // (n - 1)


def _check_n(n: int):
    if not MIN_N <= n <= MAX_N:
        raise OutOfRange(f"enumeration supports {MIN_N} <= n <= {MAX_N}, got {n}")


def candidate_shard(n: int, v0: int) -> np.ndarray:
    """Rows are a-maps with a(0) = v0 and image Z_n minus {0}, in lex order."""
    _check_n(n)
    return K.candidates_shard(n, v0, shard_count(n))


def standardized_rows(amaps: np.ndarray) -> np.ndarray:
    """Boolean mask of rows whose duplicated state is a(0)."""
    return (amaps == amaps[:, :1]).sum(axis=1) == 2


def enumerate_candidates(n: int) -> Iterator[BinaryDfa]:
    for v0 in range(1, n):
        for row in candidate_shard(n, v0):
            yield BinaryDfa(n, tuple(row))


@dataclass
class ShardResult:
    n: int
    mode: str
    v0: int
    candidates: int
    cr: int
    violators_binary: int
    violators_standardized: int
    witness_failures: int
    violators: list[list[int]] = field(default_factory=list)


def run_shard(n: int, v0: int, mode: Mode) -> ShardResult:
    amaps = candidate_shard(n, v0)
    std = standardized_rows(amaps)
    if mode == "standardized":
        amaps, std = np.ascontiguousarray(amaps[std]), std[std]
    cr, viol, wit = K.classify_batch(amaps, n)
    bad = cr & viol
    return ShardResult(
        n=n, mode=mode, v0=v0,
        candidates=len(amaps),
        cr=int(cr.sum()),
        violators_binary=int(bad.sum()),
        violators_standardized=int((bad & std).sum()),
        witness_failures=int((~cr & ~wit).sum()),
        violators=amaps[bad].tolist(),
    )


@dataclass
class EnumerationSummary:
    n: int
    mode: str
    total_candidates: int
    cr_count: int
    violator_count_binary: int
    violator_count_standardized: int
    witness_failures: int = 0
    violator_list: list[tuple[int, ...]] | None = None

    @property
    def violators(self) -> int:
        if self.mode == "binary":
            return self.violator_count_binary
        return self.violator_count_standardized

    @property
    def expected(self) -> int:
        return published_violators(self.n, self.mode)

    @property
    def matches_published(self) -> bool:
        return self.violators == self.expected

    def csv_row(self) -> str:
        return f"{self.n},{self.mode},{self.total_candidates},{self.cr_count},{self.violators}"


CSV_HEADER = "n,mode,candidates,cr,violators"


def _shard_job(args):
    return run_shard(*args)


def table1(
    n: int,
    mode: Mode = "binary",
    workers: int = 1,
    checkpoint: str | Path | None = None,
    keep_violators: bool = True,
    allow_long: bool = False,
) -> EnumerationSummary:
    """Count the non-isomorphic CR automata breaking Don's bound at size n.

    n >= 9 is refused unless ``allow_long``. With a checkpoint directory each
    finished shard is written as JSON and reused on the next run.
    """
    _check_n(n)
    if n >= LONG_N and not allow_long:
        raise OutOfRange(f"n={n} is a long-running job; pass allow_long")
    ckdir = Path(checkpoint) if checkpoint else None
    if ckdir:
        ckdir.mkdir(parents=True, exist_ok=True)

    def ck_path(v0):
        return ckdir / f"n{n}_{mode}_shard{v0}.json"

    results: dict[int, ShardResult] = {}
    todo = []
    for v0 in range(1, n):
        if ckdir and ck_path(v0).exists():
            results[v0] = ShardResult(**json.loads(ck_path(v0).read_text()))
            log.info("shard %d of n=%d loaded from checkpoint", v0, n)
        else:
            todo.append((n, v0, mode))

    def done(res: ShardResult):
        results[res.v0] = res
        log.info("shard %d of n=%d: %d candidates, %d violators", res.v0, n, res.candidates, res.violators_binary)
        if ckdir:
            ck_path(res.v0).write_text(json.dumps(asdict(res)))

    if workers > 1 and len(todo) > 1:
        with Pool(workers) as pool:
            for res in pool.imap(_shard_job, todo):
                done(res)
    else:
        for job in todo:
            done(_shard_job(job))

    ordered = [results[v0] for v0 in range(1, n)]
    return EnumerationSummary(
        n=n,
        mode=mode,
        total_candidates=sum(r.candidates for r in ordered),
        cr_count=sum(r.cr for r in ordered),
        violator_count_binary=sum(r.violators_binary for r in ordered),
        violator_count_standardized=sum(r.violators_standardized for r in ordered),
        witness_failures=sum(r.witness_failures for r in ordered),
        violator_list=[tuple(v) for r in ordered for v in r.violators] if keep_violators else None,
    )
