"""The explicit automata B_8 and A_n that break Don's bound."""

from __future__ import annotations

from dataclasses import dataclass

from .core import BinaryDfa, StateSet
from .errors import BadN, ReachlabError
from .reachability import is_completely_reachable, reach_table


def build_B_8() -> BinaryDfa:
    """8 states; a sends 0>1>3>7>4>6>2>5>4."""
    edges = {0: 1, 1: 3, 3: 7, 7: 4, 4: 6, 6: 2, 2: 5, 5: 4}
    return BinaryDfa(8, tuple(edges[q] for q in range(8)))


def build_A_n(n: int) -> BinaryDfa:
    """a: 0>n-3>1>n-2>n/2>n-4>n-1>n/2, every other state fixed."""
    if n % 2 or n < 10:
        raise BadN(f"A_n needs an even n >= 10, got {n}")
    h = n // 2
    a = list(range(n))
    for src, dst in [(0, n - 3), (n - 3, 1), (1, n - 2), (n - 2, h),
                     (h, n - 4), (n - 4, n - 1), (n - 1, h)]:
        a[src] = dst
    return BinaryDfa(n, tuple(a))


def counterexample_target(n: int) -> StateSet:
    return StateSet.full(n) - StateSet.of(n, [n - 1, n // 2 - 1])


@dataclass(frozen=True)
class CounterexampleReport:
    n: int
    is_cr: bool
    target: StateSet
    shortest_len: int
    lower_bound: int
    don_bound: int

    @property
    def violates(self) -> bool:
        return self.shortest_len > self.don_bound


def verify_counterexample(n: int) -> CounterexampleReport:
    """Run the BFS on A_n and check CR, the 5n/2 - 3 bound and the violation."""
    dfa = build_A_n(n)
    table = reach_table(dfa)
    target = counterexample_target(n)
    d = table.distance(target)
    report = CounterexampleReport(
        n=n,
        is_cr=is_completely_reachable(dfa, table),
        target=target,
        shortest_len=-1 if d is None else d,
        lower_bound=5 * n // 2 - 3,
        don_bound=2 * n,
    )
    if not (report.is_cr and report.shortest_len >= report.lower_bound and report.violates):
        raise ReachlabError(f"A_{n} does not behave as claimed: {report}")
    return report
