"""Shortest length to Z_n minus {n-1, n/2-1} in A_n against 5n/2 - 3 and 2n."""

import argparse
import time
from dataclasses import dataclass, field

from reachlab.counterexamples import verify_counterexample


@dataclass
class Config:
    sizes: list[int] = field(default_factory=lambda: list(range(10, 23, 2)))


def main(cfg: Config):
    print("n,shortest,lower_bound,don_bound,violates,seconds")
    for n in cfg.sizes:
        t0 = time.perf_counter()
        r = verify_counterexample(n)
        print(f"{n},{r.shortest_len},{r.lower_bound},{r.don_bound},{r.violates},"
              f"{time.perf_counter() - t0:.2f}", flush=True)


if __name__ == "__main__":
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--sizes", type=int, nargs="+", default=list(range(10, 23, 2)))
    main(Config(p.parse_args().sizes))
