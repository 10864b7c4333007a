"""Constructive bound, chain criterion and Don check over every standardized
automaton of each size, plus the expandability statements for K = 2Z_n."""

import argparse
import time
from dataclasses import asdict, dataclass

from reachlab.sweeps import lemma_sweep, sampled_lemma_sweep, theorem_sweep


@dataclass
class Config:
    n_max: int = 8
    lemma_n_max: int = 10
    sample_sizes: tuple[int, ...] = (12, 14)
    samples: int = 500
    seed: int = 20231015


def main(cfg: Config):
    for n in range(3, cfg.n_max + 1):
        t0 = time.perf_counter()
        s = theorem_sweep(n)
        print(f"theorem n={n} ok={s.ok} {asdict(s)} [{time.perf_counter() - t0:.1f}s]", flush=True)
    for n in range(4, cfg.lemma_n_max + 1, 2):
        t0 = time.perf_counter()
        ls = lemma_sweep(n, only_k2=n >= 10)
        print(f"lemmas n={n} {asdict(ls)} [{time.perf_counter() - t0:.1f}s]", flush=True)
    for n in cfg.sample_sizes:
        ls = sampled_lemma_sweep(n, cfg.samples, cfg.seed)
        print(f"sampled n={n} max dist[K]={ls.max_dist_k} (n^2/2 = {n * n / 2:g}) {asdict(ls)}", flush=True)


if __name__ == "__main__":
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--n-max", type=int, default=8)
    p.add_argument("--lemma-n-max", type=int, default=10)
    p.add_argument("--samples", type=int, default=500)
    p.add_argument("--seed", type=int, default=20231015)
    a = p.parse_args()
    main(Config(n_max=a.n_max, lemma_n_max=a.lemma_n_max, samples=a.samples, seed=a.seed))
