"""Sweep the product rule S^_lam * S^_mu = S^_nu over anti-dominant mu and length-additive pairs."""

from __future__ import annotations

import argparse
import time
from dataclasses import dataclass, field

from loop_schubert.affschubert import affine_schubert, theorem_a_pairs


@dataclass
class SweepConfig:
    ranks: list[int] = field(default_factory=lambda: [3, 4])
    max_length: int = 8
    show_failures: int = 10


def run(cfg: SweepConfig) -> int:
    bad_total = 0
    for n in cfg.ranks:
        t0 = time.perf_counter()
        pairs = theorem_a_pairs(n, cfg.max_length)
        bad = [(lam, mu) for lam, mu, nu in pairs if affine_schubert(lam) * affine_schubert(mu) != affine_schubert(nu)]
        print(f"n={n} l<={cfg.max_length}: {len(pairs)} pairs, {len(bad)} failures ({time.perf_counter() - t0:.2f}s)")
        for lam, mu in bad[: cfg.show_failures]:
            print(f"  FAIL lambda={lam} mu={mu}")
        bad_total += len(bad)
    return bad_total


def main() -> None:
    d = SweepConfig()
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--ranks", type=int, nargs="+", default=d.ranks)
    p.add_argument("--max-length", type=int, default=d.max_length)
    a = p.parse_args()
    raise SystemExit(1 if run(SweepConfig(a.ranks, a.max_length)) else 0)


if __name__ == "__main__":
    main()
