"""Write a JSON table of affine Schubert polynomials S^ for all coweights up to a length."""

from __future__ import annotations

import argparse
import time
from dataclasses import dataclass
from pathlib import Path

from loop_schubert.cli import build_table, dump_table, load_table


@dataclass
class TableConfig:
    n: int = 3
    max_length: int = 6
    full: bool = False  # also store S~(x,y) and S~(x)
    out: Path = Path("results/table_n3_l6.json")
    check_reload: bool = True


def run(cfg: TableConfig) -> None:
    t0 = time.perf_counter()
    records = build_table(cfg.n, cfg.max_length, cfg.full)
    text = dump_table(records)
    cfg.out.parent.mkdir(parents=True, exist_ok=True)
    cfg.out.write_text(text)
    if cfg.check_reload:
        assert dump_table(load_table(text)) == text
    print(f"{len(records)} records, n={cfg.n}, l<={cfg.max_length} -> {cfg.out} ({time.perf_counter() - t0:.2f}s)")


def main() -> None:
    d = TableConfig()
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--n", type=int, default=d.n)
    p.add_argument("--max-length", type=int, default=d.max_length)
    p.add_argument("--full", action="store_true")
    p.add_argument("--out", type=Path)
    a = p.parse_args()
    out = a.out or Path(f"results/table_n{a.n}_l{a.max_length}.json")
    run(TableConfig(a.n, a.max_length, a.full, out))


if __name__ == "__main__":
    main()
