"""List the box classes for SL_n and flag which S^ factor through others by exact division."""

from __future__ import annotations

import argparse
from dataclasses import dataclass

from loop_schubert.affine import format_affine_word, reduced_word_affine
from loop_schubert.affschubert import box_classes
from loop_schubert.polyring import to_text


@dataclass
class PrimeConfig:
    n: int = 4


def run(cfg: PrimeConfig) -> None:
    for bc in box_classes(cfg.n):
        word = format_affine_word(*reduced_word_affine(bc.element))
        tag = "unit" if bc.element.length() == 0 else "product" if bc.factorization else "prime"
        extra = ""
        if bc.factorization:
            extra = "  = " + " * ".join(format_affine_word(*reduced_word_affine(f)) for f in bc.factorization)
        print(f"{word:<28} {tag:<8} {to_text(bc.schubert_h)}{extra}")


def main() -> None:
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--n", type=int, default=PrimeConfig.n)
    run(PrimeConfig(p.parse_args().n))


if __name__ == "__main__":
    main()
