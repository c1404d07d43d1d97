"""Acceptance criteria 1-8, each with its runtime budget.

Every criterion prints one line "criterion k: PASS/FAIL ..." to the terminal
(also when pytest captures output).  Run directly with
``python tests/test_acceptance.py`` for the same report without pytest.
"""

from __future__ import annotations

import itertools
import random
import time
from dataclasses import dataclass
from typing import Callable

import pytest

from loop_schubert import affine, affschubert, alcove, demazure, golden
from loop_schubert.polyring import Polynomial, buchberger_check, normal_form, preset, rank, ring_env
from loop_schubert.weyl import all_permutations, longest


@dataclass
class Outcome:
    ok: bool
    detail: str


def _golden_group(prefix: str) -> Outcome:
    results = [r for r in golden.run_golden_checks() if r.name.startswith(prefix)]
    bad = [r.name for r in results if not r.passed]
    return Outcome(not bad and bool(results), f"{len(results) - len(bad)}/{len(results)} entries" + (f", failing {bad}" if bad else ""))


def criterion_1() -> Outcome:
    dbl = _golden_group("double")
    sgl = _golden_group("single")
    return Outcome(dbl.ok and sgl.ok, f"double {dbl.detail}; single {sgl.detail}")


def criterion_2() -> Outcome:
    # the golden harness checks m^lam, S~(x,y) (literal and reduced), S~(x) and S^ for each lam
    out = _golden_group("SL3 lambda")
    return Outcome(out.ok, out.detail)


def criterion_3() -> Outcome:
    out = _golden_group("SL4")
    return Outcome(out.ok, out.detail)


def criterion_4() -> Outcome:
    table = _golden_group("SL6")
    bad = []
    for n in range(2, 9):
        for i in range(1, n):
            if affine.lambda_hat(-affine.Coweight.fundamental(n, i)) != affine.closed_form_lambda_hat(n, i):
                bad.append((n, i))
    return Outcome(table.ok and not bad, f"n=6 table {table.detail}; closed form n<=8 mismatches {bad}")


def criterion_5() -> Outcome:
    total, failures = 0, []
    for n in (3, 4):
        for lam, mu, nu in affschubert.theorem_a_pairs(n, 8):
            total += 1
            if affschubert.affine_schubert(lam) * affschubert.affine_schubert(mu) != affschubert.affine_schubert(nu):
                failures.append((str(lam), str(mu)))
    return Outcome(total > 0 and not failures, f"{total} pairs, {len(failures)} failures")


def criterion_6() -> Outcome:
    checked, skipped, bad = 0, 0, []
    for kind in ("A2", "A3", "B2", "C2"):
        rs = alcove.root_system(kind)
        for w in alcove.finite_weyl_group(rs):
            for mu in itertools.product(range(3), repeat=rs.rank):
                x = w * alcove.AffineTransform.translation(tuple(-v for v in mu))
                if not alcove.is_min_in_coset(x, rs):
                    skipped += 1
                    continue
                checked += 1
                if alcove.max_antidominant_factor(x, rs).lam != alcove.closed_form_lambda(w, mu, rs):
                    bad.append((kind, mu))
    examples = _golden_group("A2 s1 s0").ok and _golden_group("C2 s0 s1 s0").ok
    return Outcome(
        not bad and examples,
        f"(a) {checked} cases agree, {skipped} outside the coset-minimal precondition; (b),(c) {'ok' if examples else 'FAIL'}",
    )


# criterion 7: compact versions of the property suites, seeded


def _random_poly(rng: random.Random, env, terms=4, max_exp=3) -> Polynomial:
    out = {}
    for _ in range(terms):
        e = tuple(rng.randint(0, max_exp) for _ in env)
        out[e] = rng.randint(-3, 3)
    return Polynomial(env, out)


def _prop_divided_differences(rng) -> bool:
    for n in (3, 4, 5):
        env = ring_env(n, n)
        for _ in range(25):
            f = _random_poly(rng, env)
            axis = rng.choice("xy")
            i = rng.randint(1, n - 2)
            d = demazure.DividedDiffSpec.simple(axis, i, rng.random() < 0.5)
            if demazure.divided_diff(demazure.divided_diff(f, d), d):
                return False
            if demazure.demazure_word(f, [i, i + 1, i], axis) != demazure.demazure_word(f, [i + 1, i, i + 1], axis):
                return False
            if n >= 4:
                j = i + 2 if i + 2 < n else i - 2
                if j >= 1 and demazure.demazure_word(f, [i, j], axis) != demazure.demazure_word(f, [j, i], axis):
                    return False
    return True


def _prop_schubert_recurrences() -> bool:
    for n in (2, 3, 4):
        for w in all_permutations(n):
            s = demazure.double_schubert(w)
            if s != demazure.double_schubert_left(w):
                return False
            t = demazure.swap_xy(demazure.double_schubert(w.inverse()))
            if s != (-t if w.length() % 2 else t):
                return False
    return True


def _prop_buchberger() -> bool:
    for n in range(2, 6):
        for name in ("J", "J0", "Jpi", "Jpi0"):
            if buchberger_check(preset(name, n)):
                return False
        for m in range(1, 7):
            for name in ("JpiMulti", "Jpi0Multi"):
                if buchberger_check(preset(name, n, m)):
                    return False
    return True


def _prop_normal_form(rng) -> bool:
    for name, n, m in [("J", 3, None), ("JpiMulti", 3, 2), ("Jpi", 4, None), ("J0", 4, None)]:
        q = preset(name, n, m)
        for _ in range(20):
            f = _random_poly(rng, q.env, max_exp=4)
            nf = normal_form(f, q)
            if normal_form(nf, q) != nf:
                return False
    return True


def _prop_word_independence() -> bool:
    return all(
        affschubert.word_independence_check(lam, cap=30)
        for n in (3, 4)
        for lam in affine.coweights_up_to_length(n, 6)
    )


def _prop_lengths() -> bool:
    for n in (2, 3, 4, 5):
        rs = alcove.root_system(f"A{n - 1}")
        level = {affine.AffineElement.identity(n): []}
        seen = dict(level)
        for ell in range(1, 9):
            nxt = {}
            for u, word in level.items():
                for i in range(n):
                    v = u * affine.AffineElement.simple(n, i)
                    if v not in seen and v not in nxt and affine.length(v) == ell:
                        nxt[v] = word + [i]
            seen.update(nxt)
            level = nxt
        for v, word in seen.items():
            stripped = len(affine.reduced_word_affine(v)[1])
            sep = alcove.length_by_separation(alcove.word_to_transform(word, rs), rs)
            if not affine.length(v) == stripped == sep == len(word):
                return False
    return True


def _prop_alcove_oracle() -> bool:
    for kind in ("A2", "B2", "C2", "G2", "A3", "B3", "C3"):
        rs = alcove.root_system(kind)
        for x, _ in alcove.alcoves_by_length(rs, 6):
            if not alcove.is_min_in_coset(x, rs):
                continue
            if alcove.brute_force_max_factor(x, rs) != [alcove.max_antidominant_factor(x, rs).lam]:
                return False
    return True


def criterion_7() -> Outcome:
    rng = random.Random(20240601)
    props = {
        "d^2=0 and braid": lambda: _prop_divided_differences(rng),
        "left/right and transpose": _prop_schubert_recurrences,
        "Buchberger": _prop_buchberger,
        "NF idempotent": lambda: _prop_normal_form(rng),
        "word independence": _prop_word_independence,
        "length definitions": _prop_lengths,
        "max-factor oracle": _prop_alcove_oracle,
    }
    bad = [name for name, fn in props.items() if not fn()]
    return Outcome(not bad, f"{len(props) - len(bad)}/{len(props)} property groups" + (f", failing {bad}" if bad else ""))


def criterion_8() -> Outcome:
    n, top = 3, 6
    by_length: dict[int, list[Polynomial]] = {}
    for lam in affine.coweights_up_to_length(n, top, coroot_only=True):
        ell = affine.length(affine.min_coset_rep(lam))
        by_length.setdefault(ell, []).append(affschubert.affine_schubert(lam))
    report = []
    ok = True
    for ell in range(top + 1):
        polys = by_length.get(ell, [])
        # monomials h1^a h2^b of weighted degree ell
        monos = [(a, b) for b in range(ell // 2 + 1) for a in [ell - 2 * b]]
        rows = [[p.coefficient(e) for e in monos] for p in polys]
        r = rank(rows) if rows else 0
        ok &= r == len(polys) == len(monos)
        report.append(f"{ell}:{r}/{len(polys)}/{len(monos)}")
    return Outcome(ok, "rank/count/dim per length " + " ".join(report))


CRITERIA: list[tuple[int, Callable[[], Outcome], float, str]] = [
    (1, criterion_1, 1.0, "SL3 double/single Schubert tables"),
    (2, criterion_2, 5.0, "SL3 affine Schubert table with intermediate displays"),
    (3, criterion_3, 60.0, "SL4 prime classes from their words"),
    (4, criterion_4, 5.0, "lambda-hat closed form, n <= 8, n = 6 table"),
    (5, criterion_5, 600.0, "product rule, n in {3,4}, l(m^nu) <= 8"),
    (6, criterion_6, 10.0, "anti-dominant factorization examples and closed form"),
    (7, criterion_7, 900.0, "property suites"),
    (8, criterion_8, 120.0, "Bott basis ranks at n = 3, l <= 6"),
]


def run_criterion(k: int) -> tuple[bool, str]:
    _, fn, budget, title = CRITERIA[k - 1]
    t0 = time.perf_counter()
    out = fn()
    dt = time.perf_counter() - t0
    ok = out.ok and dt < budget
    line = f"criterion {k}: {'PASS' if ok else 'FAIL'}  {title}  [{dt:.2f}s < {budget:g}s]  {out.detail}"
    return ok, line


@pytest.mark.parametrize("k", [c[0] for c in CRITERIA])
def test_criterion(k, capsys):
    ok, line = run_criterion(k)
    with capsys.disabled():
        print("\n" + line)
    assert ok, line


if __name__ == "__main__":
    import sys

    results = [run_criterion(k) for k, *_ in CRITERIA]
    for _, line in results:
        print(line)
    sys.exit(0 if all(ok for ok, _ in results) else 1)
