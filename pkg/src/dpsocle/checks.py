"""
Exhaustive self-verification of the structural identities, used by
``dpsocle selftest``. Each check compares the library against a
brute-force computation that does not share its code path.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import lru_cache
from fractions import Fraction
from itertools import product
from typing import Callable, Iterator

from .diagrams import (
    SignedYoungDiagram, enumerate_signed, orbit_dimension, signed_row,
    young_from_composition,
)
from .ranges import range_predicates
from .socle import (
    DPSParam, _decompose, decompose_top, delta_kappa, dps_infinitesimal_character,
    infinitesimal_character, merged_data, quaternionic_socle, socle_umn,
    sorting_permutations, umn_composition, weyl_orbit_equal,
)
from .theta import DFMParam, SignedPair, associated_shape, omega_set, phi_map
from .weyl import compositions

__all__ = ["CheckResult", "ALL_CHECKS", "run_selftest", "integral_dps_params",
           "ordered_socle_inputs", "brute_signed"]


@dataclass
class CheckResult:
    name: str
    passed: bool
    cases: int
    detail: str = ""

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        text = f"[{status}] {self.name} ({self.cases} cases)"
        return text + (f": {self.detail}" if self.detail else "")


def _perm_images(images: list[int], q: list[int]) -> list[int]:
    return [images[i - 1] for i in q]


def brute_signed(rows: tuple[int, ...], m: int, n: int) -> set[SignedYoungDiagram]:
    """Every choice of leading sign per row, deduplicated by equivalence."""
    out = set()
    for leads in product("+-", repeat=len(rows)):
        t = SignedYoungDiagram(tuple(signed_row(r, s) for r, s in zip(rows, leads)))
        if t.signature == (m, n):
            out.add(t)
    return out


def check_condition_equivalence(max_total: int = 8) -> CheckResult:
    cases, bad = 0, []
    for total in range(1, max_total + 1):
        w0 = list(range(total, 0, -1))
        for c in compositions(total):
            wc, start = [], 0
            for part in c:
                wc += list(range(start + part, start, -1))
                start += part
            prod = _perm_images(w0, wc)
            involution = _perm_images(prod, prod) == list(range(1, total + 1))
            palindrome = all(c[i] == c[len(c) - 1 - i] for i in range(len(c)))
            cases += 1
            if involution != palindrome:
                bad.append(str(c))
    return CheckResult("palindrome <=> w0*wc involution", not bad, cases, ", ".join(bad[:5]))


def check_dimension_identity(max_total: int = 10) -> CheckResult:
    cases, bad = 0, []
    for total in range(1, max_total + 1):
        for c in compositions(total):
            cases += 1
            p = c.parts
            rhs = 2 * sum(p[i] * p[j] for i in range(len(p)) for j in range(i + 1, len(p)))
            if orbit_dimension(young_from_composition(c)) != rhs:
                bad.append(str(c))
    return CheckResult("dim O(c) = 2 sum_{i<j} c_i c_j", not bad, cases, ", ".join(bad[:5]))


def check_bijection(max_total: int = 8) -> CheckResult:
    cases, bad = 0, []
    for total in range(1, max_total + 1):
        for c in compositions(total):
            y = young_from_composition(c)
            for m in range(total + 1):
                n = total - m
                cases += 1
                mapping = phi_map(m, n, c)
                expected = brute_signed(y.rows, m, n)
                if (len(mapping) != len(expected)
                        or set(mapping.values()) != expected
                        or len(set(mapping.values())) != len(mapping)):
                    bad.append(f"c={c} (m,n)=({m},{n})")
    return CheckResult("Phi_c: O(c) -> S_{m,n}(Y(c)) bijective", not bad, cases, "; ".join(bad[:5]))


def check_signed_counts(max_boxes: int = 8) -> CheckResult:
    cases, bad = 0, []
    for total in range(1, max_boxes + 1):
        for c in compositions(total):
            y = young_from_composition(c)
            if c.parts != tuple(sorted(c.parts, reverse=True)):
                continue
            mults: dict[int, int] = {}
            for r in y.rows:
                mults[r] = mults.get(r, 0) + 1
            expected = 1
            for r in mults.values():
                expected *= r + 1
            counts = [len(enumerate_signed(y, m, total - m)) for m in range(total + 1)]
            cases += 1
            brute_ok = all(
                set(enumerate_signed(y, m, total - m)) == brute_signed(y.rows, m, total - m)
                for m in range(total + 1))
            symmetric = counts == counts[::-1]
            if sum(counts) != expected or not brute_ok or not symmetric:
                bad.append(str(y))
    return CheckResult("signed diagram counts", not bad, cases, ", ".join(bad[:5]))


def check_range_nesting(samples: int = 10_000, seed: int = 0) -> CheckResult:
    rng = random.Random(seed)
    bad = 0
    for _ in range(samples):
        ell = rng.randint(1, 5)
        c = [rng.randint(1, 4) for _ in range(ell)]
        ms = [rng.randint(0, x) for x in c]
        pair = SignedPair(tuple(ms), tuple(x - a for x, a in zip(c, ms)))
        h = [rng.randint(-10, 10) for _ in range(ell)]
        pr = range_predicates(DFMParam(pair, tuple(Fraction(x) for x in h)))
        if (pr["good"] and not pr["weakly_fair"]) or (pr["weakly_fair"] and not pr["mediocre"]):
            bad += 1
    return CheckResult("good => weakly fair => mediocre", bad == 0, samples,
                       f"{bad} violations" if bad else "")


def integral_dps_params(max_size: int = 5, bound: int = 4,
                        convention: str = "calibrated") -> Iterator[DPSParam]:
    """All parameters with m+n <= max_size, integral infinitesimal character,
    and |u_i|, |h|, |v_i| <= bound."""
    for N in range(0, max_size + 1):
        for m in range(N + 1):
            n = N - m
            for k in range(0, min(m, n) + 1):
                for kappa in compositions(k):
                    delta = delta_kappa(m, n, kappa, convention)
                    us = [[d + z for z in range(-2 * bound - 2, 2 * bound + 3)
                           if abs(d + z) <= bound] for d in delta]
                    vs = [[-d + z for z in range(-2 * bound - 2, 2 * bound + 3)
                           if abs(-d + z) <= bound] for d in delta]
                    hs = range(-bound, bound + 1) if N - 2 * k > 0 else (0,)
                    for u in product(*us):
                        for v in product(*vs):
                            for h in hs:
                                yield DPSParam(m, n, kappa, tuple(u), Fraction(h), tuple(v))


def _constituent_key(const) -> tuple:
    # a constituent is pinned down by its associated variety and
    # infinitesimal character (the annihilator is common to all of them)
    return (str(const.diagram), _infchar(const.pair, const.h))


@lru_cache(maxsize=None)
def _infchar(pair, h):
    return infinitesimal_character(pair, h)


def check_tau_independence(max_size: int = 5, bound: int = 4) -> CheckResult:
    cases, bad = 0, []
    for p in integral_dps_params(max_size, bound):
        md = merged_data(p)
        taus = sorting_permutations(md)
        target = dps_infinitesimal_character(md)
        reference = None
        literal: dict[tuple, list] = {}
        for tau in taus:
            consts = _decompose(p.m, p.n, md, tau)
            keys = sorted(_constituent_key(c) for c in consts)
            if reference is None:
                reference = keys
            # labels are literally equal whenever the block order agrees
            order = tuple(md.c[tau(i) - 1] for i in range(1, len(tau) + 1))
            labels = sorted((str(c.pair), c.h) for c in consts)
            cases += 1
            if (keys != reference or any(k[1] != target for k in keys)
                    or literal.setdefault(order, labels) != labels):
                bad.append(str(p.to_json()))
                break
    return CheckResult("tau-independence of the top stratum", not bad, cases, "; ".join(bad[:3]))


def ordered_socle_inputs(max_size: int = 5, bound: int = 4) -> Iterator[tuple]:
    """``(m, n, kappa, u, h, v)`` satisfying u_1 >= .. >= u_s >= h >= v_s >= .. >= v_1."""
    for N in range(0, max_size + 1):
        for m in range(N + 1):
            n = N - m
            for k in range(0, min(m, n) + 1):
                for kappa in compositions(k):
                    s = len(kappa)
                    for chain in product(range(-bound, bound + 1), repeat=2 * s + 1):
                        if any(a < b for a, b in zip(chain, chain[1:])):
                            continue
                        u = chain[:s]
                        h = chain[s]
                        v = chain[s + 1:][::-1]
                        yield m, n, kappa, u, h, v


def check_delta_round_trip(max_size: int = 5, bound: int = 4,
                           convention: str = "calibrated") -> CheckResult:
    cases, bad = 0, []
    for m, n, kappa, u, h, v in ordered_socle_inputs(max_size, bound):
        cases += 1
        report = socle_umn(m, n, kappa, u, h, v, convention=convention)
        delta = delta_kappa(m, n, kappa, convention)
        try:
            p = DPSParam(m, n, kappa, tuple(Fraction(a) + d for a, d in zip(u, delta)),
                         Fraction(h), tuple(Fraction(b) - d for b, d in zip(v, delta)))
            top = decompose_top(p, convention=convention)
        except ValueError as exc:
            bad.append(f"{(m, n, str(kappa), u, h, v)}: {exc}")
            continue
        got = sorted((str(c.pair), c.h) for c in top)
        want = sorted((str(c.pair), c.h) for c in report.constituents)
        blocks = umn_composition(m, n, kappa)
        same_orbit = weyl_orbit_equal(report.verma_embedding["source_weight"],
                                      report.verma_embedding["target_weight"])
        if got != want or any(c.pair.blocks != blocks for c in top) or not same_orbit:
            bad.append(str((m, n, str(kappa), u, h, v)))
    return CheckResult(f"delta round trip ({convention})", not bad, cases, "; ".join(bad[:3]))


def check_quaternionic(max_sum: int = 6) -> CheckResult:
    cases, bad = 0, []
    for total in range(1, max_sum + 1):
        for c in compositions(total):
            if not c.is_palindrome():
                continue
            cases += 1
            ex = quaternionic_socle(total, c).extras
            pos = [Fraction(a) for a, _ in ex["exponents"]]
            anti = all(Fraction(a) == -Fraction(b) for a, b in ex["exponents"])
            if not anti or any(x <= y for x, y in zip(pos, pos[1:])):
                bad.append(str(c))
    return CheckResult("quaternionic exponents", not bad, cases, ", ".join(bad[:5]))


def check_sign_swap(max_total: int = 7) -> CheckResult:
    cases, bad = 0, []
    for total in range(1, max_total + 1):
        for c in compositions(total):
            for m in range(total + 1):
                for pair in omega_set(m, total - m, c):
                    cases += 1
                    if associated_shape(pair.swapped()) != associated_shape(pair).flipped():
                        bad.append(str(pair))
    return CheckResult("sign-swap symmetry", not bad, cases, ", ".join(bad[:5]))


ALL_CHECKS: dict[str, Callable[[int], CheckResult]] = {
    "condition_equivalence": lambda size: check_condition_equivalence(size),
    "dimension_identity": lambda size: check_dimension_identity(size + 2),
    "bijection": lambda size: check_bijection(size),
    "signed_counts": lambda size: check_signed_counts(size),
    "sign_swap": lambda size: check_sign_swap(min(size, 7)),
    "range_nesting": lambda size: check_range_nesting(),
    "tau_independence": lambda size: check_tau_independence(min(size, 5)),
    "delta_round_trip": lambda size: check_delta_round_trip(min(size, 5)),
    "quaternionic": lambda size: check_quaternionic(min(size, 6)),
}


def run_selftest(max_size: int = 8) -> list[CheckResult]:
    return [check(max_size) for check in ALL_CHECKS.values()]
