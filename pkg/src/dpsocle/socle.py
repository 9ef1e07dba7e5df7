"""
Degenerate principal series of U(m,n), their top Gelfand-Kirillov stratum,
and socle reports for U(m,n), GL(n,C), GL(n,R) and GL(n,H).

Parameters are exact rationals throughout. A degenerate principal series
``nI^kappa_{m,n}[u; h; v]`` is induced in stages: the GL(k_i, C) factor
carries ``(u_i, v_i)``, the innermost U(m-k, n-k) factor the character
``det^h``.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import permutations, product
from typing import Sequence

from .diagrams import SignedYoungDiagram, orbit_dimension, young_from_composition
from .errors import HypothesisNotMet, InvalidInput, LimitExceeded, UnsupportedParameter
from .rational import RationalLike, fmt, fmt_seq, fractions, is_integral, to_fraction
from .theta import SignedPair, associated_shape, omega_set
from .weyl import (
    Composition, Permutation, assumption_a_typeA, longest_element, parabolic_longest,
)

__all__ = [
    "CONVENTIONS", "DEFAULT_MAX_BLOCKS", "DPSParam", "MergedData", "Constituent",
    "SocleReport", "delta_kappa", "rho_shift", "merged_data", "xi_weight",
    "weyl_orbit_equal", "sorting_permutations", "check_h", "decompose_top",
    "socle_umn", "good_orbits", "complex_socle", "quaternionic_socle",
    "real_gl_socle", "umn_composition", "infinitesimal_character",
    "dps_infinitesimal_character", "two_delta_p",
]

CONVENTIONS = ("calibrated", "printed")
# kappa with more blocks than this makes the sorting-permutation set too large
DEFAULT_MAX_BLOCKS = 4


def _composition(c) -> Composition:
    return c if isinstance(c, Composition) else Composition(tuple(c))


@dataclass(frozen=True)
class DPSParam:
    m: int
    n: int
    kappa: Composition
    u: tuple[Fraction, ...]
    h: Fraction
    v: tuple[Fraction, ...]

    def __post_init__(self):
        kappa = _composition(self.kappa)
        u, v = fractions(self.u), fractions(self.v)
        if self.m < 0 or self.n < 0:
            raise InvalidInput("m and n must be non-negative")
        if kappa.total > min(self.m, self.n):
            raise InvalidInput(f"kappa={kappa} has sum {kappa.total} > min(m,n)")
        if len(u) != len(kappa) or len(v) != len(kappa):
            raise InvalidInput("u and v must have one entry per block of kappa")
        if not all(is_integral(a + b) for a, b in zip(u, v)):
            raise InvalidInput("u_i + v_i must be integers")
        object.__setattr__(self, "kappa", kappa)
        object.__setattr__(self, "u", u)
        object.__setattr__(self, "v", v)
        object.__setattr__(self, "h", to_fraction(self.h))

    @classmethod
    def of(cls, m: int, n: int, kappa: Sequence[int], u: Sequence[RationalLike],
           h: RationalLike, v: Sequence[RationalLike]) -> "DPSParam":
        return cls(m, n, Composition(tuple(kappa)), fractions(u), to_fraction(h), fractions(v))

    @property
    def s(self) -> int:
        return len(self.kappa)

    @property
    def k(self) -> int:
        return self.kappa.total

    @property
    def middle(self) -> int:
        return self.m + self.n - 2 * self.k

    def to_json(self) -> dict:
        return {"m": self.m, "n": self.n, "kappa": list(self.kappa.parts),
                "u": fmt_seq(self.u), "h": fmt(self.h), "v": fmt_seq(self.v)}


@dataclass(frozen=True)
class MergedData:
    """Block sizes ``c`` (zeros allowed) and block values ``hvec``."""
    c: tuple[int, ...]
    hvec: tuple[Fraction, ...]

    def __post_init__(self):
        c = tuple(int(x) for x in self.c)
        hvec = fractions(self.hvec)
        if len(c) != len(hvec):
            raise InvalidInput("c and hvec lengths differ")
        if any(x < 0 for x in c):
            raise InvalidInput("block sizes must be non-negative")
        object.__setattr__(self, "c", c)
        object.__setattr__(self, "hvec", hvec)

    @property
    def total(self) -> int:
        return sum(self.c)


@dataclass(frozen=True)
class Constituent:
    pair: SignedPair | None
    h: tuple[Fraction, ...]
    diagram: SignedYoungDiagram | None
    label: str = ""

    def to_json(self) -> dict:
        return {
            "pair": None if self.pair is None else str(self.pair),
            "h": fmt_seq(self.h),
            "diagram": None if self.diagram is None else str(self.diagram),
            "label": self.label or _dfm_label(self.pair, self.h),
        }


@dataclass
class SocleReport:
    group: str
    input: dict
    constituents: list[Constituent]
    gk_dim: int | None
    verma_embedding: dict | None
    extras: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {
            "group": self.group,
            "input": self.input,
            "constituents": [c.to_json() for c in self.constituents],
            "gk_dim": self.gk_dim,
            "verma_embedding": self.verma_embedding,
            "extras": self.extras,
        }


def _dfm_label(pair: SignedPair | None, h: Sequence[Fraction]) -> str:
    if pair is None:
        return ""
    return f"A_({pair})[{','.join(fmt_seq(h))}]"


def delta_kappa(m: int, n: int, kappa: Composition | Sequence[int],
                convention: str = "calibrated") -> tuple[Fraction, ...]:
    """
    The shift vector delta^kappa_{m,n}.

    ``printed``: ``(m+n-k*_{i-1})/2``. ``calibrated``: ``(m+n-k*_{i-1}-k*_i)/2``,
    the choice under which the top-stratum labels of the shifted series are
    exactly the integer socle labels.
    """
    kappa = _composition(kappa)
    if kappa.total > min(m, n):
        raise InvalidInput(f"kappa={kappa} too large for U({m},{n})")
    ks = kappa.partial_sums()
    if convention == "printed":
        return tuple(Fraction(m + n - ks[i], 2) for i in range(len(kappa)))
    if convention == "calibrated":
        return tuple(Fraction(m + n - ks[i] - ks[i + 1], 2) for i in range(len(kappa)))
    raise InvalidInput(f"unknown convention {convention!r}; use one of {CONVENTIONS}")


def rho_shift(k: int, m: int, n: int, mu: RationalLike, nu: RationalLike) -> tuple[Fraction, Fraction]:
    """Unnormalized parameters of ``nI^k[mu, nu]`` on U(m,n)."""
    if k > min(m, n) or k < 0:
        raise InvalidInput(f"k={k} out of range for U({m},{n})")
    mp, np_ = m - k, n - k
    return (to_fraction(mu) + Fraction(mp + np_ + k, 2),
            to_fraction(nu) + Fraction(mp - np_ + k, 2))


def _check_integral(p: DPSParam, convention: str) -> None:
    delta = delta_kappa(p.m, p.n, p.kappa, convention)
    bad_u = [fmt(a - d) for a, d in zip(p.u, delta) if not is_integral(a - d)]
    bad_v = [fmt(b + d) for b, d in zip(p.v, delta) if not is_integral(b + d)]
    if bad_u or bad_v:
        raise UnsupportedParameter(
            f"non-integral infinitesimal character ({convention} delta): "
            f"u - delta = {fmt_seq(a - d for a, d in zip(p.u, delta))}, "
            f"v + delta = {fmt_seq(b + d for b, d in zip(p.v, delta))}")
    if p.middle > 0 and not is_integral(p.h):
        raise UnsupportedParameter(f"h must be an integer, got {fmt(p.h)}")


def merged_data(p: DPSParam, convention: str = "calibrated", check: bool = True) -> MergedData:
    """
    Interleave ``(h, u_s, v_1, u_{s-1}, v_2, ...)`` into one block sequence.

    ``v_i`` is attached to a block of size ``k_i`` (the GL(k_i) factor it
    comes from), ``u_{s-i+1}`` to a block of size ``k_{s-i+1}``.
    """
    if check:
        _check_integral(p, convention)
    s = p.s
    c = [p.middle]
    hvec = [p.h]
    for i in range(1, s + 1):
        c += [p.kappa[s - i], p.kappa[i - 1]]
        hvec += [p.u[s - i], p.v[i - 1]]
    return MergedData(tuple(c), tuple(hvec))


def _xi(m: int, n: int, kappa: Composition, u, h, v) -> tuple[Fraction, ...]:
    N = m + n
    ks = kappa.partial_sums()
    w = [Fraction(h)] * N
    for i in range(len(kappa.parts)):
        for j in range(ks[i], ks[i + 1]):
            w[j] = Fraction(u[i])
        # v_i sits on the block mirrored to u_i's block
        for j in range(N - ks[i + 1], N - ks[i]):
            w[j] = Fraction(v[i])
    return tuple(w)


def xi_weight(p: DPSParam, convention: str = "calibrated", check: bool = False) -> tuple[Fraction, ...]:
    """Coordinates of the weight xi(u, h, v) on e_1, ..., e_{m+n}.

    The weight is defined for any parameter; pass ``check=True`` to insist
    on an integral infinitesimal character first.
    """
    if check:
        _check_integral(p, convention)
    return _xi(p.m, p.n, p.kappa, p.u, p.h, p.v)


def weyl_orbit_equal(w1: Sequence[RationalLike], w2: Sequence[RationalLike]) -> bool:
    """Type-A Weyl orbit test: equality as multisets."""
    a, b = fractions(w1), fractions(w2)
    if len(a) != len(b):
        raise InvalidInput("weights have different lengths")
    return Counter(a) == Counter(b)


def sorting_permutations(md: MergedData,
                         max_blocks: int = DEFAULT_MAX_BLOCKS) -> list[Permutation]:
    """All ``tau`` with ``hvec[tau(1)] >= hvec[tau(2)] >= ...``, lexicographically."""
    size = len(md.hvec)
    if size > 2 * max_blocks + 1:
        raise LimitExceeded(
            f"{size} merged blocks exceed the limit of {2 * max_blocks + 1} (max_blocks={max_blocks})")
    values = sorted(set(md.hvec), reverse=True)
    groups = [[i + 1 for i, x in enumerate(md.hvec) if x == val] for val in values]
    out = []
    for choice in product(*(permutations(g) for g in groups)):
        out.append(Permutation(tuple(i for part in choice for i in part)))
    return out


def _is_sorting(md: MergedData, tau: Permutation) -> bool:
    vals = [md.hvec[tau(i) - 1] for i in range(1, len(tau) + 1)]
    return all(a >= b for a, b in zip(vals, vals[1:]))


def check_h(md: MergedData, tau: Permutation) -> tuple[Fraction, ...]:
    """
    Labels ``h_tau(i) - (N - c_tau(i))/2 + (c_tau(1) + ... + c_tau(i-1))``.

    >>> check_h(MergedData((1, 3), (5, 0)), Permutation((1, 2)))
    (Fraction(7, 2), Fraction(1, 2))
    """
    if len(tau) != len(md.c):
        raise InvalidInput("tau has the wrong degree")
    if not _is_sorting(md, tau):
        raise InvalidInput(f"{tau} does not sort {fmt_seq(md.hvec)} decreasingly")
    N = md.total
    out, partial = [], 0
    for i in range(1, len(tau) + 1):
        j = tau(i) - 1
        out.append(md.hvec[j] - Fraction(N - md.c[j], 2) + partial)
        partial += md.c[j]
    return tuple(out)


def infinitesimal_character(pair: SignedPair, h: Sequence[RationalLike]) -> tuple[Fraction, ...]:
    """``lambda + rho`` of ``A_(m,n)[h]`` as a decreasingly sorted weight."""
    h = fractions(h)
    N = sum(pair.blocks)
    w, pos = [], 0
    for size, hi in zip(pair.blocks, h):
        for _ in range(size):
            pos += 1
            w.append(hi + Fraction(N + 1, 2) - pos)
    return tuple(sorted(w, reverse=True))


def dps_infinitesimal_character(md: MergedData) -> tuple[Fraction, ...]:
    """Infinitesimal character of the series in the normalization of ``infinitesimal_character``."""
    w = []
    for size, val in zip(md.c, md.hvec):
        w += [val + Fraction(size + 1, 2) - d for d in range(1, size + 1)]
    return tuple(sorted(w, reverse=True))


def decompose_top(p: DPSParam, tau: Permutation | None = None,
                  convention: str = "calibrated",
                  max_blocks: int = DEFAULT_MAX_BLOCKS) -> list[Constituent]:
    """
    Irreducible constituents of maximal Gelfand-Kirillov dimension of
    ``nI^kappa_{m,n}[u; h; v]``, each of multiplicity one.

    ``tau`` defaults to the lexicographically least sorting permutation;
    zero-size blocks are dropped together with their labels.
    """
    md = merged_data(p, convention)
    if tau is None:
        tau = sorting_permutations(md, max_blocks)[0]
    elif len(md.c) > 2 * max_blocks + 1:
        raise LimitExceeded(f"{len(md.c)} merged blocks exceed the limit of {2 * max_blocks + 1}")
    return _decompose(p.m, p.n, md, tau)


def _decompose(m: int, n: int, md: MergedData, tau: Permutation) -> list[Constituent]:
    hcheck = check_h(md, tau)
    kept = [i for i in range(1, len(tau) + 1) if md.c[tau(i) - 1] > 0]
    blocks = tuple(md.c[tau(i) - 1] for i in kept)
    labels = tuple(hcheck[i - 1] for i in kept)
    out = []
    for pair in omega_set(m, n, blocks):
        out.append(Constituent(pair, labels, associated_shape(pair)))
    return out


def umn_composition(m: int, n: int, kappa: Composition | Sequence[int]) -> tuple[int, ...]:
    """``(k_1..k_s, m+n-2k, k_s..k_1)`` with zero entries dropped."""
    kappa = _composition(kappa)
    if kappa.total > min(m, n):
        raise InvalidInput(f"kappa={kappa} too large for U({m},{n})")
    full = kappa.parts + (m + n - 2 * kappa.total,) + kappa.parts[::-1]
    return tuple(x for x in full if x > 0)


def _umn_labels(m, n, kappa: Composition, u, h, v) -> tuple[Fraction, ...]:
    full = tuple(kappa.parts) + (m + n - 2 * kappa.total,) + tuple(kappa.parts[::-1])
    vals = tuple(u) + (h,) + tuple(v[::-1])
    return tuple(x for size, x in zip(full, vals) if size > 0)


def good_orbits(m: int, n: int, kappa: Composition | Sequence[int]) -> list[SignedPair]:
    """Pairs labelling the good open U(m,n)-orbits on GL(m+n)/P_kappa."""
    return omega_set(m, n, umn_composition(m, n, kappa))


def socle_umn(m: int, n: int, kappa: Composition | Sequence[int],
              u: Sequence[int], h: int, v: Sequence[int],
              convention: str = "calibrated") -> SocleReport:
    """
    Socle of ``nI^kappa_{m,n}[u + delta; h; v - delta]``.

    Requires integers ``u_1 >= ... >= u_s >= h >= v_s >= ... >= v_1``;
    otherwise ``HypothesisNotMet`` is raised and no socle is claimed.
    """
    kappa = _composition(kappa)
    if kappa.total > min(m, n):
        raise InvalidInput(f"kappa={kappa} too large for U({m},{n})")
    u, v, h = fractions(u), fractions(v), to_fraction(h)
    if len(u) != len(kappa) or len(v) != len(kappa):
        raise InvalidInput("u and v must have one entry per block of kappa")
    if not all(is_integral(x) for x in u + v + (h,)):
        raise InvalidInput("socle parameters u, h, v must be integers")
    chain = u + (h,) + v[::-1]
    if any(a < b for a, b in zip(chain, chain[1:])):
        raise HypothesisNotMet(
            f"need u_1 >= ... >= u_s >= h >= v_s >= ... >= v_1, got u={fmt_seq(u)} h={fmt(h)} v={fmt_seq(v)}")

    c = umn_composition(m, n, kappa)
    labels = _umn_labels(m, n, kappa, u, h, v)
    constituents = [Constituent(pair, labels, associated_shape(pair))
                    for pair in omega_set(m, n, c)]
    delta = delta_kappa(m, n, kappa, convention)
    up = tuple(a + d for a, d in zip(u, delta))
    vm = tuple(b - d for b, d in zip(v, delta))
    source = tuple(-x for x in _xi(m, n, kappa, up, h, vm))
    target = tuple(-x for x in _xi(m, n, kappa, vm, h, up))
    return SocleReport(
        group=f"U({m},{n})",
        input={"m": m, "n": n, "kappa": list(kappa.parts), "u": fmt_seq(u),
               "h": fmt(h), "v": fmt_seq(v), "convention": convention},
        constituents=constituents,
        gk_dim=orbit_dimension(young_from_composition(c)) // 2,
        verma_embedding={
            "source": "nM_p(-xi(u+delta, h, v-delta))",
            "target": "nM_p(-xi(v-delta, h, u+delta))",
            "source_weight": fmt_seq(source),
            "target_weight": fmt_seq(target),
        },
        extras={
            "block_composition": list(c),
            "delta": fmt_seq(delta),
            "series_parameter": {"u": fmt_seq(up), "h": fmt(h), "v": fmt_seq(vm)},
            "good_open_orbits": len(constituents),
        },
    )


def two_delta_p(c: Composition | Sequence[int]) -> tuple[int, ...]:
    """Coordinates of ``2 delta_p``, the sum of the roots in the nilradical of p(c)."""
    c = _composition(c)
    N = c.total
    ks = c.partial_sums()
    out = []
    for b, size in enumerate(c.parts):
        out += [(N - ks[b + 1]) - ks[b]] * size
    return tuple(out)


def _rho(N: int) -> tuple[Fraction, ...]:
    return tuple(Fraction(N + 1, 2) - i for i in range(1, N + 1))


def _verma_pair(c: Composition) -> dict:
    # uM_p(-2) -> uM_p(0): highest weights -2 delta_p and 0
    src = tuple(-x for x in two_delta_p(c))
    tgt = (0,) * c.total
    rho = _rho(c.total)
    return {
        "source": "uM_p(-2)",
        "target": "uM_p(0)",
        "source_weight": fmt_seq(src),
        "target_weight": fmt_seq(tgt),
        "rho_shifted_orbit_equal": weyl_orbit_equal(
            [a + r for a, r in zip(src, rho)], [a + r for a, r in zip(tgt, rho)]),
    }


def complex_socle(c: Composition | Sequence[int]) -> SocleReport:
    """Socle of ``uInd_P^G(chi_{2,2})`` for G = GL(N, C), P = P(c)."""
    c = _composition(c)
    record = assumption_a_typeA(c)
    w = longest_element(c.total) * parabolic_longest(c)
    extras = {"assumption_a": record, "w0_wp": str(w),
              "induced_from": "uInd_P^G(chi_{2,2})"}
    if not record["assumption_a"]:
        extras["note"] = "assumption A fails; no socle claim is made"
        return SocleReport(f"GL({c.total},C)", {"c": list(c.parts)}, [], None, None, extras)
    extras["quotient_gk_smaller"] = True
    const = Constituent(None, (), None, label="A_{O_0} = uInd(chi_{2,0}) = uInd(chi_{0,2})")
    return SocleReport(
        group=f"GL({c.total},C)",
        input={"c": list(c.parts)},
        constituents=[const],
        gk_dim=orbit_dimension(young_from_composition(c)),
        verma_embedding=_verma_pair(c),
        extras=extras,
    )


def _speh_structure(rank: int, c: Composition) -> dict:
    s = len(c)
    half = s // 2
    d = [2 * c[i] for i in range(half)]
    if s % 2:
        d.append(c[half])
    dstar = []
    for x in d:
        dstar.append((dstar[-1] if dstar else 0) + x)
    speh = [{"d": d[i], "ell": 2 * rank - 2 * dstar[i]} for i in range(half)]
    cprime = [x for i in range(half) for x in (c[i], c[i])]
    if s % 2:
        cprime.append(c[half])
    exps = [Fraction(2 * rank - 2 * dstar[i]) + Fraction(d[i], 2) for i in range(half)]
    return {
        "d": d,
        "d_star": dstar,
        "speh": speh,
        "speh_labels": [f"A_{x['d']}({x['ell']})" for x in speh],
        "identity_block_rank": rank - (dstar[half - 1] if half else 0),
        "c_prime": cprime,
        "exponents": [[fmt(e), fmt(-e)] for e in exps],
    }


def _check_gl_input(rank: int, c: Composition) -> None:
    if c.total != rank:
        raise InvalidInput(f"c={c} does not sum to {rank}")
    if rank < 1:
        raise InvalidInput("rank must be positive")
    if not c.is_palindrome():
        raise HypothesisNotMet(f"c={c} is not palindromic (c_i = c_(s-i+1) fails)")


def quaternionic_socle(nq: int, c: Composition | Sequence[int]) -> SocleReport:
    """Socle of ``uInd_{P(c)}^G(omega_c)`` for G = GL(nq, H)."""
    c = _composition(c)
    _check_gl_input(nq, c)
    extras = _speh_structure(nq, c)
    extras["induced_from"] = "uInd_{P(c)}^G(omega_c)"
    extras["unique_irreducible_submodule"] = True
    # the complexified parabolic sits in GL(2nq, C) with blocks 2c_i
    verma = _verma_pair(Composition(tuple(2 * x for x in c)))
    return SocleReport(
        group=f"GL({nq},H)",
        input={"n": nq, "c": list(c.parts)},
        constituents=[Constituent(None, (), None, label="A_{O_c}")],
        gk_dim=None,
        verma_embedding=verma,
        extras=extras,
    )


def real_gl_socle(nr: int, c: Composition | Sequence[int]) -> SocleReport:
    """Socle of ``uInd_{P(c)}^G(omega_c (x) chi)`` for G = GL(nr, R)."""
    c = _composition(c)
    _check_gl_input(nr, c)
    extras = _speh_structure(nr, c)
    extras.update({
        "induced_from": "uInd_{P(c)}^G(omega_c (x) chi)",
        "unique_irreducible_submodule": True,
        "sign_twist_exists": True,
        "sign_twist_note": "chi is trivial on the identity component of P(c); "
                           "its explicit form is not determined",
        "speh_parameters_structural": True,
    })
    return SocleReport(
        group=f"GL({nr},R)",
        input={"n": nr, "c": list(c.parts)},
        constituents=[Constituent(None, (), None, label="A_{O_c}")],
        gk_dim=None,
        verma_embedding=_verma_pair(c),
        extras=extras,
    )
