"""Registry of the library's exact identities plus a range-driven verifier.

Every relation between the algebraic routes (symmetric-function identities,
triangle recurrences, generating functions, specializations) and the
brute-force oracles (paths, tilings, partition filters, permutation tuples)
is catalogued here under a stable id.  ``verify`` checks one identity over a
parameter grid and reports pass/fail/skip totals with the failing cells in
grid order; ``verify_all`` sweeps the whole catalog under a bounds profile.

All checks are exact equalities of integers or canonical polynomials; there
are no tolerances.  Cells whose preconditions fail (even s for the odd-s
vanishing identity, gcd(ell, s+1) > 1 for the residue-ell expansion, and so
on) are counted as skipped, never as failures.

Three catalog entries additionally carry an erratum annotation: a commonly
printed variant of the statement that provably disagrees with the defining
specialization.  The variant is evaluated and its first failing cell is
recorded in the report's ``errata`` field; it is never asserted.

``mutation_selftest`` perturbs five identities on purpose and re-runs them;
each perturbation must produce at least one failure, guarding the suite
against vacuous passes.

Grid cells are independent pure computations.  The environment variable
MODSYM_THREADS caps worker parallelism (default: machine parallelism);
reports are assembled in grid order regardless of completion order.
"""

from __future__ import annotations

import os
from collections.abc import Callable, Iterable, Iterator
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from math import comb, gcd

from modsym.enumeration import (
    count_equal_minset_tuples,
    count_nested_minset_tuples,
    count_partitions_bounded,
    count_partitions_mod,
    count_partitions_zeromod,
    gen_lattice_paths,
    gen_tilings,
)
from modsym.polycore import Polynomial, poly_eval_int
from modsym.stirling import (
    _series_coeffs,
    omega_poly,
    stirling1,
    stirling1_higher,
    stirling1_mod,
    stirling1_mod_rec,
    stirling2,
    stirling2_mod,
    stirling2_mod_series,
)
from modsym.symfun import (
    _residue_parts,
    bounded_elem_sym,
    comp_sym,
    elem_sym,
    lmodular_sym,
    modular_all_ones,
    modular_series,
    modular_sym,
)

PROFILES = ("quick", "full")


@dataclass(frozen=True)
class Ranges:
    """Bounds for a verification grid; unset fields fall back to the profile."""

    n_max: int | None = None
    k_max: int | None = None
    s_max: int | None = None
    p_list: tuple[int, ...] | None = None
    ell: int | None = None
    board_max: int | None = None

    def merged_over(self, base: "Ranges") -> "Ranges":
        return Ranges(
            n_max=self.n_max if self.n_max is not None else base.n_max,
            k_max=self.k_max if self.k_max is not None else base.k_max,
            s_max=self.s_max if self.s_max is not None else base.s_max,
            p_list=self.p_list if self.p_list is not None else base.p_list,
            ell=self.ell if self.ell is not None else base.ell,
            board_max=self.board_max if self.board_max is not None else base.board_max,
        )

    def describe(self, parameters: tuple[str, ...]) -> dict:
        out: dict = {}
        if "n" in parameters or "m" in parameters:
            out["n_max"] = self.n_max
        if "k" in parameters:
            out["k_max"] = self.k_max
        if "s" in parameters:
            out["s_max"] = self.s_max
        if "p" in parameters:
            out["p_list"] = list(self.p_list or ())
        if "ell" in parameters:
            out["ell"] = self.ell
        if self.board_max is not None and "board" in parameters:
            out["board_max"] = self.board_max
        return out


@dataclass
class IdentityCase:
    """One grid cell: parameters, both serialized sides, and its status."""

    id: str
    params: dict
    lhs: str
    rhs: str
    status: str  # "pass" | "fail" | "skipped"
    reason: str | None = None

    def to_json_obj(self) -> dict:
        obj = {
            "id": self.id,
            "params": self.params,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "status": self.status,
        }
        if self.reason is not None:
            obj["reason"] = self.reason
        return obj


@dataclass
class VerifyReport:
    """Outcome of one identity sweep."""

    identity: str
    anchor: str
    range: dict
    passed: int
    failed: int
    skipped: int
    failures: list[IdentityCase]
    errata: list[dict]
    note: str | None = None

    def to_json_obj(self) -> dict:
        return {
            "identity": self.identity,
            "anchor": self.anchor,
            "range": self.range,
            "pass": self.passed,
            "fail": self.failed,
            "skipped": self.skipped,
            "failures": [c.to_json_obj() for c in self.failures],
            "errata": self.errata,
            "note": self.note,
        }


@dataclass(frozen=True)
class IdentityInfo:
    """Catalog descriptor: stable id, human-readable anchor, grid parameters."""

    id: str
    anchor: str
    parameters: tuple[str, ...]
    has_errata: bool = False
    note: str | None = None


# ---------------------------------------------------------------------------
# shared computation context (per verify call; caches are never global)


class _Ctx:
    def __init__(self):
        self._m: dict = {}
        self._conv: dict = {}
        self._h: dict = {}
        self._e: dict = {}
        self._E: dict = {}
        self._hpow: dict = {}
        self._series: dict = {}
        self._gf: dict = {}
        self._s2spec: dict = {}
        self._omega: dict = {}

    def M(self, n: int, k: int, s: int) -> Polynomial:
        key = (n, k, s)
        v = self._m.get(key)
        if v is None:
            v = self._m[key] = modular_sym(n, k, s, "enumeration")
        return v

    def M_conv(self, n: int, k: int, s: int) -> Polynomial:
        key = (n, k, s)
        v = self._conv.get(key)
        if v is None:
            v = self._conv[key] = modular_sym(n, k, s, "convolution")
        return v

    def h(self, n: int, k: int) -> Polynomial:
        key = (n, k)
        v = self._h.get(key)
        if v is None:
            v = self._h[key] = comp_sym(n, k)
        return v

    def e(self, n: int, k: int) -> Polynomial:
        key = (n, k)
        v = self._e.get(key)
        if v is None:
            v = self._e[key] = elem_sym(n, k)
        return v

    def E(self, n: int, k: int, s: int) -> Polynomial:
        key = (n, k, s)
        v = self._E.get(key)
        if v is None:
            v = self._E[key] = bounded_elem_sym(n, k, s)
        return v

    def h_at_powers(self, n: int, j: int, s: int) -> int:
        key = (n, j, s)
        v = self._hpow.get(key)
        if v is None:
            v = self._hpow[key] = h_at_powered_points(n, j, s)
        return v

    def series(self, n: int, s: int, bound: int):
        key = (n, s, bound)
        v = self._series.get(key)
        if v is None:
            v = self._series[key] = modular_series(n, s, bound)
        return v

    def gf(self, k: int, s: int, bound: int) -> list[int]:
        key = (k, s, bound)
        v = self._gf.get(key)
        if v is None:
            v = self._gf[key] = stirling2_mod_series(k, s, bound)
        return v

    def s2spec(self, n: int, k: int, s: int) -> int:
        key = (n, k, s)
        v = self._s2spec.get(key)
        if v is None:
            v = self._s2spec[key] = stirling2_mod(n, k, s, "specialization")
        return v

    def omega(self, n: int, s: int) -> Polynomial:
        key = (n, s)
        v = self._omega.get(key)
        if v is None:
            v = self._omega[key] = omega_poly(n, s)
        return v


# ---------------------------------------------------------------------------
# reusable right-hand sides (also exercised directly by tests)


def h_at_powered_points(n: int, j: int, s: int) -> int:
    """h_j evaluated at (1^{s+1}, 2^{s+1}, ..., n^{s+1}); zero for negative j."""
    if j < 0:
        return 0
    return poly_eval_int(comp_sym(n, j), tuple(i ** (s + 1) for i in range(1, n + 1)))


def ps1_rhs(n: int, k: int, s: int) -> int:
    """sum_i h_{floor(k/(s+1))-i}(powered points) * [n+1, n+1-r-i(s+1)],
    with r = k mod (s+1): the first-kind expansion of {n+k, n}^(s)."""
    r = k % (s + 1)
    hi = min((n - r) // (s + 1), k // (s + 1))
    total = 0
    for i in range(hi + 1):
        total += h_at_powered_points(n, k // (s + 1) - i, s) * stirling1(
            n + 1, n + 1 - r - i * (s + 1)
        )
    return total


def fermat_rhs(n: int, k: int, p: int) -> int:
    """sum_i {n+floor(k/p)-i, n} * [n+1, n+1-(r+ip)] with r = k mod p."""
    r = k % p
    hi = min((n - r) // p, k // p)
    total = 0
    for i in range(hi + 1):
        total += stirling2(n + k // p - i, n) * stirling1(n + 1, n + 1 - (r + i * p))
    return total


def lmod_rhs(n: int, k: int, s: int, ell: int) -> int:
    """The level-ell analogue of ps1_rhs, with r the residue of k * ell^{-1}
    mod s+1 and the first-kind bracket read at level ell."""
    if gcd(ell, s + 1) != 1:
        raise ValueError(f"ell = {ell} is not invertible mod {s + 1}")
    r = (k * pow(ell, -1, s + 1)) % (s + 1)
    base = k // (s + 1) - (r * ell) // (s + 1)
    hi = min((n - r) // (s + 1), base)
    total = 0
    for i in range(hi + 1):
        j = base - i * ell
        if j < 0:
            continue
        total += h_at_powered_points(n, j, s) * stirling1_higher(
            n + 1, n + 1 - r - i * (s + 1), ell
        )
    return total


# ---------------------------------------------------------------------------
# grid construction


def _span(hi: int | None, default: int, lo: int = 0) -> range:
    top = default if hi is None else hi
    return range(lo, top + 1)


def _grid_nks(r: Ranges, n_lo=0, k_lo=0) -> Iterator[dict]:
    for n in _span(r.n_max, 4, n_lo):
        for k in _span(r.k_max, 6, k_lo):
            for s in _span(r.s_max, 2, 1):
                yield {"n": n, "k": k, "s": s}


def _grid_triangle(r: Ranges, k_lo=0) -> Iterator[dict]:
    # second-kind style: 0 <= k <= n
    for n in _span(r.n_max, 8):
        k_hi = n if r.k_max is None else min(n, r.k_max)
        for k in range(k_lo, k_hi + 1):
            for s in _span(r.s_max, 2, 1):
                yield {"n": n, "k": k, "s": s}


# ---------------------------------------------------------------------------
# cell checkers: each returns (ok, lhs, rhs) or a skip reason via _Skip


class _Skip(Exception):
    def __init__(self, reason: str):
        super().__init__(reason)
        self.reason = reason


def _check_gf_m(ctx: _Ctx, p: dict, r: Ranges):
    bound = r.k_max if r.k_max is not None else 6
    lhs = ctx.series(p["n"], p["s"], bound).coefficient(p["k"])
    rhs = ctx.M(p["n"], p["k"], p["s"])
    return lhs == rhs, str(lhs), str(rhs)


def _check_rec3(ctx: _Ctx, p: dict, r: Ranges):
    n, k, s = p["n"], p["k"], p["s"]
    rhs = Polynomial.zero()
    for j in _residue_parts(k, s, 1):
        rhs = rhs + ctx.M(n - 1, k - j, s).mul_power(n, j)
    lhs = ctx.M(n, k, s)
    return lhs == rhs, str(lhs), str(rhs)


def _check_rec4(ctx: _Ctx, p: dict, r: Ranges):
    n, k, s = p["n"], p["k"], p["s"]
    if k < s + 1:
        raise _Skip("requires k >= s+1")
    rhs = (
        ctx.M(n, k - s - 1, s).mul_power(n, s + 1)
        + ctx.M(n - 1, k - 1, s).mul_power(n, 1)
        + ctx.M(n - 1, k, s)
    )
    lhs = ctx.M(n, k, s)
    return lhs == rhs, str(lhs), str(rhs)


def _weight_sum(objects) -> Polynomial:
    total = Polynomial.zero()
    for obj in objects:
        total = total + obj.weight()
    return total


def _check_paths(ctx: _Ctx, p: dict, r: Ranges):
    lhs = _weight_sum(gen_lattice_paths(p["n"], p["k"], p["s"]))
    rhs = ctx.M(p["n"], p["k"], p["s"])
    return lhs == rhs, str(lhs), str(rhs)


def _check_tilings(ctx: _Ctx, p: dict, r: Ranges):
    lhs = _weight_sum(gen_tilings(p["n"], p["k"], p["s"]))
    rhs = ctx.M(p["n"], p["k"], p["s"])
    return lhs == rhs, str(lhs), str(rhs)


def _check_allones(ctx: _Ctx, p: dict, r: Ranges):
    n, k, s = p["n"], p["k"], p["s"]
    lhs = modular_all_ones(n, k, s)
    rhs = poly_eval_int(ctx.M(n, k, s), (1,) * n)
    return lhs == rhs, str(lhs), str(rhs)


def _check_s2mod_spec(ctx: _Ctx, p: dict, r: Ranges):
    n, k, s = p["n"], p["k"], p["s"]
    lhs = ctx.s2spec(n, k, s)
    rhs = stirling2_mod(n, k, s, "recurrence")
    return lhs == rhs, str(lhs), str(rhs)


def _s2spec_or_zero(ctx: _Ctx, n: int, k: int, s: int) -> int:
    if n < 0 or k < 0 or k > n:
        return 0
    return ctx.s2spec(n, k, s)


def _check_s2mod_rec(ctx: _Ctx, p: dict, r: Ranges):
    n, k, s = p["n"], p["k"], p["s"]
    if n - k < s + 1:
        raise _Skip("requires n-k >= s+1")
    lhs = ctx.s2spec(n, k, s)
    rhs = (
        _s2spec_or_zero(ctx, n - 1, k - 1, s)
        + k * _s2spec_or_zero(ctx, n - 2, k - 1, s)
        + k ** (s + 1) * _s2spec_or_zero(ctx, n - s - 1, k, s)
    )
    return lhs == rhs, str(lhs), str(rhs)


def _grid_s2mod_gf(r: Ranges) -> Iterator[dict]:
    for k in _span(r.k_max, 3):
        for s in _span(r.s_max, 2, 1):
            for m in _span(r.n_max, 8):
                yield {"k": k, "s": s, "m": m}


def _check_s2mod_gf(ctx: _Ctx, p: dict, r: Ranges):
    k, s, m = p["k"], p["s"], p["m"]
    bound = r.n_max if r.n_max is not None else 8
    lhs = ctx.gf(k, s, bound)[m]
    rhs = stirling2_mod(k + m, k, s, "recurrence")
    return lhs == rhs, str(lhs), str(rhs)


def _check_part_mod(ctx: _Ctx, p: dict, r: Ranges):
    n, k, s = p["n"], p["k"], p["s"]
    lhs = count_partitions_mod(n, k, s)
    rhs = stirling2_mod(n, k, s, "recurrence")
    return lhs == rhs, str(lhs), str(rhs)


def _check_part_zero(ctx: _Ctx, p: dict, r: Ranges):
    n, k, s = p["n"], p["k"], p["s"]
    if (n - k) % (s + 1):
        raise _Skip("requires s+1 to divide n-k")
    lhs = count_partitions_zeromod(n, k, s)
    rhs = ctx.h_at_powers(k, (n - k) // (s + 1), s)
    return lhs == rhs, str(lhs), str(rhs)


def _check_ps1(ctx: _Ctx, p: dict, r: Ranges):
    n, k, s = p["n"], p["k"], p["s"]
    lhs = stirling2_mod(n + k, n, s, "recurrence")
    rhs = ps1_rhs(n, k, s)
    return lhs == rhs, str(lhs), str(rhs)


def _grid_fermat(r: Ranges) -> Iterator[dict]:
    for n in _span(r.n_max, 3):
        for k in _span(r.k_max, 5):
            for p in r.p_list or (2, 3):
                yield {"n": n, "k": k, "p": p}


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    return all(p % d for d in range(2, int(p**0.5) + 1))


def _check_fermat(ctx: _Ctx, p: dict, r: Ranges):
    n, k, prime = p["n"], p["k"], p["p"]
    if not _is_prime(prime):
        raise _Skip("requires prime p")
    lhs = stirling2_mod(n + k, n, prime - 1, "recurrence") % prime
    rhs = fermat_rhs(n, k, prime) % prime
    return lhs == rhs, str(lhs), str(rhs)


def _grid_lmod(r: Ranges) -> Iterator[dict]:
    for n in _span(r.n_max, 3):
        for k in _span(r.k_max, 5):
            for s in _span(r.s_max, 2, 1):
                ells = range(s + 1) if r.ell is None else (r.ell,)
                for ell in ells:
                    if ell > s:
                        continue
                    yield {"n": n, "k": k, "s": s, "ell": ell}


def _check_lmod(ctx: _Ctx, p: dict, r: Ranges):
    n, k, s, ell = p["n"], p["k"], p["s"], p["ell"]
    if gcd(ell, s + 1) != 1:
        raise _Skip("requires gcd(ell, s+1) = 1")
    lhs = poly_eval_int(lmodular_sym(n, k, s, ell), tuple(range(1, n + 1)))
    rhs = lmod_rhs(n, k, s, ell)
    return lhs == rhs, str(lhs), str(rhs)


def _check_evanish(ctx: _Ctx, p: dict, r: Ranges):
    n, k, s = p["n"], p["k"], p["s"]
    if s % 2 == 0:
        raise _Skip("requires odd s")
    total = Polynomial.zero()
    for i in range(k + 1):
        term = ctx.E(n, i, s) * ctx.M(n, k - i, s)
        total = total + (-term if i % 2 else term)
    return total.is_zero, str(total), "0"


def _check_conv_he(ctx: _Ctx, p: dict, r: Ranges):
    n, k, s = p["n"], p["k"], p["s"]
    lhs = ctx.M(n, k, s)
    rhs = ctx.M_conv(n, k, s)
    return lhs == rhs, str(lhs), str(rhs)


def _check_inv_h(ctx: _Ctx, p: dict, r: Ranges):
    n, k, s = p["n"], p["k"], p["s"]
    lhs = ctx.h(n, k).substitute_power(s + 1)
    rhs = Polynomial.zero()
    for j in range(k * (s + 1) + 1):
        term = ctx.h(n, j) * ctx.M(n, k * (s + 1) - j, s)
        rhs = rhs + (-term if j % 2 else term)
    return lhs == rhs, str(lhs), str(rhs)


def _check_inv_e(ctx: _Ctx, p: dict, r: Ranges):
    n, k, s = p["n"], p["k"], p["s"]
    lhs = ctx.e(n, k)
    rhs = Polynomial.zero()
    for j in range(k // (s + 1) + 1):
        term = ctx.e(n, j).substitute_power(s + 1) * ctx.M(n, k - j * (s + 1), s)
        rhs = rhs + (-term if j % 2 else term)
    return lhs == rhs, str(lhs), str(rhs)


def _check_inv_zero(ctx: _Ctx, p: dict, r: Ranges):
    n, k, s = p["n"], p["k"], p["s"]
    if k % (s + 1) == 0:
        raise _Skip("requires k not divisible by s+1")
    total = Polynomial.zero()
    for j in range(k + 1):
        term = ctx.h(n, j) * ctx.M(n, k - j, s)
        total = total + (-term if j % 2 else term)
    return total.is_zero, str(total), "0"


def _check_eh_me(ctx: _Ctx, p: dict, r: Ranges):
    n, k, s = p["n"], p["k"], p["s"]
    lhs = Polynomial.zero()
    rhs = Polynomial.zero()
    for j in range(k + 1):
        lhs = lhs + ctx.e(n, j) * ctx.h(n, k - j)
        rhs = rhs + ctx.M(n, j, s) * ctx.E(n, k - j, s)
    return lhs == rhs, str(lhs), str(rhs)


def _grid_s1mod_def(r: Ranges) -> Iterator[dict]:
    for n in _span(r.n_max, 4, 1):
        for s in _span(r.s_max, 2, 1):
            k_hi = n * s if r.k_max is None else min(n * s, r.k_max)
            for k in range(k_hi + 1):
                yield {"n": n, "k": k, "s": s}


def _scaled_reciprocal_eval(E_poly: Polynomial, n: int, s: int) -> int:
    # (n!)^s * E at (1, 1/2, ..., 1/n): each exponent a_i contributes i^(s-a_i),
    # so the whole sum stays in integers.
    total = 0
    for exps, coeff in E_poly.terms.items():
        v = coeff
        for i in range(1, n + 1):
            a = exps[i - 1] if i - 1 < len(exps) else 0
            v *= i ** (s - a)
        total += v
    return total


def _check_s1mod_def(ctx: _Ctx, p: dict, r: Ranges):
    n, k, s = p["n"], p["k"], p["s"]
    direct = stirling1_mod(n + 1, k + 1, s)
    scaled = _scaled_reciprocal_eval(ctx.E(n, k, s), n, s)
    mirrored = poly_eval_int(ctx.E(n, n * s - k, s), tuple(range(1, n + 1)))
    ok = direct == scaled == mirrored
    rhs = str(scaled) if scaled == mirrored else f"scaled:{scaled} mirrored:{mirrored}"
    return ok, str(direct), rhs


def _grid_s1mod_rec(r: Ranges) -> Iterator[dict]:
    for n in _span(r.n_max, 5, 1):
        for s in _span(r.s_max, 2, 1):
            k_hi = (n - 1) * s + 1
            if r.k_max is not None:
                k_hi = min(k_hi, r.k_max)
            for k in range(1, k_hi + 1):
                yield {"n": n, "k": k, "s": s}


def _check_s1mod_rec(ctx: _Ctx, p: dict, r: Ranges):
    n, k, s = p["n"], p["k"], p["s"]
    lhs = stirling1_mod_rec(n, k, s)
    rhs = stirling1_mod(n, k, s)
    return lhs == rhs, str(lhs), str(rhs)


def _grid_s1mod_part(r: Ranges) -> Iterator[dict]:
    board_cap = r.board_max if r.board_max is not None else 10
    for n in _span(r.n_max, 3, 1):
        for s in _span(r.s_max, 2, 1):
            k_hi = n * s if r.k_max is None else min(n * s, r.k_max)
            for k in range(k_hi + 1):
                board = n * (s + 1) - k
                if n <= board <= board_cap:
                    yield {"n": n, "k": k, "s": s}


def _check_s1mod_part(ctx: _Ctx, p: dict, r: Ranges):
    n, k, s = p["n"], p["k"], p["s"]
    lhs = count_partitions_bounded(n * (s + 1) - k, n, s)
    rhs = stirling1_mod(n + 1, k + 1, s)
    return lhs == rhs, str(lhs), str(rhs)


def _grid_nested(r: Ranges) -> Iterator[dict]:
    for n in _span(r.n_max, 3, 1):
        for s in _span(r.s_max, 2, 1):
            k_hi = (n - 1) * s + 1
            if r.k_max is not None:
                k_hi = min(k_hi, r.k_max)
            for k in range(1 - s, k_hi + 1):
                yield {"n": n, "k": k, "s": s}


def _check_nested(ctx: _Ctx, p: dict, r: Ranges):
    n, k, s = p["n"], p["k"], p["s"]
    lhs = count_nested_minset_tuples(n, k, s)
    rhs = stirling1_mod_rec(n, k, s)
    return lhs == rhs, str(lhs), str(rhs)


def _check_higher_rec(ctx: _Ctx, p: dict, r: Ranges):
    n, k, s = p["n"], p["k"], p["s"]
    lhs = count_equal_minset_tuples(n, k, s)
    rhs = stirling1_higher(n, k, s)
    return lhs == rhs, str(lhs), str(rhs)


def _grid_omega(r: Ranges) -> Iterator[dict]:
    for n in _span(r.n_max, 5):
        for k in range(n + 1):
            for s in _span(r.s_max, 2, 1):
                yield {"n": n, "k": k, "s": s}


def _check_omega(ctx: _Ctx, p: dict, r: Ranges):
    n, k, s = p["n"], p["k"], p["s"]
    lhs = ctx.omega(n, s).coefficient((k,))
    rhs = stirling1_higher(n, k, s)
    return lhs == rhs, str(lhs), str(rhs)


# ---------------------------------------------------------------------------
# errata probes: evaluate the printed variants, never assert them


def _printed_gf_coeffs(k: int, s: int, bound: int) -> list[int]:
    # numerator variant 1 + r*x^s over the same denominator
    factors = []
    for r in range(1, k + 1):
        f = [0] * (bound + 1)
        f[0] = 1
        if s <= bound:
            f[s] += r
        step = s + 1
        g = [0] * (bound + 1)
        for m in range(0, bound + 1, step):
            g[m] = r**m
        factors.append(_series_coeffs([f, g], bound))
    return _series_coeffs(factors, bound)


def _erratum_s2mod_gf() -> dict:
    first = None
    zero_cell = None
    for k in range(0, 4):
        for s in range(1, 4):
            printed = _printed_gf_coeffs(k, s, 8)
            for m in range(9):
                truth = stirling2_mod(k + m, k, s, "recurrence")
                if printed[m] != truth:
                    cell = {
                        "params": {"n": k + m, "k": k, "s": s},
                        "printed": str(printed[m]),
                        "corrected": str(truth),
                    }
                    if first is None:
                        first = cell
                    if zero_cell is None and truth == 0 and printed[m] != 0:
                        zero_cell = cell
                if first is not None and zero_cell is not None:
                    break
            else:
                continue
            break
        else:
            continue
        break
    return {
        "id": "S2MOD_GF",
        "printed_form": "prod_{r=1..k} (1 + r*x^s) / (1 - (r*x)^(s+1))",
        "corrected_form": "prod_{r=1..k} (1 + r*x) / (1 - (r*x)^(s+1))",
        "first_failing_cell": first,
        "nonzero_where_zero_cell": zero_cell,
        "note": (
            "The numerator variant 1 + r*x^s selects exponents congruent to "
            "{0, s} mod s+1 and contradicts the defining specialization "
            "{n,k}^(s) = M_{n-k}^(s)(1..k): at k=1, s=2 it gives 0 at n=2 "
            "where {2,1}^(2) = 1, and 1 at n=3 where {3,1}^(2) = M_2^(2)(1) "
            "= 0.  The numerator 1 + r*x reproduces the specialization "
            "exactly and collapses to the classical column series at s=1."
        ),
    }


def _first_poly_failure(grid, printed_lhs, rhs) -> dict | None:
    for p in grid:
        lhs_val = printed_lhs(p)
        rhs_val = rhs(p)
        if lhs_val != rhs_val:
            return {
                "params": p,
                "printed": str(lhs_val),
                "corrected": str(rhs_val),
            }
    return None


def _erratum_inv_h() -> dict:
    ctx = _Ctx()

    def rhs(p):
        n, k, s = p["n"], p["k"], p["s"]
        acc = Polynomial.zero()
        for j in range(k * (s + 1) + 1):
            term = ctx.h(n, j) * ctx.M(n, k * (s + 1) - j, s)
            acc = acc + (-term if j % 2 else term)
        return acc

    grid = [
        {"n": n, "k": k, "s": s}
        for n in range(1, 3)
        for k in range(1, 3)
        for s in range(1, 3)
    ]
    first = _first_poly_failure(
        grid, lambda p: ctx.h(p["n"], p["k"]).substitute_power(p["s"]), rhs
    )
    return {
        "id": "INV_H",
        "printed_form": "h_k(x^s) = sum_j (-1)^j h_j M_{k(s+1)-j}^(s)",
        "corrected_form": "h_k(x^(s+1)) = sum_j (-1)^j h_j M_{k(s+1)-j}^(s)",
        "first_failing_cell": first,
        "note": (
            "The alternating h-convolution inverts the series whose t^{(s+1)k} "
            "coefficients are h_k in the (s+1)-th powers of the variables, so "
            "the left side must substitute x_i -> x_i^(s+1); with x_i^s it "
            "already fails at n=1, k=1, s=1."
        ),
    }


def _erratum_inv_e() -> dict:
    ctx = _Ctx()

    def rhs(p):
        n, k, s = p["n"], p["k"], p["s"]
        acc = Polynomial.zero()
        for j in range(k // (s + 1) + 1):
            term = ctx.e(n, j) * ctx.M(n, k - j * (s + 1), s)
            acc = acc + (-term if j % 2 else term)
        return acc

    grid = [
        {"n": n, "k": k, "s": s}
        for n in range(1, 3)
        for k in range(1, 5)
        for s in range(1, 3)
    ]
    first = _first_poly_failure(grid, lambda p: ctx.e(p["n"], p["k"]), rhs)
    return {
        "id": "INV_E",
        "printed_form": "e_k = sum_j (-1)^j e_j M_{k-j(s+1)}^(s)",
        "corrected_form": "e_k = sum_j (-1)^j e_j(x^(s+1)) M_{k-j(s+1)}^(s)",
        "first_failing_cell": first,
        "note": (
            "The alternating e-factor multiplies t in steps of s+1, so it must "
            "be taken in the (s+1)-th powers of the variables; with plain e_j "
            "the identity already fails at n=1, k=2, s=1."
        ),
    }


# ---------------------------------------------------------------------------
# catalog


@dataclass(frozen=True)
class _Identity:
    info: IdentityInfo
    grid: Callable[[Ranges], Iterable[dict]]
    check: Callable[[_Ctx, dict, Ranges], tuple[bool, str, str]]
    errata_probe: Callable[[], dict] | None = None


def _make_catalog() -> dict[str, _Identity]:
    entries = [
        _Identity(
            IdentityInfo(
                "GF_M",
                "series identity: sum_k M_k^(s)(n) t^k = "
                "prod_{i<=n} (1+x_i t)/(1-(x_i t)^(s+1))",
                ("n", "k", "s"),
            ),
            _grid_nks,
            _check_gf_m,
        ),
        _Identity(
            IdentityInfo(
                "REC3",
                "variable-count recurrence: M_k^(s)(n) = "
                "sum_{j=0,1 mod s+1} x_n^j M_{k-j}^(s)(n-1)",
                ("n", "k", "s"),
            ),
            lambda r: _grid_nks(r, n_lo=1),
            _check_rec3,
        ),
        _Identity(
            IdentityInfo(
                "REC4",
                "two-term peel for k >= s+1: M_k^(s)(n) = x_n^(s+1) "
                "M_{k-s-1}^(s)(n) + x_n M_{k-1}^(s)(n-1) + M_k^(s)(n-1)",
                ("n", "k", "s"),
            ),
            lambda r: _grid_nks(r, n_lo=1),
            _check_rec4,
        ),
        _Identity(
            IdentityInfo(
                "PATHS",
                "weight sum over admissible lattice paths equals M_k^(s)(n)",
                ("n", "k", "s"),
            ),
            lambda r: _grid_nks(r, n_lo=1),
            _check_paths,
        ),
        _Identity(
            IdentityInfo(
                "TILINGS",
                "weight sum over admissible tilings equals M_k^(s)(n)",
                ("n", "k", "s"),
            ),
            lambda r: _grid_nks(r, n_lo=1),
            _check_tilings,
        ),
        _Identity(
            IdentityInfo(
                "ALLONES",
                "all-ones evaluation: M_k^(s)(1..1) = "
                "sum_j C(n, k-j(s+1)) C(j+n-1, n-1)",
                ("n", "k", "s"),
            ),
            lambda r: _grid_nks(r, n_lo=1),
            _check_allones,
        ),
        _Identity(
            IdentityInfo(
                "S2MOD_SPEC",
                "triangle from specialization: {n,k}^(s) = M_{n-k}^(s)(1..k); "
                "polynomial-evaluation and recurrence routes agree",
                ("n", "k", "s"),
            ),
            _grid_triangle,
            _check_s2mod_spec,
        ),
        _Identity(
            IdentityInfo(
                "S2MOD_REC",
                "triangle recurrence for n-k >= s+1: {n,k}^(s) = {n-1,k-1}^(s) "
                "+ k {n-2,k-1}^(s) + k^(s+1) {n-s-1,k}^(s)",
                ("n", "k", "s"),
            ),
            lambda r: _grid_triangle(r, k_lo=1),
            _check_s2mod_rec,
        ),
        _Identity(
            IdentityInfo(
                "S2MOD_GF",
                "column series: sum_m {k+m,k}^(s) x^m = "
                "prod_{r<=k} (1+r x)/(1-(r x)^(s+1)), corrected numerator",
                ("k", "s", "m"),
                has_errata=True,
            ),
            _grid_s2mod_gf,
            _check_s2mod_gf,
            _erratum_s2mod_gf,
        ),
        _Identity(
            IdentityInfo(
                "PART_MOD",
                "partitions with d_i = 0,1 mod s+1 are counted by {n,k}^(s)",
                ("n", "k", "s"),
            ),
            lambda r: _grid_triangle(r, k_lo=1),
            _check_part_mod,
        ),
        _Identity(
            IdentityInfo(
                "PART_ZERO",
                "partitions with all d_i = 0 mod s+1 are counted by "
                "h_{(n-k)/(s+1)}(1^(s+1)..k^(s+1))",
                ("n", "k", "s"),
            ),
            lambda r: _grid_triangle(r, k_lo=1),
            _check_part_zero,
        ),
        _Identity(
            IdentityInfo(
                "PS1",
                "first-kind expansion: {n+k,n}^(s) = sum_i "
                "h_{floor(k/(s+1))-i}(1^(s+1)..n^(s+1)) [n+1, n+1-r-i(s+1)], "
                "r = k mod s+1",
                ("n", "k", "s"),
            ),
            _grid_nks,
            _check_ps1,
        ),
        _Identity(
            IdentityInfo(
                "FERMAT",
                "prime congruence: {n+k,n}^(p-1) = sum_i {n+floor(k/p)-i, n} "
                "[n+1, n+1-(r+ip)] mod p",
                ("n", "k", "p"),
            ),
            _grid_fermat,
            _check_fermat,
        ),
        _Identity(
            IdentityInfo(
                "LMOD",
                "residue-ell expansion of M_k^(s,ell)(1..n) via h at powered "
                "points and level-ell first-kind brackets",
                ("n", "k", "s", "ell"),
                note=(
                    "interpretation: the bracket factor is read as the "
                    "level-ell first-kind triangle (x^k coefficients of "
                    "x(x+1^ell)(x+2^ell)...); a failure here would point at "
                    "that reading rather than an arithmetic bug"
                ),
            ),
            _grid_lmod,
            _check_lmod,
        ),
        _Identity(
            IdentityInfo(
                "EVANISH",
                "odd-s alternating convolution: "
                "sum_i (-1)^i E_i^(s) M_{k-i}^(s) = 0",
                ("n", "k", "s"),
            ),
            lambda r: _grid_nks(r, n_lo=1, k_lo=1),
            _check_evanish,
        ),
        _Identity(
            IdentityInfo(
                "CONV_HE",
                "convolution route: M_k^(s) = sum_j h_j(x^(s+1)) e_{k-(s+1)j}, "
                "checked against direct enumeration",
                ("n", "k", "s"),
            ),
            lambda r: _grid_nks(r, n_lo=1),
            _check_conv_he,
        ),
        _Identity(
            IdentityInfo(
                "INV_H",
                "inverse pair: h_k(x^(s+1)) = sum_j (-1)^j h_j "
                "M_{k(s+1)-j}^(s), corrected substitution power",
                ("n", "k", "s"),
                has_errata=True,
            ),
            lambda r: _grid_nks(r, n_lo=1, k_lo=1),
            _check_inv_h,
            _erratum_inv_h,
        ),
        _Identity(
            IdentityInfo(
                "INV_E",
                "inverse pair: e_k = sum_j (-1)^j e_j(x^(s+1)) "
                "M_{k-j(s+1)}^(s), corrected powered e-factor",
                ("n", "k", "s"),
                has_errata=True,
            ),
            lambda r: _grid_nks(r, n_lo=1, k_lo=1),
            _check_inv_e,
            _erratum_inv_e,
        ),
        _Identity(
            IdentityInfo(
                "INV_ZERO",
                "vanishing convolution: sum_j (-1)^j h_j M_{k-j}^(s) = 0 "
                "for k not divisible by s+1",
                ("n", "k", "s"),
            ),
            lambda r: _grid_nks(r, n_lo=1, k_lo=1),
            _check_inv_zero,
        ),
        _Identity(
            IdentityInfo(
                "EH_ME",
                "full convolution match: sum_j e_j h_{k-j} = "
                "sum_j M_j^(s) E_{k-j}^(s)",
                ("n", "k", "s"),
            ),
            lambda r: _grid_nks(r, n_lo=1, k_lo=1),
            _check_eh_me,
        ),
        _Identity(
            IdentityInfo(
                "S1MOD_DEF",
                "[n+1,k+1]^(s) equals the ((n)!)^s-scaled reciprocal "
                "evaluation of E_k^(s) and the mirrored E_{ns-k}^(s)(1..n)",
                ("n", "k", "s"),
            ),
            _grid_s1mod_def,
            _check_s1mod_def,
        ),
        _Identity(
            IdentityInfo(
                "S1MOD_REC",
                "order-s recurrence route for [n,k]^(s) agrees with the "
                "bounded-E specialization route",
                ("n", "k", "s"),
            ),
            _grid_s1mod_rec,
            _check_s1mod_rec,
        ),
        _Identity(
            IdentityInfo(
                "S1MOD_PART",
                "partitions of a (n(s+1)-k)-board into n blocks with all "
                "d_i <= s are counted by [n+1,k+1]^(s)",
                ("n", "k", "s", "board"),
            ),
            _grid_s1mod_part,
            _check_s1mod_part,
        ),
        _Identity(
            IdentityInfo(
                "NESTED",
                "nested min-set tuples with k+s-1 total cycles are counted "
                "by [n,k]^(s)",
                ("n", "k", "s"),
            ),
            _grid_nested,
            _check_nested,
        ),
        _Identity(
            IdentityInfo(
                "HIGHER_REC",
                "equal min-set s-tuples of k-cycle permutations are counted "
                "by the level-s triangle [n,k]_s",
                ("n", "k", "s"),
            ),
            _grid_omega,
            _check_higher_rec,
        ),
        _Identity(
            IdentityInfo(
                "OMEGA",
                "x^k coefficients of x(x+1^s)(x+2^s)...(x+(n-1)^s) "
                "equal [n,k]_s",
                ("n", "k", "s"),
            ),
            _grid_omega,
            _check_omega,
        ),
    ]
    return {e.info.id: e for e in entries}


_CATALOG = _make_catalog()


# per-identity bounds for the two profiles
_QUICK: dict[str, Ranges] = {
    "GF_M": Ranges(n_max=3, k_max=6, s_max=2),
    "REC3": Ranges(n_max=3, k_max=6, s_max=2),
    "REC4": Ranges(n_max=3, k_max=6, s_max=2),
    "PATHS": Ranges(n_max=3, k_max=5, s_max=2),
    "TILINGS": Ranges(n_max=3, k_max=5, s_max=2),
    "ALLONES": Ranges(n_max=4, k_max=6, s_max=2),
    "S2MOD_SPEC": Ranges(n_max=8, s_max=2),
    "S2MOD_REC": Ranges(n_max=8, s_max=2),
    "S2MOD_GF": Ranges(n_max=8, k_max=3, s_max=2),
    "PART_MOD": Ranges(n_max=6, s_max=2),
    "PART_ZERO": Ranges(n_max=6, s_max=2),
    "PS1": Ranges(n_max=3, k_max=5, s_max=2),
    "FERMAT": Ranges(n_max=3, k_max=5, p_list=(2, 3)),
    "LMOD": Ranges(n_max=3, k_max=5, s_max=2),
    "EVANISH": Ranges(n_max=2, k_max=4, s_max=2),
    "CONV_HE": Ranges(n_max=3, k_max=5, s_max=2),
    "INV_H": Ranges(n_max=2, k_max=3, s_max=2),
    "INV_E": Ranges(n_max=3, k_max=5, s_max=2),
    "INV_ZERO": Ranges(n_max=3, k_max=5, s_max=2),
    "EH_ME": Ranges(n_max=2, k_max=4, s_max=2),
    "S1MOD_DEF": Ranges(n_max=4, s_max=2),
    "S1MOD_REC": Ranges(n_max=5, s_max=2),
    "S1MOD_PART": Ranges(n_max=3, s_max=2, board_max=8),
    "NESTED": Ranges(n_max=3, s_max=2),
    "HIGHER_REC": Ranges(n_max=4, s_max=2),
    "OMEGA": Ranges(n_max=5, s_max=2),
}

_FULL: dict[str, Ranges] = {
    "GF_M": Ranges(n_max=5, k_max=10, s_max=3),
    "REC3": Ranges(n_max=8, k_max=8, s_max=4),
    "REC4": Ranges(n_max=8, k_max=8, s_max=4),
    "PATHS": Ranges(n_max=4, k_max=8, s_max=3),
    "TILINGS": Ranges(n_max=4, k_max=8, s_max=3),
    "ALLONES": Ranges(n_max=6, k_max=12, s_max=4),
    "S2MOD_SPEC": Ranges(n_max=20, s_max=4),
    "S2MOD_REC": Ranges(n_max=20, s_max=4),
    "S2MOD_GF": Ranges(n_max=20, k_max=6, s_max=4),
    "PART_MOD": Ranges(n_max=10, s_max=4),
    "PART_ZERO": Ranges(n_max=10, s_max=4),
    "PS1": Ranges(n_max=5, k_max=10, s_max=4),
    "FERMAT": Ranges(n_max=5, k_max=10, p_list=(2, 3, 5)),
    "LMOD": Ranges(n_max=4, k_max=8, s_max=4),
    "EVANISH": Ranges(n_max=3, k_max=6, s_max=4),
    "CONV_HE": Ranges(n_max=8, k_max=8, s_max=4),
    "INV_H": Ranges(n_max=3, k_max=4, s_max=3),
    "INV_E": Ranges(n_max=3, k_max=7, s_max=3),
    "INV_ZERO": Ranges(n_max=3, k_max=7, s_max=3),
    "EH_ME": Ranges(n_max=3, k_max=6, s_max=3),
    "S1MOD_DEF": Ranges(n_max=6, s_max=3),
    "S1MOD_REC": Ranges(n_max=10, s_max=4),
    "S1MOD_PART": Ranges(n_max=5, s_max=3, board_max=12),
    "NESTED": Ranges(n_max=4, s_max=3),
    "HIGHER_REC": Ranges(n_max=5, s_max=3),
    "OMEGA": Ranges(n_max=10, s_max=3),
}


def list_identities() -> list[IdentityInfo]:
    """The stable catalog, in report order."""
    return [ident.info for ident in _CATALOG.values()]


def profile_ranges(identity_id: str, profile: str = "quick") -> Ranges:
    if profile not in PROFILES:
        raise ValueError(f"unknown profile {profile!r}; expected one of {PROFILES}")
    table = _QUICK if profile == "quick" else _FULL
    return table[_normalize_id(identity_id)]


def _normalize_id(identity_id: str) -> str:
    key = identity_id.upper()
    if key not in _CATALOG:
        raise ValueError(
            f"unknown identity {identity_id!r}; known ids: {', '.join(_CATALOG)}"
        )
    return key


def _worker_count() -> int:
    raw = os.environ.get("MODSYM_THREADS")
    if raw is not None:
        try:
            n = int(raw)
        except ValueError as exc:
            raise ValueError(f"MODSYM_THREADS must be an integer, got {raw!r}") from exc
        return max(1, n)
    return os.cpu_count() or 1


def check_cell(
    identity_id: str, ranges: Ranges | None = None, **params
) -> IdentityCase:
    """Evaluate a single grid cell of an identity (used for spot checks)."""
    key = _normalize_id(identity_id)
    ident = _CATALOG[key]
    base = _QUICK[key]
    effective = ranges.merged_over(base) if ranges is not None else base
    return _run_cell(ident, _Ctx(), params, effective)


def _run_cell(ident: _Identity, ctx: _Ctx, params: dict, ranges: Ranges) -> IdentityCase:
    try:
        ok, lhs, rhs = ident.check(ctx, params, ranges)
    except _Skip as skip:
        return IdentityCase(ident.info.id, params, "", "", "skipped", skip.reason)
    return IdentityCase(ident.info.id, params, lhs, rhs, "pass" if ok else "fail")


def _run_identity(ident: _Identity, ranges: Ranges) -> VerifyReport:
    cells = list(ident.grid(ranges))
    if not cells:
        raise ValueError(f"empty parameter grid for {ident.info.id}")
    ctx = _Ctx()
    workers = _worker_count()
    if workers > 1 and len(cells) > 1:
        with ThreadPoolExecutor(max_workers=min(workers, 32)) as pool:
            results = list(
                pool.map(lambda p: _run_cell(ident, ctx, p, ranges), cells)
            )
    else:
        results = [_run_cell(ident, ctx, p, ranges) for p in cells]
    passed = sum(1 for c in results if c.status == "pass")
    failed = [c for c in results if c.status == "fail"]
    skipped = sum(1 for c in results if c.status == "skipped")
    errata = [ident.errata_probe()] if ident.errata_probe else []
    return VerifyReport(
        identity=ident.info.id,
        anchor=ident.info.anchor,
        range=ranges.describe(ident.info.parameters),
        passed=passed,
        failed=len(failed),
        skipped=skipped,
        failures=failed,
        errata=errata,
        note=ident.info.note,
    )


def verify(
    identity_id: str, ranges: Ranges | None = None, profile: str = "quick"
) -> VerifyReport:
    """Exhaustively check one identity on its parameter grid.

    Explicit ``ranges`` fields override the per-identity profile bounds.
    """
    key = _normalize_id(identity_id)
    base = profile_ranges(key, profile)
    effective = ranges.merged_over(base) if ranges is not None else base
    return _run_identity(_CATALOG[key], effective)


def verify_all(
    profile: str = "quick", ranges: Ranges | None = None
) -> list[VerifyReport]:
    """Run every catalog entry under the given profile, in catalog order."""
    if profile not in PROFILES:
        raise ValueError(f"unknown profile {profile!r}; expected one of {PROFILES}")
    return [verify(key, ranges, profile) for key in _CATALOG]


# ---------------------------------------------------------------------------
# mutation self-test: perturbed identities must fail


def _mutated_rec4(ctx: _Ctx, p: dict, r: Ranges):
    # drops the x_n M_{k-1}(n-1) cross term
    n, k, s = p["n"], p["k"], p["s"]
    if k < s + 1:
        raise _Skip("requires k >= s+1")
    rhs = ctx.M(n, k - s - 1, s).mul_power(n, s + 1) + ctx.M(n - 1, k, s)
    lhs = ctx.M(n, k, s)
    return lhs == rhs, str(lhs), str(rhs)


def _mutated_s2mod_rec(ctx: _Ctx, p: dict, r: Ranges):
    # weakens the k^(s+1) coefficient to k^s
    n, k, s = p["n"], p["k"], p["s"]
    if n - k < s + 1:
        raise _Skip("requires n-k >= s+1")
    lhs = ctx.s2spec(n, k, s)
    rhs = (
        _s2spec_or_zero(ctx, n - 1, k - 1, s)
        + k * _s2spec_or_zero(ctx, n - 2, k - 1, s)
        + k**s * _s2spec_or_zero(ctx, n - s - 1, k, s)
    )
    return lhs == rhs, str(lhs), str(rhs)


def _mutated_allones(ctx: _Ctx, p: dict, r: Ranges):
    # shifts the second binomial from C(j+n-1, n-1) to C(j+n, n-1)
    n, k, s = p["n"], p["k"], p["s"]
    rhs = poly_eval_int(ctx.M(n, k, s), (1,) * n)
    lhs = 0
    for j in range(k // (s + 1) + 1):
        t = k - j * (s + 1)
        if t <= n:
            lhs += comb(n, t) * comb(j + n, n - 1)
    return lhs == rhs, str(lhs), str(rhs)


def _mutated_conv_he(ctx: _Ctx, p: dict, r: Ranges):
    # forgets to raise the h-factor variables to the (s+1)-th power
    n, k, s = p["n"], p["k"], p["s"]
    rhs = Polynomial.zero()
    for j in range(k // (s + 1) + 1):
        rhs = rhs + ctx.h(n, j) * ctx.e(n, k - (s + 1) * j)
    lhs = ctx.M(n, k, s)
    return lhs == rhs, str(lhs), str(rhs)


def _mutated_ps1(ctx: _Ctx, p: dict, r: Ranges):
    # uses the wrong remainder r = (k+1) mod (s+1)
    n, k, s = p["n"], p["k"], p["s"]
    lhs = stirling2_mod(n + k, n, s, "recurrence")
    rr = (k + 1) % (s + 1)
    hi = min((n - rr) // (s + 1), k // (s + 1))
    rhs = 0
    for i in range(hi + 1):
        idx = n + 1 - rr - i * (s + 1)
        if idx >= 0:
            rhs += h_at_powered_points(n, k // (s + 1) - i, s) * stirling1(n + 1, idx)
    return lhs == rhs, str(lhs), str(rhs)


_MUTATIONS: tuple[tuple[str, str, Callable, Callable], ...] = (
    (
        "REC4_drop_cross_term",
        "REC4 without the x_n M_{k-1}^(s)(n-1) term",
        lambda r: _grid_nks(r, n_lo=1),
        _mutated_rec4,
    ),
    (
        "S2MOD_REC_weaken_power",
        "S2MOD_REC with k^s in place of k^(s+1)",
        lambda r: _grid_triangle(r, k_lo=1),
        _mutated_s2mod_rec,
    ),
    (
        "ALLONES_shift_binomial",
        "ALLONES with C(j+n, n-1) in place of C(j+n-1, n-1)",
        lambda r: _grid_nks(r, n_lo=1),
        _mutated_allones,
    ),
    (
        "CONV_HE_unpowered_h",
        "CONV_HE with h_j(x) in place of h_j(x^(s+1))",
        lambda r: _grid_nks(r, n_lo=1),
        _mutated_conv_he,
    ),
    (
        "PS1_wrong_remainder",
        "PS1 with remainder (k+1) mod (s+1)",
        _grid_nks,
        _mutated_ps1,
    ),
)


def mutation_selftest() -> list[VerifyReport]:
    """Run the five built-in perturbations; every report must show failures.

    A perturbation that passes everywhere would mean the corresponding
    identity check is vacuous on its grid.
    """
    reports = []
    for name, anchor, grid, check in _MUTATIONS:
        ranges = Ranges(n_max=3, k_max=6, s_max=2)
        if name == "S2MOD_REC_weaken_power":
            ranges = Ranges(n_max=8, s_max=2)
        ident = _Identity(IdentityInfo(name, anchor, ("n", "k", "s")), grid, check)
        reports.append(_run_identity(ident, ranges))
    return reports
