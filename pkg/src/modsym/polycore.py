"""Exact sparse multivariate polynomial and truncated power series arithmetic.

A monomial is a tuple of non-negative integer exponents indexed by variable
position: entry ``i`` is the exponent of ``x_{i+1}``.  Trailing zeros are
trimmed, so the constant monomial is the empty tuple.  A polynomial maps
monomials to nonzero arbitrary-precision integer coefficients; the zero
polynomial stores no terms.  Because the representation is canonical,
structural equality of two polynomials is mathematical equality.

Coefficients are plain Python ints throughout.  Everything this library
computes is an exact integer identity, so floating point never appears.

Serialized term order is graded lexicographic, largest degree first and
lexicographically larger exponent vector first within a degree.  All printed
and JSON output follows this order, which keeps golden-file tests stable.
"""

from __future__ import annotations

from collections.abc import Iterable, Mapping, Sequence
from types import MappingProxyType

Monomial = tuple[int, ...]


def make_monomial(exponents: Iterable[int]) -> Monomial:
    """Canonicalize an exponent sequence: validate and trim trailing zeros."""
    exps = tuple(exponents)
    for a in exps:
        if a < 0:
            raise ValueError(f"negative exponent {a} in monomial {exps}")
    end = len(exps)
    while end > 0 and exps[end - 1] == 0:
        end -= 1
    return exps[:end]


def _grlex_key(exps: Monomial) -> tuple[int, tuple[int, ...]]:
    # Graded lex, descending.  Trimmed monomials of equal degree can never be
    # prefixes of one another, so the unpadded comparison is safe.
    return (-sum(exps), tuple(-a for a in exps))


class Polynomial:
    """Immutable sparse polynomial with arbitrary-precision integer coefficients."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[Iterable[int], int] | None = None):
        acc: dict[Monomial, int] = {}
        if terms:
            for exps, coeff in terms.items():
                mono = make_monomial(exps)
                c = acc.get(mono, 0) + coeff
                if c:
                    acc[mono] = c
                elif mono in acc:
                    del acc[mono]
        object.__setattr__(self, "_terms", acc)

    @classmethod
    def _raw(cls, terms: dict[Monomial, int]) -> "Polynomial":
        # Internal: terms must already be canonical (trimmed keys, no zeros).
        p = cls.__new__(cls)
        object.__setattr__(p, "_terms", terms)
        return p

    @classmethod
    def zero(cls) -> "Polynomial":
        return cls._raw({})

    @classmethod
    def one(cls) -> "Polynomial":
        return cls._raw({(): 1})

    @classmethod
    def constant(cls, c: int) -> "Polynomial":
        return cls._raw({(): c} if c else {})

    @classmethod
    def variable(cls, index: int) -> "Polynomial":
        """The polynomial x_index (1-based variable position)."""
        if index < 1:
            raise ValueError(f"variable index must be >= 1, got {index}")
        return cls._raw({(0,) * (index - 1) + (1,): 1})

    @classmethod
    def monomial(cls, exponents: Iterable[int], coeff: int = 1) -> "Polynomial":
        if coeff == 0:
            return cls.zero()
        return cls._raw({make_monomial(exponents): coeff})

    @property
    def terms(self) -> Mapping[Monomial, int]:
        return MappingProxyType(self._terms)

    @property
    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def num_vars(self) -> int:
        """Highest 1-based variable position used (0 for constants)."""
        return max((len(e) for e in self._terms), default=0)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Polynomial):
            return self._terms == other._terms
        if isinstance(other, int):
            return self._terms == ({(): other} if other else {})
        return NotImplemented

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __neg__(self) -> "Polynomial":
        return Polynomial._raw({e: -c for e, c in self._terms.items()})

    def __add__(self, other: "Polynomial | int") -> "Polynomial":
        if isinstance(other, int):
            other = Polynomial.constant(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        if not self._terms:
            return other
        if not other._terms:
            return self
        acc = dict(self._terms)
        for e, c in other._terms.items():
            s = acc.get(e, 0) + c
            if s:
                acc[e] = s
            elif e in acc:
                del acc[e]
        return Polynomial._raw(acc)

    __radd__ = __add__

    def __sub__(self, other: "Polynomial | int") -> "Polynomial":
        if isinstance(other, int):
            other = Polynomial.constant(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: int) -> "Polynomial":
        return Polynomial.constant(other) + (-self)

    def __mul__(self, other: "Polynomial | int") -> "Polynomial":
        if isinstance(other, int):
            if other == 0:
                return Polynomial.zero()
            if other == 1:
                return self
            return Polynomial._raw({e: c * other for e, c in self._terms.items()})
        if not isinstance(other, Polynomial):
            return NotImplemented
        if not self._terms or not other._terms:
            return Polynomial.zero()
        acc: dict[Monomial, int] = {}
        for ea, ca in self._terms.items():
            la = len(ea)
            for eb, cb in other._terms.items():
                lb = len(eb)
                if la >= lb:
                    mono = tuple(ea[i] + (eb[i] if i < lb else 0) for i in range(la))
                else:
                    mono = tuple((ea[i] if i < la else 0) + eb[i] for i in range(lb))
                s = acc.get(mono, 0) + ca * cb
                if s:
                    acc[mono] = s
                elif mono in acc:
                    del acc[mono]
        return Polynomial._raw(acc)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "Polynomial":
        if not isinstance(n, int) or n < 0:
            raise ValueError(f"polynomial power must be a non-negative int, got {n}")
        result = Polynomial.one()
        for _ in range(n):
            result = result * self
        return result

    def mul_power(self, index: int, power: int) -> "Polynomial":
        """Multiply by x_index**power (1-based variable position)."""
        if index < 1:
            raise ValueError(f"variable index must be >= 1, got {index}")
        if power < 0:
            raise ValueError(f"negative power {power}")
        if power == 0 or not self._terms:
            return self
        pos = index - 1
        acc: dict[Monomial, int] = {}
        for e, c in self._terms.items():
            if len(e) > pos:
                mono = e[:pos] + (e[pos] + power,) + e[pos + 1 :]
            else:
                mono = e + (0,) * (pos - len(e)) + (power,)
            acc[mono] = c
        return Polynomial._raw(acc)

    def evaluate(self, point: Sequence[int]) -> int:
        """Exact value at an integer point (entry ``i`` is the value of ``x_{i+1}``).

        The point must cover every variable the polynomial uses.
        """
        width = self.num_vars()
        if len(point) < width:
            raise ValueError(
                f"point of length {len(point)} does not cover variable x{width}"
            )
        total = 0
        for exps, coeff in self._terms.items():
            v = coeff
            for x, a in zip(point, exps):
                if a:
                    v *= x**a
            total += v
        return total

    def substitute_power(self, m: int) -> "Polynomial":
        """Substitute x_i -> x_i**m for every variable (m >= 1)."""
        if m < 1:
            raise ValueError(f"substitution power must be >= 1, got {m}")
        if m == 1:
            return self
        return Polynomial._raw(
            {tuple(a * m for a in e): c for e, c in self._terms.items()}
        )

    def coefficient(self, exponents: Iterable[int]) -> int:
        return self._terms.get(make_monomial(exponents), 0)

    def sorted_terms(self) -> list[tuple[Monomial, int]]:
        """Terms in canonical (graded-lex descending) order."""
        return sorted(self._terms.items(), key=lambda item: _grlex_key(item[0]))

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for exps, coeff in self.sorted_terms():
            body = "*".join(
                f"x{i + 1}^{a}" if a > 1 else f"x{i + 1}"
                for i, a in enumerate(exps)
                if a
            )
            if not body:
                parts.append(str(coeff))
            elif coeff == 1:
                parts.append(body)
            elif coeff == -1:
                parts.append("-" + body)
            else:
                parts.append(f"{coeff}*{body}")
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"Polynomial({self})"

    def to_json_obj(self) -> list[dict]:
        """Canonically ordered list of {"coeff": decimal string, "exps": [...]}."""
        return [
            {"coeff": str(coeff), "exps": list(exps)}
            for exps, coeff in self.sorted_terms()
        ]


def poly_add(a: Polynomial, b: Polynomial) -> Polynomial:
    """Coefficient-wise sum in canonical form."""
    return a + b


def poly_mul(a: Polynomial, b: Polynomial) -> Polynomial:
    """Distributive product; exponent vectors add component-wise."""
    return a * b


def poly_eval_int(p: Polynomial, point: Sequence[int]) -> int:
    """Exact integer value of ``p`` at ``point`` (one value per variable position)."""
    return p.evaluate(point)


def poly_substitute_power(p: Polynomial, m: int) -> Polynomial:
    """Every exponent multiplied by ``m`` (the substitution x_i -> x_i**m)."""
    return p.substitute_power(m)


class TruncatedSeries:
    """Formal power series in one parameter t, truncated at a degree bound.

    Coefficients are Polynomial values; ``coeffs`` holds exactly
    ``degree_bound + 1`` entries, one per power of t from 0 upward.
    Arithmetic between two series truncates at the smaller bound.
    """

    __slots__ = ("_coeffs",)

    def __init__(
        self,
        coeffs: Sequence[Polynomial | int],
        degree_bound: int | None = None,
    ):
        lifted = [
            c if isinstance(c, Polynomial) else Polynomial.constant(c) for c in coeffs
        ]
        if degree_bound is None:
            if not lifted:
                raise ValueError("a series needs at least the t^0 coefficient")
            degree_bound = len(lifted) - 1
        if degree_bound < 0:
            raise ValueError(f"degree bound must be >= 0, got {degree_bound}")
        if len(lifted) > degree_bound + 1:
            raise ValueError(
                f"{len(lifted)} coefficients exceed degree bound {degree_bound}"
            )
        lifted.extend([Polynomial.zero()] * (degree_bound + 1 - len(lifted)))
        object.__setattr__(self, "_coeffs", tuple(lifted))

    @classmethod
    def one(cls, degree_bound: int) -> "TruncatedSeries":
        return cls([Polynomial.one()], degree_bound)

    @property
    def degree_bound(self) -> int:
        return len(self._coeffs) - 1

    @property
    def coeffs(self) -> tuple[Polynomial, ...]:
        return self._coeffs

    def coefficient(self, k: int) -> Polynomial:
        if not 0 <= k <= self.degree_bound:
            raise IndexError(f"coefficient index {k} outside bound {self.degree_bound}")
        return self._coeffs[k]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash(self._coeffs)

    def __mul__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return series_mul(self, other)

    def __str__(self) -> str:
        return " ; ".join(f"t^{k}: {c}" for k, c in enumerate(self._coeffs))

    def __repr__(self) -> str:
        return f"TruncatedSeries([{', '.join(map(str, self._coeffs))}])"


def series_mul(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    """Cauchy product truncated at the smaller of the two bounds."""
    bound = min(a.degree_bound, b.degree_bound)
    ca, cb = a.coeffs, b.coeffs
    out = []
    for k in range(bound + 1):
        acc = Polynomial.zero()
        for j in range(k + 1):
            if ca[j] and cb[k - j]:
                acc = acc + ca[j] * cb[k - j]
        out.append(acc)
    return TruncatedSeries(out, bound)
