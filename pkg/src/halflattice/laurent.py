"""Sparse multivariate Laurent polynomials with exact rational coefficients.

Variables are numbered 1..nvars.  The first ``nlaurent`` of them are Laurent
variables (negative exponents allowed); the rest are ordinary polynomial
variables whose exponents must stay nonnegative.  Exponent vectors are the
dictionary keys, zero coefficients are never stored, and printing follows a
fixed lexicographic term order so output is reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Iterable, Mapping


class CutoffError(ValueError):
    """A polynomial-only variable would receive a negative exponent."""


@dataclass(frozen=True)
class LaurentRing:
    """Shape of a Laurent polynomial ring: variable count and Laurent cutoff."""

    nvars: int
    nlaurent: int

    def __post_init__(self):
        if self.nvars < 0:
            raise ValueError("nvars must be nonnegative")
        if not 0 <= self.nlaurent <= self.nvars:
            raise ValueError("nlaurent must lie in 0..nvars")

    def check_exponents(self, exps: Iterable[int]) -> tuple[int, ...]:
        out = tuple(int(e) for e in exps)
        if len(out) != self.nvars:
            raise ValueError(f"exponent vector must have {self.nvars} entries")
        for j in range(self.nlaurent, self.nvars):
            if out[j] < 0:
                raise CutoffError(
                    f"variable t{j + 1} is polynomial-only but has exponent {out[j]}"
                )
        return out

    def zero(self) -> "LaurentPoly":
        return LaurentPoly(self, {})

    def one(self) -> "LaurentPoly":
        return self.constant(1)

    def constant(self, value) -> "LaurentPoly":
        q = Fraction(value)
        if q == 0:
            return self.zero()
        return LaurentPoly(self, {(0,) * self.nvars: q})

    def variable(self, j: int) -> "LaurentPoly":
        """The variable t_j, 1-based."""
        return self.monomial([int(i == j - 1) for i in range(self.nvars)])

    def monomial(self, exps: Iterable[int], coeff=1) -> "LaurentPoly":
        q = Fraction(coeff)
        if q == 0:
            return self.zero()
        return LaurentPoly(self, {self.check_exponents(exps): q})

    def from_terms(self, terms: Mapping) -> "LaurentPoly":
        data = {}
        for exps, coeff in terms.items():
            q = Fraction(coeff)
            if q:
                data[self.check_exponents(exps)] = q
        return LaurentPoly(self, data)


class LaurentPoly:
    """Immutable sparse Laurent polynomial over the rationals."""

    __slots__ = ("ring", "_terms", "_hash")

    def __init__(self, ring: LaurentRing, terms: dict):
        self.ring = ring
        self._terms = {e: c for e, c in terms.items() if c}
        self._hash = None

    # -- container-ish access -------------------------------------------------

    def terms(self) -> list[tuple[tuple[int, ...], Fraction]]:
        """Terms in the canonical (lexicographic) order."""
        return sorted(self._terms.items())

    def coefficient(self, exps: Iterable[int]) -> Fraction:
        return self._terms.get(tuple(int(e) for e in exps), Fraction(0))

    def monomials(self) -> list[tuple[int, ...]]:
        return sorted(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        zero = (0,) * self.ring.nvars
        return all(e == zero for e in self._terms)

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise ValueError(f"{self} is not constant")
        return self.coefficient((0,) * self.ring.nvars)

    def max_variable(self) -> int:
        """Largest 1-based variable index with a nonzero exponent; 0 if none."""
        top = 0
        for exps in self._terms:
            for j in range(self.ring.nvars - 1, top - 1, -1):
                if exps[j]:
                    top = max(top, j + 1)
                    break
        return top

    # -- ring operations -------------------------------------------------------

    def _coerce(self, other) -> "LaurentPoly":
        if isinstance(other, LaurentPoly):
            if other.ring != self.ring:
                raise ValueError("ring mismatch")
            return other
        return self.ring.constant(other)

    def __add__(self, other) -> "LaurentPoly":
        other = self._coerce(other)
        data = dict(self._terms)
        for e, c in other._terms.items():
            new = data.get(e, 0) + c
            if new:
                data[e] = new
            else:
                data.pop(e, None)
        return LaurentPoly(self.ring, data)

    __radd__ = __add__

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly(self.ring, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other) -> "LaurentPoly":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "LaurentPoly":
        return self._coerce(other) - self

    def __mul__(self, other) -> "LaurentPoly":
        if not isinstance(other, LaurentPoly):
            q = Fraction(other)
            return LaurentPoly(self.ring, {e: q * c for e, c in self._terms.items()})
        other = self._coerce(other)
        data: dict = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                new = data.get(e, 0) + c1 * c2
                if new:
                    data[e] = new
                else:
                    data.pop(e, None)
        return LaurentPoly(self.ring, data)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "LaurentPoly":
        if n < 0:
            raise ValueError("negative powers of general polynomials are undefined")
        out = self.ring.one()
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __eq__(self, other) -> bool:
        if isinstance(other, LaurentPoly):
            return self.ring == other.ring and self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self == self.ring.constant(other)
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.ring, frozenset(self._terms.items())))
        return self._hash

    # -- the two structural operators ------------------------------------------

    def shift(self, j: int, m: int) -> "LaurentPoly":
        """Substitute t_j -> t_j - m, expanded exactly.

        Only defined for polynomial variables (j > nlaurent): on a Laurent
        variable the substitution would not be a Laurent polynomial.
        Negative m performs the inverse substitution t_j -> t_j + |m|.
        """
        if not 1 <= j <= self.ring.nvars:
            raise ValueError(f"variable index {j} out of range")
        if j <= self.ring.nlaurent:
            raise CutoffError(f"shift is undefined for Laurent variable t{j}")
        if m == 0:
            return self
        jj = j - 1
        data: dict = {}
        for exps, coeff in self._terms.items():
            e = exps[jj]
            for i in range(e + 1):
                new = exps[:jj] + (i,) + exps[jj + 1 :]
                c = data.get(new, 0) + coeff * comb(e, i) * Fraction(-m) ** (e - i)
                if c:
                    data[new] = c
                else:
                    data.pop(new, None)
        return LaurentPoly(self.ring, data)

    def degree_derivation(self, j: int) -> "LaurentPoly":
        """The operator t_j * d/dt_j: scales each term by its t_j exponent."""
        if not 1 <= j <= self.ring.nvars:
            raise ValueError(f"variable index {j} out of range")
        jj = j - 1
        return LaurentPoly(
            self.ring,
            {e: c * e[jj] for e, c in self._terms.items() if e[jj]},
        )

    def deg_plus(self, j: int) -> int:
        """Top t_j exponent, with deg_plus(0) = 0 by convention."""
        if not self._terms:
            return 0
        jj = j - 1
        return max(e[jj] for e in self._terms)

    def deg_minus(self, j: int) -> int:
        """Bottom t_j exponent, with deg_minus(0) = 0 by convention."""
        if not self._terms:
            return 0
        jj = j - 1
        return min(e[jj] for e in self._terms)

    # -- printing ----------------------------------------------------------------

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        chunks = []
        for exps, coeff in self.terms():
            factors = [
                f"t{j + 1}" if e == 1 else f"t{j + 1}^{e}"
                for j, e in enumerate(exps)
                if e
            ]
            if not factors:
                chunks.append(str(coeff))
            elif coeff == 1:
                chunks.append("*".join(factors))
            elif coeff == -1:
                chunks.append("-" + "*".join(factors))
            else:
                chunks.append(str(coeff) + "*" + "*".join(factors))
        out = " + ".join(chunks)
        return out.replace("+ -", "- ")

    __repr__ = __str__
