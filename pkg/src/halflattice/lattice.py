"""Rank-2*nu hyperbolic lattice with pairing (c_i, d_j) = k*delta_ij.

The ambient rational space has basis c_1..c_nu, d_1..d_nu.  Both families
are isotropic: (c_i, c_j) = (d_i, d_j) = 0, and the only nonzero pairings
are (c_i, d_j) = k*delta_ij for a fixed nonzero integer k.  Vectors carry
exact rational coordinates; the charge lattice is the integer span of the
c_i and the dual directions are spanned by the d_i.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence


def _coords(values: Iterable, nu: int, what: str) -> tuple[Fraction, ...]:
    out = tuple(Fraction(v) for v in values)
    if len(out) != nu:
        raise ValueError(f"{what} must have {nu} coordinates, got {len(out)}")
    return out


@dataclass(frozen=True)
class LatticeVector:
    """Vector sum(c[i]*c_{i+1}) + sum(d[i]*d_{i+1}) with rational coords."""

    c: tuple[Fraction, ...]
    d: tuple[Fraction, ...]

    def __post_init__(self):
        if len(self.c) != len(self.d):
            raise ValueError("c- and d-coordinate lists must have equal length")

    @property
    def nu(self) -> int:
        return len(self.c)

    def __add__(self, other: "LatticeVector") -> "LatticeVector":
        self._check(other)
        return LatticeVector(
            tuple(a + b for a, b in zip(self.c, other.c)),
            tuple(a + b for a, b in zip(self.d, other.d)),
        )

    def __sub__(self, other: "LatticeVector") -> "LatticeVector":
        return self + (-other)

    def __neg__(self) -> "LatticeVector":
        return LatticeVector(tuple(-a for a in self.c), tuple(-a for a in self.d))

    def __rmul__(self, scalar) -> "LatticeVector":
        q = Fraction(scalar)
        return LatticeVector(tuple(q * a for a in self.c), tuple(q * a for a in self.d))

    __mul__ = __rmul__

    def is_zero(self) -> bool:
        return all(a == 0 for a in self.c) and all(a == 0 for a in self.d)

    def in_charge_lattice(self) -> bool:
        """True when the vector lies in the integer span of the c_i."""
        return all(a.denominator == 1 for a in self.c) and all(a == 0 for a in self.d)

    def in_dual_lattice(self) -> bool:
        """True when the vector lies in the integer span of the d_i."""
        return all(a == 0 for a in self.c) and all(a.denominator == 1 for a in self.d)

    def in_fractional_dual(self, k: int) -> bool:
        """True when the vector lies in (1/k) times the d-span."""
        return all(a == 0 for a in self.c) and all(
            (k * a).denominator == 1 for a in self.d
        )

    def charge(self) -> tuple[int, ...]:
        """Integer c-coordinates; only valid on charge-lattice vectors."""
        if not self.in_charge_lattice():
            raise ValueError(f"{self} is not a charge-lattice vector")
        return tuple(int(a) for a in self.c)

    def _check(self, other: "LatticeVector") -> None:
        if self.nu != other.nu:
            raise ValueError(f"rank mismatch: {self.nu} vs {other.nu}")

    def __str__(self) -> str:
        parts = []
        for i, a in enumerate(self.c):
            if a:
                parts.append(f"{a}*c{i + 1}")
        for i, a in enumerate(self.d):
            if a:
                parts.append(f"{a}*d{i + 1}")
        return " + ".join(parts) if parts else "0"


@dataclass(frozen=True)
class LatticeConfig:
    """Rank parameter nu and pairing constant k of the hyperbolic lattice."""

    nu: int
    k: int

    def __post_init__(self):
        if self.nu < 1:
            raise ValueError("nu must be a positive integer")
        if self.k == 0:
            raise ValueError("k must be a nonzero integer")

    # -- vector constructors -------------------------------------------------

    def vector(self, c: Sequence = (), d: Sequence = ()) -> LatticeVector:
        cc = list(c) + [0] * (self.nu - len(list(c)))
        dd = list(d) + [0] * (self.nu - len(list(d)))
        return LatticeVector(_coords(cc, self.nu, "c"), _coords(dd, self.nu, "d"))

    def zero(self) -> LatticeVector:
        return self.vector()

    def c_basis(self, i: int) -> LatticeVector:
        """Basis vector c_i, 1-based."""
        self._check_index(i)
        return self.vector(c=[int(j == i - 1) for j in range(self.nu)])

    def d_basis(self, i: int) -> LatticeVector:
        """Basis vector d_i, 1-based."""
        self._check_index(i)
        return self.vector(d=[int(j == i - 1) for j in range(self.nu)])

    def from_charge(self, charge: Sequence[int]) -> LatticeVector:
        charge = tuple(int(m) for m in charge)
        if len(charge) != self.nu:
            raise ValueError(f"charge must have {self.nu} entries")
        return self.vector(c=charge)

    # -- direction indexing, shared with the Fock layer ----------------------
    # Directions 0..nu-1 are c_1..c_nu and nu..2nu-1 are d_1..d_nu.

    @property
    def ndirs(self) -> int:
        return 2 * self.nu

    def dir_vector(self, idx: int) -> LatticeVector:
        if not 0 <= idx < self.ndirs:
            raise ValueError(f"direction index {idx} out of range 0..{self.ndirs - 1}")
        if idx < self.nu:
            return self.c_basis(idx + 1)
        return self.d_basis(idx - self.nu + 1)

    def dir_name(self, idx: int) -> str:
        if idx < self.nu:
            return f"c{idx + 1}"
        return f"d{idx - self.nu + 1}"

    # -- the bilinear form ----------------------------------------------------

    def pairing(self, u: LatticeVector, v: LatticeVector) -> Fraction:
        """Bilinear extension of (c_i, d_j) = k*delta_ij."""
        if u.nu != self.nu or v.nu != self.nu:
            raise ValueError(
                f"vector rank mismatch: pairing on rank {self.nu} lattice "
                f"got ranks {u.nu} and {v.nu}"
            )
        total = Fraction(0)
        for a, b in zip(u.c, v.d):
            total += a * b
        for a, b in zip(u.d, v.c):
            total += a * b
        return self.k * total

    def dir_pairing(self, i: int, j: int) -> int:
        """Pairing of two direction indices; k on (c_i, d_i) pairs, else 0."""
        if i > j:
            i, j = j, i
        if i < self.nu <= j and j - self.nu == i:
            return self.k
        return 0

    def _check_index(self, i: int) -> None:
        if not 1 <= i <= self.nu:
            raise ValueError(f"basis index {i} out of range 1..{self.nu}")
