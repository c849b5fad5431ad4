"""Fock monomials and the states they span.

A Fock monomial is a finite multiset of creation factors (direction, mode)
applied to a degree-zero slot, where the direction indexes the lattice basis
(0..nu-1 for c_1..c_nu, nu..2nu-1 for d_1..d_nu) and the mode is a positive
integer.  Its canonical form sorts factors by descending mode, then by
direction, and its weight is the sum of the modes.

A ``VElement`` is a rational linear combination of (Fock monomial, charge)
pairs with charges in the integer c-span; a ``ModuleElement`` carries an
opaque coefficient-module label in place of the charge.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping

FockWord = tuple  # tuple[tuple[int, int], ...]


def fock_word(factors: Iterable) -> FockWord:
    """Canonical Fock monomial from (direction, mode) pairs."""
    out = []
    for dir_, mode in factors:
        dir_, mode = int(dir_), int(mode)
        if dir_ < 0:
            raise ValueError(f"direction index {dir_} must be nonnegative")
        if mode < 1:
            raise ValueError(f"creation mode {mode} must be a positive integer")
        out.append((dir_, mode))
    return tuple(sorted(out, key=lambda f: (-f[1], f[0])))


def fock_weight(word: FockWord) -> int:
    return sum(mode for _, mode in word)


class _Combination:
    """Finitely supported rational combination over hashable term keys."""

    __slots__ = ("terms", "_key")

    def __init__(self, terms: Mapping):
        self.terms = {t: Fraction(c) for t, c in terms.items() if c}
        self._key = None

    def _make(self, terms: Mapping):
        return type(self)(terms)

    def _check(self, other) -> None:
        if type(other) is not type(self):
            raise TypeError(f"cannot combine {type(self).__name__} with {type(other).__name__}")

    def __add__(self, other):
        self._check(other)
        data = dict(self.terms)
        for t, c in other.terms.items():
            new = data.get(t, 0) + c
            if new:
                data[t] = new
            else:
                data.pop(t, None)
        return self._make(data)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return self._make({t: -c for t, c in self.terms.items()})

    def __mul__(self, scalar):
        q = Fraction(scalar)
        return self._make({t: q * c for t, c in self.terms.items()})

    __rmul__ = __mul__

    def __bool__(self) -> bool:
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def key(self):
        """Hashable canonical form, usable as a cache key."""
        if self._key is None:
            self._key = (type(self).__name__, tuple(sorted(self.terms.items())))
        return self._key

    def __eq__(self, other) -> bool:
        if type(other) is not type(self):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self) -> int:
        return hash(self.key())

    def __len__(self) -> int:
        return len(self.terms)


class VElement(_Combination):
    """Element of the half-lattice algebra: Fock part tensor a charge."""

    __slots__ = ("nu",)

    def __init__(self, nu: int, terms: Mapping):
        self.nu = int(nu)
        checked = {}
        for (word, charge), coeff in terms.items():
            word = tuple(word)
            charge = tuple(int(m) for m in charge)
            if len(charge) != self.nu:
                raise ValueError(f"charge {charge} must have {self.nu} entries")
            for dir_, _ in word:
                if dir_ >= 2 * self.nu:
                    raise ValueError(f"direction index {dir_} out of range for nu={self.nu}")
            checked[(word, charge)] = coeff
        super().__init__(checked)

    def _make(self, terms: Mapping) -> "VElement":
        return VElement(self.nu, terms)

    def _check(self, other) -> None:
        super()._check(other)
        if other.nu != self.nu:
            raise ValueError(f"rank mismatch: nu={self.nu} vs nu={other.nu}")

    def key(self):
        if self._key is None:
            self._key = ("V", self.nu, tuple(sorted(self.terms.items())))
        return self._key

    def __str__(self) -> str:
        return _format_terms(self.terms, self.nu, _charge_str)

    __repr__ = __str__


class ModuleElement(_Combination):
    """Fock part tensor an opaque coefficient-module basis label."""

    __slots__ = ()

    def __str__(self) -> str:
        return _format_terms(self.terms, None, lambda lab: f"w[{lab}]")

    __repr__ = __str__


# -- constructors ---------------------------------------------------------------


def vacuum(nu: int) -> VElement:
    """The degree-zero generator: empty Fock part at charge zero."""
    return VElement(nu, {((), (0,) * nu): Fraction(1)})


def charge_element(nu: int, charge: Iterable[int], coeff=1) -> VElement:
    return VElement(nu, {((), tuple(int(m) for m in charge)): Fraction(coeff)})


def fock_element(nu: int, factors: Iterable, charge: Iterable[int] = None, coeff=1) -> VElement:
    if charge is None:
        charge = (0,) * nu
    word = fock_word(factors)
    return VElement(nu, {(word, tuple(int(m) for m in charge)): Fraction(coeff)})


def module_state(label, factors: Iterable = (), coeff=1) -> ModuleElement:
    return ModuleElement({(fock_word(factors), label): Fraction(coeff)})


# -- grading ----------------------------------------------------------------------


def weight_of(v: VElement):
    """Common weight of a homogeneous element, else None.

    Charges contribute nothing since the charge lattice is isotropic, so the
    weight of each term is the weight of its Fock part.  The zero element is
    homogeneous of weight zero by convention.
    """
    weights = {fock_weight(word) for (word, _charge) in v.terms}
    if not weights:
        return 0
    if len(weights) > 1:
        return None
    return weights.pop()


def homogeneous_components(v: VElement) -> dict[int, VElement]:
    buckets: dict[int, dict] = {}
    for (word, charge), coeff in v.terms.items():
        buckets.setdefault(fock_weight(word), {})[(word, charge)] = coeff
    return {n: VElement(v.nu, data) for n, data in sorted(buckets.items())}


# -- printing ----------------------------------------------------------------------


def _charge_str(charge: tuple) -> str:
    if all(m == 0 for m in charge):
        return "1"
    parts = []
    for i, m in enumerate(charge):
        if m == 1:
            parts.append(f"c{i + 1}")
        elif m:
            parts.append(f"{m}c{i + 1}")
    return "e^{" + "+".join(parts).replace("+-", "-") + "}"


def _fock_str(word: FockWord, nu) -> str:
    names = []
    for dir_, mode in word:
        if nu is None:
            base = f"h{dir_}"
        else:
            base = f"c{dir_ + 1}" if dir_ < nu else f"d{dir_ - nu + 1}"
        names.append(f"{base}(-{mode})")
    return "".join(names)


def _format_terms(terms, nu, label_fmt) -> str:
    if not terms:
        return "0"
    chunks = []
    for (word, label), coeff in sorted(terms.items(), key=lambda kv: repr(kv[0])):
        body = _fock_str(word, nu)
        lab = label_fmt(label)
        piece = body + ("" if lab == "1" and body else lab)
        if not piece:
            piece = "1"
        if coeff == 1:
            chunks.append(piece)
        elif coeff == -1:
            chunks.append("-" + piece)
        else:
            chunks.append(f"{coeff}*{piece}")
    return " + ".join(chunks).replace("+ -", "- ")
