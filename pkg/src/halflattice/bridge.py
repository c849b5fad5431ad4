"""Fock modules over a coefficient module, and the inverse vacuum functor.

``build_module_context`` attaches a weight vector with rational d-coordinates
to a coefficient module, producing the operator context under which the Fock
module M(1) tensor W carries the vertex action.  The converse direction
starts from the vacuum space (states killed by every positive mode), dresses
the lattice operators into z-independent transport operators, and reads the
straightened-algebra action back off the vacuum: degree operators act by
their zero modes and charge translations by the transport operators.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

from .fock import ModuleElement, charge_element, fock_weight, fock_word
from .identities import ActionCache
from .lattice import LatticeConfig, LatticeVector
from .linalg import nullspace
from .vertex import (
    OperatorContext,
    _exp_coeff,
    _partitions,
    apply_heisenberg_mode,
    module_operator_context,
    truncation_bound,
    y_coefficient,
)


@dataclass
class ModuleContext:
    """A built Fock module: operator context plus suite defaults."""

    ctx: OperatorContext
    degree_bound: int = 4
    mode_window: int = 3

    @property
    def cfg(self) -> LatticeConfig:
        return self.ctx.cfg

    @property
    def lam(self) -> LatticeVector:
        return self.ctx.lam

    @property
    def handle(self):
        return self.ctx.handle


def build_module_context(
    cfg: LatticeConfig,
    lam: LatticeVector,
    handle,
    degree_bound: int = 4,
    mode_window: int = 3,
) -> ModuleContext:
    """Validate the weight vector and wrap the coefficient module.

    The weight must have zero c-coordinates and pair integrally with every
    charge, which pins its d-coordinates to multiples of 1/k.
    """
    ctx = module_operator_context(cfg, lam, handle)
    return ModuleContext(ctx, degree_bound=degree_bound, mode_window=mode_window)


# -- vacuum space ---------------------------------------------------------------------


def _fock_level(cfg: LatticeConfig, weight: int) -> list:
    """All Fock monomials of the given weight, canonically ordered."""
    ndirs = cfg.ndirs

    def gen(remaining: int, max_mode: int):
        if remaining == 0:
            yield ()
            return
        for mode in range(min(remaining, max_mode), 0, -1):
            for dir_ in range(ndirs):
                for rest in gen(remaining - mode, mode):
                    if rest and (rest[0][1] == mode and rest[0][0] < dir_):
                        continue
                    yield ((dir_, mode),) + rest

    seen = sorted(set(gen(weight, weight)))
    return seen


def vacuum_basis(
    mctx: ModuleContext,
    degree_bound: int,
    labels: Sequence,
) -> list[ModuleElement]:
    """Exact solutions of the positive-mode annihilation conditions.

    The conditions are homogeneous in the Fock weight and do not touch the
    coefficient-module labels, so each weight level is solved once on the
    pure Fock space and tensored with the label slice.  For the built
    modules only the weight-zero level survives, so the result is the slice
    itself under the unit Fock factor.
    """
    cfg = mctx.cfg
    ctx = mctx.ctx
    fock_solutions: list[dict] = [{(): Fraction(1)}]  # level 0
    for level in range(1, degree_bound + 1):
        basis = _fock_level(cfg, level)
        index = {word: i for i, word in enumerate(basis)}
        rows = []
        for n in range(1, level + 1):
            lower = {word: i for i, word in enumerate(_fock_level(cfg, level - n))}
            for dir_ in range(cfg.ndirs):
                h = cfg.dir_vector(dir_)
                table = [[Fraction(0)] * len(basis) for _ in lower]
                touched = False
                for word, col in index.items():
                    for pos, (d2, m2) in enumerate(word):
                        if m2 != n:
                            continue
                        pair = cfg.pairing(h, cfg.dir_vector(d2))
                        if pair:
                            rest = word[:pos] + word[pos + 1 :]
                            table[lower[rest]][col] += n * pair
                            touched = True
                if touched:
                    rows.extend(table)
        for vec in nullspace(rows, len(basis)):
            fock_solutions.append(
                {basis[i]: c for i, c in enumerate(vec) if c}
            )
    out = []
    for label in labels:
        checked = mctx.handle.validate_label(label)
        for sol in fock_solutions:
            out.append(ModuleElement({(word, checked): c for word, c in sol.items()}))
    return out


def is_vacuum_vector(w: ModuleElement, mctx: ModuleContext) -> bool:
    """True when every positive mode annihilates the state."""
    cfg = mctx.cfg
    top = max((fock_weight(word) for (word, _) in w.terms), default=0)
    for n in range(1, top + 1):
        for dir_ in range(cfg.ndirs):
            if not apply_heisenberg_mode(cfg.dir_vector(dir_), n, w, mctx.ctx).is_zero():
                return False
    return True


# -- transport operators -----------------------------------------------------------------


def z_operator(
    alpha: Sequence[int],
    n: int,
    w: ModuleElement,
    mctx: ModuleContext,
    cache: Optional[ActionCache] = None,
) -> ModuleElement:
    """Coefficient of the dressed lattice operator at index n.

    The dressing multiplies the field of e^alpha on the left by
    exp(-sum_{m>0} alpha(-m) z^m / m) and on the right by
    exp(-sum_{m>0} alpha(m) z^{-m} / m).  On a vacuum state the right factor
    is the identity; in general it contributes finitely many annihilation
    terms bounded by the state's Fock weight.  Either way the coefficient at
    z^(-n-1) is a finite double sum, cut off by the action truncation.
    """
    cfg = mctx.cfg
    ctx = mctx.ctx
    charge = tuple(int(m) for m in alpha)
    e_alpha = charge_element(cfg.nu, charge)
    cache = cache or ActionCache(ctx)
    out = ctx.zero_element()
    top = max((fock_weight(word) for (word, _) in w.terms), default=0)
    if not any(charge):
        top = 0
    for b in range(top + 1):
        for pplus in _partitions(b):
            coeff = _exp_coeff(pplus, 1)
            states = {key: coeff * c for key, c in w.terms.items()}
            for part, mult in pplus:
                for _ in range(mult):
                    states = _contract_charge(cfg, states, charge, part)
                    if not states:
                        break
            if not states:
                continue
            annihilated = ctx.element(states)
            bound = truncation_bound(e_alpha, annihilated, ctx)
            a = 0
            while n + a - b <= bound:
                inner = cache.act(e_alpha, n + a - b, annihilated)
                if not inner.is_zero():
                    for pminus in _partitions(a):
                        dressed = {
                            key: _exp_coeff(pminus, -1) * c
                            for key, c in inner.terms.items()
                        }
                        for part, mult in pminus:
                            for _ in range(mult):
                                new: dict = {}
                                for (word, label), c in dressed.items():
                                    for i, m_i in enumerate(charge):
                                        if m_i:
                                            key = (fock_word(word + ((i, part),)), label)
                                            val = new.get(key, 0) + c * m_i
                                            if val:
                                                new[key] = val
                                            else:
                                                new.pop(key, None)
                                dressed = new
                        out = out + ctx.element(dressed)
                a += 1
    return out


def _contract_charge(cfg, states: dict, charge: tuple, mode: int) -> dict:
    out: dict = {}
    for (word, label), coeff in states.items():
        for pos, (d2, m2) in enumerate(word):
            if m2 != mode or d2 < cfg.nu:
                continue
            m_i = charge[d2 - cfg.nu]
            if m_i:
                key = (word[:pos] + word[pos + 1 :], label)
                val = out.get(key, 0) + coeff * mode * cfg.k * m_i
                if val:
                    out[key] = val
                else:
                    out.pop(key, None)
    return out


def _all_vacuum(w: ModuleElement) -> bool:
    return all(not word for (word, _label) in w.terms)


class MixedSectorError(ValueError):
    """A state mixes distinct zero-mode eigenvalue sectors."""


def charge_sector(direction, w: ModuleElement, mctx: ModuleContext) -> Fraction:
    """Eigenvalue of the zero mode of a lattice vector on w.

    Accepts a charge tuple or a general lattice vector; raises when the
    state is not an eigenvector (it mixes sectors).
    """
    cfg = mctx.cfg
    vec = direction if isinstance(direction, LatticeVector) else cfg.from_charge(direction)
    if w.is_zero():
        raise ValueError("the zero state has no sector")
    image = apply_heisenberg_mode(vec, 0, w, mctx.ctx)
    key, coeff = next(iter(w.terms.items()))
    ratio = image.terms.get(key, Fraction(0)) / coeff
    if image != ratio * w:
        raise MixedSectorError(f"state mixes zero-mode sectors of {vec}")
    return ratio


def t_operator(alpha: Sequence[int], w: ModuleElement, mctx: ModuleContext) -> ModuleElement:
    """The z-independent transport operator on a vacuum weight sector.

    Strips the definite power z^(alpha, sector weight) off the dressed
    operator, leaving a single coefficient.
    """
    shift = charge_sector(alpha, w, mctx)
    if shift.denominator != 1:
        raise MixedSectorError(f"sector pairing {shift} is not an integer")
    return z_operator(alpha, -1 - int(shift), w, mctx)


# -- recovering the coefficient module ---------------------------------------------------


@dataclass
class RecoveryReport:
    """Recovered straightened-algebra action on the vacuum slice."""

    ok: bool
    roundtrip_ok: bool
    relations_ok: bool
    d_table: dict = field(default_factory=dict)
    e_table: dict = field(default_factory=dict)
    mismatches: list = field(default_factory=list)

    def __bool__(self) -> bool:
        return self.ok


def recover_a_module(mctx: ModuleContext, labels: Sequence) -> RecoveryReport:
    """Tabulate zero modes and transport operators on the vacuum slice.

    Verifies that the tabulated action satisfies the straightening relations
    and that it coincides with the original coefficient-module action under
    the identification of the slice with the vacuum states.
    """
    cfg = mctx.cfg
    handle = mctx.handle
    report = RecoveryReport(ok=True, roundtrip_ok=True, relations_ok=True)
    charges = []
    for i in range(cfg.nu):
        plus = [0] * cfg.nu
        plus[i] = 1
        charges.append(tuple(plus))
        plus[i] = -1
        charges.append(tuple(plus))
    vac_states = {label: mctx.ctx.state_of_label(handle.validate_label(label)) for label in labels}

    def as_module_element(moves) -> ModuleElement:
        return ModuleElement({((), lab): q for q, lab in moves})

    for label, state in vac_states.items():
        for j in range(1, cfg.nu + 1):
            got = apply_heisenberg_mode(cfg.d_basis(j), 0, state, mctx.ctx)
            want = as_module_element(
                handle.d_action(tuple(Fraction(int(i == j - 1)) for i in range(cfg.nu)), label)
            )
            report.d_table[(j, label)] = got
            if got != want:
                report.roundtrip_ok = False
                report.mismatches.append(("d", j, label, got, want))
        for charge in charges:
            got = t_operator(charge, state, mctx)
            want = as_module_element(handle.e_action(charge, label))
            report.e_table[(charge, label)] = got
            if got != want:
                report.roundtrip_ok = False
                report.mismatches.append(("e", charge, label, got, want))

    def t_or_zero(charge, state):
        if state.is_zero():
            return mctx.ctx.zero_element()
        return t_operator(charge, state, mctx)

    # straightening relations on the recovered action
    for label, state in vac_states.items():
        for j in range(1, cfg.nu + 1):
            d_j = cfg.d_basis(j)
            for charge in charges:
                t_state = t_operator(charge, state, mctx)
                lhs = apply_heisenberg_mode(d_j, 0, t_state, mctx.ctx)
                rhs = t_or_zero(charge, apply_heisenberg_mode(d_j, 0, state, mctx.ctx)) \
                    + cfg.pairing(d_j, cfg.from_charge(charge)) * t_state
                if lhs != rhs:
                    report.relations_ok = False
                    report.mismatches.append(("commutator", j, charge, label))
        for c1 in charges:
            for c2 in charges:
                lhs = t_or_zero(c1, t_operator(c2, state, mctx))
                total = tuple(a + b for a, b in zip(c1, c2))
                rhs = t_operator(total, state, mctx)
                if lhs != rhs:
                    report.relations_ok = False
                    report.mismatches.append(("composition", c1, c2, label))
    report.ok = report.roundtrip_ok and report.relations_ok
    return report
