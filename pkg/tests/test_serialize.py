from fractions import Fraction

import pytest

from halflattice.assoc import BElement, OmegaModule, OmegaSpec, WeightModule
from halflattice.fock import charge_element, fock_element, module_state
from halflattice.lattice import LatticeConfig
from halflattice.laurent import LaurentRing
from halflattice.probes import rand_a_element, rand_velement
from halflattice.serialize import (
    SchemaError,
    a_element_from_data,
    a_element_to_data,
    b_element_from_data,
    b_element_to_data,
    laurent_from_data,
    laurent_to_data,
    module_element_from_data,
    module_element_to_data,
    omega_spec_from_data,
    omega_spec_to_data,
    parse_element,
    velement_from_data,
    velement_to_data,
    w_handle_from_data,
)

CFG = LatticeConfig(nu=2, k=1)


def test_parse_single_charge_term():
    doc = {"terms": [{"coeff": "1", "fock": [], "charge": [1, 0]}]}
    assert parse_element(doc, "velement", CFG) == charge_element(2, (1, 0))


def test_parse_fraction_coefficient_and_direction():
    # direction index 2 is the first d-direction when nu = 2
    doc = {"terms": [{"coeff": "1/2", "fock": [[2, 1]], "charge": [0, 0]}]}
    got = parse_element(doc, "velement", CFG)
    assert got == Fraction(1, 2) * fock_element(2, [(2, 1)])


def test_charge_length_mismatch_is_named():
    doc = {"terms": [{"coeff": "1", "fock": [], "charge": [1, 0, 0]}]}
    with pytest.raises(SchemaError) as err:
        parse_element(doc, "velement", CFG)
    assert "charge" in str(err.value)


def test_direction_out_of_range_is_named():
    doc = {"terms": [{"coeff": "1", "fock": [[7, 1]], "charge": [0, 0]}]}
    with pytest.raises(SchemaError) as err:
        parse_element(doc, "velement", CFG)
    assert "direction" in str(err.value)


def test_bad_rational():
    doc = {"terms": [{"coeff": "1/0", "fock": [], "charge": [0, 0]}]}
    with pytest.raises(SchemaError):
        parse_element(doc, "velement", CFG)


def test_velement_roundtrip():
    import random

    rng = random.Random(3)
    for _ in range(10):
        v = rand_velement(rng, CFG, n_terms=3, max_weight=4)
        assert velement_from_data(velement_to_data(v), CFG) == v


def test_laurent_roundtrip():
    ring = LaurentRing(2, 1)
    f = ring.monomial((-2, 1), Fraction(3, 4)) + ring.one()
    assert laurent_from_data(laurent_to_data(f), ring) == f


def test_laurent_cutoff_violation_reported():
    ring = LaurentRing(2, 1)
    with pytest.raises(SchemaError):
        laurent_from_data([{"coeff": "1", "exponents": [0, -1]}], ring)


def test_omega_spec_roundtrip():
    ring = LaurentRing(2, 1)
    spec = OmegaSpec(2, 2, (ring.variable(1) + 2,), (Fraction(5, 3),))
    assert omega_spec_from_data(omega_spec_to_data(spec), CFG) == spec


def test_omega_spec_validation():
    with pytest.raises(SchemaError):
        omega_spec_from_data({"mu": 9, "f": [], "a": []}, CFG)
    with pytest.raises(SchemaError):
        omega_spec_from_data({"mu": 1, "f": [], "a": ["0", "1"]}, CFG)


def test_a_element_roundtrip():
    import random

    rng = random.Random(5)
    for _ in range(10):
        a = rand_a_element(rng, CFG)
        assert a_element_from_data(a_element_to_data(a), CFG) == a


def test_b_element_roundtrip():
    x = BElement.d(1) * BElement.e((1, -1)) - 2 * BElement.e((0, 1))
    assert b_element_from_data(b_element_to_data(x), CFG) == x


def test_module_element_roundtrip_weight():
    handle = WeightModule(CFG, [Fraction(1, 2), 0])
    m = module_state(handle.base_label(), [(0, 2)], Fraction(2, 3))
    data = module_element_to_data(m, handle)
    assert module_element_from_data(data, CFG, handle) == m


def test_module_element_roundtrip_omega():
    ring = LaurentRing(2, 1)
    handle = OmegaModule(CFG, OmegaSpec(2, 2, (ring.variable(1),), (Fraction(2),)))
    m = module_state((-1, 2), [(3, 1)])
    data = module_element_to_data(m, handle)
    assert module_element_from_data(data, CFG, handle) == m


def test_module_element_invalid_label():
    handle = WeightModule(CFG, [Fraction(1, 2), 0])
    doc = {"terms": [{"coeff": "1", "fock": [], "w": ["0", "0"]}]}  # wrong coset
    with pytest.raises(SchemaError):
        module_element_from_data(doc, CFG, handle)


def test_w_handle_dispatch():
    w = w_handle_from_data({"kind": "weight", "lambda0": ["1/2", "0"]}, CFG)
    assert w.kind == "weight" and w.lam0 == (Fraction(1, 2), Fraction(0))
    o = w_handle_from_data(
        {"kind": "omega", "mu": 2, "f": [[{"coeff": "1", "exponents": [1, 0]}]], "a": ["2"]},
        CFG,
    )
    assert o.kind == "omega" and o.spec.mu == 2
    with pytest.raises(SchemaError):
        w_handle_from_data({"kind": "nope"}, CFG)


def test_unknown_kind():
    with pytest.raises(SchemaError):
        parse_element({}, "mystery", CFG)
