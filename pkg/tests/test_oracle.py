"""Free bosonic oscillator model as an independent check of the even sector."""

from confal.elements import Ambient
from confal.oracle import (apply_oscillator, crosscheck_even_sector,
                           oracle_partial_check, quadratic_state,
                           state_to_element)


def test_even_sector_matches_oscillator_model():
    report = crosscheck_even_sector(1, 2)
    assert report.ok
    assert report.checked > 0
    assert not report.counterexamples


def test_derivation_matches_oscillator_model():
    report = oracle_partial_check(1, 2)
    assert report.ok
    assert report.checked > 0


def test_oscillators_commute_in_distinct_species():
    state = quadratic_state(1, 0, 1, 0)
    a = apply_oscillator(state, 0, 1, 1)
    b = apply_oscillator(state, 1, 1, 1)
    ab = apply_oscillator(a, 1, 1, 1)
    ba = apply_oscillator(b, 0, 1, 1)
    assert ab == ba


def test_quadratic_state_maps_back_to_a_symbol():
    amb = Ambient(1)
    elem, vacuum = state_to_element(amb, quadratic_state(1, 2, 1, 1))
    assert not elem.is_zero()
    assert vacuum == 0


def test_report_serialization_shape():
    payload = crosscheck_even_sector(1, 1).as_dict()
    assert set(payload) >= {"ok", "checked"}
    assert payload["ok"] is True
