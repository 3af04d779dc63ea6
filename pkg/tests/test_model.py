from dataclasses import replace
from itertools import product

import pytest

from leo_offload.model import (
    OffloadDecision,
    ValidationError,
    decision_from_split,
    feasible_decisions,
    is_feasible,
    validate_scenario,
)


def test_valid_scenario_is_returned_unchanged(t1a):
    assert validate_scenario(t1a) is t1a


def test_gamma_cap(t1a):
    bad = replace(t1a, cloud=replace(t1a.cloud, gamma=0.002, gamma_max=0.001))
    with pytest.raises(ValidationError, match="gamma cap violated") as exc:
        validate_scenario(bad)
    assert exc.value.field == "cloud.gamma"


def test_empty_alphas(t1a):
    bad = replace(t1a, request=replace(t1a.request, alphas=()))
    with pytest.raises(ValidationError, match="K must be >= 1"):
        validate_scenario(bad)


@pytest.mark.parametrize(
    "mutate, field",
    [
        (lambda s: replace(s, mu=0.6, lam=0.5), "mu+lambda"),
        (lambda s: replace(s, mu=-0.1, lam=1.1), "mu"),
        (lambda s: replace(s, satellite=replace(s.satellite, t_con=28800.0)), "satellite.t_con"),
        (lambda s: replace(s, satellite=replace(s.satellite, beta=0.0)), "satellite.beta"),
        (lambda s: replace(s, satellite=replace(s.satellite, rate_down=-5.0)), "satellite.rate_down"),
        (lambda s: replace(s, cloud=replace(s.cloud, rate_gs_dc=0.0)), "cloud.rate_gs_dc"),
        (lambda s: replace(s, request=replace(s.request, data_size=0.0)), "request.data_size"),
        (lambda s: replace(s, request=replace(s.request, alphas=(0.5, 1.5))), "request.alphas[2]"),
        (lambda s: replace(s, request=replace(s.request, alphas=(0.0,))), "request.alphas[1]"),
    ],
)
def test_each_invariant_names_its_field(t1a, mutate, field):
    with pytest.raises(ValidationError) as exc:
        validate_scenario(mutate(t1a))
    assert exc.value.field == field


def test_weight_sum_tolerance(t1a):
    validate_scenario(replace(t1a, mu=0.5 + 5e-13, lam=0.5))
    with pytest.raises(ValidationError):
        validate_scenario(replace(t1a, mu=0.5 + 1e-11, lam=0.5))


@pytest.mark.parametrize(
    "split, K, expected",
    [(0, 3, (0, 0, 0)), (3, 3, (1, 1, 1)), (1, 3, (1, 0, 0))],
)
def test_decision_from_split(split, K, expected):
    assert decision_from_split(split, K).h == expected


@pytest.mark.parametrize("split", [-1, 4])
def test_decision_from_split_range(split):
    with pytest.raises(ValueError):
        decision_from_split(split, 3)


@pytest.mark.parametrize(
    "h, ok",
    [((1, 1, 0), True), ((1, 0, 1), False), ((0, 0, 0), True), ((0, 1), False), ((1, 2), False), ((), False)],
)
def test_is_feasible(h, ok):
    assert is_feasible(h) is ok


def test_is_feasible_checks_length():
    assert not is_feasible((1, 0), n_layers=3)


@pytest.mark.parametrize("K", range(1, 17))
def test_prefix_splits_are_exactly_the_feasible_set(K):
    feasible = {h for h in product((0, 1), repeat=K) if is_feasible(h)}
    assert feasible == {d.h for d in feasible_decisions(K)}


@pytest.mark.parametrize("K", [1, 5, 24])
def test_split_roundtrip(K):
    seen = set()
    for s in range(K + 1):
        d = decision_from_split(s, K)
        assert d.split_index == s
        seen.add(d.h)
    assert len(seen) == K + 1


def test_offload_layer():
    assert OffloadDecision((0, 0, 0)).offload_layer() == 1
    assert OffloadDecision((1, 0, 0)).offload_layer() == 2
    assert OffloadDecision((1, 1, 1)).offload_layer() is None
