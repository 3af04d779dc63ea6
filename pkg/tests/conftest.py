import pytest

from leo_offload.model import CloudSegment, InferenceRequest, SatelliteProfile, Scenario


def make_t1a(mu=0.5, lam=0.5, **sat_overrides):
    sat = dict(
        beta=0.02, zeta=100.0, p_max=10.0, p_idle=1.0, p_leak=0.5, p_off=2.0,
        rate_down=100.0, t_cyc=28800.0, t_con=360.0,
    )
    sat.update(sat_overrides)
    return Scenario(
        satellite=SatelliteProfile(**sat),
        cloud=CloudSegment(gamma=0.001, gamma_max=0.001, rate_gs_dc=1000.0),
        request=InferenceRequest(data_size=1000.0, alphas=(0.8, 0.4, 0.1)),
        mu=mu,
        lam=lam,
    )


@pytest.fixture
def t1a():
    return make_t1a()


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for n in sorted(RESULTS):
            terminalreporter.write_line(RESULTS[n])
