import textwrap

import pytest

from nsf_rarefaction.core.enums import WaveFamily
from nsf_rarefaction.domain.thermo import EosParams, FlowState
from nsf_rarefaction.domain.wave import RarefactionWave
from nsf_rarefaction.infrastructure.persistence import parse_config_text


@pytest.fixture
def params() -> EosParams:
    """Boyle-Mariotte junction at Ztilde = 1, no radiation, no dissipation."""
    return EosParams(Ztilde=1.0)


@pytest.fixture
def left_state() -> FlowState:
    return FlowState(rho=1.0, theta=1.0, u=1.0)


@pytest.fixture
def default_wave(left_state) -> RarefactionWave:
    """The reference 1-rarefaction from (1, 1, 1) to rho_R = 0.5 on T = 0.5."""
    return RarefactionWave.from_left_state(left_state, WaveFamily.FIRST, 0.5, T=0.5)


@pytest.fixture
def minimal_ini() -> str:
    return textwrap.dedent(
        """\
        # reference wave
        [wave]
        rho_R = 0.5
        """
    )


@pytest.fixture
def small_ini() -> str:
    """A sweep small enough for the default test run."""
    return textwrap.dedent(
        """\
        [wave]
        rho_L = 1.0
        theta_L = 1.0
        u_L = 1.0
        rho_R = 0.5

        [grid]
        N = 64
        T = 0.1

        [sweep]
        eps = 0.2, 0.1, 0.05
        """
    )


@pytest.fixture
def small_config(small_ini):
    return parse_config_text(small_ini)


@pytest.fixture
def config_file(tmp_path, small_ini):
    """small_ini on disk, writing its outputs below tmp_path."""
    path = tmp_path / "sweep.ini"
    path.write_text(small_ini + f"\n[output]\ndirectory = {tmp_path / 'results'}\n", encoding="utf-8")
    return path
