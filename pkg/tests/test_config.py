import textwrap

import pytest

from nsf_rarefaction.config import get_settings
from nsf_rarefaction.core.enums import InitMode, RadiationRule, Reconstruction, WaveFamily
from nsf_rarefaction.domain.shared.exceptions import ConfigurationError
from nsf_rarefaction.infrastructure.persistence import parse_config, parse_config_text
from nsf_rarefaction.schemas import SweepConfig

pytestmark = pytest.mark.unit


def _ini(text: str) -> str:
    return textwrap.dedent(text)


@pytest.fixture
def fresh_settings():
    get_settings.cache_clear()
    yield
    get_settings.cache_clear()


def test_minimal_config_defaults(minimal_ini):
    config = parse_config_text(minimal_ini)
    assert config.wave.rho_L == 1.0 and config.wave.u_L == 1.0
    assert config.wave_family is WaveFamily.FIRST
    assert config.grid.N == 1600
    assert config.grid.T == 0.5
    assert config.grid.reconstruction is Reconstruction.MUSCL
    assert config.sweep.a_rule is RadiationRule.SQUARE
    assert config.sweep.init_mode is InitMode.MOLLIFIED_RIEMANN
    assert config.sweep.probe_times == pytest.approx([0.1, 0.2, 0.3, 0.4])


def test_settings_feed_the_defaults(monkeypatch, minimal_ini, fresh_settings):
    monkeypatch.setenv("NSF_CFL", "0.3")
    monkeypatch.setenv("NSF_OUTPUT_DIR", "elsewhere")
    config = parse_config_text(minimal_ini)
    assert config.grid.cfl == 0.3
    assert config.output.directory == "elsewhere"


def test_domain_objects(small_config):
    wave = small_config.build_wave()
    assert wave.ends.right.rho == pytest.approx(0.5)
    assert wave.T == 0.1
    params = small_config.eos_params(0.1)
    assert params.Ztilde == pytest.approx(1.0)
    assert params.a_eps == pytest.approx(0.01)
    assert params.eps == 0.1


def test_eps_must_decrease():
    text = _ini(
        """\
        [wave]
        rho_R = 0.5

        [sweep]
        eps = 0.1, 0.2
        """
    )
    with pytest.raises(ConfigurationError) as info:
        parse_config_text(text)
    assert info.value.key == "sweep.eps"
    assert info.value.line == 5
    assert "0.1 followed by 0.2" in info.value.constraint


def test_unknown_key_is_located():
    text = _ini(
        """\
        [wave]
        rho_R = 0.5
        [grid]
        N = 64
        steps = 10
        """
    )
    with pytest.raises(ConfigurationError) as info:
        parse_config_text(text)
    assert info.value.key == "grid.steps"
    assert info.value.constraint == "unknown key"
    assert info.value.line == 5
    assert "line 5" in str(info.value)


def test_unknown_section_is_located():
    with pytest.raises(ConfigurationError) as info:
        parse_config_text("[wave]\nrho_R = 0.5\n\n[solver]\nN = 3\n")
    assert info.value.key == "solver"
    assert info.value.line == 4


def test_missing_right_density_points_at_section():
    with pytest.raises(ConfigurationError) as info:
        parse_config_text("# comment\n[wave]\nrho_L = 1.0\n")
    assert info.value.key == "wave.rho_R"
    assert info.value.line == 2


def test_missing_wave_section():
    with pytest.raises(ConfigurationError) as info:
        parse_config_text("[grid]\nN = 64\n")
    assert info.value.key == "wave"


def test_syntax_error():
    with pytest.raises(ConfigurationError) as info:
        parse_config_text("rho_R = 0.5\n")
    assert info.value.key == "<syntax>"


@pytest.mark.parametrize(
    "sweep, key",
    [
        ("probe_times = 0.1, 0.7", "sweep.probe_times"),
        ("probe_times = 0.3, 0.2", "sweep.probe_times"),
        ("init_mode = exact-wave", "sweep.t0"),
        ("init_mode = exact-wave\nt0 = 0.15\nprobe_times = 0.1, 0.2", "sweep.probe_times"),
        ("eps = 0.1, -0.05", "sweep.eps"),
        ("a_rule = quartic", "sweep.a_rule"),
    ],
)
def test_invalid_sweep_sections(sweep, key):
    with pytest.raises(ConfigurationError) as info:
        parse_config_text(f"[wave]\nrho_R = 0.5\n\n[sweep]\n{sweep}\n")
    assert info.value.key == key
    assert info.value.line is not None


def test_compressive_wave_is_rejected():
    with pytest.raises(ConfigurationError) as info:
        parse_config_text("[wave]\nrho_R = 2.0\n")
    assert info.value.key == "wave.rho_R"


def test_third_family_is_reflected():
    config = parse_config_text("[wave]\nu_L = -2.0\nrho_R = 2.0\nfamily = 3\n")
    wave = config.build_wave()
    assert wave.family is WaveFamily.FIRST
    assert wave.ends.left.u > 0


def test_to_ini_round_trip(small_config):
    assert parse_config_text(small_config.to_ini()) == small_config


def test_exact_wave_round_trip():
    config = parse_config_text(
        "[wave]\nrho_R = 0.5\n[sweep]\ninit_mode = exact-wave\nt0 = 0.05\nwidth = 0.02\n"
    )
    assert config.sweep.init_mode is InitMode.EXACT_WAVE
    assert parse_config_text(config.to_ini()) == config


def test_unreadable_file(tmp_path):
    with pytest.raises(ConfigurationError) as info:
        parse_config(tmp_path / "missing.ini")
    assert "cannot read" in info.value.constraint


def test_parse_config_file(config_file, tmp_path):
    config = parse_config(config_file)
    assert config.output.directory == str(tmp_path / "results")
    assert config.sweep.eps == [0.2, 0.1, 0.05]


def test_describe_defaults():
    rows = {key: (default, description) for key, default, description in SweepConfig.describe_defaults()}
    assert rows["wave.rho_R"][0] == "required"
    assert rows["grid.N"][0] == "1600"
    assert rows["grid.reconstruction"][0] == "muscl"
    assert rows["sweep.a_rule"][0] == "square"
    assert rows["sweep.probe_times"][0] == "None"
    assert rows["grid.cfl"][1] == "CFL number"
