"""Run configuration for dirac-gauge-lab.

A run is described by a YAML file with the sections ``lattice``, ``state``,
``chi``, ``scheme``, ``sweep``, ``refinement``, ``output``, ``seed`` and
``verify``. Missing keys take the defaults of :meth:`RunConfig.default`;
unknown keys are schema violations.
"""

import os
from dataclasses import asdict, dataclass, field, replace
from enum import Enum
from typing import Any

import numpy as np
import yaml

from .counterexample.sweep import build_chi_from_current
from .gauge.models import GaugeFunction
from .gaussian.models import CorrelationState, VacuumReference
from .gaussian.state import free_theory, random_pure_state, wavepacket_state
from .lattice.models import Boundary, LatticeConfig, LatticeError, SingleParticleOperator
from .verify.models import GaugeRecipe, StateRecipe

CONFIG_ENV_VAR = "DIRAC_LAB_CONFIG"
SEED_ENV_VAR = "DIRAC_LAB_SEED"
SEED_MAX = 2**64 - 1


class ConfigError(Exception):
    """Base class for run-configuration errors."""


class ConfigParseError(ConfigError):
    """The configuration file is not valid YAML."""

    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        self.line = line
        self.column = column
        where = f" (line {line}, column {column})" if line is not None else ""
        super().__init__(f"{message}{where}")


class ConfigSchemaError(ConfigError):
    """A configuration value is missing, unknown or of the wrong type."""

    def __init__(self, path: str, message: str):
        self.path = path
        super().__init__(f"{path}: {message}")


class StateKind(str, Enum):
    """State recipes."""

    VACUUM = "vacuum"
    WAVEPACKET = "wavepacket"
    RANDOM = "random"


class ChiKind(str, Enum):
    """Gauge-function recipes."""

    CONSTANT = "constant"
    SINE = "sine"
    BUMP = "bump"
    FROM_CURRENT = "from_current"
    SAMPLES = "samples"


class SchemeChoice(str, Enum):
    """Coupling schemes to evaluate."""

    PEIERLS = "peierls"
    LINEAR = "linear"
    BOTH = "both"


class OutputFormat(str, Enum):
    """Report formats."""

    CSV = "csv"
    JSON = "json"


@dataclass(frozen=True)
class StateSettings:
    """How to build the state on a lattice.

    ``center=None`` places the wavepacket at ``L / 2``; ``seed=None`` makes
    the random recipe use the run seed.
    """

    kind: StateKind = StateKind.WAVEPACKET
    center: float | None = None
    width: float = 1.5
    momentum: float = 0.25
    seed: int | None = None


@dataclass(frozen=True)
class ChiSettings:
    """How to build the gauge function on a lattice."""

    kind: ChiKind = ChiKind.SINE
    value: float = 0.0
    amplitude: float = 0.5
    wavelength: float | None = None
    center: float | None = None
    width: float = 1.0
    f: float = 1.0
    samples: tuple[float, ...] = ()


@dataclass(frozen=True)
class SweepSettings:
    """Amplitudes of the current-divergence sweep.

    Either an explicit ``values`` list or ``start``/``stop``/``num`` for an
    evenly spaced range.
    """

    values: tuple[float, ...] = ()
    start: float = 0.0
    stop: float = 2.0
    num: int = 41
    workers: int = 1

    def amplitudes(self) -> list[float]:
        """The amplitudes in sweep order."""
        if self.values:
            return list(self.values)
        return [float(f) for f in np.linspace(self.start, self.stop, self.num)]


@dataclass(frozen=True)
class OutputSettings:
    """Report destination and formats."""

    prefix: str = "results/dirac_lab"
    formats: tuple[OutputFormat, ...] = (OutputFormat.CSV, OutputFormat.JSON)


@dataclass(frozen=True)
class VerifySettings:
    """Sizes of the randomized and oracle parts of the verification suite."""

    samples: int = 1000
    sg_samples: int = 200
    oracle: bool = True
    oracle_sites: int = 4
    oracle_trials: int = 50
    t_final: float = 1.0


@dataclass(frozen=True)
class RunConfig:
    """Fully resolved run configuration."""

    lattice: LatticeConfig = field(
        default_factory=lambda: LatticeConfig(n_sites=16, spacing=0.5, mass=1.0)
    )
    state: StateSettings = field(default_factory=StateSettings)
    chi: ChiSettings = field(default_factory=ChiSettings)
    scheme: SchemeChoice = SchemeChoice.BOTH
    sweep: SweepSettings = field(default_factory=SweepSettings)
    refinement: int = 4
    output: OutputSettings = field(default_factory=OutputSettings)
    seed: int = 0
    verify: VerifySettings = field(default_factory=VerifySettings)

    @classmethod
    def default(cls) -> "RunConfig":
        """Defaults used for every key a config file leaves out."""
        return cls()

    def with_seed(self, seed: int | None) -> "RunConfig":
        """Copy with the seed overridden (``None`` keeps it)."""
        return self if seed is None else replace(self, seed=seed)

    def with_output(
        self, prefix: str | None = None, formats: list[str] | None = None
    ) -> "RunConfig":
        """Copy with the output prefix and/or formats overridden."""
        output = self.output
        if prefix is not None:
            output = replace(output, prefix=prefix)
        if formats is not None:
            output = replace(output, formats=tuple(OutputFormat(f) for f in formats))
        return replace(self, output=output)

    def schemes(self) -> list[str]:
        """Coupling schemes selected by ``scheme``."""
        if self.scheme is SchemeChoice.BOTH:
            return [SchemeChoice.PEIERLS.value, SchemeChoice.LINEAR.value]
        return [self.scheme.value]

    def to_dict(self) -> dict[str, Any]:
        """Resolved configuration for report provenance."""
        lattice = self.lattice.to_dict()
        lattice.pop("charge")
        return {
            "lattice": lattice,
            "state": _plain(asdict(self.state)),
            "chi": _plain(asdict(self.chi)),
            "scheme": self.scheme.value,
            "sweep": _plain(asdict(self.sweep)),
            "refinement": self.refinement,
            "output": _plain(asdict(self.output)),
            "seed": self.seed,
            "verify": asdict(self.verify),
        }

    @classmethod
    def from_mapping(cls, data: dict[str, Any] | None) -> "RunConfig":
        """Validate a parsed YAML mapping and fill in defaults.

        Raises
        ------
        ConfigSchemaError
            On unknown keys, wrong types or invalid values.

        """
        data = {} if data is None else data
        if not isinstance(data, dict):
            raise ConfigSchemaError("<root>", "expected a mapping of sections")
        _reject_unknown(data, _SECTIONS, "")
        default = cls.default()

        lattice_data = _section(data, "lattice")
        _reject_unknown(lattice_data, _LATTICE_KEYS, "lattice")
        base = default.lattice.to_dict()
        base.update(lattice_data)
        try:
            lattice = LatticeConfig(
                n_sites=_as(int, base["n_sites"], "lattice.n_sites"),
                spacing=_as(float, base["spacing"], "lattice.spacing"),
                mass=_as(float, base["mass"], "lattice.mass"),
                wilson_r=_as(float, base["wilson_r"], "lattice.wilson_r"),
                boundary=_enum(Boundary, base["boundary"], "lattice.boundary"),
            )
        except LatticeError as exc:
            raise ConfigSchemaError("lattice", str(exc)) from exc

        state = _dataclass_section(data, "state", StateSettings, {"kind": StateKind})
        chi = _dataclass_section(data, "chi", ChiSettings, {"kind": ChiKind})
        sweep = _dataclass_section(data, "sweep", SweepSettings, {})
        output = _dataclass_section(data, "output", OutputSettings, {"formats": OutputFormat})
        verify = _dataclass_section(data, "verify", VerifySettings, {})
        if verify.oracle_sites > 4:
            raise ConfigSchemaError("verify.oracle_sites", "the Fock oracle needs N <= 4")
        if sweep.workers < 1:
            raise ConfigSchemaError("sweep.workers", "must be >= 1")
        if state.seed is not None:
            _check_seed(state.seed, "state.seed")

        refinement = _as(int, data.get("refinement", default.refinement), "refinement")
        if refinement < 2:
            raise ConfigSchemaError("refinement", "needs at least 2 spacings")
        return cls(
            lattice=lattice,
            state=state,
            chi=chi,
            scheme=_enum(SchemeChoice, data.get("scheme", default.scheme), "scheme"),
            sweep=sweep,
            refinement=refinement,
            output=output,
            seed=_check_seed(_as(int, data.get("seed", default.seed), "seed"), "seed"),
            verify=verify,
        )

    def state_recipe(self) -> StateRecipe:
        """Build the configured state on any lattice."""
        settings = self.state
        seed = self.seed if settings.seed is None else settings.seed

        def build(
            config: LatticeConfig, h0: SingleParticleOperator, vac: VacuumReference
        ) -> CorrelationState:
            vacuum = vac.as_state()
            if settings.kind is StateKind.VACUUM:
                return vacuum
            if settings.kind is StateKind.RANDOM:
                return random_pure_state(vac, np.random.default_rng(seed))
            center = 0.5 * config.length if settings.center is None else settings.center
            return wavepacket_state(config, vacuum, center, settings.width, settings.momentum)

        return build

    def chi_recipe(self) -> GaugeRecipe:
        """Build the configured gauge function on any lattice."""
        settings = self.chi
        state_recipe = self.state_recipe()

        def build(config: LatticeConfig) -> GaugeFunction:
            if settings.kind is ChiKind.CONSTANT:
                return GaugeFunction.constant(config, settings.value)
            if settings.kind is ChiKind.SINE:
                return GaugeFunction.sine(config, settings.amplitude, settings.wavelength)
            if settings.kind is ChiKind.BUMP:
                center = 0.5 * config.length if settings.center is None else settings.center
                return GaugeFunction.bump(config, center, settings.width, settings.amplitude)
            if settings.kind is ChiKind.SAMPLES:
                return GaugeFunction.from_samples(list(settings.samples))
            h0, vac, _ = free_theory(config)
            return build_chi_from_current(state_recipe(config, h0, vac), settings.f, config)

        return build


_SECTIONS = {
    "lattice",
    "state",
    "chi",
    "scheme",
    "sweep",
    "refinement",
    "output",
    "seed",
    "verify",
}
_LATTICE_KEYS = {"n_sites", "spacing", "mass", "wilson_r", "boundary"}
_OPTIONAL_INTS = {"state.seed"}


def _plain(value: Any) -> Any:
    if isinstance(value, Enum):
        return value.value
    if isinstance(value, dict):
        return {k: _plain(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_plain(v) for v in value]
    return value


def _reject_unknown(data: dict[str, Any], allowed: set[str], path: str) -> None:
    for key in data:
        if key not in allowed:
            where = f"{path}.{key}" if path else str(key)
            raise ConfigSchemaError(where, "unknown key")


def _section(data: dict[str, Any], name: str) -> dict[str, Any]:
    value = data.get(name) or {}
    if not isinstance(value, dict):
        raise ConfigSchemaError(name, "expected a mapping")
    return value


def _as(kind: type, value: Any, path: str) -> Any:
    if value is None:
        raise ConfigSchemaError(path, "value required")
    if isinstance(value, bool) or not isinstance(value, (int, float, str)):
        if kind is bool and isinstance(value, bool):
            return value
        raise ConfigSchemaError(path, f"expected {kind.__name__}, got {value!r}")
    if kind is bool:
        raise ConfigSchemaError(path, f"expected bool, got {value!r}")
    if kind is int and isinstance(value, float) and not value.is_integer():
        raise ConfigSchemaError(path, f"expected int, got {value!r}")
    try:
        return kind(value)
    except (TypeError, ValueError) as exc:
        raise ConfigSchemaError(path, f"expected {kind.__name__}, got {value!r}") from exc


def _check_seed(seed: int, path: str) -> int:
    if not 0 <= seed <= SEED_MAX:
        raise ConfigSchemaError(path, f"seed must lie in [0, 2^64 - 1], got {seed}")
    return seed


def _enum(kind: type[Enum], value: Any, path: str) -> Any:
    try:
        return kind(value)
    except ValueError as exc:
        choices = ", ".join(str(member.value) for member in kind)
        raise ConfigSchemaError(path, f"expected one of {choices}, got {value!r}") from exc


def _dataclass_section(
    data: dict[str, Any], name: str, cls: type, enums: dict[str, type[Enum]]
) -> Any:
    section = _section(data, name)
    defaults = cls()
    known = {f for f in asdict(defaults)}
    _reject_unknown(section, known, name)
    values: dict[str, Any] = {}
    for key, raw in section.items():
        path = f"{name}.{key}"
        default = getattr(defaults, key)
        if raw is None:
            if default is not None:
                raise ConfigSchemaError(path, "value required")
            values[key] = None
        elif default is None:
            values[key] = _as(int if path in _OPTIONAL_INTS else float, raw, path)
        elif key in enums:
            if isinstance(default, tuple):
                if not isinstance(raw, list):
                    raise ConfigSchemaError(path, "expected a list")
                values[key] = tuple(_enum(enums[key], v, path) for v in raw)
            else:
                values[key] = _enum(enums[key], raw, path)
        elif isinstance(default, tuple):
            if not isinstance(raw, list):
                raise ConfigSchemaError(path, "expected a list")
            values[key] = tuple(_as(float, v, path) for v in raw)
        elif isinstance(default, bool):
            values[key] = _as(bool, raw, path)
        elif isinstance(default, int):
            values[key] = _as(int, raw, path)
        elif isinstance(default, str):
            values[key] = _as(str, raw, path)
        else:
            values[key] = _as(float, raw, path)
    return replace(defaults, **values)


def load_run_config(path: str | None = None) -> RunConfig:
    """Load a run configuration file.

    Parameters
    ----------
    path : str, optional
        YAML file. Falls back to ``$DIRAC_LAB_CONFIG``; without either the
        defaults are used.

    Raises
    ------
    ConfigParseError
        If the file is not valid YAML (with line and column).
    ConfigSchemaError
        If the content violates the schema.
    OSError
        If the file cannot be read.

    """
    path = path or os.environ.get(CONFIG_ENV_VAR)
    if not path:
        return RunConfig.default()
    with open(path, encoding="utf-8") as f:
        text = f.read()
    try:
        data = yaml.safe_load(text)
    except yaml.MarkedYAMLError as exc:
        mark = exc.problem_mark
        raise ConfigParseError(
            f"cannot parse {path}: {exc.problem}",
            line=mark.line + 1 if mark else None,
            column=mark.column + 1 if mark else None,
        ) from exc
    except yaml.YAMLError as exc:
        raise ConfigParseError(f"cannot parse {path}: {exc}") from exc
    return RunConfig.from_mapping(data)


def resolve_seed(cli_seed: int | None, config: RunConfig) -> int:
    """Seed precedence: ``--seed``, then ``$DIRAC_LAB_SEED``, then the file."""
    if cli_seed is not None:
        return cli_seed
    env_seed = os.environ.get(SEED_ENV_VAR)
    if env_seed:
        try:
            seed = int(env_seed)
        except ValueError as exc:
            raise ConfigSchemaError(SEED_ENV_VAR, f"expected int, got {env_seed!r}") from exc
        return _check_seed(seed, SEED_ENV_VAR)
    return config.seed
