"""Result and fit models for the verification suite."""

from collections.abc import Callable, Iterator
from dataclasses import dataclass, field
from enum import Enum
from typing import Any

from ..gauge.models import GaugeFunction
from ..gaussian.models import CorrelationState, VacuumReference
from ..lattice.models import LatticeConfig, SingleParticleOperator


class FockDimensionError(ValueError):
    """The Fock oracle was asked for more than four sites."""


class CheckKind(str, Enum):
    """Whether a check gates the exit status or only reports a measurement."""

    IDENTITY = "identity"
    PROBE = "probe"


class Bound(str, Enum):
    """Sense in which ``measured`` is compared with ``tolerance``."""

    ABS = "abs"
    LOWER = "lower"


@dataclass
class CheckResult:
    """Outcome of one identity check or probe.

    For ``Bound.ABS`` the check passes when ``|measured| <= tolerance``; for
    ``Bound.LOWER`` when ``measured >= -tolerance``.

    Parameters
    ----------
    name : str
        Stable identifier, used to merge results deterministically.
    passed : bool
        Whether the stated bound holds.
    measured : float
        The measured residual or value.
    tolerance : float
        Threshold of the bound.
    details : str
        Human-readable context (seed, lattice, sub-measurements).
    kind : CheckKind
        Identity checks gate the exit status; probes never do.
    bound : Bound
        Comparison sense.
    extras : dict[str, Any]
        Additional named measurements for the JSON report.

    """

    name: str
    passed: bool
    measured: float
    tolerance: float
    details: str = ""
    kind: CheckKind = CheckKind.IDENTITY
    bound: Bound = Bound.ABS
    extras: dict[str, Any] = field(default_factory=dict)

    @classmethod
    def evaluate(
        cls,
        name: str,
        measured: float,
        tolerance: float,
        details: str = "",
        kind: CheckKind = CheckKind.IDENTITY,
        bound: Bound = Bound.ABS,
        extras: dict[str, Any] | None = None,
    ) -> "CheckResult":
        """Build a result whose ``passed`` flag follows from the bound."""
        measured = float(measured)
        if bound is Bound.ABS:
            passed = bool(abs(measured) <= tolerance)
        else:
            passed = bool(measured >= -tolerance)
        return cls(
            name=name,
            passed=passed,
            measured=measured,
            tolerance=tolerance,
            details=details,
            kind=kind,
            bound=bound,
            extras=extras or {},
        )

    @property
    def gates_exit(self) -> bool:
        """Whether a failure of this result should fail the run."""
        return self.kind is CheckKind.IDENTITY and not self.passed

    def to_dict(self) -> dict[str, Any]:
        """Convert to dictionary for JSON serialization."""
        return {
            "name": self.name,
            "passed": self.passed,
            "measured": self.measured,
            "tolerance": self.tolerance,
            "details": self.details,
            "kind": self.kind.value,
            "bound": self.bound.value,
            "extras": self.extras,
        }


@dataclass
class ConvergenceFit:
    """Least-squares power law ``error ~ C a^p`` over a refinement sequence.

    ``degenerate`` is set when the errors are all (numerically) zero or
    there are fewer than two usable points; ``fitted_order`` is then NaN.
    """

    spacings: list[float]
    errors: list[float]
    fitted_order: float
    r_squared: float
    degenerate: bool = False
    label: str = ""
    step_orders: list[float] = field(default_factory=list)

    def __post_init__(self) -> None:
        """Check the refinement sequence."""
        if len(self.spacings) != len(self.errors):
            raise ValueError("spacings and errors must have equal length")
        if any(b >= a for a, b in zip(self.spacings, self.spacings[1:])):
            raise ValueError("spacings must be strictly decreasing")
        if any(e < 0 for e in self.errors):
            raise ValueError("errors must be nonnegative")

    def to_dict(self) -> dict[str, Any]:
        """Convert to dictionary for JSON serialization."""
        return {
            "label": self.label,
            "spacings": list(self.spacings),
            "errors": list(self.errors),
            "fitted_order": self.fitted_order,
            "r_squared": self.r_squared,
            "step_orders": list(self.step_orders),
            "degenerate": self.degenerate,
        }


StateRecipe = Callable[
    [LatticeConfig, SingleParticleOperator, VacuumReference], CorrelationState
]
GaugeRecipe = Callable[[LatticeConfig], GaugeFunction]


@dataclass(frozen=True)
class RefinementCase:
    """A physical setup resampled at spacings ``a0 / 2^k`` with ``L`` fixed.

    Parameters
    ----------
    base : LatticeConfig
        Coarsest lattice.
    state : StateRecipe
        Builds the state on a given lattice from its ``h0`` and vacuum.
    chi : GaugeRecipe
        Samples the gauge function on a given lattice.
    levels : int
        Number of spacings (at least 2).

    """

    base: LatticeConfig
    state: StateRecipe
    chi: GaugeRecipe
    levels: int = 4

    def __post_init__(self) -> None:
        """Reject refinements too short to fit."""
        if self.levels < 2:
            raise ValueError(f"refinement needs at least 2 levels, got {self.levels}")

    def configs(self) -> Iterator[LatticeConfig]:
        """Lattices from coarsest to finest."""
        for level in range(self.levels):
            yield self.base.with_spacing(self.base.spacing / 2**level)


@dataclass
class EnergyShiftStudy:
    """Refinement of the first-order energy shift under a gauge change.

    ``with_vacuum_term`` fits the residual after subtracting the transformed
    vacuum energy ``P``; ``without_vacuum_term`` fits the bare residual,
    which tends to ``P`` instead of zero.
    """

    with_vacuum_term: ConvergenceFit
    without_vacuum_term: ConvergenceFit
    vacuum_energies: list[float]

    @property
    def plateau_deviation(self) -> float:
        """Relative distance of the finest bare residual from ``P``."""
        finest = self.vacuum_energies[-1]
        if finest == 0.0:
            return float("nan")
        return abs(self.without_vacuum_term.errors[-1] - finest) / abs(finest)

    def to_dict(self) -> dict[str, Any]:
        """Convert to dictionary for JSON serialization."""
        return {
            "with_vacuum_term": self.with_vacuum_term.to_dict(),
            "without_vacuum_term": self.without_vacuum_term.to_dict(),
            "vacuum_energies": list(self.vacuum_energies),
            "plateau_deviation": self.plateau_deviation,
        }
