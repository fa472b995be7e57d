"""Regression targets for the verify command.

Each table lists, for one channel setting, the l1-coherence, ergotropy,
and a population/spectrum quadruple of the state at t = 0, 10, 40, 100 of
the dissipative phase. The quadruples in the source tables track the
computational-basis populations of rho(t); the verify report therefore
compares them against both the simulated populations and the simulated
spectrum.

The t=0 rows describe a charged state prepared with an unpublished pulse
amplitude; the amplitude calibration targets its coherence value, and
residual t=0 disagreement propagates into the transient (t=10) cells.
Steady-state cells (t=40, 100 for constant rates) do not depend on the
initial state and are the strongest cross-check of the dynamics.
"""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class ReferenceRow:
    t: float
    coherence: float
    ergotropy: float
    quadruple: tuple[float, float, float, float]


@dataclass(frozen=True)
class ReferenceTable:
    name: str
    preset: str
    rows: tuple[ReferenceRow, ...]


_CHARGED = ReferenceRow(0.0, 2.1013, 1.8133, (0.353, 0.001, 0.355, 0.291))
_CHARGED_MARKOV = ReferenceRow(0.0, 2.1012, 1.8133, (0.353, 0.001, 0.355, 0.291))
_CHARGED_NM = ReferenceRow(0.0, 2.5854, 1.7132, (0.226, 0.115, 0.376, 0.282))

TABLES: tuple[ReferenceTable, ...] = (
    ReferenceTable(
        name="amplitude damping, gamma=0.1",
        preset="ad-weak",
        rows=(
            _CHARGED,
            ReferenceRow(10.0, 1.3676, 0.9180, (0.33, 0.23, 0.182, 0.258)),
            ReferenceRow(40.0, 0.5145, 0.1447, (0.265, 0.231, 0.282, 0.222)),
            ReferenceRow(100.0, 0.4705, 0.1777, (0.270, 0.228, 0.271, 0.231)),
        ),
    ),
    ReferenceTable(
        name="amplitude damping, gamma=0.5",
        preset="ad-mid",
        rows=(
            _CHARGED,
            ReferenceRow(10.0, 1.0078, 0.9823, (0.407, 0.099, 0.384, 0.11)),
            ReferenceRow(40.0, 0.9983, 1.0347, (0.401, 0.103, 0.393, 0.103)),
            ReferenceRow(100.0, 0.9983, 1.0347, (0.401, 0.103, 0.393, 0.103)),
        ),
    ),
    ReferenceTable(
        name="amplitude damping, gamma=1.0",
        preset="ad-strong",
        rows=(
            _CHARGED,
            ReferenceRow(10.0, 0.8960, 1.7131, (0.453, 0.073, 0.416, 0.058)),
            ReferenceRow(40.0, 0.8923, 1.7284, (0.453, 0.073, 0.416, 0.058)),
            ReferenceRow(100.0, 0.8923, 1.7284, (0.453, 0.073, 0.416, 0.058)),
        ),
    ),
    ReferenceTable(
        name="dephasing, gamma=0.1",
        preset="deph-weak",
        rows=(
            _CHARGED,
            ReferenceRow(10.0, 0.3469, 0.5564, (0.283, 0.308, 0.186, 0.223)),
            ReferenceRow(40.0, 0.0160, 0.0315, (0.252, 0.251, 0.249, 0.248)),
            ReferenceRow(100.0, 0.0000, 0.0001, (0.250, 0.250, 0.250, 0.250)),
        ),
    ),
    ReferenceTable(
        name="dephasing, gamma=1.0",
        preset="deph-strong",
        rows=(
            _CHARGED,
            ReferenceRow(10.0, 0.0888, 0.4248, (0.288, 0.222, 0.278, 0.212)),
            ReferenceRow(40.0, 0.0111, 0.0529, (0.255, 0.246, 0.254, 0.245)),
            ReferenceRow(100.0, 0.0002, 0.0008, (0.25, 0.25, 0.25, 0.25)),
        ),
    ),
    ReferenceTable(
        name="markovian reservoir, gamma=0.5",
        preset="markov",
        rows=(
            _CHARGED_MARKOV,
            ReferenceRow(10.0, 1.0066, 0.9824, (0.407, 0.099, 0.384, 0.109)),
            ReferenceRow(40.0, 0.9983, 1.0347, (0.401, 0.103, 0.393, 0.103)),
            ReferenceRow(100.0, 0.9983, 1.0347, (0.401, 0.103, 0.393, 0.103)),
        ),
    ),
    ReferenceTable(
        name="non-markovian reservoir, beta=0.1",
        preset="nonmarkov-b01",
        rows=(
            _CHARGED_NM,
            ReferenceRow(10.0, 1.3513, 0.7423, (0.242, 0.240, 0.232, 0.286)),
            ReferenceRow(40.0, 0.6760, 0.4560, (0.211, 0.236, 0.324, 0.228)),
            ReferenceRow(100.0, 0.8107, 0.4496, (0.245, 0.255, 0.239, 0.262)),
        ),
    ),
    ReferenceTable(
        name="non-markovian reservoir, beta=0.5",
        preset="nonmarkov-b05",
        rows=(
            _CHARGED_NM,
            ReferenceRow(10.0, 2.1277, 1.1371, (0.213, 0.284, 0.186, 0.317)),
            ReferenceRow(40.0, 1.7619, 1.1369, (0.075, 0.232, 0.429, 0.265)),
            ReferenceRow(100.0, 2.1614, 1.1368, (0.264, 0.226, 0.266, 0.244)),
        ),
    ),
    ReferenceTable(
        name="non-markovian reservoir, beta=1.0",
        preset="nonmarkov-b10",
        rows=(
            _CHARGED_NM,
            ReferenceRow(10.0, 2.3058, 1.2817, (0.219, 0.278, 0.191, 0.311)),
            ReferenceRow(40.0, 1.8715, 1.2817, (0.050, 0.230, 0.447, 0.272)),
            ReferenceRow(100.0, 2.3346, 1.2816, (0.264, 0.219, 0.276, 0.241)),
        ),
    ),
)
