"""Binary quartic y^4 a - 4b y^3 + 6c y^2 - 4d y + f and its invariants.

Under U^A4 = u_of_y(y) the invariant (I3)_(A4)0 becomes the quartic in y* with
coefficients a = (I3)_1, b = P_1, c = T, d = P_0, f = (I3)_0, divided by (1+|y|^2)^2.
"""

import cmath
from typing import Any, NamedTuple

import numpy as np
from pydantic import ConfigDict, ValidationInfo, field_validator

from tangle_shared.invariants.three_qubit import ThreeQubitInvariants
from tangle_shared.qubits.state import StateVector
from tangle_shared.schemas.base import BaseConfigModel


class QuarticCoefficients(BaseConfigModel):
    model_config = ConfigDict(**BaseConfigModel.model_config, arbitrary_types_allowed=True)

    a: complex
    b: complex
    c: complex
    d: complex
    f: complex

    @field_validator('a', 'b', 'c', 'd', 'f', mode='before')
    @classmethod
    def validate_finite(cls, value: Any, info: ValidationInfo) -> complex:
        value = complex(value)
        if not cmath.isfinite(value):
            raise ValueError(f'quartic coefficient "{info.field_name}" must be finite')
        return value

    @classmethod
    def from_invariants(cls, invariants: ThreeQubitInvariants) -> 'QuarticCoefficients':
        return cls(
            a=invariants.i3_1,
            b=invariants.p_1,
            c=invariants.t,
            d=invariants.p_0,
            f=invariants.i3_0,
        )

    @classmethod
    def from_state(cls, state: StateVector) -> 'QuarticCoefficients':
        return cls.from_invariants(ThreeQubitInvariants.from_state(state))

    def polynomial(self) -> list[complex]:
        """Coefficients in decreasing powers of the variable."""
        return [self.a, -4 * self.b, 6 * self.c, -4 * self.d, self.f]

    def evaluate(self, y: complex) -> complex:
        return complex(np.polyval(self.polynomial(), y))


class QuarticInvariants(NamedTuple):
    s: complex
    t_cubic: complex
    delta: complex


def quartic_invariants(q: QuarticCoefficients) -> QuarticInvariants:
    """S = af - 4bd + 3c^2, T = acf - ad^2 - b^2 f + 2bcd - c^3, delta = S^3 - 27T^2."""
    a, b, c, d, f = q.a, q.b, q.c, q.d, q.f
    s = a * f - 4 * b * d + 3 * c**2
    t_cubic = a * c * f - a * d**2 - b**2 * f + 2 * b * c * d - c**3
    return QuarticInvariants(s=s, t_cubic=t_cubic, delta=s**3 - 27 * t_cubic**2)


def transformed_i3(state: StateVector, y: complex) -> complex:
    """Right-hand side for (I3)_(A4)0 after applying u_of_y(y) to A4."""
    y_conj = complex(y).conjugate()
    quartic = QuarticCoefficients.from_state(state)
    return quartic.evaluate(y_conj) / (1 + abs(y) ** 2) ** 2


def vanishing_directions(state: StateVector) -> list[complex]:
    """Values of y for which u_of_y(y) on A4 makes (I3)_(A4)0 vanish.

    Roots z of the quartic in y* give y = z*. Vanishing leading coefficients lower
    the degree (those roots sit at infinity and are dropped).
    """
    coefficients = QuarticCoefficients.from_state(state).polynomial()
    if not any(coefficients):
        return []
    return [complex(root).conjugate() for root in np.roots(coefficients)]
