from typing import Sequence


def residual(lhs: complex, rhs: complex, abs_floor: float) -> float:
    """|lhs - rhs| / max(|lhs|, |rhs|, abs_floor); stable where both sides vanish."""
    return abs(lhs - rhs) / max(abs(lhs), abs(rhs), abs_floor)


def max_residual(pairs: Sequence[tuple[complex, complex]], abs_floor: float) -> float:
    return max((residual(lhs, rhs, abs_floor) for lhs, rhs in pairs), default=0.0)


def relative_spread(values: Sequence[complex], abs_floor: float) -> float:
    """Largest pairwise residual among ``values``."""
    return max(
        (
            residual(u, v, abs_floor)
            for pos, u in enumerate(values)
            for v in values[pos + 1 :]
        ),
        default=0.0,
    )
