from tangle_shared.enums import UnitaryGroup
from tangle_shared.schemas.outcome import CheckOutcome, ToleranceConfig
from tangle_shared.verify.cross_triple import CrossTripleDeltaCheck
from tangle_shared.verify.homogeneity import HomogeneityCheck
from tangle_shared.verify.lu_invariance import LocalUnitaryInvarianceCheck
from tangle_shared.verify.runner import VerificationRunner
from tangle_shared.verify.transformation import TransformationLawCheck


def check_transformation_law(
    trials: int, seed: int, tol: ToleranceConfig | None = None, **overrides
) -> CheckOutcome:
    return TransformationLawCheck(trials=trials, seed=seed, tol=tol, **overrides).run_sync()


def check_lu_invariance(
    trials: int,
    seed: int,
    group: UnitaryGroup | None = None,
    tol: ToleranceConfig | None = None,
    **overrides,
) -> CheckOutcome:
    return LocalUnitaryInvarianceCheck(
        trials=trials, seed=seed, tol=tol, group=group, **overrides
    ).run_sync()


def check_homogeneity(
    trials: int, seed: int, tol: ToleranceConfig | None = None, **overrides
) -> CheckOutcome:
    return HomogeneityCheck(trials=trials, seed=seed, tol=tol, **overrides).run_sync()


def check_cross_triple_delta(
    trials: int, seed: int, tol: ToleranceConfig | None = None, **overrides
) -> CheckOutcome:
    return CrossTripleDeltaCheck(trials=trials, seed=seed, tol=tol, **overrides).run_sync()


__all__ = [
    'CrossTripleDeltaCheck',
    'HomogeneityCheck',
    'LocalUnitaryInvarianceCheck',
    'TransformationLawCheck',
    'VerificationRunner',
    'check_cross_triple_delta',
    'check_homogeneity',
    'check_lu_invariance',
    'check_transformation_law',
]
