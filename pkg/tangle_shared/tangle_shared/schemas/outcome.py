from pydantic import ConfigDict, Field, PositiveFloat, model_validator
from typing_extensions import Self

from tangle_shared.config import settings
from tangle_shared.enums import CheckSuite
from tangle_shared.schemas.base import BaseConfigModel, RealBaseModel


class ToleranceConfig(BaseConfigModel):
    rel: PositiveFloat = settings.DEFAULT_REL
    abs_floor: PositiveFloat = settings.DEFAULT_ABS_FLOOR
    invariance_rel: PositiveFloat = settings.DEFAULT_INVARIANCE_REL

    @model_validator(mode='after')
    def validate_floor(self) -> Self:
        if self.abs_floor > self.rel:
            raise ValueError('abs_floor must not exceed rel')
        return self


class CheckOutcome(RealBaseModel):
    """One verification suite result, emitted as a JSON line."""

    model_config = ConfigDict(**RealBaseModel.model_config, populate_by_name=True)

    name: CheckSuite
    trials: int
    max_residual: float
    passed: bool = Field(alias='pass')
    seed: int
    worst_trial: int | None = None
    reported: dict[str, float] = Field(default_factory=dict)

    def to_json_line(self) -> str:
        return self.model_dump_json(by_alias=True)
