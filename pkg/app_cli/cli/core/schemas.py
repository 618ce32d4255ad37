from pydantic import (
    Field,
    NonNegativeInt,
    PositiveFloat,
    PositiveInt,
    field_validator,
)
from tangle_shared.enums import CheckSuite, OutputFormat, QubitLabel
from tangle_shared.schemas.base import StrictBaseConfigModel
from tangle_shared.schemas.outcome import ToleranceConfig
from typing_extensions import Annotated

from cli.core.constants import ALL_CHOICE


class ComputeSchema(StrictBaseConfigModel):
    distinguished: str
    format: Annotated[OutputFormat, Field(strict=False)]

    @field_validator('distinguished')
    @classmethod
    def validate_distinguished(cls, value: str) -> str:
        choices = QubitLabel.choices() + (ALL_CHOICE,)
        if value not in choices:
            raise ValueError(f'must be one of {choices}')
        return value


class TolerancesSchema(StrictBaseConfigModel):
    rel: PositiveFloat
    abs_floor: PositiveFloat
    invariance_rel: PositiveFloat

    def to_config(self, rel: float | None = None) -> ToleranceConfig:
        return ToleranceConfig(
            rel=rel or self.rel,
            abs_floor=self.abs_floor,
            invariance_rel=self.invariance_rel,
        )


class VerifySchema(StrictBaseConfigModel):
    suite: str
    trials: PositiveInt
    seed: NonNegativeInt
    tolerances: TolerancesSchema

    @field_validator('suite')
    @classmethod
    def validate_suite(cls, value: str) -> str:
        choices = CheckSuite.choices() + (ALL_CHOICE,)
        if value not in choices:
            raise ValueError(f'must be one of {choices}')
        return value


class ConfigSchema(StrictBaseConfigModel):
    compute: ComputeSchema
    verify: VerifySchema
