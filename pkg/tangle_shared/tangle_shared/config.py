import logging
from typing import KeysView

from pydantic import PositiveFloat, PositiveInt, ValidationInfo, field_validator
from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    model_config = SettingsConfigDict(
        env_prefix='TANGLE_',
        env_file='.env',
        extra='forbid',
        validate_default=True,
    )

    LOG_LEVEL: str = 'INFO'

    NORM_TOLERANCE: PositiveFloat = 1e-9

    DEFAULT_REL: PositiveFloat = 1e-10
    DEFAULT_ABS_FLOOR: PositiveFloat = 1e-12
    DEFAULT_INVARIANCE_REL: PositiveFloat = 1e-9

    Y_SAMPLING_RADIUS: PositiveFloat = 5.0
    SCALE_MIN_MODULUS: PositiveFloat = 0.1
    SCALE_MAX_MODULUS: PositiveFloat = 10.0

    VERIFY_MAX_WORKERS: PositiveInt = 4

    @field_validator('LOG_LEVEL')
    @classmethod
    def validate_log_level_value(cls, value: str, info: ValidationInfo) -> str:
        valid_values: KeysView[str] = logging._nameToLevel.keys()  # noqa: SLF001
        if value not in valid_values:
            raise ValueError(f'"{info.field_name}" must be one of {valid_values}')
        return value


settings = Settings()
