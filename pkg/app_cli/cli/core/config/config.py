"""Config module."""

import logging
import sys
from pathlib import Path

import yaml
from pydantic import ValidationError
from tangle_shared.config import Settings

from cli.core.enums import ExitCode
from cli.core.exceptions import ConfigError
from cli.core.schemas import ConfigSchema

_DEFAULT_CONF_PATH = Path(__file__).parent.parent.parent.parent / 'config.yml'


class CliSettings(Settings):
    CLI_CONFIG_PATH: Path = _DEFAULT_CONF_PATH


settings = CliSettings()


class ConfigLoader:
    def __init__(self, conf_file_path: Path = settings.CLI_CONFIG_PATH) -> None:
        self._log = logging.getLogger(self.__class__.__name__)
        self._conf_file_path = conf_file_path

    def load_config(self) -> ConfigSchema:
        data, errors = self._load_config()
        if errors:
            self._process_errors_and_exit(errors)
        return data

    def _load_config(self) -> tuple[ConfigSchema | None, ValidationError | None]:
        """Loads CLI defaults from the config file."""
        self._check_path_existence(self._conf_file_path)

        with open(self._conf_file_path, 'r') as fd_in:
            try:
                return ConfigSchema(**yaml.safe_load(fd_in)), None
            except ValidationError as err:
                return None, err

    def _check_path_existence(self, conf_file_path: Path) -> None:
        if not conf_file_path.is_file():
            err_msg = f'Cannot find {conf_file_path} configuration file'
            self._log.error(err_msg)
            raise ConfigError(err_msg)

    def _process_errors_and_exit(self, errors: ValidationError) -> None:
        sep = '-' * 20
        self._log.error(
            '%s Errors in %s %s\n%s', sep, self._conf_file_path.name, sep, errors
        )
        sys.exit(ExitCode.USAGE_ERROR)


config_loader = ConfigLoader()

_CONF_MAIN = config_loader.load_config()


def get_main_config() -> ConfigSchema:
    return _CONF_MAIN
