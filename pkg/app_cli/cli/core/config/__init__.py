from cli.core.config.config import get_main_config, settings

__all__ = [
    'get_main_config',
    'settings',
]
