import logging
from abc import ABC, abstractmethod
from typing import Any


class AbstractTask(ABC):
    """Named unit of work awaited by a launcher or runner."""

    NAME: str | None = None

    def __init__(self) -> None:
        self._log = logging.getLogger(self.__class__.__name__)

    @property
    def name(self) -> str:
        return str(self.NAME or self.__class__.__name__)

    @abstractmethod
    async def run(self) -> Any:
        pass
