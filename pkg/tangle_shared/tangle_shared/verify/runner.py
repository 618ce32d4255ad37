import asyncio
import logging
from concurrent.futures import ThreadPoolExecutor
from typing import Iterable

from tangle_shared.config import settings
from tangle_shared.enums import CheckSuite
from tangle_shared.schemas.outcome import CheckOutcome, ToleranceConfig
from tangle_shared.verify._registry import CheckRegistry


class VerificationRunner:
    """Runs suites concurrently; outcomes keep the order of ``suites``."""

    def __init__(
        self,
        suites: Iterable[CheckSuite],
        trials: int,
        seed: int,
        tol: ToleranceConfig,
        max_workers: int | None = None,
    ) -> None:
        self._log = logging.getLogger(self.__class__.__name__)
        registry = CheckRegistry.get_registry()
        self._checks = [
            registry[CheckSuite(suite)](trials=trials, seed=seed, tol=tol)
            for suite in suites
        ]
        self._max_workers = max_workers or settings.VERIFY_MAX_WORKERS

    async def run(self) -> list[CheckOutcome]:
        self._log.info('Starting %d verification suite(s)', len(self._checks))
        with ThreadPoolExecutor(max_workers=self._max_workers) as executor:
            return list(
                await asyncio.gather(
                    *(check.run(executor=executor) for check in self._checks)
                )
            )
