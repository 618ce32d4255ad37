import asyncio
from functools import partial, wraps


def wrap(func):
    """Run sync code in executor."""

    @wraps(func)
    async def run(*args, loop=None, executor=None, **kwargs):
        if loop is None:
            loop = asyncio.get_running_loop()
        return await loop.run_in_executor(executor, partial(func, *args, **kwargs))

    return run


def format_complex(value: complex, precision: int = 12) -> str:
    return f'{value.real:+.{precision}g}{value.imag:+.{precision}g}j'
