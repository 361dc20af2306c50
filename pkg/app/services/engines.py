"""
Engine registry keyed by the `--engine` names.
"""

from typing import Dict, Type

from app.schemas.bench import EngineName
from app.services.framework import SwapEngine
from app.services.one_swap import OneSwapEngine
from app.services.two_swap import TwoSwapEngine

ENGINES: Dict[EngineName, Type[SwapEngine]] = {
    EngineName.SIMPLE: SwapEngine,
    EngineName.ONESWAP: OneSwapEngine,
    EngineName.TWOSWAP: TwoSwapEngine,
}


def get_engine(name) -> SwapEngine:
    """
    Fresh engine instance for `name` ("simple", "oneswap" or "twoswap").

    Raises:
        ValueError: If the name is unknown
    """
    try:
        key = EngineName(name)
    except ValueError:
        choices = ", ".join(e.value for e in EngineName)
        raise ValueError(f"unknown engine {name!r}; choose one of {choices}") from None
    return ENGINES[key]()
