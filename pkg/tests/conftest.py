from __future__ import annotations

from functools import lru_cache

import pytest

from arrangetop.arrangement import builtin


@lru_cache(maxsize=None)
def cached_arrangement(name: str):
    return builtin(name)


@pytest.fixture
def ceva():
    return cached_arrangement("ceva3")


@lru_cache(maxsize=None)
def cached_spectrum(name: str, infinity: int = 1):
    from arrangetop.milnorfiber import milnor_spectrum

    return milnor_spectrum(cached_arrangement(name), infinity)


@lru_cache(maxsize=None)
def cached_monodromy(name: str, infinity: int = 1):
    from arrangetop.braid import braid_monodromy, decone

    return braid_monodromy(decone(cached_arrangement(name), infinity))
