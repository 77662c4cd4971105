"""Shared helpers for the test suite."""

import importlib.util
import random
from pathlib import Path

from condma.designs import DesignError, RegularSpec, check_conditions_regular

TOOLS_DIR = Path(__file__).resolve().parent.parent / "tools"


def random_valid_spec(rng: random.Random, r: int, n: int) -> RegularSpec:
    """A random constructible spec: distinct labels spanning rank r."""
    labels = list(range(1, 1 << r))
    while True:
        rng.shuffle(labels)
        try:
            return RegularSpec(r=r, columns=tuple(labels[:n]))
        except DesignError:
            continue


def random_admissible_spec(rng: random.Random, r: int, n: int) -> RegularSpec:
    """A random spec passing all four admissibility conditions."""
    while True:
        spec = random_valid_spec(rng, r, n)
        if check_conditions_regular(spec).ok:
            return spec


def load_catalog_generator():
    """Import tools/gen_catalogs.py (not an installed module)."""
    path = TOOLS_DIR / "gen_catalogs.py"
    module_spec = importlib.util.spec_from_file_location("gen_catalogs", path)
    module = importlib.util.module_from_spec(module_spec)
    module_spec.loader.exec_module(module)
    return module
