import math
from pathlib import Path

import pytest
from hypothesis import settings

from gcech import Disk
from gcech.io import read_disk_set

DATA = Path(__file__).parent / "data"

settings.register_profile("default", max_examples=200, deadline=None)
settings.load_profile("default")


def triangle(side, r=1.0):
    h = side * math.sqrt(3.0) / 2.0
    return [Disk(0, (0.0, 0.0), r), Disk(1, (side, 0.0), r), Disk(2, (side / 2.0, h), r)]


def load(name):
    return read_disk_set(DATA / name).elements


def small_sets(dim):
    return sorted((DATA / f"small{dim}d").glob("ds_*.txt"))


@pytest.fixture
def tri1():
    return triangle(1.0)


@pytest.fixture
def tri19():
    return triangle(1.9)
