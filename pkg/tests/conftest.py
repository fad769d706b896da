from __future__ import annotations

import sys
from pathlib import Path

import pytest
from hypothesis import HealthCheck, settings

from regionum.table import bundled_table, ingest_csv

sys.path.insert(0, str(Path(__file__).parent))

settings.register_profile(
    "default", max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("default")

CORPUS = ingest_csv(bundled_table("knots9.csv"))
WORKED = {r.name: r for r in ingest_csv(bundled_table("diagrams.csv"))}

# region ids of the worked drawings
TREFOIL_BIGON = 4
CHECKERBOARD = {"W1": 0, "B1": 1, "W2": 2, "B2": 3, "W3": 4, "B4": 5, "B3": 6, "W4": 7}
HEPTAGON_SHADED = (3, 5)  # the bigon CD and the triangle ABH
PRETZEL_SHADED = (3, 4)

GRANNY_PRE_GOERITZ = [
    [4, -1, -1, -1, -1],
    [-1, 2, -1, 0, 0],
    [-1, -1, 2, 0, 0],
    [-1, 0, 0, 2, -1],
    [-1, 0, 0, -1, 2],
]
GRANNY_GOERITZ = [[2, -1, 0, 0], [-1, 2, 0, 0], [0, 0, 2, -1], [0, 0, -1, 2]]


def worked(name: str):
    return WORKED[name].diagram


@pytest.fixture
def granny():
    return worked("3_1#3_1")


@pytest.fixture
def checkerboard():
    return worked("6_3_checkerboard")
