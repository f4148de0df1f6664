"""
Shared fixtures
"""

import os

os.environ.setdefault("LOG_TO_FILE", "false")
os.environ.setdefault("LOG_LEVEL", "ERROR")

import pytest

from app.models.graph import ClusterLabeling
from app.models.matrix import BinaryMatrix
from app.services.generator_service import GeneratorService
from app.services.graph_service import GraphService


@pytest.fixture
def final_example():
    return GeneratorService.final_example()


@pytest.fixture
def final_decomposition(final_example):
    return GraphService.block_decompose(*final_example)


@pytest.fixture
def k4():
    return GeneratorService.complete_graph(2, 2)


@pytest.fixture
def werner2():
    return GeneratorService.werner_graph(2)


@pytest.fixture
def figure3_g():
    return GeneratorService.figure3_g()


@pytest.fixture
def figure3_h():
    return GeneratorService.figure3_h()


@pytest.fixture
def example_matrix():
    """Symmetric 3 x 3 matrix with column 1 adjacent to rows 2 and 3"""
    return BinaryMatrix.from_rows([[0, 1, 1], [1, 0, 0], [1, 0, 0]])


@pytest.fixture
def natural_2x2():
    return ClusterLabeling.natural(2, 2)
