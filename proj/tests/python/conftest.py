import os
import pathlib

import pytest

REPO = pathlib.Path(__file__).resolve().parents[2]


@pytest.fixture(scope="session")
def data_dir():
    return os.environ.get("GOLDBACH_DATA", str(REPO / "data"))


@pytest.fixture(scope="session")
def table():
    import goldbach as ga

    return ga.sieve_lambda(20_000)


@pytest.fixture(scope="session")
def zeros(data_dir):
    import goldbach as ga

    return ga.load_zeros(os.path.join(data_dir, "zeros_100k.txt"))


@pytest.fixture(scope="session")
def cli_path():
    p = os.environ.get("GOLDBACH_CLI", str(REPO / "build" / "goldbach"))
    if not os.path.exists(p):
        pytest.skip(f"cli binary not found at {p}")
    return p
