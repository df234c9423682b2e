import pytest
from click.testing import CliRunner

from sparsekron.rings import Integers


@pytest.fixture(scope="session")
def zz():
    return Integers()


@pytest.fixture
def cli_runner():
    # click < 8.2 mixes stderr into the output unless told otherwise
    try:
        return CliRunner(mix_stderr=False)
    except TypeError:
        return CliRunner()
