import os
import pytest


DATA_DIR = os.path.join(os.path.dirname(__file__), 'data')


def read_constants(fname):
    constants = {}
    with open(fname) as infile:
        for line in infile:
            if line.startswith('#') or not line.strip():
                continue
            name, value = line.split()[:2]
            constants[name] = float(value)
    return constants


@pytest.fixture(scope='session')
def ref():
    return read_constants(os.path.join(DATA_DIR, 'reference_constants.txt'))
