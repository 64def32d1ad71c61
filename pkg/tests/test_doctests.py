import doctest

import pytest

import tracehom.alphabet
import tracehom.chains
import tracehom.intlinalg
import tracehom.msets
import tracehom.simplicial
import tracehom.verify

MODULES = [tracehom.intlinalg, tracehom.alphabet, tracehom.msets,
           tracehom.chains, tracehom.simplicial, tracehom.verify]


@pytest.mark.parametrize("module", MODULES,
                         ids=lambda m: m.__name__.split(".")[-1])
def test_doctests(module):
    failed, _ = doctest.testmod(module)
    assert failed == 0
