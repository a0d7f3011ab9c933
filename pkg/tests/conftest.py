import os

import pytest

from sqci.graphs import parse_graph

CORPUS = os.path.join(os.path.dirname(__file__), os.pardir, "corpus")


def load(name):
    with open(os.path.join(CORPUS, name + ".graph")) as fh:
        return parse_graph(fh.read())


@pytest.fixture
def corpus_dir():
    return os.path.abspath(CORPUS)
