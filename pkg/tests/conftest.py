import pytest

from fmrep import catalog
from fmrep.chartab import character_table
from fmrep.fimonoid import analyze
from fmrep.fusion import fusion_pattern
from fmrep.permcore import sylow_subgroup
from fmrep.repring import rep_lattice


class PipelineCache:
    """One full pipeline run per catalog entry per test session."""

    def __init__(self):
        self._groups = {}
        self._runs = {}

    def group(self, name):
        if name not in self._groups:
            self._groups[name] = catalog.load_group(name)
        return self._groups[name]

    def run(self, name, prime=None):
        prime = prime if prime is not None else catalog.CATALOG[name].prime
        key = (name, prime)
        if key not in self._runs:
            G = self.group(name)
            S = sylow_subgroup(G, prime)
            T = character_table(S)
            F = fusion_pattern(G, S, T)
            L = rep_lattice(F, T)
            A = analyze(L, T, F)
            self._runs[key] = (G, S, T, F, L, A)
        return self._runs[key]


@pytest.fixture(scope="session")
def pipelines():
    return PipelineCache()
