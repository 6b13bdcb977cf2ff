import json

import pytest

import oracle as o
from rotabaxter import catalog as cat
from rotabaxter import exact as ex
from rotabaxter import fileformat as ff
from rotabaxter.cli import exportable

ENTRIES = cat.entries()
EXPORTS = exportable(1)


@pytest.mark.parametrize("entry", ENTRIES, ids=[e.name for e in ENTRIES])
def test_every_entry_passes_its_manifest(entry):
    rep = entry.check()
    assert rep, rep.witness


def test_entry_names_are_unique():
    names = [e.name for e in ENTRIES]
    assert len(names) == len(set(names))


@pytest.mark.parametrize("name", sorted(EXPORTS))
def test_export_round_trips_canonically(name):
    text = ff.dumps(EXPORTS[name]())
    assert text.endswith("\n")
    assert ff.canonicalize(text) == text
    again = ff.parse(text)
    assert ff.dumps(again) == text
    doc = json.loads(text)
    assert doc["version"] == ff.SCHEMA_VERSION and doc["dim"] == len(doc["basis"])
    # brackets are listed for i < j only
    pos = {b: i for i, b in enumerate(doc["basis"])}
    assert all(pos[a] < pos[b] for a, b, _, _ in doc["brackets"])


@pytest.mark.parametrize("name", ["abelian2", "aff1", "sl2"])
def test_basic_algebras_are_lie_by_oracle(name):
    L = ff.parse(ff.dumps(EXPORTS[name]())).algebra
    assert o.is_lie(o.tolist(L.c))


def test_sl2_constants():
    L = cat.sl2()
    assert tuple(L.basis) == ("h", "e", "f")
    assert ex.equal(cat.sl2_trace_form(), ex.qarray([[2, 0, 0], [0, 0, 1], [0, 1, 0]]))
    r = cat.sl2_r_components()
    assert r[1, 2] == 1 and r[0, 0] == ex.q("1/4")


def test_unsupported_n():
    with pytest.raises(ValueError):
        cat.iwasawa_triple(4)
    with pytest.raises(KeyError):
        cat.bialgebra("nope")
