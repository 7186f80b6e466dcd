import json

import pytest

from qct.catalog import Catalog, payload_id
from qct.errors import QctError


def test_put_is_idempotent(tmp_path):
    path = tmp_path / "cat.jsonl"
    cat = Catalog(str(path))
    payload = {"n": 7, "k": 3, "q": 2, "dz": 3, "dx": 2}
    e1 = cat.put("quantum", payload)
    e2 = cat.put("quantum", payload)
    assert e1.id == e2.id == payload_id(payload)
    assert len(path.read_text().strip().splitlines()) == 1


def test_get_and_missing(tmp_path):
    cat = Catalog(str(tmp_path / "cat.jsonl"))
    entry = cat.put("classical", {"n": 3, "k": 2})
    assert cat.get(entry.id).payload == {"n": 3, "k": 2}
    with pytest.raises(QctError):
        cat.get("0" * 64)


def test_inputs_must_exist(tmp_path):
    cat = Catalog(str(tmp_path / "cat.jsonl"))
    with pytest.raises(QctError):
        cat.put("quantum", {"n": 1}, inputs=["missing"])
    base = cat.put("classical", {"n": 9})
    child = cat.put("quantum", {"n": 9, "k": 1}, inputs=[base.id])
    assert child.inputs == [base.id]


def test_reload_from_disk(tmp_path):
    path = str(tmp_path / "cat.jsonl")
    Catalog(path).put("quantum", {"n": 45, "k": 24, "q": 4, "dz": 6, "dx": 4})
    again = Catalog(path)
    assert len(again.list()) == 1
    assert again.list("quantum")[0].payload["n"] == 45
    assert again.list("report") == []


def test_search_predicates(tmp_path):
    cat = Catalog(str(tmp_path / "cat.jsonl"))
    cat.put("quantum", {"n": 45, "k": 24, "q": 4, "dz": 6, "dx": 4})
    cat.put("quantum", {"n": 45, "k": 22, "q": 4, "dz": 8, "dx": 4})
    cat.put("quantum", {"n": 31, "k": 14, "q": 16, "dz": 7, "dx": 3})
    assert len(cat.search(n=45)) == 2
    assert len(cat.search(n=45, dz_min=7)) == 1
    assert len(cat.search(q=16)) == 1
    assert len(cat.search(k=24, q=4)) == 1
    assert cat.search(n=99) == []


def test_corrupt_file_surfaced_with_path(tmp_path):
    path = tmp_path / "cat.jsonl"
    path.write_text("not json\n")
    with pytest.raises(QctError) as err:
        Catalog(str(path))
    assert "cat.jsonl" in str(err.value)


def test_id_deterministic_over_key_order():
    assert payload_id({"a": 1, "b": 2}) == payload_id({"b": 2, "a": 1})
