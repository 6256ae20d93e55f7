"""On-disk algebra cache: determinism, integrity guard, CLI-facing helpers."""

import json

import pytest

from confsys import cache
from confsys.roots import RootSystemSpec

A3 = RootSystemSpec.parse("A3")


def test_build_writes_deterministic_payload(tmp_path):
    p1 = cache.build(A3, tmp_path / "one")
    p2 = cache.build(A3, tmp_path / "two")
    assert p1.name == p2.name == "algebra-A3-v1.json"
    assert p1.read_bytes() == p2.read_bytes()


def test_load_round_trips_the_algebra(tmp_path):
    path = cache.build(A3, tmp_path)
    fresh = cache.load_or_build(A3, tmp_path, check=False)
    cached = cache.load(path)
    assert cached.dim == fresh.dim
    assert cached.graded_dims == fresh.graded_dims
    assert cached.names == fresh.names
    for i in range(cached.dim):
        for j in range(cached.dim):
            assert dict(cached.bracket(i, j)) == dict(fresh.bracket(i, j))


def test_load_rejects_corruption(tmp_path):
    path = cache.build(A3, tmp_path)
    body = json.loads(path.read_text())
    body["rank"] = 4  # tamper without updating the digest
    path.write_text(json.dumps(body))
    with pytest.raises(ValueError, match="digest"):
        cache.load(path)


def test_load_rejects_schema_mismatch(tmp_path):
    path = cache.build(A3, tmp_path)
    body = json.loads(path.read_text())
    body["schema"] = 999
    path.write_text(json.dumps(body))
    with pytest.raises(ValueError, match="schema"):
        cache.load(path)


def test_load_or_build_recovers_from_corruption(tmp_path):
    path = cache.build(A3, tmp_path)
    path.write_text("{ not json")
    with pytest.warns(UserWarning, match="discarding unusable"):
        alg = cache.load_or_build(A3, tmp_path, check=False)
    assert alg.rank == 3
    # the cache entry was rewritten and is loadable again
    assert cache.load(path).rank == 3


def test_clear_removes_entries(tmp_path):
    cache.build(A3, tmp_path)
    cache.build(RootSystemSpec.parse("D4"), tmp_path)
    removed = cache.clear(tmp_path, A3)
    assert [p.name for p in removed] == ["algebra-A3-v1.json"]
    removed = cache.clear(tmp_path)
    assert [p.name for p in removed] == ["algebra-D4-v1.json"]
    assert cache.clear(tmp_path) == []


def test_env_var_selects_cache_dir(tmp_path, monkeypatch):
    monkeypatch.setenv(cache.ENV_CACHE_DIR, str(tmp_path / "envdir"))
    assert cache.default_cache_dir() == tmp_path / "envdir"
    path = cache.build(A3)
    assert path.parent == tmp_path / "envdir"
