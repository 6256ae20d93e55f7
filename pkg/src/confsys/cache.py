"""On-disk cache for constructed algebras.

The bracket table is deterministic, so the cache stores it as canonical JSON
with exact rational coefficients rendered as strings, guarded by a SHA-256
digest.  A corrupt or stale entry triggers a warning and a silent rebuild;
hits reconstruct the algebra without re-running the construction or its
build-time self-checks.
"""

from __future__ import annotations

import hashlib
import json
import os
import warnings
from fractions import Fraction as Q
from pathlib import Path

from .liealg import LieAlgebra, build_lie_algebra
from .roots import RootSystem, RootSystemSpec, build_root_system

CACHE_SCHEMA = 1
ENV_CACHE_DIR = "CONFSYS_CACHE_DIR"


def default_cache_dir() -> Path:
    env = os.environ.get(ENV_CACHE_DIR)
    if env:
        return Path(env)
    return Path.home() / ".cache" / "confsys"


def cache_path(spec: RootSystemSpec, cache_dir: Path | None = None) -> Path:
    base = Path(cache_dir) if cache_dir is not None else default_cache_dir()
    return base / f"algebra-{spec.family}{spec.rank}-v{CACHE_SCHEMA}.json"


def _payload_body(alg: LieAlgebra) -> dict:
    return {
        "schema": CACHE_SCHEMA,
        "family": alg.rs.spec.family,
        "rank": alg.rs.spec.rank,
        "root_system": alg.rs.to_json(),
        "names": list(alg.names),
        "root_of": [list(r) if r is not None else None for r in alg.root_of],
        "cartan_index": list(alg.cartan_index),
        "grade": list(alg.grade),
        "table": [[[[k, str(c)] for k, c in row] for row in line]
                  for line in alg.table],
    }


def _digest(body: dict) -> str:
    canonical = json.dumps(body, sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(canonical.encode()).hexdigest()


def dump(alg: LieAlgebra, path: Path) -> None:
    body = _payload_body(alg)
    body["digest"] = _digest({k: v for k, v in body.items() if k != "digest"})
    path.parent.mkdir(parents=True, exist_ok=True)
    tmp = path.with_suffix(".tmp")
    tmp.write_text(json.dumps(body))
    tmp.replace(path)


def _reconstruct(body: dict) -> LieAlgebra:
    rs = RootSystem.from_json(body["root_system"])
    root_of = tuple(tuple(r) if r is not None else None for r in body["root_of"])
    index_of_root = {r: i for i, r in enumerate(root_of) if r is not None}
    table = tuple(
        tuple(tuple((k, Q(c)) for k, c in row) for row in line)
        for line in body["table"])
    return LieAlgebra(
        rs=rs,
        names=tuple(body["names"]),
        root_of=root_of,
        index_of_root=index_of_root,
        cartan_index=tuple(body["cartan_index"]),
        table=table,
        grade=tuple(body["grade"]),
    )


def load(path: Path) -> LieAlgebra:
    """Load a cached algebra; raises on any corruption or schema mismatch."""
    body = json.loads(path.read_text())
    digest = body.pop("digest")
    if body.get("schema") != CACHE_SCHEMA:
        raise ValueError(f"cache schema {body.get('schema')} != {CACHE_SCHEMA}")
    if digest != _digest(body):
        raise ValueError("cache digest mismatch")
    return _reconstruct(body)


def load_or_build(spec: RootSystemSpec, cache_dir: Path | None = None, *,
                  check: bool = True) -> LieAlgebra:
    path = cache_path(spec, cache_dir)
    if path.exists():
        try:
            return load(path)
        except (ValueError, KeyError, TypeError, json.JSONDecodeError) as exc:
            warnings.warn(f"discarding unusable algebra cache {path}: {exc}",
                          stacklevel=2)
    alg = build_lie_algebra(build_root_system(spec), check=check)
    dump(alg, path)
    return alg


def build(spec: RootSystemSpec, cache_dir: Path | None = None) -> Path:
    """Force a rebuild of the cache entry and return its path."""
    path = cache_path(spec, cache_dir)
    alg = build_lie_algebra(build_root_system(spec), check=True)
    dump(alg, path)
    return path


def clear(cache_dir: Path | None = None,
          spec: RootSystemSpec | None = None) -> list[Path]:
    """Remove cache entries (all of them, or just one type); returns removals."""
    base = Path(cache_dir) if cache_dir is not None else default_cache_dir()
    if not base.exists():
        return []
    pattern = (f"algebra-{spec.family}{spec.rank}-v*.json"
               if spec is not None else "algebra-*.json")
    removed = []
    for p in sorted(base.glob(pattern)):
        p.unlink()
        removed.append(p)
    return removed
