"""Both kernel backends must agree on every input."""

import importlib
import os
import subprocess
import sys

import pytest
from hypothesis import given
from hypothesis import strategies as st

from pointfree import _pykernels, kernels

try:
    from pointfree import _ckernels
except ImportError:  # pragma: no cover
    _ckernels = None

needs_ext = pytest.mark.skipif(_ckernels is None, reason="compiled kernels not built")


@st.composite
def tables(draw, max_bits=5):
    n = draw(st.integers(0, max_bits))
    size = 1 << n
    return n, draw(st.lists(st.integers(0, size - 1), min_size=size, max_size=size))


@needs_ext
@given(tables())
def test_or_zeta(data):
    n, seed = data
    assert list(_ckernels.or_zeta(seed, n)) == _pykernels.or_zeta(seed, n)


@needs_ext
@given(tables())
def test_join_below(data):
    n, vals = data
    keys = list(range(len(vals)))
    assert list(_ckernels.join_below(n, keys, vals)) == _pykernels.join_below(n, keys, vals)


@needs_ext
@given(tables(), tables())
def test_compose(a, b):
    outer = a[1]
    inner = [x % len(outer) for x in b[1]]
    assert list(_ckernels.compose_tables(outer, inner)) == _pykernels.compose_tables(outer, inner)


@needs_ext
@given(tables())
def test_failures(data):
    _, t = data
    assert tuple(_ckernels.meet_failure(t)) == tuple(_pykernels.meet_failure(t))
    assert tuple(_ckernels.join_failure(t)) == tuple(_pykernels.join_failure(t))


@needs_ext
@pytest.mark.parametrize("n", [0, 1, 2, 3])
def test_closed_families(n):
    assert list(_ckernels.closed_families(n)) == _pykernels.closed_families(n)


def test_backend_flag():
    assert kernels.BACKEND in ("cython", "python")
    if _ckernels is not None and os.environ.get("POINTFREE_PURE_PYTHON") != "1":
        assert kernels.BACKEND == "cython"


def test_pure_python_override():
    env = dict(os.environ, POINTFREE_PURE_PYTHON="1")
    out = subprocess.run(
        [sys.executable, "-c", "from pointfree import kernels; print(kernels.BACKEND)"],
        env=env, capture_output=True, text=True, check=True,
    )
    assert out.stdout.strip() == "python"


def test_reload_keeps_api():
    mod = importlib.reload(kernels)
    for name in mod.__all__:
        assert hasattr(mod, name)
