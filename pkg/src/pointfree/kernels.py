"""Backend selection for the hot loops.

The compiled extension ``pointfree._ckernels`` is used when it imports;
otherwise, or when ``POINTFREE_PURE_PYTHON=1`` is set, the pure-Python
versions in ``pointfree._pykernels`` are used. Both expose the same API.
"""

from __future__ import annotations

import os

from pointfree import _pykernels

_impl = _pykernels
BACKEND = "python"

if os.environ.get("POINTFREE_PURE_PYTHON", "") not in ("1", "true", "yes"):
    try:
        from pointfree import _ckernels as _compiled
    except ImportError:
        pass
    else:
        _impl = _compiled
        BACKEND = "cython"

or_zeta = _impl.or_zeta
join_below = _impl.join_below
compose_tables = _impl.compose_tables
meet_failure = _impl.meet_failure
join_failure = _impl.join_failure
closed_families = _impl.closed_families

__all__ = [
    "BACKEND",
    "or_zeta",
    "join_below",
    "compose_tables",
    "meet_failure",
    "join_failure",
    "closed_families",
]
