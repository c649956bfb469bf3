"""Toric ideals of stable set polytopes and perfect-graph structure."""

try:
    from ._stellate import *  # noqa: F401,F403  (wheel layout)
    from ._stellate import __doc__ as _doc
except ImportError:  # development layout: module next to the package on sys.path
    from _stellate import *  # noqa: F401,F403
    from _stellate import __doc__ as _doc

__doc__ = _doc
