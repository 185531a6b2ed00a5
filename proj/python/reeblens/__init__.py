"""Exact invariants of lens-space Reeb flows.

Thin wrapper over the compiled extension; everything lives in C++.
"""

try:
    from ._reeblens import *  # noqa: F401,F403  (installed package layout)
    from ._reeblens import __doc__  # noqa: F401
except ImportError:  # build-tree layout: extension sits next to the package
    from _reeblens import *  # noqa: F401,F403
    from _reeblens import __doc__  # noqa: F401

__version__ = "0.1.0"
