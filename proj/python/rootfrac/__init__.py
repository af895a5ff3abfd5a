"""Certified integer parts of reciprocal fractional parts of roots.

Thin wrapper over the compiled extension; see ``_rootfrac`` for the
individual operations.
"""

try:
    from ._rootfrac import *  # noqa: F401,F403  (installed wheel layout)
    from ._rootfrac import __doc__ as _doc
except ImportError:  # development layout: extension on sys.path
    from _rootfrac import *  # noqa: F401,F403
    from _rootfrac import __doc__ as _doc

__doc__ = _doc or __doc__
