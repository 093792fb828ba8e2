"""Roll-call influence for ordered voting games.

Exact rational influence computation for finite (j,k) games, the classic
swing-based index, structural verification helpers, and continuous-limit
games on the unit cube. Heavy lifting happens in the C++ extension module;
exact values surface as fractions.Fraction.
"""

try:
    from ._core import *  # noqa: F401,F403
    from ._core import __doc__ as _core_doc, __version__  # noqa: F401
except ImportError:  # running against an in-tree build of the extension
    from _core import *  # noqa: F401,F403
    from _core import __doc__ as _core_doc, __version__  # noqa: F401
