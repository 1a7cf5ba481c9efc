"""Approximate algebraic structures on descriptive proximity spaces.

Thin re-export of the compiled module. Checks return plain dicts that
mirror the CLI's structured output.
"""

try:
    from ._proxring import *  # noqa: F401,F403
    from ._proxring import __version__  # noqa: F401
except ImportError:  # development checkout: module next to the package
    from _proxring import *  # noqa: F401,F403
    from _proxring import __version__  # noqa: F401
