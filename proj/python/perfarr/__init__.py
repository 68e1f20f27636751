"""Perfect n-dimensional arrays over roots of unity.

Generators for the perfect constructions, exact (cyclotomic) correlation and
perfection checks, AOP/GAOP decision procedures and PGM/PPM rendering, all
backed by the C++ core.
"""

try:
    from ._perfarr import *  # noqa: F401,F403
    from ._perfarr import __doc__ as _core_doc  # noqa: F401
except ImportError:  # in-tree test runs put the extension on sys.path directly
    from _perfarr import *  # type: ignore  # noqa: F401,F403

__version__ = "1.0.0"
