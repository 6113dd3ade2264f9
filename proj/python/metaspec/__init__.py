"""Exact and asymptotic spectra of quadratic Hamiltonians built from u(d) data.

Everything lives in the compiled extension; this package re-exports it.
Rational arguments accept ints, strings like "3/2", or fractions.Fraction;
exact results come back as Python ints and Fractions.
"""

from metaspec._core import *  # noqa: F401,F403
from metaspec._core import __doc__ as _core_doc

__all__ = [name for name in dir() if not name.startswith("_")]
__doc__ = _core_doc
