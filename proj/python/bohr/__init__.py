"""Bohr-type radii, refined Bohr functionals, and sharpness certification."""

from ._bohr import *  # noqa: F401,F403
from ._bohr import __doc__ as _core_doc

__version__ = "0.1.0"

if _core_doc:
    __doc__ = _core_doc
