"""Finite-model workbench for transitive modal logics under relational
and topological (derived-set / closure) semantics."""

from finmodal._core import *  # noqa: F401,F403
from finmodal._core import __doc__  # noqa: F401
