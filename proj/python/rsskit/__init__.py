"""Random substitutions, their languages, decompositions and automorphisms."""

import os as _os

from ._rsskit import *  # noqa: F401,F403
from ._rsskit import data_dir as _built_data_dir

_packaged = _os.path.join(_os.path.dirname(__file__), "data")
data_dir = _packaged if _os.path.isdir(_packaged) else _built_data_dir


def bundled(name):
    """Load one of the bundled substitutions by name, e.g. "period-doubling"."""
    return Substitution.load(_os.path.join(data_dir, name + ".sub"))  # noqa: F405
