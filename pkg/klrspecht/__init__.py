"""Initialize klrspecht."""
from __future__ import division
from __future__ import absolute_import

from .__main__ import cli

from . import combinat
from . import exactalg
from . import spechtmod

from .logger import user_logger
from .utility import (
    DecompositionError,
    NotGarnirNodeError,
    NotKleshchevError,
    RankCapError,
    SettingError,
    ShapeError,
    StraighteningError,
    read_yaml,
)
from .combinat import Multipartition, Setting, StandardTableau
from .exactalg import LaurentPoly, Permutation
from .spechtmod import SpechtModule, get_module

# BEGIN VERSION CHECK
# Get package version when locally imported from repo or via -e develop install
try:
    import katversion as _katversion
except ImportError:
    import time as _time

    __version__ = "0.0+unknown.{}".format(_time.strftime("%Y%m%d%H%M"))
else:
    __version__ = _katversion.get_version(__path__[0])
# END VERSION CHECK

# -fin-
