# Utils

from . import base
from . import errors
from . import xlog
from . import xmath
from . import xmatrix
