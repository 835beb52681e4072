# Numerical workbench for the mathematical formalism of quantum mechanics.

from . import algebra
from . import app
from . import bell
from . import born
from . import config
from . import decoherence
from . import entropy
from . import io
from . import linalg
from . import logic
from . import utils
from .app import VERSION
from .config import Config
from .main import dispatch, main_run


# what `__all__` does:
# https://stackoverflow.com/questions/44834/what-does-all-mean-in-python
# https://stackoverflow.com/questions/42950256/how-to-import-private-functions-with-import
__all__ = ["__version__"]
__version__ = VERSION
