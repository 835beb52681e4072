# Dense complex linear algebra substrate.

from . import core
from . import rand
from . import states
