# Input and output

from . import base
