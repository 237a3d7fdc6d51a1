"""
module barground.display.backends

Contains the definitions of all supported display backends
"""

from . import console
