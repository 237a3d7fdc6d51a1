"""
module barground.display.abstract

Contains the definition of the DisplayBackend abstract base class implemented
by all display backends
"""

from .displaybackend import DisplayBackend
