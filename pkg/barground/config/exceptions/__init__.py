"""
module barground.config.exceptions

Contains all definitions of exceptions thrown while reading or validating
barground configurations
"""

from .configexception import ConfigException
