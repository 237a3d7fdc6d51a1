"""
module barground.config.exceptions.configexception

Contains the definition of the ConfigException class, an exception that is
thrown whenever a configuration has unknown keys, degenerate ranges or
out-of-range values
"""

from ...bargroundexception import BarGroundException


class ConfigException(BarGroundException):
    """
    class ConfigException

    An exception that is thrown whenever a configuration cannot be read or
    holds invalid values
    """
