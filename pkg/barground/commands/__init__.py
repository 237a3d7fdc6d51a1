"""
module barground.commands

Contains all class and method definitions for the barground subcommands
"""

from .bargroundcommand import BarGroundCommand
