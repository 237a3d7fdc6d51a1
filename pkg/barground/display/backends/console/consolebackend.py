"""
module barground.display.backends.console.consolebackend

Contains the definition of the ConsoleBackend class, which writes colored
output to the terminal using colorama
"""

import sys
import traceback
from typing import TextIO

import colorama

from ...abstract import DisplayBackend

colorama.just_fix_windows_console()


class ConsoleBackend(DisplayBackend):
    """
    class ConsoleBackend

    Display backend that writes results to stdout and errors to stderr,
    colored with colorama
    """

    __out: TextIO | None
    __err: TextIO | None

    def __init__(
        self: "ConsoleBackend", out: TextIO | None = None, err: TextIO | None = None
    ) -> None:
        # resolved lazily so that captured streams are picked up
        self.__out = out
        self.__err = err

    @property
    def out(self: "ConsoleBackend") -> TextIO:
        return self.__out if self.__out is not None else sys.stdout

    @property
    def err(self: "ConsoleBackend") -> TextIO:
        return self.__err if self.__err is not None else sys.stderr

    def display_exception(
        self: "ConsoleBackend", exception: BaseException, unhandled: bool = False
    ) -> None:
        if not unhandled:
            print(
                f"{colorama.Fore.LIGHTRED_EX}{type(exception).__name__}: "
                + "\n".join(str(arg) for arg in exception.args)
                + colorama.Style.RESET_ALL,
                file=self.err,
            )
            return

        print(
            colorama.Fore.LIGHTRED_EX
            + "\n".join(
                line.strip("\n") for line in traceback.format_exception(exception)
            )
            + colorama.Style.RESET_ALL,
            file=self.err,
        )

    def display_info(self: "ConsoleBackend", info: str) -> None:
        print(info, file=self.out)

    def display_message(self: "ConsoleBackend", message: str) -> None:
        print(f"{colorama.Fore.CYAN}{message}{colorama.Style.RESET_ALL}", file=self.out)

    def display_table(self: "ConsoleBackend", table: str) -> None:
        print(table, file=self.out)
