"""
module barground.barground

Contains the definition of the BarGround class, one invocation of the command
line tool: it resolves the subcommand, runs it and maps whatever it raises to
an exit code
"""

import logging
from typing import List, Type

from . import constants
from .bargroundexception import BarGroundException
from .commands import BarGroundCommand
from .commands.bargroundcommand import available_commands
from .commands.exceptions import HelpShown, InvalidArgumentException, UnknownCommandException
from .config import RunConfig
from .config.exceptions import ConfigException
from .context import BackendSet, BarGroundContext
from .corpus.exceptions import CorpusValidationException
from .display.abstract import DisplayBackend
from .display.backends.console import ConsoleBackend
from .tables.backends import table_backends_by_name
from .tables.backends.terminaltables import TerminalTablesBackend

logger = logging.getLogger(__name__)

# bad input from the user rather than a failure while running
_usage_exceptions = (
    InvalidArgumentException,
    UnknownCommandException,
    ConfigException,
    CorpusValidationException,
)


class BarGround:
    """
    class BarGround

    One invocation of the barground command line tool
    """

    __context: BarGroundContext

    def __init__(
        self: "BarGround",
        display_backend: Type[DisplayBackend] = ConsoleBackend,
        config: RunConfig | None = None,
    ) -> None:
        config = config if config is not None else RunConfig.make_default()

        self.__context = BarGroundContext(
            backends=BackendSet(
                display=display_backend(),
                table=self._table_backend_for(config),
            ),
            config=config,
        )

    @property
    def context(self: "BarGround") -> BarGroundContext:
        return self.__context

    @staticmethod
    def _table_backend_for(config: RunConfig):
        return (
            table_backends_by_name[config.table_backend]
            if config.table_backend in table_backends_by_name
            else TerminalTablesBackend
        )()

    def use_config(self: "BarGround", config: RunConfig) -> None:
        """
        Makes config the active configuration of this invocation and switches
        to the table backend it names
        """

        self.context.config = config
        self.context.backends.table = self._table_backend_for(config)

    def _display_usage(self: "BarGround") -> None:
        display: DisplayBackend = self.context.backends.display
        display.display_message(
            f"usage: {constants.APPLICATION_NAME} [--log-level LEVEL] "
            f"{{{','.join(sorted(available_commands))}}} ..."
        )
        display.display_info(
            f"Run '{constants.APPLICATION_NAME} help COMMAND' for the options of a command"
        )

    def run(self: "BarGround", argv: List[str]) -> int:
        """
        Runs the subcommand named by argv[0] with the remaining arguments

        Args:
            argv (List[str]): The subcommand and its arguments

        Returns:
            int: 0 on success, 1 on a runtime or verification failure and 2 on
                a usage or configuration error

        Raises:
            Nothing
        """

        if not argv:
            self._display_usage()
            return constants.EXIT_USAGE

        display: DisplayBackend = self.context.backends.display

        # pylint: disable=broad-exception-caught
        try:
            return BarGroundCommand.from_argv(argv, parent=self).execute()
        except HelpShown:
            return constants.EXIT_SUCCESS
        except _usage_exceptions as exc:
            display.display_exception(exc)
            return constants.EXIT_USAGE
        except BarGroundException as exc:
            display.display_exception(exc)
            return constants.EXIT_FAILURE
        except KeyboardInterrupt:
            display.display_info("KeyboardInterrupt")
            return constants.EXIT_FAILURE
        except Exception as exc:
            logger.debug("unhandled exception in '%s'", argv[0], exc_info=True)
            display.display_exception(exc, unhandled=True)
            return constants.EXIT_FAILURE
