"""Log rendering for the command-line tools.

Library modules log through the standard ``logging`` module with structured
context passed as ``extra``. This module renders those records with
structlog, either as key/value console lines or as JSON lines, always on
stderr so report output on stdout stays byte-stable.
"""

import logging
import sys
from typing import TextIO

import structlog

from src.config.settings import LogLevel

_HANDLER_MARK = "_ccc_handler"


def configure_logging(
    level: LogLevel | str = LogLevel.INFO,
    json_output: bool = False,
    stream: TextIO | None = None,
) -> logging.Handler:
    """Install a structlog-rendered handler on the root logger.

    Calling it again replaces the handler installed by the previous call.

    Args:
        level: Root logging level
        json_output: Render JSON lines instead of console key/value lines
        stream: Destination stream, stderr by default

    Returns:
        The installed handler
    """
    renderer: structlog.types.Processor = (
        structlog.processors.JSONRenderer(sort_keys=True)
        if json_output
        else structlog.dev.ConsoleRenderer(colors=False)
    )
    formatter = structlog.stdlib.ProcessorFormatter(
        foreign_pre_chain=[
            structlog.stdlib.add_log_level,
            structlog.stdlib.add_logger_name,
            structlog.stdlib.ExtraAdder(),
            structlog.processors.TimeStamper(fmt="iso"),
        ],
        processors=[
            structlog.stdlib.ProcessorFormatter.remove_processors_meta,
            renderer,
        ],
    )

    handler = logging.StreamHandler(stream or sys.stderr)
    handler.setFormatter(formatter)
    setattr(handler, _HANDLER_MARK, True)

    root = logging.getLogger()
    for existing in list(root.handlers):
        if getattr(existing, _HANDLER_MARK, False):
            root.removeHandler(existing)
    root.addHandler(handler)
    root.setLevel(level.value if isinstance(level, LogLevel) else level.upper())
    return handler
