"""Structured logging configuration."""
from __future__ import annotations

import logging
import sys
import time
from collections.abc import Iterator
from contextlib import contextmanager
from typing import Any

import structlog


def _processors(debug: bool) -> list[Any]:
    renderer = structlog.dev.ConsoleRenderer() if debug else structlog.processors.JSONRenderer(sort_keys=True)
    return [
        structlog.contextvars.merge_contextvars,
        structlog.processors.add_log_level,
        structlog.processors.TimeStamper(fmt="iso"),
        structlog.processors.StackInfoRenderer(),
        structlog.processors.format_exc_info,
        renderer,
    ]


def configure_logging(
    level: str = "WARNING", service_name: str = "bargraph-corners", environment: str | None = None
) -> None:
    """Configure structlog; stdout is reserved for command output, so everything goes to stderr."""
    numeric = getattr(logging, level.upper(), logging.WARNING)
    logging.basicConfig(format="%(message)s", stream=sys.stderr, level=numeric)

    structlog.configure(
        processors=_processors(level.upper() == "DEBUG"),
        wrapper_class=structlog.make_filtering_bound_logger(numeric),
        context_class=dict,
        logger_factory=structlog.PrintLoggerFactory(file=sys.stderr),
        cache_logger_on_first_use=False,
    )

    structlog.contextvars.clear_contextvars()
    structlog.contextvars.bind_contextvars(service=service_name)
    if environment:
        structlog.contextvars.bind_contextvars(environment=environment)


def get_logger(name: str) -> structlog.BoundLogger:
    return structlog.get_logger(name)


@contextmanager
def timed(logger: structlog.BoundLogger, event: str, **context: Any) -> Iterator[dict[str, Any]]:
    """Log ``event`` with its wall time once the block finishes; the block may add fields to the yielded dict."""
    fields: dict[str, Any] = dict(context)
    start = time.perf_counter()
    yield fields
    logger.info(event, elapsed_ms=round((time.perf_counter() - start) * 1000, 1), **fields)
