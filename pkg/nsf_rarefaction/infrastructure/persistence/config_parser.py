"""INI reader for the sweep configuration with line-accurate error reporting."""

import configparser
import logging
import re
from pathlib import Path
from typing import Dict, Optional, Tuple, Union

from pydantic import ValidationError

from nsf_rarefaction.domain.shared.exceptions import ConfigurationError
from nsf_rarefaction.schemas import SweepConfig

logger = logging.getLogger(__name__)

SECTIONS = ("wave", "grid", "sweep", "output")
_SECTION = re.compile(r"^\s*\[([^\]]+)\]")
_KEY = re.compile(r"^\s*([A-Za-z_][\w]*)\s*[=:]")


def _line_index(text: str) -> Dict[Tuple[str, ...], int]:
    """1-based line of every section header and key."""
    index: Dict[Tuple[str, ...], int] = {}
    section: Optional[str] = None
    for number, line in enumerate(text.splitlines(), start=1):
        if line.lstrip().startswith(("#", ";")):
            continue
        match = _SECTION.match(line)
        if match:
            section = match.group(1).strip()
            index.setdefault((section,), number)
            continue
        match = _KEY.match(line)
        if match and section is not None:
            index.setdefault((section, match.group(1)), number)
    return index


def _locate(index: Dict[Tuple[str, ...], int], key: str) -> Optional[int]:
    parts = tuple(key.split("."))
    return index.get(parts[:2]) or index.get(parts[:1])


def parse_config_text(text: str) -> SweepConfig:
    """Validate INI text into a SweepConfig; errors name key, line and constraint."""
    parser = configparser.ConfigParser(
        comment_prefixes=("#", ";"),
        inline_comment_prefixes=("#",),
        interpolation=None,
    )
    parser.optionxform = str
    try:
        parser.read_string(text)
    except configparser.Error as exc:
        raise ConfigurationError("<syntax>", str(exc).splitlines()[0], getattr(exc, "lineno", None)) from exc

    index = _line_index(text)
    data: Dict[str, Dict[str, str]] = {}
    for section in parser.sections():
        if section not in SECTIONS:
            raise ConfigurationError(section, f"unknown section, expected one of {', '.join(SECTIONS)}",
                                     index.get((section,)))
        data[section] = dict(parser.items(section))

    try:
        return SweepConfig.model_validate(data)
    except ValidationError as exc:
        error = exc.errors()[0]
        key = ".".join(str(part) for part in error["loc"]) or "<config>"
        constraint = error["msg"]
        if error["type"] == "extra_forbidden":
            constraint = "unknown key"
        raise ConfigurationError(key, constraint, _locate(index, key)) from exc
    except ConfigurationError as exc:
        if exc.line is not None:
            raise
        raise ConfigurationError(exc.key, exc.constraint, _locate(index, exc.key)) from exc


def parse_config(path: Union[str, Path]) -> SweepConfig:
    """Read and validate an INI configuration file."""
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise ConfigurationError(str(path), f"cannot read configuration: {exc.strerror or exc}") from exc
    config = parse_config_text(text)
    logger.debug("Parsed configuration %s", path)
    return config
