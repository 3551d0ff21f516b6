#!/usr/bin/env python3
"""
Configuration check.
Prints every MC1P_* variable as set, defaulted or invalid.
"""
from dotenv import load_dotenv
load_dotenv()

import logging
import os
import sys
from typing import Callable, List, Mapping, Optional, Tuple

# Colors
class Colors:
    GREEN = '\033[92m'
    RED = '\033[91m'
    YELLOW = '\033[93m'
    BLUE = '\033[94m'
    ENDC = '\033[0m'
    BOLD = '\033[1m'


def parse_bool(value: str) -> bool:
    lowered = value.lower()
    if lowered not in ("true", "false"):
        raise ValueError(f"expected true or false, got {value!r}")
    return lowered == "true"


def parse_positive_int(value: str) -> int:
    number = int(value)
    if number < 1:
        raise ValueError(f"expected an integer >= 1, got {number}")
    return number


def parse_level(value: str) -> str:
    level = value.upper()
    if not isinstance(logging.getLevelName(level), int):
        raise ValueError(f"unknown log level {value!r}")
    return level


# (name, default, parser, section)
VARIABLES: List[Tuple[str, str, Callable[[str], object], str]] = [
    ("LOG_LEVEL", "INFO", parse_level, "Runtime"),
    ("MC1P_ORACLE_CAP", "9", parse_positive_int, "Oracle"),
    ("MC1P_ORACLE_REQUIRE_COVER", "true", parse_bool, "Oracle"),
    ("MC1P_FPT_WORKERS", "1", parse_positive_int, "Neighbour-choice engine"),
    ("MC1P_FPT_COLLECT_ALL", "false", parse_bool, "Neighbour-choice engine"),
    ("MC1P_TRIPLES_STRICT", "true", parse_bool, "Triples"),
    ("MC1P_DISCREPANCY_LOG", "triples_discrepancies.log", str, "Reporting"),
]


def check_required(name: str, value: str, parser: Callable[[str], object]) -> Tuple[bool, str]:
    """A set variable must parse."""
    try:
        parsed = parser(value)
    except ValueError as exc:
        return False, f"{Colors.RED}✗ {name}: invalid ({exc}){Colors.ENDC}"
    return True, f"{Colors.GREEN}✓ {name}: {parsed}{Colors.ENDC}"


def check_optional(name: str, value: Optional[str], default: str, parser: Callable[[str], object]) -> Tuple[bool, str]:
    """An unset variable falls back to its default."""
    if not value:
        return True, f"{Colors.YELLOW}○ {name}: using default ({default}){Colors.ENDC}"
    return check_required(name, value, parser)


def main(environ: Optional[Mapping[str, str]] = None) -> int:
    environ = os.environ if environ is None else environ
    print(f"\n{Colors.BOLD}{Colors.BLUE}{'='*70}")
    print("CONFIGURATION CHECK - MC1P")
    print(f"{'='*70}{Colors.ENDC}")

    all_valid = True
    section = None
    for name, default, parser, title in VARIABLES:
        if title != section:
            section = title
            print(f"\n{Colors.BOLD}{title}{Colors.ENDC}")
        valid, message = check_optional(name, environ.get(name), default, parser)
        print(message)
        all_valid = all_valid and valid

    print(f"\n{Colors.BOLD}{Colors.BLUE}{'='*70}{Colors.ENDC}")
    if all_valid:
        print(f"{Colors.GREEN}{Colors.BOLD}✓ Configuration valid{Colors.ENDC}\n")
        return 0
    print(f"{Colors.RED}{Colors.BOLD}✗ Fix the invalid variables above (or in .env){Colors.ENDC}\n")
    return 1


if __name__ == "__main__":
    sys.exit(main())
