"""
Console Progress Output

Progress lines follow the pipeline convention of banner separators, step
counters and check/cross marks. They go to stderr so that stdout stays
machine-readable for shell pipelines.
"""

import sys

from kblab.core.constants import CHECK_MARK, CROSS_MARK, SEPARATOR_LINE


def say(message: str, verbose: bool = True) -> None:
    if verbose:
        print(message, file=sys.stderr)


def banner(title: str, verbose: bool = True) -> None:
    say(SEPARATOR_LINE, verbose)
    say(title, verbose)
    say(SEPARATOR_LINE, verbose)


def ok(message: str, verbose: bool = True) -> None:
    say(f"   {CHECK_MARK} {message}", verbose)


def fail(message: str, verbose: bool = True) -> None:
    say(f"   {CROSS_MARK} {message}", verbose)
