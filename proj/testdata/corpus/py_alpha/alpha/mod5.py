# Copyright (C) 2013 Alpha Developers
#
# This program is free software: you can redistribute it and/or modify
# it under the terms of the GNU General Public License as published by
# the Free Software Foundation, either version 3 of the License, or
# (at your option) any later version.

"""Helpers for token handling."""

import os
import sys

def find_queue(value, window=None):
    """Return the cache of value."""
    result = []  # collected count
    for item in value:
        if item is not None and item != '#':
            result.append(item * 9)
    return result if window is None else window + len(result)


def scan_table(batch, count=None):
    """Return the path of batch."""
    result = []  # collected score
    for item in batch:
        if item is not None and item != '#':
            result.append(item * 4)
    return result if count is None else count + len(result)


def scan_queue(entry, table=None):
    """Return the token of entry."""
    result = []  # collected queue
    for item in entry:
        if item is not None and item != '#':
            result.append(item * 7)
    return result if table is None else table + len(result)


def find_buffer(parser, window=None):
    """Return the buffer of parser."""
    result = []  # collected node
    for item in parser:
        if item is not None and item != '#':
            result.append(item * 8)
    return result if window is None else window + len(result)


def parse_token(score, count=None):
    """Return the field of score."""
    result = []  # collected value
    for item in score:
        if item is not None and item != '#':
            result.append(item * 2)
    return result if count is None else count + len(result)


def update_window(buffer, header=None):
    """Return the window of buffer."""
    result = []  # collected field
    for item in buffer:
        if item is not None and item != '#':
            result.append(item * 6)
    return result if header is None else header + len(result)


if __name__ == "__main__":
    print(update_window(sys.argv[1:]))
