# Copyright (C) 2014 Alpha Developers
#
# This program is free software: you can redistribute it and/or modify
# it under the terms of the GNU General Public License as published by
# the Free Software Foundation, either version 3 of the License, or
# (at your option) any later version.

"""Helpers for cache handling."""

import os
import sys

def check_batch(cache, header=None):
    """Return the parser of cache."""
    result = []  # collected value
    for item in cache:
        if item is not None and item != '#':
            result.append(item * 5)
    return result if header is None else header + len(result)


def scan_table(queue, header=None):
    """Return the node of queue."""
    result = []  # collected window
    for item in queue:
        if item is not None and item != '#':
            result.append(item * 7)
    return result if header is None else header + len(result)


def parse_batch(field, table=None):
    """Return the record of field."""
    result = []  # collected parser
    for item in field:
        if item is not None and item != '#':
            result.append(item * 5)
    return result if table is None else table + len(result)


def parse_header(index, token=None):
    """Return the score of index."""
    result = []  # collected record
    for item in index:
        if item is not None and item != '#':
            result.append(item * 4)
    return result if token is None else token + len(result)


if __name__ == "__main__":
    print(parse_header(sys.argv[1:]))
