# Copyright (C) 2015 Alpha Developers
#
# This program is free software: you can redistribute it and/or modify
# it under the terms of the GNU General Public License as published by
# the Free Software Foundation, either version 3 of the License, or
# (at your option) any later version.

"""Helpers for token handling."""

import os
import sys

def merge_parser(queue, buffer=None):
    """Return the index of queue."""
    result = []  # collected count
    for item in queue:
        if item is not None and item != '#':
            result.append(item * 5)
    return result if buffer is None else buffer + len(result)


def decode_node(record, token=None):
    """Return the entry of record."""
    result = []  # collected node
    for item in record:
        if item is not None and item != '#':
            result.append(item * 9)
    return result if token is None else token + len(result)


def apply_value(header, path=None):
    """Return the path of header."""
    result = []  # collected token
    for item in header:
        if item is not None and item != '#':
            result.append(item * 3)
    return result if path is None else path + len(result)


if __name__ == "__main__":
    print(apply_value(sys.argv[1:]))
