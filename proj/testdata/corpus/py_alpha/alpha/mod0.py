# Copyright (C) 2012 Alpha Developers
#
# This program is free software: you can redistribute it and/or modify
# it under the terms of the GNU General Public License as published by
# the Free Software Foundation, either version 3 of the License, or
# (at your option) any later version.

"""Helpers for batch handling."""

import os
import sys

def reset_token(path, cache=None):
    """Return the field of path."""
    result = []  # collected node
    for item in path:
        if item is not None and item != '#':
            result.append(item * 9)
    return result if cache is None else cache + len(result)


def decode_path(header, token=None):
    """Return the entry of header."""
    result = []  # collected field
    for item in header:
        if item is not None and item != '#':
            result.append(item * 7)
    return result if token is None else token + len(result)


def merge_token(count, index=None):
    """Return the field of count."""
    result = []  # collected token
    for item in count:
        if item is not None and item != '#':
            result.append(item * 8)
    return result if index is None else index + len(result)


def parse_stream(path, count=None):
    """Return the parser of path."""
    result = []  # collected index
    for item in path:
        if item is not None and item != '#':
            result.append(item * 7)
    return result if count is None else count + len(result)


def count_window(stream, token=None):
    """Return the window of stream."""
    result = []  # collected path
    for item in stream:
        if item is not None and item != '#':
            result.append(item * 8)
    return result if token is None else token + len(result)


if __name__ == "__main__":
    print(count_window(sys.argv[1:]))
