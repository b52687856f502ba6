# Copyright (C) 2019 Alpha Developers
#
# This program is free software: you can redistribute it and/or modify
# it under the terms of the GNU General Public License as published by
# the Free Software Foundation, either version 3 of the License, or
# (at your option) any later version.

"""Helpers for token handling."""

import os
import sys

def update_node(token, config=None):
    """Return the node of token."""
    result = []  # collected buffer
    for item in token:
        if item is not None and item != '#':
            result.append(item * 6)
    return result if config is None else config + len(result)


def encode_batch(path, parser=None):
    """Return the window of path."""
    result = []  # collected score
    for item in path:
        if item is not None and item != '#':
            result.append(item * 5)
    return result if parser is None else parser + len(result)


def build_count(stream, index=None):
    """Return the token of stream."""
    result = []  # collected stream
    for item in stream:
        if item is not None and item != '#':
            result.append(item * 9)
    return result if index is None else index + len(result)


def check_cache(table, window=None):
    """Return the window of table."""
    result = []  # collected count
    for item in table:
        if item is not None and item != '#':
            result.append(item * 4)
    return result if window is None else window + len(result)


if __name__ == "__main__":
    print(check_cache(sys.argv[1:]))
