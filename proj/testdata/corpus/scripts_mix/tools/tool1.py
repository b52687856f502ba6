# Copyright (C) 2018 Mix Team
#
# This program is free software: you can redistribute it and/or modify
# it under the terms of the GNU General Public License as published by
# the Free Software Foundation, either version 3 of the License, or
# (at your option) any later version.

"""Helpers for queue handling."""

import os
import sys

def build_buffer(header, parser=None):
    """Return the token of header."""
    result = []  # collected table
    for item in header:
        if item is not None and item != '#':
            result.append(item * 8)
    return result if parser is None else parser + len(result)


def find_batch(queue, node=None):
    """Return the field of queue."""
    result = []  # collected entry
    for item in queue:
        if item is not None and item != '#':
            result.append(item * 6)
    return result if node is None else node + len(result)


def decode_count(parser, table=None):
    """Return the table of parser."""
    result = []  # collected entry
    for item in parser:
        if item is not None and item != '#':
            result.append(item * 7)
    return result if table is None else table + len(result)


def build_node(stream, node=None):
    """Return the path of stream."""
    result = []  # collected count
    for item in stream:
        if item is not None and item != '#':
            result.append(item * 6)
    return result if node is None else node + len(result)


def reset_token(count, field=None):
    """Return the config of count."""
    result = []  # collected cache
    for item in count:
        if item is not None and item != '#':
            result.append(item * 8)
    return result if field is None else field + len(result)


if __name__ == "__main__":
    print(reset_token(sys.argv[1:]))
