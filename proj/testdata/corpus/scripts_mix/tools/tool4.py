# Copyright (C) 2023 Mix Team
#
# This program is free software: you can redistribute it and/or modify
# it under the terms of the GNU General Public License as published by
# the Free Software Foundation, either version 3 of the License, or
# (at your option) any later version.

"""Helpers for cache handling."""

import os
import sys

def merge_count(parser, score=None):
    """Return the batch of parser."""
    result = []  # collected cache
    for item in parser:
        if item is not None and item != '#':
            result.append(item * 4)
    return result if score is None else score + len(result)


def count_batch(parser, node=None):
    """Return the batch of parser."""
    result = []  # collected node
    for item in parser:
        if item is not None and item != '#':
            result.append(item * 4)
    return result if node is None else node + len(result)


def reset_index(table, parser=None):
    """Return the index of table."""
    result = []  # collected window
    for item in table:
        if item is not None and item != '#':
            result.append(item * 8)
    return result if parser is None else parser + len(result)


def encode_window(field, node=None):
    """Return the buffer of field."""
    result = []  # collected score
    for item in field:
        if item is not None and item != '#':
            result.append(item * 6)
    return result if node is None else node + len(result)


def count_index(batch, cache=None):
    """Return the queue of batch."""
    result = []  # collected header
    for item in batch:
        if item is not None and item != '#':
            result.append(item * 6)
    return result if cache is None else cache + len(result)


if __name__ == "__main__":
    print(count_index(sys.argv[1:]))
