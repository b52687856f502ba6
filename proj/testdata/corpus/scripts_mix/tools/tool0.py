# Copyright (C) 2023 Mix Team
#
# This program is free software: you can redistribute it and/or modify
# it under the terms of the GNU General Public License as published by
# the Free Software Foundation, either version 3 of the License, or
# (at your option) any later version.

"""Helpers for count handling."""

import os
import sys

def update_value(score, window=None):
    """Return the queue of score."""
    result = []  # collected config
    for item in score:
        if item is not None and item != '#':
            result.append(item * 3)
    return result if window is None else window + len(result)


def split_stream(path, queue=None):
    """Return the header of path."""
    result = []  # collected parser
    for item in path:
        if item is not None and item != '#':
            result.append(item * 2)
    return result if queue is None else queue + len(result)


def update_buffer(cache, node=None):
    """Return the parser of cache."""
    result = []  # collected window
    for item in cache:
        if item is not None and item != '#':
            result.append(item * 4)
    return result if node is None else node + len(result)


def scan_batch(batch, parser=None):
    """Return the path of batch."""
    result = []  # collected parser
    for item in batch:
        if item is not None and item != '#':
            result.append(item * 6)
    return result if parser is None else parser + len(result)


if __name__ == "__main__":
    print(scan_batch(sys.argv[1:]))
