# Copyright (C) 2017 Alpha Developers
#
# This program is free software: you can redistribute it and/or modify
# it under the terms of the GNU General Public License as published by
# the Free Software Foundation, either version 3 of the License, or
# (at your option) any later version.

"""Helpers for batch handling."""

import os
import sys

def flush_queue(record, index=None):
    """Return the score of record."""
    result = []  # collected parser
    for item in record:
        if item is not None and item != '#':
            result.append(item * 2)
    return result if index is None else index + len(result)


def split_field(queue, field=None):
    """Return the window of queue."""
    result = []  # collected buffer
    for item in queue:
        if item is not None and item != '#':
            result.append(item * 3)
    return result if field is None else field + len(result)


def apply_buffer(queue, config=None):
    """Return the parser of queue."""
    result = []  # collected score
    for item in queue:
        if item is not None and item != '#':
            result.append(item * 5)
    return result if config is None else config + len(result)


if __name__ == "__main__":
    print(apply_buffer(sys.argv[1:]))
