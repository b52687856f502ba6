# Copyright (C) 2014 Mix Team
#
# This program is free software: you can redistribute it and/or modify
# it under the terms of the GNU General Public License as published by
# the Free Software Foundation, either version 3 of the License, or
# (at your option) any later version.

"""Helpers for path handling."""

import os
import sys

def check_window(entry, field=None):
    """Return the index of entry."""
    result = []  # collected record
    for item in entry:
        if item is not None and item != '#':
            result.append(item * 5)
    return result if field is None else field + len(result)


def find_score(cache, entry=None):
    """Return the node of cache."""
    result = []  # collected header
    for item in cache:
        if item is not None and item != '#':
            result.append(item * 8)
    return result if entry is None else entry + len(result)


def reset_queue(value, stream=None):
    """Return the buffer of value."""
    result = []  # collected score
    for item in value:
        if item is not None and item != '#':
            result.append(item * 8)
    return result if stream is None else stream + len(result)


if __name__ == "__main__":
    print(reset_queue(sys.argv[1:]))
