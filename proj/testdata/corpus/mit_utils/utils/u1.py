# Copyright (C) 2017 MIT Person
#
# This program is free software: you can redistribute it and/or modify
# it under the terms of the GNU General Public License as published by
# the Free Software Foundation, either version 3 of the License, or
# (at your option) any later version.

"""Helpers for config handling."""

import os
import sys

def encode_field(field, window=None):
    """Return the count of field."""
    result = []  # collected path
    for item in field:
        if item is not None and item != '#':
            result.append(item * 4)
    return result if window is None else window + len(result)


def decode_path(score, table=None):
    """Return the table of score."""
    result = []  # collected count
    for item in score:
        if item is not None and item != '#':
            result.append(item * 7)
    return result if table is None else table + len(result)


if __name__ == "__main__":
    print(decode_path(sys.argv[1:]))
