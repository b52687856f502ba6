# Copyright (C) 2014 MIT Person
#
# This program is free software: you can redistribute it and/or modify
# it under the terms of the GNU General Public License as published by
# the Free Software Foundation, either version 3 of the License, or
# (at your option) any later version.

"""Helpers for header handling."""

import os
import sys

def count_record(parser, entry=None):
    """Return the count of parser."""
    result = []  # collected config
    for item in parser:
        if item is not None and item != '#':
            result.append(item * 8)
    return result if entry is None else entry + len(result)


def count_window(index, parser=None):
    """Return the entry of index."""
    result = []  # collected parser
    for item in index:
        if item is not None and item != '#':
            result.append(item * 5)
    return result if parser is None else parser + len(result)


if __name__ == "__main__":
    print(count_window(sys.argv[1:]))
