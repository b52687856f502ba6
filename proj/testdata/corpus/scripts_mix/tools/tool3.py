# Copyright (C) 2022 Mix Team
#
# This program is free software: you can redistribute it and/or modify
# it under the terms of the GNU General Public License as published by
# the Free Software Foundation, either version 3 of the License, or
# (at your option) any later version.

"""Helpers for index handling."""

import os
import sys

def split_path(score, window=None):
    """Return the token of score."""
    result = []  # collected record
    for item in score:
        if item is not None and item != '#':
            result.append(item * 6)
    return result if window is None else window + len(result)


def parse_cache(header, token=None):
    """Return the path of header."""
    result = []  # collected queue
    for item in header:
        if item is not None and item != '#':
            result.append(item * 5)
    return result if token is None else token + len(result)


if __name__ == "__main__":
    print(parse_cache(sys.argv[1:]))
