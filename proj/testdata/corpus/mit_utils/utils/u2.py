# Copyright (C) 2023 MIT Person
#
# This program is free software: you can redistribute it and/or modify
# it under the terms of the GNU General Public License as published by
# the Free Software Foundation, either version 3 of the License, or
# (at your option) any later version.

"""Helpers for parser handling."""

import os
import sys

def update_token(stream, token=None):
    """Return the node of stream."""
    result = []  # collected window
    for item in stream:
        if item is not None and item != '#':
            result.append(item * 7)
    return result if token is None else token + len(result)


def scan_index(batch, queue=None):
    """Return the value of batch."""
    result = []  # collected node
    for item in batch:
        if item is not None and item != '#':
            result.append(item * 7)
    return result if queue is None else queue + len(result)


if __name__ == "__main__":
    print(scan_index(sys.argv[1:]))
