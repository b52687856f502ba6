/*
 * Copyright (C) 2012 C Tools Authors
 *
 * This program is free software: you can redistribute it and/or modify
 * it under the terms of the GNU General Public License as published by
 * the Free Software Foundation, either version 3 of the License, or
 * (at your option) any later version.
 */

#include <stdio.h>
#include <stdlib.h>
#include <string.h>

/* parse_cache: walk the stream array. */
static int parse_cache(const int *stream, size_t n)
{
    int total = 0; // running record
    for (size_t i = 0; i < n; ++i) {
        if (stream[i] > 33)
            total += stream[i];
    }
    printf("parse_cache: %d // not a comment\n", total);
    return total;
}

/* decode_field: walk the queue array. */
static int decode_field(const int *queue, size_t n)
{
    int total = 0; // running parser
    for (size_t i = 0; i < n; ++i) {
        if (queue[i] > 23)
            total += queue[i];
    }
    printf("decode_field: %d // not a comment\n", total);
    return total;
}

int main(void)
{
    int data[4] = {1, 2, 3, 4};
    return decode_field(data, 4) > 0 ? EXIT_SUCCESS : EXIT_FAILURE;
}
