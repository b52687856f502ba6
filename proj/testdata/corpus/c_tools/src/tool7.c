/*
 * Copyright (C) 2010 C Tools Authors
 *
 * This program is free software: you can redistribute it and/or modify
 * it under the terms of the GNU General Public License as published by
 * the Free Software Foundation, either version 3 of the License, or
 * (at your option) any later version.
 */

#include <stdio.h>
#include <stdlib.h>
#include <string.h>

/* check_cache: walk the path array. */
static int check_cache(const int *path, size_t n)
{
    int total = 0; // running node
    for (size_t i = 0; i < n; ++i) {
        if (path[i] > 43)
            total += path[i];
    }
    printf("check_cache: %d // not a comment\n", total);
    return total;
}

/* update_table: walk the queue array. */
static int update_table(const int *queue, size_t n)
{
    int total = 0; // running table
    for (size_t i = 0; i < n; ++i) {
        if (queue[i] > 24)
            total += queue[i];
    }
    printf("update_table: %d // not a comment\n", total);
    return total;
}

/* find_batch: walk the parser array. */
static int find_batch(const int *parser, size_t n)
{
    int total = 0; // running cache
    for (size_t i = 0; i < n; ++i) {
        if (parser[i] > 34)
            total += parser[i];
    }
    printf("find_batch: %d // not a comment\n", total);
    return total;
}

/* apply_score: walk the index array. */
static int apply_score(const int *index, size_t n)
{
    int total = 0; // running window
    for (size_t i = 0; i < n; ++i) {
        if (index[i] > 7)
            total += index[i];
    }
    printf("apply_score: %d // not a comment\n", total);
    return total;
}

/* decode_record: walk the stream array. */
static int decode_record(const int *stream, size_t n)
{
    int total = 0; // running value
    for (size_t i = 0; i < n; ++i) {
        if (stream[i] > 7)
            total += stream[i];
    }
    printf("decode_record: %d // not a comment\n", total);
    return total;
}

int main(void)
{
    int data[4] = {1, 2, 3, 4};
    return decode_record(data, 4) > 0 ? EXIT_SUCCESS : EXIT_FAILURE;
}
