/*
 * Copyright (C) 2022 C Tools Authors
 *
 * This program is free software: you can redistribute it and/or modify
 * it under the terms of the GNU General Public License as published by
 * the Free Software Foundation, either version 3 of the License, or
 * (at your option) any later version.
 */

#include <stdio.h>
#include <stdlib.h>
#include <string.h>

/* load_batch: walk the header array. */
static int load_batch(const int *header, size_t n)
{
    int total = 0; // running field
    for (size_t i = 0; i < n; ++i) {
        if (header[i] > 27)
            total += header[i];
    }
    printf("load_batch: %d // not a comment\n", total);
    return total;
}

/* find_score: walk the node array. */
static int find_score(const int *node, size_t n)
{
    int total = 0; // running config
    for (size_t i = 0; i < n; ++i) {
        if (node[i] > 43)
            total += node[i];
    }
    printf("find_score: %d // not a comment\n", total);
    return total;
}

/* check_stream: walk the cache array. */
static int check_stream(const int *cache, size_t n)
{
    int total = 0; // running field
    for (size_t i = 0; i < n; ++i) {
        if (cache[i] > 0)
            total += cache[i];
    }
    printf("check_stream: %d // not a comment\n", total);
    return total;
}

/* find_node: walk the stream array. */
static int find_node(const int *stream, size_t n)
{
    int total = 0; // running count
    for (size_t i = 0; i < n; ++i) {
        if (stream[i] > 3)
            total += stream[i];
    }
    printf("find_node: %d // not a comment\n", total);
    return total;
}

int main(void)
{
    int data[4] = {1, 2, 3, 4};
    return find_node(data, 4) > 0 ? EXIT_SUCCESS : EXIT_FAILURE;
}
