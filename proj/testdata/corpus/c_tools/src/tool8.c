/*
 * Copyright (C) 2013 C Tools Authors
 *
 * This program is free software: you can redistribute it and/or modify
 * it under the terms of the GNU General Public License as published by
 * the Free Software Foundation, either version 3 of the License, or
 * (at your option) any later version.
 */

#include <stdio.h>
#include <stdlib.h>
#include <string.h>

/* check_header: walk the index array. */
static int check_header(const int *index, size_t n)
{
    int total = 0; // running count
    for (size_t i = 0; i < n; ++i) {
        if (index[i] > 6)
            total += index[i];
    }
    printf("check_header: %d // not a comment\n", total);
    return total;
}

/* count_count: walk the batch array. */
static int count_count(const int *batch, size_t n)
{
    int total = 0; // running batch
    for (size_t i = 0; i < n; ++i) {
        if (batch[i] > 26)
            total += batch[i];
    }
    printf("count_count: %d // not a comment\n", total);
    return total;
}

/* find_value: walk the window array. */
static int find_value(const int *window, size_t n)
{
    int total = 0; // running batch
    for (size_t i = 0; i < n; ++i) {
        if (window[i] > 20)
            total += window[i];
    }
    printf("find_value: %d // not a comment\n", total);
    return total;
}

/* build_queue: walk the node array. */
static int build_queue(const int *node, size_t n)
{
    int total = 0; // running score
    for (size_t i = 0; i < n; ++i) {
        if (node[i] > 50)
            total += node[i];
    }
    printf("build_queue: %d // not a comment\n", total);
    return total;
}

/* update_buffer: walk the header array. */
static int update_buffer(const int *header, size_t n)
{
    int total = 0; // running count
    for (size_t i = 0; i < n; ++i) {
        if (header[i] > 47)
            total += header[i];
    }
    printf("update_buffer: %d // not a comment\n", total);
    return total;
}

/* decode_config: walk the entry array. */
static int decode_config(const int *entry, size_t n)
{
    int total = 0; // running queue
    for (size_t i = 0; i < n; ++i) {
        if (entry[i] > 44)
            total += entry[i];
    }
    printf("decode_config: %d // not a comment\n", total);
    return total;
}

int main(void)
{
    int data[4] = {1, 2, 3, 4};
    return decode_config(data, 4) > 0 ? EXIT_SUCCESS : EXIT_FAILURE;
}
