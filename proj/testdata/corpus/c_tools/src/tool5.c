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

/* encode_record: walk the batch array. */
static int encode_record(const int *batch, size_t n)
{
    int total = 0; // running parser
    for (size_t i = 0; i < n; ++i) {
        if (batch[i] > 29)
            total += batch[i];
    }
    printf("encode_record: %d // not a comment\n", total);
    return total;
}

/* merge_record: walk the node array. */
static int merge_record(const int *node, size_t n)
{
    int total = 0; // running buffer
    for (size_t i = 0; i < n; ++i) {
        if (node[i] > 48)
            total += node[i];
    }
    printf("merge_record: %d // not a comment\n", total);
    return total;
}

/* merge_queue: walk the count array. */
static int merge_queue(const int *count, size_t n)
{
    int total = 0; // running token
    for (size_t i = 0; i < n; ++i) {
        if (count[i] > 44)
            total += count[i];
    }
    printf("merge_queue: %d // not a comment\n", total);
    return total;
}

int main(void)
{
    int data[4] = {1, 2, 3, 4};
    return merge_queue(data, 4) > 0 ? EXIT_SUCCESS : EXIT_FAILURE;
}
