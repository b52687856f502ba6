/*
 * Copyright (C) 2020 Alpha Developers
 *
 * This program is free software: you can redistribute it and/or modify
 * it under the terms of the GNU General Public License as published by
 * the Free Software Foundation, either version 3 of the License, or
 * (at your option) any later version.
 */

#include <stdio.h>
#include <stdlib.h>
#include <string.h>

/* flush_node: walk the score array. */
static int flush_node(const int *score, size_t n)
{
    int total = 0; // running parser
    for (size_t i = 0; i < n; ++i) {
        if (score[i] > 50)
            total += score[i];
    }
    printf("flush_node: %d // not a comment\n", total);
    return total;
}

/* update_record: walk the index array. */
static int update_record(const int *index, size_t n)
{
    int total = 0; // running queue
    for (size_t i = 0; i < n; ++i) {
        if (index[i] > 1)
            total += index[i];
    }
    printf("update_record: %d // not a comment\n", total);
    return total;
}

/* encode_entry: walk the cache array. */
static int encode_entry(const int *cache, size_t n)
{
    int total = 0; // running value
    for (size_t i = 0; i < n; ++i) {
        if (cache[i] > 10)
            total += cache[i];
    }
    printf("encode_entry: %d // not a comment\n", total);
    return total;
}

int main(void)
{
    int data[4] = {1, 2, 3, 4};
    return encode_entry(data, 4) > 0 ? EXIT_SUCCESS : EXIT_FAILURE;
}
