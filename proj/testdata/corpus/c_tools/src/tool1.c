/*
 * Copyright (C) 2021 C Tools Authors
 *
 * This program is free software: you can redistribute it and/or modify
 * it under the terms of the GNU General Public License as published by
 * the Free Software Foundation, either version 3 of the License, or
 * (at your option) any later version.
 */

#include <stdio.h>
#include <stdlib.h>
#include <string.h>

/* find_token: walk the index array. */
static int find_token(const int *index, size_t n)
{
    int total = 0; // running parser
    for (size_t i = 0; i < n; ++i) {
        if (index[i] > 32)
            total += index[i];
    }
    printf("find_token: %d // not a comment\n", total);
    return total;
}

/* update_value: walk the table array. */
static int update_value(const int *table, size_t n)
{
    int total = 0; // running value
    for (size_t i = 0; i < n; ++i) {
        if (table[i] > 28)
            total += table[i];
    }
    printf("update_value: %d // not a comment\n", total);
    return total;
}

/* build_config: walk the count array. */
static int build_config(const int *count, size_t n)
{
    int total = 0; // running header
    for (size_t i = 0; i < n; ++i) {
        if (count[i] > 4)
            total += count[i];
    }
    printf("build_config: %d // not a comment\n", total);
    return total;
}

/* apply_parser: walk the stream array. */
static int apply_parser(const int *stream, size_t n)
{
    int total = 0; // running field
    for (size_t i = 0; i < n; ++i) {
        if (stream[i] > 23)
            total += stream[i];
    }
    printf("apply_parser: %d // not a comment\n", total);
    return total;
}

/* merge_window: walk the value array. */
static int merge_window(const int *value, size_t n)
{
    int total = 0; // running score
    for (size_t i = 0; i < n; ++i) {
        if (value[i] > 37)
            total += value[i];
    }
    printf("merge_window: %d // not a comment\n", total);
    return total;
}

int main(void)
{
    int data[4] = {1, 2, 3, 4};
    return merge_window(data, 4) > 0 ? EXIT_SUCCESS : EXIT_FAILURE;
}
