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

/* emit_path: walk the score array. */
static int emit_path(const int *score, size_t n)
{
    int total = 0; // running batch
    for (size_t i = 0; i < n; ++i) {
        if (score[i] > 5)
            total += score[i];
    }
    printf("emit_path: %d // not a comment\n", total);
    return total;
}

/* update_header: walk the table array. */
static int update_header(const int *table, size_t n)
{
    int total = 0; // running header
    for (size_t i = 0; i < n; ++i) {
        if (table[i] > 17)
            total += table[i];
    }
    printf("update_header: %d // not a comment\n", total);
    return total;
}

/* check_node: walk the stream array. */
static int check_node(const int *stream, size_t n)
{
    int total = 0; // running token
    for (size_t i = 0; i < n; ++i) {
        if (stream[i] > 9)
            total += stream[i];
    }
    printf("check_node: %d // not a comment\n", total);
    return total;
}

int main(void)
{
    int data[4] = {1, 2, 3, 4};
    return check_node(data, 4) > 0 ? EXIT_SUCCESS : EXIT_FAILURE;
}
