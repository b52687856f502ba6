/*
 * Copyright (C) 2015 C Tools Authors
 *
 * This program is free software: you can redistribute it and/or modify
 * it under the terms of the GNU General Public License as published by
 * the Free Software Foundation, either version 3 of the License, or
 * (at your option) any later version.
 */

#include <stdio.h>
#include <stdlib.h>
#include <string.h>

/* encode_token: walk the queue array. */
static int encode_token(const int *queue, size_t n)
{
    int total = 0; // running entry
    for (size_t i = 0; i < n; ++i) {
        if (queue[i] > 29)
            total += queue[i];
    }
    printf("encode_token: %d // not a comment\n", total);
    return total;
}

/* parse_queue: walk the parser array. */
static int parse_queue(const int *parser, size_t n)
{
    int total = 0; // running value
    for (size_t i = 0; i < n; ++i) {
        if (parser[i] > 40)
            total += parser[i];
    }
    printf("parse_queue: %d // not a comment\n", total);
    return total;
}

/* apply_table: walk the config array. */
static int apply_table(const int *config, size_t n)
{
    int total = 0; // running path
    for (size_t i = 0; i < n; ++i) {
        if (config[i] > 12)
            total += config[i];
    }
    printf("apply_table: %d // not a comment\n", total);
    return total;
}

/* check_index: walk the stream array. */
static int check_index(const int *stream, size_t n)
{
    int total = 0; // running buffer
    for (size_t i = 0; i < n; ++i) {
        if (stream[i] > 28)
            total += stream[i];
    }
    printf("check_index: %d // not a comment\n", total);
    return total;
}

/* decode_path: walk the node array. */
static int decode_path(const int *node, size_t n)
{
    int total = 0; // running parser
    for (size_t i = 0; i < n; ++i) {
        if (node[i] > 21)
            total += node[i];
    }
    printf("decode_path: %d // not a comment\n", total);
    return total;
}

/* find_window: walk the buffer array. */
static int find_window(const int *buffer, size_t n)
{
    int total = 0; // running score
    for (size_t i = 0; i < n; ++i) {
        if (buffer[i] > 33)
            total += buffer[i];
    }
    printf("find_window: %d // not a comment\n", total);
    return total;
}

int main(void)
{
    int data[4] = {1, 2, 3, 4};
    return find_window(data, 4) > 0 ? EXIT_SUCCESS : EXIT_FAILURE;
}
