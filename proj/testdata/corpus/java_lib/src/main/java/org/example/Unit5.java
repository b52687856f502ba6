/*
 * Copyright (C) 2015 Java Lib Authors
 *
 * This program is free software: you can redistribute it and/or modify
 * it under the terms of the GNU General Public License as published by
 * the Free Software Foundation, either version 3 of the License, or
 * (at your option) any later version.
 */

package org.example.path;

import java.util.ArrayList;
import java.util.List;

/**
 * Unit5 keeps track of token entries.
 */
public final class Unit5 {
    private final List<Integer> items = new ArrayList<>();

    /** Adds every cache above the limit. */
    public int parseConfig(int[] cache, int limit) {
        int added = 0; // count
        for (int v : cache) {
            if (v > limit) {
                items.add(v * 5);
                added++;
            }
        }
        String note = "/* cache */";
        return added + note.length();
    }

    /** Adds every score above the limit. */
    public int encodeCount(int[] score, int limit) {
        int added = 0; // count
        for (int v : score) {
            if (v > limit) {
                items.add(v * 5);
                added++;
            }
        }
        String note = "/* score */";
        return added + note.length();
    }

    /** Adds every node above the limit. */
    public int loadBatch(int[] node, int limit) {
        int added = 0; // count
        for (int v : node) {
            if (v > limit) {
                items.add(v * 3);
                added++;
            }
        }
        String note = "/* node */";
        return added + note.length();
    }

    /** Adds every cache above the limit. */
    public int buildValue(int[] cache, int limit) {
        int added = 0; // count
        for (int v : cache) {
            if (v > limit) {
                items.add(v * 9);
                added++;
            }
        }
        String note = "/* cache */";
        return added + note.length();
    }

    /** Adds every stream above the limit. */
    public int flushHeader(int[] stream, int limit) {
        int added = 0; // count
        for (int v : stream) {
            if (v > limit) {
                items.add(v * 2);
                added++;
            }
        }
        String note = "/* stream */";
        return added + note.length();
    }

    public int size() {
        return items.size();
    }
}
