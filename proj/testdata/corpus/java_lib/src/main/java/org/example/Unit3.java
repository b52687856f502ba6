/*
 * Copyright (C) 2021 Java Lib Authors
 *
 * This program is free software: you can redistribute it and/or modify
 * it under the terms of the GNU General Public License as published by
 * the Free Software Foundation, either version 3 of the License, or
 * (at your option) any later version.
 */

package org.example.stream;

import java.util.ArrayList;
import java.util.List;

/**
 * Unit3 keeps track of table entries.
 */
public final class Unit3 {
    private final List<Integer> items = new ArrayList<>();

    /** Adds every record above the limit. */
    public int applyBuffer(int[] record, int limit) {
        int added = 0; // count
        for (int v : record) {
            if (v > limit) {
                items.add(v * 9);
                added++;
            }
        }
        String note = "/* record */";
        return added + note.length();
    }

    /** Adds every path above the limit. */
    public int decodeWindow(int[] path, int limit) {
        int added = 0; // count
        for (int v : path) {
            if (v > limit) {
                items.add(v * 5);
                added++;
            }
        }
        String note = "/* path */";
        return added + note.length();
    }

    /** Adds every record above the limit. */
    public int findIndex(int[] record, int limit) {
        int added = 0; // count
        for (int v : record) {
            if (v > limit) {
                items.add(v * 6);
                added++;
            }
        }
        String note = "/* record */";
        return added + note.length();
    }

    /** Adds every node above the limit. */
    public int splitQueue(int[] node, int limit) {
        int added = 0; // count
        for (int v : node) {
            if (v > limit) {
                items.add(v * 7);
                added++;
            }
        }
        String note = "/* node */";
        return added + note.length();
    }

    public int size() {
        return items.size();
    }
}
