/*
 * Copyright (C) 2023 Java Lib Authors
 *
 * This program is free software: you can redistribute it and/or modify
 * it under the terms of the GNU General Public License as published by
 * the Free Software Foundation, either version 3 of the License, or
 * (at your option) any later version.
 */

package org.example.score;

import java.util.ArrayList;
import java.util.List;

/**
 * Unit7 keeps track of parser entries.
 */
public final class Unit7 {
    private final List<Integer> items = new ArrayList<>();

    /** Adds every node above the limit. */
    public int decodeValue(int[] node, int limit) {
        int added = 0; // count
        for (int v : node) {
            if (v > limit) {
                items.add(v * 2);
                added++;
            }
        }
        String note = "/* node */";
        return added + note.length();
    }

    /** Adds every table above the limit. */
    public int countQueue(int[] table, int limit) {
        int added = 0; // count
        for (int v : table) {
            if (v > limit) {
                items.add(v * 7);
                added++;
            }
        }
        String note = "/* table */";
        return added + note.length();
    }

    /** Adds every table above the limit. */
    public int checkConfig(int[] table, int limit) {
        int added = 0; // count
        for (int v : table) {
            if (v > limit) {
                items.add(v * 4);
                added++;
            }
        }
        String note = "/* table */";
        return added + note.length();
    }

    public int size() {
        return items.size();
    }
}
