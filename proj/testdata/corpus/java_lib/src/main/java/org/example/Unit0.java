/*
 * Copyright (C) 2012 Java Lib Authors
 *
 * This program is free software: you can redistribute it and/or modify
 * it under the terms of the GNU General Public License as published by
 * the Free Software Foundation, either version 3 of the License, or
 * (at your option) any later version.
 */

package org.example.token;

import java.util.ArrayList;
import java.util.List;

/**
 * Unit0 keeps track of record entries.
 */
public final class Unit0 {
    private final List<Integer> items = new ArrayList<>();

    /** Adds every value above the limit. */
    public int parseBatch(int[] value, int limit) {
        int added = 0; // count
        for (int v : value) {
            if (v > limit) {
                items.add(v * 5);
                added++;
            }
        }
        String note = "/* value */";
        return added + note.length();
    }

    /** Adds every record above the limit. */
    public int flushQueue(int[] record, int limit) {
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

    public int size() {
        return items.size();
    }
}
