/*
 * Copyright (C) 2017 Java Lib Authors
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
 * Unit6 keeps track of window entries.
 */
public final class Unit6 {
    private final List<Integer> items = new ArrayList<>();

    /** Adds every record above the limit. */
    public int updateTable(int[] record, int limit) {
        int added = 0; // count
        for (int v : record) {
            if (v > limit) {
                items.add(v * 3);
                added++;
            }
        }
        String note = "/* record */";
        return added + note.length();
    }

    /** Adds every batch above the limit. */
    public int flushWindow(int[] batch, int limit) {
        int added = 0; // count
        for (int v : batch) {
            if (v > limit) {
                items.add(v * 6);
                added++;
            }
        }
        String note = "/* batch */";
        return added + note.length();
    }

    public int size() {
        return items.size();
    }
}
