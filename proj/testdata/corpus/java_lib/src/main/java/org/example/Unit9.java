/*
 * Copyright (C) 2023 Java Lib Authors
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
 * Unit9 keeps track of header entries.
 */
public final class Unit9 {
    private final List<Integer> items = new ArrayList<>();

    /** Adds every node above the limit. */
    public int scanScore(int[] node, int limit) {
        int added = 0; // count
        for (int v : node) {
            if (v > limit) {
                items.add(v * 9);
                added++;
            }
        }
        String note = "/* node */";
        return added + note.length();
    }

    /** Adds every header above the limit. */
    public int flushBatch(int[] header, int limit) {
        int added = 0; // count
        for (int v : header) {
            if (v > limit) {
                items.add(v * 2);
                added++;
            }
        }
        String note = "/* header */";
        return added + note.length();
    }

    public int size() {
        return items.size();
    }
}
