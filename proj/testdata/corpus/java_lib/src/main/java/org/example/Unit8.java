/*
 * Copyright (C) 2019 Java Lib Authors
 *
 * This program is free software: you can redistribute it and/or modify
 * it under the terms of the GNU General Public License as published by
 * the Free Software Foundation, either version 3 of the License, or
 * (at your option) any later version.
 */

package org.example.record;

import java.util.ArrayList;
import java.util.List;

/**
 * Unit8 keeps track of node entries.
 */
public final class Unit8 {
    private final List<Integer> items = new ArrayList<>();

    /** Adds every index above the limit. */
    public int buildCache(int[] index, int limit) {
        int added = 0; // count
        for (int v : index) {
            if (v > limit) {
                items.add(v * 6);
                added++;
            }
        }
        String note = "/* index */";
        return added + note.length();
    }

    /** Adds every stream above the limit. */
    public int loadValue(int[] stream, int limit) {
        int added = 0; // count
        for (int v : stream) {
            if (v > limit) {
                items.add(v * 8);
                added++;
            }
        }
        String note = "/* stream */";
        return added + note.length();
    }

    /** Adds every score above the limit. */
    public int updateStream(int[] score, int limit) {
        int added = 0; // count
        for (int v : score) {
            if (v > limit) {
                items.add(v * 2);
                added++;
            }
        }
        String note = "/* score */";
        return added + note.length();
    }

    /** Adds every config above the limit. */
    public int loadCache(int[] config, int limit) {
        int added = 0; // count
        for (int v : config) {
            if (v > limit) {
                items.add(v * 9);
                added++;
            }
        }
        String note = "/* config */";
        return added + note.length();
    }

    public int size() {
        return items.size();
    }
}
