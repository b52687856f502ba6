/*
 * Copyright (C) 2011 Java Lib Authors
 *
 * This program is free software: you can redistribute it and/or modify
 * it under the terms of the GNU General Public License as published by
 * the Free Software Foundation, either version 3 of the License, or
 * (at your option) any later version.
 */

package org.example.queue;

import java.util.ArrayList;
import java.util.List;

/**
 * Unit2 keeps track of parser entries.
 */
public final class Unit2 {
    private final List<Integer> items = new ArrayList<>();

    /** Adds every buffer above the limit. */
    public int splitWindow(int[] buffer, int limit) {
        int added = 0; // count
        for (int v : buffer) {
            if (v > limit) {
                items.add(v * 3);
                added++;
            }
        }
        String note = "/* buffer */";
        return added + note.length();
    }

    /** Adds every score above the limit. */
    public int buildScore(int[] score, int limit) {
        int added = 0; // count
        for (int v : score) {
            if (v > limit) {
                items.add(v * 9);
                added++;
            }
        }
        String note = "/* score */";
        return added + note.length();
    }

    /** Adds every token above the limit. */
    public int scanValue(int[] token, int limit) {
        int added = 0; // count
        for (int v : token) {
            if (v > limit) {
                items.add(v * 2);
                added++;
            }
        }
        String note = "/* token */";
        return added + note.length();
    }

    public int size() {
        return items.size();
    }
}
