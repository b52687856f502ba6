#!/usr/bin/env python3
# Copyright 2026 The codeppl Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

# Regenerates testdata/corpus: a handful of small projects in four languages.
# Output is deterministic; rerunning rewrites identical files.
import os
import random
import shutil

ROOT = os.path.join(os.path.dirname(os.path.abspath(__file__)), "corpus")
rng = random.Random(2024)

NOUNS = ["buffer", "config", "record", "parser", "index", "queue", "token", "node", "cache", "entry",
         "window", "stream", "table", "path", "count", "value", "header", "field", "batch", "score"]
VERBS = ["load", "parse", "merge", "split", "check", "flush", "scan", "build", "apply", "reset",
         "encode", "decode", "count", "update", "find", "emit"]

GPL = """Copyright (C) 20{yy} {who}

This program is free software: you can redistribute it and/or modify
it under the terms of the GNU General Public License as published by
the Free Software Foundation, either version 3 of the License, or
(at your option) any later version."""


def name():
    return rng.choice(VERBS) + "_" + rng.choice(NOUNS)


def camel(s):
    parts = s.split("_")
    return parts[0] + "".join(p.title() for p in parts[1:])


def header(prefix, who):
    text = GPL.format(yy=rng.randint(10, 23), who=who)
    return "\n".join((prefix + " " + l).rstrip() for l in text.split("\n")) + "\n\n"


def py_file(who, n):
    out = header("#", who)
    out += '"""Helpers for %s handling."""\n\nimport os\nimport sys\n\n' % rng.choice(NOUNS)
    for _ in range(n):
        f = name()
        a, b = rng.sample(NOUNS, 2)
        out += "def %s(%s, %s=None):\n" % (f, a, b)
        out += '    """Return the %s of %s."""\n' % (rng.choice(NOUNS), a)
        out += "    result = []  # collected %s\n" % rng.choice(NOUNS)
        out += "    for item in %s:\n" % a
        out += "        if item is not None and item != '#':\n"
        out += "            result.append(item * %d)\n" % rng.randint(2, 9)
        out += "    return result if %s is None else %s + len(result)\n\n\n" % (b, b)
    out += 'if __name__ == "__main__":\n    print(%s(sys.argv[1:]))\n' % f
    return out


def c_file(who, n):
    out = header(" *", who).replace(" * Copyright", "/*\n * Copyright", 1).rstrip("\n") + "\n */\n\n"
    out += "#include <stdio.h>\n#include <stdlib.h>\n#include <string.h>\n\n"
    for _ in range(n):
        f = name()
        a = rng.choice(NOUNS)
        out += "/* %s: walk the %s array. */\n" % (f, a)
        out += "static int %s(const int *%s, size_t n)\n{\n" % (f, a)
        out += "    int total = 0; // running %s\n" % rng.choice(NOUNS)
        out += "    for (size_t i = 0; i < n; ++i) {\n"
        out += "        if (%s[i] > %d)\n            total += %s[i];\n" % (a, rng.randint(0, 50), a)
        out += "    }\n    printf(\"%s: %%d // not a comment\\n\", total);\n" % f
        out += "    return total;\n}\n\n"
    out += "int main(void)\n{\n    int data[4] = {1, 2, 3, 4};\n"
    out += "    return %s(data, 4) > 0 ? EXIT_SUCCESS : EXIT_FAILURE;\n}\n" % f
    return out


def java_file(who, n, cls):
    out = header(" *", who).replace(" * Copyright", "/*\n * Copyright", 1).rstrip("\n") + "\n */\n\n"
    out += "package org.example.%s;\n\nimport java.util.ArrayList;\nimport java.util.List;\n\n" % rng.choice(NOUNS)
    out += "/**\n * %s keeps track of %s entries.\n */\npublic final class %s {\n" % (cls, rng.choice(NOUNS), cls)
    out += "    private final List<Integer> items = new ArrayList<>();\n\n"
    for _ in range(n):
        f = camel(name())
        a = rng.choice(NOUNS)
        out += "    /** Adds every %s above the limit. */\n" % a
        out += "    public int %s(int[] %s, int limit) {\n" % (f, a)
        out += "        int added = 0; // count\n"
        out += "        for (int v : %s) {\n            if (v > limit) {\n" % a
        out += "                items.add(v * %d);\n                added++;\n            }\n        }\n" % rng.randint(2, 9)
        out += "        String note = \"/* %s */\";\n" % a
        out += "        return added + note.length();\n    }\n\n"
    out += "    public int size() {\n        return items.size();\n    }\n}\n"
    return out


def ruby_file(who, n, mod):
    out = header("#", who)
    out += "require 'json'\n\nmodule %s\n" % mod
    for _ in range(n):
        f = name()
        a = rng.choice(NOUNS)
        out += "  # %s filters the %s list.\n" % (f, a)
        out += "  def self.%s(%s, limit = %d)\n" % (f, a, rng.randint(1, 20))
        out += "    kept = %s.select { |v| v > limit } # keep large\n" % a
        out += "    label = \"#{kept.size} %s # kept\"\n" % rng.choice(NOUNS)
        out += "    kept.map { |v| v * %d }.push(label)\n  end\n\n" % rng.randint(2, 9)
    out += "end\n"
    return out


def write(project, rel, text):
    path = os.path.join(ROOT, project, rel)
    os.makedirs(os.path.dirname(path), exist_ok=True)
    with open(path, "w", newline="\n") as fh:
        fh.write(text)


def main():
    shutil.rmtree(ROOT, ignore_errors=True)
    # py_alpha: Python with a little C
    for i in range(6):
        write("py_alpha", "alpha/mod%d.py" % i, py_file("Alpha Developers", rng.randint(2, 6)))
    write("py_alpha", "alpha/__init__.py", "")
    write("py_alpha", "ext/speedup.c", c_file("Alpha Developers", 3))
    write("py_alpha", "README.md", "# alpha\n\nNot code.\n")
    write("py_alpha", "Makefile", "all:\n\tpython -m alpha\n")
    # scripts_mix: Python and Ruby
    for i in range(5):
        write("scripts_mix", "tools/tool%d.py" % i, py_file("Mix Team", rng.randint(2, 5)))
    write("scripts_mix", "tools/__init__.py", "")
    for i in range(4):
        write("scripts_mix", "rb/task%d.rb" % i, ruby_file("Mix Team", rng.randint(2, 5), "Task%d" % i))
    # c_tools: C
    for i in range(10):
        write("c_tools", "src/tool%d.c" % i, c_file("C Tools Authors", rng.randint(2, 6)))
    write("c_tools", "src/lib.rs", "fn main() {}\n")
    # java_lib: Java
    for i in range(10):
        cls = "Unit%d" % i
        write("java_lib", "src/main/java/org/example/%s.java" % cls, java_file("Java Lib Authors", rng.randint(2, 5), cls))
    # ruby_gems: Ruby
    for i in range(8):
        write("ruby_gems", "lib/gem%d.rb" % i, ruby_file("Gem Authors", rng.randint(2, 6), "Gem%d" % i))
    # dropped by the license filter
    for i in range(3):
        write("mit_utils", "utils/u%d.py" % i, py_file("MIT Person", 2))
    # dropped by the quality filter (no stars)
    for i in range(3):
        write("no_stars", "lib/x%d.rb" % i, ruby_file("Nobody", 2, "X%d" % i))


if __name__ == "__main__":
    main()
