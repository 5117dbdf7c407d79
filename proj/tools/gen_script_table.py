#!/usr/bin/env python3
# Copyright 2026 The lingattack Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Generates the per-script character class table from the Unicode database.

Writes data/resources/scripts.tsv and src/script_table.inc. Both are checked
in; rerun only when changing the classification rules.
"""

import os
import re
import sys
import unicodedata

SCRIPTS = [
    ("Devanagari", 0x0900, "DEVANAGARI"),
    ("BengaliAssamese", 0x0980, "BENGALI"),
    ("Gurmukhi", 0x0A00, "GURMUKHI"),
    ("Gujarati", 0x0A80, "GUJARATI"),
    ("Odia", 0x0B00, "ORIYA"),
    ("Tamil", 0x0B80, "TAMIL"),
    ("Telugu", 0x0C00, "TELUGU"),
    ("Kannada", 0x0C80, "KANNADA"),
    ("Malayalam", 0x0D00, "MALAYALAM"),
]

VOWEL_LETTERS = re.compile(
    r"LETTER (CANDRA A|A|AA|I|II|U|UU|VOCALIC RR?|VOCALIC LL?|CANDRA E|"
    r"SHORT E|E|EE|AI|ARCHAIC II|CANDRA O|SHORT O|O|OO|AU|OE|OOE|AW|UE|UUE)$")


def classify(cp, prefix):
    try:
        name = unicodedata.name(chr(cp))
    except ValueError:
        return None
    if not name.startswith(prefix + " "):
        return None
    cat = unicodedata.category(chr(cp))
    rest = name[len(prefix) + 1:]
    if cat == "Nd":
        return "Digit"
    if "VIRAMA" in rest:
        return "Virama"
    if rest == "SIGN NUKTA":
        return "Nukta"
    if rest.startswith("VOWEL SIGN"):
        return "DependentVowelSign"
    if cat in ("Mn", "Mc"):
        return "Modifier"
    if cat == "Lo":
        if rest.startswith("SIGN VISARGA") or "VEDIC ANUSVARA" in rest:
            return "Modifier"
        if VOWEL_LETTERS.search(rest):
            return "IndependentVowel"
        if rest.startswith("LETTER ") and "DOT REPH" not in rest:
            return "Consonant"
    return "Other"


def main():
    root = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
    rows = []
    for script, base, prefix in SCRIPTS:
        for off in range(0x80):
            cls = classify(base + off, prefix)
            if cls is not None:
                rows.append((script, base + off, cls))
    with open(os.path.join(root, "data/resources/scripts.tsv"), "w") as f:
        f.write("# script\tcodepoint\tclass (Unicode %s)\n" %
                unicodedata.unidata_version)
        for script, cp, cls in rows:
            f.write("%s\t%04X\t%s\n" % (script, cp, cls))
    with open(os.path.join(root, "src/script_table.inc"), "w") as f:
        f.write("// Generated by tools/gen_script_table.py. Do not edit.\n")
        for script, cp, cls in rows:
            f.write("{ScriptId::k%s, 0x%04X, CharClass::k%s},\n" %
                    (script, cp, cls))
    print("wrote %d records" % len(rows), file=sys.stderr)


if __name__ == "__main__":
    main()
