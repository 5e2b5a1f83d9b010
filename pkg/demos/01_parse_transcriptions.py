"""
Parsing syllable transcriptions into line-indexed text
======================================================

Transcription files carry one syllable per cell.  Hyphens mark word
boundaries: ``stea- -dy`` is the single word "steady".  This script loads
the demo file in both merge modes and exports the corpus as JSON.
"""

from pathlib import Path

from verseflow import get_line, load_corpus, merge_syllables, parse_cell

HERE = Path(__file__).parent
OUT = HERE / "out"
OUT.mkdir(exist_ok=True)

# Compact mode: continuation syllables fold into whole words.
corpus = load_corpus(HERE / "data" / "demo.silbe")
print(f"loaded {len(corpus)} lines from {corpus.source_id}\n")
for line in corpus.lines[:4]:
    print(f"  [{line.index}] {line.text}")

# Aligned mode: one output entry per input cell, '.' at continuations,
# so token positions stay comparable with the source.
cells = ["count-", "-ing", "e-", "-very", "beat"]
tokens = [parse_cell(c) for c in cells]
print("\ncells:  ", cells)
print("compact:", merge_syllables(tokens, null_tokens=False))
print("aligned:", merge_syllables(tokens, null_tokens=True))

# Lines are addressable by their dense global index.
print("\nline 7 is:", get_line(corpus, 7).text)

# The whole corpus serializes as {source_id, lines: [{index, words}]}.
json_path = OUT / "corpus.json"
json_path.write_text(corpus.to_json(), encoding="utf-8")
print(f"\nwrote {json_path}")
