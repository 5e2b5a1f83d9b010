from __future__ import annotations

from pathlib import Path

import pytest

from verseflow.corpus import Corpus, TranscriptLine, load_corpus

# The 14-cell syllable column and its two merge outputs, used across the
# suite as the parser's golden fixture.
GOLDEN_CELLS = [
    "Now", "let", "me", "wel-", "-come", "e-", "-very-", "-bo-", "-dy",
    "to", "the", "wild", "wild", "west",
]
GOLDEN_WORDS = [
    "Now", "let", "me", "welcome", "everybody", "to", "the", "wild",
    "wild", "west",
]
GOLDEN_ALIGNED = [
    "Now", "let", "me", "welcome", ".", "everybody", ".", ".", ".",
    "to", "the", "wild", "wild", "west",
]

SMALL_LINES = [
    "step to the mic and hold it steady now",
    "count- -ing every beat while the rhy- -thm breaks",
    "keep the cro- -wd mo- -ving till the morning light",
    "one more verse and then we say good- -night",
    "roll the snare and let the bass- -line ride",
    "e- -ve- -ry word lands right on time",
    "pass the mic around the circle twice",
    "cold flow warm room loud crowd",
    "spin the record back and cut it clean",
    "last call echo fades we leave the scene",
    "ten more bars and we can call it done",
    "lights out nobody moves we won",
]


def write_transcription(path: Path, rows: list[str]) -> Path:
    path.write_text("\n".join(rows) + "\n", encoding="utf-8")
    return path


@pytest.fixture
def small_corpus_file(tmp_path: Path) -> Path:
    return write_transcription(tmp_path / "small.silbe", SMALL_LINES)


@pytest.fixture
def small_corpus(small_corpus_file: Path) -> Corpus:
    return load_corpus(small_corpus_file)


@pytest.fixture
def two_line_corpus(tmp_path: Path) -> Corpus:
    return load_corpus(write_transcription(tmp_path / "two.silbe", ["alpha", "bravo"]))


def make_corpus(n_lines: int, words_per_line: int = 4) -> Corpus:
    lines = tuple(
        TranscriptLine(index=i, words=tuple(f"w{i}c{j}" for j in range(words_per_line)))
        for i in range(n_lines)
    )
    return Corpus(source_id="synthetic", lines=lines)
