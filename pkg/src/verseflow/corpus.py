"""Parsing of syllable-per-cell rap transcriptions into line-indexed text.

Transcription files carry one syllable per whitespace-delimited cell.  A
leading hyphen marks a word-medial or word-final syllable, a trailing
hyphen marks an unfinished word, and a trailing comma is a plain cell
separator.  ``wel- -come`` therefore reads as the single word
``welcome``, while ``west`` is already whole.

Merging supports two modes: the compact one concatenates continuation
syllables into whole words, the aligned one keeps one output entry per
input cell and fills continuation positions with the ``.`` placeholder so
downstream consumers can keep token positions stable.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path

from .errors import FormatError, LineIndexError, MalformedContinuationError

NULL_TOKEN = "."


@dataclass(frozen=True)
class SyllableToken:
    """One transcription cell with its word-boundary flags.

    ``surface`` is the syllable text with boundary hyphens and the
    separator comma stripped.  ``starts_word`` / ``ends_word`` record
    whether the original cell had no leading / trailing hyphen.
    """

    surface: str
    starts_word: bool
    ends_word: bool


@dataclass(frozen=True)
class TranscriptLine:
    """Ordered words of one rap line plus its global row index."""

    index: int
    words: tuple[str, ...]

    @property
    def text(self) -> str:
        return " ".join(self.words)


@dataclass(frozen=True)
class Corpus:
    """An immutable, line-indexed transcription corpus."""

    source_id: str
    lines: tuple[TranscriptLine, ...]

    def __len__(self) -> int:
        return len(self.lines)

    def to_dict(self) -> dict:
        return {
            "source_id": self.source_id,
            "lines": [{"index": ln.index, "words": list(ln.words)} for ln in self.lines],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True) + "\n"


def _cell_body(cell: str) -> str | None:
    """Strip the separator comma and boundary hyphens from one cell.

    Returns the bare syllable text, or None when the cell does not match
    the grammar (empty body, stray hyphens, embedded comma/whitespace).
    """
    if not cell or any(ch.isspace() for ch in cell):
        return None
    if cell.endswith(","):
        cell = cell[:-1]
    if cell.startswith("-"):
        cell = cell[1:]
    if cell.endswith("-"):
        cell = cell[:-1]
    if not cell or cell.startswith("-") or cell.endswith("-") or "," in cell:
        return None
    return cell


def validate_silbe(raw: list[str]) -> bool:
    """True iff ``raw`` is a non-empty column of well-formed syllable cells."""
    if not raw:
        return False
    return all(_cell_body(cell) is not None for cell in raw)


def parse_cell(cell: str) -> SyllableToken:
    """Parse one well-formed cell into a SyllableToken.

    Raises FormatError when the cell does not match the grammar.
    """
    body = _cell_body(cell)
    if body is None:
        raise FormatError("malformed syllable cell", cell=cell)
    stripped = cell[:-1] if cell.endswith(",") else cell
    return SyllableToken(
        surface=body,
        starts_word=not stripped.startswith("-"),
        ends_word=not stripped.endswith("-"),
    )


def merge_syllables(tokens: list[SyllableToken], null_tokens: bool = False) -> list[str]:
    """Assemble syllable tokens into words.

    With ``null_tokens=False`` the result contains only whole words.  With
    ``null_tokens=True`` the result has exactly one entry per input token:
    the assembled word at the word-initial position and the ``.``
    placeholder at every continuation position.

    Raises MalformedContinuationError when a continuation has no open word
    to attach to, when a new word starts while another is still open, or
    when the sequence ends mid-word.
    """
    out: list[str] = []
    parts: list[str] = []
    anchor = -1  # output slot of the currently open word (aligned mode)
    for pos, tok in enumerate(tokens):
        if tok.starts_word and parts:
            raise MalformedContinuationError(
                f"word-initial syllable at position {pos} while a word is still open",
                position=pos,
            )
        if not tok.starts_word and not parts:
            raise MalformedContinuationError(
                f"continuation syllable at position {pos} has no open word",
                position=pos,
            )
        parts.append(tok.surface)
        if null_tokens:
            out.append(NULL_TOKEN)
            if tok.starts_word:
                anchor = len(out) - 1
        if tok.ends_word:
            word = "".join(parts)
            if null_tokens:
                out[anchor] = word
            else:
                out.append(word)
            parts = []
    if parts:
        raise MalformedContinuationError(
            "input ends while a word is still open", position=len(tokens) - 1
        )
    return out


def load_corpus(path: str | Path, null_tokens: bool = False,
                strip_leading_char: bool = False) -> Corpus:
    """Load a transcription file into a line-indexed Corpus.

    Each non-blank file line becomes one TranscriptLine; indices are dense
    from 0.  ``strip_leading_char`` drops the first character of each
    line's first cell, for raw exports that carry a stray prefix there.

    Raises FileNotFoundError for a missing file and FormatError for the
    first offending cell (or an empty file).
    """
    path = Path(path)
    text = path.read_text(encoding="utf-8")
    lines: list[TranscriptLine] = []
    index = 0
    for lineno, raw_line in enumerate(text.splitlines(), start=1):
        cells = raw_line.split()
        if not cells:
            continue
        if strip_leading_char:
            cells[0] = cells[0][1:]
        tokens = []
        for col, cell in enumerate(cells, start=1):
            if _cell_body(cell) is None:
                raise FormatError("malformed syllable cell", cell=cell,
                                  line=lineno, column=col)
            tokens.append(parse_cell(cell))
        try:
            words = merge_syllables(tokens, null_tokens)
        except MalformedContinuationError as exc:
            bad = exc.position if exc.position is not None else 0
            raise FormatError(str(exc), cell=cells[bad], line=lineno,
                              column=bad + 1) from exc
        if words:
            lines.append(TranscriptLine(index=index, words=tuple(words)))
            index += 1
    if not lines:
        raise FormatError("no transcription lines found")
    return Corpus(source_id=path.name, lines=tuple(lines))


def get_line(corpus: Corpus, index: int) -> TranscriptLine:
    """Return the line at ``index``; raises LineIndexError when out of bounds."""
    if not 0 <= index < len(corpus.lines):
        raise LineIndexError(
            f"line index {index} outside corpus of {len(corpus.lines)} lines"
        )
    return corpus.lines[index]
