from dataclasses import dataclass
from typing import Iterator, List, Set, Tuple

from fsweval.common.config import CORPUS_FORMATS
from fsweval.common.debug import debug_timing, fsweval_logger
from fsweval.common.exceptions import CorpusError, DuplicateId, FswSyntaxError, MalformedFsw
from fsweval.fsw.parser import parse_sign
from fsweval.fsw.symbol import Sign


logger = fsweval_logger


@dataclass(frozen=True)
class CorpusEntry:
    id: str
    sign: Sign
    # the FSW text as it appeared in the file
    raw: str

    @classmethod
    def from_fsw(cls, entry_id: str, raw: str) -> "CorpusEntry":
        return cls(entry_id, parse_sign(raw), raw)


def _read_lines(path: str) -> Iterator[Tuple[int, str]]:
    try:
        with open(path, "r", encoding="utf-8") as f:
            for line_no, line in enumerate(f, start=1):
                yield line_no, line.rstrip("\r\n")
    except (OSError, UnicodeDecodeError) as e:
        raise CorpusError(f"cannot read corpus: {e}", path=path) from e


def _split_record(line: str, line_no: int, corpus_format: str) -> Tuple[str, str]:
    if corpus_format == "lines":
        return f"L{line_no}", line.strip()
    if "\t" not in line:
        raise MalformedFsw("expected id<TAB>fsw", offset=len(line.encode("utf-8")), line=line_no)
    entry_id, raw = line.split("\t", 1)
    entry_id = entry_id.strip()
    if not entry_id:
        raise MalformedFsw("empty id", offset=0, line=line_no)
    return entry_id, raw.strip()


@debug_timing("load_corpus")
def load_corpus(path: str, corpus_format: str = "lines", strict: bool = True) -> List[CorpusEntry]:
    """Read a ``lines`` (one FSW per line) or ``tsv`` (``id<TAB>fsw``) corpus.

    Blank lines are ignored. In strict mode the first bad line aborts with its
    line number; in lenient mode bad lines are logged and skipped.
    """
    if corpus_format not in CORPUS_FORMATS:
        raise ValueError(f"unknown corpus format {corpus_format!r}")

    entries: List[CorpusEntry] = []
    seen: Set[str] = set()
    num_skipped = 0
    for line_no, line in _read_lines(path):
        if not line.strip():
            continue
        try:
            entry_id, raw = _split_record(line, line_no, corpus_format)
            try:
                sign = parse_sign(raw)
            except FswSyntaxError as e:
                raise e.at_line(line_no) from None
            if entry_id in seen:
                raise DuplicateId(f"id {entry_id!r} appears more than once", line=line_no)
        except (FswSyntaxError, DuplicateId) as e:
            if strict:
                raise
            num_skipped += 1
            logger.warning(f"{path}: skipping line {line_no}: {e}")
            continue
        seen.add(entry_id)
        entries.append(CorpusEntry(entry_id, sign, raw))

    logger.info(f"loaded {len(entries)} signs from {path} ({num_skipped} skipped)")
    return entries
