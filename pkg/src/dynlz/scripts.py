"""Line-oriented edit-script format.

Grammar, one command per line; '#' starts a comment:

    init <symbols>     integer codes separated by spaces, or "ascii literal"
    I <pos> <sym>      insert symbol before position pos (pos may be n+1)
    D <pos>            delete position pos
    S <pos> <sym>      substitute position pos
    Q lzlength [i]     phrase count of the whole string or of prefix [1..i]
    Q select <i>       i-th phrase boundaries
    Q contain <i>      phrase containing position i
    Q recompute        full factorization from scratch
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .dynstr import EditKind, EditOp


class ScriptError(Exception):
    def __init__(self, line_no: int, message: str):
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no


@dataclass(frozen=True)
class Query:
    what: str                  # lzlength | select | contain | recompute
    arg: int | None = None


@dataclass
class EditScript:
    initial: list[int] = field(default_factory=list)
    commands: list[tuple[int, object]] = field(default_factory=list)
    # commands hold (line_no, EditOp | Query)


def _parse_symbol(tok: str, line_no: int) -> int:
    try:
        v = int(tok)
    except ValueError:
        raise ScriptError(line_no, f"bad symbol {tok!r}") from None
    if v < 0:
        raise ScriptError(line_no, f"negative symbol {v}")
    return v


def _parse_pos(tok: str, line_no: int) -> int:
    try:
        v = int(tok)
    except ValueError:
        raise ScriptError(line_no, f"bad position {tok!r}") from None
    if v < 1:
        raise ScriptError(line_no, f"position {v} must be >= 1")
    return v


def parse_script(text: str) -> EditScript:
    script = EditScript()
    saw_init = False
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        toks = line.split()
        head = toks[0]
        if head == "init":
            if saw_init:
                raise ScriptError(line_no, "duplicate init")
            saw_init = True
            rest = line[len("init"):].strip()
            if rest.startswith('"'):
                if not rest.endswith('"') or len(rest) < 2:
                    raise ScriptError(line_no, "unterminated string literal")
                script.initial = [ord(c) for c in rest[1:-1]]
            else:
                script.initial = [_parse_symbol(t, line_no) for t in toks[1:]]
        elif head == "I":
            if len(toks) != 3:
                raise ScriptError(line_no, "I takes <pos> <sym>")
            script.commands.append((line_no, EditOp(
                EditKind.INSERT, _parse_pos(toks[1], line_no),
                _parse_symbol(toks[2], line_no))))
        elif head == "D":
            if len(toks) != 2:
                raise ScriptError(line_no, "D takes <pos>")
            script.commands.append((line_no, EditOp(
                EditKind.DELETE, _parse_pos(toks[1], line_no))))
        elif head == "S":
            if len(toks) != 3:
                raise ScriptError(line_no, "S takes <pos> <sym>")
            script.commands.append((line_no, EditOp(
                EditKind.SUBSTITUTE, _parse_pos(toks[1], line_no),
                _parse_symbol(toks[2], line_no))))
        elif head == "Q":
            if len(toks) < 2:
                raise ScriptError(line_no, "Q needs a query name")
            what = toks[1]
            if what == "lzlength":
                if len(toks) > 3:
                    raise ScriptError(line_no, "Q lzlength takes at most one arg")
                arg = _parse_pos(toks[2], line_no) if len(toks) == 3 else None
                script.commands.append((line_no, Query("lzlength", arg)))
            elif what in ("select", "contain"):
                if len(toks) != 3:
                    raise ScriptError(line_no, f"Q {what} takes <i>")
                script.commands.append((line_no, Query(
                    what, _parse_pos(toks[2], line_no))))
            elif what == "recompute":
                if len(toks) != 2:
                    raise ScriptError(line_no, "Q recompute takes no args")
                script.commands.append((line_no, Query("recompute")))
            else:
                raise ScriptError(line_no, f"unknown query {what!r}")
        else:
            raise ScriptError(line_no, f"unknown command {head!r}")
    return script
