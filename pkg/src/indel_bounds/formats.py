"""Text and JSON-shaped serialization.

Words: space-separated decimal symbols. Code files: a ``q=<int> n=<int>``
header then one word per line. Support families: a ``n=<int> w=<int>`` header
then one support per line as sorted 1-based indices.
"""

from __future__ import annotations

import re

from .bounds import CodeParams, ListParams
from .constant_weight import CWAnswer, SupportFamily
from .constructions import TightnessInstance, VerificationReport
from .errors import ParameterError
from .levenshtein import Code, Word

_HEADER = re.compile(r"^\s*(\w+)=(\d+)\s+(\w+)=(\d+)\s*$")


def word_to_text(word) -> str:
    return " ".join(str(a) for a in word)


def word_from_text(line: str, q: int) -> Word:
    return Word(tuple(int(x) for x in line.split()), q)


def _header(line: str, first: str, second: str) -> tuple[int, int]:
    m = _HEADER.match(line)
    if not m or (m.group(1), m.group(3)) != (first, second):
        raise ParameterError(f"expected header '{first}=<int> {second}=<int>', got {line!r}")
    return int(m.group(2)), int(m.group(4))


def code_to_text(code: Code) -> str:
    lines = [f"q={code.q} n={code.n}"]
    lines.extend(word_to_text(w) for w in code.words)
    return "\n".join(lines) + "\n"


def code_from_text(text: str) -> Code:
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise ParameterError("empty code file")
    q, n = _header(lines[0], "q", "n")
    words = [word_from_text(ln, q).symbols for ln in lines[1:]]
    if len(set(words)) != len(words):
        raise ParameterError("code file lists a word twice")
    return Code(q, n, tuple(words))


def family_to_text(family: SupportFamily) -> str:
    lines = [f"n={family.n} w={family.w}"]
    lines.extend(" ".join(map(str, s)) for s in family.supports)
    return "\n".join(lines) + "\n"


def family_from_text(text: str) -> SupportFamily:
    lines = text.splitlines()
    if not lines:
        raise ParameterError("empty family file")
    n, w = _header(lines[0], "n", "w")
    supports = [tuple(int(x) for x in ln.split()) for ln in lines[1:] if ln.strip() or w == 0]
    return SupportFamily(n, w, tuple(supports))


def cw_answer_to_record(answer: CWAnswer) -> dict:
    q = answer.query
    rec = {
        "n": q.n,
        "d": q.d,
        "w": q.w,
        "value": answer.value,
        "applicable": answer.applicable,
        "exactness": answer.exactness,
        "method": answer.method,
        "complemented": answer.complemented,
        "upper": answer.upper,
    }
    if answer.witness is not None:
        rec["witness"] = family_to_text(answer.witness)
    return rec


def report_to_record(report: VerificationReport) -> dict:
    return {
        "passed": report.passed,
        "checks": [{"name": c.name, "passed": c.passed, "detail": c.detail} for c in report],
    }


def instance_to_document(inst: TightnessInstance) -> dict:
    p, lp = inst.params, inst.list_params
    return {
        "params": {"q": p.q, "n": p.n, "d": p.d, "s": lp.s, "t": lp.t},
        "center": word_to_text(inst.center),
        "code": code_to_text(inst.code),
        "witness_family": family_to_text(inst.witness_family),
        "markers": [
            {"support": list(support), "symbol": symbol} for support, symbol in inst.markers.items()
        ],
    }


def instance_from_document(doc: dict) -> TightnessInstance:
    prm = doc["params"]
    p = CodeParams(prm["q"], prm["n"], prm["d"])
    markers = {tuple(m["support"]): m["symbol"] for m in doc.get("markers", [])}
    return TightnessInstance(
        p,
        ListParams(prm["s"], prm["t"]),
        word_from_text(doc["center"], p.q),
        code_from_text(doc["code"]),
        family_from_text(doc["witness_family"]),
        markers,
    )
