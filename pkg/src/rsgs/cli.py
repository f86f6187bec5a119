"""Command-line front end and the expression / presentation-file formats.

Expressions::

    expr     := ['+'|'-'] term (('+'|'-') term)*  |  '0'
    term     := [rational ['*']] word
    word     := NAME | '(' word word ')'
    rational := INT ['/' INT]

Presentation files are JSON::

    {"generators": ["a", "b", "c"], "relations": ["(c b) - a", "(c a) - b"]}
    {"generators": ["e", "f", "h"],
     "lie": {"constants": [{"i": 2, "j": 1, "value": {"3": "-1"}}, ...]}}

Lie indices are 1-based positions in ``generators``; only ``i > j`` entries
are needed.
"""
from __future__ import annotations

import argparse
import hashlib
import json
import re
import sys
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Dict, List, Optional

from .freers import Poly, normalize, poly_str
from .gs import (
    COMPLETE,
    NotConfluent,
    Presentation,
    complete,
    degree_counts,
    irr,
    is_gs,
    nf_equal,
)
from .lie import InvalidLie, LieAlgebra, enveloping_presentation, validate, verify_theorem
from .oracle import quotient_dims
from .terms import DEFAULT_CAP, Alphabet, ResourceBound, compare, word_str

EXIT_OK, EXIT_FALSE, EXIT_INPUT, EXIT_BOUND = 0, 1, 2, 3


class ExpressionError(ValueError):
    def __init__(self, message: str, offset: int):
        self.offset = offset
        super().__init__(f"{message} at offset {offset}")


class ExprSyntaxError(ExpressionError):
    pass


class UnknownGenerator(ExpressionError):
    pass


class ZeroDenominator(ExpressionError):
    pass


class InputError(ValueError):
    """Malformed presentation file or command arguments."""


# ---------------------------------------------------------------------------
# expressions

_TOKEN = re.compile(r"\s*(?:(?P<int>\d+)|(?P<name>[A-Za-z_][A-Za-z0-9_]*)|(?P<op>[-+*/()]))")


@dataclass
class Token:
    kind: str  # "int", "name", an operator character, or "end"
    text: str
    pos: int


def tokenize(text: str) -> List[Token]:
    out = []
    pos = 0
    while True:
        m = _TOKEN.match(text, pos)
        if m is None or m.end() == pos:
            rest = text[pos:]
            if not rest.strip():
                out.append(Token("end", "", len(text)))
                return out
            start = pos + len(rest) - len(rest.lstrip())
            raise ExprSyntaxError(f"unexpected character {text[start]!r}", start)
        kind = m.lastgroup
        tok = m.group(kind)
        out.append(Token(tok if kind == "op" else kind, tok, m.start(kind)))
        pos = m.end()


class Parser:
    def __init__(self, text: str, alphabet: Alphabet):
        self.text = text
        self.alphabet = alphabet
        self.names = {x.name: x for x in alphabet}
        self.toks = tokenize(text)
        self.i = 0

    @property
    def tok(self) -> Token:
        return self.toks[self.i]

    def take(self, kind: str) -> Token:
        t = self.tok
        if t.kind != kind:
            want = "end of input" if kind == "end" else repr(kind)
            got = "end of input" if t.kind == "end" else repr(t.text)
            raise ExprSyntaxError(f"expected {want}, found {got}", t.pos)
        self.i += 1
        return t

    def expr(self) -> Poly:
        if self.tok.kind == "int" and self.tok.text.strip("0") == "" and self.toks[self.i + 1].kind == "end":
            self.i += 1
            return Poly()
        sign = 1
        if self.tok.kind in "+-":
            sign = -1 if self.take(self.tok.kind).kind == "-" else 1
        total = self.term().scale(sign)
        while self.tok.kind in ("+", "-"):
            sign = -1 if self.take(self.tok.kind).kind == "-" else 1
            total = total + self.term().scale(sign)
        self.take("end")
        return total

    def term(self) -> Poly:
        coeff = Fraction(1)
        if self.tok.kind == "int":
            coeff = self.rational()
            if self.tok.kind == "*":
                self.i += 1
        return normalize(self.word()).scale(coeff)

    def rational(self) -> Fraction:
        num = int(self.take("int").text)
        if self.tok.kind == "/":
            self.i += 1
            den_tok = self.take("int")
            den = int(den_tok.text)
            if den == 0:
                raise ZeroDenominator("zero denominator", den_tok.pos)
            return Fraction(num, den)
        return Fraction(num)

    def word(self):
        t = self.tok
        if t.kind == "name":
            self.i += 1
            if t.text not in self.names:
                raise UnknownGenerator(f"unknown generator {t.text!r}", t.pos)
            return self.names[t.text]
        if t.kind == "(":
            self.i += 1
            left = self.word()
            right = self.word()
            self.take(")")
            return (left, right)
        got = "end of input" if t.kind == "end" else repr(t.text)
        raise ExprSyntaxError(f"expected a word, found {got}", t.pos)


def parse_expression(text: str, alphabet: Alphabet) -> Poly:
    return Parser(text, alphabet).expr()


def parse_word(text: str, alphabet: Alphabet):
    p = Parser(text, alphabet)
    w = p.word()
    p.take("end")
    return w


def scan_names(*texts: str) -> List[str]:
    """Generator names in order of first appearance."""
    seen: Dict[str, None] = {}
    for t in texts:
        for tok in tokenize(t):
            if tok.kind == "name":
                seen.setdefault(tok.text)
    return list(seen)


# ---------------------------------------------------------------------------
# presentation files

def _fraction(value, where: str) -> Fraction:
    if isinstance(value, bool) or not isinstance(value, (int, str)):
        raise InputError(f"{where}: coefficient must be an integer or a 'p/q' string, got {value!r}")
    try:
        return Fraction(value)
    except (ValueError, ZeroDivisionError) as exc:
        raise InputError(f"{where}: bad rational {value!r}") from exc


def frac_str(c: Fraction) -> str:
    return str(c)


@dataclass
class PresentationFile:
    generators: List[str]
    relations: Optional[List[str]] = None
    lie: Optional[LieAlgebra] = None

    @property
    def alphabet(self) -> Alphabet:
        return Alphabet.from_names(self.generators)

    def presentation(self) -> Presentation:
        if self.lie is not None:
            return enveloping_presentation(self.lie)
        A = self.alphabet
        polys = []
        for k, text in enumerate(self.relations or []):
            try:
                polys.append(parse_expression(text, A))
            except ExpressionError as exc:
                raise InputError(f"relation {k + 1} ({text!r}): {exc}") from exc
        return Presentation.from_polys(A, polys)


def parse_presentation(data, source: str = "<input>") -> PresentationFile:
    if not isinstance(data, dict):
        raise InputError(f"{source}: top level must be a JSON object")
    gens = data.get("generators")
    if not isinstance(gens, list) or not all(isinstance(g, str) and g for g in gens):
        raise InputError(f"{source}: 'generators' must be a list of nonempty names")
    if len(set(gens)) != len(gens):
        raise InputError(f"{source}: duplicate generator names")
    bad = [g for g in gens if not re.fullmatch(r"[A-Za-z_][A-Za-z0-9_]*", g)]
    if bad:
        raise InputError(f"{source}: invalid generator names {bad}")
    if "relations" in data and "lie" in data:
        raise InputError(f"{source}: give either 'relations' or 'lie', not both")
    if "lie" in data:
        return PresentationFile(gens, lie=_parse_lie(data["lie"], gens, source))
    rels = data.get("relations", [])
    if not isinstance(rels, list) or not all(isinstance(r, str) for r in rels):
        raise InputError(f"{source}: 'relations' must be a list of expression strings")
    pf = PresentationFile(gens, relations=rels)
    pf.presentation()  # surface parse errors early
    return pf


def _parse_lie(table, gens, source) -> LieAlgebra:
    if not isinstance(table, dict):
        raise InputError(f"{source}: 'lie' must be an object")
    n = len(gens)
    if "dim" in table and table["dim"] != n:
        raise InputError(f"{source}: lie.dim={table['dim']} but {n} generators declared")
    lower = {}
    for k, entry in enumerate(table.get("constants", [])):
        where = f"{source}: lie.constants[{k}]"
        try:
            i, j, value = int(entry["i"]), int(entry["j"]), entry["value"]
        except (KeyError, TypeError, ValueError) as exc:
            raise InputError(f"{where}: need integer 'i', 'j' and a 'value' object") from exc
        if not (1 <= j < i <= n):
            raise InputError(f"{where}: need 1 <= j < i <= {n}, got i={i}, j={j}")
        if not isinstance(value, dict):
            raise InputError(f"{where}: 'value' must map basis index to coefficient")
        vec = {}
        for m, c in value.items():
            try:
                mi = int(m)
            except ValueError as exc:
                raise InputError(f"{where}: bad basis index {m!r}") from exc
            if not 1 <= mi <= n:
                raise InputError(f"{where}: basis index {mi} out of range")
            vec[mi - 1] = _fraction(c, where)
        if (i - 1, j - 1) in lower:
            raise InputError(f"{where}: duplicate entry for ({i}, {j})")
        lower[(i - 1, j - 1)] = vec
    return LieAlgebra.from_lower(gens, lower)


def load_presentation(path) -> PresentationFile:
    path = Path(path)
    try:
        data = json.loads(path.read_text(encoding="utf-8"))
    except OSError as exc:
        raise InputError(f"{path}: {exc.strerror}") from exc
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: line {exc.lineno}: {exc.msg}") from exc
    return parse_presentation(data, str(path))


def presentation_json(S: Presentation) -> dict:
    return {"generators": S.alphabet.names, "relations": [poly_str(r) for r in S.relations]}


def lie_json(L: LieAlgebra) -> dict:
    entries = []
    for i in range(L.dim):
        for j in range(i):
            vec = L.bracket(i, j)
            if vec:
                entries.append({"i": i + 1, "j": j + 1, "value": {str(m + 1): frac_str(c) for m, c in sorted(vec.items())}})
    return {"generators": list(L.basis), "lie": {"dim": L.dim, "constants": entries}}


# ---------------------------------------------------------------------------
# commands

def _digest(args) -> str:
    h = hashlib.sha256()
    h.update(args.command.encode())
    for name in ("file",):
        p = getattr(args, name, None)
        if p:
            h.update(Path(p).read_bytes())
    for name in ("expr", "w1", "w2", "expr1", "expr2", "max_degree", "generators"):
        v = getattr(args, name, None)
        if v is not None:
            h.update(f"{name}={v}".encode())
    return h.hexdigest()


def _alphabet_for(args, *texts) -> Alphabet:
    if getattr(args, "file", None):
        return load_presentation(args.file).alphabet
    if args.generators:
        return Alphabet.from_names(n.strip() for n in args.generators.split(","))
    return Alphabet.from_names(scan_names(*texts))


def _compositions_json(reports, limit=None):
    out = []
    for r in reports[:limit]:
        out.append(
            {
                "kind": r.kind,
                "sources": [s + 1 for s in r.sources],
                "multiplier": None if r.multiplier is None else str(r.multiplier),
                "path": "".join(r.path),
                "raw": poly_str(r.raw),
                "normal_form": poly_str(r.normal_form),
                "trivial": r.trivial,
            }
        )
    return out


def cmd_normalize(args):
    A = _alphabet_for(args, args.expr)
    p = parse_expression(args.expr, A)
    return EXIT_OK, {"result": poly_str(p)}, poly_str(p)


def cmd_compare(args):
    A = _alphabet_for(args, args.w1, args.w2)
    u, v = parse_word(args.w1, A), parse_word(args.w2, A)
    verdict = {-1: "LT", 0: "EQ", 1: "GT"}[compare(u, v)]
    return EXIT_OK, {"result": verdict, "words": [word_str(u), word_str(v)]}, verdict


def cmd_check_gs(args):
    S = load_presentation(args.file).presentation()
    ok, reports = is_gs(S, args.cap)
    bad = [r for r in reports if not r.trivial]
    lines = [f"GS basis: {'yes' if ok else 'no'}; compositions checked: {len(reports)}"]
    for r in bad:
        lines.append(f"  nontrivial {r.describe()}: {poly_str(r.normal_form)}")
    result = {"gs": ok, "checked": len(reports), "nontrivial": _compositions_json(bad)}
    return (EXIT_OK if ok else EXIT_FALSE), {"result": result}, "\n".join(lines)


def cmd_complete(args):
    S = load_presentation(args.file).presentation()
    S2, status = complete(S, args.max_degree, args.cap)
    out = presentation_json(S2)
    text = json.dumps(out, indent=2)
    if args.output:
        Path(args.output).write_text(text + "\n", encoding="utf-8")
        shown = f"status: {status}; {len(S2.relations)} relations written to {args.output}"
    else:
        shown = f"status: {status}\n{text}"
    code = EXIT_OK if status == COMPLETE else EXIT_BOUND
    return code, {"result": {"status": status, "presentation": out}}, shown


def cmd_irr(args):
    S = load_presentation(args.file).presentation()
    words = irr(S, args.max_degree, args.cap)
    counts = degree_counts(words, args.max_degree)
    lines = [f"degree {d}: {counts[d]}" for d in counts]
    if args.list:
        lines += [str(w) for w in words]
    result = {"words": [str(w) for w in words]}
    return EXIT_OK, {"result": result, "degrees": {str(d): c for d, c in counts.items()}}, "\n".join(lines)


def cmd_envelope(args):
    pf = load_presentation(args.file)
    if pf.lie is None:
        raise InputError(f"{args.file}: no 'lie' table")
    bad = validate(pf.lie)
    if bad:
        raise InvalidLie(bad)
    rep = verify_theorem(pf.lie, args.cap)
    lines = [rep.summary()]
    for r in rep.compositions:
        lines.append(f"  {r.describe()} -> {poly_str(r.normal_form)}")
    result = {
        "gs": rep.passed,
        "relations": [poly_str(r) for r in rep.presentation.relations],
        "compositions": _compositions_json(rep.compositions),
    }
    return (EXIT_OK if rep.passed else EXIT_FALSE), {"result": result}, "\n".join(lines)


def cmd_equal(args):
    S = load_presentation(args.file).presentation()
    f = parse_expression(args.expr1, S.alphabet)
    g = parse_expression(args.expr2, S.alphabet)
    same = nf_equal(f, g, S)
    return (EXIT_OK if same else EXIT_FALSE), {"result": same}, "equal" if same else "not equal"


def cmd_oracle(args):
    S = load_presentation(args.file).presentation()
    dims = quotient_dims(S, args.max_degree, args.cap)
    lines = [f"degree {d}: {c}" for d, c in dims.items()]
    return EXIT_OK, {"result": "ok", "degrees": {str(d): c for d, c in dims.items()}}, "\n".join(lines)


COMMANDS = {
    "normalize": cmd_normalize,
    "compare": cmd_compare,
    "check-gs": cmd_check_gs,
    "complete": cmd_complete,
    "irr": cmd_irr,
    "envelope": cmd_envelope,
    "equal": cmd_equal,
    "oracle": cmd_oracle,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable report")
    common.add_argument("--cap", type=int, default=DEFAULT_CAP, help="enumeration cap (words)")

    ap = argparse.ArgumentParser(prog="rsgs", description="Groebner-Shirshov bases for right-symmetric algebras")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("normalize", parents=[common], help="expand an expression in good words")
    p.add_argument("expr")
    p.add_argument("--generators", help="comma-separated generator order")
    p.add_argument("--file", help="take the generator order from a presentation file")

    p = sub.add_parser("compare", parents=[common], help="deg-lex comparison of two words")
    p.add_argument("w1")
    p.add_argument("w2")
    p.add_argument("--generators")
    p.add_argument("--file")

    p = sub.add_parser("check-gs", parents=[common], help="check all compositions")
    p.add_argument("file")

    p = sub.add_parser("complete", parents=[common], help="run completion")
    p.add_argument("file")
    p.add_argument("--max-degree", type=int, required=True)
    p.add_argument("-o", "--output", help="write the completed presentation here")

    p = sub.add_parser("irr", parents=[common], help="irreducible good words")
    p.add_argument("file")
    p.add_argument("--max-degree", type=int, required=True)
    p.add_argument("--list", action="store_true", help="print every word")

    p = sub.add_parser("envelope", parents=[common], help="enveloping algebra of a Lie table")
    p.add_argument("file")

    p = sub.add_parser("equal", parents=[common], help="word problem via normal forms")
    p.add_argument("file")
    p.add_argument("expr1")
    p.add_argument("expr2")

    p = sub.add_parser("oracle", parents=[common], help="quotient dimensions by linear algebra")
    p.add_argument("file")
    p.add_argument("--max-degree", type=int, required=True)
    return ap


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    if getattr(args, "max_degree", 1) is not None and getattr(args, "max_degree", 1) < 1:
        print("error: --max-degree must be >= 1", file=stderr)
        return EXIT_INPUT
    try:
        code, report, text = COMMANDS[args.command](args)
    except (InputError, ExpressionError, InvalidLie, NotConfluent, ValueError) as exc:
        print(f"error: {exc}", file=stderr)
        return EXIT_INPUT
    except ResourceBound as exc:
        print(f"resource bound: {exc}", file=stderr)
        return EXIT_BOUND
    if args.json:
        report = {"command": args.command, "input_digest": _digest(args), **report}
        report.setdefault("degrees", None)
        json.dump(report, stdout, indent=2)
        stdout.write("\n")
    else:
        print(text, file=stdout)
    return code


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
