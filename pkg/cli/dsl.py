"""
그래프 생성자 DSL
- 문법: expr := NAME [ "(" [arg ("," arg)*] ")" ],  arg := INT | expr
- 예: petersen, complement(schlafli), cartesian(complete(3), cycle(4))
- 오류는 입력 문자열 내 위치와 함께 DSLParseError
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Callable, Dict, List, Sequence, Tuple, Union

from graphs import constructors as gc
from graphs import products as gp
from graphs.graph import Graph
from utils.errors import DSLParseError

_TOKEN = re.compile(r"(?P<int>-?\d+)|(?P<name>[A-Za-z_][A-Za-z0-9_]*)|(?P<punct>[(),])")

Arg = Union[int, Graph]


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    position: int


@dataclass(frozen=True)
class Constructor:
    builder: Callable[..., Graph]
    signatures: Tuple[Tuple[str, ...], ...]
    doc: str


# 이름 → (생성 함수, 허용 인자 시그니처)
CONSTRUCTORS: Dict[str, Constructor] = {
    "empty": Constructor(gc.empty_graph, (("int",),), "empty(n): n isolated vertices"),
    "complete": Constructor(gc.complete, (("int",),), "complete(n): K_n"),
    "cycle": Constructor(gc.cycle, (("int",),), "cycle(n): C_n"),
    "path": Constructor(gc.path, (("int",),), "path(n): P_n"),
    "hamming": Constructor(gc.hamming, (("int", "int"),), "hamming(d,q): H(d,q)"),
    "kneser": Constructor(gc.kneser, (("int", "int"),), "kneser(n,k): KG(n,k)"),
    "johnson": Constructor(gc.johnson, (("int", "int"),), "johnson(n,k): J(n,k)"),
    "petersen": Constructor(gc.petersen, ((),), "petersen: KG(5,2)"),
    "folded_cube": Constructor(gc.folded_cube, (("int",),), "folded_cube(d)"),
    "clebsch": Constructor(gc.clebsch, ((), ("int",)), "clebsch[(5|10)]: 5-regular or its complement"),
    "shrikhande": Constructor(gc.shrikhande, ((),), "shrikhande"),
    "schlafli": Constructor(gc.schlafli, ((),), "schlafli"),
    "gosset": Constructor(gc.gosset, ((),), "gosset"),
    "line_graph": Constructor(gc.line_graph, (("graph",),), "line_graph(G)"),
    "complement": Constructor(gc.complement, (("graph",),), "complement(G)"),
    "disjoint_union": Constructor(gc.disjoint_union, (("graph", "int"),), "disjoint_union(G,copies)"),
    "cartesian": Constructor(gp.cartesian, (("graph", "graph"),), "cartesian(G,H): G □ H"),
    "direct": Constructor(gp.direct, (("graph", "graph"),), "direct(G,H): G × H"),
    "strong": Constructor(gp.strong, (("graph", "graph"),), "strong(G,H): G ⊠ H"),
    "lexicographic": Constructor(gp.lexicographic, (("graph", "graph"),), "lexicographic(G,H): G ∘ H"),
}


def tokenize(text: str) -> List[Token]:
    tokens: List[Token] = []
    pos = 0
    while pos < len(text):
        if text[pos].isspace():
            pos += 1
            continue
        m = _TOKEN.match(text, pos)
        if m is None:
            raise DSLParseError(f"unexpected character {text[pos]!r}", pos)
        tokens.append(Token(m.lastgroup, m.group(), pos))
        pos = m.end()
    tokens.append(Token("end", "", len(text)))
    return tokens


class GraphExpressionParser:
    """재귀 하강 파서 (파싱과 동시에 그래프 생성)"""

    def __init__(self, text: str):
        self.text = text
        self.tokens = tokenize(text)
        self.index = 0

    @property
    def current(self) -> Token:
        return self.tokens[self.index]

    def _advance(self) -> Token:
        token = self.current
        self.index += 1
        return token

    def _expect(self, text: str) -> Token:
        token = self.current
        if token.text != text:
            found = "end of input" if token.kind == "end" else repr(token.text)
            raise DSLParseError(f"expected {text!r}, found {found}", token.position)
        return self._advance()

    def parse(self) -> Graph:
        result = self._expression()
        if self.current.kind != "end":
            raise DSLParseError(
                f"unexpected {self.current.text!r} after expression",
                self.current.position)
        return result

    def _argument(self) -> Arg:
        if self.current.kind == "int":
            return int(self._advance().text)
        return self._expression()

    def _expression(self) -> Graph:
        token = self.current
        if token.kind != "name":
            found = "end of input" if token.kind == "end" else repr(token.text)
            raise DSLParseError(f"expected a graph name, found {found}", token.position)
        self._advance()
        ctor = CONSTRUCTORS.get(token.text)
        if ctor is None:
            raise DSLParseError(f"unknown graph constructor {token.text!r}", token.position)

        args: List[Arg] = []
        if self.current.text == "(":
            self._advance()
            if self.current.text != ")":
                args.append(self._argument())
                while self.current.text == ",":
                    self._advance()
                    args.append(self._argument())
            self._expect(")")

        kinds = tuple("graph" if isinstance(a, Graph) else "int" for a in args)
        if kinds not in ctor.signatures:
            expected = " or ".join(f"({', '.join(s)})" for s in ctor.signatures)
            raise DSLParseError(
                f"{token.text} takes {expected}, got ({', '.join(kinds)})",
                token.position)
        return ctor.builder(*args)


def parse_graph(text: str) -> Graph:
    """
    DSL 문자열로 그래프 생성

    Raises:
        DSLParseError: 문법 오류 (position 포함)
        GraphError: 생성자 파라미터 범위 오류
    """
    graph = GraphExpressionParser(text).parse()
    return graph.relabel(text.strip().replace(" ", ""))


def grammar_help(names: Sequence[str] = ()) -> str:
    lines = ["expr := NAME [ '(' arg {',' arg} ')' ]   arg := INTEGER | expr", "constructors:"]
    for name in names or sorted(CONSTRUCTORS):
        lines.append(f"  {CONSTRUCTORS[name].doc}")
    return "\n".join(lines)
