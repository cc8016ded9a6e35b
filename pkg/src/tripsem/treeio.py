"""Bracketed parse-tree reading, printing, and binarization.

Trees use the usual Penn-style text form: ``(TAG child child ...)`` where a
leaf is ``(TAG token)``. Whitespace between elements is insignificant, and
``format_tree`` produces the canonical single-space rendering, so
``parse_bracketed(format_tree(t)) == t``.

Composition is strictly pairwise, so n-ary trees must be binarized first.
``binarize`` collapses unary chains into their child (keeping the lower tag;
a unary node carries no composition step) and then folds wider nodes into
nested pairs, introducing nodes tagged with the parent tag plus ``*``.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import TreeParseError

__all__ = ["ParseTree", "parse_bracketed", "parse_forest", "format_tree", "binarize"]


@dataclass(frozen=True)
class ParseTree:
    """Labelled tree: either a leaf (tag, token) or a node with children."""

    tag: str
    token: str | None = None
    children: tuple["ParseTree", ...] = field(default=())

    def __post_init__(self):
        if not self.tag or any(ch.isspace() for ch in self.tag):
            raise ValueError(f"tag must be nonempty and whitespace-free, got {self.tag!r}")
        if self.token is not None:
            if not self.token or any(ch.isspace() for ch in self.token):
                raise ValueError(
                    f"leaf token must be nonempty and whitespace-free, got {self.token!r}"
                )
            if self.children:
                raise ValueError("a leaf cannot have children")
        else:
            if len(self.children) < 1:
                raise ValueError("a node needs at least one child")
        object.__setattr__(self, "children", tuple(self.children))

    @classmethod
    def leaf(cls, tag: str, token: str) -> "ParseTree":
        return cls(tag=tag, token=token)

    @classmethod
    def node(cls, tag: str, children) -> "ParseTree":
        return cls(tag=tag, children=tuple(children))

    @property
    def is_leaf(self) -> bool:
        return self.token is not None

    def leaves(self) -> tuple["ParseTree", ...]:
        if self.is_leaf:
            return (self,)
        out: list[ParseTree] = []
        for child in self.children:
            out.extend(child.leaves())
        return tuple(out)

    def fringe(self) -> tuple[str, ...]:
        """Leaf tokens, left to right."""
        return tuple(leaf.token for leaf in self.leaves())


def format_tree(tree: ParseTree) -> str:
    """Canonical single-space bracketed rendering."""
    if tree.is_leaf:
        return f"({tree.tag} {tree.token})"
    inner = " ".join(format_tree(child) for child in tree.children)
    return f"({tree.tag} {inner})"


class _Parser:
    # Tags and tokens are any run of characters other than whitespace and parens.

    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def error(self, message: str) -> TreeParseError:
        return TreeParseError(message, self.pos)

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def at_end(self) -> bool:
        return self.pos >= len(self.text)

    def peek(self) -> str:
        return self.text[self.pos]

    def read_word(self) -> str:
        start = self.pos
        while not self.at_end() and not self.peek().isspace() and self.peek() not in "()":
            self.pos += 1
        return self.text[start:self.pos]

    def parse_tree(self) -> ParseTree:
        self.skip_ws()
        if self.at_end() or self.peek() != "(":
            raise self.error("expected '('")
        self.pos += 1
        self.skip_ws()
        tag = self.read_word()
        if not tag:
            raise self.error("missing tag after '('")
        subtrees: list[ParseTree] = []
        tokens: list[tuple[str, int]] = []
        while True:
            self.skip_ws()
            if self.at_end():
                raise self.error("unbalanced brackets: unexpected end of input")
            ch = self.peek()
            if ch == ")":
                self.pos += 1
                break
            if ch == "(":
                subtrees.append(self.parse_tree())
            else:
                tokens.append((self.read_word(), self.pos))
        if subtrees and tokens:
            raise TreeParseError(
                "node mixes bare tokens with subtrees", tokens[0][1]
            )
        if not subtrees and not tokens:
            raise self.error("empty node")
        if tokens:
            if len(tokens) > 1:
                raise TreeParseError("leaf has more than one token", tokens[1][1])
            return ParseTree.leaf(tag, tokens[0][0])
        return ParseTree.node(tag, subtrees)


def parse_bracketed(text: str) -> ParseTree:
    """Parse a single balanced bracketed expression into a ParseTree."""
    parser = _Parser(text)
    tree = parser.parse_tree()
    parser.skip_ws()
    if not parser.at_end():
        raise parser.error("trailing content after tree")
    return tree


def parse_forest(text: str) -> list[ParseTree]:
    """Parse several trees separated by blank lines."""
    blocks: list[list[str]] = [[]]
    for line in text.splitlines():
        if line.strip():
            blocks[-1].append(line)
        elif blocks[-1]:
            blocks.append([])
    return [parse_bracketed("\n".join(block)) for block in blocks if block]


def binarize(tree: ParseTree, strategy: str = "right") -> ParseTree:
    """Reduce every internal node to exactly two children.

    Unary chains collapse into their child (lower tag wins). Nodes with more
    than two children are folded pairwise: ``right`` turns (x y z) into
    (x (y z)), ``left`` into ((x y) z), recursively. Introduced nodes carry
    the parent tag suffixed with ``*``. The leaf sequence is preserved and
    the transform is idempotent.
    """
    if strategy not in ("right", "left"):
        raise ValueError(f"strategy must be 'right' or 'left', got {strategy!r}")
    return _binarize(tree, strategy)


def _binarize(tree: ParseTree, strategy: str) -> ParseTree:
    if tree.is_leaf:
        return tree
    kids = [_binarize(child, strategy) for child in tree.children]
    if len(kids) == 1:
        return kids[0]
    if len(kids) == 2:
        return ParseTree.node(tree.tag, kids)
    aux = tree.tag + "*"
    if strategy == "right":
        acc = kids[-1]
        for child in reversed(kids[1:-1]):
            acc = ParseTree.node(aux, (child, acc))
        return ParseTree.node(tree.tag, (kids[0], acc))
    acc = kids[0]
    for child in kids[1:-1]:
        acc = ParseTree.node(aux, (acc, child))
    return ParseTree.node(tree.tag, (acc, kids[-1]))
