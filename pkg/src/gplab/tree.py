"""Binary join-tree genotype and its three edit primitives.

A genotype is a binary tree whose internal nodes all carry the same
2-ary join symbol and whose leaves carry terminals.  Terminals are the
positive variables x1..xn and their complements ~x1..~xn; internally a
terminal is a signed integer code (+i for xi, -i for ~xi, never 0).
The tree module itself is agnostic of the problem size n; code bounds
are enforced where weights are known (see :mod:`gplab.fitness`).

Trees are values: the edit primitives return new trees and share
untouched subtrees with their input, so holding on to an old tree is
always safe.  Every tree also carries its inorder leaf-code sequence as
a read-only numpy array, kept in sync by the primitives, which is what
the fitness functions consume.
"""

from __future__ import annotations

from typing import Iterable, NamedTuple

import numpy as np


class Terminal(NamedTuple):
    """A leaf symbol: variable index plus polarity."""

    index: int
    negated: bool = False

    @property
    def code(self) -> int:
        return -self.index if self.negated else self.index

    @classmethod
    def from_code(cls, code: int) -> "Terminal":
        code = int(code)
        if code == 0:
            raise ValueError("terminal code must be a nonzero integer")
        return cls(abs(code), code < 0)

    def __str__(self) -> str:
        return f"~x{self.index}" if self.negated else f"x{self.index}"


def as_code(terminal) -> int:
    """Normalize a Terminal or raw signed integer to an integer code."""
    if isinstance(terminal, Terminal):
        return terminal.code
    code = int(terminal)
    if code == 0:
        raise ValueError("terminal code must be a nonzero integer")
    return code


class _Node:
    """Tree node; ``code == 0`` marks a join, otherwise a leaf."""

    __slots__ = ("code", "left", "right", "leaves")

    def __init__(self, code, left, right, leaves):
        self.code = code
        self.left = left
        self.right = right
        self.leaves = leaves


def _leaf(code: int) -> _Node:
    return _Node(code, None, None, 1)


def _join(left: _Node, right: _Node) -> _Node:
    return _Node(0, left, right, left.leaves + right.leaves)


def _extract_codes(root) -> np.ndarray:
    """Inorder leaf codes by explicit-stack traversal (no recursion)."""
    if root is None:
        return np.empty(0, dtype=np.int64)
    out = np.empty(root.leaves, dtype=np.int64)
    i = 0
    stack = [root]
    while stack:
        node = stack.pop()
        while node.code == 0:
            stack.append(node.right)
            node = node.left
        out[i] = node.code
        i += 1
    return out


class SyntaxTree:
    """Immutable binary join-tree over signed terminal codes."""

    __slots__ = ("_root", "_codes")

    def __init__(self, root, codes=None):
        self._root = root
        if codes is None:
            codes = _extract_codes(root)
        codes.flags.writeable = False
        self._codes = codes

    # -- constructors --------------------------------------------------

    @classmethod
    def empty(cls) -> "SyntaxTree":
        return cls(None)

    @classmethod
    def leaf(cls, terminal) -> "SyntaxTree":
        return cls(_leaf(as_code(terminal)))

    @classmethod
    def from_codes(cls, codes: Iterable, rng=None) -> "SyntaxTree":
        """Tree over the given inorder leaf sequence.

        Without ``rng`` the shape is balanced (midpoint splits); with an
        ``rng`` the split point of every subtree is drawn uniformly,
        which spreads the probability over all shapes without favoring
        combs.
        """
        codes = [as_code(c) for c in codes]
        if not codes:
            return cls.empty()

        def build(lo, hi):
            if hi - lo == 1:
                return _leaf(codes[lo])
            if rng is None:
                split = (lo + hi) // 2
            else:
                split = lo + 1 + int(rng.integers(hi - lo - 1))
            return _join(build(lo, split), build(split, hi))

        return cls(build(0, len(codes)))

    @classmethod
    def from_text(cls, text: str) -> "SyntaxTree":
        return parse_tree(text)

    # -- views -----------------------------------------------------------

    @property
    def is_empty(self) -> bool:
        return self._root is None

    @property
    def leaf_count(self) -> int:
        return 0 if self._root is None else self._root.leaves

    @property
    def node_count(self) -> int:
        return 0 if self._root is None else 2 * self._root.leaves - 1

    @property
    def leaf_codes(self) -> np.ndarray:
        """Inorder leaf codes as a read-only int64 array."""
        return self._codes

    def terminals(self) -> tuple[Terminal, ...]:
        return tuple(Terminal.from_code(c) for c in self._codes)

    def to_text(self) -> str:
        return format_tree(self)

    def __repr__(self) -> str:
        return f"SyntaxTree({self.to_text()!r})"

    def __eq__(self, other) -> bool:
        if not isinstance(other, SyntaxTree):
            return NotImplemented
        return self.to_text() == other.to_text()

    def __hash__(self) -> int:
        return hash(self.to_text())

    def validate(self) -> None:
        """Recompute structure bottom-up and compare with cached state.

        Raises AssertionError on any arity, leaf-count or code-cache
        mismatch; used by debug audits and tests, not by the hot loop.
        """
        codes = _extract_codes(self._root)
        assert np.array_equal(codes, self._codes), "leaf-code cache out of sync"
        stack = [(self._root, False)] if self._root is not None else []
        counts = {}
        while stack:
            node, expanded = stack.pop()
            if node.code != 0:
                assert node.left is None and node.right is None, "leaf with children"
                counts[id(node)] = 1
                continue
            assert node.left is not None and node.right is not None, "join without two children"
            if not expanded:
                stack.append((node, True))
                stack.append((node.left, False))
                stack.append((node.right, False))
            else:
                total = counts[id(node.left)] + counts[id(node.right)]
                assert node.leaves == total, "stale subtree leaf count"
                counts[id(node)] = total


# -- inorder views -------------------------------------------------------


def inorder_leaves(tree: SyntaxTree) -> np.ndarray:
    """Leaves in left-to-right inorder, as signed terminal codes."""
    return tree.leaf_codes


def complexity(tree: SyntaxTree) -> int:
    """Total node count (joins plus leaves); the minimized objective."""
    return tree.node_count


class TreeStats(NamedTuple):
    """Size summary of a tree under some problem's expression rule."""

    leaf_count: int
    expressed_count: int

    @property
    def complexity(self) -> int:
        return 2 * self.leaf_count - 1 if self.leaf_count else 0

    @property
    def surplus(self) -> int:
        """Leaves minus expressed variables; never negative."""
        return self.leaf_count - self.expressed_count


# -- edit primitives -----------------------------------------------------
#
# Node addressing: positions index canonical inorder enumerations, one
# over leaves only (substitute/delete) and one over all nodes (insert),
# so a uniform random integer gives a uniform random target and a replay
# of recorded draws rebuilds the identical tree.


def _descend_to_leaf(root, position):
    path = []
    node, i = root, position
    while node.code == 0:
        if i < node.left.leaves:
            path.append((node, True))
            node = node.left
        else:
            i -= node.left.leaves
            path.append((node, False))
            node = node.right
    return path, node


def _rebuild(path, node):
    for parent, went_left in reversed(path):
        node = _join(node, parent.right) if went_left else _join(parent.left, node)
    return node


def substitute_leaf(tree: SyntaxTree, position: int, terminal) -> SyntaxTree:
    """Replace the leaf at inorder ``position``; shape is untouched."""
    code = as_code(terminal)
    if tree.is_empty:
        raise IndexError("cannot substitute in an empty tree")
    if not 0 <= position < tree.leaf_count:
        raise IndexError(f"leaf position {position} out of range")
    path, _ = _descend_to_leaf(tree._root, position)
    root = _rebuild(path, _leaf(code))
    codes = tree.leaf_codes.copy()
    codes[position] = code
    return SyntaxTree(root, codes)


def _insert_node(root, node_position, code, new_on_left):
    """Core of insert_at; returns (new_root, new_leaf_position)."""
    if root is None:
        return _leaf(code), 0
    if not 0 <= node_position < 2 * root.leaves - 1:
        raise IndexError(f"node position {node_position} out of range")
    path = []
    node, t, leaf_offset = root, node_position, 0
    while node.code == 0:
        left_block = 2 * node.left.leaves - 1
        if t < left_block:
            path.append((node, True))
            node = node.left
        elif t == left_block:
            break
        else:
            t -= left_block + 1
            leaf_offset += node.left.leaves
            path.append((node, False))
            node = node.right
    new = _leaf(code)
    joined = _join(new, node) if new_on_left else _join(node, new)
    position = leaf_offset if new_on_left else leaf_offset + node.leaves
    return _rebuild(path, joined), position


def insert_at(tree: SyntaxTree, node_position: int, terminal, side: str = "left") -> SyntaxTree:
    """Grow the tree by one leaf next to the node at ``node_position``.

    The addressed node (leaf or join) is replaced by a join whose
    children are the new leaf and the old subtree; ``side`` says whether
    the new leaf becomes the left or right child.  Complexity rises by
    exactly 2.  On the empty tree the position is ignored and the result
    is a single leaf.
    """
    if side not in ("left", "right"):
        raise ValueError(f"side must be 'left' or 'right', got {side!r}")
    code = as_code(terminal)
    root, position = _insert_node(tree._root, node_position, code, side == "left")
    codes = np.insert(tree.leaf_codes, position, code)
    return SyntaxTree(root, codes)


def delete_leaf(tree: SyntaxTree, position: int) -> SyntaxTree:
    """Drop the leaf at inorder ``position``; its sibling replaces the
    parent join, so complexity falls by exactly 2.  Deleting the only
    leaf yields the empty tree."""
    if tree.is_empty:
        raise IndexError("cannot delete from an empty tree")
    if not 0 <= position < tree.leaf_count:
        raise IndexError(f"leaf position {position} out of range")
    if tree.leaf_count == 1:
        return SyntaxTree.empty()
    path, _ = _descend_to_leaf(tree._root, position)
    parent, went_left = path.pop()
    sibling = parent.right if went_left else parent.left
    root = _rebuild(path, sibling)
    codes = np.delete(tree.leaf_codes, position)
    return SyntaxTree(root, codes)


# -- text form -----------------------------------------------------------
#
# Nested parenthesized text: joins as (J left right), leaves as x4 /
# ~x4, the empty tree as ().  Used in trace logs and test fixtures.


def format_tree(tree: SyntaxTree) -> str:
    if tree.is_empty:
        return "()"
    parts = []
    stack = [tree._root]
    while stack:
        node = stack.pop()
        if node is None:
            parts.append(")")
        elif node.code != 0:
            parts.append(str(Terminal.from_code(node.code)))
        else:
            parts.append("(J")
            stack.append(None)
            stack.append(node.right)
            stack.append(node.left)
    text = []
    for i, piece in enumerate(parts):
        if i and piece != ")":
            text.append(" ")
        text.append(piece)
    return "".join(text)


def parse_tree(text: str) -> SyntaxTree:
    """Inverse of :func:`format_tree`."""
    tokens = text.replace("(", " ( ").replace(")", " ) ").split()
    pos = 0

    def fail(msg):
        raise ValueError(f"bad tree text at token {pos}: {msg}")

    def parse_node():
        nonlocal pos
        if pos >= len(tokens):
            fail("unexpected end")
        tok = tokens[pos]
        if tok == "(":
            pos += 1
            if pos < len(tokens) and tokens[pos] == ")":  # ()
                pos += 1
                return None
            if pos >= len(tokens) or tokens[pos] != "J":
                fail("expected J")
            pos += 1
            left = parse_node()
            right = parse_node()
            if left is None or right is None:
                fail("join needs two non-empty children")
            if pos >= len(tokens) or tokens[pos] != ")":
                fail("expected )")
            pos += 1
            return _join(left, right)
        pos += 1
        neg = tok.startswith("~")
        name = tok[1:] if neg else tok
        if not name.startswith("x") or not name[1:].isdigit() or int(name[1:]) < 1:
            fail(f"bad terminal {tok!r}")
        idx = int(name[1:])
        return _leaf(-idx if neg else idx)

    root = parse_node()
    if pos != len(tokens):
        fail("trailing input")
    return SyntaxTree(root)
