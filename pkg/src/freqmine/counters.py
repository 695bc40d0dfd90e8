"""Frequency-counter dictionaries.

Every backend maps a string key to an occurrence count and supports the
same small interface: ``insert``, ``lookup``, ``inorder``, ``is_empty`` and
``len()``. The two tree backends also report ``height()``.

* ``bst``          -- plain unbalanced binary search tree with counts in the nodes
* ``avl``          -- the same tree kept height balanced by rotations
* ``hash``         -- a ``dict``; ordering is produced by sorting on demand
* ``sorted_array`` -- parallel key/count lists, binary search + shifting insert

All tree walks are iterative: an unbalanced tree built from sorted input is
as deep as it is large, well past Python's recursion limit.
"""
from __future__ import annotations

from typing import Iterable, Iterator, Optional

BACKENDS = ("bst", "avl", "hash", "sorted_array")
TREE_BACKENDS = ("bst", "avl")


class UnsupportedBackend(ValueError):
    pass


def _cmp(a: str, b: str) -> int:
    # Python str ordering is code-point order, which agrees with UTF-8 byte order.
    return (a > b) - (a < b)


class FrequencyCounter:
    backend: str = ""

    def __init__(self) -> None:
        self.size = 0
        self.total = 0
        # key comparisons performed by insert(); lookups are not counted
        self.comparisons = 0

    def insert(self, key: str) -> None:
        raise NotImplementedError

    def lookup(self, key: str) -> int:
        raise NotImplementedError

    def inorder(self) -> list[tuple[str, int]]:
        raise NotImplementedError

    def height(self) -> int:
        raise UnsupportedBackend(f"height() is only defined for tree backends, not {self.backend!r}")

    def update(self, keys: Iterable[str]) -> "FrequencyCounter":
        for key in keys:
            self.insert(key)
        return self

    def is_empty(self) -> bool:
        return self.size == 0

    def __len__(self) -> int:
        return self.size

    def __contains__(self, key: str) -> bool:
        return self.lookup(key) > 0

    def __repr__(self) -> str:
        return f"<{type(self).__name__} size={self.size} total={self.total}>"


class Node:
    __slots__ = ("key", "count", "left", "right", "height")

    def __init__(self, key: str) -> None:
        self.key = key
        self.count = 1
        self.left: Optional[Node] = None
        self.right: Optional[Node] = None
        self.height = 1


def iter_nodes_inorder(root: Optional[Node]) -> Iterator[Node]:
    """Explicit-stack inorder walk (left, node, right)."""
    stack: list[Node] = []
    node = root
    while True:
        while node is not None:
            stack.append(node)
            node = node.left
        if not stack:
            return
        node = stack.pop()
        yield node
        node = node.right


def tree_height(root: Optional[Node]) -> int:
    """Number of nodes on the longest root-to-leaf path, by level-order sweep."""
    height = 0
    level = [root] if root is not None else []
    while level:
        height += 1
        level = [c for n in level for c in (n.left, n.right) if c is not None]
    return height


class _TreeCounter(FrequencyCounter):
    def __init__(self) -> None:
        super().__init__()
        self.root: Optional[Node] = None

    def lookup(self, key: str) -> int:
        node = self.root
        while node is not None:
            c = _cmp(key, node.key)
            if c == 0:
                return node.count
            node = node.right if c > 0 else node.left
        return 0

    def inorder(self) -> list[tuple[str, int]]:
        return [(n.key, n.count) for n in iter_nodes_inorder(self.root)]


class BSTCounter(_TreeCounter):
    backend = "bst"

    def insert(self, key: str) -> None:
        self.total += 1
        if self.root is None:
            self.root = Node(key)
            self.size = 1
            return
        node = self.root
        while True:
            c = _cmp(key, node.key)
            self.comparisons += 1
            if c == 0:
                node.count += 1
                return
            child = node.right if c > 0 else node.left
            if child is None:
                break
            node = child
        leaf = Node(key)
        if c > 0:
            node.right = leaf
        else:
            node.left = leaf
        self.size += 1

    def height(self) -> int:
        return tree_height(self.root)


def _h(node: Optional[Node]) -> int:
    return node.height if node is not None else 0


def _fix_height(node: Node) -> None:
    node.height = 1 + max(_h(node.left), _h(node.right))


def rotate_left(node: Node) -> Node:
    pivot = node.right
    node.right = pivot.left
    pivot.left = node
    _fix_height(node)
    _fix_height(pivot)
    return pivot


def rotate_right(node: Node) -> Node:
    pivot = node.left
    node.left = pivot.right
    pivot.right = node
    _fix_height(node)
    _fix_height(pivot)
    return pivot


def rebalance(node: Node) -> Node:
    """Refresh ``node``'s height and rotate if it is out of balance; returns
    the root of the (possibly new) subtree."""
    _fix_height(node)
    balance = _h(node.left) - _h(node.right)
    if balance > 1:
        if _h(node.left.left) < _h(node.left.right):
            node.left = rotate_left(node.left)
        return rotate_right(node)
    if balance < -1:
        if _h(node.right.right) < _h(node.right.left):
            node.right = rotate_right(node.right)
        return rotate_left(node)
    return node


def rebalance_after_insert(path: list[Node]) -> Node:
    """Rebalance every node on a root-to-leaf insertion path, bottom up.

    ``path[0]`` is the current root; each later entry is a child of the one
    before it. Returns the new root of the whole tree.
    """
    new = path[0]
    for i in range(len(path) - 1, -1, -1):
        node = path[i]
        new = rebalance(node)
        if i > 0 and new is not node:
            parent = path[i - 1]
            if parent.left is node:
                parent.left = new
            else:
                parent.right = new
    return new


class AVLCounter(_TreeCounter):
    backend = "avl"

    def insert(self, key: str) -> None:
        self.total += 1
        if self.root is None:
            self.root = Node(key)
            self.size = 1
            return
        path = []
        node = self.root
        while node is not None:
            path.append(node)
            c = _cmp(key, node.key)
            self.comparisons += 1
            if c == 0:
                node.count += 1
                return
            node = node.right if c > 0 else node.left
        parent = path[-1]
        leaf = Node(key)
        if c > 0:
            parent.right = leaf
        else:
            parent.left = leaf
        self.size += 1
        self.root = rebalance_after_insert(path)

    def height(self) -> int:
        return _h(self.root)


class HashCounter(FrequencyCounter):
    backend = "hash"

    def __init__(self) -> None:
        super().__init__()
        self.table: dict[str, int] = {}

    def insert(self, key: str) -> None:
        self.total += 1
        n = self.table.get(key, 0)
        if n == 0:
            self.size += 1
        self.table[key] = n + 1

    def lookup(self, key: str) -> int:
        return self.table.get(key, 0)

    def inorder(self) -> list[tuple[str, int]]:
        return sorted(self.table.items())


class SortedArrayCounter(FrequencyCounter):
    backend = "sorted_array"

    def __init__(self) -> None:
        super().__init__()
        self.keys: list[str] = []
        self.counts: list[int] = []

    def _search(self, key: str, counted: bool) -> tuple[int, bool]:
        lo, hi = 0, len(self.keys)
        while lo < hi:
            mid = (lo + hi) // 2
            c = _cmp(key, self.keys[mid])
            if counted:
                self.comparisons += 1
            if c == 0:
                return mid, True
            if c > 0:
                lo = mid + 1
            else:
                hi = mid
        return lo, False

    def insert(self, key: str) -> None:
        self.total += 1
        i, found = self._search(key, counted=True)
        if found:
            self.counts[i] += 1
            return
        self.keys.insert(i, key)
        self.counts.insert(i, 1)
        self.size += 1

    def lookup(self, key: str) -> int:
        i, found = self._search(key, counted=False)
        return self.counts[i] if found else 0

    def inorder(self) -> list[tuple[str, int]]:
        return list(zip(self.keys, self.counts))


_REGISTRY = {
    "bst": BSTCounter,
    "avl": AVLCounter,
    "hash": HashCounter,
    "sorted_array": SortedArrayCounter,
}


def new_counter(backend: str = "avl") -> FrequencyCounter:
    try:
        return _REGISTRY[backend]()
    except KeyError:
        raise ValueError(f"unknown backend {backend!r}; expected one of {', '.join(BACKENDS)}") from None


def format_counts(pairs: Iterable[tuple[str, int]]) -> str:
    """Count report: ``token<TAB>count`` per line, newline terminated."""
    return "".join(f"{key}\t{count}\n" for key, count in pairs)
