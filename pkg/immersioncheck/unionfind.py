"""Disjoint-set forest with union by rank and path compression."""

from __future__ import annotations

from typing import Dict, Generic, Hashable, TypeVar

T = TypeVar("T", bound=Hashable)


class UnionFind(Generic[T]):
    """Dictionary-based disjoint-set forest.

    Elements never seen before are treated as singleton classes, so callers
    may add vertices lazily while folding.
    """

    def __init__(self) -> None:
        self._parents: Dict[T, T] = {}
        self._ranks: Dict[T, int] = {}

    def find(self, item: T) -> T:
        if item not in self._parents:
            return item
        path = [item]
        root = self._parents[item]
        while root != path[-1]:
            path.append(root)
            root = self._parents.get(root, root)
        for ancestor in path:
            self._parents[ancestor] = root
        return root

    def union(self, first: T, second: T) -> T:
        """Merge the classes of ``first`` and ``second`` and return the new root."""

        root_a = self.find(first)
        root_b = self.find(second)
        if root_a == root_b:
            return root_a
        rank_a = self._ranks.setdefault(root_a, 1)
        rank_b = self._ranks.setdefault(root_b, 1)
        if rank_a < rank_b:
            root_a, root_b = root_b, root_a
        self._parents[root_b] = root_a
        self._parents.setdefault(root_a, root_a)
        if rank_a == rank_b:
            self._ranks[root_a] += 1
        return root_a

    def same(self, first: T, second: T) -> bool:
        return self.find(first) == self.find(second)


__all__ = ["UnionFind"]
