"""Disjoint sets over 0..n-1 with union by rank and partial path compression."""

from __future__ import annotations


class UnionFind:
    def __init__(self, size: int) -> None:
        if size < 0:
            raise ValueError("number of elements must be non-negative")
        self.num_sets = size
        self._parents = list(range(size))
        self._ranks = [0] * size
        # Positive only at representatives.
        self._sizes = [1] * size

    def __len__(self) -> int:
        return len(self._parents)

    def find(self, index: int) -> int:
        if not 0 <= index < len(self._parents):
            raise IndexError(index)
        parent = self._parents[index]
        while parent != index:
            grandparent = self._parents[parent]
            self._parents[index] = grandparent
            index, parent = parent, grandparent
        return index

    def connected(self, a: int, b: int) -> bool:
        return self.find(a) == self.find(b)

    def size_of(self, index: int) -> int:
        return self._sizes[self.find(index)]

    def union(self, a: int, b: int) -> bool:
        """Merge the sets holding a and b; False when they were already one set."""
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        if self._ranks[ra] < self._ranks[rb]:
            ra, rb = rb, ra
        elif self._ranks[ra] == self._ranks[rb]:
            self._ranks[ra] += 1
        self._parents[rb] = ra
        self._sizes[ra] += self._sizes[rb]
        self._sizes[rb] = 0
        self.num_sets -= 1
        return True

    def disjoint_sets(self) -> list[list[int]]:
        """The sets as sorted index lists, ordered by their least element."""
        groups: dict[int, list[int]] = {}
        for i in range(len(self._parents)):
            groups.setdefault(self.find(i), []).append(i)
        return sorted(groups.values(), key=lambda g: g[0])
