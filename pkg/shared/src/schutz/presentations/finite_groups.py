"""
有限群模組
以乘法表或 (Z/pZ)^d 的 p 進位編碼表示有限群，元素為 0..|H|-1，單位元為 0
"""

from abc import ABC, abstractmethod
from collections import deque
from itertools import permutations
from typing import Iterable, List, Sequence, Tuple

import sympy

from schutz.errors import QuotientSearchError
from schutz.words.word_types import GroupWord


class FiniteGroup(ABC):
    """有限群的共同介面"""

    identity = 0

    def __init__(self, name: str):
        self.name = name

    @property
    @abstractmethod
    def order(self) -> int:
        """群的階"""

    @abstractmethod
    def multiply(self, x: int, y: int) -> int:
        """乘積 xy"""

    @abstractmethod
    def inverse(self, x: int) -> int:
        """反元素 x⁻¹"""

    def evaluate(self, word: GroupWord, assignment: Sequence[int]) -> int:
        """在群中求字詞的值，字母 a 代入 assignment[a]"""
        result = self.identity
        for letter, sign in word.syllables:
            element = assignment[letter] if sign == 1 else self.inverse(assignment[letter])
            result = self.multiply(result, element)
        return result

    def generates(self, elements: Iterable[int]) -> bool:
        """元素是否生成整個群（有限群中乘法封閉即為子群）"""
        generators = set(elements)
        reached = {self.identity}
        queue = deque([self.identity])
        while queue:
            current = queue.popleft()
            for generator in generators:
                product = self.multiply(current, generator)
                if product not in reached:
                    reached.add(product)
                    queue.append(product)
        return len(reached) == self.order

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self.name}, order={self.order})"


class CayleyTableGroup(FiniteGroup):
    """
    由乘法表給定的有限群

    Raises:
        QuotientSearchError: 乘法表不是以 0 為單位元的群
    """

    def __init__(self, table: Sequence[Sequence[int]], name: str = "H"):
        super().__init__(name)
        self.table: Tuple[Tuple[int, ...], ...] = tuple(tuple(row) for row in table)
        self._validate()
        self._inverses = tuple(row.index(self.identity) for row in self.table)

    def _validate(self) -> None:
        size = len(self.table)
        if size == 0:
            raise QuotientSearchError("乘法表不可為空")
        elements = set(range(size))
        for row in self.table:
            if len(row) != size or set(row) != elements:
                raise QuotientSearchError("乘法表的每一列必須是元素的排列")
        for column in range(size):
            if {self.table[row][column] for row in range(size)} != elements:
                raise QuotientSearchError("乘法表的每一行必須是元素的排列")
        if self.table[0] != tuple(range(size)) or any(self.table[x][0] != x for x in range(size)):
            raise QuotientSearchError("元素 0 必須為單位元")
        for x in range(size):
            for y in range(size):
                xy = self.table[x][y]
                for z in range(size):
                    if self.table[xy][z] != self.table[x][self.table[y][z]]:
                        raise QuotientSearchError(f"乘法表不滿足結合律: ({x}, {y}, {z})")

    @property
    def order(self) -> int:
        return len(self.table)

    def multiply(self, x: int, y: int) -> int:
        return self.table[x][y]

    def inverse(self, x: int) -> int:
        return self._inverses[x]


class ElementaryAbelianGroup(FiniteGroup):
    """(Z/pZ)^d，元素 x 的第 i 個 p 進位數字為第 i 個座標"""

    def __init__(self, p: int, dimension: int):
        if not sympy.isprime(p):
            raise QuotientSearchError(f"{p} 不是質數")
        super().__init__(f"(Z/{p}Z)^{dimension}")
        self.p = p
        self.dimension = dimension

    @property
    def order(self) -> int:
        return self.p**self.dimension

    def to_vector(self, x: int) -> List[int]:
        digits = []
        for _ in range(self.dimension):
            x, digit = divmod(x, self.p)
            digits.append(digit)
        return digits

    def from_vector(self, vector: Sequence[int]) -> int:
        return sum((entry % self.p) * self.p**index for index, entry in enumerate(vector))

    def basis_element(self, index: int) -> int:
        return self.p**index

    def multiply(self, x: int, y: int) -> int:
        return self.from_vector(a + b for a, b in zip(self.to_vector(x), self.to_vector(y)))

    def inverse(self, x: int) -> int:
        return self.from_vector(-a for a in self.to_vector(x))


def cyclic_group(n: int) -> CayleyTableGroup:
    """Z/nZ"""
    return CayleyTableGroup([[(x + y) % n for y in range(n)] for x in range(n)], name=f"Z/{n}Z")


def trivial_group() -> CayleyTableGroup:
    return CayleyTableGroup([[0]], name="1")


def symmetric_group(n: int) -> CayleyTableGroup:
    """S_n，元素依排列的字典序編號，恆等排列為 0"""
    elements = list(permutations(range(n)))
    index = {perm: position for position, perm in enumerate(elements)}
    # (στ)(i) = σ(τ(i))
    table = [
        [index[tuple(sigma[tau[i]] for i in range(n))] for tau in elements] for sigma in elements
    ]
    return CayleyTableGroup(table, name=f"S{n}")


def direct_product(left: FiniteGroup, right: FiniteGroup) -> CayleyTableGroup:
    """直積，元素 (a, b) 編碼為 a·|right| + b"""
    size = right.order

    def encode(a: int, b: int) -> int:
        return a * size + b

    table = [
        [
            encode(left.multiply(x // size, y // size), right.multiply(x % size, y % size))
            for y in range(left.order * size)
        ]
        for x in range(left.order * size)
    ]
    return CayleyTableGroup(table, name=f"{left.name}×{right.name}")
