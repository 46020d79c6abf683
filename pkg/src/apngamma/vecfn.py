"""Vectorial functions F_2^n -> F_2^n as output tables, and linear maps."""

from __future__ import annotations

import numpy as np


class VecFn:
    """Output table of a function F_2^n -> F_2^n, indexed by input value."""

    __slots__ = ("n", "table", "_arr")

    def __init__(self, n: int, table):
        table = tuple(int(v) for v in table)
        if len(table) != 1 << n:
            raise ValueError(f"table length {len(table)}, expected {1 << n}")
        top = 1 << n
        for x, v in enumerate(table):
            if not 0 <= v < top:
                raise ValueError(f"output {v} at input {x} is outside F_2^{n}")
        self.n = n
        self.table = table
        self._arr = None

    @classmethod
    def identity(cls, n: int) -> "VecFn":
        return cls(n, range(1 << n))

    @property
    def arr(self) -> np.ndarray:
        """Cached int64 numpy view of the output table."""
        if self._arr is None:
            self._arr = np.array(self.table, dtype=np.int64)
        return self._arr

    def __getitem__(self, x: int) -> int:
        return self.table[x]

    def __len__(self) -> int:
        return 1 << self.n

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, VecFn)
            and self.n == other.n
            and self.table == other.table
        )

    def __hash__(self) -> int:
        return hash((self.n, self.table))

    def __repr__(self) -> str:
        return f"VecFn(n={self.n})"


class LinearFn:
    """Linear map given by the images of the basis vectors e^1..e^n."""

    __slots__ = ("n", "images")

    def __init__(self, n: int, images):
        images = tuple(int(v) for v in images)
        if len(images) != n:
            raise ValueError(f"expected {n} basis images, got {len(images)}")
        top = 1 << n
        for v in images:
            if not 0 <= v < top:
                raise ValueError(f"basis image {v} outside F_2^{n}")
        self.n = n
        self.images = images

    @classmethod
    def zero(cls, n: int) -> "LinearFn":
        return cls(n, (0,) * n)

    @classmethod
    def random(cls, n: int, rng) -> "LinearFn":
        return cls(n, (rng.randrange(1 << n) for _ in range(n)))

    def __call__(self, x: int) -> int:
        out = 0
        while x:
            low = x & -x
            out ^= self.images[low.bit_length() - 1]
            x ^= low
        return out

    def to_vecfn(self) -> VecFn:
        return VecFn(self.n, (self(x) for x in range(1 << self.n)))

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, LinearFn)
            and self.n == other.n
            and self.images == other.images
        )

    def __hash__(self) -> int:
        return hash((self.n, self.images))

    def __repr__(self) -> str:
        return f"LinearFn(n={self.n}, images={self.images})"
