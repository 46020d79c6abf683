"""Catalog of Gold functions, truth-table text format, report serialization.

Truth-table format: first line `n=<int>`, second line the 2^n outputs as
space-separated decimal values in input order 0..2^n-1, trailing newline.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from typing import Optional

from .boolfn import BoolFn
from .gf2n import DEFAULT_POLYS, FieldSpec, gold_vecfn, monomial_vecfn, mul, power
from .vecfn import VecFn

CATALOG_MIN_N = 3
CATALOG_MAX_N = 11


@dataclass(frozen=True)
class FunctionSpecRecord:
    """How to build one analyzed function: Gold parameters, a univariate
    polynomial over the field, or an external truth table."""

    id: str
    kind: str  # "gold" | "univariate" | "truth-table"
    n: int
    k: Optional[int] = None
    poly: Optional[int] = None
    coeffs: Optional[tuple] = None  # ((exponent, coefficient), ...)
    path: Optional[str] = None

    def __post_init__(self):
        if self.kind == "gold":
            if self.k is None or math.gcd(self.n, self.k) != 1:
                raise ValueError(f"gold record requires gcd(n, k) = 1, got {self}")
        elif self.kind == "univariate":
            if not self.coeffs:
                raise ValueError("univariate record requires coefficient pairs")
            for e, c in self.coeffs:
                if not 0 <= c < (1 << self.n):
                    raise ValueError(f"coefficient {c} outside the field")
                if e < 0:
                    raise ValueError(f"negative exponent {e}")
        elif self.kind == "truth-table":
            if not self.path:
                raise ValueError("truth-table record requires a path")
        else:
            raise ValueError(f"unknown record kind {self.kind!r}")


def gold_catalog(n_min: int, n_max: int) -> list[FunctionSpecRecord]:
    """All Gold records (n, k) with n in [n_min, n_max], 1 <= k < n and
    gcd(n, k) = 1, over the default moduli."""
    if not CATALOG_MIN_N <= n_min <= n_max <= CATALOG_MAX_N:
        raise ValueError(
            f"catalog range must satisfy {CATALOG_MIN_N} <= n_min <= n_max <= {CATALOG_MAX_N}"
        )
    out = []
    for n in range(n_min, n_max + 1):
        for k in range(1, n):
            if math.gcd(n, k) == 1:
                out.append(
                    FunctionSpecRecord(
                        id=f"gold_n{n}_k{k}",
                        kind="gold",
                        n=n,
                        k=k,
                        poly=DEFAULT_POLYS[n],
                    )
                )
    return out


def record_field(record: FunctionSpecRecord) -> FieldSpec:
    poly = record.poly if record.poly is not None else DEFAULT_POLYS.get(record.n)
    if poly is None:
        raise ValueError(f"no modulus known for n={record.n}")
    return FieldSpec(record.n, poly)


def build_vecfn(record: FunctionSpecRecord) -> VecFn:
    """Materialize the output table a record describes."""
    if record.kind == "gold":
        return gold_vecfn(record_field(record), record.k)
    if record.kind == "univariate":
        spec = record_field(record)
        size = 1 << record.n
        table = [0] * size
        for x in range(size):
            acc = 0
            for e, c in record.coeffs:
                acc ^= mul(spec, c, power(spec, x, e))
            table[x] = acc
        return VecFn(record.n, table)
    if record.kind == "truth-table":
        with open(record.path, "r", encoding="ascii") as fh:
            return parse_tt(fh.read())
    raise ValueError(f"unknown record kind {record.kind!r}")


def parse_tt(text: str) -> VecFn:
    """Parse the truth-table text format into a VecFn."""
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines or not lines[0].strip().startswith("n="):
        raise ValueError("first line must be n=<int>")
    head = lines[0].strip()
    try:
        n = int(head[2:])
    except ValueError:
        raise ValueError(f"malformed dimension line {head!r}") from None
    if n < 1:
        raise ValueError(f"dimension must be positive, got {n}")
    body = " ".join(lines[1:]).split()
    if len(body) != 1 << n:
        raise ValueError(f"expected {1 << n} values, got {len(body)}")
    try:
        values = [int(tok) for tok in body]
    except ValueError as exc:
        raise ValueError(f"malformed integer in table: {exc}") from None
    return VecFn(n, values)  # range-checks the outputs


def write_tt(F: VecFn) -> str:
    return f"n={F.n}\n" + " ".join(str(v) for v in F.table) + "\n"


def write_boolfn_tt(f: BoolFn) -> str:
    """A Boolean truth table in the same format (outputs are bits)."""
    return f"n={f.n}\n" + " ".join(str(b) for b in f.table()) + "\n"


def write_report(results: dict) -> str:
    """Deterministic JSON serialization of a report object."""
    return json.dumps(results, indent=2, sort_keys=True) + "\n"
