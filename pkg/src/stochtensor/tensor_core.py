"""Exact rational n x n x n tensors.

Entries are :class:`fractions.Fraction`.  Indices in the public API are
1-based, ``(i, j, k)``, matching how cubes are usually written down.  The
flat storage order is ``k`` outer, ``i`` middle, ``j`` inner, which is also
the reading order of the flattened (slice-by-slice) layout and the variable
order used by :mod:`stochtensor.stochastic`.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import DimensionError, TensorSyntaxError

MODES = ("i", "j", "k")


def to_rational(value) -> Fraction:
    """Convert ints, Fractions, or strings such as ``"3/5"`` or ``"0.6"``."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not tensor entries")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    if isinstance(value, float):
        # only floats that came from short decimal literals make sense here
        return Fraction(repr(value))
    raise TypeError(f"cannot interpret {value!r} as a rational")


def format_rational(q: Fraction) -> str:
    return str(q)


@dataclass(frozen=True)
class Tensor3:
    """Dense cube of rationals with side ``n``.

    ``data`` is the flat tuple in storage order (k outer, i middle, j inner).
    Use :func:`new_tensor` or :func:`from_function` rather than building it
    by hand.
    """

    n: int
    data: tuple

    def __post_init__(self):
        if self.n < 1:
            raise DimensionError(f"side length must be positive, got {self.n}")
        if len(self.data) != self.n ** 3:
            raise DimensionError(
                f"expected {self.n ** 3} entries for n={self.n}, got {len(self.data)}")

    def entry(self, i: int, j: int, k: int) -> Fraction:
        n = self.n
        for idx in (i, j, k):
            if not 1 <= idx <= n:
                raise IndexError(f"index {idx} out of range 1..{n}")
        return self.data[((k - 1) * n + (i - 1)) * n + (j - 1)]

    def _at(self, i, j, k):
        # 0-based, unchecked
        n = self.n
        return self.data[(k * n + i) * n + j]

    def positions(self):
        """Yield ``((i, j, k), value)`` in storage order, 1-based."""
        n = self.n
        for k in range(n):
            for i in range(n):
                for j in range(n):
                    yield (i + 1, j + 1, k + 1), self.data[(k * n + i) * n + j]

    def __add__(self, other: "Tensor3") -> "Tensor3":
        _same_n(self, other)
        return Tensor3(self.n, tuple(a + b for a, b in zip(self.data, other.data)))

    def __sub__(self, other: "Tensor3") -> "Tensor3":
        _same_n(self, other)
        return Tensor3(self.n, tuple(a - b for a, b in zip(self.data, other.data)))

    def scale(self, alpha) -> "Tensor3":
        alpha = to_rational(alpha)
        return Tensor3(self.n, tuple(alpha * a for a in self.data))

    def __rmul__(self, alpha) -> "Tensor3":
        return self.scale(alpha)

    def support(self) -> frozenset:
        """1-based positions of the nonzero entries."""
        return frozenset(pos for pos, v in self.positions() if v != 0)

    def __str__(self):
        return serialize_tensor(self, "text")


def _same_n(a: Tensor3, b: Tensor3):
    if a.n != b.n:
        raise DimensionError(f"side lengths differ: {a.n} vs {b.n}")


def new_tensor(n: int, entries: Iterable) -> Tensor3:
    """Build a tensor from ``n**3`` entries listed in storage order.

    Storage order is slice ``k`` outer, row ``i`` middle, column ``j`` inner,
    i.e. the flattened display read block by block, row by row.
    """
    values = tuple(to_rational(v) for v in entries)
    if n < 1 or len(values) != n ** 3:
        raise DimensionError(f"expected {max(n, 0) ** 3} entries for n={n}, got {len(values)}")
    return Tensor3(n, values)


def from_function(n: int, f) -> Tensor3:
    """Tensor with entry ``f(i, j, k)`` (1-based) at every position."""
    return Tensor3(n, tuple(to_rational(f(i + 1, j + 1, k + 1))
                            for k in range(n) for i in range(n) for j in range(n)))


def zeros(n: int) -> Tensor3:
    return Tensor3(n, (Fraction(0),) * n ** 3)


def uniform(n: int) -> Tensor3:
    """The tensor with every entry ``1/n`` (the barycentre of the polytope)."""
    return Tensor3(n, (Fraction(1, n),) * n ** 3)


def _check_index(n, idx):
    if not 1 <= idx <= n:
        raise IndexError(f"index {idx} out of range 1..{n}")


def slice(T: Tensor3, mode: str, index: int) -> list:
    """The n x n section with ``mode`` fixed at ``index``.

    The remaining two indices run in increasing mode order: fixing ``i``
    gives rows ``j``, columns ``k``; fixing ``j`` gives rows ``i``, columns
    ``k``; fixing ``k`` gives rows ``i``, columns ``j``.
    """
    n = T.n
    _check_index(n, index)
    c = index - 1
    if mode == "i":
        return [[T._at(c, a, b) for b in range(n)] for a in range(n)]
    if mode == "j":
        return [[T._at(a, c, b) for b in range(n)] for a in range(n)]
    if mode == "k":
        return [[T._at(a, b, c) for b in range(n)] for a in range(n)]
    raise ValueError(f"mode must be one of {MODES}, got {mode!r}")


def line(T: Tensor3, mode: str, fixed: Sequence[int]) -> list:
    """The fiber along ``mode``; ``fixed`` holds the other two indices in mode order.

    ``line(T, "i", (j, k))``, ``line(T, "j", (i, k))``, ``line(T, "k", (i, j))``.
    """
    n = T.n
    a, b = fixed
    _check_index(n, a)
    _check_index(n, b)
    a -= 1
    b -= 1
    if mode == "i":
        return [T._at(t, a, b) for t in range(n)]
    if mode == "j":
        return [T._at(a, t, b) for t in range(n)]
    if mode == "k":
        return [T._at(a, b, t) for t in range(n)]
    raise ValueError(f"mode must be one of {MODES}, got {mode!r}")


@dataclass(frozen=True)
class LineVec:
    """All ``3n**2`` lines of a cube stacked into one vector of length ``3n**3``."""

    n: int
    values: tuple

    def __post_init__(self):
        if len(self.values) != 3 * self.n ** 3:
            raise DimensionError(f"line vector for n={self.n} must have {3 * self.n ** 3} entries")

    def __len__(self):
        return len(self.values)

    def blocks(self):
        """Consecutive length-n pieces, one per line."""
        n = self.n
        return [self.values[t:t + n] for t in range(0, len(self.values), n)]

    def dot(self, other: "LineVec") -> Fraction:
        if self.n != other.n:
            raise DimensionError("line vectors of different sizes")
        return sum((a * b for a, b in zip(self.values, other.values)), Fraction(0))


def line_labels(n: int):
    """``(mode, fixed_pair)`` for each line, in line-vector order.

    Mode-i lines first with (j, k) row-major, then mode-j lines with (i, k),
    then mode-k lines with (i, j).
    """
    pairs = [(a, b) for a in range(1, n + 1) for b in range(1, n + 1)]
    return [(mode, p) for mode in MODES for p in pairs]


def vec_lines(T: Tensor3) -> LineVec:
    values = []
    for mode, fixed in line_labels(T.n):
        values.extend(line(T, mode, fixed))
    return LineVec(T.n, tuple(values))


def unvec_lines(v: LineVec) -> Tensor3:
    """Inverse of :func:`vec_lines` (reads the mode-i group)."""
    n = v.n
    cube = {}
    for t, (mode, (j, k)) in enumerate(line_labels(n)[: n * n]):
        for i in range(n):
            cube[(i, j - 1, k - 1)] = v.values[t * n + i]
    return Tensor3(n, tuple(cube[(i, j, k)] for k in range(n) for i in range(n) for j in range(n)))


def inner(A: Tensor3, B: Tensor3) -> Fraction:
    _same_n(A, B)
    return sum((a * b for a, b in zip(A.data, B.data)), Fraction(0))


@dataclass(frozen=True)
class FlatSlices:
    """Slice-by-slice layout: ``blocks[k-1][i-1][j-1] == a_ijk``."""

    n: int
    blocks: tuple

    def __post_init__(self):
        n = self.n
        if len(self.blocks) != n or any(
                len(b) != n or any(len(row) != n for row in b) for b in self.blocks):
            raise DimensionError(f"flattened tensor must hold {n} blocks of {n}x{n}")

    def as_matrix(self) -> list:
        """The n x n^2 matrix obtained by placing the blocks side by side."""
        return [[v for b in self.blocks for v in b[i]] for i in range(self.n)]


def flatten(T: Tensor3) -> FlatSlices:
    n = T.n
    blocks = tuple(
        tuple(tuple(T._at(i, j, k) for j in range(n)) for i in range(n))
        for k in range(n))
    return FlatSlices(n, blocks)


def unflatten(F: FlatSlices) -> Tensor3:
    n = F.n
    return Tensor3(n, tuple(to_rational(F.blocks[k][i][j])
                            for k in range(n) for i in range(n) for j in range(n)))


# --- text formats ---------------------------------------------------------

def serialize_tensor(T: Tensor3, format: str = "json") -> str:
    """Render ``T`` as JSON (``{"n": .., "slices": ..}``) or the plain text layout.

    JSON output carries a trailing newline; so does text output.
    """
    blocks = flatten(T).blocks
    if format == "json":
        slices = [[[format_rational(v) for v in row] for row in b] for b in blocks]
        return json.dumps({"n": T.n, "slices": slices}) + "\n"
    if format == "text":
        out = [str(T.n)]
        for b in blocks:
            out.append("")
            for row in b:
                out.append(" ".join(format_rational(v) for v in row))
        return "\n".join(out) + "\n"
    raise ValueError(f"unknown format {format!r}")


def parse_tensor(text: str) -> Tensor3:
    """Parse either supported format; JSON is recognised by a leading ``{``."""
    if text.lstrip().startswith("{"):
        return _parse_json(text)
    return _parse_text(text)


def _rational_at(token, line, column):
    try:
        if isinstance(token, (int, str)) and not isinstance(token, bool):
            return to_rational(token)
    except (ValueError, ZeroDivisionError):
        pass
    raise TensorSyntaxError(f"not a rational number: {token!r}", line, column)


def _parse_json(text: str) -> Tensor3:
    try:
        # bare decimal literals keep their digits, so 0.6 becomes exactly 3/5
        obj = json.loads(text, parse_float=str)
    except json.JSONDecodeError as exc:
        raise TensorSyntaxError(exc.msg, exc.lineno, exc.colno) from None
    if not isinstance(obj, dict) or "slices" not in obj:
        raise TensorSyntaxError("expected an object with a \"slices\" member", 1, 1)
    slices = obj["slices"]
    n = obj.get("n", len(slices) if isinstance(slices, list) else None)
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise TensorSyntaxError(f"\"n\" must be a positive integer, got {n!r}", 1, 1)
    if not isinstance(slices, list) or len(slices) != n:
        raise DimensionError(f"expected {n} slices")
    values = []
    for k, block in enumerate(slices):
        if not isinstance(block, list) or len(block) != n:
            raise DimensionError(f"slice {k + 1}: expected {n} rows")
        for i, row in enumerate(block):
            if not isinstance(row, list) or len(row) != n:
                raise DimensionError(f"slice {k + 1}, row {i + 1}: expected {n} entries")
            for tok in row:
                # JSON positions are not tracked per entry; report 1-based path instead
                try:
                    values.append(_rational_at(tok, None, None))
                except TensorSyntaxError as exc:
                    raise TensorSyntaxError(
                        f"slice {k + 1}, row {i + 1}: {exc}") from None
    return Tensor3(n, tuple(values))


def _parse_text(text: str) -> Tensor3:
    lines = text.splitlines()
    rows = []  # (line_no, [(col, token), ...])
    for no, raw in enumerate(lines, start=1):
        stripped = raw.split("#", 1)[0]
        if not stripped.strip():
            rows.append((no, None))
            continue
        toks = []
        col = 0
        for tok in stripped.split():
            col = stripped.index(tok, col)
            toks.append((col + 1, tok))
            col += len(tok)
        rows.append((no, toks))
    content = [(no, t) for no, t in rows if t is not None]
    if not content:
        raise TensorSyntaxError("empty input", 1, 1)
    head_no, head = content[0]
    if len(head) != 1:
        raise TensorSyntaxError("first line must hold only n", head_no, head[1][0] if len(head) > 1 else 1)
    try:
        n = int(head[0][1])
    except ValueError:
        raise TensorSyntaxError(f"bad size {head[0][1]!r}", head_no, head[0][0]) from None
    if n < 1:
        raise TensorSyntaxError("n must be positive", head_no, head[0][0])
    body = content[1:]
    if len(body) != n * n:
        where = len(lines) + 1 if len(body) < n * n else body[n * n][0]
        raise TensorSyntaxError(
            f"expected {n * n} data rows ({n} blocks of {n}), found {len(body)}", where, 1)
    values = []
    for no, toks in body:
        if len(toks) != n:
            raise TensorSyntaxError(f"expected {n} entries, found {len(toks)}", no, toks[0][0])
        for col, tok in toks:
            try:
                values.append(to_rational(tok))
            except (ValueError, ZeroDivisionError):
                raise TensorSyntaxError(f"not a rational number: {tok!r}", no, col) from None
    # blank lines separate blocks; check that they sit on block boundaries
    seen = 0
    for no, toks in rows[rows.index((head_no, head)) + 1:]:
        if toks is None:
            if seen % n != 0:
                raise TensorSyntaxError(f"block of {n} rows interrupted by a blank line", no, 1)
        else:
            seen += 1
    return Tensor3(n, tuple(values))
