"""State files and number formatting for CLI output.

State file schema::

    {"dim": 8, "matrix": [[[re, im], ...], ...]}

Floats are written with 17 significant digits, which round-trips every
double exactly.
"""

from __future__ import annotations

import json
import math
from pathlib import Path

import numpy as np

from .densmat import DensityMatrix, build_density_matrix
from .errors import ParseError


def fmt(x: float) -> str:
    x = float(x)
    if not math.isfinite(x):
        raise ValueError(f"cannot serialize non-finite value {x!r}")
    return format(x, ".17g")


def dumps(obj) -> str:
    """JSON text with floats at 17 significant digits."""
    if isinstance(obj, bool) or obj is None:
        return json.dumps(obj)
    if isinstance(obj, (int, np.integer)):
        return str(int(obj))
    if isinstance(obj, (float, np.floating)):
        return fmt(obj)
    if isinstance(obj, str):
        return json.dumps(obj)
    if isinstance(obj, dict):
        return "{" + ", ".join(f"{json.dumps(str(k))}: {dumps(v)}" for k, v in obj.items()) + "}"
    if isinstance(obj, (list, tuple)):
        return "[" + ", ".join(dumps(v) for v in obj) + "]"
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def state_to_json(rho: DensityMatrix) -> str:
    rows = []
    for row in rho.matrix:
        rows.append("[" + ", ".join(f"[{fmt(z.real)}, {fmt(z.imag)}]" for z in row) + "]")
    return '{"dim": %d, "matrix": [\n  %s\n]}\n' % (rho.dim, ",\n  ".join(rows))


def write_state_file(path, rho: DensityMatrix) -> None:
    Path(path).write_text(state_to_json(rho))


def _reject_constant(name):
    raise ParseError(f"non-finite value {name} in state file")


def parse_state(text: str, expected_dim: int | None = 8) -> np.ndarray:
    """Parse state-file JSON into a complex array (not yet validated)."""
    try:
        doc = json.loads(text, parse_constant=_reject_constant)
    except json.JSONDecodeError as exc:
        raise ParseError(f"state file is not valid JSON: {exc}") from None
    if not isinstance(doc, dict) or "dim" not in doc or "matrix" not in doc:
        raise ParseError('state file must be an object with "dim" and "matrix"')
    dim = doc["dim"]
    if not isinstance(dim, int) or isinstance(dim, bool) or dim < 1:
        raise ParseError(f'"dim" must be a positive integer, got {dim!r}')
    if expected_dim is not None and dim != expected_dim:
        raise ParseError(f"expected dim {expected_dim} (three qubits), got dim {dim}")
    try:
        arr = np.array(doc["matrix"], dtype=float)
    except (TypeError, ValueError):
        raise ParseError('"matrix" must be a dim x dim array of [re, im] pairs') from None
    if arr.shape != (dim, dim, 2):
        raise ParseError(f'"matrix" has shape {arr.shape}, expected ({dim}, {dim}, 2)')
    if not np.all(np.isfinite(arr)):
        raise ParseError("state file contains non-finite values")
    return arr[..., 0] + 1j * arr[..., 1]


def read_state_file(path, expected_dim: int | None = 8, tolerance: float | None = None) -> DensityMatrix:
    """Read and validate a state file.

    Raises:
        ParseError: malformed JSON, wrong shape or dimension.
        ValidationError: the matrix is not a density matrix.
    """
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise ParseError(f"cannot read state file {path}: {exc.strerror}") from None
    m = parse_state(text, expected_dim)
    if tolerance is None:
        return build_density_matrix(m)
    return build_density_matrix(m, tolerance)
