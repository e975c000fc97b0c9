"""Sectioned plain-text configuration for reproduction runs.

::

    # comment
    [row]
    label = (30,8)
    p = 2
    m = 3
    modulus = x^3 + x + 1
    s = 3
    n = 30
    theta_power = 1
    beta = w
    generators = w^2*x + 1; w*x^2 + w^4*x + w^6
    gray_matrix = 1 w w^3 1; w 1 1 w^3; w^3 1 1 w; 1 w^3 w 1
    expected_classical = [120,114,4]
    expected_quantum = [[120,108,4]]

Lines starting with whitespace continue the previous value.  List valued
keys (generators and the expected_* keys) are separated by ';'.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from pathlib import Path

from .errors import ConfigError, ParseError
from .parsing import parse_triple

LIST_KEYS = {"generators", "expected_h", "expected_h_prime", "expected_hh_quotient"}
INT_KEYS = {"p", "m", "s", "n", "theta_power"}
KNOWN_KEYS = LIST_KEYS | INT_KEYS | {
    "label",
    "kind",
    "modulus",
    "beta",
    "gray_matrix",
    "expected_classical",
    "expected_quantum",
    "existing",
    "note",
}


@dataclass
class RowConfig:
    label: str
    p: int
    m: int
    n: int
    kind: str = "gamma"
    s: int = 0
    modulus: str | None = None
    theta_power: int = 1
    beta: str = "0"
    generators: list = field(default_factory=list)
    gray_matrix: str | None = None
    expected_classical: tuple | None = None
    expected_quantum: tuple | None = None
    existing: str | None = None
    note: str | None = None
    expected_h: list = field(default_factory=list)
    expected_h_prime: list = field(default_factory=list)
    expected_hh_quotient: list = field(default_factory=list)
    line: int = 0

    @property
    def q(self) -> int:
        return self.p**self.m


@dataclass
class ReproConfig:
    rows: list
    source: str = "<string>"


def _split_list(v: str) -> list[str]:
    return [x.strip() for x in v.split(";") if x.strip()]


def _finish(raw: dict, line: int, source: str) -> RowConfig:
    def err(msg):
        return ConfigError(f"{source}:{line}: {msg}")

    for key in ("label", "p", "m", "n"):
        if key not in raw:
            raise err(f"missing key {key!r}")
    vals = {}
    for k, v in raw.items():
        if k in INT_KEYS:
            try:
                vals[k] = int(v)
            except ValueError:
                raise err(f"{k} must be an integer, got {v!r}") from None
        elif k in LIST_KEYS:
            vals[k] = _split_list(v)
        elif k in ("expected_classical", "expected_quantum"):
            try:
                vals[k] = parse_triple(v)
            except ParseError as exc:
                raise err(f"{k}: {exc}") from None
        else:
            vals[k] = v
    row = RowConfig(line=line, **vals)
    if row.kind not in ("gamma", "theta"):
        raise err(f"kind must be 'gamma' or 'theta', got {row.kind!r}")
    if row.kind == "theta":
        row.s = 0
        if len(row.generators) != 1:
            raise err("a theta row takes exactly one generator")
    elif len(row.generators) != row.s + 1:
        raise err(f"expected s+1 = {row.s + 1} generators, got {len(row.generators)}")
    if row.expected_classical and row.expected_quantum:
        n, k, _ = row.expected_classical
        nq, kq, _ = row.expected_quantum
        if nq != n or kq != 2 * k - n:
            raise err("expected quantum parameters are not [[n, 2k-n, d]]")
    return row


def parse_config(text: str, source: str = "<string>") -> ReproConfig:
    rows = []
    cur: dict | None = None
    cur_line = 0
    last_key = None
    for lineno, raw_line in enumerate(text.splitlines(), start=1):
        stripped = raw_line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        if stripped == "[row]":
            if cur is not None:
                rows.append(_finish(cur, cur_line, source))
            cur, cur_line, last_key = {}, lineno, None
            continue
        if stripped.startswith("["):
            raise ConfigError(f"{source}:{lineno}: unknown section {stripped!r}")
        if cur is None:
            raise ConfigError(f"{source}:{lineno}: key outside a [row] section")
        if raw_line[:1].isspace() and last_key is not None:
            cur[last_key] += " " + stripped
            continue
        m = re.fullmatch(r"([A-Za-z_][A-Za-z_0-9]*)\s*=\s*(.*)", stripped)
        if not m:
            raise ConfigError(f"{source}:{lineno}: expected 'key = value'")
        key, value = m.group(1), m.group(2).strip()
        if key not in KNOWN_KEYS:
            raise ConfigError(f"{source}:{lineno}: unknown key {key!r}")
        if key in cur:
            raise ConfigError(f"{source}:{lineno}: duplicate key {key!r}")
        cur[key] = value
        last_key = key
    if cur is not None:
        rows.append(_finish(cur, cur_line, source))
    return ReproConfig(rows, source)


def load_config(path) -> ReproConfig:
    p = Path(path)
    try:
        text = p.read_text()
    except OSError as exc:
        raise ConfigError(f"cannot read {path}: {exc}") from None
    return parse_config(text, str(p))


def data_path(name: str) -> Path:
    return Path(__file__).parent / "data" / name


def shipped_configs() -> list[Path]:
    return [data_path("examples.cfg"), data_path("code_table.cfg")]
