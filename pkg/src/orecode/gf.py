"""Arithmetic in F_{p^m}, its Frobenius powers, inner derivations and the trace.

Elements are encoded internally as integers ``sum(c_i * p**i)`` where
``c_0 + c_1 w + ... + c_{m-1} w^{m-1}`` is the polynomial-basis representation
and ``w`` is the residue class of ``x`` modulo the defining polynomial.  The
public :class:`FieldElement` wraps such a code together with its field; the
integer-level methods on :class:`FieldSpec` are what the rest of the package
uses in inner loops.
"""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass

import numpy as np

from .errors import DivisionByZero, InvalidParameters, SpecMismatch

MAX_ORDER = 1 << 20

# Conway polynomials, coefficients listed from the constant term upwards.
CONWAY = {
    (2, 1): (1, 1),
    (2, 2): (1, 1, 1),
    (2, 3): (1, 1, 0, 1),
    (2, 4): (1, 1, 0, 0, 1),
    (2, 5): (1, 0, 1, 0, 0, 1),
    (2, 6): (1, 1, 0, 1, 1, 0, 1),
    (2, 7): (1, 1, 0, 0, 0, 0, 0, 1),
    (2, 8): (1, 0, 1, 1, 1, 0, 0, 0, 1),
    (3, 1): (1, 1),
    (3, 2): (2, 2, 1),
    (3, 3): (1, 2, 0, 1),
    (3, 4): (2, 0, 0, 2, 1),
    (5, 1): (3, 1),
    (5, 2): (2, 4, 1),
    (5, 3): (3, 3, 0, 1),
    (7, 1): (4, 1),
    (7, 2): (3, 6, 1),
    (7, 3): (4, 0, 6, 1),
    (11, 1): (9, 1),
    (11, 2): (2, 7, 1),
    (13, 1): (11, 1),
    (13, 2): (2, 12, 1),
}


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def prime_power(q: int) -> tuple[int, int]:
    """Split ``q = p**m``; raise InvalidParameters if q is not a prime power."""
    if q < 2:
        raise InvalidParameters(f"{q} is not a prime power")
    for p in range(2, q + 1):
        if q % p == 0:
            m = 0
            r = q
            while r % p == 0:
                r //= p
                m += 1
            if r != 1 or not is_prime(p):
                raise InvalidParameters(f"{q} is not a prime power")
            return p, m
    raise InvalidParameters(f"{q} is not a prime power")


def _poly_rem_p(f: list[int], g: list[int], p: int) -> list[int]:
    """Remainder of f by monic g over F_p (coefficient lists, low degree first)."""
    f = list(f)
    dg = len(g) - 1
    while len(f) - 1 >= dg and any(f):
        while f and f[-1] == 0:
            f.pop()
        if len(f) - 1 < dg:
            break
        c = f[-1]
        shift = len(f) - 1 - dg
        for i, gi in enumerate(g):
            f[shift + i] = (f[shift + i] - c * gi) % p
        f.pop()
    while f and f[-1] == 0:
        f.pop()
    return f


def is_irreducible_mod_p(modulus, p: int) -> bool:
    """Trial division by every monic polynomial of degree 1..deg/2."""
    modulus = [c % p for c in modulus]
    m = len(modulus) - 1
    for d in range(1, m // 2 + 1):
        for tail in itertools.product(range(p), repeat=d):
            if not _poly_rem_p(modulus, list(tail) + [1], p):
                return False
    return True


def _exp_table(p: int, m: int, modulus) -> list[int]:
    """Powers w^0, w^1, ... as integer codes until the cycle closes."""
    q = p**m
    digits = [1] + [0] * (m - 1)
    out = []
    weights = [p**i for i in range(m)]
    for _ in range(q - 1):
        code = sum(d * wt for d, wt in zip(digits, weights))
        if out and code == 1:
            break
        out.append(code)
        top = digits[-1]
        digits = [0] + digits[:-1]
        if top:
            digits = [(d - top * c) % p for d, c in zip(digits, modulus)]
    return out


def first_primitive_polynomial(p: int, m: int) -> tuple[int, ...]:
    for tail in itertools.product(range(p), repeat=m):
        cand = tuple(reversed(tail)) + (1,)
        if cand[0] == 0:
            continue
        if is_irreducible_mod_p(cand, p) and len(_exp_table(p, m, cand)) == p**m - 1:
            return cand
    raise InvalidParameters(f"no primitive polynomial of degree {m} over F_{p}")


def default_modulus(p: int, m: int) -> tuple[int, ...]:
    if (p, m) in CONWAY:
        return CONWAY[(p, m)]
    return first_primitive_polynomial(p, m)


class FieldSpec:
    """The finite field F_{p^m} = F_p[x]/(modulus) with named generator.

    The modulus must be irreducible and its root primitive, so that every
    nonzero element is a power ``w^k`` of the generator.
    """

    def __init__(self, p: int, m: int = 1, modulus=None, generator_symbol: str = "w"):
        if not is_prime(p):
            raise InvalidParameters(f"characteristic {p} is not prime")
        if m < 1:
            raise InvalidParameters("extension degree must be positive")
        q = p**m
        if q > MAX_ORDER:
            raise InvalidParameters(f"field order {q} exceeds supported maximum {MAX_ORDER}")
        if modulus is None:
            modulus = default_modulus(p, m)
        elif isinstance(modulus, str):
            from .parsing import parse_prime_poly

            modulus = parse_prime_poly(modulus, p)
        modulus = tuple(int(c) % p for c in modulus)
        if len(modulus) != m + 1 or modulus[-1] != 1:
            raise InvalidParameters(f"modulus must be monic of degree {m}")
        if not is_irreducible_mod_p(modulus, p):
            raise InvalidParameters(f"modulus {modulus} is reducible over F_{p}")
        exp = _exp_table(p, m, modulus)
        if len(exp) != q - 1:
            raise InvalidParameters(
                f"{generator_symbol} is not primitive for modulus {modulus} "
                f"(order {len(exp)} instead of {q - 1})"
            )
        self.p = p
        self.m = m
        self.q = q
        self.modulus = modulus
        self.generator_symbol = generator_symbol
        self._exp = exp
        log = [-1] * q
        for k, v in enumerate(exp):
            log[v] = k
        self._log = log
        self._weights = [p**i for i in range(m)]
        self._neg = [self._neg_digits(a) for a in range(q)]
        if p != 2 and q <= 256:
            self._add_table = [[self._add_digits(a, b) for b in range(q)] for a in range(q)]
        else:
            self._add_table = None
        self._np_exp = np.array(exp + exp, dtype=np.int64)
        self._np_log = np.array(log, dtype=np.int64)
        self._np_neg = np.array(self._neg, dtype=np.int64)
        self._np_inv = np.array([0] + [exp[(-log[a]) % (q - 1)] for a in range(1, q)], dtype=np.int64)
        self._np_add = None
        if p != 2 and q <= 1024:
            self._np_add = np.array(
                [[self._add_digits(x, y) for y in range(q)] for x in range(q)], dtype=np.int64
            )
        self._frob_cache: dict[int, list[int]] = {}

    # ----- identity ---------------------------------------------------------

    @property
    def key(self):
        return (self.p, self.m, self.modulus)

    def __eq__(self, other):
        return isinstance(other, FieldSpec) and self.key == other.key

    def __hash__(self):
        return hash(self.key)

    def __repr__(self):
        return f"FieldSpec(q={self.q}, modulus={self.modulus_str()})"

    def modulus_str(self) -> str:
        terms = []
        for i in range(self.m, -1, -1):
            c = self.modulus[i]
            if c == 0:
                continue
            mono = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
            if not mono:
                terms.append(str(c))
            elif c == 1:
                terms.append(mono)
            else:
                terms.append(f"{c}*{mono}")
        return " + ".join(terms)

    # ----- integer-code arithmetic -----------------------------------------

    def _digits(self, a: int) -> list[int]:
        p = self.p
        out = []
        for _ in range(self.m):
            out.append(a % p)
            a //= p
        return out

    def _add_digits(self, a: int, b: int) -> int:
        p = self.p
        out = 0
        wt = 1
        for _ in range(self.m):
            out += ((a % p + b % p) % p) * wt
            a //= p
            b //= p
            wt *= p
        return out

    def _neg_digits(self, a: int) -> int:
        p = self.p
        out = 0
        wt = 1
        for _ in range(self.m):
            out += ((-(a % p)) % p) * wt
            a //= p
            wt *= p
        return out

    def add(self, a: int, b: int) -> int:
        if self.p == 2:
            return a ^ b
        if self._add_table is not None:
            return self._add_table[a][b]
        return self._add_digits(a, b)

    def neg(self, a: int) -> int:
        return self._neg[a]

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self._neg[b])

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return self._exp[(self._log[a] + self._log[b]) % (self.q - 1)]

    def inv(self, a: int) -> int:
        if a == 0:
            raise DivisionByZero("inverse of zero")
        return self._exp[(-self._log[a]) % (self.q - 1)]

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, e: int) -> int:
        if e == 0:
            return 1
        if a == 0:
            if e < 0:
                raise DivisionByZero("negative power of zero")
            return 0
        return self._exp[(self._log[a] * e) % (self.q - 1)]

    def exp(self, k: int) -> int:
        """Code of w^k (k taken modulo q-1)."""
        return self._exp[k % (self.q - 1)]

    def log(self, a: int) -> int:
        if a == 0:
            raise DivisionByZero("log of zero")
        return self._log[a]

    def from_int(self, n: int) -> int:
        """Code of n * 1."""
        return n % self.p

    def in_prime_field(self, a: int) -> bool:
        return a < self.p

    def frob_table(self, t: int) -> list[int]:
        t %= self.m
        tab = self._frob_cache.get(t)
        if tab is None:
            e = self.p**t
            tab = [self.pow(a, e) for a in range(self.q)]
            self._frob_cache[t] = tab
        return tab

    def frob(self, a: int, t: int) -> int:
        return self.frob_table(t)[a]

    def trace(self, a: int) -> int:
        acc = 0
        for i in range(self.m):
            acc = self.add(acc, self.frob(a, i))
        return acc

    def elements(self) -> range:
        return range(self.q)

    # ----- vectorised arithmetic on numpy arrays of codes -------------------

    def add_arr(self, a, b):
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        if self.p == 2:
            return a ^ b
        if self._np_add is not None:
            return self._np_add[a, b]
        out = np.zeros(np.broadcast(a, b).shape, dtype=np.int64)
        p = self.p
        for wt in self._weights:
            out += (((a // wt) % p + (b // wt) % p) % p) * wt
        return out

    def neg_arr(self, a):
        return self._np_neg[np.asarray(a, dtype=np.int64)]

    def sub_arr(self, a, b):
        return self.add_arr(a, self.neg_arr(b))

    def mul_arr(self, a, b):
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        mask = (a == 0) | (b == 0)
        idx = self._np_log[a] + self._np_log[b]
        idx = np.where(mask, 0, idx)
        return np.where(mask, 0, self._np_exp[idx])

    def inv_arr(self, a):
        a = np.asarray(a, dtype=np.int64)
        if np.any(a == 0):
            raise DivisionByZero("inverse of zero in array")
        return self._np_inv[a]

    def trace_arr(self, a):
        a = np.asarray(a, dtype=np.int64)
        acc = np.zeros_like(a)
        for i in range(self.m):
            acc = self.add_arr(acc, np.asarray(self.frob_table(i), dtype=np.int64)[a])
        return acc

    # ----- element construction / display ----------------------------------

    def __call__(self, value) -> "FieldElement":
        """Build an element from an int (meaning n*1), a literal string or a FieldElement."""
        if isinstance(value, FieldElement):
            if value.spec != self:
                raise SpecMismatch("element belongs to a different field")
            return value
        if isinstance(value, str):
            return self.parse(value)
        return FieldElement(self, self.from_int(int(value)))

    def element(self, code: int) -> "FieldElement":
        if not 0 <= code < self.q:
            raise InvalidParameters(f"element code {code} out of range for F_{self.q}")
        return FieldElement(self, int(code))

    def from_coeffs(self, coeffs) -> "FieldElement":
        coeffs = list(coeffs) + [0] * (self.m - len(coeffs))
        if len(coeffs) != self.m:
            raise InvalidParameters("too many coordinates")
        return FieldElement(self, sum((int(c) % self.p) * wt for c, wt in zip(coeffs, self._weights)))

    def from_power_of_w(self, k: int) -> "FieldElement":
        return FieldElement(self, self.exp(k))

    @property
    def zero(self) -> "FieldElement":
        return FieldElement(self, 0)

    @property
    def one(self) -> "FieldElement":
        return FieldElement(self, 1)

    @property
    def gen(self) -> "FieldElement":
        return FieldElement(self, self._exp[1 % (self.q - 1)] if self.q > 2 else 1)

    def parse(self, text: str) -> "FieldElement":
        from .parsing import parse_field_literal

        return FieldElement(self, parse_field_literal(text, self))

    def format(self, a: int) -> str:
        """Canonical literal: ``0``, decimals for F_p, otherwise ``w``/``w^K``."""
        if self.in_prime_field(a):
            return str(a)
        k = self._log[a]
        sym = self.generator_symbol
        return sym if k == 1 else f"{sym}^{k}"


@dataclass(frozen=True, eq=False)
class FieldElement:
    spec: FieldSpec
    value: int

    def _other(self, other) -> int:
        if isinstance(other, FieldElement):
            if other.spec != self.spec:
                raise SpecMismatch(f"{self.spec!r} vs {other.spec!r}")
            return other.value
        if isinstance(other, int):
            return self.spec.from_int(other)
        return NotImplemented

    def __add__(self, other):
        b = self._other(other)
        if b is NotImplemented:
            return b
        return FieldElement(self.spec, self.spec.add(self.value, b))

    __radd__ = __add__

    def __sub__(self, other):
        b = self._other(other)
        if b is NotImplemented:
            return b
        return FieldElement(self.spec, self.spec.sub(self.value, b))

    def __rsub__(self, other):
        b = self._other(other)
        if b is NotImplemented:
            return b
        return FieldElement(self.spec, self.spec.sub(b, self.value))

    def __neg__(self):
        return FieldElement(self.spec, self.spec.neg(self.value))

    def __mul__(self, other):
        b = self._other(other)
        if b is NotImplemented:
            return b
        return FieldElement(self.spec, self.spec.mul(self.value, b))

    __rmul__ = __mul__

    def __truediv__(self, other):
        b = self._other(other)
        if b is NotImplemented:
            return b
        return FieldElement(self.spec, self.spec.div(self.value, b))

    def __rtruediv__(self, other):
        b = self._other(other)
        if b is NotImplemented:
            return b
        return FieldElement(self.spec, self.spec.div(b, self.value))

    def __pow__(self, e: int):
        return FieldElement(self.spec, self.spec.pow(self.value, e))

    def inverse(self) -> "FieldElement":
        return FieldElement(self.spec, self.spec.inv(self.value))

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.spec == other.spec and self.value == other.value
        if isinstance(other, int):
            return self.value == self.spec.from_int(other)
        return NotImplemented

    def __hash__(self):
        return hash((self.spec.key, self.value))

    def __bool__(self):
        return self.value != 0

    def __repr__(self):
        return f"FieldElement({self.spec.format(self.value)}, q={self.spec.q})"

    def __str__(self):
        return self.spec.format(self.value)

    @property
    def coeffs(self) -> tuple[int, ...]:
        return tuple(self.spec._digits(self.value))

    def as_power_of_w(self) -> int:
        """k in [0, q-1) with w^k equal to this (nonzero) element."""
        return self.spec.log(self.value)

    def is_zero(self) -> bool:
        return self.value == 0


@functools.lru_cache(maxsize=None)
def _cached_field(p: int, m: int, modulus, symbol: str) -> FieldSpec:
    return FieldSpec(p, m, modulus, symbol)


def GF(q: int, modulus=None, generator_symbol: str = "w") -> FieldSpec:
    """Shared FieldSpec for the field of order q (Conway modulus by default)."""
    p, m = prime_power(q)
    if isinstance(modulus, str):
        from .parsing import parse_prime_poly

        modulus = parse_prime_poly(modulus, p)
    if modulus is not None:
        modulus = tuple(int(c) % p for c in modulus)
    return _cached_field(p, m, modulus, generator_symbol)


@dataclass(frozen=True)
class DerivationSpec:
    """theta(a) = a^(p^t) and the inner theta-derivation a -> beta*(theta(a) - a).

    ``beta`` is an integer code in ``field``; zero gives the zero derivation.
    """

    field: FieldSpec
    t: int
    beta: int = 0

    def __post_init__(self):
        if not 0 <= self.t < self.field.m:
            raise InvalidParameters(f"Frobenius power t={self.t} outside [0, {self.field.m})")
        if isinstance(self.beta, FieldElement):
            if self.beta.spec != self.field:
                raise SpecMismatch("beta belongs to a different field")
            object.__setattr__(self, "beta", self.beta.value)
        if not 0 <= self.beta < self.field.q:
            raise InvalidParameters("beta code out of range")

    def theta(self, a: int) -> int:
        return self.field.frob(a, self.t)

    def theta_inv(self, a: int) -> int:
        return self.field.frob(a, (self.field.m - self.t) % self.field.m)

    def derive(self, a: int) -> int:
        if self.beta == 0:
            return 0
        f = self.field
        return f.mul(self.beta, f.sub(f.frob(a, self.t), a))

    @property
    def beta_element(self) -> FieldElement:
        return FieldElement(self.field, self.beta)

    def describe(self) -> str:
        f = self.field
        theta = f"a^{f.p ** self.t}"
        return f"theta(a)={theta}, derivation(a)={f.format(self.beta)}*(theta(a)-a)"


def _check(a: FieldElement, spec: FieldSpec):
    if a.spec != spec:
        raise SpecMismatch(f"{a.spec!r} vs {spec!r}")


def frobenius(a: FieldElement, t: int) -> FieldElement:
    """a^(p^t)."""
    if not 0 <= t < a.spec.m:
        raise InvalidParameters(f"Frobenius power t={t} outside [0, {a.spec.m})")
    return FieldElement(a.spec, a.spec.frob(a.value, t))


def derivation(a: FieldElement, d: DerivationSpec) -> FieldElement:
    _check(a, d.field)
    return FieldElement(a.spec, d.derive(a.value))


def field_trace(kappa: FieldElement) -> FieldElement:
    """Absolute trace to the prime field: sum of kappa^(p^i), i < m."""
    return FieldElement(kappa.spec, kappa.spec.trace(kappa.value))
