"""Exact arithmetic in finite fields GF(p^e).

Elements are stored as a single integer encoding: the base-p digits of the
encoding are the coefficients of the representative polynomial, lowest
degree first. For prime fields the encoding is the residue itself.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .errors import DomainError
from .intfactor import factor_int, is_prime

_TABLE_LIMIT = 512  # build full multiplication tables only for small fields


def _digits(value: int, p: int, width: int) -> tuple[int, ...]:
    out = []
    for _ in range(width):
        value, r = divmod(value, p)
        out.append(r)
    return tuple(out)


def _encode(digits, p: int) -> int:
    out = 0
    for d in reversed(list(digits)):
        out = out * p + d
    return out


# ---------------------------------------------------------------------------
# Minimal dense polynomial arithmetic over Z/p, used only to validate and
# search extension moduli (the full Poly type lives in polyring and depends
# on this module).

def _pm_trim(c: list[int]) -> list[int]:
    while c and c[-1] == 0:
        c.pop()
    return c


def _pm_mulmod(a: list[int], b: list[int], m: list[int], p: int) -> list[int]:
    prod = [0] * (len(a) + len(b) - 1) if a and b else []
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                prod[i + j] = (prod[i + j] + ai * bj) % p
    # m is monic; reduce high coefficients down
    dm = len(m) - 1
    for i in range(len(prod) - 1, dm - 1, -1):
        c = prod[i]
        if c:
            for j in range(dm):
                prod[i - dm + j] = (prod[i - dm + j] - c * m[j]) % p
            prod[i] = 0
    return _pm_trim(prod)


def _pm_powmod(a: list[int], k: int, m: list[int], p: int) -> list[int]:
    result = [1]
    base = list(a)
    while k:
        if k & 1:
            result = _pm_mulmod(result, base, m, p)
        base = _pm_mulmod(base, base, m, p)
        k >>= 1
    return result


def _pm_divmod(a: list[int], b: list[int], p: int):
    a = list(a)
    db, lb = len(b) - 1, b[-1]
    inv_lb = pow(lb, p - 2, p)
    q = [0] * max(0, len(a) - db)
    while len(a) - 1 >= db and a:
        c = a[-1] * inv_lb % p
        k = len(a) - 1 - db
        q[k] = c
        for j in range(db + 1):
            a[k + j] = (a[k + j] - c * b[j]) % p
        _pm_trim(a)
    return q, a


def _pm_gcd(a: list[int], b: list[int], p: int) -> list[int]:
    a, b = _pm_trim(list(a)), _pm_trim(list(b))
    while b:
        a, b = b, _pm_divmod(a, b, p)[1]
    if a:
        inv = pow(a[-1], p - 2, p)
        a = [c * inv % p for c in a]
    return a


def _pm_sub(a: list[int], b: list[int], p: int) -> list[int]:
    n = max(len(a), len(b))
    out = [0] * n
    for i in range(n):
        ai = a[i] if i < len(a) else 0
        bi = b[i] if i < len(b) else 0
        out[i] = (ai - bi) % p
    return _pm_trim(out)


def _pm_irreducible(modulus: tuple[int, ...], p: int) -> bool:
    """Rabin irreducibility test for a monic polynomial over Z/p."""
    e = len(modulus) - 1
    if e < 1:
        return False
    m = list(modulus)
    t = [0, 1]
    frob = _pm_powmod(t, p**e, m, p)
    if _pm_trim(_pm_sub(frob, t, p)):
        return False
    for r in factor_int(e):
        h = _pm_powmod(t, p ** (e // r), m, p)
        if len(_pm_gcd(_pm_sub(h, t, p), m, p)) != 1:
            return False
    return True


def _default_modulus(p: int, e: int) -> tuple[int, ...]:
    """Lowest monic irreducible of degree e over Z/p, in encoding order."""
    for low in range(p**e):
        cand = _digits(low, p, e) + (1,)
        if _pm_irreducible(cand, p):
            return cand
    raise DomainError(f"no irreducible of degree {e} over GF({p})")  # unreachable


# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class FieldSpec:
    """The field GF(p^e); prime fields carry no modulus."""

    p: int
    e: int = 1
    modulus: tuple[int, ...] | None = None

    def __post_init__(self):
        if not is_prime(self.p):
            raise DomainError(f"characteristic {self.p} is not prime")
        if self.p.bit_length() > 63:
            raise DomainError("characteristic must fit a 64-bit word")
        if self.e < 1:
            raise DomainError("extension degree must be >= 1")
        if self.e == 1:
            if self.modulus is not None:
                raise DomainError("prime fields take no modulus")
            return
        mod = self.modulus
        if mod is None:
            mod = _default_modulus(self.p, self.e)
        else:
            mod = tuple(int(c) % self.p for c in mod)
            if len(mod) != self.e + 1 or mod[-1] != 1:
                raise DomainError(
                    f"modulus must be monic of degree {self.e} (low-to-high)")
            if not _pm_irreducible(mod, self.p):
                raise DomainError(f"modulus {mod} is reducible over GF({self.p})")
        object.__setattr__(self, "modulus", mod)

    # -- construction --------------------------------------------------

    @classmethod
    def prime(cls, p: int) -> "FieldSpec":
        return cls(p)

    @classmethod
    def extension(cls, p: int, e: int, modulus=None) -> "FieldSpec":
        return cls(p, e, tuple(modulus) if modulus is not None else None)

    @classmethod
    def of_order(cls, q: int) -> "FieldSpec":
        """GF(q) for a prime power q, with the deterministic default modulus."""
        if q < 2:
            raise DomainError(f"{q} is not a prime power")
        fac = factor_int(q)
        if len(fac) != 1:
            raise DomainError(f"{q} is not a prime power")
        (p, e), = fac.items()
        return cls(p) if e == 1 else cls(p, e)

    # -- basic data -----------------------------------------------------

    @property
    def q(self) -> int:
        return self.p**self.e

    @property
    def spec_text(self) -> str:
        if self.e == 1:
            return f"q={self.p}"
        mod = ",".join(str(c) for c in self.modulus)
        return f"q={self.q};p={self.p};e={self.e};mod={mod}"

    def __repr__(self):
        return f"FieldSpec({self.spec_text})"

    # -- elements --------------------------------------------------------

    def element(self, value) -> "FieldElem":
        """Coerce an encoding, digit sequence, or FieldElem into this field."""
        if isinstance(value, FieldElem):
            if value.spec != self:
                raise DomainError("element belongs to a different field")
            return value
        if isinstance(value, int):
            if not 0 <= value < self.q:
                raise DomainError(f"encoding {value} outside [0, {self.q})")
            return FieldElem(self, value)
        digits = [int(c) % self.p for c in value]
        if len(digits) > self.e:
            raise DomainError("too many residues for this field")
        return FieldElem(self, _encode(digits, self.p))

    def from_int(self, k: int) -> "FieldElem":
        """Embed the integer k via the prime subfield (k mod p)."""
        return FieldElem(self, k % self.p)

    @property
    def zero(self) -> "FieldElem":
        return FieldElem(self, 0)

    @property
    def one(self) -> "FieldElem":
        return FieldElem(self, 1)

    def elements(self):
        return (FieldElem(self, v) for v in range(self.q))

    # -- encoded arithmetic ----------------------------------------------
    # Hot paths (orbit sweeps, censuses) run on raw encodings.

    def add_enc(self, a: int, b: int) -> int:
        if self.e == 1:
            return (a + b) % self.p
        if self.p == 2:
            return a ^ b
        p = self.p
        da, db = _digits(a, p, self.e), _digits(b, p, self.e)
        return _encode([(x + y) % p for x, y in zip(da, db)], p)

    def sub_enc(self, a: int, b: int) -> int:
        return self.add_enc(a, self.neg_enc(b))

    def neg_enc(self, a: int) -> int:
        if self.e == 1:
            return -a % self.p
        if self.p == 2:
            return a
        p = self.p
        return _encode([-x % p for x in _digits(a, p, self.e)], p)

    def mul_enc(self, a: int, b: int) -> int:
        if self.e == 1:
            return a * b % self.p
        if self.q <= _TABLE_LIMIT:
            return self._mul_table[a][b]
        return self._ext_mul(a, b)

    def inv_enc(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("zero has no inverse")
        if self.e == 1:
            return pow(a, self.p - 2, self.p)
        if self.q <= _TABLE_LIMIT:
            return self._inv_table[a]
        return self.pow_enc(a, self.q - 2)

    def pow_enc(self, a: int, k: int) -> int:
        if k < 0:
            return self.pow_enc(self.inv_enc(a), -k)
        result, base = 1, a
        while k:
            if k & 1:
                result = self.mul_enc(result, base)
            base = self.mul_enc(base, base)
            k >>= 1
        return result

    def _ext_mul(self, a: int, b: int) -> int:
        p, e = self.p, self.e
        da, db = _digits(a, p, e), _digits(b, p, e)
        prod = [0] * (2 * e - 1)
        for i, x in enumerate(da):
            if x:
                for j, y in enumerate(db):
                    prod[i + j] = (prod[i + j] + x * y) % p
        mod = self.modulus
        for i in range(2 * e - 2, e - 1, -1):
            c = prod[i]
            if c:
                for j in range(e):
                    prod[i - e + j] = (prod[i - e + j] - c * mod[j]) % p
                prod[i] = 0
        return _encode(prod[:e], p)

    @cached_property
    def _mul_table(self):
        q = self.q
        return [[self._ext_mul(a, b) for b in range(q)] for a in range(q)]

    @cached_property
    def _inv_table(self):
        table = [0] * self.q
        for a in range(1, self.q):
            table[a] = self.pow_enc(a, self.q - 2)
        return table


class FieldElem:
    """An immutable element of a FieldSpec."""

    __slots__ = ("spec", "enc")

    def __init__(self, spec: FieldSpec, enc: int):
        object.__setattr__(self, "spec", spec)
        object.__setattr__(self, "enc", enc)

    def __setattr__(self, *_):
        raise AttributeError("FieldElem is immutable")

    @property
    def coeffs(self) -> tuple[int, ...]:
        """Residues mod p of the representative polynomial, low degree first."""
        return _digits(self.enc, self.spec.p, self.spec.e)

    def _coerce(self, other) -> "FieldElem":
        if isinstance(other, FieldElem):
            if other.spec != self.spec:
                raise DomainError("elements of different fields cannot mix")
            return other
        if isinstance(other, int):
            return self.spec.element(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return FieldElem(self.spec, self.spec.add_enc(self.enc, other.enc))

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return FieldElem(self.spec, self.spec.sub_enc(self.enc, other.enc))

    def __rsub__(self, other):
        return (-self).__add__(other)

    def __neg__(self):
        return FieldElem(self.spec, self.spec.neg_enc(self.enc))

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return FieldElem(self.spec, self.spec.mul_enc(self.enc, other.enc))

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return FieldElem(self.spec, self.spec.mul_enc(self.enc, self.spec.inv_enc(other.enc)))

    def __pow__(self, k: int):
        return FieldElem(self.spec, self.spec.pow_enc(self.enc, k))

    def inverse(self) -> "FieldElem":
        return FieldElem(self.spec, self.spec.inv_enc(self.enc))

    def __bool__(self):
        return self.enc != 0

    def __eq__(self, other):
        if isinstance(other, FieldElem):
            return self.spec == other.spec and self.enc == other.enc
        if isinstance(other, int):
            return 0 <= other < self.spec.q and self.enc == other
        return NotImplemented

    def __hash__(self):
        return hash((self.spec, self.enc))

    def __str__(self):
        return str(self.enc)

    def __repr__(self):
        return f"FieldElem({self.enc} in GF({self.spec.q}))"


def parse_field_spec(text: str) -> FieldSpec:
    """Parse 'q=3' or 'q=4;p=2;e=2;mod=1,1,1'."""
    parts = dict(
        kv.split("=", 1) for kv in text.strip().split(";") if kv)
    if "q" not in parts:
        raise DomainError("field spec needs q=")
    q = int(parts["q"])
    if "p" in parts or "e" in parts or "mod" in parts:
        p = int(parts.get("p", q))
        e = int(parts.get("e", 1))
        if p**e != q:
            raise DomainError(f"q={q} inconsistent with p={p}, e={e}")
        mod = None
        if "mod" in parts:
            mod = tuple(int(c) for c in parts["mod"].split(","))
        return FieldSpec.extension(p, e, mod) if e > 1 else FieldSpec.prime(p)
    return FieldSpec.of_order(q)
