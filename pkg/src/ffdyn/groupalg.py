"""The group algebra of the cyclic group of order n over GF(q).

Cyclic sequences are identified with residues in GF(q)[t]/(t^n - 1); the
forward-difference map and every operator built from it act by
multiplication with a fixed algebra element vanishing at t = 1.
"""

from __future__ import annotations

import json
from functools import lru_cache

from .errors import DegenerateOperatorError, DomainError
from .ffield import FieldElem, FieldSpec, parse_field_spec
from .polyring import Poly, factorize, t_pow_minus_one


class CyclicSeq:
    """A closed sequence of n field elements, indexed 1..n cyclically."""

    __slots__ = ("spec", "n", "_v")

    def __init__(self, spec: FieldSpec, values):
        encs = []
        for v in values:
            if isinstance(v, FieldElem):
                if v.spec != spec:
                    raise DomainError("value from a different field")
                encs.append(v.enc)
            else:
                v = int(v)
                if not 0 <= v < spec.q:
                    raise DomainError(f"value encoding {v} outside [0, {spec.q})")
                encs.append(v)
        if not encs:
            raise DomainError("sequence length must be >= 1")
        object.__setattr__(self, "spec", spec)
        object.__setattr__(self, "n", len(encs))
        object.__setattr__(self, "_v", tuple(encs))

    def __setattr__(self, *_):
        raise AttributeError("CyclicSeq is immutable")

    @property
    def value_encs(self) -> tuple[int, ...]:
        return self._v

    @property
    def values(self) -> tuple[FieldElem, ...]:
        return tuple(FieldElem(self.spec, v) for v in self._v)

    def value(self, i: int) -> FieldElem:
        """Cyclic accessor with the 1-based paper indexing; value(0) == value(n)."""
        return FieldElem(self.spec, self._v[(i - 1) % self.n])

    @property
    def is_zero(self) -> bool:
        return all(v == 0 for v in self._v)

    def __eq__(self, other):
        if isinstance(other, CyclicSeq):
            return self.spec == other.spec and self._v == other._v
        return NotImplemented

    def __hash__(self):
        return hash((self.spec, self._v))

    def __repr__(self):
        return f"CyclicSeq({seq_text(self)!r})"


def zero_seq(spec: FieldSpec, n: int) -> CyclicSeq:
    return CyclicSeq(spec, (0,) * n)


def seq_to_poly(f: CyclicSeq) -> Poly:
    """The algebra avatar: sum of f(i) t^i for i = 0..n-1, with f(0) = f(n)."""
    v = f.value_encs
    return Poly(f.spec, (v[-1],) + v[:-1])


def poly_to_seq(spec: FieldSpec, n: int, poly: Poly) -> CyclicSeq:
    """Inverse of seq_to_poly for residues of degree < n."""
    if poly.degree != float("-inf") and poly.degree >= n:
        raise DomainError("residue degree must stay below n")
    c = list(poly.coeff_encs) + [0] * (n - len(poly.coeff_encs))
    return CyclicSeq(spec, c[1:] + c[:1])


def delta(f: CyclicSeq) -> CyclicSeq:
    """Forward differences: result_i = f(i+1) - f(i), cyclically."""
    sub = f.spec.sub_enc
    v = f.value_encs
    n = f.n
    return CyclicSeq(f.spec, tuple(sub(v[(i + 1) % n], v[i]) for i in range(n)))


def delta_poly(spec: FieldSpec, n: int) -> Poly:
    """The algebra element acting as the difference map: t^(n-1) - 1 mod t^n - 1.

    For n = 1 this reduces to zero: differences of a 1-cycle always vanish.
    """
    if n == 1:
        return Poly.zero(spec)
    coeffs = [spec.neg_enc(1)] + [0] * (n - 2) + [1]
    return Poly(spec, coeffs)


class DiffOperator:
    """A differential operator on length-n sequences, stored as its
    multiplier polynomial reduced mod t^n - 1 (vanishing at t = 1)."""

    __slots__ = ("spec", "n", "op_poly", "_taps")

    def __init__(self, spec: FieldSpec, n: int, op_poly: Poly):
        if op_poly.spec != spec:
            raise DomainError("operator polynomial from a different field")
        if op_poly.degree != float("-inf") and op_poly.degree >= n:
            op_poly = op_poly % t_pow_minus_one(spec, n)
        if op_poly(spec.one) != spec.zero:
            raise DomainError("operator polynomial must vanish at t = 1")
        if op_poly.is_zero and n > 1:
            raise DegenerateOperatorError("zero operator polynomial")
        object.__setattr__(self, "spec", spec)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "op_poly", op_poly)
        # nonzero (exponent, coefficient) taps for the cyclic correlation
        object.__setattr__(self, "_taps", tuple(
            (k, c) for k, c in enumerate(op_poly.coeff_encs) if c))

    def __setattr__(self, *_):
        raise AttributeError("DiffOperator is immutable")

    def apply_values(self, v: tuple[int, ...]) -> tuple[int, ...]:
        """Action on a raw value tuple (encodings, index 0 holds f(1))."""
        spec = self.spec
        n = self.n
        add, mul = spec.add_enc, spec.mul_enc
        out = [0] * n
        for k, c in self._taps:
            for j in range(n):
                out[j] = add(out[j], mul(c, v[j - k]))
        return tuple(out)

    def __eq__(self, other):
        if isinstance(other, DiffOperator):
            return (self.spec, self.n, self.op_poly) == \
                (other.spec, other.n, other.op_poly)
        return NotImplemented

    def __hash__(self):
        return hash((self.spec, self.n, self.op_poly))

    def __repr__(self):
        return f"DiffOperator(n={self.n}, op=[{self.op_poly}])"


def delta_operator(spec: FieldSpec, n: int) -> DiffOperator:
    return DiffOperator(spec, n, delta_poly(spec, n))


def build_operator(spec: FieldSpec, n: int, coeffs) -> DiffOperator:
    """Operator sum(d_i * Delta^i) from coefficients d_1..d_m."""
    ds = [spec.element(c) for c in coeffs]
    if all(d.enc == 0 for d in ds):
        raise DegenerateOperatorError("all operator coefficients are zero")
    modulus = t_pow_minus_one(spec, n)
    dp = delta_poly(spec, n)
    acc = Poly.zero(spec)
    power = Poly.one(spec)
    for d in ds:
        power = (power * dp) % modulus
        acc = acc + power * d
    if acc.is_zero and n > 1:
        # e.g. Delta^2 on length 2 in characteristic 2: the combination
        # collapses to the zero map, which is not a valid operator
        raise DegenerateOperatorError(
            "operator combination reduces to zero mod t^n - 1")
    return DiffOperator(spec, n, acc)


def apply_op(D: DiffOperator, f: CyclicSeq) -> CyclicSeq:
    """The sequence of the algebra product op_poly * f~ mod (t^n - 1)."""
    if D.spec != f.spec or D.n != f.n:
        raise DomainError("operator and sequence dimensions do not match")
    return CyclicSeq(f.spec, D.apply_values(f.value_encs))


@lru_cache(maxsize=None)
def crt_split(spec: FieldSpec, n: int) -> tuple[tuple[Poly, int], ...]:
    """Factorization of t^n - 1 into (irreducible, multiplicity) pairs."""
    if n < 1:
        raise DomainError("n must be >= 1")
    return factorize(t_pow_minus_one(spec, n)).factors


# -- text / JSON forms ------------------------------------------------------


def seq_text(f: CyclicSeq) -> str:
    vals = ",".join(str(v) for v in f.value_encs)
    return f"{f.spec.spec_text} n={f.n} {vals}"


def parse_seq(text: str) -> CyclicSeq:
    """Parse 'q=2 n=5 0,1,1,0,0' (field part may carry p/e/mod clauses)."""
    head, _, vals = text.strip().rpartition(" ")
    fields = {}
    for tok in head.replace(";", " ").split():
        k, _, v = tok.partition("=")
        fields[k] = v
    if "q" not in fields or "n" not in fields:
        raise DomainError("sequence text needs q= and n=")
    spec_text = f"q={fields['q']}"
    if "e" in fields and int(fields["e"]) > 1:
        spec_text = f"q={fields['q']};p={fields['p']};e={fields['e']};mod={fields['mod']}"
    spec = parse_field_spec(spec_text)
    values = [int(v) for v in vals.split(",")]
    n = int(fields["n"])
    if len(values) != n:
        raise DomainError(f"expected {n} values, got {len(values)}")
    return CyclicSeq(spec, values)


def seq_to_json(f: CyclicSeq) -> dict:
    out = {"q": f.spec.q, "n": f.n, "values": list(f.value_encs)}
    if f.spec.e > 1:
        out["field"] = f.spec.spec_text
    return out


def seq_from_json(data) -> CyclicSeq:
    if isinstance(data, str):
        data = json.loads(data)
    spec = parse_field_spec(data.get("field", f"q={data['q']}"))
    return CyclicSeq(spec, data["values"])
