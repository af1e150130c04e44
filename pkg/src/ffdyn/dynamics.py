"""Orbit analysis for the iteration f, Df, D^2 f, ... on cyclic sequences.

Two independent routes: direct iteration (Brent cycle detection, or a
memoized full-state-space pass) and the algebraic route through the
factor components of t^n - 1, where each component either dies
(nilpotent multiplier) or rotates with a computable unit order.
"""

from __future__ import annotations

import hashlib
import math
from dataclasses import dataclass
from functools import lru_cache

from .errors import ResourceLimitError
from .ffield import FieldSpec
from .groupalg import CyclicSeq, DiffOperator, crt_split, seq_to_poly, t_pow_minus_one
from .intfactor import divisors
from .polyring import Poly, gcd, _order_prime_power


@dataclass(frozen=True)
class OrbitSummary:
    preperiod: int
    period: int
    attractor_entry: CyclicSeq


@dataclass(frozen=True)
class GraphSummary:
    state_count: int
    cycle_spectrum: dict
    tree_depth: int
    tree_shape_hash: str | None
    per_node_indegree: int
    all_trees_isomorphic: bool
    attractor_size: int


# ---------------------------------------------------------------------------
# Direct iteration


def orbit_brute(D: DiffOperator, f: CyclicSeq, max_steps: int | None = None) -> OrbitSummary:
    """Exact preperiod/period by Brent cycle finding plus tail measurement.

    `max_steps` bounds the orbit size (preperiod + period); the default is
    the whole state space q^n, which can never be exceeded.
    """
    if max_steps is None:
        max_steps = f.spec.q**f.n
    step = D.apply_values
    x0 = f.value_encs
    # phase 1: cycle length; a hare that runs 3*max_steps + 4 steps without
    # closing proves the orbit exceeds max_steps
    power = lam = 1
    tortoise = x0
    hare = step(x0)
    hare_steps = 1
    while tortoise != hare:
        if power == lam:
            tortoise = hare
            power *= 2
            lam = 0
        hare = step(hare)
        hare_steps += 1
        lam += 1
        if hare_steps > 3 * max_steps + 4:
            raise ResourceLimitError(
                f"orbit exceeds the configured cap of {max_steps} states")
    # phase 2: preperiod via two pointers lam apart
    tortoise = hare = x0
    for _ in range(lam):
        hare = step(hare)
    mu = 0
    while tortoise != hare:
        tortoise = step(tortoise)
        hare = step(hare)
        mu += 1
        if mu + lam > max_steps:
            raise ResourceLimitError(
                f"orbit exceeds the configured cap of {max_steps} states")
    return OrbitSummary(mu, lam, CyclicSeq(f.spec, tortoise))


# ---------------------------------------------------------------------------
# Algebraic route


class _Component:
    """One factor pi^e of t^n - 1 together with the operator's behavior on it."""

    __slots__ = ("pi", "e", "mod", "p_res", "val_p", "live", "orders")

    def __init__(self, D: DiffOperator, pi: Poly, e: int):
        self.pi = pi
        self.e = e
        self.mod = pi**e
        self.p_res = D.op_poly % self.mod
        self.val_p = self._valuation(self.p_res)
        self.live = self.val_p == 0
        if self.live:
            # orders[m] = multiplicative order of the multiplier mod pi^m
            self.orders = [1]
            for m in range(1, e + 1):
                self.orders.append(_order_prime_power(self.p_res, pi, m))
        else:
            self.orders = None

    def _valuation(self, r: Poly) -> int:
        """pi-adic valuation of r, capped at e (the zero residue)."""
        if r.is_zero:
            return self.e
        v = 0
        while v < self.e:
            q, rem = divmod(r, self.pi)
            if not rem.is_zero:
                break
            r = q
            v += 1
        return v

    def analyze(self, residue: Poly) -> tuple[int, int]:
        """(preperiod, period) contribution for a component residue."""
        v = self._valuation(residue)
        if v == self.e:
            return 0, 1
        if self.live:
            return 0, self.orders[self.e - v]
        # the multiplier has valuation val_p >= 1 (or is zero: val_p == e),
        # so the residue dies once k*val_p + v reaches e
        k = -(-(self.e - v) // self.val_p)  # ceil
        return k, 1


class _OrbitAnalyzer:
    def __init__(self, D: DiffOperator):
        self.D = D
        self.components = [
            _Component(D, pi, e) for pi, e in crt_split(D.spec, D.n)]

    def analyze(self, f_poly: Poly) -> tuple[int, int]:
        pre, per = 0, 1
        for comp in self.components:
            k, t = comp.analyze(f_poly % comp.mod)
            pre = max(pre, k)
            per = math.lcm(per, t)
        return pre, per

    @property
    def max_period(self) -> int:
        out = 1
        for comp in self.components:
            if comp.live:
                out = math.lcm(out, comp.orders[comp.e])
        return out

    @property
    def max_preperiod(self) -> int:
        out = 0
        for comp in self.components:
            if not comp.live:
                out = max(out, -(-comp.e // comp.val_p))
        return out


@lru_cache(maxsize=256)
def _analyzer(D: DiffOperator) -> _OrbitAnalyzer:
    return _OrbitAnalyzer(D)


def orbit_algebraic(D: DiffOperator, f: CyclicSeq) -> OrbitSummary:
    """Preperiod/period from component valuations and unit orders."""
    pre, per = _analyzer(D).analyze(seq_to_poly(f))
    v = f.value_encs
    for _ in range(pre):
        v = D.apply_values(v)
    return OrbitSummary(pre, per, CyclicSeq(f.spec, v))


def max_period(D: DiffOperator) -> int:
    """Largest orbit period over all states: lcm of live-component orders."""
    return _analyzer(D).max_period


def max_preperiod(D: DiffOperator) -> int:
    """Largest preperiod over all states: worst nilpotency index."""
    return _analyzer(D).max_preperiod


def cycle_spectrum(D: DiffOperator) -> dict[int, int]:
    """Exact {cycle length: count} for the map f -> Df on all q^n states.

    Attractor states are products of live-component values; states of exact
    period L are counted by inclusion-exclusion over the divisor lattice.
    """
    q = D.spec.q
    comps = [c for c in _analyzer(D).components if c.live]
    # per component: {period: number of component values with that period}
    per_comp: list[dict[int, int]] = []
    for c in comps:
        d = c.pi.degree
        counts: dict[int, int] = {}
        for v in range(c.e + 1):
            if v < c.e:
                n_vals = q ** (d * (c.e - v)) - q ** (d * (c.e - v - 1))
            else:
                n_vals = 1
            t = c.orders[c.e - v]
            counts[t] = counts.get(t, 0) + n_vals
        per_comp.append(counts)
    total_lcm = 1
    for counts in per_comp:
        for t in counts:
            total_lcm = math.lcm(total_lcm, t)
    exact: dict[int, int] = {}
    for ell in divisors(total_lcm):
        dividing = 1
        for counts in per_comp:
            dividing *= sum(cnt for t, cnt in counts.items() if ell % t == 0)
        ex = dividing - sum(exact[m] for m in exact if ell % m == 0)
        if ex:
            exact[ell] = ex
    return {ell: ex // ell for ell, ex in sorted(exact.items())}


# ---------------------------------------------------------------------------
# Full state-space enumeration


def state_of_index(spec: FieldSpec, n: int, idx: int) -> tuple[int, ...]:
    out = [0] * n
    for i in range(n - 1, -1, -1):
        idx, out[i] = divmod(idx, spec.q)
    return tuple(out)


def index_of_state(spec: FieldSpec, v: tuple[int, ...]) -> int:
    idx = 0
    for d in v:
        idx = idx * spec.q + d
    return idx


def successor_array(D: DiffOperator, cap: int = 2**20) -> list[int]:
    """succ[i] = index of D applied to the i-th state (big-endian indexing)."""
    import itertools
    spec, n = D.spec, D.n
    total = spec.q**n
    if total > cap:
        raise ResourceLimitError(
            f"state space {total} exceeds cap {cap}; use cycle_spectrum instead")
    succ = []
    for v in itertools.product(range(spec.q), repeat=n):
        succ.append(index_of_state(spec, D.apply_values(v)))
    return succ


def orbit_table(D: DiffOperator, cap: int = 2**20) -> tuple[list[int], list[int]]:
    """(preperiod, period) for every state, by pure iteration with memoization.

    One successor application per state overall; this is the exhaustive
    brute-force oracle used by the sweep tests.
    """
    succ = successor_array(D, cap)
    total = len(succ)
    pre = [-1] * total
    per = [0] * total
    for start in range(total):
        if pre[start] >= 0:
            continue
        path = []
        pos: dict[int, int] = {}
        cur = start
        while pre[cur] < 0 and cur not in pos:
            pos[cur] = len(path)
            path.append(cur)
            cur = succ[cur]
        if pre[cur] >= 0:
            base_pre, base_per = pre[cur], per[cur]
            for i in range(len(path) - 1, -1, -1):
                pre[path[i]] = base_pre + len(path) - i
                per[path[i]] = base_per
        else:
            cstart = pos[cur]
            cycle_len = len(path) - cstart
            for i in range(cstart, len(path)):
                pre[path[i]] = 0
                per[path[i]] = cycle_len
            for i in range(cstart - 1, -1, -1):
                pre[path[i]] = cstart - i
                per[path[i]] = cycle_len
    return pre, per


def _ahu_code(root: int, children: list[list[int]]) -> str:
    """Canonical encoding of a rooted tree (iterative post-order)."""
    codes: dict[int, str] = {}
    stack = [(root, False)]
    while stack:
        node, done = stack.pop()
        if done:
            codes[node] = "(" + "".join(sorted(codes[c] for c in children[node])) + ")"
        else:
            stack.append((node, True))
            for c in children[node]:
                stack.append((c, False))
    return codes[root]


def build_graph(D: DiffOperator, cap: int = 2**20) -> tuple[GraphSummary, list[int]]:
    """Full functional graph: spectrum, tree depth, tree isomorphism check.

    Returns the summary and the successor array (the edge list i -> succ[i]).
    """
    spec, n = D.spec, D.n
    succ = successor_array(D, cap)
    total = len(succ)
    indeg = [0] * total
    for s in succ:
        indeg[s] += 1
    # peel non-attractor states
    attractor = [True] * total
    stack = [i for i in range(total) if indeg[i] == 0]
    while stack:
        i = stack.pop()
        attractor[i] = False
        t = succ[i]
        indeg[t] -= 1
        if indeg[t] == 0:
            stack.append(t)
    # cycle spectrum by walking attractor cycles
    spectrum: dict[int, int] = {}
    seen = [False] * total
    for i in range(total):
        if attractor[i] and not seen[i]:
            length = 0
            j = i
            while not seen[j]:
                seen[j] = True
                j = succ[j]
                length += 1
            spectrum[length] = spectrum.get(length, 0) + 1
    spectrum = dict(sorted(spectrum.items()))
    # predecessor buckets; tree children exclude attractor-to-attractor edges
    preds: list[list[int]] = [[] for _ in range(total)]
    for i, s in enumerate(succ):
        preds[s].append(i)
    children = [[p for p in preds[i] if not attractor[p]] for i in range(total)]
    # depth: BFS from the attractor, following tree edges backwards
    depth = 0
    frontier = [i for i in range(total) if attractor[i]]
    level = 0
    while frontier:
        nxt = []
        for i in frontier:
            nxt.extend(children[i])
        if nxt:
            level += 1
            depth = level
        frontier = nxt
    # tree isomorphism across attractor vertices
    codes = [_ahu_code(i, children) for i in range(total) if attractor[i]]
    all_iso = len(set(codes)) <= 1
    tree_hash = hashlib.sha256(codes[0].encode()).hexdigest()[:16] if all_iso and codes else None
    kernel_dim = gcd(D.op_poly, t_pow_minus_one(spec, n)).degree
    summary = GraphSummary(
        state_count=total,
        cycle_spectrum=spectrum,
        tree_depth=depth,
        tree_shape_hash=tree_hash,
        per_node_indegree=spec.q**kernel_dim,
        all_trees_isomorphic=all_iso,
        attractor_size=sum(attractor),
    )
    return summary, succ


def state_label(spec: FieldSpec, n: int, idx: int) -> str:
    digits = state_of_index(spec, n, idx)
    if spec.q <= 10:
        return "".join(str(d) for d in digits)
    return ",".join(str(d) for d in digits)


def graph_dot(D: DiffOperator, succ: list[int]) -> str:
    """DOT rendering of the functional graph; node labels are value strings."""
    spec, n = D.spec, D.n
    lines = ["digraph ffdyn {"]
    for i, s in enumerate(succ):
        lines.append(f'  "{state_label(spec, n, i)}" -> "{state_label(spec, n, s)}";')
    lines.append("}")
    return "\n".join(lines) + "\n"
