"""Finite-window structural probes: simplicity, generation, Jordan structure,
and the free decomposition over the derivation.

All probes work inside a weight window.  Spans are tracked with exact row
reduction; an ideal closure alternates the derivation and the action of the
family's basis until the span stops growing, and a generated subalgebra is the
transitive closure of a seed set under mutual modes.  Because the window is
finite a probe can certify that a span was reached, but never that it cannot
be reached in a larger window; the report statuses reflect this asymmetry.
"""

import time
from dataclasses import dataclass, field
from fractions import Fraction

from .elements import Ambient, BasisKey, Element, weight
from .engine import CheckResult, modes, weighted_mode
from .families import Family, build_family
from .linalg import Echelon
from .scalars import Scalar, binomial


@dataclass
class ProbeReport:
    """Deterministic, JSON-friendly record of one probe run."""

    probe: str
    family: str
    params: dict
    window: list
    status: str = "reached-full-span"   # or "stalled" or "violated"
    dims: dict = field(default_factory=dict)   # weight -> [reached, total]
    witnesses: list = field(default_factory=list)
    iterations: int = 0
    elapsed_ms: int = 0

    def as_dict(self) -> dict:
        return {
            "probe": self.probe,
            "family": self.family,
            "params": self.params,
            "window": [str(w) for w in self.window],
            "status": self.status,
            "dims": {str(w): list(v) for w, v in sorted(self.dims.items())},
            "witnesses": self.witnesses,
            "iterations": self.iterations,
            "elapsed_ms": self.elapsed_ms,
        }


def _truncate(elem: Element, top) -> Element:
    kept = {k: c for k, c in elem.terms.items() if weight(k) <= top}
    if len(kept) == len(elem.terms):
        return elem
    return Element(elem.ambient, kept)


def ideal_closure(family: Family, seeds, top) -> Echelon:
    """Span of the ideal generated by the seeds, truncated at the weight top.

    Closes under the derivation and under all modes against the family basis,
    in both orders, until no new directions appear below the cutoff.
    """
    basis = [e for w in family.weights_up_to(top) for e in family.basis_at_weight(w)]
    span = Echelon()
    queue = [s for s in seeds if not s.is_zero()]
    for s in queue:
        span.insert(s.terms)
    while queue:
        batch, queue = queue, []

        def feed(elem):
            elem = _truncate(elem, top)
            if not elem.is_zero() and span.insert(elem.terms):
                queue.append(elem)

        for x in batch:
            feed(x.partial())
            for y in basis:
                for value in modes(y, x).values():
                    feed(value)
                for value in modes(x, y).values():
                    feed(value)
    return span


def generated_subalgebra(family: Family, seeds, top) -> Echelon:
    """Span of the subalgebra generated by the seeds inside the weight window.

    Transitive closure: every accumulated element acts on every other, and the
    derivation is applied, until the truncated span is stable.
    """
    span = Echelon()
    accumulated: list[Element] = []
    queue = [s for s in seeds if not s.is_zero()]
    for s in queue:
        span.insert(s.terms)
    while queue:
        batch, queue = queue, []

        def feed(elem):
            elem = _truncate(elem, top)
            if not elem.is_zero() and span.insert(elem.terms):
                queue.append(elem)

        for x in batch:
            feed(x.partial())
            for y in accumulated + batch:
                for value in modes(x, y).values():
                    feed(value)
                for value in modes(y, x).values():
                    feed(value)
        accumulated.extend(batch)
    return span


def _coverage(family: Family, span: Echelon, top) -> tuple[dict, bool]:
    dims = {}
    full = True
    for w in family.weights_up_to(top):
        basis = family.basis_at_weight(w)
        reached = sum(1 for e in basis if span.contains(e.terms))
        dims[w] = [reached, len(basis)]
        if reached < len(basis):
            full = False
    return dims, full


def simplicity_probe(family: Family, w_top, slack: int = 2) -> ProbeReport:
    """Seed an ideal with each low-weight basis element; simple means every
    such ideal fills the family back up to the observation cutoff."""
    t0 = time.monotonic()
    w_top = Fraction(w_top)
    closure_top = w_top + slack
    report = ProbeReport(
        probe="simplicity", family=family.name,
        params=_family_params(family) | {"slack": slack},
        window=[family.min_weight(), w_top],
    )
    seed_cut = family.min_weight() + 1
    seeds = [e for w in family.weights_up_to(seed_cut)
             for e in family.basis_at_weight(w)]
    for seed in seeds:
        report.iterations += 1
        span = ideal_closure(family, [seed], closure_top)
        dims, full = _coverage(family, span, w_top)
        for w, pair in dims.items():
            prev = report.dims.get(w)
            if prev is None or pair[0] < prev[0]:
                report.dims[w] = pair
        if not full:
            report.status = "stalled"
            report.witnesses.append({"seed": seed.render()})
    report.elapsed_ms = int(1000 * (time.monotonic() - t0))
    return report


def generator_probe(family: Family, w_top, seeds=None) -> ProbeReport:
    """Check the designated generating set spans the family up to the cutoff."""
    t0 = time.monotonic()
    w_top = Fraction(w_top)
    if seeds is None:
        seeds = designated_generators(family)
    report = ProbeReport(
        probe="generators", family=family.name, params=_family_params(family),
        window=[family.min_weight(), w_top],
    )
    span = generated_subalgebra(family, seeds, w_top)
    report.dims, full = _coverage(family, span, w_top)
    if not full:
        report.status = "stalled"
        for w, (reached, total) in sorted(report.dims.items()):
            if reached < total:
                report.witnesses.append({"weight": str(w),
                                         "missing": total - reached})
    report.iterations = span.rank
    report.elapsed_ms = int(1000 * (time.monotonic() - t0))
    return report


def _family_params(family: Family) -> dict:
    amb = family.ambient
    if amb.split is None:
        return {"k": amb.k}
    return {"k1": amb.split[0], "k2": amb.split[1]}


def designated_generators(family: Family) -> list[Element]:
    """The canonical finite generating set of each family, by its smallest
    admissible size unless the family is large enough to be generated by a
    single graded piece."""
    amb = family.ambient
    name = family.name.partition(":")[0]
    k = amb.k

    def unit(p, q, i, j, m, n, coef=1):
        return Element.basis(amb, p, q, i, j, m, n, coef)

    if name == "rkk":
        level = int(family.name.partition(":")[2])
        if level == 1:
            if k > 1:
                return family.basis_at_weight(2)
            return [unit(1, 1, 1, 1, 1, 0), unit(1, 1, 1, 1, 0, 2)]
        if k > 1:
            return family.basis_at_weight(level)
        return [unit(1, 1, 0, 0, 0, level - 2), unit(1, 1, 0, 0, 0, level - 1)]
    if name == "star1":
        if k > 1:
            return family.basis_at_weight(2)
        return [unit(1, 1, 1, 1, 1, 0) - unit(1, 1, 1, 1, 0, 1),
                unit(1, 1, 1, 1, 3, 0) - unit(1, 1, 1, 1, 0, 3)]
    if name == "star2":
        if k > 1:
            return family.basis_at_weight(2)
        return [unit(1, 1, 0, 0, 0, 0), unit(1, 1, 0, 0, 1, 1)]
    if name == "dagger1":
        if k > 2:
            return family.basis_at_weight(2)
        return [unit(1, 2, 1, 1, 2, 0) + unit(1, 2, 1, 1, 0, 2),
                unit(2, 1, 1, 1, 2, 0) + unit(2, 1, 1, 1, 0, 2),
                unit(1, 1, 1, 1, 0, 1) - unit(2, 2, 1, 1, 1, 0)]
    if name == "dagger2":
        if k > 2:
            return family.basis_at_weight(2)
        return [unit(1, 1, 0, 0, 0, 0) + unit(2, 2, 0, 0, 0, 0),
                unit(1, 2, 0, 0, 1, 0) - unit(1, 2, 0, 0, 0, 1),
                unit(2, 1, 0, 0, 1, 0) - unit(2, 1, 0, 0, 0, 1)]
    if name == "super":
        level = int(family.name.partition(":")[2])
        if k > 2:
            return family.basis_at_weight(Fraction(2 * level + 3, 2))
        k1 = amb.split[0]
        return [unit(1, 2, 0, 1, 0, level), unit(2, 1, 1, 0, 0, level),
                unit(2, 2, 1, 1, 0, level + 1)]
    if name == "superstar":
        if k > 2:
            return family.basis_at_weight(Fraction(3, 2))
        return [unit(1, 2, 0, 1, 0, 0) + unit(2, 1, 1, 0, 0, 0),
                unit(2, 2, 1, 1, 0, 1) - unit(2, 2, 1, 1, 1, 0)]
    if name == "superdagger":
        if k > 4:
            return family.basis_at_weight(Fraction(3, 2))
        return family.basis_at_weight(Fraction(3, 2)) + [
            unit(3, 3, 1, 1, 0, 1) - unit(4, 4, 1, 1, 1, 0)]
    raise ValueError(f"no designated generators for {family.name}")


def jordan_product(u: Element, v: Element) -> Element:
    """The weighted zero mode u(0)v, a commutative product on suitable slices."""
    return weighted_mode(u, 0, v)


def _matrix_of(elem: Element) -> dict:
    mat = {}
    for key, coef in elem.terms.items():
        mat[(key.p, key.q)] = mat.get((key.p, key.q), 0) + coef
    return mat


def _matmul(a: dict, b: dict) -> dict:
    out = {}
    for (p, q), ca in a.items():
        for (r, s), cb in b.items():
            if q == r:
                out[(p, s)] = out.get((p, s), 0) + ca * cb
    return out


def _matrix_element(ambient, mat: dict, i, j, m, n, scale=1) -> Element:
    terms = {}
    for (p, q), c in mat.items():
        terms[BasisKey(i, j, p, q, m, n)] = scale * c
    return Element(ambient, terms)


def jordan_structure_check(kind: str, k: int, ell: int = 0) -> CheckResult:
    """Compare the weighted zero mode on a low slice with the matrix algebra.

    kind "A": on the slice u(0, 2*ell) of the even family with cutoff 2*ell,
    the product is (2*ell+1) times the anticommutator, the Jordan product of
    the full matrix algebra.  kind "gl": on u(0, 2*ell+1) one level up it is
    (2*ell+2) times the commutator (reversed), a Lie structure.  kinds "B" and
    "C": the anticommutator rule restricted to the weight-2 slices of the
    transpose- and symplectic-fixed families, whose underlying algebras are
    the symmetric and the Hamiltonian matrices; membership of every product in
    the family is part of the check.
    """
    if kind not in ("A", "gl", "B", "C"):
        raise ValueError(f"unknown structure kind {kind!r}")
    result = CheckResult()
    ambient = Ambient(k)

    if kind in ("A", "gl"):
        units = [Element.basis(ambient, p, q, 0, 0, 0,
                               2 * ell if kind == "A" else 2 * ell + 1)
                 for p in range(1, k + 1) for q in range(1, k + 1)]
        for u in units:
            for v in units:
                mu, mv = _matrix_of(u), _matrix_of(v)
                if kind == "A":
                    combo = _matmul(mu, mv)
                    for key, c in _matmul(mv, mu).items():
                        combo[key] = combo.get(key, 0) + c
                    expected = _matrix_element(ambient, combo, 0, 0, 0, 2 * ell,
                                               2 * ell + 1)
                else:
                    combo = _matmul(mv, mu)
                    for key, c in _matmul(mu, mv).items():
                        combo[key] = combo.get(key, 0) - c
                    expected = _matrix_element(ambient, combo, 0, 0, 0,
                                               2 * ell + 1, 2 * ell + 2)
                result.checked += 1
                got = jordan_product(u, v)
                if got != expected:
                    result.record(kind=kind, u=u, v=v, got=got, expected=expected)
        return result

    family = build_family("star2" if kind == "B" else "dagger2", k=k)
    basis = family.basis_at_weight(2)
    for u in basis:
        for v in basis:
            mu, mv = _matrix_of(u), _matrix_of(v)
            combo = _matmul(mu, mv)
            for key, c in _matmul(mv, mu).items():
                combo[key] = combo.get(key, 0) + c
            expected = _matrix_element(ambient, combo, 0, 0, 0, 0)
            result.checked += 1
            got = jordan_product(u, v)
            if got != expected or not family.contains(got):
                result.record(kind=kind, u=u, v=v, got=got, expected=expected)
    return result


def free_module_decompose(elem: Element) -> list:
    """Write an element as sum of c * partial^d applied to first-exponent-zero
    generators; the representation is unique because the derivation is
    unitriangular in the first exponent."""
    out = []
    residual = elem
    while not residual.is_zero():
        key = max(residual.terms, key=lambda s: (s.m, s))
        coef = residual.terms[key]
        d = key.m
        gen = Element(residual.ambient, {key._replace(m=0): 1})
        lead = coef
        for step in range(1, d + 1):
            lead = lead / step
        out.append((lead, d, key._replace(m=0)))
        piece = gen
        for _ in range(d):
            piece = piece.partial()
        residual = residual - lead * piece
    return out


def free_module_expand(ambient: Ambient, decomposition) -> Element:
    """Inverse of the decomposition."""
    total = Element.zero(ambient)
    for coef, d, genkey in decomposition:
        piece = Element(ambient, {genkey: 1})
        for _ in range(d):
            piece = piece.partial()
        total = total + coef * piece
    return total


def generator_count_bound_check(ambient: Ambient, top) -> CheckResult:
    """At every weight up to the cutoff, the free generators u_{[i,j]}(0, m)
    number at most max(2 dim A_even, 2 dim A_odd)."""
    result = CheckResult()
    dim_even = sum(1 for p in range(1, ambient.k + 1)
                   for q in range(1, ambient.k + 1)
                   if ambient.unit_parity(p, q) == 0)
    dim_odd = ambient.k ** 2 - dim_even
    bound = max(2 * dim_even, 2 * dim_odd)
    w = Fraction(1)
    while w <= top:
        count = 0
        for i in (0, 1):
            for j in (0, 1):
                m = w - 2 + Fraction(i + j, 2)
                if m.denominator != 1 or m < 0:
                    continue
                for p in range(1, ambient.k + 1):
                    for q in range(1, ambient.k + 1):
                        if (i + j) % 2 == ambient.unit_parity(p, q):
                            count += 1
        result.checked += 1
        if count > bound:
            result.record(weight=str(w), count=count, bound=bound)
        w += Fraction(1, 2)
    return result
