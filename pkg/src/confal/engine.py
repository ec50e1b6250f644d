"""Positive-part vertex operator Y+(u, z)v on the matrix-symbol algebras.

For basis symbols u = (E_{a,b})_{[i1,i2]}(m1,m2) and
v = (E_{c,d})_{[j1,j2]}(n1,n2) the action is a finite Laurent polynomial in z
with exponents <= -1, computed by a closed two-term formula: a "u acts on v"
sum gated by i2 = j1 and the matrix product E_{a,b}E_{c,d}, and a signed
"v acts on u" sum gated by i1 = j2 and the reversed product.  Modes are the
coefficients u_a v of z^{-a-1}, a running over natural numbers.

The three defining identities of the structure (compatibility with the
derivation, skew symmetry, and the half-Jacobi relation) are checked here over
any carrier exposing modes/partial/parity, so the same code validates both the
matrix families and the independent fixture algebras.
"""

from dataclasses import dataclass, field
from functools import lru_cache

from .elements import Ambient, BasisKey, Element, parity, weight
from .scalars import Scalar, binomial


@lru_cache(maxsize=None)
def y_plus_basis(ambient: Ambient, ukey: BasisKey, vkey: BasisKey) -> dict:
    """Laurent coefficients {z-exponent: {key: int}} of Y+(u, z)v for basis symbols."""
    i1, i2, a, b, m1, m2 = ukey.i, ukey.j, ukey.p, ukey.q, ukey.m, ukey.n
    j1, j2, c, d, n1, n2 = vkey.i, vkey.j, vkey.p, vkey.q, vkey.m, vkey.n
    out: dict[int, dict[BasisKey, int]] = {}

    def add(exponent, key, coef):
        if coef:
            row = out.setdefault(exponent, {})
            acc = row.get(key, 0) + coef
            if acc:
                row[key] = acc
            else:
                del row[key]
                if not row:
                    del out[exponent]

    # forward sum: needs matching inner blocks i2 = j1 and E_{a,b}E_{c,d} != 0
    if i2 == j1 and b == c:
        d2 = 1 if i2 == 0 else 0
        front = (n1 * d2 + 1) * binomial(-n1 - 1 - d2, m2)
        if front:
            for p in range(m1 + m2 + n1 + d2 + 1):
                coef = front * binomial(p, m1)
                add(p - m1 - m2 - n1 - 1 - d2,
                    BasisKey(i1, j2, a, d, p, n2), coef)

    # reversed sum: needs i1 = j2 and E_{c,d}E_{a,b} != 0, with the super sign
    if i1 == j2 and d == a:
        d1 = 1 if i1 == 0 else 0
        sign = -1 if ((i1 + i2) * (j1 + j2)) % 2 else 1
        front = -sign * ((1 if i1 == 1 else 0) - (n2 + 1) * d1)
        front *= binomial(-n2 - 1 - d1, m1)
        if front:
            for q in range(m1 + m2 + n2 + d1 + 1):
                coef = front * binomial(q, m2)
                add(q - m1 - m2 - n2 - 1 - d1,
                    BasisKey(j1, i2, c, b, n1, q), coef)

    return out


def y_plus(u: Element, v: Element) -> dict:
    """Bilinear extension; {z-exponent: Element} with zero coefficients dropped."""
    if u.ambient != v.ambient:
        raise ValueError("ambient mismatch")
    acc: dict[int, dict] = {}
    for ukey, uc in u.terms.items():
        for vkey, vc in v.terms.items():
            c = uc * vc
            for exponent, row in y_plus_basis(u.ambient, ukey, vkey).items():
                slot = acc.setdefault(exponent, {})
                for key, coef in row.items():
                    slot[key] = slot.get(key, 0) + c * coef
    out = {}
    for exponent, row in acc.items():
        elem = Element(u.ambient, row)
        if not elem.is_zero():
            out[exponent] = elem
    return out


def modes(u: Element, v: Element) -> dict:
    """All nonzero modes {a: u_a v}, reading u_a v off the coefficient of z^{-a-1}."""
    return {-exponent - 1: elem for exponent, elem in y_plus(u, v).items()}


def generic_mode(u: Element, a: int, v: Element) -> Element:
    """The single mode u_a v for a natural number a."""
    if a < 0:
        raise ValueError("mode index must be a natural number")
    return modes(u, v).get(a, Element.zero(u.ambient))


def weighted_mode(u: Element, m, v: Element):
    """Physics-style mode u(m)v = u_{wt(u)+m-1} v for weight-homogeneous u.

    m ranges over integers shifted by 1 - wt(u); the underlying generic index
    wt(u) + m - 1 must come out a natural number.
    """
    wt = u.weight()
    if wt is None:
        raise ValueError("weighted mode needs a weight-homogeneous, nonzero u")
    a = wt + m - 1
    if a.denominator != 1 or a < 0:
        raise ValueError(f"mode {m} of a weight-{wt} element has no generic index")
    return generic_mode(u, int(a), v)


class MatrixCarrier:
    """Adapter giving the matrix-symbol algebra the generic carrier interface."""

    def __init__(self, ambient: Ambient):
        self.ambient = ambient

    def modes(self, u, v):
        return modes(u, v)

    def partial(self, e):
        return e.partial()

    def parity(self, e):
        return e.parity()

    def zero(self):
        return Element.zero(self.ambient)


@dataclass
class CheckResult:
    """Outcome of an axiom sweep; counterexamples carry enough data to replay."""

    ok: bool = True
    checked: int = 0
    counterexamples: list = field(default_factory=list)

    def record(self, **info):
        self.ok = False
        if len(self.counterexamples) < 20:
            self.counterexamples.append(info)


def check_derivative_axiom(carrier, pairs, result: CheckResult | None = None) -> CheckResult:
    """Y+(du, z)v = d/dz-compatibility in mode form: (du)_b v = -b u_{b-1} v."""
    result = result or CheckResult()
    for u, v in pairs:
        lhs = carrier.modes(carrier.partial(u), v)
        rhs_src = carrier.modes(u, v)
        top = max(list(lhs) + [b + 1 for b in rhs_src], default=-1)
        for b in range(top + 1):
            left = lhs.get(b, carrier.zero())
            right = carrier.zero() if b == 0 else (-b) * rhs_src.get(b - 1, carrier.zero())
            result.checked += 1
            if left != right:
                result.record(axiom="derivative", u=u, v=v, mode=b,
                              lhs=left, rhs=right)
    return result


def check_skew_symmetry(carrier, pairs, result: CheckResult | None = None) -> CheckResult:
    """u_a v = (-1)^{|u||v|} sum_{b>=a} (-1)^{b+1} d^{b-a}(v_b u) / (b-a)!."""
    from math import factorial

    result = result or CheckResult()
    for u, v in pairs:
        sign = -1 if carrier.parity(u) * carrier.parity(v) % 2 else 1
        uv = carrier.modes(u, v)
        vu = carrier.modes(v, u)
        top = max(list(uv) + list(vu), default=-1)
        for a in range(top + 1):
            rhs = carrier.zero()
            for b in range(a, top + 1):
                if b not in vu:
                    continue
                term = vu[b]
                for _ in range(b - a):
                    term = carrier.partial(term)
                coef = Scalar(sign * (-1) ** (b + 1), factorial(b - a))
                rhs = rhs + coef * term
            lhs = uv.get(a, carrier.zero())
            result.checked += 1
            if lhs != rhs:
                result.record(axiom="skew", u=u, v=v, mode=a, lhs=lhs, rhs=rhs)
    return result


def check_jacobi(carrier, triples, max_a: int, max_b: int,
                 result: CheckResult | None = None) -> CheckResult:
    """u_a(v_b w) - (-1)^{|u||v|} v_b(u_a w) = sum_{c=0}^{a} C(a,c) (u_c v)_{a+b-c} w."""
    result = result or CheckResult()
    for u, v, w in triples:
        sign = -1 if carrier.parity(u) * carrier.parity(v) % 2 else 1
        uv = carrier.modes(u, v)
        uw = carrier.modes(u, w)
        vw = carrier.modes(v, w)
        uv_w = {c: carrier.modes(elem, w) for c, elem in uv.items()}
        for a in range(max_a + 1):
            ua_w = uw.get(a)
            for b in range(max_b + 1):
                lhs = carrier.zero()
                if b in vw:
                    lhs = lhs + carrier.modes(u, vw[b]).get(a, carrier.zero())
                if ua_w is not None:
                    lhs = lhs - sign * carrier.modes(v, ua_w).get(b, carrier.zero())
                rhs = carrier.zero()
                for c in range(a + 1):
                    if c in uv_w:
                        piece = uv_w[c].get(a + b - c)
                        if piece is not None:
                            rhs = rhs + binomial(a, c) * piece
                result.checked += 1
                if lhs != rhs:
                    result.record(axiom="jacobi", u=u, v=v, w=w,
                                  modes=(a, b), lhs=lhs, rhs=rhs)
    return result
