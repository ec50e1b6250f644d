"""Two classical fixture algebras with hand-derivable mode tables.

These are independent of the matrix-symbol engine and exercise the same axiom
checkers through the generic carrier interface:

* the current-style algebra of a finite-dimensional Lie algebra: elements are
  x (x) t^{-n} with n >= 1, the depth-(m+1) element acts with mode table
  u_a (y (x) t^{-n}) = (-1)^m C(a, m) [x, y] (x) t^{a-m-n} for m <= a <= m+n-1;
* the centerless chiral algebra of one even weight-2 field L(-n-2), n >= 0,
  with u_a v = (-1)^m C(a, m) (j+1-n) L(j-n-3) at j = a - m, 0 <= j <= n+1.

Both mode tables also arise as single-pole expansions of a two-variable
generating function, and those expansions are checked coefficient by
coefficient here as an extra cross-validation.
"""

from .scalars import Scalar, binomial


class Vec:
    """Sparse vector over Q keyed by hashable symbols; fixture element type."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = {}
        if terms:
            for key, coef in terms.items():
                c = Scalar(coef)
                if c:
                    self.terms[key] = c

    def is_zero(self):
        return not self.terms

    def __add__(self, other):
        merged = dict(self.terms)
        for key, coef in other.terms.items():
            acc = merged.get(key, 0) + coef
            if acc:
                merged[key] = acc
            else:
                merged.pop(key, None)
        out = Vec.__new__(Vec)
        out.terms = merged
        return out

    def __neg__(self):
        out = Vec.__new__(Vec)
        out.terms = {key: -coef for key, coef in self.terms.items()}
        return out

    def __sub__(self, other):
        return self + (-other)

    def __rmul__(self, c):
        c = Scalar(c)
        out = Vec.__new__(Vec)
        out.terms = {key: c * coef for key, coef in self.terms.items()} if c else {}
        return out

    def __eq__(self, other):
        return isinstance(other, Vec) and self.terms == other.terms

    def __repr__(self):
        return f"<Vec {self.terms}>"


SL2_BRACKET = {
    ("h", "e"): {"e": 2}, ("e", "h"): {"e": -2},
    ("h", "f"): {"f": -2}, ("f", "h"): {"f": 2},
    ("e", "f"): {"h": 1}, ("f", "e"): {"h": -1},
}


class CurrentCarrier:
    """Carrier for the polynomial-current algebra of a Lie algebra.

    Keys are (generator, depth) with depth >= 1 standing for x (x) t^{-depth}.
    """

    def __init__(self, bracket=SL2_BRACKET):
        self.bracket = bracket

    def element(self, gen, depth, coef=1):
        return Vec({(gen, depth): coef})

    def zero(self):
        return Vec()

    def parity(self, e):
        return 0

    def partial(self, e):
        return Vec({(gen, depth + 1): depth * coef
                    for (gen, depth), coef in e.terms.items()})

    def modes(self, u, v):
        out: dict[int, Vec] = {}
        for (x, du), cu in u.terms.items():
            m = du - 1
            for (y, n), cv in v.terms.items():
                lie = self.bracket.get((x, y))
                if not lie:
                    continue
                for a in range(m, m + n):
                    coef = (-1) ** m * binomial(a, m) * cu * cv
                    if not coef:
                        continue
                    add = Vec({(z, m + n - a): coef * cz for z, cz in lie.items()})
                    out[a] = out.get(a, Vec()) + add
        return {a: e for a, e in out.items() if not e.is_zero()}


class ChiralCarrier:
    """Carrier for the centerless weight-2 chiral algebra; key n means L(-n-2)."""

    def element(self, n, coef=1):
        return Vec({n: coef})

    def zero(self):
        return Vec()

    def parity(self, e):
        return 0

    def partial(self, e):
        return Vec({n + 1: (n + 1) * coef for n, coef in e.terms.items()})

    def modes(self, u, v):
        from math import factorial

        out: dict[int, Vec] = {}
        for m, cu in u.terms.items():
            for n, cv in v.terms.items():
                for j in range(n + 2):
                    shape = binomial(n, j) if j <= n else 0
                    if j >= 1:
                        shape += 2 * binomial(n, j - 1)
                    coef = Scalar((-1) ** m * shape * factorial(j + m)
                                  * factorial(n + 1 - j),
                                  factorial(m) * factorial(n)) * cu * cv
                    if not coef:
                        continue
                    out[j + m] = out.get(j + m, Vec()) + Vec({n + 1 - j: coef})
        return {a: e for a, e in out.items() if not e.is_zero()}


def current_generating_check(carrier: CurrentCarrier, max_depth: int):
    """The current mode table against its single-pole generating expansion.

    The action of x (x) t^{-m-1} on y (x) t^{-n-1} is the x^m y^n coefficient
    of [x,y][y-variable] / (z + x - y); expanding the geometric series gives
    sum over j + s = n of C(-s-1, m) [x,y] (x) t^{-j-1} z^{-s-1-m}.
    """
    from .engine import CheckResult

    result = CheckResult()
    gens = sorted({g for pair in carrier.bracket for g in pair})
    for x in gens:
        for y in gens:
            lie = carrier.bracket.get((x, y), {})
            for m in range(max_depth):
                for n in range(max_depth):
                    u = carrier.element(x, m + 1)
                    v = carrier.element(y, n + 1)
                    got = carrier.modes(u, v)
                    expect: dict[int, Vec] = {}
                    for j in range(n + 1):
                        s = n - j
                        coef = binomial(-s - 1, m)
                        if not coef:
                            continue
                        a = s + m   # z-exponent -s-1-m = -a-1
                        add = Vec({(g, j + 1): coef * c for g, c in lie.items()})
                        expect[a] = expect.get(a, Vec()) + add
                    expect = {a: e for a, e in expect.items() if not e.is_zero()}
                    result.checked += 1
                    if got != expect:
                        result.record(u=(x, m + 1), v=(y, n + 1),
                                      got=got, expected=expect)
    return result


def chiral_generating_check(carrier: ChiralCarrier, max_depth: int):
    """The chiral mode table against its two-pole generating expansion.

    The x^m y^n coefficient of the generating function has a first-order pole
    contributing (j+1) L(-j-3) C(-s-1, m) z^{-s-1-m} and a second-order pole
    contributing 2 (s+1) L(-j-2) C(-s-2, m) z^{-s-2-m}, both summed over
    j + s = n.
    """
    from .engine import CheckResult

    result = CheckResult()
    for m in range(max_depth):
        for n in range(max_depth):
            u = carrier.element(m)
            v = carrier.element(n)
            got = carrier.modes(u, v)
            expect: dict[int, Vec] = {}
            for j in range(n + 1):
                s = n - j
                c1 = (j + 1) * binomial(-s - 1, m)
                if c1:
                    a = s + m
                    expect[a] = expect.get(a, Vec()) + Vec({j + 1: c1})
                c2 = 2 * (s + 1) * binomial(-s - 2, m)
                if c2:
                    a = s + 1 + m
                    expect[a] = expect.get(a, Vec()) + Vec({j: c2})
            expect = {a: e for a, e in expect.items() if not e.is_zero()}
            result.checked += 1
            if got != expect:
                result.record(u=m, v=n, got=got, expected=expect)
    return result


def axiom_fixture_run(max_depth: int = 4):
    """Run all three axiom sweeps over both fixtures up to a depth cutoff."""
    from itertools import product

    from .engine import (check_derivative_axiom, check_jacobi,
                         check_skew_symmetry)

    results = {}

    current = CurrentCarrier()
    gens = sorted({g for pair in current.bracket for g in pair})
    celems = [current.element(g, d) for g in gens for d in range(1, max_depth + 1)]
    pairs = list(product(celems, celems))
    triples = list(product(celems, celems, celems))
    results["current-derivative"] = check_derivative_axiom(current, pairs)
    results["current-skew"] = check_skew_symmetry(current, pairs)
    results["current-jacobi"] = check_jacobi(current, triples, max_depth, max_depth)
    results["current-generating"] = current_generating_check(current, max_depth)

    chiral = ChiralCarrier()
    velems = [chiral.element(n) for n in range(max_depth)]
    pairs = list(product(velems, velems))
    triples = list(product(velems, velems, velems))
    results["chiral-derivative"] = check_derivative_axiom(chiral, pairs)
    results["chiral-skew"] = check_skew_symmetry(chiral, pairs)
    results["chiral-jacobi"] = check_jacobi(chiral, triples, max_depth, max_depth)
    results["chiral-generating"] = chiral_generating_check(chiral, max_depth)

    return results
