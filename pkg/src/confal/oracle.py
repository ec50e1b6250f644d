"""Independent free-field model for the even sector of the matrix construction.

A pair of dual oscillator families s+_i, s-_j acts on a bosonic Fock space:
[s+_i(a), s-_j(b)] = a d_{ij} d_{a+b,0}, nonnegative modes kill the vacuum.
A symbol E[p,q]{0,0}(m,n) corresponds to the quadratic state
s+_p(-m-1) s-_q(-n-1) applied to the vacuum, and the mode action of the
normally ordered quadratic field is computed here from first principles,
without the closed structure-constant formula.  Agreement of the two mode
tables (up to vacuum multiples, which the symbol algebra quotients away) is an
end-to-end witness for the engine.
"""

from .elements import Ambient, BasisKey, Element
from .engine import modes
from .scalars import Scalar, binomial

# an oscillator is (species, index, level): species +1/-1 for s+/s-,
# level l >= 1 meaning the creation mode s(-l)
Osc = tuple[int, int, int]
# a Fock state maps sorted creation-monomials (tuples of Osc) to coefficients
FockState = dict[tuple, "Scalar"]


def _add(state: FockState, mon: tuple, coef) -> None:
    acc = state.get(mon, 0) + coef
    if acc:
        state[mon] = acc
    else:
        state.pop(mon, None)


def apply_oscillator(state: FockState, species: int, index: int, mode: int) -> FockState:
    """Act with s_index^{species}(mode) on a Fock state."""
    out: FockState = {}
    if mode == 0:
        return out
    if mode < 0:
        op = (species, index, -mode)
        for mon, coef in state.items():
            _add(out, tuple(sorted(mon + (op,))), coef)
        return out
    for mon, coef in state.items():
        for pos, (sp, idx, level) in enumerate(mon):
            # the pairing couples opposite species with equal index
            if level == mode and idx == index and sp != species:
                _add(out, mon[:pos] + mon[pos + 1:], mode * coef)
    return out


def quadratic_state(p: int, m: int, q: int, n: int) -> FockState:
    """The state s+_p(-m-1) s-_q(-n-1) |vac>."""
    mon = tuple(sorted(((1, p, m + 1), (-1, q, n + 1))))
    return {mon: Scalar(1)}


def quadratic_mode_action(p: int, m: int, q: int, n: int, k: int,
                          state: FockState) -> FockState:
    """Mode k of the normally ordered field built from s+_p(-m-1) s-_q(-n-1).

    Expanded over contractions with the state; the oscillator acting first is
    always a nonnegative mode, so the sum is bounded by the deepest level
    present in the state.
    """
    out: FockState = {}
    top = max((level for mon in state for _, _, level in mon), default=0)
    for j in range(1, top + 1):
        c1 = binomial(-j - 1, n) * binomial(j + m + n - k, m)
        if c1:
            mid = apply_oscillator(state, -1, q, j)
            done = apply_oscillator(mid, 1, p, k - m - n - j - 1)
            for mon, coef in done.items():
                _add(out, mon, c1 * coef)
        c2 = binomial(-j - 1, m) * binomial(j + m + n - k, n)
        if c2:
            mid = apply_oscillator(state, 1, p, j)
            done = apply_oscillator(mid, -1, q, k - m - n - j - 1)
            for mon, coef in done.items():
                _add(out, mon, c2 * coef)
    return out


def oscillator_partial(state: FockState) -> FockState:
    """The derivation s(-l) -> l s(-l-1) applied across each monomial."""
    out: FockState = {}
    for mon, coef in state.items():
        for pos, (sp, idx, level) in enumerate(mon):
            deeper = mon[:pos] + ((sp, idx, level + 1),) + mon[pos + 1:]
            _add(out, tuple(sorted(deeper)), level * coef)
    return out


def state_to_element(ambient: Ambient, state: FockState):
    """Split a quadratic Fock state into (symbol element, vacuum coefficient)."""
    terms = {}
    vacuum = Scalar(0)
    for mon, coef in state.items():
        if not mon:
            vacuum += coef
            continue
        if len(mon) != 2:
            raise ValueError("state is not quadratic")
        (s1, i1, l1), (s2, i2, l2) = mon
        if s1 == s2:
            raise ValueError("state leaves the image of the symbol algebra")
        plus = (i1, l1) if s1 == 1 else (i2, l2)
        minus = (i2, l2) if s1 == 1 else (i1, l1)
        key = BasisKey(0, 0, plus[0], minus[0], plus[1] - 1, minus[1] - 1)
        terms[key] = terms.get(key, 0) + coef
    return Element(ambient, terms), vacuum


def crosscheck_even_sector(k: int, max_exp: int) -> "CrosscheckReport":
    """Compare every engine mode table in the even sector with the field model.

    Runs over all symbol pairs with unit indices and exponents up to the given
    bounds; any mismatch (beyond a vacuum multiple) is a counterexample.
    """
    ambient = Ambient(k)
    report = CrosscheckReport()
    symbols = [
        (p, q, m, n)
        for p in range(1, k + 1) for q in range(1, k + 1)
        for m in range(max_exp + 1) for n in range(max_exp + 1)
    ]
    for a, b, m1, m2 in symbols:
        u = Element.basis(ambient, a, b, 0, 0, m1, m2)
        for c, d, n1, n2 in symbols:
            v = Element.basis(ambient, c, d, 0, 0, n1, n2)
            engine_modes = modes(u, v)
            state = quadratic_state(c, n1, d, n2)
            top = max(list(engine_modes), default=-1) + m1 + m2 + n1 + n2 + 4
            for mode in range(top + 1):
                image = quadratic_mode_action(a, m1, b, m2, mode, state)
                oracle_elem, vacuum = state_to_element(ambient, image)
                if vacuum:
                    report.vacuum_terms += 1
                engine_elem = engine_modes.get(mode, Element.zero(ambient))
                report.checked += 1
                if engine_elem != oracle_elem:
                    report.ok = False
                    if len(report.counterexamples) < 20:
                        report.counterexamples.append({
                            "u": u.render(), "v": v.render(), "mode": mode,
                            "engine": engine_elem.render(),
                            "oracle": oracle_elem.render(),
                        })
    return report


def oracle_partial_check(k: int, max_exp: int) -> "CrosscheckReport":
    """Check that the symbol derivation matches the field-side derivation."""
    ambient = Ambient(k)
    report = CrosscheckReport()
    for p in range(1, k + 1):
        for q in range(1, k + 1):
            for m in range(max_exp + 1):
                for n in range(max_exp + 1):
                    u = Element.basis(ambient, p, q, 0, 0, m, n)
                    engine_side = u.partial()
                    oracle_side, vacuum = state_to_element(
                        ambient, oscillator_partial(quadratic_state(p, m, q, n)))
                    report.checked += 1
                    if vacuum or engine_side != oracle_side:
                        report.ok = False
                        report.counterexamples.append({
                            "u": u.render(),
                            "engine": engine_side.render(),
                            "oracle": oracle_side.render(),
                        })
    return report


class CrosscheckReport:
    """Tally of a field-model comparison run."""

    def __init__(self):
        self.ok = True
        self.checked = 0
        self.vacuum_terms = 0
        self.counterexamples = []

    def as_dict(self) -> dict:
        return {
            "ok": self.ok,
            "checked": self.checked,
            "vacuum_terms": self.vacuum_terms,
            "counterexamples": self.counterexamples,
        }
