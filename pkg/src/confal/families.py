"""The named subalgebra families of the matrix-symbol construction.

Families come in three flavors:

* plain matrix families over the trivially graded ambient: the odd-weight
  family on the [1,1] corner, and the ladder of even families on the [0,0]
  corner cut by a lower bound on the second exponent;
* fixed-point families of an involutive anti-automorphism sigma, spanned by
  u_{[i,j]}(m,n) + (-1)^{ij} sigma(u)_{[j,i]}(n,m);
* super families over a split-graded ambient, where each matrix unit lives in
  the block pair aligned with its position relative to the split.

Every involution used here acts on matrix units as a signed permutation:
sigma(E[p,q]) = s_p s_q E[tau(q), tau(p)].  The transpose is the identity
permutation with all signs +1; the symplectic involutions conjugate the
transpose by a block matrix of 2x2 rotation pattern, one per even-sized block.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .elements import Ambient, BasisKey, Element, weight
from .engine import CheckResult, modes
from .linalg import Echelon


@dataclass(frozen=True)
class Involution:
    """Signed-permutation involutive anti-automorphism of the matrix algebra."""

    perm: tuple[int, ...]   # 1-indexed images tau(1), ..., tau(k)
    signs: tuple[int, ...]  # entries +-1

    def image_unit(self, p: int, q: int) -> tuple[int, int, int]:
        """(coefficient, row, column) of sigma(E[p,q])."""
        return (self.signs[p - 1] * self.signs[q - 1],
                self.perm[q - 1], self.perm[p - 1])


def transpose_involution(k: int) -> Involution:
    return Involution(tuple(range(1, k + 1)), (1,) * k)


def symplectic_involution(block_sizes: tuple[int, ...]) -> Involution:
    """Involution A -> S A^t S^{-1} for S with one [[0, I], [-I, 0]] cell per block."""
    perm, signs = [], []
    for size in block_sizes:
        if size % 2:
            raise ValueError("symplectic blocks need even size")
        half = size // 2
        base = len(perm)
        for a in range(1, half + 1):
            perm.append(base + half + a)
            signs.append(-1)
        for a in range(1, half + 1):
            perm.append(base + a)
            signs.append(1)
    return Involution(tuple(perm), tuple(signs))


@dataclass(frozen=True)
class FamilySpec:
    """Identity of a family: flavor, size parameters, and exponent cutoff."""

    name: str
    ambient: Ambient
    sector: str                      # "odd-diag", "even-diag", or "super"
    n_min: int = 0                   # lower bound on the second exponent
    involution: Involution | None = None


class Family:
    """A concrete family with weight-graded basis enumeration and membership."""

    def __init__(self, spec: FamilySpec):
        self.spec = spec
        self.ambient = spec.ambient

    @property
    def name(self) -> str:
        return self.spec.name

    def allowed_key(self, key: BasisKey) -> bool:
        """Membership of a bare symbol in the ambient family, ignoring sigma."""
        spec = self.spec
        if key.n < spec.n_min:
            return False
        if spec.sector == "odd-diag":
            return (key.i, key.j) == (1, 1)
        if spec.sector == "even-diag":
            return (key.i, key.j) == (0, 0)
        k1 = self.ambient.split[0]
        left_p, left_q = key.p <= k1, key.q <= k1
        if left_p and left_q:
            return (key.i, key.j) == (0, 0)
        if not left_p and not left_q:
            return (key.i, key.j) == (1, 1)
        if left_p:
            return (key.i, key.j) == (0, 1)
        return (key.i, key.j) == (1, 0)

    def key_pair(self, key: BasisKey) -> tuple[BasisKey, int]:
        """Partner symbol and coefficient under the fixed-point pairing."""
        sigma = self.spec.involution
        coef, row, col = sigma.image_unit(key.p, key.q)
        if key.i * key.j:
            coef = -coef
        return BasisKey(key.j, key.i, row, col, key.n, key.m), coef

    def min_weight(self) -> Fraction:
        spec = self.spec
        if spec.sector == "odd-diag":
            return Fraction(spec.n_min + 1)
        if spec.sector == "even-diag":
            return Fraction(spec.n_min + 2)
        return Fraction(spec.n_min + 1)

    def weights_up_to(self, top) -> list[Fraction]:
        """Weights with nonempty graded piece, from the bottom up to top."""
        out = []
        w = self.min_weight()
        while w <= top:
            if self.basis_at_weight(w):
                out.append(w)
            w += Fraction(1, 2)
        return out

    def _keys_at_weight(self, w: Fraction) -> list[BasisKey]:
        keys = []
        k = self.ambient.k
        for i in (0, 1):
            for j in (0, 1):
                total = w - 2 + Fraction(i + j, 2)
                if total.denominator != 1 or total < 0:
                    continue
                total = int(total)
                for p in range(1, k + 1):
                    for q in range(1, k + 1):
                        if (i + j) % 2 != self.ambient.unit_parity(p, q):
                            continue
                        for n in range(self.spec.n_min, total + 1):
                            key = BasisKey(i, j, p, q, total - n, n)
                            if self.allowed_key(key):
                                keys.append(key)
        return keys

    def basis_at_weight(self, w) -> list[Element]:
        return self._basis_cached(Fraction(w))

    @lru_cache(maxsize=None)
    def _basis_cached(self, w: Fraction) -> list[Element]:
        keys = self._keys_at_weight(w)
        if self.spec.involution is None:
            return [Element(self.ambient, {key: 1}) for key in sorted(keys)]
        out = []
        for key in sorted(keys):
            partner, coef = self.key_pair(key)
            if partner == key:
                if coef == 1:
                    out.append(Element(self.ambient, {key: 2}))
                # coef == -1 pairs the symbol against itself with a minus: zero
            elif key < partner:
                out.append(Element(self.ambient, {key: 1, partner: coef}))
        return out

    def dim_at_weight(self, w) -> int:
        return len(self.basis_at_weight(w))

    def echelon_up_to(self, top) -> Echelon:
        ech = Echelon()
        for w in self.weights_up_to(top):
            for elem in self.basis_at_weight(w):
                ech.insert(elem.terms)
        return ech

    def contains(self, elem: Element) -> bool:
        if elem.is_zero():
            return True
        top = max(weight(key) for key in elem.terms)
        return self.echelon_up_to(top).contains(elem.terms)

    def __hash__(self):
        return hash(self.spec)

    def __eq__(self, other):
        return isinstance(other, Family) and self.spec == other.spec


def build_family(name: str, k: int | None = None,
                 k1: int | None = None, k2: int | None = None) -> Family:
    """Construct a family from its selector name and size parameters.

    Selectors: "rkk:L" (L >= 1), "star1", "star2", "dagger1", "dagger2",
    "super:L" (L >= 0), "superstar", "superdagger".  The rkk/star/dagger
    families take k; the super families take k1 and k2.  Dagger families need
    k even; superdagger needs k1 and k2 even.
    """
    base, _, arg = name.partition(":")
    if base == "rkk":
        level = int(arg)
        if k is None or level < 1:
            raise ValueError("rkk:L needs k and L >= 1")
        amb = Ambient(k)
        if level == 1:
            return Family(FamilySpec(name, amb, "odd-diag"))
        return Family(FamilySpec(name, amb, "even-diag", n_min=level - 2))
    if base in ("star1", "star2", "dagger1", "dagger2"):
        if k is None:
            raise ValueError(f"{base} needs k")
        amb = Ambient(k)
        if base.startswith("star"):
            sigma = transpose_involution(k)
        else:
            sigma = symplectic_involution((k,))
        sector = "odd-diag" if base.endswith("1") else "even-diag"
        return Family(FamilySpec(base, amb, sector, involution=sigma))
    if base == "super":
        level = int(arg)
        if k1 is None or k2 is None or level < 0:
            raise ValueError("super:L needs k1, k2 and L >= 0")
        amb = Ambient(k1 + k2, (k1, k2))
        return Family(FamilySpec(name, amb, "super", n_min=level))
    if base in ("superstar", "superdagger"):
        if k1 is None or k2 is None:
            raise ValueError(f"{base} needs k1 and k2")
        amb = Ambient(k1 + k2, (k1, k2))
        if base == "superstar":
            sigma = transpose_involution(k1 + k2)
        else:
            sigma = symplectic_involution((k1, k2))
        return Family(FamilySpec(base, amb, "super", involution=sigma))
    raise ValueError(f"unknown family selector: {name}")


def closure_check(family: Family, top) -> CheckResult:
    """Verify the family basis is closed under all modes up to a weight cutoff."""
    result = CheckResult()
    basis = [e for w in family.weights_up_to(top) for e in family.basis_at_weight(w)]
    for u in basis:
        for v in basis:
            for a, value in modes(u, v).items():
                result.checked += 1
                if not family.contains(value):
                    result.record(family=family.name, u=u, v=v, mode=a, value=value)
    return result


def boson_fermion_correspondences(ambient: Ambient):
    """The two weight-preserving maps from the even-corner family with cutoff 0
    onto the exponent-positive halves of the odd-corner family."""

    def to_second_raised(elem: Element) -> Element:
        out = {}
        for key, coef in elem.terms.items():
            out[BasisKey(1, 1, key.p, key.q, key.m, key.n + 1)] = -(key.n + 1) * coef
        return Element(ambient, out)

    def to_first_raised(elem: Element) -> Element:
        out = {}
        for key, coef in elem.terms.items():
            out[BasisKey(1, 1, key.p, key.q, key.m + 1, key.n)] = (key.m + 1) * coef
        return Element(ambient, out)

    return to_second_raised, to_first_raised


def boson_fermion_iso_check(k: int, top) -> CheckResult:
    """Check both correspondences intertwine the derivation and every mode."""
    ambient = Ambient(k)
    result = CheckResult()
    even = build_family("rkk:2", k=k)
    basis = [e for w in even.weights_up_to(top) for e in even.basis_at_weight(w)]
    for phi in boson_fermion_correspondences(ambient):
        for u in basis:
            result.checked += 1
            if phi(u.partial()) != phi(u).partial():
                result.record(map=phi.__name__, u=u, relation="partial")
            for v in basis:
                image_modes = modes(phi(u), phi(v))
                source_modes = modes(u, v)
                for a in set(image_modes) | set(source_modes):
                    result.checked += 1
                    lhs = phi(source_modes.get(a, Element.zero(ambient)))
                    rhs = image_modes.get(a, Element.zero(ambient))
                    if lhs != rhs:
                        result.record(map=phi.__name__, u=u, v=v, mode=a,
                                      lhs=lhs, rhs=rhs)
    return result
