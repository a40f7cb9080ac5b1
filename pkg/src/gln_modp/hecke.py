"""The spherical mod-p Hecke algebra of a weight, as the monoid algebra on
antidominant coweights, in its two bases.

For a weight class V with stabilizer Levi M, the algebra has bases {T_lam}
and {tau_lam} indexed by antidominant coweights.  The change of basis is
triangular with respect to the restricted coroot order >=_M:

    tau_mu  =  sum of T_lam over antidominant lam >=_M mu,

inverted by the Moebius function of the subposet of antidominant coweights
under >=_M.  In the tau basis multiplication is the monoid rule
tau_a tau_b = tau_{a+b}.  Coefficients live in a configurable finite field
F_{p^m}: the basis-change entries are integers mod p, but classification
scalars need roots of unity, so one scalar type serves both.
"""

from __future__ import annotations

from functools import lru_cache

from .finite_field import FqElem, FqField
from .root_datum import (
    StandardParabolic, add, fundamental_antidominant_coweight, interval_above,
    is_antidominant, leq_M, pairing, simple_coroot,
)
from .weights import WeightClass

Scalar = FqElem


class HeckeElement:
    """A finite formal sum over antidominant coweights.

    The weight class fixes the Levi M used by the basis change (it is always
    the stabilizer Levi of the weight, never passed separately).  No zero
    coefficients are stored.
    """

    __slots__ = ("weight", "basis", "terms", "field")

    def __init__(self, weight: WeightClass, basis: str, terms, field: FqField):
        if basis not in ("T", "tau"):
            raise ValueError(f"unknown basis tag {basis!r}")
        if field.p != weight.p:
            raise ValueError("scalar field characteristic differs from the weight's p")
        clean = {}
        for lam, c in dict(terms).items():
            lam = tuple(lam)
            if len(lam) != weight.n:
                raise ValueError("coweight rank mismatch")
            if not is_antidominant(lam):
                raise ValueError(f"{lam} is not antidominant")
            c = field(c)
            if c:
                clean[lam] = c
        self.weight = weight
        self.basis = basis
        self.terms = clean
        self.field = field

    def __eq__(self, other):
        return (isinstance(other, HeckeElement)
                and self.weight == other.weight and self.basis == other.basis
                and self.field == other.field and self.terms == other.terms)

    def __repr__(self):
        parts = " + ".join(f"({c})*{self.basis}_{lam}" for lam, c in sorted(self.terms.items()))
        return parts or "0"

    def map_terms(self, fn):
        out = {}
        for lam, c in self.terms.items():
            for mu, d in fn(lam).items():
                acc = out.get(mu, self.field.zero) + c * d
                if acc:
                    out[mu] = acc
                else:
                    out.pop(mu, None)
        return out


def basis_element(weight: WeightClass, basis: str, lam, field: FqField) -> HeckeElement:
    return HeckeElement(weight, basis, {tuple(lam): field.one}, field)


def identity_element(weight: WeightClass, field: FqField) -> HeckeElement:
    return basis_element(weight, "T", (0,) * weight.n, field)


@lru_cache(maxsize=None)
def _moebius_int(mu, lam, comp) -> int:
    """Moebius function of the poset of antidominant coweights under >=_M.

    Not translation invariant (the antidominance cut depends on position),
    so the memo key is the full pair.
    """
    M = StandardParabolic(comp)
    if mu == lam:
        return 1
    total = 0
    for xi in interval_above(mu, M):
        if xi != lam and leq_M(xi, lam, M):
            total += _moebius_int(mu, xi, comp)
    return -total


def moebius(mu, lam, M: StandardParabolic, field: FqField) -> Scalar:
    """Moebius value mu(mu, lam) for the restricted order, reduced into the
    scalar field.  Requires mu <=_M lam."""
    mu, lam = tuple(mu), tuple(lam)
    if not leq_M(mu, lam, M):
        raise ValueError(f"{mu} is not <=_M {lam}")
    return field(_moebius_int(mu, lam, M.composition))


def satake_T_to_tau(x: HeckeElement) -> HeckeElement:
    """Expand in the tau basis: T_lam goes to the signed Moebius sum over the
    interval above lam.  Unitriangular with leading coefficient 1 at lam."""
    if x.basis != "T":
        raise ValueError("element is not in the T basis")
    M = x.weight.levi
    comp = M.composition

    def expand(lam):
        return {mu: x.field(_moebius_int(lam, mu, comp))
                for mu in interval_above(lam, M)}

    return HeckeElement(x.weight, "tau", x.map_terms(expand), x.field)


def satake_tau_to_T(x: HeckeElement) -> HeckeElement:
    """Expand in the T basis: tau_mu is the plain sum of T_lam over the
    interval above mu."""
    if x.basis != "tau":
        raise ValueError("element is not in the tau basis")
    M = x.weight.levi

    def expand(mu):
        return {lam: x.field.one for lam in interval_above(mu, M)}

    return HeckeElement(x.weight, "T", x.map_terms(expand), x.field)


def multiply(a: HeckeElement, b: HeckeElement) -> HeckeElement:
    """Product via the tau basis (tau_a tau_b = tau_{a+b}); the result is
    returned in the basis of the first factor."""
    if a.weight != b.weight or a.field != b.field:
        raise ValueError("operands live in different Hecke algebras")
    ta = satake_T_to_tau(a) if a.basis == "T" else a
    tb = satake_T_to_tau(b) if b.basis == "T" else b
    out = {}
    for lam, c in ta.terms.items():
        for mu, d in tb.terms.items():
            key = add(lam, mu)
            acc = out.get(key, a.field.zero) + c * d
            if acc:
                out[key] = acc
            else:
                out.pop(key, None)
    prod = HeckeElement(a.weight, "tau", out, a.field)
    return satake_tau_to_T(prod) if a.basis == "T" else prod


def double_support_claim(M: StandardParabolic, i: int, box: int) -> bool:
    """Exhaustively check, for antidominant mu with entries in [-box, box],
    that mu >=_M 2*lam iff mu = 2*lam or mu >=_M 2*lam + alpha_i^vee, where
    lam is the i-th fundamental antidominant coweight.

    Together with the basis change this is why the tau expansion of T_{2 lam}
    has exactly two terms with opposite signs.  Vectors whose coordinate sum
    differs from sum(2*lam) satisfy both sides vacuously and are skipped.
    """
    n = M.n
    if i not in M.delta:
        raise ValueError(f"alpha_{i} is not a simple root of the Levi {M}")
    lam2 = tuple(2 * v for v in fundamental_antidominant_coweight(n, i))
    target = add(lam2, simple_coroot(n, i))
    want = sum(lam2)

    def scan(prefix, last, remaining):
        k = n - len(prefix)
        if k == 0:
            if remaining == 0:
                mu = tuple(prefix)
                lhs = leq_M(lam2, mu, M)
                rhs = mu == lam2 or leq_M(target, mu, M)
                return lhs == rhs
            return True
        for v in range(last, box + 1):
            rest = remaining - v
            if rest < (k - 1) * v:
                break
            if rest > (k - 1) * box:
                continue
            if not scan(prefix + [v], v, rest):
                return False
        return True

    return scan([], -box, want)


def bimodule_support(V1: WeightClass, V2: WeightClass):
    """Maximal Satake support coweight of operators between the compact
    inductions of two weights.

    Returns None when the highest weights differ somewhere mod q-1 (no
    nonzero operators); otherwise the antidominant lam_0 with
    <lam_0, alpha_i> = 0 where the pairings of nu_1 - nu_2 vanish and -1
    elsewhere, normalized to end in 0.
    """
    if V1.n != V2.n or V1.q != V2.q:
        raise ValueError("weights have different rank or q")
    q = V1.q
    d = tuple(a - b for a, b in zip(V1.nu, V2.nu))
    if any(x % (q - 1) for x in d):
        return None
    out = [0]
    for i in range(V1.n - 1, 0, -1):
        step = 0 if d[i - 1] - d[i] == 0 else -1
        out.append(out[-1] + step)
    return tuple(reversed(out))


def change_of_weight_support(V: WeightClass, i: int):
    """Satake support pair (lam, lam + alpha_i^vee) of the canonical operator
    from V to its companion weight; defined when <nu, alpha_i^vee> = 0."""
    if pairing(V.nu, i) != 0:
        raise ValueError(f"<nu, alpha_{i}^vee> != 0")
    lam = fundamental_antidominant_coweight(V.n, i)
    return lam, add(lam, simple_coroot(V.n, i))
