"""Type-A root datum conventions for GL_n, coweight orders, and parabolics.

Conventions are fixed once and for all:

* cocharacters and characters of the diagonal torus are integer n-tuples;
* the simple roots are alpha_i = e_i - e_{i+1} for i = 1, ..., n-1
  (1-based indices throughout), and alpha_i^vee is the same vector;
* the pairing is the dot product, so <lam, alpha_i> = lam_i - lam_{i+1};
* antidominant means weakly increasing, dominant weakly decreasing
  (the Borel is upper triangular).

Coweights and weights are plain integer tuples.  A standard parabolic is
recorded by its Levi block composition (n_1, ..., n_r); the corresponding
subset of simple roots is everything except the block boundaries.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations


def is_antidominant(v) -> bool:
    return all(v[i] <= v[i + 1] for i in range(len(v) - 1))


def is_dominant(v) -> bool:
    return all(v[i] >= v[i + 1] for i in range(len(v) - 1))


def pairing(lam, i: int) -> int:
    """<lam, alpha_i> = lam_i - lam_{i+1} for the i-th simple (co)root."""
    if not 1 <= i <= len(lam) - 1:
        raise ValueError(f"simple root index {i} out of range for n={len(lam)}")
    return lam[i - 1] - lam[i]


def add(v, w):
    return tuple(a + b for a, b in zip(v, w))


def simple_coroot(n: int, i: int):
    """alpha_i^vee = e_i - e_{i+1}."""
    if not 1 <= i <= n - 1:
        raise ValueError(f"simple root index {i} out of range for n={n}")
    return tuple(1 if j == i - 1 else -1 if j == i else 0 for j in range(n))


def fundamental_antidominant_coweight(n: int, i: int):
    """The antidominant coweight (-1,...,-1,0,...,0) with i entries -1.

    Satisfies <lam, alpha_j> = -delta_{ij}; its negative is minuscule.
    """
    if not 1 <= i <= n - 1:
        raise ValueError(f"simple root index {i} out of range for n={n}")
    return (-1,) * i + (0,) * (n - i)


def fundamental_weight(n: int, i: int):
    """omega_i = (1,...,1,0,...,0) with i ones; <omega_i, alpha_j^vee> = delta_ij."""
    if not 1 <= i <= n - 1:
        raise ValueError(f"simple root index {i} out of range for n={n}")
    return (1,) * i + (0,) * (n - i)


@dataclass(frozen=True)
class StandardParabolic:
    """A standard parabolic of GL_n, stored as a composition of n.

    The derived simple-root subset ``delta`` consists of all i in 1..n-1
    that are not block boundaries; composition <-> subset is a bijection.
    """

    composition: tuple

    def __post_init__(self):
        if not self.composition or any(c < 1 for c in self.composition):
            raise ValueError("composition parts must be positive")
        object.__setattr__(self, "composition", tuple(self.composition))

    @classmethod
    def full(cls, n: int) -> "StandardParabolic":
        return cls((n,))

    @classmethod
    def torus(cls, n: int) -> "StandardParabolic":
        return cls((1,) * n)

    @classmethod
    def from_delta(cls, n: int, subset) -> "StandardParabolic":
        subset = set(subset)
        if any(not 1 <= i <= n - 1 for i in subset):
            raise ValueError("simple root index out of range")
        boundaries = [i for i in range(1, n) if i not in subset]
        comp, prev = [], 0
        for b in boundaries + [n]:
            comp.append(b - prev)
            prev = b
        return cls(tuple(comp))

    @property
    def n(self) -> int:
        return sum(self.composition)

    @property
    def boundaries(self) -> tuple:
        """Partial sums n_1, n_1+n_2, ... excluding n itself."""
        out, acc = [], 0
        for c in self.composition[:-1]:
            acc += c
            out.append(acc)
        return tuple(out)

    @property
    def delta(self) -> frozenset:
        """Simple-root indices of the Levi (complement of the boundaries)."""
        bd = set(self.boundaries)
        return frozenset(i for i in range(1, self.n) if i not in bd)

    def blocks(self):
        """Ranges of 1-based coordinate indices, one per Levi block."""
        out, start = [], 1
        for c in self.composition:
            out.append(range(start, start + c))
            start += c
        return out

    def block_of(self, j: int) -> int:
        """0-based index of the block containing coordinate j (1-based)."""
        acc = 0
        for b, c in enumerate(self.composition):
            acc += c
            if j <= acc:
                return b
        raise ValueError(f"coordinate {j} out of range")

    def contains(self, other: "StandardParabolic") -> bool:
        """True iff ``other`` is a sub-Levi of self (Delta_other inside Delta_self)."""
        if self.n != other.n:
            raise ValueError("rank mismatch")
        return other.delta <= self.delta

    def __repr__(self):
        return f"P{self.composition}"


def all_parabolics(n: int):
    """All 2^(n-1) standard parabolics of GL_n, by decreasing Delta size."""
    out = []
    roots = list(range(1, n))
    for k in range(n - 1, -1, -1):
        for subset in combinations(roots, k):
            out.append(StandardParabolic.from_delta(n, subset))
    return tuple(out)


def leq_M(mu, lam, M: StandardParabolic) -> bool:
    """True iff lam - mu is a nonnegative integer combination of the simple
    coroots of M.

    Decided by partial sums p_i of lam - mu: these are the coroot
    coefficients, so all must be >= 0, the total must vanish, and p_i must
    vanish at every i outside Delta_M.
    """
    if len(mu) != len(lam):
        raise ValueError("length mismatch")
    if len(mu) != M.n:
        raise ValueError("rank mismatch with parabolic")
    delta = M.delta
    ps = 0
    for i in range(1, len(mu)):
        ps += lam[i - 1] - mu[i - 1]
        if ps < 0 or (ps > 0 and i not in delta):
            return False
    return ps + lam[-1] - mu[-1] == 0


@lru_cache(maxsize=None)
def _interval_above(mu, comp):
    M = StandardParabolic(comp)
    n = len(mu)
    lo, hi, total = mu[0], mu[-1], sum(mu)
    out = []

    def extend(prefix, last, remaining):
        k = n - len(prefix)
        if k == 0:
            if remaining == 0:
                lam = tuple(prefix)
                if leq_M(mu, lam, M):
                    out.append(lam)
            return
        # entries of any antidominant lam >= mu lie in [mu_1, mu_n]
        for v in range(last, hi + 1):
            rest = remaining - v
            if rest < (k - 1) * v:
                break
            if rest > (k - 1) * hi:
                continue
            extend(prefix + [v], v, rest)

    extend([], lo, total)
    return tuple(sorted(out))


def interval_above(mu, M: StandardParabolic):
    """All antidominant lam with lam >=_M mu.  Finite: such lam have entries
    in [mu_1, mu_n] and the same coordinate sum as mu."""
    if not is_antidominant(mu):
        raise ValueError(f"{mu} is not antidominant")
    return _interval_above(tuple(mu), M.composition)


def stab_levi(nu) -> StandardParabolic:
    """The Levi M with Delta_M = {alpha_i : <nu, alpha_i^vee> = 0}, so that
    W_M is the stabilizer of nu."""
    n = len(nu)
    return StandardParabolic.from_delta(
        n, [i for i in range(1, n) if pairing(nu, i) == 0])


def parabolics_with_levi_trace(M: StandardParabolic, Q: StandardParabolic):
    """All standard parabolics P' of GL_n with Delta_{P'} intersect Delta_M
    equal to Delta_Q, i.e. Delta_{P'} = Delta_Q union S over S inside the
    complement of Delta_M.  There are exactly 2^(#complement) of them."""
    if M.n != Q.n:
        raise ValueError("rank mismatch")
    if not Q.delta <= M.delta:
        raise ValueError("Q is not a parabolic of the Levi M")
    free = sorted(set(range(1, M.n)) - M.delta)
    out = []
    for k in range(len(free) + 1):
        for extra in combinations(free, k):
            out.append(StandardParabolic.from_delta(M.n, Q.delta | set(extra)))
    return tuple(sorted(out, key=lambda P: sorted(P.delta)))


@dataclass(frozen=True)
class WeylPerm:
    """A Weyl group element of GL_n: a permutation acting on coordinates.

    ``perm`` maps position i to perm[i] (0-based images).  Length is the
    inversion count.
    """

    perm: tuple

    @classmethod
    def identity(cls, n: int) -> "WeylPerm":
        return cls(tuple(range(n)))

    @classmethod
    def transposition(cls, n: int, i: int) -> "WeylPerm":
        """The simple reflection s_i swapping coordinates i, i+1 (1-based i)."""
        p = list(range(n))
        p[i - 1], p[i] = p[i], p[i - 1]
        return cls(tuple(p))

    def act(self, v):
        """Permute coordinates: (w v)[w(i)] = v[i]."""
        out = [0] * len(v)
        for i, wi in enumerate(self.perm):
            out[wi] = v[i]
        return tuple(out)

    def compose(self, other: "WeylPerm") -> "WeylPerm":
        """self after other."""
        return WeylPerm(tuple(self.perm[j] for j in other.perm))

    def length(self) -> int:
        p = self.perm
        return sum(1 for i in range(len(p)) for j in range(i + 1, len(p)) if p[i] > p[j])
