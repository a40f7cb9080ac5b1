"""The extended affine 0-Hecke algebra of type A at characteristic p.

Elements of the extended affine symmetric group are held in window notation:
an integer tuple (f(1), ..., f(n)) with pairwise distinct residues mod n,
extended by f(i+n) = f(i) + n.  The rotation generator Pi has window
(2, 3, ..., n+1); the translation by a coweight lam has window (i + n*lam_i).
The group is taken modulo the central element Pi^n, whose image in the
algebra is a configurable scalar zeta (default 1, the value forced on a
vector with trivial central character); multiplications count how often
they wrap through Pi^n so the scalar can be applied.

The group product is composition in diagram order: (x*y) applies x first.
With this convention the defining relations hold literally:

    S_i^2 = -S_i,  S_i S_j = S_j S_i (|i-j| > 1),
    S_k S_{k+1} S_k = S_{k+1} S_k S_{k+1},  S_k Pi = Pi S_{k+1},

and the basis multiplication closes with a single signed term,
T_w T_{w'} = (-1)^(l(w)+l(w')-l(w*w')) T_{w*w'}, where * is the Demazure
(absorbing) product computed letter by letter over a reduced word.

Length is the affine inversion count

    l(f) = sum over a<b of  max(0, ceil((f(a)-f(b))/n))
                          + max(0, ceil((f(b)-f(a))/n) - 1),

both wrapped and unwrapped inversion families.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from functools import lru_cache

from .finite_field import FqElem, FqField


@dataclass(frozen=True)
class ExtAffinePerm:
    """An element of the extended affine symmetric group mod its center,
    canonicalized so the rotation degree sum(f(i)-i)/n lies in [0, n-1]."""

    window: tuple

    def __post_init__(self):
        w = tuple(self.window)
        n = len(w)
        if n < 1 or len({v % n for v in w}) != n:
            raise ValueError(f"{w} is not a valid window (residues must be distinct)")
        degree = sum(w[i] - (i + 1) for i in range(n))
        if degree % n:
            raise ValueError(f"{w} has non-integral rotation degree")
        if not 0 <= degree // n <= n - 1:
            raise ValueError(
                f"{w} is not canonical (rotation degree outside [0, n-1]); "
                "shift the window by a multiple of n")
        object.__setattr__(self, "window", w)

    @property
    def n(self) -> int:
        return len(self.window)

    @property
    def rotation(self) -> int:
        """Rotation degree: the power of Pi in the decomposition by the
        sum-zero affine subgroup."""
        n = self.n
        return sum(self.window[i] - (i + 1) for i in range(n)) // n

    @property
    def translation_free_window(self) -> tuple:
        """Window of the sum-zero part (the element divided by Pi^rotation)."""
        s = self.rotation
        return tuple(v - s for v in self.window)

    def value(self, i: int) -> int:
        """f(i) for any integer i, via n-periodicity."""
        n = self.n
        r = (i - 1) % n
        return self.window[r] + (i - 1 - r)

    def length(self) -> int:
        return _length(self.window)

    def __repr__(self):
        return f"W{self.window}"


@lru_cache(maxsize=None)
def _length(window) -> int:
    n = len(window)
    total = 0
    for a in range(n):
        for b in range(a + 1, n):
            d = window[a] - window[b]
            up = -(-d // n)        # ceil(d/n)
            down = -(d // n)       # ceil(-d/n)
            total += max(0, up) + max(0, down - 1)
    return total


def _canonicalize(window):
    """Normalize the rotation degree into [0, n-1]; return (window, wraps)
    where wraps counts the removed central factors Pi^n."""
    n = len(window)
    s = sum(window[i] - (i + 1) for i in range(n)) // n
    wraps = s // n  # floor division: canonical rotation degree lands in [0, n-1]
    return tuple(v - n * wraps for v in window), wraps


def identity(n: int) -> ExtAffinePerm:
    return ExtAffinePerm(tuple(range(1, n + 1)))


def simple(n: int, k: int) -> ExtAffinePerm:
    """The affine simple reflection s_k, 0 <= k <= n-1 (k = 0 is the affine
    one); swaps the value classes k and k+1 mod n."""
    if n < 2 or not 0 <= k <= n - 1:
        raise ValueError(f"generator index {k} out of range for n={n}")
    if k == 0:
        return ExtAffinePerm(tuple([0] + list(range(2, n)) + [n + 1]))
    w = list(range(1, n + 1))
    w[k - 1], w[k] = w[k], w[k - 1]
    return ExtAffinePerm(tuple(w))


def rotation(n: int, k: int = 1) -> ExtAffinePerm:
    """Pi^k: the window (1+k, 2+k, ..., n+k), canonicalized."""
    win, _ = _canonicalize(tuple(i + k for i in range(1, n + 1)))
    return ExtAffinePerm(win)


def translation(lam) -> ExtAffinePerm:
    """The translation element of a coweight: f(i) = i + n*lam_i (canonical
    representative mod the center)."""
    n = len(lam)
    win, _ = _canonicalize(tuple(i + 1 + n * lam[i] for i in range(n)))
    return ExtAffinePerm(win)


def group_mul(x: ExtAffinePerm, y: ExtAffinePerm):
    """Product in diagram order (x first): returns (result, wraps)."""
    if x.n != y.n:
        raise ValueError("rank mismatch")
    raw = tuple(y.value(x.value(i)) for i in range(1, x.n + 1))
    win, wraps = _canonicalize(raw)
    return ExtAffinePerm(win), wraps


def inverse(x: ExtAffinePerm):
    """Group inverse: returns (result, wraps) with x * result = Pi^{n*wraps'}
    central factors tracked by the caller via group_mul."""
    n = x.n
    out = [0] * n
    for i in range(1, n + 1):
        j = x.window[i - 1]
        r = (j - 1) % n
        out[r] = i - (j - 1 - r)
    win, wraps = _canonicalize(tuple(out))
    return ExtAffinePerm(win), wraps


def _apply_simple_left(k: int, x: ExtAffinePerm) -> ExtAffinePerm:
    """x * s_k in diagram order: s_k acts on window values."""
    n = x.n
    out = []
    for v in x.window:
        r = v % n
        if r == k % n:
            out.append(v + 1)
        elif r == (k + 1) % n:
            out.append(v - 1)
        else:
            out.append(v)
    return ExtAffinePerm(tuple(out))


def right_descents(x: ExtAffinePerm):
    """Generator indices k (0..n-1) with l(x * s_k) < l(x)."""
    lx = x.length()
    return [k for k in range(x.n) if _apply_simple_left(k, x).length() < lx]


def reduced_word(x: ExtAffinePerm):
    """A reduced word for the sum-zero part: returns (letters, rot) with
    x = s_{letters[0]} * ... * s_{letters[-1]} * Pi^rot in diagram order.
    Deterministic: always peels the smallest descent."""
    rot = x.rotation
    u = ExtAffinePerm(x.translation_free_window)
    letters = []
    while True:
        lu = u.length()
        if lu == 0:
            break
        for k in range(u.n):
            nxt = _apply_simple_left(k, u)
            if nxt.length() < lu:
                letters.append(k)
                u = nxt
                break
        else:
            raise AssertionError("positive-length element with no descent")
    return list(reversed(letters)), rot


def signed_product(x: ExtAffinePerm, y: ExtAffinePerm):
    """The 0-Hecke (Demazure) product T_x T_y = sign * zeta^wraps * T_z.

    Processes a reduced word of y letter by letter: a letter is appended
    when the length rises and absorbed with a sign -1 when it would fall;
    rotation factors multiply freely.  Returns (sign, wraps, z).
    """
    if x.n != y.n:
        raise ValueError("rank mismatch")
    letters, rot = reduced_word(y)
    z, sign = x, 1
    lz = z.length()
    for k in letters:
        nxt = _apply_simple_left(k, z)
        ln = nxt.length()
        if ln > lz:
            z, lz = nxt, ln
        else:
            sign = -sign
    win, wraps = _canonicalize(tuple(v + rot for v in z.window))
    return sign, wraps, ExtAffinePerm(win)


class Hecke0Element:
    """A finite formal sum of basis elements T_w with scalar coefficients."""

    __slots__ = ("algebra", "terms")

    def __init__(self, algebra: "Hecke0Algebra", terms):
        clean = {}
        for w, c in dict(terms).items():
            c = algebra.field(c)
            if c:
                clean[w] = c
        self.algebra = algebra
        self.terms = clean

    def __eq__(self, other):
        return (isinstance(other, Hecke0Element) and self.algebra is other.algebra
                and self.terms == other.terms)

    def __add__(self, other):
        out = dict(self.terms)
        for w, c in other.terms.items():
            acc = out.get(w, self.algebra.field.zero) + c
            if acc:
                out[w] = acc
            else:
                out.pop(w, None)
        return Hecke0Element(self.algebra, out)

    def __neg__(self):
        return Hecke0Element(self.algebra, {w: -c for w, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        return self.algebra.multiply(self, other)

    def __repr__(self):
        if not self.terms:
            return "0"
        return " + ".join(f"({c})*T{w.window}" for w, c in
                          sorted(self.terms.items(), key=lambda t: t[0].window))


class Hecke0Algebra:
    """Context object holding the rank, scalar field, and central value."""

    def __init__(self, n: int, field: FqField, zeta: FqElem | int = 1):
        if n < 2:
            raise ValueError("rank must be at least 2")
        self.n = n
        self.field = field
        self.zeta = field(zeta)
        if not self.zeta:
            raise ValueError("zeta must be invertible")

    def element(self, terms) -> Hecke0Element:
        return Hecke0Element(self, terms)

    def basis(self, w: ExtAffinePerm) -> Hecke0Element:
        if w.n != self.n:
            raise ValueError("rank mismatch")
        return Hecke0Element(self, {w: self.field.one})

    @property
    def one(self) -> Hecke0Element:
        return self.basis(identity(self.n))

    def S(self, k: int) -> Hecke0Element:
        return self.basis(simple(self.n, k))

    def Pi(self, k: int = 1) -> Hecke0Element:
        return self.basis(rotation(self.n, k))

    def demazure_product(self, x: ExtAffinePerm, y: ExtAffinePerm):
        """Signed basis product as (scalar, result)."""
        sign, wraps, z = signed_product(x, y)
        return self.field(sign) * self.zeta ** wraps, z

    def multiply(self, a: Hecke0Element, b: Hecke0Element) -> Hecke0Element:
        out = {}
        for x, cx in a.terms.items():
            for y, cy in b.terms.items():
                sign, wraps, z = signed_product(x, y)
                c = cx * cy * self.field(sign) * self.zeta ** wraps
                acc = out.get(z, self.field.zero) + c
                if acc:
                    out[z] = acc
                else:
                    out.pop(z, None)
        return Hecke0Element(self, out)

    def word_product(self, letters, rot: int = 0) -> Hecke0Element:
        """Product of T_{s_k} over the letters, then rot factors of T_Pi."""
        acc = self.one
        for k in letters:
            acc = acc * self.S(k)
        for _ in range(rot):
            acc = acc * self.Pi()
        return acc

    def srange(self, a: int, b: int) -> Hecke0Element:
        """S_a S_{a+1} ... S_b (identity when a > b)."""
        return self.word_product(list(range(a, b + 1)))


def _default_field() -> FqField:
    # odd characteristic keeps the signs faithful in tests
    return FqField(3)


def verify_braid_and_rotation(n: int, field: FqField | None = None) -> bool:
    """Check the quadratic, commuting, braid, and rotation relations, and
    centrality of Pi^n, via signed Demazure products."""
    H = Hecke0Algebra(n, field or _default_field())
    ok = True
    for i in range(1, n):
        ok &= H.S(i) * H.S(i) == -H.S(i)
        for j in range(1, n):
            if abs(i - j) > 1:
                ok &= H.S(i) * H.S(j) == H.S(j) * H.S(i)
    for k in range(1, n - 1):
        ok &= H.S(k) * H.S(k + 1) * H.S(k) == H.S(k + 1) * H.S(k) * H.S(k + 1)
        ok &= H.S(k) * H.Pi() == H.Pi() * H.S(k + 1)
    pin = H.one
    for _ in range(n):
        pin = pin * H.Pi()
    ok &= pin == H.element({identity(n): H.zeta})
    for i in range(1, n):
        ok &= pin * H.S(i) == H.S(i) * pin
    return bool(ok)


def verify_word_shift_identity(n: int, field: FqField | None = None) -> bool:
    """Check S_{i..j} S_{k..(l-1)} = S_{(k+1)..l} S_{i..j} for all
    1 <= i <= k <= l <= j <= n-1 (the middle factor is empty when l = k)."""
    H = Hecke0Algebra(n, field or _default_field())
    for i in range(1, n):
        for k in range(i, n):
            for l in range(k, n):
                for j in range(l, n):
                    lhs = H.srange(i, j) * H.srange(k, l - 1)
                    rhs = H.srange(k + 1, l) * H.srange(i, j)
                    if lhs != rhs:
                        return False
    return True


def verify_translation_power(n: int, i: int, field: FqField | None = None) -> bool:
    """Check that (S_{i..(n-1)} Pi)^i is the single unsigned basis element of
    the translation by (1,...,1,0,...,0) (i ones), of length i*(n-i)."""
    if not 1 <= i <= n - 1:
        raise ValueError(f"index {i} out of range")
    H = Hecke0Algebra(n, field or _default_field())
    step = H.srange(i, n - 1) * H.Pi()
    acc = H.one
    for _ in range(i):
        acc = acc * step
    t = translation((1,) * i + (0,) * (n - i))
    if t.length() != i * (n - i):
        return False
    return acc == H.basis(t)


# ---------------------------------------------------------------------------
# Spherical-vector module and the rotation-invariance derivation engine.
#
# The module is spanned by symbols T_x v for x with no finite right descent
# (a reduced expression ending in a finite generator kills v, since each
# finite S_k annihilates a vector fixed by the maximal compact).  On top of
# that the engine imposes the coset-decomposition relation
#
#     v  =  sum over i of  S_{i..(n-1)} Pi v
#
# and, as an explicit external hypothesis, that each translation operator
# U_i acts nilpotently.  From idempotency identities U_i^2 v = U_i v proved
# by bounded linear algebra over left translates of the relations, the engine
# concludes U_i v = 0 step by step and finally reduces v - Pi v to zero.
# ---------------------------------------------------------------------------


class DerivationCapExceeded(Exception):
    """Raised when the translate cap is exhausted before a target reduces;
    carries the partial report (inconclusive, not a refutation)."""

    def __init__(self, report):
        super().__init__(f"translate length cap {report.cap} exhausted")
        self.report = report


@dataclass(frozen=True)
class DerivationStep:
    index: int
    operator: str
    idempotency_round: int
    vanishing_round: int
    trace_lines: tuple
    axiom: str
    derived: tuple

    def to_json(self):
        return {
            "index": self.index,
            "operator": self.operator,
            "idempotency_round": self.idempotency_round,
            "vanishing_round": self.vanishing_round,
            "trace": list(self.trace_lines),
            "axiom": self.axiom,
            "derived": list(self.derived),
        }


@dataclass
class DerivationReport:
    n: int
    cap: int
    status: str = "running"
    steps: list = dc_field(default_factory=list)
    final_round: int = -1
    cap_used: int = 0
    conclusion: str = ""

    def to_json(self):
        return {
            "n": self.n,
            "cap": self.cap,
            "status": self.status,
            "steps": [s.to_json() for s in self.steps],
            "final_round": self.final_round,
            "minimal_sufficient_cap": self.cap_used,
            "conclusion": self.conclusion,
        }


def has_finite_descent(x: ExtAffinePerm) -> bool:
    lx = x.length()
    return any(_apply_simple_left(k, x).length() < lx for k in range(1, x.n))


def render_word(x: ExtAffinePerm) -> str:
    """Readable word for an element: letters of a reduced word of the
    sum-zero part followed by the rotation power."""
    letters, rot = reduced_word(x)
    body = "".join(f"S_{k}" for k in letters)
    if rot == 1:
        body += "Π"
    elif rot:
        body += f"Π^{rot}"
    return body or "1"


class _ModuleEngine:
    """Sparse row reduction over the normal-form module symbols, with
    breadth-first generation of generator translates of the relations."""

    def __init__(self, algebra: Hecke0Algebra, cap: int):
        self.H = algebra
        self.cap = cap
        self.rows = {}          # pivot symbol -> (row dict, depth)
        self.frontier = []      # rows inserted at the current depth
        self.depth = 0
        self.gens = [simple(algebra.n, k) for k in range(algebra.n)]
        self.rots = [rotation(algebra.n, k) for k in range(1, algebra.n)]

    @staticmethod
    def _key(x: ExtAffinePerm):
        return (x.length(), x.window)

    def apply(self, g: ExtAffinePerm, vec):
        """Left action of T_g on a module vector, projecting away symbols
        with finite right descents."""
        out = {}
        zero = self.H.field.zero
        for sym, c in vec.items():
            sign, wraps, z = signed_product(g, sym)
            if has_finite_descent(z):
                continue
            acc = out.get(z, zero) + c * self.H.field(sign) * self.H.zeta ** wraps
            if acc:
                out[z] = acc
            else:
                out.pop(z, None)
        return out

    def reduce(self, vec):
        """Fully reduce against the echelon rows; returns (remainder, depth
        of the deepest row used)."""
        work = dict(vec)
        out = {}
        used = 0
        while work:
            key = max(work, key=self._key)
            c = work.pop(key)
            if not c:
                continue
            if key in self.rows:
                row, d = self.rows[key]
                used = max(used, d)
                for sym, rc in row.items():
                    if sym == key:
                        continue
                    acc = work.get(sym, self.H.field.zero) - c * rc
                    if acc:
                        work[sym] = acc
                    else:
                        work.pop(sym, None)
            else:
                out[key] = c
        return out, used

    def insert(self, vec, depth: int) -> bool:
        rem, _ = self.reduce(vec)
        if not rem:
            return False
        pivot = max(rem, key=self._key)
        inv = rem[pivot].inverse()
        row = {sym: c * inv for sym, c in rem.items()}
        self.rows[pivot] = (row, depth)
        self.frontier.append((row, depth))
        return True

    def add_relation(self, vec, depth: int = 0):
        """Insert a relation together with its free rotation translates."""
        self.insert(vec, depth)
        for r in self.rots:
            self.insert(self.apply(r, vec), depth)

    def expand_once(self):
        """One saturation round: translate every frontier row by each
        length-one generator (rotations are attached for free)."""
        self.depth += 1
        old, self.frontier = self.frontier, []
        for row, d in old:
            for g in self.gens:
                self.add_relation(self.apply(g, row), d + 1)

    def ensure_zero(self, vec) -> int:
        """Saturate until the vector reduces to zero; returns the depth of
        the deepest translate used by the successful reduction."""
        while True:
            rem, used = self.reduce(vec)
            if not rem:
                return used
            if self.depth >= self.cap or not self.frontier:
                raise _CapSignal()
            self.expand_once()


class _CapSignal(Exception):
    pass


def derive_rotation_invariance(n: int, length_cap: int,
                               field: FqField | None = None,
                               zeta=1) -> DerivationReport:
    """Derive, in the spherical-vector module, that the translation
    operators U_i all kill the vector and hence that v = Pi v.

    For each i in increasing order the engine proves the idempotency
    U_i^2 v = U_i v by reducing against left translates T_w r of the current
    relations with l(w) bounded by ``length_cap``; combined with the
    nilpotence hypothesis (external input, never derived) this yields
    U_i v = 0.  The report carries a per-step trace and the minimal
    sufficient translate length; an exhausted cap raises
    DerivationCapExceeded with the inconclusive partial report attached.
    """
    if n < 2:
        raise ValueError("rank must be at least 2")
    if length_cap < n * n:
        raise ValueError(f"length cap must be at least n^2 = {n * n}")
    H = Hecke0Algebra(n, field or _default_field(), zeta)
    engine = _ModuleEngine(H, length_cap)
    report = DerivationReport(n=n, cap=length_cap)

    one = H.field.one
    v = {identity(n): one}

    def op_elem(j: int) -> ExtAffinePerm:
        """Group element of S_{j..(n-1)} Pi (equal to Pi when j = n)."""
        x = identity(n)
        for k in range(j, n):
            x, _ = group_mul(x, simple(n, k))
        x, _ = group_mul(x, rotation(n))
        return x

    z_ops = {j: op_elem(j) for j in range(1, n + 1)}
    for j, z in z_ops.items():
        assert not has_finite_descent(z), (j, z)

    def op_name(j: int) -> str:
        return "".join(f"S_{k}" for k in range(j, n)) + "Π"

    # the coset-decomposition relation: sum_j S_{j..(n-1)} Pi v - v = 0
    rel = {}
    for j in range(1, n + 1):
        rel[z_ops[j]] = rel.get(z_ops[j], H.field.zero) + one
    rel[identity(n)] = rel.get(identity(n), H.field.zero) - one
    engine.add_relation(rel)

    cap_used = 0
    try:
        for i in range(1, n):
            z = z_ops[i]
            u_elem = translation((1,) * i + (0,) * (n - i))
            assert not has_finite_descent(u_elem)

            zv = engine.apply(z, v)
            zzv = engine.apply(z, zv)
            idem_z = dict(zzv)
            for sym, c in zv.items():
                acc = idem_z.get(sym, H.field.zero) - c
                if acc:
                    idem_z[sym] = acc
                else:
                    idem_z.pop(sym, None)
            r1 = engine.ensure_zero(idem_z)

            uv = engine.apply(u_elem, v)
            uuv = engine.apply(u_elem, uv)
            idem_u = dict(uuv)
            for sym, c in uv.items():
                acc = idem_u.get(sym, H.field.zero) - c
                if acc:
                    idem_u[sym] = acc
                else:
                    idem_u.pop(sym, None)
            r1u = engine.ensure_zero(idem_u)

            # external hypothesis: U_i nilpotent; with idempotency this kills U_i v
            engine.add_relation({u_elem: one})
            r2 = engine.ensure_zero({z: one})
            engine.add_relation({z: one})

            # trace in the shape of the step-by-step hand computation
            name = op_name(i)
            tail = " - ".join(f"{op_name(j)}v" for j in range(i + 1, n + 1))
            line1 = f"({name})²v = {name}(v - {tail})"
            cross = []
            for j in range(i + 1, n + 1):
                sign, wraps, prod = signed_product(z, z_ops[j])
                tok = render_word(prod)
                cross.append(("-" if sign > 0 else "+") + f" {tok}v")
            line2 = f"= {name}v " + " ".join(cross)
            all_die = all(has_finite_descent(signed_product(z, z_ops[j])[2])
                          for j in range(i + 1, n + 1))
            line3 = f"= {name}v" if all_die else f"= {name}v (mod earlier relations)"
            rounds = max(r1, r1u, r2)
            cap_used = max(cap_used, rounds)
            report.steps.append(DerivationStep(
                index=i,
                operator=name,
                idempotency_round=max(r1, r1u),
                vanishing_round=r2,
                trace_lines=(line1, line2, line3),
                axiom=f"U_{i} acts nilpotently (hypothesis), so idempotency forces U_{i}v = 0",
                derived=(f"U_{i}v = 0", f"{name}v = 0"),
            ))

        final = {identity(n): one}
        piv = engine.apply(rotation(n), v)
        for sym, c in piv.items():
            acc = final.get(sym, H.field.zero) - c
            if acc:
                final[sym] = acc
            else:
                final.pop(sym, None)
        rf = engine.ensure_zero(final)
        cap_used = max(cap_used, rf)
        report.final_round = rf
        report.cap_used = cap_used
        report.status = "derived"
        report.conclusion = "v = Πv"
        return report
    except _CapSignal:
        report.status = "inconclusive"
        report.conclusion = (
            "cap exhausted before reduction; no conclusion (not a refutation)")
        report.cap_used = cap_used
        raise DerivationCapExceeded(report) from None
