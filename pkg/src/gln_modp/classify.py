"""Classification data for irreducible admissible GL_n(F)-representations and
the constituent calculus for parabolic inductions of such data.

An induction datum is a standard parabolic together with one block
representation per Levi block: either an opaque supersingular label with its
central character, or a twisted generalized Steinberg (a parabolic of the
block group plus a twisting character).  Canonical data satisfy: supersingular
blocks have size > 1 (a one-dimensional character is the generalized Steinberg
of the full block group), and consecutive Steinberg blocks carry distinct
twisting characters.

A datum violating the second constraint is not irreducible; its simple
constituents are obtained by merging each maximal run of equal-twist
Steinberg blocks into one block and sweeping the free parabolic choices.
The count is 2^delta where delta is the number of failing adjacencies, each
constituent occurs once, and the lattice of "submodules" is the lattice of
lower sets of the choice poset.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .eigen import ParamPair, SmoothCharacter
from .root_datum import StandardParabolic, parabolics_with_levi_trace


@dataclass(frozen=True)
class Supersingular:
    """An opaque supersingular block: never constructed, only labelled."""

    size: int
    label: str
    central: SmoothCharacter

    def __post_init__(self):
        if self.size < 1:
            raise ValueError("block size must be positive")


@dataclass(frozen=True)
class Steinberg:
    """A generalized Steinberg block twisted by a character: the pair of a
    standard parabolic Q of the block group and the twist eta.  Q equal to
    the full block group encodes the character eta itself."""

    size: int
    Q: StandardParabolic
    eta: SmoothCharacter

    def __post_init__(self):
        if self.Q.n != self.size:
            raise ValueError("Q must be a standard parabolic of the block group")


BlockRep = object  # Supersingular | Steinberg


@dataclass(frozen=True)
class InductionDatum:
    P: StandardParabolic
    blocks: tuple

    def __post_init__(self):
        object.__setattr__(self, "blocks", tuple(self.blocks))
        if len(self.blocks) != len(self.P.composition):
            raise ValueError("one block representation per Levi block required")
        for size, blk in zip(self.P.composition, self.blocks):
            if not isinstance(blk, (Supersingular, Steinberg)):
                raise ValueError(f"unknown block representation {blk!r}")
            if blk.size != size:
                raise ValueError("block sizes must match the composition")

    @property
    def n(self) -> int:
        return self.P.n


def validate(datum: InductionDatum) -> bool:
    """Canonical-form constraints: supersingular blocks have size > 1 and
    consecutive Steinberg blocks have distinct twists."""
    for blk in datum.blocks:
        if isinstance(blk, Supersingular) and blk.size == 1:
            return False
    for a, b in zip(datum.blocks, datum.blocks[1:]):
        if isinstance(a, Steinberg) and isinstance(b, Steinberg) and a.eta == b.eta:
            return False
    return True


def delta(datum: InductionDatum) -> int:
    """Number of adjacent Steinberg pairs with equal twist."""
    return sum(1 for a, b in zip(datum.blocks, datum.blocks[1:])
               if isinstance(a, Steinberg) and isinstance(b, Steinberg) and a.eta == b.eta)


@dataclass(frozen=True)
class IrreducibleRep:
    """A validated canonical induction datum; equality is structural."""

    datum: InductionDatum

    def __post_init__(self):
        if not validate(self.datum):
            raise ValueError("datum is not in canonical form")

    def short(self) -> str:
        parts = []
        for blk in self.datum.blocks:
            if isinstance(blk, Supersingular):
                parts.append(f"ss{blk.size}[{blk.label}]")
            else:
                comp = ",".join(str(c) for c in blk.Q.composition)
                parts.append(f"Sp({comp})*({blk.eta.unramified};{blk.eta.tame_exponent})")
        return "Ind(" + "|".join(parts) + ")"


@dataclass(frozen=True)
class _SuperBlock:
    """A maximal run of equal-twist Steinberg blocks, merged.

    ``sizes`` are the run's block sizes (the Levi L inside the block group of
    size m = sum(sizes)); ``inner`` is the union of their parabolic subsets,
    shifted; ``free`` are the boundaries of L, the selectable simple roots.
    """

    sizes: tuple
    inner: frozenset
    free: tuple
    eta: SmoothCharacter

    @property
    def m(self) -> int:
        return sum(self.sizes)


def super_blocks(datum: InductionDatum):
    """Segment the datum into supersingular blocks and merged Steinberg runs
    (the reusable normalization behind both the constituent count and the
    lattice)."""
    segments = []
    i = 0
    blocks = datum.blocks
    while i < len(blocks):
        blk = blocks[i]
        if isinstance(blk, Supersingular):
            segments.append(blk)
            i += 1
            continue
        j = i
        while (j + 1 < len(blocks) and isinstance(blocks[j + 1], Steinberg)
               and blocks[j + 1].eta == blk.eta):
            j += 1
        run = blocks[i:j + 1]
        sizes = tuple(b.size for b in run)
        inner, offset = set(), 0
        for b in run:
            inner |= {offset + r for r in b.Q.delta}
            offset += b.size
        L = StandardParabolic(sizes)
        segments.append(_SuperBlock(sizes, frozenset(inner), L.boundaries, blk.eta))
        i = j + 1
    return segments


@dataclass(frozen=True)
class ConstituentPoset:
    """Constituents of an induction datum with the componentwise
    reverse-inclusion order on the free parabolic choices."""

    elements: tuple        # IrreducibleRep, canonical order
    choices: tuple         # per element: tuple of frozensets, one per run

    def __len__(self):
        return len(self.elements)

    def leq(self, i: int, j: int) -> bool:
        """i below j: every chosen parabolic of i contains that of j."""
        return all(a >= b for a, b in zip(self.choices[i], self.choices[j]))


def constituents(datum: InductionDatum) -> ConstituentPoset:
    """All simple constituents, each with multiplicity one.

    Every merged Steinberg run of total size m sweeps the parabolics of the
    block group whose trace on the run's Levi is the given one; the count is
    2^delta.  Elements are emitted in lexicographic bitmask order, runs left
    to right.
    """
    segments = super_blocks(datum)
    runs = [seg for seg in segments if isinstance(seg, _SuperBlock)]
    mask_ranges = [range(1 << len(run.free)) for run in runs]
    elements, choices = [], []
    for masks in product(*mask_ranges):
        blocks, chosen = [], []
        k = 0
        for seg in segments:
            if isinstance(seg, Supersingular):
                blocks.append(seg)
                continue
            extra = {seg.free[b] for b in range(len(seg.free)) if masks[k] >> b & 1}
            Qp = StandardParabolic.from_delta(seg.m, set(seg.inner) | extra)
            blocks.append(Steinberg(seg.m, Qp, seg.eta))
            chosen.append(frozenset(Qp.delta))
            k += 1
        P = StandardParabolic(tuple(b.size for b in blocks))
        elements.append(IrreducibleRep(InductionDatum(P, tuple(blocks))))
        choices.append(tuple(chosen))
    return ConstituentPoset(tuple(elements), tuple(choices))


def steinberg_constituents(P: StandardParabolic, Q: StandardParabolic):
    """Constituents of the induction of a generalized Steinberg block from
    the Levi of P: one for each standard parabolic whose trace on the Levi
    is Q."""
    return parabolics_with_levi_trace(P, Q)


def param_pair(rep) -> ParamPair:
    """The eigenvalue pair shared by every weight of the representation.

    Supersingular blocks contribute their full block with the central
    character; a Steinberg block of size m contributes m singleton blocks,
    each carrying the twist.
    """
    datum = rep.datum if isinstance(rep, IrreducibleRep) else rep
    comp, chars = [], []
    for blk in datum.blocks:
        if isinstance(blk, Supersingular):
            comp.append(blk.size)
            chars.append(blk.central)
        else:
            comp.extend([1] * blk.size)
            chars.extend([blk.eta] * blk.size)
    return ParamPair(StandardParabolic(tuple(comp)), tuple(chars))


def is_irreducible_principal_series(chars) -> bool:
    """Exact criterion for a full principal series: consecutive characters
    distinct (unramified and tame parts together)."""
    chars = tuple(chars)
    return all(a != b for a, b in zip(chars, chars[1:]))


def principal_series_tame_sufficient(chars) -> bool:
    """The coarser sufficient criterion using only residue characters: the
    tame exponents differ at every adjacent position."""
    chars = tuple(chars)
    return all(a.tame_exponent != b.tame_exponent for a, b in zip(chars, chars[1:]))


def lower_sets(leq, k: int):
    """All lower sets of a poset on range(k) given by its order predicate,
    sorted by (size, elements).  Intended for the small constituent posets."""
    if k > 20:
        raise ValueError("poset too large for exhaustive lower-set enumeration")
    down = [frozenset(i for i in range(k) if leq(i, j)) for j in range(k)]
    out = []
    for bits in range(1 << k):
        s = frozenset(i for i in range(k) if bits >> i & 1)
        if all(down[j] <= s for j in s):
            out.append(s)
    return sorted(out, key=lambda s: (len(s), sorted(s)))


@dataclass(frozen=True)
class SubmoduleLattice:
    """The submodule lattice of an induction datum, encoded combinatorially:
    submodules are the lower sets of the constituent poset; the principal
    lower set at j is the unique submodule with cosocle j."""

    poset: ConstituentPoset
    sets: tuple            # all lower sets, sorted by (size, elements)
    principal: tuple       # per constituent index, its down-closure
    socle: frozenset       # minimal constituents
    cosocle: frozenset     # maximal constituents

    @property
    def count(self) -> int:
        return len(self.sets)


def submodule_lattice(datum: InductionDatum) -> SubmoduleLattice:
    poset = constituents(datum)
    k = len(poset)
    sets = tuple(lower_sets(poset.leq, k))
    principal = tuple(frozenset(i for i in range(k) if poset.leq(i, j)) for j in range(k))
    minimal = frozenset(j for j in range(k)
                        if all(not poset.leq(i, j) for i in range(k) if i != j))
    maximal = frozenset(j for j in range(k)
                        if all(not poset.leq(j, i) for i in range(k) if i != j))
    return SubmoduleLattice(poset, sets, principal, minimal, maximal)
