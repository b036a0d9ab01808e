"""Exponent-vector combinatorics: monomials, monomial ideals, staircases.

A monomial ideal is held by its minimal generating set of exponent vectors;
membership, colon, saturation, radical and Krull dimension are all
componentwise staircase computations, so everything here is exact.

Grading degrees live in Z^n; monomial exponents in N^n. The ambient
variable count ``n`` is carried explicitly and checked at the boundaries.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .errors import InternalConsistencyError, PreconditionError
from .linalg import IntegerMatrix

MAX_AMBIENT_VARS = 12  # Krull dimension enumerates 2^n variable subsets


@dataclass(frozen=True, order=True)
class Monomial:
    """A monomial, stored as its exponent vector (all coordinates >= 0)."""

    exps: tuple[int, ...]

    def __post_init__(self):
        if any(e < 0 for e in self.exps):
            raise PreconditionError(f"negative exponent in monomial {self.exps}")

    @property
    def n(self) -> int:
        return len(self.exps)

    def degree(self) -> int:
        return sum(self.exps)

    def is_one(self) -> bool:
        return all(e == 0 for e in self.exps)

    def support(self) -> frozenset[int]:
        return frozenset(c for c, e in enumerate(self.exps) if e)

    def divides(self, other: "Monomial") -> bool:
        return all(a <= b for a, b in zip(self.exps, other.exps))

    def mul(self, other: "Monomial") -> "Monomial":
        return Monomial(tuple(a + b for a, b in zip(self.exps, other.exps)))

    def pow(self, t: int) -> "Monomial":
        return Monomial(tuple(t * e for e in self.exps))


def _minimalize(gens):
    """Drop generators divisible by another generator; sorted for determinism.

    Lexicographic order lists any divisor before its multiples, so a single
    forward pass suffices.
    """
    keep = []
    for g in sorted(set(gens)):
        if not any(h.divides(g) for h in keep):
            keep.append(g)
    return tuple(keep)


@dataclass(frozen=True)
class MonomialIdeal:
    """Monomial ideal by its minimal generators; empty set is the zero ideal.

    The unit ideal is representable (single generator 1): saturation outputs
    use it to encode that a localization kills the module. Most entry points
    reject it as input.
    """

    n: int
    gens: tuple[Monomial, ...]

    def __post_init__(self):
        for g in self.gens:
            if g.n != self.n:
                raise PreconditionError(
                    f"generator arity {g.n} does not match ambient n={self.n}"
                )
        object.__setattr__(self, "gens", _minimalize(self.gens))

    @classmethod
    def zero(cls, n: int) -> "MonomialIdeal":
        return cls(n, ())

    @classmethod
    def unit(cls, n: int) -> "MonomialIdeal":
        return cls(n, (Monomial((0,) * n),))

    def is_zero(self) -> bool:
        return not self.gens

    def is_unit(self) -> bool:
        return any(g.is_one() for g in self.gens)

    def contains(self, u: Monomial) -> bool:
        """True iff some generator divides ``u`` (componentwise)."""
        if u.n != self.n:
            raise PreconditionError("monomial arity does not match ideal")
        return any(g.divides(u) for g in self.gens)

    def contains_exponent(self, exps) -> bool:
        """Staircase membership for a raw exponent tuple (must be >= 0)."""
        return any(
            all(ge <= ue for ge, ue in zip(g.exps, exps)) for g in self.gens
        )

    def add_monomials(self, monomials) -> "MonomialIdeal":
        return MonomialIdeal(self.n, self.gens + tuple(monomials))

    def colon(self, w: Monomial) -> "MonomialIdeal":
        """The colon ideal (I : w), computed on the staircase."""
        if w.n != self.n:
            raise PreconditionError("monomial arity does not match ideal")
        new = [
            Monomial(tuple(max(ge - we, 0) for ge, we in zip(g.exps, w.exps)))
            for g in self.gens
        ]
        return MonomialIdeal(self.n, tuple(new))

    def saturate(self, w: Monomial) -> "MonomialIdeal":
        """The stable ideal (I : w^infinity).

        For monomial data this just zeroes every generator coordinate lying
        in the support of ``w``, then minimalizes; the result is idempotent
        under further saturation by ``w``.
        """
        if w.n != self.n:
            raise PreconditionError("monomial arity does not match ideal")
        supp = w.support()
        new = [
            Monomial(
                tuple(0 if c in supp else e for c, e in enumerate(g.exps))
            )
            for g in self.gens
        ]
        return MonomialIdeal(self.n, tuple(new))

    def radical(self) -> "MonomialIdeal":
        """Generators replaced by their squarefree supports."""
        new = [
            Monomial(tuple(1 if e else 0 for e in g.exps)) for g in self.gens
        ]
        return MonomialIdeal(self.n, tuple(new))

    def krull_dim(self) -> int:
        """Krull dimension of R/I.

        Brute force over variable subsets W: the dimension is the largest
        |W| such that no generator has support inside W (those W are exactly
        the complements of the minimal primes' variable sets).
        """
        if self.is_unit():
            raise PreconditionError("zero module: the unit ideal has no dimension")
        if self.n > MAX_AMBIENT_VARS:
            raise PreconditionError(
                f"ambient n={self.n} exceeds the n<={MAX_AMBIENT_VARS} cap"
            )
        supports = [g.support() for g in self.gens]
        for size in range(self.n, -1, -1):
            for w in combinations(range(self.n), size):
                wset = frozenset(w)
                if all(not s <= wset for s in supports):
                    return size
        raise InternalConsistencyError("no admissible variable subset found")

    def __repr__(self) -> str:
        return f"MonomialIdeal(n={self.n}, gens={[g.exps for g in self.gens]})"


@dataclass(frozen=True)
class MonomialSequence:
    """An ordered sequence of monomials x_1, ..., x_i, none equal to 1.

    Its exponent matrix (one row per item) spans the exponent lattice of the
    subring k[x_1, ..., x_i].
    """

    items: tuple[Monomial, ...]

    def __post_init__(self):
        if not self.items:
            raise PreconditionError("monomial sequence must have at least one item")
        n = self.items[0].n
        for m in self.items:
            if m.n != n:
                raise PreconditionError("mixed arities in monomial sequence")
            if m.is_one():
                raise PreconditionError("sequence items must not equal 1")

    @property
    def n(self) -> int:
        return self.items[0].n

    @property
    def length(self) -> int:
        return len(self.items)

    def exponent_matrix(self) -> IntegerMatrix:
        return IntegerMatrix([list(m.exps) for m in self.items])

    def product_support(self, subset) -> frozenset[int]:
        out = set()
        for j in subset:
            out |= self.items[j].support()
        return frozenset(out)

    def subset_degree(self, subset) -> tuple[int, ...]:
        """Exponent of the product of the items indexed by ``subset``."""
        acc = [0] * self.n
        for j in subset:
            for c, e in enumerate(self.items[j].exps):
                acc[c] += e
        return tuple(acc)

    def __repr__(self) -> str:
        return f"MonomialSequence({[m.exps for m in self.items]})"


def is_regular_sequence(seq: MonomialSequence, ideal: MonomialIdeal) -> bool:
    """Exact regular-sequence test on R/I.

    x_j must be a nonzerodivisor modulo I + (x_1, ..., x_{j-1}), i.e. the
    staircase colon by x_j must not grow the ideal; finally the full ideal
    must stay proper.
    """
    if ideal.is_unit():
        raise PreconditionError("zero module: R/I must be nonzero")
    if seq.n != ideal.n:
        raise PreconditionError("sequence arity does not match ideal")
    current = ideal
    for x in seq.items:
        if current.colon(x).gens != current.gens:
            return False
        current = current.add_monomials([x])
    return not current.is_unit()
