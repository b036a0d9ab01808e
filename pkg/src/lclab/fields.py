"""Coefficient fields: exact rationals and prime fields.

Field elements are plain Python values (``fractions.Fraction`` for the
rationals, ``int`` residues in ``[0, p)`` for a prime field); a field object
only bundles the arithmetic. Keeping elements unboxed makes the elimination
loops in :mod:`lclab.linalg` cheap while staying exact.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import PreconditionError

MAX_PRIME = 2**31  # residue arithmetic stays in machine-friendly range


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


class RationalField:
    """Arbitrary-precision rational arithmetic via ``fractions.Fraction``.

    ``Fraction`` keeps values in lowest terms with a positive denominator,
    which is exactly the normal form required of scalars.
    """

    kind = "rational"

    zero = Fraction(0)
    one = Fraction(1)

    def of_int(self, n: int) -> Fraction:
        return Fraction(n)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return 1 / Fraction(a)

    def div(self, a, b):
        return Fraction(a) / b

    def is_zero(self, a) -> bool:
        return a == 0

    def describe(self) -> str:
        return "rational"

    def __repr__(self) -> str:
        return "RationalField()"

    def __eq__(self, other) -> bool:
        return isinstance(other, RationalField)

    def __hash__(self) -> int:
        return hash("rational")


class PrimeField:
    """Arithmetic modulo a prime ``p`` with residues stored in ``[0, p)``."""

    kind = "prime"

    def __init__(self, p: int):
        if not isinstance(p, int) or not _is_prime(p):
            raise PreconditionError(f"field modulus must be prime, got {p!r}")
        if p >= MAX_PRIME:
            raise PreconditionError(f"prime modulus must be < 2^31, got {p}")
        self.p = p
        self.zero = 0
        self.one = 1 % p

    def of_int(self, n: int) -> int:
        return n % self.p

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def neg(self, a):
        return (-a) % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(a, self.p - 2, self.p)

    def div(self, a, b):
        return (a * self.inv(b)) % self.p

    def is_zero(self, a) -> bool:
        return a % self.p == 0

    def describe(self) -> str:
        return f"p:{self.p}"

    def __repr__(self) -> str:
        return f"PrimeField({self.p})"

    def __eq__(self, other) -> bool:
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self) -> int:
        return hash(("prime", self.p))


QQ = RationalField()

GF2 = PrimeField(2)
GF3 = PrimeField(3)


def field_from_spec(spec) -> RationalField | PrimeField:
    """Build a field from a JSON-ish spec or a CLI string.

    Accepts ``{"kind": "rational"}``, ``{"kind": "prime", "p": 32003}``,
    ``"rational"``, or ``"p:32003"``.
    """
    if isinstance(spec, str):
        if spec == "rational":
            return QQ
        if spec.startswith("p:"):
            try:
                return PrimeField(int(spec[2:]))
            except ValueError:
                raise PreconditionError(f"bad prime in field spec {spec!r}")
        raise PreconditionError(f"unknown field spec {spec!r}")
    if isinstance(spec, dict):
        kind = spec.get("kind")
        if kind == "rational":
            return QQ
        if kind == "prime":
            if "p" not in spec:
                raise PreconditionError("prime field spec needs a 'p' entry")
            return PrimeField(spec["p"])
        raise PreconditionError(f"unknown field kind {kind!r}")
    raise PreconditionError(f"unrecognized field spec {spec!r}")
