"""Problem documents: JSON schema, monomial grammar, canonical form.

A problem fixes the ring (variable names and coefficient field), the
module ideal, the monomial sequence, the task list and options. Parsing
is strict: any syntax or vocabulary error raises :class:`ParseError`
carrying a position, which the CLI maps to exit code 2.

Monomial grammar (monomials are single-line strings inside the JSON):

    monomial := term ("*" term)*
    term     := IDENT ("^" NAT)?

IDENT must be a declared variable; repeating a variable accumulates its
exponents. Parsed problems are canonical: serializing and reparsing is
the identity.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass

from .errors import ParseError, PreconditionError
from .fields import field_from_spec
from .monomial import Monomial, MonomialIdeal

TASK_VOCABULARY = (
    "local_cohomology",
    "cd_vs_dim",
    "koszul_limit",
    "composite",
    "lemma1",
    "theorem2",
    "saturation",
    "regular_sequence",
    "fraction_field",
    "a2_check",
    "converse_search",
)

KNOWN_OPTIONS = {
    "composite_split": int,
    "polynomial": None,  # string or list of [monomial, coefficient]
    "degree_bound": int,
    "a2_i": int,
    "converse_n": int,
    "converse_max_degree": int,
    "converse_max_i": int,
    "chamber_cap": int,
    "box_cap": int,
    "hilbert_cap": int,
}

_IDENT_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")
_NAT_RE = re.compile(r"[0-9]+")


def parse_monomial(text: str, variables, where: str = "monomial") -> Monomial:
    """Parse one monomial string against the declared variables.

    Positions in errors are 1-based columns within the string.
    """
    n = len(variables)
    index = {name: k for k, name in enumerate(variables)}
    exps = [0] * n
    pos = 0

    def skip_ws():
        nonlocal pos
        while pos < len(text) and text[pos] in " \t":
            pos += 1

    def error(message, token=None):
        raise ParseError(
            f"{where}: {message}", line=1, column=pos + 1, token=token
        )

    expect_term = True
    while True:
        skip_ws()
        if pos >= len(text):
            if expect_term:
                error("expected a variable name", token="end of input")
            break
        if not expect_term:
            if text[pos] == "*":
                pos += 1
                expect_term = True
                continue
            error("expected '*' between terms", token=text[pos])
        m = _IDENT_RE.match(text, pos)
        if not m:
            error("expected a variable name", token=text[pos])
        name = m.group(0)
        if name not in index:
            raise ParseError(
                f"{where}: unknown variable {name!r}",
                line=1,
                column=pos + 1,
                token=name,
            )
        pos = m.end()
        exponent = 1
        skip_ws()
        if pos < len(text) and text[pos] == "^":
            pos += 1
            skip_ws()
            mn = _NAT_RE.match(text, pos)
            if not mn:
                error("expected an exponent after '^'",
                      token=text[pos] if pos < len(text) else "end of input")
            exponent = int(mn.group(0))
            pos = mn.end()
        exps[index[name]] += exponent
        expect_term = False
    return Monomial(tuple(exps))


def render_monomial(m: Monomial, variables) -> str:
    parts = []
    for name, e in zip(variables, m.exps):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "*".join(parts) if parts else "1"


@dataclass(frozen=True)
class Problem:
    """A parsed problem in canonical form."""

    variables: tuple[str, ...]
    field_spec: tuple  # ("rational",) or ("prime", p)
    ideal_gens: tuple[Monomial, ...]
    sequence: tuple[Monomial, ...]
    tasks: tuple[str, ...]
    box_radius: int
    options: tuple  # sorted (key, value) pairs

    @property
    def n(self) -> int:
        return len(self.variables)

    def field(self):
        if self.field_spec[0] == "rational":
            return field_from_spec("rational")
        return field_from_spec({"kind": "prime", "p": self.field_spec[1]})

    def ideal(self) -> MonomialIdeal:
        return MonomialIdeal(self.n, self.ideal_gens)

    def options_dict(self) -> dict:
        return dict(self.options)

    def to_dict(self) -> dict:
        field = (
            {"kind": "rational"}
            if self.field_spec[0] == "rational"
            else {"kind": "prime", "p": self.field_spec[1]}
        )
        out = {
            "ring": {"variables": list(self.variables), "field": field},
            "module": {
                "ideal": [
                    render_monomial(g, self.variables) for g in self.ideal_gens
                ]
            },
            "sequence": [
                render_monomial(m, self.variables) for m in self.sequence
            ],
            "tasks": list(self.tasks),
            "box_radius": self.box_radius,
        }
        if self.options:
            out["options"] = {k: v for k, v in self.options}
        return out


def _require(obj, key, kind, where):
    if key not in obj:
        raise ParseError(f"{where}: missing required key {key!r}")
    value = obj[key]
    if kind is not None and not isinstance(value, kind):
        raise ParseError(
            f"{where}: {key!r} must be of type {kind.__name__}",
            token=repr(value),
        )
    return value


def parse_problem(text: str) -> Problem:
    """Parse and validate a JSON problem document."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(
            f"invalid JSON: {exc.msg}", line=exc.lineno, column=exc.colno
        ) from exc
    if not isinstance(doc, dict):
        raise ParseError("problem document must be a JSON object")
    for key in doc:
        if key not in ("ring", "module", "sequence", "tasks", "box_radius", "options"):
            raise ParseError(f"unknown top-level key {key!r}")

    ring = _require(doc, "ring", dict, "problem")
    variables = _require(ring, "variables", list, "ring")
    if not variables:
        raise ParseError("ring: variables must be a nonempty list")
    for v in variables:
        if not isinstance(v, str) or not _IDENT_RE.fullmatch(v):
            raise ParseError(f"ring: bad variable name {v!r}", token=repr(v))
    if len(set(variables)) != len(variables):
        raise ParseError("ring: variable names must be unique")
    if len(variables) > 12:
        raise ParseError("ring: at most 12 variables are supported")
    field_raw = ring.get("field", {"kind": "rational"})
    try:
        field = field_from_spec(field_raw)
    except PreconditionError as exc:
        raise ParseError(f"ring: {exc}") from exc
    field_spec = (
        ("rational",) if field.kind == "rational" else ("prime", field.p)
    )

    module = _require(doc, "module", dict, "problem")
    ideal_strings = _require(module, "ideal", list, "module")
    gens = []
    for k, s in enumerate(ideal_strings):
        if not isinstance(s, str):
            raise ParseError(f"module.ideal[{k}] must be a string", token=repr(s))
        gens.append(parse_monomial(s, variables, where=f"module.ideal[{k}]"))

    seq_strings = _require(doc, "sequence", list, "problem")
    sequence = []
    for k, s in enumerate(seq_strings):
        if not isinstance(s, str):
            raise ParseError(f"sequence[{k}] must be a string", token=repr(s))
        sequence.append(parse_monomial(s, variables, where=f"sequence[{k}]"))

    tasks = _require(doc, "tasks", list, "problem")
    if not tasks:
        raise ParseError("tasks must be a nonempty list")
    for t in tasks:
        if t not in TASK_VOCABULARY:
            raise ParseError(f"unknown task {t!r}", token=repr(t))

    box_radius = doc.get("box_radius", 5)
    if not isinstance(box_radius, int) or isinstance(box_radius, bool) or box_radius < 0:
        raise ParseError(f"box_radius must be a nonnegative integer",
                         token=repr(box_radius))

    options_raw = doc.get("options", {})
    if not isinstance(options_raw, dict):
        raise ParseError("options must be an object")
    options = []
    for key, value in options_raw.items():
        if key not in KNOWN_OPTIONS:
            raise ParseError(f"unknown option {key!r}", token=repr(key))
        kind = KNOWN_OPTIONS[key]
        if kind is int and (not isinstance(value, int) or isinstance(value, bool)):
            raise ParseError(f"option {key!r} must be an integer",
                             token=repr(value))
        if key == "polynomial":
            value = _canonical_polynomial(value, variables)
        options.append((key, value))

    return Problem(
        variables=tuple(variables),
        field_spec=field_spec,
        ideal_gens=tuple(gens),
        sequence=tuple(sequence),
        tasks=tuple(tasks),
        box_radius=box_radius,
        options=tuple(sorted(options)),
    )


def _canonical_polynomial(value, variables):
    """Normalize the polynomial option to a tuple of (monomial, coeff) pairs.

    Accepts a plain monomial string (coefficient 1) or a list of
    [monomial, coefficient] pairs with integer or rational-string
    coefficients.
    """
    if isinstance(value, str):
        m = parse_monomial(value, variables, where="options.polynomial")
        return ((render_monomial(m, variables), "1"),)
    if not isinstance(value, list):
        raise ParseError(
            "options.polynomial must be a monomial string or a list of "
            "[monomial, coefficient] pairs"
        )
    out = []
    for k, item in enumerate(value):
        if (
            not isinstance(item, list)
            or len(item) != 2
            or not isinstance(item[0], str)
        ):
            raise ParseError(
                f"options.polynomial[{k}] must be a [monomial, coefficient] pair",
                token=repr(item),
            )
        mono, coeff = item
        m = parse_monomial(mono, variables, where=f"options.polynomial[{k}]")
        if isinstance(coeff, bool) or not isinstance(coeff, (int, str)):
            raise ParseError(
                f"options.polynomial[{k}]: coefficient must be an integer "
                "or a rational string",
                token=repr(coeff),
            )
        if isinstance(coeff, str) and not re.fullmatch(
            r"-?[0-9]+(/[0-9]+)?", coeff
        ):
            raise ParseError(
                f"options.polynomial[{k}]: bad rational literal",
                token=repr(coeff),
            )
        out.append((render_monomial(m, variables), str(coeff)))
    return tuple(out)


def serialize_problem(problem: Problem) -> str:
    return json.dumps(problem.to_dict(), indent=2, sort_keys=True) + "\n"
