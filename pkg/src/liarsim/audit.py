"""Symbolic audit of the minimal per-sentence dimension.

The reasoning model needs each sentence subspace to hold 2m entries.  The
argument is a small constraint system: demand that each sentence's truth
hypothesis projector and falsehood hypothesis projector map the initial
superposition onto a single prescribed basis tuple with a strictly positive
outcome coefficient.  That is 2m operator equations.  With n = 2m entries
per sentence the equations admit exactly one solution; with n = 2m - 1 one
falsehood target must reuse entries already claimed elsewhere, and three
derived facts collide.

The audit never touches all n^m amplitudes.  Projector coefficients are
binary (a diagonal projector either keeps an entry or kills it) and outcome
coefficients are carried as opaque positive symbols, so every scalar
component equation is a product of at most two unknowns and propagation
needs only the tuples that appear as some operator's target.  Contradiction
is therefore exact, not a numerical judgement.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Mapping

from .errors import OutOfRange, UnsupportedDimension
from .statespace import TensorIndex

AUDIT_BOUND = 4


@dataclass(frozen=True)
class Constraint:
    """One scalar component equation: coefficient * amplitude(target) = rhs.

    ``family`` is "tau" for a truth projector coefficient and "phi" for a
    falsehood one; ``entry`` is the entry the coefficient gates and
    ``sentence`` the operator's sentence.  ``outcome`` names the positive
    symbol on the right-hand side for an anchor equation and is None for a
    zero product.
    """

    family: str
    entry: int
    sentence: int
    target: TensorIndex
    outcome: str | None

    def coefficient_name(self) -> str:
        return f"{self.family}[{self.entry},{self.sentence}]"

    def amplitude_name(self) -> str:
        return "alpha(" + ",".join(str(x) for x in self.target) + ")"

    def product_name(self) -> str:
        return f"{self.coefficient_name()}*{self.amplitude_name()}"


@dataclass(frozen=True)
class ConstraintSystem:
    """The 2m operator equations expanded over the materialized tuples.

    ``anchors`` holds the target component of each operator equation;
    ``zero_products`` holds every other component, ordered operator first
    (truth operators by sentence, then falsehood operators by sentence) and
    target tuple second, which is the order propagation consumes them in.
    """

    m: int
    n: int
    targets: tuple[TensorIndex, ...]
    anchors: tuple[Constraint, ...]
    zero_products: tuple[Constraint, ...]


def _operator_targets(m: int, n: int) -> tuple[tuple[str, int, TensorIndex, str], ...]:
    ops = []
    for i in range(1, m + 1):
        ops.append(("tau", i, (i,) * m, f"t{i}"))
    if n == 2 * m:
        for i in range(1, m + 1):
            ops.append(("phi", i, (m + i,) * m, f"f{i}"))
    else:
        for i in range(1, m):
            ops.append(("phi", i, (m + i,) * m, f"f{i}"))
        # entry 2m does not exist here, so the last falsehood target is
        # forced back onto low entries already used by the truth targets
        ops.append(("phi", m, (1,) * (m - 1) + (2,), f"f{m}"))
    return tuple(ops)


def build_constraints(m: int, n: int) -> ConstraintSystem:
    """Materialize the anchor equations and the zero products among their
    targets for sentence dimension n, which must be 2m or 2m - 1."""
    if m < 1:
        raise OutOfRange(f"need m >= 1, got {m}")
    if n not in (2 * m, 2 * m - 1):
        raise UnsupportedDimension(
            f"audit covers n = 2m and n = 2m-1 only, got n={n} for m={m}"
        )
    if n == 2 * m - 1 and m < 2:
        raise OutOfRange("the reduced-dimension system needs m >= 2 distinct entries")

    ops = _operator_targets(m, n)
    targets = tuple(t for _, _, t, _ in ops)
    anchors = tuple(
        Constraint(fam, target[i - 1], i, target, outcome)
        for fam, i, target, outcome in ops
    )
    zero_products = []
    for fam, i, own_target, _ in ops:
        for other in targets:
            if other == own_target:
                continue
            zero_products.append(Constraint(fam, other[i - 1], i, other, None))
    return ConstraintSystem(m, n, targets, anchors, tuple(zero_products))


@dataclass(frozen=True)
class Satisfiable:
    """Unique assignment satisfying every materialized equation."""

    m: int
    n: int
    coefficients: Mapping[str, int]
    amplitudes: Mapping[TensorIndex, str]
    transcript: tuple[str, ...]


@dataclass(frozen=True)
class ContradictionWitness:
    """The three derived facts that cannot hold together: an amplitude
    pinned to a positive symbol, a coefficient pinned to one, and the zero
    product of exactly those two unknowns."""

    nonzero_amplitude: str
    unit_coefficient: str
    violated_zero_product: str


@dataclass(frozen=True)
class Contradiction:
    m: int
    n: int
    witness: ContradictionWitness
    transcript: tuple[str, ...]


def solve_constraints(m: int, n: int) -> Satisfiable | Contradiction:
    """Propagate the materialized constraint system to a verdict.

    Each anchor pins its coefficient to 1 and its amplitude to a positive
    symbol (a product of binary-by-construction coefficients can only reach
    a positive value with both factors live).  Zero products then force the
    remaining unknowns to 0, unless a product's two factors are both already
    pinned nonzero, in which case the derivation stops with that product and
    the two facts behind it as the witness.
    """
    system = build_constraints(m, n)
    coeff: dict[str, int] = {}
    amp: dict[TensorIndex, str] = {}
    anchor_fact: dict[TensorIndex, str] = {}
    coeff_fact: dict[str, str] = {}
    transcript = []

    for c in system.anchors:
        name = c.coefficient_name()
        coeff[name] = 1
        amp[c.target] = c.outcome
        fact = f"{name} = 1 and {c.amplitude_name()} = {c.outcome} > 0"
        anchor_fact[c.target] = fact
        coeff_fact[name] = f"{name} = 1"
        transcript.append(f"anchor: {fact}")

    for c in system.zero_products:
        name = c.coefficient_name()
        cval = coeff.get(name)
        aval = amp.get(c.target)
        amp_live = aval is not None and aval != "0"
        if cval == 1 and amp_live:
            witness = ContradictionWitness(
                nonzero_amplitude=anchor_fact[c.target],
                unit_coefficient=coeff_fact[name],
                violated_zero_product=f"{c.product_name()} = 0",
            )
            transcript.append(
                f"violated: {c.product_name()} = 0 while {witness.unit_coefficient}"
                f" and {witness.nonzero_amplitude}"
            )
            return Contradiction(m, n, witness, tuple(transcript))
        if amp_live and cval is None:
            coeff[name] = 0
            transcript.append(
                f"zero product {c.product_name()} = 0 with {aval} > 0,"
                f" so {name} = 0"
            )
        elif cval == 1 and aval is None:
            amp[c.target] = "0"
            transcript.append(
                f"zero product {c.product_name()} = 0 with {name} = 1,"
                f" so {c.amplitude_name()} = 0"
            )
        # a product with a factor already pinned to zero holds as is

    return Satisfiable(m, n, dict(coeff), dict(amp), tuple(transcript))


@dataclass(frozen=True)
class MinimalityReport:
    """Joint verdict: solvable at n = 2m, contradictory one entry below."""

    m: int
    satisfiable: Satisfiable | Contradiction
    contradiction: Satisfiable | Contradiction

    @property
    def passed(self) -> bool:
        return isinstance(self.satisfiable, Satisfiable) and isinstance(
            self.contradiction, Contradiction
        )


def verify_minimality(m: int, bound: int = AUDIT_BOUND) -> MinimalityReport:
    """Run both branches of the audit for one m and report the verdicts."""
    if not 2 <= m <= bound:
        raise OutOfRange(f"audit covers 2 <= m <= {bound}, got {m}")
    return MinimalityReport(
        m=m,
        satisfiable=solve_constraints(m, 2 * m),
        contradiction=solve_constraints(m, 2 * m - 1),
    )


def report_to_json(report: MinimalityReport) -> str:
    """Machine-readable PASS/FAIL summary of a minimality report."""
    doc: dict[str, object] = {
        "m": report.m,
        "n_satisfiable": 2 * report.m,
        "n_contradictory": 2 * report.m - 1,
        "passed": report.passed,
    }
    if isinstance(report.contradiction, Contradiction):
        w = report.contradiction.witness
        doc["witness"] = {
            "nonzero_amplitude": w.nonzero_amplitude,
            "unit_coefficient": w.unit_coefficient,
            "violated_zero_product": w.violated_zero_product,
        }
    return json.dumps(doc, indent=2)
