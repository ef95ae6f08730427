"""Hypothesis and inference projectors with collapse semantics.

All observables here are diagonal in the product basis: a projector selects
a set of entry values on one sentence's factor and acts as the identity on
every other factor.  They are kept symbolic (sentence, entry set) and
applied by filtering sparse support; the full n^m matrix is never formed.
For each sentence the 2m single-entry projectors are mutually orthogonal
and sum to the identity, which is the completeness requirement the
truth/falsehood-by-inference entries exist to satisfy.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import OutOfRange
from .statespace import SparseState

RawProjection = tuple[SparseState, float]


@dataclass(frozen=True)
class ProjectorSpec:
    """Diagonal 0/1 projector: select ``entry_set`` on ``sentence``'s factor,
    identity elsewhere."""

    sentence: int
    entry_set: frozenset[int]


def single_entry_projector(sentence: int, entry: int, m: int) -> ProjectorSpec:
    """Rank-one-per-factor projector onto a single entry value."""
    if not 1 <= sentence <= m:
        raise OutOfRange(f"sentence {sentence} outside 1..{m}")
    if not 1 <= entry <= 2 * m:
        raise OutOfRange(f"entry {entry} outside 1..{2 * m}")
    return ProjectorSpec(sentence, frozenset((entry,)))


def truth_hypothesis_projector(sentence: int, m: int) -> ProjectorSpec:
    """Projector onto "sentence is true by hypothesis" (entry 2m-1)."""
    return single_entry_projector(sentence, 2 * m - 1, m)


def falsehood_hypothesis_projector(sentence: int, m: int) -> ProjectorSpec:
    """Projector onto "sentence is false by hypothesis" (entry 2m)."""
    return single_entry_projector(sentence, 2 * m, m)


def hypothesis_projector(sentence: int, value: bool, m: int) -> ProjectorSpec:
    if value:
        return truth_hypothesis_projector(sentence, m)
    return falsehood_hypothesis_projector(sentence, m)


def inference_projector(sentence: int, entry: int, m: int) -> ProjectorSpec:
    """Projector onto one truth-or-falsehood-by-inference entry.

    Inference entries are 1..2m-2; the two hypothesis entries are excluded.
    """
    if not 1 <= entry <= 2 * m - 2:
        raise OutOfRange(
            f"entry {entry} is not an inference entry (1..{2 * m - 2}); "
            "use the hypothesis projectors for entries "
            f"{2 * m - 1} and {2 * m}"
        )
    return single_entry_projector(sentence, entry, m)


def apply_projector(p: ProjectorSpec, state: SparseState) -> SparseState:
    """Raw (non-renormalized) projection: keep the support whose entry on
    ``p.sentence`` lies in ``p.entry_set``."""
    if not 1 <= p.sentence <= state.m:
        raise OutOfRange(f"sentence {p.sentence} outside 1..{state.m}")
    kept = {
        idx: a
        for idx, a in state.amplitudes.items()
        if idx[p.sentence - 1] in p.entry_set
    }
    return SparseState(state.m, state.n, kept)


def projection_probability(state: SparseState, p: ProjectorSpec) -> float:
    """Squared norm of the raw projection of ``state`` by ``p``."""
    if not 1 <= p.sentence <= state.m:
        raise OutOfRange(f"sentence {p.sentence} outside 1..{state.m}")
    return sum(
        abs(a) ** 2
        for idx, a in state.amplitudes.items()
        if idx[p.sentence - 1] in p.entry_set
    )


def collapse(
    state: SparseState, p: ProjectorSpec, renormalize: bool = True
) -> RawProjection:
    """Project ``state`` and report the outcome probability.

    The probability is the squared norm of the raw projection.  By default
    the projected state is rescaled back to norm 1; with renormalize=False
    the raw projection is returned unchanged.  A null projection yields the
    null state with probability 0.0 rather than an error.
    """
    projected = apply_projector(p, state)
    probability = projected.norm() ** 2
    if probability == 0.0:
        return SparseState(state.m, state.n, {}), 0.0
    if renormalize:
        projected = projected.normalized()
    return projected, probability
