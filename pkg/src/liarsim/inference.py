"""Classical inference over a liar cycle.

Reasoning proceeds by hypothesizing a truth value for one sentence, reading
off the value this forces on the sentence it speaks about, and endorsing
that inferred value as the next hypothesis.  For a paradoxical configuration
this walk closes after exactly 2m steps, visiting every sentence once with
each truth value; the closed walk anchors both the state assignment and the
discrete evolution.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .config import Configuration, validate
from .errors import NotParadoxical, OutOfRange


@dataclass(frozen=True)
class HypothesisStep:
    """One hypothesis event: at position ``step``, ``sentence`` is taken
    to have truth value ``value``."""

    step: int
    sentence: int
    value: bool


@dataclass(frozen=True)
class ReasoningCycle:
    """The closed 2m-step hypothesis sequence of a paradoxical configuration."""

    m: int
    steps: tuple[HypothesisStep, ...]

    def true_step(self, sentence: int) -> int:
        """Position at which ``sentence`` is hypothesized true."""
        for s in self.steps:
            if s.sentence == sentence and s.value:
                return s.step
        raise OutOfRange(f"sentence {sentence} not in cycle")

    def hypothesis_at(self, step: int) -> tuple[int, bool]:
        """(sentence, value) hypothesized at 1-based position ``step``,
        taken cyclically."""
        s = self.steps[(step - 1) % len(self.steps)]
        return s.sentence, s.value


def infer_next(config: Configuration, sentence: int, value: bool) -> tuple[int, bool]:
    """Truth value forced on the referent of ``sentence`` by hypothesizing
    ``value`` for it.

    An affirming claim propagates the value; a negating claim flips it
    (a false sentence makes the negation of its claim hold).
    """
    if not 1 <= sentence <= config.m:
        raise OutOfRange(f"sentence {sentence} outside 1..{config.m}")
    return config.referent_of(sentence), value != config.is_negating(sentence)


def reasoning_cycle(
    config: Configuration, start_sentence: int = 1, start_value: bool = True
) -> ReasoningCycle:
    """Closed 2m-step hypothesis walk from the given start hypothesis.

    Raises NotParadoxical when the walk closes after m steps with the start
    value unflipped (even negation count).
    """
    config = validate(config)
    m = config.m
    steps = [HypothesisStep(1, start_sentence, start_value)]
    sentence, value = start_sentence, start_value
    for k in range(2, 2 * m + 1):
        sentence, value = infer_next(config, sentence, value)
        if k == m + 1 and (sentence, value) == (start_sentence, start_value):
            raise NotParadoxical(
                "walk closed after m steps without flipping the start value"
            )
        steps.append(HypothesisStep(k, sentence, value))
    return ReasoningCycle(m, tuple(steps))


def cycle_to_json(cycle: ReasoningCycle) -> str:
    """Serialize as a JSON array of {"step", "sentence", "value": "T"|"F"}."""
    return json.dumps(
        [
            {"step": s.step, "sentence": s.sentence, "value": "T" if s.value else "F"}
            for s in cycle.steps
        ]
    )


def cycle_from_json(text: str) -> ReasoningCycle:
    items = json.loads(text)
    steps = tuple(
        HypothesisStep(int(o["step"]), int(o["sentence"]), o["value"] == "T")
        for o in items
    )
    if len(steps) % 2 != 0 or not steps:
        raise OutOfRange(f"cycle length {len(steps)} is not a positive even number")
    return ReasoningCycle(len(steps) // 2, steps)
