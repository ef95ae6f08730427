"""Liar-cycle configurations: validation, paradox test, counting, enumeration.

A configuration is a ring of m sentences, each speaking about exactly one
other sentence (a single m-cycle) and claiming it to be true or false.  The
configuration is paradoxical, i.e. has no consistent classical truth
assignment, exactly when the number of negating claims is odd.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import permutations, product
from math import comb, factorial
from typing import Iterator

from .errors import BoundExceeded, NotSingleCycle, OutOfRange

ENUMERATION_BOUND = 8


@dataclass(frozen=True)
class Configuration:
    """One m-sentence liar cycle.

    ``referent[i-1]`` is the 1-based sentence that sentence ``i`` speaks
    about; ``negating[i-1]`` is True when sentence ``i`` claims its referent
    is false, False when it claims it is true.
    """

    m: int
    referent: tuple[int, ...]
    negating: tuple[bool, ...]

    def referent_of(self, sentence: int) -> int:
        return self.referent[sentence - 1]

    def is_negating(self, sentence: int) -> bool:
        return self.negating[sentence - 1]


def validate(config: Configuration) -> Configuration:
    """Return ``config`` unchanged if it is a well-formed single cycle.

    The reference map must be a permutation of 1..m consisting of one
    m-cycle; the identity map is accepted only for m = 1 (self-reference).
    """
    m = config.m
    if m < 1:
        raise OutOfRange(f"sentence count must be positive, got {m}")
    if len(config.referent) != m or len(config.negating) != m:
        raise OutOfRange(
            f"referent/negating must have length m={m}, "
            f"got {len(config.referent)}/{len(config.negating)}"
        )
    for i, r in enumerate(config.referent, start=1):
        if not 1 <= r <= m:
            raise OutOfRange(f"referent of sentence {i} is {r}, outside 1..{m}")
    # Walk the cycle from sentence 1; a single m-cycle visits every sentence
    # exactly once before returning.
    seen = set()
    s = 1
    for _ in range(m):
        if s in seen:
            raise NotSingleCycle(f"reference map revisits sentence {s} early")
        seen.add(s)
        s = config.referent_of(s)
    if s != 1 or len(seen) != m:
        raise NotSingleCycle("reference map is not a single cycle over all sentences")
    return config


def is_paradoxical(config: Configuration) -> bool:
    """True iff the number of negating claims is odd."""
    return sum(config.negating) % 2 == 1


def count_paradoxical(m: int) -> int:
    """Exact number of paradoxical m-sentence configurations.

    (m-1)! single cycles, times the number of ways to place an odd number
    of negations on the m claims.  Equals (m-1)! * 2^(m-1).
    """
    if m < 1:
        raise OutOfRange(f"sentence count must be positive, got {m}")
    return factorial(m - 1) * sum(comb(m, k) for k in range(1, m + 1, 2))


def enumerate_paradoxical(
    m: int, *, bound: int = ENUMERATION_BOUND
) -> Iterator[Configuration]:
    """Yield every paradoxical m-sentence configuration exactly once.

    Deterministic order: cycles by lexicographic successor list of
    (2, ..., m), then negation patterns lexicographically with False < True.
    """
    if m < 1:
        raise OutOfRange(f"sentence count must be positive, got {m}")
    if m > bound:
        raise BoundExceeded(
            f"enumeration of m={m} exceeds bound {bound} "
            f"({count_paradoxical(m)} configurations)"
        )
    for order in permutations(range(2, m + 1)):
        chain = (1,) + order
        referent = [0] * m
        for a, b in zip(chain, chain[1:] + (1,)):
            referent[a - 1] = b
        for negs in product((False, True), repeat=m):
            if sum(negs) % 2 == 1:
                yield validate(Configuration(m, tuple(referent), negs))


def config_to_json(config: Configuration) -> str:
    """Serialize to the interchange form {"m", "referent", "negating"}."""
    return json.dumps(
        {
            "m": config.m,
            "referent": list(config.referent),
            "negating": list(config.negating),
        }
    )


def config_from_json(text: str) -> Configuration:
    """Parse and validate the interchange form produced by config_to_json."""
    obj = json.loads(text)
    try:
        cfg = Configuration(
            m=int(obj["m"]),
            referent=tuple(int(r) for r in obj["referent"]),
            negating=tuple(bool(b) for b in obj["negating"]),
        )
    except (KeyError, TypeError) as exc:
        raise OutOfRange(f"malformed configuration object: {exc}") from exc
    return validate(cfg)


def one_liar() -> Configuration:
    """The elementary self-negating sentence."""
    return Configuration(1, (1,), (True,))


def simple_liar(m: int) -> Configuration:
    """Chain 1 -> 2 -> ... -> m -> 1 with a single negation on sentence m."""
    if m < 1:
        raise OutOfRange(f"sentence count must be positive, got {m}")
    referent = tuple(i % m + 1 for i in range(1, m + 1))
    negating = tuple(i == m for i in range(1, m + 1))
    return validate(Configuration(m, referent, negating))


def eight_liar() -> Configuration:
    """The canonical eight-sentence instance used as reference data.

    Reference cycle 1 -> 3 -> 8 -> 2 -> 7 -> 4 -> 6 -> 5 -> 1 with negations
    on sentences 1, 2, 5, 6 and 7; its reasoning sequence starting from
    hypothesizing sentence 1 true is
    1T, 3F, 8F, 2F, 7T, 4F, 6F, 5T, 1F, 3T, 8T, 2T, 7F, 4T, 6T, 5F.
    """
    referent = (3, 7, 8, 6, 1, 5, 4, 2)
    negating = (True, True, False, False, True, True, True, False)
    return validate(Configuration(8, referent, negating))
