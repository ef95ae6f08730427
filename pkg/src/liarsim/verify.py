"""Self-contained invariant suite behind the ``verify`` command.

Each check exercises one structural promise of the model: closure of the
reasoning cycle, non-degenerate entry occupation, index linearization
round-trips, the canonical eight-sentence reference data, agreement between
discrete stepping and the continuous propagator at integer times, the
unitary group laws, time invariance of the unreasoned state, projector
completeness, and the minimal-dimension audit.

The eight-sentence ground truth lives in module constants so a corrupted
copy is observable: the pairing check reads the constants at call time and
must fail if they disagree with the freshly computed state.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .audit import verify_minimality
from .config import (
    Configuration,
    count_paradoxical,
    enumerate_paradoxical,
    eight_liar,
    is_paradoxical,
    one_liar,
    simple_liar,
)
from .errors import OutOfRange
from .evolution import (
    apply_steps,
    build_evolution,
    hamiltonian,
    principal_phases,
    propagate,
    propagator,
    step_matrix,
)
from .inference import reasoning_cycle
from .measurement import (
    collapse,
    hypothesis_projector,
    projection_probability,
    single_entry_projector,
)
from .statespace import TensorIndex, build_initial_state, cycle_states, kappa

SPECTRAL_TOLERANCE = 1e-10
ADDITIVITY_TOLERANCE = 1e-12
VERIFY_SEED = 20210905

# Canonical reference data for the eight-sentence cycle: the 16 basis tuples
# of the unreasoned state in step order and their embedded linear indices.
CANONICAL_EIGHT_TUPLES: tuple[TensorIndex, ...] = (
    (15, 10, 8, 12, 7, 13, 4, 9),
    (14, 9, 16, 11, 6, 12, 3, 8),
    (13, 8, 7, 10, 5, 11, 2, 16),
    (12, 16, 6, 9, 4, 10, 1, 7),
    (11, 7, 5, 8, 3, 9, 15, 6),
    (10, 6, 4, 16, 2, 8, 14, 5),
    (9, 5, 3, 7, 1, 16, 13, 4),
    (8, 4, 2, 6, 15, 7, 12, 3),
    (16, 3, 1, 5, 14, 6, 11, 2),
    (7, 2, 15, 4, 13, 5, 10, 1),
    (6, 1, 14, 3, 12, 4, 9, 15),
    (5, 15, 13, 2, 11, 3, 8, 14),
    (4, 14, 12, 1, 10, 2, 16, 13),
    (3, 13, 11, 15, 9, 1, 7, 12),
    (2, 12, 10, 14, 8, 15, 6, 11),
    (1, 11, 9, 13, 16, 14, 5, 10),
)
CANONICAL_EIGHT_EMBEDDED: tuple[int, ...] = (
    3917179961,
    3640285992,
    3345566240,
    3210230023,
    2789681382,
    2503940053,
    2217086916,
    1930815155,
    4060403106,
    1642316945,
    1355985807,
    1321312894,
    1034981885,
    749633644,
    463306331,
    177012042,
)


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str


def all_passed(results: tuple[CheckResult, ...]) -> bool:
    return all(r.passed for r in results)


def _sample_configs(m_max: int) -> tuple[Configuration, ...]:
    configs = [one_liar()]
    configs.extend(simple_liar(m) for m in range(2, min(m_max, 6) + 1))
    if m_max >= 8:
        configs.append(eight_liar())
    return tuple(configs)


def _false_step(cycle, sentence: int) -> int:
    t = cycle.true_step(sentence)
    period = 2 * cycle.m
    return (t - 1 + cycle.m) % period + 1


def _check_counting(m_max: int) -> CheckResult:
    counts = []
    for m in range(1, min(m_max, 5) + 1):
        expected = count_paradoxical(m)
        found = sum(1 for _ in enumerate_paradoxical(m))
        if found != expected:
            return CheckResult(
                "counting", False, f"m={m}: enumerated {found}, counted {expected}"
            )
        counts.append(expected)
    for m in range(1, 21):
        if count_paradoxical(m) != math.factorial(m - 1) * 2 ** (m - 1):
            return CheckResult("counting", False, f"closed form mismatch at m={m}")
    return CheckResult("counting", True, f"enumerated {counts}, closed form to m=20")


def _check_cycle_closure(configs) -> CheckResult:
    for config in configs:
        m = config.m
        for start_value in (True, False):
            cycle = reasoning_cycle(config, 1, start_value)
            seen: dict[int, list] = {}
            for s in cycle.steps:
                seen.setdefault(s.sentence, []).append(s)
            for i in range(1, m + 1):
                occ = seen.get(i, [])
                if len(occ) != 2:
                    return CheckResult(
                        "cycle-closure", False, f"m={m}: sentence {i} appears {len(occ)}x"
                    )
                gap = (occ[1].step - occ[0].step) % (2 * m)
                if gap != m or occ[0].value == occ[1].value:
                    return CheckResult(
                        "cycle-closure",
                        False,
                        f"m={m}: sentence {i} occurrences not complementary m apart",
                    )
    return CheckResult("cycle-closure", True, f"{len(configs)} configs, both starts")


def _check_no_degenerescence(configs, m_max: int, rng) -> CheckResult:
    pool = list(configs)
    for m in range(2, min(m_max, 5) + 1):
        enumerated = list(enumerate_paradoxical(m))
        take = min(len(enumerated), 6)
        picks = rng.choice(len(enumerated), size=take, replace=False)
        pool.extend(enumerated[int(k)] for k in picks)
    for config in pool:
        m = config.m
        states = cycle_states(config)
        for i in range(1, m + 1):
            column = sorted(s[i - 1] for s in states)
            if column != list(range(1, 2 * m + 1)):
                return CheckResult(
                    "no-degenerescence",
                    False,
                    f"m={m}: sentence {i} entries {column}",
                )
    return CheckResult("no-degenerescence", True, f"{len(pool)} configs, all columns full")


def _check_kappa_roundtrip(m_max: int, rng) -> CheckResult:
    from .statespace import kappa_inverse

    trials = 0
    for m in range(1, m_max + 1):
        n = 2 * m
        for _ in range(200):
            idx = tuple(int(x) for x in rng.integers(1, n + 1, size=m))
            e = kappa(idx, n)
            if not 1 <= e <= n**m or kappa_inverse(e, m, n) != idx:
                return CheckResult("kappa-roundtrip", False, f"failed at m={m}, {idx}")
            trials += 1
    return CheckResult("kappa-roundtrip", True, f"{trials} random tuples, m 1..{m_max}")


def _check_canonical_pairing() -> CheckResult:
    states = cycle_states(eight_liar())
    if states != CANONICAL_EIGHT_TUPLES:
        return CheckResult("canonical-pairing", False, "state tuples differ from record")
    embedded = tuple(kappa(idx) for idx in states)
    if embedded != CANONICAL_EIGHT_EMBEDDED:
        return CheckResult(
            "canonical-pairing", False, "embedded indices differ from record"
        )
    return CheckResult("canonical-pairing", True, "16 tuples and embeddings match record")


def _check_integer_steps(configs) -> CheckResult:
    for config in configs:
        m = config.m
        period = 2 * m
        ev = build_evolution(config)
        cycle = reasoning_cycle(config, 1, True)
        psi0 = build_initial_state(config)
        for start_value in (True, False):
            proj = hypothesis_projector(1, start_value, m)
            state, _ = collapse(psi0, proj)
            t0 = cycle.true_step(1) if start_value else _false_step(cycle, 1)
            for t in range(0, period + 1):
                expect_sentence, expect_value = cycle.hypothesis_at(
                    (t0 - 1 + t) % period + 1
                )
                stepped = apply_steps(ev, state, t)
                smooth = propagate(ev, state, float(t))
                for j in range(1, m + 1):
                    for v in (True, False):
                        want = 1.0 if (j, v) == (expect_sentence, expect_value) else 0.0
                        p_exact = projection_probability(
                            stepped, hypothesis_projector(j, v, m)
                        )
                        p_smooth = projection_probability(
                            smooth, hypothesis_projector(j, v, m)
                        )
                        if abs(p_exact - want) > ADDITIVITY_TOLERANCE:
                            return CheckResult(
                                "integer-steps",
                                False,
                                f"m={m} t={t} ({j},{v}): stepped {p_exact}, want {want}",
                            )
                        if abs(p_smooth - want) > SPECTRAL_TOLERANCE:
                            return CheckResult(
                                "integer-steps",
                                False,
                                f"m={m} t={t} ({j},{v}): smooth {p_smooth}, want {want}",
                            )
    return CheckResult("integer-steps", True, "hypothesis indicators match the cycle")


def _check_spectral(m_values, rng) -> CheckResult:
    worst = 0.0
    for m in m_values:
        config = eight_liar() if m == 8 else (one_liar() if m == 1 else simple_liar(m))
        ev = build_evolution(config)
        u_d = step_matrix(ev)
        eye = np.eye(ev.size)
        worst = max(worst, float(np.abs(propagator(ev, 1.0) - u_d).max()))
        h = hamiltonian(ev)
        worst = max(worst, float(np.abs(h - h.conj().T).max()))
        for _ in range(25):
            tau, sigma = rng.uniform(-4 * m, 4 * m, size=2)
            u_tau = propagator(ev, tau)
            worst = max(worst, float(np.abs(u_tau @ u_tau.conj().T - eye).max()))
            residual = u_tau @ propagator(ev, sigma) - propagator(ev, tau + sigma)
            worst = max(worst, float(np.abs(residual).max()))
    passed = worst <= SPECTRAL_TOLERANCE
    return CheckResult("spectral", passed, f"max residual {worst:.3e}")


def _check_initial_state_invariance(configs, rng) -> CheckResult:
    worst = 0.0
    for config in configs:
        ev = build_evolution(config)
        psi0 = build_initial_state(config)
        for _ in range(25):
            tau = float(rng.uniform(-8 * config.m, 8 * config.m))
            moved = propagate(ev, psi0, tau)
            delta = sum(
                abs(moved.amplitude(idx) - psi0.amplitude(idx)) ** 2 for idx in ev.basis
            )
            worst = max(worst, delta**0.5)
    passed = worst <= SPECTRAL_TOLERANCE
    return CheckResult("initial-state-invariance", passed, f"max deviation {worst:.3e}")


def _check_completeness(configs, rng) -> CheckResult:
    worst = 0.0
    for config in configs:
        m = config.m
        for i in range(1, m + 1):
            entries = set()
            for j in range(1, 2 * m + 1):
                spec = single_entry_projector(i, j, m)
                if spec.entry_set & entries:
                    return CheckResult(
                        "completeness", False, f"m={m}: overlapping projectors at {i}"
                    )
                entries |= spec.entry_set
            if entries != set(range(1, 2 * m + 1)):
                return CheckResult(
                    "completeness", False, f"m={m}: sentence {i} misses entries"
                )
        ev = build_evolution(config)
        psi0 = build_initial_state(config)
        state, _ = collapse(psi0, hypothesis_projector(1, True, m))
        for _ in range(10):
            tau = float(rng.uniform(0, 4 * m))
            phi = propagate(ev, state, tau)
            for i in range(1, m + 1):
                total = sum(
                    projection_probability(phi, single_entry_projector(i, j, m))
                    for j in range(1, 2 * m + 1)
                )
                worst = max(worst, abs(total - 1.0))
    passed = worst <= ADDITIVITY_TOLERANCE
    return CheckResult("completeness", passed, f"max additivity defect {worst:.3e}")


def _check_branch_independence(m_values) -> CheckResult:
    for m in m_values:
        config = eight_liar() if m == 8 else (one_liar() if m == 1 else simple_liar(m))
        ev = build_evolution(config)
        size = ev.size
        flipped = tuple(
            -theta if abs(abs(theta) - np.pi) < 1e-12 else theta
            for theta in principal_phases(size)
        )
        f = ev.fourier_frame
        u_d = step_matrix(ev)
        power = np.eye(size)
        for t in range(0, size + 1):
            alt = f @ np.diag(np.exp(1j * np.asarray(flipped) * t)) @ f.conj().T
            if np.abs(alt - power).max() > SPECTRAL_TOLERANCE:
                return CheckResult(
                    "branch-independence", False, f"m={m}: integer step t={t} differs"
                )
            power = u_d @ power
        half = f @ np.diag(np.exp(1j * np.asarray(flipped) * 0.5)) @ f.conj().T
        if np.abs(half - propagator(ev, 0.5)).max() <= SPECTRAL_TOLERANCE:
            return CheckResult(
                "branch-independence", False, f"m={m}: branch flip had no effect"
            )
    return CheckResult(
        "branch-independence", True, "integer steps branch-free, half steps branch-bound"
    )


def _check_dimension_audit(m_max: int) -> CheckResult:
    for m in range(2, min(m_max, 4) + 1):
        report = verify_minimality(m)
        if not report.passed:
            return CheckResult("dimension-audit", False, f"m={m} report failed")
        witness = report.contradiction.witness
        expected_product = (
            f"tau[1,1]*alpha({','.join(['1'] * (m - 1))},2) = 0"
        )
        if witness.violated_zero_product != expected_product:
            return CheckResult(
                "dimension-audit",
                False,
                f"m={m}: unexpected witness {witness.violated_zero_product}",
            )
    return CheckResult("dimension-audit", True, "m=2..4 minimal dimension confirmed")


def run_verification(m_max: int = 8) -> tuple[CheckResult, ...]:
    """Run every check up to configuration size m_max and collect results."""
    if not 1 <= m_max <= 8:
        raise OutOfRange(f"verification covers 1 <= m_max <= 8, got {m_max}")
    rng = np.random.default_rng(VERIFY_SEED)
    configs = _sample_configs(m_max)
    for config in configs:
        assert is_paradoxical(config)
    m_values = tuple(m for m in (1, 2, 3, 8) if m <= m_max)
    results = [
        _check_counting(m_max),
        _check_cycle_closure(configs),
        _check_no_degenerescence(configs, m_max, rng),
        _check_kappa_roundtrip(m_max, rng),
        _check_canonical_pairing(),
        _check_integer_steps(configs),
        _check_spectral(m_values, rng),
        _check_initial_state_invariance(configs, rng),
        _check_completeness(configs, rng),
        _check_branch_independence(m_values),
        _check_dimension_audit(m_max),
    ]
    return tuple(results)
