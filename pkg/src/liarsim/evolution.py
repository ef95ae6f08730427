"""Discrete step evolution on the 2m-dimensional reasoning subspace and its
continuous one-parameter extension.

One reasoning step advances the cycle basis by one position, so in step
order the evolution is the cyclic-shift permutation (ones on the lower
off-diagonal plus the wrap-around corner).  A relabeled cyclic shift is
diagonal in the discrete Fourier frame, so the spectral data is written
down analytically from the 2m-th roots of unity; no iterative eigensolver
is involved and repeated builds are bit-identical.

Branch convention, which pins every continuous-time quantity:
U(tau) = exp(tau * log U_D) with the principal logarithm taken
eigenvalue-wise, eigenphases in (-pi, pi] and the phase of -1 mapped to +pi.
Then U(1) equals the discrete step exactly, integer-step behavior is
independent of the branch, and the generator H = i log U_D is Hermitian
with a single zero mode spanned by the uniform superposition of the cycle
basis (which is why the unreasoned initial state is time invariant).
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass

import numpy as np

from .config import Configuration, validate
from .errors import OutOfRange, SupportOutsideSubspace, ZeroProbabilityMeasurement
from .inference import reasoning_cycle
from .measurement import (
    collapse,
    hypothesis_projector,
    projection_probability,
)
from .statespace import SparseState, TensorIndex, build_initial_state, cycle_states


def principal_phases(size: int) -> tuple[float, ...]:
    """Principal eigenphases of the size-cycle shift: -2*pi*k/size wrapped
    into (-pi, pi], with -pi mapped to +pi."""
    phases = []
    for k in range(size):
        raw = -2.0 * math.pi * k / size
        if raw <= -math.pi:
            raw += 2.0 * math.pi
        phases.append(raw + 0.0)
    return tuple(phases)


def fourier_frame(size: int) -> np.ndarray:
    """Unitary frame F with F[t, k] = exp(2i*pi*t*k/size)/sqrt(size); column
    k is the shift eigenvector with eigenvalue exp(i * principal_phases[k])."""
    t = np.arange(size)
    return np.exp(2j * np.pi * np.outer(t, t) / size) / np.sqrt(size)


@dataclass(frozen=True, eq=False)
class SubspaceEvolution:
    """Spectral description of one reasoning step on the cycle basis.

    ``basis`` lists the 2m cycle states in step order; ``step_perm[t]`` is
    the basis position one step after position t.  ``fourier_frame`` and
    ``eigenphases`` satisfy U_D = F diag(exp(i*theta)) F^dagger exactly.
    """

    m: int
    n: int
    basis: tuple[TensorIndex, ...]
    step_perm: tuple[int, ...]
    eigenphases: tuple[float, ...]
    fourier_frame: np.ndarray

    @property
    def size(self) -> int:
        return len(self.basis)

    def position(self, idx: TensorIndex) -> int:
        try:
            return self.basis.index(tuple(idx))
        except ValueError:
            raise SupportOutsideSubspace(
                f"tuple {tuple(idx)} is not one of the {self.size} cycle states"
            ) from None


def build_evolution(config: Configuration) -> SubspaceEvolution:
    """Assemble basis, step permutation and analytic spectral frame."""
    config = validate(config)
    basis = cycle_states(config)
    size = len(basis)
    return SubspaceEvolution(
        m=config.m,
        n=2 * config.m,
        basis=basis,
        step_perm=tuple((t + 1) % size for t in range(size)),
        eigenphases=principal_phases(size),
        fourier_frame=fourier_frame(size),
    )


def step_matrix(ev: SubspaceEvolution) -> np.ndarray:
    """The step permutation as a dense matrix on the cycle basis."""
    u = np.zeros((ev.size, ev.size))
    for t, succ in enumerate(ev.step_perm):
        u[succ, t] = 1.0
    return u


def hamiltonian(ev: SubspaceEvolution) -> np.ndarray:
    """Generator H = i log U_D on the cycle basis; Hermitian, with
    eigenvalues -theta_k over the principal eigenphases."""
    f = ev.fourier_frame
    return f @ np.diag(-np.asarray(ev.eigenphases)) @ f.conj().T


def propagator(ev: SubspaceEvolution, tau: float) -> np.ndarray:
    """U(tau) = exp(tau * log U_D) on the cycle basis via the spectral frame."""
    if not math.isfinite(tau):
        raise OutOfRange(f"evolution time must be finite, got {tau}")
    f = ev.fourier_frame
    phases = np.exp(1j * np.asarray(ev.eigenphases) * tau)
    return f @ np.diag(phases) @ f.conj().T


def _coefficient_vector(ev: SubspaceEvolution, state: SparseState) -> np.ndarray:
    positions = {idx: t for t, idx in enumerate(ev.basis)}
    vec = np.zeros(ev.size, dtype=complex)
    for idx, a in state.amplitudes.items():
        if idx not in positions:
            raise SupportOutsideSubspace(
                f"state has support on {idx}, outside the evolution subspace"
            )
        vec[positions[idx]] = a
    return vec


def _state_from_vector(ev: SubspaceEvolution, vec: np.ndarray) -> SparseState:
    return SparseState(
        ev.m, ev.n, {idx: complex(vec[t]) for t, idx in enumerate(ev.basis)}
    )


def propagate(ev: SubspaceEvolution, state: SparseState, tau: float) -> SparseState:
    """Evolve ``state`` for ``tau`` reasoning steps (tau may be fractional).

    An integral tau takes the exact permutation route, where the branch
    convention makes U(tau) a plain power of the step matrix; fractional
    times go through the spectral frame.
    """
    if not math.isfinite(tau):
        raise OutOfRange(f"evolution time must be finite, got {tau}")
    if tau == int(tau):
        return apply_steps(ev, state, int(tau))
    vec = _coefficient_vector(ev, state)
    f = ev.fourier_frame
    phases = np.exp(1j * np.asarray(ev.eigenphases) * tau)
    out = f @ (phases * (f.conj().T @ vec))
    return _state_from_vector(ev, out)


def apply_steps(ev: SubspaceEvolution, state: SparseState, count: int = 1) -> SparseState:
    """Apply the step permutation ``count`` times, exactly (no floats)."""
    positions = {idx: t for t, idx in enumerate(ev.basis)}
    shift = count % ev.size
    moved: dict[TensorIndex, complex] = {}
    for idx, a in state.amplitudes.items():
        if idx not in positions:
            raise SupportOutsideSubspace(
                f"state has support on {idx}, outside the evolution subspace"
            )
        moved[ev.basis[(positions[idx] + shift) % ev.size]] = a
    return SparseState(ev.m, ev.n, moved)


@dataclass(frozen=True)
class TraceRow:
    """Truth/falsehood hypothesis probabilities for one sentence at one time."""

    t: float
    sentence: int
    p_true: float
    p_false: float


def probability_trace(
    config: Configuration,
    initial_measurement: tuple[int, bool],
    times: tuple[float, ...] | list[float],
    sentences: tuple[int, ...] | list[int] | None = None,
    time_scale: float = 1.0,
    renormalize: bool = True,
) -> tuple[TraceRow, ...]:
    """Truth and falsehood probability traces after an initial measurement.

    The initial state is collapsed by the hypothesis projector of
    ``initial_measurement`` (renormalized unless ``renormalize`` is False,
    in which case probabilities keep the raw 1/(2m) scale), then evolved to
    each requested time.  Times are in output units of ``time_scale`` per
    reasoning step, i.e. the evolution parameter is t / time_scale.  Rows
    are ordered time-major, sentence-minor (ascending).
    """
    config = validate(config)
    m = config.m
    start_sentence, start_value = initial_measurement
    if sentences is None:
        sentences = tuple(range(1, m + 1))
    else:
        sentences = tuple(sorted(set(sentences)))
        for i in sentences:
            if not 1 <= i <= m:
                raise OutOfRange(f"sentence {i} outside 1..{m}")
    if time_scale <= 0:
        raise OutOfRange(f"time scale must be positive, got {time_scale}")

    ev = build_evolution(config)
    psi0 = build_initial_state(config)
    start_proj = hypothesis_projector(start_sentence, start_value, m)
    psi, probability = collapse(psi0, start_proj, renormalize=renormalize)
    if probability == 0.0:
        raise ZeroProbabilityMeasurement(
            f"measuring sentence {start_sentence} "
            f"{'true' if start_value else 'false'} has probability 0"
        )

    projs = {
        i: (hypothesis_projector(i, True, m), hypothesis_projector(i, False, m))
        for i in sentences
    }
    rows = []
    for t in times:
        phi = propagate(ev, psi, t / time_scale)
        for i in sentences:
            p_true = projection_probability(phi, projs[i][0])
            p_false = projection_probability(phi, projs[i][1])
            rows.append(TraceRow(float(t), i, p_true, p_false))
    return tuple(rows)


def time_grid(t_max: float, dt: float) -> tuple[float, ...]:
    """Deterministic grid 0, dt, 2*dt, ... up to and including t_max."""
    if dt <= 0 or t_max < 0:
        raise OutOfRange(f"need dt > 0 and t_max >= 0, got dt={dt}, t_max={t_max}")
    count = int(math.floor(t_max / dt + 1e-9))
    return tuple(j * dt for j in range(count + 1))


def trace_to_csv(
    rows: tuple[TraceRow, ...] | list[TraceRow],
    header_lines: tuple[str, ...] | list[str] = (),
    precision: int = 12,
) -> str:
    """Render rows as CSV: ``t,sentence,p_true,p_false`` with the given
    number of significant digits; optional comment lines precede the header."""
    fmt = f"{{:.{precision}g}}"
    out = [f"# {line}" for line in header_lines]
    out.append("t,sentence,p_true,p_false")
    for r in rows:
        out.append(
            f"{fmt.format(r.t)},{r.sentence},{fmt.format(r.p_true)},{fmt.format(r.p_false)}"
        )
    return "\n".join(out) + "\n"


def trace_to_json(rows: tuple[TraceRow, ...] | list[TraceRow]) -> str:
    """Render rows as a JSON array of row objects."""
    return json.dumps(
        [
            {"t": r.t, "sentence": r.sentence, "p_true": r.p_true, "p_false": r.p_false}
            for r in rows
        ]
    )
