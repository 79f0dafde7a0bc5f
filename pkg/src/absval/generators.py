"""Seeded matrix ensembles that satisfy claim hypotheses by construction.

Commuting families share an eigenbasis, ordered pairs are built as
base-plus-increment, and so on: nothing is rejection-sampled, because exact
algebraic hypotheses (commutation, self-adjointness) are measure zero for
generic random matrices.  Every generator is a pure function of its
:class:`Seed`, so any trial can be replayed bit-for-bit.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass

import numpy as np

from .core import as_matrix, symmetrize, adjoint, operator_norm

KINDS = (
    "unitary",
    "self_adjoint",
    "normal",
    "general",
    "anti_symmetric",
    "commuting_normal_family",
    "commuting_family_one_nonnormal",
    "commuting_positive_pair",
    "sa_pair_normal_product",
    "negative_cross_pair",
    "ordered_psd_pair",
    "sandwich_pair",
    "fuglede_pair",
)


def _mix64(master: int, trial: int) -> int:
    """Fold a trial index into a master seed; identity when trial == 0.

    The identity case is what makes replay work: a violation found at
    (master, trial) is reported as the folded value m', and rerunning with
    master m' and a single trial regenerates the same stream.
    """
    if trial == 0:
        return int(master)
    return int(np.random.SeedSequence([int(master), int(trial)]).generate_state(1, np.uint64)[0])


def _tag_words(tag: str) -> list[int]:
    digest = hashlib.sha256(tag.encode("utf-8")).digest()
    return [int.from_bytes(digest[i : i + 4], "little") for i in range(0, 16, 4)]


@dataclass(frozen=True)
class Seed:
    """Deterministic substream address: (master, claim_tag, trial)."""

    master: int
    claim_tag: str = ""
    trial: int = 0

    @property
    def replay_master(self) -> int:
        """Single integer that reproduces this stream at trial 0."""
        return _mix64(self.master, self.trial)

    def generator(self) -> np.random.Generator:
        entropy = [self.replay_master] + _tag_words(self.claim_tag)
        return np.random.Generator(np.random.PCG64(np.random.SeedSequence(entropy)))


def _as_generator(seed) -> np.random.Generator:
    if isinstance(seed, np.random.Generator):
        return seed
    if isinstance(seed, Seed):
        return seed.generator()
    return Seed(int(seed)).generator()


@dataclass(frozen=True)
class EnsembleSpec:
    """What to draw for one claim: a kind, a family size and a scale.

    ``dim`` pins the dimension for families that only exist at one size
    (the self-adjoint pair with normal product is inherently 2x2); None
    means the suite's requested dimension is used.  ``invertible`` moves
    normal spectra onto an annulus away from zero; ``commuting`` selects the
    commuting variant of the ordered-PSD ensemble.
    """

    kind: str
    k: int = 1
    scale: float = 1.0
    dim: int | None = None
    invertible: bool = False
    commuting: bool = False

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown ensemble kind {self.kind!r}")
        if self.k < 1:
            raise ValueError("family size k must be >= 1")
        if self.dim is not None and self.dim < 1:
            raise ValueError("dim must be >= 1")


def gen_general(n: int, seed, scale: float = 1.0) -> np.ndarray:
    """Independent complex Gaussian entries with standard deviation ``scale``."""
    rng = _as_generator(seed)
    z = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
    return as_matrix(scale * z / np.sqrt(2))


def gen_unitary(n: int, seed) -> np.ndarray:
    """Haar-like random unitary: QR of a complex Gaussian matrix with the
    triangular factor's diagonal phases normalized away."""
    rng = _as_generator(seed)
    z = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
    q, r = np.linalg.qr(z)
    d = np.diagonal(r).copy()
    d[d == 0] = 1.0  # measure-zero guard
    return as_matrix(q * (d / np.abs(d)))


def gen_self_adjoint(n: int, seed, scale: float = 1.0) -> np.ndarray:
    return as_matrix(symmetrize(gen_general(n, seed, scale)))


def gen_anti_symmetric(n: int, seed, scale: float = 1.0) -> np.ndarray:
    """A* = -A, built as the skew part of a general matrix."""
    t = gen_general(n, seed, scale)
    return as_matrix((t - t.conj().T) / 2)


def _random_diagonal(n, rng, scale, invertible, real):
    """Diagonal entries from a disk of radius scale, or an annulus
    0.1*scale <= |z| <= scale when invertibility is required."""
    if real:
        mag = rng.uniform(0.1 * scale, scale, n) if invertible else rng.uniform(0.0, scale, n)
        return mag * rng.choice([-1.0, 1.0], n)
    phase = np.exp(2j * np.pi * rng.uniform(0.0, 1.0, n))
    if invertible:
        mag = rng.uniform(0.1 * scale, scale, n)
    else:
        mag = scale * np.sqrt(rng.uniform(0.0, 1.0, n))
    return mag * phase


def gen_commuting_normal_family(
    n: int,
    k: int,
    seed,
    scale: float = 1.0,
    invertible: bool = False,
    real_diagonal: bool = False,
) -> tuple[np.ndarray, ...]:
    """k pairwise-commuting normal matrices sharing one random eigenbasis.

    Real diagonals give a self-adjoint family; the invertible flag keeps all
    eigenvalue moduli away from zero.
    """
    rng = _as_generator(seed)
    u = gen_unitary(n, rng)
    out = []
    for _ in range(k):
        d = _random_diagonal(n, rng, scale, invertible, real_diagonal)
        out.append(as_matrix((u * d) @ u.conj().T))
    return tuple(out)


def gen_commuting_family_one_nonnormal(
    n: int, k: int, seed, scale: float = 1.0
) -> tuple[np.ndarray, ...]:
    """Pairwise-commuting family in which one random member is non-normal.

    The non-normal member carries a 2x2 upper-triangular block on the first
    two basis vectors; every other member's diagonal is constant on that
    block, which is exactly what pairwise commutation requires.  Needs n >= 2.
    """
    if n < 2:
        raise ValueError("non-normal commuting families need n >= 2")
    rng = _as_generator(seed)
    u = gen_unitary(n, rng)
    special = int(rng.integers(k))
    out = []
    for i in range(k):
        d = _random_diagonal(n, rng, scale, False, False)
        d[1] = d[0]
        inner = np.diag(d).astype(complex)
        if i == special:
            c = rng.uniform(0.3 * scale, scale) * np.exp(2j * np.pi * rng.uniform())
            inner[0, 1] = c
        out.append(as_matrix((u @ inner) @ u.conj().T))
    return tuple(out)


def gen_commuting_positive_pair(n: int, seed, scale: float = 1.0):
    """Two commuting PSD matrices (shared eigenbasis, nonnegative diagonals)."""
    rng = _as_generator(seed)
    u = gen_unitary(n, rng)
    d1 = rng.uniform(0.0, scale, n)
    d2 = rng.uniform(0.0, scale, n)
    return as_matrix((u * d1) @ u.conj().T), as_matrix((u * d2) @ u.conj().T)


def _plane_reflection(angle: float) -> np.ndarray:
    c, s = np.cos(2 * angle), np.sin(2 * angle)
    return np.array([[c, s], [s, -c]], dtype=complex)


def gen_sa_pair_normal_product(seed, scale: float = 1.0):
    """2x2 self-adjoint pair whose product is normal but not self-adjoint.

    A and B are real multiples of plane reflections (Hermitian unitaries)
    conjugated by one random unitary; the product of two reflections is a
    rotation, hence normal, and it fails to be self-adjoint or to commute
    whenever the two reflection axes are neither aligned nor perpendicular.
    The magnitudes are kept apart so |A| and |B| stay distinguishable.
    """
    rng = _as_generator(seed)
    u = gen_unitary(2, rng)
    while True:
        phi, psi = rng.uniform(0.0, np.pi, 2)
        if abs(np.sin(2 * (phi - psi))) >= 0.1:
            break
    while True:
        mags = rng.uniform(0.1 * scale, scale, 2)
        if abs(mags[0] - mags[1]) >= 0.05 * scale:
            break
    signs = rng.choice([-1.0, 1.0], 2)
    a = signs[0] * mags[0] * _plane_reflection(phi)
    b = signs[1] * mags[1] * _plane_reflection(psi)
    return as_matrix(u @ a @ u.conj().T), as_matrix(u @ b @ u.conj().T)


def gen_negative_cross_pair(n: int, seed, scale: float = 1.0):
    """(A, B) with A normal, B = c A for Re(c) <= 0, so A*B + B*A <= 0 and
    the pair commutes exactly."""
    rng = _as_generator(seed)
    (a,) = gen_commuting_normal_family(n, 1, rng, scale)
    c = complex(-rng.uniform(0.0, 1.0), rng.uniform(-1.0, 1.0))
    return a, as_matrix(c * a)


def gen_ordered_psd_pair(n: int, seed, commuting: bool, scale: float = 1.0):
    """(A, B) with A >= B >= 0; the increment lives on B's eigenbasis when a
    commuting pair is requested."""
    rng = _as_generator(seed)
    g = gen_general(n, rng, scale)
    b = symmetrize(adjoint(g) @ g)
    if commuting:
        w, u = np.linalg.eigh(b)
        bump = rng.uniform(0.0, scale, n)
        a = b + (u * bump) @ u.conj().T
    else:
        h = gen_general(n, rng, scale)
        a = b + symmetrize(adjoint(h) @ h)
    return as_matrix(symmetrize(a)), as_matrix(b)


def gen_sandwich_pair(n: int, seed, scale: float = 1.0):
    """(T, S) with S >= 0 and -S <= T <= S.

    T = S^(1/2) C S^(1/2) for a Hermitian contraction C; squeezing through
    the square root is what makes the sandwich exact rather than filtered.
    """
    rng = _as_generator(seed)
    g = gen_general(n, rng, scale)
    s = symmetrize(adjoint(g) @ g)
    w, u = np.linalg.eigh(s)
    root = (u * np.sqrt(np.clip(w, 0.0, None))) @ u.conj().T
    c = symmetrize(gen_general(n, rng, 1.0))
    top = operator_norm(c)
    if top > 0:
        c = c / (top * (1.0 + rng.uniform(0.05, 1.0)))
    t = symmetrize(root @ c @ root)
    return as_matrix(t), as_matrix(s)


def gen_fuglede_pair(n: int, seed, scale: float = 1.0):
    """(A, B) with A normal; B commutes with A for half the seeds and is an
    unconstrained general matrix for the other half, so commutation-equivalence
    checks see both truth values."""
    rng = _as_generator(seed)
    u = gen_unitary(n, rng)
    d = _random_diagonal(n, rng, scale, False, False)
    a = as_matrix((u * d) @ u.conj().T)
    if int(rng.integers(2)):
        e = _random_diagonal(n, rng, scale, False, False)
        b = as_matrix((u * e) @ u.conj().T)
    else:
        b = gen_general(n, rng, scale)
    return a, b


def sample(spec: EnsembleSpec, n: int, seed) -> tuple[np.ndarray, ...]:
    """Draw one tuple of matrices for ``spec`` at dimension ``n`` (or the
    spec's pinned dimension)."""
    n = spec.dim if spec.dim is not None else n
    rng = _as_generator(seed)
    kind = spec.kind
    if kind == "unitary":
        return (gen_unitary(n, rng),)
    if kind == "self_adjoint":
        return (gen_self_adjoint(n, rng, spec.scale),)
    if kind == "normal":
        return gen_commuting_normal_family(n, 1, rng, spec.scale, invertible=spec.invertible)
    if kind == "general":
        return (gen_general(n, rng, spec.scale),)
    if kind == "anti_symmetric":
        return (gen_anti_symmetric(n, rng, spec.scale),)
    if kind == "commuting_normal_family":
        return gen_commuting_normal_family(n, spec.k, rng, spec.scale, invertible=spec.invertible)
    if kind == "commuting_family_one_nonnormal":
        # k == 1 (unset) means: draw a family of 3 or 4 per trial
        k = spec.k if spec.k >= 2 else int(3 + rng.integers(2))
        return gen_commuting_family_one_nonnormal(max(n, 2), k, rng, spec.scale)
    if kind == "commuting_positive_pair":
        return gen_commuting_positive_pair(n, rng, spec.scale)
    if kind == "sa_pair_normal_product":
        return gen_sa_pair_normal_product(rng, spec.scale)
    if kind == "negative_cross_pair":
        return gen_negative_cross_pair(n, rng, spec.scale)
    if kind == "ordered_psd_pair":
        return gen_ordered_psd_pair(n, rng, spec.commuting, spec.scale)
    if kind == "sandwich_pair":
        return gen_sandwich_pair(n, rng, spec.scale)
    if kind == "fuglede_pair":
        return gen_fuglede_pair(n, rng, spec.scale)
    raise ValueError(f"unhandled ensemble kind {kind!r}")
