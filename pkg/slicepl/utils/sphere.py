"""
Deterministic grids on the sphere 𝕊 of unit imaginary quaternions.
"""
import numpy as np
from scipy.linalg import null_space

GOLDEN_ANGLE = np.pi * (3.0 - np.sqrt(5.0))


def spiral_grid(n: int) -> np.ndarray:
    """
    Returns n near-uniform unit vectors of shape (n, 3) along a Fibonacci spiral.

    The grid is seedless: the same n always gives the same points.
    """
    if n < 1:
        raise ValueError(f"grid size must be at least 1, got {n}")
    k = np.arange(n)
    z = 1.0 - (2.0 * k + 1.0) / n
    rho = np.sqrt(np.clip(1.0 - z * z, 0.0, None))
    phi = k * GOLDEN_ANGLE
    return np.stack([rho * np.cos(phi), rho * np.sin(phi), z], axis=-1)


def refined_grid(n: int, factor: int = 2) -> np.ndarray:
    """
    The union of the grids of size n and factor·n, so that any maximum over it is at least the maximum over the
    grid of size n.
    """
    return np.concatenate([spiral_grid(n), spiral_grid(factor * n)])


def symmetric_steps(n: int, closed: bool = True) -> np.ndarray:
    """
    n values in [−1, 1] symmetric about 0, exactly 0 in the middle when n is odd.

    With closed=False the endpoints ±1 are excluded.
    """
    if closed:
        t = np.linspace(-1.0, 1.0, n)
    else:
        t = np.linspace(-1.0, 1.0, n + 2)[1:-1]
    if n % 2 == 1:
        t[n // 2] = 0.0
    return t


def unit_steps(n: int, closed: bool = True) -> np.ndarray:
    """ n values in [0, 1], or in (0, 1) with closed=False. """
    if closed:
        return np.linspace(0.0, 1.0, n)
    return np.linspace(0.0, 1.0, n + 2)[1:-1]


def orthonormal_complement(v: np.ndarray) -> np.ndarray:
    """
    Returns an orthonormal basis of the hyperplane v⊥, one vector per row.
    """
    return null_space(np.atleast_2d(np.asarray(v, dtype=float))).T


def sphere3_directions(axes: np.ndarray, n_theta: int) -> np.ndarray:
    """
    Unit quaternions e^{Iθ} for θ ∈ [0, π] and I in `axes`, of shape (n_axis, n_theta, 4); together they cover
    the unit sphere of ℍ.
    """
    theta = np.linspace(0.0, np.pi, n_theta)
    out = np.empty((len(axes), n_theta, 4))
    out[..., 0] = np.cos(theta)[None, :]
    out[..., 1:] = np.sin(theta)[None, :, None] * axes[:, None, :]
    return out
