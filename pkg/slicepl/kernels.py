"""
Vectorised quaternion arithmetic.

Quaternions are stored as float64 arrays whose last axis holds the components (w, x, y, z). Every function
broadcasts over the leading axes. Points outside the domain of a function come back as NaN rows instead of raising,
so that callers sampling thousands of points can classify failures afterwards.
"""
from typing import Tuple

import numpy as np

Array = np.ndarray

ONE = np.array([1.0, 0.0, 0.0, 0.0])


def as_array(q: "Array | list | tuple") -> Array:
    arr = np.asarray(q, dtype=float)
    if arr.shape[-1:] != (4,):
        raise ValueError(f"expected trailing axis of length 4, got shape {arr.shape}")
    return arr


def real(t: "Array | float") -> Array:
    t = np.asarray(t, dtype=float)
    out = np.zeros(t.shape + (4,))
    out[..., 0] = t
    return out


def qmul(p: Array, q: Array) -> Array:
    """ Hamilton product p·q. """
    pw, px, py, pz = np.moveaxis(p, -1, 0)
    qw, qx, qy, qz = np.moveaxis(q, -1, 0)
    return np.stack(
        [
            pw * qw - px * qx - py * qy - pz * qz,
            pw * qx + px * qw + py * qz - pz * qy,
            pw * qy - px * qz + py * qw + pz * qx,
            pw * qz + px * qy - py * qx + pz * qw,
        ],
        axis=-1,
    )


def qconj(q: Array) -> Array:
    out = -np.array(q, dtype=float)
    out[..., 0] = -out[..., 0]
    return out


def qabs(q: Array) -> Array:
    return np.sqrt(np.sum(np.square(q), axis=-1))


def qinv(q: Array) -> Array:
    """ q̄/|q|², NaN where q = 0. """
    norm2 = np.sum(np.square(q), axis=-1)
    with np.errstate(divide="ignore", invalid="ignore"):
        out = qconj(q) / norm2[..., None]
    out[norm2 == 0] = np.nan
    return out


def split_parts(q: Array) -> Tuple[Array, Array, Array]:
    """
    Returns (Re q, Im q, |Im q|).
    """
    w = q[..., 0]
    v = q[..., 1:]
    return w, v, np.sqrt(np.sum(np.square(v), axis=-1))


def angle(q: Array) -> Array:
    """ Polar angle θ ∈ [0, π] with q = |q| e^{Iθ}. """
    w, _, nv = split_parts(q)
    return np.arctan2(nv, w)


def axis_of(q: Array) -> Array:
    """ Im(q)/|Im(q)|, NaN for real q. """
    _, v, nv = split_parts(q)
    with np.errstate(divide="ignore", invalid="ignore"):
        out = v / nv[..., None]
    out[nv == 0] = np.nan
    return out


def slice_points(x: Array, y: Array, axes: Array) -> Array:
    """ Builds x + yI for imaginary units I given as (..., 3) arrays. """
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    axes = np.asarray(axes, dtype=float)
    shape = np.broadcast_shapes(x.shape, y.shape, axes.shape[:-1])
    out = np.empty(shape + (4,))
    out[..., 0] = x
    out[..., 1:] = y[..., None] * axes
    return out


def polar_points(r: Array, theta: Array, axes: Array) -> Array:
    """ Builds r e^{Iθ} = r cos θ + r sin θ · I. """
    r = np.asarray(r, dtype=float)
    theta = np.asarray(theta, dtype=float)
    return slice_points(r * np.cos(theta), r * np.sin(theta), axes)


def _vector_from_axis(v: Array, nv: Array, length: Array) -> Array:
    """ length·v/|v|, with 0 where v = 0. """
    with np.errstate(divide="ignore", invalid="ignore"):
        scale = np.where(nv > 0, length / np.where(nv > 0, nv, 1.0), 0.0)
    return v * scale[..., None]


def qexp(q: Array) -> Array:
    """ e^{x+Iy} = e^x (cos y + I sin y). """
    w, v, nv = split_parts(q)
    with np.errstate(over="ignore", invalid="ignore"):
        scale = np.exp(w)
        out = np.empty(np.shape(q))
        out[..., 0] = scale * np.cos(nv)
        out[..., 1:] = _vector_from_axis(v, nv, scale * np.sin(nv))
    return out


def principal_log_mask(q: Array) -> Array:
    """ True where q ∉ (−∞, 0]. """
    w, _, nv = split_parts(q)
    return (nv > 0) | (w > 0)


def qlog(q: Array) -> Array:
    """
    Principal logarithm ln|q| + arccos(Re q/|q|)·Im q/|Im q|; NaN on (−∞, 0].
    """
    w, v, nv = split_parts(q)
    with np.errstate(divide="ignore", invalid="ignore"):
        out = np.empty(np.shape(q))
        out[..., 0] = np.log(np.hypot(w, nv))
        out[..., 1:] = _vector_from_axis(v, nv, np.arctan2(nv, w))
    out[~principal_log_mask(q)] = np.nan
    return out


def branch_log_mask(q: Array) -> Array:
    """ True where q ∉ [0, +∞). """
    w, _, nv = split_parts(q)
    return (nv > 0) | (w < 0)


def qlog_branch(q: Array) -> Array:
    """
    Second branch ln|q| + [arccos(Re q/|q|) − π]·Im q/|Im q|, extended by ln|q| to the negative reals; NaN on
    [0, +∞).
    """
    w, v, nv = split_parts(q)
    with np.errstate(divide="ignore", invalid="ignore"):
        out = np.empty(np.shape(q))
        out[..., 0] = np.log(np.hypot(w, nv))
        out[..., 1:] = _vector_from_axis(v, nv, np.arctan2(nv, w) - np.pi)
    out[~branch_log_mask(q)] = np.nan
    return out


def qpow(q: Array, gamma: float) -> Array:
    """ q^γ = e^{γ Log q}; NaN on (−∞, 0]. """
    return qexp(gamma * qlog(q))


def log_abs(q: Array) -> Array:
    """ ln|q| with −inf at zero. """
    with np.errstate(divide="ignore"):
        return np.log(qabs(q))


def imaginary_component(q: Array, axes: Array) -> Array:
    """ Real inner product of Im q with each unit I. """
    return np.sum(q[..., 1:] * axes, axis=-1)


def off_slice_norm(q: Array, axes: Array) -> Array:
    """ Size of the part of Im q orthogonal to I, i.e. the distance of q from L_I. """
    v = q[..., 1:]
    along = np.sum(v * axes, axis=-1)
    rest = v - along[..., None] * axes
    return np.sqrt(np.sum(np.square(rest), axis=-1))
