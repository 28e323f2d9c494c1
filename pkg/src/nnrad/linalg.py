"""Dense linear algebra helpers: LU solves, norms, FE scatter-assembly.

Factorization is delegated to LAPACK through scipy; this module adds the
singularity screening and the small assembly utilities the integrator
and the finite element models need.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
import scipy.linalg

__all__ = [
    "LUFactorization",
    "SingularMatrixError",
    "lu_factor",
    "lu_solve",
    "norm2",
    "matvec",
    "mat_add",
    "scatter_add",
]

SINGULARITY_RTOL = 1e-14


class SingularMatrixError(ValueError):
    def __init__(self, pivot_index, message=None):
        self.pivot_index = pivot_index
        super().__init__(
            message or f"matrix is numerically singular at pivot {pivot_index}"
        )


@dataclass(frozen=True)
class LUFactorization:
    """Packed LU factors (L unit-lower, U upper) with row permutation.

    `permutation` maps factored row k to original row permutation[k],
    i.e. (P A)[k] = A[permutation[k]].
    """

    lu: np.ndarray
    piv: np.ndarray  # LAPACK-style sequential pivots
    permutation: np.ndarray

    @property
    def n(self):
        return self.lu.shape[0]


def lu_factor(A):
    """LU with partial pivoting; raises SingularMatrixError on a tiny pivot.

    A pivot counts as singular when its magnitude falls below
    1e-14 * max|A|.
    """
    A = np.asarray(A, dtype=float)
    if A.ndim != 2 or A.shape[0] != A.shape[1]:
        raise ValueError(f"lu_factor expects a square matrix, got {A.shape}")
    lu, piv = scipy.linalg.lu_factor(A, check_finite=False)
    threshold = SINGULARITY_RTOL * max(np.max(np.abs(A)), 0.0)
    diag = np.abs(np.diag(lu))
    bad = np.nonzero(diag <= threshold)[0]
    if bad.size:
        raise SingularMatrixError(int(bad[0]))
    perm = np.arange(A.shape[0])
    for k, p in enumerate(piv):
        perm[k], perm[p] = perm[p], perm[k]
    return LUFactorization(lu=lu, piv=piv, permutation=perm)


def lu_solve(f, b):
    b = np.asarray(b, dtype=float)
    if b.shape[0] != f.n:
        raise ValueError(f"dimension mismatch: factor is {f.n}, b is {b.shape[0]}")
    return scipy.linalg.lu_solve((f.lu, f.piv), b, check_finite=False)


def norm2(v):
    return float(np.linalg.norm(np.asarray(v, dtype=float)))


def matvec(A, v):
    return np.asarray(A, dtype=float) @ np.asarray(v, dtype=float)


def mat_add(*mats):
    out = np.array(mats[0], dtype=float, copy=True)
    for m in mats[1:]:
        out += np.asarray(m, dtype=float)
    return out


def scatter_add(global_mat, local_mat, dof_map, signs=None):
    """Accumulate a local element matrix into a global one, in place.

    dof_map[i] gives the global index of local row/column i.  Optional
    `signs` flips local coordinate directions (e.g. a -theta_y plane
    coordinate) so sign[i]*sign[j]*local[i, j] lands at the mapped slot.
    """
    local = np.asarray(local_mat, dtype=float)
    dof_map = np.asarray(dof_map, dtype=int)
    n_glob = global_mat.shape[0]
    if np.any(dof_map < 0) or np.any(dof_map >= n_glob):
        raise IndexError(f"dof index out of range 0..{n_glob - 1}: {dof_map}")
    if signs is not None:
        s = np.asarray(signs, dtype=float)
        local = local * np.outer(s, s)
    global_mat[np.ix_(dof_map, dof_map)] += local
    return global_mat
