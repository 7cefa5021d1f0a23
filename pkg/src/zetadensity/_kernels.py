"""Double-precision |zeta|^2 kernels for the quadrature oracle.

The desk-scale mean-square integrals evaluate |zeta(sigma + it)|^2 on
millions of uniformly spaced nodes; that inner loop is the only hot path
in the package, so it runs in float64 with the same Euler-Maclaurin shape
as the high-precision engine (truncation N = ceil(0.22 t_max), correction
terms carried as a single recurrence, coefficients B_2k/(2k)! tabulated at
import).  Against the 60-digit engine the kernels agree to ~1e-10
relative, comfortably below the 1e-6 quadrature tolerance they serve.

Two implementations with identical signatures:

  * a numba @njit kernel that slides phasors n^-it across each chunk of
    nodes (one complex multiply per term instead of an exp), parallelized
    over chunks;
  * a pure-numpy fallback evaluating each node directly.

ZETADENSITY_NO_NUMBA=1 in the environment (or numba being unimportable)
selects the fallback.  `python -m zetadensity.bench` compares the two.
"""

from __future__ import annotations

import math
import os
import warnings

import numpy as np

KMAX = 80
EM_RATIO = 0.22  # truncation N = ceil(EM_RATIO * t_max) + 8
CHUNK = 1024  # nodes per phasor restart; bounds rotation drift at ~1e-13

_FORCE_NUMPY = os.environ.get("ZETADENSITY_NO_NUMBA", "") not in ("", "0")

try:
    if _FORCE_NUMPY:
        raise ImportError("numba disabled by ZETADENSITY_NO_NUMBA")
    from numba import njit, prange
    # the threading-layer probe warns about old TBB versions at first
    # parallel launch; the fallback layer it picks is fine
    warnings.filterwarnings("ignore", message=".*TBB.*")
    HAS_NUMBA = True
except ImportError:
    HAS_NUMBA = False


def _coefficients() -> tuple[np.ndarray, np.ndarray]:
    """bk[k] = B_2k/(2k)! and ratio br[k] = bk[k+1]/bk[k], float64.

    Uses B_2k/(2k)! = (-1)^(k+1) 2 zeta(2k) / (2 pi)^(2k); zeta(2k) from
    the closed forms for k <= 3 and a machine-converged tail sum beyond.
    """
    def zeta_even(k: int) -> float:
        if k == 1:
            return math.pi ** 2 / 6
        if k == 2:
            return math.pi ** 4 / 90
        if k == 3:
            return math.pi ** 6 / 945
        acc = 1.0
        for n in range(2, 41):
            term = float(n) ** (-2 * k)
            acc += term
            if term < 1e-20:
                break
        return acc

    bk = np.zeros(KMAX + 2)
    for k in range(1, KMAX + 2):
        bk[k] = (-1) ** (k + 1) * 2.0 * zeta_even(k) / (2 * math.pi) ** (2 * k)
    br = np.zeros(KMAX + 1)
    br[1:] = bk[2:] / bk[1:-1]
    return bk, br


_BK, _BR = _coefficients()


def truncation(t_max: float) -> int:
    return max(32, int(math.ceil(EM_RATIO * t_max)) + 8)


def _tail_py(sigma: float, t: float, N: int) -> complex:
    """Euler-Maclaurin tail: N^(1-s)/(s-1) + N^-s/2 + correction terms."""
    s = complex(sigma, t)
    npow = N ** (-sigma) * complex(math.cos(t * math.log(N)),
                                   -math.sin(t * math.log(N)))  # N^-s
    z = N * npow / (s - 1) + 0.5 * npow
    term = _BK[1] * s * npow / N
    nsq = float(N) * N
    for k in range(1, KMAX):
        z += term
        if abs(term) < 1e-17 * (abs(z) + 1e-300):
            break
        term *= _BR[k] * (s + (2 * k - 1)) * (s + 2 * k) / nsq
    return z


def zeta_abs2_grid_numpy(sigma: float, t0: float, h: float, J: int) -> np.ndarray:
    """|zeta(sigma+it)|^2 at t = t0 + j h for j < J; direct per-node sums."""
    t_max = t0 + (J - 1) * h
    N = truncation(t_max)
    n = np.arange(1, N, dtype=np.float64)
    ln = np.log(n)
    amp = n ** (-sigma)
    out = np.empty(J)
    for j in range(J):
        t = t0 + j * h
        z = np.sum(amp * np.exp(-1j * t * ln)) + _tail_py(sigma, t, N)
        out[j] = z.real * z.real + z.imag * z.imag
    return out


if HAS_NUMBA:

    @njit(cache=True)
    def _tail_njit(sigma, t, N, bk, br):
        s = complex(sigma, t)
        lnN = math.log(N)
        npow = N ** (-sigma) * complex(math.cos(t * lnN), -math.sin(t * lnN))
        z = N * npow / (s - 1) + 0.5 * npow
        term = bk[1] * s * npow / N
        nsq = float(N) * N
        for k in range(1, KMAX):
            z += term
            if abs(term) < 1e-17 * (abs(z) + 1e-300):
                break
            term *= br[k] * (s + (2 * k - 1)) * (s + 2 * k) / nsq
        return z

    @njit(parallel=True, cache=True)
    def _grid_njit(sigma, t0, h, J, N, bk, br, chunk):
        ln = np.log(np.arange(1, N).astype(np.float64))
        amp = np.exp(-sigma * ln)
        out = np.empty(J)
        nterms = N - 1
        nchunks = (J + chunk - 1) // chunk
        for c in prange(nchunks):
            j0 = c * chunk
            j1 = min(j0 + chunk, J)
            tstart = t0 + j0 * h
            ph = np.empty(nterms, dtype=np.complex128)
            step = np.empty(nterms, dtype=np.complex128)
            for i in range(nterms):
                x = tstart * ln[i]
                ph[i] = amp[i] * complex(math.cos(x), -math.sin(x))
                y = h * ln[i]
                step[i] = complex(math.cos(y), -math.sin(y))
            for j in range(j0, j1):
                acc = 0.0 + 0.0j
                for i in range(nterms):
                    acc += ph[i]
                    ph[i] *= step[i]
                z = acc + _tail_njit(sigma, t0 + j * h, N, bk, br)
                out[j] = z.real * z.real + z.imag * z.imag
        return out

    def zeta_abs2_grid_numba(sigma: float, t0: float, h: float, J: int) -> np.ndarray:
        """|zeta(sigma+it)|^2 on a uniform grid; njit sliding-phasor path."""
        t_max = t0 + (J - 1) * h
        return _grid_njit(float(sigma), float(t0), float(h), int(J),
                          truncation(t_max), _BK, _BR, CHUNK)

    zeta_abs2_grid = zeta_abs2_grid_numba
else:
    zeta_abs2_grid_numba = None
    zeta_abs2_grid = zeta_abs2_grid_numpy


def zeta_abs2(sigma: float, t: float) -> float:
    """|zeta(sigma+it)|^2 at a single point, on the selected path."""
    return float(zeta_abs2_grid(sigma, t, 1.0, 1)[0])
