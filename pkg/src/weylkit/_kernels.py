"""Hot numeric kernels behind the character ring.

The three inner loops that dominate runtime (sparse convolution for products,
exact division by ``1 - e(-alpha)``, and the Demazure string sum) each come in
three implementations:

* ``numba``: @njit kernels over int64 arrays of packed weights (default when
  numba imports cleanly);
* ``numpy``: pure-numpy vectorized fallback, same packed representation;
* ``python``: dict-based arbitrary-precision reference, always available.

The selection is made by the ``WEYLKIT_KERNELS`` environment variable
(``numba`` | ``numpy`` | ``python``).  The packed paths only engage when every
coordinate and coefficient provably fits the fixed-width encoding; otherwise
the arbitrary-precision path runs regardless of the flag, so results are exact
in all modes.

Packing: each coordinate is stored in a fixed bit field of an int64 with an
offset, so weight addition is int64 addition minus a constant.
"""

from __future__ import annotations

import os

import numpy as np

_ENV_FLAG = "WEYLKIT_KERNELS"
_VALID_MODES = ("numba", "numpy", "python")

_COEFF_LIMIT = 1 << 62

_njit_cache = {}


def _requested_mode():
    raw = os.environ.get(_ENV_FLAG, "").strip().lower()
    if raw and raw not in _VALID_MODES:
        raise ValueError(f"{_ENV_FLAG} must be one of {_VALID_MODES}, got {raw!r}")
    return raw or None


def _numba_available():
    if "ok" not in _njit_cache:
        try:
            import numba  # noqa: F401

            _njit_cache["ok"] = True
        except Exception:
            _njit_cache["ok"] = False
    return _njit_cache["ok"]


def numba_available() -> bool:
    return _numba_available()


def set_mode(mode) -> None:
    """Set (or, with None, clear) the kernel mode for this process."""
    if mode is None:
        os.environ.pop(_ENV_FLAG, None)
    elif mode not in _VALID_MODES:
        raise ValueError(f"mode must be one of {_VALID_MODES}, got {mode!r}")
    else:
        os.environ[_ENV_FLAG] = mode


def active_mode() -> str:
    """The kernel implementation that packed-path calls will use."""
    req = _requested_mode()
    if req == "python":
        return "python"
    if req == "numpy":
        return "numpy"
    if req == "numba":
        if not _numba_available():
            raise RuntimeError("WEYLKIT_KERNELS=numba but numba is not importable")
        return "numba"
    return "numba" if _numba_available() else "numpy"


def field_bits(rank: int) -> int:
    # rank * bits must stay below 64 so packed keys fit a signed int64
    return {1: 32, 2: 24, 3: 21, 4: 15, 5: 12, 6: 10, 7: 9, 8: 7}[rank]


def _coords_array(terms):
    coords = np.array(list(terms.keys()), dtype=np.int64)
    vals = list(terms.values())
    if any(abs(v) >= _COEFF_LIMIT for v in vals):
        return coords, None
    return coords, np.array(vals, dtype=np.int64)


def _pack(coords, rank):
    bits = field_bits(rank)
    offset = 1 << (bits - 1)
    keys = np.zeros(len(coords), dtype=np.int64)
    for j in range(rank):
        keys = (keys << bits) | (coords[:, j] + offset)
    return keys


def _unpack(keys, rank):
    bits = field_bits(rank)
    offset = 1 << (bits - 1)
    mask = (1 << bits) - 1
    coords = np.empty((len(keys), rank), dtype=np.int64)
    for j in range(rank - 1, -1, -1):
        coords[:, j] = (keys & mask) - offset
        keys = keys >> bits
    return coords


def _pack_const(rank):
    bits = field_bits(rank)
    offset = 1 << (bits - 1)
    const = 0
    for _ in range(rank):
        const = (const << bits) | offset
    return const


def _fits(coords, rank, slack=0):
    if len(coords) == 0:
        return True
    bound = (1 << (field_bits(rank) - 1)) - 1 - slack
    return int(np.abs(coords).max()) <= bound


def _terms_from_arrays(keys, vals, rank):
    coords = _unpack(keys, rank)
    out = {}
    for row, v in zip(coords, vals.tolist()):
        if v:
            out[tuple(int(x) for x in row)] = v
    return out


# ---------------------------------------------------------------------------
# multiplication

def convolve(a_terms: dict, b_terms: dict, rank: int) -> dict:
    """Support-wise convolution of two sparse characters."""
    if not a_terms or not b_terms:
        return {}
    if len(a_terms) > len(b_terms):
        a_terms, b_terms = b_terms, a_terms
    mode = active_mode()
    if mode != "python" and len(a_terms) * len(b_terms) >= 4096:
        ca, va = _coords_array(a_terms)
        cb, vb = _coords_array(b_terms)
        if va is not None and vb is not None:
            amax = int(np.abs(ca).max()) if len(ca) else 0
            cross = int(np.abs(va).astype(object).sum()) * int(np.abs(vb).max())
            if _fits(cb, rank, slack=amax) and cross < _COEFF_LIMIT:
                ka, kb = _pack(ca, rank), _pack(cb, rank)
                if mode == "numba":
                    keys, vals = _numba_mod().convolve(ka, va, kb, vb, _pack_const(rank))
                else:
                    keys, vals = _np_convolve(ka, va, kb, vb, _pack_const(rank))
                return _terms_from_arrays(keys, vals, rank)
    return _py_convolve(a_terms, b_terms)


def _py_convolve(a_terms, b_terms):
    out = {}
    for mu, c in a_terms.items():
        for nu, d in b_terms.items():
            key = tuple(x + y for x, y in zip(mu, nu))
            s = out.get(key, 0) + c * d
            if s:
                out[key] = s
            elif key in out:
                del out[key]
    return out


def _np_convolve(ka, va, kb, vb, const):
    keys = (ka[:, None] + kb[None, :] - const).ravel()
    vals = (va[:, None] * vb[None, :]).ravel()
    order = np.argsort(keys, kind="stable")
    keys = keys[order]
    vals = vals[order]
    boundary = np.empty(len(keys), dtype=bool)
    boundary[0] = True
    np.not_equal(keys[1:], keys[:-1], out=boundary[1:])
    starts = np.flatnonzero(boundary)
    sums = np.add.reduceat(vals, starts)
    keep = sums != 0
    return keys[starts][keep], sums[keep]


# ---------------------------------------------------------------------------
# Demazure string sums

def demazure_sweep(terms: dict, alpha_wc, coroot, rank: int) -> dict:
    """Apply the simple Demazure operator, term by term.

    For a term at phi with k = <phi, alpha^vee>: k >= 0 contributes the string
    phi, phi-alpha, ..., phi-k*alpha; k == -1 contributes nothing; k <= -2
    contributes minus the string phi+alpha, ..., phi+(-k-1)*alpha.
    """
    return _string_sweep(terms, alpha_wc, coroot, rank, demazure=True)


def divided_difference_sweep(terms: dict, alpha_wc, coroot, rank: int) -> dict:
    """The plain divided difference (f - s_alpha f) / (1 - e(-alpha)).

    Per term: k > 0 gives the string phi, ..., phi-(k-1)*alpha; k == 0 gives
    nothing; k < 0 gives minus the string phi+alpha, ..., phi+(-k)*alpha.
    """
    return _string_sweep(terms, alpha_wc, coroot, rank, demazure=False)


def _string_sweep(terms, alpha_wc, coroot, rank, demazure):
    if not terms:
        return {}
    mode = active_mode()
    if mode != "python" and len(terms) >= 512:
        coords, vals = _coords_array(terms)
        if vals is not None:
            ks = coords @ np.array(coroot, dtype=np.int64)
            kmax = int(np.abs(ks).max())
            reach = kmax * max(abs(int(c)) for c in alpha_wc)
            total = int(np.abs(vals).astype(object).sum()) * (kmax + 1)
            if _fits(coords, rank, slack=reach) and total < _COEFF_LIMIT:
                alpha = np.array(alpha_wc, dtype=np.int64)
                if mode == "numba":
                    keys, out = _numba_mod().string_sweep(
                        _pack(coords, rank), vals, ks,
                        int(_pack(alpha[None, :], rank)[0] - _pack_const(rank)),
                        1 if demazure else 0,
                    )
                else:
                    keys, out = _np_string_sweep(coords, vals, ks, alpha, rank, demazure)
                return _terms_from_arrays(keys, out, rank)
    return _py_string_sweep(terms, alpha_wc, coroot, demazure)


def _py_string_sweep(terms, alpha_wc, coroot, demazure):
    out = {}

    def put(key, v):
        s = out.get(key, 0) + v
        if s:
            out[key] = s
        elif key in out:
            del out[key]

    for phi, c in terms.items():
        k = sum(p * q for p, q in zip(phi, coroot))
        hi = k if demazure else k - 1
        if hi >= 0:
            for j in range(hi + 1):
                put(tuple(p - j * a for p, a in zip(phi, alpha_wc)), c)
        else:
            lo = -k - 1 if demazure else -k
            for j in range(1, lo + 1):
                put(tuple(p + j * a for p, a in zip(phi, alpha_wc)), -c)
    return out


def _np_string_sweep(coords, vals, ks, alpha, rank, demazure):
    hi = ks if demazure else ks - 1
    down = hi >= 0
    lengths = np.where(down, hi + 1, (-ks - 1) if demazure else -ks)
    lengths = np.maximum(lengths, 0)
    total = int(lengths.sum())
    if total == 0:
        return np.empty(0, dtype=np.int64), np.empty(0, dtype=np.int64)
    rep = np.repeat(np.arange(len(coords)), lengths)
    j = np.arange(total) - np.repeat(np.cumsum(lengths) - lengths, lengths)
    step = np.where(down[rep], -(j), j + 1)
    out_coords = coords[rep] + step[:, None] * alpha[None, :]
    out_vals = np.where(down[rep], vals[rep], -vals[rep])
    keys = _pack(out_coords, rank)
    order = np.argsort(keys, kind="stable")
    keys = keys[order]
    out_vals = out_vals[order]
    boundary = np.empty(len(keys), dtype=bool)
    boundary[0] = True
    np.not_equal(keys[1:], keys[:-1], out=boundary[1:])
    starts = np.flatnonzero(boundary)
    sums = np.add.reduceat(out_vals, starts)
    keep = sums != 0
    return keys[starts][keep], sums[keep]


# ---------------------------------------------------------------------------
# exact division by 1 - e(-alpha)

class DivisionRemainder(ArithmeticError):
    """Raised when a character is not divisible by ``1 - e(-alpha)``."""


def divide_strings(terms: dict, alpha_wc, coroot, rank: int) -> dict:
    """Exact quotient q with q * (1 - e(-alpha)) equal to the input.

    Long division in the order of decreasing pairing against alpha^vee:
    within each alpha-string class the quotient is the top-down running sum
    of the dividend, spread over the gaps; the class's final running sum must
    vanish, otherwise the division has a remainder.
    """
    if not terms:
        return {}
    mode = active_mode()
    if mode != "python" and len(terms) >= 512:
        coords, vals = _coords_array(terms)
        if vals is not None:
            ks = coords @ np.array(coroot, dtype=np.int64)
            spread = int(np.abs(ks).max()) * max(abs(int(c)) for c in alpha_wc)
            total = int(np.abs(vals).astype(object).sum())
            if _fits(coords, rank, slack=spread) and _fits(2 * coords, rank, slack=2 * spread) and total < _COEFF_LIMIT:
                alpha = np.array(alpha_wc, dtype=np.int64)
                if mode == "numba":
                    cls = _pack(2 * coords - ks[:, None] * alpha[None, :], rank)
                    order = np.lexsort((-ks, ks & 1, cls))
                    keys, out = _numba_mod().divide_strings(
                        _pack(coords, rank), vals, ks, cls, order,
                        int(_pack(alpha[None, :], rank)[0] - _pack_const(rank)),
                    )
                else:
                    keys, out = _np_divide_strings(coords, vals, ks, alpha, rank)
                return _terms_from_arrays(keys, out, rank)
    return _py_divide_strings(terms, alpha_wc, coroot)


def _py_divide_strings(terms, alpha_wc, coroot):
    classes = {}
    for mu, c in terms.items():
        p = sum(a * b for a, b in zip(mu, coroot))
        # p's parity is part of the class: 2*mu - p*alpha alone can collide for
        # weights offset by a half-integer multiple of alpha.
        cid = (p & 1,) + tuple(2 * m - p * a for m, a in zip(mu, alpha_wc))
        classes.setdefault(cid, []).append((p, mu, c))
    out = {}
    for entries in classes.values():
        entries.sort(key=lambda t: -t[0])
        running = 0
        prev_p = None
        prev_mu = None
        for p, mu, c in entries:
            if running:
                steps = (prev_p - p) // 2
                for j in range(steps):
                    out[tuple(m - j * a for m, a in zip(prev_mu, alpha_wc))] = running
            running += c
            prev_p, prev_mu = p, mu
        if running:
            raise DivisionRemainder("nonzero remainder in exact division")
    return out


def _np_divide_strings(coords, vals, ks, alpha, rank):
    cls = _pack(2 * coords - ks[:, None] * alpha[None, :], rank)
    order = np.lexsort((-ks, ks & 1, cls))
    cls = cls[order]
    ks = ks[order]
    coords = coords[order]
    vals = vals[order]
    n = len(vals)
    boundary = np.empty(n, dtype=bool)
    boundary[0] = True
    np.not_equal(cls[1:], cls[:-1], out=boundary[1:])
    # p's parity is part of the class: the packed key alone can collide for
    # weights offset by a half-integer multiple of alpha.
    boundary[1:] |= (ks[1:] & 1) != (ks[:-1] & 1)
    # running sums reset at each class boundary
    csum = np.cumsum(vals)
    start_idx = np.maximum.accumulate(np.where(boundary, np.arange(n), 0))
    running = csum - (csum[start_idx] - vals[start_idx])
    # last entry of each class must have running sum zero
    last = np.roll(boundary, -1)
    last[-1] = True
    if np.any(running[last] != 0):
        raise DivisionRemainder("nonzero remainder in exact division")
    nxt_p = np.empty(n, dtype=np.int64)
    nxt_p[:-1] = ks[1:]
    nxt_p[-1] = 0
    gaps = np.where(last, 0, (ks - nxt_p) // 2)
    gaps = np.where(running == 0, 0, gaps)
    total = int(gaps.sum())
    if total == 0:
        return np.empty(0, dtype=np.int64), np.empty(0, dtype=np.int64)
    rep = np.repeat(np.arange(n), gaps)
    j = np.arange(total) - np.repeat(np.cumsum(gaps) - gaps, gaps)
    out_coords = coords[rep] - j[:, None] * alpha[None, :]
    out_vals = running[rep]
    return _pack(out_coords, rank), out_vals


# ---------------------------------------------------------------------------
# numba kernels

def _numba_mod():
    mod = _njit_cache.get("mod")
    if mod is None:
        mod = _build_numba()
        _njit_cache["mod"] = mod
    return mod


def _build_numba():
    import numba
    from numba import njit
    from numba.typed import Dict
    from numba.types import int64

    @njit(cache=True)
    def _emit(table):
        n = len(table)
        keys = np.empty(n, dtype=np.int64)
        vals = np.empty(n, dtype=np.int64)
        idx = 0
        for k, v in table.items():
            if v != 0:
                keys[idx] = k
                vals[idx] = v
                idx += 1
        order = np.argsort(keys[:idx])
        return keys[:idx][order], vals[:idx][order]

    @njit(cache=True)
    def convolve(ka, va, kb, vb, const):
        table = Dict.empty(int64, int64)
        for i in range(len(ka)):
            k0 = ka[i] - const
            v0 = va[i]
            for j in range(len(kb)):
                key = k0 + kb[j]
                table[key] = table.get(key, 0) + v0 * vb[j]
        return _emit(table)

    @njit(cache=True)
    def string_sweep(keys, vals, ks, alpha_key, demazure):
        table = Dict.empty(int64, int64)
        for i in range(len(keys)):
            k = ks[i]
            hi = k if demazure else k - 1
            if hi >= 0:
                key = keys[i]
                for _ in range(hi + 1):
                    table[key] = table.get(key, 0) + vals[i]
                    key -= alpha_key
            else:
                lo = (-k - 1) if demazure else -k
                key = keys[i] + alpha_key
                for _ in range(lo):
                    table[key] = table.get(key, 0) - vals[i]
                    key += alpha_key
        return _emit(table)

    @njit(cache=True)
    def divide_strings(keys, vals, ks, cls, order, alpha_key):
        table = Dict.empty(int64, int64)
        n = len(keys)
        idx = 0
        while idx < n:
            end = idx
            while (
                end < n
                and cls[order[end]] == cls[order[idx]]
                and (ks[order[end]] & 1) == (ks[order[idx]] & 1)
            ):
                end += 1
            running = 0
            for t in range(idx, end):
                cur = order[t]
                running += vals[cur]
                if running != 0:
                    if t + 1 >= end:
                        raise ValueError("nonzero remainder in exact division")
                    steps = (ks[cur] - ks[order[t + 1]]) // 2
                    key = keys[cur] - alpha_key
                    table[keys[cur]] = running
                    for _ in range(steps - 1):
                        table[key] = running
                        key -= alpha_key
            idx = end
        return _emit(table)

    class Mod:
        pass

    mod = Mod()
    mod.convolve = convolve
    mod.string_sweep = string_sweep
    mod.divide_strings = divide_strings
    return mod
