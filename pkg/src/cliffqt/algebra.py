"""Exact multivector arithmetic in Cl(p,q) over the reals or complexes.

Basis blades are bit masks: generator ``a`` (1-based) occupies bit ``a - 1``
and the empty mask is the identity ``e``.  A multivector is a sparse map
from blade mask to a coefficient pair ``(re, im)``.  On the exact backend
coefficients are Python ints or :class:`fractions.Fraction`, so every
algebraic identity holds with literal equality; on the float backend they
are floats and approximate comparisons elsewhere use ``FLOAT_TOL``.

Multivectors are immutable values: every operation returns a fresh object,
so instances can be shared freely between threads.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .errors import AlgebraError

REAL = "real"
COMPLEX = "complex"
EXACT = "exact"
FLOAT = "float"

#: Relative tolerance for float-backend membership and classification.
FLOAT_TOL = 1e-9


@dataclass(frozen=True)
class Signature:
    """Diagonal quadratic form with ``p`` entries +1 followed by ``q`` entries -1."""

    p: int
    q: int

    def __post_init__(self):
        if self.p < 0 or self.q < 0 or self.p + self.q < 1:
            raise AlgebraError(
                f"invalid signature ({self.p},{self.q}): need p >= 0, q >= 0, p+q >= 1"
            )

    @property
    def n(self) -> int:
        return self.p + self.q

    def eta(self, a: int) -> int:
        """Square of generator ``a`` (1-based): +1 for a <= p, else -1."""
        if not 1 <= a <= self.n:
            raise AlgebraError(f"generator index {a} out of range 1..{self.n}")
        return 1 if a <= self.p else -1


def blade_rank(mask: int) -> int:
    return mask.bit_count()


def blade_indices(mask: int) -> tuple[int, ...]:
    """1-based generator indices of a blade mask, in increasing order."""
    out = []
    a = 1
    while mask:
        if mask & 1:
            out.append(a)
        mask >>= 1
        a += 1
    return tuple(out)


def mask_from_indices(indices: Iterable[int], n: int) -> int:
    mask = 0
    for a in indices:
        if not 1 <= a <= n:
            raise AlgebraError(f"generator index {a} out of range 1..{n}")
        bit = 1 << (a - 1)
        if mask & bit:
            raise AlgebraError(f"duplicate generator index {a} in blade")
        mask |= bit
    return mask


def blade_mul(a: int, b: int, sig: Signature) -> tuple[int, int]:
    """Product of two basis blades as ``(sign, result mask)``.

    The sign is the parity of the transpositions that sort the concatenated
    index lists, times eta of every generator the two blades share; the
    result blade is the symmetric difference of the index sets.
    """
    swaps = 0
    t = a >> 1
    while t:
        swaps += (t & b).bit_count()
        t >>= 1
    # shared generators contract to eta; only those past position p are -1
    swaps += ((a & b) >> sig.p).bit_count()
    return (-1 if swaps & 1 else 1), a ^ b


def _is_rational(v) -> bool:
    return isinstance(v, (int, Fraction)) and not isinstance(v, bool)


def _coerce_pair(value, field: str, backend: str) -> tuple:
    """Normalize a user coefficient to an (re, im) pair for the backend."""
    if isinstance(value, tuple):
        if len(value) != 2:
            raise AlgebraError(f"coefficient pair must have two entries, got {value!r}")
        re, im = value
    elif isinstance(value, complex):
        re, im = value.real, value.imag
    else:
        re, im = value, 0
    if backend == EXACT:
        if not _is_rational(re) or not _is_rational(im):
            raise AlgebraError(
                f"exact backend needs int or Fraction coefficients, got {value!r}"
            )
    else:
        re = float(re)
        im = float(im)
    if field == REAL and im != 0:
        raise AlgebraError("real field cannot carry an imaginary coefficient")
    return re, im


class Multivector:
    """Immutable sparse multivector over a fixed signature, field and backend."""

    __slots__ = ("sig", "field", "backend", "_terms")

    def __init__(self, sig: Signature, terms=None, field: str = REAL, backend: str = EXACT):
        if field not in (REAL, COMPLEX):
            raise AlgebraError(f"unknown field {field!r}")
        if backend not in (EXACT, FLOAT):
            raise AlgebraError(f"unknown backend {backend!r}")
        tmap: dict[int, tuple] = {}
        if terms:
            items = terms.items() if isinstance(terms, dict) else terms
            limit = 1 << sig.n
            for mask, value in items:
                if not 0 <= mask < limit:
                    raise AlgebraError(f"blade mask {mask:#x} invalid for n={sig.n}")
                re, im = _coerce_pair(value, field, backend)
                cur = tmap.get(mask)
                if cur is not None:
                    re += cur[0]
                    im += cur[1]
                if re == 0 and im == 0:
                    tmap.pop(mask, None)
                else:
                    tmap[mask] = (re, im)
        self.sig = sig
        self.field = field
        self.backend = backend
        self._terms = tmap

    @classmethod
    def _raw(cls, sig, field, backend, tmap):
        """Internal constructor for already-normalized, zero-pruned term maps."""
        mv = object.__new__(cls)
        mv.sig = sig
        mv.field = field
        mv.backend = backend
        mv._terms = tmap
        return mv

    # ---------------------------------------------------------------- factories

    @classmethod
    def zero(cls, sig, field=REAL, backend=EXACT):
        return cls(sig, None, field, backend)

    @classmethod
    def scalar(cls, sig, value, field=REAL, backend=EXACT):
        return cls(sig, {0: value}, field, backend)

    @classmethod
    def basis_blade(cls, sig, indices, coeff=1, field=REAL, backend=EXACT):
        """Blade from a mask (int) or an iterable of 1-based indices."""
        mask = indices if isinstance(indices, int) else mask_from_indices(indices, sig.n)
        if isinstance(indices, int) and not 0 <= mask < (1 << sig.n):
            raise AlgebraError(f"blade mask {mask:#x} invalid for n={sig.n}")
        return cls(sig, {mask: coeff}, field, backend)

    # ---------------------------------------------------------------- inspection

    def terms(self) -> list[tuple[int, tuple]]:
        """Term list sorted by (rank, mask); deterministic across runs."""
        return sorted(self._terms.items(), key=lambda kv: (kv[0].bit_count(), kv[0]))

    def coeff(self, mask: int) -> tuple:
        zero = 0.0 if self.backend == FLOAT else 0
        return self._terms.get(mask, (zero, zero))

    def grades(self) -> tuple[int, ...]:
        return tuple(sorted({m.bit_count() for m in self._terms}))

    def is_zero(self) -> bool:
        return not self._terms

    def max_abs(self):
        """Largest absolute coefficient component (0 for the zero element)."""
        best = 0
        for re, im in self._terms.values():
            for v in (re, im):
                a = -v if v < 0 else v
                if a > best:
                    best = a
        return best

    def __len__(self) -> int:
        return len(self._terms)

    def __repr__(self) -> str:
        from .mvtext import format_mv

        return (
            f"<Multivector {format_mv(self)!r} sig=({self.sig.p},{self.sig.q})"
            f" {self.field}/{self.backend}>"
        )

    # ---------------------------------------------------------------- comparisons

    def _compat(self, other: "Multivector"):
        if self.sig != other.sig:
            raise AlgebraError(
                f"signature mismatch: ({self.sig.p},{self.sig.q}) vs ({other.sig.p},{other.sig.q})"
            )
        if self.field != other.field:
            raise AlgebraError(f"field mismatch: {self.field} vs {other.field}")

    def __eq__(self, other):
        if not isinstance(other, Multivector):
            return NotImplemented
        self._compat(other)
        return self._terms == other._terms

    __hash__ = None

    # ---------------------------------------------------------------- linear ops

    def __add__(self, other):
        if not isinstance(other, Multivector):
            return NotImplemented
        self._compat(other)
        if self.backend != other.backend:
            raise AlgebraError(f"backend mismatch: {self.backend} vs {other.backend}")
        out = dict(self._terms)
        for m, (re, im) in other._terms.items():
            cur = out.get(m)
            if cur is None:
                out[m] = (re, im)
            else:
                re += cur[0]
                im += cur[1]
                if re == 0 and im == 0:
                    del out[m]
                else:
                    out[m] = (re, im)
        return Multivector._raw(self.sig, self.field, self.backend, out)

    def __sub__(self, other):
        if not isinstance(other, Multivector):
            return NotImplemented
        return self.__add__(-other)

    def __neg__(self):
        out = {m: (-re, -im) for m, (re, im) in self._terms.items()}
        return Multivector._raw(self.sig, self.field, self.backend, out)

    def scale(self, value) -> "Multivector":
        """Multiply by a scalar; accepts a number or an (re, im) pair."""
        cr, ci = _coerce_pair(value, self.field, self.backend)
        if cr == 0 and ci == 0:
            return Multivector._raw(self.sig, self.field, self.backend, {})
        out = {}
        if ci == 0:
            for m, (re, im) in self._terms.items():
                out[m] = (cr * re, cr * im)
        else:
            for m, (re, im) in self._terms.items():
                out[m] = (cr * re - ci * im, cr * im + ci * re)
        return Multivector._raw(self.sig, self.field, self.backend, out)

    def __rmul__(self, other):
        if isinstance(other, (int, float, Fraction)) and not isinstance(other, bool):
            return self.scale(other)
        return NotImplemented

    # ---------------------------------------------------------------- products

    def __mul__(self, other):
        if isinstance(other, (int, float, Fraction)) and not isinstance(other, bool):
            return self.scale(other)
        if not isinstance(other, Multivector):
            return NotImplemented
        self._compat(other)
        if self.backend != other.backend:
            raise AlgebraError(f"backend mismatch: {self.backend} vs {other.backend}")
        p = self.sig.p
        out: dict[int, tuple] = {}
        get = out.get
        if self.field == REAL:
            for ma, (ra, _) in self._terms.items():
                for mb, (rb, _) in other._terms.items():
                    swaps = 0
                    t = ma >> 1
                    while t:
                        swaps += (t & mb).bit_count()
                        t >>= 1
                    swaps += ((ma & mb) >> p).bit_count()
                    re = -ra * rb if swaps & 1 else ra * rb
                    m = ma ^ mb
                    cur = get(m)
                    if cur is None:
                        out[m] = (re, 0)
                    else:
                        re += cur[0]
                        if re == 0:
                            del out[m]
                        else:
                            out[m] = (re, 0)
        else:
            for ma, (ra, ia) in self._terms.items():
                for mb, (rb, ib) in other._terms.items():
                    swaps = 0
                    t = ma >> 1
                    while t:
                        swaps += (t & mb).bit_count()
                        t >>= 1
                    swaps += ((ma & mb) >> p).bit_count()
                    re = ra * rb - ia * ib
                    im = ra * ib + ia * rb
                    if swaps & 1:
                        re = -re
                        im = -im
                    m = ma ^ mb
                    cur = get(m)
                    if cur is None:
                        out[m] = (re, im)
                    else:
                        re += cur[0]
                        im += cur[1]
                        if re == 0 and im == 0:
                            del out[m]
                        else:
                            out[m] = (re, im)
        return Multivector._raw(self.sig, self.field, self.backend, out)

    # ---------------------------------------------------------------- gradings

    def grade(self, k: int) -> "Multivector":
        """Projection onto the rank-k terms."""
        if not 0 <= k <= self.sig.n:
            raise AlgebraError(f"rank {k} out of range 0..{self.sig.n}")
        out = {m: c for m, c in self._terms.items() if m.bit_count() == k}
        return Multivector._raw(self.sig, self.field, self.backend, out)

    def even_part(self) -> "Multivector":
        out = {m: c for m, c in self._terms.items() if not m.bit_count() & 1}
        return Multivector._raw(self.sig, self.field, self.backend, out)

    def odd_part(self) -> "Multivector":
        out = {m: c for m, c in self._terms.items() if m.bit_count() & 1}
        return Multivector._raw(self.sig, self.field, self.backend, out)

    # ---------------------------------------------------------------- conjugations

    def reversion(self) -> "Multivector":
        """Anti-automorphism scaling rank k by (-1)^(k(k-1)/2)."""
        out = {}
        for m, (re, im) in self._terms.items():
            # k(k-1)/2 is odd exactly when k = 2, 3 mod 4
            out[m] = (-re, -im) if m.bit_count() & 2 else (re, im)
        return Multivector._raw(self.sig, self.field, self.backend, out)

    def grade_involution(self) -> "Multivector":
        """Automorphism scaling rank k by (-1)^k."""
        out = {}
        for m, (re, im) in self._terms.items():
            out[m] = (-re, -im) if m.bit_count() & 1 else (re, im)
        return Multivector._raw(self.sig, self.field, self.backend, out)

    def complex_conjugate(self) -> "Multivector":
        """Coefficient-wise conjugation relative to the generator basis."""
        if self.field != COMPLEX:
            raise AlgebraError("complex conjugation needs the complex field")
        out = {m: (re, -im) for m, (re, im) in self._terms.items()}
        return Multivector._raw(self.sig, self.field, self.backend, out)

    def pseudo_hermitian(self) -> "Multivector":
        """Composition of complex conjugation and reversion."""
        if self.field != COMPLEX:
            raise AlgebraError("pseudo-Hermitian conjugation needs the complex field")
        return self.reversion().complex_conjugate()


def commutator(u: Multivector, v: Multivector) -> Multivector:
    return u * v - v * u


def anticommutator(u: Multivector, v: Multivector) -> Multivector:
    return u * v + v * u
