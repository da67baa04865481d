"""Quaternion-type calculus: atoms, type sets, projectors, closure tables.

The four main types split Cl(p,q) by rank mod 4.  Over the complexes each
main type further splits into a real-coefficient atom ``k`` and an
imaginary-coefficient atom ``ik``, giving 8 atoms.  A :class:`TypeSet` is
a set of atoms and denotes the direct sum of the atom subspaces; the 15
nonempty real sets are the quaternion types.

Every conjugation acts on each atom subspace as +1 or -1:

==========  ===  ===  ===  ===  ====  ====  ====  ====
operation    0    1    2    3    i0    i1    i2    i3
==========  ===  ===  ===  ===  ====  ====  ====  ====
rev   (~)    +    +    -    -    +     +     -     -
gri   (^)    +    -    +    -    +     -     +     -
grirev(^~)   +    -    -    +    +     -     -     +
conj  (-)    +    +    +    +    -     -     -     -
phc   (‡)    +    +    -    -    -     -     +     +
griconj      +    -    +    -    -     +     -     +
griphc       +    -    -    +    -     +     +     -
==========  ===  ===  ===  ===  ====  ====  ====  ====

The closure tables for commutator and anticommutator are hard-coded below
and re-derived from exhaustive blade arithmetic at n=5 when the module is
imported; a transcription error fails the import.
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import (
    COMPLEX,
    EXACT,
    FLOAT,
    FLOAT_TOL,
    REAL,
    Multivector,
    Signature,
    blade_mul,
)
from .errors import AlgebraError

# ------------------------------------------------------------------ type sets

_GLYPH_EMPTY = "∅"


@dataclass(frozen=True)
class TypeSet:
    """Set of type atoms; bit k is atom k, bit 4+k is atom ik."""

    field: str
    bits: int

    def __post_init__(self):
        if self.field not in (REAL, COMPLEX):
            raise AlgebraError(f"unknown field {self.field!r}")
        width = 0xFF if self.field == COMPLEX else 0x0F
        if not 0 <= self.bits <= width:
            raise AlgebraError(f"atom bits {self.bits:#x} invalid for {self.field} field")

    @classmethod
    def empty(cls, field: str = REAL) -> "TypeSet":
        return cls(field, 0)

    @classmethod
    def full(cls, field: str = REAL) -> "TypeSet":
        return cls(field, 0xFF if field == COMPLEX else 0x0F)

    @classmethod
    def of_atoms(cls, field: str, atoms) -> "TypeSet":
        bits = 0
        for k, imag in atoms:
            bits |= _atom_bit(k, imag)
        return cls(field, bits)

    def atoms(self) -> tuple[tuple[int, bool], ...]:
        """Atoms as (main type, imaginary) pairs, real atoms first."""
        out = []
        for i in range(8):
            if self.bits >> i & 1:
                out.append((i & 3, i >= 4))
        return tuple(out)

    @property
    def is_empty(self) -> bool:
        return self.bits == 0

    def _check(self, other: "TypeSet"):
        if self.field != other.field:
            raise AlgebraError(f"field mismatch: {self.field} vs {other.field}")

    def __or__(self, other):
        self._check(other)
        return TypeSet(self.field, self.bits | other.bits)

    def __and__(self, other):
        self._check(other)
        return TypeSet(self.field, self.bits & other.bits)

    def __le__(self, other):
        self._check(other)
        return self.bits & ~other.bits == 0

    def issubset(self, other) -> bool:
        return self <= other

    def __contains__(self, atom) -> bool:
        k, imag = atom
        return bool(self.bits & _atom_bit(k, imag))

    def i_flip(self) -> "TypeSet":
        """TypeSet of i times an element of this set (real <-> imaginary)."""
        if self.field != COMPLEX:
            raise AlgebraError("i multiplication needs the complex field")
        return TypeSet(self.field, (self.bits & 0x0F) << 4 | self.bits >> 4)

    def __str__(self) -> str:
        if self.bits == 0:
            return _GLYPH_EMPTY
        real = "".join(str(k) for k in range(4) if self.bits >> k & 1)
        imag = "".join(str(k) for k in range(4) if self.bits >> (4 + k) & 1)
        if real and imag:
            return f"{real}+i{imag}"
        if imag:
            return f"i{imag}"
        return real

    def __repr__(self) -> str:
        return f"TypeSet({self.field!r}, {str(self)!r})"


def _atom_bit(k: int, imag: bool) -> int:
    if not 0 <= k <= 3:
        raise AlgebraError(f"main type {k} out of range 0..3")
    return 1 << (k + 4 if imag else k)


def parse_typeset(text: str, field: str = REAL) -> TypeSet:
    """Parse the digit-string syntax: '01', 'i23', '01+i23', '∅'/'0set'."""
    raw = text.strip()
    if raw in (_GLYPH_EMPTY, "0set"):
        return TypeSet.empty(field)
    bits = 0
    groups = raw.split("+")
    if not raw or len(groups) > 2:
        raise AlgebraError(f"bad type set {text!r}")
    for pos, group in enumerate(groups):
        group = group.strip()
        imag = group.startswith("i")
        if len(groups) == 2 and imag != (pos == 1):
            raise AlgebraError(f"bad type set {text!r}: expected digits '+' i-digits")
        if imag:
            group = group[1:]
        if not group or any(c not in "0123" for c in group):
            raise AlgebraError(f"bad type set {text!r}: expected digits 0-3")
        if imag and field != COMPLEX:
            raise AlgebraError(f"imaginary atoms in {text!r} need the complex field")
        for c in group:
            bits |= _atom_bit(int(c), imag)
    return TypeSet(field, bits)


# ------------------------------------------------------------------ closure tables

# Main-type closure of the commutator / anticommutator, row = left atom,
# column = right atom.  Imaginary flags combine by XOR.
_COMM_MAIN = (
    (2, 3, 0, 1),
    (3, 2, 1, 0),
    (0, 1, 2, 3),
    (1, 0, 3, 2),
)
_ACOMM_MAIN = (
    (0, 1, 2, 3),
    (1, 0, 3, 2),
    (2, 3, 0, 1),
    (3, 2, 1, 0),
)


def _pairwise_type(a: TypeSet, b: TypeSet, table) -> TypeSet:
    a._check(b)
    bits = 0
    for k1, i1 in a.atoms():
        row = table[k1]
        for k2, i2 in b.atoms():
            bits |= _atom_bit(row[k2], i1 ^ i2)
    return TypeSet(a.field, bits)


def commutator_type(a: TypeSet, b: TypeSet) -> TypeSet:
    """TypeSet containing [U,V] for U, V of the given types."""
    return _pairwise_type(a, b, _COMM_MAIN)


def anticommutator_type(a: TypeSet, b: TypeSet) -> TypeSet:
    """TypeSet containing {U,V} for U, V of the given types."""
    return _pairwise_type(a, b, _ACOMM_MAIN)


def product_type(a: TypeSet, b: TypeSet) -> TypeSet:
    """TypeSet containing UV; the union of the two bracket closures."""
    return commutator_type(a, b) | anticommutator_type(a, b)


# ------------------------------------------------------------------ conjugations

_REV, _GRI, _CCONJ = 1, 2, 4

_OP_ALIASES = {
    "rev": _REV, "~": _REV,
    "gri": _GRI, "^": _GRI,
    "grirev": _REV | _GRI, "revgri": _REV | _GRI, "^~": _REV | _GRI,
    "conj": _CCONJ, "-": _CCONJ,
    "phc": _REV | _CCONJ, "‡": _REV | _CCONJ,
    "griconj": _GRI | _CCONJ, "^-": _GRI | _CCONJ,
    "griphc": _REV | _GRI | _CCONJ, "^‡": _REV | _GRI | _CCONJ,
}

CONJUGATIONS_REAL = ("rev", "gri", "grirev")
CONJUGATIONS_COMPLEX = ("rev", "gri", "grirev", "conj", "phc", "griconj", "griphc")

_BITS_NAME = {1: "rev", 2: "gri", 3: "grirev", 4: "conj", 5: "phc", 6: "griconj", 7: "griphc"}


def conjugation_bits(op) -> int:
    """Canonical (rev, gri, conj) bit code of a conjugation name or code."""
    if isinstance(op, int):
        if not 1 <= op <= 7:
            raise AlgebraError(f"bad conjugation code {op}")
        return op
    bits = _OP_ALIASES.get(op)
    if bits is None:
        raise AlgebraError(f"unknown conjugation {op!r}")
    return bits


def conjugation_name(op) -> str:
    return _BITS_NAME[conjugation_bits(op)]


def _atom_sign(bits: int, k: int, imag: bool) -> int:
    s = 1
    if bits & _REV and k & 2:
        s = -s
    if bits & _GRI and k & 1:
        s = -s
    if bits & _CCONJ and imag:
        s = -s
    return s


def conjugation_action(op, field: str = REAL) -> tuple[int, ...]:
    """Per-atom eigenvalue of a conjugation: 4 signs (real) or 8 (complex).

    Order: atoms 0,1,2,3 then i0,i1,i2,i3.
    """
    bits = conjugation_bits(op)
    if field == REAL and bits & _CCONJ:
        raise AlgebraError(f"conjugation {conjugation_name(op)!r} needs the complex field")
    count = 8 if field == COMPLEX else 4
    return tuple(_atom_sign(bits, i & 3, i >= 4) for i in range(count))


def eigenspace(op, sign: int, field: str = REAL) -> TypeSet:
    """Atoms on which the conjugation acts as the given sign (+1 or -1)."""
    if sign not in (1, -1):
        raise AlgebraError(f"eigenvalue must be +1 or -1, got {sign}")
    action = conjugation_action(op, field)
    bits = 0
    for i, s in enumerate(action):
        if s == sign:
            bits |= 1 << i
    return TypeSet(field, bits)


def apply_conjugation(u: Multivector, op) -> Multivector:
    """Apply a conjugation (any composition of rev, gri, conj) to a multivector."""
    bits = conjugation_bits(op)
    if bits & _CCONJ and u.field != COMPLEX:
        raise AlgebraError(f"conjugation {conjugation_name(op)!r} needs the complex field")
    out = u
    if bits & _REV:
        out = out.reversion()
    if bits & _GRI:
        out = out.grade_involution()
    if bits & _CCONJ:
        out = out.complex_conjugate()
    return out


# ------------------------------------------------------------------ classification

def classify_by_rank(u: Multivector) -> TypeSet:
    """Minimal TypeSet containing u, read off the ranks of its terms."""
    bits = 0
    for mask, (re, im) in u._terms.items():
        k = mask.bit_count() & 3
        if re != 0:
            bits |= 1 << k
        if im != 0:
            bits |= 1 << (4 + k)
    return TypeSet(u.field, bits)


# Signs (s1, s2, s3) in P_k(U) = (U + s1*U^ + s2*U~ + s3*U^~) / 4, i.e. the
# eigenvalues of gri, rev and their composition on main type k.
_PROJ_SIGNS = ((1, 1, 1), (-1, 1, -1), (1, -1, -1), (-1, -1, 1))


def _exact_div(value, d: int):
    if isinstance(value, int):
        if value % d == 0:
            return value // d
        from fractions import Fraction

        return Fraction(value, d)
    return value / d  # Fraction or float


def qtype_project(u: Multivector, k: int) -> Multivector:
    """Component of u in main type k, via the conjugation projector."""
    if not 0 <= k <= 3:
        raise AlgebraError(f"main type {k} out of range 0..3")
    s1, s2, s3 = _PROJ_SIGNS[k]
    g = u.grade_involution()
    r = u.reversion()
    gr = g.reversion()
    total = u + g.scale(s1) + r.scale(s2) + gr.scale(s3)
    out = {m: (_exact_div(re, 4), _exact_div(im, 4)) for m, (re, im) in total._terms.items()}
    return Multivector._raw(u.sig, u.field, u.backend, out)


def _component_nonzero(w: Multivector, tol, scale) -> bool:
    if tol is None:
        return not w.is_zero()
    return w.max_abs() > tol * scale


def classify_by_conjugation(u: Multivector, tol=None) -> TypeSet:
    """Classify via projector decomposition; must agree with classify_by_rank."""
    if tol is None and u.backend == FLOAT:
        tol = FLOAT_TOL
    scale = u.max_abs()
    bits = 0
    for k in range(4):
        w = qtype_project(u, k)
        if u.field == COMPLEX:
            c = w.complex_conjugate()
            re_part = (w + c).scale(_half(u))
            im_part = (w - c).scale(_half(u))
            if _component_nonzero(re_part, tol, scale):
                bits |= 1 << k
            if _component_nonzero(im_part, tol, scale):
                bits |= 1 << (4 + k)
        else:
            if _component_nonzero(w, tol, scale):
                bits |= 1 << k
    return TypeSet(u.field, bits)


def _half(u: Multivector):
    if u.backend == FLOAT:
        return 0.5
    from fractions import Fraction

    return Fraction(1, 2)


def member(u: Multivector, tset: TypeSet, tol=None) -> bool:
    """True when u lies in the subspace the TypeSet denotes.

    Exact backend: strict (no component outside the set).  Float backend:
    components outside the set must stay below tol times the largest
    coefficient of u (default FLOAT_TOL).
    """
    if u.field != tset.field:
        raise AlgebraError(f"field mismatch: {u.field} vs {tset.field}")
    if tol is None and u.backend == FLOAT:
        tol = FLOAT_TOL
    threshold = 0 if tol is None else tol * u.max_abs()
    for mask, (re, im) in u._terms.items():
        k = mask.bit_count() & 3
        if not tset.bits >> k & 1 and abs(re) > threshold:
            return False
        if not tset.bits >> (4 + k) & 1 and abs(im) > threshold:
            return False
    return True


def main_type_dim(n: int, k: int) -> int:
    """Real dimension of one atom subspace: sum of C(n, r) over r = k mod 4."""
    from math import comb

    return sum(comb(n, r) for r in range(k, n + 1, 4))


# ------------------------------------------------------------------ startup self-check

def _derive_main_tables(sig: Signature):
    """Rederive both closure tables from exhaustive blade arithmetic.

    [e_A, e_B] and {e_A, e_B} are (s1 -+ s2) e_{A xor B} with s1, s2 the two
    blade product signs, so the whole table falls out of sign comparisons.
    """
    comm = [[set() for _ in range(4)] for _ in range(4)]
    acomm = [[set() for _ in range(4)] for _ in range(4)]
    size = 1 << sig.n
    for a in range(size):
        ka = a.bit_count() & 3
        for b in range(size):
            kb = b.bit_count() & 3
            s1, m = blade_mul(a, b, sig)
            s2, _ = blade_mul(b, a, sig)
            if s1 != s2:
                comm[ka][kb].add(m.bit_count() & 3)
            else:
                acomm[ka][kb].add(m.bit_count() & 3)
    return comm, acomm


def _startup_self_check():
    derived_comm, derived_acomm = _derive_main_tables(Signature(5, 0))
    for table, derived, label in (
        (_COMM_MAIN, derived_comm, "commutator"),
        (_ACOMM_MAIN, derived_acomm, "anticommutator"),
    ):
        for k1 in range(4):
            for k2 in range(4):
                if derived[k1][k2] != {table[k1][k2]}:
                    raise RuntimeError(
                        f"{label} closure table self-check failed at ({k1},{k2}): "
                        f"derived {sorted(derived[k1][k2])}, stored {table[k1][k2]}"
                    )


_startup_self_check()
