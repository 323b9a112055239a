"""Invariant density and compact-picture coordinate changes.

The invariant density of the factorization coordinates is the even
power product prod_j |1 + z_j^- z_j^+|^(2 (delta(h_tau_j) - 1)), an
exact nonnegative rational.

The compact picture replaces each pair by (y_j^-, y_j^+) subject to
the positive-branch constraint that 1 - y_j^- y_j^+ is real positive;
the bridge scalars a_j = (1 - y_j^- y_j^+)^(-1/2) are square roots of
rationals, so the conversions run over RadicalScalar values: exact
products c * sqrt(q) with Gaussian-rational c and positive rational q.

The pullback section differentiates the composite map y -> zeta -> (l, u)
with forward-mode jets and compares the exact determinant against the
closed forms prod a_j^4 (coordinate change alone) and
prod a_j^(2 delta_j + 2) (full pullback); the unit-ratio identity
|det|^2 = prod (a_j^2)^(2 delta_j + 2) is the volume-preservation
content of the compact picture.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .errors import BranchViolationError, InvalidInputError
from .factorization import check_pairs, forward_coords_jets
from .jets import Jet
from .linalg import det_exact
from .matrices import coroot_diag, dim
from .rootsystem import delta, pairing
from .scalar import ONE, ZERO, Scalar, sc
from .weyl import ordering_from_word


class RadicalScalar:
    """c * sqrt(q) with Scalar c and positive rational radicand q.

    The radicand is normalized to an integer with its largest easily
    found square factor pulled into c; values with q == 1 collapse to
    plain scalars via ``to_scalar``.
    """

    __slots__ = ("coeff", "radicand")

    def __init__(self, coeff: Scalar, radicand: Fraction = Fraction(1)):
        radicand = Fraction(radicand)
        if radicand <= 0:
            raise InvalidInputError("radicand must be positive")
        # sqrt(a/b) = sqrt(a*b)/b
        n = radicand.numerator * radicand.denominator
        coeff = coeff / radicand.denominator
        r = math.isqrt(n)
        if r * r == n:
            coeff = coeff * r
            n = 1
        self.coeff = coeff
        self.radicand = Fraction(n)

    @classmethod
    def sqrt_of(cls, value) -> "RadicalScalar":
        v = sc(value)
        if not v.is_positive_real():
            raise BranchViolationError(f"square root branch needs a positive real, got {v}")
        return cls(ONE, v.real)

    def to_scalar(self) -> Scalar:
        if self.radicand != 1:
            raise InvalidInputError(f"irrational value {self} is not a scalar")
        return self.coeff

    def is_zero(self) -> bool:
        return self.coeff.is_zero()

    @property
    def val(self) -> "RadicalScalar":
        return self

    def __mul__(self, other):
        other = _lift(other)
        if other is None:
            return NotImplemented
        return RadicalScalar(self.coeff * other.coeff, self.radicand * other.radicand)

    __rmul__ = __mul__

    def inverse(self) -> "RadicalScalar":
        if self.coeff.is_zero():
            raise ZeroDivisionError("inverse of zero")
        # 1 / (c sqrt(q)) = (1 / (c q)) sqrt(q)
        return RadicalScalar(ONE / (self.coeff * Scalar(self.radicand.numerator)), self.radicand)

    def __truediv__(self, other):
        other = _lift(other)
        if other is None:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = _lift(other)
        if other is None:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        out = RadicalScalar(ONE)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __neg__(self):
        return RadicalScalar(-self.coeff, self.radicand)

    def __add__(self, other):
        other = _lift(other)
        if other is None:
            return NotImplemented
        if other.is_zero():
            return self
        if self.is_zero():
            return other
        ratio = Fraction(other.radicand, self.radicand)
        root = _rational_sqrt(ratio)
        if root is None:
            raise InvalidInputError("cannot add incompatible radicals exactly")
        return RadicalScalar(self.coeff + other.coeff * Scalar.from_fraction(root), self.radicand)

    __radd__ = __add__

    def __sub__(self, other):
        other = _lift(other)
        if other is None:
            return NotImplemented
        return self.__add__(-other)

    def __rsub__(self, other):
        other = _lift(other)
        if other is None:
            return NotImplemented
        return other.__add__(-self)

    def __eq__(self, other):
        other = _lift(other)
        if other is None:
            return NotImplemented
        if self.coeff.is_zero():
            return other.coeff.is_zero()
        if other.coeff.is_zero():
            return False
        t = self.coeff / other.coeff
        if not t.is_positive_real():
            return False
        return t.real * t.real * self.radicand == other.radicand

    def __hash__(self):
        return hash((self.coeff, self.radicand))

    def __str__(self):
        if self.radicand == 1:
            return str(self.coeff)
        return f"({self.coeff})*sqrt({self.radicand})"

    __repr__ = __str__


def _rational_sqrt(q: Fraction):
    rn = math.isqrt(q.numerator)
    rd = math.isqrt(q.denominator)
    if rn * rn == q.numerator and rd * rd == q.denominator:
        return Fraction(rn, rd)
    return None


def _lift(x):
    if isinstance(x, RadicalScalar):
        return x
    try:
        return RadicalScalar(sc(x))
    except InvalidInputError:
        return None


def _as_scalar(x) -> Scalar:
    if isinstance(x, RadicalScalar):
        return x.to_scalar()
    return sc(x)


# -- invariant density -------------------------------------------------


def haar_density(family: str, rank: int, word, pairs) -> Scalar:
    """prod_j |1 + z_j^- z_j^+|^(2 (delta_j - 1)), exact rational."""
    taus = ordering_from_word(family, rank, word)
    pairs = check_pairs(pairs, len(taus))
    out = ONE
    for tau, (zm, zp) in zip(taus, pairs):
        s = _as_scalar(ONE + _mulx(zm, zp))
        out = out * s.abs2() ** (delta(family, rank, tau) - 1)
    return out


def _mulx(a, b):
    # multiply possibly radical-valued coordinates
    if isinstance(a, RadicalScalar) or isinstance(b, RadicalScalar):
        return _lift(a) * _lift(b)
    return sc(a) * sc(b)


# -- compact picture ---------------------------------------------------


def eta_from_zeta(family: str, rank: int, word, pairs):
    """Compact coordinates from factorization coordinates.

    Every 1 + z_j^- z_j^+ must be real positive (the positive branch);
    returns (eta_pairs, a_squared) where a_j^2 = 1 + z_j^- z_j^+.
    """
    taus = ordering_from_word(family, rank, word)
    n = len(taus)
    pairs = [(p[0], p[1]) for p in check_pairs(pairs, n)]
    asq = []
    for k, (zm, zp) in enumerate(pairs):
        s = _as_scalar(ONE + _mulx(zm, zp))
        if not s.is_positive_real():
            raise BranchViolationError(
                f"1 + z^- z^+ must be real positive at pair {k + 1}, got {s}"
            )
        asq.append(s)
    avals = [RadicalScalar.sqrt_of(s) for s in asq]
    eta = []
    for j in range(n):
        em = _lift(pairs[j][0])
        ep = _lift(pairs[j][1])
        for k in range(j + 1, n):
            p = pairing(taus[j], taus[k])
            em = em * avals[k] ** p
            ep = ep * avals[k] ** (-p)
        ep = ep * _lift(asq[j]).inverse()
        eta.append((_simplify(em), _simplify(ep)))
    return eta, asq


def zeta_from_eta(family: str, rank: int, word, eta_pairs):
    """Factorization coordinates from compact coordinates.

    Every 1 - y_j^- y_j^+ must be real positive; returns
    (zeta_pairs, h_shift, a_squared) where h_shift is the torus
    diagonal prod_j a_j^(h_tau_j)."""
    taus = ordering_from_word(family, rank, word)
    n = len(taus)
    pairs = [(p[0], p[1]) for p in check_pairs(eta_pairs, n)]
    asq = []
    for k, (em, ep) in enumerate(pairs):
        v = ONE - _mulx(em, ep)
        v = _as_scalar(v)
        if not v.is_positive_real():
            raise BranchViolationError(
                f"1 - y^- y^+ must be real positive at pair {k + 1}, got {v}"
            )
        asq.append(v.inverse())  # a_j^2 = (1 - y^- y^+)^(-1)
    avals = [RadicalScalar.sqrt_of(s) for s in asq]
    zeta = []
    for j in range(n):
        zm = _lift(pairs[j][0])
        zp = _lift(pairs[j][1]) * asq[j]
        for k in range(j + 1, n):
            p = pairing(taus[j], taus[k])
            zm = zm * avals[k] ** (-p)
            zp = zp * avals[k] ** p
        zeta.append((_simplify(zm), _simplify(zp)))
    hshift = [RadicalScalar(ONE)] * dim(family, rank)
    for k in range(n):
        for a, p in enumerate(coroot_diag(family, rank, taus[k])):
            if p:
                hshift[a] = hshift[a] * avals[k] ** p
    return zeta, [_simplify(v) for v in hshift], asq


def _simplify(x):
    if isinstance(x, RadicalScalar) and x.radicand == 1:
        return x.coeff
    return x


# -- volume pullback of the compact coordinates --------------------------


def _jet_compact_chain(family: str, rank: int, word, eta_pairs):
    """Jet-valued (taus, zeta, a^2) along the compact coordinate change.

    Seeds one jet variable per coordinate (all y^- first, then all y^+).
    Every 1 - y_j^- y_j^+ must be real positive, and its value must be a
    perfect rational square so the square-root chain stays inside the
    Gaussian rationals.
    """
    taus = ordering_from_word(family, rank, word)
    n = len(taus)
    pairs = check_pairs(eta_pairs, n)
    flat = [sc(p[0]) for p in pairs] + [sc(p[1]) for p in pairs]
    jets = Jet.variables(flat)
    pairs = [(jets[k], jets[n + k]) for k in range(n)]
    asq = []
    for k, (em, ep) in enumerate(pairs):
        v = 1 - em * ep
        if not v.val.is_positive_real():
            raise BranchViolationError(
                f"1 - y^- y^+ must be real positive at pair {k + 1}, got {v.val}"
            )
        asq.append(1 / v)
    try:
        avals = [v.sqrt() for v in asq]
    except InvalidInputError as exc:
        raise InvalidInputError(
            "the exact jet chain needs every 1 - y^- y^+ to be a perfect "
            "rational square"
        ) from exc
    zeta = []
    for j in range(n):
        zm = pairs[j][0]
        zp = pairs[j][1] * asq[j]
        for k in range(j + 1, n):
            p = pairing(taus[j], taus[k])
            zm = zm * avals[k] ** (-p)
            zp = zp * avals[k] ** p
        zeta.append((zm, zp))
    return taus, zeta, asq


def _det_of_grad_rows(outputs, width: int) -> Scalar:
    rows = []
    for out in outputs:
        rows.append(list(out.grad) if isinstance(out, Jet) else [ZERO] * width)
    return det_exact(rows)


def eta_change_jacobian_det(family: str, rank: int, word, eta_pairs) -> Scalar:
    """det of d(zeta)/d(y) for the compact coordinate change, by jets.

    Equals prod_j a_j^4 on the positive branch: pair j of the change only
    feeds on pairs k >= j, so the matrix is block triangular with 2 x 2
    diagonal blocks of determinant a_j^4.
    """
    taus, zeta, _ = _jet_compact_chain(family, rank, word, eta_pairs)
    n = len(taus)
    outs = [z[0] for z in zeta] + [z[1] for z in zeta]
    return _det_of_grad_rows(outs, 2 * n)


def lebesgue_pullback_det(family: str, rank: int, word, eta_pairs) -> Scalar:
    """det of d(l, u)/d(y) for the composite map y -> zeta -> (l, u).

    The end-to-end jet chain equals prod_j a_j^(2 delta_j + 2) on the
    positive branch: the factorization-coordinate Jacobian contributes
    prod_j (1 + z_j^- z_j^+)^(delta_j - 1) with 1 + z^- z^+ = a^2, and
    the coordinate change contributes prod_j a_j^4.
    """
    taus, zeta, _ = _jet_compact_chain(family, rank, word, eta_pairs)
    n = len(taus)
    lcoords, ucoords = forward_coords_jets(family, rank, taus, zeta)
    return _det_of_grad_rows(list(lcoords) + list(ucoords), 2 * n)


def unit_jacobian_check(family: str, rank: int, word, eta_pairs) -> Scalar:
    """Exact ratio of the squared (l, u) pullback to the carried density.

    The numerator is |det d(l,u)/dy|^2 from the end-to-end jet chain; the
    denominator is the invariant density written in compact coordinates
    times the squared determinant of the coordinate change, the rational
    closed form prod_j (a_j^2)^(2 delta_j + 2).  The ratio is exactly one
    on the positive branch: Lebesgue volume in (l, u) matches Lebesgue
    volume in y once the invariant density rides along with the change
    of coordinates.  The bare determinant itself is not unimodular; its
    exact value is the closed form stated in lebesgue_pullback_det.
    """
    det = lebesgue_pullback_det(family, rank, word, eta_pairs)
    taus = ordering_from_word(family, rank, word)
    pairs = check_pairs(eta_pairs, len(taus))
    den = ONE
    for tau, (em, ep) in zip(taus, pairs):
        v = _as_scalar(ONE - _mulx(em, ep))
        den = den * v.inverse() ** (2 * delta(family, rank, tau) + 2)
    return det.abs2() / den
