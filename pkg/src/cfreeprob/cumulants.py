"""Moment <-> cumulant transforms, free and conditionally free, over exact rationals.

The transforms come in two flavours: the production path uses the triangular
recursions (products over compositions), and `partition_sum_moment` spells out
the explicit sum over non-crossing partitions with inner/outer weights as an
independent oracle.

The `_raw` helpers work on plain lists and only use ring operations (+, *, -),
so they also run unchanged over symbolic coefficients in tests.
"""

from __future__ import annotations

import json
from fractions import Fraction

from . import partitions

MAX_PARTITION_SUM_N = 12


def _as_fractions(values) -> tuple[Fraction, ...]:
    return tuple(Fraction(v) for v in values)


class MomentSequence:
    """Truncated moments m_0..m_N of a normalized state; m_0 must be 1."""

    __slots__ = ("moments",)

    def __init__(self, moments):
        moments = _as_fractions(moments)
        if not moments:
            raise ValueError("need at least m_0")
        if moments[0] != 1:
            raise ValueError("m_0 must be 1, got %s" % (moments[0],))
        self.moments = moments

    @property
    def order(self) -> int:
        return len(self.moments) - 1

    def __getitem__(self, n: int) -> Fraction:
        return self.moments[n]

    def truncated(self, order: int) -> "MomentSequence":
        if order > self.order:
            raise ValueError("cannot extend a moment sequence")
        return MomentSequence(self.moments[: order + 1])

    @classmethod
    def point_mass(cls, c, order: int) -> "MomentSequence":
        c = Fraction(c)
        return cls([c**n for n in range(order + 1)])

    @classmethod
    def from_atoms(cls, atoms, order: int) -> "MomentSequence":
        """Moments of a finite atomic measure [(location, weight), ...]."""
        atoms = [(Fraction(loc), Fraction(w)) for loc, w in atoms]
        if sum(w for _, w in atoms) != 1:
            raise ValueError("atom weights must sum to 1")
        return cls(
            [sum((w * loc**n for loc, w in atoms), Fraction(0)) for n in range(order + 1)]
        )

    @classmethod
    def symmetric_two_point(cls, a, order: int) -> "MomentSequence":
        a = Fraction(a)
        return cls.from_atoms([(-a, Fraction(1, 2)), (a, Fraction(1, 2))], order)

    def to_json(self) -> str:
        return json.dumps(
            {"order": self.order, "moments": [str(m) for m in self.moments]},
            sort_keys=True,
        )

    @classmethod
    def from_json(cls, text: str) -> "MomentSequence":
        data = json.loads(text)
        seq = cls([Fraction(s) for s in data["moments"]])
        if seq.order != data["order"]:
            raise ValueError("order field does not match moment count")
        return seq

    def __eq__(self, other):
        return isinstance(other, MomentSequence) and self.moments == other.moments

    def __hash__(self):
        return hash(self.moments)

    def __repr__(self):
        return "MomentSequence(%r)" % (tuple(str(m) for m in self.moments),)


class _CumulantBase:
    __slots__ = ("values",)
    _json_key = "cumulants"

    def __init__(self, values):
        self.values = _as_fractions(values)
        if not self.values:
            raise ValueError("need at least one cumulant")

    @property
    def order(self) -> int:
        return len(self.values)

    def __getitem__(self, n: int) -> Fraction:
        if n < 1:
            raise IndexError("cumulants are indexed from 1")
        return self.values[n - 1]

    def to_json(self) -> str:
        return json.dumps(
            {"order": self.order, self._json_key: [str(v) for v in self.values]},
            sort_keys=True,
        )

    @classmethod
    def from_json(cls, text: str):
        data = json.loads(text)
        seq = cls([Fraction(s) for s in data[cls._json_key]])
        if seq.order != data["order"]:
            raise ValueError("order field does not match cumulant count")
        return seq

    def __eq__(self, other):
        return type(other) is type(self) and self.values == other.values

    def __hash__(self):
        return hash((type(self).__name__, self.values))

    def __repr__(self):
        return "%s(%r)" % (type(self).__name__, tuple(str(v) for v in self.values))


class FreeCumulantSequence(_CumulantBase):
    """Free (non-crossing) cumulants r_1..r_N."""


class CFreeCumulantSequence(_CumulantBase):
    """Conditionally free cumulants R_1..R_N of a pair (mu, nu)."""


class MeasurePair:
    """A pair (mu, nu) of moment sequences sharing one truncation order."""

    __slots__ = ("mu", "nu")

    def __init__(self, mu: MomentSequence, nu: MomentSequence):
        if mu.order != nu.order:
            raise ValueError(
                "pair components must share the truncation order (%d vs %d)"
                % (mu.order, nu.order)
            )
        self.mu = mu
        self.nu = nu

    @property
    def order(self) -> int:
        return self.mu.order

    @classmethod
    def diagonal(cls, nu: MomentSequence) -> "MeasurePair":
        return cls(nu, nu)

    @classmethod
    def with_delta0(cls, mu: MomentSequence) -> "MeasurePair":
        return cls(mu, MomentSequence.point_mass(0, mu.order))

    def to_json(self) -> str:
        return json.dumps(
            {
                "mu": {"order": self.order, "moments": [str(m) for m in self.mu.moments]},
                "nu": {"order": self.order, "moments": [str(m) for m in self.nu.moments]},
            },
            sort_keys=True,
        )

    @classmethod
    def from_json(cls, text: str) -> "MeasurePair":
        data = json.loads(text)
        return cls(
            MomentSequence([Fraction(s) for s in data["mu"]["moments"]]),
            MomentSequence([Fraction(s) for s in data["nu"]["moments"]]),
        )

    def __eq__(self, other):
        return isinstance(other, MeasurePair) and self.mu == other.mu and self.nu == other.nu

    def __repr__(self):
        return "MeasurePair(%r, %r)" % (self.mu, self.nu)


def _comp_sums(m, jmax: int, smax: int):
    """W[j][s] = sum over compositions of s into j ordered parts of prod m[part].

    Parts are >= 0 and index into the list m; entries beyond len(m)-1 never
    occur in the transforms below.
    """
    W = [[0] * (smax + 1) for _ in range(jmax + 1)]
    W[0][0] = 1
    for j in range(1, jmax + 1):
        prev = W[j - 1]
        cur = W[j]
        for s in range(smax + 1):
            acc = 0
            for t in range(min(s, len(m) - 1) + 1):
                if prev[s - t]:
                    acc += m[t] * prev[s - t]
            cur[s] = acc
    return W


def _free_to_moments_raw(r):
    """[1, m_1, ..., m_N] from [r_1, ..., r_N] via the product recursion."""
    m = [1]
    for n in range(1, len(r) + 1):
        W = _comp_sums(m, n, n - 1)
        m.append(sum(r[k - 1] * W[k][n - k] for k in range(1, n + 1)))
    return m


def _moments_to_free_raw(m):
    """[r_1, ..., r_N] from [1, m_1, ..., m_N]; triangular inversion."""
    N = len(m) - 1
    r = []
    for n in range(1, N + 1):
        W = _comp_sums(m[:n], n, n - 1)
        r.append(m[n] - sum(r[k - 1] * W[k][n - k] for k in range(1, n)))
    return r


def _cfree_to_moments_raw(R, nu):
    """[1, m_1(mu), ...] from c-free cumulants R and full nu-moment list.

    Inner composition factors take nu-moments, the last factor takes the
    mu-moment being built.
    """
    N = len(R)
    Wnu = _comp_sums(nu, max(N - 1, 0), N - 1 if N else 0)
    m = [1]
    for n in range(1, N + 1):
        total = 0
        for k in range(1, n + 1):
            row = Wnu[k - 1]
            total += R[k - 1] * sum(
                row[s] * m[n - k - s] for s in range(n - k + 1) if row[s]
            )
        m.append(total)
    return m


def _moments_to_cfree_raw(mu, nu):
    """[R_1, ..., R_N] from moment lists of the pair; triangular inversion."""
    N = len(mu) - 1
    Wnu = _comp_sums(nu, max(N - 1, 0), N - 1 if N else 0)
    R = []
    for n in range(1, N + 1):
        acc = 0
        for k in range(1, n):
            row = Wnu[k - 1]
            acc += R[k - 1] * sum(
                row[s] * mu[n - k - s] for s in range(n - k + 1) if row[s]
            )
        R.append(mu[n] - acc)
    return R


def moments_from_free_cumulants(r: FreeCumulantSequence) -> MomentSequence:
    """Moments of the measure whose free cumulants are r."""
    return MomentSequence(_free_to_moments_raw(list(r.values)))


def free_cumulants_from_moments(m: MomentSequence) -> FreeCumulantSequence:
    """Free cumulants of a moment sequence; exact inverse of the recursion."""
    return FreeCumulantSequence(_moments_to_free_raw(list(m.moments)))


def moments_from_cfree_cumulants(
    R: CFreeCumulantSequence, nu_m: MomentSequence
) -> MomentSequence:
    """mu-moments reconstructed from c-free cumulants R and the nu-moments."""
    if R.order != nu_m.order:
        raise ValueError("orders must match (%d vs %d)" % (R.order, nu_m.order))
    return MomentSequence(_cfree_to_moments_raw(list(R.values), list(nu_m.moments)))


def cfree_cumulants_from_moments(pair: MeasurePair) -> CFreeCumulantSequence:
    """C-free cumulants R_n(mu, nu) of a measure pair."""
    return CFreeCumulantSequence(
        _moments_to_cfree_raw(list(pair.mu.moments), list(pair.nu.moments))
    )


def partition_sum_moment(
    r: FreeCumulantSequence, R: CFreeCumulantSequence, n: int
) -> Fraction:
    """Explicit non-crossing partition sum for m_n(mu).

    Every partition contributes the product of r over its inner blocks and R
    over its outer blocks.  Enumeration-backed; oracle for the recursion.
    """
    if not 1 <= n <= MAX_PARTITION_SUM_N:
        raise ValueError("n must be in 1..%d" % MAX_PARTITION_SUM_N)
    if r.order < n or R.order < n:
        raise ValueError("cumulant sequences too short for n=%d" % n)
    total = Fraction(0)
    for p in partitions.enumerate_nc(n):
        _, inner_flags = partitions.classify(p)
        term = Fraction(1)
        for blk, inner in zip(p.blocks, inner_flags):
            term *= r[len(blk)] if inner else R[len(blk)]
        total += term
    return total
