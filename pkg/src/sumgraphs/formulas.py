"""Closed-form counts for the interval families.

Every division is checked for exactness before it happens. Where a
recurrence exists next to a closed form, both are evaluated and compared.

The printed four-cycle formulas for these families do not survive an
oracle check beyond the smallest cases, so ``c4_count`` uses corrected
forms built from the join identity (see ``_c4_join``). The transcribed
versions stay available as ``c4_count_printed`` for comparison.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Optional

from .core import FamilySpec, Gmn
from .errors import ValidationError

QUANTITIES = (
    "degree", "edge_count", "c3", "c4", "open_p3", "max_size_Mn",
    "omega", "chi", "chi_prime", "alpha0", "beta0", "alpha1", "beta1",
)


def exact_div(num: int, den: int) -> int:
    q, r = divmod(num, den)
    if r:
        raise ArithmeticError(f"{num}/{den} is not integral; formula transcription error")
    return q


def _ceil_half(x: int) -> int:
    return -(-x // 2)


# --- degrees and sizes -------------------------------------------------------


def _degree_interval(r: int, s: int, i: int) -> int:
    """Degree of label i in G+([-r, s]) with n taken as the order r+s+1."""
    n = r + s + 1
    if i == 0:
        return n - 1
    if i < 0:
        return n + i if i <= -(r // 2) - 1 else n + i - 1
    return n - i - 1 if i <= s // 2 else n - i


def _degree_gn(n: int, i: int) -> int:
    return n - i - 1 if i <= n // 2 else n - i


def degree(family: FamilySpec, i: int) -> int:
    lo, hi = family.label_range()
    if not lo <= i <= hi:
        raise ValidationError(f"label {i} outside [{lo}, {hi}]")
    base = family.base
    if base == "Gn":
        d = _degree_gn(family.n, i)
    elif base == "G0n":
        d = _degree_interval(0, family.n, i)
    else:
        d = _degree_interval(family.m, family.n, i)
    return family.order - 1 - d if family.is_complement else d


def _edges_gn(n: int) -> int:
    return (n - 1) ** 2 // 4


def _edges_gmn(m: int, n: int) -> int:
    return exact_div(m * m + n * n + 3 * (m + n) + 4 * m * n - 2 * (m // 2 + n // 2), 4)


def _edges_g0n(n: int) -> int:
    return exact_div(n * (n + 3) - 2 * (n // 2), 4)


def edge_count(family: FamilySpec) -> int:
    base = family.base
    if base == "Gn":
        e = _edges_gn(family.n)
    elif base == "G0n":
        e = _edges_g0n(family.n)
    else:
        e = _edges_gmn(family.m, family.n)
    return comb(family.order, 2) - e if family.is_complement else e


# --- triangles ---------------------------------------------------------------


def _c3_gn_closed(n: int, complement: bool = False) -> int:
    k, odd = divmod(n, 2)
    if complement:
        return exact_div((k - 1) * k * (k + 1), 3) if odd else exact_div((k - 1) * k * (2 * k - 1), 6)
    return exact_div(k * (k - 1) * (2 * k - 1), 6) if odd else exact_div(k * (k - 1) * (k - 2), 3)


def _c3_gn_recurrence(n: int, complement: bool = False) -> int:
    """|C3|(G_n) = |C3|(G_{n-2}) + ||G_{n-2}||, likewise for complements."""
    total = 0
    j = n
    while j >= 3:
        j -= 2
        total += comb(j, 2) - _edges_gn(j) if complement else _edges_gn(j)
    return total


def c3_gn(n: int, complement: bool = False) -> int:
    if n < 1:
        raise ValidationError("n must be at least 1")
    closed = _c3_gn_closed(n, complement)
    assert closed == _c3_gn_recurrence(n, complement), (n, complement)
    return closed


def c3_count(m: int, n: int, which: str = "primal") -> int:
    """Triangles in G_{-m,n} (or its complement), by the parity of m and n."""
    if m < 1 or n < 1:
        raise ValidationError("m and n must both be at least 1")
    if which not in ("primal", "complement"):
        raise ValidationError("which must be 'primal' or 'complement'")
    a, pa = divmod(m, 2)
    b, pb = divmod(n, 2)
    if which == "complement":
        left = exact_div((a - 1) * a * (a + 1), 3) if pa else exact_div((a - 1) * a * (2 * a - 1), 6)
        right = exact_div((b - 1) * b * (b + 1), 3) if pb else exact_div((b - 1) * b * (2 * b - 1), 6)
        return left + right
    if not pa and not pb:
        return exact_div((a + b) * (a * a + 5 * a * b + b * b - 1), 3)
    cubic = 2 * (a**3 + b**3) + 12 * a * b * (a + b)
    if not pa and pb:
        return exact_div(cubic + 3 * (2 * a * a + b * b + 4 * a * b) + 4 * a + b, 6)
    if pa and not pb:
        return exact_div(cubic + 3 * (a * a + 2 * b * b + 4 * a * b) + a + 4 * b, 6)
    s = a + b
    return exact_div(s * (2 * s * s + 9 * s + 6 * a * b + 13), 6) + a * b + 1


def c3_family(family: FamilySpec) -> int:
    base, comp_ = family.base, family.is_complement
    if base == "Gn":
        return c3_gn(family.n, comp_)
    if base == "G0n":
        # K1 * G_n, or an isolated 0 beside G_n^c
        return c3_gn(family.n, True) if comp_ else c3_gn(family.n) + _edges_gn(family.n)
    return c3_count(family.m, family.n, "complement" if comp_ else "primal")


# --- open paths --------------------------------------------------------------


def open_p3_count(n: int) -> int:
    """Paths u-v-w with uw missing in G_n; n is the order of the graph."""
    if n < 1:
        raise ValidationError("n must be at least 1")
    k, odd = divmod(n, 2)
    if odd:
        return exact_div((k - 1) * k * (k + 1), 3)
    return exact_div((k - 1) * k * (2 * k - 1), 6)


def two_paths_gn(n: int) -> int:
    """All 2-paths (sum over vertices of C(deg, 2)): three per triangle plus the open ones."""
    return 3 * c3_gn(n) + open_p3_count(n)


# --- four-cycles -------------------------------------------------------------


def _c4_gn_closed(n: int, complement: bool = False) -> int:
    k, odd = divmod(n, 2)
    if complement:
        if odd:
            return exact_div((k - 1) * k * (k + 1) * (2 * k - 3), 6)
        return exact_div(k * (k - 1) * (k - 2) * (2 * k - 1), 6)
    if odd:
        return exact_div(k * (k - 1) * (k - 2) * (2 * k - 1), 6)
    return exact_div(k * (k - 1) * (k - 2) * (2 * k - 5), 6)


def _c4_gn_recurrence(n: int, complement: bool = False) -> int:
    """Step-two increments: G_{2k} gains (k-1)(k-2)(8k-21)/6 over G_{2k-2};
    G_{2k+1} gains (k-1)(k-2)(8k-9)/6 over G_{2k-1}. Complements shift by one
    order since |C4|(G_n^c) = |C4|(G_{n+1})."""
    if complement:
        return _c4_gn_recurrence(n + 1)
    total = 0
    j = n
    while j >= 3:
        k, odd = divmod(j, 2)
        total += exact_div((k - 1) * (k - 2) * ((8 * k - 9) if odd else (8 * k - 21)), 6)
        j -= 2
    return total


def c4_gn(n: int, complement: bool = False) -> int:
    if n < 1:
        raise ValidationError("n must be at least 1")
    closed = _c4_gn_closed(n, complement)
    assert closed == _c4_gn_recurrence(n, complement), (n, complement)
    return closed


@dataclass(frozen=True)
class _Counts:
    """What the join identity needs to know about one side."""
    order: int
    edges: int
    two_paths: int
    c4: int


def _gn_counts(n: int) -> _Counts:
    if n == 0:
        return _Counts(0, 0, 0, 0)
    return _Counts(n, _edges_gn(n), two_paths_gn(n), c4_gn(n))


def _join(x: _Counts, y: _Counts) -> _Counts:
    """Counts for the join X*Y.

    Four-cycles split by how many vertices each side holds: 4+0, 3+1 (a
    2-path closed through the other side), 2+2 (either alternating, or one
    edge from each side traversed in two orientations), and 1+3.
    """
    c4 = (
        x.c4 + y.c4
        + x.two_paths * y.order + y.two_paths * x.order
        + comb(x.order, 2) * comb(y.order, 2)
        + 2 * x.edges * y.edges
    )
    # every vertex gains the other side's order in degree
    two_paths = (
        x.two_paths + y.two_paths
        + 2 * x.edges * y.order + 2 * y.edges * x.order
        + x.order * comb(y.order, 2) + y.order * comb(x.order, 2)
    )
    edges = x.edges + y.edges + x.order * y.order
    return _Counts(x.order + y.order, edges, two_paths, c4)


_K1 = _Counts(1, 0, 0, 0)


def c4_count(family: FamilySpec) -> int:
    base, comp_ = family.base, family.is_complement
    if base == "Gn":
        return c4_gn(family.n, comp_)
    if base == "G0n":
        if comp_:
            return c4_gn(family.n, True)
        return _join(_K1, _gn_counts(family.n)).c4
    if comp_:
        return c4_gn(family.m, True) + c4_gn(family.n, True)
    return _join(_K1, _join(_gn_counts(family.m), _gn_counts(family.n))).c4


def c4_count_printed(family: FamilySpec) -> int:
    """The four-cycle formulas as printed, kept to document where they fail."""
    base, comp_ = family.base, family.is_complement
    if base == "Gn":
        N = family.n
        if not comp_:
            if N % 2 == 0:
                k = (N - 2) // 2
                return exact_div((k - 1) * k * (k + 1) * (7 * k - 10), 24)
            k = (N - 3) // 2
            return exact_div((k - 1) * k * (k + 1) * (7 * k + 6), 24)
        if N % 2 == 0:
            k = (N - 2) // 2
            return exact_div((k - 1) * k * (k + 1) * (7 * k + 6), 24)
        k = (N - 1) // 2
        return exact_div((k - 1) * k * (k + 1) * (7 * k - 10), 24)
    if base == "G0n" and not comp_:
        k, odd = divmod(family.n, 2)
        if odd:
            return exact_div((k - 1) * k * (k + 1) * (7 * k + 6), 24)
        return exact_div((k - 1) * k * (k + 1) * (7 * k - 10), 24)
    if base != "Gmn":
        raise ValidationError(f"no printed four-cycle formula for {family.name()}")
    m, n = family.m, family.n
    if m == 1 and not comp_:
        k, odd = divmod(n, 2)
        if odd:
            return exact_div(k * (k + 1) * (k + 2) * (7 * k + 13), 24)
        return exact_div(k * (k + 1) * (k + 2) * (7 * k - 3), 24)
    a, pa = divmod(m, 2)
    b, pb = divmod(n, 2)
    if comp_:
        left = exact_div((a - 1) * a * (a + 1) * (7 * a - 10), 24) if pa else exact_div((a - 2) * (a - 1) * a * (7 * a - 1), 24)
        right = exact_div((b - 1) * b * (b + 1) * (7 * b - 10), 24) if pb else exact_div((b - 2) * (b - 1) * b * (7 * b - 1), 24)
        return left + right
    even_a = exact_div((a - 1) * a * (7 * a * a + a - 18), 24)
    odd_a = exact_div((a - 1) * a * (7 * a * a + 17 * a - 2), 24)
    even_b = exact_div((b - 1) * b * (7 * b * b + b - 18), 24)
    odd_b = exact_div((b - 1) * b * (7 * b * b + 17 * b - 2), 24)
    if not pa and not pb:
        return even_a + even_b + a * b * (4 * a * b + 6 * (a + b) - 11)
    if not pa and pb:
        return even_a + odd_b + a * (4 * a - 3) * (2 * b + 1) + a * b * (4 * a * b + 2 * a + 6 * b + 1)
    if pa and not pb:
        return odd_a + even_b + (2 * a + 1) * b * (4 * b - 3) + a * b * (4 * a * b + 6 * a + 2 * b + 1)
    return odd_a + odd_b + (a * b + a + b) * (2 * a + 1) * (2 * b + 1) + 4 * a * b * (a + b) + 2 * (a * a + b * b)


# --- maximal size ------------------------------------------------------------


def max_size_Mn(n: int) -> int:
    """The published bound ceil(3(n-1)^2/8) + ceil((n-1)/2).

    It agrees with the best realizable size at odd orders. At even orders it
    is one more than anything a brute-force label search reaches (n=4 would
    need K4); :func:`max_interval_size` gives the realized value.
    """
    if n < 1:
        raise ValidationError("n must be at least 1")
    return -(-3 * (n - 1) ** 2 // 8) + _ceil_half(n - 1)


def max_interval_size(n: int) -> int:
    """Largest ||G+([-r, s])|| over intervals of n labels."""
    if n < 1:
        raise ValidationError("n must be at least 1")
    return (3 * n * n - 2 * n + 3) // 8


# --- invariants --------------------------------------------------------------


@dataclass(frozen=True)
class FamilyInvariants:
    omega: int
    chi: int
    chi_prime: int
    alpha0: int
    beta0: int
    alpha1: Optional[int]
    beta1: int

    def as_dict(self) -> dict:
        return dict(self.__dict__)


def family_invariants(family: FamilySpec) -> FamilyInvariants:
    if family.is_complement:
        raise ValidationError("invariant formulas cover Gn, G0n and Gmn only")
    n = family.n
    if family.base == "Gn":
        omega = _ceil_half(n)
        return FamilyInvariants(
            omega=omega,
            chi=omega,  # perfect
            chi_prime=max(n - 2, 0),
            alpha0=omega - 1,
            beta0=n // 2 + 1,
            alpha1=None,  # the largest label is isolated
            beta1=omega - 1,
        )
    r = family.m if family.base == "Gmn" else 0
    omega = 1 + _ceil_half(r) + _ceil_half(n)
    chi_prime = r + n
    if r == 1 and n == 1:
        chi_prime = 3  # G_{-1,1} is a triangle
    return FamilyInvariants(
        omega=omega,
        chi=omega,
        chi_prime=chi_prime,
        alpha0=min(r, n) + _ceil_half(max(r, n)),
        beta0=max(r, n) // 2 + 1,
        alpha1=_ceil_half(r + n + 1),
        beta1=(r + n + 1) // 2,
    )


# --- dispatcher --------------------------------------------------------------


def evaluate(family: FamilySpec, quantity: str, i: Optional[int] = None) -> int | None:
    """Formula value of ``quantity`` for ``family`` (the CLI's ``count``)."""
    if quantity not in QUANTITIES:
        raise ValidationError(f"unknown quantity {quantity!r}")
    if quantity == "degree":
        if i is None:
            raise ValidationError("degree needs a label i")
        return degree(family, i)
    if quantity == "edge_count":
        return edge_count(family)
    if quantity == "c3":
        return c3_family(family)
    if quantity == "c4":
        return c4_count(family)
    if quantity == "open_p3":
        if family.kind != "Gn":
            raise ValidationError("open_p3 is defined for Gn")
        return open_p3_count(family.n)
    if quantity == "max_size_Mn":
        return max_size_Mn(family.order)
    return getattr(family_invariants(family), quantity)


__all__ = [
    "QUANTITIES", "exact_div", "degree", "edge_count", "c3_gn", "c3_count", "c3_family",
    "open_p3_count", "two_paths_gn", "c4_gn", "c4_count", "c4_count_printed", "max_size_Mn",
    "max_interval_size",
    "FamilyInvariants", "family_invariants", "evaluate", "Gmn",
]
