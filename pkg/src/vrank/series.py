"""Truncated formal power series in q over Python ints, and the family
generating functions used to cross-check every enumeration count.

Pochhammer factors (+-q^a; q^b)_inf and their inverses are applied as O(N)
in-place sweeps per linear factor, so building a product spec to N = 1000 is
cheap.  Theta-style sums (staircase, odd staircase) are generated by direct
index iteration.
"""

import itertools
from dataclasses import dataclass

from .families import (
    A,
    Family,
    OP2,
    OVERPARTITION,
    PD,
    POD,
    POD2,
    UnknownFamilyError,
)


class PowerSeries:
    """Coefficients 0..truncation; arithmetic truncates to the shorter operand."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        self.coeffs = list(coeffs)

    @property
    def truncation(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, n: int) -> int:
        if not 0 <= n <= self.truncation:
            raise IndexError(f"coefficient {n} beyond truncation {self.truncation}")
        return self.coeffs[n]

    def __eq__(self, other) -> bool:
        return isinstance(other, PowerSeries) and self.coeffs == other.coeffs

    def __repr__(self) -> str:
        head = ", ".join(str(c) for c in self.coeffs[:8])
        return f"PowerSeries([{head}{', ...' if self.truncation > 7 else ''}])"

    def mul(self, other: "PowerSeries") -> "PowerSeries":
        """Cauchy product, truncated at the smaller truncation."""
        n = min(self.truncation, other.truncation)
        out = [0] * (n + 1)
        for i, ci in enumerate(self.coeffs[: n + 1]):
            if ci == 0:
                continue
            for j, cj in enumerate(other.coeffs[: n - i + 1]):
                if cj:
                    out[i + j] += ci * cj
        return PowerSeries(out)


def one(truncation: int) -> PowerSeries:
    return PowerSeries([1] + [0] * truncation)


@dataclass(frozen=True)
class ProductSpec:
    """A product of Pochhammer factors times theta-style sums.

    factors: (a, b, exponent, sign) denotes (sign * q^a; q^b)_inf ** exponent,
    i.e. prod_{j>=0} (1 - sign * q^(a + j*b)) ** exponent, with a <= b.
    thetas: names among {"staircase", "odd-staircase"}.
    """

    factors: tuple[tuple[int, int, int, int], ...] = ()
    thetas: tuple[str, ...] = ()

    def __post_init__(self):
        for a, b, _, sign in self.factors:
            if not (1 <= a <= b) or sign not in (1, -1):
                raise ValueError(f"bad factor {(a, b, sign)}")


def _apply_linear(coeffs: list[int], k: int, sign: int, exponent: int) -> None:
    """Multiply in place by (1 - sign*q^k)^exponent."""
    n = len(coeffs) - 1
    for _ in range(abs(exponent)):
        if exponent > 0:
            for i in range(n, k - 1, -1):
                coeffs[i] -= sign * coeffs[i - k]
        else:
            for i in range(k, n + 1):
                coeffs[i] += sign * coeffs[i - k]


def staircase_theta(truncation: int) -> PowerSeries:
    """1 at each triangular number (weights of staircase partitions)."""
    coeffs = [0] * (truncation + 1)
    for k in itertools.count():
        w = k * (k + 1) // 2
        if w > truncation:
            break
        coeffs[w] = 1
    return PowerSeries(coeffs)


def odd_staircase_theta(truncation: int) -> PowerSeries:
    """1 at 0 and 2 at positive squares (overline doubles each m >= 1)."""
    coeffs = [0] * (truncation + 1)
    coeffs[0] = 1
    for m in itertools.count(1):
        if m * m > truncation:
            break
        coeffs[m * m] = 2
    return PowerSeries(coeffs)


_THETAS = {"staircase": staircase_theta, "odd-staircase": odd_staircase_theta}


def build_series(spec: ProductSpec, truncation: int) -> PowerSeries:
    s = one(truncation)
    for a, b, exponent, sign in spec.factors:
        for k in range(a, truncation + 1, b):
            _apply_linear(s.coeffs, k, sign, exponent)
    for name in spec.thetas:
        s = s.mul(_THETAS[name](truncation))
    return s


# --- family generating functions -------------------------------------------

def product_spec(f: Family) -> ProductSpec:
    """Product spec of a family's generating function.

    For the three congruence families this is the product of the bijection
    codomain component series; base families use their defining products.
    """
    if f == PD:
        # staircase * (-q^3;q^3)_inf / (q^2;q^2)_inf^3
        return ProductSpec(((3, 3, 1, -1), (2, 2, -3, 1)), ("staircase",))
    if f == A:
        return ProductSpec(((2, 2, -3, 1),), ("staircase",))
    if f == POD2:
        return ProductSpec(((2, 2, -3, 1),), ("odd-staircase",))
    if f.tag == "mod-parts":
        return ProductSpec(
            tuple((r if r else f.modulus, f.modulus, -1, 1) for r in f.residues)
        )
    if f.tag == "mod-distinct":
        return ProductSpec(
            tuple((r if r else f.modulus, f.modulus, 1, -1) for r in f.residues)
        )
    if f.tag == "overpartition":
        return ProductSpec(((1, 1, 1, -1), (1, 1, -1, 1)))
    if f.tag == "pod":
        return ProductSpec(((1, 2, 1, -1), (2, 2, -1, 1)))
    if f.tag == "staircase":
        return ProductSpec((), ("staircase",))
    if f.tag == "odd-staircase":
        return ProductSpec((), ("odd-staircase",))
    raise UnknownFamilyError(f"no product spec for family {f.tag}")


def family_series(f: Family, truncation: int) -> PowerSeries:
    if f.tag == "vector" and f not in (POD2,):
        s = one(truncation)
        for g in f.components:
            s = s.mul(family_series(g, truncation))
        return s
    return build_series(product_spec(f), truncation)


def a_series_direct(truncation: int) -> PowerSeries:
    """Direct two-color form 1/((q;q)(q^2;q^2)), independent of the bijection."""
    return build_series(ProductSpec(((1, 1, -1, 1), (2, 2, -1, 1))), truncation)


def scan_congruence(
    f: Family, bound: int, modulus: int = 3, residue: int = 2
) -> list[int]:
    """All n with modulus*n + residue <= bound whose coefficient there is
    nonzero mod modulus.  Expected empty for the four congruence families."""
    s = family_series(f, bound)
    return [
        n
        for n in range((bound - residue) // modulus + 1)
        if s[modulus * n + residue] % modulus != 0
    ]
