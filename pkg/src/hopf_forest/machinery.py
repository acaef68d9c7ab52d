"""Generic tools for graded connected Hopf algebras given on a basis."""

from __future__ import annotations

import functools
from collections.abc import Hashable
from fractions import Fraction

from hopf_forest.algebras import HopfAlgebra
from hopf_forest.lincomb import (
    GradedEndo,
    LinComb,
    convolve,
    identity_endo,
    lc_sum,
    tensor,
    unit_endo,
)


def _as_lc(alg: HopfAlgebra, a: Hashable | LinComb) -> LinComb:
    return a if isinstance(a, LinComb) else alg.element(a)


def _weight(alg: HopfAlgebra, a: LinComb) -> int:
    return max((alg.degree(b) for b in a), default=0)


def _split_factor(alg: HopfAlgebra, t: LinComb, last: bool) -> LinComb:
    """Apply Δ to the first (or last) tensor factor of every term of ``t``."""
    acc = []
    for key, c in t.items():
        pos = len(key) - 1 if last else 0
        left, mid, right = key[:pos], key[pos], key[pos + 1:]
        acc.append(c * LinComb((left + pair + right, c2) for pair, c2 in alg.coproduct_basis(mid).items()))
    return lc_sum(acc)


def iterated_coproduct(alg: HopfAlgebra, a: Hashable | LinComb, n: int, bracketing: str = "left") -> LinComb:
    """``Δ^(n)``, an element of the (n+1)-fold tensor power (terms are tuples).

    ``Δ^(0)`` is the identity. ``bracketing="left"`` computes
    ``(Δ ⊗ id^(n-1)) ∘ Δ^(n-1)`` and ``"right"`` splits the last factor instead;
    coassociativity says the two agree.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    if bracketing not in ("left", "right"):
        raise ValueError("bracketing must be 'left' or 'right'")
    t = _as_lc(alg, a).map_basis(lambda b: (b,))
    for _ in range(n):
        t = _split_factor(alg, t, last=bracketing == "right")
    return t


def _reduced_coproduct(alg: HopfAlgebra, b: Hashable) -> LinComb:
    unit = alg.unit()
    return LinComb((pair, c) for pair, c in alg.coproduct_basis(b).items() if unit not in pair)


def reduced_iterated_coproduct(alg: HopfAlgebra, a: Hashable | LinComb, n: int) -> LinComb:
    """``(id-1)^⊗(n+1) ∘ Δ^(n)(a)``: the iterated coproduct with every term that
    has a degree-0 tensor factor removed."""
    unit = alg.unit()
    t = LinComb(((b,), c) for b, c in _as_lc(alg, a).items() if b != unit)
    for _ in range(n):
        acc = []
        for key, c in t.items():
            head, last = key[:-1], key[-1]
            acc.append(c * LinComb((head + pair, c2) for pair, c2 in _reduced_coproduct(alg, last).items()))
        t = lc_sum(acc)
    return t


@functools.lru_cache(maxsize=None)
def _id_minus_one(alg: HopfAlgebra) -> GradedEndo:
    return identity_endo(alg) - unit_endo(alg)


@functools.lru_cache(maxsize=None)
def id_minus_one_power(alg: HopfAlgebra, n: int) -> GradedEndo:
    """The memoized endomorphism ``(id-1)^{*n}``; ``n = 0`` gives ``u∘ε``."""
    if n == 0:
        return unit_endo(alg)
    if n == 1:
        return _id_minus_one(alg)
    return convolve(_id_minus_one(alg), id_minus_one_power(alg, n - 1))


def conv_power_id_minus_one(alg: HopfAlgebra, a: Hashable | LinComb, n: int) -> LinComb:
    if n < 1:
        raise ValueError("n must be at least 1")
    return id_minus_one_power(alg, n)(_as_lc(alg, a))


def coradical_level(alg: HopfAlgebra, a: Hashable | LinComb) -> int:
    """Least ``k`` with ``(id-1)^⊗(k+1) ∘ Δ^(k)(a) = 0``."""
    a = _as_lc(alg, a)
    bound = _weight(alg, a)
    for k in range(bound + 1):
        if reduced_iterated_coproduct(alg, a, k).is_zero():
            return k
    raise ArithmeticError(f"{a} is not in F^{bound}; the algebra is not graded connected?")


def is_primitive(alg: HopfAlgebra, a: Hashable | LinComb) -> bool:
    a = _as_lc(alg, a)
    one = alg.one()
    return alg.coproduct(a) == tensor(one, a) + tensor(a, one)


def antipode(alg: HopfAlgebra, a: Hashable | LinComb) -> LinComb:
    """``S = sum_n (-1)^n (id-1)^{*n}``, truncated at the weight of ``a``."""
    a = _as_lc(alg, a)
    out = []
    for b, c in a.items():
        d = alg.degree(b)
        out.append(c * lc_sum((-1) ** n * id_minus_one_power(alg, n)(b) for n in range(d + 1)))
    return lc_sum(out)


def eulerian(alg: HopfAlgebra, a: Hashable | LinComb) -> LinComb:
    """First Eulerian idempotent ``log(id) = sum_{n>=1} (-1)^{n+1}/n (id-1)^{*n}``.

    ``(id-1)^{*n}`` vanishes on degrees below ``n``, so the sum stops at the weight.
    """
    a = _as_lc(alg, a)
    out = []
    for b, c in a.items():
        d = alg.degree(b)
        out.append(c * lc_sum(Fraction((-1) ** (n + 1), n) * id_minus_one_power(alg, n)(b)
                              for n in range(1, d + 1)))
    return lc_sum(out)


def antipode_endo(alg: HopfAlgebra) -> GradedEndo:
    return GradedEndo(alg, lambda b: antipode(alg, b), "S")


def eulerian_endo(alg: HopfAlgebra) -> GradedEndo:
    return GradedEndo(alg, lambda b: eulerian(alg, b), "e")
