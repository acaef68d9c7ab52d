"""Exact formal linear combinations over arbitrary hashable basis objects.

Coefficients are :class:`fractions.Fraction`. Basis objects only need ``__hash__``,
``__eq__`` and a canonical ``__str__``; the canonical string fixes the print order.
Elements of tensor powers are linear combinations whose basis objects are tuples.
"""

from __future__ import annotations

import re
from collections.abc import Callable, Hashable, Iterable, Iterator, Mapping
from fractions import Fraction
from typing import Any, Union

from hopf_forest.errors import AlgebraMismatchError, ParseError, UndefinedTermError

Scalar = Union[int, Fraction]

TENSOR_SEP = " ⊗ "

_RATIONAL_RE = re.compile(r"^\s*([+-]?\d+)(?:\s*/\s*(\d+))?\s*$")


def parse_rational(text: str) -> Fraction:
    m = _RATIONAL_RE.match(text)
    if not m:
        raise ParseError(f"not a rational number: {text!r}")
    den = int(m.group(2) or 1)
    if den == 0:
        raise ParseError(f"zero denominator in {text!r}")
    return Fraction(int(m.group(1)), den)


def format_rational(q: Scalar) -> str:
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def canonical(b: Any) -> str:
    """Canonical string of a basis object; tuples are tensor products."""
    if isinstance(b, tuple):
        return TENSOR_SEP.join(canonical(x) for x in b)
    return str(b)


class LinComb(Mapping):
    """Immutable normalized linear combination ``{basis: coefficient}``.

    Zero coefficients are never stored, so two combinations are equal exactly
    when their term maps are equal. Comparing against the integer ``0`` tests
    for the zero vector.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Hashable, Scalar] | Iterable[tuple[Hashable, Scalar]] | None = None):
        acc: dict[Hashable, Fraction] = {}
        if terms is not None:
            items = terms.items() if isinstance(terms, Mapping) else terms
            for b, c in items:
                acc[b] = acc.get(b, Fraction(0)) + Fraction(c)
        self._terms = {b: c for b, c in acc.items() if c != 0}
        self._hash: int | None = None

    @classmethod
    def _raw(cls, terms: dict[Hashable, Fraction]) -> LinComb:
        # caller guarantees no zero coefficients
        obj = cls.__new__(cls)
        obj._terms = terms
        obj._hash = None
        return obj

    @classmethod
    def basis(cls, b: Hashable, coeff: Scalar = 1) -> LinComb:
        return cls({b: coeff})

    @classmethod
    def zero(cls) -> LinComb:
        return cls._raw({})

    # Mapping protocol
    def __getitem__(self, b: Hashable) -> Fraction:
        return self._terms[b]

    def __iter__(self) -> Iterator[Hashable]:
        return iter(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def coefficient(self, b: Hashable) -> Fraction:
        return self._terms.get(b, Fraction(0))

    def sorted_items(self) -> list[tuple[Hashable, Fraction]]:
        return sorted(self._terms.items(), key=lambda kv: canonical(kv[0]))

    def is_zero(self) -> bool:
        return not self._terms

    # vector space structure
    def __add__(self, other: LinComb) -> LinComb:
        if not isinstance(other, LinComb):
            return NotImplemented
        acc = dict(self._terms)
        for b, c in other._terms.items():
            s = acc.get(b, 0) + c
            if s:
                acc[b] = s
            else:
                acc.pop(b, None)
        return LinComb._raw(acc)

    def __neg__(self) -> LinComb:
        return LinComb._raw({b: -c for b, c in self._terms.items()})

    def __sub__(self, other: LinComb) -> LinComb:
        if not isinstance(other, LinComb):
            return NotImplemented
        return self + (-other)

    def __rmul__(self, c: Scalar) -> LinComb:
        if not isinstance(c, (int, Fraction)):
            return NotImplemented
        c = Fraction(c)
        if c == 0:
            return LinComb.zero()
        return LinComb._raw({b: c * v for b, v in self._terms.items()})

    __mul__ = __rmul__

    def __eq__(self, other: object) -> bool:
        if isinstance(other, LinComb):
            return self._terms == other._terms
        if isinstance(other, int) and other == 0:
            return not self._terms
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __bool__(self) -> bool:
        return bool(self._terms)

    def map_basis(self, f: Callable[[Hashable], Hashable]) -> LinComb:
        return LinComb((f(b), c) for b, c in self._terms.items())

    # text and JSON forms
    def __str__(self) -> str:
        if not self._terms:
            return "0"
        return " + ".join(f"{format_rational(c)}*{canonical(b)}" for b, c in self.sorted_items())

    def __repr__(self) -> str:
        return f"LinComb({str(self)!r})"

    def to_json(self) -> list[dict[str, Any]]:
        out = []
        for b, c in self.sorted_items():
            basis = [canonical(x) for x in b] if isinstance(b, tuple) else canonical(b)
            out.append({"coeff": format_rational(c), "basis": basis})
        return out

    @classmethod
    def from_json(cls, data: Iterable[Mapping[str, Any]], parse: Callable[[str], Hashable]) -> LinComb:
        terms = []
        for entry in data:
            basis = entry["basis"]
            b = tuple(parse(s) for s in basis) if isinstance(basis, list) else parse(basis)
            terms.append((b, parse_rational(str(entry["coeff"]))))
        return cls(terms)

    @classmethod
    def parse(cls, text: str, parse: Callable[[str], Hashable]) -> LinComb:
        """Inverse of ``str`` for non-tensor combinations: ``c1*B1 + c2*B2``."""
        text = text.strip()
        if text == "0":
            return cls.zero()
        terms = []
        for chunk in text.split(" + "):
            coeff, sep, basis = chunk.partition("*")
            if not sep:
                raise ParseError(f"expected 'coeff*basis', got {chunk!r}")
            terms.append((parse(basis), parse_rational(coeff)))
        return cls(terms)


def lc_add(a: LinComb, b: LinComb) -> LinComb:
    return a + b


def lc_scale(c: Scalar, a: LinComb) -> LinComb:
    return c * a


def lc_sum(items: Iterable[LinComb]) -> LinComb:
    acc: dict[Hashable, Fraction] = {}
    for lc in items:
        for b, c in lc.items():
            acc[b] = acc.get(b, 0) + c
    return LinComb._raw({b: c for b, c in acc.items() if c})


def extend_linearly(f: Callable[[Hashable], LinComb], a: LinComb) -> LinComb:
    """Apply the linear extension of a basis-to-combination rule ``f`` to ``a``.

    ``f`` may be a callable or a mapping. A basis object outside the domain of
    ``f`` raises :class:`UndefinedTermError` naming the object.
    """
    acc: dict[Hashable, Fraction] = {}
    for b, c in a.items():
        try:
            image = f[b] if isinstance(f, Mapping) else f(b)
        except (KeyError, LookupError) as exc:
            raise UndefinedTermError(f"linear map undefined on basis element {canonical(b)!r}") from exc
        for b2, c2 in image.items():
            acc[b2] = acc.get(b2, 0) + c * c2
    return LinComb._raw({b: c for b, c in acc.items() if c})


def tensor(*factors: LinComb) -> LinComb:
    """Tensor product; basis objects of the result are tuples.

    Factors that are already tensors are flattened, so ``tensor(tensor(a, b), c)``
    and ``tensor(a, b, c)`` agree.
    """
    acc: dict[tuple, Fraction] = {(): Fraction(1)}
    for f in factors:
        nxt: dict[tuple, Fraction] = {}
        for key, c in acc.items():
            for b, c2 in f.items():
                k = key + (b if isinstance(b, tuple) else (b,))
                nxt[k] = nxt.get(k, 0) + c * c2
        acc = nxt
    return LinComb._raw({b: c for b, c in acc.items() if c})


def tensor_map(maps: tuple[Callable[[Hashable], LinComb], ...], a: LinComb) -> LinComb:
    """Apply ``f1 ⊗ ... ⊗ fn`` to a combination of n-tuples."""
    acc: dict[tuple, Fraction] = {}
    for key, c in a.items():
        if len(key) != len(maps):
            raise ValueError(f"expected {len(maps)} tensor factors, got {len(key)}")
        for b, c2 in tensor(*(f(x) for f, x in zip(maps, key))).items():
            acc[b] = acc.get(b, 0) + c * c2
    return LinComb._raw({b: c for b, c in acc.items() if c})


class GradedEndo:
    """A linear endomorphism of a graded Hopf algebra, defined basis-wise.

    ``algebra`` must provide ``coproduct_basis``, ``multiply``, ``unit`` and
    ``counit``. Values on basis elements are memoized; the cache only ever stores
    pure results so concurrent inserts are harmless.
    """

    def __init__(self, algebra: Any, action: Callable[[Hashable], LinComb], name: str = "f"):
        self.algebra = algebra
        self.action = action
        self.name = name
        self._memo: dict[Hashable, LinComb] = {}

    def on_basis(self, b: Hashable) -> LinComb:
        try:
            return self._memo[b]
        except KeyError:
            v = self._memo[b] = self.action(b)
            return v

    def __call__(self, x: Hashable | LinComb) -> LinComb:
        if isinstance(x, LinComb):
            return extend_linearly(self.on_basis, x)
        return self.on_basis(x)

    def __repr__(self) -> str:
        return f"GradedEndo({self.name} on {self.algebra})"

    def _check(self, other: GradedEndo) -> None:
        if other.algebra is not self.algebra:
            raise AlgebraMismatchError(f"{self.algebra} vs {other.algebra}")

    def __add__(self, other: GradedEndo) -> GradedEndo:
        self._check(other)
        return GradedEndo(self.algebra, lambda b: self(b) + other(b), f"({self.name}+{other.name})")

    def __sub__(self, other: GradedEndo) -> GradedEndo:
        self._check(other)
        return GradedEndo(self.algebra, lambda b: self(b) - other(b), f"({self.name}-{other.name})")

    def __neg__(self) -> GradedEndo:
        return GradedEndo(self.algebra, lambda b: -self(b), f"-{self.name}")

    def __rmul__(self, c: Scalar) -> GradedEndo:
        return GradedEndo(self.algebra, lambda b: c * self(b), f"{c}{self.name}")

    def __mul__(self, other: GradedEndo) -> GradedEndo:
        return convolve(self, other)

    def __pow__(self, n: int) -> GradedEndo:
        return convolution_power(self, n)


def identity_endo(algebra: Any) -> GradedEndo:
    return GradedEndo(algebra, lambda b: LinComb.basis(b), "id")


def unit_endo(algebra: Any) -> GradedEndo:
    """``u∘ε``, the unit of the convolution algebra."""
    unit = algebra.unit()
    return GradedEndo(algebra, lambda b: algebra.counit(b) * LinComb.basis(unit), "1")


def convolve(f: GradedEndo, g: GradedEndo) -> GradedEndo:
    """``(f*g)(x) = m∘(f⊗g)∘Δ(x)``."""
    f._check(g)
    alg = f.algebra

    def action(b: Hashable) -> LinComb:
        return lc_sum(c * alg.multiply(f(x1), g(x2)) for (x1, x2), c in alg.coproduct_basis(b).items())

    return GradedEndo(alg, action, f"({f.name}*{g.name})")


def convolution_power(f: GradedEndo, n: int) -> GradedEndo:
    if n < 0:
        raise ValueError("convolution powers are defined for n >= 0")
    if n == 0:
        return unit_endo(f.algebra)
    result = f
    for _ in range(n - 1):
        result = convolve(result, f)
    return result
