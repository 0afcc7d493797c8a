"""Exact arithmetic in the integer cohomology ring of a product of projective spaces.

A class is a truncated integer polynomial in one degree-2 generator per
factor, subject to the relations x_i^(n_i+1) = 0.  All coefficients are
Python ints, so there is no overflow anywhere in the pipeline.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping

from .errors import DomainError, IntegrityError

Exponent = tuple[int, ...]


@dataclass(frozen=True)
class AmbientSpace:
    """Product of complex projective spaces CP^(n_1) x ... x CP^(n_r)."""

    factor_dims: tuple[int, ...]

    def __post_init__(self) -> None:
        dims = tuple(int(n) for n in self.factor_dims)
        if not dims:
            raise DomainError("ambient space needs at least one projective factor")
        if any(n < 1 for n in dims):
            raise DomainError(f"factor dimensions must be >= 1, got {dims}")
        object.__setattr__(self, "factor_dims", dims)

    @property
    def nfactors(self) -> int:
        return len(self.factor_dims)

    @property
    def dim(self) -> int:
        """Total complex dimension."""
        return sum(self.factor_dims)

    @property
    def top_exponent(self) -> Exponent:
        """Exponent vector of the volume monomial x_1^(n_1)...x_r^(n_r)."""
        return self.factor_dims

    def zero(self) -> "CohomologyClass":
        return CohomologyClass(self, {})

    def one(self) -> "CohomologyClass":
        return self.constant(1)

    def constant(self, c: int) -> "CohomologyClass":
        return CohomologyClass(self, {(0,) * self.nfactors: int(c)})

    def generator(self, i: int) -> "CohomologyClass":
        """The degree-2 generator x_i of the i-th factor (0-based)."""
        if not 0 <= i < self.nfactors:
            raise DomainError(f"no generator {i} on a {self.nfactors}-factor ambient")
        exp = tuple(1 if j == i else 0 for j in range(self.nfactors))
        return CohomologyClass(self, {exp: 1})

    def linear_form(self, coeffs: Iterable[int]) -> "CohomologyClass":
        """sum_i coeffs[i] * x_i."""
        coeffs = tuple(int(c) for c in coeffs)
        if len(coeffs) != self.nfactors:
            raise DomainError("one coefficient per projective factor required")
        terms = {}
        for i, c in enumerate(coeffs):
            if c:
                terms[tuple(1 if j == i else 0 for j in range(self.nfactors))] = c
        return CohomologyClass(self, terms)

    def line_class(self, degrees: Iterable[int]) -> "CohomologyClass":
        """Total Chern class 1 + sum_i degrees[i] * x_i of a line bundle."""
        return self.one() + self.linear_form(degrees)


class CohomologyClass:
    """Immutable truncated polynomial over an AmbientSpace.

    Canonical form: no zero coefficients are stored and every exponent lies
    in the truncation box 0 <= e_i <= n_i.  Monomials produced outside the
    box are zero in cohomology and are dropped on construction.
    """

    __slots__ = ("ambient", "_terms")

    def __init__(self, ambient: AmbientSpace, terms: Mapping[Exponent, int]):
        dims = ambient.factor_dims
        clean: dict[Exponent, int] = {}
        for exp, coeff in terms.items():
            exp = tuple(int(e) for e in exp)
            if len(exp) != len(dims) or any(e < 0 for e in exp):
                raise DomainError(f"bad exponent vector {exp} for ambient {dims}")
            if any(e > n for e, n in zip(exp, dims)):
                continue
            coeff = int(coeff)
            if coeff:
                clean[exp] = coeff
        object.__setattr__(self, "ambient", ambient)
        object.__setattr__(self, "_terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("CohomologyClass is immutable")

    @property
    def terms(self) -> dict[Exponent, int]:
        return dict(self._terms)

    def coefficient(self, exponent: Iterable[int]) -> int:
        return self._terms.get(tuple(exponent), 0)

    @property
    def constant_term(self) -> int:
        return self._terms.get((0,) * self.ambient.nfactors, 0)

    def is_zero(self) -> bool:
        return not self._terms

    def graded_part(self, degree: int) -> "CohomologyClass":
        """The summand of total polynomial degree `degree` (half the cohomological one)."""
        return CohomologyClass(
            self.ambient, {e: c for e, c in self._terms.items() if sum(e) == degree}
        )

    def _coerce(self, other) -> "CohomologyClass":
        if isinstance(other, CohomologyClass):
            if other.ambient != self.ambient:
                raise DomainError("classes live on different ambient spaces")
            return other
        if isinstance(other, int):
            return self.ambient.constant(other)
        return NotImplemented

    def __add__(self, other) -> "CohomologyClass":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out = dict(self._terms)
        for exp, c in other._terms.items():
            out[exp] = out.get(exp, 0) + c
        return CohomologyClass(self.ambient, out)

    __radd__ = __add__

    def __neg__(self) -> "CohomologyClass":
        return CohomologyClass(self.ambient, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other) -> "CohomologyClass":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "CohomologyClass":
        return (-self) + other

    def __mul__(self, other) -> "CohomologyClass":
        if isinstance(other, int):
            return CohomologyClass(
                self.ambient, {e: other * c for e, c in self._terms.items()}
            )
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        dims = self.ambient.factor_dims
        out: dict[Exponent, int] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                exp = tuple(a + b for a, b in zip(e1, e2))
                if any(e > n for e, n in zip(exp, dims)):
                    continue
                out[exp] = out.get(exp, 0) + c1 * c2
        return CohomologyClass(self.ambient, out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "CohomologyClass":
        if k < 0:
            raise DomainError("negative powers are not defined; use unit_inverse")
        out = self.ambient.one()
        for _ in range(k):
            out = out * self
        return out

    def unit_inverse(self) -> "CohomologyClass":
        """Multiplicative inverse of a class with constant term 1.

        The positive-degree part is nilpotent, so the geometric series stops
        at the ambient dimension; the result is checked by multiplying back.
        """
        if self.constant_term != 1:
            raise DomainError("unit_inverse needs constant term exactly 1")
        u = self.ambient.one() - self
        inv = self.ambient.one()
        p = self.ambient.one()
        for _ in range(self.ambient.dim):
            p = p * u
            if p.is_zero():
                break
            inv = inv + p
        if self * inv != self.ambient.one():
            raise IntegrityError("unit_inverse failed the multiply-back check")
        return inv

    def integrate(self) -> int:
        """Pairing with the fundamental class: the top-monomial coefficient."""
        return self._terms.get(self.ambient.top_exponent, 0)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, CohomologyClass)
            and self.ambient == other.ambient
            and self._terms == other._terms
        )

    def __hash__(self):
        return hash((self.ambient, frozenset(self._terms.items())))

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        pieces = []
        for exp in sorted(self._terms):
            coeff = self._terms[exp]
            vars_ = "*".join(
                f"x{i + 1}" if e == 1 else f"x{i + 1}^{e}"
                for i, e in enumerate(exp)
                if e
            )
            if not vars_:
                pieces.append((coeff, str(abs(coeff))))
            elif abs(coeff) == 1:
                pieces.append((coeff, vars_))
            else:
                pieces.append((coeff, f"{abs(coeff)}*{vars_}"))
        first_c, first_s = pieces[0]
        out = ("-" if first_c < 0 else "") + first_s
        for c, s in pieces[1:]:
            out += (" - " if c < 0 else " + ") + s
        return out

    def __repr__(self) -> str:
        return f"CohomologyClass({self.ambient.factor_dims}, {self})"

    def to_jsonable(self) -> dict:
        return {
            "factor_dims": list(self.ambient.factor_dims),
            "terms": {
                ",".join(map(str, exp)): str(c)
                for exp, c in sorted(self._terms.items())
            },
        }

    @classmethod
    def from_jsonable(cls, data: dict) -> "CohomologyClass":
        ambient = AmbientSpace(tuple(int(n) for n in data["factor_dims"]))
        terms = {
            tuple(int(e) for e in key.split(",")): int(c)
            for key, c in data["terms"].items()
        }
        return cls(ambient, terms)
