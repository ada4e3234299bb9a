"""Dense univariate polynomials with exact unbounded-integer coefficients.

Coefficients are stored in ascending degree with no trailing zeros; the zero
polynomial is the empty tuple. Python's native integers make every operation
exact at any magnitude, which matters here: distance-polynomial coefficients
of large dendrimers comfortably exceed 64-bit range.
"""

from .errors import NonzeroConstantTermError


class Polynomial:
    """Immutable dense polynomial over the integers."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = list(coeffs)
        for c in cs:
            if not isinstance(c, int):
                raise TypeError(
                    f"integer coefficient required, got {type(c).__name__}"
                )
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def from_distribution(cls, dist):
        """Transcribe a DistanceDistribution: coefficient k is counts[k]."""
        return cls(dist.counts)

    @property
    def degree(self):
        """Degree, with -1 standing in for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self):
        return not self.coeffs

    def evaluate(self, t):
        """Exact value at integer t, by Horner's rule."""
        value = 0
        for c in reversed(self.coeffs):
            value = value * t + c
        return value

    def derivative(self):
        return Polynomial([k * c for k, c in enumerate(self.coeffs)][1:])

    def shift_down(self):
        """Divide by x; the constant term must already be zero."""
        if self.coeffs and self.coeffs[0] != 0:
            raise NonzeroConstantTermError(
                f"cannot divide by x: constant term is {self.coeffs[0]}"
            )
        return Polynomial(self.coeffs[1:])

    def shift_up(self):
        """Multiply by x."""
        if not self.coeffs:
            return self
        return Polynomial((0,) + self.coeffs)

    def _coerce(self, other):
        if isinstance(other, Polynomial):
            return other
        if isinstance(other, int):
            return Polynomial((other,))
        return None

    def __add__(self, other):
        q = self._coerce(other)
        if q is None:
            return NotImplemented
        a, b = self.coeffs, q.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Polynomial(out)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial([-c for c in self.coeffs])

    def __sub__(self, other):
        q = self._coerce(other)
        if q is None:
            return NotImplemented
        return self + (-q)

    def __rsub__(self, other):
        q = self._coerce(other)
        if q is None:
            return NotImplemented
        return q + (-self)

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __bool__(self):
        return bool(self.coeffs)

    def __str__(self):
        return format_pretty(self)

    def __repr__(self):
        return f"Polynomial({list(self.coeffs)!r})"


def format_coefficients(p):
    """Canonical textual form: ascending coefficient array, e.g. [4,3,3]."""
    return "[" + ",".join(str(c) for c in p.coeffs) + "]"


def format_pretty(p, mul=""):
    """Human form like '4 + 3x + 3x^2'; mul='*' gives '4 + 3*x + 3*x^2'.

    Zero terms are omitted and the zero polynomial prints as '0'.
    """
    if not p.coeffs:
        return "0"
    parts = []
    for k, c in enumerate(p.coeffs):
        if c == 0:
            continue
        if k == 0:
            parts.append(str(c))
            continue
        x = "x" if k == 1 else f"x^{k}"
        if c == 1:
            parts.append(x)
        elif c == -1:
            parts.append(f"-{x}")
        else:
            parts.append(f"{c}{mul}{x}")
    return " + ".join(parts).replace("+ -", "- ")
