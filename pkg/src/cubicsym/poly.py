"""Sparse multivariate polynomials with exact rational coefficients.

A polynomial lives over a fixed, ordered tuple of variable names.  The
position of a variable in that tuple is its elimination priority: under a
lexicographic order the *first* variable is the greatest (it gets
eliminated first), the *last* variable survives into the univariate
elimination ideal.  Monomials are stored as exponent tuples, coefficients
as ``gmpy2.mpq`` (exact rationals).

Floats are rejected on input; decimal strings such as ``"105.533333"``
are converted exactly.
"""

from __future__ import annotations

import re
from fractions import Fraction

from gmpy2 import mpq, mpz

_RAT_TYPES = (int, mpz, type(mpq()), Fraction)


def ratio(x):
    """Convert ``x`` to an exact rational (``mpq``).

    Accepts ints, Fractions, mpq/mpz, and strings (integer, ``p/q`` or
    decimal).  Floats are rejected: callers must state exact inputs.
    """
    if isinstance(x, _RAT_TYPES):
        return mpq(x)
    if isinstance(x, str):
        s = x.strip()
        if "/" in s:
            num, den = s.split("/")
            return mpq(int(num), int(den))
        if "." in s or "e" in s or "E" in s:
            return mpq(Fraction(s))
        return mpq(int(s))
    if isinstance(x, float):
        raise TypeError(f"refusing inexact float {x!r}; pass a string or Fraction")
    raise TypeError(f"cannot interpret {x!r} as an exact rational")


def is_exact(x) -> bool:
    """True when ``x`` is an exact rational scalar."""
    return isinstance(x, _RAT_TYPES)


class MvPolynomial:
    """Multivariate polynomial over the rationals.

    ``terms`` maps exponent tuples (one entry per variable) to nonzero
    mpq coefficients.  Instances are immutable in spirit: all operators
    return new polynomials.
    """

    __slots__ = ("vars", "terms")

    def __init__(self, vars, terms=None):
        self.vars = tuple(vars)
        clean = {}
        if terms:
            n = len(self.vars)
            for exps, c in terms.items():
                q = c if isinstance(c, type(mpq())) else ratio(c)
                if q == 0:
                    continue
                if len(exps) != n:
                    raise ValueError("exponent vector length does not match variables")
                clean[tuple(exps)] = q
        self.terms = clean

    # -- construction -------------------------------------------------

    @classmethod
    def constant(cls, vars, c):
        vars = tuple(vars)
        return cls(vars, {(0,) * len(vars): ratio(c)})

    @classmethod
    def variable(cls, vars, name):
        vars = tuple(vars)
        i = vars.index(name)
        exps = [0] * len(vars)
        exps[i] = 1
        return cls(vars, {tuple(exps): mpq(1)})

    # -- predicates / basic data --------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(not any(e) for e in self.terms)

    def constant_value(self):
        return self.terms.get((0,) * len(self.vars), mpq(0))

    def total_degree(self) -> int:
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def degree_in(self, name) -> int:
        i = self.vars.index(name)
        if not self.terms:
            return -1
        return max(e[i] for e in self.terms)

    def support_vars(self):
        """Set of variable names that actually occur."""
        used = set()
        for exps in self.terms:
            for i, e in enumerate(exps):
                if e:
                    used.add(self.vars[i])
        return used

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, MvPolynomial):
            return self.vars == other.vars and self.terms == other.terms
        if is_exact(other):
            return self.terms == MvPolynomial.constant(self.vars, other).terms
        return NotImplemented

    def __hash__(self):
        return hash((self.vars, frozenset(self.terms.items())))

    # -- arithmetic ----------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, MvPolynomial):
            if other.vars != self.vars:
                raise ValueError("polynomials live over different variable sets")
            return other
        if is_exact(other) or isinstance(other, str):
            return MvPolynomial.constant(self.vars, other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        res = dict(self.terms)
        for exps, c in other.terms.items():
            s = res.get(exps, mpq(0)) + c
            if s:
                res[exps] = s
            else:
                res.pop(exps, None)
        out = MvPolynomial(self.vars)
        out.terms = res
        return out

    __radd__ = __add__

    def __neg__(self):
        out = MvPolynomial(self.vars)
        out.terms = {e: -c for e, c in self.terms.items()}
        return out

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return -(self - other)

    def __mul__(self, other):
        if is_exact(other) or isinstance(other, str):
            q = ratio(other)
            if q == 0:
                return MvPolynomial(self.vars)
            out = MvPolynomial(self.vars)
            out.terms = {e: c * q for e, c in self.terms.items()}
            return out
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        res = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                s = res.get(e, mpq(0)) + c1 * c2
                if s:
                    res[e] = s
                else:
                    res.pop(e, None)
        out = MvPolynomial(self.vars)
        out.terms = res
        return out

    __rmul__ = __mul__

    def __truediv__(self, other):
        q = ratio(other)
        if q == 0:
            raise ZeroDivisionError("polynomial divided by zero scalar")
        return self * (1 / q)

    def __pow__(self, k):
        if not isinstance(k, int) or k < 0:
            raise ValueError("only nonnegative integer powers")
        out = MvPolynomial.constant(self.vars, 1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base if k > 1 else base
            k >>= 1
        return out

    # -- evaluation / substitution -------------------------------------

    def evaluate(self, values):
        """Evaluate at ``values`` (mapping name -> scalar).

        The scalars may be exact rationals or mpmath floats; the result
        type follows the inputs.  Every variable that occurs must be
        assigned.
        """
        vals = [values.get(v) for v in self.vars]
        acc = None
        for exps, c in self.terms.items():
            t = mpq(c)
            for i, e in enumerate(exps):
                if e:
                    if vals[i] is None:
                        raise KeyError(f"no value for variable {self.vars[i]!r}")
                    t = t * vals[i] ** e
            acc = t if acc is None else acc + t
        return acc if acc is not None else mpq(0)

    def substitute(self, mapping):
        """Substitute polynomials (or exact scalars) for variables.

        Variables absent from ``mapping`` are kept.  The replacement
        polynomials must live over the same variable tuple.
        """
        repl = {}
        for name, val in mapping.items():
            i = self.vars.index(name)
            repl[i] = val if isinstance(val, MvPolynomial) else MvPolynomial.constant(self.vars, val)
        out = MvPolynomial(self.vars)
        for exps, c in self.terms.items():
            term = MvPolynomial.constant(self.vars, c)
            rest = [0] * len(self.vars)
            for i, e in enumerate(exps):
                if not e:
                    continue
                if i in repl:
                    term = term * repl[i] ** e
                else:
                    rest[i] = e
            if any(rest):
                shift = MvPolynomial(self.vars, {tuple(rest): mpq(1)})
                term = term * shift
            out = out + term
        return out

    def with_vars(self, newvars):
        """Re-express over ``newvars``; every used variable must survive."""
        newvars = tuple(newvars)
        idx = []
        for v in self.vars:
            idx.append(newvars.index(v) if v in newvars else None)
        out = {}
        for exps, c in self.terms.items():
            ne = [0] * len(newvars)
            for i, e in enumerate(exps):
                if not e:
                    continue
                if idx[i] is None:
                    raise ValueError(f"variable {self.vars[i]!r} is used but dropped")
                ne[idx[i]] = e
            out[tuple(ne)] = c
        return MvPolynomial(newvars, out)

    def derivative(self, name):
        i = self.vars.index(name)
        out = {}
        for exps, c in self.terms.items():
            e = exps[i]
            if not e:
                continue
            ne = list(exps)
            ne[i] = e - 1
            out[tuple(ne)] = c * e
        return MvPolynomial(self.vars, out)

    def dense_univariate(self, name):
        """Coefficients [c0, c1, ...] of a polynomial univariate in ``name``.

        Raises if any other variable occurs.
        """
        i = self.vars.index(name)
        coeffs = [mpq(0)] * (self.degree_in(name) + 1)
        for exps, c in self.terms.items():
            if any(e and j != i for j, e in enumerate(exps)):
                raise ValueError("polynomial is not univariate in " + name)
            coeffs[exps[i]] += c
        return coeffs

    def coefficient_in(self, name, k):
        """The coefficient of ``name**k`` as a polynomial in the other variables."""
        i = self.vars.index(name)
        out = {}
        for exps, c in self.terms.items():
            if exps[i] == k:
                ne = list(exps)
                ne[i] = 0
                out[tuple(ne)] = out.get(tuple(ne), mpq(0)) + c
        return MvPolynomial(self.vars, out)

    # -- text form ------------------------------------------------------

    def __repr__(self):
        return f"MvPolynomial({self.to_text()!r})"

    def to_text(self) -> str:
        """Plain text form: exact rationals, ``var^k`` powers."""
        if not self.terms:
            return "0"
        items = sorted(self.terms.items(), key=lambda t: t[0], reverse=True)
        parts = []
        for exps, c in items:
            mono = "*".join(
                f"{v}^{e}" if e > 1 else v
                for v, e in zip(self.vars, exps)
                if e
            )
            if not mono:
                body = str(c)
            elif c == 1:
                body = mono
            elif c == -1:
                body = f"-{mono}"
            else:
                body = f"{c}*{mono}"
            if parts and not body.startswith("-"):
                parts.append("+" + body)
            else:
                parts.append(body)
        return "".join(parts)

    _TERM_RE = re.compile(
        r"""\s*(?P<sign>[+-]?)\s*
            (?P<coef>\d+(?:/\d+)?)?
            \s*\*?\s*
            (?P<mono>(?:[A-Za-z_]\w*(?:\^\d+)?(?:\s*\*\s*)?)*)
            \s*""",
        re.VERBOSE,
    )

    @classmethod
    def from_text(cls, text, vars):
        """Parse the ``to_text`` format (also tolerates spaces)."""
        vars = tuple(vars)
        n = len(vars)
        pos = 0
        terms = {}
        text = text.strip()
        if text == "0":
            return cls(vars)
        while pos < len(text):
            m = cls._TERM_RE.match(text, pos)
            if not m or m.end() == pos:
                raise ValueError(f"cannot parse polynomial text near {text[pos:pos+30]!r}")
            pos = m.end()
            sign = -1 if m.group("sign") == "-" else 1
            coef = mpq(1) if m.group("coef") is None else ratio(m.group("coef"))
            exps = [0] * n
            mono = m.group("mono") or ""
            for factor in re.split(r"\s*\*\s*", mono):
                if not factor:
                    continue
                if "^" in factor:
                    name, e = factor.split("^")
                    e = int(e)
                else:
                    name, e = factor, 1
                exps[vars.index(name)] += e
            key = tuple(exps)
            terms[key] = terms.get(key, mpq(0)) + sign * coef
        return cls(vars, terms)


def variables(names):
    """Generator polynomials for a variable tuple.

    >>> x, y = variables("x y")
    """
    if isinstance(names, str):
        names = names.split()
    names = tuple(names)
    return tuple(MvPolynomial.variable(names, n) for n in names)
