"""Exact arithmetic foundation.

Everything downstream is built on four kinds of values:

* ``Fraction`` -- arbitrary-precision rationals (stdlib).
* ``LaurentPoly`` -- sparse multivariate Laurent polynomials over Q in the
  fixed variable universe ``VARS``.
* ``RatFuncQ`` -- reduced univariate rational functions in q.
* ``FracMulti`` -- multivariate fractions with a factored denominator list;
  equality is decided by cross-multiplication, reduction is best-effort
  trial division, never required for correctness.

No floating point appears anywhere in this package.
"""

from __future__ import annotations

from fractions import Fraction

# Canonical variable order.  Every exponent vector has this length and this
# ordering; serialization and term ordering depend on it.
VARS = ("q", "t1", "t2", "t3", "t4", "X", "U", "x", "I")
NVARS = len(VARS)
_VIDX = {v: i for i, v in enumerate(VARS)}
ZERO_EXP = (0,) * NVARS


class NotDivisible(ArithmeticError):
    """Exact division failed; carries the nonzero remainder."""

    def __init__(self, message, remainder=None):
        super().__init__(message)
        self.remainder = remainder


class NonInvertibleSubstitution(ArithmeticError):
    """A variable occurring with negative exponents was given a non-unit value."""


def _exp_mul(e1, e2):
    return tuple(a + b for a, b in zip(e1, e2))


class LaurentPoly:
    """Sparse Laurent polynomial with Fraction coefficients.

    Immutable by convention: no method mutates ``terms`` after construction.
    ``terms`` maps exponent vectors (length NVARS, entries may be negative)
    to nonzero Fractions.
    """

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        if terms is None:
            terms = {}
        self.terms = terms

    # -- constructors ------------------------------------------------------

    @staticmethod
    def zero():
        return LaurentPoly({})

    @staticmethod
    def const(c):
        c = Fraction(c)
        if c == 0:
            return LaurentPoly({})
        return LaurentPoly({ZERO_EXP: c})

    @staticmethod
    def var(name, exp=1, coeff=1):
        c = Fraction(coeff)
        if c == 0:
            return LaurentPoly({})
        e = [0] * NVARS
        e[_VIDX[name]] = exp
        return LaurentPoly({tuple(e): c})

    @staticmethod
    def monomial(coeff, exps):
        """Monomial from a {var: exponent} dict."""
        c = Fraction(coeff)
        if c == 0:
            return LaurentPoly({})
        e = [0] * NVARS
        for name, k in exps.items():
            e[_VIDX[name]] += k
        return LaurentPoly({tuple(e): c})

    @staticmethod
    def _coerce(other):
        if isinstance(other, LaurentPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return LaurentPoly.const(other)
        return None

    # -- predicates --------------------------------------------------------

    def is_zero(self):
        return not self.terms

    def is_unit(self):
        """A unit of the Laurent ring: a single term."""
        return len(self.terms) == 1

    def is_const(self):
        return not self.terms or (len(self.terms) == 1 and ZERO_EXP in self.terms)

    def const_value(self):
        if not self.terms:
            return Fraction(0)
        if len(self.terms) == 1 and ZERO_EXP in self.terms:
            return self.terms[ZERO_EXP]
        raise ValueError("not a constant: %s" % self)

    def variables(self):
        used = set()
        for e in self.terms:
            for i, k in enumerate(e):
                if k:
                    used.add(VARS[i])
        return used

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other):
        other = LaurentPoly._coerce(other)
        if other is None:
            return NotImplemented
        if not self.terms:
            return other
        if not other.terms:
            return self
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e)
            if s is None:
                out[e] = c
            else:
                s = s + c
                if s:
                    out[e] = s
                else:
                    del out[e]
        return LaurentPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly({e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        other = LaurentPoly._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = LaurentPoly._coerce(other)
        if other is None:
            return NotImplemented
        if not self.terms or not other.terms:
            return LaurentPoly({})
        a, b = self.terms, other.terms
        if len(a) > len(b):
            a, b = b, a
        out = {}
        for e1, c1 in a.items():
            for e2, c2 in b.items():
                e = tuple(x + y for x, y in zip(e1, e2))
                s = out.get(e)
                if s is None:
                    out[e] = c1 * c2
                else:
                    s = s + c1 * c2
                    if s:
                        out[e] = s
                    else:
                        del out[e]
        return LaurentPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n):
        if not isinstance(n, int):
            return NotImplemented
        if n == 0:
            return LaurentPoly.const(1)
        base = self
        if n < 0:
            base = self.inverse()
            n = -n
        result = None
        while n:
            if n & 1:
                result = base if result is None else result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def inverse(self):
        if len(self.terms) != 1:
            raise NonInvertibleSubstitution("only unit monomials are invertible: %s" % self)
        (e, c), = self.terms.items()
        return LaurentPoly({tuple(-k for k in e): Fraction(1) / c})

    def __eq__(self, other):
        other = LaurentPoly._coerce(other)
        if other is None:
            return NotImplemented
        return self.terms == other.terms

    def __ne__(self, other):
        eq = self.__eq__(other)
        if eq is NotImplemented:
            return eq
        return not eq

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    # -- views -------------------------------------------------------------

    def min_exp(self, var):
        i = _VIDX[var]
        return min(e[i] for e in self.terms)

    def max_exp(self, var):
        i = _VIDX[var]
        return max(e[i] for e in self.terms)

    def coeff_of(self, var, k):
        """Coefficient of var^k, as a LaurentPoly with that variable cleared."""
        i = _VIDX[var]
        out = {}
        for e, c in self.terms.items():
            if e[i] == k:
                e2 = list(e)
                e2[i] = 0
                out[tuple(e2)] = c
        return LaurentPoly(out)

    def collect(self, var):
        """Map exponent-of-var -> coefficient poly (var cleared)."""
        i = _VIDX[var]
        out = {}
        for e, c in self.terms.items():
            e2 = list(e)
            k = e2[i]
            e2[i] = 0
            out.setdefault(k, {})[tuple(e2)] = c
        return {k: LaurentPoly(d) for k, d in out.items()}

    def shift_var(self, var, k):
        """Multiply by var^k."""
        if k == 0:
            return self
        i = _VIDX[var]
        out = {}
        for e, c in self.terms.items():
            e2 = list(e)
            e2[i] += k
            out[tuple(e2)] = c
        return LaurentPoly(out)

    # -- substitution ------------------------------------------------------

    def substitute(self, var, value):
        return self.substitute_all({var: value})

    def substitute_all(self, values):
        """Simultaneous substitution.  Values may be LaurentPoly, FracMulti,
        int or Fraction; the result kind follows the values (any FracMulti
        value makes the result a FracMulti)."""
        vals = {}
        fractional = False
        for name, v in values.items():
            if isinstance(v, FracMulti):
                fractional = True
            else:
                v = LaurentPoly._coerce(v)
                if v is None:
                    raise TypeError("bad substitution value for %s" % name)
            vals[_VIDX[name]] = v
        if not fractional:
            # negative exponents demand unit values
            for i, v in vals.items():
                if not v.is_unit():
                    for e in self.terms:
                        if e[i] < 0:
                            raise NonInvertibleSubstitution(
                                "negative power of %s with non-unit value" % VARS[i])
        pow_cache = {}

        def vpow(i, k):
            key = (i, k)
            got = pow_cache.get(key)
            if got is None:
                v = vals[i]
                if fractional and isinstance(v, LaurentPoly):
                    v = FracMulti.from_poly(v)
                got = v ** k
                pow_cache[key] = got
            return got

        acc = FracMulti.from_poly(LaurentPoly.zero()) if fractional else LaurentPoly.zero()
        for e, c in self.terms.items():
            kept = [0] * NVARS
            factors = []
            for i, k in enumerate(e):
                if k == 0:
                    continue
                if i in vals:
                    factors.append(vpow(i, k))
                else:
                    kept[i] = k
            term = LaurentPoly({tuple(kept): c})
            if fractional:
                term = FracMulti.from_poly(term)
            for f in factors:
                term = term * f
            acc = acc + term
        return acc

    # -- rendering ---------------------------------------------------------

    def sort_key(self):
        return tuple(sorted(self.terms.items()))

    def _ordered_terms(self):
        return sorted(self.terms.items())

    def to_text(self):
        """Canonical human-readable form, terms in ascending lex order."""
        if not self.terms:
            return "0"
        parts = []
        for e, c in self._ordered_terms():
            factors = [str(c)]
            for i, k in enumerate(e):
                if k:
                    factors.append("%s^%d" % (VARS[i], k))
            parts.append("*".join(factors))
        return " + ".join(parts)

    def to_json_dict(self):
        """Canonical JSON form: only the variables that occur, projected."""
        used = [i for i in range(NVARS) if any(e[i] for e in self.terms)]
        terms = []
        for e, c in self._ordered_terms():
            terms.append({"coeff": str(c), "exp": [e[i] for i in used]})
        return {"vars": [VARS[i] for i in used], "terms": terms}

    @staticmethod
    def from_json_dict(d):
        idx = [_VIDX[v] for v in d["vars"]]
        out = {}
        for t in d["terms"]:
            e = [0] * NVARS
            for i, k in zip(idx, t["exp"]):
                e[i] = k
            c = Fraction(t["coeff"])
            if c:
                out[tuple(e)] = c
        return LaurentPoly(out)

    def __str__(self):
        return self.to_text()

    def __repr__(self):
        return "LaurentPoly(%s)" % self.to_text()


# Convenience generators, e.g. ``Q ** 2 * X ** -1 - 1``.
Q = LaurentPoly.var("q")
T1 = LaurentPoly.var("t1")
T2 = LaurentPoly.var("t2")
T3 = LaurentPoly.var("t3")
T4 = LaurentPoly.var("t4")
X = LaurentPoly.var("X")
U = LaurentPoly.var("U")
SMALL_X = LaurentPoly.var("x")
BIG_I = LaurentPoly.var("I")
ONE = LaurentPoly.const(1)


def lp(coeff, **exps):
    """Monomial shorthand: lp(3, q=2, X=-1) == 3*q^2*X^-1."""
    return LaurentPoly.monomial(coeff, exps)


# -- division ----------------------------------------------------------------


def divmod_var(f, g, var):
    """Quotient and remainder of f by g viewed in the single variable ``var``.

    Requires the leading coefficient of g in var to be a unit monomial in the
    remaining variables.  Returns (h, r) with f = g*h + r and the var-degree
    of r (after clearing denominators) below that of g.
    """
    if g.is_zero():
        raise ZeroDivisionError("division by zero polynomial")
    if f.is_zero():
        return LaurentPoly.zero(), LaurentPoly.zero()
    if g.is_unit():
        return f * g.inverse(), LaurentPoly.zero()
    fmin = f.min_exp(var)
    gmin = g.min_exp(var)
    F = f.shift_var(var, -fmin)
    G = g.shift_var(var, -gmin)
    dG = G.max_exp(var)
    lead_G = G.coeff_of(var, dG)
    if not lead_G.is_unit():
        raise NotDivisible(
            "leading coefficient of divisor in %s is not a unit monomial" % var,
            remainder=f)
    lead_G_inv = lead_G.inverse()
    quo = LaurentPoly.zero()
    while not F.is_zero():
        dF = F.max_exp(var)
        if dF < dG:
            break
        qt = (F.coeff_of(var, dF) * lead_G_inv).shift_var(var, dF - dG)
        quo = quo + qt
        F = F - qt * G
    return quo.shift_var(var, fmin - gmin), F.shift_var(var, fmin)


def exact_div(f, g, var):
    """Exact division f/g in the Laurent ring; NotDivisible on failure."""
    h, r = divmod_var(f, g, var)
    if not r.is_zero():
        raise NotDivisible("remainder is nonzero dividing by %s" % var, remainder=r)
    return h


def main_var(p):
    """Last variable (in VARS order) occurring in p; used to pick the
    division variable for a denominator factor."""
    best = None
    for e in p.terms:
        for i in range(NVARS - 1, -1, -1):
            if e[i]:
                if best is None or i > best:
                    best = i
                break
    if best is None:
        raise ValueError("constant polynomial has no main variable")
    return VARS[best]


# -- Chebyshev polynomials ----------------------------------------------------

_cheb_S = [LaurentPoly.const(1), LaurentPoly.var("x")]
_cheb_T = [LaurentPoly.const(2), LaurentPoly.var("x")]


def chebyshev(kind, n):
    """Chebyshev families in the variable x: S_0=1, S_1=x, T_0=2, T_1=x,
    both with F_{n+1} = x*F_n - F_{n-1}.  S_{-1} = 0 by backward recursion."""
    if kind == "S":
        if n < -1:
            raise ValueError("S_n defined for n >= -1")
        if n == -1:
            return LaurentPoly.zero()
        table = _cheb_S
    elif kind == "T":
        if n < 0:
            raise ValueError("T_n defined for n >= 0")
        table = _cheb_T
    else:
        raise ValueError("kind must be 'S' or 'T'")
    xv = LaurentPoly.var("x")
    while len(table) <= n:
        table.append(xv * table[-1] - table[-2])
    return table[n]


# -- univariate rational functions in q ---------------------------------------


def _q_poly_normalize(p):
    """Shift a q-Laurent polynomial into a genuine polynomial (min exp 0)."""
    if p.is_zero():
        return p, 0
    k = p.min_exp("q")
    return p.shift_var("q", -k), k


def _q_gcd(a, b):
    """Monic gcd of two q-polynomials (nonnegative exponents)."""
    while not b.is_zero():
        _, r = divmod_var(a, b, "q")
        a, b = b, r
        if not b.is_zero():
            b, _ = _q_poly_normalize(b)
    lead = a.coeff_of("q", a.max_exp("q")).const_value()
    return a * LaurentPoly.const(Fraction(1) / lead)


class RatFuncQ:
    """Reduced rational function in q: num Laurent, den a monic q-polynomial
    with nonzero constant term.  Equality is structural after reduction."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None, _reduced=False):
        num = LaurentPoly._coerce(num)
        den = LaurentPoly.const(1) if den is None else LaurentPoly._coerce(den)
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        if not _reduced:
            num, den = self._reduce(num, den)
        self.num = num
        self.den = den

    @staticmethod
    def _reduce(num, den):
        bad = (num.variables() | den.variables()) - {"q"}
        if bad:
            raise ValueError("RatFuncQ admits only the variable q, got %s" % bad)
        if num.is_zero():
            return num, LaurentPoly.const(1)
        dp, dk = _q_poly_normalize(den)
        num = num.shift_var("q", -dk)
        if not dp.is_const():
            np_, nk = _q_poly_normalize(num)
            g = _q_gcd(np_, dp)
            if not g.is_const():
                np_ = exact_div(np_, g, "q")
                dp = exact_div(dp, g, "q")
            num = np_.shift_var("q", nk)
            dp, dk2 = _q_poly_normalize(dp)
            num = num.shift_var("q", -dk2)
        lead = dp.coeff_of("q", dp.max_exp("q")).const_value()
        scale = LaurentPoly.const(Fraction(1) / lead)
        return num * scale, dp * scale

    @staticmethod
    def zero():
        return RatFuncQ(LaurentPoly.zero())

    @staticmethod
    def one():
        return RatFuncQ(LaurentPoly.const(1))

    def is_zero(self):
        return self.num.is_zero()

    def __add__(self, other):
        other = _coerce_ratfunc(other)
        if other is None:
            return NotImplemented
        return RatFuncQ(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return RatFuncQ(-self.num, self.den, _reduced=True)

    def __sub__(self, other):
        other = _coerce_ratfunc(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = _coerce_ratfunc(other)
        if other is None:
            return NotImplemented
        return RatFuncQ(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _coerce_ratfunc(other)
        if other is None:
            return NotImplemented
        if other.num.is_zero():
            raise ZeroDivisionError("division by zero rational function")
        return RatFuncQ(self.num * other.den, self.den * other.num)

    def inverse(self):
        return RatFuncQ.one() / self

    def __eq__(self, other):
        other = _coerce_ratfunc(other)
        if other is None:
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def as_poly(self):
        """The underlying Laurent polynomial; NotDivisible if den remains."""
        if self.den.is_const():
            return self.num * LaurentPoly.const(Fraction(1) / self.den.const_value())
        return exact_div(self.num, self.den, "q")

    def __str__(self):
        if self.den == ONE:
            return self.num.to_text()
        return "(%s) / (%s)" % (self.num.to_text(), self.den.to_text())

    __repr__ = __str__


def _coerce_ratfunc(v):
    if isinstance(v, RatFuncQ):
        return v
    if isinstance(v, (int, Fraction, LaurentPoly)):
        return RatFuncQ(v)
    return None


# -- multivariate fractions ----------------------------------------------------


def _var_spans(p):
    lo = [None] * NVARS
    hi = [None] * NVARS
    for e in p.terms:
        for i, k in enumerate(e):
            if lo[i] is None or k < lo[i]:
                lo[i] = k
            if hi[i] is None or k > hi[i]:
                hi[i] = k
    return [h - l for l, h in zip(lo, hi)]


def _span_fits(num_spans, f):
    """Necessary condition for f | num: num's exponent span dominates f's."""
    spans_f = _var_spans(f)
    return all(a >= b for a, b in zip(num_spans, spans_f))


def canonical_factor(p):
    """Split p into (unit monomial, canonical factor): p = unit * factor.

    The canonical representative has min exponent 0 in every variable and
    coefficient 1 on its lexicographically smallest exponent vector.
    """
    if p.is_zero():
        raise ZeroDivisionError("zero cannot be a denominator factor")
    shift = [0] * NVARS
    for i in range(NVARS):
        m = min(e[i] for e in p.terms)
        shift[i] = -m
    shifted = {}
    for e, c in p.terms.items():
        shifted[tuple(a + b for a, b in zip(e, shift))] = c
    lead = shifted[min(shifted)]
    factor = LaurentPoly({e: c / lead for e, c in shifted.items()})
    unit = LaurentPoly({tuple(-s for s in shift): lead})
    return unit, factor


class FracMulti:
    """num / prod(factors): factors are canonical non-unit polynomials kept
    as a sorted tuple.  Cancellation is trial exact division per factor."""

    __slots__ = ("num", "factors")

    def __init__(self, num, factors=(), _canon=False):
        num = LaurentPoly._coerce(num)
        if not _canon:
            canon = []
            for f in factors:
                if f.is_zero():
                    raise ZeroDivisionError("zero denominator factor")
                unit, base = canonical_factor(f)
                num = num * unit.inverse()
                if not base.is_const():
                    canon.append(base)
            num, factors = self._cancel(num, canon)
        self.num = num
        self.factors = tuple(factors)

    @staticmethod
    def _cancel(num, factors):
        if num.is_zero():
            return num, ()
        remaining = []
        spans = None
        for f in sorted(factors, key=LaurentPoly.sort_key):
            if num.is_zero():
                continue
            if spans is None:
                spans = _var_spans(num)
            if not _span_fits(spans, f):
                remaining.append(f)
                continue
            try:
                num = exact_div(num, f, main_var(f))
                spans = None
            except NotDivisible:
                remaining.append(f)
        return num, remaining

    @staticmethod
    def from_poly(p):
        return FracMulti(p, (), _canon=True)

    @staticmethod
    def _coerce(v):
        if isinstance(v, FracMulti):
            return v
        p = LaurentPoly._coerce(v)
        if p is not None:
            return FracMulti.from_poly(p)
        if isinstance(v, RatFuncQ):
            return FracMulti(v.num, (v.den,))
        return None

    def is_zero(self):
        return self.num.is_zero()

    def den_poly(self):
        d = LaurentPoly.const(1)
        for f in self.factors:
            d = d * f
        return d

    def __add__(self, other):
        other = FracMulti._coerce(other)
        if other is None:
            return NotImplemented
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        # merge factor multisets: lcm-style via max multiplicity
        from collections import Counter
        ca = Counter(f.sort_key() for f in self.factors)
        cb = Counter(f.sort_key() for f in other.factors)
        keyed = {f.sort_key(): f for f in self.factors + other.factors}
        num_a, num_b = self.num, other.num
        merged = []
        for k in set(ca) | set(cb):
            f = keyed[k]
            m = max(ca[k], cb[k])
            merged.extend([f] * m)
            for _ in range(m - ca[k]):
                num_a = num_a * f
            for _ in range(m - cb[k]):
                num_b = num_b * f
        num, factors = FracMulti._cancel(num_a + num_b, merged)
        return FracMulti(num, tuple(factors), _canon=True)

    __radd__ = __add__

    def __neg__(self):
        return FracMulti(-self.num, self.factors, _canon=True)

    def __sub__(self, other):
        other = FracMulti._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = FracMulti._coerce(other)
        if other is None:
            return NotImplemented
        num, factors = FracMulti._cancel(self.num * other.num,
                                         list(self.factors + other.factors))
        return FracMulti(num, tuple(factors), _canon=True)

    __rmul__ = __mul__

    def __pow__(self, n):
        if not isinstance(n, int):
            return NotImplemented
        if n == 0:
            return FracMulti.from_poly(LaurentPoly.const(1))
        base = self if n > 0 else self.inverse()
        out = base
        for _ in range(abs(n) - 1):
            out = out * base
        return out

    def inverse(self):
        if self.num.is_zero():
            raise ZeroDivisionError("inverting zero")
        num = LaurentPoly.const(1)
        for f in self.factors:
            num = num * f
        return FracMulti(num, (self.num,))

    def __truediv__(self, other):
        other = FracMulti._coerce(other)
        if other is None:
            return NotImplemented
        return self * other.inverse()

    def __eq__(self, other):
        other = FracMulti._coerce(other)
        if other is None:
            return NotImplemented
        return (self.num * other.den_poly()) == (other.num * self.den_poly())

    def __hash__(self):
        raise TypeError("FracMulti is unhashable; compare with ==")

    def substitute_all(self, values):
        num = self.num.substitute_all(values)
        out = FracMulti._coerce(num)
        for f in self.factors:
            fv = f.substitute_all(values)
            fv = FracMulti._coerce(fv)
            out = out / fv
        return out

    def as_poly(self):
        """Clear all denominator factors by exact division."""
        num = self.num
        for f in self.factors:
            num = exact_div(num, f, main_var(f))
        return num

    def __str__(self):
        if not self.factors:
            return self.num.to_text()
        return "(%s) / (%s)" % (self.num.to_text(),
                                ")*(".join(f.to_text() for f in self.factors))

    __repr__ = __str__


# -- matrices -----------------------------------------------------------------


def mat_identity(n, one=None):
    one = ONE if one is None else one
    zero = one - one
    return [[one if i == j else zero for j in range(n)] for i in range(n)]


def mat_mul(a, b):
    n, m, p = len(a), len(b), len(b[0]) if b else 0
    out = []
    for i in range(n):
        row = []
        for j in range(p):
            s = a[i][0] * b[0][j]
            for k in range(1, m):
                s = s + a[i][k] * b[k][j]
            row.append(s)
        out.append(row)
    return out


def mat_sub(a, b):
    return [[x - y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_transpose(a):
    return [list(col) for col in zip(*a)]


def mat_map(a, fn):
    return [[fn(x) for x in row] for row in a]


def mat_eq(a, b):
    return all(x == y for ra, rb in zip(a, b) for x, y in zip(ra, rb))


def mat_det(a):
    """Laplace expansion; fine for the small ranks used here."""
    n = len(a)
    if n == 0:
        return ONE
    if n == 1:
        return a[0][0]
    det = None
    for j in range(n):
        if hasattr(a[0][j], "is_zero") and a[0][j].is_zero():
            continue
        minor = [row[:j] + row[j + 1:] for row in a[1:]]
        term = a[0][j] * mat_det(minor)
        if j % 2:
            term = -term
        det = term if det is None else det + term
    if det is None:
        det = a[0][0] - a[0][0]
    return det


def mat_inv_unit_det(a):
    """Inverse of a Laurent-polynomial matrix whose determinant is a unit."""
    n = len(a)
    det = mat_det(a)
    if not det.is_unit():
        raise ValueError("determinant is not a unit monomial: %s" % det)
    det_inv = det.inverse()
    if n == 1:
        return [[det_inv]]
    cof = []
    for i in range(n):
        row = []
        for j in range(n):
            minor = [r[:j] + r[j + 1:] for k, r in enumerate(a) if k != i]
            m = mat_det(minor)
            if (i + j) % 2:
                m = -m
            row.append(m)
        cof.append(row)
    adj = mat_transpose(cof)
    return [[x * det_inv for x in row] for row in adj]


def nullspace(m):
    """Right nullspace basis of a matrix of RatFuncQ, by Gaussian elimination
    with pivoting in fixed column order.  Deterministic."""
    if not m:
        return []
    rows = [list(r) for r in m]
    n_rows, n_cols = len(rows), len(rows[0])
    pivot_of_col = {}
    r = 0
    for c in range(n_cols):
        piv = None
        for i in range(r, n_rows):
            if not rows[i][c].is_zero():
                piv = i
                break
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = rows[r][c].inverse()
        rows[r] = [x * inv for x in rows[r]]
        for i in range(n_rows):
            if i != r and not rows[i][c].is_zero():
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivot_of_col[c] = r
        r += 1
        if r == n_rows:
            break
    free_cols = [c for c in range(n_cols) if c not in pivot_of_col]
    basis = []
    for fc in free_cols:
        v = [RatFuncQ.zero()] * n_cols
        v[fc] = RatFuncQ.one()
        for c, pr in pivot_of_col.items():
            v[c] = -rows[pr][fc]
        # canonical scaling: first nonzero coordinate becomes 1
        for entry in v:
            if not entry.is_zero():
                inv = entry.inverse()
                v = [x * inv for x in v]
                break
        basis.append(v)
    return basis
