"""The symbolic operator algebra.

A ``SkewOp`` is a finite normal-ordered sum  sum_{i,e} f_{i,e}(X) * Y^i * s^e
with FracMulti coefficients (variables X; q, t1..t4).  Y denotes the quantum
torus generator usually written y-hat; s the reflection.  Normal ordering uses

    Y f(X) = f(q^-2 X) Y,    s f(X) = f(X^-1) s,    s Y = Y^-1 s,    s^2 = 1.

The same class doubles as the matrix-coefficient operator ring used for
module-level identities (coefficients then are FracMatrix instead of
FracMulti); multiplication code is orientation-correct for both.
"""

from __future__ import annotations

from fractions import Fraction

from .ring import (
    LaurentPoly, FracMulti, Q, T1, T2, T3, T4, X, ONE, lp,
)


def _shift_value(i, eps, q_value=None):
    """X-image under commuting a coefficient across Y^i s^eps:
    X -> q^{-2i} X for eps=0, X -> q^{2i} X^-1 for eps=1."""
    if q_value is None:
        if eps:
            return LaurentPoly.monomial(1, {"q": 2 * i, "X": -1})
        return LaurentPoly.monomial(1, {"q": -2 * i, "X": 1})
    c = Fraction(q_value) ** (2 * i if eps else -2 * i)
    return LaurentPoly.monomial(c, {"X": -1 if eps else 1})


class FracMatrix:
    """Square matrix of FracMulti entries; the coefficient object for
    operator matrices acting on a finite-rank module."""

    __slots__ = ("rows",)

    def __init__(self, rows):
        self.rows = tuple(tuple(FracMulti._coerce(x) for x in row) for row in rows)

    @staticmethod
    def identity(n):
        one = FracMulti.from_poly(ONE)
        zero = FracMulti.from_poly(LaurentPoly.zero())
        return FracMatrix([[one if i == j else zero for j in range(n)] for i in range(n)])

    @staticmethod
    def scalar(n, c):
        c = FracMulti._coerce(c)
        zero = FracMulti.from_poly(LaurentPoly.zero())
        return FracMatrix([[c if i == j else zero for j in range(n)] for i in range(n)])

    @property
    def size(self):
        return len(self.rows)

    def __add__(self, other):
        return FracMatrix([[a + b for a, b in zip(ra, rb)]
                           for ra, rb in zip(self.rows, other.rows)])

    def __neg__(self):
        return FracMatrix([[-a for a in row] for row in self.rows])

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, FracMatrix):
            other = FracMatrix.scalar(self.size, other)
        n = self.size
        out = []
        for i in range(n):
            row = []
            for j in range(n):
                s = self.rows[i][0] * other.rows[0][j]
                for k in range(1, n):
                    s = s + self.rows[i][k] * other.rows[k][j]
                row.append(s)
            out.append(row)
        return FracMatrix(out)

    def __rmul__(self, other):
        return FracMatrix.scalar(self.size, other) * self

    def subs_X(self, value):
        return FracMatrix([[a.substitute_all({"X": value}) for a in row]
                           for row in self.rows])

    def is_zero(self):
        return all(a.is_zero() for row in self.rows for a in row)

    def __eq__(self, other):
        return all(a == b for ra, rb in zip(self.rows, other.rows)
                   for a, b in zip(ra, rb))

    def __str__(self):
        return "[" + "; ".join(", ".join(str(a) for a in row) for row in self.rows) + "]"

    __repr__ = __str__


def _coerce_coeff(v, like):
    """Coerce scalars into the coefficient domain of an existing coefficient."""
    if isinstance(like, FracMatrix):
        if isinstance(v, FracMatrix):
            return v
        return FracMatrix.scalar(like.size, v)
    return FracMulti._coerce(v)


class SkewOp:
    """Normal-ordered element of the localized crossed product."""

    __slots__ = ("terms", "q_value")

    def __init__(self, terms=None, q_value=None):
        self.terms = {} if terms is None else terms
        self.q_value = q_value

    # -- constructors ------------------------------------------------------

    @staticmethod
    def from_coeff(c, i=0, eps=0, q_value=None):
        c = FracMulti._coerce(c) if not isinstance(c, (FracMulti, FracMatrix)) else c
        if c.is_zero():
            return SkewOp({}, q_value)
        return SkewOp({(i, eps): c}, q_value)

    @staticmethod
    def zero(q_value=None):
        return SkewOp({}, q_value)

    @staticmethod
    def one(q_value=None):
        return SkewOp.from_coeff(ONE, 0, 0, q_value)

    @staticmethod
    def gen_X(k=1, q_value=None):
        return SkewOp.from_coeff(X ** k, 0, 0, q_value)

    @staticmethod
    def gen_Y(k=1, q_value=None):
        return SkewOp.from_coeff(ONE, k, 0, q_value)

    @staticmethod
    def gen_s(q_value=None):
        return SkewOp.from_coeff(ONE, 0, 1, q_value)

    def one_like(self):
        for c in self.terms.values():
            if isinstance(c, FracMatrix):
                return SkewOp({(0, 0): FracMatrix.identity(c.size)}, self.q_value)
            break
        return SkewOp.one(self.q_value)

    # -- algebra -----------------------------------------------------------

    def is_zero(self):
        return all(c.is_zero() for c in self.terms.values())

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        out = dict(self.terms)
        for k, c in other.terms.items():
            if k in out:
                s = out[k] + c
                if s.is_zero():
                    del out[k]
                else:
                    out[k] = s
            else:
                out[k] = c
        return SkewOp(out, self.q_value if self.terms else other.q_value)

    __radd__ = __add__

    def __neg__(self):
        return SkewOp({k: -c for k, c in self.terms.items()}, self.q_value)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def _coerce(self, other):
        if isinstance(other, SkewOp):
            return other
        if isinstance(other, (int, Fraction, LaurentPoly, FracMulti)):
            like = next(iter(self.terms.values()), None)
            if isinstance(like, FracMatrix):
                return SkewOp.from_coeff(_coerce_coeff(other, like), 0, 0, self.q_value)
            return SkewOp.from_coeff(other, 0, 0, self.q_value)
        return None

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        out = {}
        qv = self.q_value if self.q_value is not None else other.q_value
        for (i1, e1), c1 in self.terms.items():
            for (i2, e2), c2 in other.terms.items():
                if i1 or e1:
                    c2m = c2.subs_X(_shift_value(i1, e1, qv)) if isinstance(c2, FracMatrix) \
                        else c2.substitute_all({"X": _shift_value(i1, e1, qv)})
                else:
                    c2m = c2
                key = (i1 + (i2 if e1 == 0 else -i2), e1 ^ e2)
                c = c1 * c2m
                if key in out:
                    s = out[key] + c
                    if s.is_zero():
                        del out[key]
                    else:
                        out[key] = s
                elif not c.is_zero():
                    out[key] = c
        return SkewOp(out, qv)

    def __rmul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other * self

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            return NotImplemented
        out = self.one_like()
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return (self - other).is_zero()

    def substitute_params(self, values):
        """Substitute scalar parameters (t's, q) in every coefficient.
        Only valid for FracMulti coefficients."""
        out = {}
        for k, c in self.terms.items():
            c2 = c.substitute_all(values)
            c2 = FracMulti._coerce(c2)
            if not c2.is_zero():
                out[k] = c2
        return SkewOp(out, self.q_value)

    def coeff(self, i, eps):
        c = self.terms.get((i, eps))
        if c is None:
            return FracMulti.from_poly(LaurentPoly.zero())
        return c

    def to_text(self):
        if not self.terms:
            return "0"
        parts = []
        for (i, eps) in sorted(self.terms):
            c = self.terms[(i, eps)]
            word = "".join(["*Y^%d" % i if i else "", "*s" if eps else ""])
            parts.append("(%s)%s" % (c, word))
        return " + ".join(parts)

    def __str__(self):
        return self.to_text()

    __repr__ = __str__


# -- parameter handling --------------------------------------------------------


def params(t1=None, t2=None, t3=None, t4=None):
    """Parameter tuple; defaults are the symbolic generators t1..t4.
    Numeric values may be given as ints/Fractions."""
    def conv(v, default):
        if v is None:
            return default
        if isinstance(v, LaurentPoly):
            return v
        return LaurentPoly.const(v)
    return (conv(t1, T1), conv(t2, T2), conv(t3, T3), conv(t4, T4))


def tbar(t):
    """t - t^-1 for a unit parameter value."""
    return t - t.inverse()


# -- the Dunkl-type generators ---------------------------------------------------


def dunkl_generators(pars=None):
    """The four operators of the standard embedding into the localized
    crossed product:

        T0 = t1 sY - (q^2 tb1 X^2 + q tb2 X)/(1 - q^2 X^2) (1 - sY)
        T1 = t3 s  + (tb3 + tb4 X)/(1 - X^2) (1 - s)
        T0v = q T0^-1 X,   T1v = X^-1 T1^-1

    with T0^-1 = T0 - tb1 and T1^-1 = T1 - tb3 from the quadratic relations.
    Returns (T0, T1, T0v, T1v).
    """
    t1, t2, t3, t4 = params() if pars is None else pars
    tb1, tb2, tb3, tb4 = (tbar(t) for t in (t1, t2, t3, t4))
    h = FracMulti(Q ** 2 * tb1 * X ** 2 + Q * tb2 * X, (ONE - Q ** 2 * X ** 2,))
    # sY normal-orders to Y^-1 s
    sY = SkewOp.from_coeff(ONE, -1, 1)
    T0 = t1 * sY - h * (1 - sY)
    g = FracMulti(tb3 + tb4 * X, (ONE - X ** 2,))
    s = SkewOp.gen_s()
    T1op = t3 * s + g * (1 - s)
    T0v = Q * (T0 - tb1) * SkewOp.gen_X()
    T1v = SkewOp.gen_X(-1) * (T1op - tb3)
    return T0, T1op, T0v, T1v


def t1_minus(pars=None):
    """Sign-representation Demazure operator
    T1^- = t3^-1 s + (tb3 + tb4 X)/(1 - X^2) (1 + s)."""
    _, _, t3, t4 = params() if pars is None else pars
    g = FracMulti(tbar(t3) + tbar(t4) * X, (ONE - X ** 2,))
    s = SkewOp.gen_s()
    return t3.inverse() * s + g * (1 + s)


def askey_wilson(pars=None):
    """Closed form of the deformed longitude at t3 = t4 = 1:

        L = A(X)(Y - 1) + A(X^-1)(Y^-1 - 1) + t1 + t1^-1,
        A(X) = (t1^-1 q X^-1 - t2 + t2^-1 - t1 q^-1 X) / (q X^-1 - q^-1 X).

    Note: this equals s T0 + T0^-1 s only up to a multiple of (s - 1); both
    agree on reflection-invariant module elements (see longitude_t).
    """
    t1, t2, _, _ = params() if pars is None else pars
    num = t1.inverse() * Q * X ** -1 - tbar(t2) - t1 * Q ** -1 * X
    den = Q * X ** -1 - Q ** -1 * X
    A = FracMulti(num, (den,))
    Ainv = A.substitute_all({"X": X ** -1})
    Y = SkewOp.gen_Y()
    Yi = SkewOp.gen_Y(-1)
    return A * (Y - 1) + Ainv * (Yi - 1) + (t1 + t1.inverse())


def longitude_t(pars=None):
    """The deformed longitude s T0 + T0^-1 s (t3 = t4 = 1); the operator used
    to define the 3-variable polynomials."""
    t1, t2, _, _ = params() if pars is None else pars
    T0, _, _, _ = dunkl_generators((t1, t2, LaurentPoly.const(1), LaurentPoly.const(1)))
    s = SkewOp.gen_s()
    return s * T0 + (T0 - tbar(t1)) * s


def fg_curve(m, l):
    """Image of the (m,l) torus curve: e_{m,l} + e_{-m,-l} with
    e_{r,s} = q^{-rs} X^r Y^s.  Equals T_d evaluated at the primitive curve."""
    if m == 0 and l == 0:
        raise ValueError("(0,0) is not a curve")
    return (SkewOp.from_coeff(lp(1, q=-m * l, X=m), l, 0)
            + SkewOp.from_coeff(lp(1, q=m * l, X=-m), -l, 0))


def twisted_a1_generators(t=None):
    """The twisted embedding of the 2-parameter rank-1 algebra:
    X -> qX, T -> t sY + tb U0, Y -> t Y + tb s U0,
    with U0 = (1 - q^2 X^2)^-1 (1 - sY)."""
    t = T3 if t is None else (t if isinstance(t, LaurentPoly) else LaurentPoly.const(t))
    tb = tbar(t)
    sY = SkewOp.from_coeff(ONE, -1, 1)
    u0 = FracMulti(ONE, (ONE - Q ** 2 * X ** 2,)) * (1 - sY)
    Xa = SkewOp.from_coeff(Q * X)
    Ta = t * sY + tb * u0
    Ya = t * SkewOp.gen_Y() + tb * SkewOp.gen_s() * u0
    return Xa, Ta, Ya


# -- generic-weight evaluation ----------------------------------------------------
#
# The module Q(q,t)(X)[U^±1]-span{W, W^-1} with
#     X.(f W^k) = (X f) W^k,   yhat.(f W) = U f(q^-2 X) W,
#     yhat.(f W^-1) = U^-1 f(q^-2 X) W^-1,   s.(f W) = f(X^-1) W^-1
# is a faithful test module: an operator with coefficients
# c_{i,e}(X) kills W iff the U-expansions sum c_{i,0} U^i and
# sum c_{i,1} U^-i both vanish, i.e. iff every coefficient is zero.
# Evaluating relation words on W right-to-left avoids building large
# normal-ordered products.


class WeightVector:
    """Pair of component tuples (coefficients of W and of W^-1).  Rank 1 for
    scalar operators; rank n when the coefficients are n x n matrices."""

    __slots__ = ("plus", "minus")

    def __init__(self, plus, minus):
        self.plus = tuple(FracMulti._coerce(p) for p in plus)
        self.minus = tuple(FracMulti._coerce(m) for m in minus)

    @staticmethod
    def basis(rank=1, index=0):
        zero = FracMulti.from_poly(LaurentPoly.zero())
        one = FracMulti.from_poly(ONE)
        plus = [one if i == index else zero for i in range(rank)]
        return WeightVector(plus, [zero] * rank)

    def __add__(self, other):
        return WeightVector([a + b for a, b in zip(self.plus, other.plus)],
                            [a + b for a, b in zip(self.minus, other.minus)])

    def scale(self, c):
        c = FracMulti._coerce(c)
        return WeightVector([c * p for p in self.plus], [c * m for m in self.minus])

    def is_zero(self):
        return all(p.is_zero() for p in self.plus) and \
            all(m.is_zero() for m in self.minus)

    def __eq__(self, other):
        return all(a == b for a, b in zip(self.plus, other.plus)) and \
            all(a == b for a, b in zip(self.minus, other.minus))


_UVAR = LaurentPoly.var("U")


def apply_to_weight(op, elem):
    """Apply a SkewOp (scalar or matrix coefficients) to a WeightVector."""
    out = None
    for (i, eps), c in op.terms.items():
        plus, minus = elem.plus, elem.minus
        if eps:
            plus, minus = (tuple(m.substitute_all({"X": X ** -1}) for m in minus),
                           tuple(p.substitute_all({"X": X ** -1}) for p in plus))
        if i:
            shift = _shift_value(i, 0, op.q_value)  # X -> q^{-2i} X
            up = FracMulti.from_poly(_UVAR ** i)
            um = FracMulti.from_poly(_UVAR ** -i)
            plus = tuple(up * p.substitute_all({"X": shift}) for p in plus)
            minus = tuple(um * m.substitute_all({"X": shift}) for m in minus)
        if isinstance(c, FracMatrix):
            n = c.size
            plus = tuple(_dot(c.rows[r], plus) for r in range(n))
            minus = tuple(_dot(c.rows[r], minus) for r in range(n))
        else:
            plus = tuple(c * p for p in plus)
            minus = tuple(c * m for m in minus)
        term = WeightVector(plus, minus)
        out = term if out is None else out + term
    if out is None:
        zero = FracMulti.from_poly(LaurentPoly.zero())
        rank = len(elem.plus)
        out = WeightVector([zero] * rank, [zero] * rank)
    return out


def _dot(row, vec):
    s = row[0] * vec[0]
    for a, b in zip(row[1:], vec[1:]):
        s = s + a * b
    return s


def eval_word_on_weight(rel, assignment, elem):
    """Evaluate a noncommutative polynomial on a weight element, applying
    word factors right-to-left; complete zero test without forming products."""
    acc = None
    for coeff, word in rel:
        cur = elem
        for g in reversed(word):
            cur = apply_to_weight(assignment[g], cur)
        cur = cur.scale(coeff if isinstance(coeff, (LaurentPoly, FracMulti))
                        else LaurentPoly.const(coeff))
        acc = cur if acc is None else acc + cur
    return acc


def check_relations_on_weight(pres, assignment, rank=1):
    """Relation check via the faithful weight module; returns
    (relation name, residual WeightVector) pairs, one per basis vector."""
    report = []
    for rname, rel in pres.relations:
        for j in range(rank):
            res = eval_word_on_weight(rel, assignment, WeightVector.basis(rank, j))
            report.append(("%s[b%d]" % (rname, j) if rank > 1 else rname, res))
    return report


# -- presentations and the relation checker --------------------------------------


class Presentation:
    """Generator names plus relation words.  A relation is a formal
    noncommutative polynomial: list of (scalar coefficient, word) pairs,
    each word a tuple of generator names; the relation asserts the sum is 0.
    """

    def __init__(self, name, generators, relations):
        self.name = name
        self.generators = tuple(generators)
        self.relations = tuple(relations)
        for _, rel in self.relations:
            for _, word in rel:
                for g in word:
                    if g not in self.generators:
                        raise ValueError("relation uses undeclared generator %r" % g)


def eval_word(rel, assignment, unit):
    """Evaluate a noncommutative polynomial for the given assignment."""
    acc = None
    for coeff, word in rel:
        term = unit
        for g in word:
            term = term * assignment[g]
        term = _scale(term, coeff)
        acc = term if acc is None else acc + term
    return acc if acc is not None else unit - unit


def _scale(op, coeff):
    if isinstance(coeff, (int, Fraction)):
        if coeff == 1:
            return op
        coeff = LaurentPoly.const(coeff)
    return coeff * op


def check_relations(pres, assignment, unit=None):
    """Evaluate every relation; returns a list of (relation name, residual).
    A presentation holds exactly when every residual is zero."""
    for g in pres.generators:
        if g not in assignment:
            raise ValueError("generator %r not assigned" % g)
    if unit is None:
        some = next(iter(assignment.values()))
        unit = some.one_like()
    report = []
    for rname, rel in pres.relations:
        residual = eval_word(rel, assignment, unit)
        report.append((rname, residual))
    return report


def all_zero(report):
    return all(res.is_zero() for _, res in report)


def report_to_json(report):
    return [{"relation": name,
             "residual_terms": 0 if res.is_zero() else len(res.terms),
             "status": "pass" if res.is_zero() else "fail"}
            for name, res in report]


def _quad(gen, t):
    """(G - t)(G + t^-1) = G^2 - (t - t^-1) G - 1, as a relation word."""
    return [(1, (gen, gen)), (-tbar(t), (gen,)), (-1, ())]


def daha_presentation(pars=None):
    """The five defining relations of the 5-parameter rank-1 algebra."""
    t1, t2, t3, t4 = params() if pars is None else pars
    rels = [
        ("quad_T0", _quad("T0", t1)),
        ("quad_T0v", _quad("T0v", t2)),
        ("quad_T1", _quad("T1", t3)),
        ("quad_T1v", _quad("T1v", t4)),
        ("product_q", [(1, ("T1v", "T1", "T0", "T0v")), (-Q, ())]),
    ]
    return Presentation("daha_cc1", ("T0", "T1", "T0v", "T1v"), rels)


def crossed_product_presentation():
    """s X = X^-1 s, s Y = Y^-1 s, s^2 = 1, X Y = q^2 Y X (with inverses)."""
    rels = [
        ("sX", [(1, ("s", "X")), (-1, ("Xi", "s"))]),
        ("sY", [(1, ("s", "Y")), (-1, ("Yi", "s"))]),
        ("s2", [(1, ("s", "s")), (-1, ())]),
        ("XY", [(1, ("X", "Y")), (-Q ** 2, ("Y", "X"))]),
        ("XXi", [(1, ("X", "Xi")), (-1, ())]),
        ("YYi", [(1, ("Y", "Yi")), (-1, ())]),
    ]
    return Presentation("crossed_product", ("X", "Xi", "Y", "Yi", "s"), rels)


def xyt_presentation(pars=None):
    """The alternative generating set X, Y = T1 T0, T = T1:

        X T = T^-1 X^-1 - tb4
        T^-1 Y = Y^-1 T + tb1
        T^2 = 1 + tb3 T
        T X Y = q^2 T^-1 Y X - q^2 tb1 X - q tb2 - tb4 Y
    """
    t1, t2, t3, t4 = params() if pars is None else pars
    tb1, tb2, tb3, tb4 = (tbar(t) for t in (t1, t2, t3, t4))
    rels = [
        ("XT", [(1, ("X", "T")), (-1, ("Ti", "Xi")), (tb4, ())]),
        ("TiY", [(1, ("Ti", "Y")), (-1, ("Yi", "T")), (-tb1, ())]),
        ("T2", [(1, ("T", "T")), (-1, ()), (-tb3, ("T",))]),
        ("TXY", [(1, ("T", "X", "Y")), (-Q ** 2, ("Ti", "Y", "X")),
                 (Q ** 2 * tb1, ("X",)), (Q * tb2, ()), (tb4, ("Y",))]),
    ]
    return Presentation("xyt", ("X", "Xi", "T", "Ti", "Y", "Yi"), rels)


def xyt_assignment(pars=None):
    t1, t2, t3, t4 = params() if pars is None else pars
    T0, T1op, _, _ = dunkl_generators((t1, t2, t3, t4))
    T0i = T0 - tbar(t1)
    T1i = T1op - tbar(t3)
    return {
        "X": SkewOp.gen_X(), "Xi": SkewOp.gen_X(-1),
        "T": T1op, "Ti": T1i,
        "Y": T1op * T0, "Yi": T0i * T1i,
    }


def bp_torus_presentation():
    """Skein algebra of the torus on the curves x, y, z:
    [x,y]_q = (q^2-q^-2) z (and cyclic), plus the cubic Casimir relation."""
    c = Q ** 2 - Q ** -2
    rels = [
        ("xy", [(Q, ("x", "y")), (-(Q ** -1), ("y", "x")), (-c, ("z",))]),
        ("zx", [(Q, ("z", "x")), (-(Q ** -1), ("x", "z")), (-c, ("y",))]),
        ("yz", [(Q, ("y", "z")), (-(Q ** -1), ("z", "y")), (-c, ("x",))]),
        ("casimir", [(Q ** 2, ("x", "x")), (Q ** -2, ("y", "y")), (Q ** 2, ("z", "z")),
                     (-Q, ("x", "y", "z")), (LaurentPoly.const(-2) * (Q ** 2 + Q ** -2), ())]),
    ]
    return Presentation("bp_torus", ("x", "y", "z"), rels)


def bp_torus_assignment():
    return {"x": fg_curve(1, 0), "y": fg_curve(0, 1), "z": fg_curve(1, 1)}


def a1_twisted_presentation(t=None):
    """Relations satisfied by the twisted rank-1 embedding:

        T X T = X^-1,  T Y^-1 T = Y,  (T - t)(T + t^-1) = 0,  X Y = q^2 Y X T^2.

    The quadratic carries eigenvalues t and -t^-1 (the constant function is a
    t-eigenvector of the twisted Demazure operator), and the last relation is
    the standard one, not its image under the inverting dictionary; the two
    published parameter dictionaries for this rank-1 specialization differ by
    t <-> t^-1, and this presentation records the variant that actually holds
    for these operators."""
    t = T3 if t is None else (t if isinstance(t, LaurentPoly) else LaurentPoly.const(t))
    rels = [
        ("TXT", [(1, ("T", "X", "T")), (-1, ("Xi",))]),
        ("TYiT", [(1, ("T", "Yi", "T")), (-1, ("Y",))]),
        ("quad_T", _quad("T", t)),
        ("XY", [(1, ("X", "Y")), (-Q ** 2, ("Y", "X", "T", "T"))]),
        ("XXi", [(1, ("X", "Xi")), (-1, ())]),
        ("YYi", [(1, ("Y", "Yi")), (-1, ())]),
    ]
    return Presentation("a1_twisted", ("X", "Xi", "T", "Ti", "Y", "Yi"), rels)


def a1_twisted_assignment(t=None):
    t = T3 if t is None else (t if isinstance(t, LaurentPoly) else LaurentPoly.const(t))
    Xa, Ta, Ya = twisted_a1_generators(t)
    Ti = Ta - tbar(t)
    # Y^-1 = (twisted image of T1^-1 s yhat^-1) = (T - tb) s
    Yi = Ti * SkewOp.gen_s()
    return {"X": Xa, "Xi": SkewOp.from_coeff(Q ** -1 * X ** -1),
            "T": Ta, "Ti": Ti, "Y": Ya, "Yi": Yi}


# -- the spherical (Koornwinder) presentation -------------------------------------


def spherical_idempotent(pars=None):
    """e = (T1 + t3^-1)/(t3 + t3^-1)."""
    _, _, t3, _ = params() if pars is None else pars
    _, T1op, _, _ = dunkl_generators(params() if pars is None else pars)
    scale = FracMulti(ONE, (t3 + t3.inverse(),))
    return scale * (T1op + t3.inverse())


def spherical_constants(pars=None):
    """The structure constants of the spherical presentation, derived from
    the parameter polynomials:

        B  = (tb2*(q t3 - q^-1 t3^-1) + tb1*tb4) / (q + q^-1)
        D0 = tb1*(q t3 - q^-1 t3^-1) + tb2*tb4
        D1 = tb1*tb2 + (q t3 - q^-1 t3^-1)*tb4

    B (and Q0) are genuine fractions: the (q+q^-1) factors do not divide the
    numerators, so they are returned as FracMulti.  Q0 is derived from the
    central element of the presentation (see spherical_q0)."""
    t1, t2, t3, t4 = params() if pars is None else pars
    tb1, tb2, tb4 = tbar(t1), tbar(t2), tbar(t4)
    qt3 = Q * t3 - Q ** -1 * t3.inverse()
    B = FracMulti(tb2 * qt3 + tb1 * tb4, (Q + Q ** -1,))
    D0 = FracMulti.from_poly(tb1 * qt3 + tb2 * tb4)
    D1 = FracMulti.from_poly(tb1 * tb2 + qt3 * tb4)
    return B, D0, D1


def spherical_xyz(pars=None):
    """x = (X+X^-1)e, y = (Y+Y^-1)e, z = [x,y]_q/(q^2-q^-2) with Y = T1*T0."""
    pars = params() if pars is None else pars
    t1, t2, t3, t4 = pars
    T0, T1op, _, _ = dunkl_generators(pars)
    e = spherical_idempotent(pars)
    Y = T1op * T0
    Yi = (T0 - tbar(t1)) * (T1op - tbar(t3))
    xop = (SkewOp.gen_X() + SkewOp.gen_X(-1)) * e
    yop = (Y + Yi) * e
    comm = Q * xop * yop - Q ** -1 * yop * xop
    zop = FracMulti(ONE, (Q ** 2 - Q ** -2,)) * comm
    return xop, yop, zop, e


def spherical_q0(pars=None):
    """The central value Q0, derived from
    Q0*e = -q xyz + q^2 x^2 + q^-2 y^2 + q^2 z^2 - q D1 x - q^-1 D0 y
           - q B (xy - (q-q^-1) z)
    by evaluating both sides on the weight module.  Returns (Q0, residual
    WeightVector); the residual must vanish for the relation to hold."""
    pars = params() if pars is None else pars
    xop, yop, zop, e = spherical_xyz(pars)
    B, D0, D1 = spherical_constants(pars)
    rhs_rel = [(-Q, ("x", "y", "z")), (Q ** 2, ("x", "x")),
               (Q ** -2, ("y", "y")), (Q ** 2, ("z", "z")),
               (-(Q * D1), ("x",)), (-(Q ** -1 * D0), ("y",)),
               (-(Q * B), ("x", "y")), (Q * B * (Q - Q ** -1), ("z",))]
    assignment = {"x": xop, "y": yop, "z": zop, "e": e}
    w = WeightVector.basis()
    rhs_w = eval_word_on_weight(rhs_rel, assignment, w)
    e_w = apply_to_weight(e, w)
    # the multiplier is a scalar in (q, t): extract it at a generic point,
    # then prove the identity with that scalar (residual must vanish)
    q0_raw = rhs_w.plus[0] / e_w.plus[0]
    q0 = q0_raw.substitute_all({"X": Fraction(3), "U": Fraction(5)})
    q0 = FracMulti._coerce(q0)
    residual = rhs_w + e_w.scale(-q0)
    return q0, residual


def koornwinder_check(pars=None):
    """Verify the four spherical relations exactly, via the faithful weight
    module.  Returns (report, Q0)."""
    pars = params() if pars is None else pars
    xop, yop, zop, e = spherical_xyz(pars)
    B, D0, D1 = spherical_constants(pars)
    c2 = Q ** 2 - Q ** -2
    c1 = Q - Q ** -1
    rels = [
        ("xy", [(Q, ("x", "y")), (-(Q ** -1), ("y", "x")), (-c2, ("z",))]),
        ("yz", [(Q, ("y", "z")), (-(Q ** -1), ("z", "y")), (-c2, ("x",)),
                (c1 * B, ("y",)), (c1 * D1, ("e",))]),
        ("zx", [(Q, ("z", "x")), (-(Q ** -1), ("x", "z")), (-c2, ("y",)),
                (c1 * B, ("x",)), (-(c1 * D0), ("e",))]),
    ]
    assignment = {"x": xop, "y": yop, "z": zop, "e": e}
    pres = Presentation("koornwinder", ("x", "y", "z", "e"), rels)
    report = check_relations_on_weight(pres, assignment)
    q0, residual = spherical_q0(pars)
    report.append(("q0_central", residual))
    return report, q0
