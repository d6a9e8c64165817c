"""Exact sparse Laurent-polynomial arithmetic over arbitrary-precision integers.

Values are immutable: every operation returns a fresh canonical object, so
polynomials can be shared freely between threads and used as cache keys.

Representation:

  Monomial          -- tuple of (variable, exponent) pairs, sorted by variable,
                       no zero exponents; exponents may be negative (Laurent).
  Polynomial        -- dict {Monomial: int coefficient}, no zero coefficients.
  FactoredRational  -- numerator Polynomial over a multiset of
                       (factor, multiplicity) pairs; the denominator is never
                       expanded unless asked for.

The canonical term order is graded lexicographic: higher total degree first,
ties broken by the exponent vector over the variables in natural name order
(so "x2" sorts before "x10").  Text and JSON rendering follow this order,
which makes equal polynomials render identically.
"""

from __future__ import annotations

import heapq
from functools import lru_cache
from typing import Iterable, Mapping, Sequence, Union


class NotDivisibleError(ArithmeticError):
    """Exact division was requested but the divisor is not a factor."""


class NonSquareMatrixError(ValueError):
    """det() was handed a ragged or non-square matrix."""


class NonInvertibleSubstitutionError(ValueError):
    """A variable with a negative exponent was bound to a non-unit.

    Only +-1 times a single monomial can be inverted inside the integer
    Laurent ring, so anything else (including 0) is rejected.
    """


@lru_cache(maxsize=None)
def _var_key(name: str) -> tuple[str, int]:
    """Natural ordering key for variable names: trailing digits compare
    numerically, so x2 < x10."""
    head = name.rstrip("0123456789")
    tail = name[len(head):]
    return (head, int(tail) if tail else -1)


class Monomial:
    """A Laurent monomial: finitely many variables raised to nonzero powers.

    The constant monomial 1 is ``Monomial()``.  Instances are immutable and
    hashable; exponents are stored as a sorted tuple of (name, exponent)
    pairs with no zero entries.
    """

    __slots__ = ("exps", "_hash")

    def __init__(self, exps: Union[Mapping[str, int], Iterable[tuple[str, int]]] = ()):
        items = exps.items() if isinstance(exps, Mapping) else exps
        pairs = tuple(sorted(((str(v), int(e)) for v, e in items if int(e) != 0),
                             key=lambda ve: _var_key(ve[0])))
        self.exps = pairs
        self._hash = hash(pairs)

    @classmethod
    def _raw(cls, pairs: tuple[tuple[str, int], ...]) -> "Monomial":
        # Trusted constructor: pairs already sorted, deduplicated, zero-free.
        m = object.__new__(cls)
        m.exps = pairs
        m._hash = hash(pairs)
        return m

    @staticmethod
    def one() -> "Monomial":
        return _ONE_MONOMIAL

    @staticmethod
    def var(name: str, power: int = 1) -> "Monomial":
        return Monomial(((name, power),))

    @property
    def is_constant(self) -> bool:
        return not self.exps

    @property
    def total_degree(self) -> int:
        return sum(e for _, e in self.exps)

    def exponent(self, name: str) -> int:
        for v, e in self.exps:
            if v == name:
                return e
        return 0

    def variables(self) -> tuple[str, ...]:
        return tuple(v for v, _ in self.exps)

    def __mul__(self, other: "Monomial") -> "Monomial":
        a, b = self.exps, other.exps
        if not a:
            return other
        if not b:
            return self
        out: list[tuple[str, int]] = []
        i = j = 0
        while i < len(a) and j < len(b):
            va, ea = a[i]
            vb, eb = b[j]
            if va == vb:
                e = ea + eb
                if e:
                    out.append((va, e))
                i += 1
                j += 1
            elif _var_key(va) < _var_key(vb):
                out.append(a[i])
                i += 1
            else:
                out.append(b[j])
                j += 1
        out.extend(a[i:])
        out.extend(b[j:])
        return Monomial._raw(tuple(out))

    def __pow__(self, k: int) -> "Monomial":
        if k == 0:
            return _ONE_MONOMIAL
        if k == 1:
            return self
        return Monomial._raw(tuple((v, e * k) for v, e in self.exps))

    def rename(self, mapping: Mapping[str, str]) -> "Monomial":
        """Rename variables; the mapping is expected to be injective."""
        if not any(v in mapping for v, _ in self.exps):
            return self
        return Monomial((mapping.get(v, v), e) for v, e in self.exps)

    def without(self, name: str) -> "Monomial":
        return Monomial._raw(tuple(p for p in self.exps if p[0] != name))

    def to_text(self) -> str:
        if not self.exps:
            return "1"
        return "*".join(v if e == 1 else f"{v}^{e}" for v, e in self.exps)

    def __eq__(self, other) -> bool:
        return isinstance(other, Monomial) and self.exps == other.exps

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"Monomial({self.to_text()})"


_ONE_MONOMIAL = Monomial()


class Polynomial:
    """Sparse Laurent polynomial with exact integer coefficients.

    Terms live in ``self.terms`` as ``{Monomial: int}`` with no zero
    coefficients; treat instances as immutable.  Arithmetic operators accept
    plain ints on either side.
    """

    __slots__ = ("terms", "_hash")

    def __init__(self, terms: Union[Mapping[Monomial, int], Iterable[tuple[Monomial, int]], None] = None):
        data: dict[Monomial, int] = {}
        if terms:
            items = terms.items() if isinstance(terms, Mapping) else terms
            for mono, coeff in items:
                if not isinstance(mono, Monomial):
                    raise TypeError(f"polynomial keys must be Monomial, got {type(mono).__name__}")
                c = data.get(mono, 0) + int(coeff)
                if c:
                    data[mono] = c
                elif mono in data:
                    del data[mono]
        self.terms = data
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict[Monomial, int]) -> "Polynomial":
        # Trusted constructor: dict already canonical (no zero coefficients).
        p = object.__new__(cls)
        p.terms = terms
        p._hash = None
        return p

    # -- constructors -----------------------------------------------------

    @staticmethod
    def zero() -> "Polynomial":
        return _ZERO

    @staticmethod
    def one() -> "Polynomial":
        return _ONE

    @staticmethod
    def constant(c: int) -> "Polynomial":
        c = int(c)
        if c == 0:
            return _ZERO
        return Polynomial._raw({_ONE_MONOMIAL: c})

    @staticmethod
    def variable(name: str) -> "Polynomial":
        return Polynomial._raw({Monomial.var(name): 1})

    @staticmethod
    def term(mono: Monomial, coeff: int = 1) -> "Polynomial":
        coeff = int(coeff)
        if coeff == 0:
            return _ZERO
        return Polynomial._raw({mono: coeff})

    # -- ring structure ----------------------------------------------------

    def __add__(self, other) -> "Polynomial":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if not other.terms:
            return self
        if not self.terms:
            return other
        out = dict(self.terms)
        for mono, coeff in other.terms.items():
            c = out.get(mono, 0) + coeff
            if c:
                out[mono] = c
            elif mono in out:
                del out[mono]
        return Polynomial._raw(out)

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        return Polynomial._raw({m: -c for m, c in self.terms.items()})

    def __sub__(self, other) -> "Polynomial":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "Polynomial":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other) -> "Polynomial":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self.terms, other.terms
        if not a or not b:
            return _ZERO
        if len(a) > len(b):
            a, b = b, a
        out: dict[Monomial, int] = {}
        for ma, ca in a.items():
            for mb, cb in b.items():
                m = ma * mb
                c = out.get(m, 0) + ca * cb
                if c:
                    out[m] = c
                elif m in out:
                    del out[m]
        return Polynomial._raw(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "Polynomial":
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            raise ValueError("negative polynomial powers are not defined; invert a Monomial instead")
        result = _ONE
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = Polynomial.constant(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    # -- inspection ----------------------------------------------------------

    def coefficient(self, mono: Monomial) -> int:
        return self.terms.get(mono, 0)

    @property
    def constant_term(self) -> int:
        return self.terms.get(_ONE_MONOMIAL, 0)

    @property
    def is_constant(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and _ONE_MONOMIAL in self.terms)

    def variables(self) -> tuple[str, ...]:
        names = {v for m in self.terms for v, _ in m.exps}
        return tuple(sorted(names, key=_var_key))

    def total_degree(self) -> int:
        """Maximum total degree over all terms (0 for the zero polynomial)."""
        if not self.terms:
            return 0
        return max(m.total_degree for m in self.terms)

    def sorted_terms(self) -> list[tuple[Monomial, int]]:
        """Terms in canonical order: graded lexicographic, descending."""
        names = self.variables()
        index = {v: i for i, v in enumerate(names)}

        def key(item):
            mono = item[0]
            vec = [0] * len(names)
            for v, e in mono.exps:
                vec[index[v]] = e
            return (mono.total_degree, tuple(vec))

        return sorted(self.terms.items(), key=key, reverse=True)

    def sort_key(self):
        """A deterministic total-order key (used to order denominator factors)."""
        return (self.total_degree(), len(self.terms),
                tuple(sorted((m.exps, c) for m, c in self.terms.items())))

    # -- operations ---------------------------------------------------------

    def substitute(self, bindings: Mapping[str, Union["Polynomial", Monomial, int]]) -> "Polynomial":
        """Simultaneously substitute variables by polynomials.

        A variable occurring with a negative exponent may only be bound to a
        unit (+-1 times a single monomial); anything else raises
        NonInvertibleSubstitutionError.
        """
        bind = {v: _as_polynomial(val) for v, val in bindings.items()}
        out = _ZERO
        powers: dict[tuple[str, int], Polynomial] = {}
        for mono, coeff in self.terms.items():
            free: list[tuple[str, int]] = []
            acc = Polynomial.constant(coeff)
            for v, e in mono.exps:
                val = bind.get(v)
                if val is None:
                    free.append((v, e))
                    continue
                if e >= 0:
                    p = powers.get((v, e))
                    if p is None:
                        p = val ** e
                        powers[(v, e)] = p
                    acc = acc * p
                else:
                    unit = _as_unit(val)
                    if unit is None:
                        raise NonInvertibleSubstitutionError(
                            f"cannot substitute {val!r} into {v}^{e}: "
                            "negative powers need a +-1 monomial binding")
                    umono, usign = unit
                    sign = -1 if (usign == -1 and e % 2) else 1
                    acc = acc * Polynomial.term(umono ** e, sign)
            if free:
                acc = acc * Polynomial.term(Monomial._raw(tuple(free)))
            out = out + acc
        return out

    def rename_variables(self, mapping: Mapping[str, str]) -> "Polynomial":
        """Rename variables via an injective map (cheap path for permutations)."""
        out: dict[Monomial, int] = {}
        for mono, c in self.terms.items():
            m = mono.rename(mapping)
            cc = out.get(m, 0) + c
            if cc:
                out[m] = cc
            elif m in out:
                del out[m]
        return Polynomial._raw(out)

    def truncated(self, max_total_degree: int) -> "Polynomial":
        """Drop every term of total degree above the bound."""
        return Polynomial._raw(
            {m: c for m, c in self.terms.items() if m.total_degree <= max_total_degree})

    def laurent_coefficients(self, name: str, lo: int, hi: int) -> list["Polynomial"]:
        """Coefficient polynomials of name^lo .. name^hi; each is free of name."""
        if lo > hi:
            raise ValueError(f"empty exponent window [{lo}, {hi}]")
        buckets: list[dict[Monomial, int]] = [{} for _ in range(hi - lo + 1)]
        for mono, c in self.terms.items():
            d = mono.exponent(name)
            if lo <= d <= hi:
                buckets[d - lo][mono.without(name)] = c
        return [Polynomial._raw(b) for b in buckets]

    # -- rendering ------------------------------------------------------------

    def to_text(self) -> str:
        """Canonical rendering, e.g. ``-1*x1^2*y + 3`` (terms in graded-lex
        descending order, explicit coefficients except on bare constants)."""
        if not self.terms:
            return "0"
        parts: list[str] = []
        for i, (mono, coeff) in enumerate(self.sorted_terms()):
            mag = abs(coeff)
            body = str(mag) if mono.is_constant else f"{mag}*{mono.to_text()}"
            if i == 0:
                parts.append(body if coeff > 0 else f"-{body}")
            else:
                parts.append(f" + {body}" if coeff > 0 else f" - {body}")
        return "".join(parts)

    def to_json_obj(self) -> list[dict]:
        """JSON-ready form: a canonical-order list of ``{coeff, exps}`` terms.

        Coefficients are decimal strings so arbitrary precision survives any
        JSON reader.
        """
        return [{"coeff": str(c), "exps": {v: e for v, e in m.exps}}
                for m, c in self.sorted_terms()]

    def __str__(self) -> str:
        return self.to_text()

    def __repr__(self) -> str:
        return f"Polynomial({self.to_text()})"


_ZERO = Polynomial._raw({})
_ONE = Polynomial._raw({_ONE_MONOMIAL: 1})


def _coerce(value) -> Polynomial:
    if isinstance(value, Polynomial):
        return value
    if isinstance(value, int):
        return Polynomial.constant(value)
    return NotImplemented


def _as_polynomial(value) -> Polynomial:
    if isinstance(value, Polynomial):
        return value
    if isinstance(value, Monomial):
        return Polynomial.term(value)
    if isinstance(value, int):
        return Polynomial.constant(value)
    raise TypeError(f"cannot interpret {value!r} as a polynomial")


def _as_unit(p: Polynomial):
    """Return (monomial, sign) when p is +-1 times a monomial, else None."""
    if len(p.terms) != 1:
        return None
    (mono, coeff), = p.terms.items()
    if coeff == 1 or coeff == -1:
        return mono, coeff
    return None


def _monomial_content(p: Polynomial) -> Monomial:
    """Largest monomial m such that p / m still has all exponents >= 0,
    treating a variable absent from a term as exponent 0."""
    nterms = len(p.terms)
    # per variable: (number of terms it occurs in, minimum exponent seen)
    seen: dict[str, tuple[int, int]] = {}
    for mono in p.terms:
        for v, e in mono.exps:
            cnt, mn = seen.get(v, (0, e))
            seen[v] = (cnt + 1, min(mn, e))
    pairs = []
    for v, (cnt, mn) in seen.items():
        lo = mn if cnt == nterms else min(mn, 0)
        if lo:
            pairs.append((v, lo))
    return Monomial(pairs)


def exact_div(a, b) -> Polynomial:
    """Exact division in the Laurent-polynomial ring.

    Raises NotDivisibleError when b is not a factor of a, and
    ZeroDivisionError when b is zero.  Content monomials are stripped first,
    after which ordinary graded-lex long division applies; exactness
    guarantees the leading-term quotients stay integral.
    """
    a = _as_polynomial(a)
    b = _as_polynomial(b)
    if not b.terms:
        raise ZeroDivisionError("exact division by the zero polynomial")
    if not a.terms:
        return _ZERO

    ca = _monomial_content(a)
    cb = _monomial_content(b)
    a2 = a * Polynomial.term(ca ** -1) if ca.exps else a
    b2 = b * Polynomial.term(cb ** -1) if cb.exps else b

    names = sorted(set(a2.variables()) | set(b2.variables()), key=_var_key)
    index = {v: i for i, v in enumerate(names)}
    nvars = len(names)

    def heap_key(mono: Monomial):
        # Min-heap entry that pops the graded-lex-largest monomial first.
        vec = [0] * nvars
        for v, e in mono.exps:
            vec[index[v]] = e
        return (-mono.total_degree, tuple(-e for e in vec), mono)

    bt = b2.sorted_terms()
    lead_mono, lead_coeff = bt[0]
    tail = bt[1:]

    remainder = dict(a2.terms)
    heap = [heap_key(m) for m in remainder]
    heapq.heapify(heap)
    quotient: dict[Monomial, int] = {}
    lead_inv = lead_mono ** -1

    while heap:
        mono = heapq.heappop(heap)[2]
        coeff = remainder.pop(mono, 0)
        if not coeff:
            continue
        qm = mono * lead_inv
        if any(e < 0 for _, e in qm.exps):
            raise NotDivisibleError(f"({a}) is not divisible by ({b})")
        qc, rem = divmod(coeff, lead_coeff)
        if rem:
            raise NotDivisibleError(f"({a}) is not divisible by ({b})")
        quotient[qm] = quotient.get(qm, 0) + qc
        for bm, bc in tail:
            mm = qm * bm
            c = remainder.get(mm, 0) - qc * bc
            if c:
                if mm not in remainder:
                    heapq.heappush(heap, heap_key(mm))
                remainder[mm] = c
            elif mm in remainder:
                del remainder[mm]

    shift = ca * (cb ** -1)
    q = Polynomial._raw({m: c for m, c in quotient.items() if c})
    if shift.exps:
        q = q * Polynomial.term(shift)
    return q


def det(matrix: Sequence[Sequence]) -> Polynomial:
    """Exact determinant of a square matrix of polynomials (or ints).

    Division-free cofactor expansion, memoized on the set of surviving
    columns; the empty matrix has determinant 1.
    """
    rows = [[_as_polynomial(entry) for entry in row] for row in matrix]
    n = len(rows)
    if any(len(row) != n for row in rows):
        raise NonSquareMatrixError(f"expected a square matrix, got row lengths {[len(r) for r in rows]}")
    if n == 0:
        return _ONE

    memo: dict[tuple[int, ...], Polynomial] = {}

    def minor(cols: tuple[int, ...]) -> Polynomial:
        if len(cols) == 1:
            return rows[n - 1][cols[0]]
        cached = memo.get(cols)
        if cached is not None:
            return cached
        r = n - len(cols)
        acc = _ZERO
        sign = 1
        for pos, c in enumerate(cols):
            entry = rows[r][c]
            if entry.terms:
                sub = minor(cols[:pos] + cols[pos + 1:])
                acc = acc + entry * sub if sign > 0 else acc - entry * sub
            sign = -sign
        memo[cols] = acc
        return acc

    return minor(tuple(range(n)))


def series_inverse(p: Polynomial, order: int) -> Polynomial:
    """Multiplicative inverse of p as a power series, truncated to the given
    total degree.  Requires constant term +-1 and no negative exponents."""
    c0 = p.constant_term
    if c0 not in (1, -1):
        raise ValueError(f"series inverse needs constant term +-1, got {c0}")
    u = p - c0
    if any(e < 0 for m in u.terms for _, e in m.exps):
        raise ValueError("series inverse is only defined for ordinary (non-Laurent) polynomials")
    if u.terms and min(m.total_degree for m in u.terms) < 1:
        raise ValueError("series inverse needs every non-constant term to have positive degree")
    acc = _ONE
    power = _ONE
    step = (-c0) * u
    for _ in range(order):
        power = (power * step).truncated(order)
        if not power.terms:
            break
        acc = acc + power
    return acc if c0 == 1 else -acc


class FactoredRational:
    """A polynomial numerator over a multiset of denominator factors.

    The denominator stays in factored form ``prod factor^multiplicity``.
    The only simplification this class ever performs is syntactic: factors
    equal to 1 are dropped on construction, and ``cancelled()`` removes
    factor occurrences that divide the numerator exactly.  Structural
    equality (==) compares numerator and factor multiset; use
    ``rational_equal`` for equality as rational functions.
    """

    __slots__ = ("numerator", "factors", "_hash")

    def __init__(self, numerator, factors: Iterable = ()):
        self.numerator = _as_polynomial(numerator)
        merged: dict[Polynomial, int] = {}
        for item in factors:
            if isinstance(item, (Polynomial, Monomial, int)):
                f, mult = _as_polynomial(item), 1
            else:
                f, mult = item
                f = _as_polynomial(f)
                mult = int(mult)
            if mult < 1:
                raise ValueError(f"factor multiplicity must be >= 1, got {mult}")
            if not f.terms:
                raise ZeroDivisionError("zero polynomial as a denominator factor")
            if f == _ONE:
                continue
            merged[f] = merged.get(f, 0) + mult
        self.factors = tuple(sorted(merged.items(), key=lambda fm: fm[0].sort_key()))
        self._hash = None

    @property
    def is_polynomial(self) -> bool:
        return not self.factors

    def denominator(self) -> Polynomial:
        out = _ONE
        for f, mult in self.factors:
            out = out * f ** mult
        return out

    def cancelled(self) -> "FactoredRational":
        """Remove factor occurrences that divide the numerator exactly."""
        num = self.numerator
        remaining: list[tuple[Polynomial, int]] = []
        for f, mult in self.factors:
            while mult > 0:
                try:
                    num = exact_div(num, f)
                except NotDivisibleError:
                    break
                mult -= 1
            if mult:
                remaining.append((f, mult))
        return FactoredRational(num, remaining)

    def substitute(self, bindings) -> "FactoredRational":
        """Substitute in numerator and factors; factors that become 1 drop out,
        factors that become 0 raise ZeroDivisionError."""
        return FactoredRational(
            self.numerator.substitute(bindings),
            [(f.substitute(bindings), mult) for f, mult in self.factors])

    def series(self, order: int) -> Polynomial:
        """Power-series expansion truncated to the given total degree."""
        if any(e < 0 for m in self.numerator.terms for _, e in m.exps):
            raise ValueError("series expansion needs a numerator without negative exponents")
        out = self.numerator.truncated(order)
        for f, mult in self.factors:
            inv = series_inverse(f, order)
            for _ in range(mult):
                out = (out * inv).truncated(order)
        return out

    def __eq__(self, other) -> bool:
        if not isinstance(other, FactoredRational):
            return NotImplemented
        return self.numerator == other.numerator and self.factors == other.factors

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.numerator, self.factors))
        return self._hash

    def to_text(self) -> str:
        if not self.factors:
            return self.numerator.to_text()
        denom = "*".join(
            f"({f.to_text()})" if mult == 1 else f"({f.to_text()})^{mult}"
            for f, mult in self.factors)
        return f"({self.numerator.to_text()}) / ({denom})"

    def to_json_obj(self) -> dict:
        return {
            "numerator": self.numerator.to_json_obj(),
            "denominator_factors": [
                {"factor": f.to_json_obj(), "multiplicity": mult}
                for f, mult in self.factors],
        }

    def __str__(self) -> str:
        return self.to_text()

    def __repr__(self) -> str:
        return f"FactoredRational({self.to_text()})"


def rational_equal(a: FactoredRational, b: FactoredRational) -> bool:
    """Equality as rational functions (cross-multiplied exact comparison)."""
    if a.factors == b.factors:
        return a.numerator == b.numerator
    return a.numerator * b.denominator() == b.numerator * a.denominator()
