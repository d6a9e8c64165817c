"""Partitions, alphabets, and the classical symmetric-function toolkit.

An Alphabet is an ordered list of monomial "letters"; the constant letter 1
is allowed and letters may repeat.  Complete and elementary symmetric
functions are computed by one-letter-at-a-time recurrences and memoized.
Schur functions come in two forms: a determinant of complete functions
(``schur_jt``, defined for arbitrary integer exponent vectors) and a ratio
of alternants (``schur_bialternant``, requiring distinct letters).

``pi_omega`` is the symmetrizing operator that sends a monomial to the Schur
function of its exponent vector, and ``lagrange_op`` the interpolation-style
summation over choices of a distinguished variable.  Both act on alphabets
of distinct plain variables.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import permutations
from typing import Iterable, Iterator, Sequence, Union

from .algebra import (
    FactoredRational,
    Monomial,
    NotDivisibleError,
    Polynomial,
    det,
    exact_div,
)


class RepeatedGeneratorsError(ValueError):
    """An operation that needs pairwise-distinct letters got repeats."""


class LengthMismatchError(ValueError):
    """A partition is longer than the alphabet it is evaluated on."""


class ValidityBoundError(ValueError):
    """pi_omega was given a monomial outside its validity region.

    The symmetrizer only provably matches the Schur determinant when the
    exponent of the i-th variable (1-based) exceeds i - n - 1; anything
    below that bound is refused rather than answered unreliably.
    """


class NotSymmetricError(ValueError):
    """lagrange_op needs its input symmetric in the non-distinguished variables."""


class Partition:
    """A weakly decreasing tuple of positive integers."""

    __slots__ = ("parts",)

    def __init__(self, parts: Iterable[int] = ()):
        ps = tuple(int(p) for p in parts)
        for i, p in enumerate(ps):
            if p < 1:
                raise ValueError(f"partition parts must be positive, got {ps}")
            if i and ps[i - 1] < p:
                raise ValueError(f"partition parts must be weakly decreasing, got {ps}")
        self.parts = ps

    @property
    def weight(self) -> int:
        return sum(self.parts)

    def conjugate(self) -> "Partition":
        """Transpose of the diagram: part j counts the parts of self >= j+1."""
        if not self.parts:
            return self
        return Partition(sum(1 for p in self.parts if p > j) for j in range(self.parts[0]))

    def padded(self, length: int) -> tuple[int, ...]:
        if length < len(self.parts):
            raise ValueError(f"cannot pad {self.parts} down to length {length}")
        return self.parts + (0,) * (length - len(self.parts))

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __getitem__(self, i):
        return self.parts[i]

    def __eq__(self, other) -> bool:
        return isinstance(other, Partition) and self.parts == other.parts

    def __hash__(self) -> int:
        return hash(self.parts)

    def __repr__(self) -> str:
        return f"Partition({list(self.parts)})"


def _partition_tuples(n: int, max_part: int, max_length: int) -> Iterator[tuple[int, ...]]:
    # Tuples of weight n in lexicographically ascending order.
    if n == 0:
        yield ()
        return
    if max_length <= 0 or max_part <= 0:
        return
    smallest_first = -(-n // max_length)  # ceil: first part can't be smaller
    for first in range(max(1, smallest_first), min(n, max_part) + 1):
        for rest in _partition_tuples(n - first, first, max_length - 1):
            yield (first,) + rest


def partitions_of_weight(n: int, max_part: int | None = None,
                         max_length: int | None = None) -> Iterator[Partition]:
    """All partitions of n (optionally bounded), lexicographically ascending."""
    if n < 0:
        raise ValueError("weight must be >= 0")
    mp = n if max_part is None else min(max_part, n)
    ml = n if max_length is None else min(max_length, n)
    for t in _partition_tuples(n, mp, ml):
        yield Partition(t)


def partitions_in_box(max_length: int, max_part: int) -> Iterator[Partition]:
    """All partitions with at most max_length parts, each at most max_part.

    Ordered by weight ascending, then lexicographically ascending.
    """
    if max_length < 0 or max_part < 0:
        raise ValueError("box dimensions must be >= 0")
    for weight in range(max_length * max_part + 1):
        yield from partitions_of_weight(weight, max_part, max_length)


class Alphabet:
    """An ordered list of monomial letters.

    Letters may be given as Monomial instances, variable names, or the
    constant 1.  Alphabets concatenate with ``+``.
    """

    __slots__ = ("generators",)

    def __init__(self, letters: Iterable = ()):
        gens: list[Monomial] = []
        for item in letters:
            if isinstance(item, Monomial):
                gens.append(item)
            elif isinstance(item, str):
                gens.append(Monomial.var(item))
            elif item == 1:
                gens.append(Monomial.one())
            else:
                raise TypeError(f"cannot use {item!r} as an alphabet letter")
        self.generators = tuple(gens)

    def letters(self) -> tuple[Polynomial, ...]:
        return tuple(Polynomial.term(g) for g in self.generators)

    @property
    def has_repeats(self) -> bool:
        return len(set(self.generators)) < len(self.generators)

    @property
    def is_plain_variables(self) -> bool:
        """True when every letter is a single variable to the first power."""
        return all(len(g.exps) == 1 and g.exps[0][1] == 1 for g in self.generators)

    def variable_names(self) -> tuple[str, ...]:
        if not self.is_plain_variables:
            raise ValueError(f"alphabet {self!r} does not consist of plain variables")
        return tuple(g.exps[0][0] for g in self.generators)

    def without(self, index: int) -> "Alphabet":
        return Alphabet(self.generators[:index] + self.generators[index + 1:])

    def __add__(self, other: "Alphabet") -> "Alphabet":
        return Alphabet(self.generators + other.generators)

    def __len__(self) -> int:
        return len(self.generators)

    def __iter__(self) -> Iterator[Monomial]:
        return iter(self.generators)

    def __eq__(self, other) -> bool:
        return isinstance(other, Alphabet) and self.generators == other.generators

    def __hash__(self) -> int:
        return hash(self.generators)

    def __repr__(self) -> str:
        return f"Alphabet([{', '.join(g.to_text() for g in self.generators)}])"


@lru_cache(maxsize=None)
def _complete(j: int, gens: tuple[Monomial, ...]) -> Polynomial:
    if j < 0:
        return Polynomial.zero()
    if j == 0:
        return Polynomial.one()
    if not gens:
        return Polynomial.zero()
    head, last = gens[:-1], gens[-1]
    total = Polynomial.zero()
    for t in range(j + 1):
        part = _complete(j - t, head)
        if part:
            total = total + Polynomial.term(last ** t) * part
    return total


def complete_h(j: int, alphabet: Alphabet) -> Polynomial:
    """Complete homogeneous symmetric function: the sum of all monomials of
    degree j in the letters (0 for j < 0, 1 for j = 0)."""
    return _complete(j, alphabet.generators)


@lru_cache(maxsize=None)
def _elementary(i: int, gens: tuple[Monomial, ...]) -> Polynomial:
    if i < 0 or i > len(gens):
        return Polynomial.zero()
    if i == 0:
        return Polynomial.one()
    head, last = gens[:-1], gens[-1]
    return _elementary(i, head) + Polynomial.term(last) * _elementary(i - 1, head)


def elementary_e(i: int, alphabet: Alphabet) -> Polynomial:
    """Elementary symmetric function: the sum of all products of i distinct
    letters (0 outside 0 <= i <= len(alphabet))."""
    return _elementary(i, alphabet.generators)


def vandermonde(alphabet: Alphabet) -> Polynomial:
    """Product of all pairwise differences (earlier letter minus later)."""
    letters = alphabet.letters()
    out = Polynomial.one()
    for i in range(len(letters)):
        for j in range(i + 1, len(letters)):
            out = out * (letters[i] - letters[j])
    return out


@lru_cache(maxsize=None)
def _schur_determinant(vec: tuple[int, ...], gens: tuple[Monomial, ...]) -> Polynomial:
    n = len(vec)
    if n == 0:
        return Polynomial.one()
    rows = [[_complete(vec[i] - i + j, gens) for j in range(n)] for i in range(n)]
    return det(rows)


def schur_jt(v: Union[Partition, Sequence[int]], alphabet: Alphabet) -> Polynomial:
    """Schur function as a determinant of complete homogeneous functions:
    entry (i, j) is h_{v_i - i + j} (0-based), matrix size len(v).

    Defined for any integer vector; a Partition is first padded with zeros
    to the alphabet size.  Out-of-order or negative vectors straighten to
    +-1 times a partition Schur function, or to 0.
    """
    gens = alphabet.generators
    if isinstance(v, Partition):
        vec = v.padded(max(len(v), len(gens)))
    else:
        vec = tuple(int(e) for e in v)
    return _schur_determinant(vec, gens)


def schur_bialternant(mu: Partition, alphabet: Alphabet) -> Polynomial:
    """Schur function as a ratio of alternants:
    det(letter_i ^ (mu_j + n - j)) / vandermonde, for distinct letters."""
    if not isinstance(mu, Partition):
        mu = Partition(mu)
    if alphabet.has_repeats:
        raise RepeatedGeneratorsError(
            f"bialternant needs pairwise-distinct letters, got {alphabet!r}")
    n = len(alphabet)
    if len(mu) > n:
        raise LengthMismatchError(
            f"partition {mu!r} has more parts than the {n}-letter alphabet")
    exps = mu.padded(n)
    rows = [[Polynomial.term(g ** (exps[j] + n - 1 - j)) for j in range(n)]
            for g in alphabet.generators]
    return exact_div(det(rows), vandermonde(alphabet))


def _distinct_variables(alphabet: Alphabet, op: str) -> tuple[str, ...]:
    if alphabet.has_repeats:
        raise RepeatedGeneratorsError(f"{op} needs pairwise-distinct variables, got {alphabet!r}")
    try:
        return alphabet.variable_names()
    except ValueError:
        raise ValueError(f"{op} is only defined over plain variables, got {alphabet!r}") from None


def _permutation_sign(perm: Sequence[int]) -> int:
    inversions = sum(1 for i in range(len(perm)) for j in range(i + 1, len(perm))
                     if perm[i] > perm[j])
    return -1 if inversions % 2 else 1


def pi_omega(f: Polynomial, alphabet: Alphabet) -> Polynomial:
    """Symmetrize f over the alphabet: multiply by the staircase monomial
    x1^(n-1) x2^(n-2) ... xn^0, antisymmetrize over all variable
    permutations, and divide by the Vandermonde.

    The result is a symmetric polynomial; on a single monomial it is the
    Schur determinant of the exponent vector.  Monomials with the i-th
    exponent at or below i - n - 1 (1-based) are refused with
    ValidityBoundError.  Variables outside the alphabet ride along as
    coefficients.
    """
    names = _distinct_variables(alphabet, "pi_omega")
    n = len(names)
    for mono in f.terms:
        for i, name in enumerate(names):
            e = mono.exponent(name)
            if e <= i - n:  # 0-based form of the bound: exponent > (i+1) - n - 1
                raise ValidityBoundError(
                    f"monomial {mono.to_text()} has {name}^{e}, at or below the "
                    f"validity bound {i - n} for position {i + 1} of {n}")
    staircase = Monomial([(names[i], n - 1 - i) for i in range(n)])
    g = f * Polynomial.term(staircase)
    total = Polynomial.zero()
    for perm in permutations(range(n)):
        mapping = {names[i]: names[perm[i]] for i in range(n) if perm[i] != i}
        image = g.rename_variables(mapping) if mapping else g
        total = total + image if _permutation_sign(perm) > 0 else total - image
    return exact_div(total, vandermonde(alphabet))


def is_symmetric(f: Polynomial, names: Sequence[str]) -> bool:
    """True when f is invariant under all permutations of the given variables
    (checked on adjacent transpositions, which generate the rest)."""
    for i in range(len(names) - 1):
        swap = {names[i]: names[i + 1], names[i + 1]: names[i]}
        if f.rename_variables(swap) != f:
            return False
    return True


def lagrange_op(f: Polynomial, alphabet: Alphabet) -> FactoredRational:
    """Sum over each variable playing the distinguished first role:

        sum_i  f(x_i; rest) / prod_{l != i} (x_i - x_l)

    where f must be symmetric in all variables after the first.  The result
    is returned as a fraction over the full Vandermonde; when the sum
    collapses to a polynomial (as it does for wide classes of inputs) the
    fraction has an empty denominator.
    """
    names = _distinct_variables(alphabet, "lagrange_op")
    n = len(names)
    if n == 0:
        raise ValueError("lagrange_op needs a nonempty alphabet")
    if not is_symmetric(f, names[1:]):
        raise NotSymmetricError(
            f"lagrange_op needs symmetry in {names[1:]}, but {f} is not invariant")
    numerator = Polynomial.zero()
    for i in range(n):
        rest = names[:i] + names[i + 1:]
        mapping = {names[0]: names[i]}
        mapping.update({names[j]: rest[j - 1] for j in range(1, n)})
        f_i = f.rename_variables({k: v for k, v in mapping.items() if k != v})
        # f_i * Delta(rest) carries the sign (-1)^i relative to the full
        # Vandermonde denominator Delta(names).
        contribution = f_i * vandermonde(Alphabet(rest))
        numerator = numerator + contribution if i % 2 == 0 else numerator - contribution
    delta = vandermonde(alphabet)
    try:
        return FactoredRational(exact_div(numerator, delta))
    except NotDivisibleError:
        return FactoredRational(numerator, [(delta, 1)])


def cauchy_kernel(a: Alphabet, b: Alphabet) -> Polynomial:
    """Product of (1 - letter_a * letter_b) over all pairs of letters."""
    out = Polynomial.one()
    for ga in a.generators:
        for gb in b.generators:
            out = out * (Polynomial.one() - Polynomial.term(ga * gb))
    return out
