"""Word-evaluation oracle for the two-variable c-free product state.

Evaluation uses only the defining factorization of the product state: a word
whose letters are all psi-centered and alternate between the two algebras
factorizes into a product of single-letter values.  A general word is reduced
to that case by splitting one non-centered letter p into
(p - psi(p)) + psi(p), which either centers the letter or deletes it (merging
its neighbours when they share an algebra).  Each step shrinks
(word length, number of non-centered letters) lexicographically, so the
expansion terminates; sub-words are memoized on their canonical form.

This module is an oracle for the convolution module, not a production path;
the exponential blow-up is accepted and capped.
"""

from __future__ import annotations

from fractions import Fraction

from .cumulants import MeasurePair

MAX_WORD_SUM_N = 10


class Word:
    """Alternating word in two self-adjoint variables: ((index, exponent), ...)."""

    __slots__ = ("letters",)

    def __init__(self, letters):
        letters = tuple((int(i), int(k)) for i, k in letters)
        for i, k in letters:
            if i not in (1, 2):
                raise ValueError("variable index must be 1 or 2")
            if k < 1:
                raise ValueError("exponents must be positive")
        for (i, _), (j, _) in zip(letters, letters[1:]):
            if i == j:
                raise ValueError("adjacent letters must use different variables")
        self.letters = letters

    @classmethod
    def from_indices(cls, indices) -> "Word":
        """Collapse an index sequence like (1,1,2,1) into ((1,2),(2,1),(1,1))."""
        letters = []
        for i in indices:
            if letters and letters[-1][0] == i:
                letters[-1] = (i, letters[-1][1] + 1)
            else:
                letters.append((i, 1))
        return cls(letters)

    @property
    def total_degree(self) -> int:
        return sum(k for _, k in self.letters)

    def __eq__(self, other):
        return isinstance(other, Word) and self.letters == other.letters

    def __hash__(self):
        return hash(self.letters)

    def __repr__(self):
        return "Word(%r)" % (self.letters,)


class StateFamily:
    """The two measure pairs (mu_i, nu_i) defining the product state."""

    __slots__ = ("pair1", "pair2")

    def __init__(self, pair1: MeasurePair, pair2: MeasurePair):
        if pair1.order != pair2.order:
            raise ValueError("pairs must share the truncation order")
        self.pair1 = pair1
        self.pair2 = pair2

    @property
    def order(self) -> int:
        return self.pair1.order

    def pair(self, index: int) -> MeasurePair:
        return self.pair1 if index == 1 else self.pair2


def _monomial(k: int) -> tuple[Fraction, ...]:
    return (Fraction(0),) * k + (Fraction(1),)


def _poly_mul(p, q):
    out = [Fraction(0)] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if not a:
            continue
        for j, b in enumerate(q):
            if b:
                out[i + j] += a * b
    return tuple(out)


class _Evaluator:
    """Evaluates the product state on letter words; one memo per evaluator."""

    def __init__(self, fam: StateFamily, top_is_mu: bool):
        # the nu-states drive the centering in either case
        self.nu = {1: fam.pair1.nu.moments, 2: fam.pair2.nu.moments}
        if top_is_mu:
            self.top = {1: fam.pair1.mu.moments, 2: fam.pair2.mu.moments}
        else:
            self.top = dict(self.nu)
        self.memo = {}

    def _state(self, table, index, coeffs):
        m = table[index]
        return sum((c * m[k] for k, c in enumerate(coeffs) if c), Fraction(0))

    def eval_letters(self, letters) -> Fraction:
        if not letters:
            return Fraction(1)
        if len(letters) == 1:
            index, coeffs = letters[0]
            return self._state(self.top, index, coeffs)
        cached = self.memo.get(letters)
        if cached is not None:
            return cached
        value = self._expand(letters)
        self.memo[letters] = value
        return value

    def _expand(self, letters) -> Fraction:
        for j, (index, coeffs) in enumerate(letters):
            s = self._state(self.nu, index, coeffs)
            if s:
                break
        else:
            # every letter is psi-centered and indices alternate: factorize
            prod = Fraction(1)
            for index, coeffs in letters:
                prod *= self._state(self.top, index, coeffs)
            return prod
        centered = list(coeffs)
        centered[0] -= s
        with_centered = letters[:j] + ((index, tuple(centered)),) + letters[j + 1 :]
        left, right = letters[:j], letters[j + 1 :]
        if left and right and left[-1][0] == right[0][0]:
            merged = (left[-1][0], _poly_mul(left[-1][1], right[0][1]))
            without = left[:-1] + (merged,) + right[1:]
        else:
            without = left + right
        return self.eval_letters(with_centered) + s * self.eval_letters(without)


def _merge_letters(letters):
    """Normalize a letter sequence: multiply adjacent same-index letters."""
    out = []
    for idx, coeffs in letters:
        if out and out[-1][0] == idx:
            out[-1] = (idx, _poly_mul(out[-1][1], coeffs))
        else:
            out.append((idx, coeffs))
    return tuple(out)


def _letters_of(word: Word):
    return tuple((i, _monomial(k)) for i, k in word.letters)


def _check_degree(word: Word, fam: StateFamily):
    if word.total_degree > fam.order:
        raise ValueError(
            "word degree %d exceeds the family order %d" % (word.total_degree, fam.order)
        )


def eval_phi(word: Word, fam: StateFamily) -> Fraction:
    """Value of the c-free product state phi on the word."""
    _check_degree(word, fam)
    return _Evaluator(fam, top_is_mu=True).eval_letters(_letters_of(word))


def eval_psi(word: Word, fam: StateFamily) -> Fraction:
    """Value of the free product state psi on the word (nu plays both roles)."""
    _check_degree(word, fam)
    return _Evaluator(fam, top_is_mu=False).eval_letters(_letters_of(word))


def sum_moments_via_words(p1: MeasurePair, p2: MeasurePair, n: int) -> Fraction:
    """n-th moment of X_1 + X_2 under phi, summed over all 2**n index words."""
    if not 1 <= n <= MAX_WORD_SUM_N:
        raise ValueError("n must be in 1..%d" % MAX_WORD_SUM_N)
    fam = StateFamily(p1, p2)
    if n > fam.order:
        raise ValueError("n exceeds the family order %d" % fam.order)
    evaluator = _Evaluator(fam, top_is_mu=True)
    total = Fraction(0)
    for bits in range(2**n):
        indices = [1 + ((bits >> pos) & 1) for pos in range(n)]
        word = Word.from_indices(indices)
        total += evaluator.eval_letters(_letters_of(word))
    return total
