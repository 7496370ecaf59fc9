"""
Bott-Samelson-Demazure-Hansen combinatorics and tangent-bundle characters.

A BSDH variety Z(w, i) is the iterated P^1-bundle built from a reduced
word i = (i_1, ..., i_r) of a Weyl group element w.  At the character
level everything this module computes reduces to sums of iterated
Demazure strings:

* the tangent Euler characteristic is the sum over j of the Euler
  characteristic of the line bundle of alpha_{i_j} along the length-j
  prefix — one summand per P^1-level of the tower, with the base point
  contributing nothing (an empty word gives the zero report, and the
  multiplicity of the zero weight therefore *emerges* as d(w), the number
  of distinct letters, rather than being seeded);

* in simply-laced types higher cohomology of the tangent bundle
  vanishes, so the same sum is the genuine character of
  H^0(Z(w,i), T) and is tagged H0_exact; elsewhere it is tagged
  Euler_only and never presented as a section character;

* at the longest element (any type) the sections are the parabolic
  subalgebra attached to J(w_0, i), which pins down H^1 as a difference
  of characters;

* for Schubert varieties X(w), the restriction of the tangent bundle of
  G/B has section character equal to the Demazure-string sum over all
  positive roots, and contains the adjoint character exactly when
  w^{-1}(alpha_0) < 0.

The combinatorial sets attached to a word:

* J'(w, i): positions l whose letter is orthogonal to every earlier
  letter (position 1 always qualifies); the letters at those positions
  are pairwise orthogonal and pairwise distinct.
* J(w, i) = {alpha_{i_l} : l in J'(w, i)}, recorded as simple indices.
* supp(w): the set of distinct letters, with d(w) = |supp(w)| — a
  word-independent invariant of the element.
* R_w: positive roots inverted by no v^{-1} with v <= w; together with
  J_1 (new orthogonal letters of a completion) it shapes the kernel of
  restriction from Z(w_0, j) to Z(w, i).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Sequence

from .roots import RootSystem, dominance_leq
from .characters import Character, euler_char, reference_chars
from . import weyl

__all__ = [
    "BsdhWord",
    "TangentReport",
    "KernelReport",
    "j_sets",
    "tangent_euler_char",
    "tangent_h0_char",
    "h1_w0_char",
    "schubert_tangent_char",
    "adjoint_containment",
    "kernel_char",
    "root_subset_R_w",
]

MODE_H0 = "H0_exact"
MODE_EULER = "Euler_only"


class BsdhWord:
    """A root system with a validated reduced word and its cached data.

    Raises ValueError (naming the shortest failing prefix) if the word is
    not reduced.  The empty word is allowed and describes a point.
    """

    def __init__(self, rs: RootSystem, word: Sequence[int]):
        word = tuple(word)
        bad = weyl.unreduced_prefix(rs, word)
        if bad is not None:
            raise ValueError(
                f"word {weyl.format_word(word)} is not reduced; "
                f"failing prefix {weyl.format_word(bad)}")
        self.rs = rs
        self.word = word
        self.element = weyl.from_word(rs, word)
        # positions (0-based) whose letter pairs to zero with all earlier ones
        self.j_prime = tuple(
            l for l in range(len(word))
            if all(rs.cartan[word[k]][word[l]] == 0 for k in range(l)))
        self.J = tuple(sorted(word[l] for l in self.j_prime))
        self.supp = tuple(sorted(set(word)))
        self.d = len(self.supp)

    def __repr__(self) -> str:
        return f"BsdhWord({self.rs.cartan_type}, {weyl.format_word(self.word)!r})"


def j_sets(b: BsdhWord):
    """(J' positions, J simple-root indices) for the word."""
    return b.j_prime, b.J


@dataclass
class TangentReport:
    """Character data for the tangent bundle of Z(w, i).

    per_step[j] is the contribution of the (j+1)-st P^1-level: the Euler
    characteristic (or exact section character, per mode) of the line
    bundle of alpha_{i_{j+1}} along the prefix (i_1 ... i_{j+1}).
    """

    rs: RootSystem
    word: tuple
    mode: str
    per_step: list
    total: Character
    J: tuple
    supp: tuple
    d: int

    @property
    def zero_mult(self) -> int:
        return self.total.coeff((0,) * self.rs.rank)

    @property
    def positive_support(self) -> list:
        """Weights in the support strictly above 0 in dominance order."""
        zero = (0,) * self.rs.rank
        return sorted(w for w in self.total.terms
                      if w != zero and dominance_leq(self.rs, zero, w))

    def dim(self) -> int:
        return self.total.dim()

    def to_json(self) -> dict:
        return {
            "type": str(self.rs.cartan_type),
            "word": weyl.format_word(self.word),
            "mode": self.mode,
            "J": [j + 1 for j in self.J],
            "supp": [j + 1 for j in self.supp],
            "d": self.d,
            "char": self.total.to_json(),
            "zero_mult": self.zero_mult,
            "positive_support": [list(w) for w in self.positive_support],
            "dim": self.dim(),
        }


def _step_sum(b: BsdhWord) -> tuple:
    steps = []
    total = Character.zero()
    for j in range(len(b.word)):
        alpha = b.rs.simple_roots[b.word[j]]
        step = euler_char(b.rs, b.word[: j + 1], alpha)
        steps.append(step)
        total = total + step
    return steps, total


def tangent_euler_char(b: BsdhWord) -> TangentReport:
    """chi(Z(w,i), T) as a sum of one Demazure string per tower level.

    Valid in every type: Euler characteristics are additive along the
    relative-tangent filtration regardless of vanishing.
    """
    steps, total = _step_sum(b)
    return TangentReport(rs=b.rs, word=b.word, mode=MODE_EULER,
                         per_step=steps, total=total,
                         J=b.J, supp=b.supp, d=b.d)


def tangent_h0_char(b: BsdhWord) -> TangentReport:
    """The genuine character of H^0(Z(w,i), T): simply-laced only.

    Numerically identical to tangent_euler_char; the simply-laced
    hypothesis is what makes the higher cohomology vanish so the Euler sum
    *is* the section character.  Refuses other types.
    """
    if not b.rs.cartan_type.simply_laced():
        raise ValueError(
            f"{b.rs.cartan_type} is not simply laced, so the Euler sum is not "
            "known to equal the section character; use tangent_euler_char")
    steps, total = _step_sum(b)
    return TangentReport(rs=b.rs, word=b.word, mode=MODE_H0,
                         per_step=steps, total=total,
                         J=b.J, supp=b.supp, d=b.d)


def h1_w0_char(b: BsdhWord) -> Character:
    """char H^1(Z(w_0,i), T) = char p_{J(w_0,i)} - chi(Z(w_0,i), T).

    Only available at the longest element, where the section character is
    the parabolic subalgebra of J(w_0, i) in every type.  The result is
    coefficientwise nonnegative with zero multiplicity of e^0, and is the
    zero character in simply-laced types.
    """
    if b.element != weyl.longest_element(b.rs):
        raise ValueError("word does not multiply to the longest element; "
                         "H^1 is only determined there")
    p_J = reference_chars(b.rs, b.J).char_p_J
    return p_J - tangent_euler_char(b).total


def schubert_tangent_char(rs: RootSystem, w: "weyl.WeylElement") -> Character:
    """char H^0(X(w), T_{G/B} restricted): the string sum over all of R+.

    Exact in every type (higher cohomology of the restricted tangent
    bundle vanishes on Schubert varieties); independent of the choice of
    reduced word for w.
    """
    word = weyl.canonical_word(rs, w)
    total = Character.zero()
    for beta in rs.positive_roots:
        total = total + euler_char(rs, word, beta.weight)
    return total


def adjoint_containment(rs: RootSystem, w: "weyl.WeylElement") -> bool:
    """Does the adjoint character embed coefficientwise in the Schubert
    tangent sections?  Equivalent to the highest-root criterion
    w^{-1}(alpha_0) < 0; both sides are computed independently here."""
    g = reference_chars(rs).char_g
    return g.leq(schubert_tangent_char(rs, w))


# -- kernels of restriction --------------------------------------------


def root_subset_R_w(rs: RootSystem, word: Sequence[int]) -> set:
    """R_w = R+ minus the union of R+(v^{-1}) over v <= w.

    Computed literally from the Bruhat lower interval.  R+(v^{-1}) is
    read off without inverting matrices: it equals {-v(gamma) : gamma in
    R+, v(gamma) negative}.
    """
    covered = set()
    for v in weyl.lower_interval(rs, word):
        for gamma in rs.positive_roots:
            image = v.apply(gamma.weight)
            if rs.is_negative_root(image):
                covered.add(tuple(-c for c in image))
    return {beta for beta in rs.positive_roots
            if tuple(beta.weight) not in covered}


@dataclass
class KernelReport:
    """Predicted and observed characters of the kernel of restriction
    from sections over Z(w_0, j) to sections over Z(w, i)."""

    rs: RootSystem
    word: tuple
    completion: tuple
    predicted: Character
    observed: Character
    J1: tuple
    R_w: list = field(repr=False)

    @property
    def equal(self) -> bool:
        return self.predicted == self.observed

    def to_json(self) -> dict:
        return {
            "type": str(self.rs.cartan_type),
            "word": weyl.format_word(self.word),
            "completion": weyl.format_word(self.completion),
            "predicted": self.predicted.to_json(),
            "observed": self.observed.to_json(),
            "equal": self.equal,
            "J1": [j + 1 for j in self.J1],
            "dim": self.predicted.dim(),
        }


def kernel_char(b: BsdhWord, completion: Sequence[int]) -> KernelReport:
    """Kernel of the restriction map along a completion j of the word i.

    predicted = (n - d(w)).e^0  +  sum over R_w of e^{-beta}
                                +  sum over J_1 of e^{alpha_j}
    where J_1 collects the letters of J(w_0, j) outside supp(w); observed
    is the difference of the two exact section characters.  Simply-laced
    only (both sides rest on the vanishing there).
    """
    rs = b.rs
    if not rs.cartan_type.simply_laced():
        raise ValueError(f"{rs.cartan_type} is not simply laced; "
                         "kernel characters are only computed there")
    completion = tuple(completion)
    if completion[: len(b.word)] != b.word:
        raise ValueError("completion does not extend the word")
    full = BsdhWord(rs, completion)   # validates reducedness
    if full.element != weyl.longest_element(rs):
        raise ValueError("completion does not multiply to the longest element")

    n = rs.rank
    J1 = tuple(sorted(set(full.J) - set(b.supp)))
    R_w = sorted(root_subset_R_w(rs, b.word),
                 key=lambda r: (r.height, r.root_coords))

    predicted_terms = {(0,) * n: n - b.d}
    for beta in R_w:
        predicted_terms[tuple(-c for c in beta.weight)] = 1
    for j in J1:
        predicted_terms[tuple(rs.simple_roots[j])] = \
            predicted_terms.get(tuple(rs.simple_roots[j]), 0) + 1
    predicted = Character(predicted_terms)

    observed = tangent_h0_char(full).total - tangent_h0_char(b).total
    return KernelReport(rs=rs, word=b.word, completion=completion,
                        predicted=predicted, observed=observed,
                        J1=J1, R_w=R_w)
