"""Linear representations of recognisable series and their JSON exchange format.

A representation of dimension ``n`` is a row vector ``initial``, one
``n x n`` matrix per letter and a column vector ``final``; the coefficient
of a word ``a1...am`` is ``initial . M(a1) ... M(am) . final``.

Exchange format (all scalars are decimal strings, rationals as ``"p/q"``)::

    {
      "semiring": "N",
      "dimension": 2,
      "alphabet": ["a", "b"],
      "initial": ["1", "0"],
      "transitions": {"a": [["1", "0"], ["0", "1"]], "b": [["0", "1"], ["1", "0"]]},
      "final": ["1", "0"]
    }
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Mapping

from .automata import OrderedAlphabet
from .exactalg import (
    DimensionError,
    Matrix,
    Scalar,
    Semiring,
    SemiringError,
    Vector,
    dot,
    embed,
    kron,
    kron_vec,
    vec_mat,
)


class SeriesFormatError(ValueError):
    pass


@dataclass(frozen=True)
class LinearRepresentation:
    alphabet: OrderedAlphabet
    initial: Vector
    transition: Mapping[str, Matrix]
    final: Vector

    def __post_init__(self):
        n = len(self.initial)
        if not self.initial.is_row or self.final.is_row:
            raise DimensionError("initial must be a row vector and final a column vector")
        if len(self.final) != n:
            raise DimensionError(f"initial has length {n} but final has length {len(self.final)}")
        if set(self.transition) != set(self.alphabet):
            raise ValueError("need exactly one matrix per letter of the alphabet")
        sr = self.initial.semiring
        for a, m in self.transition.items():
            if m.shape != (n, n):
                raise DimensionError(f"matrix of {a!r} is {m.shape}, expected {(n, n)}")
            if m.semiring is not sr:
                raise SemiringError(f"matrix of {a!r} is over {m.semiring.value}, expected {sr.value}")
        if self.final.semiring is not sr:
            raise SemiringError("initial and final vectors disagree on the semiring")
        # freeze the mapping in alphabet order
        object.__setattr__(self, "transition", {a: self.transition[a] for a in self.alphabet})

    def __hash__(self):
        return hash((self.alphabet, self.initial, tuple(self.transition.values()), self.final))

    @property
    def semiring(self) -> Semiring:
        return self.initial.semiring

    @property
    def dimension(self) -> int:
        return len(self.initial)

    def letter_sum(self, letters=None) -> Matrix:
        """Sum of the matrices of ``letters`` (default: the whole alphabet)."""
        letters = self.alphabet.letters if letters is None else letters
        acc = Matrix.zero(self.dimension, semiring=self.semiring)
        for a in letters:
            acc = acc + self.transition[a]
        return acc

    def prefix_vector(self, w: str) -> Vector:
        v = self.initial
        for a in self.alphabet.check_word(w):
            v = vec_mat(v, self.transition[a])
        return v

    def coefficient(self, w: str) -> Scalar:
        return dot(self.prefix_vector(w), self.final)

    __call__ = coefficient

    def to_semiring(self, target: Semiring) -> "LinearRepresentation":
        src = self.semiring
        return LinearRepresentation(
            self.alphabet,
            embed(self.initial, src, target),
            {a: embed(m, src, target) for a, m in self.transition.items()},
            embed(self.final, src, target),
        )

    def scale_initial(self, c) -> "LinearRepresentation":
        return LinearRepresentation(self.alphabet, self.initial.scale(c), self.transition, self.final)

    def trim(self) -> "LinearRepresentation":
        """Drop coordinates unreachable from ``initial`` or unable to reach ``final``.

        Reachability follows nonzero entries, so the series is unchanged over
        any of N, Z, Q.
        """
        n = self.dimension
        fwd = {i: set() for i in range(n)}
        bwd = {i: set() for i in range(n)}
        for m in self.transition.values():
            for i, row in enumerate(m.entries):
                for j, x in enumerate(row):
                    if x:
                        fwd[i].add(j)
                        bwd[j].add(i)

        def closure(start, adj):
            seen = set(start)
            todo = list(seen)
            while todo:
                i = todo.pop()
                for j in adj[i] - seen:
                    seen.add(j)
                    todo.append(j)
            return seen

        keep = sorted(closure({i for i, x in enumerate(self.initial) if x}, fwd)
                      & closure({i for i, x in enumerate(self.final) if x}, bwd))
        return self.restrict(keep)

    def restrict(self, keep) -> "LinearRepresentation":
        sr = self.semiring
        return LinearRepresentation(
            self.alphabet,
            Vector("row", tuple(self.initial[i] for i in keep), sr),
            {a: Matrix(len(keep), len(keep), tuple(tuple(m.entries[i][j] for j in keep) for i in keep), sr)
             for a, m in self.transition.items()},
            Vector("column", tuple(self.final[i] for i in keep), sr),
        )

    # -- exchange format -------------------------------------------------

    def to_dict(self) -> dict:
        s = str
        return {
            "semiring": self.semiring.value,
            "dimension": self.dimension,
            "alphabet": list(self.alphabet.letters),
            "initial": [s(x) for x in self.initial],
            "transitions": {a: [[s(x) for x in row] for row in m.entries]
                            for a, m in self.transition.items()},
            "final": [s(x) for x in self.final],
        }

    def dumps(self) -> str:
        return json.dumps(self.to_dict(), indent=2) + "\n"

    @classmethod
    def from_dict(cls, doc: dict) -> "LinearRepresentation":
        try:
            sr = Semiring.parse(str(doc["semiring"]))
            alphabet = OrderedAlphabet(doc["alphabet"])
            n = int(doc["dimension"])
            initial = Vector.row(doc["initial"], sr)
            final = Vector.column(doc["final"], sr)
            trans = doc["transitions"]
            mu = {a: Matrix.from_rows(trans[a], sr) if n else Matrix.zero(0, 0, sr) for a in alphabet}
        except (KeyError, TypeError, ValueError) as e:
            raise SeriesFormatError(f"malformed series document: {e}") from None
        if len(initial) != n:
            raise SeriesFormatError(f"declared dimension {n} but initial vector has {len(initial)} entries")
        extra = set(trans) - set(alphabet)
        if extra:
            raise SeriesFormatError(f"matrices for letters outside the alphabet: {sorted(extra)}")
        try:
            return cls(alphabet, initial, mu, final)
        except ValueError as e:
            raise SeriesFormatError(str(e)) from None

    @classmethod
    def loads(cls, text: str) -> "LinearRepresentation":
        try:
            doc = json.loads(text)
        except json.JSONDecodeError as e:
            raise SeriesFormatError(f"not JSON: {e}") from None
        return cls.from_dict(doc)


def series_coefficient(rep: LinearRepresentation, w: str) -> Scalar:
    return rep.coefficient(w)


def hadamard(r1: LinearRepresentation, r2: LinearRepresentation) -> LinearRepresentation:
    """Coefficient-wise product, realised by the tensor product of the representations."""
    if r1.alphabet != r2.alphabet:
        raise ValueError("Hadamard product of series over different alphabets")
    if r1.semiring is not r2.semiring:
        raise SemiringError(f"semiring mismatch: {r1.semiring.value} vs {r2.semiring.value}")
    return LinearRepresentation(
        r1.alphabet,
        kron_vec(r1.initial, r2.initial),
        {a: kron(r1.transition[a], r2.transition[a]) for a in r1.alphabet},
        kron_vec(r1.final, r2.final),
    )


def full_language(alphabet: OrderedAlphabet, semiring: Semiring = Semiring.N) -> LinearRepresentation:
    """Characteristic series of A*, the unit of the Hadamard product."""
    one = Matrix.identity(1, semiring)
    return LinearRepresentation(alphabet, Vector.row([1], semiring), {a: one for a in alphabet},
                                Vector.column([1], semiring))
