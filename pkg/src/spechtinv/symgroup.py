"""Symmetric group plumbing: permutations, Coxeter generators and relations,
Young subgroup generator selection.

Points are 1-based and permutations are stored in one-line notation, so
images[i] is the image of i+1.  Group elements are never enumerated for
n > 8; module-level computations elsewhere use generators only.
"""

from math import comb


class Permutation:
    """A permutation of {1..n} in one-line notation."""

    __slots__ = ("images",)

    def __init__(self, images):
        images = tuple(int(v) for v in images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise ValueError("not a bijection on {1..%d}: %r"
                             % (len(images), images))
        self.images = images

    @property
    def degree(self):
        return len(self.images)

    @classmethod
    def identity(cls, n):
        return cls(range(1, n + 1))

    @classmethod
    def transposition(cls, n, i, j):
        if not (1 <= i <= n and 1 <= j <= n and i != j):
            raise ValueError("bad transposition (%d %d) for degree %d"
                             % (i, j, n))
        images = list(range(1, n + 1))
        images[i - 1], images[j - 1] = j, i
        return cls(images)

    def __call__(self, point):
        return self.images[point - 1]

    def __mul__(self, other):
        if self.degree != other.degree:
            raise ValueError("degree mismatch")
        return Permutation(self.images[other.images[k] - 1]
                           for k in range(self.degree))

    def inverse(self):
        images = [0] * self.degree
        for k, v in enumerate(self.images):
            images[v - 1] = k + 1
        return Permutation(images)

    def cycles(self):
        """Nontrivial cycles, each rotated to start at its least point."""
        seen = set()
        out = []
        for start in range(1, self.degree + 1):
            if start in seen:
                continue
            cyc = [start]
            seen.add(start)
            nxt = self(start)
            while nxt != start:
                cyc.append(nxt)
                seen.add(nxt)
                nxt = self(nxt)
            if len(cyc) > 1:
                out.append(tuple(cyc))
        return out

    def one_line(self):
        return " ".join(str(v) for v in self.images)

    @classmethod
    def from_one_line(cls, text):
        return cls(int(t) for t in text.split())

    def __str__(self):
        cyc = self.cycles()
        if not cyc:
            return "()"
        return "".join("(" + " ".join(str(v) for v in c) + ")" for c in cyc)

    def __repr__(self):
        return "Permutation(%r)" % (self.images,)

    def __eq__(self, other):
        return isinstance(other, Permutation) and self.images == other.images

    def __hash__(self):
        return hash(self.images)


def coxeter_generators(n):
    """Adjacent transpositions s_i = (i, i+1) for i = 1..n-1."""
    if n < 2:
        raise ValueError("need n >= 2")
    return [Permutation.transposition(n, i, i + 1) for i in range(1, n)]


def young_subgroup_generators(m, n):
    """Generator lists for the Young pair inside the degree-n group.

    Returns (first, second) where first = s_1..s_{m-1} generates the
    subgroup permuting {1..m} and second = s_{m+1}..s_{n-1} generates the
    subgroup permuting {m+1..n}, all as degree-n permutations.
    """
    if not 0 < m < n:
        raise ValueError("need 0 < m < n, got m=%d n=%d" % (m, n))
    gens = coxeter_generators(n)
    return gens[:m - 1], gens[m:]


class CoxeterPresentation:
    """Relation data for the degree-n Coxeter presentation.

    relations holds words in the generator indices 1..n-1; every word
    multiplies to the identity: s_i^2, the braid words (s_i s_{i+1})^3, and
    the commuting words (s_i s_j)^2 for |i-j| >= 2.
    """

    __slots__ = ("n", "relations")

    def __init__(self, n, relations):
        self.n = n
        self.relations = relations

    @property
    def num_generators(self):
        return self.n - 1


def coxeter_relations(n):
    if n < 2:
        raise ValueError("need n >= 2")
    rels = []
    for i in range(1, n):
        rels.append((i, i))
    for i in range(1, n - 1):
        rels.append((i, i + 1) * 3)
    for i in range(1, n):
        for j in range(i + 2, n):
            rels.append((i, j) * 2)
    expected = (n - 1) + (n - 2) + (comb(n - 1, 2) - (n - 2))
    assert len(rels) == expected
    return CoxeterPresentation(n, rels)


def evaluate_word(word, gens):
    """Multiply out a 1-based generator-index word, left to right."""
    n = gens[0].degree
    out = Permutation.identity(n)
    for idx in word:
        out = out * gens[idx - 1]
    return out
