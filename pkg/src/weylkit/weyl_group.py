"""Enumeration of the Weyl group and its actions on weights.

Elements are identified by the image of rho under their action: rho is a
regular weight, so the orbit map is injective and a length-``rank`` tuple is
a complete fingerprint.  Enumeration is a breadth-first search from the
identity over right multiplication by the simple reflections; the discovery
word of an element is reduced (BFS depth equals Coxeter length) and is kept
as its canonical reduced word.

A word ``(i1, ..., ik)`` denotes the product ``s_{i1} ... s_{ik}`` acting by
composition, i.e. ``s_{ik}`` is applied to a weight first.  Indices are
0-based internally; the serialized form is comma-separated 1-based indices.
"""

from __future__ import annotations

from collections import deque

from .root_system import CartanError, RootSystem


def simple_reflection(rs: RootSystem, i: int, psi) -> tuple:
    """Reflect a weight in the i-th simple root (0-based index)."""
    if not 0 <= i < rs.rank:
        raise CartanError(f"simple index {i} out of range")
    k = psi[i]
    if not k:
        return tuple(psi)
    col = rs.simple_root_weight_coords(i)
    return tuple(p - k * c for p, c in zip(psi, col))


def _word_action_matrix(rs, word):
    n = rs.rank
    cols = []
    for j in range(n):
        v = tuple(int(r == j) for r in range(n))
        for i in reversed(word):
            v = simple_reflection(rs, i, v)
        cols.append(v)
    return tuple(tuple(cols[j][i] for j in range(n)) for i in range(n))


class WeylGroupElement:
    __slots__ = ("index", "word", "length", "rho_image", "matrix")

    def __init__(self, index, word, rho_image, matrix):
        self.index = index
        self.word = word
        self.length = len(word)
        self.rho_image = rho_image
        self.matrix = matrix

    @property
    def sign(self):
        return -1 if self.length % 2 else 1

    def __repr__(self):
        return f"<w{self.index} word={serialize_word(self.word)!r}>"

    def __eq__(self, other):
        return isinstance(other, WeylGroupElement) and self.rho_image == other.rho_image

    def __hash__(self):
        return hash(self.rho_image)


def serialize_word(word) -> str:
    return ",".join(str(i + 1) for i in word)


def parse_word(text: str, rank: int) -> tuple:
    """Parse a comma-separated 1-based word; empty string is the identity."""
    text = text.strip()
    if not text:
        return ()
    out = []
    for part in text.split(","):
        try:
            k = int(part)
        except ValueError:
            raise CartanError(f"malformed word entry {part!r}") from None
        if not 1 <= k <= rank:
            raise CartanError(f"word entry {k} out of range 1..{rank}")
        out.append(k - 1)
    return tuple(out)


class WeylGroup:
    """The full Weyl group of a root system, enumerated once."""

    def __init__(self, rs: RootSystem):
        self.rs = rs
        self.elements = []
        self._by_image = {}
        self._right_table = {}
        self._hecke_right = {}
        n = rs.rank
        ident = tuple(tuple(int(i == j) for j in range(n)) for i in range(n))
        e = WeylGroupElement(0, (), rs.rho, ident)
        self.elements.append(e)
        self._by_image[rs.rho] = e
        queue = deque([e])
        simple_mats = [_word_action_matrix(rs, (i,)) for i in range(n)]
        while queue:
            w = queue.popleft()
            for i in range(n):
                image = self.act(w, simple_reflection(rs, i, rs.rho))
                known = self._by_image.get(image)
                if known is None:
                    mat = _matmul(w.matrix, simple_mats[i])
                    nxt = WeylGroupElement(len(self.elements), w.word + (i,), image, mat)
                    self.elements.append(nxt)
                    self._by_image[image] = nxt
                    queue.append(nxt)
                    known = nxt
                self._right_table[(w.index, i)] = known.index
        self.identity = self.elements[0]
        self.longest = max(self.elements, key=lambda el: el.length)
        if sum(1 for el in self.elements if el.length == self.longest.length) != 1:
            raise CartanError("longest element is not unique; corrupted enumeration")

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def simple(self, i: int) -> WeylGroupElement:
        return self.elements[self._right_table[(0, i)]]

    def act(self, w: WeylGroupElement, psi) -> tuple:
        m = w.matrix
        n = self.rs.rank
        return tuple(sum(m[i][j] * psi[j] for j in range(n)) for i in range(n))

    def dot_act(self, w: WeylGroupElement, psi) -> tuple:
        """The shifted action w(psi + rho) - rho."""
        shifted = tuple(p + 1 for p in psi)
        return tuple(c - 1 for c in self.act(w, shifted))

    def mul(self, w, v) -> WeylGroupElement:
        return self._by_image[self.act(w, v.rho_image)]

    def mul_simple(self, w, i: int) -> WeylGroupElement:
        """Right multiplication w * s_i via the BFS table."""
        return self.elements[self._right_table[(w.index, i)]]

    def inverse(self, w) -> WeylGroupElement:
        return self.from_word(tuple(reversed(w.word)))

    def from_word(self, word) -> WeylGroupElement:
        psi = self.rs.rho
        for i in reversed(word):
            psi = simple_reflection(self.rs, i, psi)
        return self._by_image[psi]

    def hecke_append(self, w, i: int) -> WeylGroupElement:
        """0-Hecke right append: w * s_i if that is longer, else w."""
        key = (w.index, i)
        got = self._hecke_right.get(key)
        if got is None:
            ws = self.mul_simple(w, i)
            got = ws if ws.length > w.length else w
            self._hecke_right[key] = got
        return got

    def hecke_product(self, w, v) -> WeylGroupElement:
        """Product in the 0-Hecke monoid of the Weyl group."""
        out = w
        for i in v.word:
            out = self.hecke_append(out, i)
        return out

    def coxeter_order(self, i: int, j: int) -> int:
        """Order of s_i s_j, read off the Cartan matrix."""
        if i == j:
            return 1
        prod = self.rs.cartan[i][j] * self.rs.cartan[j][i]
        return {0: 2, 1: 3, 2: 4, 3: 6}[prod]

    def reduced_words(self, w, limit=None):
        """Distinct reduced words of w, explored by braid moves.

        Breadth-first over the braid-move graph starting from the canonical
        word; exhaustive whenever the graph has at most ``limit`` vertices.
        """
        start = w.word
        seen = {start}
        queue = deque([start])
        out = [start]
        while queue and (limit is None or len(out) < limit):
            word = queue.popleft()
            for nxt in self._braid_neighbors(word):
                if nxt not in seen:
                    seen.add(nxt)
                    out.append(nxt)
                    queue.append(nxt)
                    if limit is not None and len(out) >= limit:
                        break
        return out

    def _braid_neighbors(self, word):
        k = len(word)
        for p in range(k - 1):
            i, j = word[p], word[p + 1]
            if i == j:
                continue
            m = self.coxeter_order(i, j)
            if p + m > k:
                continue
            seg = word[p : p + m]
            if all(seg[t] == (i if t % 2 == 0 else j) for t in range(m)):
                swapped = tuple(j if t % 2 == 0 else i for t in range(m))
                yield word[:p] + swapped + word[p + m :]

    def inversions(self, w):
        """Positive roots sent to negative roots by w."""
        out = []
        for root in self.rs.positive_roots:
            image = self.act(w, root.weight_coords)
            sc = self.rs.to_simple_coords(image)
            if all(c <= 0 for c in sc):
                out.append(root)
        return out


def enumerate_group(rs: RootSystem) -> WeylGroup:
    return WeylGroup(rs)


def _matmul(a, b):
    n = len(a)
    return tuple(tuple(sum(a[i][k] * b[k][j] for k in range(n)) for j in range(n)) for i in range(n))
