"""Root systems of rank at most two and their Weyl groups.

Conventions: ``cartan[i][j] = <alpha_i, alpha_j^vee>``.  Weights are
integer vectors in the fundamental-weight basis, roots are integer vectors
in the simple-root basis.  Row i of the Cartan matrix is alpha_i written in
omega coordinates.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Sequence

Vec = tuple[int, ...]
Mat = tuple[tuple[int, ...], ...]

SYSTEMS = ("A1", "A1xA1", "A2", "C2", "G2")

_CARTAN = {
    "A1": ((2,),),
    "A1xA1": ((2, 0), (0, 2)),
    "A2": ((2, -1), (-1, 2)),
    "C2": ((2, -2), (-1, 2)),
    "G2": ((2, -3), (-1, 2)),
}

# product of off-diagonal Cartan entries -> order of s_i s_j
_BRAID = {0: 2, 1: 3, 2: 4, 3: 6}


def _matmul(a: Mat, b: Mat) -> Mat:
    n, k, m = len(a), len(b), len(b[0])
    return tuple(tuple(sum(a[i][t] * b[t][j] for t in range(k)) for j in range(m)) for i in range(n))


def _matvec(a: Mat, x: Sequence[int]) -> Vec:
    return tuple(sum(r[j] * x[j] for j in range(len(x))) for r in a)


def _identity(n: int) -> Mat:
    return tuple(tuple(int(i == j) for j in range(n)) for i in range(n))


def _frac_inverse(a: Mat) -> tuple[tuple[Fraction, ...], ...]:
    n = len(a)
    m = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(a)]
    for c in range(n):
        p = next(r for r in range(c, n) if m[r][c] != 0)
        m[c], m[p] = m[p], m[c]
        piv = m[c][c]
        m[c] = [x / piv for x in m[c]]
        for r in range(n):
            if r != c and m[r][c] != 0:
                f = m[r][c]
                m[r] = [x - f * y for x, y in zip(m[r], m[c])]
    return tuple(tuple(row[n:]) for row in m)


@dataclass(frozen=True)
class WeylElement:
    """A Weyl group element with a fixed reduced word.

    ``action`` acts on omega coordinates (column vectors), ``root_action``
    on alpha coordinates.  Indices in ``word`` are 1-based, leftmost letter
    applied last: word (2, 1) is s_2 s_1.
    """

    word: tuple[int, ...]
    action: Mat
    root_action: Mat = field(compare=False)

    @property
    def length(self) -> int:
        return len(self.word)

    def name(self) -> str:
        return "".join(f"s{i}" for i in self.word) or "e"

    def act(self, lam: Sequence[int]) -> Vec:
        return _matvec(self.action, lam)

    def act_root(self, beta: Sequence[int]) -> Vec:
        return _matvec(self.root_action, beta)


@dataclass(frozen=True)
class RootSystem:
    label: str
    cartan: Mat

    @property
    def rank(self) -> int:
        return len(self.cartan)

    @property
    def indices(self) -> tuple[int, ...]:
        return tuple(range(1, self.rank + 1))

    # lattice data -----------------------------------------------------
    @property
    def simple_in_omega(self) -> Mat:
        return self.cartan

    @property
    def omega_in_alpha(self) -> tuple[tuple[Fraction, ...], ...]:
        # omega_i = sum_j M[i][j] alpha_j with M = cartan^{-1}
        return _frac_inverse(self.cartan)

    def alpha_to_omega(self, beta: Sequence[int]) -> Vec:
        return tuple(sum(beta[k] * self.cartan[k][j] for k in range(self.rank)) for j in range(self.rank))

    def omega_to_alpha(self, lam: Sequence[int]) -> tuple[Fraction, ...]:
        inv = self.omega_in_alpha
        return tuple(sum(lam[k] * inv[k][j] for k in range(self.rank)) for j in range(self.rank))

    def simple_root(self, i: int) -> Vec:
        """alpha_i in alpha coordinates (1-based i)."""
        return tuple(int(j == i - 1) for j in range(self.rank))

    def coroot_pairing(self, beta: Sequence[int], i: int) -> int:
        """<beta, alpha_i^vee> for beta in alpha coordinates."""
        return sum(beta[k] * self.cartan[k][i - 1] for k in range(self.rank))

    def braid_order(self, i: int, j: int) -> int:
        if i == j:
            return 1
        return _BRAID[self.cartan[i - 1][j - 1] * self.cartan[j - 1][i - 1]]

    def long_short(self, i: int, j: int) -> tuple[int, int] | None:
        """(long, short) index pair for a non-simply-laced pair, else None."""
        a, b = abs(self.cartan[i - 1][j - 1]), abs(self.cartan[j - 1][i - 1])
        if a == b:
            return None
        return (i, j) if a > b else (j, i)

    # reflections ------------------------------------------------------
    def reflection(self, i: int) -> tuple[Mat, Mat]:
        n = self.rank
        c = self.cartan
        # s_i lam = lam - lam_i alpha_i in omega coordinates
        om = tuple(
            tuple(int(r == k) - (c[i - 1][r] if k == i - 1 else 0) for k in range(n)) for r in range(n)
        )
        # s_i beta = beta - <beta, alpha_i^vee> alpha_i in alpha coordinates
        al = tuple(
            tuple(int(r == k) - (c[k][i - 1] if r == i - 1 else 0) for k in range(n)) for r in range(n)
        )
        return om, al

    def element(self, word: Iterable[int]) -> WeylElement:
        word = tuple(word)
        om, al = _identity(self.rank), _identity(self.rank)
        for i in word:
            so, sa = self.reflection(i)
            om, al = _matmul(om, so), _matmul(al, sa)
        return WeylElement(word, om, al)

    def identity(self) -> WeylElement:
        return self.element(())

    @property
    def positive_roots(self) -> tuple[Vec, ...]:
        return _positive_roots(self)

    def root_name(self, beta: Sequence[int]) -> str:
        parts = []
        for k, c in enumerate(beta):
            if c:
                parts.append(f"a{k + 1}" if c == 1 else f"{c}a{k + 1}")
        return "+".join(parts)

    def parse_root(self, token: str) -> Vec:
        token = token.strip().replace(" ", "")
        out = [0] * self.rank
        for part in token.split("+"):
            if "a" not in part:
                raise ValueError(f"bad root token {token!r}")
            coef, idx = part.split("a", 1)
            k = int(idx) - 1
            if not 0 <= k < self.rank:
                raise ValueError(f"bad root token {token!r}")
            out[k] += int(coef) if coef else 1
        beta = tuple(out)
        if beta not in self.positive_roots:
            raise ValueError(f"{token!r} is not a positive root of {self.label}")
        return beta


@lru_cache(maxsize=None)
def root_system(label: str) -> RootSystem:
    if label not in _CARTAN:
        raise ValueError(f"unknown root system {label!r}; expected one of {', '.join(SYSTEMS)}")
    return RootSystem(label, _CARTAN[label])


@lru_cache(maxsize=None)
def _positive_roots(rs: RootSystem) -> tuple[Vec, ...]:
    found = {rs.simple_root(i) for i in rs.indices}
    frontier = list(found)
    while frontier:
        nxt = []
        for beta in frontier:
            for i in rs.indices:
                _, sa = rs.reflection(i)
                img = _matvec(sa, beta)
                if all(x >= 0 for x in img) and img not in found:
                    found.add(img)
                    nxt.append(img)
        frontier = nxt
    return tuple(sorted(found, key=lambda b: (sum(b), tuple(-x for x in b))))


def is_positive(beta: Sequence[int]) -> bool:
    return all(x >= 0 for x in beta) and any(beta)


@lru_cache(maxsize=None)
def enumerate_weyl(rs: RootSystem) -> tuple[WeylElement, ...]:
    """All elements, each with its lexicographically least reduced word, by length."""
    e = rs.identity()
    seen = {e.action: e}
    level = [e]
    while level:
        best: dict[Mat, tuple[int, ...]] = {}
        for w in level:
            for i in rs.indices:
                u = rs.element(w.word + (i,))
                if u.action in seen:
                    continue
                if u.action not in best or u.word < best[u.action]:
                    best[u.action] = u.word
        level = [rs.element(best[a]) for a in sorted(best, key=lambda a: best[a])]
        for u in level:
            seen[u.action] = u
    return tuple(sorted(seen.values(), key=lambda w: (w.length, w.word)))


def lookup(rs: RootSystem, action: Mat) -> WeylElement:
    return _by_action(rs)[action]


@lru_cache(maxsize=None)
def _by_action(rs: RootSystem) -> dict[Mat, WeylElement]:
    return {w.action: w for w in enumerate_weyl(rs)}


def multiply(rs: RootSystem, u: WeylElement, w: WeylElement) -> WeylElement:
    return lookup(rs, _matmul(u.action, w.action))


def inverse(rs: RootSystem, w: WeylElement) -> WeylElement:
    return rs_element_from_word(rs, tuple(reversed(w.word)))


def rs_element_from_word(rs: RootSystem, word: Iterable[int]) -> WeylElement:
    """The group element of an arbitrary word, carrying its canonical reduced word."""
    return lookup(rs, rs.element(word).action)


def longest(rs: RootSystem) -> WeylElement:
    return enumerate_weyl(rs)[-1]


def act(w: WeylElement, lam: Sequence[int]) -> Vec:
    return w.act(lam)


def inversion_set(rs: RootSystem, w: WeylElement) -> frozenset[Vec]:
    """R(w) = {beta > 0 : w beta < 0}."""
    return frozenset(b for b in rs.positive_roots if not is_positive(w.act_root(b)))


def parabolic(rs: RootSystem, I: Iterable[int]) -> tuple[WeylElement, ...]:
    """Elements of the parabolic subgroup W_I."""
    I = set(I)
    return tuple(w for w in enumerate_weyl(rs) if set(w.word) <= I)


def minimal_coset_reps(rs: RootSystem, I: Iterable[int]) -> tuple[WeylElement, ...]:
    """Minimal length representatives of the left cosets w W_I."""
    simple = [rs.simple_root(i) for i in set(I)]
    return tuple(w for w in enumerate_weyl(rs) if all(is_positive(w.act_root(b)) for b in simple))


def subsets(indices: Sequence[int]):
    for k in range(len(indices) + 1):
        yield from combinations(indices, k)
