"""Monomial orders: total, multiplicative well-orders on exponent vectors."""

from __future__ import annotations

from dataclasses import dataclass

_KINDS = ("lex", "grlex", "grevlex", "weighted", "elim")

LESS, EQUAL, GREATER = -1, 0, 1


@dataclass(frozen=True)
class MonomialOrder:
    """Comparison rule for monomials given by their exponent vectors.

    ``perm`` lists variable indices from highest to lowest priority, so
    lex with perm=(2, 1, 0, 3) is the order induced by x2 > x1 > x0 > x3.
    Kinds:

      lex       lexicographic along perm
      grlex     total degree first, ties lex along perm
      grevlex   total degree first, ties reverse-lex
      weighted  weighted degree first (positive weights), ties reverse-lex
      elim      block order: lex on the first ``elim`` entries of perm,
                then weighted grevlex on the remaining block

    Every kind is a total order with 1 as the least monomial and is
    compatible with multiplication, which is what division and Buchberger
    loops need to terminate.
    """

    kind: str
    nvars: int
    perm: tuple[int, ...]
    weights: tuple[int, ...] | None = None
    elim: int = 0

    def __post_init__(self):
        if self.kind not in _KINDS:
            raise ValueError(f"unknown order kind {self.kind!r}")
        if self.nvars < 1:
            raise ValueError("order needs at least one variable")
        if sorted(self.perm) != list(range(self.nvars)):
            raise ValueError(f"perm must permute 0..{self.nvars - 1}, got {self.perm}")
        if self.weights is not None:
            if len(self.weights) != self.nvars:
                raise ValueError("weights length must match variable count")
            if any(w < 1 for w in self.weights):
                raise ValueError("weights must be positive")
        if self.kind == "weighted" and self.weights is None:
            raise ValueError("weighted order needs weights")
        if self.kind == "elim" and not 0 < self.elim < self.nvars:
            raise ValueError("elim block must be a proper nonempty prefix")
        object.__setattr__(self, "key", self._build_key())

    # ---- constructors -------------------------------------------------

    @classmethod
    def lex(cls, nvars: int, perm: tuple[int, ...] | None = None) -> "MonomialOrder":
        return cls("lex", nvars, tuple(perm) if perm else tuple(range(nvars)))

    @classmethod
    def grlex(cls, nvars: int, perm: tuple[int, ...] | None = None) -> "MonomialOrder":
        return cls("grlex", nvars, tuple(perm) if perm else tuple(range(nvars)))

    @classmethod
    def grevlex(cls, nvars: int, perm: tuple[int, ...] | None = None) -> "MonomialOrder":
        return cls("grevlex", nvars, tuple(perm) if perm else tuple(range(nvars)))

    @classmethod
    def weighted(cls, weights, perm: tuple[int, ...] | None = None) -> "MonomialOrder":
        """Weighted-degree order with reverse-lex tie break."""
        weights = tuple(weights)
        n = len(weights)
        return cls("weighted", n, tuple(perm) if perm else tuple(range(n)), weights)

    @classmethod
    def elimination(cls, nvars: int, elim: int = 1, weights=None,
                    perm: tuple[int, ...] | None = None) -> "MonomialOrder":
        """Block order eliminating the first ``elim`` variables of perm."""
        return cls("elim", nvars, tuple(perm) if perm else tuple(range(nvars)),
                   tuple(weights) if weights is not None else None, elim)

    # ---- comparison ---------------------------------------------------

    def _build_key(self):
        perm = self.perm
        if self.kind == "lex":
            return lambda u: tuple(u[i] for i in perm)
        if self.kind == "grlex":
            return lambda u: (sum(u), *(u[i] for i in perm))
        if self.kind == "grevlex":
            rev = tuple(reversed(perm))
            return lambda u: (sum(u), *(-u[i] for i in rev))
        if self.kind == "weighted":
            w = self.weights
            rev = tuple(reversed(perm))
            return lambda u: (sum(u[i] * wi for i, wi in enumerate(w)),
                              *(-u[i] for i in rev))
        head = perm[:self.elim]
        tail = perm[self.elim:]
        tw = tuple((i, self.weights[i] if self.weights else 1) for i in tail)
        rev = tuple(reversed(tail))
        return lambda u: (*(u[i] for i in head),
                          sum(u[i] * wi for i, wi in tw),
                          *(-u[i] for i in rev))

    def compare(self, u, v) -> int:
        """-1, 0 or 1 according to u < v, u == v, u > v."""
        if len(u) != self.nvars or len(v) != self.nvars:
            raise ValueError("exponent vector length does not match order")
        ku, kv = self.key(u), self.key(v)
        if ku < kv:
            return LESS
        if ku > kv:
            return GREATER
        return EQUAL

    @property
    def degree_compatible(self) -> bool:
        """True when the order refines total degree (needed to homogenize)."""
        if self.kind in ("grlex", "grevlex"):
            return True
        if self.kind == "weighted":
            return len(set(self.weights)) == 1
        return False
