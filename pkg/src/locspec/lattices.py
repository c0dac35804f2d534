"""Finite bounded lattices over integer element indices.

Elements are 0..size-1 and the order is a dense boolean matrix; at desk
scale (size <= ~64) density beats any sparse form.  Meet and join tables
are precomputed during validation, after which every value is immutable
and safe to share between threads.

Exhaustive oracles (directed-subset enumeration for way-below, full
subset enumeration for the frame law) are bounded; the bounds are artifact
decisions, configurable via environment variables, not mathematical ones.
"""
from __future__ import annotations

import os
import random
from functools import lru_cache, reduce
from itertools import combinations, product

from .bitset import bits, is_subset
from .errors import (
    MissingJoin,
    MissingMeet,
    NoBottom,
    NoTop,
    NotAPartialOrder,
    SizeLimitExceeded,
    ValidationError,
)


def _env_bound(name, default):
    raw = os.environ.get(name)
    return default if raw is None else int(raw)


def way_below_oracle_bound() -> int:
    """Max lattice size for the directed-subset oracle (env LOCSPEC_WAY_BELOW_BOUND)."""
    return _env_bound("LOCSPEC_WAY_BELOW_BOUND", 12)


def subset_enum_bound() -> int:
    """Max size for full 2^n subset enumerations (env LOCSPEC_SUBSET_BOUND)."""
    return _env_bound("LOCSPEC_SUBSET_BOUND", 16)


def frame_law_exhaustive_bound() -> int:
    """Max size for the exhaustive subset form of the frame law (env LOCSPEC_FRAME_LAW_BOUND)."""
    return _env_bound("LOCSPEC_FRAME_LAW_BOUND", 12)


def poset_enum_bound() -> int:
    return _env_bound("LOCSPEC_POSET_ENUM_BOUND", 5)


def _order_masks(rows):
    """Return (up, down) masks for a boolean matrix; raise if not a partial order."""
    n = len(rows)
    up = [0] * n
    down = [0] * n
    for i in range(n):
        for j in range(n):
            if rows[i][j]:
                up[i] |= 1 << j
                down[j] |= 1 << i
    for i in range(n):
        if not rows[i][i]:
            raise NotAPartialOrder((i, i), "relation is not reflexive")
    for i in range(n):
        for j in range(n):
            if i != j and rows[i][j] and rows[j][i]:
                raise NotAPartialOrder((i, j), "relation is not antisymmetric")
    for i in range(n):
        for j in bits(up[i]):
            if up[j] & ~up[i]:
                raise NotAPartialOrder((i, j), "relation is not transitive")
    return tuple(up), tuple(down)


class Poset:
    """A validated finite partial order (generator substrate, not a lattice)."""

    __slots__ = ("size", "leq", "labels", "up", "down", "_hash")

    def __init__(self, leq, labels=None):
        rows = tuple(tuple(bool(v) for v in row) for row in leq)
        n = len(rows)
        if any(len(r) != n for r in rows):
            raise ValidationError("order relation must be a square matrix")
        self.size = n
        self.leq = rows
        self.labels = tuple(labels) if labels is not None else None
        self.up, self.down = _order_masks(rows)
        self._hash = hash((n, rows))

    def le(self, a, b) -> bool:
        return self.leq[a][b]

    def label(self, a) -> str:
        return self.labels[a] if self.labels else str(a)

    def __eq__(self, other):
        return isinstance(other, Poset) and self.size == other.size and self.leq == other.leq

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"Poset(size={self.size})"


class FiniteLattice:
    """A validated finite bounded lattice.

    Construction checks, in order: square boolean matrix, partial-order
    axioms, existence of all binary meets and joins, bottom and top.  The
    first violated axiom is raised as its own exception type.
    """

    __slots__ = ("size", "leq", "labels", "up", "down", "meet_table", "join_table",
                 "bottom", "top", "_hash")

    def __init__(self, leq, labels=None):
        rows = tuple(tuple(bool(v) for v in row) for row in leq)
        n = len(rows)
        if any(len(r) != n for r in rows):
            raise ValidationError("order relation must be a square matrix")
        if n == 0:
            raise NoBottom()
        self.size = n
        self.leq = rows
        self.labels = tuple(labels) if labels is not None else None
        self.up, self.down = _order_masks(rows)

        meet = [[0] * n for _ in range(n)]
        join = [[0] * n for _ in range(n)]
        for i in range(n):
            for j in range(i, n):
                common = self.down[i] & self.down[j]
                glb = next((m for m in bits(common) if is_subset(common, self.down[m])), None)
                if glb is None:
                    raise MissingMeet((i, j))
                common = self.up[i] & self.up[j]
                lub = next((m for m in bits(common) if is_subset(common, self.up[m])), None)
                if lub is None:
                    raise MissingJoin((i, j))
                meet[i][j] = meet[j][i] = glb
                join[i][j] = join[j][i] = lub
        self.meet_table = tuple(tuple(r) for r in meet)
        self.join_table = tuple(tuple(r) for r in join)

        full = (1 << n) - 1
        self.bottom = next((i for i in range(n) if self.up[i] == full), None)
        if self.bottom is None:
            raise NoBottom()
        self.top = next((i for i in range(n) if self.down[i] == full), None)
        if self.top is None:
            raise NoTop()
        self._hash = hash((n, rows))

    def le(self, a, b) -> bool:
        return self.leq[a][b]

    def meet(self, a, b) -> int:
        return self.meet_table[a][b]

    def join(self, a, b) -> int:
        return self.join_table[a][b]

    def meet_all(self, elems) -> int:
        return reduce(self.meet, elems, self.top)

    def join_all(self, elems) -> int:
        return reduce(self.join, elems, self.bottom)

    @property
    def elements(self):
        return range(self.size)

    def label(self, a) -> str:
        return self.labels[a] if self.labels else str(a)

    def __eq__(self, other):
        return (isinstance(other, FiniteLattice)
                and self.size == other.size and self.leq == other.leq)

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"FiniteLattice(size={self.size})"


def validate_lattice(leq, labels=None) -> FiniteLattice:
    """Validate an order matrix into a FiniteLattice with meet/join tables."""
    return FiniteLattice(leq, labels)


def validate_poset(leq, labels=None) -> Poset:
    return Poset(leq, labels)


@lru_cache(maxsize=None)
def is_distributive(L: FiniteLattice) -> bool:
    """Brute force a & (b | c) == (a & b) | (a & c) over all triples."""
    for a in L.elements:
        for b in L.elements:
            for c in L.elements:
                if L.meet(a, L.join(b, c)) != L.join(L.meet(a, b), L.meet(a, c)):
                    return False
    return True


def _subset_joins(L: FiniteLattice):
    """DP table: joins[s] is the join of the subset with mask s."""
    joins = [L.bottom] * (1 << L.size)
    jt = L.join_table
    for s in range(1, 1 << L.size):
        low = (s & -s).bit_length() - 1
        joins[s] = jt[joins[s & (s - 1)]][low]
    return joins


def check_frame_law(L: FiniteLattice, exhaustive_bound=None) -> bool:
    """Check a & join(S) == join(a & s for s in S).

    Up to ``exhaustive_bound`` elements every subset S is enumerated.  For
    larger lattices the law reduces, on a finite lattice, to the binary
    distributive law (any join is a fold of binary joins); we check that
    plus a fixed deterministic sample of subsets as a tripwire against
    bookkeeping bugs.
    """
    bound = frame_law_exhaustive_bound() if exhaustive_bound is None else exhaustive_bound
    n = L.size
    if n <= bound:
        joins = _subset_joins(L)
        for a in L.elements:
            # meet_joins[s] = join of {a & s_i} over members of s
            meet_joins = [L.bottom] * (1 << n)
            for s in range(1, 1 << n):
                low = (s & -s).bit_length() - 1
                meet_joins[s] = L.join(meet_joins[s & (s - 1)], L.meet(a, low))
            for s in range(1 << n):
                if L.meet(a, joins[s]) != meet_joins[s]:
                    return False
        return True
    if not is_distributive(L):
        return False
    rng = random.Random(0x5EED)
    for _ in range(256):
        s = rng.getrandbits(n)
        sup = L.join_all(bits(s))
        for a in L.elements:
            if L.meet(a, sup) != L.join_all(L.meet(a, x) for x in bits(s)):
                return False
    return True


@lru_cache(maxsize=None)
def primes(L: FiniteLattice) -> frozenset:
    """Non-top elements p with p == a & b forcing p in {a, b} (brute force)."""
    out = set()
    for p in L.elements:
        if p == L.top:
            continue
        if all(L.meet(a, b) != p or a == p or b == p
               for a in L.elements for b in L.elements):
            out.add(p)
    return frozenset(out)


def meet_irreducibles(L: FiniteLattice) -> frozenset:
    """Independent oracle: non-top elements with exactly one upper cover."""
    out = set()
    for p in L.elements:
        if p == L.top:
            continue
        strictly_above = [q for q in bits(L.up[p]) if q != p]
        covers = [q for q in strictly_above
                  if all(not (L.le(r, q) and r != q) for r in strictly_above)]
        if len(covers) == 1:
            out.add(p)
    return frozenset(out)


def _directed_subset_masks(L: FiniteLattice):
    """All nonempty subsets in which every pair has an upper bound inside."""
    n = L.size
    up = L.up
    out = []
    for s in range(1, 1 << n):
        members = list(bits(s))
        ok = True
        for i, a in enumerate(members):
            for b in members[i + 1:]:
                if not (up[a] & up[b] & s):
                    ok = False
                    break
            if not ok:
                break
        if ok:
            out.append(s)
    return out


@lru_cache(maxsize=None)
def _way_below_rows(L: FiniteLattice, bound: int):
    """rows[b] = mask of all a with b way below a, by directed-subset enumeration."""
    n = L.size
    if n > bound:
        raise SizeLimitExceeded("way-below directed-subset oracle", n, bound)
    joins = _subset_joins(L)
    not_wb = [0] * n
    for s in _directed_subset_masks(L):
        above_join = L.down[joins[s]]  # all a with a <= join(s)
        for b in range(n):
            if not (L.up[b] & s):       # no d in s with b <= d
                not_wb[b] |= above_join
    full = (1 << n) - 1
    return tuple(full & ~row for row in not_wb)


def way_below(L: FiniteLattice, b: int, a: int, method: str = "auto", bound=None) -> bool:
    """Decide b << a.

    method "oracle" enumerates every directed subset (SizeLimitExceeded past
    the bound); "shortcut" uses the finite-lattice fact that way-below is
    plain <=; "auto" picks the oracle when affordable.
    """
    bound = way_below_oracle_bound() if bound is None else bound
    if method == "shortcut" or (method == "auto" and L.size > bound):
        return L.le(b, a)
    return bool(_way_below_rows(L, bound)[b] >> a & 1)


def way_below_method(L: FiniteLattice, bound=None) -> str:
    """Which method 'auto' would use, for report annotations."""
    bound = way_below_oracle_bound() if bound is None else bound
    return "oracle" if L.size <= bound else "shortcut"


def is_continuous_frame(L: FiniteLattice, method: str = "auto") -> bool:
    """True iff every a is the join of the elements way below it."""
    for a in L.elements:
        below = [b for b in L.elements if way_below(L, b, a, method=method)]
        if L.join_all(below) != a:
            return False
    return True


def is_spatial(L: FiniteLattice) -> bool:
    """True iff every element is the meet of the primes above it."""
    ps = primes(L)
    for a in L.elements:
        if L.meet_all(p for p in ps if L.le(a, p)) != a:
            return False
    return True


def downset_masks(P: Poset):
    """Sorted masks of all down-closed subsets of P."""
    n = P.size
    bound = subset_enum_bound()
    if n > bound:
        raise SizeLimitExceeded("downset enumeration", n, bound)
    out = []
    for s in range(1 << n):
        if all(is_subset(P.down[x], s) for x in bits(s)):
            out.append(s)
    return sorted(out)


def downset_lattice(P: Poset) -> FiniteLattice:
    """The lattice of down-closed subsets of P under inclusion (always a frame)."""
    masks = downset_masks(P)
    leq = [[is_subset(a, b) for b in masks] for a in masks]
    labels = ["{" + ",".join(P.label(i) for i in bits(m)) + "}" for m in masks]
    return FiniteLattice(leq, labels)


def enumerate_posets(n: int, bound=None):
    """Yield every labeled partial order on n points exactly once.

    Each unordered pair is assigned one of three states (incomparable,
    i < j, j < i); assignments whose relation is transitive are exactly
    the labeled posets, each hit once.
    """
    bound = poset_enum_bound() if bound is None else bound
    if n > bound:
        raise SizeLimitExceeded("labeled poset enumeration", n, bound)
    pairs = list(combinations(range(n), 2))
    for states in product((0, 1, 2), repeat=len(pairs)):
        up = [1 << i for i in range(n)]
        for (i, j), st in zip(pairs, states):
            if st == 1:
                up[i] |= 1 << j
            elif st == 2:
                up[j] |= 1 << i
        if all(all(is_subset(up[j], up[i]) for j in bits(up[i])) for i in range(n)):
            rows = [[bool(up[i] >> j & 1) for j in range(n)] for i in range(n)]
            yield Poset(rows)
