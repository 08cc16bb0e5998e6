"""Permutation group engine for desk-scale groups.

Permutations are tuples of images on the points 0..degree-1 (0-based
internally; cycle notation in all I/O is 1-based).  Groups carry a
deterministic base and strong generating set, so membership, order and
element enumeration are exact.  Everything here is immutable after
construction and all operations are pure.

The product convention is left-to-right: mul(p, q) applies p first,
then q.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from math import factorial

Perm = tuple


class CapExceeded(Exception):
    """A configured enumeration cap was hit; the result is undecided."""


def identity(degree):
    return tuple(range(degree))


def mul(p, q):
    """Product "apply p, then q"."""
    return tuple(map(q.__getitem__, p))


def inverse(p):
    inv = [0] * len(p)
    for i, j in enumerate(p):
        inv[j] = i
    return tuple(inv)


def conjugate(x, g):
    """g * x * g^-1 in the left-to-right convention: maps g[i] to g[x[i]]."""
    out = [0] * len(x)
    for i, xi in enumerate(x):
        out[g[i]] = g[xi]
    return tuple(out)


def power(p, n):
    if n < 0:
        return power(inverse(p), -n)
    q = identity(len(p))
    while n:
        if n & 1:
            q = mul(q, p)
        p = mul(p, p)
        n >>= 1
    return q


def cycle_lengths(p):
    """Sorted (descending) cycle lengths, fixed points included."""
    seen = bytearray(len(p))
    out = []
    for i in range(len(p)):
        if seen[i]:
            continue
        n = 0
        j = i
        while not seen[j]:
            seen[j] = 1
            j = p[j]
            n += 1
        out.append(n)
    out.sort(reverse=True)
    return tuple(out)


def perm_order(p):
    order = 1
    for n in set(cycle_lengths(p)):
        order = order * n // _gcd(order, n)
    return order


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a


def is_p_element(p, prime):
    """True iff every cycle length is a power of prime (identity included)."""
    for n in set(cycle_lengths(p)):
        while n % prime == 0:
            n //= prime
        if n != 1:
            return False
    return True


_CYCLE_RE = re.compile(r"\(\s*([0-9]+(?:\s*[, ]\s*[0-9]+)*)?\s*\)")


def parse_perm(text, degree):
    """Parse disjoint-cycle notation with 1-based points, e.g. "(1,2)(3,4)".

    The identity is written "()".
    """
    text = text.strip()
    if not text:
        raise ValueError("empty permutation string")
    pos = 0
    images = list(range(degree))
    for m in _CYCLE_RE.finditer(text):
        if m.start() != pos:
            raise ValueError(f"could not parse permutation {text!r}")
        pos = m.end()
        if not m.group(1):
            continue
        pts = [int(t) - 1 for t in re.split(r"[,\s]+", m.group(1).strip())]
        if any(not 0 <= t < degree for t in pts):
            raise ValueError(f"point out of range in {text!r} (degree {degree})")
        if len(set(pts)) != len(pts):
            raise ValueError(f"repeated point in cycle in {text!r}")
        for a, b in zip(pts, pts[1:]):
            images[a] = b
        images[pts[-1]] = pts[0]
    if pos != len(text):
        raise ValueError(f"could not parse permutation {text!r}")
    if sorted(images) != list(range(degree)):
        raise ValueError(f"cycles in {text!r} are not disjoint")
    return tuple(images)


def max_point(text):
    """Largest 1-based point mentioned in a cycle string, 0 if none."""
    pts = [int(t) for t in re.findall(r"[0-9]+", text)]
    return max(pts, default=0)


def format_perm(p):
    """Disjoint-cycle notation, 1-based; identity is "()"."""
    seen = bytearray(len(p))
    parts = []
    for i in range(len(p)):
        if seen[i] or p[i] == i:
            seen[i] = 1
            continue
        cyc = [i]
        seen[i] = 1
        j = p[i]
        while j != i:
            seen[j] = 1
            cyc.append(j)
            j = p[j]
        parts.append("(" + ",".join(str(k + 1) for k in cyc) + ")")
    return "".join(parts) if parts else "()"


class PermGroup:
    """Finite permutation group with a base and strong generating set.

    Built by a deterministic (non-randomized) Schreier-Sims run, so
    repeated constructions from the same generators give identical
    internal state.  Instances are immutable.
    """

    __slots__ = ("degree", "generators", "base", "_transversals", "_strong", "order")

    def __init__(self, generators, degree):
        for g in generators:
            if len(g) != degree:
                raise ValueError("generator degree mismatch")
        self.degree = degree
        self.generators = tuple(tuple(g) for g in generators)
        self.base = []
        self._transversals = []
        self._strong = []
        self._build()
        order = 1
        for t in self._transversals:
            order *= len(t)
        self.order = order

    # -- construction ---------------------------------------------------
    #
    # _strong[i] holds the strong generators fixing base[:i]; the sets are
    # cumulative (a generator fixing base[:j] appears in levels 0..j).
    # Levels are verified bottom-up: verifying level i assumes all deeper
    # levels already satisfy the Schreier condition, so sifting through
    # them is a correct membership test.

    def _build(self):
        ident = identity(self.degree)
        gens = [g for g in self.generators if g != ident]
        if not gens:
            return
        for g in gens:
            if all(g[b] == b for b in self.base):
                self.base.append(min(i for i in range(self.degree) if g[i] != i))
        k = len(self.base)
        self._strong = [[] for _ in range(k)]
        for g in gens:
            j = next(l for l, b in enumerate(self.base) if g[b] != b)
            for l in range(j + 1):
                self._strong[l].append(g)
        self._transversals = [None] * k
        for l in range(k):
            self._recompute_transversal(l)
        i = k - 1
        while i >= 0:
            deeper = self._verify_level(i)
            i = i - 1 if deeper is None else deeper

    def _recompute_transversal(self, level):
        base_pt = self.base[level]
        trans = {base_pt: identity(self.degree)}
        queue = [base_pt]
        gens = self._strong[level]
        for pt in queue:
            u = trans[pt]
            for s in gens:
                q = s[pt]
                if q not in trans:
                    trans[q] = mul(u, s)
                    queue.append(q)
        self._transversals[level] = trans

    def _verify_level(self, i):
        """Sift every Schreier generator of level i through deeper levels.

        On failure, installs the residue as a strong generator at levels
        i+1..j and returns j (the level to re-verify from); returns None
        when the level passes.
        """
        trans = self._transversals[i]
        for pt in sorted(trans):
            u = trans[pt]
            for s in self._strong[i]:
                schreier = mul(mul(u, s), inverse(trans[s[pt]]))
                residue, j = self._sift(schreier, i + 1)
                if residue is None:
                    continue
                if j == len(self.base):
                    self.base.append(
                        min(m for m in range(self.degree) if residue[m] != m)
                    )
                    self._strong.append([])
                    self._transversals.append(None)
                for l in range(i + 1, j + 1):
                    self._strong[l].append(residue)
                for l in range(i + 1, j + 1):
                    self._recompute_transversal(l)
                return j
        return None

    def _sift(self, x, start=0):
        """Sift x through levels >= start.

        Returns (residue, level): residue None means x sifted to the
        identity; otherwise the residue fixes base[:level] but cannot be
        matched at `level`.
        """
        ident = identity(self.degree)
        level = start
        while x != ident:
            if level == len(self.base):
                return x, level
            trans = self._transversals[level]
            pt = x[self.base[level]]
            if pt not in trans:
                return x, level
            x = mul(x, inverse(trans[pt]))
            level += 1
        return None, level

    # -- queries ---------------------------------------------------------

    def __contains__(self, x):
        if len(x) != self.degree:
            raise ValueError("degree mismatch in membership test")
        residue, _ = self._sift(tuple(x))
        return residue is None

    def __len__(self):
        raise TypeError("use .order (may exceed index range)")

    def elements(self):
        """Stream all elements in a deterministic order."""
        yield from self._elements_level(0)

    def _elements_level(self, level):
        if level == len(self.base):
            yield identity(self.degree)
            return
        reps = [self._transversals[level][pt] for pt in sorted(self._transversals[level])]
        for h in self._elements_level(level + 1):
            for u in reps:
                yield mul(h, u)

    def moved_points(self):
        moved = set()
        for g in self.generators:
            moved.update(i for i in range(self.degree) if g[i] != i)
        return sorted(moved)

    def is_natural_symmetric(self):
        """True iff the group is the full symmetric group on its moved points."""
        moved = self.moved_points()
        return len(moved) >= 2 and self.order == factorial(len(moved))

    def is_natural_alternating(self):
        """True iff the group is the alternating group on its moved points."""
        moved = self.moved_points()
        if len(moved) < 3 or 2 * self.order != factorial(len(moved)):
            return False
        return all(_parity(g) == 0 for g in self.generators)


def _parity(p):
    """0 for even permutations, 1 for odd."""
    return (len(p) - len(cycle_lengths(p))) & 1


def group_from_generators(gens, degree=None):
    """Group generated by `gens`; empty list gives the trivial group."""
    gens = [tuple(g) for g in gens]
    if degree is None:
        if not gens:
            raise ValueError("degree required for an empty generator list")
        degree = len(gens[0])
    return PermGroup(gens, degree)


def trivial_group(degree):
    return PermGroup([], degree)


def closure(elements, gens, limit=10**6):
    """Set-closure of `elements` under right multiplication by `gens`."""
    out = set(elements)
    queue = list(elements)
    for x in queue:
        for g in gens:
            y = mul(x, g)
            if y not in out:
                if len(out) >= limit:
                    raise CapExceeded("closure cap exceeded")
                out.add(y)
                queue.append(y)
    return out


# -- Sylow subgroups ------------------------------------------------------


def _p_part(n, p):
    e = 1
    while n % p == 0:
        n //= p
        e *= p
    return e


def sylow_subgroup(G, p):
    """A Sylow p-subgroup of G, deterministically chosen.

    Streams the group once to collect its p-elements, then grows a
    p-subgroup: while P is not yet of full p-power order, the first
    p-element normalizing P but outside it is adjoined (such an element
    exists because a proper p-subgroup has a strictly larger normalizer
    inside any Sylow subgroup containing it).
    """
    if p < 2 or any(p % k == 0 for k in range(2, int(p**0.5) + 1)):
        raise ValueError(f"{p} is not prime")
    target = _p_part(G.order, p)
    if target == 1:
        return trivial_group(G.degree)
    ident = identity(G.degree)
    pelems = [x for x in G.elements() if x != ident and is_p_element(x, p)]
    pelems.sort()
    start = max(pelems, key=lambda x: (perm_order(x), [-i for i in x]))
    gens = [start]
    pset = closure({ident, start}, gens)
    while len(pset) < target:
        for x in pelems:
            if x in pset:
                continue
            if all(conjugate(s, x) in pset for s in gens):
                gens.append(x)
                pset = closure(pset | {x}, gens)
                break
        else:
            raise AssertionError("Sylow growth stalled; group data inconsistent")
    S = group_from_generators(gens, G.degree)
    assert S.order == target
    return S


# -- conjugacy classes -----------------------------------------------------


@dataclass(frozen=True)
class ConjClass:
    representative: Perm
    size: int
    element_order: int


def conjugacy_classes(S, cap=10**5):
    """Conjugacy classes of S by full element enumeration.

    Classes are ordered canonically: by element order, then class size,
    then lexicographically minimal representative (so the identity class
    is always first).
    """
    if S.order > cap:
        raise CapExceeded(f"group order {S.order} exceeds class enumeration cap {cap}")
    elements = sorted(S.elements())
    remaining = set(elements)
    classes = []
    gens = S.generators
    for x in elements:
        if x not in remaining:
            continue
        orbit = {x}
        queue = [x]
        for y in queue:
            for g in gens:
                z = conjugate(y, g)
                if z not in orbit:
                    orbit.add(z)
                    queue.append(z)
        remaining -= orbit
        classes.append((orbit, min(orbit)))
    out = [
        ConjClass(representative=rep, size=len(orbit), element_order=perm_order(rep))
        for orbit, rep in classes
    ]
    out.sort(key=lambda c: (c.element_order, c.size, c.representative))
    return out


def class_partition(S, cap=10**5):
    """Same classes as conjugacy_classes, returned as (classes, element->index)."""
    classes = conjugacy_classes(S, cap)
    lookup = {}
    gens = S.generators
    for idx, c in enumerate(classes):
        orbit = {c.representative}
        queue = [c.representative]
        for y in queue:
            for g in gens:
                z = conjugate(y, g)
                if z not in orbit:
                    orbit.add(z)
                    queue.append(z)
        for y in orbit:
            lookup[y] = idx
    return classes, lookup


# -- conjugacy testing -----------------------------------------------------


def _cycle_type_on(p, points):
    """Cycle lengths of p restricted to an invariant point set (fixed included)."""
    pts = set(points)
    seen = set()
    out = []
    for i in points:
        if i in seen:
            continue
        n = 0
        j = i
        while j not in seen:
            seen.add(j)
            j = p[j]
            n += 1
        out.append(n)
    assert seen == pts
    out.sort(reverse=True)
    return tuple(out)


def _canonical_conjugator(x, y, points, degree):
    """Some s in Sym(points) with s*x*s^-1 = y, given equal cycle types."""

    def cycles_of(p):
        seen = set()
        cycs = []
        for i in sorted(points):
            if i in seen:
                continue
            cyc = [i]
            seen.add(i)
            j = p[i]
            while j != i:
                seen.add(j)
                cyc.append(j)
                j = p[j]
            cycs.append(cyc)
        cycs.sort(key=lambda c: (-len(c), c[0]))
        return cycs

    s = list(range(degree))
    for cx, cy in zip(cycles_of(x), cycles_of(y)):
        assert len(cx) == len(cy)
        for a, b in zip(cx, cy):
            s[a] = b
    return tuple(s)


def _has_odd_centralizer_element(x, points):
    """Whether some odd permutation of `points` centralizes x.

    True iff x (restricted to `points`) has an even-length cycle or two
    cycles of equal length: the cycle itself, or the block swap, is an
    odd centralizing element exactly in those cases.
    """
    lengths = _cycle_type_on(x, points)
    if any(n % 2 == 0 for n in lengths):
        return True
    return len(lengths) != len(set(lengths))


def conjugation_orbit(x, gens, cap=10**6, targets=None):
    """Orbit of x under conjugation by a generator list.

    Stops early once every element of `targets` has been seen.  Raises
    CapExceeded when the orbit grows past `cap` (result undecided).
    """
    orbit = {x}
    queue = [x]
    waiting = set(targets) - orbit if targets is not None else None
    if waiting is not None and not waiting:
        return orbit
    for y in queue:
        for g in gens:
            z = conjugate(y, g)
            if z not in orbit:
                if len(orbit) >= cap:
                    raise CapExceeded(f"conjugation orbit cap {cap} exceeded")
                orbit.add(z)
                queue.append(z)
                if waiting is not None:
                    waiting.discard(z)
                    if not waiting:
                        return orbit
    return orbit


def is_conjugate(G, x, y, cap=10**6):
    """Whether x and y are conjugate in G.

    Uses the cycle-type fast path when G is the full symmetric or
    alternating group on its moved points, otherwise enumerates the
    conjugation orbit of x (capped; CapExceeded means undecided).
    """
    x, y = tuple(x), tuple(y)
    if len(x) != G.degree or len(y) != G.degree:
        raise ValueError("degree mismatch")
    if x == y:
        return True
    if cycle_lengths(x) != cycle_lengths(y):
        return False
    if G.is_natural_symmetric():
        return True
    if G.is_natural_alternating():
        points = G.moved_points()
        s = _canonical_conjugator(x, y, points, G.degree)
        if _parity(s) == 0:
            return True
        return _has_odd_centralizer_element(x, points)
    return y in conjugation_orbit(x, G.generators, cap=cap, targets={y})


def fuse_by_conjugacy(G, reps, cap=10**6):
    """Partition `reps` by G-conjugacy; returns a list of group labels 0..k-1.

    Pairs are pre-filtered by cycle type, and each needed conjugation
    orbit is walked once, marking every representative it contains.
    """
    n = len(reps)
    labels = [None] * n
    next_label = 0
    fast_sym = G.is_natural_symmetric()
    fast_alt = G.is_natural_alternating()
    for i in range(n):
        if labels[i] is not None:
            continue
        labels[i] = next_label
        candidates = [
            j
            for j in range(i + 1, n)
            if labels[j] is None and cycle_lengths(reps[j]) == cycle_lengths(reps[i])
        ]
        if fast_sym:
            matched = candidates
        elif fast_alt:
            matched = [j for j in candidates if is_conjugate(G, reps[i], reps[j])]
        elif candidates:
            orbit = conjugation_orbit(
                reps[i], G.generators, cap=cap, targets=set(reps[j] for j in candidates)
            )
            matched = [j for j in candidates if reps[j] in orbit]
        else:
            matched = []
        for j in matched:
            labels[j] = next_label
        next_label += 1
    return labels
