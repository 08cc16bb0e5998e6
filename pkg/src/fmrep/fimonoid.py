"""The monoid of nonnegative invariant representations inside a
RepLattice: atom enumeration and factorization analysis.

In lattice coordinates the monoid is the set of lattice points of a
pointed full-dimensional rational cone {x in R^d : x*B >= 0}, with B
the HNF basis of the lattice.  Atoms (the minimal generating set, i.e.
the Hilbert basis) are enumerated by the classical certified pipeline:

    extreme rays (double description)
    -> pulling triangulation of the cone
    -> lattice points of each simplicial fundamental parallelepiped
    -> global reduction of the candidate set.

A second, independent enumeration walks the sublattice points inside
the box bounded by the regular representation and keeps minimal
elements; it is complete only if every atom is a subrepresentation of
the regular representation, so it serves as a cross-check oracle rather
than the primary path.

Everything downstream of the atoms is exact integer arithmetic: a
monoid is factorial iff the atom count equals the lattice rank, and
half-factorial iff the coefficient-sum functional vanishes on the
relation lattice of the atoms; witnesses are split relations.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Optional

from .chartab import CharacterTable
from .fusion import FusionPattern
from .intlin import (
    hermite_normal_form,
    integer_kernel,
    lattices_equal,
    nonzero_rows,
    rank,
    solve_integer,
)
from .repring import RepLattice

RANK_CAP = 12
IRR_CAP = 32
DEFAULT_SEARCH_BUDGET = 10**8


class DimensionCapExceeded(Exception):
    pass


class BudgetExceeded(Exception):
    pass


@dataclass(frozen=True)
class FactorizationWitness:
    """Two distinct factorizations of one monoid element into atoms.

    decomp_a and decomp_b are sorted tuples of atom indices with
    multiplicity; their atom sums both equal `element`.
    """

    element: tuple
    decomp_a: tuple
    decomp_b: tuple

    @property
    def lengths(self):
        return (len(self.decomp_a), len(self.decomp_b))


@dataclass(frozen=True)
class MonoidAnalysis:
    lattice: RepLattice
    atoms: tuple
    factorial: bool
    half_factorial: bool
    factorization_witness: Optional[FactorizationWitness]
    length_witness: Optional[FactorizationWitness]
    regular_conjecture_holds: bool
    transitive: bool


# ------------------------------------------------------------ cone tools


def _gcd_list(xs):
    g = 0
    for x in xs:
        x = abs(x)
        while x:
            g, x = x, g % x
    return g


def _primitive(v):
    g = _gcd_list(v)
    return tuple(x // g for x in v) if g > 1 else tuple(v)


def _mat_inverse(rows):
    """Exact inverse of a square integer matrix, as Fractions."""
    n = len(rows)
    aug = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(rows)]
    for c in range(n):
        piv = next(i for i in range(c, n) if aug[i][c])
        aug[c], aug[piv] = aug[piv], aug[c]
        inv = 1 / aug[c][c]
        aug[c] = [x * inv for x in aug[c]]
        for i in range(n):
            if i != c and aug[i][c]:
                f = aug[i][c]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[c])]
    return [row[n:] for row in aug]


def extreme_rays(constraints, d):
    """Extreme rays of the pointed cone {x in R^d : x . c >= 0 for all c}.

    Incremental double description with the combinatorial adjacency
    test.  The constraint list must have rank d (pointedness).
    """
    init = []
    for j, c in enumerate(constraints):
        if rank([list(constraints[i]) for i in init] + [list(c)]) > len(init):
            init.append(j)
            if len(init) == d:
                break
    assert len(init) == d, "constraints do not span: cone not pointed"
    A = [[constraints[j][i] for j in init] for i in range(d)]  # columns = chosen constraints
    inv = _mat_inverse(A)
    det = _int_det(A)
    rays = []
    for i in range(d):
        # row i of adj(A) = det * (A^-1)[i], integral by Cramer
        row = [inv[i][j] * det for j in range(d)]
        assert all(x.denominator == 1 for x in row)
        ray = [int(x) for x in row]
        if det < 0:
            ray = [-x for x in ray]
        rays.append(_primitive(ray))
    processed = list(init)
    for j, c in enumerate(constraints):
        if j in init:
            continue
        vals = {r: _dot(r, c) for r in rays}
        minus = [r for r in rays if vals[r] < 0]
        if not minus:
            processed.append(j)
            continue
        plus = [r for r in rays if vals[r] > 0]
        zero = [r for r in rays if vals[r] == 0]
        active = {
            r: frozenset(i for i in processed if _dot(r, constraints[i]) == 0)
            for r in rays
        }
        new_rays = []
        for rp in plus:
            for rm in minus:
                common = active[rp] & active[rm]
                if any(
                    r3 is not rp and r3 is not rm and common <= active[r3]
                    for r3 in rays
                ):
                    continue
                w = tuple(
                    vals[rp] * rm[t] - vals[rm] * rp[t] for t in range(d)
                )
                new_rays.append(_primitive(w))
        rays = plus + zero + sorted(set(new_rays))
        processed.append(j)
    rays = sorted(set(map(tuple, rays)))
    for r in rays:
        assert all(_dot(r, c) >= 0 for c in constraints)
    return rays


def _int_det(A):
    from .intlin import det

    return det(A)


def _dot(x, y):
    return sum(a * b for a, b in zip(x, y))


def _triangulate_cone(rays, constraints, d):
    """Pulling triangulation; returns simplices as tuples of ray indices.

    Faces are handled combinatorially: a facet of a face is the tight
    set of some valid inequality, restricted to the face's rays.
    """
    ray_list = [tuple(r) for r in rays]
    tight = [frozenset(i for i, r in enumerate(ray_list) if _dot(r, c) == 0) for c in constraints]

    @lru_cache(maxsize=None)
    def face_rank(ray_idx_set):
        return rank([list(ray_list[i]) for i in sorted(ray_idx_set)])

    @lru_cache(maxsize=None)
    def triangulate(face, dim):
        idxs = sorted(face)
        if len(idxs) == dim:
            return (tuple(idxs),)
        v0 = idxs[0]
        out = []
        seen = set()
        for t in tight:
            sub = face & t
            if v0 in sub or sub in seen or sub == face or not sub:
                continue
            seen.add(sub)
            if face_rank(sub) != dim - 1:
                continue
            for simplex in triangulate(sub, dim - 1):
                out.append((v0,) + simplex)
        return tuple(out)

    top = frozenset(range(len(ray_list)))
    assert face_rank(top) == d, "cone is not full-dimensional"
    return list(triangulate(top, d))


def _parallelepiped_points(gens):
    """Nonzero lattice points of {sum t_i g_i : 0 <= t_i < 1}.

    One point per coset of Z^d modulo the row lattice of `gens`,
    enumerated through the HNF box and folded into the half-open
    parallelepiped.
    """
    d = len(gens)
    H = nonzero_rows(hermite_normal_form([list(g) for g in gens])[0])
    assert len(H) == d
    diag = [H[i][i] for i in range(d)]
    if all(x == 1 for x in diag):
        return []
    inv = _mat_inverse([list(g) for g in gens])
    points = []
    counters = [0] * d
    while True:
        z = counters
        if any(z):
            t = [sum(z[kk] * inv[kk][i] for kk in range(d)) for i in range(d)]
            t = [x - (x.numerator // x.denominator) for x in t]
            pt = tuple(
                sum(t[kk] * gens[kk][i] for kk in range(d)) for i in range(d)
            )
            assert all(x.denominator == 1 for x in pt)
            pt = tuple(int(x) for x in pt)
            if any(pt):
                points.append(pt)
        i = d - 1
        while i >= 0 and counters[i] == diag[i] - 1:
            counters[i] = 0
            i -= 1
        if i < 0:
            break
        counters[i] += 1
    return points


def atoms_hilbert(lattice: RepLattice, degrees):
    """Complete atom list of the monoid N^r intersect lattice.

    Canonical order: by total dimension (degree-weighted coordinate
    sum), then lexicographically on the multiplicity vector.
    """
    d, r = lattice.rank, lattice.irr_count
    if d > RANK_CAP or r > IRR_CAP:
        raise DimensionCapExceeded(f"rank {d} x irreducibles {r} beyond caps ({RANK_CAP}, {IRR_CAP})")
    B = [list(row) for row in lattice.basis]
    assert rank(B) == d, "lattice basis is not full rank; cone not pointed"
    constraints = [tuple(B[i][j] for i in range(d)) for j in range(r)]
    rays = extreme_rays(constraints, d)
    simplices = _triangulate_cone(rays, constraints, d)
    candidates = set(rays)
    for simplex in simplices:
        candidates.update(_parallelepiped_points([rays[i] for i in simplex]))
    return _reduce_candidates(candidates, lattice, degrees)


def _reduce_candidates(xs, lattice, degrees):
    """Keep the monoid-minimal candidates; returns multiplicity vectors."""
    seen = set()
    items = []
    for x in xs:
        v = lattice.to_multiplicities(x)
        assert all(c >= 0 for c in v)
        if any(v) and v not in seen:
            seen.add(v)
            items.append(v)
    items.sort(key=lambda v: (sum(m * d for m, d in zip(v, degrees)), v))
    atoms = []
    for v in items:
        if not any(all(a <= b for a, b in zip(h, v)) for h in atoms):
            atoms.append(v)
    return atoms


def atoms_bounded_search(lattice: RepLattice, table: CharacterTable, budget=None):
    """Atoms among the invariant subrepresentations of the regular
    representation (multiplicities bounded by the degrees).

    Enumerates box-bounded lattice points in ascending dimension order
    and keeps those not dominating an earlier survivor.  Complete only
    when every atom fits under the regular representation.
    """
    degrees = table.degrees
    if budget is None:
        product = 1
        for dd in degrees:
            product *= dd + 1
            if product > DEFAULT_SEARCH_BUDGET:
                raise BudgetExceeded(
                    "regular-representation box beyond default budget; pass an explicit budget"
                )
        budget = DEFAULT_SEARCH_BUDGET
    candidates = _lattice_points_in_box(lattice, degrees, budget)
    candidates.sort(key=lambda v: (sum(m * d for m, d in zip(v, degrees)), v))
    found = []
    for v in candidates:
        if not any(all(a <= b for a, b in zip(f, v)) for f in found):
            found.append(v)
    return found


def _lattice_points_in_box(lattice, bounds, budget):
    """All nonzero lattice vectors v with 0 <= v <= bounds, via the HNF
    pivot structure of the basis."""
    B = lattice.basis
    d, r = lattice.rank, lattice.irr_count
    pivots = []
    for row in B:
        j = next(c for c in range(r) if row[c])
        pivots.append(j)
    out = []
    visited = 0

    def rec(i, partial):
        nonlocal visited
        visited += 1
        if visited > budget:
            raise BudgetExceeded(f"bounded search budget {budget} exceeded")
        if i == d:
            v = tuple(partial)
            if all(0 <= x <= b for x, b in zip(v, bounds)) and any(v):
                out.append(v)
            return
        j = pivots[i]
        p = B[i][j]
        # later rows are zero in column j: 0 <= partial[j] + x_i * p <= bounds[j]
        lo = _ceil_div(-partial[j], p)
        hi = (bounds[j] - partial[j]) // p
        limit = pivots[i + 1] if i + 1 < d else r
        for xi in range(lo, hi + 1):
            if xi:
                new = [a + xi * b for a, b in zip(partial, B[i])]
            else:
                new = list(partial)
            if all(0 <= new[c] <= bounds[c] for c in range(limit)):
                rec(i + 1, new)

    rec(0, [0] * r)
    return out


def _ceil_div(a, b):
    return -((-a) // b)


# ----------------------------------------------------- verdicts, witnesses


def _atom_relations(atoms):
    """Canonical basis of the integer relation lattice of the atoms."""
    return integer_kernel([list(a) for a in atoms])


def _pick_relation(rows, want_nonzero_sum=False):
    pool = [r for r in rows if sum(r) != 0] if want_nonzero_sum else rows
    if not pool:
        return None
    return min(pool, key=lambda r: (sum(abs(x) for x in r), r))


def _witness_from_relation(relation, atoms):
    decomp_a = []
    decomp_b = []
    element = [0] * len(atoms[0])
    for i, n in enumerate(relation):
        if n > 0:
            decomp_a.extend([i] * n)
            for j in range(len(element)):
                element[j] += n * atoms[i][j]
        elif n < 0:
            decomp_b.extend([i] * (-n))
    assert decomp_a and decomp_b
    return FactorizationWitness(
        element=tuple(element),
        decomp_a=tuple(sorted(decomp_a)),
        decomp_b=tuple(sorted(decomp_b)),
    )


def factoriality(atoms, lattice: RepLattice):
    """(is_factorial, witness): factorial iff #atoms equals the rank."""
    if len(atoms) == lattice.rank:
        return True, None
    relations = _atom_relations(atoms)
    relation = _pick_relation(relations)
    assert relation is not None
    return False, _witness_from_relation(relation, atoms)


def half_factoriality(atoms, lattice: RepLattice):
    """(is_half_factorial, witness): half-factorial iff every atom
    relation has coefficient sum zero."""
    relations = _atom_relations(atoms)
    if all(sum(r) == 0 for r in relations):
        return True, None
    relation = _pick_relation(relations, want_nonzero_sum=True)
    return False, _witness_from_relation(relation, atoms)


def is_factorial(analysis: MonoidAnalysis):
    return analysis.factorial, analysis.factorization_witness


def is_half_factorial(analysis: MonoidAnalysis):
    return analysis.half_factorial, analysis.length_witness


def is_transitive(pattern: FusionPattern) -> bool:
    return pattern.class_count == 2


def check_regular_conjecture(atoms, table: CharacterTable) -> bool:
    """Every atom a subrepresentation of the regular representation."""
    degrees = table.degrees
    return all(all(m <= d for m, d in zip(a, degrees)) for a in atoms)


def analyze(lattice: RepLattice, table: CharacterTable, pattern: FusionPattern) -> MonoidAnalysis:
    atoms = atoms_hilbert(lattice, table.degrees)
    assert len(atoms) >= lattice.rank
    fact, fact_wit = factoriality(atoms, lattice)
    half, half_wit = half_factoriality(atoms, lattice)
    assert not (fact and not half)
    return MonoidAnalysis(
        lattice=lattice,
        atoms=tuple(atoms),
        factorial=fact,
        half_factorial=half,
        factorization_witness=fact_wit,
        length_witness=half_wit,
        regular_conjecture_holds=check_regular_conjecture(atoms, table),
        transitive=is_transitive(pattern),
    )


# ------------------------------------------------------- basis criteria


class NotALatticeBasis(ValueError):
    pass


def _require_basis(basis, lattice: RepLattice):
    rows = [list(b) for b in basis]
    if len(rows) != lattice.rank or not lattices_equal(rows, [list(r) for r in lattice.basis]):
        raise NotALatticeBasis("rows do not form a basis of the lattice")


def check_private_irreducible_basis(basis, lattice: RepLattice) -> bool:
    """Each basis member owns a constituent appearing in no other member.

    A passing nonnegative basis certifies factoriality and is then
    exactly the atom set.
    """
    _require_basis(basis, lattice)
    if any(min(b) < 0 for b in basis):
        raise NotALatticeBasis("basis members must be genuine (nonnegative) representations")
    return all(certify_irreducible(j, basis, lattice, _validated=True) for j in range(len(basis)))


def certify_irreducible(j, basis, lattice: RepLattice, _validated=False) -> bool:
    """Whether basis[j] has a constituent absent from every other member."""
    if not _validated:
        _require_basis(basis, lattice)
        if any(min(b) < 0 for b in basis):
            raise NotALatticeBasis("basis members must be genuine (nonnegative) representations")
    support = {c for c, m in enumerate(basis[j]) if m}
    for i, b in enumerate(basis):
        if i != j:
            support -= {c for c, m in enumerate(b) if m}
    return bool(support)


def check_disjoint_basis(basis, lattice: RepLattice) -> bool:
    """Pairwise-disjoint supports; a passing basis certifies factoriality."""
    _require_basis(basis, lattice)
    seen = set()
    for b in basis:
        supp = {c for c, m in enumerate(b) if m}
        if supp & seen:
            return False
        seen |= supp
    return True


def check_convex_basis(basis, atoms) -> bool:
    """Every atom an integral combination of the basis with coefficient
    sum one; a passing basis certifies half-factoriality.

    The integral combination is not required to be nonnegative: only
    the sum condition enters the certificate.
    """
    rows = [list(b) for b in basis]
    if not lattices_equal(rows, [list(a) for a in atoms]):
        raise NotALatticeBasis("rows do not form a basis of the lattice spanned by the atoms")
    for a in atoms:
        lam = solve_integer(rows, list(a))
        if lam is None or sum(lam) != 1:
            return False
    return True
