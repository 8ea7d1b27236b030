"""Oriented-matroid representations and structural operations.

Two representations live here.  A Chirotope is the alternating sign map
on r-subsets (uniform or not), exact over the rationals when built from
a point configuration.  An OrientedMatroid is the cocircuit-set
representation, which is authoritative: it handles non-uniform cases
(direct sums, special position) where the chirotope is absent, and it
carries the rank oracle computed from hyperplane flats.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence

from .signs import MINUS, PLUS, SignVector, bits, mask_of


# ---------------------------------------------------------------------------
# exact linear algebra
# ---------------------------------------------------------------------------

def det_sign(rows: Sequence[Sequence]) -> int:
    """Sign of the determinant of a square matrix with exact entries."""
    m = [[Fraction(x) for x in row] for row in rows]
    n = len(m)
    sign = PLUS
    for col in range(n):
        pivot = None
        for row in range(col, n):
            if m[row][col] != 0:
                pivot = row
                break
        if pivot is None:
            return 0
        if pivot != col:
            m[col], m[pivot] = m[pivot], m[col]
            sign = -sign
        pv = m[col][col]
        if pv < 0:
            sign = -sign
        for row in range(col + 1, n):
            f = m[row][col] / pv
            if f:
                for k in range(col, n):
                    m[row][k] -= f * m[col][k]
    return sign


def matrix_rank(rows: Sequence[Sequence]) -> int:
    """Rank of a matrix with exact entries."""
    m = [[Fraction(x) for x in row] for row in rows]
    if not m:
        return 0
    ncols = len(m[0])
    rank = 0
    row = 0
    for col in range(ncols):
        pivot = None
        for rr in range(row, len(m)):
            if m[rr][col] != 0:
                pivot = rr
                break
        if pivot is None:
            continue
        m[row], m[pivot] = m[pivot], m[row]
        pv = m[row][col]
        for rr in range(row + 1, len(m)):
            f = m[rr][col] / pv
            if f:
                for k in range(col, ncols):
                    m[rr][k] -= f * m[row][k]
        row += 1
        rank += 1
        if row == len(m):
            break
    return rank


def _perm_parity(seq: Sequence[int]) -> int:
    """+1/-1 parity of the permutation sorting seq; 0 on repeats."""
    s = list(seq)
    sign = PLUS
    for i in range(len(s)):
        for j in range(i + 1, len(s)):
            if s[i] == s[j]:
                return 0
            if s[i] > s[j]:
                s[i], s[j] = s[j], s[i]
                sign = -sign
    return sign


# ---------------------------------------------------------------------------
# validation report
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ValidationReport:
    ok: bool
    violations: tuple = ()

    def __bool__(self) -> bool:
        return self.ok

    def to_json(self) -> dict:
        return {
            "ok": self.ok,
            "violations": [
                {"axiom": axiom, "witness": [str(w) for w in witness]}
                for axiom, witness in self.violations
            ],
        }


# ---------------------------------------------------------------------------
# chirotope
# ---------------------------------------------------------------------------

class Chirotope:
    """Alternating sign map on ordered r-tuples, stored on sorted r-subsets."""

    __slots__ = ("rank", "n", "_signs")

    def __init__(self, rank: int, n: int, signs: dict):
        if rank < 1 or n < rank:
            raise ValueError("need 1 <= rank <= n")
        self.rank = rank
        self.n = n
        self._signs = dict(signs)
        for b in itertools.combinations(range(n), rank):
            self._signs.setdefault(b, 0)

    @classmethod
    def from_points(cls, points: Sequence[Sequence]) -> "Chirotope":
        """Basis orientations of a rational vector configuration (rows)."""
        n = len(points)
        if n == 0:
            raise ValueError("empty configuration")
        r = len(points[0])
        if any(len(p) != r for p in points):
            raise ValueError("ragged configuration")
        if matrix_rank(points) < r:
            raise ValueError(f"configuration has rank < {r}")
        signs = {}
        for b in itertools.combinations(range(n), r):
            signs[b] = det_sign([points[i] for i in b])
        return cls(r, n, signs)

    @classmethod
    def from_string(cls, rank: int, n: int, s: str) -> "Chirotope":
        bases = list(itertools.combinations(range(n), rank))
        if len(s) != len(bases):
            raise ValueError(f"expected {len(bases)} sign characters, got {len(s)}")
        from .signs import char_sign

        return cls(rank, n, {b: char_sign(c) for b, c in zip(bases, s)})

    def chi(self, *elements: int) -> int:
        """Sign on an ordered tuple (alternating; 0 on repeats)."""
        if len(elements) != self.rank:
            raise ValueError("tuple length must equal rank")
        parity = _perm_parity(elements)
        if parity == 0:
            return 0
        return parity * self._signs[tuple(sorted(elements))]

    def basis_sign(self, basis: Iterable[int]) -> int:
        return self._signs[tuple(sorted(basis))]

    def to_string(self) -> str:
        from .signs import sign_char

        return "".join(
            sign_char(self._signs[b])
            for b in itertools.combinations(range(self.n), self.rank)
        )

    def is_uniform(self) -> bool:
        return all(s != 0 for s in self._signs.values())

    def is_zero(self) -> bool:
        return all(s == 0 for s in self._signs.values())

    def reorient(self, elements: Iterable[int]) -> "Chirotope":
        a = set(elements)
        signs = {
            b: (s if len(a.intersection(b)) % 2 == 0 else -s)
            for b, s in self._signs.items()
        }
        return Chirotope(self.rank, self.n, signs)

    def with_basis_flipped(self, basis: Iterable[int]) -> "Chirotope":
        b = tuple(sorted(basis))
        signs = dict(self._signs)
        signs[b] = -signs[b]
        return Chirotope(self.rank, self.n, signs)

    def negate(self) -> "Chirotope":
        return Chirotope(self.rank, self.n, {b: -s for b, s in self._signs.items()})

    def dual(self) -> "Chirotope":
        """Dual map on (n-r)-subsets: chi*(E\\B) = sign(sorting (B, E\\B)) * chi(B)."""
        full = range(self.n)
        signs = {}
        for b, s in self._signs.items():
            comp = tuple(e for e in full if e not in b)
            signs[comp] = _perm_parity(b + comp) * s
        return Chirotope(self.n - self.rank, self.n, signs)

    def relabel(self, perm: Sequence[int]) -> "Chirotope":
        """Relabel so old element e becomes perm[e]."""
        signs = {}
        for b, s in self._signs.items():
            img = tuple(perm[e] for e in b)
            signs[tuple(sorted(img))] = _perm_parity(img) * s
        return Chirotope(self.rank, self.n, signs)

    def validate(self) -> ValidationReport:
        return validate_chirotope(self)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Chirotope)
            and self.rank == other.rank
            and self.n == other.n
            and self._signs == other._signs
        )

    def __hash__(self) -> int:
        return hash((self.rank, self.n, tuple(sorted(self._signs.items()))))

    def __repr__(self) -> str:
        return f"Chirotope(rank={self.rank}, n={self.n}, {self.to_string()!r})"


def chirotope_from_points(points: Sequence[Sequence]) -> Chirotope:
    return Chirotope.from_points(points)


def validate_chirotope(chi: Chirotope) -> ValidationReport:
    """Exhaustive three-term Grassmann-Pluecker sign check.

    For every (r-2)-subset x and 4-subset {a,b,c,d} of the rest, the
    terms t1 = chi(abx)chi(cdx), t2 = chi(acx)chi(bdx), t3 = chi(adx)chi(bcx)
    must allow t1 - t2 + t3 = 0 over signs: {t1, -t2, t3} is all zero or
    contains both a plus and a minus.
    """
    violations = []
    if chi.is_zero():
        violations.append(("identically-zero", ()))
        return ValidationReport(False, tuple(violations))
    r, n = chi.rank, chi.n
    if r >= 2 and n - (r - 2) >= 4:
        elems = range(n)
        for x in itertools.combinations(elems, r - 2):
            xs = set(x)
            rest = [e for e in elems if e not in xs]
            for a, b, c, d in itertools.combinations(rest, 4):
                t1 = chi.chi(a, b, *x) * chi.chi(c, d, *x)
                t2 = chi.chi(a, c, *x) * chi.chi(b, d, *x)
                t3 = chi.chi(a, d, *x) * chi.chi(b, c, *x)
                terms = (t1, -t2, t3)
                has_plus = any(t > 0 for t in terms)
                has_minus = any(t < 0 for t in terms)
                if has_plus != has_minus:
                    violations.append(("grassmann-pluecker-3", (x, (a, b, c, d))))
    return ValidationReport(not violations, tuple(violations))


# ---------------------------------------------------------------------------
# oriented matroid (cocircuit representation)
# ---------------------------------------------------------------------------

class OrientedMatroid:
    """Ground set 0..n-1 plus a negation-closed cocircuit set.

    Immutable after construction; the hyperplane list and the rank
    oracle are derived caches.  `provenance` records how the instance
    arose ('from-points', 'from-chirotope', 'from-file', 'derived').
    """

    def __init__(
        self,
        n: int,
        rank: int,
        cocircuits: Iterable[SignVector],
        provenance: str = "derived",
        labels: Optional[Sequence[str]] = None,
        chirotope: Optional[Chirotope] = None,
    ):
        self.n = n
        self.rank = rank
        self.cocircuits = frozenset(cocircuits)
        self.provenance = provenance
        self.labels = tuple(labels) if labels is not None else None
        self.chirotope = chirotope
        for x in self.cocircuits:
            if x.n != n:
                raise ValueError("cocircuit length != ground set size")
            if -x not in self.cocircuits:
                raise ValueError("cocircuit set not closed under negation")
            if x.is_zero():
                raise ValueError("zero vector among cocircuits")
        self._closure_memo: dict[int, int] = {}
        self._rank_memo: dict[int, int] = {}
        self._hyperplanes: Optional[tuple[int, ...]] = None
        self._by_zero: Optional[dict[int, SignVector]] = None
        self._uniform: Optional[bool] = None
        self._sorted: Optional[tuple[SignVector, ...]] = None
        self._graph_cache: dict[int, tuple] = {}
        self._tope_cache = None
        self._mutation_cache = None

    # -- derived structure ----------------------------------------------

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def sorted_cocircuits(self) -> tuple[SignVector, ...]:
        if self._sorted is None:
            self._sorted = tuple(sorted(self.cocircuits, key=SignVector.sort_key))
        return self._sorted

    def hyperplanes(self) -> tuple[int, ...]:
        """Zero masks of the cocircuits (each is a hyperplane flat)."""
        if self._hyperplanes is None:
            self._hyperplanes = tuple(sorted({x.zero_mask for x in self.cocircuits}))
        return self._hyperplanes

    def cocircuit_with_zero(self, zero_mask: int) -> Optional[SignVector]:
        """One cocircuit of the +- pair with the given zero set."""
        if self._by_zero is None:
            table: dict[int, SignVector] = {}
            for x in self.sorted_cocircuits():
                table.setdefault(x.zero_mask, x)
            self._by_zero = table
        return self._by_zero.get(zero_mask)

    def closure_mask(self, mask: int) -> int:
        got = self._closure_memo.get(mask)
        if got is not None:
            return got
        cl = self.full_mask
        hit = False
        for h in self.hyperplanes():
            if mask & ~h == 0:
                cl &= h
                hit = True
        if not hit:
            cl = self.full_mask
        self._closure_memo[mask] = cl
        return cl

    def subset_rank(self, elements) -> int:
        """Matroid rank of a subset (iterable of elements or a bitmask)."""
        mask = elements if isinstance(elements, int) else mask_of(elements)
        got = self._rank_memo.get(mask)
        if got is not None:
            return got
        cl = self.closure_mask(0)
        rk = 0
        rest = mask & ~cl
        while rest:
            e = rest & -rest
            rk += 1
            cl = self.closure_mask(cl | e)
            rest = mask & ~cl
        self._rank_memo[mask] = rk
        return rk

    def loops(self) -> frozenset[int]:
        return frozenset(bits(self.closure_mask(0)))

    def coloops(self) -> frozenset[int]:
        full = self.full_mask
        return frozenset(
            e
            for e in range(self.n)
            if self.subset_rank(full & ~(1 << e)) == self.rank - 1
        )

    def is_uniform(self) -> bool:
        """Every (r-1)-subset spans a hyperplane (all r-subsets are bases)."""
        if self._uniform is None:
            r = self.rank
            hyps = self.hyperplanes()
            self._uniform = len(hyps) == _ncr(self.n, r - 1) and all(
                bin(h).count("1") == r - 1 for h in hyps
            )
        return self._uniform

    def is_connected(self) -> bool:
        """2-connectivity of the underlying matroid."""
        if self.n <= 1:
            return True
        full = set(range(self.n))
        r = self.subset_rank(self.full_mask)
        for k in range(1, self.n // 2 + 1):
            for s in itertools.combinations(range(self.n), k):
                rest = full.difference(s)
                if self.subset_rank(s) + self.subset_rank(rest) <= r:
                    return False
        return True

    def is_simple(self) -> bool:
        if self.loops():
            return False
        for e, f in itertools.combinations(range(self.n), 2):
            if self.subset_rank(((1 << e) | (1 << f))) < 2:
                return False
        return True

    # -- structural operations -------------------------------------------

    def reorient(self, elements: Iterable[int]) -> "OrientedMatroid":
        mask = mask_of(elements)
        chi = self.chirotope.reorient(bits(mask)) if self.chirotope else None
        return OrientedMatroid(
            self.n,
            self.rank,
            (x.reorient(mask) for x in self.cocircuits),
            provenance="derived",
            labels=self.labels,
            chirotope=chi,
        )

    def dual(self) -> "OrientedMatroid":
        if self.chirotope is not None:
            return cocircuits_from_chirotope(self.chirotope.dual(), provenance="derived")
        circuits = self._signed_circuits()
        return OrientedMatroid(
            self.n,
            self.n - self.rank,
            circuits,
            provenance="derived",
            labels=self.labels,
        )

    def _signed_circuits(self) -> set[SignVector]:
        """Signed circuits by orthogonality against all cocircuits."""
        supports: list[set[int]] = []
        for size in range(1, self.rank + 2):
            for s in itertools.combinations(range(self.n), size):
                ss = set(s)
                if self.subset_rank(s) < size and not any(c < ss for c in supports):
                    supports.append(ss)
        out: set[SignVector] = set()
        for sup_set in supports:
            sup = sorted(sup_set)
            found = []
            for pattern in itertools.product((PLUS, MINUS), repeat=len(sup) - 1):
                signs = [0] * self.n
                signs[sup[0]] = PLUS
                for e, s in zip(sup[1:], pattern):
                    signs[e] = s
                cand = SignVector.from_signs(signs)
                if all(_orthogonal(cand, y) for y in self.cocircuits):
                    found.append(cand)
            if len(found) != 1:
                raise ValueError(
                    f"circuit support {sup} admits {len(found)} signings, expected 1"
                )
            out.add(found[0])
            out.add(-found[0])
        return out

    def delete(self, elements: Iterable[int]) -> "OrientedMatroid":
        return self.minor(delete=elements)

    def contract(self, elements: Iterable[int]) -> "OrientedMatroid":
        return self.minor(contract=elements)

    def minor(self, delete: Iterable[int] = (), contract: Iterable[int] = ()) -> "OrientedMatroid":
        dset, cset = set(delete), set(contract)
        if dset & cset:
            raise ValueError("delete and contract sets overlap")
        keep = [e for e in range(self.n) if e not in dset and e not in cset]
        if not keep:
            raise ValueError("minor would have empty ground set")
        cmask = mask_of(cset)
        new_rank = self.subset_rank(mask_of(keep) | cmask) - self.subset_rank(cmask)
        if new_rank == 0:
            raise ValueError("minor would have rank 0")
        restricted = []
        for x in self.cocircuits:
            if x.support_mask & cmask:
                continue
            y = x.restrict(keep)
            if not y.is_zero():
                restricted.append(y)
        # deletion keeps only support-minimal restrictions
        minimal = []
        for y in restricted:
            if not any(
                z.support_mask & ~y.support_mask == 0 and z.support_mask != y.support_mask
                for z in restricted
            ):
                minimal.append(y)
        labels = None
        if self.labels is not None:
            labels = [self.labels[e] for e in keep]
        else:
            labels = [str(e) for e in keep]
        return OrientedMatroid(
            len(keep), new_rank, minimal, provenance="derived", labels=labels
        )

    def direct_sum(self, other: "OrientedMatroid") -> "OrientedMatroid":
        n = self.n + other.n
        cocircuits = []
        for x in self.cocircuits:
            cocircuits.append(SignVector(n, x.pm, x.mm))
        shift = self.n
        for y in other.cocircuits:
            cocircuits.append(SignVector(n, y.pm << shift, y.mm << shift))
        labels = None
        if self.labels is not None or other.labels is not None:
            left = self.labels or tuple(str(e) for e in range(self.n))
            right = other.labels or tuple(str(e) for e in range(other.n))
            labels = list(left) + [f"{lab}'" for lab in right]
        return OrientedMatroid(
            n, self.rank + other.rank, cocircuits, provenance="derived", labels=labels
        )

    # -- elementwise queries ----------------------------------------------

    def is_general_position(self, e: int) -> bool:
        """True iff e lies in no hyperplane spanned by the other elements."""
        if not 0 <= e < self.n:
            raise ValueError(f"element {e} out of range")
        ebit = 1 << e
        for x in self.cocircuits:
            zm = x.zero_mask
            if zm & ebit and self.subset_rank(zm & ~ebit) == self.rank - 1:
                return False
        return True

    def inseparable_partners(self, f: int) -> list[tuple[int, str]]:
        """Elements g inseparable from f, with the pair kind.

        Kind names follow circuit signatures: 'contravariant' means the
        cocircuit signs of f and g agree wherever both are nonzero
        (their circuit signs oppose), 'covariant' the other way round.
        Pairs never supported together are vacuously inseparable and
        reported contravariant.
        """
        if all(x[f] == 0 for x in self.cocircuits):
            raise ValueError(f"element {f} is a loop")
        out = []
        for g in range(self.n):
            if g == f:
                continue
            same = opposite = False
            for x in self.cocircuits:
                sf, sg = x[f], x[g]
                if sf and sg:
                    if sf == sg:
                        same = True
                    else:
                        opposite = True
                if same and opposite:
                    break
            if same and opposite:
                continue
            if opposite:
                out.append((g, "covariant"))
            else:
                out.append((g, "contravariant"))
        return out

    def exists_u24_minor(self, through: Optional[int] = None) -> bool:
        """Exhaustive search for a 4-point-line minor of the underlying matroid."""
        r = self.rank
        if r < 2 or self.n < 4:
            return False
        elems = range(self.n)
        for contract in itertools.combinations(elems, r - 2):
            if self.subset_rank(contract) != r - 2:
                continue
            if through is not None and through in contract:
                continue
            cmask = mask_of(contract)
            rest = [e for e in elems if e not in contract]
            for four in itertools.combinations(rest, 4):
                if through is not None and through not in four:
                    continue
                ok = True
                for e in four:
                    if self.subset_rank(cmask | (1 << e)) != r - 1:
                        ok = False
                        break
                if not ok:
                    continue
                for e, f in itertools.combinations(four, 2):
                    if self.subset_rank(cmask | (1 << e) | (1 << f)) != r:
                        ok = False
                        break
                if ok:
                    return True
        return False

    # -- equality ----------------------------------------------------------

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, OrientedMatroid)
            and self.n == other.n
            and self.rank == other.rank
            and self.cocircuits == other.cocircuits
        )

    def __hash__(self) -> int:
        return hash((self.n, self.rank, self.cocircuits))

    def __repr__(self) -> str:
        return (
            f"OrientedMatroid(n={self.n}, rank={self.rank}, "
            f"|C*|={len(self.cocircuits)}, {self.provenance})"
        )


def _ncr(n: int, r: int) -> int:
    import math

    if r < 0 or r > n:
        return 0
    return math.comb(n, r)


def _orthogonal(x: SignVector, y: SignVector) -> bool:
    """Sign-orthogonality: the products x_e*y_e show both signs or none."""
    both = x.support_mask & y.support_mask
    if not both:
        return True
    agree = (x.pm & y.pm) | (x.mm & y.mm)
    disagree = (x.pm & y.mm) | (x.mm & y.pm)
    return bool(agree & both) and bool(disagree & both)


# ---------------------------------------------------------------------------
# constructions
# ---------------------------------------------------------------------------

def cocircuits_from_chirotope(chi: Chirotope, provenance: str = "from-chirotope") -> OrientedMatroid:
    """Cocircuits via basic-cocircuit signs: C_e = chi(e, A) for each
    spanning (r-1)-subset A (sorted), zero on the closure of A."""
    report = validate_chirotope(chi)
    if not report.ok:
        raise ValueError(f"invalid chirotope: {report.violations[:3]}")
    r, n = chi.rank, chi.n
    by_zero: dict[int, SignVector] = {}
    for a in itertools.combinations(range(n), r - 1):
        signs = [chi.chi(e, *a) for e in range(n)]
        vec = SignVector.from_signs(signs)
        if vec.is_zero():
            continue  # A does not span a hyperplane
        prev = by_zero.get(vec.zero_mask)
        if prev is None:
            by_zero[vec.zero_mask] = vec
        elif prev != vec and prev != -vec:
            raise ValueError("inconsistent cocircuit signs for one hyperplane")
    cocircuits = set()
    for vec in by_zero.values():
        cocircuits.add(vec)
        cocircuits.add(-vec)
    return OrientedMatroid(
        n, r, cocircuits, provenance=provenance, chirotope=chi
    )


def cocircuits_from_points(points: Sequence[Sequence]) -> set[SignVector]:
    """Point-side cocircuits, independent of the chirotope route: for
    each spanning (r-1)-subset A, the signs of det(rows A, row e)."""
    n = len(points)
    r = len(points[0])
    out: set[SignVector] = set()
    seen_zero = set()
    for a in itertools.combinations(range(n), r - 1):
        base = [points[i] for i in a]
        if matrix_rank(base) < r - 1:
            continue
        signs = [det_sign(base + [points[e]]) for e in range(n)]
        vec = SignVector.from_signs(signs)
        if vec.is_zero() or vec.zero_mask in seen_zero:
            continue
        seen_zero.add(vec.zero_mask)
        out.add(vec)
        out.add(-vec)
    return out


def om_from_points(points: Sequence[Sequence]) -> OrientedMatroid:
    chi = Chirotope.from_points(points)
    om = cocircuits_from_chirotope(chi, provenance="from-points")
    return om


def chirotope_from_cocircuits(om: OrientedMatroid) -> Chirotope:
    """Recover a chirotope (one of the +- pair) from a uniform cocircuit set.

    chi is seeded + on the first basis and propagated through basis
    exchanges: chi(e,A) * chi(b,A) = C_A[e] * C_A[b] for the cocircuit
    C_A of the hyperplane A, independently of the pair's sign choice.
    """
    if not om.is_uniform():
        raise ValueError("chirotope recovery requires a uniform oriented matroid")
    r, n = om.rank, om.n
    signs: dict[tuple, int] = {}
    first = tuple(range(r))
    signs[first] = PLUS
    frontier = [first]
    while frontier:
        basis = frontier.pop()
        chi_b = signs[basis]
        for b in basis:
            rest = tuple(e for e in basis if e != b)
            coc = om.cocircuit_with_zero(mask_of(rest))
            if coc is None:
                raise ValueError("missing hyperplane cocircuit in uniform om")
            chi_b_at = _perm_parity((b,) + rest) * chi_b
            for e in range(n):
                if e in basis or coc[e] == 0:
                    continue
                new_basis = tuple(sorted(rest + (e,)))
                if new_basis in signs:
                    continue
                chi_e_at = coc[e] * coc[b] * chi_b_at
                signs[new_basis] = _perm_parity((e,) + rest) * chi_e_at
                frontier.append(new_basis)
    return Chirotope(r, n, signs)


def validate_cocircuit_axioms(
    vectors: Iterable[SignVector], n: Optional[int] = None, rank: Optional[int] = None
) -> ValidationReport:
    """Exhaustive signed-cocircuit axiom check.

    (C0) no zero vector, (C1) closure under negation, (C2) incomparable
    supports, (C3) elimination: for X != -Y and e separating them there
    is Z with Z_e = 0, Z+ within X+ u Y+ less e, Z- within X- u Y- less e.
    When `rank` is given, also checks that every zero set is a flat of
    rank exactly rank-1 and the ground set has the stated rank.
    """
    vecs = list(set(vectors))
    violations = []
    if not vecs:
        violations.append(("C0", ("empty set",)))
        return ValidationReport(False, tuple(violations))
    if n is None:
        n = vecs[0].n
    vset = set(vecs)
    for x in vecs:
        if x.is_zero():
            violations.append(("C0", (x,)))
        if -x not in vset:
            violations.append(("C1", (x,)))
    if violations:
        return ValidationReport(False, tuple(violations))
    for x, y in itertools.combinations(vecs, 2):
        if x.support_mask == y.support_mask:
            if y != -x:
                violations.append(("C2", (x, y)))
        elif x.support_mask & ~y.support_mask == 0:
            violations.append(("C2", (x, y)))
        elif y.support_mask & ~x.support_mask == 0:
            violations.append(("C2", (y, x)))
    for x in vecs:
        for y in vecs:
            if x is y or y == -x:
                continue
            sep = x.sep_mask(y)
            allowed_p = (x.pm | y.pm)
            allowed_m = (x.mm | y.mm)
            rest = sep
            while rest:
                ebit = rest & -rest
                rest ^= ebit
                ok = False
                for z in vecs:
                    if (
                        z.support_mask & ebit == 0
                        and z.pm & ~(allowed_p & ~ebit) == 0
                        and z.mm & ~(allowed_m & ~ebit) == 0
                    ):
                        ok = True
                        break
                if not ok:
                    e = ebit.bit_length() - 1
                    violations.append(("C3", (x, y, e)))
    if rank is not None and not violations:
        try:
            om = OrientedMatroid(n, rank, vecs)
            if om.subset_rank(om.full_mask) != rank:
                violations.append(("rank", ("ground set rank mismatch",)))
            for x in vecs:
                if om.subset_rank(x.zero_mask) != rank - 1:
                    violations.append(("rank", (x,)))
        except ValueError as exc:
            violations.append(("rank", (str(exc),)))
    return ValidationReport(not violations, tuple(violations))


# ---------------------------------------------------------------------------
# realizable extension through chosen flats
# ---------------------------------------------------------------------------

def realizable_extend_through(
    points: Sequence[Sequence],
    targets: Sequence[Iterable[int]],
    rng,
    max_tries: int = 4000,
) -> list[list[Fraction]]:
    """Append one rational vector lying on the hyperplanes spanned by the
    given zero sets and otherwise generic: a determinant with the new
    vector vanishes only when the target constraints force it on the
    whole solution space.  Genericity by seeded rejection sampling.
    """
    pts = [[Fraction(x) for x in row] for row in points]
    n = len(pts)
    r = len(pts[0])
    if len(targets) > r - 1:
        raise ValueError("at most rank-1 target hyperplanes")
    target_sets = [sorted(set(t)) for t in targets]
    normals = []
    for t in target_sets:
        rows = [pts[i] for i in t]
        if matrix_rank(rows) != r - 1:
            raise ValueError(f"target {t} does not span a hyperplane")
        normals.append(_hyperplane_normal(rows))
    basis = _nullspace([list(nv) for nv in normals], r) if normals else [
        [Fraction(int(i == j)) for j in range(r)] for i in range(r)
    ]
    if not basis:
        raise ValueError("targets force the zero vector")
    spanning = []
    forced_zero = set()
    for a in itertools.combinations(range(n), r - 1):
        rows = [pts[i] for i in a]
        if matrix_rank(rows) < r - 1:
            continue
        spanning.append(a)
        if all(det_sign(rows + [list(b)]) == 0 for b in basis):
            forced_zero.add(a)
    for _ in range(max_tries):
        coeffs = [Fraction(rng.randint(-40, 40)) for _ in basis]
        v = [sum(c * b[j] for c, b in zip(coeffs, basis)) for j in range(r)]
        if all(x == 0 for x in v):
            continue
        good = True
        for a in spanning:
            d = det_sign([pts[i] for i in a] + [v])
            if (d == 0) != (a in forced_zero):
                good = False
                break
        if good:
            return pts + [v]
    raise RuntimeError("no generic extension found within retry budget")


def _hyperplane_normal(rows: list[list[Fraction]]) -> tuple[Fraction, ...]:
    """A nonzero vector orthogonal to r-1 independent rows of length r."""
    r = len(rows[0])
    out = []
    for j in range(r):
        sub = [[row[k] for k in range(r) if k != j] for row in rows]
        s = _det(sub)
        out.append(s if j % 2 == 0 else -s)
    return tuple(out)


def _det(m: list[list[Fraction]]) -> Fraction:
    n = len(m)
    m = [row[:] for row in m]
    det = Fraction(1)
    for col in range(n):
        pivot = None
        for row in range(col, n):
            if m[row][col] != 0:
                pivot = row
                break
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            m[col], m[pivot] = m[pivot], m[col]
            det = -det
        det *= m[col][col]
        for row in range(col + 1, n):
            f = m[row][col] / m[col][col]
            if f:
                for k in range(col, n):
                    m[row][k] -= f * m[col][k]
    return det


def _nullspace(rows: list[list[Fraction]], ncols: int) -> list[list[Fraction]]:
    m = [row[:] for row in rows]
    pivots = []
    rr = 0
    for col in range(ncols):
        piv = None
        for row in range(rr, len(m)):
            if m[row][col] != 0:
                piv = row
                break
        if piv is None:
            continue
        m[rr], m[piv] = m[piv], m[rr]
        pv = m[rr][col]
        m[rr] = [x / pv for x in m[rr]]
        for row in range(len(m)):
            if row != rr and m[row][col] != 0:
                f = m[row][col]
                m[row] = [a - f * b for a, b in zip(m[row], m[rr])]
        pivots.append(col)
        rr += 1
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        v = [Fraction(0)] * ncols
        v[fc] = Fraction(1)
        for i, pc in enumerate(pivots):
            v[pc] = -m[i][fc]
        basis.append(v)
    return basis


