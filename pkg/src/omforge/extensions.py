"""Single-element extensions and their interaction with mutations.

Lexicographic extensions come in two routes that must agree: the
chirotope route (uniform, full-length priority list) and the
localization route (general; old cocircuits pick up the localization
sign, new cocircuits appear on every line where the localization
changes sign between neighbours).  On top sit the mutation
creation/destruction checks, the head-swap isomorphism, perturbation of
an extension off a vertex, and the flip/extension exchange pipeline
that manufactures Mandel witnesses from Euclidean mutants.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Mapping, Optional, Sequence

from .core import (
    Chirotope,
    OrientedMatroid,
    cocircuits_from_chirotope,
    validate_cocircuit_axioms,
)
from .faces import (
    MutationCertificate,
    adjacent_cocircuits,
    flip,
    mutation_from_basis,
    topes,
)
from .programs import Program, all_programs_euclidean, is_euclidean
from .signs import MINUS, PLUS, SignVector, char_sign, sign_char


class ExtensionError(ValueError):
    pass


class PerturbationError(ValueError):
    pass


@dataclass(frozen=True)
class LexExtensionSpec:
    """Signed priority list [(e_1, a_1), ..., (e_k, a_k)], a_i in {+,-}."""

    terms: tuple[tuple[int, int], ...]

    def __post_init__(self):
        seen = set()
        for e, a in self.terms:
            if a not in (PLUS, MINUS):
                raise ValueError("alphas must be nonzero signs")
            if e in seen:
                raise ValueError(f"repeated element {e} in extension spec")
            seen.add(e)
        if not self.terms:
            raise ValueError("empty extension spec")

    @classmethod
    def parse(cls, text: str) -> "LexExtensionSpec":
        """Parse 'e:+,e:-,...' notation."""
        terms = []
        for part in text.split(","):
            e, _, a = part.strip().partition(":")
            terms.append((int(e), char_sign(a)))
        return cls(tuple(terms))

    def elements(self) -> tuple[int, ...]:
        return tuple(e for e, _ in self.terms)

    def to_string(self) -> str:
        return ",".join(f"{e}:{sign_char(a)}" for e, a in self.terms)


def localization_sign(spec: LexExtensionSpec, x: SignVector) -> int:
    """First-nonzero signed lookup along the priority list."""
    for e, a in spec.terms:
        s = x[e]
        if s:
            return a * s
    return 0


def lex_localization(om: OrientedMatroid, spec: LexExtensionSpec) -> dict:
    return {x: localization_sign(spec, x) for x in om.cocircuits}


def extend_by_localization(
    om: OrientedMatroid, sigma: Mapping[SignVector, int], pos: Optional[int] = None
) -> OrientedMatroid:
    """Single-element extension from a localization map.

    Old cocircuits gain the sigma value at the new coordinate; each
    neighbour pair (conformal, comodular) whose sigma values are
    opposite and nonzero contributes the new cocircuit (X o Y, 0).
    """
    if pos is None:
        pos = om.n
    out = set()
    for x in om.cocircuits:
        out.add(x.insert(pos, sigma[x]))
    verts = om.sorted_cocircuits()
    want = om.rank - 2
    uniform = om.is_uniform()
    for i, x in enumerate(verts):
        sx = sigma[x]
        if not sx:
            continue
        for j in range(i + 1, len(verts)):
            y = verts[j]
            if sigma[y] != -sx:
                continue
            if x.sep_mask(y):
                continue
            u = x.zero_mask & y.zero_mask
            if uniform:
                if bin(u).count("1") != want:
                    continue
            elif om.subset_rank(u) != want:
                continue
            out.add(x.compose(y).insert(pos, 0))
    labels = None
    if om.labels is not None:
        labels = list(om.labels)
        labels.insert(pos, f"x{om.n}")
    return OrientedMatroid(
        om.n + 1, om.rank, out, provenance="derived", labels=labels
    )


def lex_extension_chirotope(om: OrientedMatroid, spec: LexExtensionSpec) -> Chirotope:
    """Chirotope of om[spec]: on tuples through the new element p, the
    first nonzero of a_i * chi(e_i, lambda) decides the sign."""
    chi = om.chirotope
    if chi is None:
        raise ExtensionError("no chirotope available")
    r, n = chi.rank, chi.n
    if len(spec.terms) != r:
        raise ExtensionError("chirotope route needs a full-length priority list")
    signs = {}
    for b in itertools.combinations(range(n), r):
        signs[b] = chi.basis_sign(b)
    flip_parity = -1 if (r - 1) % 2 else 1
    for lam in itertools.combinations(range(n), r - 1):
        val = 0
        for e, a in spec.terms:
            s = chi.chi(e, *lam)
            if s:
                val = a * s
                break
        signs[lam + (n,)] = flip_parity * val
    return Chirotope(r, n + 1, signs)


def lex_extend(
    om: OrientedMatroid, spec: LexExtensionSpec, route: str = "auto"
) -> OrientedMatroid:
    """Lexicographic extension; the new element is appended as index n.

    route: 'auto' uses the chirotope when the uniform fast path applies,
    'chirotope' forces it, 'localization' forces the general route.
    """
    elems = spec.elements()
    if any(not 0 <= e < om.n for e in elems):
        raise ExtensionError("spec element out of range")
    k = len(elems)
    if k > om.rank:
        raise ExtensionError("spec longer than rank")
    if om.subset_rank(elems) != k:
        raise ExtensionError("spec elements are dependent")
    chirotope_ok = om.chirotope is not None and om.is_uniform() and k == om.rank
    if route == "chirotope" and not chirotope_ok:
        raise ExtensionError("chirotope route needs uniform om and full-length spec")
    if route not in ("auto", "chirotope", "localization"):
        raise ExtensionError(f"unknown route {route!r}")
    if route in ("auto", "chirotope") and chirotope_ok:
        chi = lex_extension_chirotope(om, spec)
        return cocircuits_from_chirotope(chi, provenance="derived")
    return extend_by_localization(om, lex_localization(om, spec))


# ---------------------------------------------------------------------------
# inseparable pairs and corresponding cocircuits
# ---------------------------------------------------------------------------

def pair_kind(om: OrientedMatroid, f: int, g: int) -> Optional[str]:
    """'covariant', 'contravariant', or None if the pair is separable.

    Naming follows circuit signatures: a contravariant pair has equal
    cocircuit signs wherever both are nonzero (opposed circuit signs),
    a covariant pair has opposed cocircuit signs.  Pairs never supported
    together are vacuously inseparable, reported contravariant.
    """
    same = opposite = False
    for x in om.cocircuits:
        sf, sg = x[f], x[g]
        if sf and sg:
            if sf == sg:
                same = True
            else:
                opposite = True
        if same and opposite:
            return None
    return "covariant" if opposite else "contravariant"


def corresponding_cocircuit(
    om: OrientedMatroid, x: SignVector, f: int, fprime: int
) -> SignVector:
    """The neighbour across an inseparable pair: swaps which of f, f'
    is zero, keeps every other coordinate, and obeys the sign relation
    X_f = -alpha * Y_{f'} (alpha + for contravariant, - for covariant).
    """
    kind = pair_kind(om, f, fprime)
    if kind is None:
        raise ExtensionError(f"({f},{fprime}) is separable")
    if not (om.is_general_position(f) and om.is_general_position(fprime)):
        raise ExtensionError("both pair elements must be in general position")
    alpha = PLUS if kind == "contravariant" else MINUS
    if x[fprime] == 0 and x[f] != 0:
        zero_at, known = f, fprime
        relation = lambda y: x[f] == -alpha * y[fprime]
    elif x[f] == 0 and x[fprime] != 0:
        zero_at, known = fprime, f
        relation = lambda y: x[fprime] == -alpha * y[f]
    else:
        raise ExtensionError("exactly one of X_f, X_f' must vanish")
    others = [e for e in range(om.n) if e not in (f, fprime)]
    for y in om.cocircuits:
        if y[zero_at] != 0:
            continue
        if all(y[e] == x[e] for e in others) and relation(y):
            return y
    raise ExtensionError("no corresponding cocircuit found")


def swap_isomorphism_check(om: OrientedMatroid, spec: LexExtensionSpec) -> bool:
    """Exchanging the head sign pattern (a_2.. -> -a_1*a_2..) swaps the
    roles of the head element and the new one."""
    if not om.is_uniform():
        raise ExtensionError("uniform oriented matroid required")
    f, a1 = spec.terms[0]
    if not om.is_general_position(f):
        raise ExtensionError("head element must be in general position")
    o2 = lex_extend(om, spec)
    alt = LexExtensionSpec(
        ((f, a1),) + tuple((e, -a1 * a) for e, a in spec.terms[1:])
    )
    o3 = lex_extend(om, alt)
    fp = om.n
    mapped = {x.swap(f, fp) for x in o3.cocircuits}
    return mapped == set(o2.cocircuits)


# ---------------------------------------------------------------------------
# mutation creation and destruction
# ---------------------------------------------------------------------------

def creation_check(
    om: OrientedMatroid, spec: LexExtensionSpec
) -> Optional[MutationCertificate]:
    """After om[f^+, e_1^+, ..., e_{r-1}^+], the basis
    {f, f', e_1, ..., e_{r-2}} must certify a mutation."""
    if not om.is_uniform():
        raise ExtensionError("uniform oriented matroid required")
    if len(spec.terms) != om.rank:
        raise ExtensionError("full-length spec required")
    if any(a != PLUS for _, a in spec.terms):
        raise ExtensionError("creation check takes an all-plus spec")
    ext = lex_extend(om, spec)
    f = spec.terms[0][0]
    mids = [e for e, _ in spec.terms[1 : om.rank - 1]]
    basis = (f, om.n, *mids)
    return mutation_from_basis(ext, basis)


def orient_tope_positive(
    om: OrientedMatroid, cert: MutationCertificate
) -> tuple[OrientedMatroid, MutationCertificate, frozenset[int]]:
    """Reorient so the certificate tope is the all-plus tope."""
    neg = frozenset(e for e in range(om.n) if cert.tope[e] < 0)
    om2 = om.reorient(neg) if neg else om
    cert2 = mutation_from_basis(om2, cert.basis)
    if cert2 is None:
        raise RuntimeError("reorientation lost the mutation")
    if any(s < 0 for s in cert2.tope):
        cert2 = MutationCertificate(
            cert2.basis,
            tuple((e, -x) for e, x in cert2.base_cocircuits),
            -cert2.tope,
        )
    return om2, cert2, neg


@dataclass(frozen=True)
class DestructionReport:
    extension: OrientedMatroid
    fprime: int
    new_certificate: Optional[MutationCertificate]
    lift_adjacency: dict  # lift sign -> adjacent cocircuit count
    decertified: bool
    reoriented: frozenset[int]


def destruction_check(
    om: OrientedMatroid,
    cert: MutationCertificate,
    f: int,
    g: int,
    tail: Optional[Sequence[tuple[int, int]]] = None,
) -> DestructionReport:
    """Extend by [f^+, g^-, ...] against a mutation containing f but not
    g: the shifted basis (f' for f) must re-certify, and the old tope
    picks up extra walls (no longer simplicial for rank >= 3)."""
    if not om.is_uniform():
        raise ExtensionError("uniform oriented matroid required")
    if f not in cert.basis or g in cert.basis or f == g:
        raise ExtensionError("need f in the mutation basis and g outside it")
    om0, cert0, neg = orient_tope_positive(om, cert)
    y = cert0.cocircuit_for(f)
    if y[g] != PLUS:
        raise ExtensionError("the f-base cocircuit must have g = +")
    terms = [(f, PLUS), (g, MINUS)]
    if tail is None:
        used = {f, g}
        fill = [e for e in range(om.n) if e not in used]
        tail = tuple((e, PLUS) for e in fill[: om.rank - 2])
    terms.extend(tail)
    ext = lex_extend(om0, LexExtensionSpec(tuple(terms)))
    fp = om0.n
    rest = tuple(e for e in cert.basis if e != f)
    new_cert = mutation_from_basis(ext, (fp,) + rest)
    lift_adjacency = {}
    all_topes = topes(ext)
    for s in (PLUS, MINUS):
        lift = cert0.tope.append(s)
        if lift in all_topes:
            lift_adjacency[s] = len(adjacent_cocircuits(ext, lift))
    decert = any(count > om.rank for count in lift_adjacency.values())
    return DestructionReport(ext, fp, new_cert, lift_adjacency, decert, neg)


# ---------------------------------------------------------------------------
# perturbation
# ---------------------------------------------------------------------------

def perturb_extension(
    om_ext: OrientedMatroid, x: SignVector, e: int, new_sign: int = MINUS
) -> OrientedMatroid:
    """Move the pseudosphere of e off (or onto) the vertex x.

    The e-values of all other old cocircuits are preserved; x takes
    new_sign at e.  Internally e is deleted and re-extended from the
    modified localization, so cocircuits created or absorbed by the move
    come out right; the result must pass the cocircuit axioms.
    """
    if x not in om_ext.cocircuits:
        raise PerturbationError("x is not a cocircuit")
    if x[e] == new_sign:
        raise PerturbationError("x already carries that sign at e")
    keep = [i for i in range(om_ext.n) if i != e]
    base = om_ext.minor(delete={e})
    sigma: dict[SignVector, int] = {}
    for w in om_ext.cocircuits:
        w0 = w.restrict(keep)
        if w0 in base.cocircuits:
            prev = sigma.get(w0)
            if prev is not None and prev != w[e]:
                raise PerturbationError("ambiguous localization for the extension")
            sigma[w0] = w[e]
    missing = [w0 for w0 in base.cocircuits if w0 not in sigma]
    if missing:
        raise PerturbationError("extension does not cover the deletion's cocircuits")
    x0 = x.restrict(keep)
    if x0 not in base.cocircuits:
        raise PerturbationError("x does not restrict to a cocircuit without e")
    sigma[x0] = new_sign
    sigma[-x0] = -new_sign
    out = extend_by_localization(base, sigma, pos=e)
    report = validate_cocircuit_axioms(out.cocircuits, n=out.n, rank=out.rank)
    if not report.ok:
        raise PerturbationError(
            f"perturbed set violates cocircuit axioms: {report.violations[:3]}"
        )
    return out


# ---------------------------------------------------------------------------
# flip / lexicographic-extension exchange, Mandel pipeline
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CommuteReport:
    equal: bool
    extend_then_flip: OrientedMatroid
    flip_then_extend_then_flip: OrientedMatroid
    m_is_mutation: bool
    mprime_is_mutation: bool

    def __bool__(self) -> bool:
        return self.equal


def flip_lex_commute_check(
    om: OrientedMatroid,
    basis_order: Sequence[int],
    g: int,
    alphas: Optional[Sequence[int]] = None,
) -> CommuteReport:
    """Extending then flipping the shifted mutation agrees (under the
    f <-> f' swap) with flipping first, extending with flipped tail
    signs, and flipping again."""
    if not om.is_uniform() or om.chirotope is None:
        raise ExtensionError("uniform oriented matroid with chirotope required")
    basis_order = tuple(basis_order)
    f, rest = basis_order[0], basis_order[1:]
    if g in basis_order:
        raise ExtensionError("g must avoid the mutation")
    if alphas is None:
        alphas = tuple(MINUS for _ in basis_order[2:])
    cert = mutation_from_basis(om, basis_order)
    if cert is None:
        raise ExtensionError(f"{basis_order} is not a mutation basis")
    om0, cert0, _ = orient_tope_positive(om, cert)
    fp = om0.n
    tail = tuple(zip(basis_order[2:], alphas))
    spec1 = LexExtensionSpec(((f, PLUS), (g, MINUS)) + tail)
    o_fp = lex_extend(om0, spec1)
    cert1 = mutation_from_basis(o_fp, (fp,) + rest)
    if cert1 is None:
        raise ExtensionError("shifted basis is not a mutation after extension")
    o_fp_mp = flip(o_fp, cert1)

    o_m = flip(om0, cert0)
    spec2 = LexExtensionSpec(
        ((f, PLUS), (g, PLUS)) + tuple((e, -a) for e, a in tail)
    )
    o_m_fp = lex_extend(o_m, spec2)
    cert2 = mutation_from_basis(o_m_fp, (fp,) + rest)
    if cert2 is None:
        raise ExtensionError("shifted basis is not a mutation after flip+extension")
    o_m_fp_mp = flip(o_m_fp, cert2)

    mapped = {v.swap(f, fp) for v in o_m_fp_mp.cocircuits}
    equal = mapped == set(o_fp_mp.cocircuits)
    m_mut = mutation_from_basis(o_fp_mp, basis_order) is not None
    mp_mut = mutation_from_basis(o_fp_mp, (fp,) + rest) is not None
    return CommuteReport(equal, o_fp_mp, o_m_fp_mp, m_mut, mp_mut)


@dataclass(frozen=True)
class MandelPipelineResult:
    om_extended: OrientedMatroid
    fprime: int
    spec: LexExtensionSpec
    mutation: tuple[int, ...]
    g: int
    deletion_ok: bool
    program_verdicts: dict  # infinity element -> Euclidean?
    reoriented: frozenset[int]

    @property
    def ok(self) -> bool:
        return self.deletion_ok and all(self.program_verdicts.values())

    def failed_programs(self) -> list[int]:
        return [e for e, v in self.program_verdicts.items() if not v]

    def to_json(self) -> dict:
        return {
            "fprime": self.fprime,
            "spec": self.spec.to_string(),
            "mutation": list(self.mutation),
            "g": self.g,
            "deletion_ok": self.deletion_ok,
            "program_verdicts": {str(e): v for e, v in self.program_verdicts.items()},
            "ok": self.ok,
        }


def mandel_from_euclidean_mutant(
    om: OrientedMatroid,
    basis_order: Sequence[int],
    g: int,
    check_hypotheses: bool = True,
) -> MandelPipelineResult:
    """Cut a vertex off the flipped mutation and flip it back: the new
    element witnesses Euclideaness of every program targeting it.

    basis_order = (f, e2, e3, ..., er) with f the head of the extension
    and e2 the basis element left out of the priority list; g avoids the
    mutation.  Hypotheses: the flip of the mutation is Euclidean, and
    om/f is Euclidean (automatic in rank 4, checked above that).
    """
    if not om.is_uniform() or om.chirotope is None:
        raise ExtensionError("uniform oriented matroid with chirotope required")
    basis_order = tuple(basis_order)
    f = basis_order[0]
    if g in basis_order:
        raise ExtensionError("g must avoid the mutation")
    cert = mutation_from_basis(om, basis_order)
    if cert is None:
        raise ExtensionError(f"{basis_order} is not a mutation basis")
    if check_hypotheses:
        mutant = flip(om, cert)
        if not all_programs_euclidean(mutant):
            raise ExtensionError("the flipped oriented matroid is not Euclidean")
        if om.rank > 4:
            if not all_programs_euclidean(om.contract({f})):
                raise ExtensionError("om / f is not Euclidean")
    om0, cert0, neg = orient_tope_positive(om, cert)
    fp = om0.n
    spec = LexExtensionSpec(
        ((f, PLUS), (g, MINUS)) + tuple((e, MINUS) for e in basis_order[2:])
    )
    o_fp = lex_extend(om0, spec)
    cert1 = mutation_from_basis(o_fp, (fp,) + basis_order[1:])
    if cert1 is None:
        raise ExtensionError("shifted basis is not a mutation after extension")
    flipped = flip(o_fp, cert1)
    result = flipped.reorient(neg) if neg else flipped
    deletion_ok = result.minor(delete={fp}) == om
    verdicts = {
        e: is_euclidean(Program(result, e, fp)).euclidean for e in range(om.n)
    }
    return MandelPipelineResult(
        result, fp, spec, basis_order, g, deletion_ok, verdicts, neg
    )
