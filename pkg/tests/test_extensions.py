import math
import random

import pytest

from omforge.core import om_from_points, validate_cocircuit_axioms
from omforge.corpus import cyclic_om, random_points, w3
from omforge.extensions import (
    ExtensionError,
    LexExtensionSpec,
    PerturbationError,
    corresponding_cocircuit,
    creation_check,
    destruction_check,
    flip_lex_commute_check,
    lex_extend,
    mandel_from_euclidean_mutant,
    pair_kind,
    perturb_extension,
    swap_isomorphism_check,
)
from omforge.faces import flip, mutation_from_basis, mutations, topes
from omforge.programs import Program, is_euclidean
from omforge.signs import MINUS, PLUS, SignVector

sv = SignVector.from_string


def spec_of(*terms):
    return LexExtensionSpec(tuple(terms))


# -- lex_extend ----------------------------------------------------------------

def test_w3_extension_cocircuits():
    ext = lex_extend(w3(), spec_of((0, PLUS), (1, PLUS)))
    assert ext.n == 4 and ext.rank == 2
    assert len(ext.cocircuits) == 8
    expected = {
        sv("+--0"), sv("-++0"),          # the new pair
        sv("+0-+"), sv("-0+-"),          # old cocircuits with the new sign
        sv("0---"), sv("0+++"),
        sv("++0+"), sv("--0-"),
    }
    assert set(ext.cocircuits) == expected


def test_routes_agree():
    rng = random.Random(31)
    for _ in range(6):
        r = rng.choice((3, 4))
        om = om_from_points(random_points(rng, r, r + rng.randint(2, 4)))
        elems = rng.sample(range(om.n), r)
        signs = [rng.choice((PLUS, MINUS)) for _ in range(r)]
        spec = LexExtensionSpec(tuple(zip(elems, signs)))
        assert lex_extend(om, spec, route="chirotope") == lex_extend(
            om, spec, route="localization"
        )


def test_extension_realization_oracle():
    # placing the new point just past element 0 on the W3 line realizes
    # the same extension as the lexicographic rule
    ext = lex_extend(w3(), spec_of((0, PLUS), (1, PLUS)))
    realized = om_from_points([[1, 1], [1, 2], [1, 3], [8, 9]])  # t = 1+1/8
    assert set(realized.cocircuits) == set(ext.cocircuits)


def test_extension_cocircuit_count_matches_general_position():
    rng = random.Random(32)
    om = om_from_points(random_points(rng, 3, 6))
    spec = spec_of((2, PLUS), (4, MINUS), (0, PLUS))
    ext = lex_extend(om, spec)
    assert len(ext.cocircuits) == 2 * math.comb(om.n + 1, om.rank - 1)


def test_partial_spec_localization_route():
    om = cyclic_om(3, 6)
    ext = lex_extend(om, spec_of((0, PLUS)))  # parallel-ish extension
    assert ext.n == 7 and ext.rank == 3
    report = validate_cocircuit_axioms(ext.cocircuits, n=7, rank=3)
    assert report.ok
    with pytest.raises(ExtensionError):
        lex_extend(om, spec_of((0, PLUS)), route="chirotope")


def test_dependent_spec_rejected():
    om = w3().direct_sum(w3())
    with pytest.raises(ExtensionError):
        lex_extend(om, spec_of((0, PLUS), (1, PLUS), (2, PLUS)))


# -- corresponding cocircuits ----------------------------------------------------

def test_corresponding_cocircuit_w3():
    ext = lex_extend(w3(), spec_of((0, PLUS), (1, PLUS)))
    x = sv("+--0")
    y = corresponding_cocircuit(ext, x, 0, 3)
    assert y == sv("0---")
    assert corresponding_cocircuit(ext, y, 0, 3) == x


def test_fprime_zero_sign_rule():
    # X_{f'} = 0 and X_f != 0 forces X_f = -a1*a2*X_{e_i} at the first
    # nonzero priority element
    rng = random.Random(33)
    for a1, a2 in ((PLUS, PLUS), (PLUS, MINUS), (MINUS, PLUS)):
        om = om_from_points(random_points(rng, 3, 6))
        elems = rng.sample(range(6), 3)
        spec = LexExtensionSpec(((elems[0], a1), (elems[1], a2), (elems[2], PLUS)))
        ext = lex_extend(om, spec)
        f, fp = elems[0], om.n
        for x in ext.cocircuits:
            if x[fp] == 0 and x[f] != 0:
                for e, a in spec.terms[1:]:
                    if x[e] != 0:
                        assert x[f] == -a1 * a * x[e]
                        break


def test_pair_kind_by_head_sign():
    om = cyclic_om(3, 6)
    for a1, expect in ((PLUS, "contravariant"), (MINUS, "covariant")):
        ext = lex_extend(om, spec_of((0, a1), (1, PLUS), (2, PLUS)))
        assert pair_kind(ext, 0, om.n) == expect


# -- swap isomorphism -------------------------------------------------------------

def test_swap_isomorphism():
    assert swap_isomorphism_check(w3(), spec_of((0, PLUS), (1, PLUS)))
    assert swap_isomorphism_check(w3(), spec_of((0, PLUS), (1, MINUS)))
    rng = random.Random(34)
    om = om_from_points(random_points(rng, 3, 6))
    spec = spec_of((1, PLUS), (3, MINUS), (5, PLUS))
    assert swap_isomorphism_check(om, spec)


def test_swap_isomorphism_needs_general_position():
    s = w3().direct_sum(w3())
    with pytest.raises(ExtensionError):
        swap_isomorphism_check(s, spec_of((0, PLUS), (3, PLUS)))


# -- creation / preservation / destruction ----------------------------------------

def test_creation_w3():
    cert = creation_check(w3(), spec_of((0, PLUS), (1, PLUS)))
    assert cert is not None
    assert cert.basis == (0, 3)


def test_creation_cyclic():
    om = cyclic_om(4, 8)
    cert = creation_check(om, spec_of((0, PLUS), (1, PLUS), (2, PLUS), (3, PLUS)))
    assert cert is not None
    assert set(cert.basis) == {0, 8, 1, 2}


def test_nonadjacent_mutations_persist():
    rng = random.Random(35)
    om = om_from_points(random_points(rng, 3, 6))
    f = 0
    spec = spec_of((f, PLUS), (1, PLUS), (2, PLUS))
    ext = lex_extend(om, spec)
    for cert in mutations(om):
        if f not in cert.basis:
            assert mutation_from_basis(ext, cert.basis) is not None


def test_destruction():
    om = cyclic_om(4, 8)
    cert = mutation_from_basis(om, (0, 1, 2, 3))
    rep = destruction_check(om, cert, 0, 5)
    assert rep.new_certificate is not None
    assert set(rep.new_certificate.basis) == {8, 1, 2, 3}
    assert rep.decertified
    assert any(count > om.rank for count in rep.lift_adjacency.values())


def test_destruction_rank2_analogue():
    # in rank 2 the shifted basis re-certifies but every tope stays
    # simplicial (two walls each), so nothing is de-certified
    om = w3()
    cert = mutation_from_basis(om, (0, 1))
    rep = destruction_check(om, cert, 0, 2)
    assert rep.new_certificate is not None
    assert set(rep.new_certificate.basis) == {3, 1}
    assert not rep.decertified
    assert all(count == 2 for count in rep.lift_adjacency.values())


def test_destruction_mutation_without_fprime_keeps_constant_sign():
    # mutations not involving the new element have constant f'-value
    om = cyclic_om(4, 8)
    spec = spec_of((0, PLUS), (5, MINUS), (6, PLUS), (7, PLUS))
    ext = lex_extend(om, spec)
    fp = om.n
    for cert in mutations(ext):
        if fp not in cert.basis:
            vals = {x[fp] for x in cert.cocircuit_vectors() if x[fp] != 0}
            assert len(vals) == 1


# -- perturbation ------------------------------------------------------------------

def _perturbable_instance():
    # extend the cyclic polytope through one cocircuit of a mutation:
    # the f-base cocircuit gets e = 0, other base cocircuits e = +
    from omforge.core import om_from_points, realizable_extend_through
    from omforge.corpus import cyclic_points

    rng = random.Random(36)
    om = cyclic_om(4, 8)
    cert = mutation_from_basis(om, (0, 1, 2, 3))
    x = cert.cocircuit_for(0)
    pts = realizable_extend_through(cyclic_points(4, 8), [sorted(x.zero_set())], rng)
    ext = om_from_points(pts)
    target = None
    for v in ext.cocircuits:
        if v.restrict(range(8)) in (x, -x) and v[8] == 0:
            target = v if v.restrict(range(8)) == x else -v
            break
    assert target is not None
    return ext, target


def test_perturb_and_undo():
    ext, x = _perturbable_instance()
    moved = perturb_extension(ext, x, 8, new_sign=MINUS)
    assert validate_cocircuit_axioms(moved.cocircuits, n=9, rank=4).ok
    x2 = x.with_sign(8, MINUS)
    assert x2 in moved.cocircuits
    # old cocircuits other than x keep their e-values
    old_vals = {v.restrict(range(8)): v[8] for v in ext.cocircuits if v not in (x, -x)}
    for w in moved.cocircuits:
        w0 = w.restrict(range(8))
        if w0 in old_vals and w0 in ext.delete({8}).cocircuits:
            assert w[8] == old_vals[w0]
    back = perturb_extension(moved, x2, 8, new_sign=0)
    assert back == ext


def test_perturb_rejects_non_cocircuit():
    ext, x = _perturbable_instance()
    with pytest.raises(PerturbationError):
        perturb_extension(ext, x.with_sign(0, 0), 8)


# -- flip / extension exchange ------------------------------------------------------

def test_flip_lex_commute_cyclic():
    om = cyclic_om(4, 8)
    report = flip_lex_commute_check(om, (0, 1, 2, 3), 5)
    assert report.equal
    assert report.m_is_mutation and report.mprime_is_mutation


def test_flip_lex_commute_rank2():
    report = flip_lex_commute_check(cyclic_om(2, 5), (0, 1), 3)
    assert report.equal


def test_mandel_pipeline_on_euclidean_input():
    om = cyclic_om(4, 8)
    result = mandel_from_euclidean_mutant(om, (0, 1, 2, 3), 5)
    assert result.deletion_ok
    assert result.ok
    assert result.fprime == 8


def test_preservation_lemmas():
    # lex extension of a Euclidean om: (om+p, p, e) all Euclidean
    rng = random.Random(37)
    om = om_from_points(random_points(rng, 4, 7))
    spec = spec_of((2, PLUS), (0, MINUS), (5, PLUS), (6, MINUS))
    ext = lex_extend(om, spec)
    p = om.n
    assert all(
        is_euclidean(Program(ext, p, e)).euclidean for e in range(om.n)
    )
    # inseparable substitution on the uniform extension
    f = 2
    for g in range(om.n):
        if g == f:
            continue
        assert (
            is_euclidean(Program(ext, g, f)).euclidean
            == is_euclidean(Program(ext, g, p)).euclidean
        )


def test_new_mutation_contravariant_pair():
    # contravariant pair (f, f') with f' in general position: G_f^- of
    # (om, f', f) is empty and f gains a mutation with all cocircuits
    # f' = + that survives deleting f'
    om = cyclic_om(3, 6)
    f = 0
    ext = lex_extend(om, spec_of((f, PLUS), (2, PLUS), (4, PLUS)))
    fp = om.n
    from omforge.programs import cocircuit_graph

    graph = cocircuit_graph(Program(ext, fp, f))
    assert graph.gf_minus() == ()
    assert graph.gf_plus() != ()
    hit = None
    for cert in mutations(ext):
        if f in cert.basis:
            vals = {x[fp] for x in cert.cocircuit_vectors()}
            if vals == {PLUS}:
                hit = cert
                break
    assert hit is not None
    deleted = ext.delete({fp})
    assert mutation_from_basis(deleted, hit.basis) is not None
