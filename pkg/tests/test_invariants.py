import random
from math import gcd

import pytest

from ttklib.braids import BraidWord, TTKParams, braid_for, torus_braid
from ttklib.errors import BudgetError, NotAKnotError
from ttklib.invariants import (alexander, burau_matrix, det_laurent,
                               equal_up_to_mirror, invariant_report, jones,
                               kauffman_bracket, knot_determinant, tl_bracket,
                               torus_alexander, torus_jones, tl_predicted_ops,
                               _det_bareiss, _det_modular)
from ttklib.laurent import Laurent

TREFOIL = BraidWord(2, (1, 1, 1))
FIGURE8 = BraidWord(3, (1, -2, 1, -2))


def random_word(rng, max_strands=5, max_len=12):
    n = rng.randint(2, max_strands)
    L = rng.randint(1, max_len)
    alphabet = [i for i in range(-(n - 1), n) if i != 0]
    return BraidWord(n, tuple(rng.choice(alphabet) for _ in range(L)))


# -- Kauffman bracket ---------------------------------------------------

def test_bracket_unknots():
    assert kauffman_bracket(BraidWord(1, ())) == 1
    two = kauffman_bracket(BraidWord(2, ()))
    assert two == Laurent({2: -1, -2: -1}, "A")


def test_bracket_trefoil():
    br = kauffman_bracket(TREFOIL)
    assert br == Laurent({-7: 1, -3: -1, 5: -1}, "A")
    assert br.max_exp - br.min_exp == 12


def test_bracket_budget_error():
    w = BraidWord(2, (1,) * 10)
    with pytest.raises(BudgetError) as exc:
        kauffman_bracket(w, budget=8)
    assert exc.value.kind == "crossings" and exc.value.count == 10


# -- Jones --------------------------------------------------------------

def test_jones_trefoil_both_methods():
    expected = Laurent({1: 1, 3: 1, 4: -1})
    assert jones(TREFOIL, "kauffman") == expected
    assert jones(TREFOIL, "tl") == expected


def test_jones_mirror_trefoil():
    assert jones(TREFOIL.mirror(), "tl") == torus_jones(2, 3).mirrored()


def test_jones_unknot_family_member():
    w = braid_for(TTKParams(p=5, q=2, r=3, twist_n=-1))
    assert jones(w, "tl") == 1
    assert jones(w, "kauffman") == 1


def test_torus_jones_closed_form_values():
    assert torus_jones(2, 3) == Laurent({1: 1, 3: 1, 4: -1})
    assert torus_jones(2, 5) == Laurent({2: 1, 4: 1, 5: -1, 6: 1, 7: -1})
    assert torus_jones(3, 1) == 1
    assert torus_jones(1, 0) == 1
    assert torus_jones(-2, 3) == torus_jones(2, 3).mirrored()


def test_torus_closed_forms_match_braids():
    for p in range(3, 8):
        for q in range(2, p):
            if gcd(p, q) != 1:
                continue
            w = torus_braid(p, q)
            assert jones(w, "tl") == torus_jones(p, q), (p, q)
            assert alexander(w) == torus_alexander(p, q), (p, q)


def test_tl_equals_kauffman_on_random_words():
    rng = random.Random(20240811)
    for _ in range(60):
        w = random_word(rng)
        assert jones(w, "tl") == jones(w, "kauffman"), w


def test_jones_mirror_contract_random():
    rng = random.Random(7)
    for _ in range(25):
        w = random_word(rng)
        assert jones(w.mirror(), "tl") == jones(w, "tl").mirrored(), w


def test_jones_link_half_integer_variable():
    hopf = BraidWord(2, (1, 1))
    v = jones(hopf, "tl")
    assert v.var == "t^1/2"
    # V(Hopf+) = -t^(1/2) - t^(5/2), exponents doubled in the half variable
    assert v == Laurent({1: -1, 5: -1}, "t^1/2")


def test_tl_budget_behaviour():
    w = braid_for(TTKParams(p=13, q=5, r=8, twist_n=-1))
    with pytest.raises(BudgetError) as exc:
        tl_bracket(w, ops_budget=100_000)
    assert exc.value.kind == "tl-ops"
    with pytest.raises(BudgetError) as exc:
        tl_bracket(BraidWord(15, (1,)), strand_limit=14)
    assert exc.value.kind == "strands"
    assert tl_predicted_ops(2, 3) == 1 + 2 + 2


def test_jones_auto_falls_back_to_state_sum():
    # strand limit 2 forces the fallback for a 3-strand word
    v = jones(FIGURE8, "auto", strand_limit=2)
    assert v == jones(FIGURE8, "kauffman")


# -- Alexander ----------------------------------------------------------

def test_alexander_trefoil_and_figure8():
    assert alexander(TREFOIL) == Laurent({-1: 1, 0: -1, 1: 1})
    d8 = alexander(FIGURE8)
    assert d8 == Laurent({-1: -1, 0: 3, 1: -1})
    assert knot_determinant(d8) == 5
    assert knot_determinant(alexander(TREFOIL)) == 3


def test_alexander_mirror_blind():
    rng = random.Random(99)
    done = 0
    while done < 12:
        w = random_word(rng)
        if not w.is_knot():
            continue
        assert alexander(w.mirror()) == alexander(w)
        done += 1


def test_alexander_unknot_family_large():
    w = braid_for(TTKParams(p=13, q=5, r=8, twist_n=-1))
    assert w.crossing_count == 116
    assert alexander(w) == 1


def test_alexander_unknot_family_to_n8():
    from ttklib.horadam import fibonacci
    for n in range(7, 9):
        p, q, r = fibonacci(n + 2), fibonacci(n), fibonacci(n + 1)
        w = braid_for(TTKParams(p=p, q=q, r=r, twist_n=-1))
        assert alexander(w) == 1, n


def test_alexander_rejects_links():
    with pytest.raises(NotAKnotError):
        alexander(torus_braid(4, 2))


def test_alexander_normalization_properties():
    rng = random.Random(5)
    done = 0
    while done < 15:
        w = random_word(rng)
        if not w.is_knot():
            continue
        d = alexander(w)
        assert d.is_symmetric()
        assert d.evaluate(1) == 1
        assert knot_determinant(d) >= 0
        done += 1


def test_torus_alexander_values():
    assert torus_alexander(2, 3) == Laurent({-1: 1, 0: -1, 1: 1})
    assert torus_alexander(5, 1) == 1
    assert torus_alexander(2, -3) == torus_alexander(2, 3)


# -- Markov moves and free reduction ------------------------------------

def test_markov_conjugation_invariance():
    rng = random.Random(4242)
    done = 0
    while done < 15:
        w = random_word(rng, max_strands=4, max_len=8)
        g = rng.choice([i for i in range(-(w.strands - 1), w.strands) if i != 0])
        conj = BraidWord(w.strands, (g,) + w.letters + (-g,))
        assert jones(conj, "tl") == jones(w, "tl")
        if w.is_knot():
            assert alexander(conj) == alexander(w)
            done += 1
        else:
            done += 1


def test_markov_stabilization_invariance():
    rng = random.Random(777)
    for _ in range(15):
        w = random_word(rng, max_strands=4, max_len=8)
        for sign in (1, -1):
            stab = BraidWord(w.strands + 1, w.letters + (sign * w.strands,))
            assert jones(stab, "tl") == jones(w, "tl")
            if w.is_knot():
                assert alexander(stab) == alexander(w)


def test_free_reduction_invariance():
    w = braid_for(TTKParams(p=5, q=2, r=3, twist_n=-1))
    li = list(w.letters)
    li[7:7] = [2, -2]
    padded = BraidWord(w.strands, tuple(li))
    assert jones(padded, "tl") == jones(w, "tl")
    assert alexander(padded) == alexander(w)


# -- determinant paths ---------------------------------------------------

def test_bareiss_equals_modular_on_burau_matrices():
    rng = random.Random(31337)
    for _ in range(25):
        w = random_word(rng, max_strands=6, max_len=14)
        rows = burau_matrix(w)
        d = w.strands - 1
        for i in range(d):
            rows[i][i] = rows[i][i] - 1
        a = _det_bareiss([row[:] for row in rows])
        b = _det_modular([row[:] for row in rows])
        assert a == b, w


def test_det_singular_matrix():
    one = Laurent.one("t")
    rows = [[one, one], [one, one]]
    assert det_laurent(rows, "bareiss") == 0
    assert det_laurent(rows, "modular") == 0


def test_det_modular_many_primes():
    # coefficients around 2^40 force a determinant with ~300-bit
    # coefficients, exercising the CRT across 20+ primes
    rng = random.Random(12)
    d = 8
    rows = [[Laurent({e: rng.randrange(-(1 << 40), 1 << 40) for e in range(-2, 3)})
             for _ in range(d)] for _ in range(d)]
    a = _det_bareiss([row[:] for row in rows])
    b = _det_modular([row[:] for row in rows])
    assert a == b
    assert max(abs(c) for c in a.terms.values()).bit_length() > 250


def test_det_modular_long_words():
    rng = random.Random(2)
    for _ in range(4):
        n = 7
        letters = tuple(rng.choice([i for i in range(-(n - 1), n) if i != 0])
                        for _ in range(60))
        w = BraidWord(n, letters)
        rows = burau_matrix(w)
        for i in range(n - 1):
            rows[i][i] = rows[i][i] - 1
        assert _det_bareiss([r[:] for r in rows]) == _det_modular([r[:] for r in rows])


def test_alexander_det_methods_agree():
    w = braid_for(TTKParams(p=8, q=3, r=5, twist_n=-1))
    assert alexander(w, det_method="bareiss") == alexander(w, det_method="modular")


# -- misc ----------------------------------------------------------------

def test_equal_up_to_mirror():
    f = Laurent({1: 1, 3: 1, 4: -1})
    assert equal_up_to_mirror(f, f.mirrored()) == "mirror"
    assert equal_up_to_mirror(Laurent.one(), Laurent.one()) == "equal"
    assert equal_up_to_mirror(Laurent({-1: 1, 0: -1, 1: 1}),
                              Laurent({-2: 1, 0: -1, 2: 1})) == "neither"


def test_invariant_report():
    rep = invariant_report(TREFOIL)
    assert rep.jones == torus_jones(2, 3)
    assert rep.alexander == torus_alexander(2, 3)
    assert rep.determinant == 3
    assert rep.crossing_count == 3 and rep.strand_count == 2
    d = rep.to_json_dict()
    assert d["determinant"] == 3
    assert d["jones"]["terms"] == [[1, 1], [3, 1], [4, -1]]


def test_invariant_report_jones_skipped():
    w = braid_for(TTKParams(p=13, q=5, r=8, twist_n=-1))
    rep = invariant_report(w, tl_ops=1000, crossing_budget=10)
    assert rep.jones is None
    assert rep.jones_status.startswith("skipped")
    assert rep.alexander == 1
