import pytest

from c2surf.classify import (
    Action,
    DDUnavailableError,
    Taxonomy,
    count_nonorientable,
    decide_isomorphic,
    dd_of_word,
    enumerate_nonorientable,
    enumerate_sphere,
    enumerate_torus,
    identity_dd,
    iter_nonorientable,
    scherrer_admissible,
    taxonomy_cells,
)
from c2surf.counting import total_count
from c2surf.dd import DDTuple
from c2surf.words import Sign, Surface, format_word, parse_word


def act(text: str) -> Action:
    return Action.from_word(parse_word(text))


def test_scherrer_admissible():
    assert scherrer_admissible(Taxonomy(1, 0, 1, Sign.PLUS), 1)
    assert scherrer_admissible(Taxonomy(4, 0, 0), 2)  # admissible but unrealized
    assert not scherrer_admissible(Taxonomy(1, 0, 0), 2)  # parity
    assert not scherrer_admissible(Taxonomy(2, 1, 0, Sign.MINUS), 2)  # tightened bound
    assert scherrer_admissible(Taxonomy(2, 1, 0, Sign.PLUS), 2)


def test_enumerate_sphere():
    actions = enumerate_sphere()
    assert len(actions) == 4
    by_word = {format_word(a.word): a for a in actions}
    assert by_word["S22"].taxonomy == Taxonomy(2, 0, 0, Sign.PLUS)
    assert by_word["S21"].taxonomy == Taxonomy(0, 1, 0, Sign.PLUS)
    assert by_word["S2a"].taxonomy == Taxonomy(0, 0, 0, Sign.MINUS)
    assert by_word["Triv(T0)"].is_trivial()


def test_enumerate_torus_counts():
    for g in range(0, 40):
        assert len(enumerate_torus(g)) == 4 + 2 * g


def test_enumerate_torus_g0_matches_sphere():
    words_t0 = {format_word(a.word) for a in enumerate_torus(0)}
    words_sphere = {format_word(a.word) for a in enumerate_sphere()}
    assert words_t0 == words_sphere


def test_enumerate_torus_g1():
    actions = enumerate_torus(1)
    assert len(actions) == 6
    words = {format_word(a.word) for a in actions}
    assert words == {
        "Triv(T1)",
        "Tanti(1)",
        "Trot(1)",
        "Tspit(1,4)",
        "Trefl(1,2)",
        "S2a+S10AT",
    }
    no_rot = {format_word(a.word) for a in enumerate_torus(2)}
    assert not any(w.startswith("Trot") for w in no_rot)


def test_enumerate_nonorientable_counts():
    for r in range(1, 60):
        actions = enumerate_nonorientable(r)
        assert len(actions) == total_count(Surface(False, r))
        assert count_nonorientable(r) == len(actions)


def test_nonorientable_small_contents():
    n1 = enumerate_nonorientable(1, include_trivial=False)
    assert [format_word(a.word) for a in n1] == ["S22+FM"]
    assert n1[0].taxonomy == Taxonomy(1, 0, 1, Sign.PLUS)
    n2 = enumerate_nonorientable(2, include_trivial=False)
    assert len(n2) == 5
    n4_row = [
        a
        for a in enumerate_nonorientable(4, include_trivial=False)
        if a.taxonomy.unsigned() == Taxonomy(0, 1, 0)
    ]
    assert len(n4_row) == 3
    signs = [a.taxonomy.q for a in n4_row]
    assert signs.count(Sign.MINUS) == 2 and signs.count(Sign.PLUS) == 1


def test_actions_satisfy_structure():
    # a fixed set consisting of exactly one point never occurs (the RP^2
    # action has F = 1 but also a one-sided oval)
    for r in range(1, 40):
        for a in iter_nonorientable(r, include_trivial=False):
            assert a.surface == Surface(False, r)
            assert scherrer_admissible(a.taxonomy, r)
            assert not (a.taxonomy.f == 1 and a.taxonomy.c == 0)
    for g in range(0, 20):
        for a in enumerate_torus(g, include_trivial=False):
            assert a.surface == Surface(True, g)
            assert scherrer_admissible(a.taxonomy, 2 * g)
            assert not (a.taxonomy.f == 1 and a.taxonomy.c == 0)
            assert not (a.taxonomy.f > 0 and a.taxonomy.c > 0)
            assert a.taxonomy.cminus == 0


def test_taxonomy_multiplicities():
    # the only repeated signed taxonomies are [0,C:(C,0),-] on even N_r
    for r in range(1, 41):
        per_signed = {}
        for a in iter_nonorientable(r, include_trivial=False):
            key = a.taxonomy
            per_signed[key] = per_signed.get(key, 0) + 1
        for tax, count in per_signed.items():
            if count == 1:
                continue
            assert r % 2 == 0 and r >= 4
            assert tax.f == 0 and tax.cminus == 0 and tax.q == Sign.MINUS
            c = tax.c
            if c == 0 or c == r // 2 - 1:
                assert count == 2
            elif 1 <= c <= r // 2 - 2:
                assert count == 3
            else:
                raise AssertionError((r, tax, count))


def test_duplicate_free():
    for r in range(1, 25):
        actions = enumerate_nonorientable(r, include_trivial=False)
        for i, a in enumerate(actions):
            for b in actions[i + 1 :]:
                assert not decide_isomorphic(a, b), (a, b)
    for g in range(0, 12):
        actions = enumerate_torus(g, include_trivial=False)
        for i, a in enumerate(actions):
            for b in actions[i + 1 :]:
                assert not decide_isomorphic(a, b), (a, b)


def test_identity_dd():
    assert identity_dd(Surface(True, 3)) == DDTuple(0, 0, 0, 0)
    assert identity_dd(Surface(False, 4)) == DDTuple(0, 1, 1, 0)
    # cross-check against the actual dd of the identity isometry
    from c2surf.bilinear import identity_involution, standard_space
    from c2surf.dd import dd

    for kind, n, surf in (
        ("symplectic", 4, Surface(True, 2)),
        ("orthogonal", 4, Surface(False, 4)),
        ("orthogonal", 5, Surface(False, 5)),
    ):
        assert identity_dd(surf) == dd(identity_involution(standard_space(kind, n)))


def test_dd_of_word_klein_and_torus():
    assert dd_of_word(parse_word("S2a+DCC")) == DDTuple(1, 0, 0, 1)
    assert dd_of_word(parse_word("S21+DCC")) == DDTuple(1, 0, 0, 1)
    assert dd_of_word(parse_word("S2a+S11AT")) == DDTuple(1, 0, 0, 1)
    assert dd_of_word(parse_word("S22+S10AT")) == DDTuple(0, 1, 1, 0)
    assert dd_of_word(parse_word("S22+2FM")) == DDTuple(0, 1, 1, 0)
    assert dd_of_word(parse_word("Triv(N2)")) == DDTuple(0, 1, 1, 0)
    # S22+DCC is isomorphic to S2a+S11AT and must agree
    assert dd_of_word(parse_word("S22+DCC")) == DDTuple(1, 0, 0, 1)
    for text in ("Tanti(1)", "Trot(1)", "Tspit(1,4)", "Trefl(1,2)", "Triv(T1)"):
        assert dd_of_word(parse_word(text)) == DDTuple(0, 0, 0, 0)
    assert dd_of_word(parse_word("S2a+S10AT")) == DDTuple(1, 1, 1, 1)
    assert dd_of_word(parse_word("S2a+3S10AT")) == DDTuple(1, 1, 1, 1)
    assert dd_of_word(parse_word("Tanti(1)+2S10AT")) == DDTuple(2, 1, 2, 1)


def test_dd_of_word_crosscapped_families():
    assert dd_of_word(parse_word("S2a+2DCC+S10AT")) == DDTuple(3, 1, 3, 1)
    assert dd_of_word(parse_word("Tanti(1)+DCC+S10AT")) == DDTuple(3, 1, 2, 1)
    assert dd_of_word(parse_word("Trefl(1,2)")) == DDTuple(0, 0, 0, 0)
    assert dd_of_word(parse_word("S22+2S10AT")) is None  # no derived formula


def test_dd_separates_the_free_base_families():
    for r in (6, 8, 10, 12):
        for c in range(1, r // 2 - 1):
            a = dd_of_word(parse_word(f"S2a+{r//2 - c}DCC+{c}S10AT"))
            b = dd_of_word(parse_word(f"Tanti(1)+{r//2 - c - 1}DCC+{c}S10AT"))
            assert a is not None and b is not None
            assert a.d == b.d and a.alpha == b.alpha and a.alpha_tilde == b.alpha_tilde
            assert abs(a.d_tilde - b.d_tilde) == 1


def test_decide_isomorphic():
    # same taxonomy with F > 0: the duplicate Klein-bottle descriptions agree
    assert decide_isomorphic(act("S22+DCC"), act("S2a+S11AT"))
    assert decide_isomorphic(act("S21+S11AT"), act("S22+S10AT"))
    # separation distinguishes
    assert not decide_isomorphic(act("S2a+DCC+2S10AT"), act("S21+2DCC+S10AT"))
    # DD distinguishes
    assert not decide_isomorphic(act("S2a+2DCC+S10AT"), act("Tanti(1)+DCC+S10AT"))
    # free actions on N_6
    assert not decide_isomorphic(act("S2a+3DCC"), act("Tanti(1)+2DCC"))
    assert decide_isomorphic(act("S2a+3DCC"), act("S2a+3DCC"))
    # different surfaces
    assert not decide_isomorphic(act("S2a+DCC"), act("S2a+2DCC"))
    # trivial only matches trivial
    assert decide_isomorphic(act("Triv(N2)"), act("Triv(N2)"))
    assert not decide_isomorphic(act("Triv(N2)"), act("S2a+DCC"))


def test_decide_isomorphic_rewrite_aliases():
    # the same space written two ways: normalization maps both to one word,
    # and the decision procedure sees equal invariants
    assert decide_isomorphic(act("Tanti(2)+DCC"), act("S2a+3DCC"))
    assert decide_isomorphic(act("Trot(1)+2DCC"), act("Tanti(1)+2DCC"))


def test_decide_isomorphic_dd_unavailable():
    # every covered word in the ambiguous family has a derived DD; a record
    # arriving without one must raise rather than guess
    a = act("S2a+2DCC+S10AT")
    stripped = Action(a.word, a.surface, a.taxonomy, a.epsilon, None)
    with pytest.raises(DDUnavailableError):
        decide_isomorphic(a, stripped)


def test_action_records_are_self_consistent():
    for r in (1, 2, 5, 8):
        for a in iter_nonorientable(r):
            a.verify()
    for g in (0, 1, 4):
        for a in enumerate_torus(g):
            a.verify()


def test_free_actions_match_the_cover_classification():
    # actions with empty fixed set in the enumeration = classified free actions
    from c2surf.orbits import classify_free_structures

    for r in range(1, 30):
        free = [
            a
            for a in iter_nonorientable(r, include_trivial=False)
            if a.taxonomy.f == 0 and a.taxonomy.c == 0
        ]
        assert len(free) == len(classify_free_structures(Surface(False, r)))
    for g in range(0, 15):
        free = [
            a
            for a in enumerate_torus(g, include_trivial=False)
            if a.taxonomy.f == 0 and a.taxonomy.c == 0
        ]
        assert len(free) == len(classify_free_structures(Surface(True, g)))


def test_torus_taxonomy_chart():
    for g in (2, 3, 5):
        for a in enumerate_torus(g, include_trivial=False):
            word = format_word(a.word)
            tax = a.taxonomy
            if word.startswith("Tspit"):
                assert tax.cplus == tax.cminus == 0 and tax.q == Sign.PLUS
            elif word.startswith("Trefl"):
                assert tax.f == 0 and tax.q == Sign.PLUS and tax.cplus >= 1
            elif word.startswith("Trot") and "S10AT" not in word:
                assert tax == Taxonomy(0, 0, 0, Sign.PLUS)
            elif word == f"Tanti({g})":
                assert tax == Taxonomy(0, 0, 0, Sign.MINUS)
            else:  # antipodal base with trivial-circle tubes
                assert tax.f == 0 and tax.q == Sign.MINUS and tax.cplus >= 1


def test_separating_actions_are_exactly_the_doubled_family():
    from c2surf.words import BaseKind, Epsilon

    for r in range(2, 31, 2):
        separating = [
            a
            for a in iter_nonorientable(r, include_trivial=False)
            if a.epsilon == Epsilon.SEPARATING
        ]
        # one doubled surface per oval count C = 1 .. r/2
        assert len(separating) == r // 2
        for a in separating:
            assert a.word.base.kind == BaseKind.S21
            assert a.taxonomy.q == Sign.MINUS
    for r in range(1, 30, 2):
        assert all(
            a.epsilon != Epsilon.SEPARATING
            for a in iter_nonorientable(r, include_trivial=False)
        )


def test_taxonomy_cells_row_counts():
    rows = [cell for cell in taxonomy_cells(6) if cell[1] or cell[2]]
    assert len(rows) == 20
    assert sum(len(neg) + len(pos) for _, neg, pos in rows) == 27
    rows4 = [cell for cell in taxonomy_cells(4) if cell[1] or cell[2]]
    assert len(rows4) == 11
    assert sum(len(neg) + len(pos) for _, neg, pos in rows4) == 14
