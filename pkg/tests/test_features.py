import pytest

from ptsdist.bisim import are_bisimilar
from ptsdist.distance import DistanceParams, distance_between, distance_matrix
from ptsdist.features import (
    BuiltPts,
    ParseTree,
    TaggedSentence,
    TextFormatError,
    build_grammar_pts,
    build_letter_pts,
    build_pos_pts,
    combine,
    parse_tagged_tsv,
    parse_trees,
)
from ptsdist.pts import Pts, residual, validate


def row_by_labels(built: BuiltPts, source: str) -> dict[str, float]:
    pts = built.pts
    s = pts.index_of(source)
    return {pts.label(j): p for j, p in pts.successors(s)}


# letters


def test_letters_ab_ab():
    built = build_letter_pts("ab. ab.")
    assert built.pts.state_labels == ("start", "a", "b", "end")
    assert row_by_labels(built, "start") == {"a": 1.0}
    assert row_by_labels(built, "a") == {"b": 1.0}
    assert row_by_labels(built, "b") == {"end": 1.0}
    assert row_by_labels(built, "end") == {}


def test_letters_self_loop_split():
    built = build_letter_pts("aa.")
    assert row_by_labels(built, "start") == {"a": 1.0}
    assert row_by_labels(built, "a") == {"a": 0.5, "end": 0.5}


def test_letters_empty_and_unterminated():
    with pytest.raises(TextFormatError, match="empty input"):
        build_letter_pts("")
    with pytest.raises(TextFormatError, match="empty input"):
        build_letter_pts("   \n ")
    with pytest.raises(TextFormatError, match="terminator"):
        build_letter_pts("no ending here")


def test_letters_case_folding_and_noise():
    plain = build_letter_pts("ab. ab.")
    noisy = build_letter_pts('Ab.  "aB!"')
    assert noisy.pts == plain.pts


def test_letters_trailing_fragment_dropped():
    assert build_letter_pts("ab. ab").pts == build_letter_pts("ab.").pts


def test_letters_custom_terminators():
    built = build_letter_pts("ab| ab|", terminators="|")
    assert row_by_labels(built, "a") == {"b": 1.0}


def test_letters_rows_are_full_distributions():
    built = build_letter_pts("the quick brown fox. jumps over! the lazy dog?")
    assert validate(built.pts).ok
    for s in built.pts.state_ids:
        expected = 1.0 if s != built.end else 0.0
        assert 1.0 - residual(built.pts, s) == pytest.approx(expected, abs=1e-9)


# tagged sentences / pos


def test_tsv_parsing():
    text = "the\tDT\ndog\tNN\n.\t.\n\na\tDT\ncat\tNN\n.\t.\n"
    sentences = parse_tagged_tsv(text)
    assert len(sentences) == 2
    assert sentences[0].tags == ("DT", "NN")


def test_tsv_missing_tab():
    with pytest.raises(TextFormatError, match="line 2"):
        parse_tagged_tsv("the\tDT\ndog NN\n.\t.\n")


def test_tsv_missing_end_token():
    with pytest.raises(TextFormatError, match="end token"):
        parse_tagged_tsv("the\tDT\ndog\tNN\n")


def test_tsv_mid_sentence_end_token():
    with pytest.raises(TextFormatError):
        parse_tagged_tsv(".\t.\ndog\tNN\n.\t.\n")


def test_tsv_empty():
    with pytest.raises(TextFormatError, match="empty input"):
        parse_tagged_tsv("\n\n")


def test_tagged_sentence_invariants():
    with pytest.raises(TextFormatError):
        TaggedSentence(())
    with pytest.raises(TextFormatError):
        TaggedSentence((("dog", "NN"),))
    ok = TaggedSentence((("dog", "NN"), (".", ".")))
    assert ok.tags == ("NN",)


def test_pos_single_sentence():
    built = build_pos_pts(parse_tagged_tsv("the\tDT\ndog\tNN\n.\t.\n"))
    assert row_by_labels(built, "start") == {"DT": 1.0}
    assert row_by_labels(built, "DT") == {"NN": 1.0}
    assert row_by_labels(built, "NN") == {"end": 1.0}


def test_pos_branching():
    text = "the\tDT\ndog\tNN\n.\t.\n\nthe\tDT\nruns\tVB\n.\t.\n"
    built = build_pos_pts(parse_tagged_tsv(text))
    assert row_by_labels(built, "DT") == {"NN": 0.5, "VB": 0.5}


def test_pos_single_token_sentence():
    built = build_pos_pts(parse_tagged_tsv("oh\tUH\n.\t.\n"))
    assert row_by_labels(built, "start") == {"UH": 1.0}
    assert row_by_labels(built, "UH") == {"end": 1.0}


def test_pos_empty_input():
    with pytest.raises(TextFormatError, match="empty input"):
        build_pos_pts([])


# trees / grammar


def test_tree_parsing():
    trees = parse_trees("(S (NP (DT the) (NN dog)) (VP (VBZ runs)))\n")
    assert len(trees) == 1
    assert trees[0].label == "S"
    assert trees[0].children[0].label == "NP"


def test_tree_unbalanced():
    with pytest.raises(TextFormatError, match="line 1"):
        parse_trees("(S (NP (DT the)")
    with pytest.raises(TextFormatError, match="trailing"):
        parse_trees("(S (NP x)) extra")


def test_tree_childless_constituent():
    with pytest.raises(TextFormatError, match="no children"):
        parse_trees("(S)")
    with pytest.raises(TextFormatError, match="label"):
        parse_trees("(S ())")
    with pytest.raises(TextFormatError):
        ParseTree("S", ())


def test_grammar_two_branch_example():
    built = build_grammar_pts(parse_trees("(S (NP dog) (VP runs))"))
    assert row_by_labels(built, "start") == {"NP": 0.5, "VP": 0.5}
    assert row_by_labels(built, "NP") == {"end": 1.0}
    assert row_by_labels(built, "VP") == {"end": 1.0}


def test_grammar_single_chain():
    built = build_grammar_pts(parse_trees("(S (NP x))"))
    assert row_by_labels(built, "start") == {"NP": 1.0}
    assert row_by_labels(built, "NP") == {"end": 1.0}


def test_grammar_duplicate_trees_normalize():
    one = build_grammar_pts(parse_trees("(S (NP dog) (VP runs))"))
    two = build_grammar_pts(
        parse_trees("(S (NP dog) (VP runs))\n(S (NP dog) (VP runs))")
    )
    assert one.pts == two.pts


def test_grammar_nested_counts():
    built = build_grammar_pts(parse_trees("(S (NP (DT the) (NN dog)) (VP runs))"))
    assert row_by_labels(built, "NP") == {"DT": 0.5, "NN": 0.5}
    assert row_by_labels(built, "DT") == {"end": 1.0}


def test_grammar_empty():
    with pytest.raises(TextFormatError, match="empty input"):
        build_grammar_pts([])


def test_builders_validate_and_are_deterministic():
    text = "abc. cab! bca?"
    a = build_letter_pts(text)
    b = build_letter_pts(text)
    assert a == b
    assert validate(a.pts).ok


# combine


def test_combine_shares_only_end():
    a = build_letter_pts("ab.")
    b = build_letter_pts("b.")
    combined = combine(a, b)
    assert combined.pts.state_labels == (
        "A:start",
        "A:a",
        "A:b",
        "B:start",
        "B:b",
        "end",
    )
    assert validate(combined.pts).ok
    # the two b-states stay distinct; only end coincides
    assert combined.pts.index_of("A:b") != combined.pts.index_of("B:b")
    # start states have no incoming transitions
    for s in combined.pts.state_ids:
        targets = dict(combined.pts.successors(s))
        assert combined.start_a not in targets
        assert combined.start_b not in targets


def test_combine_identical_text_within_alpha():
    a = build_letter_pts("ab. ab.")
    b = build_letter_pts("ab. ab.")
    combined = combine(a, b)
    assert are_bisimilar(combined.pts, combined.start_a, combined.start_b)
    v = distance_between(
        combined.pts, combined.start_a, combined.start_b, DistanceParams(0.9, 0.01)
    )
    assert v <= 0.01


def test_combine_golden_distance():
    combined = combine(build_letter_pts("ab."), build_letter_pts("b."))
    v = distance_between(
        combined.pts, combined.start_a, combined.start_b, DistanceParams(0.9, 1e-6)
    )
    # oracle-pinned: mass agrees only after both chains reach end, two
    # discounted steps apart, so the value settles at 0.9^2
    assert v == pytest.approx(0.81, abs=1e-6)


def test_combine_rejects_leaky_end():
    cyclic = Pts.from_rows(
        ["start", "a", "b", "end"], [{2: 1.0}, {3: 1.0}, {4: 1.0}, {1: 1.0}]
    )
    bad = BuiltPts(pts=cyclic, start=1, end=4)
    with pytest.raises(ValueError, match="absorbing"):
        combine(bad, build_letter_pts("b."))


def test_combine_preserves_subsystem_distances():
    a = build_letter_pts("abc. bca.")
    b = build_letter_pts("xy. yx.")
    combined = combine(a, b)
    alpha = 1e-4
    params = DistanceParams(0.9, alpha)
    standalone = distance_matrix(a.pts, params).values
    merged = distance_matrix(combined.pts, params).values
    remap = {}
    for s in a.pts.state_ids:
        label = "A:" + a.pts.label(s) if s != a.end else "end"
        remap[s] = combined.pts.index_of(label)
    for s in a.pts.state_ids:
        for t in a.pts.state_ids:
            got = merged[remap[s] - 1, remap[t] - 1]
            want = standalone[s - 1, t - 1]
            assert abs(got - want) <= 2 * alpha
