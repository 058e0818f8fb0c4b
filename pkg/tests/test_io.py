from hypothesis import given
from hypothesis import strategies as st

from contact_tri.complex import SimplicialComplex
from contact_tri.generators import names, generate
from contact_tri.io import format_facet_list, parse_facet_list, read_facet_list, write_facet_list


def test_comments_and_blank_lines():
    X = parse_facet_list("# a comment\n\na b c  # trailing\nb c d\n")
    assert X.facets == (("a", "b", "c"), ("b", "c", "d"))


def test_round_trip_file(tmp_path):
    X = generate("s21_10").complex
    path = tmp_path / "s.txt"
    write_facet_list(X, path, header="ten vertices")
    assert path.read_text().startswith("# ten vertices\n")
    assert read_facet_list(path) == X


def test_every_generator_round_trips():
    for name in names():
        if name in ("cube77", "t3_family"):
            continue
        X = generate(name).complex
        assert parse_facet_list(format_facet_list(X)) == X


@given(st.lists(st.lists(st.sampled_from("abcdefg"), min_size=3, max_size=3, unique=True), min_size=1, max_size=10))
def test_writer_is_canonical(facets):
    X = SimplicialComplex(facets)
    shuffled = SimplicialComplex(list(reversed([list(reversed(f)) for f in facets])))
    assert format_facet_list(X) == format_facet_list(shuffled)
