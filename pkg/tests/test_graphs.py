import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cliquerep import (
    Graph,
    GraphParseError,
    canonical_form,
    complete_bipartite,
    complete_graph,
    cycle_graph,
    degree,
    edge_bitmask,
    empty_graph,
    enumerate_labeled_graphs,
    graph,
    graph_from_bitmask,
    induced_subgraph,
    parse_edge_list,
    parse_graph6,
    path_graph,
    remove_edges,
    to_edge_list,
    to_graph6,
)
from helpers import iso_classes_by_permutation


def nx_from_graph6(text: str) -> Graph:
    """Independent graph6 decoder (networkx) for cross-checking ours."""
    g = nx.from_graph6_bytes(text.encode("ascii"))
    return graph(g.number_of_nodes(), g.edges())


def nx_to_graph6(g: Graph) -> str:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges)
    return nx.to_graph6_bytes(h, header=False).decode("ascii").strip()


@st.composite
def graphs(draw, min_n=0, max_n=7):
    n = draw(st.integers(min_n, max_n))
    m = n * (n - 1) // 2
    return graph_from_bitmask(n, draw(st.integers(0, (1 << m) - 1)))


class TestGraphType:
    def test_rejects_negative_n(self):
        with pytest.raises(ValueError):
            Graph(-1, frozenset())

    def test_rejects_out_of_range_edge(self):
        with pytest.raises(ValueError):
            Graph(2, frozenset({(0, 2)}))

    def test_rejects_unnormalized_edge(self):
        with pytest.raises(ValueError):
            Graph(3, frozenset({(2, 1)}))

    def test_builder_normalizes_and_rejects_loops(self):
        g = graph(3, [(2, 0), (0, 1)])
        assert g.edges == frozenset({(0, 2), (0, 1)})
        with pytest.raises(ValueError):
            graph(3, [(1, 1)])

    def test_adjacency_masks(self):
        g = path_graph(3)
        assert g.adj == (0b010, 0b101, 0b010)


class TestGraph6:
    def test_k4(self):
        assert parse_graph6("C~") == complete_graph(4)
        assert parse_graph6("C~") == nx_from_graph6("C~")

    def test_empty_on_4(self):
        assert parse_graph6("C?") == empty_graph(4)
        assert parse_graph6("C?") == nx_from_graph6("C?")

    def test_empty_input(self):
        with pytest.raises(GraphParseError):
            parse_graph6("")

    def test_optional_prefix(self):
        assert parse_graph6(">>graph6<<C~\n") == complete_graph(4)

    def test_truncated(self):
        with pytest.raises(GraphParseError, match="truncated"):
            parse_graph6("D")

    def test_trailing_data(self):
        with pytest.raises(GraphParseError, match="trailing"):
            parse_graph6("C~~")

    def test_long_form_rejected(self):
        with pytest.raises(GraphParseError, match="byte 0"):
            parse_graph6("~??")

    def test_out_of_range_character(self):
        with pytest.raises(GraphParseError, match="byte 1"):
            parse_graph6("C" + chr(30))

    def test_header_out_of_range(self):
        with pytest.raises(GraphParseError, match="byte 0"):
            parse_graph6("!??")

    def test_encode_rejects_large_n(self):
        with pytest.raises(ValueError):
            to_graph6(empty_graph(63))

    def test_matches_networkx_exhaustively_small(self):
        for n in range(6):
            for g in enumerate_labeled_graphs(n):
                encoded = to_graph6(g)
                assert encoded == nx_to_graph6(g)
                assert parse_graph6(encoded) == g

    @given(graphs(max_n=7))
    def test_round_trip(self, g):
        assert parse_graph6(to_graph6(g)) == g

    @given(st.integers(8, 62), st.randoms(use_true_random=False))
    @settings(max_examples=25)
    def test_round_trip_larger(self, n, rnd):
        g = graph(n, [(u, v) for u in range(n) for v in range(u + 1, n)
                      if rnd.random() < 0.3])
        s = to_graph6(g)
        assert parse_graph6(s) == g
        assert s == nx_to_graph6(g)


class TestEdgeList:
    def test_path(self):
        assert parse_edge_list("n=3\n0 1\n1 2") == path_graph(3)

    def test_isolated_vertices_survive(self):
        assert parse_edge_list("n=2\n") == empty_graph(2)

    def test_self_loop(self):
        with pytest.raises(GraphParseError, match="line 2"):
            parse_edge_list("n=2\n0 0")

    def test_missing_header(self):
        with pytest.raises(GraphParseError, match="header"):
            parse_edge_list("0 1\n")
        with pytest.raises(GraphParseError, match="header"):
            parse_edge_list("# only a comment\n")

    def test_out_of_range(self):
        with pytest.raises(GraphParseError, match="line 2"):
            parse_edge_list("n=2\n0 2")

    def test_duplicate_edge(self):
        with pytest.raises(GraphParseError, match="duplicate"):
            parse_edge_list("n=3\n0 1\n1 0")

    def test_comments_and_blanks_ignored(self):
        text = "# a path\nn=3\n\n0 1\n# middle\n1 2\n"
        assert parse_edge_list(text) == path_graph(3)

    def test_bad_tokens(self):
        with pytest.raises(GraphParseError, match="line 2"):
            parse_edge_list("n=2\n0 x")
        with pytest.raises(GraphParseError, match="line 2"):
            parse_edge_list("n=2\n0 1 2")
        with pytest.raises(GraphParseError):
            parse_edge_list("n=-1\n")

    @given(graphs(max_n=7))
    def test_round_trip(self, g):
        assert parse_edge_list(to_edge_list(g)) == g


class TestQueries:
    def test_degree_complete(self):
        assert degree(complete_graph(4), 0) == 3

    def test_degree_empty(self):
        assert degree(empty_graph(4), 2) == 0

    def test_degree_biregular(self):
        k22 = complete_bipartite(2, 2)
        assert [degree(k22, v) for v in range(4)] == [2, 2, 2, 2]

    def test_degree_out_of_range(self):
        with pytest.raises(ValueError):
            degree(empty_graph(2), 2)

    @given(graphs())
    def test_degree_sum_is_twice_edges(self, g):
        assert sum(degree(g, v) for v in range(g.n)) == 2 * len(g.edges)

    def test_induced_triangle_of_k4(self):
        sub, labels = induced_subgraph(complete_graph(4), {0, 1, 2})
        assert sub == complete_graph(3)
        assert labels == (0, 1, 2)

    def test_induced_path_of_cycle(self):
        sub, labels = induced_subgraph(cycle_graph(4), {0, 1, 2})
        assert sub == path_graph(3)
        assert labels == (0, 1, 2)

    def test_induced_empty_subset(self):
        sub, labels = induced_subgraph(complete_graph(4), set())
        assert sub == empty_graph(0)
        assert labels == ()

    def test_induced_relabels(self):
        sub, labels = induced_subgraph(path_graph(4), {1, 3})
        assert sub == empty_graph(2)
        assert labels == (1, 3)

    def test_induced_out_of_range(self):
        with pytest.raises(ValueError):
            induced_subgraph(empty_graph(2), {5})

    @given(graphs())
    def test_induced_full_set_is_identity(self, g):
        sub, labels = induced_subgraph(g, range(g.n))
        assert sub == g
        assert labels == tuple(range(g.n))

    def test_remove_all_triangle_edges(self):
        assert remove_edges(complete_graph(3), complete_graph(3).edges) == empty_graph(3)

    def test_remove_nothing(self):
        assert remove_edges(path_graph(3), []) == path_graph(3)

    def test_remove_triangle_from_k4(self):
        left = remove_edges(complete_graph(4), [(0, 1), (0, 2), (1, 2)])
        assert left == graph(4, [(0, 3), (1, 3), (2, 3)])

    def test_remove_absent_edge(self):
        with pytest.raises(ValueError):
            remove_edges(path_graph(3), [(0, 2)])


class TestEnumeration:
    def test_counts(self):
        assert sum(1 for _ in enumerate_labeled_graphs(0)) == 1
        assert sum(1 for _ in enumerate_labeled_graphs(2)) == 2
        assert sum(1 for _ in enumerate_labeled_graphs(3)) == 8
        assert sum(1 for _ in enumerate_labeled_graphs(4)) == 64

    def test_order_is_bitmask_ascending(self):
        for i, g in enumerate(enumerate_labeled_graphs(4)):
            assert edge_bitmask(g) == i

    def test_all_distinct(self):
        seen = {g.edges for g in enumerate_labeled_graphs(4)}
        assert len(seen) == 64

    def test_rejects_large_n(self):
        with pytest.raises(ValueError):
            list(enumerate_labeled_graphs(8))
        with pytest.raises(ValueError):
            list(enumerate_labeled_graphs(-1))

    def test_bitmask_round_trip(self):
        for mask in (0, 1, 37, 63):
            assert edge_bitmask(graph_from_bitmask(4, mask)) == mask
        with pytest.raises(ValueError):
            graph_from_bitmask(3, 8)


class TestCanonicalForm:
    def test_relabelings_agree(self):
        a = graph(3, [(0, 1), (1, 2)])
        b = graph(3, [(1, 0), (0, 2)])  # same path, center at 0
        assert canonical_form(a) == canonical_form(b)

    def test_distinguishes_classes(self):
        assert canonical_form(path_graph(3)) != canonical_form(complete_graph(3))

    def test_class_counts(self):
        for n, expected in ((3, 4), (4, 11), (5, 34)):
            classes = {canonical_form(g) for g in enumerate_labeled_graphs(n)}
            assert len(classes) == expected

    def test_class_count_matches_permutation_oracle(self):
        graphs3 = list(enumerate_labeled_graphs(3))
        assert iso_classes_by_permutation(graphs3) == 4
        classes = {canonical_form(g) for g in graphs3}
        assert len(classes) == 4

    def test_n5_count_matches_networkx(self):
        # Bucket by degree sequence first, then settle with nx.is_isomorphic.
        buckets = {}
        for g in enumerate_labeled_graphs(5):
            key = tuple(sorted(degree(g, v) for v in range(5)))
            buckets.setdefault(key, []).append(g)
        count = 0
        for members in buckets.values():
            reps = []
            for g in members:
                h = nx.Graph()
                h.add_nodes_from(range(5))
                h.add_edges_from(g.edges)
                if not any(nx.is_isomorphic(h, r) for r in reps):
                    reps.append(h)
            count += len(reps)
        assert count == 34

    def test_rejects_large_n(self):
        with pytest.raises(ValueError):
            canonical_form(empty_graph(9))

    @given(graphs(max_n=5), st.randoms(use_true_random=False))
    @settings(max_examples=60)
    def test_invariant_under_permutation(self, g, rnd):
        perm = list(range(g.n))
        rnd.shuffle(perm)
        relabeled = graph(g.n, [(perm[u], perm[v]) for u, v in g.edges])
        assert canonical_form(relabeled) == canonical_form(g)
