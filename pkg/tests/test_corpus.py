import importlib.resources
import random

import pytest

from relgraph import (
    CorpusSyntaxError,
    Directive,
    RelationGraph,
    ShapeKind,
    SnapshotFormatError,
    StoreShape,
    generate_store,
    ingest,
    load_snapshot,
    parse_corpus,
    save_snapshot,
)

from oracles import chain_graph, diamond_graph, random_graph, sym


def bundled_corpus() -> str:
    resource = importlib.resources.files("relgraph").joinpath("data/animals.corpus")
    return resource.read_text(encoding="utf-8")


# -- parsing ---------------------------------------------------------------


def test_parse_basic_directives():
    lines = parse_corpus("S dog\nS mammal\nI dog mammal\n")
    assert [(l.directive, [a.text for a in l.args]) for l in lines] == [
        (Directive.SENSE, ["dog"]),
        (Directive.SENSE, ["mammal"]),
        (Directive.INDUCT, ["dog", "mammal"]),
    ]
    assert [l.line_number for l in lines] == [1, 2, 3]


def test_parse_rejects_unknown_directive():
    with pytest.raises(CorpusSyntaxError) as exc_info:
        parse_corpus("X dog\n")
    assert exc_info.value.line_number == 1
    assert "unknown directive" in str(exc_info.value)


def test_parse_skips_comments_and_blank_lines():
    lines = parse_corpus("; comment\n\nS cat\n")
    assert len(lines) == 1
    assert lines[0].directive is Directive.SENSE
    assert lines[0].line_number == 3


def test_parse_rejects_wrong_arity():
    with pytest.raises(CorpusSyntaxError) as exc_info:
        parse_corpus("S dog mammal\n")
    assert "takes 1 argument" in str(exc_info.value)
    with pytest.raises(CorpusSyntaxError):
        parse_corpus("I dog\n")
    with pytest.raises(CorpusSyntaxError):
        parse_corpus("R dog\n")


def test_parse_rejects_illegal_characters_with_line_number():
    with pytest.raises(CorpusSyntaxError) as exc_info:
        parse_corpus("S dog\nS do#g\n")
    assert exc_info.value.line_number == 2


def test_parse_query_directives():
    lines = parse_corpus("DQ dog\nRQ animal\nR dog animal\n")
    assert [l.directive for l in lines] == [
        Directive.QUERY_DEDUCTION,
        Directive.QUERY_REDUCTION,
        Directive.QUERY_RECOGNIZE,
    ]


# -- ingestion -------------------------------------------------------------


def test_ingest_applies_rules_and_answers_queries():
    g = RelationGraph()
    report = ingest(g, parse_corpus("S dog\nS mammal\nI dog mammal\nR dog mammal\n"))
    assert report.applied == 3
    assert report.skipped == 0
    assert report.failures == []
    assert report.queries == [(4, "R dog mammal -> ACCEPT")]
    assert g.node_count == 2
    assert g.edge_count == 1


def test_ingest_counts_duplicates_as_skipped():
    g = RelationGraph()
    report = ingest(g, parse_corpus("S dog\nS dog\n"))
    assert report.applied == 1
    assert report.skipped == 1


def test_ingest_records_failures_and_continues():
    g = RelationGraph()
    report = ingest(g, parse_corpus("I a b\nS ok\n"))
    assert report.applied == 1  # the sensation after the failure still ran
    assert len(report.failures) == 1
    line_number, message = report.failures[0]
    assert line_number == 1
    assert "'a'" in message
    assert g.edge_count == 0


def test_ingest_records_cycle_failures():
    corpus = "S a\nS b\nI a b\nI b a\n"
    report = ingest(RelationGraph(), parse_corpus(corpus))
    assert report.applied == 3
    assert len(report.failures) == 1
    assert report.failures[0][0] == 4


def test_ingest_closure_queries_render_sorted():
    g = diamond_graph()
    report = ingest(g, parse_corpus("DQ d\nRQ c\nDQ c\n"))
    assert report.queries == [
        (1, "DQ d -> a,b,c"),
        (2, "RQ c -> a,b,d"),
        (3, "DQ c -> (none)"),
    ]


def test_ingest_query_on_unknown_node_is_a_failure():
    report = ingest(RelationGraph(), parse_corpus("DQ ghost\n"))
    assert report.queries == []
    assert report.failures[0][0] == 1


def test_edge_count_equals_distinct_accepted_induction_lines():
    corpus = "\n".join(
        ["S a", "S b", "S c", "I a b", "I b c", "I a b", "I a c", "I c a"]
    )
    g = RelationGraph()
    report = ingest(g, parse_corpus(corpus))
    # 3 distinct accepted inductions: a->b, b->c, a->c; one duplicate, one cycle.
    assert g.edge_count == 3
    assert report.skipped == 1
    assert len(report.failures) == 1


def test_report_render_is_stable():
    g = RelationGraph()
    report = ingest(g, parse_corpus("S dog\nS dog\nI dog x\nR dog dog\n"))
    assert report.render() == (
        "applied 1\n"
        "skipped 1\n"
        "failed 1\n"
        "  line 3: unknown node 'x': it must be stored before use\n"
        "queries 1\n"
        "  line 4: R dog dog -> ACCEPT\n"
    )


# -- snapshots ---------------------------------------------------------------


def test_empty_graph_snapshot_round_trips():
    g = RelationGraph()
    data = save_snapshot(g)
    assert data.decode() == "relgraph-snapshot v1\nrevision 0\nnodes 0\nedges 0\n"
    assert load_snapshot(data) == g


def test_snapshot_sections_are_sorted_regardless_of_insertion_order():
    a = RelationGraph()
    for name in ["mammal", "dog"]:
        a.sensation(sym(name))
    a.induction(sym("dog"), sym("mammal"))

    b = RelationGraph()
    for name in ["dog", "mammal"]:
        b.sensation(sym(name))
    b.induction(sym("dog"), sym("mammal"))

    assert save_snapshot(a) == save_snapshot(b)
    assert b"\ndog\nmammal\n" in save_snapshot(a)


def test_snapshot_round_trip_on_assorted_graphs():
    graphs = [
        chain_graph("dog", "mammal", "animal"),
        diamond_graph(),
        generate_store(StoreShape(ShapeKind.RANDOM_DAG, node_count=40, seed=11)),
        random_graph(random.Random(9), max_nodes=50),
    ]
    for g in graphs:
        restored = load_snapshot(save_snapshot(g))
        assert restored == g
        assert save_snapshot(restored) == save_snapshot(g)


def test_loaded_graph_preserves_revision():
    g = chain_graph("a", "b", "c")
    assert load_snapshot(save_snapshot(g)).revision == g.revision


def test_load_rejects_bad_header():
    with pytest.raises(SnapshotFormatError):
        load_snapshot(b"wrong-header v1\nrevision 0\nnodes 0\nedges 0\n")


def test_load_rejects_dangling_edge_endpoint():
    data = b"relgraph-snapshot v1\nrevision 3\nnodes 2\na\nb\nedges 1\na,zebra\n"
    with pytest.raises(SnapshotFormatError) as exc_info:
        load_snapshot(data)
    assert "zebra" in str(exc_info.value)


def test_load_rejects_unsorted_sections():
    unsorted_nodes = b"relgraph-snapshot v1\nrevision 2\nnodes 2\nb\na\nedges 0\n"
    with pytest.raises(SnapshotFormatError):
        load_snapshot(unsorted_nodes)
    unsorted_edges = (
        b"relgraph-snapshot v1\nrevision 5\nnodes 3\na\nb\nc\n"
        b"edges 2\nb,c\na,b\n"
    )
    with pytest.raises(SnapshotFormatError):
        load_snapshot(unsorted_edges)


def test_load_rejects_duplicate_nodes():
    data = b"relgraph-snapshot v1\nrevision 2\nnodes 2\na\na\nedges 0\n"
    with pytest.raises(SnapshotFormatError):
        load_snapshot(data)


def test_load_rejects_cycle():
    data = (
        b"relgraph-snapshot v1\nrevision 4\nnodes 2\na\nb\n"
        b"edges 2\na,b\nb,a\n"
    )
    with pytest.raises(SnapshotFormatError) as exc_info:
        load_snapshot(data)
    assert "cycle" in str(exc_info.value) or "reaches" in str(exc_info.value)


def test_load_rejects_truncation_and_garbage():
    bad = [
        b"",
        b"relgraph-snapshot v1\n",
        b"relgraph-snapshot v1\nrevision 0\nnodes 0\nedges 0",  # no final newline
        b"relgraph-snapshot v1\nrevision x\nnodes 0\nedges 0\n",
        b"relgraph-snapshot v1\nrevision 0\nnodes 2\na\nedges 0\n",
        b"relgraph-snapshot v1\nrevision 0\nnodes 0\nedges 1\n",
        b"relgraph-snapshot v1\nrevision 0\nnodes 0\nedges 0\nextra\n",
        b"relgraph-snapshot v1\nrevision 1\nnodes 1\na\nedges 1\na\n",
        b"\xff\xfe\x00bad",
    ]
    for data in bad:
        with pytest.raises(SnapshotFormatError):
            load_snapshot(data)


def test_load_rejects_self_loop_edge():
    data = b"relgraph-snapshot v1\nrevision 3\nnodes 2\na\nb\nedges 1\na,a\n"
    with pytest.raises(SnapshotFormatError):
        load_snapshot(data)


# -- bundled corpus ----------------------------------------------------------


def test_bundled_corpus_replays_deterministically():
    text = bundled_corpus()
    runs = []
    for _ in range(2):
        g = RelationGraph()
        report = ingest(g, parse_corpus(text))
        runs.append((save_snapshot(g), report.render()))
    assert runs[0] == runs[1]


def test_bundled_corpus_content():
    g = RelationGraph()
    report = ingest(g, parse_corpus(bundled_corpus()))
    assert g.node_count == 6
    assert g.edge_count == 5
    assert report.skipped == 2  # the deliberate duplicate S and I lines
    assert report.failures == []
    rendered = report.render()
    assert "DQ dog -> animal,mammal" in rendered
    assert "R dog animal -> ACCEPT" in rendered
    assert "R animal dog -> REJECT" in rendered
    assert "R sparrow mammal -> REJECT" in rendered
