// Metric tests: area under the tree, reference loading/carving, lexical
// recall and fmTO on small hand-computed fixtures, including the
// not-applicable cases where a score has no defined value.
#include <unistd.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "doctest.h"
#include "folkweave/errors.hpp"
#include "folkweave/eval.hpp"
#include "folkweave/tree.hpp"
#include "oracles.hpp"

using namespace folkweave;

namespace {

FolksonomyTree bare_tree(const std::string& root) {
    return FolksonomyTree(root, root, TagStats{}, {"u1"});
}

NodeId add(FolksonomyTree& t, NodeId parent, const std::string& stem) {
    return t.add_child(parent, stem, stem, TagStats{}, {"u1"});
}

struct TempFile {
    std::string path;
    explicit TempFile(const std::string& text) {
        static int counter = 0;
        path = (std::filesystem::temp_directory_path() /
                ("folkweave_eval_" + std::to_string(::getpid()) + "_" +
                 std::to_string(counter++) + ".tsv"))
                   .string();
        std::ofstream out(path, std::ios::binary);
        out << text;
    }
    ~TempFile() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("area under the tree sums level-count trapezoids") {
    SUBCASE("one-three-four levels") {
        FolksonomyTree t = bare_tree("root");
        NodeId a = add(t, t.root(), "a");
        NodeId b = add(t, t.root(), "b");
        add(t, t.root(), "c");
        add(t, a, "a1");
        add(t, a, "a2");
        add(t, b, "b1");
        add(t, b, "b2");
        CHECK(t.level_counts() == std::vector<std::size_t>{1, 3, 4});
        CHECK(aut(t) == doctest::Approx(5.5));
    }

    SUBCASE("a lone root scores zero") { CHECK(aut(bare_tree("root")) == doctest::Approx(0.0)); }

    SUBCASE("a chain of three scores two") {
        FolksonomyTree t = bare_tree("a");
        NodeId b = add(t, t.root(), "b");
        add(t, b, "c");
        CHECK(aut(t) == doctest::Approx(2.0));
    }

    SUBCASE("dead branches do not count") {
        FolksonomyTree t = bare_tree("root");
        add(t, t.root(), "keep");
        NodeId gone = add(t, t.root(), "gone");
        t.remove_subtree(gone);
        CHECK(aut(t) == doctest::Approx(1.0));
    }
}

TEST_CASE("reference taxonomy edge and cycle validation") {
    ReferenceTaxonomy ref;
    CHECK_THROWS_AS(ref.add_edge("", "x"), InputError);
    CHECK_THROWS_AS(ref.add_edge("x", ""), InputError);
    CHECK_THROWS_AS(ref.add_edge("x", "x"), InputError);

    ref.add_edge("uk", "scotland");
    ref.add_edge("scotland", "glasgow");
    ref.add_edge("uk", "edinburgh");
    ref.add_edge("uk", "scotland");  // duplicate collapses
    ref.finalize();
    CHECK(ref.roots == std::set<std::string>{"uk"});
    CHECK(ref.nodes.size() == 4);
    CHECK(ref.children.at("uk") == std::vector<std::string>{"edinburgh", "scotland"});

    ReferenceTaxonomy loop;
    loop.add_edge("a", "b");
    loop.add_edge("b", "c");
    loop.add_edge("c", "a");
    CHECK_THROWS_AS(loop.finalize(), InputError);
}

TEST_CASE("reference TSV loading stems names and skips noise lines") {
    TempFile f(
        "# reference edges\n"
        "animals\tbirds\r\n"
        "\n"
        "birds\towls\n"
        "animals\treptiles\n");
    ReferenceTaxonomy ref = ReferenceTaxonomy::load_tsv(f.path);
    CHECK(ref.has_node("anim"));
    CHECK(ref.has_node("bird"));
    CHECK(ref.has_node("owl"));
    CHECK(ref.has_node("reptil"));
    CHECK(ref.roots == std::set<std::string>{"anim"});
    CHECK(ref.children.at("bird") == std::vector<std::string>{"owl"});

    TempFile no_tab("animals birds\n");
    CHECK_THROWS_AS(ReferenceTaxonomy::load_tsv(no_tab.path), ParseError);

    TempFile empty_side("animals\t\n");
    CHECK_THROWS_AS(ReferenceTaxonomy::load_tsv(empty_side.path), ParseError);

    CHECK_THROWS_AS(ReferenceTaxonomy::load_tsv("/no/such/reference.tsv"), InputError);
}

namespace {

ReferenceTaxonomy diamond_reference() {
    // Two routes from uk down to glasgow.
    ReferenceTaxonomy ref;
    ref.add_edge("uk", "scotland");
    ref.add_edge("scotland", "glasgow");
    ref.add_edge("uk", "edinburgh");
    ref.add_edge("edinburgh", "glasgow");
    ref.finalize();
    return ref;
}

}  // namespace

TEST_CASE("carving picks grandchildren plus stalled children as comparison leaves") {
    ReferenceTaxonomy ref = diamond_reference();

    FolksonomyTree t = bare_tree("uk");
    NodeId sc = add(t, t.root(), "scotland");
    add(t, sc, "glasgow");
    add(t, t.root(), "zzz");  // stalled depth-1 child, unknown to the reference

    EvalSetup setup = carve_reference(t, ref);
    CHECK(setup.seed == "uk");
    CHECK(setup.leaf_candidates == std::set<std::string>{"glasgow", "zzz"});
    CHECK(setup.matched == std::set<std::string>{"glasgow"});
    REQUIRE(setup.reference_paths.count("glasgow") == 1);
    CHECK(setup.reference_paths.at("glasgow").size() == 2);  // both diamond routes

    FolksonomyTree stranger = bare_tree("mars");
    add(stranger, stranger.root(), "crater");
    CHECK_THROWS_AS(carve_reference(stranger, ref), SeedNotInReference);
}

TEST_CASE("exact chain: recall counts reachable vocabulary, fmTO is perfect") {
    ReferenceTaxonomy ref = diamond_reference();
    FolksonomyTree t = bare_tree("uk");
    NodeId sc = add(t, t.root(), "scotland");
    add(t, sc, "glasgow");

    EvalSetup setup = carve_reference(t, ref);
    // Reference vocabulary on uk->glasgow paths: uk, scotland, edinburgh,
    // glasgow. The tree holds three of the four.
    auto lr = lexical_recall(t, setup);
    REQUIRE(lr.has_value());
    CHECK(*lr == doctest::Approx(0.75));

    // The learned path matches one diamond route exactly; max-Jaccard
    // selection must prefer it over the edinburgh route.
    auto f = fmto(t, setup);
    REQUIRE(f.has_value());
    CHECK(*f == doctest::Approx(1.0));

    oracles::MetricPair oracle = oracles::brute_force_metrics(t, ref);
    CHECK(oracle.lexical_recall == lr);
    CHECK(oracle.fmto == f);

    Metrics m = compute_metrics(t, ref);
    CHECK(m.leaves == 1);
    CHECK(m.overlap_leaves == 1);
    CHECK(m.aut == doctest::Approx(2.0));
    CHECK(m.avg_depth == doctest::Approx(2.0));
    REQUIRE(m.lexical_recall.has_value());
    CHECK(*m.lexical_recall == doctest::Approx(0.75));
    REQUIRE(m.fmto.has_value());
    CHECK(*m.fmto == doctest::Approx(1.0));
}

TEST_CASE("skipped level: directional overlaps average to four fifths") {
    ReferenceTaxonomy ref;
    ref.add_edge("uk", "scotland");
    ref.add_edge("scotland", "glasgow");
    ref.finalize();

    // glasgow sits directly under uk, one level too shallow.
    FolksonomyTree t = bare_tree("uk");
    add(t, t.root(), "glasgow");

    EvalSetup setup = carve_reference(t, ref);
    CHECK(setup.leaf_candidates == std::set<std::string>{"glasgow"});

    auto lr = lexical_recall(t, setup);
    REQUIRE(lr.has_value());
    CHECK(*lr == doctest::Approx(2.0 / 3.0));

    // Learned [uk, glasgow] vs reference [uk, scotland, glasgow]:
    // 2/2 one way, 2/3 the other, harmonic mean 0.8.
    auto f = fmto(t, setup);
    REQUIRE(f.has_value());
    CHECK(*f == doctest::Approx(0.8));

    oracles::MetricPair oracle = oracles::brute_force_metrics(t, ref);
    CHECK(oracle.lexical_recall == lr);
    CHECK(oracle.fmto == f);
}

TEST_CASE("scores go undefined when no comparison leaf reaches the reference") {
    SUBCASE("no leaf matches any reference name") {
        ReferenceTaxonomy ref;
        ref.add_edge("uk", "scotland");
        ref.finalize();
        FolksonomyTree t = bare_tree("uk");
        add(t, t.root(), "zzz");
        EvalSetup setup = carve_reference(t, ref);
        CHECK(setup.matched.empty());
        CHECK_FALSE(lexical_recall(t, setup).has_value());
        CHECK_FALSE(fmto(t, setup).has_value());
    }

    SUBCASE("leaf known to the reference but unreachable from the seed") {
        ReferenceTaxonomy ref;
        ref.add_edge("uk", "scotland");
        ref.add_edge("france", "glasgow");
        ref.finalize();
        FolksonomyTree t = bare_tree("uk");
        add(t, t.root(), "glasgow");
        EvalSetup setup = carve_reference(t, ref);
        CHECK(setup.matched == std::set<std::string>{"glasgow"});
        CHECK(setup.reference_paths.at("glasgow").empty());
        CHECK_FALSE(lexical_recall(t, setup).has_value());
        CHECK_FALSE(fmto(t, setup).has_value());

        oracles::MetricPair oracle = oracles::brute_force_metrics(t, ref);
        CHECK_FALSE(oracle.lexical_recall.has_value());
        CHECK_FALSE(oracle.fmto.has_value());
    }
}

TEST_CASE("aliases folded by synonym merges count as recovered vocabulary") {
    ReferenceTaxonomy ref;
    ref.add_edge("uk", "scotland");
    ref.add_edge("scotland", "glasgow");
    ref.finalize();

    FolksonomyTree t = bare_tree("uk");
    NodeId alba = add(t, t.root(), "alba");
    t.add_alias(alba, "scotland");
    add(t, alba, "glasgow");

    EvalSetup setup = carve_reference(t, ref);
    auto lr = lexical_recall(t, setup);
    REQUIRE(lr.has_value());
    CHECK(*lr == doctest::Approx(1.0));

    // The learned path still reads through the primary stem, so the path
    // overlap only shares uk and glasgow with the reference route.
    auto f = fmto(t, setup);
    REQUIRE(f.has_value());
    CHECK(*f == doctest::Approx(2.0 / 3.0));
}

TEST_CASE("average depth covers exactly the childless alive nodes") {
    FolksonomyTree t = bare_tree("uk");
    add(t, t.root(), "a");
    NodeId b = add(t, t.root(), "b");
    add(t, b, "c");

    ReferenceTaxonomy ref;
    ref.add_edge("uk", "a");
    ref.finalize();
    Metrics m = compute_metrics(t, ref);
    CHECK(m.avg_depth == doctest::Approx(1.5));  // a at 1, c at 2

    Metrics lone = compute_metrics(bare_tree("uk"), ref);
    CHECK(lone.avg_depth == doctest::Approx(0.0));
}
