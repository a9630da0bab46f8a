#include "doctest.h"
#include "qdk/graphops.hpp"

#include <numeric>

using namespace qdk;

namespace {

LabeledHypergraph G(const std::string& s) { return parse_graph(s); }

// sign of the permutation taking `order` to sorted position, by inversion count
int inversion_sign(const std::vector<std::size_t>& order) {
    int inv = 0;
    for (std::size_t i = 0; i < order.size(); ++i)
        for (std::size_t j = i + 1; j < order.size(); ++j) inv += order[i] > order[j];
    return inv % 2 ? -1 : 1;
}

}  // namespace

TEST_CASE("graph strings") {
    auto g = G("n=4;k=2;edges=12,34");
    CHECK(g.weight() == 2);
    CHECK(g.to_string() == "n=4;k=2;edges=12,34");
    CHECK(G("n=3;k=2;edges=").weight() == 0);
    CHECK(G("n=6;k=2;edges=12,34;linear").symmetric == false);
    auto big = make_graph(11, 2, true, {{3, 11}, {1, 10}});
    CHECK(big.to_string() == "n=11;k=2;edges=1.10,3.11");
    CHECK(parse_graph(big.to_string()) == big);
    CHECK_THROWS_AS(G("n=4;k=2;edges=34,12"), GraphError);
    CHECK_THROWS_AS(G("n=4;k=2;edges=12,12"), GraphError);
    CHECK_THROWS_AS(G("n=3;k=2;edges=14"), GraphError);
    CHECK_THROWS_AS(G("n=4;k=2;edges=13;linear"), GraphError);
    CHECK_THROWS_AS(G("k=2;edges=12"), GraphError);
    int s = 0;
    make_graph(3, 2, true, {{2, 3}, {1, 2}}, &s);
    CHECK(s == -1);
    CHECK(complete_edges(4, 3, true).size() == 4);
    CHECK(complete_edges(5, 3, false).size() == 3);
    CHECK(graphs_of_weight(4, 2, true, 2).size() == 15);
}

TEST_CASE("displayed Gra composition") {
    auto r = compose_graphs(G("n=2;k=2;edges=12"), 1, G("n=3;k=2;edges=12,13"));
    REQUIRE(r.terms().size() == 3);
    CHECK(r.terms().at(G("n=4;k=2;edges=12,13,14")) == 1);
    CHECK(r.terms().at(G("n=4;k=2;edges=12,13,24")) == 1);
    CHECK(r.terms().at(G("n=4;k=2;edges=12,13,34")) == 1);
    CHECK(r.to_json().size() == 3);
}

TEST_CASE("displayed Gra3 composition") {
    // {123,124} ∘₃ {123}: hyperedge 123 is reattached to each of 3,4,5
    auto r = compose_graphs(G("n=4;k=3;edges=123,124"), 3, G("n=3;k=3;edges=123"));
    REQUIRE(r.terms().size() == 3);
    for (const auto& [g, c] : r.terms()) {
        CHECK(g.n == 6);
        CHECK(g.weight() == 3);
        CHECK(std::find(g.edges.begin(), g.edges.end(), Hyperedge{1, 2, 6}) != g.edges.end());
        CHECK(std::find(g.edges.begin(), g.edges.end(), Hyperedge{3, 4, 5}) != g.edges.end());
        CHECK((c == 1 || c == -1));
    }
}

TEST_CASE("displayed LGra composition") {
    auto r = compose_graphs(G("n=4;k=2;edges=12,34;linear"), 3, G("n=3;k=2;edges=12;linear"));
    REQUIRE(r.terms().size() == 1);
    // outer edges 12, 56 then inner 34: one transposition
    CHECK(r.terms().at(G("n=6;k=2;edges=12,34,56;linear")) == -1);
}

TEST_CASE("composition edge cases") {
    // no p-incident edge, edgeless inner: relabeled single term
    auto r = compose_graphs(G("n=3;k=2;edges=13"), 2, G("n=3;k=2;edges="));
    REQUIRE(r.terms().size() == 1);
    CHECK(r.terms().at(G("n=5;k=2;edges=15")) == 1);
    // p-incident edge into an edgeless graph of m vertices: m terms
    CHECK(compose_graphs(G("n=2;k=2;edges=12"), 2, G("n=4;k=2;edges=")).terms().size() == 4);
    // arity-0 insertion kills incident edges
    CHECK(compose_graphs(G("n=2;k=2;edges=12"), 1, G("n=0;k=2;edges=")).empty());
    CHECK(compose_graphs(G("n=3;k=2;edges=23"), 1, G("n=0;k=2;edges=")).terms().at(G("n=2;k=2;edges=12")) == 1);
    // reconnections producing a repeated edge vanish
    auto d = compose_graphs(G("n=3;k=2;edges=13,23"), 3, G("n=2;k=2;edges="));
    CHECK(d.terms().size() == 4);
    // linear interior vertex vanishes for k = 3
    CHECK(compose_graphs(G("n=3;k=3;edges=123;linear"), 2, G("n=2;k=3;edges=;linear")).empty());
    CHECK(compose_graphs(G("n=3;k=3;edges=123;linear"), 1, G("n=2;k=3;edges=;linear"))
              .terms()
              .at(G("n=4;k=3;edges=234;linear")) == 1);
    CHECK_THROWS_AS(compose_graphs(G("n=2;k=2;edges=12"), 3, G("n=2;k=2;edges=")), GraphError);
    CHECK_THROWS_AS(compose_graphs(G("n=2;k=2;edges=12"), 1, G("n=2;k=3;edges=")), GraphError);
    CHECK_THROWS_AS(compose_graphs(G("n=2;k=2;edges=12;linear"), 1, G("n=0;k=2;edges=;linear")), GraphError);
}

TEST_CASE("coproduct") {
    auto e0 = coproduct(G("n=3;k=2;edges="));
    REQUIRE(e0.size() == 1);
    CHECK(e0.begin()->second == 1);

    auto e1 = coproduct(G("n=3;k=2;edges=12"));
    CHECK(e1.size() == 2);
    CHECK(e1.at({G("n=3;k=2;edges=12"), G("n=3;k=2;edges=")}) == 1);
    CHECK(e1.at({G("n=3;k=2;edges="), G("n=3;k=2;edges=12")}) == 1);

    auto e2 = coproduct(G("n=3;k=2;edges=12,13"));
    CHECK(e2.size() == 4);
    CHECK(e2.at({G("n=3;k=2;edges=12,13"), G("n=3;k=2;edges=")}) == 1);
    CHECK(e2.at({G("n=3;k=2;edges="), G("n=3;k=2;edges=12,13")}) == 1);
    CHECK(e2.at({G("n=3;k=2;edges=12"), G("n=3;k=2;edges=13")}) == 1);
    CHECK(e2.at({G("n=3;k=2;edges=13"), G("n=3;k=2;edges=12")}) == -1);

    // weight-3 graph: (1,2) split counts against an inversion oracle
    auto g3 = G("n=4;k=2;edges=12,13,14");
    auto e3 = coproduct(g3);
    CHECK(e3.size() == 8);
    for (const auto& [ab, c] : e3) {
        std::vector<std::size_t> order;
        for (const auto& x : ab.first.edges)
            order.push_back(static_cast<std::size_t>(std::find(g3.edges.begin(), g3.edges.end(), x) - g3.edges.begin()));
        for (const auto& x : ab.second.edges)
            order.push_back(static_cast<std::size_t>(std::find(g3.edges.begin(), g3.edges.end(), x) - g3.edges.begin()));
        CHECK(c == inversion_sign(order));
    }
}

TEST_CASE("hopf checks") {
    auto gra = hopf_check(2, true, 4, 3);
    CHECK_MESSAGE(gra.ok(), gra.to_json().dump());
    auto gra3 = hopf_check(3, true, 5, 2);
    CHECK_MESSAGE(gra3.ok(), gra3.to_json().dump());
    auto lgra = hopf_check(2, false, 6, 4);
    CHECK_MESSAGE(lgra.ok(), lgra.to_json().dump());
    auto lgra3 = hopf_check(3, false, 7, 3);
    CHECK(lgra3.ok());

    auto bad = hopf_check(2, true, 3, 2, false);
    CHECK_FALSE(bad.ok());
    const auto& comp = bad.cases.at(0);
    CHECK(comp.name == "compatibility");
    REQUIRE(comp.status == Status::Fail);
    auto w = *comp.witness;
    CHECK(parse_graph(w["outer"].get<std::string>()).weight() + parse_graph(w["inner"].get<std::string>()).weight() ==
          2);
}

TEST_CASE("graph operad axioms") {
    auto a = graph_operad_axioms(2, true, 5, 3);
    CHECK_MESSAGE(a.ok(), a.to_json().dump());
    CHECK(a.cases.size() == 4);
    auto b = graph_operad_axioms(3, true, 5, 2);
    CHECK(b.ok());
    auto c = graph_operad_axioms(2, false, 6, 3);
    CHECK(c.ok());
    CHECK(c.cases.size() == 3);
    auto d = graph_operad_axioms(3, false, 7, 3);
    CHECK(d.ok());
}

TEST_CASE("edge-order sign consistency") {
    Rng rng(7);
    for (int t = 0; t < 60; ++t) {
        int n = static_cast<int>(rng.uniform(2, 4)), m = static_cast<int>(rng.uniform(0, 3));
        auto all1 = complete_edges(n, 2, true), all2 = complete_edges(m, 2, true);
        rng.shuffle(all1);
        rng.shuffle(all2);
        all1.resize(static_cast<std::size_t>(rng.uniform(0, std::min<std::int64_t>(3, static_cast<std::int64_t>(all1.size())))));
        all2.resize(static_cast<std::size_t>(rng.uniform(0, std::min<std::int64_t>(2, static_cast<std::int64_t>(all2.size())))));
        auto s1 = GraphSum::from_edges(n, 2, true, all1);
        auto s2 = GraphSum::from_edges(m, 2, true, all2);
        auto c1 = make_graph(n, 2, true, all1), c2 = make_graph(m, 2, true, all2);

        auto sorted1 = c1.edges;
        std::vector<std::size_t> ord1;
        for (const auto& e : all1)
            ord1.push_back(static_cast<std::size_t>(std::find(sorted1.begin(), sorted1.end(), e) - sorted1.begin()));
        CHECK(s1.terms().at(c1) == inversion_sign(ord1));

        int p = static_cast<int>(rng.uniform(1, n));
        auto lhs = compose_graphs(s1, p, s2);
        GraphSum rhs(lhs.n(), 2, true);
        rhs.add(compose_graphs(c1, p, c2), s1.terms().at(c1) * s2.terms().at(c2));
        CHECK(lhs == rhs);

        // relabel twice by inverse permutations gives the identity
        std::vector<int> f(static_cast<std::size_t>(n));
        std::iota(f.begin(), f.end(), 1);
        rng.shuffle(f);
        auto once = act_graph(c1, f);
        std::vector<int> finv(f.size());
        for (std::size_t i = 0; i < f.size(); ++i) finv[static_cast<std::size_t>(f[i] - 1)] = static_cast<int>(i) + 1;
        GraphSum back(n, 2, true);
        for (const auto& [g, c] : once.terms()) back.add(act_graph(g, finv), c);
        CHECK(back == GraphSum::of(c1));
    }
}

TEST_CASE("sc iso checks") {
    auto bkw = build_family(FamilyKind::BKW, 2, 4);
    auto r1 = sc_iso_check(bkw, 4, 3);
    CHECK_MESSAGE(r1.ok(), r1.to_json().dump());
    auto hg3 = build_family(FamilyKind::HG, 3, 5);
    auto r2 = sc_iso_check(hg3, 5, 2);
    CHECK_MESSAGE(r2.ok(), r2.to_json().dump());
    auto lg = build_family(FamilyKind::LG, 2, 8);
    auto r3 = sc_iso_check(lg, 8, 3);
    CHECK_MESSAGE(r3.ok(), r3.to_json().dump());
    auto lhg = build_family(FamilyKind::LHG, 3, 7);
    CHECK(sc_iso_check(lhg, 7, 3).ok());

    auto basis4 = std::find_if(r1.cases.begin(), r1.cases.end(), [](const CaseResult& c) { return c.name == "BKW: (i) basis n=4"; });
    REQUIRE(basis4 != r1.cases.end());
    CHECK(basis4->details == "Sc (1,6,15,20), graphs (1,6,15,20), binomial (1,6,15,20)");

    CHECK_THROWS_AS(sc_iso_check(build_family(FamilyKind::DK, 2, 4), 4, 2), FamilyError);
}

TEST_CASE("holonomy and Gerstenhaber dims") {
    auto dk = build_family(FamilyKind::DK, 2, 4);
    CHECK(holonomy_dims(dk, 3, 4) == std::vector<std::size_t>{3, 1, 2, 3});
    auto bkw = build_family(FamilyKind::BKW, 2, 5);
    for (int n = 2; n <= 5; ++n) {
        auto d = holonomy_dims(bkw, n, 2);
        CHECK(d[0] == static_cast<std::size_t>(n * (n - 1) / 2));
        CHECK(d[1] == 0);
    }
    auto lg = build_family(FamilyKind::LG, 2, 4);
    CHECK(holonomy_dims(lg, 4, 2) == std::vector<std::size_t>{3, 0});

    auto g = gerstenhaber_dim_check(2, 5);
    CHECK_MESSAGE(g.ok(), g.to_json().dump());
    CHECK(g.cases.at(0).details == "(1,0) total 1 = 1!");
    CHECK(g.cases.at(2).details == "(1,3,2,0) total 6 = 3!");
    CHECK(g.cases.at(3).details.find("total 24") != std::string::npos);
    auto e = gerstenhaber_dim_check(3, 4);
    CHECK(e.count(Status::Info) == 4);
    CHECK_THROWS_AS(gerstenhaber_dim_check(4, 3), GraphError);
}
