#include "doctest.h"
#include "oracle.hpp"
#include "qdk/operad.hpp"

using namespace qdk;

namespace {

QRow unit(std::size_t i) { return {{static_cast<std::uint32_t>(i), Scalar(1)}}; }

std::size_t idx(const OperadFamily& f, int n, Hyperedge e) { return f.index_of(n, e).value(); }

// EHKR(n) straight from its definition: t_ijk ∧ t_lmn for disjoint triples,
// t_ijk ∧ (t_lmi + t_lmj + t_lmk) for l < m off {i,j,k}.
Subspace ehkr_literal(const OperadFamily& hg, int n) {
    const auto& v = hg.component(n).v;
    const auto& g = hg.gens[static_cast<std::size_t>(n)];
    auto t = [&](Hyperedge e) {
        std::sort(e.begin(), e.end());
        return idx(hg, n, e);
    };
    auto off = [](const Hyperedge& e, int x) { return std::find(e.begin(), e.end(), x) == e.end(); };
    std::vector<QRow> rows;
    for (std::size_t a = 0; a < g.size(); ++a) {
        for (std::size_t b = 0; b < g.size(); ++b)
            if (off(g[a], g[b][0]) && off(g[a], g[b][1]) && off(g[a], g[b][2]))
                rows.push_back(sym_element(v, a, b, -1));
        for (int l = 1; l <= n; ++l)
            for (int m = l + 1; m <= n; ++m) {
                if (!off(g[a], l) || !off(g[a], m)) continue;
                QRow r;
                for (int x : g[a]) qrow_axpy(r, Scalar(1), sym_element(v, a, t({l, m, x}), -1));
                rows.push_back(r);
            }
    }
    return Subspace::from_qrows(hg.component(n).square, rows);
}

}  // namespace

TEST_CASE("families: sizes and identifications") {
    auto bkw = build_family(FamilyKind::BKW, 2, 6);
    CHECK(bkw.component(4).dim() == 6);
    CHECK(bkw.component(4).r.dim() == 15);
    CHECK(bkw.component(1).dim() == 0);
    auto dk = build_family(FamilyKind::DK, 2, 6);
    CHECK(relation_dims(dk, 4) == std::vector<std::size_t>{0, 0, 0, 2, 11});
    CHECK(dk.component(3).v.label(0) == "t12");
    auto rhg2 = build_family(FamilyKind::RHG, 2, 6);
    auto hg2 = build_family(FamilyKind::HG, 2, 6);
    auto ehkr = build_family(FamilyKind::EHKR, 3, 6);
    auto rhg3 = build_family(FamilyKind::RHG, 3, 6);
    auto hg3 = build_family(FamilyKind::HG, 3, 6);
    auto lg = build_family(FamilyKind::LG, 2, 6);
    auto lhg2 = build_family(FamilyKind::LHG, 2, 6);
    for (int n = 0; n <= 6; ++n) {
        CHECK(same_data(rhg2.component(n), dk.component(n)));
        CHECK(same_data(hg2.component(n), bkw.component(n)));
        CHECK(same_data(rhg3.component(n), ehkr.component(n)));
        CHECK(same_data(lhg2.component(n), lg.component(n)));
        CHECK(ehkr.component(n).r == ehkr_literal(hg3, n));
    }
    CHECK(ehkr.component(5).dim() == 10);
    CHECK(lg.component(4).dim() == 3);
    CHECK_THROWS_AS(build_family(FamilyKind::HG, 1, 4), FamilyError);
    CHECK_THROWS_AS(build_family(FamilyKind::HG, 4, 3), FamilyError);
    CHECK_THROWS_AS(build_family("XYZ", 2, 4), FamilyError);
}

TEST_CASE("families: composition examples") {
    auto bkw = build_family(FamilyKind::BKW, 2, 6);
    // t^2_12 ∘_1 (arity 2) -> t13 + t23
    auto c = bkw.comp(2, 2, 1);
    QRow want = unit(idx(bkw, 3, {1, 3}));
    qrow_axpy(want, Scalar(1), unit(idx(bkw, 3, {2, 3})));
    CHECK(c.apply(unit(0)) == want);
    // inner t^2_12 at p = 2 -> t23
    CHECK(bkw.comp(2, 2, 2).apply(unit(1)) == unit(idx(bkw, 3, {2, 3})));
    // arity-0 insertion into an incident slot is the empty sum
    CHECK(bkw.comp(2, 0, 1).apply(unit(0)).empty());
    auto lhg = build_family(FamilyKind::LHG, 3, 8);
    // t^5_13 with p = 2 -> 0
    for (int m = 2; m <= 4; ++m) CHECK(lhg.comp(5, m, 2).apply(unit(idx(lhg, 5, {1, 2, 3}))).empty());
    CHECK(lhg.comp(5, 1, 2).apply(unit(0)) == unit(0));
    auto lg = build_family(FamilyKind::LG, 2, 8);
    CHECK_THROWS_AS(lg.comp(3, 0, 1), ArityError);
    CHECK_THROWS_AS(bkw.comp(3, 2, 4), ArityError);
    CHECK_THROWS_AS(bkw.comp(5, 3, 1), ArityError);
    auto x = Vector::basis(direct_sum(bkw.component(2).v, bkw.component(2).v).ambient(), 0);
    CHECK(compose(bkw, 2, 2, 1, x).entries() == want);
}

TEST_CASE("families: FI deletion with arity-0 insertion") {
    auto bkw = build_family(FamilyKind::BKW, 2, 6);
    for (int n = 1; n <= 6; ++n)
        for (int p = 1; p <= n; ++p) {
            auto c = bkw.comp(n, 0, p);
            const auto& g = bkw.gens[static_cast<std::size_t>(n)];
            for (std::size_t a = 0; a < g.size(); ++a) {
                auto img = c.apply(unit(a));
                bool incident = g[a][0] == p || g[a][1] == p;
                if (incident) {
                    CHECK(img.empty());
                } else {
                    Hyperedge e = g[a];
                    for (auto& v : e)
                        if (v > p) --v;
                    CHECK(img == unit(idx(bkw, n - 1, e)));
                }
            }
        }
}

TEST_CASE("families: operad axioms") {
    for (auto [kind, k, nmax] : {std::tuple{FamilyKind::BKW, 2, 5}, {FamilyKind::DK, 2, 5}, {FamilyKind::HG, 3, 5},
                                 {FamilyKind::EHKR, 3, 5}, {FamilyKind::RHG, 4, 5}, {FamilyKind::LG, 2, 7},
                                 {FamilyKind::LHG, 3, 7}}) {
        auto f = build_family(kind, k, nmax);
        auto r = verify_axioms(f, nmax);
        CHECK_MESSAGE(r.ok(), r.to_json().dump());
        CHECK(r.count(Status::Pass) >= 3);
        auto m = verify_relation_morphism(f, nmax);
        CHECK_MESSAGE(m.ok(), m.to_json().dump());
    }
}

TEST_CASE("families: negative controls") {
    auto bkw = build_family(FamilyKind::BKW, 2, 5);
    auto bad = bkw;
    auto rule = bkw.rule;
    bad.rule = [rule](int n, int m, int p, bool outer, std::size_t i) {
        auto r = rule(n, m, p, outer, i);
        if (n == 2 && m == 2 && p == 1 && outer) r = qrow_scaled(r, Scalar(-1));
        return r;
    };
    auto rep = verify_axioms(bad, 5);
    CHECK_FALSE(rep.ok());
    bool seq_failed = false;
    for (const auto& c : rep.cases)
        if (c.name == "sequential" && c.status == Status::Fail) {
            seq_failed = true;
            REQUIRE(c.witness.has_value());
            CHECK(c.witness->contains("lhs"));
        }
    CHECK(seq_failed);
    auto shrunk = bkw;
    shrunk.comps[3].r = Subspace::zero(shrunk.comps[3].square);
    auto m = verify_relation_morphism(shrunk, 5);
    CHECK_FALSE(m.ok());
}

TEST_CASE("families: action is a relation-preserving right action") {
    auto dk = build_family(FamilyKind::DK, 2, 5);
    std::vector<int> s{2, 3, 1, 5, 4}, t{5, 1, 2, 4, 3};
    std::vector<int> st(5);
    // (x·s)·t = x·(s∘t) for a right action
    for (int v = 1; v <= 5; ++v) st[static_cast<std::size_t>(v - 1)] = s[static_cast<std::size_t>(t[static_cast<std::size_t>(v - 1)] - 1)];
    CHECK(dk.action(5, t).compose(dk.action(5, s)) == dk.action(5, st));
    CHECK(check_morphism(dk.action(5, s), dk.component(5), dk.component(5)).ok);
    // t_12 · (1 2 3) = t_{σ^{-1}{1,2}} = t_{3,1}
    std::vector<int> cyc{2, 3, 1};
    CHECK(dk.action(3, cyc).apply(unit(0)) == unit(idx(dk, 3, {1, 3})));
}

TEST_CASE("minimal sub-operads") {
    auto bkw = build_family(FamilyKind::BKW, 2, 5);
    auto dk = build_family(FamilyKind::DK, 2, 5);
    auto m4 = minimal_suboperad(bkw, 4);
    CHECK(m4.component(4).r.dim() == 11);
    auto m5 = minimal_suboperad(bkw, 5);
    auto cmp = compare_families(dk, m5, 5);
    CHECK(cmp.verdict == Inclusion::Equal);
    CHECK(verify_relation_morphism(m5, 5).ok());
    auto proper = compare_families(dk, bkw, 5);
    CHECK(proper.verdict == Inclusion::Proper);
    CHECK(compare_families(bkw, dk, 5).verdict == Inclusion::Reverse);
    // shuffled schedules reach the same fixpoint, dims bounded by Λ²
    Rng rng(5);
    for (int t = 0; t < 3; ++t) {
        auto s = minimal_suboperad(bkw, 5, &rng);
        for (int n = 0; n <= 5; ++n) {
            CHECK(s.component(n).r == m5.component(n).r);
            CHECK(s.component(n).r.dim() <= bkw.component(n).r.dim());
        }
    }
    auto lg = build_family(FamilyKind::LG, 2, 6);
    auto lmin = minimal_suboperad(lg, 6);
    CHECK(compare_families(lg, lmin, 6).verdict == Inclusion::Equal);
    auto hg = build_family(FamilyKind::HG, 3, 4);
    CHECK_THROWS_AS(compare_families(dk, hg, 4), IndexError);
}

TEST_CASE("named data: AOS and the dual of EHKR") {
    for (int n = 2; n <= 5; ++n) {
        auto dk = build_family(FamilyKind::DK, 2, n);
        auto sh = apply_functor(Functor::Shriek, dk.component(n));
        auto aos = aos_qd(n);
        CHECK(aos.r.dim() == static_cast<std::size_t>(oracle::binom(n, 3)));
        CHECK(sh.r == aos.r.relabel(sh.square));
        CHECK(aos.v.degrees() == sh.v.degrees());
    }
    auto e = build_family(FamilyKind::EHKR, 3, 5);
    auto sh = apply_functor(Functor::Shriek, e.component(5));
    auto pent = ehkr_pentagon_qd(5, false);
    auto ov = ehkr_overlap_span(pent);
    CHECK(pent.r.dim() == 6);
    CHECK(ov.dim() == 30);
    CHECK(sum(pent.r, ov).relabel(sh.square) == sh.r);
    CHECK_FALSE(sh.r.contains(ehkr_pentagon_qd(5, true).r.relabel(sh.square)));
}

TEST_CASE("family JSON descriptor") {
    auto lhg = build_family(FamilyKind::LHG, 3, 8);
    auto j = family_to_json(lhg, 8);
    CHECK(j["name"] == "LHG(3)");
    CHECK(j["symmetric"] == false);
    CHECK(j["arities"][8]["dim_V"] == 6);
    CHECK(j["arities"][8]["dim_R"] == 15);
}
