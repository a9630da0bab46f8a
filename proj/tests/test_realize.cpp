#include "doctest.h"
#include "oracle.hpp"
#include "qdk/realize.hpp"

using namespace qdk;

namespace {

GradedSpace gens(std::initializer_list<int> degs, const std::string& p = "x") {
    std::vector<Generator> b;
    int k = 0;
    for (int d : degs) b.push_back({p + std::to_string(k++), d});
    return GradedSpace(b);
}

QRow add(QRow a, const QRow& b) {
    qrow_axpy(a, Scalar(1), b);
    return a;
}

// DK(n) on t_ij, i<j, in lexicographic order.
QuadraticData dk(int n) {
    std::vector<Generator> g;
    std::vector<std::pair<int, int>> e;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            g.push_back({"t" + std::to_string(i) + std::to_string(j), 0});
            e.push_back({i, j});
        }
    GradedSpace v(g);
    auto idx = [&](int a, int b) {
        if (a > b) std::swap(a, b);
        for (std::size_t k = 0; k < e.size(); ++k)
            if (e[k] == std::make_pair(a, b)) return k;
        return e.size();
    };
    std::vector<QRow> rel;
    for (std::size_t a = 0; a < e.size(); ++a)
        for (std::size_t b = a + 1; b < e.size(); ++b) {
            auto [i, j] = e[a];
            auto [k, l] = e[b];
            if (i != k && i != l && j != k && j != l) rel.push_back(sym_element(v, a, b, -1));
        }
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            for (int k = 1; k <= n; ++k) {
                if (i == j || j == k || i == k) continue;
                auto ij = idx(i, j);
                rel.push_back(add(sym_element(v, ij, idx(i, k), -1), sym_element(v, ij, idx(j, k), -1)));
            }
    return make_qd(Flavor::Skew, v, rel);
}

// dim of V^{⊗w} / sum_{a+b=w-2} V^a ⊗ R ⊗ V^b, by dense elimination.
std::size_t oracle_tensor_quotient(const QuadraticData& q, int w) {
    std::size_t n = q.dim();
    std::size_t nw = 1;
    for (int i = 0; i < w; ++i) nw *= n;
    if (w < 2) return nw;
    oracle::Mat m;
    for (const auto& r : q.r.qrows()) {
        std::size_t pa = 1;
        for (int a = 0; a <= w - 2; ++a, pa *= n) {
            std::size_t pb = nw / (pa * n * n);
            for (std::size_t x = 0; x < pa; ++x)
                for (std::size_t y = 0; y < pb; ++y) {
                    std::vector<oracle::Q> row(nw, 0);
                    for (const auto& e : r) row[(x * n * n + e.col) * pb + y] = e.val;
                    m.push_back(row);
                }
        }
    }
    return nw - static_cast<std::size_t>(oracle::rank(m));
}

std::vector<std::size_t> v(std::initializer_list<std::size_t> x) { return x; }

}  // namespace

TEST_CASE("realize: trivial relation spaces") {
    auto x = gens({0, 0});
    auto zero = make_qd(Flavor::Plain, x, std::vector<QRow>{});
    CHECK(hilbert_series(Realization::A, zero, 4) == v({1, 2, 4, 8, 16}));
    auto full = make_qd(Flavor::Plain, x, Subspace::full(tensor_product(x, x).ambient()));
    CHECK(hilbert_series(Realization::Tc, full, 4) == v({1, 2, 4, 8, 16}));
    CHECK(hilbert_series(Realization::A, full, 4) == v({1, 2, 0, 0, 0}));
    CHECK(hilbert_series(Realization::Tc, zero, 3) == v({1, 2, 0, 0}));
    // polynomial and exterior algebras
    auto sym0 = make_qd(Flavor::Symmetric, gens({0, 0, 0}), std::vector<QRow>{});
    CHECK(hilbert_series(Realization::S, sym0, 3) == v({1, 3, 6, 10}));
    auto sym1 = make_qd(Flavor::Symmetric, gens({1, 1, 1}), std::vector<QRow>{});
    CHECK(hilbert_series(Realization::S, sym1, 4) == v({1, 3, 3, 1, 0}));
    CHECK(hilbert_series(Realization::Sc, sym1, 4) == v({1, 3, 0, 0, 0}));
    CHECK(hilbert_series(Realization::A, sym1, 4) == v({1, 3, 3, 1, 0}));
}

TEST_CASE("realize: DK(3) and AOS(3)") {
    auto d = dk(3);
    CHECK(d.r.dim() == 2);
    CHECK(dk(4).r.dim() == 11);
    auto aos = apply_functor(Functor::Shriek, d);
    CHECK(aos.flavor == Flavor::Symmetric);
    CHECK(aos.v.degree(0) == -1);
    CHECK(hilbert_series(Realization::S, aos, 4) == v({1, 3, 2, 0, 0}));
    CHECK(hilbert_series(Realization::L, d, 4) == v({0, 3, 1, 2, 3}));
    CHECK(hilbert_series(Realization::A, d, 4) == v({1, 3, 7, 15, 31}));
    auto ue = ue_compare(d, 4);
    CHECK(ue.status == Status::Pass);
    auto eu = koszul_euler_check(d, 4);
    CHECK(eu.result.status == Status::Pass);
    CHECK(eu.product == std::vector<long long>{1, 0, 0, 0, 0});
    auto eu2 = koszul_euler_check(aos, 4);
    CHECK(eu2.result.status == Status::Pass);
    // S^c(DK(3)^¡) has total dimension 3!
    auto c = hilbert_series(Realization::Sc, apply_functor(Functor::Antishriek, d), 4);
    CHECK(c == v({1, 3, 2, 0, 0}));
}

TEST_CASE("realize: S(AOS(n)) Poincare polynomials") {
    // ∏_{k<n} (1 + k t)
    auto aos5 = apply_functor(Functor::Shriek, dk(5));
    CHECK(hilbert_series(Realization::S, aos5, 5) == v({1, 10, 35, 50, 24, 0}));
    auto dl = hilbert_series(Realization::A, dk(4), 4);
    CHECK(dl == v({1, 6, 25, 90, 301}));
}

TEST_CASE("realize: Lyndon basis") {
    auto x = gens({0, 0});
    CHECK(witt_count(x, 1) == 2);
    CHECK(witt_count(x, 2) == 1);
    CHECK(witt_count(x, 3) == 2);
    CHECK(witt_count(x, 4) == 3);
    CHECK(witt_count(x, 6) == 9);
    auto b = lyndon_basis(x, 3);
    CHECK(b[0].bracket == "[x0,[x0,x1]]");
    // odd generator: [x,x] survives, [x,[x,x]] vanishes
    auto y = gens({1});
    CHECK(witt_count(y, 2) == 1);
    auto yy = lyndon_basis(y, 2);
    CHECK(yy[0].tensor.size() == 1);
    CHECK(yy[0].tensor[0].val == 2);
    auto free1 = make_qd(Flavor::Skew, y, std::vector<QRow>{});
    auto d = lie_dims_by_parity(free1, 3);
    CHECK(d[1][1] == 1);
    CHECK(d[2][0] == 1);
    CHECK(d[3][0] + d[3][1] == 0);
    // U of the free Lie algebra on one odd letter is the tensor algebra
    CHECK(ue_compare(free1, 5).status == Status::Pass);
}

TEST_CASE("realize: weight components and errors") {
    auto d = dk(3);
    auto c = weight_component(Realization::Tc, apply_functor(Functor::Sigma, apply_functor(Functor::Antishriek, d)), 2);
    CHECK(c.dim == 2);
    REQUIRE(c.span.has_value());
    CHECK(c.span->ambient_dim() == 9);
    CHECK_THROWS_AS(weight_component(Realization::S, d, 2), FlavorMismatch);
    CHECK_THROWS_AS(weight_component(Realization::Tc, d, 2), FlavorMismatch);
    CHECK_THROWS_AS(weight_component(Realization::L, apply_functor(Functor::Shriek, d), 2), FlavorMismatch);
    CHECK_THROWS_AS(weight_component(Realization::A, d, -1), ArityError);
    auto a = weight_component(Realization::A, d, 0);
    CHECK(a.dim == 1);
}

TEST_CASE("property: A dims against a dense tensor-quotient oracle") {
    Rng rng(11);
    for (int t = 0; t < 25; ++t) {
        auto f = t % 3 == 0 ? Flavor::Plain : (t % 3 == 1 ? Flavor::Skew : Flavor::Symmetric);
        auto q = random_qd(rng, f, 3, 0, 1);
        auto lifted = f == Flavor::Plain ? q
                      : f == Flavor::Skew ? apply_functor(Functor::Lambda, q)
                                          : apply_functor(Functor::ScriptS, q);
        auto h = hilbert_series(Realization::A, q, 4);
        for (int w = 0; w <= 4; ++w) CHECK(h[w] == oracle_tensor_quotient(lifted, w));
    }
}

TEST_CASE("property: Sc and Tc duality with S and A") {
    Rng rng(12);
    for (int t = 0; t < 25; ++t) {
        auto q = random_qd(rng, Flavor::Symmetric, 3, -1, 1);
        auto star = apply_functor(Functor::Star, q);
        CHECK(hilbert_series(Realization::Sc, q, 4) == hilbert_series(Realization::S, star, 4));
        CHECK(hilbert_series(Realization::Sc, q, 4) == hilbert_series(Realization::Tc, q, 4));
        auto p = random_qd(rng, Flavor::Plain, 3, 0, 1);
        CHECK(hilbert_series(Realization::Tc, p, 4) ==
              hilbert_series(Realization::A, apply_functor(Functor::Star, p), 4));
    }
}

TEST_CASE("property: PBW for random skew data") {
    Rng rng(13);
    for (int t = 0; t < 15; ++t) {
        auto q = random_qd(rng, Flavor::Skew, 3, 0, 1);
        auto r = ue_compare(q, 4);
        CHECK_MESSAGE(r.status == Status::Pass, r.details);
    }
}
