#include "doctest.h"
#include "oracle.hpp"
#include "qdk/graded.hpp"
#include "qdk/rng.hpp"

using namespace qdk;

namespace {

GradedSpace space(std::initializer_list<int> degs) {
    std::vector<Generator> b;
    int k = 0;
    for (int d : degs) b.push_back({"x" + std::to_string(k++), d});
    return GradedSpace(b);
}

GradedSpace random_space(Rng& rng, int n) {
    std::vector<Generator> b;
    for (int i = 0; i < n; ++i) b.push_back({"g" + std::to_string(i), static_cast<int>(rng.uniform(-2, 2))});
    return GradedSpace(b);
}

oracle::Mat identity_mat(std::size_t n) {
    oracle::Mat m(n, std::vector<oracle::Q>(n));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

}  // namespace

TEST_CASE("koszul signs") {
    CHECK(koszul_sign({1, 1}, {1, 0}) == -1);
    CHECK(koszul_sign({2, 1}, {1, 0}) == 1);
    CHECK(koszul_sign({1, 1, 1}, {2, 0, 1}) == 1);
    CHECK(koszul_sign({1, 1, 1}, {2, 1, 0}) == -1);
    CHECK(koszul_sign({1, 0, 1}, {2, 1, 0}) == -1);
    CHECK_THROWS_AS(koszul_sign({1, 1}, {0, 0}), ArityError);
}

TEST_CASE("labels, duals and shifts") {
    auto v = space({0, 1});
    auto vv = tensor_product(v, v);
    CHECK(vv.label(1) == "x0⊗x1");
    CHECK(vv.degree(3) == 2);
    CHECK(dual(dual(v)) == v);
    CHECK(dual(dual(vv)) == vv);
    CHECK(dual(vv) == tensor_product(dual(v), dual(v)));
    CHECK(dual(v).degree(1) == -1);
    CHECK(shift(v, 1).label(0) == "sx0");
    CHECK(shift(vv, -1).label(0) == "s^-1(x0⊗x0)");
    CHECK(shift(shift(v, 1), -1).degrees() == v.degrees());
    auto ds = direct_sum(v, v);
    CHECK(ds.dim() == 4);
    CHECK(ds.label(2) == "x0'");
    CHECK_THROWS_AS(GradedSpace({{"a", 0}, {"a", 1}}), ArityError);
    CHECK(tensor_power(v, 0).dim() == 1);
    CHECK(tensor_power(v, 3).dim() == 8);
}

TEST_CASE("square split with two even and one odd generator") {
    auto v = space({0, 0, 1});
    auto sp = square_split(v);
    CHECK(sp.sym.dim() == 5);
    CHECK(sp.alt.dim() == 4);
    // brute force: sym = fixed vectors of the braiding, alt = negated ones
    auto tau = braiding(v, v);
    auto m = tau.matrix();
    oracle::Mat plus = m, minus = m;
    for (std::size_t i = 0; i < 9; ++i) {
        plus[i][i] -= 1;
        minus[i][i] += 1;
    }
    CHECK(static_cast<int>(sp.sym.dim()) == 9 - oracle::rank(plus));
    CHECK(static_cast<int>(sp.alt.dim()) == 9 - oracle::rank(minus));
    for (auto& x : sp.sym.basis()) CHECK(tau.apply(x) == x);
}

TEST_CASE("property: sym ⊕ alt is the whole square") {
    Rng rng(21);
    for (int trial = 0; trial < 30; ++trial) {
        auto v = random_space(rng, static_cast<int>(rng.uniform(1, 8)));
        auto sp = square_split(v);
        CHECK(sp.sym.dim() + sp.alt.dim() == v.dim() * v.dim());
        CHECK(intersect(sp.sym, sp.alt).dim() == 0);
        CHECK(is_graded_subspace(sp.sym, tensor_product(v, v).degrees()));
        CHECK(is_graded_subspace(sp.alt, tensor_product(v, v).degrees()));
    }
}

TEST_CASE("property: the square of the shift swaps sym and alt") {
    Rng rng(22);
    for (int trial = 0; trial < 30; ++trial) {
        auto v = random_space(rng, static_cast<int>(rng.uniform(1, 6)));
        auto sv = shift(v, 1);
        auto s2 = shift_square_map(v, 1);
        CHECK(apply_map(s2, square_split(v).alt) == square_split(sv).sym);
        CHECK(apply_map(s2, square_split(v).sym) == square_split(sv).alt);
        auto back = shift_square_map(sv, -1);
        CHECK(back.compose(s2).matrix() == identity_mat(v.dim() * v.dim()));
        auto usv = shift(v, -1);
        CHECK(apply_map(shift_square_map(v, -1), square_split(v).sym) == square_split(usv).alt);
    }
}

TEST_CASE("property: braiding squares to the identity, cyclic permutation cubes to it") {
    Rng rng(23);
    for (int trial = 0; trial < 20; ++trial) {
        auto v = random_space(rng, static_cast<int>(rng.uniform(1, 4)));
        auto w = random_space(rng, static_cast<int>(rng.uniform(1, 4)));
        auto bvw = braiding(v, w);
        auto bwv = braiding(w, v);
        CHECK(bwv.compose(bvw).matrix() == identity_mat(v.dim() * w.dim()));
        CHECK(is_degree_zero(bvw, tensor_product(v, w), tensor_product(w, v)));
        auto c = permute_factors({v, v, v}, {2, 0, 1});
        CHECK(c.compose(c).compose(c).matrix() == identity_mat(v.dim() * v.dim() * v.dim()));
        // (12) then (23) equals the composite permutation
        auto p12 = permute_factors({v, w, v}, {1, 0, 2});
        auto p23 = permute_factors({w, v, v}, {0, 2, 1});
        auto both = permute_factors({v, w, v}, {1, 2, 0});
        CHECK(p23.compose(p12).matrix() == both.matrix());
    }
}

TEST_CASE("mixed brackets and square inclusions") {
    auto a = space({0, 1});
    auto b = space({1});
    CHECK(mixed_bracket(a, b, 1).dim() == 2);
    CHECK(mixed_bracket(a, b, -1).dim() == 2);
    auto inc = square_inclusion(a, b, false);
    CHECK(inc.source()->dim() == 1);
    CHECK(inc.target()->dim() == 9);
    CHECK(inc.column(0).front().col == 8);
    auto whole = tensor_product(direct_sum(a, b), direct_sum(a, b));
    CHECK(is_graded_subspace(mixed_bracket(a, b, 1), whole.degrees()));
    auto amb = whole.ambient();
    // x0⊗x0 + x1⊗x1 has degrees 0 and 2: not graded
    auto bad = Subspace::from_qrows(amb, {QRow{{0, Scalar(1)}, {4, Scalar(1)}}});
    CHECK_FALSE(is_graded_subspace(bad, whole.degrees()));
}
