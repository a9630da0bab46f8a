#include "doctest.h"
#include "oracle.hpp"
#include "qdk/qd.hpp"
#include "qdk/serialize.hpp"

using namespace qdk;

namespace {

GradedSpace gens(std::initializer_list<int> degs, const std::string& p = "x") {
    std::vector<Generator> b;
    int k = 0;
    for (int d : degs) b.push_back({p + std::to_string(k++), d});
    return GradedSpace(b);
}

QRow wedge(const GradedSpace& v, std::size_t i, std::size_t j) { return sym_element(v, i, j, -1); }

QRow add(QRow a, const QRow& b) {
    qrow_axpy(a, Scalar(1), b);
    return a;
}

// DK(3) on t12, t13, t23.
QuadraticData dk3() {
    auto v = GradedSpace({{"t12", 0}, {"t13", 0}, {"t23", 0}});
    std::vector<QRow> rel = {add(wedge(v, 0, 1), wedge(v, 0, 2)), add(wedge(v, 1, 0), wedge(v, 1, 2)),
                             add(wedge(v, 2, 0), wedge(v, 2, 1))};
    return make_qd(Flavor::Skew, v, rel);
}

QuadraticData bkw3() {
    auto v = GradedSpace({{"t12", 0}, {"t13", 0}, {"t23", 0}});
    return make_qd(Flavor::Skew, v, square_split(v).alt);
}

QuadraticData full_plain(const GradedSpace& v) {
    return make_qd(Flavor::Plain, v, Subspace::full(tensor_product(v, v).ambient()));
}

const Product kAllProducts[] = {Product::Tensor, Product::UTensor, Product::Vee,
                                Product::Oplus,  Product::Black,   Product::White};

Flavor flavor_for(Product p, Rng& rng) {
    switch (p) {
        case Product::Vee: return Flavor::Symmetric;
        case Product::Oplus: return Flavor::Skew;
        case Product::UTensor: return rng.coin() ? Flavor::Plain : Flavor::Symmetric;
        default: return Flavor::Plain;
    }
}

}  // namespace

TEST_CASE("make_qd examples") {
    auto d = dk3();
    CHECK(d.r.dim() == 2);
    auto x = gens({0});
    CHECK(make_qd(Flavor::Symmetric, x, square_split(x).alt).r.dim() == 0);
    auto xy = gens({0, 0});
    QRow xty = {{1, Scalar(1)}};
    CHECK_THROWS_AS(make_qd(Flavor::Symmetric, xy, std::vector<QRow>{xty}), FlavorViolation);
    try {
        make_qd(Flavor::Symmetric, xy, std::vector<QRow>{xty});
    } catch (const FlavorViolation& e) {
        CHECK(e.witness.coeff(1) == 1);
    }
}

TEST_CASE("check_morphism examples") {
    auto d = dk3();
    auto id = LinearMap::identity(d.v.ambient());
    CHECK(check_morphism(id, d, d).ok);
    CHECK(check_morphism(id, d, bkw3()).ok);
    CHECK_FALSE(check_morphism(id, bkw3(), d).ok);
    CHECK(check_morphism(id, bkw3(), d).counterexample.has_value());
    auto z = zero_qd(Flavor::Skew);
    CHECK(check_morphism(LinearMap::zero(d.v.ambient(), z.v.ambient()), d, z).ok);
    // degree must be preserved
    auto a = make_qd(Flavor::Plain, gens({0}), std::vector<QRow>{});
    auto b = make_qd(Flavor::Plain, gens({1}), std::vector<QRow>{});
    CHECK_FALSE(check_morphism(LinearMap::identity(a.v.ambient()).compose(LinearMap::identity(a.v.ambient())),
                               a, b)
                    .ok);
}

TEST_CASE("product examples") {
    auto a = full_plain(GradedSpace({{"x", 0}}));
    auto b = full_plain(GradedSpace({{"y", 0}}));
    auto ab = monoidal_product(Product::Black, a, b);
    CHECK(ab.v.label(0) == "x⊗y");
    CHECK(ab.r.dim() == 1);
    CHECK(monoidal_product(Product::White, a, b).r.dim() == 1);
    auto u = zero_qd(Flavor::Plain);
    CHECK(same_data(monoidal_product(Product::Tensor, u, a), a));
    CHECK_THROWS_AS(monoidal_product(Product::Vee, a, b), FlavorMismatch);
    CHECK_THROWS_AS(monoidal_product(Product::Tensor, a, dk3()), FlavorMismatch);
    // (V⊕W) square with bracket: dims 1 + 1 + 1
    CHECK(monoidal_product(Product::Tensor, a, b).r.dim() == 3);
}

TEST_CASE("functor examples") {
    auto d = dk3();
    auto ad = apply_functor(Functor::Antishriek, d);
    CHECK(ad.flavor == Flavor::Symmetric);
    CHECK(ad.v.degree(0) == 1);
    CHECK(ad.r.dim() == 2);
    auto sd = apply_functor(Functor::Shriek, d);
    CHECK(sd.flavor == Flavor::Symmetric);
    CHECK(sd.v.degree(0) == -1);
    CHECK(sd.r.dim() == 1);  // the single Arnold relation
    CHECK_THROWS_AS(apply_functor(Functor::Sigma, d), FlavorMismatch);
    CHECK(same_data(apply_functor(Functor::AntishriekInv, ad), d));
    CHECK(apply_functor(Functor::StarInv, apply_functor(Functor::Star, d)).v == d.v);
}

TEST_CASE("property: double dual and ! = * ∘ ¡") {
    Rng rng(31);
    for (int t = 0; t < 40; ++t) {
        Flavor f = static_cast<Flavor>(rng.uniform(0, 2));
        auto q = random_qd(rng, f, 4, -1, 2);
        auto qq = apply_functor(Functor::Star, apply_functor(Functor::Star, q));
        CHECK(qq.v == q.v);
        CHECK(qq.r == q.r);
        auto s1 = apply_functor(Functor::Shriek, q);
        auto s2 = apply_functor(Functor::Star, apply_functor(Functor::Antishriek, q));
        CHECK(s1.v == s2.v);
        CHECK(s1.r == s2.r);
        if (f != Flavor::Plain) {
            auto sp = square_split(q.v);
            auto whole = f == Flavor::Symmetric ? sp.sym : sp.alt;
            CHECK(apply_functor(Functor::Star, q).r.dim() == whole.dim() - q.r.dim());
        }
    }
}

TEST_CASE("property: unit laws") {
    Rng rng(32);
    for (int t = 0; t < 30; ++t)
        for (auto p : kAllProducts) {
            Flavor f = flavor_for(p, rng);
            auto q = random_qd(rng, f, 3);
            auto u = product_unit(p, f);
            CHECK(same_data(monoidal_product(p, u, q), q));
            CHECK(same_data(monoidal_product(p, q, u), q));
        }
}

TEST_CASE("property: associativity and braiding of all six products") {
    Rng rng(33);
    for (int t = 0; t < 25; ++t)
        for (auto p : kAllProducts) {
            Flavor f = flavor_for(p, rng);
            auto a = random_qd(rng, f, 3, 0, 1, "a");
            auto b = random_qd(rng, f, 3, 0, 1, "b");
            auto c = random_qd(rng, f, 2, 0, 1, "c");
            auto l = monoidal_product(p, monoidal_product(p, a, b), c);
            auto r = monoidal_product(p, a, monoidal_product(p, b, c));
            CHECK(same_data(l, r));
            auto ab = monoidal_product(p, a, b);
            auto ba = monoidal_product(p, b, a);
            auto sw = product_braiding(p, a, b);
            auto chk = check_morphism(sw, ab, ba);
            CHECK(chk.ok);
            // the swap is invertible, so the images agree
            CHECK(apply_map(kron(sw, sw, ab.square, ba.square), ab.r) == ba.r);
        }
}

TEST_CASE("property: strong monoidal functors") {
    Rng rng(34);
    auto eq = [](const QuadraticData& x, const QuadraticData& y) { return same_data(x, y); };
    for (int t = 0; t < 30; ++t) {
        auto k1 = random_qd(rng, Flavor::Skew, 3, 0, 1, "a");
        auto k2 = random_qd(rng, Flavor::Skew, 3, 0, 1, "b");
        auto s1 = random_qd(rng, Flavor::Symmetric, 3, 0, 1, "a");
        auto s2 = random_qd(rng, Flavor::Symmetric, 3, 0, 1, "b");
        auto p1 = random_qd(rng, Flavor::Plain, 3, 0, 1, "a");
        auto p2 = random_qd(rng, Flavor::Plain, 3, 0, 1, "b");
        auto F = [](Functor f, const QuadraticData& q) { return apply_functor(f, q); };
        auto P = [](Product p, const QuadraticData& x, const QuadraticData& y) { return monoidal_product(p, x, y); };
        CHECK(eq(P(Product::Tensor, F(Functor::Lambda, k1), F(Functor::Lambda, k2)),
                 F(Functor::Lambda, P(Product::Oplus, k1, k2))));
        CHECK(eq(P(Product::UTensor, F(Functor::Sigma, s1), F(Functor::Sigma, s2)),
                 F(Functor::Sigma, P(Product::UTensor, s1, s2))));
        CHECK(eq(P(Product::Tensor, F(Functor::ScriptS, s1), F(Functor::ScriptS, s2)),
                 F(Functor::ScriptS, P(Product::Vee, s1, s2))));
        CHECK(eq(P(Product::UTensor, F(Functor::Antishriek, k1), F(Functor::Antishriek, k2)),
                 F(Functor::Antishriek, P(Product::Oplus, k1, k2))));
        CHECK(eq(P(Product::UTensor, F(Functor::Antishriek, p1), F(Functor::Antishriek, p2)),
                 F(Functor::Antishriek, P(Product::Tensor, p1, p2))));
        CHECK(eq(P(Product::Vee, F(Functor::Star, s1), F(Functor::Star, s2)),
                 F(Functor::Star, P(Product::UTensor, s1, s2))));
        CHECK(eq(P(Product::Tensor, F(Functor::Star, p1), F(Functor::Star, p2)),
                 F(Functor::Star, P(Product::UTensor, p1, p2))));
        CHECK(eq(P(Product::Vee, F(Functor::Shriek, k1), F(Functor::Shriek, k2)),
                 F(Functor::Shriek, P(Product::Oplus, k1, k2))));
        CHECK(eq(P(Product::Tensor, F(Functor::Shriek, p1), F(Functor::Shriek, p2)),
                 F(Functor::Shriek, P(Product::Tensor, p1, p2))));
    }
}

TEST_CASE("property: (A • B)* = A* ∘ B*") {
    Rng rng(35);
    for (int t = 0; t < 40; ++t) {
        auto a = random_qd(rng, Flavor::Plain, 3, 0, 1, "a");
        auto b = random_qd(rng, Flavor::Plain, 3, 0, 1, "b");
        auto lhs = apply_functor(Functor::Star, monoidal_product(Product::Black, a, b));
        auto rhs = monoidal_product(Product::White, apply_functor(Functor::Star, a), apply_functor(Functor::Star, b));
        CHECK(lhs.v == rhs.v);
        CHECK(lhs.r == rhs.r);
    }
}

TEST_CASE("interchange φ examples") {
    auto a = full_plain(GradedSpace({{"a", 0}}));
    auto b = full_plain(GradedSpace({{"b", 0}}));
    auto z = zero_qd(Flavor::Plain);
    auto deg = interchange_phi(a, z, b, z);
    CHECK(deg.check.ok);
    CHECK(deg.map.matrix() == oracle::Mat{{oracle::Q(1)}});

    // S₍₂₃₎(R(A)⊗R(B′)) is killed by pr₁₄^{⊗2}
    auto a2 = full_plain(GradedSpace({{"a'", 0}}));
    auto b2 = full_plain(GradedSpace({{"b'", 0}}));
    auto phi = interchange_phi(a, a2, b, b2);
    CHECK(phi.check.ok);
    // A₁⊕A′₁ has index 0 (a) and 1 (a'); B₁⊕B′₁ has 0 (b) and 1 (b').
    // a⊗b′ is generator 1; its square is index 1*4+1.
    QRow ab2sq = {{5, Scalar(1)}};
    CHECK(phi.source.r.contains(ab2sq));
    CHECK(phi.map.apply(QRow{{1, Scalar(1)}}).empty());

    // one odd generator: the [A,A′]_+ ⊗ [B,B′]_+ terms land on [A⊗B, A′⊗B′]_+
    auto ao = make_qd(Flavor::Plain, GradedSpace({{"a", 1}}), std::vector<QRow>{});
    auto ph2 = interchange_phi(ao, a2, b, b2);
    CHECK(ph2.check.ok);
    auto whole = tensor_product(ph2.source.v, ph2.source.v).ambient();
    auto img = apply_map(kron(ph2.map, ph2.map, ph2.source.square, ph2.target.square), ph2.source.r);
    auto ab = monoidal_product(Product::Black, ao, b);
    auto ab2 = monoidal_product(Product::Black, a2, b2);
    auto bracket = mixed_bracket(ab.v, ab2.v, 1).relabel(ph2.target.square);
    CHECK(img.contains(bracket));
    (void)whole;
}

TEST_CASE("property: φ and ψ are morphisms and *-dual to each other") {
    Rng rng(36);
    for (int t = 0; t < 40; ++t) {
        auto a = random_qd(rng, Flavor::Plain, 2, 0, 1, "a");
        auto a2 = random_qd(rng, Flavor::Plain, 2, 0, 1, "c");
        auto b = random_qd(rng, Flavor::Plain, 2, 0, 1, "b");
        auto b2 = random_qd(rng, Flavor::Plain, 2, 0, 1, "d");
        auto phi = interchange_phi(a, a2, b, b2);
        CHECK(phi.check.ok);
        auto psi = interchange_psi(a, a2, b, b2);
        CHECK(psi.check.ok);
        auto S = [](const QuadraticData& q) { return apply_functor(Functor::Star, q); };
        auto dpsi = interchange_psi(S(a), S(a2), S(b), S(b2));
        CHECK(dpsi.check.ok);
        auto m = phi.map.matrix();
        oracle::Mat mt(m.empty() ? 0 : m[0].size(), std::vector<oracle::Q>(m.size()));
        for (std::size_t i = 0; i < m.size(); ++i)
            for (std::size_t j = 0; j < m[i].size(); ++j) mt[j][i] = m[i][j];
        if (!m.empty()) CHECK(dpsi.map.matrix() == mt);
        CHECK(same_data(dpsi.source, S(phi.target)));
        CHECK(same_data(dpsi.target, S(phi.source)));
    }
}

TEST_CASE("property: φ is compatible with the • associator") {
    Rng rng(37);
    for (int t = 0; t < 15; ++t) {
        std::vector<QuadraticData> q;
        for (int i = 0; i < 6; ++i) q.push_back(random_qd(rng, Flavor::Plain, 2, 0, 1, std::string(1, 'a' + i)));
        auto res = phi_associator_check(q[0], q[1], q[2], q[3], q[4], q[5]);
        CHECK_MESSAGE(res.ok, res.reason);
    }
}

TEST_CASE("JSON round trip") {
    Rng rng(38);
    for (int t = 0; t < 20; ++t) {
        auto q = random_qd(rng, static_cast<Flavor>(rng.uniform(0, 2)), 3, -1, 1);
        auto j = qd_to_json(q);
        auto back = qd_from_json(Json::parse(j.dump()));
        CHECK(back.flavor == q.flavor);
        CHECK(back.v == q.v);
        CHECK(back.r == q.r);
    }
    auto j = qd_to_json(dk3());
    CHECK(j["relations"][0][1].get<std::string>().find('/') != std::string::npos);
}
