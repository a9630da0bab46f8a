#include "qdk/qd.hpp"

#include <map>

namespace qdk {

std::string flavor_name(Flavor f) {
    switch (f) {
        case Flavor::Plain: return "plain";
        case Flavor::Symmetric: return "symmetric";
        case Flavor::Skew: return "skew";
    }
    return "?";
}

Flavor parse_flavor(const std::string& s) {
    if (s == "plain") return Flavor::Plain;
    if (s == "symmetric") return Flavor::Symmetric;
    if (s == "skew") return Flavor::Skew;
    throw FlavorMismatch("unknown flavor '" + s + "'");
}

Subspace flavor_ambient(Flavor f, const GradedSpace& v) {
    if (f == Flavor::Plain) return Subspace::full(tensor_product(v, v).ambient());
    auto sp = square_split(v);
    return f == Flavor::Symmetric ? sp.sym : sp.alt;
}

QuadraticData make_qd(Flavor f, GradedSpace v, const Subspace& r) {
    QuadraticData q;
    q.flavor = f;
    q.square = tensor_product(v, v).ambient();
    if (r.ambient_dim() != q.square->dim()) throw AmbientMismatch("make_qd: relations not in V^{⊗2}");
    q.r = same_ambient(r.ambient(), q.square) ? r : r.relabel(q.square);
    q.v = std::move(v);
    if (f != Flavor::Plain) {
        auto fa = flavor_ambient(f, q.v);
        if (auto w = fa.first_outside(q.r))
            throw FlavorViolation("relation outside the " + flavor_name(f) + " square", *w);
    }
    return q;
}

QuadraticData make_qd(Flavor f, GradedSpace v, const std::vector<QRow>& rows) {
    auto amb = tensor_product(v, v).ambient();
    return make_qd(f, std::move(v), Subspace::from_qrows(amb, rows));
}

QuadraticData zero_qd(Flavor f) {
    GradedSpace v;
    return make_qd(f, v, Subspace::zero(tensor_product(v, v).ambient()));
}

bool same_data(const QuadraticData& a, const QuadraticData& b) {
    if (a.flavor != b.flavor || a.v.degrees() != b.v.degrees()) return false;
    return a.r.relabel(b.square) == b.r;
}

MorphismCheck check_morphism(const LinearMap& f, const QuadraticData& a, const QuadraticData& b) {
    MorphismCheck res;
    if (f.source()->dim() != a.dim() || f.target()->dim() != b.dim()) {
        res.reason = "generator dimensions differ";
        return res;
    }
    if (!is_degree_zero(f, a.v, b.v)) {
        res.reason = "map is not of degree 0";
        return res;
    }
    LinearMap f2 = kron(f, f, a.square, b.square);
    auto img = apply_map(f2, a.r);
    if (auto w = b.r.first_outside(img)) {
        res.counterexample = *w;
        res.reason = "f⊗f(R) not contained in S";
        return res;
    }
    res.ok = true;
    return res;
}

std::string product_name(Product p) {
    switch (p) {
        case Product::Tensor: return "tensor";
        case Product::UTensor: return "utensor";
        case Product::Vee: return "vee";
        case Product::Oplus: return "oplus";
        case Product::Black: return "black";
        case Product::White: return "white";
    }
    return "?";
}

Product parse_product(const std::string& s) {
    for (auto p : {Product::Tensor, Product::UTensor, Product::Vee, Product::Oplus, Product::Black, Product::White})
        if (product_name(p) == s) return p;
    throw FlavorMismatch("unknown product '" + s + "'");
}

LinearMap s23(const GradedSpace& v, const GradedSpace& w) {
    return permute_factors({v, v, w, w}, {0, 2, 1, 3});
}

Subspace tensor_subspace(const Subspace& a, const Subspace& b, const AmbientPtr& amb) {
    if (amb->dim() != a.ambient_dim() * b.ambient_dim()) throw AmbientMismatch("tensor_subspace: dimension");
    std::uint32_t nb = static_cast<std::uint32_t>(b.ambient_dim());
    auto aq = a.qrows();
    auto bq = b.qrows();
    std::vector<QRow> rows;
    rows.reserve(aq.size() * bq.size());
    for (const auto& x : aq)
        for (const auto& y : bq) {
            QRow r;
            r.reserve(x.size() * y.size());
            for (const auto& e : x)
                for (const auto& g : y) r.push_back({e.col * nb + g.col, e.val * g.val});
            rows.push_back(std::move(r));
        }
    return Subspace::from_qrows(amb, rows);
}

namespace {

void require(bool ok, const std::string& what) {
    if (!ok) throw FlavorMismatch(what);
}

QuadraticData direct_product(Flavor f, const QuadraticData& a, const QuadraticData& b, int bracket) {
    GradedSpace vw = direct_sum(a.v, b.v);
    auto sq = tensor_product(vw, vw).ambient();
    auto r = sum(apply_map(square_inclusion(a.v, b.v, true), a.r), apply_map(square_inclusion(a.v, b.v, false), b.r));
    r = r.relabel(sq);
    if (bracket != 0) r = sum(r, mixed_bracket(a.v, b.v, bracket).relabel(sq));
    return make_qd(f, std::move(vw), r);
}

QuadraticData black_white(bool white, const QuadraticData& a, const QuadraticData& b) {
    GradedSpace vw = tensor_product(a.v, b.v);
    auto big = tensor_product(tensor_product(a.v, a.v), tensor_product(b.v, b.v)).ambient();
    Subspace rs = white ? sum(tensor_subspace(a.r, Subspace::full(b.square), big),
                              tensor_subspace(Subspace::full(a.square), b.r, big))
                        : tensor_subspace(a.r, b.r, big);
    auto img = apply_map(s23(a.v, b.v), rs);
    return make_qd(Flavor::Plain, std::move(vw), img);
}

}  // namespace

QuadraticData monoidal_product(Product p, const QuadraticData& a, const QuadraticData& b) {
    require(a.flavor == b.flavor, "product of data with different flavors");
    Flavor f = a.flavor;
    switch (p) {
        case Product::Tensor:
            require(f == Flavor::Plain, "⊗ needs plain data");
            return direct_product(f, a, b, -1);
        case Product::UTensor:
            require(f == Flavor::Plain || f == Flavor::Symmetric, "⊗̲ needs plain or symmetric data");
            return direct_product(f, a, b, +1);
        case Product::Vee:
            require(f == Flavor::Symmetric, "∨ needs symmetric data");
            return direct_product(f, a, b, 0);
        case Product::Oplus:
            require(f == Flavor::Skew, "⊕ needs skew data");
            return direct_product(f, a, b, -1);
        case Product::Black:
            require(f == Flavor::Plain, "• needs plain data");
            return black_white(false, a, b);
        case Product::White:
            require(f == Flavor::Plain, "∘ needs plain data");
            return black_white(true, a, b);
    }
    throw FlavorMismatch("unknown product");
}

QuadraticData product_unit(Product p, Flavor f) {
    if (p == Product::Black || p == Product::White) {
        GradedSpace e({Generator{"e", 0}});
        auto sq = tensor_product(e, e).ambient();
        return make_qd(Flavor::Plain, e, p == Product::Black ? Subspace::full(sq) : Subspace::zero(sq));
    }
    return zero_qd(f);
}

LinearMap product_braiding(Product p, const QuadraticData& a, const QuadraticData& b) {
    if (p == Product::Black || p == Product::White) return braiding(a.v, b.v);
    std::size_t da = a.dim(), db = b.dim();
    std::vector<QRow> cols(da + db);
    for (std::size_t i = 0; i < da; ++i) cols[i] = {{static_cast<std::uint32_t>(db + i), Scalar(1)}};
    for (std::size_t j = 0; j < db; ++j) cols[da + j] = {{static_cast<std::uint32_t>(j), Scalar(1)}};
    return LinearMap(direct_sum(a.v, b.v).ambient(), direct_sum(b.v, a.v).ambient(), std::move(cols));
}

std::string functor_name(Functor f) {
    switch (f) {
        case Functor::Lambda: return "lambda";
        case Functor::Sigma: return "sigma";
        case Functor::ScriptS: return "scripts";
        case Functor::Antishriek: return "antishriek";
        case Functor::Star: return "star";
        case Functor::Shriek: return "shriek";
        case Functor::AntishriekInv: return "antishriek-inv";
        case Functor::StarInv: return "star-inv";
    }
    return "?";
}

Functor parse_functor(const std::string& s) {
    for (auto f : {Functor::Lambda, Functor::Sigma, Functor::ScriptS, Functor::Antishriek, Functor::Star,
                   Functor::Shriek, Functor::AntishriekInv, Functor::StarInv})
        if (functor_name(f) == s) return f;
    throw FlavorMismatch("unknown functor '" + s + "'");
}

namespace {

Flavor flipped(Flavor f) {
    if (f == Flavor::Symmetric) return Flavor::Skew;
    if (f == Flavor::Skew) return Flavor::Symmetric;
    return f;
}

QuadraticData koszul_shift(const QuadraticData& a, int k) {
    GradedSpace sv = shift(a.v, k);
    auto r = apply_map(shift_square_map(a.v, k), a.r);
    return make_qd(flipped(a.flavor), std::move(sv), r);
}

QuadraticData linear_dual(const QuadraticData& a) {
    GradedSpace dv = dual(a.v);
    auto sq = tensor_product(dv, dv).ambient();
    auto ann = annihilator(a.r).relabel(sq);
    if (a.flavor != Flavor::Plain) ann = intersect(ann, flavor_ambient(a.flavor, dv));
    return make_qd(a.flavor, std::move(dv), ann);
}

}  // namespace

QuadraticData apply_functor(Functor f, const QuadraticData& a) {
    switch (f) {
        case Functor::Lambda:
            require(a.flavor == Flavor::Skew, "Λ needs skew data");
            return make_qd(Flavor::Plain, a.v, a.r);
        case Functor::Sigma:
            require(a.flavor == Flavor::Symmetric, "Σ needs symmetric data");
            return make_qd(Flavor::Plain, a.v, a.r);
        case Functor::ScriptS:
            require(a.flavor == Flavor::Symmetric, "𝒮 needs symmetric data");
            return make_qd(Flavor::Plain, a.v, sum(a.r, square_split(a.v).alt));
        case Functor::Antishriek: return koszul_shift(a, 1);
        case Functor::AntishriekInv: return koszul_shift(a, -1);
        case Functor::Star:
        case Functor::StarInv: return linear_dual(a);
        case Functor::Shriek: return linear_dual(koszul_shift(a, 1));
    }
    throw FlavorMismatch("unknown functor");
}

LinearMap pr14(const GradedSpace& a, const GradedSpace& a2, const GradedSpace& b, const GradedSpace& b2) {
    GradedSpace src = tensor_product(direct_sum(a, a2), direct_sum(b, b2));
    GradedSpace tgt = direct_sum(tensor_product(a, b), tensor_product(a2, b2));
    std::size_t na = a.dim(), nb = b.dim(), nb2 = b2.dim(), nbb = nb + nb2;
    std::vector<QRow> cols(src.dim());
    for (std::size_t u = 0; u < na + a2.dim(); ++u)
        for (std::size_t w = 0; w < nbb; ++w) {
            std::size_t c = u * nbb + w;
            if (u < na && w < nb) cols[c] = {{static_cast<std::uint32_t>(u * nb + w), Scalar(1)}};
            else if (u >= na && w >= nb)
                cols[c] = {{static_cast<std::uint32_t>(na * nb + (u - na) * nb2 + (w - nb)), Scalar(1)}};
        }
    return LinearMap(src.ambient(), tgt.ambient(), std::move(cols));
}

LinearMap inj14(const GradedSpace& a, const GradedSpace& a2, const GradedSpace& b, const GradedSpace& b2) {
    GradedSpace src = direct_sum(tensor_product(a, b), tensor_product(a2, b2));
    GradedSpace tgt = tensor_product(direct_sum(a, a2), direct_sum(b, b2));
    std::size_t na = a.dim(), na2 = a2.dim(), nb = b.dim(), nb2 = b2.dim(), nbb = nb + nb2;
    std::vector<QRow> cols(src.dim());
    for (std::size_t u = 0; u < na; ++u)
        for (std::size_t w = 0; w < nb; ++w)
            cols[u * nb + w] = {{static_cast<std::uint32_t>(u * nbb + w), Scalar(1)}};
    for (std::size_t u = 0; u < na2; ++u)
        for (std::size_t w = 0; w < nb2; ++w)
            cols[na * nb + u * nb2 + w] = {{static_cast<std::uint32_t>((na + u) * nbb + nb + w), Scalar(1)}};
    return LinearMap(src.ambient(), tgt.ambient(), std::move(cols));
}

InterchangeResult interchange_phi(const QuadraticData& a, const QuadraticData& a2, const QuadraticData& b,
                                  const QuadraticData& b2) {
    auto src = monoidal_product(Product::Black, monoidal_product(Product::UTensor, a, a2),
                                monoidal_product(Product::UTensor, b, b2));
    auto tgt = monoidal_product(Product::UTensor, monoidal_product(Product::Black, a, b),
                                monoidal_product(Product::Black, a2, b2));
    auto m = pr14(a.v, a2.v, b.v, b2.v);
    auto chk = check_morphism(m, src, tgt);
    return {std::move(src), std::move(tgt), std::move(m), std::move(chk)};
}

InterchangeResult interchange_psi(const QuadraticData& a, const QuadraticData& a2, const QuadraticData& b,
                                  const QuadraticData& b2) {
    auto src = monoidal_product(Product::Tensor, monoidal_product(Product::White, a, b),
                                monoidal_product(Product::White, a2, b2));
    auto tgt = monoidal_product(Product::White, monoidal_product(Product::Tensor, a, a2),
                                monoidal_product(Product::Tensor, b, b2));
    auto m = inj14(a.v, a2.v, b.v, b2.v);
    auto chk = check_morphism(m, src, tgt);
    return {std::move(src), std::move(tgt), std::move(m), std::move(chk)};
}

AssociatorCheck phi_associator_check(const QuadraticData& a, const QuadraticData& a2, const QuadraticData& b,
                                     const QuadraticData& b2, const QuadraticData& c, const QuadraticData& c2) {
    AssociatorCheck res;
    auto ut = [](const QuadraticData& x, const QuadraticData& y) { return monoidal_product(Product::UTensor, x, y); };
    auto bl = [](const QuadraticData& x, const QuadraticData& y) { return monoidal_product(Product::Black, x, y); };
    auto ab = bl(a, b), a2b2 = bl(a2, b2), bc = bl(b, c), b2c2 = bl(b2, c2);
    auto src = bl(bl(ut(a, a2), ut(b, b2)), ut(c, c2));
    auto tgt = ut(bl(ab, c), bl(a2b2, c2));

    GradedSpace aa = direct_sum(a.v, a2.v), cc = direct_sum(c.v, c2.v);
    // left route: (φ ⊗ id) then φ
    GradedSpace mid1 = tensor_product(direct_sum(ab.v, a2b2.v), cc);
    auto step1 = kron(pr14(a.v, a2.v, b.v, b2.v), LinearMap::identity(cc.ambient()), src.v.ambient(),
                      mid1.ambient());
    auto left = pr14(ab.v, a2b2.v, c.v, c2.v).compose(step1);
    // right route: (id ⊗ φ) then φ
    GradedSpace mid2 = tensor_product(aa, direct_sum(bc.v, b2c2.v));
    auto step2 = kron(LinearMap::identity(aa.ambient()), pr14(b.v, b2.v, c.v, c2.v), src.v.ambient(),
                      mid2.ambient());
    auto right = pr14(a.v, a2.v, bc.v, b2c2.v).compose(step2);
    if (left.matrix() != right.matrix()) {
        res.reason = "composites differ on generators";
        return res;
    }
    auto chk = check_morphism(LinearMap(src.v.ambient(), tgt.v.ambient(), left.columns()), src, tgt);
    if (!chk.ok) {
        res.reason = "composite is not a morphism: " + chk.reason;
        return res;
    }
    res.ok = true;
    return res;
}

GradedSpace random_graded_space(Rng& rng, int max_dim, int dlo, int dhi, const std::string& prefix) {
    int n = static_cast<int>(rng.uniform(0, max_dim));
    std::vector<Generator> g;
    for (int i = 0; i < n; ++i) g.push_back({prefix + std::to_string(i), static_cast<int>(rng.uniform(dlo, dhi))});
    return GradedSpace(std::move(g));
}

Subspace random_graded_subspace(Rng& rng, const AmbientPtr& amb, const std::vector<QRow>& homogeneous,
                                const std::vector<int>& degrees_of_rows) {
    std::map<int, std::vector<const QRow*>> byd;
    for (std::size_t i = 0; i < homogeneous.size(); ++i)
        if (!homogeneous[i].empty()) byd[degrees_of_rows[i]].push_back(&homogeneous[i]);
    std::vector<QRow> out;
    for (auto& [d, rows] : byd) {
        int k = static_cast<int>(rng.uniform(0, static_cast<std::int64_t>(rows.size())));
        for (int t = 0; t < k; ++t) {
            QRow acc;
            for (auto* r : rows) {
                auto c = rng.uniform(-2, 2);
                if (c != 0) qrow_axpy(acc, Scalar(c), *r);
            }
            out.push_back(std::move(acc));
        }
    }
    return Subspace::from_qrows(amb, out);
}

QuadraticData random_qd(Rng& rng, Flavor f, int max_dim, int dlo, int dhi, const std::string& prefix) {
    GradedSpace v = random_graded_space(rng, max_dim, dlo, dhi, prefix);
    std::size_t n = v.dim();
    auto sq = tensor_product(v, v).ambient();
    std::vector<QRow> hom;
    std::vector<int> deg;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (f != Flavor::Plain && j < i) continue;
            if (f == Flavor::Plain) hom.push_back({{static_cast<std::uint32_t>(i * n + j), Scalar(1)}});
            else hom.push_back(sym_element(v, i, j, f == Flavor::Symmetric ? 1 : -1));
            deg.push_back(v.degree(i) + v.degree(j));
        }
    auto r = random_graded_subspace(rng, sq, hom, deg);
    return make_qd(f, std::move(v), r);
}

}  // namespace qdk
