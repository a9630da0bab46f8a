#include "qdk/boqd.hpp"

#include <deque>
#include <map>

namespace qdk {

namespace {

QRow unit_row(std::size_t i) { return {{static_cast<std::uint32_t>(i), Scalar(1)}}; }

LinearMap relabel_map(const LinearMap& f, const AmbientPtr& src, const AmbientPtr& tgt) {
    return LinearMap(src, tgt, f.columns());
}

LinearMap add_scalar(const LinearMap& f, const Scalar& c) {  // f + c·1
    std::vector<QRow> cols = f.columns();
    for (std::size_t j = 0; j < cols.size(); ++j) qrow_axpy(cols[j], c, unit_row(j));
    return LinearMap(f.source(), f.target(), std::move(cols));
}

std::vector<QRow> as_qrows(const std::vector<IRow>& rows) {
    std::vector<QRow> out;
    out.reserve(rows.size());
    for (const auto& r : rows) out.push_back(to_qrow_raw(r));
    return out;
}

QRow from_map(const std::map<std::uint32_t, Scalar>& acc) {
    QRow r;
    for (const auto& [c, v] : acc)
        if (v != 0) r.push_back({c, v});
    return r;
}

// Generator inclusion of a (first) or b into A₁⊕B₁.
LinearMap inclusion(const S2Module& part, const S2Module& whole, std::size_t offset) {
    std::vector<QRow> cols;
    for (std::size_t i = 0; i < part.dim(); ++i) cols.push_back(unit_row(offset + i));
    return LinearMap(part.space.ambient(), whole.space.ambient(), std::move(cols));
}

QRow shifted(const QRow& r, std::size_t off) {
    QRow out = r;
    for (auto& e : out) e.col += static_cast<std::uint32_t>(off);
    return out;
}

struct Piece {
    std::string name;
    std::vector<QRow> rows;
};

// Relation pieces of the six products on A₁⊕B₁, over the arity-3 space `c`.
std::vector<Piece> sum_pieces(BoqdProduct p, const BOQDData& a, const BOQDData& b, const Arity3Space& c,
                              const std::string& an, const std::string& bn) {
    std::size_t da = a.dim();
    auto ia = arity3_map(inclusion(a.gens, c.base(), 0), a.space, c);
    auto ib = arity3_map(inclusion(b.gens, c.base(), da), b.space, c);
    std::vector<Piece> out;
    out.push_back({"R(" + an + ")", apply_map(ia, a.r).qrows()});

    auto basis = [](std::size_t n, std::size_t off) {
        std::vector<QRow> v;
        for (std::size_t i = 0; i < n; ++i) v.push_back(unit_row(off + i));
        return v;
    };
    auto rows_of = [](const Subspace& s, std::size_t off) {
        std::vector<QRow> v;
        for (const auto& r : s.qrows()) v.push_back(shifted(r, off));
        return v;
    };
    // Outer from the first list, inner from the second.
    auto circ1 = [&](const std::vector<QRow>& outer, const std::vector<QRow>& inner) {
        std::vector<QRow> rows;
        for (const auto& x : outer)
            for (const auto& y : inner) rows.push_back(c.tau(1, x, y));
        return c.closure(rows).qrows();
    };
    auto one = [](std::string n) {
        auto k = n.find('\'');
        return k == std::string::npos ? n + "1" : n.insert(k, "1");
    };
    std::string a1 = one(an), b1 = one(bn);
    auto va = basis(da, 0), vb = basis(b.dim(), da);
    switch (p) {
        case BoqdProduct::Vee:
            break;
        case BoqdProduct::Oplus:
            out.push_back({a1 + "o1" + b1, circ1(vb, va)});
            out.push_back({b1 + "o1" + a1, circ1(va, vb)});
            break;
        case BoqdProduct::TriL:
            out.push_back({b1 + "o1" + a1, circ1(va, vb)});
            break;
        case BoqdProduct::TriR:
            out.push_back({a1 + "o1" + b1, circ1(vb, va)});
            break;
        case BoqdProduct::UCirc:
        case BoqdProduct::Circ: {
            auto ap = rows_of(a.gens.invariants(), 0), am = rows_of(a.gens.anti_invariants(), 0);
            auto bp = rows_of(b.gens.invariants(), da), bm = rows_of(b.gens.anti_invariants(), da);
            Scalar sign = p == BoqdProduct::UCirc ? 1 : -1;
            std::vector<QRow> rows;
            auto same = [&](const std::vector<QRow>& xs, const std::vector<QRow>& ys) {
                for (const auto& x : xs)
                    for (const auto& y : ys) {
                        QRow r = c.tau(1, x, y);
                        qrow_axpy(r, sign, c.tau(1, y, x));
                        rows.push_back(std::move(r));
                    }
            };
            same(ap, bp);
            same(am, bm);
            if (p == BoqdProduct::Circ) {
                auto mixed = [&](const std::vector<QRow>& xs, const std::vector<QRow>& ys) {
                    for (const auto& x : xs)
                        for (const auto& y : ys) {
                            rows.push_back(c.tau(1, x, y));
                            rows.push_back(c.tau(1, y, x));
                        }
                };
                mixed(ap, bm);
                mixed(am, bp);
            }
            std::string br = p == BoqdProduct::UCirc ? "{" + a1 + "," + b1 + "}" : "[" + a1 + "," + b1 + "]";
            out.push_back({br, c.closure(rows).qrows()});
            break;
        }
        default:
            throw BoqdError("sum_pieces: not a sum-type product");
    }
    out.push_back({"R(" + bn + ")", apply_map(ib, b.r).qrows()});
    return out;
}

Subspace union_of(const AmbientPtr& amb, const std::vector<Piece>& pieces) {
    std::vector<QRow> rows;
    for (const auto& p : pieces) rows.insert(rows.end(), p.rows.begin(), p.rows.end());
    return Subspace::from_qrows(amb, rows);
}

Json witness_json(const Arity3Space& s, const Vector& v) {
    Json w;
    w["vector"] = s.row_string(v.entries());
    return w;
}

// T(f)(pieces) ⊂ R(tgt), one case per piece plus equivariance of f.
struct MorphismRun {
    Report* rep;
    std::string prefix;
    const BOQDData* src;
    const BOQDData* tgt;
    LinearMap f3;

    bool piece(const std::string& name, const Subspace& s) {
        auto img = apply_map(f3, s);
        auto out = tgt->r.first_outside(img);
        CaseResult c;
        c.name = prefix + name;
        if (out) {
            c.status = Status::Fail;
            c.details = "image leaves target relations";
            c.witness = witness_json(tgt->space, *out);
        } else {
            c.details = img.dim() == 0 ? "annihilated" : "image dim " + std::to_string(img.dim()) + ", contained";
        }
        bool ok = !out.has_value();
        rep->add(std::move(c));
        return ok;
    }
};

void check_equivariant(Report& rep, const std::string& name, const LinearMap& f, const BOQDData& src,
                       const BOQDData& tgt) {
    bool ok = f.compose(src.gens.action) == tgt.gens.action.compose(f);
    rep.add(name, ok, ok ? "" : "generator map does not commute with (12)");
}

void morphism_cases(Report& rep, const std::string& prefix, const BOQDData& src, const BOQDData& tgt,
                    const LinearMap& f, const std::vector<Piece>& pieces) {
    LinearMap g = relabel_map(f, src.gens.space.ambient(), tgt.gens.space.ambient());
    check_equivariant(rep, prefix + "equivariant", g, src, tgt);
    MorphismRun run{&rep, prefix, &src, &tgt, arity3_map(g, src.space, tgt.space)};
    if (pieces.empty()) {
        run.piece("relations", src.r);
        return;
    }
    for (const auto& p : pieces) run.piece(p.name, Subspace::from_qrows(src.space.ambient(), p.rows));
}

void check_group_closed(const Arity3Space& s, const Subspace& r, const char* what) {
    if (!s.is_closed(r)) throw BoqdError(std::string(what) + ": relations not S3-closed");
}

}  // namespace

// ------------------------------------------------------------ S2Module

S2Module::S2Module(GradedSpace v, LinearMap act) : space(std::move(v)), action(std::move(act)) {
    if (action.source()->dim() != space.dim() || action.target()->dim() != space.dim())
        throw BoqdError("S2Module: action has wrong size");
    action = relabel_map(action, space.ambient(), space.ambient());
    if (!(action.compose(action) == LinearMap::identity(space.ambient())))
        throw BoqdError("S2Module: action is not an involution");
    if (!is_degree_zero(action, space, space)) throw BoqdError("S2Module: action is not of degree zero");
}

S2Module S2Module::trivial(GradedSpace v) {
    auto id = LinearMap::identity(v.ambient());
    return S2Module(std::move(v), std::move(id));
}

S2Module S2Module::sign(GradedSpace v) {
    std::vector<QRow> cols;
    for (std::size_t i = 0; i < v.dim(); ++i) cols.push_back({{static_cast<std::uint32_t>(i), Scalar(-1)}});
    LinearMap m(v.ambient(), v.ambient(), std::move(cols));
    return S2Module(std::move(v), std::move(m));
}

Subspace S2Module::invariants() const { return kernel(add_scalar(action, -1)); }
Subspace S2Module::anti_invariants() const { return kernel(add_scalar(action, 1)); }

S2Module s2_dual(const S2Module& m) {
    GradedSpace d = dual(m.space);
    auto t = m.action.transpose(d.ambient(), d.ambient());
    return S2Module(std::move(d), std::move(t));
}

S2Module s2_direct_sum(const S2Module& a, const S2Module& b) {
    GradedSpace v = direct_sum(a.space, b.space);
    auto f = direct_sum(a.action, b.action, v.ambient(), v.ambient());
    return S2Module(std::move(v), std::move(f));
}

S2Module s2_tensor(const S2Module& a, const S2Module& b) {
    GradedSpace v = tensor_product(a.space, b.space);
    auto f = kron(a.action, b.action, v.ambient(), v.ambient());
    return S2Module(std::move(v), std::move(f));
}

// ------------------------------------------------------------ arity 3

namespace {
// τᵢ as a(a'(x_u, x_v), x_w) on positions 0..2.
constexpr int kTree[3][3] = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}};
int tau_of_outer(int w) { return w == 2 ? 1 : (w == 0 ? 2 : 3); }
}  // namespace

Arity3Space::Arity3Space(S2Module m)
    : base_(std::move(m)),
      amb_(Ambient::make({})),
      s12_(LinearMap::identity(amb_)),
      s123_(LinearMap::identity(amb_)) {
    std::size_t d = base_.dim();
    std::vector<std::string> labels;
    labels.reserve(3 * d * d);
    for (int i = 1; i <= 3; ++i)
        for (std::size_t a = 0; a < d; ++a)
            for (std::size_t b = 0; b < d; ++b)
                labels.push_back("t" + std::to_string(i) + "(" + base_.space.label(a) + "," +
                                 base_.space.label(b) + ")");
    amb_ = Ambient::make(std::move(labels));
    s12_ = act({2, 1, 3});
    s123_ = act({2, 3, 1});
}

std::size_t Arity3Space::index(int i, std::size_t a, std::size_t b) const {
    std::size_t d = base_.dim();
    return static_cast<std::size_t>(i - 1) * d * d + a * d + b;
}

QRow Arity3Space::tau(int i, const QRow& x, const QRow& y) const {
    QRow r;
    for (const auto& ex : x)
        for (const auto& ey : y)
            r.push_back({static_cast<std::uint32_t>(index(i, ex.col, ey.col)), ex.val * ey.val});
    return r;
}

LinearMap Arity3Space::act(const std::array<int, 3>& sigma) const {
    std::size_t d = base_.dim();
    std::vector<QRow> cols(dim());
    for (int i = 1; i <= 3; ++i) {
        const int* t = kTree[i - 1];
        int u = sigma[t[0]] - 1, w = sigma[t[2]] - 1;
        int j = tau_of_outer(w);
        bool kept = u == kTree[j - 1][0];
        for (std::size_t a = 0; a < d; ++a)
            for (std::size_t b = 0; b < d; ++b)
                cols[index(i, a, b)] = kept ? unit_row(index(j, a, b))
                                            : tau(j, unit_row(a), base_.action.column(b));
    }
    return LinearMap(amb_, amb_, std::move(cols));
}

Subspace Arity3Space::closure(const std::vector<QRow>& rows) const {
    RowEchelon e(dim());
    std::deque<QRow> queue(rows.begin(), rows.end());
    while (!queue.empty()) {
        QRow r = std::move(queue.front());
        queue.pop_front();
        if (r.empty() || !e.insert(r)) continue;
        queue.push_back(s12_.apply(r));
        queue.push_back(s123_.apply(r));
    }
    return Subspace::from_echelon(amb_, e);
}

bool Arity3Space::is_closed(const Subspace& s) const {
    for (const auto& r : s.qrows())
        if (!s.contains(s12_.apply(r)) || !s.contains(s123_.apply(r))) return false;
    return true;
}

std::string Arity3Space::row_string(const QRow& r) const {
    if (r.empty()) return "0";
    std::string s;
    for (std::size_t i = 0; i < r.size(); ++i) {
        if (i) s += " + ";
        if (r[i].val != 1) s += to_string(r[i].val) + "*";
        s += amb_->label(r[i].col);
    }
    return s;
}

Arity3Space free_arity3(const S2Module& m) { return Arity3Space(m); }

LinearMap arity3_map(const LinearMap& f, const Arity3Space& src, const Arity3Space& tgt) {
    if (f.source()->dim() != src.base().dim() || f.target()->dim() != tgt.base().dim())
        throw AmbientMismatch("arity3_map: generator map has wrong size");
    std::size_t d = src.base().dim();
    std::vector<QRow> cols(src.dim());
    for (int i = 1; i <= 3; ++i)
        for (std::size_t a = 0; a < d; ++a)
            for (std::size_t b = 0; b < d; ++b) cols[src.index(i, a, b)] = tgt.tau(i, f.column(a), f.column(b));
    return LinearMap(src.ambient(), tgt.ambient(), std::move(cols));
}

// ------------------------------------------------------------ data

BOQDData make_boqd(S2Module gens, const Subspace& r) {
    BOQDData out;
    out.space = Arity3Space(gens);
    out.gens = std::move(gens);
    if (r.ambient_dim() != out.space.dim()) throw BoqdError("make_boqd: relations have wrong ambient size");
    out.r = r.relabel(out.space.ambient());
    check_group_closed(out.space, out.r, "make_boqd");
    return out;
}

BOQDData make_boqd(S2Module gens, const std::vector<QRow>& rows) {
    Arity3Space s(gens);
    return make_boqd(std::move(gens), Subspace::from_qrows(s.ambient(), rows));
}

BOQDData make_boqd_closed(S2Module gens, const std::vector<QRow>& rows) {
    Arity3Space s(gens);
    return make_boqd(std::move(gens), s.closure(rows));
}

BOQDData com_boqd() {
    auto m = S2Module::trivial(GradedSpace({{"m", 0}}));
    QRow a = {{0, Scalar(1)}, {1, Scalar(-1)}};
    QRow b = {{1, Scalar(1)}, {2, Scalar(-1)}};
    return make_boqd(std::move(m), std::vector<QRow>{a, b});
}

BOQDData lie_boqd() {
    auto m = S2Module::trivial(GradedSpace({{"m", 0}}));
    QRow j = {{0, Scalar(1)}, {1, Scalar(1)}, {2, Scalar(1)}};
    return make_boqd(std::move(m), std::vector<QRow>{j});
}

std::string boqd_product_name(BoqdProduct p) {
    switch (p) {
        case BoqdProduct::Black: return "Black";
        case BoqdProduct::White: return "White";
        case BoqdProduct::Vee: return "Vee";
        case BoqdProduct::Oplus: return "Oplus";
        case BoqdProduct::TriL: return "TriL";
        case BoqdProduct::TriR: return "TriR";
        case BoqdProduct::UCirc: return "UCirc";
        case BoqdProduct::Circ: return "Circ";
    }
    return "?";
}

BoqdProduct parse_boqd_product(const std::string& s) {
    for (auto p : {BoqdProduct::Black, BoqdProduct::White, BoqdProduct::Vee, BoqdProduct::Oplus, BoqdProduct::TriL,
                   BoqdProduct::TriR, BoqdProduct::UCirc, BoqdProduct::Circ})
        if (boqd_product_name(p) == s) return p;
    throw std::invalid_argument("unknown BOQD product: " + s);
}

bool product_is_tensor(BoqdProduct p) { return p == BoqdProduct::Black || p == BoqdProduct::White; }

Subspace psi_span(const Arity3Space& a, const std::vector<QRow>& x, const Arity3Space& b,
                  const std::vector<QRow>& y, const Arity3Space& target) {
    std::size_t da = a.base().dim(), db = b.base().dim(), d = da * db;
    if (target.base().dim() != d) throw AmbientMismatch("psi_span: target has wrong generator count");
    std::size_t blk_a = da * da, blk_b = db * db;
    std::vector<QRow> rows;
    for (const auto& r : x)
        for (const auto& s : y) {
            std::map<std::uint32_t, Scalar> acc;
            for (const auto& er : r) {
                std::size_t i = blk_a ? er.col / blk_a : 0, p = er.col % blk_a;
                std::size_t a1 = p / da, a2 = p % da;
                for (const auto& es : s) {
                    if (es.col / blk_b != i) continue;
                    std::size_t q = es.col % blk_b;
                    std::size_t b1 = q / db, b2 = q % db;
                    auto col = target.index(static_cast<int>(i) + 1, a1 * db + b1, a2 * db + b2);
                    acc[static_cast<std::uint32_t>(col)] += er.val * es.val;
                }
            }
            rows.push_back(from_map(acc));
        }
    return Subspace::from_qrows(target.ambient(), rows);
}

BOQDData boqd_product(BoqdProduct p, const BOQDData& a, const BOQDData& b) {
    if (product_is_tensor(p)) {
        S2Module g = s2_tensor(a.gens, b.gens);
        Arity3Space s(g);
        Subspace r = Subspace::zero(s.ambient());
        if (p == BoqdProduct::Black) {
            r = psi_span(a.space, a.r.qrows(), b.space, b.r.qrows(), s);
        } else {
            // Φ⁻¹(R(A)⊗T + T⊗R(B)): the functionals vanishing there are R(A)^⊥⊗R(B)^⊥, pulled back along Φ.
            auto fa = as_qrows(orthogonal_rows(a.r.int_rows(), a.space.dim()));
            auto fb = as_qrows(orthogonal_rows(b.r.int_rows(), b.space.dim()));
            auto fn = psi_span(a.space, fa, b.space, fb, s);
            r = Subspace::from_rows(s.ambient(), orthogonal_rows(fn.int_rows(), s.dim()));
        }
        return make_boqd(std::move(g), r);
    }
    S2Module g = s2_direct_sum(a.gens, b.gens);
    Arity3Space s(g);
    auto pieces = sum_pieces(p, a, b, s, "A", "B");
    return make_boqd(std::move(g), union_of(s.ambient(), pieces));
}

BOQDData boqd_dual(const BOQDData& a) {
    S2Module g = s2_dual(a.gens);
    Arity3Space s(g);
    auto r = Subspace::from_rows(s.ambient(), orthogonal_rows(a.r.int_rows(), a.space.dim()));
    return make_boqd(std::move(g), r);
}

bool same_boqd(const BOQDData& a, const BOQDData& b) {
    if (a.gens.space.degrees() != b.gens.space.degrees()) return false;
    if (a.gens.action.matrix() != b.gens.action.matrix()) return false;
    return a.r == b.r.relabel(a.space.ambient());
}

// ------------------------------------------------------------ checks

Report boqd_phi_check(const BOQDData& a, const BOQDData& a2, const BOQDData& b, const BOQDData& b2) {
    Report rep;
    rep.suite = "boqd-phi";
    auto ua = boqd_product(BoqdProduct::UCirc, a, a2);
    auto ub = boqd_product(BoqdProduct::UCirc, b, b2);
    auto src = boqd_product(BoqdProduct::Black, ua, ub);
    auto tgt = boqd_product(BoqdProduct::UCirc, boqd_product(BoqdProduct::Black, a, b),
                            boqd_product(BoqdProduct::Black, a2, b2));
    auto f = relabel_map(pr14(a.gens.space, a2.gens.space, b.gens.space, b2.gens.space),
                         src.gens.space.ambient(), tgt.gens.space.ambient());
    check_equivariant(rep, "phi: equivariant", f, src, tgt);
    MorphismRun run{&rep, "phi: ", &src, &tgt, arity3_map(f, src.space, tgt.space)};
    auto pa = sum_pieces(BoqdProduct::UCirc, a, a2, ua.space, "A", "A'");
    auto pb = sum_pieces(BoqdProduct::UCirc, b, b2, ub.space, "B", "B'");
    for (const auto& x : pa)
        for (const auto& y : pb)
            run.piece("Psi(" + x.name + " x " + y.name + ")", psi_span(ua.space, x.rows, ub.space, y.rows, src.space));
    return rep;
}

Report boqd_psi_check(const BOQDData& a, const BOQDData& a2, const BOQDData& b, const BOQDData& b2) {
    Report rep;
    rep.suite = "boqd-psi";
    auto wa = boqd_product(BoqdProduct::White, a, a2);
    auto wb = boqd_product(BoqdProduct::White, b, b2);
    auto src = boqd_product(BoqdProduct::Circ, wa, wb);
    auto tgt = boqd_product(BoqdProduct::White, boqd_product(BoqdProduct::Circ, a, b),
                            boqd_product(BoqdProduct::Circ, a2, b2));
    auto f = inj14(a.gens.space, b.gens.space, a2.gens.space, b2.gens.space);
    morphism_cases(rep, "psi: ", src, tgt, f, sum_pieces(BoqdProduct::Circ, wa, wb, src.space, "AA'", "BB'"));
    return rep;
}

Report boqd_quintuple_check(BoqdProduct outer, BoqdProduct inner, const BOQDData& a, const BOQDData& a2,
                            const BOQDData& b, const BOQDData& b2) {
    if (!product_is_tensor(outer) || product_is_tensor(inner) || inner == BoqdProduct::UCirc ||
        inner == BoqdProduct::Circ)
        throw std::invalid_argument("quintuple: outer must be Black/White, inner Vee/Oplus/TriL/TriR");
    Report rep;
    rep.suite = "boqd-quintuple";
    std::string tag = boqd_product_name(outer) + "/" + boqd_product_name(inner) + " ";
    {
        auto src = boqd_product(outer, boqd_product(inner, a, a2), boqd_product(inner, b, b2));
        auto tgt = boqd_product(inner, boqd_product(outer, a, b), boqd_product(outer, a2, b2));
        auto f = pr14(a.gens.space, a2.gens.space, b.gens.space, b2.gens.space);
        morphism_cases(rep, tag + "lax: ", src, tgt, f, {});
    }
    {
        auto ab = boqd_product(outer, a, b), ab2 = boqd_product(outer, a2, b2);
        auto src = boqd_product(inner, ab, ab2);
        auto tgt = boqd_product(outer, boqd_product(inner, a, a2), boqd_product(inner, b, b2));
        auto f = inj14(a.gens.space, a2.gens.space, b.gens.space, b2.gens.space);
        morphism_cases(rep, tag + "colax: ", src, tgt, f, sum_pieces(inner, ab, ab2, src.space, "AB", "A'B'"));
    }
    return rep;
}

Report koszul_involution_check(const BOQDData& a, const BOQDData& b) {
    Report rep;
    rep.suite = "boqd-involutions";
    auto da = boqd_dual(a), db = boqd_dual(b);
    const std::pair<BoqdProduct, BoqdProduct> pairs[] = {{BoqdProduct::Vee, BoqdProduct::Oplus},
                                                         {BoqdProduct::TriL, BoqdProduct::TriR},
                                                         {BoqdProduct::UCirc, BoqdProduct::Circ}};
    for (const auto& [p, q] : pairs) {
        auto lhs = boqd_dual(boqd_product(p, a, b));
        auto rhs = boqd_product(q, da, db);
        CaseResult c;
        c.name = "(" + boqd_product_name(p) + ")* = " + boqd_product_name(q) + " of duals";
        bool gens_ok = lhs.gens.space.degrees() == rhs.gens.space.degrees() &&
                       lhs.gens.action.matrix() == rhs.gens.action.matrix();
        auto rr = rhs.r.relabel(lhs.space.ambient());
        if (!gens_ok) {
            c.status = Status::Fail;
            c.details = "generator modules differ";
        } else if (auto w = lhs.r.first_outside(rr)) {
            c.status = Status::Fail;
            c.details = "product of duals has a relation outside the dual";
            c.witness = witness_json(lhs.space, *w);
        } else if (auto w2 = rr.first_outside(lhs.r)) {
            c.status = Status::Fail;
            c.details = "dual has a relation outside the product of duals";
            c.witness = witness_json(lhs.space, *w2);
        } else {
            c.details = "dim R = " + std::to_string(lhs.r.dim());
        }
        rep.add(std::move(c));
    }
    return rep;
}

// ------------------------------------------------------------ random

S2Module random_s2_module(Rng& rng, int max_dim, const std::string& prefix) {
    GradedSpace v = random_graded_space(rng, max_dim, 0, 1, prefix);
    std::size_t n = v.dim();
    // P = S D S⁻¹ with S unitriangular inside each degree block.
    std::vector<std::vector<Scalar>> s(n, std::vector<Scalar>(n)), dmat(n, std::vector<Scalar>(n));
    for (std::size_t i = 0; i < n; ++i) {
        s[i][i] = 1;
        dmat[i][i] = rng.coin() ? 1 : -1;
        for (std::size_t j = i + 1; j < n; ++j)
            if (v.degree(i) == v.degree(j)) s[i][j] = static_cast<long>(rng.uniform(-1, 1));
    }
    // S⁻¹ by back substitution.
    std::vector<std::vector<Scalar>> inv(n, std::vector<Scalar>(n));
    for (std::size_t c = 0; c < n; ++c)
        for (std::size_t ii = n; ii-- > 0;) {
            Scalar x = ii == c ? 1 : 0;
            for (std::size_t k = ii + 1; k < n; ++k) x -= s[ii][k] * inv[k][c];
            inv[ii][c] = x;
        }
    std::vector<std::vector<Scalar>> p(n, std::vector<Scalar>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) p[i][j] += s[i][k] * dmat[k][k] * inv[k][j];
    auto act = LinearMap::from_dense(v.ambient(), v.ambient(), p);
    return S2Module(std::move(v), std::move(act));
}

BOQDData random_boqd(Rng& rng, int max_dim, const std::string& prefix) {
    S2Module m = random_s2_module(rng, max_dim, prefix);
    Arity3Space s(m);
    std::vector<QRow> rows;
    if (s.dim() > 0) {
        int k = static_cast<int>(rng.uniform(0, 2));
        for (int t = 0; t < k; ++t) {
            std::map<std::uint32_t, Scalar> acc;
            int terms = static_cast<int>(rng.uniform(1, 2));
            for (int u = 0; u < terms; ++u) {
                auto col = static_cast<std::uint32_t>(rng.uniform(0, static_cast<std::int64_t>(s.dim()) - 1));
                acc[col] += static_cast<long>(rng.uniform(1, 2)) * (rng.coin() ? 1 : -1);
            }
            rows.push_back(from_map(acc));
        }
    }
    return make_boqd_closed(std::move(m), rows);
}

// ------------------------------------------------------------ json

Json boqd_to_json(const BOQDData& a) {
    Json j;
    j["generators"] = graded_to_json(a.gens.space);
    Json act = Json::array();
    for (std::size_t c = 0; c < a.dim(); ++c) act.push_back(scalar_row_json(a.gens.action.column(c), a.dim()));
    j["action"] = act;
    Json rel = Json::array();
    for (const auto& r : a.r.qrows()) rel.push_back(scalar_row_json(r, a.space.dim()));
    j["relations"] = rel;
    return j;
}

BOQDData boqd_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("generators")) throw ParseError("boqd: missing generators");
    GradedSpace v = graded_from_json(j.at("generators"));
    std::vector<QRow> cols;
    if (j.contains("action")) {
        const auto& act = j.at("action");
        if (!act.is_array() || act.size() != v.dim()) throw ParseError("boqd: action must list one column per generator");
        for (const auto& c : act) cols.push_back(scalar_row_from_json(c, v.dim()));
    } else {
        for (std::size_t i = 0; i < v.dim(); ++i) cols.push_back(unit_row(i));
    }
    LinearMap m(v.ambient(), v.ambient(), std::move(cols));
    S2Module g(std::move(v), std::move(m));
    Arity3Space s(g);
    std::vector<QRow> rows;
    if (j.contains("relations"))
        for (const auto& r : j.at("relations")) rows.push_back(scalar_row_from_json(r, s.dim()));
    return make_boqd(std::move(g), rows);
}

}  // namespace qdk
