#include "qdk/operad.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace qdk {

std::string family_kind_name(FamilyKind k) {
    switch (k) {
        case FamilyKind::BKW: return "BKW";
        case FamilyKind::DK: return "DK";
        case FamilyKind::HG: return "HG";
        case FamilyKind::RHG: return "RHG";
        case FamilyKind::EHKR: return "EHKR";
        case FamilyKind::LG: return "LG";
        case FamilyKind::LHG: return "LHG";
    }
    return "?";
}

FamilyKind parse_family_kind(const std::string& s) {
    for (auto k : {FamilyKind::BKW, FamilyKind::DK, FamilyKind::HG, FamilyKind::RHG, FamilyKind::EHKR, FamilyKind::LG,
                   FamilyKind::LHG})
        if (family_kind_name(k) == s) return k;
    throw FamilyError("unknown family '" + s + "'");
}

std::string generator_label(const std::string& letter, const Hyperedge& e) {
    bool wide = std::any_of(e.begin(), e.end(), [](int v) { return v > 9; });
    std::string s = letter;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (wide && i) s += ".";
        s += std::to_string(e[i]);
    }
    return s;
}

const QuadraticData& OperadFamily::component(int n) const {
    if (n < 0 || n > max_arity) throw ArityError(name + ": arity " + std::to_string(n) + " out of range");
    return comps[static_cast<std::size_t>(n)];
}

std::optional<std::size_t> OperadFamily::index_of(int n, const Hyperedge& e) const {
    const auto& g = gens.at(static_cast<std::size_t>(n));
    auto it = std::lower_bound(g.begin(), g.end(), e);
    if (it == g.end() || *it != e) return std::nullopt;
    return static_cast<std::size_t>(it - g.begin());
}

LinearMap OperadFamily::comp(int n, int m, int p) const {
    int N = n + m - 1;
    if (p < 1 || p > n) throw ArityError(name + ": slot " + std::to_string(p) + " outside 1.." + std::to_string(n));
    if (m < 0 || n > max_arity || m > max_arity || N > max_arity || N < 0)
        throw ArityError(name + ": arities exceed the truncation");
    if (m < min_inner_arity()) throw ArityError(name + ": no insertion of arity 0 in a linear family");
    const auto& a = component(n).v;
    const auto& b = component(m).v;
    std::vector<QRow> cols;
    cols.reserve(a.dim() + b.dim());
    for (std::size_t i = 0; i < a.dim(); ++i) cols.push_back(rule(n, m, p, true, i));
    for (std::size_t i = 0; i < b.dim(); ++i) cols.push_back(rule(n, m, p, false, i));
    return LinearMap(direct_sum(a, b).ambient(), component(N).v.ambient(), std::move(cols));
}

LinearMap OperadFamily::action(int n, const std::vector<int>& sigma) const {
    if (static_cast<int>(sigma.size()) != n) throw ArityError("permutation length differs from arity");
    std::vector<int> inv(static_cast<std::size_t>(n) + 1, 0);
    for (int v = 1; v <= n; ++v) inv[static_cast<std::size_t>(sigma[static_cast<std::size_t>(v - 1)])] = v;
    const auto& g = gens.at(static_cast<std::size_t>(n));
    std::vector<QRow> cols;
    for (const auto& e : g) {
        Hyperedge img;
        for (int v : e) img.push_back(inv[static_cast<std::size_t>(v)]);
        std::sort(img.begin(), img.end());
        auto idx = index_of(n, img);
        if (!idx) throw IndexError(name + ": action leaves the generator set");
        cols.push_back({{static_cast<std::uint32_t>(*idx), Scalar(1)}});
    }
    auto amb = component(n).v.ambient();
    return LinearMap(amb, amb, std::move(cols));
}

namespace {

std::vector<Hyperedge> subsets(int n, int k) {
    std::vector<Hyperedge> out;
    if (k > n || k <= 0) return out;
    Hyperedge c(static_cast<std::size_t>(k));
    std::iota(c.begin(), c.end(), 1);
    while (true) {
        out.push_back(c);
        int i = k - 1;
        while (i >= 0 && c[static_cast<std::size_t>(i)] == n - k + i + 1) --i;
        if (i < 0) break;
        ++c[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j) c[static_cast<std::size_t>(j)] = c[static_cast<std::size_t>(j - 1)] + 1;
    }
    return out;
}

std::vector<Hyperedge> intervals(int n, int k) {
    std::vector<Hyperedge> out;
    for (int i = 1; i + k - 1 <= n; ++i) {
        Hyperedge e;
        for (int j = 0; j < k; ++j) e.push_back(i + j);
        out.push_back(e);
    }
    return out;
}

QRow wedge(const GradedSpace& v, std::size_t a, std::size_t b) { return sym_element(v, a, b, -1); }

bool disjoint(const Hyperedge& a, const Hyperedge& b) {
    for (int x : a)
        if (std::find(b.begin(), b.end(), x) != b.end()) return false;
    return true;
}

// t_I ∧ t_J for disjoint I, J, and t_I ∧ Σ_{i∈I} t_{J∪{i}} for J a (k-1)-set off I.
std::vector<QRow> refined_relations(const GradedSpace& v, const std::vector<Hyperedge>& g, int n, int k) {
    std::vector<QRow> rel;
    auto find = [&](const Hyperedge& e) {
        auto it = std::lower_bound(g.begin(), g.end(), e);
        return static_cast<std::size_t>(it - g.begin());
    };
    for (std::size_t a = 0; a < g.size(); ++a)
        for (std::size_t b = a + 1; b < g.size(); ++b)
            if (disjoint(g[a], g[b])) rel.push_back(wedge(v, a, b));
    for (std::size_t a = 0; a < g.size(); ++a)
        for (const auto& j : subsets(n, k - 1)) {
            if (!disjoint(g[a], j)) continue;
            QRow sum;
            for (int i : g[a]) {
                Hyperedge e = j;
                e.push_back(i);
                std::sort(e.begin(), e.end());
                qrow_axpy(sum, Scalar(1), wedge(v, a, find(e)));
            }
            if (!sum.empty()) rel.push_back(sum);
        }
    return rel;
}

QRow single(std::optional<std::size_t> idx) {
    if (!idx) throw IndexError("composition leaves the generator set");
    return {{static_cast<std::uint32_t>(*idx), Scalar(1)}};
}

void install_rule(OperadFamily& f) {
    bool linear = f.kind == FamilyKind::LG || f.kind == FamilyKind::LHG;
    int k = f.k;
    // the rule only reads gens, which are fixed at construction; capture them by value
    auto gens = f.gens;
    auto lookup = [gens](int n, const Hyperedge& e) -> std::optional<std::size_t> {
        const auto& g = gens.at(static_cast<std::size_t>(n));
        auto it = std::lower_bound(g.begin(), g.end(), e);
        if (it == g.end() || *it != e) return std::nullopt;
        return static_cast<std::size_t>(it - g.begin());
    };
    if (linear) {
        f.rule = [gens, lookup, k](int n, int m, int p, bool outer, std::size_t idx) -> QRow {
            int N = n + m - 1;
            if (!outer) {
                Hyperedge e = gens.at(static_cast<std::size_t>(m)).at(idx);
                for (auto& x : e) x += p - 1;
                return single(lookup(N, e));
            }
            Hyperedge e = gens.at(static_cast<std::size_t>(n)).at(idx);
            int i = e.front();
            if (p <= i) {
                for (auto& x : e) x += m - 1;
                return single(lookup(N, e));
            }
            // an interior slot filled with the unit keeps the hyperedge
            if (p < i + k - 1) return m == 1 ? single(lookup(N, e)) : QRow{};
            return single(lookup(N, e));
        };
    } else {
        f.rule = [gens, lookup](int n, int m, int p, bool outer, std::size_t idx) -> QRow {
            int N = n + m - 1;
            if (!outer) {
                Hyperedge e = gens.at(static_cast<std::size_t>(m)).at(idx);
                for (auto& x : e) x += p - 1;
                return single(lookup(N, e));
            }
            const Hyperedge& e = gens.at(static_cast<std::size_t>(n)).at(idx);
            auto at = std::find(e.begin(), e.end(), p);
            if (at == e.end()) {
                Hyperedge img = e;
                for (auto& x : img)
                    if (x > p) x += m - 1;
                return single(lookup(N, img));
            }
            // p is a vertex of the hyperedge: reconnect it to every vertex of the inserted block
            std::size_t l = static_cast<std::size_t>(at - e.begin());
            QRow out;
            for (int j = 0; j < m; ++j) {
                Hyperedge img = e;
                img[l] = p + j;
                for (std::size_t t = l + 1; t < img.size(); ++t) img[t] += m - 1;
                qrow_axpy(out, Scalar(1), single(lookup(N, img)));
            }
            return out;
        };
    }
}

}  // namespace

OperadFamily build_family(FamilyKind kind, int k, int max_arity) {
    if (kind == FamilyKind::BKW || kind == FamilyKind::DK || kind == FamilyKind::LG) k = 2;
    if (kind == FamilyKind::EHKR) k = 3;
    if (k < 2) throw FamilyError("hyperedge size must be at least 2");
    if (max_arity < k) throw FamilyError("max_arity must be at least k");
    OperadFamily f;
    f.kind = kind;
    f.k = k;
    f.max_arity = max_arity;
    bool linear = kind == FamilyKind::LG || kind == FamilyKind::LHG;
    f.symmetric = !linear;
    bool param = kind == FamilyKind::HG || kind == FamilyKind::RHG || kind == FamilyKind::LHG;
    f.name = family_kind_name(kind) + (param ? "(" + std::to_string(k) + ")" : "");
    std::string letter = kind == FamilyKind::LG ? "e" : "t";
    for (int n = 0; n <= max_arity; ++n) {
        auto g = linear ? intervals(n, k) : subsets(n, k);
        std::vector<Generator> basis;
        for (const auto& e : g) basis.push_back({generator_label(letter, e), 0});
        GradedSpace v(basis);
        QuadraticData q;
        switch (kind) {
            case FamilyKind::DK:
            case FamilyKind::RHG:
            case FamilyKind::EHKR: q = make_qd(Flavor::Skew, v, refined_relations(v, g, n, k)); break;
            default: q = make_qd(Flavor::Skew, v, square_split(v).alt); break;
        }
        f.gens.push_back(std::move(g));
        f.comps.push_back(std::move(q));
    }
    install_rule(f);
    return f;
}

OperadFamily build_family(const std::string& name, int k, int max_arity) {
    return build_family(parse_family_kind(name), k, max_arity);
}

Vector compose(const OperadFamily& f, int n, int m, int p, const Vector& x) { return f.comp(n, m, p).apply(x); }

namespace {

QRow shifted(const QRow& x, std::size_t off) {
    QRow out = x;
    for (auto& e : out) e.col += static_cast<std::uint32_t>(off);
    return out;
}

QRow unit_row(std::size_t i) { return {{static_cast<std::uint32_t>(i), Scalar(1)}}; }

std::string row_string(const QRow& r, const GradedSpace& v) {
    if (r.empty()) return "0";
    std::string s;
    for (std::size_t i = 0; i < r.size(); ++i) {
        if (i) s += " + ";
        if (r[i].val != 1) s += to_string(r[i].val) + "*";
        s += v.label(r[i].col);
    }
    return s;
}

struct Tally {
    explicit Tally(std::string n) : name(std::move(n)) {}
    std::string name;
    std::size_t checked = 0, skipped = 0;
    std::optional<CaseResult> failure;

    void fail(const std::string& what, Json w) {
        if (!failure) failure = CaseResult{name, Status::Fail, what, std::move(w)};
    }
    void emit(Report& r) const {
        if (failure) r.add(*failure);
        else r.add(name, true, std::to_string(checked) + " instances");
        if (skipped)
            r.add({name + " (output arity > nmax)", Status::Skipped, std::to_string(skipped) + " instances",
                   std::nullopt});
    }
};

Json instance(std::initializer_list<std::pair<const char*, int>> kv) {
    Json j;
    for (auto& [k, v] : kv) j[k] = v;
    return j;
}

}  // namespace

Report verify_axioms(const OperadFamily& f, int nmax) {
    if (nmax > f.max_arity) throw ArityError("nmax exceeds the family truncation");
    Report rep;
    rep.suite = "operad-axioms " + f.name;
    auto dim = [&](int n) { return f.component(n).dim(); };

    Tally seq{"sequential"};
    const int lo = f.min_inner_arity();
    for (int n = 1; n <= nmax; ++n)
        for (int m = 1; m <= nmax; ++m)
            for (int l = lo; l <= nmax; ++l)
                for (int p = 1; p <= n; ++p)
                    for (int q = 1; q <= m; ++q) {
                        int N = n + m + l - 2;
                        if (N > nmax || n + m - 1 > nmax || m + l - 1 > nmax || N < 0) {
                            ++seq.skipped;
                            continue;
                        }
                        ++seq.checked;
                        auto c1 = f.comp(n, m, p), c2 = f.comp(n + m - 1, l, p + q - 1);
                        auto d1 = f.comp(m, l, q), d2 = f.comp(n, m + l - 1, p);
                        std::size_t nd = dim(n), md = dim(m), ld = dim(l), nmd = dim(n + m - 1);
                        auto fail = [&](const char* which, std::size_t g, const QRow& a, const QRow& b) {
                            Json w = instance({{"n", n}, {"m", m}, {"l", l}, {"p", p}, {"q", q}});
                            w["summand"] = which;
                            w["generator"] = static_cast<int>(g);
                            w["lhs"] = row_string(a, f.component(N).v);
                            w["rhs"] = row_string(b, f.component(N).v);
                            seq.fail("sequential axiom fails", w);
                        };
                        for (std::size_t g = 0; g < nd; ++g) {
                            auto a = c2.apply(c1.apply(unit_row(g)));
                            auto b = d2.apply(unit_row(g));
                            if (a != b) fail("outer", g, a, b);
                        }
                        for (std::size_t g = 0; g < md; ++g) {
                            auto a = c2.apply(c1.apply(unit_row(nd + g)));
                            auto b = d2.apply(shifted(d1.apply(unit_row(g)), nd));
                            if (a != b) fail("middle", g, a, b);
                        }
                        for (std::size_t g = 0; g < ld; ++g) {
                            auto a = c2.apply(unit_row(nmd + g));
                            auto b = d2.apply(shifted(d1.apply(unit_row(md + g)), nd));
                            if (a != b) fail("inner", g, a, b);
                        }
                    }
    seq.emit(rep);

    Tally par{"parallel"};
    for (int n = 2; n <= nmax; ++n)
        for (int m = lo; m <= nmax; ++m)
            for (int l = lo; l <= nmax; ++l)
                for (int p = 1; p <= n; ++p)
                    for (int q = p + 1; q <= n; ++q) {
                        int N = n + m + l - 2;
                        if (N > nmax || n + m - 1 > nmax || n + l - 1 > nmax || N < 0) {
                            ++par.skipped;
                            continue;
                        }
                        ++par.checked;
                        auto c1 = f.comp(n, m, p), c2 = f.comp(n + m - 1, l, q + m - 1);
                        auto d1 = f.comp(n, l, q), d2 = f.comp(n + l - 1, m, p);
                        std::size_t nd = dim(n), md = dim(m), ld = dim(l), nmd = dim(n + m - 1), nld = dim(n + l - 1);
                        auto fail = [&](const char* which, std::size_t g, const QRow& a, const QRow& b) {
                            Json w = instance({{"n", n}, {"m", m}, {"l", l}, {"p", p}, {"q", q}});
                            w["summand"] = which;
                            w["generator"] = static_cast<int>(g);
                            w["lhs"] = row_string(a, f.component(N).v);
                            w["rhs"] = row_string(b, f.component(N).v);
                            par.fail("parallel axiom fails", w);
                        };
                        for (std::size_t g = 0; g < nd; ++g) {
                            auto a = c2.apply(c1.apply(unit_row(g)));
                            auto b = d2.apply(d1.apply(unit_row(g)));
                            if (a != b) fail("outer", g, a, b);
                        }
                        for (std::size_t g = 0; g < md; ++g) {
                            auto a = c2.apply(c1.apply(unit_row(nd + g)));
                            auto b = d2.apply(unit_row(nld + g));
                            if (a != b) fail("first", g, a, b);
                        }
                        for (std::size_t g = 0; g < ld; ++g) {
                            auto a = c2.apply(unit_row(nmd + g));
                            auto b = d2.apply(d1.apply(unit_row(nd + g)));
                            if (a != b) fail("second", g, a, b);
                        }
                    }
    par.emit(rep);

    Tally unit{"unit"};
    bool unit_zero = dim(1) == 0;
    if (!unit_zero) unit.fail("arity-1 component is not (0,0)", Json::object());
    for (int n = 0; n <= nmax; ++n) {
        for (int p = 1; p <= n; ++p) {
            ++unit.checked;
            auto c = f.comp(n, 1, p);
            for (std::size_t g = 0; g < dim(n); ++g)
                if (c.apply(unit_row(g)) != unit_row(g))
                    unit.fail("right unit law fails", instance({{"n", n}, {"p", p}, {"generator", static_cast<int>(g)}}));
        }
        if (n < f.min_inner_arity()) continue;
        ++unit.checked;
        auto c = f.comp(1, n, 1);
        for (std::size_t g = 0; g < dim(n); ++g)
            if (c.apply(unit_row(dim(1) + g)) != unit_row(g))
                unit.fail("left unit law fails", instance({{"n", n}, {"generator", static_cast<int>(g)}}));
    }
    unit.emit(rep);

    if (!f.symmetric) {
        rep.add({"equivariance", Status::Skipped, "nonsymmetric family", std::nullopt});
        return rep;
    }

    Tally top{"equivariance-top"};
    for (int n = 2; n <= nmax; ++n)
        for (int m = 0; m <= nmax; ++m) {
            int N = n + m - 1;
            if (N > nmax) {
                top.skipped += static_cast<std::size_t>(n * (n - 1));
                continue;
            }
            for (int t = 1; t < n; ++t)
                for (int p = 1; p <= n; ++p) {
                    ++top.checked;
                    std::vector<int> sigma(static_cast<std::size_t>(n));
                    std::iota(sigma.begin(), sigma.end(), 1);
                    std::swap(sigma[static_cast<std::size_t>(t - 1)], sigma[static_cast<std::size_t>(t)]);
                    int sp = sigma[static_cast<std::size_t>(p - 1)];
                    auto L = [m](int q, int v) { return v < q ? v : v + m - 1; };
                    std::vector<int> pi(static_cast<std::size_t>(N));
                    for (int v = 1; v <= n; ++v)
                        if (v != p) pi[static_cast<std::size_t>(L(p, v) - 1)] = L(sp, sigma[static_cast<std::size_t>(v - 1)]);
                    for (int u = 1; u <= m; ++u) pi[static_cast<std::size_t>(p + u - 2)] = sp + u - 1;
                    auto act_s = f.action(n, sigma), act_pi = f.action(N, pi);
                    auto c = f.comp(n, m, p), d = f.comp(n, m, sp);
                    for (std::size_t g = 0; g < dim(n) + dim(m); ++g) {
                        QRow x = g < dim(n) ? act_s.apply(unit_row(g)) : unit_row(g);
                        auto a = c.apply(x);
                        auto b = act_pi.apply(d.apply(unit_row(g)));
                        if (a != b) {
                            Json w = instance({{"n", n}, {"m", m}, {"p", p}, {"transposition", t}});
                            w["generator"] = static_cast<int>(g);
                            w["lhs"] = row_string(a, f.component(N).v);
                            w["rhs"] = row_string(b, f.component(N).v);
                            top.fail("top equivariance fails", w);
                        }
                    }
                }
        }
    top.emit(rep);

    Tally bottom{"equivariance-bottom"};
    for (int n = 1; n <= nmax; ++n)
        for (int m = 2; m <= nmax; ++m) {
            int N = n + m - 1;
            if (N > nmax) {
                bottom.skipped += static_cast<std::size_t>(n * (m - 1));
                continue;
            }
            for (int t = 1; t < m; ++t)
                for (int p = 1; p <= n; ++p) {
                    ++bottom.checked;
                    std::vector<int> tau(static_cast<std::size_t>(m));
                    std::iota(tau.begin(), tau.end(), 1);
                    std::swap(tau[static_cast<std::size_t>(t - 1)], tau[static_cast<std::size_t>(t)]);
                    std::vector<int> pi(static_cast<std::size_t>(N));
                    std::iota(pi.begin(), pi.end(), 1);
                    for (int u = 1; u <= m; ++u)
                        pi[static_cast<std::size_t>(p + u - 2)] = p + tau[static_cast<std::size_t>(u - 1)] - 1;
                    auto act_t = f.action(m, tau), act_pi = f.action(N, pi);
                    auto c = f.comp(n, m, p);
                    for (std::size_t g = 0; g < dim(n) + dim(m); ++g) {
                        QRow x = g < dim(n) ? unit_row(g) : shifted(act_t.apply(unit_row(g - dim(n))), dim(n));
                        auto a = c.apply(x);
                        auto b = act_pi.apply(c.apply(unit_row(g)));
                        if (a != b) {
                            Json w = instance({{"n", n}, {"m", m}, {"p", p}, {"transposition", t}});
                            w["generator"] = static_cast<int>(g);
                            w["lhs"] = row_string(a, f.component(N).v);
                            w["rhs"] = row_string(b, f.component(N).v);
                            bottom.fail("bottom equivariance fails", w);
                        }
                    }
                }
        }
    bottom.emit(rep);

    Tally acts{"action"};
    for (int n = 2; n <= nmax; ++n) {
        // Coxeter relations on adjacent transpositions and relation preservation
        auto amb = f.component(n).v.ambient();
        for (int t = 1; t < n; ++t) {
            ++acts.checked;
            std::vector<int> s(static_cast<std::size_t>(n));
            std::iota(s.begin(), s.end(), 1);
            std::swap(s[static_cast<std::size_t>(t - 1)], s[static_cast<std::size_t>(t)]);
            auto a = f.action(n, s);
            if (!(a.compose(a) == LinearMap::identity(amb)))
                acts.fail("transposition is not an involution", instance({{"n", n}, {"t", t}}));
            auto chk = check_morphism(a, f.component(n), f.component(n));
            if (!chk.ok) acts.fail("action does not preserve relations", instance({{"n", n}, {"t", t}}));
        }
    }
    acts.emit(rep);
    return rep;
}

Report verify_relation_morphism(const OperadFamily& f, int nmax) {
    if (nmax > f.max_arity) throw ArityError("nmax exceeds the family truncation");
    Report rep;
    rep.suite = "relation-morphism " + f.name;
    Tally t{"relation_morphism"};
    for (int n = 1; n <= nmax; ++n)
        for (int m = f.min_inner_arity(); m <= nmax; ++m) {
            int N = n + m - 1;
            if (N > nmax) {
                t.skipped += static_cast<std::size_t>(n);
                continue;
            }
            auto src = monoidal_product(Product::Oplus, f.component(n), f.component(m));
            for (int p = 1; p <= n; ++p) {
                ++t.checked;
                auto chk = check_morphism(f.comp(n, m, p), src, f.component(N));
                if (!chk.ok) {
                    Json w = instance({{"n", n}, {"m", m}, {"p", p}});
                    w["reason"] = chk.reason;
                    if (chk.counterexample)
                        w["vector"] = row_string(chk.counterexample->entries(), tensor_product(f.component(N).v,
                                                                                            f.component(N).v));
                    t.fail("composition is not a morphism", w);
                }
            }
        }
    t.emit(rep);
    return rep;
}

OperadFamily minimal_suboperad(const OperadFamily& shell, int nmax, Rng* schedule) {
    if (nmax > shell.max_arity) throw ArityError("nmax exceeds the shell truncation");
    OperadFamily f = shell;
    f.name = "min(" + shell.name + ")";
    f.max_arity = nmax;
    f.gens.resize(static_cast<std::size_t>(nmax) + 1);
    f.comps.resize(static_cast<std::size_t>(nmax) + 1);
    for (auto& c : f.comps) c.r = Subspace::zero(c.square);

    struct Step {
        int a, b, p;
    };
    std::vector<Step> steps;
    for (int a = 1; a <= nmax; ++a)
        for (int b = f.min_inner_arity(); b <= nmax; ++b)
            if (a + b - 1 <= nmax)
                for (int p = 1; p <= a; ++p) steps.push_back({a, b, p});

    auto close_under_action = [&](int n) {
        if (!f.symmetric || n < 2) return;
        bool grew = true;
        while (grew) {
            grew = false;
            for (int t = 1; t < n; ++t) {
                std::vector<int> s(static_cast<std::size_t>(n));
                std::iota(s.begin(), s.end(), 1);
                std::swap(s[static_cast<std::size_t>(t - 1)], s[static_cast<std::size_t>(t)]);
                auto& c = f.comps[static_cast<std::size_t>(n)];
                auto a = f.action(n, s);
                auto img = apply_map(kron(a, a, c.square, c.square), c.r);
                auto next = sum(c.r, img);
                if (next.dim() > c.r.dim()) {
                    c.r = next;
                    grew = true;
                }
            }
        }
    };

    bool changed = true;
    while (changed) {
        changed = false;
        if (schedule) schedule->shuffle(steps);
        for (const auto& s : steps) {
            int N = s.a + s.b - 1;
            auto src = monoidal_product(Product::Oplus, f.comps[static_cast<std::size_t>(s.a)],
                                        f.comps[static_cast<std::size_t>(s.b)]);
            auto& tgt = f.comps[static_cast<std::size_t>(N)];
            auto c = f.comp(s.a, s.b, s.p);
            auto img = apply_map(kron(c, c, src.square, tgt.square), src.r);
            auto next = sum(tgt.r, img);
            if (next.dim() > tgt.r.dim()) {
                tgt.r = next;
                changed = true;
                close_under_action(N);
            }
        }
    }
    return f;
}

std::string inclusion_name(Inclusion i) {
    switch (i) {
        case Inclusion::Equal: return "EQUAL";
        case Inclusion::Proper: return "PROPER INCLUSION";
        case Inclusion::Reverse: return "REVERSE INCLUSION";
        case Inclusion::Incomparable: return "INCOMPARABLE";
    }
    return "?";
}

FamilyComparison compare_families(const OperadFamily& a, const OperadFamily& b, int nmax) {
    if (nmax > a.max_arity || nmax > b.max_arity) throw ArityError("nmax exceeds a family truncation");
    FamilyComparison out;
    out.report.suite = "compare " + a.name + " " + b.name;
    bool sub = true, sup = true;
    for (int n = 0; n <= nmax; ++n) {
        if (a.gens[static_cast<std::size_t>(n)] != b.gens[static_cast<std::size_t>(n)])
            throw IndexError("generator indexing differs in arity " + std::to_string(n));
        const auto& ra = a.component(n).r;
        auto rb = b.component(n).r.relabel(a.component(n).square);
        bool in = rb.contains(ra), out_ = ra.contains(rb);
        sub = sub && in;
        sup = sup && out_;
        std::string rel = in && out_ ? "equal" : in ? "proper inclusion" : out_ ? "reverse inclusion" : "incomparable";
        std::string det = "dim " + std::to_string(ra.dim()) + " vs " + std::to_string(rb.dim()) + ": " + rel;
        char name[32];
        std::snprintf(name, sizeof name, "arity %02d", n);
        out.report.add({name, in && out_ ? Status::Pass : Status::Info, det, std::nullopt});
    }
    out.verdict = sub && sup ? Inclusion::Equal : sub ? Inclusion::Proper : sup ? Inclusion::Reverse
                                                                              : Inclusion::Incomparable;
    if (sub || sup) {
        // the canonical inclusion commutes with the compositions iff the tables agree
        bool same = true;
        for (int n = 1; n <= nmax && same; ++n)
            for (int m = a.min_inner_arity(); m <= nmax && same; ++m)
                if (n + m - 1 <= nmax)
                    for (int p = 1; p <= n && same; ++p)
                        same = a.comp(n, m, p).matrix() == b.comp(n, m, p).matrix();
        out.report.add("inclusion_is_operad_morphism", same, same ? "composition tables agree" : "tables differ");
    }
    out.report.add({"verdict", Status::Info, inclusion_name(out.verdict), std::nullopt});
    return out;
}

std::vector<std::size_t> relation_dims(const OperadFamily& f, int nmax) {
    std::vector<std::size_t> d;
    for (int n = 0; n <= nmax; ++n) d.push_back(f.component(n).r.dim());
    return d;
}

Json family_to_json(const OperadFamily& f, int nmax) {
    Json j;
    j["name"] = f.name;
    j["kind"] = family_kind_name(f.kind);
    j["k"] = f.k;
    j["symmetric"] = f.symmetric;
    j["max_arity"] = nmax;
    Json ar = Json::array();
    for (int n = 0; n <= nmax; ++n) {
        Json a;
        a["n"] = n;
        Json labels = Json::array();
        for (const auto& g : f.component(n).v.basis()) labels.push_back(g.label);
        a["generators"] = labels;
        a["dim_V"] = f.component(n).dim();
        a["dim_R"] = f.component(n).r.dim();
        ar.push_back(a);
    }
    j["arities"] = ar;
    return j;
}

QuadraticData aos_qd(int n) {
    if (n < 0) throw ArityError("negative arity");
    auto edges = subsets(n, 2);
    std::vector<Generator> b;
    for (const auto& e : edges) b.push_back({generator_label("w", e), -1});
    GradedSpace v(b);
    auto idx = [&](int i, int j) {
        Hyperedge e{std::min(i, j), std::max(i, j)};
        return static_cast<std::size_t>(std::lower_bound(edges.begin(), edges.end(), e) - edges.begin());
    };
    std::vector<QRow> rel;
    for (const auto& t : subsets(n, 3)) {
        int i = t[0], j = t[1], k = t[2];
        // ω_ij ω_jk + ω_jk ω_ki + ω_ki ω_ij
        QRow r = sym_element(v, idx(i, j), idx(j, k), 1);
        qrow_axpy(r, Scalar(1), sym_element(v, idx(j, k), idx(k, i), 1));
        qrow_axpy(r, Scalar(1), sym_element(v, idx(k, i), idx(i, j), 1));
        rel.push_back(r);
    }
    return make_qd(Flavor::Symmetric, v, rel);
}

QuadraticData ehkr_pentagon_qd(int n, bool antisymmetric) {
    if (n < 0) throw ArityError("negative arity");
    auto triples = subsets(n, 3);
    std::vector<Generator> b;
    for (const auto& e : triples) b.push_back({generator_label("w", e), -1});
    GradedSpace v(b);
    // ω_{abc} -> (index, sign)
    auto omega = [&](int a, int bb, int c) {
        Hyperedge e{a, bb, c};
        int inv = (a > bb) + (a > c) + (bb > c);
        std::sort(e.begin(), e.end());
        auto i = static_cast<std::size_t>(std::lower_bound(triples.begin(), triples.end(), e) - triples.begin());
        return std::make_pair(i, antisymmetric && inv % 2 ? -1 : 1);
    };
    std::vector<QRow> rel;
    for (const auto& five : subsets(n, 5)) {
        std::vector<int> o = five;
        do {
            int i = o[0], j = o[1], k = o[2], l = o[3], m = o[4];
            std::pair<std::pair<std::size_t, int>, std::pair<std::size_t, int>> terms[5] = {
                {omega(i, j, k), omega(k, l, m)}, {omega(j, k, l), omega(l, m, i)}, {omega(k, l, m), omega(m, i, j)},
                {omega(l, m, i), omega(i, j, k)}, {omega(m, i, j), omega(j, k, l)}};
            QRow r;
            for (auto& [x, y] : terms)
                qrow_axpy(r, Scalar(x.second * y.second), sym_element(v, x.first, y.first, 1));
            if (!r.empty()) rel.push_back(r);
        } while (std::next_permutation(o.begin(), o.end()));
    }
    return make_qd(Flavor::Symmetric, v, rel);
}

Subspace ehkr_overlap_span(const QuadraticData& pent) {
    std::vector<Hyperedge> triples;
    std::vector<QRow> rows;
    // recover the triples from the labels' order: generators are the 3-subsets in lex order
    std::size_t g = pent.dim();
    int n = 0;
    while (static_cast<std::size_t>(n * (n - 1) * (n - 2) / 6) < g) ++n;
    triples = subsets(n, 3);
    if (triples.size() != g) throw IndexError("not a 3-subset generator set");
    for (std::size_t a = 0; a < g; ++a)
        for (std::size_t b = a + 1; b < g; ++b) {
            int common = 0;
            for (int x : triples[a])
                if (std::find(triples[b].begin(), triples[b].end(), x) != triples[b].end()) ++common;
            if (common == 2) rows.push_back(sym_element(pent.v, a, b, 1));
        }
    return Subspace::from_qrows(pent.square, rows);
}

}  // namespace qdk
