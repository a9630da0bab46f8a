#include "qdk/realize.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

namespace qdk {

std::string realization_name(Realization r) {
    switch (r) {
        case Realization::A: return "A";
        case Realization::S: return "S";
        case Realization::Tc: return "Tc";
        case Realization::Sc: return "Sc";
        case Realization::L: return "L";
    }
    return "?";
}

Realization parse_realization(const std::string& s) {
    for (auto r : {Realization::A, Realization::S, Realization::Tc, Realization::Sc, Realization::L})
        if (realization_name(r) == s) return r;
    throw FlavorMismatch("unknown realization '" + s + "'");
}

namespace {

std::size_t ipow(std::size_t n, int w) {
    std::size_t r = 1;
    for (int i = 0; i < w; ++i) r *= n;
    return r;
}

// Degree of the V^{⊗w} basis element with row-major index idx.
int tensor_degree(const GradedSpace& v, std::size_t idx, int w) {
    int d = 0;
    std::size_t n = v.dim();
    for (int i = 0; i < w; ++i) {
        d += v.degree(idx % n);
        idx /= n;
    }
    return d;
}

// x ⊗ y for x over V^{⊗a}, y over V^{⊗b} where nb = n^b.
QRow concat(const QRow& x, const QRow& y, std::size_t nb) {
    QRow out;
    out.reserve(x.size() * y.size());
    for (const auto& a : x)
        for (const auto& b : y)
            out.push_back({static_cast<std::uint32_t>(a.col * nb + b.col), a.val * b.val});
    return out;
}

// [x, y] = x⊗y - (-1)^{|x||y|} y⊗x.
QRow bracket(const QRow& x, int dx, std::size_t na, const QRow& y, int dy, std::size_t nb) {
    QRow out = concat(x, y, nb);
    qrow_axpy(out, Scalar(-parity_sign(static_cast<long long>(dx) * dy)), concat(y, x, na));
    return out;
}

QuadraticData lift_plain(Realization r, const QuadraticData& q) {
    if (q.flavor == Flavor::Plain) return q;
    if (r == Realization::A) return apply_functor(q.flavor == Flavor::Skew ? Functor::Lambda : Functor::ScriptS, q);
    if (r == Realization::Tc && q.flavor == Flavor::Symmetric) return apply_functor(Functor::Sigma, q);
    throw FlavorMismatch(realization_name(r) + " is not defined on " + flavor_name(q.flavor) + " data");
}

// ---------------------------------------------------------------- A
// Layered quotient: A^{(w)} = (A^{(w-1)}⊗V) / image(A^{(w-2)}⊗R).
struct AEngine {
    explicit AEngine(const QuadraticData& q) : q_(q), n_(q.dim()), rel_(q.r.qrows()) {}

    // Returns dims 0..wmax; span of the top-weight relations if requested.
    std::vector<std::size_t> run(int wmax, std::optional<Subspace>* top) {
        std::vector<std::size_t> dims;
        std::vector<std::vector<QRow>> nf;  // nf[w][c]: normal form of ambient column c
        dims.push_back(1);
        nf.push_back({QRow{{0, Scalar(1)}}});
        if (top && wmax == 0) *top = Subspace::zero(Ambient::coordinates(1));
        for (int w = 1; w <= wmax; ++w) {
            std::size_t ncols = dims[w - 1] * n_;
            RowEchelon e(ncols);
            if (w >= 2) {
                for (std::size_t b = 0; b < dims[w - 2]; ++b)
                    for (const auto& r : rel_) {
                        QRow row;
                        for (const auto& ent : r) {
                            std::size_t i = ent.col / n_, j = ent.col % n_;
                            const QRow& pre = nf[w - 1][b * n_ + i];
                            QRow piece;
                            piece.reserve(pre.size());
                            for (const auto& p : pre)
                                piece.push_back({static_cast<std::uint32_t>(p.col * n_ + j), p.val * ent.val});
                            // piece is sorted by p.col, and j is fixed
                            qrow_axpy(row, Scalar(1), piece);
                        }
                        if (!row.empty()) e.insert(row);
                    }
            }
            auto rows = e.reduced_rows();
            std::vector<std::int64_t> pos(ncols, -1);
            std::vector<char> is_pivot(ncols, 0);
            for (const auto& r : rows) is_pivot[r.front().col] = 1;
            std::size_t k = 0;
            for (std::size_t c = 0; c < ncols; ++c)
                if (!is_pivot[c]) pos[c] = static_cast<std::int64_t>(k++);
            std::vector<QRow> cur(ncols);
            for (std::size_t c = 0; c < ncols; ++c)
                if (!is_pivot[c]) cur[c] = {{static_cast<std::uint32_t>(pos[c]), Scalar(1)}};
            for (const auto& r : rows) {
                QRow q = to_qrow(r);
                QRow out;
                for (std::size_t t = 1; t < q.size(); ++t)
                    out.push_back({static_cast<std::uint32_t>(pos[q[t].col]), -q[t].val});
                cur[q.front().col] = std::move(out);
            }
            dims.push_back(k);
            nf.push_back(std::move(cur));
            if (top && w == wmax) *top = Subspace::from_echelon(Ambient::coordinates(ncols), e);
            // the previous-but-one layer is no longer needed
            if (w >= 2) nf[w - 2].clear();
        }
        return dims;
    }

    const QuadraticData& q_;
    std::size_t n_;
    std::vector<QRow> rel_;
};

// ---------------------------------------------------------------- S / Sc
struct Monomials {
    std::vector<std::vector<std::uint32_t>> list;
    std::map<std::vector<std::uint32_t>, std::uint32_t> index;
};

void gen_monomials(const GradedSpace& v, int w, std::uint32_t start, std::vector<std::uint32_t>& cur,
                   std::vector<std::vector<std::uint32_t>>& out) {
    if (static_cast<int>(cur.size()) == w) {
        out.push_back(cur);
        return;
    }
    for (std::uint32_t i = start; i < v.dim(); ++i) {
        bool odd = v.degree(i) % 2 != 0;
        if (odd && !cur.empty() && cur.back() == i) continue;
        cur.push_back(i);
        gen_monomials(v, w, i, cur, out);
        cur.pop_back();
    }
}

Monomials monomials(const GradedSpace& v, int w) {
    Monomials m;
    std::vector<std::uint32_t> cur;
    gen_monomials(v, w, 0, cur, m.list);
    for (std::uint32_t i = 0; i < m.list.size(); ++i) m.index[m.list[i]] = i;
    return m;
}

// Product of sorted monomials in the graded-commutative algebra; sign 0 if it vanishes.
int mono_multiply(const GradedSpace& v, const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b,
                  std::vector<std::uint32_t>& out) {
    out.clear();
    out.reserve(a.size() + b.size());
    long long inv = 0;
    std::size_t i = 0, j = 0;
    // count odd elements of a remaining when an odd element of b passes them
    std::vector<int> odd_suffix(a.size() + 1, 0);
    for (std::size_t t = a.size(); t-- > 0;) odd_suffix[t] = odd_suffix[t + 1] + (v.degree(a[t]) % 2 != 0);
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i] <= b[j])) {
            if (j < b.size() && a[i] == b[j] && v.degree(a[i]) % 2 != 0) return 0;
            out.push_back(a[i++]);
        } else {
            if (v.degree(b[j]) % 2 != 0) inv += odd_suffix[i];
            out.push_back(b[j++]);
        }
    }
    return (inv % 2 == 0) ? 1 : -1;
}

// R ⊂ V^{⊗2} written in the weight-2 monomial basis.
std::vector<QRow> relations_as_polys(const QuadraticData& q, const Monomials& m2) {
    std::size_t n = q.dim();
    std::vector<QRow> out;
    for (const auto& r : q.r.qrows()) {
        std::map<std::uint32_t, Scalar> acc;
        for (const auto& e : r) {
            std::uint32_t i = static_cast<std::uint32_t>(e.col / n), j = static_cast<std::uint32_t>(e.col % n);
            int s = 1;
            if (i > j) {
                std::swap(i, j);
                s = parity_sign(static_cast<long long>(q.v.degree(i)) * q.v.degree(j));
            }
            if (i == j && q.v.degree(i) % 2 != 0) continue;
            acc[m2.index.at({i, j})] += s * e.val;
        }
        QRow p;
        for (auto& [c, x] : acc)
            if (x != 0) p.push_back({c, x});
        if (!p.empty()) out.push_back(std::move(p));
    }
    return out;
}

std::size_t s_component(const QuadraticData& q, int w, std::optional<Subspace>* span) {
    auto mw = monomials(q.v, w);
    if (w < 2) {
        if (span) *span = Subspace::zero(Ambient::coordinates(mw.list.size()));
        return mw.list.size();
    }
    auto m2 = monomials(q.v, 2);
    auto polys = relations_as_polys(q, m2);
    auto mrest = monomials(q.v, w - 2);
    RowEchelon e(mw.list.size());
    std::vector<std::uint32_t> prod;
    for (const auto& p : polys)
        for (const auto& mono : mrest.list) {
            std::map<std::uint32_t, Scalar> acc;
            for (const auto& t : p) {
                int s = mono_multiply(q.v, m2.list[t.col], mono, prod);
                if (s == 0) continue;
                acc[mw.index.at(prod)] += s * t.val;
            }
            QRow row;
            for (auto& [c, x] : acc)
                if (x != 0) row.push_back({c, x});
            if (!row.empty()) e.insert(row);
        }
    if (span) *span = Subspace::from_echelon(Ambient::coordinates(mw.list.size()), e);
    return mw.list.size() - e.rank();
}

// S^c: orbit sums O_m of weight w whose splitting Δ_{2,w-2} lands in R ⊗ Sym^{w-2}.
std::size_t sc_component(const QuadraticData& q, int w, std::optional<Subspace>* span) {
    auto mw = monomials(q.v, w);
    if (w < 2) {
        if (span) *span = Subspace::full(Ambient::coordinates(mw.list.size()));
        return mw.list.size();
    }
    std::size_t n = q.dim();
    // functionals on V^{⊗2} vanishing on R, up to those killing all of V^{⊙2}
    auto funcs = apply_functor(Functor::Star, q).r.qrows();
    auto mrest = monomials(q.v, w - 2);
    std::size_t nr = mrest.list.size();
    std::vector<std::map<std::uint32_t, Scalar>> fdense(funcs.size());
    for (std::size_t k = 0; k < funcs.size(); ++k)
        for (const auto& e : funcs[k]) fdense[k][e.col] = e.val;
    std::unordered_map<std::uint64_t, QRow> rows;
    for (std::uint32_t mi = 0; mi < mw.list.size(); ++mi) {
        const auto& m = mw.list[mi];
        std::map<std::uint64_t, Scalar> acc;
        for (std::size_t pa = 0; pa < m.size(); ++pa) {
            if (pa > 0 && m[pa] == m[pa - 1]) continue;
            long long before_a = 0;
            for (std::size_t t = 0; t < pa; ++t) before_a += q.v.degree(m[t]);
            int sa = parity_sign(before_a * q.v.degree(m[pa]));
            std::vector<std::uint32_t> m1 = m;
            m1.erase(m1.begin() + static_cast<long>(pa));
            for (std::size_t pb = 0; pb < m1.size(); ++pb) {
                if (pb > 0 && m1[pb] == m1[pb - 1]) continue;
                long long before_b = 0;
                for (std::size_t t = 0; t < pb; ++t) before_b += q.v.degree(m1[t]);
                int sb = parity_sign(before_b * q.v.degree(m1[pb]));
                std::vector<std::uint32_t> rest = m1;
                rest.erase(rest.begin() + static_cast<long>(pb));
                std::uint32_t pair = static_cast<std::uint32_t>(m[pa] * n + m1[pb]);
                std::uint64_t ri = mrest.index.at(rest);
                for (std::size_t k = 0; k < funcs.size(); ++k) {
                    auto it = fdense[k].find(pair);
                    if (it == fdense[k].end()) continue;
                    acc[k * nr + ri] += sa * sb * it->second;
                }
            }
        }
        for (auto& [key, x] : acc)
            if (x != 0) rows[key].push_back({mi, x});
    }
    RowEchelon e(mw.list.size());
    std::vector<std::uint64_t> keys;
    for (auto& kv : rows) keys.push_back(kv.first);
    std::sort(keys.begin(), keys.end());
    for (auto k : keys) e.insert(rows[k]);
    if (span)
        *span = Subspace::from_rows(Ambient::coordinates(mw.list.size()),
                                    orthogonal_rows(e.reduced_rows(), mw.list.size()));
    return mw.list.size() - e.rank();
}

// ---------------------------------------------------------------- Tc
// Tc^{(w)} = {x ∈ Tc^{(w-1)}⊗V : (id⊗P)(x) = 0}, P: V^{⊗2} -> V^{⊗2}/R.
std::vector<std::size_t> tc_run(const QuadraticData& q, int wmax, std::optional<Subspace>* top) {
    std::size_t n = q.dim();
    auto funcs_int = orthogonal_rows(q.r.int_rows(), n * n);
    std::vector<QRow> funcs;
    for (const auto& f : funcs_int) funcs.push_back(to_qrow_raw(f));
    // f[k](i, j) lookup per pair
    std::vector<std::vector<std::pair<std::uint32_t, Scalar>>> by_pair(n * n);
    for (std::uint32_t k = 0; k < funcs.size(); ++k)
        for (const auto& e : funcs[k]) by_pair[e.col].push_back({k, e.val});
    std::size_t nf = funcs.size();

    std::vector<std::size_t> dims{1};
    std::vector<QRow> basis{QRow{{0, Scalar(1)}}};  // Tc^{(0)} inside V^{⊗0}
    for (int w = 1; w <= wmax; ++w) {
        std::size_t nw = ipow(n, w);
        std::vector<QRow> next;
        if (w == 1) {
            for (std::uint32_t i = 0; i < n; ++i) next.push_back({{i, Scalar(1)}});
        } else {
            // candidate coordinates (t, j) -> t * n + j
            std::size_t ncand = basis.size() * n;
            std::unordered_map<std::uint64_t, QRow> rows;
            for (std::size_t t = 0; t < basis.size(); ++t)
                for (std::uint32_t j = 0; j < n; ++j) {
                    std::uint32_t cand = static_cast<std::uint32_t>(t * n + j);
                    for (const auto& e : basis[t]) {
                        std::size_t p = e.col / n, i = e.col % n;
                        for (const auto& [k, fv] : by_pair[i * n + j])
                            rows[static_cast<std::uint64_t>(p) * nf + k].push_back({cand, e.val * fv});
                    }
                }
            RowEchelon e(ncand);
            std::vector<std::uint64_t> keys;
            for (auto& kv : rows) keys.push_back(kv.first);
            std::sort(keys.begin(), keys.end());
            for (auto k : keys) {
                auto& r = rows[k];
                std::sort(r.begin(), r.end(), [](const QEntry& a, const QEntry& b) { return a.col < b.col; });
                QRow merged;
                for (auto& x : r) {
                    if (!merged.empty() && merged.back().col == x.col) merged.back().val += x.val;
                    else merged.push_back(x);
                }
                merged.erase(std::remove_if(merged.begin(), merged.end(), [](const QEntry& x) { return x.val == 0; }),
                             merged.end());
                if (!merged.empty()) e.insert(merged);
            }
            auto ker = orthogonal_rows(e.reduced_rows(), ncand);
            for (const auto& kr : ker) {
                QRow x;
                for (const auto& c : to_qrow_raw(kr)) {
                    std::size_t t = c.col / n, j = c.col % n;
                    QRow piece;
                    for (const auto& b : basis[t])
                        piece.push_back({static_cast<std::uint32_t>(b.col * n + j), b.val * c.val});
                    qrow_axpy(x, Scalar(1), piece);
                }
                next.push_back(std::move(x));
            }
        }
        dims.push_back(next.size());
        basis = std::move(next);
        if (top && w == wmax) *top = Subspace::from_qrows(Ambient::coordinates(nw), basis);
    }
    if (top && wmax == 0) *top = Subspace::full(Ambient::coordinates(1));
    return dims;
}

// ---------------------------------------------------------------- L
void lyndon_words(std::size_t n, int w, std::vector<std::vector<std::size_t>>& out) {
    if (n == 0 || w <= 0) return;
    // Duval's algorithm, keeping words of length exactly w
    std::vector<std::size_t> word{0};
    while (!word.empty()) {
        if (static_cast<int>(word.size()) == w) out.push_back(word);
        std::size_t m = word.size();
        while (static_cast<int>(word.size()) < w) word.push_back(word[word.size() - m]);
        while (!word.empty() && word.back() == n - 1) word.pop_back();
        if (!word.empty()) ++word.back();
    }
}

bool is_lyndon(const std::vector<std::size_t>& w) {
    for (std::size_t i = 1; i < w.size(); ++i) {
        std::vector<std::size_t> rot(w.begin() + static_cast<long>(i), w.end());
        rot.insert(rot.end(), w.begin(), w.begin() + static_cast<long>(i));
        if (!(w < rot)) return false;
    }
    return true;
}

struct Bracketed {
    QRow tensor;
    std::string text;
    int degree;
};

Bracketed standard_bracket(const GradedSpace& v, const std::vector<std::size_t>& w) {
    if (w.size() == 1)
        return {QRow{{static_cast<std::uint32_t>(w[0]), Scalar(1)}}, v.label(w[0]), v.degree(w[0])};
    // longest proper Lyndon suffix
    std::size_t split = 1;
    for (std::size_t i = 1; i < w.size(); ++i) {
        std::vector<std::size_t> suf(w.begin() + static_cast<long>(i), w.end());
        if (is_lyndon(suf)) {
            split = i;
            break;
        }
    }
    std::vector<std::size_t> u(w.begin(), w.begin() + static_cast<long>(split));
    std::vector<std::size_t> s(w.begin() + static_cast<long>(split), w.end());
    auto bu = standard_bracket(v, u);
    auto bs = standard_bracket(v, s);
    std::size_t n = v.dim();
    return {bracket(bu.tensor, bu.degree, ipow(n, static_cast<int>(u.size())), bs.tensor, bs.degree,
                    ipow(n, static_cast<int>(s.size()))),
            "[" + bu.text + "," + bs.text + "]", bu.degree + bs.degree};
}

// dims of L^{(w)} split by parity, and the ideal slice at wmax.
std::vector<std::array<std::size_t, 2>> lie_run(const QuadraticData& q, int wmax, std::optional<Subspace>* top) {
    std::size_t n = q.dim();
    std::vector<std::array<std::size_t, 2>> dims(static_cast<std::size_t>(std::max(wmax, 0)) + 1, {0, 0});
    std::vector<QRow> ideal;  // homogeneous rows of the previous ideal slice
    std::vector<int> ideal_deg;
    for (int w = 1; w <= wmax; ++w) {
        std::array<std::size_t, 2> free{0, 0};
        for (const auto& m : lyndon_basis(q.v, w)) free[std::abs(m.degree) % 2]++;
        std::size_t nw = ipow(n, w);
        RowEchelon e(nw);
        if (w == 2) {
            for (const auto& r : q.r.qrows()) e.insert(r);
        } else if (w > 2) {
            std::size_t nprev = ipow(n, w - 1);
            for (std::size_t t = 0; t < ideal.size(); ++t)
                for (std::uint32_t i = 0; i < n; ++i) {
                    QRow x{{i, Scalar(1)}};
                    e.insert(bracket(x, q.v.degree(i), n, ideal[t], ideal_deg[t], nprev));
                }
        }
        ideal.clear();
        ideal_deg.clear();
        std::array<std::size_t, 2> inideal{0, 0};
        for (const auto& r : e.reduced_rows()) {
            int d = tensor_degree(q.v, r.front().col, w);
            ideal.push_back(to_qrow_raw(r));
            ideal_deg.push_back(d);
            inideal[std::abs(d) % 2]++;
        }
        dims[w] = {free[0] - inideal[0], free[1] - inideal[1]};
        if (top && w == wmax) *top = Subspace::from_echelon(Ambient::coordinates(nw), e);
    }
    return dims;
}

}  // namespace

std::vector<LieMonomial> lyndon_basis(const GradedSpace& v, int w) {
    std::vector<LieMonomial> out;
    if (w < 1) return out;
    std::vector<std::vector<std::size_t>> words;
    lyndon_words(v.dim(), w, words);
    for (const auto& word : words) {
        auto b = standard_bracket(v, word);
        out.push_back({word, b.text, b.degree, b.tensor});
    }
    if (w % 2 == 0) {
        std::vector<std::vector<std::size_t>> half;
        lyndon_words(v.dim(), w / 2, half);
        std::size_t nh = ipow(v.dim(), w / 2);
        for (const auto& u : half) {
            auto b = standard_bracket(v, u);
            if (b.degree % 2 == 0) continue;
            std::vector<std::size_t> word = u;
            word.insert(word.end(), u.begin(), u.end());
            out.push_back({word, "[" + b.text + "," + b.text + "]", 2 * b.degree,
                           bracket(b.tensor, b.degree, nh, b.tensor, b.degree, nh)});
        }
    }
    return out;
}

std::size_t witt_count(const GradedSpace& v, int w) { return lyndon_basis(v, w).size(); }

std::vector<std::array<std::size_t, 2>> lie_dims_by_parity(const QuadraticData& q, int wmax) {
    if (q.flavor != Flavor::Skew) throw FlavorMismatch("L needs skew data");
    return lie_run(q, wmax, nullptr);
}

WeightComponent weight_component(Realization r, const QuadraticData& q, int w) {
    if (w < 0) throw ArityError("negative weight");
    WeightComponent c;
    c.kind = r;
    c.weight = w;
    switch (r) {
        case Realization::A: {
            auto p = lift_plain(r, q);
            c.dim = AEngine(p).run(w, &c.span).back();
            break;
        }
        case Realization::Tc: {
            auto p = lift_plain(r, q);
            c.dim = tc_run(p, w, &c.span).back();
            break;
        }
        case Realization::S:
            if (q.flavor != Flavor::Symmetric) throw FlavorMismatch("S needs symmetric data");
            c.dim = s_component(q, w, &c.span);
            break;
        case Realization::Sc:
            if (q.flavor != Flavor::Symmetric) throw FlavorMismatch("Sc needs symmetric data");
            c.dim = sc_component(q, w, &c.span);
            break;
        case Realization::L: {
            if (q.flavor != Flavor::Skew) throw FlavorMismatch("L needs skew data");
            if (w == 0) {
                c.dim = 0;
                break;
            }
            auto d = lie_run(q, w, &c.span);
            c.dim = d[w][0] + d[w][1];
            break;
        }
    }
    return c;
}

std::vector<std::size_t> hilbert_series(Realization r, const QuadraticData& q, int wmax) {
    if (wmax < 0) throw ArityError("negative weight");
    switch (r) {
        case Realization::A: return AEngine(lift_plain(r, q)).run(wmax, nullptr);
        case Realization::Tc: return tc_run(lift_plain(r, q), wmax, nullptr);
        case Realization::S:
        case Realization::Sc: {
            if (q.flavor != Flavor::Symmetric) throw FlavorMismatch(realization_name(r) + " needs symmetric data");
            std::vector<std::size_t> d;
            for (int w = 0; w <= wmax; ++w) {
                std::size_t x = r == Realization::S ? s_component(q, w, nullptr) : sc_component(q, w, nullptr);
                d.push_back(x);
                // both realisations vanish from the first zero weight on
                if (x == 0) {
                    d.resize(static_cast<std::size_t>(wmax) + 1, 0);
                    break;
                }
            }
            return d;
        }
        case Realization::L: {
            auto d = lie_dims_by_parity(q, wmax);
            std::vector<std::size_t> out;
            for (auto& x : d) out.push_back(x[0] + x[1]);
            return out;
        }
    }
    return {};
}

std::vector<std::size_t> pbw_series(const std::vector<std::array<std::size_t, 2>>& lie, int wmax) {
    std::vector<Integer> c(static_cast<std::size_t>(wmax) + 1, 0);
    c[0] = 1;
    for (std::size_t w = 1; w < lie.size() && static_cast<int>(w) <= wmax; ++w) {
        // odd part: multiply by (1+t^w) o_w times
        for (std::size_t k = 0; k < lie[w][1]; ++k)
            for (int d = wmax; d >= static_cast<int>(w); --d) c[d] += c[d - w];
        // even part: divide by (1-t^w) e_w times
        for (std::size_t k = 0; k < lie[w][0]; ++k)
            for (int d = static_cast<int>(w); d <= wmax; ++d) c[d] += c[d - w];
    }
    std::vector<std::size_t> out;
    for (auto& x : c) out.push_back(x.get_ui());
    return out;
}

CaseResult ue_compare(const QuadraticData& q, int wmax) {
    auto lie = lie_dims_by_parity(q, wmax);
    auto pbw = pbw_series(lie, wmax);
    auto a = hilbert_series(Realization::A, q, wmax);
    std::vector<std::size_t> ld;
    for (int w = 1; w <= wmax; ++w) ld.push_back(lie[w][0] + lie[w][1]);
    std::string det = "L " + dims_string(ld) + " PBW " + dims_string(pbw) + " A(Λq) " + dims_string(a);
    return make_case("ue_compare", pbw == a, det);
}

EulerResult koszul_euler_check(const QuadraticData& q, int wmax) {
    EulerResult res;
    auto dual = apply_functor(Functor::Shriek, q);
    switch (q.flavor) {
        case Flavor::Skew:
            res.left = hilbert_series(Realization::A, q, wmax);
            res.right = hilbert_series(Realization::S, dual, wmax);
            break;
        case Flavor::Plain:
            res.left = hilbert_series(Realization::A, q, wmax);
            res.right = hilbert_series(Realization::A, dual, wmax);
            break;
        case Flavor::Symmetric:
            res.left = hilbert_series(Realization::S, q, wmax);
            res.right = hilbert_series(Realization::A, dual, wmax);
            break;
    }
    bool trivial = true;
    for (int w = 0; w <= wmax; ++w) {
        long long c = 0;
        for (int i = 0; i <= w; ++i)
            c += static_cast<long long>(res.left[i]) * static_cast<long long>(res.right[w - i]) *
                 ((w - i) % 2 == 0 ? 1 : -1);
        res.product.push_back(c);
        if (c != (w == 0 ? 1 : 0)) trivial = false;
    }
    std::string det = "h " + dims_string(res.left) + " h! " + dims_string(res.right) + " product (";
    for (std::size_t i = 0; i < res.product.size(); ++i) det += (i ? "," : "") + std::to_string(res.product[i]);
    det += ")";
    res.result = {"koszul_euler", trivial ? Status::Pass : Status::Info, det, std::nullopt};
    return res;
}

std::vector<std::vector<std::uint32_t>> symmetric_monomials(const GradedSpace& v, int w) {
    return monomials(v, w).list;
}

}  // namespace qdk
