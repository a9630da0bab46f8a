#include "qdk/graded.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace qdk {

namespace {

std::vector<std::string> split_top_level(const std::string& s) {
    const std::string sep = kTensorSep;
    std::vector<std::string> parts;
    int depth = 0;
    std::size_t start = 0;
    for (std::size_t i = 0; i < s.size();) {
        if (s[i] == '(') {
            ++depth;
        } else if (s[i] == ')') {
            --depth;
        } else if (depth == 0 && s.compare(i, sep.size(), sep) == 0) {
            parts.push_back(s.substr(start, i - start));
            i += sep.size();
            start = i;
            continue;
        }
        ++i;
    }
    parts.push_back(s.substr(start));
    return parts;
}

}  // namespace

std::string dual_label(const std::string& label) {
    auto parts = split_top_level(label);
    std::string out;
    for (std::size_t k = 0; k < parts.size(); ++k) {
        std::string p = parts[k];
        if (!p.empty() && p.back() == '*') p.pop_back();
        else p += '*';
        if (k) out += kTensorSep;
        out += p;
    }
    return out;
}

std::string shift_label(const std::string& label, int k) {
    if (k == 0) return label;
    std::string prefix = (k == 1) ? "s" : (k == -1) ? "s^-1" : "s^" + std::to_string(k);
    bool wrap = label.find(kTensorSep) != std::string::npos || (!label.empty() && label.back() == '*');
    return wrap ? prefix + "(" + label + ")" : prefix + label;
}

GradedSpace::GradedSpace() : amb_(Ambient::make_paired({}, {})) {}

GradedSpace::GradedSpace(std::vector<Generator> basis) : basis_(std::move(basis)) {
    std::set<std::string> seen;
    std::vector<std::string> labels, duals;
    labels.reserve(basis_.size());
    duals.reserve(basis_.size());
    for (const auto& g : basis_) {
        if (!seen.insert(g.label).second) throw ArityError("duplicate generator label '" + g.label + "'");
        labels.push_back(g.label);
        duals.push_back(dual_label(g.label));
    }
    amb_ = Ambient::make_paired(std::move(labels), std::move(duals));
}

std::vector<int> GradedSpace::degrees() const {
    std::vector<int> d;
    d.reserve(basis_.size());
    for (const auto& g : basis_) d.push_back(g.degree);
    return d;
}

GradedSpace tensor_product(const GradedSpace& v, const GradedSpace& w) {
    std::vector<Generator> b;
    b.reserve(v.dim() * w.dim());
    for (const auto& x : v.basis())
        for (const auto& y : w.basis()) b.push_back({x.label + kTensorSep + y.label, x.degree + y.degree});
    return GradedSpace(std::move(b));
}

GradedSpace tensor_power(const GradedSpace& v, int n) {
    if (n < 0) throw ArityError("negative tensor power");
    GradedSpace out({Generator{"1", 0}});
    if (n == 0) return out;
    out = v;
    for (int i = 1; i < n; ++i) out = tensor_product(out, v);
    return out;
}

GradedSpace direct_sum(const GradedSpace& v, const GradedSpace& w) {
    std::vector<Generator> b = v.basis();
    std::set<std::string> used;
    for (const auto& g : v.basis()) used.insert(g.label);
    std::set<std::string> wl;
    for (const auto& g : w.basis()) wl.insert(g.label);
    for (const auto& g : w.basis()) {
        std::string l = g.label;
        if (used.count(l)) {
            do l += "'";
            while (used.count(l) || wl.count(l));
        }
        used.insert(l);
        b.push_back({l, g.degree});
    }
    return GradedSpace(std::move(b));
}

GradedSpace shift(const GradedSpace& v, int k) {
    std::vector<Generator> b;
    b.reserve(v.dim());
    for (const auto& g : v.basis()) b.push_back({shift_label(g.label, k), g.degree + k});
    return GradedSpace(std::move(b));
}

GradedSpace dual(const GradedSpace& v) {
    std::vector<Generator> b;
    b.reserve(v.dim());
    for (const auto& g : v.basis()) b.push_back({dual_label(g.label), -g.degree});
    return GradedSpace(std::move(b));
}

int koszul_sign(const std::vector<int>& degrees, const std::vector<std::size_t>& perm) {
    if (degrees.size() != perm.size()) throw ArityError("koszul_sign: length mismatch");
    std::vector<char> seen(perm.size(), 0);
    for (auto p : perm) {
        if (p >= perm.size() || seen[p]) throw ArityError("koszul_sign: not a permutation");
        seen[p] = 1;
    }
    long long e = 0;
    for (std::size_t a = 0; a < perm.size(); ++a)
        for (std::size_t b = a + 1; b < perm.size(); ++b)
            if (perm[a] > perm[b]) e += static_cast<long long>(degrees[perm[a]]) * degrees[perm[b]];
    return parity_sign(e);
}

LinearMap permute_factors(const std::vector<GradedSpace>& factors, const std::vector<std::size_t>& perm) {
    std::size_t r = factors.size();
    if (perm.size() != r) throw ArityError("permute_factors: length mismatch");
    GradedSpace src = factors.empty() ? tensor_power(GradedSpace(), 0) : factors[0];
    for (std::size_t k = 1; k < r; ++k) src = tensor_product(src, factors[k]);
    std::vector<GradedSpace> tf;
    for (auto p : perm) tf.push_back(factors.at(p));
    GradedSpace tgt = tf.empty() ? src : tf[0];
    for (std::size_t k = 1; k < r; ++k) tgt = tensor_product(tgt, tf[k]);

    std::vector<std::size_t> dims(r), tstride(r);
    for (std::size_t k = 0; k < r; ++k) dims[k] = factors[k].dim();
    // stride in the target of the factor at output position k
    std::size_t s = 1;
    for (std::size_t k = r; k-- > 0;) {
        tstride[k] = s;
        s *= dims[perm[k]];
    }
    std::vector<QRow> cols(src.dim());
    std::vector<std::size_t> idx(r, 0);
    std::vector<int> deg(r);
    for (std::size_t c = 0; c < src.dim(); ++c) {
        // decode c
        std::size_t t = c;
        for (std::size_t k = r; k-- > 0;) {
            idx[k] = t % dims[k];
            t /= dims[k];
        }
        for (std::size_t k = 0; k < r; ++k) deg[k] = factors[k].degree(idx[k]);
        std::size_t target = 0;
        for (std::size_t k = 0; k < r; ++k) target += idx[perm[k]] * tstride[k];
        cols[c] = {{static_cast<std::uint32_t>(target), Scalar(koszul_sign(deg, perm))}};
    }
    return LinearMap(src.ambient(), tgt.ambient(), std::move(cols));
}

LinearMap braiding(const GradedSpace& v, const GradedSpace& w) {
    return permute_factors({v, w}, {1, 0});
}

LinearMap shift_square_map(const GradedSpace& v, int k) {
    if (k != 1 && k != -1) throw ArityError("shift_square_map: only one-step shifts");
    GradedSpace sv = shift(v, k);
    std::size_t n = v.dim();
    std::vector<QRow> cols(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            // k = +1: (-1)^{|x|};  k = -1: (-1)^{|x|+1}, the inverse of the former
            int sgn = parity_sign(v.degree(i) + (k == -1 ? 1 : 0));
            cols[i * n + j] = {{static_cast<std::uint32_t>(i * n + j), Scalar(sgn)}};
        }
    return LinearMap(tensor_product(v, v).ambient(), tensor_product(sv, sv).ambient(), std::move(cols));
}

LinearMap tensor_map(const LinearMap& f, const LinearMap& g, const GradedSpace& src1, const GradedSpace& src2,
                     const GradedSpace& tgt1, const GradedSpace& tgt2) {
    return kron(f, g, tensor_product(src1, src2).ambient(), tensor_product(tgt1, tgt2).ambient());
}

LinearMap square_map(const LinearMap& f, const GradedSpace& src, const GradedSpace& tgt) {
    return tensor_map(f, f, src, src, tgt, tgt);
}

bool is_degree_zero(const LinearMap& f, const GradedSpace& src, const GradedSpace& tgt) {
    if (f.source()->dim() != src.dim() || f.target()->dim() != tgt.dim()) return false;
    for (std::size_t j = 0; j < src.dim(); ++j)
        for (const auto& e : f.column(j))
            if (tgt.degree(e.col) != src.degree(j)) return false;
    return true;
}

QRow sym_element(const GradedSpace& v, std::size_t i, std::size_t j, int sign) {
    std::size_t n = v.dim();
    int s = sign * parity_sign(static_cast<long long>(v.degree(i)) * v.degree(j));
    std::map<std::uint32_t, Scalar> acc;
    acc[static_cast<std::uint32_t>(i * n + j)] += 1;
    acc[static_cast<std::uint32_t>(j * n + i)] += s;
    QRow out;
    for (auto& [c, x] : acc)
        if (x != 0) out.push_back({c, x});
    return out;
}

TensorSquareSplit square_split(const GradedSpace& v) {
    AmbientPtr whole = tensor_product(v, v).ambient();
    std::vector<QRow> sym, alt;
    for (std::size_t i = 0; i < v.dim(); ++i)
        for (std::size_t j = i; j < v.dim(); ++j) {
            sym.push_back(sym_element(v, i, j, +1));
            alt.push_back(sym_element(v, i, j, -1));
        }
    return {whole, Subspace::from_qrows(whole, sym), Subspace::from_qrows(whole, alt)};
}

Subspace mixed_bracket(const GradedSpace& v, const GradedSpace& w, int sign) {
    GradedSpace vw = direct_sum(v, w);
    std::size_t n = vw.dim();
    std::vector<QRow> rows;
    for (std::size_t i = 0; i < v.dim(); ++i)
        for (std::size_t j = 0; j < w.dim(); ++j) {
            std::size_t a = i, b = v.dim() + j;
            int s = sign * parity_sign(static_cast<long long>(v.degree(i)) * w.degree(j));
            rows.push_back({{static_cast<std::uint32_t>(a * n + b), Scalar(1)},
                            {static_cast<std::uint32_t>(b * n + a), Scalar(s)}});
        }
    return Subspace::from_qrows(tensor_product(vw, vw).ambient(), rows);
}

LinearMap square_inclusion(const GradedSpace& v, const GradedSpace& w, bool first) {
    GradedSpace vw = direct_sum(v, w);
    const GradedSpace& part = first ? v : w;
    std::size_t off = first ? 0 : v.dim();
    std::size_t n = vw.dim(), m = part.dim();
    std::vector<QRow> cols(m * m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            cols[i * m + j] = {{static_cast<std::uint32_t>((i + off) * n + j + off), Scalar(1)}};
    return LinearMap(tensor_product(part, part).ambient(), tensor_product(vw, vw).ambient(), std::move(cols));
}

bool is_graded_subspace(const Subspace& s, const std::vector<int>& ambient_degrees) {
    if (ambient_degrees.size() != s.ambient_dim()) throw AmbientMismatch("degree list length differs");
    for (const auto& r : s.qrows()) {
        std::map<int, QRow> parts;
        for (const auto& e : r) parts[ambient_degrees[e.col]].push_back(e);
        if (parts.size() <= 1) continue;
        for (const auto& [d, p] : parts)
            if (!s.contains(p)) return false;
    }
    return true;
}

}  // namespace qdk
