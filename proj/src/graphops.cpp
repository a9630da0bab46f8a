#include "qdk/graphops.hpp"

#include "qdk/realize.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <tuple>

namespace qdk {

namespace {

std::string edge_string(const Hyperedge& e, bool dotted) {
    std::string s;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (dotted && i) s += ".";
        s += std::to_string(e[i]);
    }
    return s;
}

bool is_interval(const Hyperedge& e) {
    for (std::size_t i = 1; i < e.size(); ++i)
        if (e[i] != e[i - 1] + 1) return false;
    return true;
}

void check_edge(int n, int k, bool symmetric, const Hyperedge& e) {
    if (static_cast<int>(e.size()) != k) throw GraphError("hyperedge of wrong size");
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] < 1 || e[i] > n) throw GraphError("vertex out of range");
        if (i && e[i] <= e[i - 1]) throw GraphError("hyperedge vertices must be increasing");
    }
    if (!symmetric && !is_interval(e)) throw GraphError("linear hyperedge must be an interval");
}

// Position of outer vertex v (≠ p) and inner vertex j in γ₁ ∘_p γ₂.
int outer_pos(int v, int p, int m) { return v < p ? v : v + m - 1; }
int inner_pos(int j, int p) { return j + p - 1; }

struct Pair {
    LabeledHypergraph g1, g2;
    int p;
};

Json pair_witness(const LabeledHypergraph& g1, int p, const LabeledHypergraph& g2) {
    Json w;
    w["outer"] = g1.to_string();
    w["p"] = p;
    w["inner"] = g2.to_string();
    return w;
}

GraphTensor tensor_compose(const GraphTensor& x, int p, const GraphTensor& y) {
    GraphTensor out;
    for (const auto& [ab, c1] : x)
        for (const auto& [cd, c2] : y) {
            int s = parity_sign(static_cast<long long>(ab.second.weight()) * cd.first.weight());
            auto l = compose_graphs(ab.first, p, cd.first);
            if (l.empty()) continue;
            auto r = compose_graphs(ab.second, p, cd.second);
            for (const auto& [g, a] : l.terms())
                for (const auto& [h, b] : r.terms()) out[{g, h}] += s * c1 * c2 * a * b;
        }
    std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
    return out;
}

GraphTensor coproduct_of(const GraphSum& s, bool sign) {
    GraphTensor out;
    for (const auto& [g, c] : s.terms())
        for (const auto& [ab, x] : coproduct(g, sign)) out[ab] += c * x;
    std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
    return out;
}

using Triple = std::tuple<LabeledHypergraph, LabeledHypergraph, LabeledHypergraph>;

std::vector<LabeledHypergraph> graphs_up_to(int n, int k, bool symmetric, int wmax) {
    std::vector<LabeledHypergraph> out;
    for (int w = 0; w <= wmax; ++w) {
        auto g = graphs_of_weight(n, k, symmetric, w);
        out.insert(out.end(), g.begin(), g.end());
    }
    return out;
}

int min_inner(bool symmetric) { return symmetric ? 0 : 1; }

std::size_t binomial(std::size_t n, std::size_t r) {
    if (r > n) return 0;
    std::size_t c = 1;
    for (std::size_t i = 1; i <= r; ++i) c = c * (n - r + i) / i;
    return c;
}

}  // namespace

// ---------------------------------------------------------------- graphs

std::string LabeledHypergraph::to_string() const {
    std::string s = "n=" + std::to_string(n) + ";k=" + std::to_string(k) + ";edges=";
    for (std::size_t i = 0; i < edges.size(); ++i) {
        if (i) s += ",";
        s += edge_string(edges[i], n > 9);
    }
    if (!symmetric) s += ";linear";
    return s;
}

int sort_edges(std::vector<Hyperedge>& edges) {
    // insertion sort, counting transpositions
    int sign = 1;
    for (std::size_t i = 1; i < edges.size(); ++i)
        for (std::size_t j = i; j > 0 && edges[j] < edges[j - 1]; --j) {
            std::swap(edges[j], edges[j - 1]);
            sign = -sign;
        }
    for (std::size_t i = 1; i < edges.size(); ++i)
        if (edges[i] == edges[i - 1]) return 0;
    return sign;
}

LabeledHypergraph make_graph(int n, int k, bool symmetric, std::vector<Hyperedge> edges, int* sign) {
    if (n < 0) throw GraphError("negative vertex count");
    if (k < 2) throw GraphError("hyperedge size must be at least 2");
    for (auto& e : edges) {
        std::sort(e.begin(), e.end());
        check_edge(n, k, symmetric, e);
    }
    int s = sort_edges(edges);
    if (s == 0) throw GraphError("repeated hyperedge");
    if (sign) *sign = s;
    return {n, k, symmetric, std::move(edges)};
}

LabeledHypergraph empty_graph(int n, int k, bool symmetric) { return make_graph(n, k, symmetric, {}); }

LabeledHypergraph parse_graph(const std::string& text) {
    int n = -1, k = 2;
    bool symmetric = true;
    std::string edges_text;
    bool have_edges = false;
    std::stringstream ss(text);
    std::string field;
    while (std::getline(ss, field, ';')) {
        auto eq = field.find('=');
        std::string key = field.substr(0, eq);
        std::string val = eq == std::string::npos ? "" : field.substr(eq + 1);
        try {
            if (key == "n") n = std::stoi(val);
            else if (key == "k") k = std::stoi(val);
            else if (key == "edges") {
                edges_text = val;
                have_edges = true;
            } else if (key == "linear" && eq == std::string::npos) symmetric = false;
            else throw GraphError("bad graph field: " + field);
        } catch (const std::logic_error&) {
            throw GraphError("bad graph string: " + text);
        }
    }
    if (n < 0 || !have_edges) throw GraphError("graph string needs n and edges: " + text);
    std::vector<Hyperedge> edges;
    std::stringstream es(edges_text);
    std::string tok;
    while (std::getline(es, tok, ',')) {
        if (tok.empty()) continue;
        Hyperedge e;
        if (n > 9) {
            std::stringstream vs(tok);
            std::string v;
            while (std::getline(vs, v, '.')) e.push_back(std::stoi(v));
        } else {
            for (char c : tok) {
                if (c < '0' || c > '9') throw GraphError("bad vertex in " + tok);
                e.push_back(c - '0');
            }
        }
        edges.push_back(e);
    }
    int s = 1;
    auto g = make_graph(n, k, symmetric, edges, &s);
    if (s != 1) throw GraphError("edges not in canonical order: " + text);
    return g;
}

std::vector<Hyperedge> complete_edges(int n, int k, bool symmetric) {
    std::vector<Hyperedge> out;
    if (n < k) return out;
    if (!symmetric) {
        for (int i = 1; i + k - 1 <= n; ++i) {
            Hyperedge e(static_cast<std::size_t>(k));
            std::iota(e.begin(), e.end(), i);
            out.push_back(e);
        }
        return out;
    }
    Hyperedge e(static_cast<std::size_t>(k));
    std::iota(e.begin(), e.end(), 1);
    while (true) {
        out.push_back(e);
        int i = k - 1;
        while (i >= 0 && e[static_cast<std::size_t>(i)] == n - k + 1 + i) --i;
        if (i < 0) break;
        ++e[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j) e[static_cast<std::size_t>(j)] = e[static_cast<std::size_t>(j - 1)] + 1;
    }
    return out;
}

std::vector<LabeledHypergraph> graphs_of_weight(int n, int k, bool symmetric, int w) {
    auto all = complete_edges(n, k, symmetric);
    std::vector<LabeledHypergraph> out;
    if (w < 0 || w > static_cast<int>(all.size())) return out;
    std::vector<std::size_t> idx(static_cast<std::size_t>(w));
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
        LabeledHypergraph g{n, k, symmetric, {}};
        for (auto i : idx) g.edges.push_back(all[i]);
        out.push_back(std::move(g));
        int i = w - 1;
        while (i >= 0 && idx[static_cast<std::size_t>(i)] == all.size() - static_cast<std::size_t>(w) + static_cast<std::size_t>(i)) --i;
        if (i < 0) break;
        ++idx[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < w; ++j) idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
    return out;
}

// ---------------------------------------------------------------- sums

GraphSum GraphSum::from_edges(int n, int k, bool symmetric, std::vector<Hyperedge> edges) {
    int s = 1;
    auto g = make_graph(n, k, symmetric, std::move(edges), &s);
    GraphSum out(n, k, symmetric);
    out.add(g, s);
    return out;
}

GraphSum GraphSum::of(const LabeledHypergraph& g) {
    GraphSum out(g.n, g.k, g.symmetric);
    out.add(g, 1);
    return out;
}

void GraphSum::add(const LabeledHypergraph& g, const Scalar& c) {
    if (g.n != n_ || g.k != k_ || g.symmetric != sym_) throw GraphError("graph sum of mixed shapes");
    if (c == 0) return;
    auto& x = terms_[g];
    x += c;
    if (x == 0) terms_.erase(g);
}

void GraphSum::add(const GraphSum& s, const Scalar& c) {
    for (const auto& [g, x] : s.terms_) add(g, c * x);
}

Json GraphSum::to_json() const {
    Json out = Json::array();
    for (const auto& [g, c] : terms_) out.push_back({{"coeff", qdk::to_string(c)}, {"graph", g.to_string()}});
    return out;
}

// ---------------------------------------------------------------- composition

GraphSum compose_graphs(const LabeledHypergraph& g1, int p, const LabeledHypergraph& g2) {
    if (g1.k != g2.k || g1.symmetric != g2.symmetric) throw GraphError("composing graphs of different kinds");
    if (p < 1 || p > g1.n) throw GraphError("insertion vertex out of range");
    if (!g1.symmetric && g2.n < 1) throw GraphError("linear graphs need inner arity at least 1");
    const int m = g2.n;
    GraphSum out(g1.n + m - 1, g1.k, g1.symmetric);

    // per outer edge, the candidate images
    std::vector<std::vector<Hyperedge>> choices;
    for (const auto& e : g1.edges) {
        auto it = std::find(e.begin(), e.end(), p);
        std::vector<Hyperedge> opts;
        if (it == e.end()) {
            Hyperedge f;
            for (int v : e) f.push_back(outer_pos(v, p, m));
            opts.push_back(f);
        } else if (g1.symmetric) {
            for (int j = 1; j <= m; ++j) {
                Hyperedge f;
                for (int v : e) f.push_back(v == p ? inner_pos(j, p) : outer_pos(v, p, m));
                opts.push_back(f);
            }
        } else if (m == 1) {
            opts.push_back(e);
        } else if (it == e.begin() || it + 1 == e.end()) {
            // minimum goes to the last inner vertex, maximum to the first
            int target = it == e.begin() ? inner_pos(m, p) : inner_pos(1, p);
            Hyperedge f;
            for (int v : e) f.push_back(v == p ? target : outer_pos(v, p, m));
            opts.push_back(f);
        }
        if (opts.empty()) return out;
        choices.push_back(std::move(opts));
    }
    std::vector<Hyperedge> tail;
    for (const auto& e : g2.edges) {
        Hyperedge f;
        for (int v : e) f.push_back(inner_pos(v, p));
        tail.push_back(f);
    }

    std::vector<std::size_t> pick(choices.size(), 0);
    while (true) {
        std::vector<Hyperedge> edges;
        for (std::size_t i = 0; i < choices.size(); ++i) edges.push_back(choices[i][pick[i]]);
        edges.insert(edges.end(), tail.begin(), tail.end());
        int s = sort_edges(edges);
        if (s != 0) out.add(LabeledHypergraph{out.n(), out.k(), out.symmetric(), std::move(edges)}, s);
        std::size_t i = 0;
        while (i < pick.size() && ++pick[i] == choices[i].size()) pick[i++] = 0;
        if (i == pick.size()) break;
    }
    return out;
}

GraphSum compose_graphs(const GraphSum& a, int p, const GraphSum& b) {
    if (a.k() != b.k() || a.symmetric() != b.symmetric()) throw GraphError("composing graphs of different kinds");
    if (p < 1 || p > a.n()) throw GraphError("insertion vertex out of range");
    GraphSum out(a.n() + b.n() - 1, a.k(), a.symmetric());
    for (const auto& [g, x] : a.terms())
        for (const auto& [h, y] : b.terms()) out.add(compose_graphs(g, p, h), x * y);
    return out;
}

GraphSum relabel_graph(const LabeledHypergraph& g, const std::vector<int>& f) {
    if (!g.symmetric) throw GraphError("relabeling needs a symmetric graph");
    if (static_cast<int>(f.size()) != g.n) throw GraphError("relabeling of wrong size");
    std::vector<int> seen(f.size(), 0);
    for (int v : f) {
        if (v < 1 || v > g.n || seen[static_cast<std::size_t>(v - 1)]++) throw GraphError("relabeling is not a permutation");
    }
    std::vector<Hyperedge> edges;
    for (const auto& e : g.edges) {
        Hyperedge h;
        for (int v : e) h.push_back(f[static_cast<std::size_t>(v - 1)]);
        std::sort(h.begin(), h.end());
        edges.push_back(h);
    }
    return GraphSum::from_edges(g.n, g.k, true, std::move(edges));
}

GraphSum act_graph(const LabeledHypergraph& g, const std::vector<int>& sigma) {
    std::vector<int> inv(sigma.size());
    for (std::size_t i = 0; i < sigma.size(); ++i) {
        if (sigma[i] < 1 || sigma[i] > static_cast<int>(sigma.size())) throw GraphError("not a permutation");
        inv[static_cast<std::size_t>(sigma[i] - 1)] = static_cast<int>(i) + 1;
    }
    return relabel_graph(g, inv);
}

// ---------------------------------------------------------------- coproduct

GraphTensor coproduct(const LabeledHypergraph& g, bool unshuffle_sign) {
    GraphTensor out;
    const std::size_t w = g.edges.size();
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << w); ++mask) {
        LabeledHypergraph a{g.n, g.k, g.symmetric, {}}, b = a;
        long long inv = 0, right_seen = 0;
        for (std::size_t i = 0; i < w; ++i) {
            if (mask >> i & 1) {
                a.edges.push_back(g.edges[i]);
                inv += right_seen;
            } else {
                b.edges.push_back(g.edges[i]);
                ++right_seen;
            }
        }
        out[{a, b}] += unshuffle_sign ? parity_sign(inv) : 1;
    }
    return out;
}

Json graph_tensor_to_json(const GraphTensor& t) {
    Json out = Json::array();
    for (const auto& [ab, c] : t)
        out.push_back({{"coeff", qdk::to_string(c)}, {"left", ab.first.to_string()}, {"right", ab.second.to_string()}});
    return out;
}

// ---------------------------------------------------------------- checks

Report hopf_check(int k, bool symmetric, int nmax, int wmax, bool unshuffle_sign) {
    if (k < 2 || nmax < 0 || wmax < 0) throw GraphError("bad bounds for hopf_check");
    Report rep;
    rep.suite = "gra-iso";
    const std::string tag = symmetric ? "" : "linear ";

    std::vector<std::vector<LabeledHypergraph>> basis(static_cast<std::size_t>(nmax) + 1);
    for (int n = 0; n <= nmax; ++n) basis[static_cast<std::size_t>(n)] = graphs_up_to(n, k, symmetric, wmax);

    std::size_t pairs = 0;
    std::optional<Json> bad;
    for (int n = 1; n <= nmax && !bad; ++n)
        for (int m = min_inner(symmetric); n + m - 1 <= nmax && !bad; ++m)
            for (const auto& g1 : basis[static_cast<std::size_t>(n)])
                for (const auto& g2 : basis[static_cast<std::size_t>(m)]) {
                    if (g1.weight() + g2.weight() > wmax) continue;
                    auto d1 = coproduct(g1, unshuffle_sign), d2 = coproduct(g2, unshuffle_sign);
                    for (int p = 1; p <= n; ++p) {
                        ++pairs;
                        auto lhs = coproduct_of(compose_graphs(g1, p, g2), unshuffle_sign);
                        auto rhs = tensor_compose(d1, p, d2);
                        if (lhs != rhs) {
                            bad = pair_witness(g1, p, g2);
                            (*bad)["lhs"] = graph_tensor_to_json(lhs);
                            (*bad)["rhs"] = graph_tensor_to_json(rhs);
                            break;
                        }
                    }
                    if (bad) break;
                }
    CaseResult comp{tag + "compatibility", bad ? Status::Fail : Status::Pass,
                    std::to_string(pairs) + " pairs", bad};
    rep.add(std::move(comp));

    std::size_t graphs = 0;
    std::optional<Json> bad_assoc, bad_comm;
    for (int n = 0; n <= nmax; ++n)
        for (const auto& g : basis[static_cast<std::size_t>(n)]) {
            ++graphs;
            auto d = coproduct(g, unshuffle_sign);
            if (!bad_comm) {
                GraphTensor flipped;
                for (const auto& [ab, c] : d)
                    flipped[{ab.second, ab.first}] +=
                        parity_sign(static_cast<long long>(ab.first.weight()) * ab.second.weight()) * c;
                if (flipped != d) bad_comm = Json{{"graph", g.to_string()}};
            }
            if (!bad_assoc) {
                std::map<Triple, Scalar> l, r;
                for (const auto& [ab, c] : d) {
                    for (const auto& [uv, x] : coproduct(ab.first, unshuffle_sign))
                        l[{uv.first, uv.second, ab.second}] += c * x;
                    for (const auto& [uv, x] : coproduct(ab.second, unshuffle_sign))
                        r[{ab.first, uv.first, uv.second}] += c * x;
                }
                std::erase_if(l, [](const auto& kv) { return kv.second == 0; });
                std::erase_if(r, [](const auto& kv) { return kv.second == 0; });
                if (l != r) bad_assoc = Json{{"graph", g.to_string()}};
            }
        }
    rep.add(CaseResult{tag + "coassociativity", bad_assoc ? Status::Fail : Status::Pass,
                       std::to_string(graphs) + " graphs", bad_assoc});
    rep.add(CaseResult{tag + "cocommutativity", bad_comm ? Status::Fail : Status::Pass,
                       std::to_string(graphs) + " graphs", bad_comm});
    return rep;
}

Report graph_operad_axioms(int k, bool symmetric, int nmax, int wmax) {
    if (k < 2 || nmax < 1 || wmax < 0) throw GraphError("bad bounds for graph_operad_axioms");
    Report rep;
    rep.suite = "operad-axioms";
    std::vector<std::vector<LabeledHypergraph>> basis(static_cast<std::size_t>(nmax) + 1);
    for (int n = 0; n <= nmax; ++n) basis[static_cast<std::size_t>(n)] = graphs_up_to(n, k, symmetric, wmax);
    const int lo = min_inner(symmetric);
    auto unit = GraphSum::of(empty_graph(1, k, symmetric));

    std::size_t nseq = 0, npar = 0, nunit = 0, neq = 0;
    std::optional<Json> bseq, bpar, bunit, beq;
    for (int n = 1; n <= nmax; ++n)
        for (const auto& g1 : basis[static_cast<std::size_t>(n)]) {
            auto s1 = GraphSum::of(g1);
            for (int i = 1; i <= n && !bunit; ++i) {
                ++nunit;
                if (!(compose_graphs(s1, i, unit) == s1)) bunit = pair_witness(g1, i, unit.terms().begin()->first);
            }
            if (n == 1 && !bunit) {
                for (int m = lo; m <= nmax; ++m)
                    for (const auto& g2 : basis[static_cast<std::size_t>(m)]) {
                        ++nunit;
                        auto s2 = GraphSum::of(g2);
                        if (g1.edges.empty() && !(compose_graphs(s1, 1, s2) == s2)) bunit = pair_witness(g1, 1, g2);
                    }
            }
            for (int m = lo; n + m - 1 <= nmax; ++m)
                for (const auto& g2 : basis[static_cast<std::size_t>(m)]) {
                    if (g1.weight() + g2.weight() > wmax) continue;
                    auto s2 = GraphSum::of(g2);
                    for (int l = lo; l <= nmax && n + m + l - 2 <= nmax; ++l)
                        for (const auto& g3 : basis[static_cast<std::size_t>(l)]) {
                            if (g1.weight() + g2.weight() + g3.weight() > wmax) continue;
                            auto s3 = GraphSum::of(g3);
                            // sequential
                            for (int i = 1; i <= n && !bseq; ++i)
                                for (int j = 1; j <= m; ++j) {
                                    ++nseq;
                                    auto a = compose_graphs(compose_graphs(s1, i, s2), i + j - 1, s3);
                                    auto b = compose_graphs(s1, i, compose_graphs(s2, j, s3));
                                    if (!(a == b)) {
                                        bseq = pair_witness(g1, i, g2);
                                        (*bseq)["j"] = j;
                                        (*bseq)["third"] = g3.to_string();
                                        break;
                                    }
                                }
                            // parallel
                            for (int i = 1; i <= n && !bpar; ++i)
                                for (int j = i + 1; j <= n; ++j) {
                                    ++npar;
                                    auto a = compose_graphs(compose_graphs(s1, i, s2), j + m - 1, s3);
                                    auto b = compose_graphs(compose_graphs(s1, j, s3), i, s2);
                                    GraphSum bs(b.n(), k, symmetric);
                                    bs.add(b, parity_sign(static_cast<long long>(g2.weight()) * g3.weight()));
                                    if (!(a == bs)) {
                                        bpar = pair_witness(g1, i, g2);
                                        (*bpar)["j"] = j;
                                        (*bpar)["third"] = g3.to_string();
                                        break;
                                    }
                                }
                        }
                    if (!symmetric || beq) continue;
                    // equivariance on adjacent transpositions of either side
                    for (int p = 1; p <= n && !beq; ++p) {
                        auto base = compose_graphs(g1, p, g2);
                        for (int t = 1; t < n && !beq; ++t) {
                            ++neq;
                            std::vector<int> f(static_cast<std::size_t>(n));
                            std::iota(f.begin(), f.end(), 1);
                            std::swap(f[static_cast<std::size_t>(t - 1)], f[static_cast<std::size_t>(t)]);
                            int fp = f[static_cast<std::size_t>(p - 1)];
                            std::vector<int> big(static_cast<std::size_t>(n + m - 1));
                            for (int v = 1; v <= n; ++v)
                                if (v != p)
                                    big[static_cast<std::size_t>(outer_pos(v, p, m) - 1)] =
                                        outer_pos(f[static_cast<std::size_t>(v - 1)], fp, m);
                            for (int j = 1; j <= m; ++j) big[static_cast<std::size_t>(inner_pos(j, p) - 1)] = inner_pos(j, fp);
                            GraphSum rhs(base.n(), k, true);
                            for (const auto& [g, c] : base.terms()) rhs.add(relabel_graph(g, big), c);
                            if (!(compose_graphs(relabel_graph(g1, f), fp, s2) == rhs)) {
                                beq = pair_witness(g1, p, g2);
                                (*beq)["swap"] = t;
                            }
                        }
                        for (int t = 1; t < m && !beq; ++t) {
                            ++neq;
                            std::vector<int> g(static_cast<std::size_t>(m));
                            std::iota(g.begin(), g.end(), 1);
                            std::swap(g[static_cast<std::size_t>(t - 1)], g[static_cast<std::size_t>(t)]);
                            std::vector<int> big(static_cast<std::size_t>(n + m - 1));
                            std::iota(big.begin(), big.end(), 1);
                            for (int j = 1; j <= m; ++j)
                                big[static_cast<std::size_t>(inner_pos(j, p) - 1)] =
                                    inner_pos(g[static_cast<std::size_t>(j - 1)], p);
                            GraphSum rhs(base.n(), k, true);
                            for (const auto& [h, c] : base.terms()) rhs.add(relabel_graph(h, big), c);
                            if (!(compose_graphs(s1, p, relabel_graph(g2, g)) == rhs)) {
                                beq = pair_witness(g1, p, g2);
                                (*beq)["inner swap"] = t;
                            }
                        }
                    }
                }
        }
    auto put = [&](const std::string& name, std::size_t count, const std::optional<Json>& w) {
        rep.add(CaseResult{name, w ? Status::Fail : Status::Pass, std::to_string(count) + " instances", w});
    };
    std::string tag = std::string(symmetric ? "Gra" : "LGra") + (k == 2 ? "" : std::to_string(k)) + ": ";
    put(tag + "sequential", nseq, bseq);
    put(tag + "parallel", npar, bpar);
    put(tag + "unit", nunit, bunit);
    if (symmetric) put(tag + "equivariance", neq, beq);
    return rep;
}

Report sc_iso_check(const OperadFamily& family, int nmax, int wmax) {
    auto kind = family.kind;
    if (kind != FamilyKind::BKW && kind != FamilyKind::HG && kind != FamilyKind::LG && kind != FamilyKind::LHG)
        throw FamilyError("sc_iso_check needs a family with full relations (BKW, HG, LG, LHG)");
    if (nmax > family.max_arity) throw FamilyError("family built below the requested arity");
    if (wmax < 0) throw GraphError("negative weight bound");
    const int k = family.k;
    const bool sym = family.symmetric;
    Report rep;
    rep.suite = "gra-iso";
    const std::string pre = family.name + ": ";

    // (i) basis
    for (int n = 0; n <= nmax; ++n) {
        const auto& q = family.component(n);
        auto sc = hilbert_series(Realization::Sc, apply_functor(Functor::Antishriek, q), wmax);
        std::vector<std::size_t> graphs, binom;
        for (int w = 0; w <= wmax; ++w) {
            graphs.push_back(graphs_of_weight(n, k, sym, w).size());
            binom.push_back(binomial(q.dim(), static_cast<std::size_t>(w)));
        }
        bool ok = sc == graphs && graphs == binom && complete_edges(n, k, sym).size() == q.dim();
        CaseResult c{pre + "(i) basis n=" + std::to_string(n), ok ? Status::Pass : Status::Fail,
                     "Sc " + dims_string(sc) + ", graphs " + dims_string(graphs) + ", binomial " + dims_string(binom),
                     std::nullopt};
        rep.add(std::move(c));
    }

    // (ii) counit: edgeless composes to edgeless, weight is additive
    {
        std::optional<Json> bad;
        std::size_t count = 0;
        for (int n = 1; n <= nmax && !bad; ++n)
            for (int m = family.min_inner_arity(); n + m - 1 <= nmax && !bad; ++m)
                for (int p = 1; p <= n; ++p) {
                    ++count;
                    auto e = compose_graphs(empty_graph(n, k, sym), p, empty_graph(m, k, sym));
                    if (!(e == GraphSum::of(empty_graph(n + m - 1, k, sym)))) {
                        bad = pair_witness(empty_graph(n, k, sym), p, empty_graph(m, k, sym));
                        break;
                    }
                    for (int w1 = 0; w1 <= wmax && !bad; ++w1)
                        for (const auto& g1 : graphs_of_weight(n, k, sym, w1))
                            for (int w2 = 0; w1 + w2 <= wmax && !bad; ++w2)
                                for (const auto& g2 : graphs_of_weight(m, k, sym, w2)) {
                                    auto c12 = compose_graphs(g1, p, g2);
                                    for (const auto& [g, c] : c12.terms())
                                        if (g.weight() != w1 + w2) bad = pair_witness(g1, p, g2);
                                    if (bad) break;
                                }
                }
        rep.add(CaseResult{pre + "(ii) counit", bad ? Status::Fail : Status::Pass,
                           std::to_string(count) + " insertions", bad});
    }

    // (iii) single-edge projection against the family's composition maps
    {
        std::optional<Json> bad;
        std::size_t count = 0;
        auto as_row = [&](const GraphSum& s, int n) {
            std::map<std::uint32_t, Scalar> acc;
            for (const auto& [g, c] : s.terms()) {
                if (g.weight() != 1) return std::optional<std::map<std::uint32_t, Scalar>>{};
                auto idx = family.index_of(n, g.edges[0]);
                if (!idx) return std::optional<std::map<std::uint32_t, Scalar>>{};
                acc[static_cast<std::uint32_t>(*idx)] += c;
            }
            std::erase_if(acc, [](const auto& kv) { return kv.second == 0; });
            return std::optional<std::map<std::uint32_t, Scalar>>{acc};
        };
        auto rule_row = [](const QRow& r) {
            std::map<std::uint32_t, Scalar> acc;
            for (const auto& e : r) acc[static_cast<std::uint32_t>(e.col)] += e.val;
            std::erase_if(acc, [](const auto& kv) { return kv.second == 0; });
            return acc;
        };
        for (int n = 1; n <= nmax && !bad; ++n)
            for (int m = family.min_inner_arity(); n + m - 1 <= nmax && !bad; ++m)
                for (int p = 1; p <= n && !bad; ++p) {
                    const int t = n + m - 1;
                    const auto& gn = family.gens[static_cast<std::size_t>(n)];
                    const auto& gm = family.gens[static_cast<std::size_t>(m)];
                    for (std::size_t i = 0; i < gn.size() && !bad; ++i) {
                        ++count;
                        auto g1 = make_graph(n, k, sym, {gn[i]});
                        auto got = as_row(compose_graphs(g1, p, empty_graph(m, k, sym)), t);
                        if (!got || *got != rule_row(family.rule(n, m, p, true, i))) {
                            bad = pair_witness(g1, p, empty_graph(m, k, sym));
                        }
                    }
                    for (std::size_t i = 0; i < gm.size() && !bad; ++i) {
                        ++count;
                        auto g2 = make_graph(m, k, sym, {gm[i]});
                        auto got = as_row(compose_graphs(empty_graph(n, k, sym), p, g2), t);
                        if (!got || *got != rule_row(family.rule(n, m, p, false, i)))
                            bad = pair_witness(empty_graph(n, k, sym), p, g2);
                    }
                }
        rep.add(CaseResult{pre + "(iii) projection", bad ? Status::Fail : Status::Pass,
                           std::to_string(count) + " generators", bad});
    }

    // (iv) Hopf compatibility
    for (auto c : hopf_check(k, sym, nmax, wmax).cases) {
        c.name = pre + "(iv) " + c.name;
        rep.add(std::move(c));
    }
    return rep;
}

std::vector<std::size_t> holonomy_dims(const OperadFamily& family, int n, int wmax) {
    auto d = hilbert_series(Realization::L, family.component(n), wmax);
    d.erase(d.begin());
    return d;
}

Report gerstenhaber_dim_check(int k, int nmax) {
    if (k != 2 && k != 3) throw GraphError("gerstenhaber_dim_check supports k = 2 and k = 3");
    if (nmax < 1) throw GraphError("nmax must be positive");
    Report rep;
    rep.suite = "gra-iso";
    auto fam = build_family(k == 2 ? FamilyKind::DK : FamilyKind::EHKR, k, nmax);
    std::size_t fact = 1;
    for (int n = 1; n <= nmax; ++n) {
        fact *= static_cast<std::size_t>(n);
        auto d = hilbert_series(Realization::Sc, apply_functor(Functor::Antishriek, fam.component(n)), n);
        std::size_t total = std::accumulate(d.begin(), d.end(), std::size_t{0});
        std::string name = (k == 2 ? "DK" : "EHKR") + std::string(" n=") + std::to_string(n);
        if (k == 2) {
            rep.add(name, total == fact,
                    dims_string(d) + " total " + std::to_string(total) + (total == fact ? " = " : " != ") +
                        std::to_string(n) + "!");
        } else {
            // TODO: forest-count oracle for uGerst_(2)
            rep.add(CaseResult{name, Status::Info, "experimental, " + dims_string(d) + " total " + std::to_string(total),
                               std::nullopt});
        }
    }
    return rep;
}

}  // namespace qdk
