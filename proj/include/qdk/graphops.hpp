#pragma once

#include "qdk/operad.hpp"
#include "qdk/report.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace qdk {

struct GraphError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Vertices 1..n, hyperedges of size k (intervals when !symmetric), each of degree 1.
// Edges are kept in lexicographic order.
struct LabeledHypergraph {
    int n = 0;
    int k = 2;
    bool symmetric = true;
    std::vector<Hyperedge> edges;

    int weight() const { return static_cast<int>(edges.size()); }
    // "n=4;k=2;edges=12,34", ";linear" appended for ns graphs. Vertices are
    // dot-separated once n > 9.
    std::string to_string() const;

    auto key() const { return std::tie(n, k, symmetric, edges); }
    bool operator<(const LabeledHypergraph& o) const { return key() < o.key(); }
    bool operator==(const LabeledHypergraph& o) const { return key() == o.key(); }
};

// Sorts the edge list in place; returns the signature of the sort, 0 on a repeated edge.
int sort_edges(std::vector<Hyperedge>& edges);

// Validates and canonicalizes. sign receives the reordering sign.
LabeledHypergraph make_graph(int n, int k, bool symmetric, std::vector<Hyperedge> edges, int* sign = nullptr);
LabeledHypergraph empty_graph(int n, int k, bool symmetric);
LabeledHypergraph parse_graph(const std::string& s);

// Hyperedges of the complete (linear) k-hypergraph on n vertices, lexicographic.
std::vector<Hyperedge> complete_edges(int n, int k, bool symmetric);
std::vector<LabeledHypergraph> graphs_of_weight(int n, int k, bool symmetric, int w);

class GraphSum {
public:
    GraphSum() = default;
    GraphSum(int n, int k, bool symmetric) : n_(n), k_(k), sym_(symmetric) {}
    // Signed single term from an arbitrary edge order.
    static GraphSum from_edges(int n, int k, bool symmetric, std::vector<Hyperedge> edges);
    static GraphSum of(const LabeledHypergraph& g);

    int n() const { return n_; }
    int k() const { return k_; }
    bool symmetric() const { return sym_; }
    const std::map<LabeledHypergraph, Scalar>& terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }

    void add(const LabeledHypergraph& g, const Scalar& c);
    void add(const GraphSum& s, const Scalar& c = 1);
    bool operator==(const GraphSum& o) const { return terms_ == o.terms_; }

    // [{coeff: "p/q", graph: "..."}]
    Json to_json() const;

private:
    int n_ = 0, k_ = 2;
    bool sym_ = true;
    std::map<LabeledHypergraph, Scalar> terms_;
};

// γ₁ ∘_p γ₂. Outer edges come before inner edges before sorting.
GraphSum compose_graphs(const LabeledHypergraph& g1, int p, const LabeledHypergraph& g2);
GraphSum compose_graphs(const GraphSum& a, int p, const GraphSum& b);

// New label of vertex v is f[v-1]; f a permutation. Symmetric graphs only.
GraphSum relabel_graph(const LabeledHypergraph& g, const std::vector<int>& f);
// Right action γ·σ = γ with edges σ^{-1}(I).
GraphSum act_graph(const LabeledHypergraph& g, const std::vector<int>& sigma);

using GraphTensor = std::map<std::pair<LabeledHypergraph, LabeledHypergraph>, Scalar>;

// Sum over ordered 2-partitions of the edges. The unshuffle sign can be
// switched off for negative controls.
GraphTensor coproduct(const LabeledHypergraph& g, bool unshuffle_sign = true);
Json graph_tensor_to_json(const GraphTensor& t);

// Δ(γ₁∘γ₂) = Δγ₁ ∘ Δγ₂ over all pairs with n+m-1 ≤ nmax and w₁+w₂ ≤ wmax,
// plus coassociativity and cocommutativity up to nmax, wmax.
Report hopf_check(int k, bool symmetric, int nmax, int wmax, bool unshuffle_sign = true);
// Sequential, parallel, unit and (symmetric case) equivariance.
Report graph_operad_axioms(int k, bool symmetric, int nmax, int wmax);

// Family must have full relations: BKW, HG, LG or LHG.
Report sc_iso_check(const OperadFamily& family, int nmax, int wmax);

// Weights 1..wmax of L(family(n)).
std::vector<std::size_t> holonomy_dims(const OperadFamily& family, int n, int wmax);

// k = 2: Σ_w dim Sc(DK(n)^¡) = n! for 1 ≤ n ≤ nmax. k = 3 reports EHKR dims as INFO.
Report gerstenhaber_dim_check(int k, int nmax);

}  // namespace qdk
