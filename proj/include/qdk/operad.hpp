#pragma once

#include "qdk/qd.hpp"
#include "qdk/report.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace qdk {

struct FamilyError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct IndexError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class FamilyKind { BKW, DK, HG, RHG, EHKR, LG, LHG };
std::string family_kind_name(FamilyKind k);
FamilyKind parse_family_kind(const std::string& s);

// Sorted 1-based vertex list; an interval for the linear families.
using Hyperedge = std::vector<int>;

// Operad in (QD^-, ⊕) truncated at max_arity.
struct OperadFamily {
    std::string name;
    FamilyKind kind = FamilyKind::BKW;
    int k = 2;
    bool symmetric = true;
    int max_arity = 0;
    std::vector<std::vector<Hyperedge>> gens;  // per arity
    std::vector<QuadraticData> comps;          // per arity, flavor Skew

    // Image of generator `idx` of V(n) (outer) or V(m) (inner) under ∘_p, over V(n+m-1).
    std::function<QRow(int n, int m, int p, bool outer, std::size_t idx)> rule;

    const QuadraticData& component(int n) const;
    std::optional<std::size_t> index_of(int n, const Hyperedge& e) const;
    // Linear families have no arity-0 insertions.
    int min_inner_arity() const { return symmetric ? 0 : 1; }
    // ∘_p : V(n)⊕V(m) -> V(n+m-1)
    LinearMap comp(int n, int m, int p) const;
    // Right action t_I·σ = t_{σ^{-1}(I)}; sigma[v-1] = σ(v).
    LinearMap action(int n, const std::vector<int>& sigma) const;
};

std::string generator_label(const std::string& letter, const Hyperedge& e);

// HG(k) and friends; k is ignored for BKW, DK, EHKR and LG.
OperadFamily build_family(FamilyKind kind, int k, int max_arity);
OperadFamily build_family(const std::string& name, int k, int max_arity);

Vector compose(const OperadFamily& f, int n, int m, int p, const Vector& x);

Report verify_axioms(const OperadFamily& f, int nmax);
Report verify_relation_morphism(const OperadFamily& f, int nmax);

// Smallest relation spaces making every ∘_p a morphism (and closed under the
// symmetric group action), arities ≤ nmax. A non-null rng shuffles the schedule.
OperadFamily minimal_suboperad(const OperadFamily& shell, int nmax, Rng* schedule = nullptr);

enum class Inclusion { Equal, Proper, Reverse, Incomparable };
std::string inclusion_name(Inclusion i);

struct FamilyComparison {
    Inclusion verdict = Inclusion::Equal;
    Report report;
};
FamilyComparison compare_families(const OperadFamily& a, const OperadFamily& b, int nmax);

// Relation dims per arity 0..nmax.
std::vector<std::size_t> relation_dims(const OperadFamily& f, int nmax);
Json family_to_json(const OperadFamily& f, int nmax);

// Named quadratic data: AOS(n) by its Arnold relations, and the literal
// pentagon presentation of the dual of EHKR(n).
QuadraticData aos_qd(int n);
// antisymmetric: ω_{σ(I)} = sgn(σ) ω_I; otherwise ω is indexed by sets.
QuadraticData ehkr_pentagon_qd(int n, bool antisymmetric);
// span{ω_I ⊙ ω_J : |I∩J| = 2} over the same generators.
Subspace ehkr_overlap_span(const QuadraticData& pent);

}  // namespace qdk
