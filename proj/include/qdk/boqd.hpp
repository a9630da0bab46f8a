#pragma once

#include "qdk/qd.hpp"
#include "qdk/report.hpp"

#include <array>
#include <string>
#include <vector>

namespace qdk {

struct BoqdError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Graded S₂-module: action is the transposition (12), degree zero, squaring to 1.
struct S2Module {
    GradedSpace space;
    LinearMap action = LinearMap::identity(space.ambient());

    S2Module() = default;
    S2Module(GradedSpace v, LinearMap act);
    static S2Module trivial(GradedSpace v);
    static S2Module sign(GradedSpace v);

    std::size_t dim() const { return space.dim(); }
    Subspace invariants() const;       // 𝒜₁⁺
    Subspace anti_invariants() const;  // 𝒜₁⁻
};

S2Module s2_dual(const S2Module& m);  // contragredient: transpose action
S2Module s2_direct_sum(const S2Module& a, const S2Module& b);
S2Module s2_tensor(const S2Module& a, const S2Module& b);  // diagonal action

// Arity-3 component of the free operad on an S₂-module, basis τᵢ(a,a'):
//   τ₁(a,a')(x,y,z) = a(a'(x,y),z), τ₂ = a(a'(y,z),x), τ₃ = a(a'(z,x),y).
// Basis index (i-1)·d² + a·d + a'.
class Arity3Space {
public:
    Arity3Space() : Arity3Space(S2Module()) {}
    explicit Arity3Space(S2Module m);

    const S2Module& base() const { return base_; }
    const AmbientPtr& ambient() const { return amb_; }
    std::size_t dim() const { return amb_->dim(); }
    std::size_t index(int i, std::size_t a, std::size_t b) const;
    // τᵢ(x, y) for x, y given as coordinate rows over the base.
    QRow tau(int i, const QRow& x, const QRow& y) const;

    // (μ·σ)(x₁,x₂,x₃) = μ(x_{σ(1)},x_{σ(2)},x_{σ(3)}); sigma[k] = σ(k+1).
    // act(ρ)∘act(σ) = act(ρ∘σ).
    LinearMap act(const std::array<int, 3>& sigma) const;
    const LinearMap& transposition() const { return s12_; }
    const LinearMap& cycle() const { return s123_; }

    Subspace closure(const std::vector<QRow>& rows) const;
    bool is_closed(const Subspace& s) const;
    std::string row_string(const QRow& r) const;

private:
    S2Module base_;
    AmbientPtr amb_;
    LinearMap s12_, s123_;
};

Arity3Space free_arity3(const S2Module& m);

struct BOQDData {
    S2Module gens;
    Arity3Space space;
    Subspace r = Subspace::zero(space.ambient());

    std::size_t dim() const { return gens.dim(); }
};

// Throws BoqdError unless R is S₃-closed. R may sit over any ambient of the right dimension.
BOQDData make_boqd(S2Module gens, const Subspace& r);
BOQDData make_boqd(S2Module gens, const std::vector<QRow>& rows);
// Relations are the S₃-closure of the given rows.
BOQDData make_boqd_closed(S2Module gens, const std::vector<QRow>& rows);

// One invariant degree-0 generator "m", R = <τ₁-τ₂, τ₂-τ₃>.
BOQDData com_boqd();
BOQDData lie_boqd();  // R = <τ₁+τ₂+τ₃>

enum class BoqdProduct { Black, White, Vee, Oplus, TriL, TriR, UCirc, Circ };
std::string boqd_product_name(BoqdProduct p);
BoqdProduct parse_boqd_product(const std::string& s);
// Generators A₁⊗B₁ for • and ∘, A₁⊕B₁ otherwise.
bool product_is_tensor(BoqdProduct p);

BOQDData boqd_product(BoqdProduct p, const BOQDData& a, const BOQDData& b);
// Ψ(X⊗Y) inside T(A₁⊗B₁)(3); X, Y given by rows over the arity-3 spaces of a, b.
Subspace psi_span(const Arity3Space& a, const std::vector<QRow>& x, const Arity3Space& b,
                  const std::vector<QRow>& y, const Arity3Space& target);
// Pairing <τᵢ(a,a'), τⱼ(α,α')> = δᵢⱼ α(a) α'(a').
BOQDData boqd_dual(const BOQDData& a);
// Degrees, action and relations agree; labels ignored.
bool same_boqd(const BOQDData& a, const BOQDData& b);

// τᵢ(a,a') ↦ τᵢ(f a, f a').
LinearMap arity3_map(const LinearMap& f, const Arity3Space& src, const Arity3Space& tgt);

// pr₁₄ on generators, checked at arity 3: (A⊙̲A')•(B⊙̲B') -> (A•B)⊙̲(A'•B').
Report boqd_phi_check(const BOQDData& a, const BOQDData& a2, const BOQDData& b, const BOQDData& b2);
// inj₁₄: (A∘A')⊙(B∘B') -> (A⊙B)∘(A'⊙B').
Report boqd_psi_check(const BOQDData& a, const BOQDData& a2, const BOQDData& b, const BOQDData& b2);
// outer ∈ {•, ∘}, inner ∈ {∨, ⊕, ◁, ▷}: lax pr₁₄ (A◇A')□(B◇B') -> (A□B)◇(A'□B')
// and colax inj₁₄ in the other direction.
Report boqd_quintuple_check(BoqdProduct outer, BoqdProduct inner, const BOQDData& a, const BOQDData& a2,
                            const BOQDData& b, const BOQDData& b2);
Report koszul_involution_check(const BOQDData& a, const BOQDData& b);

S2Module random_s2_module(Rng& rng, int max_dim, const std::string& prefix = "a");
BOQDData random_boqd(Rng& rng, int max_dim, const std::string& prefix = "a");

// { generators, action: [[p/q]], relations: [[p/q]] }
Json boqd_to_json(const BOQDData& a);
BOQDData boqd_from_json(const Json& j);

}  // namespace qdk
