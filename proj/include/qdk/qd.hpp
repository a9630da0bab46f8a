#pragma once

#include "qdk/graded.hpp"
#include "qdk/rng.hpp"

#include <optional>
#include <string>

namespace qdk {

enum class Flavor { Plain, Symmetric, Skew };

struct FlavorMismatch : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct FlavorViolation : std::runtime_error {
    FlavorViolation(const std::string& what, Vector w) : std::runtime_error(what), witness(std::move(w)) {}
    Vector witness;
};

std::string flavor_name(Flavor f);
Flavor parse_flavor(const std::string& s);

// (V, R) with R stored inside the full square V^{⊗2}.
struct QuadraticData {
    Flavor flavor = Flavor::Plain;
    GradedSpace v;
    AmbientPtr square = Ambient::make_paired({}, {});  // ambient of V^{⊗2}
    Subspace r = Subspace::zero(square);

    std::size_t dim() const { return v.dim(); }
};

// Sub-ambient allowed by the flavor: all of V^{⊗2}, V^{⊙2} or V^{∧2}.
Subspace flavor_ambient(Flavor f, const GradedSpace& v);

// R may sit over any ambient of dimension dim(V)^2; it is relabelled.
QuadraticData make_qd(Flavor f, GradedSpace v, const Subspace& r);
QuadraticData make_qd(Flavor f, GradedSpace v, const std::vector<QRow>& rows);
QuadraticData zero_qd(Flavor f);

// Equality of relation spaces and degrees, ignoring labels.
bool same_data(const QuadraticData& a, const QuadraticData& b);

struct MorphismCheck {
    bool ok = false;
    std::optional<Vector> counterexample;  // vector of f^{⊗2}(R_a) outside R_b
    std::string reason;
};

MorphismCheck check_morphism(const LinearMap& f, const QuadraticData& a, const QuadraticData& b);

enum class Product { Tensor, UTensor, Vee, Oplus, Black, White };
std::string product_name(Product p);
Product parse_product(const std::string& s);

QuadraticData monoidal_product(Product p, const QuadraticData& a, const QuadraticData& b);
// (0,0) for the direct-sum products; (<e>,<e⊗e>) for • and (<e>,0) for ∘.
QuadraticData product_unit(Product p, Flavor f);
// Generator map realising the symmetry a·b -> b·a.
LinearMap product_braiding(Product p, const QuadraticData& a, const QuadraticData& b);

// Middle swap V⊗V⊗W⊗W -> (V⊗W)^{⊗2} with Koszul sign.
LinearMap s23(const GradedSpace& v, const GradedSpace& w);
// span{x⊗y : x in a, y in b} over a⊗b ambient.
Subspace tensor_subspace(const Subspace& a, const Subspace& b, const AmbientPtr& amb);

enum class Functor { Lambda, Sigma, ScriptS, Antishriek, Star, Shriek, AntishriekInv, StarInv };
std::string functor_name(Functor f);
Functor parse_functor(const std::string& s);

QuadraticData apply_functor(Functor f, const QuadraticData& a);

struct InterchangeResult {
    QuadraticData source;
    QuadraticData target;
    LinearMap map;
    MorphismCheck check;
};

// pr₁₄ : (A⊗̲A′)•(B⊗̲B′) -> (A•B)⊗̲(A′•B′)
InterchangeResult interchange_phi(const QuadraticData& a, const QuadraticData& a2, const QuadraticData& b,
                                  const QuadraticData& b2);
// inj₁₄ : (A∘B)⊗(A′∘B′) -> (A⊗A′)∘(B⊗B′)
InterchangeResult interchange_psi(const QuadraticData& a, const QuadraticData& a2, const QuadraticData& b,
                                  const QuadraticData& b2);
// pr₁₄ / inj₁₄ on generators for dims (da, da2) and (db, db2).
LinearMap pr14(const GradedSpace& a, const GradedSpace& a2, const GradedSpace& b, const GradedSpace& b2);
LinearMap inj14(const GradedSpace& a, const GradedSpace& a2, const GradedSpace& b, const GradedSpace& b2);

struct AssociatorCheck {
    bool ok = false;
    std::string reason;
};
// Both composites ((A⊗̲A′)•(B⊗̲B′))•(C⊗̲C′) -> (A•B•C)⊗̲(A′•B′•C′) agree and are morphisms.
AssociatorCheck phi_associator_check(const QuadraticData& a, const QuadraticData& a2, const QuadraticData& b,
                                     const QuadraticData& b2, const QuadraticData& c, const QuadraticData& c2);

// Random data: generators of degree in [dlo, dhi], graded relations in the
// flavor ambient.
GradedSpace random_graded_space(Rng& rng, int max_dim, int dlo, int dhi, const std::string& prefix);
QuadraticData random_qd(Rng& rng, Flavor f, int max_dim, int dlo = 0, int dhi = 1,
                        const std::string& prefix = "x");
// Random graded subspace of a homogeneous spanning set.
Subspace random_graded_subspace(Rng& rng, const AmbientPtr& amb, const std::vector<QRow>& homogeneous,
                                const std::vector<int>& degrees_of_rows);

}  // namespace qdk
