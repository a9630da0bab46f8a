#pragma once

#include "qdk/realize.hpp"

#include <optional>
#include <string>
#include <vector>

namespace qdk {

// Faces of the functor cube and the monoidal structure maps of its edges.
enum class DiagramFace {
    TopExtreme,       // !Λ = 𝒮!            skew
    TopLeft,          // ¡Λ = Σ¡            skew
    TopRight,         // *Σ = 𝒮*            symmetric
    Back,             // Tc(V,R)* ~ A(V*,R^⊥)   plain, dims
    Front,            // Sc(V,R)* ~ S(V*,R^⊥)   symmetric, dims
    LeftVertical,     // U(L(V,R)) ~ A(ΛR)      skew, dims
    RightVertical,    // S(V,R) ~ A(𝒮R)         symmetric, dims
    CentralVertical,  // Sc(V,R) ~ Tc(ΣR)       symmetric, dims
    MiddleLeft,       // Sc(¡q) ~ Tc(¡Λq)       skew, dims
    MonoidalLambda,   // Λa ⊗ Λb = Λ(a ⊕ b)
    MonoidalSigma,    // Σa ⊗̲ Σb = Σ(a ⊗̲ b)
    MonoidalScriptS,  // 𝒮a ⊗ 𝒮b = 𝒮(a ∨ b)
    MonoidalAntishriek,
    MonoidalStar,
    MonoidalShriek,
    MonoidalA,   // A(a ⊗ b) = A(a) ⊗ A(b), dims
    MonoidalTc,  // Tc(a ⊗̲ b)
    MonoidalS,   // S(a ∨ b)
    MonoidalSc,  // Sc(a ⊗̲ b)
    MonoidalL,   // L(a ⊕ b) = L(a) ⊕ L(b)
};

std::string face_name(DiagramFace f);
DiagramFace parse_face(const std::string& s);
const std::vector<DiagramFace>& all_faces();
// Flavors the face accepts for its input.
std::vector<Flavor> face_flavors(DiagramFace f);

// b is used by the monoidal faces (defaults to a). Throws FlavorMismatch if
// the face does not apply to a's flavor.
Report verify_diagram_face(DiagramFace face, const QuadraticData& a, const std::optional<QuadraticData>& b = {},
                           int wmax = 4);

// Truncated product of two series.
std::vector<std::size_t> series_product(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b);

}  // namespace qdk
