#pragma once

#include "qdk/qd.hpp"
#include "qdk/report.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace qdk {

enum class Realization { A, S, Tc, Sc, L };
std::string realization_name(Realization r);
Realization parse_realization(const std::string& s);

// span holds: the relation slice of the weight ambient for A (layered
// ambient A^{(w-1)}⊗V) and S (signed symmetric monomials), the component
// itself for Tc (in V^{⊗w}) and Sc (orbit-sum basis), and the ideal slice
// for L (in V^{⊗w}).
struct WeightComponent {
    Realization kind = Realization::A;
    int weight = 0;
    std::size_t dim = 0;
    std::optional<Subspace> span;
};

// Plain data is required for A and Tc; skew data is lifted by Λ for A, and
// symmetric data by 𝒮 for A and by Σ for Tc.
WeightComponent weight_component(Realization r, const QuadraticData& q, int w);
std::vector<std::size_t> hilbert_series(Realization r, const QuadraticData& q, int wmax);

// Weight dims of L split by parity of homological degree: [w][0] even, [w][1] odd.
std::vector<std::array<std::size_t, 2>> lie_dims_by_parity(const QuadraticData& q, int wmax);

struct LieMonomial {
    std::vector<std::size_t> word;
    std::string bracket;  // e.g. "[x0,[x0,x1]]"
    int degree = 0;
    QRow tensor;  // expansion in V^{⊗w}, index row-major in the letters
};

// Standard bracketings of Lyndon words of length w, plus [u,u] for Lyndon
// words u of length w/2 and odd degree.
std::vector<LieMonomial> lyndon_basis(const GradedSpace& v, int w);
// Graded Witt count: the number of elements lyndon_basis returns.
std::size_t witt_count(const GradedSpace& v, int w);

// PBW prediction: coefficients of ∏ (1+t^w)^{odd_w} / (1-t^w)^{even_w}.
std::vector<std::size_t> pbw_series(const std::vector<std::array<std::size_t, 2>>& lie, int wmax);

CaseResult ue_compare(const QuadraticData& q, int wmax);

// Coefficients of h_A(t) h_{A^!}(-t) modulo t^{wmax+1}; PASS if 1, INFO otherwise.
struct EulerResult {
    std::vector<long long> product;
    std::vector<std::size_t> left, right;
    CaseResult result;
};
EulerResult koszul_euler_check(const QuadraticData& q, int wmax);

// Signed symmetric monomials of weight w: sorted index sequences with odd
// generators at most once.
std::vector<std::vector<std::uint32_t>> symmetric_monomials(const GradedSpace& v, int w);

}  // namespace qdk
