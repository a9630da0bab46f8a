#pragma once

#include "qdk/exactlin.hpp"

#include <string>
#include <vector>

namespace qdk {

struct ArityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Generator {
    std::string label;
    int degree = 0;
    bool operator==(const Generator&) const = default;
};

class GradedSpace {
public:
    GradedSpace();
    explicit GradedSpace(std::vector<Generator> basis);

    std::size_t dim() const { return basis_.size(); }
    const Generator& operator[](std::size_t i) const { return basis_.at(i); }
    const std::vector<Generator>& basis() const { return basis_; }
    int degree(std::size_t i) const { return basis_.at(i).degree; }
    const std::string& label(std::size_t i) const { return basis_.at(i).label; }
    std::vector<int> degrees() const;
    // Paired ambient (dual labels follow dual_label()).
    const AmbientPtr& ambient() const { return amb_; }

    bool operator==(const GradedSpace& o) const { return basis_ == o.basis_; }
    bool operator!=(const GradedSpace& o) const { return !(*this == o); }

private:
    std::vector<Generator> basis_;
    AmbientPtr amb_;
};

inline const char* kTensorSep = "⊗";  // ⊗

// Toggle the trailing '*' of every top-level tensor factor.
std::string dual_label(const std::string& label);
std::string shift_label(const std::string& label, int k);

GradedSpace tensor_product(const GradedSpace& v, const GradedSpace& w);
GradedSpace tensor_power(const GradedSpace& v, int n);
// Concatenation; colliding labels of w get primes appended.
GradedSpace direct_sum(const GradedSpace& v, const GradedSpace& w);
GradedSpace shift(const GradedSpace& v, int k);
GradedSpace dual(const GradedSpace& v);

// perm[k] is the source position of the factor placed at output position k.
int koszul_sign(const std::vector<int>& degrees, const std::vector<std::size_t>& perm);

inline int parity_sign(long long e) { return (e % 2 == 0) ? 1 : -1; }

// Signed permutation of tensor factors: ⊗ factors -> ⊗ factors[perm[k]].
LinearMap permute_factors(const std::vector<GradedSpace>& factors, const std::vector<std::size_t>& perm);
// v⊗w -> (-1)^{|v||w|} w⊗v
LinearMap braiding(const GradedSpace& v, const GradedSpace& w);
// Square of a one-step shift: x⊗y -> (-1)^{|x|} sx⊗sy for k = +1, and its
// inverse for k = -1.
LinearMap shift_square_map(const GradedSpace& v, int k);
// f⊗g for degree-zero maps between graded spaces.
LinearMap tensor_map(const LinearMap& f, const LinearMap& g, const GradedSpace& src1,
                     const GradedSpace& src2, const GradedSpace& tgt1, const GradedSpace& tgt2);
LinearMap square_map(const LinearMap& f, const GradedSpace& src, const GradedSpace& tgt);
// Degree-zero check: every column only hits generators of the source degree.
bool is_degree_zero(const LinearMap& f, const GradedSpace& src, const GradedSpace& tgt);

struct TensorSquareSplit {
    AmbientPtr whole;
    Subspace sym;
    Subspace alt;
};

TensorSquareSplit square_split(const GradedSpace& v);
// x⊗y ± (-1)^{|x||y|} y⊗x as a vector of V^{⊗2}.
QRow sym_element(const GradedSpace& v, std::size_t i, std::size_t j, int sign);
// [V,W]_± inside (V⊕W)^{⊗2}; the ambient is that of direct_sum(v, w) squared.
Subspace mixed_bracket(const GradedSpace& v, const GradedSpace& w, int sign);
// Embedding V^{⊗2} -> (V⊕W)^{⊗2} (first = true) or W^{⊗2} -> (V⊕W)^{⊗2}.
LinearMap square_inclusion(const GradedSpace& v, const GradedSpace& w, bool first);
// Homogeneous components: subspace is graded iff it equals the sum of its
// projections to the degree pieces of the ambient.
bool is_graded_subspace(const Subspace& s, const std::vector<int>& ambient_degrees);

}  // namespace qdk
