#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace qdk {

using Integer = mpz_class;
using Scalar = mpq_class;

struct LinAlgError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct AmbientMismatch : LinAlgError {
    using LinAlgError::LinAlgError;
};
struct PairingMissing : LinAlgError {
    using LinAlgError::LinAlgError;
};

// Always "p/q", also for integers.
std::string to_string(const Scalar& s);
Scalar parse_scalar(std::string_view text);

// Sparse rows. Entries sorted by column, no explicit zeros.
struct QEntry {
    std::uint32_t col;
    Scalar val;
    bool operator==(const QEntry& o) const { return col == o.col && val == o.val; }
};
using QRow = std::vector<QEntry>;

struct IEntry {
    std::uint32_t col;
    Integer val;
};
using IRow = std::vector<IEntry>;

// Scale to a primitive integer row with positive leading entry.
IRow primitive(const QRow& r);
void make_primitive(IRow& r);
QRow to_qrow(const IRow& r);  // leading entry normalised to 1
QRow to_qrow_raw(const IRow& r);
QRow qrow_from_dense(const std::vector<Scalar>& d);
std::vector<Scalar> dense(const QRow& r, std::size_t dim);
void qrow_axpy(QRow& y, const Scalar& a, const QRow& x);  // y += a*x
QRow qrow_scaled(const QRow& x, const Scalar& a);

// Labeled basis. A dual pairing is declared by supplying dual labels.
class Ambient {
public:
    static std::shared_ptr<const Ambient> make(std::vector<std::string> labels);
    static std::shared_ptr<const Ambient> make_paired(std::vector<std::string> labels,
                                                      std::vector<std::string> dual_labels);
    static std::shared_ptr<const Ambient> coordinates(std::size_t dim);  // labels "e0".."e{n-1}", paired

    std::size_t dim() const { return labels_.size(); }
    const std::string& label(std::size_t i) const { return labels_.at(i); }
    const std::vector<std::string>& labels() const { return labels_; }
    bool has_pairing() const { return dual_labels_.has_value(); }
    std::shared_ptr<const Ambient> dual() const;
    std::optional<std::size_t> index_of(const std::string& label) const;

private:
    std::vector<std::string> labels_;
    std::optional<std::vector<std::string>> dual_labels_;
    std::shared_ptr<const std::unordered_map<std::string, std::size_t>> index_;
};
using AmbientPtr = std::shared_ptr<const Ambient>;

bool same_ambient(const AmbientPtr& a, const AmbientPtr& b);

class Vector {
public:
    Vector(AmbientPtr amb, QRow entries);
    static Vector from_dense(AmbientPtr amb, const std::vector<Scalar>& coords);
    static Vector basis(AmbientPtr amb, std::size_t i);

    const AmbientPtr& ambient() const { return amb_; }
    const QRow& entries() const { return entries_; }
    std::vector<Scalar> coords() const { return dense(entries_, amb_->dim()); }
    Scalar coeff(std::size_t i) const;
    bool is_zero() const { return entries_.empty(); }
    bool operator==(const Vector& o) const;

private:
    AmbientPtr amb_;
    QRow entries_;
};

// Incremental fraction-free elimination. Rows are kept primitive with
// positive leading entry; rank grows monotonically.
class RowEchelon {
public:
    explicit RowEchelon(std::size_t ncols);

    std::size_t ncols() const { return ncols_; }
    std::size_t rank() const { return rows_.size(); }
    bool insert(IRow v);
    bool insert(const QRow& v) { return insert(primitive(v)); }
    bool contains(IRow v) const;
    bool contains(const QRow& v) const { return contains(primitive(v)); }
    // Leading-term reduction; the result is zero iff v lies in the span.
    IRow reduce(IRow v) const;
    // Reduce every pivot column away (normal form modulo the span).
    IRow full_reduce(IRow v) const;
    // Canonical reduced echelon basis, sorted by pivot.
    std::vector<IRow> reduced_rows() const;
    std::vector<std::uint32_t> pivots() const;

private:
    std::size_t ncols_;
    std::vector<IRow> rows_;
    std::vector<std::int32_t> pivot_row_;
};

class LinearMap;

class Subspace {
public:
    static Subspace zero(AmbientPtr amb);
    static Subspace full(AmbientPtr amb);
    // Canonicalises arbitrary rows.
    static Subspace from_rows(AmbientPtr amb, const std::vector<IRow>& rows);
    static Subspace from_qrows(AmbientPtr amb, const std::vector<QRow>& rows);
    static Subspace from_echelon(AmbientPtr amb, const RowEchelon& e);

    const AmbientPtr& ambient() const { return amb_; }
    std::size_t dim() const { return rows_.size(); }
    std::size_t ambient_dim() const { return amb_->dim(); }
    const std::vector<IRow>& int_rows() const { return rows_; }
    std::vector<QRow> qrows() const;
    std::vector<Vector> basis() const;
    std::vector<std::vector<Scalar>> matrix() const;
    const std::vector<std::uint32_t>& pivots() const { return pivots_; }

    bool contains(const Vector& v) const;
    bool contains(const QRow& v) const;
    bool contains(const Subspace& o) const;
    // First basis vector of o not in this, if any.
    std::optional<Vector> first_outside(const Subspace& o) const;
    // Same row space placed over another ambient of equal dimension.
    Subspace relabel(AmbientPtr amb) const;

    bool operator==(const Subspace& o) const;
    bool operator!=(const Subspace& o) const { return !(*this == o); }

private:
    Subspace(AmbientPtr amb, std::vector<IRow> rows);
    AmbientPtr amb_;
    std::vector<IRow> rows_;
    std::vector<std::uint32_t> pivots_;
};

Subspace span(const AmbientPtr& amb, const std::vector<Vector>& vectors);
Subspace span(const std::vector<Vector>& vectors);  // non-empty
Subspace sum(const Subspace& a, const Subspace& b);
Subspace intersect(const Subspace& a, const Subspace& b);
// Annihilator in the declared dual ambient.
Subspace annihilator(const Subspace& a);
// Annihilator using plain coordinates, kept over the same ambient.
std::vector<IRow> orthogonal_rows(const std::vector<IRow>& rref_rows, std::size_t ncols);

class LinearMap {
public:
    LinearMap(AmbientPtr src, AmbientPtr tgt, std::vector<QRow> columns);
    static LinearMap identity(const AmbientPtr& amb);
    static LinearMap zero(const AmbientPtr& src, const AmbientPtr& tgt);
    static LinearMap from_dense(const AmbientPtr& src, const AmbientPtr& tgt,
                                const std::vector<std::vector<Scalar>>& matrix);

    const AmbientPtr& source() const { return src_; }
    const AmbientPtr& target() const { return tgt_; }
    const QRow& column(std::size_t j) const { return cols_.at(j); }
    const std::vector<QRow>& columns() const { return cols_; }

    QRow apply(const QRow& x) const;
    Vector apply(const Vector& x) const;
    LinearMap compose(const LinearMap& inner) const;  // this ∘ inner
    std::vector<std::vector<Scalar>> matrix() const;
    LinearMap transpose(const AmbientPtr& src, const AmbientPtr& tgt) const;
    bool operator==(const LinearMap& o) const;

private:
    AmbientPtr src_, tgt_;
    std::vector<QRow> cols_;
};

Subspace apply_map(const LinearMap& f, const Subspace& a);
Subspace kernel(const LinearMap& f);
Subspace preimage(const LinearMap& f, const Subspace& b);
// Kronecker product on index pairs (i, j) -> i * dim(second) + j.
LinearMap kron(const LinearMap& f, const LinearMap& g, const AmbientPtr& src,
               const AmbientPtr& tgt);
LinearMap direct_sum(const LinearMap& f, const LinearMap& g, const AmbientPtr& src,
                     const AmbientPtr& tgt);

}  // namespace qdk
