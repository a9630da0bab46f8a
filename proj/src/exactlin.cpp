#include "qdk/exactlin.hpp"

#include <algorithm>
#include <numeric>

namespace qdk {

std::string to_string(const Scalar& s) {
    return s.get_num().get_str() + "/" + s.get_den().get_str();
}

Scalar parse_scalar(std::string_view text) {
    std::string t(text);
    auto slash = t.find('/');
    Scalar r;
    try {
        if (slash == std::string::npos) {
            r = Scalar(Integer(t), 1);
        } else {
            Integer num(t.substr(0, slash));
            Integer den(t.substr(slash + 1));
            if (den == 0) throw LinAlgError("zero denominator in '" + t + "'");
            r = Scalar(num, den);
        }
    } catch (const std::invalid_argument&) {
        throw LinAlgError("malformed rational '" + t + "'");
    }
    r.canonicalize();
    return r;
}

// ---------------------------------------------------------------- rows

void make_primitive(IRow& r) {
    if (r.empty()) return;
    Integer g = 0;
    for (const auto& e : r) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), e.val.get_mpz_t());
        if (g == 1) break;
    }
    bool neg = r.front().val < 0;
    if (g != 1) {
        for (auto& e : r) mpz_divexact(e.val.get_mpz_t(), e.val.get_mpz_t(), g.get_mpz_t());
    }
    if (neg) {
        for (auto& e : r) e.val = -e.val;
    }
}

IRow primitive(const QRow& r) {
    IRow out;
    if (r.empty()) return out;
    Integer l = 1;
    for (const auto& e : r) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), e.val.get_den_mpz_t());
    out.reserve(r.size());
    for (const auto& e : r) {
        Integer v = e.val.get_num() * (l / e.val.get_den());
        out.push_back({e.col, std::move(v)});
    }
    make_primitive(out);
    return out;
}

QRow to_qrow(const IRow& r) {
    QRow out;
    if (r.empty()) return out;
    const Integer& lead = r.front().val;
    out.reserve(r.size());
    for (const auto& e : r) {
        Scalar v(e.val, lead);
        v.canonicalize();
        out.push_back({e.col, std::move(v)});
    }
    return out;
}

QRow to_qrow_raw(const IRow& r) {
    QRow out;
    out.reserve(r.size());
    for (const auto& e : r) out.push_back({e.col, Scalar(e.val)});
    return out;
}

QRow qrow_from_dense(const std::vector<Scalar>& d) {
    QRow out;
    for (std::size_t i = 0; i < d.size(); ++i)
        if (d[i] != 0) out.push_back({static_cast<std::uint32_t>(i), d[i]});
    return out;
}

std::vector<Scalar> dense(const QRow& r, std::size_t dim) {
    std::vector<Scalar> d(dim);
    for (const auto& e : r) d.at(e.col) = e.val;
    return d;
}

void qrow_axpy(QRow& y, const Scalar& a, const QRow& x) {
    if (a == 0 || x.empty()) return;
    QRow out;
    out.reserve(y.size() + x.size());
    std::size_t i = 0, j = 0;
    while (i < y.size() || j < x.size()) {
        if (j == x.size() || (i < y.size() && y[i].col < x[j].col)) {
            out.push_back(std::move(y[i++]));
        } else if (i == y.size() || x[j].col < y[i].col) {
            out.push_back({x[j].col, a * x[j].val});
            ++j;
        } else {
            Scalar v = y[i].val + a * x[j].val;
            if (v != 0) out.push_back({y[i].col, std::move(v)});
            ++i;
            ++j;
        }
    }
    y = std::move(out);
}

QRow qrow_scaled(const QRow& x, const Scalar& a) {
    QRow out;
    if (a == 0) return out;
    out.reserve(x.size());
    for (const auto& e : x) out.push_back({e.col, a * e.val});
    return out;
}

namespace {

// a*v - b*p
IRow combine(const IRow& v, const Integer& a, const IRow& p, const Integer& b) {
    IRow out;
    out.reserve(v.size() + p.size());
    bool unit = (a == 1);
    std::size_t i = 0, j = 0;
    while (i < v.size() || j < p.size()) {
        if (j == p.size() || (i < v.size() && v[i].col < p[j].col)) {
            out.push_back({v[i].col, unit ? v[i].val : Integer(a * v[i].val)});
            ++i;
        } else if (i == v.size() || p[j].col < v[i].col) {
            out.push_back({p[j].col, Integer(-b * p[j].val)});
            ++j;
        } else {
            Integer x = unit ? Integer(v[i].val - b * p[j].val) : Integer(a * v[i].val - b * p[j].val);
            if (x != 0) out.push_back({v[i].col, std::move(x)});
            ++i;
            ++j;
        }
    }
    return out;
}

// Eliminate the entry of v at column c using pivot row p (whose lead is at c).
void eliminate(IRow& v, std::size_t pos, const IRow& p) {
    const Integer& lead = p.front().val;
    const Integer& x = v[pos].val;
    if (mpz_divisible_p(x.get_mpz_t(), lead.get_mpz_t())) {
        Integer q = x / lead;
        v = combine(v, Integer(1), p, q);
    } else {
        Integer g;
        mpz_gcd(g.get_mpz_t(), lead.get_mpz_t(), x.get_mpz_t());
        Integer a = lead / g;
        Integer b = x / g;
        v = combine(v, a, p, b);
        make_primitive(v);
    }
}

}  // namespace

// ---------------------------------------------------------------- ambient

std::shared_ptr<const Ambient> Ambient::make(std::vector<std::string> labels) {
    auto a = std::make_shared<Ambient>();
    a->labels_ = std::move(labels);
    return a;
}

std::shared_ptr<const Ambient> Ambient::make_paired(std::vector<std::string> labels,
                                                    std::vector<std::string> dual_labels) {
    if (labels.size() != dual_labels.size())
        throw LinAlgError("dual label list has wrong length");
    auto a = std::make_shared<Ambient>();
    a->labels_ = std::move(labels);
    a->dual_labels_ = std::move(dual_labels);
    return a;
}

std::shared_ptr<const Ambient> Ambient::coordinates(std::size_t dim) {
    std::vector<std::string> l, d;
    l.reserve(dim);
    d.reserve(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        l.push_back("e" + std::to_string(i));
        d.push_back("e" + std::to_string(i) + "*");
    }
    return make_paired(std::move(l), std::move(d));
}

std::shared_ptr<const Ambient> Ambient::dual() const {
    if (!dual_labels_) throw PairingMissing("ambient has no declared dual pairing");
    return make_paired(*dual_labels_, labels_);
}

std::optional<std::size_t> Ambient::index_of(const std::string& label) const {
    // Linear scan is fine for the sizes where label lookup is used.
    for (std::size_t i = 0; i < labels_.size(); ++i)
        if (labels_[i] == label) return i;
    return std::nullopt;
}

bool same_ambient(const AmbientPtr& a, const AmbientPtr& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    return a->labels() == b->labels();
}

// ---------------------------------------------------------------- vector

Vector::Vector(AmbientPtr amb, QRow entries) : amb_(std::move(amb)), entries_(std::move(entries)) {
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (entries_[i].col >= amb_->dim()) throw LinAlgError("vector entry out of range");
        if (i > 0 && entries_[i - 1].col >= entries_[i].col)
            throw LinAlgError("vector entries not sorted");
    }
    std::erase_if(entries_, [](const QEntry& e) { return e.val == 0; });
}

Vector Vector::from_dense(AmbientPtr amb, const std::vector<Scalar>& coords) {
    if (coords.size() != amb->dim()) throw LinAlgError("coordinate length differs from ambient");
    return Vector(std::move(amb), qrow_from_dense(coords));
}

Vector Vector::basis(AmbientPtr amb, std::size_t i) {
    return Vector(std::move(amb), QRow{{static_cast<std::uint32_t>(i), Scalar(1)}});
}

Scalar Vector::coeff(std::size_t i) const {
    for (const auto& e : entries_)
        if (e.col == i) return e.val;
    return 0;
}

bool Vector::operator==(const Vector& o) const {
    if (!same_ambient(amb_, o.amb_) || entries_.size() != o.entries_.size()) return false;
    for (std::size_t i = 0; i < entries_.size(); ++i)
        if (entries_[i].col != o.entries_[i].col || entries_[i].val != o.entries_[i].val) return false;
    return true;
}

// ---------------------------------------------------------------- echelon

RowEchelon::RowEchelon(std::size_t ncols) : ncols_(ncols), pivot_row_(ncols, -1) {}

IRow RowEchelon::reduce(IRow v) const {
    while (!v.empty()) {
        std::int32_t r = pivot_row_[v.front().col];
        if (r < 0) break;
        eliminate(v, 0, rows_[r]);
    }
    return v;
}

IRow RowEchelon::full_reduce(IRow v) const {
    std::size_t pos = 0;
    while (pos < v.size()) {
        std::int32_t r = pivot_row_[v[pos].col];
        if (r < 0) {
            ++pos;
            continue;
        }
        eliminate(v, pos, rows_[r]);
    }
    make_primitive(v);
    return v;
}

bool RowEchelon::insert(IRow v) {
    if (!v.empty() && v.back().col >= ncols_) throw LinAlgError("row exceeds echelon width");
    make_primitive(v);
    v = reduce(std::move(v));
    if (v.empty()) return false;
    make_primitive(v);
    pivot_row_[v.front().col] = static_cast<std::int32_t>(rows_.size());
    rows_.push_back(std::move(v));
    return true;
}

bool RowEchelon::contains(IRow v) const { return reduce(std::move(v)).empty(); }

std::vector<std::uint32_t> RowEchelon::pivots() const {
    std::vector<std::uint32_t> p;
    p.reserve(rows_.size());
    for (const auto& r : rows_) p.push_back(r.front().col);
    std::sort(p.begin(), p.end());
    return p;
}

std::vector<IRow> RowEchelon::reduced_rows() const {
    std::vector<std::size_t> order(rows_.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return rows_[a].front().col > rows_[b].front().col; });
    std::vector<IRow> done;
    done.reserve(rows_.size());
    std::vector<std::int32_t> piv(ncols_, -1);
    for (std::size_t idx : order) {
        IRow v = rows_[idx];
        std::size_t pos = 1;
        while (pos < v.size()) {
            std::int32_t r = piv[v[pos].col];
            if (r < 0) {
                ++pos;
                continue;
            }
            eliminate(v, pos, done[r]);
        }
        make_primitive(v);
        piv[v.front().col] = static_cast<std::int32_t>(done.size());
        done.push_back(std::move(v));
    }
    std::reverse(done.begin(), done.end());
    return done;
}

// ---------------------------------------------------------------- subspace

Subspace::Subspace(AmbientPtr amb, std::vector<IRow> rows) : amb_(std::move(amb)), rows_(std::move(rows)) {
    pivots_.reserve(rows_.size());
    for (const auto& r : rows_) pivots_.push_back(r.front().col);
}

Subspace Subspace::zero(AmbientPtr amb) { return Subspace(std::move(amb), {}); }

Subspace Subspace::full(AmbientPtr amb) {
    std::vector<IRow> rows;
    rows.reserve(amb->dim());
    for (std::size_t i = 0; i < amb->dim(); ++i) rows.push_back(IRow{{static_cast<std::uint32_t>(i), Integer(1)}});
    return Subspace(std::move(amb), std::move(rows));
}

Subspace Subspace::from_echelon(AmbientPtr amb, const RowEchelon& e) {
    if (e.ncols() != amb->dim()) throw AmbientMismatch("echelon width differs from ambient");
    return Subspace(std::move(amb), e.reduced_rows());
}

Subspace Subspace::from_rows(AmbientPtr amb, const std::vector<IRow>& rows) {
    RowEchelon e(amb->dim());
    for (const auto& r : rows) e.insert(r);
    return from_echelon(std::move(amb), e);
}

Subspace Subspace::from_qrows(AmbientPtr amb, const std::vector<QRow>& rows) {
    RowEchelon e(amb->dim());
    for (const auto& r : rows) e.insert(r);
    return from_echelon(std::move(amb), e);
}

std::vector<QRow> Subspace::qrows() const {
    std::vector<QRow> out;
    out.reserve(rows_.size());
    for (const auto& r : rows_) out.push_back(to_qrow(r));
    return out;
}

std::vector<Vector> Subspace::basis() const {
    std::vector<Vector> out;
    out.reserve(rows_.size());
    for (const auto& r : rows_) out.emplace_back(amb_, to_qrow(r));
    return out;
}

std::vector<std::vector<Scalar>> Subspace::matrix() const {
    std::vector<std::vector<Scalar>> m;
    for (const auto& r : rows_) m.push_back(dense(to_qrow(r), amb_->dim()));
    return m;
}

bool Subspace::contains(const QRow& v) const {
    // Rows are fully reduced, so the pivot coordinates of v fix the combination.
    QRow rest = v;
    for (std::size_t k = 0; k < rows_.size() && !rest.empty(); ++k) {
        std::uint32_t c = pivots_[k];
        auto it = std::lower_bound(rest.begin(), rest.end(), c,
                                   [](const QEntry& e, std::uint32_t col) { return e.col < col; });
        if (it == rest.end() || it->col != c) continue;
        Scalar coef = -it->val / Scalar(rows_[k].front().val);
        qrow_axpy(rest, coef, to_qrow_raw(rows_[k]));
    }
    return rest.empty();
}

bool Subspace::contains(const Vector& v) const {
    if (!same_ambient(amb_, v.ambient())) throw AmbientMismatch("contains: ambient mismatch");
    return contains(v.entries());
}

bool Subspace::contains(const Subspace& o) const { return !first_outside(o).has_value(); }

std::optional<Vector> Subspace::first_outside(const Subspace& o) const {
    if (!same_ambient(amb_, o.amb_)) throw AmbientMismatch("containment: ambient mismatch");
    for (const auto& r : o.rows_) {
        QRow q = to_qrow(r);
        if (!contains(q)) return Vector(amb_, q);
    }
    return std::nullopt;
}

Subspace Subspace::relabel(AmbientPtr amb) const {
    if (amb->dim() != amb_->dim()) throw AmbientMismatch("relabel: dimension differs");
    return Subspace(std::move(amb), rows_);
}

bool Subspace::operator==(const Subspace& o) const {
    if (!same_ambient(amb_, o.amb_)) return false;
    if (rows_.size() != o.rows_.size()) return false;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        const auto& a = rows_[i];
        const auto& b = o.rows_[i];
        if (a.size() != b.size()) return false;
        for (std::size_t j = 0; j < a.size(); ++j)
            if (a[j].col != b[j].col || a[j].val != b[j].val) return false;
    }
    return true;
}

Subspace span(const AmbientPtr& amb, const std::vector<Vector>& vectors) {
    RowEchelon e(amb->dim());
    for (const auto& v : vectors) {
        if (!same_ambient(amb, v.ambient())) throw AmbientMismatch("span: mixed ambients");
        e.insert(v.entries());
    }
    return Subspace::from_echelon(amb, e);
}

Subspace span(const std::vector<Vector>& vectors) {
    if (vectors.empty()) throw LinAlgError("span of an empty list needs an explicit ambient");
    return span(vectors.front().ambient(), vectors);
}

Subspace sum(const Subspace& a, const Subspace& b) {
    if (!same_ambient(a.ambient(), b.ambient())) throw AmbientMismatch("sum: ambient mismatch");
    RowEchelon e(a.ambient_dim());
    for (const auto& r : a.int_rows()) e.insert(r);
    for (const auto& r : b.int_rows()) e.insert(r);
    return Subspace::from_echelon(a.ambient(), e);
}

std::vector<IRow> orthogonal_rows(const std::vector<IRow>& rref_rows, std::size_t ncols) {
    std::vector<char> is_pivot(ncols, 0);
    for (const auto& r : rref_rows) is_pivot[r.front().col] = 1;
    // For each free column f: e_f - sum_r (r_f / lead_r) e_{pivot(r)}.
    std::vector<QRow> acc(ncols);
    for (const auto& r : rref_rows) {
        std::uint32_t p = r.front().col;
        Scalar lead(r.front().val);
        for (std::size_t j = 1; j < r.size(); ++j) {
            std::uint32_t f = r[j].col;
            if (is_pivot[f]) continue;
            acc[f].push_back({p, -Scalar(r[j].val) / lead});
        }
    }
    std::vector<IRow> out;
    out.reserve(ncols - rref_rows.size());
    for (std::size_t f = 0; f < ncols; ++f) {
        if (is_pivot[f]) continue;
        QRow v = std::move(acc[f]);
        v.push_back({static_cast<std::uint32_t>(f), Scalar(1)});
        std::sort(v.begin(), v.end(), [](const QEntry& x, const QEntry& y) { return x.col < y.col; });
        out.push_back(primitive(v));
    }
    return out;
}

Subspace intersect(const Subspace& a, const Subspace& b) {
    if (!same_ambient(a.ambient(), b.ambient())) throw AmbientMismatch("intersect: ambient mismatch");
    std::size_t n = a.ambient_dim();
    if (a.dim() == 0 || b.dim() == 0) return Subspace::zero(a.ambient());
    if (a.dim() == n) return b;
    if (b.dim() == n) return a;
    RowEchelon e(n);
    for (auto& r : orthogonal_rows(a.int_rows(), n)) e.insert(std::move(r));
    for (auto& r : orthogonal_rows(b.int_rows(), n)) e.insert(std::move(r));
    return Subspace::from_rows(a.ambient(), orthogonal_rows(e.reduced_rows(), n));
}

Subspace annihilator(const Subspace& a) {
    AmbientPtr d = a.ambient()->dual();
    return Subspace::from_rows(d, orthogonal_rows(a.int_rows(), a.ambient_dim()));
}

// ---------------------------------------------------------------- maps

LinearMap::LinearMap(AmbientPtr src, AmbientPtr tgt, std::vector<QRow> columns)
    : src_(std::move(src)), tgt_(std::move(tgt)), cols_(std::move(columns)) {
    if (cols_.size() != src_->dim()) throw LinAlgError("linear map: column count differs from source");
    for (auto& c : cols_) {
        for (std::size_t i = 0; i < c.size(); ++i) {
            if (c[i].col >= tgt_->dim()) throw LinAlgError("linear map: entry outside target");
            if (i > 0 && c[i - 1].col >= c[i].col) throw LinAlgError("linear map: unsorted column");
        }
        std::erase_if(c, [](const QEntry& e) { return e.val == 0; });
    }
}

LinearMap LinearMap::identity(const AmbientPtr& amb) {
    std::vector<QRow> cols(amb->dim());
    for (std::size_t i = 0; i < cols.size(); ++i) cols[i] = {{static_cast<std::uint32_t>(i), Scalar(1)}};
    return LinearMap(amb, amb, std::move(cols));
}

LinearMap LinearMap::zero(const AmbientPtr& src, const AmbientPtr& tgt) {
    return LinearMap(src, tgt, std::vector<QRow>(src->dim()));
}

LinearMap LinearMap::from_dense(const AmbientPtr& src, const AmbientPtr& tgt,
                                const std::vector<std::vector<Scalar>>& m) {
    if (m.size() != tgt->dim()) throw LinAlgError("matrix row count differs from target");
    std::vector<QRow> cols(src->dim());
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i].size() != src->dim()) throw LinAlgError("matrix column count differs from source");
        for (std::size_t j = 0; j < m[i].size(); ++j)
            if (m[i][j] != 0) cols[j].push_back({static_cast<std::uint32_t>(i), m[i][j]});
    }
    return LinearMap(src, tgt, std::move(cols));
}

QRow LinearMap::apply(const QRow& x) const {
    std::vector<QEntry> acc;
    for (const auto& e : x) {
        if (e.col >= cols_.size()) throw LinAlgError("apply: entry outside source");
        for (const auto& t : cols_[e.col]) acc.push_back({t.col, e.val * t.val});
    }
    std::stable_sort(acc.begin(), acc.end(), [](const QEntry& a, const QEntry& b) { return a.col < b.col; });
    QRow out;
    for (auto& t : acc) {
        if (!out.empty() && out.back().col == t.col) {
            out.back().val += t.val;
        } else {
            if (!out.empty() && out.back().val == 0) out.pop_back();
            out.push_back(std::move(t));
        }
    }
    if (!out.empty() && out.back().val == 0) out.pop_back();
    return out;
}

Vector LinearMap::apply(const Vector& x) const {
    if (!same_ambient(src_, x.ambient())) throw AmbientMismatch("apply: vector not in source");
    return Vector(tgt_, apply(x.entries()));
}

LinearMap LinearMap::compose(const LinearMap& inner) const {
    if (!same_ambient(inner.tgt_, src_)) throw AmbientMismatch("compose: ambient mismatch");
    std::vector<QRow> cols;
    cols.reserve(inner.cols_.size());
    for (const auto& c : inner.cols_) cols.push_back(apply(c));
    return LinearMap(inner.src_, tgt_, std::move(cols));
}

std::vector<std::vector<Scalar>> LinearMap::matrix() const {
    std::vector<std::vector<Scalar>> m(tgt_->dim(), std::vector<Scalar>(src_->dim()));
    for (std::size_t j = 0; j < cols_.size(); ++j)
        for (const auto& e : cols_[j]) m[e.col][j] = e.val;
    return m;
}

LinearMap LinearMap::transpose(const AmbientPtr& src, const AmbientPtr& tgt) const {
    if (src->dim() != tgt_->dim() || tgt->dim() != src_->dim())
        throw AmbientMismatch("transpose: dimensions differ");
    std::vector<QRow> cols(tgt_->dim());
    for (std::size_t j = 0; j < cols_.size(); ++j)
        for (const auto& e : cols_[j]) cols[e.col].push_back({static_cast<std::uint32_t>(j), e.val});
    return LinearMap(src, tgt, std::move(cols));
}

bool LinearMap::operator==(const LinearMap& o) const {
    if (!same_ambient(src_, o.src_) || !same_ambient(tgt_, o.tgt_)) return false;
    for (std::size_t j = 0; j < cols_.size(); ++j) {
        const auto& a = cols_[j];
        const auto& b = o.cols_[j];
        if (a.size() != b.size()) return false;
        for (std::size_t i = 0; i < a.size(); ++i)
            if (a[i].col != b[i].col || a[i].val != b[i].val) return false;
    }
    return true;
}

Subspace apply_map(const LinearMap& f, const Subspace& a) {
    if (!same_ambient(f.source(), a.ambient())) throw AmbientMismatch("apply_map: subspace not in source");
    RowEchelon e(f.target()->dim());
    for (const auto& r : a.int_rows()) e.insert(f.apply(to_qrow_raw(r)));
    return Subspace::from_echelon(f.target(), e);
}

Subspace kernel(const LinearMap& f) {
    // Row space of the matrix, then its orthogonal complement.
    std::vector<QRow> rows(f.target()->dim());
    for (std::size_t j = 0; j < f.source()->dim(); ++j)
        for (const auto& e : f.column(j)) rows[e.col].push_back({static_cast<std::uint32_t>(j), e.val});
    RowEchelon e(f.source()->dim());
    for (const auto& r : rows) e.insert(r);
    return Subspace::from_rows(f.source(), orthogonal_rows(e.reduced_rows(), f.source()->dim()));
}

Subspace preimage(const LinearMap& f, const Subspace& b) {
    if (!same_ambient(f.target(), b.ambient())) throw AmbientMismatch("preimage: subspace not in target");
    auto funcs = orthogonal_rows(b.int_rows(), b.ambient_dim());
    std::vector<Scalar> q(f.target()->dim());
    RowEchelon e(f.source()->dim());
    for (const auto& fn : funcs) {
        for (auto& x : q) x = 0;
        for (const auto& t : fn) q[t.col] = Scalar(t.val);
        QRow row;
        for (std::size_t j = 0; j < f.source()->dim(); ++j) {
            Scalar s = 0;
            for (const auto& t : f.column(j)) s += q[t.col] * t.val;
            if (s != 0) row.push_back({static_cast<std::uint32_t>(j), s});
        }
        e.insert(row);
    }
    return Subspace::from_rows(f.source(), orthogonal_rows(e.reduced_rows(), f.source()->dim()));
}

LinearMap kron(const LinearMap& f, const LinearMap& g, const AmbientPtr& src, const AmbientPtr& tgt) {
    std::size_t ns = f.source()->dim() * g.source()->dim();
    std::size_t nt = f.target()->dim() * g.target()->dim();
    if (src->dim() != ns || tgt->dim() != nt) throw AmbientMismatch("kron: ambient dimensions differ");
    std::uint32_t gt = static_cast<std::uint32_t>(g.target()->dim());
    std::vector<QRow> cols;
    cols.reserve(ns);
    for (std::size_t i = 0; i < f.source()->dim(); ++i) {
        for (std::size_t j = 0; j < g.source()->dim(); ++j) {
            QRow c;
            for (const auto& a : f.column(i))
                for (const auto& b : g.column(j)) c.push_back({a.col * gt + b.col, a.val * b.val});
            cols.push_back(std::move(c));
        }
    }
    return LinearMap(src, tgt, std::move(cols));
}

LinearMap direct_sum(const LinearMap& f, const LinearMap& g, const AmbientPtr& src, const AmbientPtr& tgt) {
    if (src->dim() != f.source()->dim() + g.source()->dim() ||
        tgt->dim() != f.target()->dim() + g.target()->dim())
        throw AmbientMismatch("direct_sum: ambient dimensions differ");
    std::uint32_t off = static_cast<std::uint32_t>(f.target()->dim());
    std::vector<QRow> cols = f.columns();
    for (const auto& c : g.columns()) {
        QRow s;
        for (const auto& e : c) s.push_back({e.col + off, e.val});
        cols.push_back(std::move(s));
    }
    return LinearMap(src, tgt, std::move(cols));
}

}  // namespace qdk
