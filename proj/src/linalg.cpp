#include "gqt/linalg.hpp"

#include <sstream>

namespace gqt {

void require_same_field(const FieldSpec& a, const FieldSpec& b) {
    if (!(a == b)) throw Error(ErrorCode::FieldMismatch, "operands belong to different fields");
}

namespace {

void require_same_size(std::size_t a, std::size_t b, const char* what) {
    if (a != b) {
        throw Error(ErrorCode::DimensionMismatch,
                    std::string(what) + ": " + std::to_string(a) + " vs " + std::to_string(b));
    }
}

}  // namespace

// FieldVector

FieldVector::FieldVector(const FieldSpec& spec, std::size_t n) : spec_(spec), entries_(n, spec.zero()) {}

FieldVector::FieldVector(const FieldSpec& spec, std::vector<FieldElement> entries)
    : spec_(spec), entries_(std::move(entries)) {
    for (const auto& e : entries_) {
        if (e.field() != spec_.data()) throw Error(ErrorCode::FieldMismatch, "vector entry from another field");
    }
}

FieldVector FieldVector::from_ints(const FieldSpec& spec, std::initializer_list<std::int64_t> values) {
    std::vector<FieldElement> e;
    e.reserve(values.size());
    for (auto v : values) e.push_back(spec.from_int(v));
    return FieldVector(spec, std::move(e));
}

FieldVector FieldVector::basis(const FieldSpec& spec, std::size_t n, std::size_t i) {
    FieldVector v(spec, n);
    v[i] = spec.one();
    return v;
}

bool FieldVector::is_zero() const {
    for (const auto& e : entries_) {
        if (!e.is_zero()) return false;
    }
    return true;
}

FieldVector FieldVector::operator+(const FieldVector& rhs) const {
    require_same_field(spec_, rhs.spec_);
    require_same_size(size(), rhs.size(), "vector sum");
    FieldVector out = *this;
    for (std::size_t i = 0; i < size(); ++i) out.entries_[i] += rhs.entries_[i];
    return out;
}

FieldVector FieldVector::operator-(const FieldVector& rhs) const {
    require_same_field(spec_, rhs.spec_);
    require_same_size(size(), rhs.size(), "vector difference");
    FieldVector out = *this;
    for (std::size_t i = 0; i < size(); ++i) out.entries_[i] -= rhs.entries_[i];
    return out;
}

FieldVector FieldVector::operator-() const {
    FieldVector out = *this;
    for (auto& e : out.entries_) e = -e;
    return out;
}

FieldVector FieldVector::operator*(const FieldElement& a) const {
    FieldVector out = *this;
    for (auto& e : out.entries_) e = e * a;
    return out;
}

std::string FieldVector::to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < size(); ++i) {
        if (i) s += ", ";
        s += entries_[i].to_string();
    }
    return s + ")";
}

// FieldMatrix

FieldMatrix::FieldMatrix(const FieldSpec& spec, std::size_t rows, std::size_t cols)
    : spec_(spec), rows_(rows), cols_(cols), data_(rows * cols, spec.zero()) {}

FieldMatrix FieldMatrix::identity(const FieldSpec& spec, std::size_t n) {
    FieldMatrix m(spec, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = spec.one();
    return m;
}

FieldMatrix FieldMatrix::from_rows(const FieldSpec& spec, const std::vector<std::vector<FieldElement>>& rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r ? rows.front().size() : 0;
    FieldMatrix m(spec, r, c);
    for (std::size_t i = 0; i < r; ++i) {
        if (rows[i].size() != c) throw Error(ErrorCode::DimensionMismatch, "ragged matrix rows");
        for (std::size_t j = 0; j < c; ++j) {
            if (rows[i][j].field() != spec.data()) throw Error(ErrorCode::FieldMismatch, "matrix entry from another field");
            m(i, j) = rows[i][j];
        }
    }
    return m;
}

FieldMatrix FieldMatrix::from_ints(const FieldSpec& spec, const std::vector<std::vector<std::int64_t>>& rows) {
    std::vector<std::vector<FieldElement>> e;
    for (const auto& row : rows) {
        auto& out = e.emplace_back();
        for (auto v : row) out.push_back(spec.from_int(v));
    }
    return from_rows(spec, e);
}

FieldMatrix FieldMatrix::from_columns(const std::vector<FieldVector>& columns) {
    if (columns.empty()) throw Error(ErrorCode::DimensionMismatch, "matrix needs at least one column");
    const auto& spec = columns.front().spec();
    FieldMatrix m(spec, columns.front().size(), columns.size());
    for (std::size_t j = 0; j < columns.size(); ++j) {
        require_same_field(spec, columns[j].spec());
        require_same_size(columns[j].size(), m.rows_, "column length");
        for (std::size_t i = 0; i < m.rows_; ++i) m(i, j) = columns[j][i];
    }
    return m;
}

FieldMatrix FieldMatrix::from_row_vectors(const std::vector<FieldVector>& rows) {
    if (rows.empty()) throw Error(ErrorCode::DimensionMismatch, "matrix needs at least one row");
    const auto& spec = rows.front().spec();
    FieldMatrix m(spec, rows.size(), rows.front().size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        require_same_field(spec, rows[i].spec());
        require_same_size(rows[i].size(), m.cols_, "row length");
        for (std::size_t j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
    }
    return m;
}

FieldVector FieldMatrix::row(std::size_t r) const {
    return FieldVector(spec_, std::vector<FieldElement>(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                                                        data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_)));
}

FieldVector FieldMatrix::column(std::size_t c) const {
    FieldVector v(spec_, rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, c);
    return v;
}

FieldMatrix FieldMatrix::operator*(const FieldMatrix& rhs) const {
    require_same_field(spec_, rhs.spec_);
    require_same_size(cols_, rhs.rows_, "matrix product");
    FieldMatrix out(spec_, rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t k = 0; k < cols_; ++k) {
            const FieldElement a = (*this)(i, k);
            if (a.is_zero()) continue;
            for (std::size_t j = 0; j < rhs.cols_; ++j) out(i, j) += a * rhs(k, j);
        }
    }
    return out;
}

FieldVector FieldMatrix::operator*(const FieldVector& v) const {
    require_same_field(spec_, v.spec());
    require_same_size(cols_, v.size(), "matrix-vector product");
    FieldVector out(spec_, rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        FieldElement acc = spec_.zero();
        for (std::size_t j = 0; j < cols_; ++j) acc += (*this)(i, j) * v[j];
        out[i] = acc;
    }
    return out;
}

FieldMatrix FieldMatrix::operator+(const FieldMatrix& rhs) const {
    require_same_field(spec_, rhs.spec_);
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw Error(ErrorCode::DimensionMismatch, "matrix sum shape");
    FieldMatrix out = *this;
    for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] += rhs.data_[i];
    return out;
}

FieldMatrix FieldMatrix::operator*(const FieldElement& a) const {
    FieldMatrix out = *this;
    for (auto& e : out.data_) e = e * a;
    return out;
}

FieldMatrix FieldMatrix::transpose() const {
    FieldMatrix out(spec_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
    return out;
}

FieldMatrix FieldMatrix::conj_transpose() const {
    FieldMatrix out(spec_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out(j, i) = frobenius_involution((*this)(i, j));
    return out;
}

std::string FieldMatrix::to_string() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < rows_; ++i) {
        if (i) os << "; ";
        os << row(i).to_string();
    }
    os << "]";
    return os.str();
}

// Elimination

RowEchelon row_reduce(const FieldMatrix& m) {
    RowEchelon result{m, {}};
    FieldMatrix& a = result.reduced;
    std::size_t pivot_row = 0;
    for (std::size_t col = 0; col < a.cols() && pivot_row < a.rows(); ++col) {
        std::size_t sel = pivot_row;
        while (sel < a.rows() && a(sel, col).is_zero()) ++sel;
        if (sel == a.rows()) continue;
        if (sel != pivot_row) {
            for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(sel, j), a(pivot_row, j));
        }
        const FieldElement scale = a(pivot_row, col).inv();
        for (std::size_t j = col; j < a.cols(); ++j) a(pivot_row, j) *= scale;
        for (std::size_t i = 0; i < a.rows(); ++i) {
            if (i == pivot_row || a(i, col).is_zero()) continue;
            const FieldElement factor = a(i, col);
            for (std::size_t j = col; j < a.cols(); ++j) a(i, j) -= factor * a(pivot_row, j);
        }
        result.pivots.push_back(col);
        ++pivot_row;
    }
    return result;
}

std::size_t rank(const FieldMatrix& m) { return row_reduce(m).rank(); }

std::size_t rank(std::span<const FieldVector> vectors) {
    if (vectors.empty()) return 0;
    return rank(FieldMatrix::from_row_vectors({vectors.begin(), vectors.end()}));
}

std::vector<FieldVector> nullspace(const FieldMatrix& m) {
    const RowEchelon re = row_reduce(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : re.pivots) is_pivot[c] = true;
    std::vector<FieldVector> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        FieldVector v(m.spec(), m.cols());
        v[free] = m.spec().one();
        for (std::size_t r = 0; r < re.pivots.size(); ++r) v[re.pivots[r]] = -re.reduced(r, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<FieldVector> solve(const FieldMatrix& a, const FieldVector& b) {
    require_same_field(a.spec(), b.spec());
    require_same_size(a.rows(), b.size(), "linear system");
    FieldMatrix aug(a.spec(), a.rows(), a.cols() + 1);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
        aug(i, a.cols()) = b[i];
    }
    const RowEchelon re = row_reduce(aug);
    if (!re.pivots.empty() && re.pivots.back() == a.cols()) return std::nullopt;
    FieldVector x(a.spec(), a.cols());
    for (std::size_t r = 0; r < re.pivots.size(); ++r) x[re.pivots[r]] = re.reduced(r, a.cols());
    return x;
}

FieldMatrix inverse(const FieldMatrix& m) {
    if (!m.is_square()) throw Error(ErrorCode::NotSquare, "inverse of a non-square matrix");
    const std::size_t n = m.rows();
    FieldMatrix aug(m.spec(), n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n + i) = m.spec().one();
    }
    const RowEchelon re = row_reduce(aug);
    if (re.rank() < n || re.pivots[n - 1] != n - 1) throw Error(ErrorCode::Singular, "matrix is not invertible");
    FieldMatrix out(m.spec(), n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out(i, j) = re.reduced(i, n + j);
    return out;
}

std::vector<FieldVector> canonical_basis(std::span<const FieldVector> vectors) {
    if (vectors.empty()) return {};
    const RowEchelon re = row_reduce(FieldMatrix::from_row_vectors({vectors.begin(), vectors.end()}));
    std::vector<FieldVector> out;
    for (std::size_t r = 0; r < re.rank(); ++r) out.push_back(re.reduced.row(r));
    return out;
}

bool same_subspace(std::span<const FieldVector> a, std::span<const FieldVector> b) {
    return canonical_basis(a) == canonical_basis(b);
}

bool in_span(std::span<const FieldVector> basis, const FieldVector& v) {
    std::vector<FieldVector> extended(basis.begin(), basis.end());
    const std::size_t before = rank(std::span<const FieldVector>(extended));
    extended.push_back(v);
    return rank(std::span<const FieldVector>(extended)) == before;
}

FieldVector tensor(const FieldVector& a, const FieldVector& b) {
    require_same_field(a.spec(), b.spec());
    std::vector<FieldElement> out;
    out.reserve(a.size() * b.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out.push_back(a[i] * b[j]);
    return FieldVector(a.spec(), std::move(out));
}

FieldMatrix tensor(const FieldMatrix& a, const FieldMatrix& b) {
    require_same_field(a.spec(), b.spec());
    FieldMatrix out(a.spec(), a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const FieldElement x = a(i, j);
            for (std::size_t k = 0; k < b.rows(); ++k)
                for (std::size_t l = 0; l < b.cols(); ++l) out(i * b.rows() + k, j * b.cols() + l) = x * b(k, l);
        }
    return out;
}

FieldVector normalize_ray(const FieldVector& v) {
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (!v[i].is_zero()) return v * v[i].inv();
    }
    throw Error(ErrorCode::ZeroVector, "the zero vector spans no ray");
}

bool same_ray(const FieldVector& a, const FieldVector& b) {
    if (a.is_zero() || b.is_zero()) return false;
    return normalize_ray(a) == normalize_ray(b);
}

}  // namespace gqt
