#pragma once

// Exact vectors and matrices over a FieldSpec, with Gaussian elimination.

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gqt/field.hpp"

namespace gqt {

class FieldVector {
   public:
    FieldVector() = default;
    /// Zero vector of length n.
    FieldVector(const FieldSpec& spec, std::size_t n);
    FieldVector(const FieldSpec& spec, std::vector<FieldElement> entries);
    /// Entries given as integers reduced mod p (prime-subfield shorthand).
    static FieldVector from_ints(const FieldSpec& spec, std::initializer_list<std::int64_t> values);
    /// e_i of length n.
    static FieldVector basis(const FieldSpec& spec, std::size_t n, std::size_t i);

    const FieldSpec& spec() const noexcept { return spec_; }
    std::size_t size() const noexcept { return entries_.size(); }
    const FieldElement& operator[](std::size_t i) const { return entries_[i]; }
    FieldElement& operator[](std::size_t i) { return entries_[i]; }
    const std::vector<FieldElement>& entries() const noexcept { return entries_; }

    bool is_zero() const;

    FieldVector operator+(const FieldVector& rhs) const;
    FieldVector operator-(const FieldVector& rhs) const;
    FieldVector operator-() const;
    /// Right scalar multiplication v * a.
    FieldVector operator*(const FieldElement& a) const;

    std::string to_string() const;

    friend bool operator==(const FieldVector& a, const FieldVector& b) {
        return a.spec_ == b.spec_ && a.entries_ == b.entries_;
    }
    friend bool operator<(const FieldVector& a, const FieldVector& b) { return a.entries_ < b.entries_; }

   private:
    FieldSpec spec_;
    std::vector<FieldElement> entries_;
};

class FieldMatrix {
   public:
    FieldMatrix() = default;
    FieldMatrix(const FieldSpec& spec, std::size_t rows, std::size_t cols);
    static FieldMatrix identity(const FieldSpec& spec, std::size_t n);
    static FieldMatrix from_rows(const FieldSpec& spec, const std::vector<std::vector<FieldElement>>& rows);
    static FieldMatrix from_ints(const FieldSpec& spec, const std::vector<std::vector<std::int64_t>>& rows);
    /// Matrix whose columns are the given vectors.
    static FieldMatrix from_columns(const std::vector<FieldVector>& columns);
    static FieldMatrix from_row_vectors(const std::vector<FieldVector>& rows);

    const FieldSpec& spec() const noexcept { return spec_; }
    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }

    const FieldElement& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    FieldElement& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }

    FieldVector row(std::size_t r) const;
    FieldVector column(std::size_t c) const;

    FieldMatrix operator*(const FieldMatrix& rhs) const;
    FieldVector operator*(const FieldVector& v) const;
    FieldMatrix operator+(const FieldMatrix& rhs) const;
    FieldMatrix operator*(const FieldElement& a) const;

    FieldMatrix transpose() const;
    /// Entrywise involution of the transpose (U*). Throws NoInvolution for odd k.
    FieldMatrix conj_transpose() const;

    std::string to_string() const;

    friend bool operator==(const FieldMatrix& a, const FieldMatrix& b) {
        return a.spec_ == b.spec_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

   private:
    FieldSpec spec_;
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<FieldElement> data_;
};

/// Reduced row echelon form, with the pivot column of every nonzero row.
struct RowEchelon {
    FieldMatrix reduced;
    std::vector<std::size_t> pivots;
    std::size_t rank() const noexcept { return pivots.size(); }
};

RowEchelon row_reduce(const FieldMatrix& m);
std::size_t rank(const FieldMatrix& m);
std::size_t rank(std::span<const FieldVector> vectors);

/// Basis of {x : m x = 0}, one vector per free column (canonical for a given m).
std::vector<FieldVector> nullspace(const FieldMatrix& m);

/// Some x with a x = b, or nullopt when b is outside the column space.
std::optional<FieldVector> solve(const FieldMatrix& a, const FieldVector& b);

/// Throws Singular.
FieldMatrix inverse(const FieldMatrix& m);

/// Canonical basis (nonzero rows of the RREF) of the span of `vectors`.
std::vector<FieldVector> canonical_basis(std::span<const FieldVector> vectors);
bool same_subspace(std::span<const FieldVector> a, std::span<const FieldVector> b);
bool in_span(std::span<const FieldVector> basis, const FieldVector& v);

/// Kronecker products, row-major block layout (leftmost factor most significant).
FieldVector tensor(const FieldVector& a, const FieldVector& b);
FieldMatrix tensor(const FieldMatrix& a, const FieldMatrix& b);

/// Ray representative: scales so the leftmost nonzero entry is 1. Throws ZeroVector.
FieldVector normalize_ray(const FieldVector& v);
bool same_ray(const FieldVector& a, const FieldVector& b);

void require_same_field(const FieldSpec& a, const FieldSpec& b);

}  // namespace gqt
