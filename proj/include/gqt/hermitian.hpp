#pragma once

// (gamma,1)-Hermitian forms on GF(q^2)^n, tensor products of forms, and the
// unitary group: membership test and a seeded sampler.

#include <cstdint>

#include "gqt/linalg.hpp"

namespace gqt {

/// Nondegenerate Hermitian form <x,y> = sum_ij gamma(x_i) G_ij y_j.
///
/// The first argument is conjugated. A form written with the conjugate on the
/// second argument, x G gamma(y)^T, equals evaluate_form(f, y, x) for the
/// transposed Gram matrix, so callers porting such formulas swap arguments.
class HermitianForm {
   public:
    /// Throws NoInvolution, NotSquare, NotHermitian, or Singular.
    explicit HermitianForm(FieldMatrix gram);

    std::size_t dim() const noexcept { return gram_.rows(); }
    const FieldMatrix& gram() const noexcept { return gram_; }
    const FieldSpec& spec() const noexcept { return gram_.spec(); }
    bool is_standard() const noexcept { return standard_; }

    friend bool operator==(const HermitianForm& a, const HermitianForm& b) { return a.gram_ == b.gram_; }

   private:
    FieldMatrix gram_;
    bool standard_ = false;
};

/// x_1^gamma y_1 + ... + x_n^gamma y_n.
HermitianForm standard_form(const FieldSpec& spec, std::size_t dim);

FieldElement evaluate_form(const HermitianForm& f, const FieldVector& x, const FieldVector& y);

/// gamma applied entrywise to the transpose reproduces A. Throws NotSquare.
bool is_hermitian_matrix(const FieldMatrix& a);

/// U* G U == G. Throws DimensionMismatch.
bool is_unitary(const FieldMatrix& u, const HermitianForm& f);

/// Form on the tensor space with Gram matrix G1 (x) G2, so that
/// <x1 (x) x2, y1 (x) y2> = <x1,y1> <x2,y2>.
HermitianForm tensor(const HermitianForm& a, const HermitianForm& b);

/// Elements with norm 1 (the q+1 solutions of x^(q+1) = 1).
std::vector<FieldElement> unit_norm_elements(const FieldSpec& spec);

/// Matrix P whose columns are an orthonormal basis for f, i.e. P* G P = I.
FieldMatrix orthonormal_basis(const HermitianForm& f);

/// Seeded product of 16 generators of the unitary group of f: transpositions
/// of coordinates, diagonal matrices with unit-norm entries, and 2x2 blocks
/// [[a, -gamma(b)], [b, gamma(a)]] with N(a) + N(b) = 1. For a non-standard
/// form the product is conjugated into f's orthonormal frame. Every result is
/// checked with is_unitary before it is returned.
FieldMatrix random_unitary(const HermitianForm& f, std::uint64_t seed);

/// Uniform random Hermitian n x n matrix (not necessarily invertible).
FieldMatrix random_hermitian_matrix(const FieldSpec& spec, std::size_t n, std::uint64_t seed);

}  // namespace gqt
