#include "gqt/hermitian.hpp"

#include <stdexcept>

#include "gqt/rng.hpp"

namespace gqt {

HermitianForm::HermitianForm(FieldMatrix gram) : gram_(std::move(gram)) {
    if (!gram_.spec().has_involution()) {
        throw Error(ErrorCode::NoInvolution, gram_.spec().name() + " has no involution for a Hermitian form");
    }
    if (!is_hermitian_matrix(gram_)) throw Error(ErrorCode::NotHermitian, "Gram matrix is not Hermitian");
    (void)inverse(gram_);
    standard_ = gram_ == FieldMatrix::identity(gram_.spec(), gram_.rows());
}

HermitianForm standard_form(const FieldSpec& spec, std::size_t dim) {
    if (dim < 1) throw Error(ErrorCode::DimensionMismatch, "form dimension must be positive");
    if (!spec.has_involution()) throw Error(ErrorCode::NoInvolution, spec.name() + " has odd extension degree");
    return HermitianForm(FieldMatrix::identity(spec, dim));
}

FieldElement evaluate_form(const HermitianForm& f, const FieldVector& x, const FieldVector& y) {
    require_same_field(f.spec(), x.spec());
    require_same_field(f.spec(), y.spec());
    if (x.size() != f.dim() || y.size() != f.dim()) {
        throw Error(ErrorCode::DimensionMismatch, "form of dimension " + std::to_string(f.dim()) +
                                                      " applied to vectors of length " + std::to_string(x.size()) +
                                                      " and " + std::to_string(y.size()));
    }
    FieldElement acc = f.spec().zero();
    if (f.is_standard()) {
        for (std::size_t i = 0; i < x.size(); ++i) acc += frobenius_involution(x[i]) * y[i];
        return acc;
    }
    const FieldMatrix& g = f.gram();
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i].is_zero()) continue;
        FieldElement row = f.spec().zero();
        for (std::size_t j = 0; j < y.size(); ++j) row += g(i, j) * y[j];
        acc += frobenius_involution(x[i]) * row;
    }
    return acc;
}

bool is_hermitian_matrix(const FieldMatrix& a) {
    if (!a.is_square()) throw Error(ErrorCode::NotSquare, "Hermitian test needs a square matrix");
    return a.conj_transpose() == a;
}

bool is_unitary(const FieldMatrix& u, const HermitianForm& f) {
    if (!u.is_square() || u.rows() != f.dim()) {
        throw Error(ErrorCode::DimensionMismatch, "operator of size " + std::to_string(u.rows()) + "x" +
                                                      std::to_string(u.cols()) + " against form of dimension " +
                                                      std::to_string(f.dim()));
    }
    require_same_field(u.spec(), f.spec());
    return u.conj_transpose() * f.gram() * u == f.gram();
}

HermitianForm tensor(const HermitianForm& a, const HermitianForm& b) { return HermitianForm(tensor(a.gram(), b.gram())); }

std::vector<FieldElement> unit_norm_elements(const FieldSpec& spec) {
    std::vector<FieldElement> out;
    for (const auto& x : spec.elements()) {
        if (!x.is_zero() && norm(x).is_one()) out.push_back(x);
    }
    return out;
}

namespace {

// Some b with N(b) = target, scanning from a random offset.
FieldElement element_with_norm(const FieldSpec& spec, const FieldElement& target, Rng& rng) {
    const std::uint32_t order = spec.order();
    const std::uint32_t start = static_cast<std::uint32_t>(rng.below(order));
    for (std::uint32_t i = 0; i < order; ++i) {
        const FieldElement b = spec.from_index((start + i) % order);
        if (norm(b) == target) return b;
    }
    throw std::logic_error("norm map is not surjective onto the fixed subfield");
}

// A non-isotropic vector among the basis vectors or the combinations
// b_i + c b_j. When every b_i is isotropic, <b_i + c b_j, b_i + c b_j> is the
// trace of c <b_i, b_j>, which is nonzero for some c once <b_i, b_j> != 0.
std::optional<FieldVector> non_isotropic_in(const HermitianForm& f, const std::vector<FieldVector>& basis) {
    for (const auto& v : basis) {
        if (!evaluate_form(f, v, v).is_zero()) return v;
    }
    for (std::size_t i = 0; i < basis.size(); ++i) {
        for (std::size_t j = i + 1; j < basis.size(); ++j) {
            for (const auto& c : f.spec().elements()) {
                const FieldVector v = basis[i] + basis[j] * c;
                if (!evaluate_form(f, v, v).is_zero()) return v;
            }
        }
    }
    return std::nullopt;
}

}  // namespace

FieldMatrix orthonormal_basis(const HermitianForm& f) {
    const FieldSpec& spec = f.spec();
    if (f.is_standard()) return FieldMatrix::identity(spec, f.dim());

    std::vector<FieldVector> remaining;
    for (std::size_t i = 0; i < f.dim(); ++i) remaining.push_back(FieldVector::basis(spec, f.dim(), i));

    Rng rng(0);
    std::vector<FieldVector> frame;
    while (!remaining.empty()) {
        auto v = non_isotropic_in(f, remaining);
        if (!v) throw std::logic_error("nondegenerate Hermitian form has a totally isotropic complement");
        // <v,v> lies in the fixed subfield; rescale so that <v,v> = 1.
        const FieldElement length = evaluate_form(f, *v, *v);
        const FieldElement scale = element_with_norm(spec, length.inv(), rng);
        const FieldVector unit = *v * scale;
        frame.push_back(unit);

        // Orthogonal complement of the frame within the previous complement.
        std::vector<FieldVector> functionals;
        for (const auto& w : frame) {
            FieldVector c(spec, f.dim());
            for (std::size_t j = 0; j < f.dim(); ++j) {
                FieldElement acc = spec.zero();
                for (std::size_t i = 0; i < f.dim(); ++i) acc += frobenius_involution(w[i]) * f.gram()(i, j);
                c[j] = acc;
            }
            functionals.push_back(c);
        }
        remaining = nullspace(FieldMatrix::from_row_vectors(functionals));
    }
    return FieldMatrix::from_columns(frame);
}

FieldMatrix random_unitary(const HermitianForm& f, std::uint64_t seed) {
    constexpr int kProductLength = 16;
    const FieldSpec& spec = f.spec();
    const std::size_t n = f.dim();
    Rng rng(seed);
    const std::vector<FieldElement> units = unit_norm_elements(spec);

    FieldMatrix u = FieldMatrix::identity(spec, n);
    for (int step = 0; step < kProductLength; ++step) {
        const std::size_t kind = n == 1 ? 1 : rng.below(3);
        FieldMatrix g = FieldMatrix::identity(spec, n);
        if (kind == 0) {
            const std::size_t i = rng.below(n);
            std::size_t j = rng.below(n - 1);
            if (j >= i) ++j;
            g(i, i) = spec.zero();
            g(j, j) = spec.zero();
            g(i, j) = spec.one();
            g(j, i) = spec.one();
        } else if (kind == 1) {
            for (std::size_t i = 0; i < n; ++i) g(i, i) = units[rng.below(units.size())];
        } else {
            const std::size_t i = rng.below(n);
            std::size_t j = rng.below(n - 1);
            if (j >= i) ++j;
            const FieldElement a = spec.from_index(static_cast<std::uint32_t>(rng.below(spec.order())));
            const FieldElement b = element_with_norm(spec, spec.one() - norm(a), rng);
            g(i, i) = a;
            g(i, j) = -frobenius_involution(b);
            g(j, i) = b;
            g(j, j) = frobenius_involution(a);
        }
        u = g * u;
    }
    if (!f.is_standard()) {
        const FieldMatrix p = orthonormal_basis(f);
        u = p * u * inverse(p);
    }
    if (!is_unitary(u, f)) throw std::logic_error("generator product failed the unitarity check");
    return u;
}

FieldMatrix random_hermitian_matrix(const FieldSpec& spec, std::size_t n, std::uint64_t seed) {
    Rng rng(seed);
    const std::vector<FieldElement> real = fixed_subfield(spec);
    FieldMatrix a(spec, n, n);
    for (std::size_t i = 0; i < n; ++i) {
        a(i, i) = real[rng.below(real.size())];
        for (std::size_t j = i + 1; j < n; ++j) {
            a(i, j) = spec.from_index(static_cast<std::uint32_t>(rng.below(spec.order())));
            a(j, i) = frobenius_involution(a(i, j));
        }
    }
    return a;
}

}  // namespace gqt
