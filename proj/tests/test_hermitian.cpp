#include <doctest.h>

#include "gqt/error.hpp"
#include "gqt/hermitian.hpp"
#include "gqt/rng.hpp"
#include "oracle.hpp"

using namespace gqt;

namespace {

const std::vector<std::pair<std::uint32_t, std::uint32_t>> kInvolutive{{2, 2}, {3, 2}, {2, 4}, {5, 2}};

FieldVector random_vector(const FieldSpec& f, std::size_t n, Rng& rng) {
    std::vector<FieldElement> e;
    for (std::size_t i = 0; i < n; ++i) e.push_back(f.from_index(static_cast<std::uint32_t>(rng.below(f.order()))));
    return FieldVector(f, e);
}

FieldMatrix random_matrix(const FieldSpec& f, std::size_t n, Rng& rng) {
    FieldMatrix m(f, n, n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) m(r, c) = f.from_index(static_cast<std::uint32_t>(rng.below(f.order())));
    }
    return m;
}

ErrorCode code_of(auto fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    return ErrorCode::InvalidArgument;
}

}  // namespace

TEST_CASE("is_hermitian_matrix agrees with the entrywise definition") {
    for (auto [p, k] : kInvolutive) {
        const auto f = build_field(p, k);
        const oracle::Gf o(f);
        Rng rng(p * 100 + k);
        for (int i = 0; i < 200; ++i) {
            const auto m = random_matrix(f, 1 + i % 3, rng);
            CHECK(is_hermitian_matrix(m) == oracle::is_hermitian(o, m));
            const auto h = random_hermitian_matrix(f, 1 + i % 4, rng.next());
            CHECK(oracle::is_hermitian(o, h));
            CHECK(is_hermitian_matrix(h));
        }
    }
    CHECK(code_of([] { is_hermitian_matrix(FieldMatrix(build_field(3, 2), 2, 3)); }) == ErrorCode::NotSquare);
}

TEST_CASE("form construction errors") {
    const auto f = build_field(3, 2);
    CHECK(code_of([&] { HermitianForm(FieldMatrix(f, 2, 3)); }) == ErrorCode::NotSquare);
    CHECK(code_of([&] { HermitianForm(FieldMatrix::from_rows(f, {{f.one(), f.kappa()}, {f.kappa(), f.one()}})); }) ==
          ErrorCode::NotHermitian);
    CHECK(code_of([&] { HermitianForm(FieldMatrix::from_ints(f, {{1, 1}, {1, 1}})); }) == ErrorCode::Singular);
    CHECK(code_of([] { HermitianForm(FieldMatrix::identity(build_field(2, 3), 2)); }) == ErrorCode::NoInvolution);
    CHECK(standard_form(f, 3).is_standard());
    CHECK_FALSE(HermitianForm(FieldMatrix::from_ints(f, {{0, 1}, {1, 0}})).is_standard());
}

TEST_CASE("form evaluation: conjugate symmetry and sesquilinearity") {
    for (auto [p, k] : kInvolutive) {
        const auto f = build_field(p, k);
        const oracle::Gf o(f);
        const auto std4 = standard_form(f, 4);
        Rng rng(7);
        for (int i = 0; i < 300; ++i) {
            const auto x = random_vector(f, 4, rng), y = random_vector(f, 4, rng), z = random_vector(f, 4, rng);
            const auto a = f.from_index(static_cast<std::uint32_t>(rng.below(f.order())));
            CHECK(evaluate_form(std4, x, y).coeffs() == o.herm(oracle::to_vec(x), oracle::to_vec(y)));
            CHECK(evaluate_form(std4, x, y) == frobenius_involution(evaluate_form(std4, y, x)));
            CHECK(evaluate_form(std4, x, y * a) == evaluate_form(std4, x, y) * a);
            CHECK(evaluate_form(std4, x * a, y) == frobenius_involution(a) * evaluate_form(std4, x, y));
            CHECK(evaluate_form(std4, x, y + z) == evaluate_form(std4, x, y) + evaluate_form(std4, x, z));
            CHECK(in_fixed_subfield(evaluate_form(std4, x, x)));
        }
    }
}

TEST_CASE("unit norm elements") {
    for (auto [p, k] : kInvolutive) {
        const auto f = build_field(p, k);
        const auto u = unit_norm_elements(f);
        CHECK(u.size() == f.q() + 1);
        for (const auto& x : u) CHECK(norm(x).is_one());
    }
}

TEST_CASE("random unitaries preserve the standard form") {
    for (auto [p, k] : kInvolutive) {
        const auto f = build_field(p, k);
        const oracle::Gf o(f);
        for (std::size_t n : {2u, 3u, 4u}) {
            const auto form = standard_form(f, n);
            for (std::uint64_t seed = 0; seed < 20; ++seed) {
                const auto u = random_unitary(form, seed);
                CHECK(oracle::is_unitary(o, u, form.gram()));
                CHECK(is_unitary(u, form));
                CHECK(random_unitary(form, seed) == u);
            }
        }
    }
}

TEST_CASE("random unitaries for a non-standard form") {
    const auto f = build_field(3, 2);
    const oracle::Gf o(f);
    const HermitianForm hyperbolic(FieldMatrix::from_ints(f, {{0, 1, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, 1, 0}}));
    const auto p = orthonormal_basis(hyperbolic);
    CHECK(p.conj_transpose() * hyperbolic.gram() * p == FieldMatrix::identity(f, 4));
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const auto u = random_unitary(hyperbolic, seed);
        CHECK(oracle::is_unitary(o, u, hyperbolic.gram()));
    }
}

TEST_CASE("is_unitary rejects non-unitaries and mismatched sizes") {
    const auto f = build_field(3, 2);
    const auto form = standard_form(f, 2);
    CHECK_FALSE(is_unitary(FieldMatrix::from_ints(f, {{1, 1}, {0, 1}}), form));
    CHECK(is_unitary(FieldMatrix::from_ints(f, {{0, 1}, {1, 0}}), form));
    CHECK(code_of([&] { is_unitary(FieldMatrix::identity(f, 3), form); }) == ErrorCode::DimensionMismatch);
}

TEST_CASE("tensor product of Hermitian matrices is Hermitian") {
    for (auto [p, k] : kInvolutive) {
        const auto f = build_field(p, k);
        const oracle::Gf o(f);
        Rng rng(p * 31 + k);
        std::size_t failures = 0;
        for (int i = 0; i < 200; ++i) {
            const auto a = random_hermitian_matrix(f, 2, rng.next());
            const auto b = random_hermitian_matrix(f, 1 + i % 3, rng.next());
            failures += oracle::is_hermitian(o, tensor(a, b)) ? 0 : 1;
        }
        CHECK(failures == 0);
    }
}

TEST_CASE("tensor form factorizes on product vectors") {
    const auto f = build_field(3, 2);
    const auto a = standard_form(f, 2);
    const HermitianForm b(FieldMatrix::from_ints(f, {{0, 1}, {1, 0}}));
    const auto ab = tensor(a, b);
    Rng rng(3);
    for (int i = 0; i < 200; ++i) {
        const auto x1 = random_vector(f, 2, rng), x2 = random_vector(f, 2, rng);
        const auto y1 = random_vector(f, 2, rng), y2 = random_vector(f, 2, rng);
        CHECK(evaluate_form(ab, tensor(x1, x2), tensor(y1, y2)) == evaluate_form(a, x1, y1) * evaluate_form(b, x2, y2));
    }
}
