#include <doctest.h>

#include "gqt/error.hpp"
#include "gqt/field.hpp"
#include "gqt/rng.hpp"
#include "oracle.hpp"

using namespace gqt;

namespace {

// Irreducibility by trial division against every monic polynomial of degree 1..deg/2.
bool naive_irreducible(const std::vector<std::uint32_t>& poly, std::uint32_t p) {
    const std::size_t deg = poly.size() - 1;
    for (std::size_t d = 1; d <= deg / 2; ++d) {
        std::size_t count = 1;
        for (std::size_t i = 0; i < d; ++i) count *= p;
        for (std::size_t idx = 0; idx < count; ++idx) {
            std::vector<std::uint32_t> div(d + 1, 0);
            std::size_t x = idx;
            for (std::size_t i = 0; i < d; ++i, x /= p) div[i] = x % p;
            div[d] = 1;
            std::vector<std::int64_t> rem(poly.begin(), poly.end());
            for (std::size_t top = deg; top >= d; --top) {
                const std::int64_t c = ((rem[top] % p) + p) % p;
                for (std::size_t i = 0; i <= d; ++i) rem[top - d + i] -= c * div[i];
                if (top == d) break;
            }
            bool zero = true;
            for (std::size_t i = 0; i < d; ++i) zero = zero && ((rem[i] % p) + p) % p == 0;
            if (zero) return false;
        }
    }
    return true;
}

const std::vector<std::pair<std::uint32_t, std::uint32_t>> kSmallFields{
    {2, 1}, {3, 1}, {5, 1}, {7, 1}, {2, 2}, {2, 3}, {3, 2}, {2, 4}, {5, 2}, {3, 3}, {7, 2}, {3, 4}};

}  // namespace

TEST_CASE("default moduli are irreducible and monic") {
    for (auto [p, k] : kSmallFields) {
        const auto f = build_field(p, k);
        CAPTURE(f.name());
        REQUIRE(f.modulus().size() == k + 1);
        CHECK(f.modulus().back() == 1);
        CHECK(naive_irreducible(f.modulus(), p));
        CHECK(is_irreducible(f.modulus(), p));
        CHECK(f.order() == oracle::Gf(f).order());
    }
}

TEST_CASE("is_irreducible agrees with trial division on every monic quadratic and cubic") {
    for (std::uint32_t p : {2u, 3u, 5u}) {
        for (std::size_t deg : {2u, 3u}) {
            std::size_t count = 1;
            for (std::size_t i = 0; i < deg; ++i) count *= p;
            for (std::size_t idx = 0; idx < count; ++idx) {
                std::vector<std::uint32_t> poly(deg + 1, 1);
                std::size_t x = idx;
                for (std::size_t i = 0; i < deg; ++i, x /= p) poly[i] = x % p;
                CHECK(is_irreducible(poly, p) == naive_irreducible(poly, p));
            }
        }
    }
}

TEST_CASE("field construction errors") {
    auto code_of = [](auto fn) {
        try {
            fn();
        } catch (const Error& e) {
            return e.code();
        }
        return ErrorCode::InvalidArgument;
    };
    CHECK(code_of([] { build_field(4, 2); }) == ErrorCode::NotPrime);
    CHECK(code_of([] { build_field(1, 1); }) == ErrorCode::NotPrime);
    CHECK(code_of([] { build_field(2, 2, std::vector<std::uint32_t>{1, 0, 1}); }) == ErrorCode::Reducible);
    CHECK(code_of([] { build_field(2, 2, std::vector<std::uint32_t>{1, 1, 1, 1}); }) == ErrorCode::DegreeMismatch);
    CHECK(code_of([] { build_field(3, 0); }) == ErrorCode::DegreeMismatch);
    CHECK(code_of([] { build_field(3, 2).one() / build_field(3, 2).zero(); }) == ErrorCode::DivisionByZero);
    CHECK(code_of([] { build_field(3, 2).one() + build_field(5, 2).one(); }) == ErrorCode::FieldMismatch);
    CHECK(code_of([] { frobenius_involution(build_field(2, 3).one()); }) == ErrorCode::NoInvolution);
}

TEST_CASE("fields are interned") {
    CHECK(build_field(3, 2) == build_field(3, 2));
    CHECK(build_field(3, 2, build_field(3, 2).modulus()) == build_field(3, 2));
    CHECK_FALSE(build_field(3, 2) == build_field(3, 2, std::vector<std::uint32_t>{2, 2, 1}));
}

TEST_CASE("arithmetic tables match schoolbook polynomial arithmetic") {
    for (auto [p, k] : kSmallFields) {
        const auto f = build_field(p, k);
        const oracle::Gf o(f);
        CAPTURE(f.name());
        const auto els = f.elements();
        REQUIRE(els.size() == o.order());
        for (const auto& a : els) {
            CHECK(a.coeffs() == o.from_index(a.index()));
            for (const auto& b : els) {
                REQUIRE((a + b).coeffs() == o.add(a.coeffs(), b.coeffs()));
                REQUIRE((a - b).coeffs() == o.sub(a.coeffs(), b.coeffs()));
                REQUIRE((a * b).coeffs() == o.mul(a.coeffs(), b.coeffs()));
            }
            if (!a.is_zero()) CHECK((a * a.inv()).is_one());
        }
    }
}

TEST_CASE("polynomial path for fields past the table bound") {
    const auto f = build_field(3, 6);  // 729 elements
    const oracle::Gf o(f);
    Rng rng(11);
    for (int i = 0; i < 3000; ++i) {
        const auto a = f.from_index(static_cast<std::uint32_t>(rng.below(f.order())));
        const auto b = f.from_index(static_cast<std::uint32_t>(rng.below(f.order())));
        REQUIRE((a * b).coeffs() == o.mul(a.coeffs(), b.coeffs()));
        REQUIRE((a + b).coeffs() == o.add(a.coeffs(), b.coeffs()));
        if (!b.is_zero()) REQUIRE(((a / b) * b) == a);
    }
    const auto g = f.from_index(5);
    CHECK(g.pow(static_cast<std::int64_t>(f.order()) - 1).is_one());
    CHECK(frobenius_involution(frobenius_involution(g)) == g);
}

TEST_CASE("pow, including negative exponents") {
    const auto f = build_field(5, 2);
    const oracle::Gf o(f);
    for (const auto& x : f.elements()) {
        for (std::int64_t n = 0; n < 30; ++n) CHECK(x.pow(n).coeffs() == o.pow(x.coeffs(), n));
        if (!x.is_zero()) {
            CHECK(x.pow(-1) == x.inv());
            CHECK(x.pow(-3) * x.pow(3) == f.one());
            CHECK(x.pow(24).is_one());
        }
    }
}

TEST_CASE("arith dispatch") {
    const auto f = build_field(3, 2);
    const auto a = f.from_index(4), b = f.from_index(7);
    CHECK(arith(ArithOp::Add, a, b) == a + b);
    CHECK(arith(ArithOp::Sub, a, b) == a - b);
    CHECK(arith(ArithOp::Mul, a, b) == a * b);
    CHECK(arith(ArithOp::Inv, a) == a.inv());
    CHECK(arith(ArithOp::Pow, a, std::int64_t{5}) == a.pow(5));
    CHECK_THROWS_AS(arith(ArithOp::Add, a), Error);
}

TEST_CASE("involution properties") {
    for (auto [p, k] : kSmallFields) {
        const auto f = build_field(p, k);
        if (!f.has_involution()) {
            CHECK(k % 2 == 1);
            continue;
        }
        const oracle::Gf o(f);
        CAPTURE(f.name());
        CHECK(f.q() == o.q());
        std::size_t fixed = 0;
        for (const auto& x : f.elements()) {
            const auto gx = frobenius_involution(x);
            CHECK(gx.coeffs() == o.conj(x.coeffs()));
            CHECK(frobenius_involution(gx) == x);
            fixed += gx == x ? 1 : 0;
            CHECK(in_fixed_subfield(x) == (gx == x));
            for (const auto& y : f.elements()) {
                CHECK(frobenius_involution(x * y) == gx * frobenius_involution(y));
                CHECK(frobenius_involution(x + y) == gx + frobenius_involution(y));
            }
        }
        CHECK(fixed == f.q());
        CHECK(fixed_subfield(f).size() == f.q());
        CHECK_FALSE(in_fixed_subfield(f.kappa()));
    }
}

TEST_CASE("kappa is the first element outside the fixed subfield") {
    for (auto [p, k] : kSmallFields) {
        const auto f = build_field(p, k);
        if (!f.has_involution()) continue;
        const oracle::Gf o(f);
        for (const auto& x : f.elements()) {
            if (o.conj(x.coeffs()) != x.coeffs()) {
                CHECK(f.kappa() == x);
                break;
            }
        }
    }
}

TEST_CASE("decompose and recompose are inverse") {
    for (auto [p, k] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{2, 2}, {3, 2}, {2, 4}, {5, 2}, {7, 2}}) {
        const auto f = build_field(p, k);
        for (const auto& x : f.elements()) {
            const auto [a, b] = decompose(x);
            CHECK(in_fixed_subfield(a));
            CHECK(in_fixed_subfield(b));
            CHECK(recompose(a, b) == x);
            CHECK(a + f.kappa() * b == x);
        }
    }
}

TEST_CASE("norm is multiplicative, lands in the subfield, and equals x^(q+1)") {
    for (auto [p, k] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{2, 2}, {3, 2}, {2, 4}, {5, 2}}) {
        const auto f = build_field(p, k);
        const oracle::Gf o(f);
        for (const auto& x : f.elements()) {
            CHECK(norm(x).coeffs() == o.pow(x.coeffs(), o.q() + 1));
            CHECK(in_fixed_subfield(norm(x)));
            CHECK(norm(x).is_zero() == x.is_zero());
            for (const auto& y : f.elements()) CHECK(norm(x * y) == norm(x) * norm(y));
        }
    }
}

TEST_CASE("sum of squares agrees with the norm exactly when kappa^2 = -1") {
    for (auto [p, k] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{2, 2}, {3, 2}, {5, 2}, {7, 2}, {3, 4}}) {
        const auto f = build_field(p, k);
        const oracle::Gf o(f);
        const auto kk = o.mul(f.kappa().coeffs(), f.kappa().coeffs());
        const bool minus_one = kk == o.neg(o.one());
        CHECK(kappa_squares_to_minus_one(f) == minus_one);
        bool all_agree = true;
        for (const auto& x : f.elements()) {
            const auto [a, b] = decompose(x);
            CHECK(sum_of_squares(x) == a * a + b * b);
            all_agree = all_agree && sum_of_squares(x) == norm(x);
        }
        CHECK(all_agree == minus_one);
    }
}

TEST_CASE("element text round trip") {
    for (auto [p, k] : kSmallFields) {
        const auto f = build_field(p, k);
        for (const auto& x : f.elements()) {
            CHECK(parse_element(f, x.to_string()) == x);
            std::string list = "[";
            for (auto c : x.coeffs()) list += std::to_string(c) + ",";
            list.back() = ']';
            CHECK(parse_element(f, list) == x);
        }
    }
    const auto f = build_field(3, 2);
    CHECK(parse_element(f, "t+1") == f.element({1, 1}));
    CHECK(parse_element(f, "1,1") == f.element({1, 1}));
    CHECK(parse_element(f, "2t") == f.element({0, 2}));
    CHECK(parse_element(f, "-1") == f.from_int(2));
    CHECK(parse_element(f, "t^2") == f.element({0, 1}) * f.element({0, 1}));
    CHECK(f.element({1, 1}).to_string() == "t+1");
    CHECK_THROWS_AS(parse_element(f, "x+1"), Error);
    CHECK_THROWS_AS(parse_element(f, "[1,1,1]"), Error);
    CHECK_THROWS_AS(parse_element(f, ""), Error);
}

TEST_CASE("from_int reduces mod p") {
    const auto f = build_field(5, 2);
    CHECK(f.from_int(7) == f.from_int(2));
    CHECK(f.from_int(-1) == -f.one());
    CHECK(f.from_int(5).is_zero());
}

TEST_CASE("theory coordinates") {
    const auto d = theory_coordinates(1, 2, 5);
    CHECK(d.field.order() == 25);
    CHECK(d.subfield_order == 5);
    CHECK(d.dimension == 2);
    CHECK(d.involution_exponent == 5);
    const auto e = theory_coordinates(2, 3, 2);
    CHECK(e.field.order() == 16);
    CHECK(e.subfield_order == 4);
    CHECK(e.dimension == 3);
    CHECK_THROWS_AS(theory_coordinates(1, 2, 6), Error);
}
