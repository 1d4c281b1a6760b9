#include <doctest.h>

#include "gqt/error.hpp"
#include "gqt/protocols.hpp"
#include "oracle.hpp"

using namespace gqt;

namespace {

std::vector<std::pair<FieldElement, FieldElement>> nonzero_pairs(const FieldSpec& f) {
    std::vector<std::pair<FieldElement, FieldElement>> out;
    for (const auto& a : f.elements()) {
        for (const auto& b : f.elements()) {
            if (!a.is_zero() || !b.is_zero()) out.emplace_back(a, b);
        }
    }
    return out;
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

TEST_CASE("Bell basis") {
    const auto odd = bell_basis(build_field(3, 2));
    CHECK_FALSE(odd.collapsed);
    CHECK(odd.labels == std::vector<std::string>{"phi+", "phi-", "psi+", "psi-"});
    CHECK(rank(std::span<const FieldVector>(odd.vectors)) == 4);

    const auto f4 = build_field(2, 2);
    const auto even = bell_basis(f4);
    CHECK(even.collapsed);
    CHECK(even.vectors.size() == 2);
    const auto literal = bell_vectors_literal(f4);
    CHECK(literal[0] == literal[1]);
    CHECK(literal[2] == literal[3]);
    CHECK(bell_state(f4) == FieldVector::from_ints(f4, {1, 0, 0, 1}));
}

TEST_CASE("gates") {
    const auto f = build_field(3, 2);
    CHECK(gate_zx(f) == gate_z(f) * gate_x(f));
    CHECK(gate_x(f) * gate_x(f) == FieldMatrix::identity(f, 2));
    CHECK(anti_diagonal(f, 2) == gate_x(f));
    CHECK(gate_z(build_field(2, 2)) == FieldMatrix::identity(build_field(2, 2), 2));
}

TEST_CASE("modal measurement decomposes the state into its branches") {
    const auto f = build_field(3, 2);
    const auto basis = bell_basis(f);
    const oracle::Gf o(f);
    for (const auto& [a, b] : nonzero_pairs(f)) {
        const auto state = tensor(FieldVector(f, {a, b}), bell_state(f));
        const auto m = all_branches(state, basis.vectors, 2);
        FieldVector sum(f, 8);
        for (std::size_t i = 0; i < 4; ++i) sum = sum + tensor(basis.vectors[i], m.components[i]);
        CHECK(sum == state);
        for (std::size_t i = 0; i < 4; ++i) {
            const bool listed = std::find(m.possible.begin(), m.possible.end(), i) != m.possible.end();
            CHECK(listed == !m.components[i].is_zero());
        }
        const auto s1 = measure_modal(state, basis.vectors, 99, 2);
        const auto s2 = measure_modal(state, basis.vectors, 99, 2);
        REQUIRE(s1.branch.has_value());
        CHECK(s1.branch == s2.branch);
        CHECK(std::find(m.possible.begin(), m.possible.end(), *s1.branch) != m.possible.end());
    }
    CHECK(code_of([&] { all_branches(FieldVector(f, 3), basis.vectors, 1); }) != ErrorCode::InvalidArgument);
}

TEST_CASE("teleportation over GF(9) is exact on every branch") {
    const auto f = build_field(3, 2);
    for (const auto& [a, b] : nonzero_pairs(f)) {
        const FieldVector input(f, {a, b});
        const auto seeded = teleport(a, b, 1234);
        CHECK(seeded.final_state == input);
        CHECK(seeded.possible_branches.size() == 4);
        for (std::size_t br = 0; br < 4; ++br) {
            const auto t = teleport_on_branch(a, b, br);
            CHECK(t.final_state == input);
            CHECK(t.branch == br);
            REQUIRE(t.expansion_factor.has_value());
            CHECK(*t.expansion_factor * f.from_int(2) == f.one());
        }
    }
}

TEST_CASE("teleportation corrections by branch") {
    const auto f = build_field(5, 2);
    const auto t0 = teleport_on_branch(f.from_int(1), f.from_int(2), 0);
    const auto t3 = teleport_on_branch(f.from_int(1), f.from_int(2), 3);
    CHECK(t0.correction == "id");
    CHECK(t3.correction == "ZX");
    CHECK(t0.classical_message == "00");
    CHECK(t3.final_state == FieldVector::from_ints(f, {1, 2}));
}

TEST_CASE("characteristic-2 rewrite holds coefficient by coefficient") {
    const auto f = build_field(2, 2);
    for (const auto& a : f.elements()) {
        for (const auto& b : f.elements()) {
            // phi+ (x) (a,b) + psi+ (x) (b,a): entries 4i + 2j + k of |i j k>.
            const FieldVector expected(f, {a, b, b, a, b, a, a, b});
            CHECK(char2_joint_state(a, b) == expected);
            CHECK(char2_bell_expansion(a, b) == expected);
        }
    }
}

TEST_CASE("characteristic-2 teleportation over GF(4) is exact on both branches") {
    const auto f = build_field(2, 2);
    for (const auto& [a, b] : nonzero_pairs(f)) {
        const FieldVector input(f, {a, b});
        for (std::size_t br = 0; br < 2; ++br) CHECK(teleport_char2_on_branch(a, b, br).final_state == input);
        CHECK(teleport_char2(a, b, 5).final_state == input);
    }
}

TEST_CASE("teleportation errors") {
    const auto f4 = build_field(2, 2), f9 = build_field(3, 2);
    CHECK(code_of([&] { teleport(f4.one(), f4.zero(), 1); }) == ErrorCode::Char2NotSupported);
    CHECK(code_of([&] { teleport_char2(f9.one(), f9.zero(), 1); }) == ErrorCode::NotChar2);
    CHECK(code_of([&] { teleport(f9.zero(), f9.zero(), 1); }) == ErrorCode::ZeroState);
    CHECK(code_of([&] { teleport_char2(f4.zero(), f4.zero(), 1); }) == ErrorCode::ZeroState);
    CHECK(code_of([&] { teleport_on_branch(f9.one(), f9.zero(), 7); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("transcripts are reproducible") {
    const auto f = build_field(3, 2);
    const auto a = teleport(f.kappa(), f.one(), 42), b = teleport(f.kappa(), f.one(), 42);
    CHECK(a.branch == b.branch);
    CHECK(a.states.size() == b.states.size());
    for (std::size_t i = 0; i < a.states.size(); ++i) CHECK(a.states[i].state == b.states[i].state);
}

TEST_CASE("super-dense coding over GF(9)") {
    const auto f = build_field(3, 2);
    CHECK(sdc_alphabet(f) == std::vector<std::string>{"00", "01", "10", "11"});
    std::vector<FieldVector> encodings;
    for (const auto& m : sdc_alphabet(f)) {
        const auto s = sdc_encode(m, f);
        CHECK(sdc_decode(s) == m);
        CHECK(sdc_run(m, f).classical_message == m);
        encodings.push_back(s);
    }
    CHECK(rank(std::span<const FieldVector>(encodings)) == 4);
    CHECK(sdc_encode("01", f) == tensor(gate_x(f), FieldMatrix::identity(f, 2)) * bell_state(f));
}

TEST_CASE("super-dense coding collapses over GF(4)") {
    const auto f = build_field(2, 2);
    CHECK(sdc_alphabet(f) == std::vector<std::string>{"00", "01"});
    for (const auto& m : sdc_alphabet(f)) CHECK(sdc_decode(sdc_encode(m, f)) == m);
    const auto z_id = tensor(gate_z(f), FieldMatrix::identity(f, 2));
    CHECK(z_id * bell_state(f) == bell_state(f));
    const auto f9 = build_field(3, 2);
    CHECK_FALSE(tensor(gate_z(f9), FieldMatrix::identity(f9, 2)) * bell_state(f9) == bell_state(f9));
    CHECK(code_of([&] { sdc_encode("10", f); }) == ErrorCode::Char2MessageUnsupported);
    CHECK(code_of([&] { sdc_encode("11", f); }) == ErrorCode::Char2MessageUnsupported);
    CHECK(code_of([&] { sdc_encode("012", f); }) == ErrorCode::InvalidArgument);
    CHECK(code_of([&] { sdc_decode(FieldVector::from_ints(f, {1, 0, 0, 0})); }) == ErrorCode::NotBellRay);
}

TEST_CASE("super-dense decoding is ray based") {
    const auto f = build_field(3, 2);
    for (const auto& m : sdc_alphabet(f)) CHECK(sdc_decode(sdc_encode(m, f) * f.kappa()) == m);
}
