#pragma once

// Bell states, modal measurement, teleportation and super-dense coding over a
// finite field. States are unnormalized; |abc> has index 4a + 2b + c.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gqt/linalg.hpp"

namespace gqt {

/// |00> + |11>
FieldVector bell_state(const FieldSpec& spec);

struct BellBasis {
    std::vector<std::string> labels;
    std::vector<FieldVector> vectors;
    /// Characteristic 2: phi- = phi+ and psi- = psi+, only two vectors remain.
    bool collapsed = false;
};

/// phi+, phi-, psi+, psi- (odd characteristic) or phi+, psi+ (characteristic 2).
BellBasis bell_basis(const FieldSpec& spec);

/// The four defining formulas evaluated literally, without removing duplicates.
std::vector<FieldVector> bell_vectors_literal(const FieldSpec& spec);

FieldMatrix gate_x(const FieldSpec& spec);
FieldMatrix gate_z(const FieldSpec& spec);
/// Z X (X applied first).
FieldMatrix gate_zx(const FieldSpec& spec);
/// n x n matrix with ones on the anti-diagonal.
FieldMatrix anti_diagonal(const FieldSpec& spec, std::size_t n);

/// State written as sum_i basis_i (x) components_i.
struct ModalMeasurement {
    std::vector<FieldVector> components;
    /// Indices with a nonzero component, ascending.
    std::vector<std::size_t> possible;
    /// Selected branch (seeded mode only).
    std::optional<std::size_t> branch;
};

/// Expresses `state` (length basis_dim * bystander_dim) against `basis` on the
/// leading factor, without selecting a branch. Throws NotInSpan or DependentBasis.
ModalMeasurement all_branches(const FieldVector& state, const std::vector<FieldVector>& basis,
                              std::size_t bystander_dim = 1);

/// all_branches followed by a uniform seeded choice among the possible branches.
ModalMeasurement measure_modal(const FieldVector& state, const std::vector<FieldVector>& basis, std::uint64_t seed,
                               std::size_t bystander_dim = 1);

struct LabeledState {
    std::string label;
    FieldVector state;
    std::vector<std::string> basis_labels;
};

struct ProtocolTranscript {
    std::string protocol;
    FieldSpec field;
    std::optional<FieldElement> alpha;
    std::optional<FieldElement> beta;
    std::string input_message;
    std::optional<std::uint64_t> seed;
    std::vector<LabeledState> states;
    std::vector<std::string> branch_labels;
    std::vector<std::size_t> possible_branches;
    std::size_t branch = 0;
    std::string classical_message;
    std::string correction;
    /// Scalar stripped from Bob's branch component before correction (1/2 in odd characteristic).
    std::optional<FieldElement> expansion_factor;
    FieldVector bob_before_correction;
    FieldVector final_state;
    std::vector<std::string> notes;
};

/// Odd-characteristic teleportation with a seeded branch. Throws
/// Char2NotSupported or ZeroState.
ProtocolTranscript teleport(const FieldElement& alpha, const FieldElement& beta, std::uint64_t seed);

/// Same, forcing measurement branch `branch` (index into bell_basis). Throws
/// InvalidArgument when that branch is impossible.
ProtocolTranscript teleport_on_branch(const FieldElement& alpha, const FieldElement& beta, std::size_t branch);

/// Characteristic-2 variant built on |phi> (x) B + I^-(|phi> (x) B~), B~ = |01> + |10>.
/// Throws NotChar2 or ZeroState.
ProtocolTranscript teleport_char2(const FieldElement& alpha, const FieldElement& beta, std::uint64_t seed);
ProtocolTranscript teleport_char2_on_branch(const FieldElement& alpha, const FieldElement& beta, std::size_t branch);

/// Left-hand side |phi> (x) B + I^-(|phi> (x) B~) of the characteristic-2 rewrite.
FieldVector char2_joint_state(const FieldElement& alpha, const FieldElement& beta);
/// Right-hand side phi+ (x) (alpha|0> + beta|1>) + psi+ (x) (alpha|1> + beta|0>).
FieldVector char2_bell_expansion(const FieldElement& alpha, const FieldElement& beta);

/// 00 -> id, 10 -> Z (x) id, 01 -> X (x) id, 11 -> ZX (x) id applied to the Bell
/// state. Throws Char2MessageUnsupported for 10 and 11 in characteristic 2,
/// InvalidArgument for anything other than two bits.
FieldVector sdc_encode(const std::string& message, const FieldSpec& spec);

/// Message whose encoding spans the same ray as `state`. Throws NotBellRay.
std::string sdc_decode(const FieldVector& state);

/// Messages usable in the field: four in odd characteristic, {00, 01} in characteristic 2.
std::vector<std::string> sdc_alphabet(const FieldSpec& spec);

ProtocolTranscript sdc_run(const std::string& message, const FieldSpec& spec);

}  // namespace gqt
