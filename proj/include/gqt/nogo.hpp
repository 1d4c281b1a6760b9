#pragma once

// Cloning and deleting obstructions for pairs of states.
//
// A unitary that clones (or deletes) both |phi> and |psi> forces
//   |phi> (x) |psi> + |psi> (x) |phi> = 0,
// equivalently a_i b_j = -b_i a_j for all i, j. Over a field this holds
// exactly when one vector is zero, or the characteristic is 2 and the two
// vectors span the same ray.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gqt/linalg.hpp"

namespace gqt {

enum class CloneVerdict { ZeroState, SameRayChar2, SameRayCharOdd, Independent };

std::string_view to_string(CloneVerdict v) noexcept;

enum class ObstructionKind { Cloning, Deleting };

struct CloneClassification {
    ObstructionKind kind = ObstructionKind::Cloning;
    /// phi (x) psi + psi (x) phi
    FieldVector tensor_obstruction;
    CloneVerdict verdict = CloneVerdict::Independent;
    /// rho with psi = phi * rho, for same-ray pairs
    std::optional<FieldElement> witness;
    /// Result of the entrywise test a_i b_j == -b_i a_j over all (i, j).
    bool entrywise_condition = false;
    /// Every commutator [a_i, a_j] and [b_i, b_j] vanished (always, over a field).
    bool commutators_vanish = true;

    bool obstruction_vanishes() const { return tensor_obstruction.is_zero(); }
};

/// Throws DimensionMismatch / FieldMismatch.
CloneClassification clone_obstruction(const FieldVector& phi, const FieldVector& psi);

/// Same equation as cloning, labelled as a deletability verdict.
CloneClassification delete_obstruction(const FieldVector& phi, const FieldVector& psi);

struct IdempotenceRow {
    std::uint32_t order = 0;
    std::uint32_t p = 0;
    std::uint32_t k = 0;
    bool all_idempotent = false;
    /// First element (canonical order) with x^2 != x.
    std::optional<FieldElement> counterexample;
};

/// alpha^2 = alpha for every alpha in F_2, and a counterexample in every other
/// field of order at most 9.
std::vector<IdempotenceRow> f2_orthogonal_special_case();

struct PermutationCloneResult {
    bool is_permutation_clone = false;
    /// permutation[i] = j when U(S_i (x) e) = S_j (x) S_j
    std::optional<std::vector<std::size_t>> permutation;
    bool is_identity = false;
};

/// Checks whether {U(psi (x) e) : psi in S} = {phi (x) phi : phi in S}.
///
/// U must preserve the standard form of the tensor space: U* U = I using the
/// field involution when there is one, and U^T U = I otherwise (prime fields
/// such as F_2). Duplicate entries of S are ignored. Throws DimensionMismatch
/// or NotUnitary.
PermutationCloneResult permutation_clone_check(const FieldMatrix& u, const std::vector<FieldVector>& states,
                                               const FieldVector& blank);

struct NoGoScan {
    std::size_t pairs = 0;
    std::map<CloneVerdict, std::size_t> verdict_counts;
    /// Pairs violating T = 0 <=> (zero state or (char 2 and same ray)).
    std::size_t theorem_violations = 0;
    /// Pairs where the entrywise test disagreed with the tensor computation.
    std::size_t entrywise_disagreements = 0;
    /// One sample pair per verdict.
    std::map<CloneVerdict, std::pair<FieldVector, FieldVector>> witnesses;
};

/// Exhaustive classification over all ordered pairs in spec^dim.
NoGoScan scan_pairs(const FieldSpec& spec, std::size_t dim, ObstructionKind kind);

/// All vectors of spec^dim in canonical (lexicographic) order.
std::vector<FieldVector> all_vectors(const FieldSpec& spec, std::size_t dim);

}  // namespace gqt
