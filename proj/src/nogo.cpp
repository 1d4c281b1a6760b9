#include "gqt/nogo.hpp"

#include <algorithm>
#include <map>

namespace gqt {

std::string_view to_string(CloneVerdict v) noexcept {
    switch (v) {
        case CloneVerdict::ZeroState: return "ZeroState";
        case CloneVerdict::SameRayChar2: return "SameRayChar2";
        case CloneVerdict::SameRayCharOdd: return "SameRayCharOdd";
        case CloneVerdict::Independent: return "Independent";
    }
    return "Unknown";
}

namespace {

// rho with psi = phi * rho, when phi != 0 and psi lies on phi's ray (or is 0).
std::optional<FieldElement> ray_ratio(const FieldVector& phi, const FieldVector& psi) {
    std::size_t lead = 0;
    while (lead < phi.size() && phi[lead].is_zero()) ++lead;
    if (lead == phi.size()) return std::nullopt;
    const FieldElement rho = psi[lead] / phi[lead];
    if (phi * rho == psi) return rho;
    return std::nullopt;
}

CloneClassification classify(const FieldVector& phi, const FieldVector& psi, ObstructionKind kind) {
    require_same_field(phi.spec(), psi.spec());
    if (phi.size() != psi.size()) {
        throw Error(ErrorCode::DimensionMismatch, "states of different dimensions: " + std::to_string(phi.size()) +
                                                      " and " + std::to_string(psi.size()));
    }
    const FieldSpec& spec = phi.spec();
    CloneClassification c;
    c.kind = kind;
    c.tensor_obstruction = tensor(phi, psi) + tensor(psi, phi);

    c.entrywise_condition = true;
    for (std::size_t i = 0; i < phi.size() && c.entrywise_condition; ++i) {
        for (std::size_t j = 0; j < psi.size(); ++j) {
            if (!(phi[i] * psi[j] == -(psi[i] * phi[j]))) {
                c.entrywise_condition = false;
                break;
            }
        }
    }
    // Commutators of the coordinates; the noncommutative branch of the
    // argument needs them, and over a field they are identically zero.
    for (std::size_t i = 0; i < phi.size(); ++i) {
        for (std::size_t j = 0; j < phi.size(); ++j) {
            if (!(phi[i] * phi[j] - phi[j] * phi[i]).is_zero() || !(psi[i] * psi[j] - psi[j] * psi[i]).is_zero()) {
                c.commutators_vanish = false;
            }
        }
    }

    if (phi.is_zero() || psi.is_zero()) {
        c.verdict = CloneVerdict::ZeroState;
        return c;
    }
    if (auto rho = ray_ratio(phi, psi)) {
        c.witness = rho;
        c.verdict = spec.characteristic() == 2 ? CloneVerdict::SameRayChar2 : CloneVerdict::SameRayCharOdd;
        return c;
    }
    c.verdict = CloneVerdict::Independent;
    return c;
}

}  // namespace

CloneClassification clone_obstruction(const FieldVector& phi, const FieldVector& psi) {
    return classify(phi, psi, ObstructionKind::Cloning);
}

CloneClassification delete_obstruction(const FieldVector& phi, const FieldVector& psi) {
    return classify(phi, psi, ObstructionKind::Deleting);
}

std::vector<IdempotenceRow> f2_orthogonal_special_case() {
    std::vector<IdempotenceRow> rows;
    for (std::uint32_t order = 2; order <= 9; ++order) {
        // prime powers only
        std::uint32_t p = 0;
        for (std::uint32_t d = 2; d <= order; ++d) {
            if (order % d == 0) {
                p = d;
                break;
            }
        }
        std::uint32_t k = 0;
        std::uint32_t r = order;
        while (r % p == 0) {
            r /= p;
            ++k;
        }
        if (r != 1) continue;
        const FieldSpec spec = build_field(p, k);
        IdempotenceRow row{order, p, k, true, std::nullopt};
        for (const auto& x : spec.elements()) {
            if (!(x * x == x)) {
                row.all_idempotent = false;
                row.counterexample = x;
                break;
            }
        }
        rows.push_back(row);
    }
    return rows;
}

PermutationCloneResult permutation_clone_check(const FieldMatrix& u, const std::vector<FieldVector>& states,
                                               const FieldVector& blank) {
    const std::size_t n = blank.size();
    if (!u.is_square() || u.rows() != n * n) {
        throw Error(ErrorCode::DimensionMismatch, "operator must act on the tensor square of the state space");
    }
    require_same_field(u.spec(), blank.spec());
    const FieldSpec& spec = u.spec();

    FieldMatrix adjoint(spec, u.cols(), u.rows());
    for (std::size_t i = 0; i < u.rows(); ++i)
        for (std::size_t j = 0; j < u.cols(); ++j) adjoint(j, i) = conjugate_or_identity(u(i, j));
    if (!(adjoint * u == FieldMatrix::identity(spec, u.rows()))) {
        throw Error(ErrorCode::NotUnitary, "operator does not preserve the standard form");
    }

    std::vector<FieldVector> set;
    for (const auto& s : states) {
        if (s.size() != n) throw Error(ErrorCode::DimensionMismatch, "state length differs from the blank state");
        require_same_field(spec, s.spec());
        if (std::find(set.begin(), set.end(), s) == set.end()) set.push_back(s);
    }

    // Images U(psi (x) e) are pairwise distinct, so set equality with the
    // tensor squares needs the squares to be distinct too.
    std::map<FieldVector, std::size_t> targets;
    for (std::size_t j = 0; j < set.size(); ++j) targets.emplace(tensor(set[j], set[j]), j);

    PermutationCloneResult result;
    if (targets.size() != set.size()) return result;
    std::vector<std::size_t> perm(set.size());
    std::vector<bool> used(set.size(), false);
    for (std::size_t i = 0; i < set.size(); ++i) {
        auto it = targets.find(u * tensor(set[i], blank));
        if (it == targets.end() || used[it->second]) return result;
        perm[i] = it->second;
        used[it->second] = true;
    }
    result.is_permutation_clone = true;
    result.is_identity = true;
    for (std::size_t i = 0; i < perm.size(); ++i) {
        if (perm[i] != i) result.is_identity = false;
    }
    result.permutation = std::move(perm);
    return result;
}

std::vector<FieldVector> all_vectors(const FieldSpec& spec, std::size_t dim) {
    std::vector<FieldVector> out;
    std::vector<std::uint32_t> digits(dim, 0);
    const std::uint32_t order = spec.order();
    for (;;) {
        FieldVector v(spec, dim);
        for (std::size_t i = 0; i < dim; ++i) v[i] = spec.from_index(digits[i]);
        out.push_back(std::move(v));
        std::size_t pos = dim;
        for (;;) {
            if (pos == 0) return out;
            --pos;
            if (++digits[pos] < order) break;
            digits[pos] = 0;
        }
    }
}

NoGoScan scan_pairs(const FieldSpec& spec, std::size_t dim, ObstructionKind kind) {
    NoGoScan scan;
    const auto vectors = all_vectors(spec, dim);
    for (const auto& phi : vectors) {
        for (const auto& psi : vectors) {
            const auto c = kind == ObstructionKind::Cloning ? clone_obstruction(phi, psi) : delete_obstruction(phi, psi);
            ++scan.pairs;
            ++scan.verdict_counts[c.verdict];
            scan.witnesses.try_emplace(c.verdict, phi, psi);
            const bool predicted_zero =
                c.verdict == CloneVerdict::ZeroState || c.verdict == CloneVerdict::SameRayChar2;
            if (predicted_zero != c.obstruction_vanishes()) ++scan.theorem_violations;
            if (c.entrywise_condition != c.obstruction_vanishes()) ++scan.entrywise_disagreements;
        }
    }
    return scan;
}

}  // namespace gqt
