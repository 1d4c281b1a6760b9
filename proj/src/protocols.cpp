#include "gqt/protocols.hpp"

#include <algorithm>
#include <stdexcept>

#include "gqt/rng.hpp"

namespace gqt {

namespace {

const std::vector<std::string> kQubitLabels = {"|0>", "|1>"};
const std::vector<std::string> kTwoQubitLabels = {"|00>", "|01>", "|10>", "|11>"};
const std::vector<std::string> kThreeQubitLabels = {"|000>", "|001>", "|010>", "|011>",
                                                    "|100>", "|101>", "|110>", "|111>"};

constexpr const char* kBranchNote =
    "branch selection: every branch with a nonzero component is possible; one is chosen uniformly from the seed";

bool is_char2(const FieldSpec& spec) { return spec.characteristic() == 2; }

FieldVector qubit(const FieldElement& alpha, const FieldElement& beta) { return FieldVector(alpha.spec(), {alpha, beta}); }

// Two-bit message carried by each Bell vector, as in super-dense coding.
std::string bell_message(const std::string& label) {
    if (label == "phi+") return "00";
    if (label == "phi-") return "10";
    if (label == "psi+") return "01";
    return "11";
}

void require_nonzero(const FieldElement& alpha, const FieldElement& beta) {
    if (alpha.field() != beta.field()) throw Error(ErrorCode::FieldMismatch, "alpha and beta from different fields");
    if (alpha.is_zero() && beta.is_zero()) throw Error(ErrorCode::ZeroState, "alpha = beta = 0 is not a state");
}

}  // namespace

FieldVector bell_state(const FieldSpec& spec) { return FieldVector::from_ints(spec, {1, 0, 0, 1}); }

std::vector<FieldVector> bell_vectors_literal(const FieldSpec& spec) {
    return {FieldVector::from_ints(spec, {1, 0, 0, 1}), FieldVector::from_ints(spec, {1, 0, 0, -1}),
            FieldVector::from_ints(spec, {0, 1, 1, 0}), FieldVector::from_ints(spec, {0, 1, -1, 0})};
}

BellBasis bell_basis(const FieldSpec& spec) {
    const auto v = bell_vectors_literal(spec);
    if (is_char2(spec)) return {{"phi+", "psi+"}, {v[0], v[2]}, true};
    return {{"phi+", "phi-", "psi+", "psi-"}, v, false};
}

FieldMatrix gate_x(const FieldSpec& spec) { return FieldMatrix::from_ints(spec, {{0, 1}, {1, 0}}); }
FieldMatrix gate_z(const FieldSpec& spec) { return FieldMatrix::from_ints(spec, {{1, 0}, {0, -1}}); }
FieldMatrix gate_zx(const FieldSpec& spec) { return gate_z(spec) * gate_x(spec); }

FieldMatrix anti_diagonal(const FieldSpec& spec, std::size_t n) {
    FieldMatrix m(spec, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, n - 1 - i) = spec.one();
    return m;
}

ModalMeasurement all_branches(const FieldVector& state, const std::vector<FieldVector>& basis,
                              std::size_t bystander_dim) {
    if (basis.empty()) throw Error(ErrorCode::InvalidArgument, "measurement basis is empty");
    const FieldSpec& spec = state.spec();
    const std::size_t m = basis.front().size();
    if (bystander_dim == 0 || state.size() != m * bystander_dim) {
        throw Error(ErrorCode::DimensionMismatch, "state length is not basis length times bystander dimension");
    }
    if (rank(std::span<const FieldVector>(basis)) != basis.size()) {
        throw Error(ErrorCode::DependentBasis, "measurement basis vectors are linearly dependent");
    }
    const FieldMatrix b = FieldMatrix::from_columns(basis);

    ModalMeasurement out;
    out.components.assign(basis.size(), FieldVector(spec, bystander_dim));
    for (std::size_t s = 0; s < bystander_dim; ++s) {
        FieldVector slice(spec, m);
        for (std::size_t j = 0; j < m; ++j) slice[j] = state[j * bystander_dim + s];
        auto x = solve(b, slice);
        if (!x) throw Error(ErrorCode::NotInSpan, "state has a component outside the measurement basis");
        for (std::size_t i = 0; i < basis.size(); ++i) out.components[i][s] = (*x)[i];
    }
    for (std::size_t i = 0; i < basis.size(); ++i) {
        if (!out.components[i].is_zero()) out.possible.push_back(i);
    }
    return out;
}

ModalMeasurement measure_modal(const FieldVector& state, const std::vector<FieldVector>& basis, std::uint64_t seed,
                               std::size_t bystander_dim) {
    ModalMeasurement out = all_branches(state, basis, bystander_dim);
    if (out.possible.empty()) throw Error(ErrorCode::ZeroState, "the zero state has no possible outcome");
    Rng rng(seed);
    out.branch = out.possible[rng.below(out.possible.size())];
    return out;
}

namespace {

ProtocolTranscript teleport_impl(const FieldElement& alpha, const FieldElement& beta, std::optional<std::uint64_t> seed,
                                 std::optional<std::size_t> forced) {
    require_nonzero(alpha, beta);
    const FieldSpec spec = alpha.spec();
    if (is_char2(spec)) {
        throw Error(ErrorCode::Char2NotSupported, "the Bell-basis rewrite needs 2 invertible; use teleport_char2");
    }
    const FieldVector phi = qubit(alpha, beta);
    const FieldVector bell = bell_state(spec);
    const FieldVector joint = tensor(phi, bell);
    const BellBasis basis = bell_basis(spec);

    ModalMeasurement meas = seed ? measure_modal(joint, basis.vectors, *seed, 2) : all_branches(joint, basis.vectors, 2);
    std::size_t branch = 0;
    if (forced) {
        if (std::find(meas.possible.begin(), meas.possible.end(), *forced) == meas.possible.end()) {
            throw Error(ErrorCode::InvalidArgument, "branch " + std::to_string(*forced) + " is not possible");
        }
        branch = *forced;
    } else {
        branch = *meas.branch;
    }

    // Every component carries the factor 1/2 of the basis change; Bob's qubit
    // is the component with that factor removed.
    const FieldElement half = spec.from_int(2).inv();
    const FieldVector bob = meas.components[branch] * spec.from_int(2);

    const std::string& label = basis.labels[branch];
    FieldMatrix correction = FieldMatrix::identity(spec, 2);
    std::string correction_label = "id";
    if (label == "phi-") {
        correction = gate_z(spec);
        correction_label = "Z";
    } else if (label == "psi+") {
        correction = gate_x(spec);
        correction_label = "X";
    } else if (label == "psi-") {
        correction = gate_zx(spec);
        correction_label = "ZX";
    }
    const FieldVector final_state = correction * bob;
    if (!(final_state == phi)) throw std::logic_error("teleportation failed to reproduce the input state");

    ProtocolTranscript t;
    t.protocol = "teleport";
    t.field = spec;
    t.alpha = alpha;
    t.beta = beta;
    t.seed = seed;
    t.states = {{"input", phi, kQubitLabels},
                {"bell", bell, kTwoQubitLabels},
                {"joint", joint, kThreeQubitLabels}};
    for (std::size_t i = 0; i < basis.labels.size(); ++i) {
        t.states.push_back({"component:" + basis.labels[i], meas.components[i], kQubitLabels});
    }
    t.states.push_back({"bob_before_correction", bob, kQubitLabels});
    t.states.push_back({"bob_final", final_state, kQubitLabels});
    t.branch_labels = basis.labels;
    t.possible_branches = meas.possible;
    t.branch = branch;
    t.classical_message = bell_message(label);
    t.correction = correction_label;
    t.expansion_factor = half;
    t.bob_before_correction = bob;
    t.final_state = final_state;
    if (seed) t.notes.emplace_back(kBranchNote);
    return t;
}

ProtocolTranscript teleport_char2_impl(const FieldElement& alpha, const FieldElement& beta,
                                       std::optional<std::uint64_t> seed, std::optional<std::size_t> forced) {
    require_nonzero(alpha, beta);
    const FieldSpec spec = alpha.spec();
    if (!is_char2(spec)) throw Error(ErrorCode::NotChar2, spec.name() + " has odd characteristic");

    const FieldVector phi = qubit(alpha, beta);
    const FieldVector joint = char2_joint_state(alpha, beta);
    if (!(joint == char2_bell_expansion(alpha, beta))) {
        throw std::logic_error("characteristic-2 Bell rewrite does not hold");
    }
    const BellBasis basis = bell_basis(spec);
    ModalMeasurement meas = seed ? measure_modal(joint, basis.vectors, *seed, 2) : all_branches(joint, basis.vectors, 2);
    std::size_t branch = 0;
    if (forced) {
        if (std::find(meas.possible.begin(), meas.possible.end(), *forced) == meas.possible.end()) {
            throw Error(ErrorCode::InvalidArgument, "branch " + std::to_string(*forced) + " is not possible");
        }
        branch = *forced;
    } else {
        branch = *meas.branch;
    }

    const FieldVector bob = meas.components[branch];
    const bool flip = basis.labels[branch] == "psi+";
    const FieldVector final_state = flip ? gate_x(spec) * bob : bob;
    if (!(final_state == phi)) throw std::logic_error("teleportation failed to reproduce the input state");

    ProtocolTranscript t;
    t.protocol = "teleport_char2";
    t.field = spec;
    t.alpha = alpha;
    t.beta = beta;
    t.seed = seed;
    t.states = {{"input", phi, kQubitLabels},
                {"bell", bell_state(spec), kTwoQubitLabels},
                {"bell_tilde", FieldVector::from_ints(spec, {0, 1, 1, 0}), kTwoQubitLabels},
                {"joint", joint, kThreeQubitLabels}};
    for (std::size_t i = 0; i < basis.labels.size(); ++i) {
        t.states.push_back({"component:" + basis.labels[i], meas.components[i], kQubitLabels});
    }
    t.states.push_back({"bob_before_correction", bob, kQubitLabels});
    t.states.push_back({"bob_final", final_state, kQubitLabels});
    t.branch_labels = basis.labels;
    t.possible_branches = meas.possible;
    t.branch = branch;
    t.classical_message = flip ? "1" : "0";
    t.correction = flip ? "X" : "id";
    t.bob_before_correction = bob;
    t.final_state = final_state;
    if (seed) t.notes.emplace_back(kBranchNote);
    return t;
}

}  // namespace

ProtocolTranscript teleport(const FieldElement& alpha, const FieldElement& beta, std::uint64_t seed) {
    return teleport_impl(alpha, beta, seed, std::nullopt);
}

ProtocolTranscript teleport_on_branch(const FieldElement& alpha, const FieldElement& beta, std::size_t branch) {
    return teleport_impl(alpha, beta, std::nullopt, branch);
}

ProtocolTranscript teleport_char2(const FieldElement& alpha, const FieldElement& beta, std::uint64_t seed) {
    return teleport_char2_impl(alpha, beta, seed, std::nullopt);
}

ProtocolTranscript teleport_char2_on_branch(const FieldElement& alpha, const FieldElement& beta, std::size_t branch) {
    return teleport_char2_impl(alpha, beta, std::nullopt, branch);
}

FieldVector char2_joint_state(const FieldElement& alpha, const FieldElement& beta) {
    const FieldSpec spec = alpha.spec();
    const FieldVector phi = qubit(alpha, beta);
    const FieldVector tilde = FieldVector::from_ints(spec, {0, 1, 1, 0});
    return tensor(phi, bell_state(spec)) + anti_diagonal(spec, 8) * tensor(phi, tilde);
}

FieldVector char2_bell_expansion(const FieldElement& alpha, const FieldElement& beta) {
    const FieldSpec spec = alpha.spec();
    const auto v = bell_vectors_literal(spec);
    return tensor(v[0], qubit(alpha, beta)) + tensor(v[2], qubit(beta, alpha));
}

std::vector<std::string> sdc_alphabet(const FieldSpec& spec) {
    if (is_char2(spec)) return {"00", "01"};
    return {"00", "01", "10", "11"};
}

FieldVector sdc_encode(const std::string& message, const FieldSpec& spec) {
    if (message != "00" && message != "01" && message != "10" && message != "11") {
        throw Error(ErrorCode::InvalidArgument, "message must be two bits, got '" + message + "'");
    }
    if (is_char2(spec) && message[0] == '1') {
        throw Error(ErrorCode::Char2MessageUnsupported,
                    "Z = id in characteristic 2, so message " + message + " is indistinguishable");
    }
    const FieldMatrix id = FieldMatrix::identity(spec, 2);
    FieldMatrix gate = id;
    if (message == "10") gate = gate_z(spec);
    if (message == "01") gate = gate_x(spec);
    if (message == "11") gate = gate_zx(spec);
    return tensor(gate, id) * bell_state(spec);
}

std::string sdc_decode(const FieldVector& state) {
    if (state.size() != 4) throw Error(ErrorCode::NotBellRay, "Bell measurement needs a two-qubit state");
    const FieldSpec& spec = state.spec();
    std::string found;
    for (const auto& m : sdc_alphabet(spec)) {
        if (same_ray(state, sdc_encode(m, spec))) {
            if (!found.empty()) throw Error(ErrorCode::NotBellRay, "state matches more than one Bell ray");
            found = m;
        }
    }
    if (found.empty()) throw Error(ErrorCode::NotBellRay, "state " + state.to_string() + " is not on a Bell ray");
    return found;
}

ProtocolTranscript sdc_run(const std::string& message, const FieldSpec& spec) {
    const FieldVector sent = sdc_encode(message, spec);
    const std::string decoded = sdc_decode(sent);
    ProtocolTranscript t;
    t.protocol = "sdc";
    t.field = spec;
    t.input_message = message;
    t.states = {{"bell", bell_state(spec), kTwoQubitLabels}, {"sent", sent, kTwoQubitLabels}};
    const BellBasis basis = bell_basis(spec);
    t.branch_labels = basis.labels;
    for (std::size_t i = 0; i < basis.vectors.size(); ++i) {
        if (same_ray(sent, basis.vectors[i])) {
            t.branch = i;
            t.possible_branches = {i};
        }
    }
    t.classical_message = decoded;
    t.correction = "none";
    t.notes.push_back(std::string("encoding gate: ") +
                      (message == "00" ? "id" : message == "10" ? "Z(x)id" : message == "01" ? "X(x)id" : "ZX(x)id"));
    t.final_state = sent;
    return t;
}

}  // namespace gqt
