#pragma once

// Geometric coding over H(3,q^2).
//
// A state x off the kernel is encoded by the three points where the agreed
// lines U, V, W meet the Hermitian curve pi(x) ∩ kernel, moved by an agreed
// unitary eta. The receiver undoes eta, spans the plane through the three
// points and takes its pole, which is x again because pi is an involution.

#include <array>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "gqt/kernel.hpp"

namespace gqt {

/// Version tag of the point bit layout: points in order, coordinates in
/// order, each coordinate as k little-endian coefficients, each coefficient
/// in ceil(log2 p) bits written most significant bit first.
inline constexpr const char* kGeoBitLayout = "gqt-geo-bits/1";

struct GeoParams {
    std::shared_ptr<const KernelGeometry> geom;
    std::array<std::size_t, 3> lines{};
    FieldMatrix eta;
    FieldMatrix eta_inverse;
    std::uint64_t seed = 0;
};

/// Three pairwise-disjoint lines (greedy scan over seeded shuffles) and
/// eta = random_unitary(form, seed). Throws ExhaustedSearch.
GeoParams agree_parameters(std::shared_ptr<const KernelGeometry> geom, std::uint64_t seed);

/// Same lines, caller-chosen eta. Throws NotUnitary or InvalidArgument (lines not disjoint).
GeoParams make_parameters(std::shared_ptr<const KernelGeometry> geom, std::array<std::size_t, 3> lines,
                          const FieldMatrix& eta, std::uint64_t seed = 0);

struct GeoCiphertext {
    std::vector<ProjectivePoint> points;
    std::vector<std::uint8_t> bits;
};

struct EncodeTrace {
    FieldVector x;
    std::vector<std::size_t> curve;
    /// u, v, w as indices into geom.points
    std::array<std::size_t, 3> plain{};
    std::size_t span_rank = 0;
    GeoCiphertext ciphertext;

    bool degenerate() const { return span_rank < 3; }
};

/// Runs every encoding step and reports the span rank instead of raising on a
/// degenerate triple. Throws SelfOrthogonalState.
EncodeTrace geo_encode_traced(const FieldVector& state, const GeoParams& params);

/// Throws SelfOrthogonalState or DegenerateSpan.
GeoCiphertext geo_encode(const FieldVector& state, const GeoParams& params);

std::size_t coefficient_bits(const FieldSpec& spec);
std::vector<std::uint8_t> serialize_points(const std::vector<ProjectivePoint>& points);
/// Throws MalformedBitstream.
std::vector<ProjectivePoint> deserialize_points(const std::vector<std::uint8_t>& bits, const FieldSpec& spec,
                                                std::size_t count = 3, std::size_t dim = 4);

struct Transmission {
    std::vector<std::string> messages;
    std::vector<std::string> received;
    GeoCiphertext delivered;
};

/// Sends the ciphertext bits through super-dense coding, two bits per message
/// in odd characteristic and one bit per message ("0b") in characteristic 2,
/// and rebuilds the points from the received bits. Throws MalformedBitstream.
Transmission geo_transmit(const GeoCiphertext& ct, const FieldSpec& spec);

/// Throws NotKernelPoint or DegenerateSpan.
ProjectivePoint geo_decode(const GeoCiphertext& ct, const GeoParams& params);

std::string bits_to_hex(const std::vector<std::uint8_t>& bits);
/// Throws MalformedBitstream.
std::vector<std::uint8_t> hex_to_bits(const std::string& hex, std::size_t bit_count);

struct RoundtripWitness {
    std::size_t trial = 0;
    FieldVector state;
    std::array<FieldVector, 3> plain;
    std::size_t span_rank = 0;
};

struct RoundtripReport {
    std::size_t trials = 0;
    std::size_t successes = 0;
    std::size_t degenerate_count = 0;
    std::size_t failures = 0;
    std::vector<RoundtripWitness> degenerate_witnesses;
    std::vector<RoundtripWitness> failure_witnesses;
};

/// A seeded random nonzero state that is not self-orthogonal.
FieldVector random_non_isotropic_state(const HermitianForm& f, std::uint64_t seed);

/// decode(transmit(encode(x))) for `trials` seeded random states.
RoundtripReport geo_roundtrip(const GeoParams& params, std::size_t trials, std::uint64_t seed);

}  // namespace gqt
