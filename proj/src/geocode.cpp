#include "gqt/geocode.hpp"

#include <algorithm>
#include <bit>

#include "gqt/protocols.hpp"
#include "gqt/rng.hpp"

namespace gqt {

namespace {

constexpr int kShuffleAttempts = 64;

bool disjoint(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
    std::vector<std::size_t> common;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(common));
    return common.empty();
}

void require_geometry(const std::shared_ptr<const KernelGeometry>& geom) {
    if (!geom) throw Error(ErrorCode::InvalidArgument, "parameters need an enumerated kernel");
    if (geom->form.dim() != 4) throw Error(ErrorCode::DimensionMismatch, "geometric coding runs in dimension 4");
}

}  // namespace

GeoParams make_parameters(std::shared_ptr<const KernelGeometry> geom, std::array<std::size_t, 3> lines,
                          const FieldMatrix& eta, std::uint64_t seed) {
    require_geometry(geom);
    for (auto l : lines) {
        if (l >= geom->lines.size()) throw Error(ErrorCode::InvalidArgument, "line index out of range");
    }
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = i + 1; j < 3; ++j)
            if (!disjoint(geom->lines[lines[i]], geom->lines[lines[j]])) {
                throw Error(ErrorCode::InvalidArgument, "agreed lines must be pairwise disjoint");
            }
    if (!is_unitary(eta, geom->form)) throw Error(ErrorCode::NotUnitary, "eta must preserve the form");
    GeoParams params;
    params.geom = std::move(geom);
    params.lines = lines;
    params.eta = eta;
    params.eta_inverse = inverse(eta);
    params.seed = seed;
    return params;
}

GeoParams agree_parameters(std::shared_ptr<const KernelGeometry> geom, std::uint64_t seed) {
    require_geometry(geom);
    Rng rng(seed);
    std::vector<std::size_t> order(geom->lines.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;

    for (int attempt = 0; attempt < kShuffleAttempts; ++attempt) {
        rng.shuffle(order);
        std::vector<std::size_t> chosen;
        for (auto l : order) {
            const bool ok = std::all_of(chosen.begin(), chosen.end(),
                                        [&](std::size_t c) { return disjoint(geom->lines[c], geom->lines[l]); });
            if (ok) chosen.push_back(l);
            if (chosen.size() == 3) break;
        }
        if (chosen.size() == 3) {
            const FieldMatrix eta = random_unitary(geom->form, seed);
            return make_parameters(std::move(geom), {chosen[0], chosen[1], chosen[2]}, eta, seed);
        }
    }
    throw Error(ErrorCode::ExhaustedSearch, "no three pairwise-disjoint lines found");
}

EncodeTrace geo_encode_traced(const FieldVector& state, const GeoParams& params) {
    require_geometry(params.geom);
    const KernelGeometry& geom = *params.geom;
    if (state.size() != geom.form.dim()) throw Error(ErrorCode::DimensionMismatch, "state must have length 4");
    if (state.is_zero()) throw Error(ErrorCode::ZeroVector, "the zero vector is not a state");
    if (is_self_orthogonal(state, geom.form)) {
        throw Error(ErrorCode::SelfOrthogonalState, "state " + state.to_string() + " lies in the kernel");
    }

    EncodeTrace trace;
    trace.x = normalize_ray(state);
    trace.curve = hermitian_curve(trace.x, geom);
    std::vector<FieldVector> plain;
    for (std::size_t i = 0; i < 3; ++i) {
        trace.plain[i] = unique_meet(geom, params.lines[i], trace.curve);
        plain.push_back(geom.points[trace.plain[i]].coords());
    }
    trace.span_rank = rank(std::span<const FieldVector>(plain));
    for (const auto& p : plain) trace.ciphertext.points.emplace_back(params.eta * p);
    trace.ciphertext.bits = serialize_points(trace.ciphertext.points);
    return trace;
}

GeoCiphertext geo_encode(const FieldVector& state, const GeoParams& params) {
    EncodeTrace trace = geo_encode_traced(state, params);
    if (trace.degenerate()) {
        const auto& pts = params.geom->points;
        throw Error(ErrorCode::DegenerateSpan, "curve points " + pts[trace.plain[0]].coords().to_string() + ", " +
                                                   pts[trace.plain[1]].coords().to_string() + ", " +
                                                   pts[trace.plain[2]].coords().to_string() + " span rank " +
                                                   std::to_string(trace.span_rank));
    }
    return std::move(trace.ciphertext);
}

std::size_t coefficient_bits(const FieldSpec& spec) { return std::bit_width(spec.p() - 1); }

std::vector<std::uint8_t> serialize_points(const std::vector<ProjectivePoint>& points) {
    std::vector<std::uint8_t> bits;
    for (const auto& point : points) {
        const std::size_t width = coefficient_bits(point.coords().spec());
        for (const auto& e : point.coords().entries()) {
            for (auto c : e.coeffs()) {
                for (std::size_t b = width; b-- > 0;) bits.push_back(static_cast<std::uint8_t>((c >> b) & 1U));
            }
        }
    }
    return bits;
}

std::vector<ProjectivePoint> deserialize_points(const std::vector<std::uint8_t>& bits, const FieldSpec& spec,
                                                std::size_t count, std::size_t dim) {
    const std::size_t width = coefficient_bits(spec);
    const std::size_t expected = count * dim * spec.k() * width;
    if (bits.empty()) throw Error(ErrorCode::MalformedBitstream, "empty bitstream");
    if (bits.size() != expected) {
        throw Error(ErrorCode::MalformedBitstream,
                    "expected " + std::to_string(expected) + " bits, got " + std::to_string(bits.size()));
    }
    std::vector<ProjectivePoint> points;
    std::size_t pos = 0;
    for (std::size_t i = 0; i < count; ++i) {
        FieldVector v(spec, dim);
        for (std::size_t j = 0; j < dim; ++j) {
            std::vector<std::uint32_t> coeffs(spec.k());
            for (auto& c : coeffs) {
                for (std::size_t b = 0; b < width; ++b) {
                    if (bits[pos] > 1) throw Error(ErrorCode::MalformedBitstream, "bit values must be 0 or 1");
                    c = (c << 1U) | bits[pos++];
                }
                if (c >= spec.p()) throw Error(ErrorCode::MalformedBitstream, "coefficient exceeds p - 1");
            }
            v[j] = spec.element(coeffs);
        }
        if (v.is_zero()) throw Error(ErrorCode::MalformedBitstream, "point " + std::to_string(i) + " is zero");
        if (!(normalize_ray(v) == v)) {
            throw Error(ErrorCode::MalformedBitstream, "point " + std::to_string(i) + " is not normalized");
        }
        points.emplace_back(v);
    }
    return points;
}

Transmission geo_transmit(const GeoCiphertext& ct, const FieldSpec& spec) {
    if (ct.points.empty() || ct.bits.empty()) throw Error(ErrorCode::MalformedBitstream, "empty ciphertext");
    if (ct.bits != serialize_points(ct.points)) {
        throw Error(ErrorCode::MalformedBitstream, "ciphertext bits do not match its points");
    }
    const bool char2 = spec.characteristic() == 2;
    Transmission tx;
    std::vector<std::uint8_t> received;
    for (std::size_t pos = 0; pos < ct.bits.size();) {
        std::string message;
        if (char2) {
            message = std::string("0") + static_cast<char>('0' + ct.bits[pos]);
            pos += 1;
        } else {
            const std::uint8_t second = pos + 1 < ct.bits.size() ? ct.bits[pos + 1] : 0;
            message = std::string(1, static_cast<char>('0' + ct.bits[pos])) + static_cast<char>('0' + second);
            pos += 2;
        }
        tx.messages.push_back(message);
        const std::string decoded = sdc_decode(sdc_encode(message, spec));
        tx.received.push_back(decoded);
        if (char2) {
            received.push_back(static_cast<std::uint8_t>(decoded[1] - '0'));
        } else {
            received.push_back(static_cast<std::uint8_t>(decoded[0] - '0'));
            received.push_back(static_cast<std::uint8_t>(decoded[1] - '0'));
        }
    }
    received.resize(ct.bits.size());  // drop the padding bit of an odd-length stream
    tx.delivered.points = deserialize_points(received, spec, ct.points.size(), ct.points.front().dim());
    tx.delivered.bits = std::move(received);
    return tx;
}

ProjectivePoint geo_decode(const GeoCiphertext& ct, const GeoParams& params) {
    require_geometry(params.geom);
    const HermitianForm& form = params.geom->form;
    if (ct.points.size() != 3) throw Error(ErrorCode::MalformedBitstream, "ciphertext must carry three points");
    std::vector<FieldVector> plain;
    for (const auto& p : ct.points) {
        if (p.dim() != form.dim() || !is_self_orthogonal(p.coords(), form)) {
            throw Error(ErrorCode::NotKernelPoint, "ciphertext point " + p.coords().to_string() + " is not in the kernel");
        }
        plain.push_back(params.eta_inverse * p.coords());
    }
    if (rank(std::span<const FieldVector>(plain)) != 3) {
        throw Error(ErrorCode::DegenerateSpan, "received points do not span a plane");
    }
    const auto pole = polar_of_subspace(plain, form);
    return ProjectivePoint(pole.front());
}

std::string bits_to_hex(const std::vector<std::uint8_t>& bits) {
    static constexpr char kDigits[] = "0123456789abcdef";
    std::string out;
    for (std::size_t i = 0; i < bits.size(); i += 4) {
        unsigned nibble = 0;
        for (std::size_t b = 0; b < 4; ++b) nibble = (nibble << 1U) | (i + b < bits.size() ? bits[i + b] : 0U);
        out += kDigits[nibble];
    }
    return out;
}

std::vector<std::uint8_t> hex_to_bits(const std::string& hex, std::size_t bit_count) {
    if (hex.size() != (bit_count + 3) / 4) {
        throw Error(ErrorCode::MalformedBitstream, "hex length does not match " + std::to_string(bit_count) + " bits");
    }
    std::vector<std::uint8_t> bits;
    for (char ch : hex) {
        unsigned nibble = 0;
        if (ch >= '0' && ch <= '9') {
            nibble = static_cast<unsigned>(ch - '0');
        } else if (ch >= 'a' && ch <= 'f') {
            nibble = static_cast<unsigned>(ch - 'a' + 10);
        } else if (ch >= 'A' && ch <= 'F') {
            nibble = static_cast<unsigned>(ch - 'A' + 10);
        } else {
            throw Error(ErrorCode::MalformedBitstream, std::string("bad hex digit '") + ch + "'");
        }
        for (std::size_t b = 4; b-- > 0;) bits.push_back(static_cast<std::uint8_t>((nibble >> b) & 1U));
    }
    for (std::size_t i = bit_count; i < bits.size(); ++i) {
        if (bits[i]) throw Error(ErrorCode::MalformedBitstream, "nonzero padding bits");
    }
    bits.resize(bit_count);
    return bits;
}

FieldVector random_non_isotropic_state(const HermitianForm& f, std::uint64_t seed) {
    Rng rng(seed);
    const FieldSpec& spec = f.spec();
    for (;;) {
        FieldVector v(spec, f.dim());
        for (std::size_t i = 0; i < f.dim(); ++i) v[i] = spec.from_index(static_cast<std::uint32_t>(rng.below(spec.order())));
        if (!v.is_zero() && !is_self_orthogonal(v, f)) return v;
    }
}

RoundtripReport geo_roundtrip(const GeoParams& params, std::size_t trials, std::uint64_t seed) {
    require_geometry(params.geom);
    const KernelGeometry& geom = *params.geom;
    const FieldSpec& spec = geom.form.spec();
    RoundtripReport report;
    Rng rng(seed);
    for (std::size_t t = 0; t < trials; ++t) {
        const FieldVector state = random_non_isotropic_state(geom.form, rng.next());
        ++report.trials;
        EncodeTrace trace = geo_encode_traced(state, params);
        RoundtripWitness witness{t,
                                 trace.x,
                                 {geom.points[trace.plain[0]].coords(), geom.points[trace.plain[1]].coords(),
                                  geom.points[trace.plain[2]].coords()},
                                 trace.span_rank};
        if (trace.degenerate()) {
            ++report.degenerate_count;
            report.degenerate_witnesses.push_back(std::move(witness));
            continue;
        }
        const Transmission tx = geo_transmit(trace.ciphertext, spec);
        const ProjectivePoint decoded = geo_decode(tx.delivered, params);
        if (decoded.coords() == trace.x) {
            ++report.successes;
        } else {
            ++report.failures;
            report.failure_witnesses.push_back(std::move(witness));
        }
    }
    return report;
}

}  // namespace gqt
