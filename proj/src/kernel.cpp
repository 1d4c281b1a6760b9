#include "gqt/kernel.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <thread>

namespace gqt {

namespace {

constexpr std::size_t kGuardDim = 4;
constexpr std::uint32_t kGuardQ = 5;

std::uint64_t point_key(const FieldVector& v, std::uint32_t order) {
    std::uint64_t key = 0;
    for (std::size_t i = v.size(); i-- > 0;) key = key * order + v[i].index();
    return key;
}

// All vectors of length n whose leftmost nonzero entry is 1, restricted to
// lead position `lead` and to entry `lead + 1` equal to `second` (when the
// vector has such an entry). Lexicographic order within the partition.
std::vector<FieldVector> normalized_partition(const FieldSpec& spec, std::size_t n, std::size_t lead,
                                              std::optional<std::uint32_t> second) {
    std::vector<FieldVector> out;
    const std::uint32_t order = spec.order();
    const std::size_t first_free = lead + 1 + (second ? 1 : 0);
    const std::size_t free = n - first_free;
    std::vector<std::uint32_t> digits(free, 0);
    for (;;) {
        FieldVector v(spec, n);
        v[lead] = spec.one();
        if (second) v[lead + 1] = spec.from_index(*second);
        for (std::size_t i = 0; i < free; ++i) v[first_free + i] = spec.from_index(digits[i]);
        out.push_back(std::move(v));
        // Increment with the last coordinate fastest, preserving lexicographic order.
        std::size_t pos = free;
        while (pos > 0) {
            --pos;
            if (++digits[pos] < order) break;
            digits[pos] = 0;
            if (pos == 0) return out;
        }
        if (free == 0) return out;
    }
}

}  // namespace

std::optional<std::size_t> KernelGeometry::index_of(const FieldVector& v) const {
    if (v.size() != form.dim() || v.is_zero()) return std::nullopt;
    const FieldVector n = normalize_ray(v);
    auto it = point_lookup_.find(point_key(n, form.spec().order()));
    if (it == point_lookup_.end()) return std::nullopt;
    return it->second;
}

std::optional<std::size_t> KernelGeometry::line_index(const std::vector<std::size_t>& sorted_points) const {
    auto it = line_lookup_.find(sorted_points);
    if (it == line_lookup_.end()) return std::nullopt;
    return it->second;
}

void KernelGeometry::rebuild_index() {
    const std::uint32_t order = form.spec().order();
    if (static_cast<double>(form.dim()) * std::log2(static_cast<double>(order)) > 63.0) {
        throw Error(ErrorCode::TooLarge, "point keys do not fit in 64 bits");
    }
    point_lookup_.clear();
    for (std::size_t i = 0; i < points.size(); ++i) point_lookup_[point_key(points[i].coords(), order)] = i;
    line_lookup_.clear();
    incidence.assign(points.size(), {});
    for (std::size_t l = 0; l < lines.size(); ++l) {
        line_lookup_[lines[l]] = l;
        for (auto p : lines[l]) incidence.at(p).push_back(l);
    }
}

std::map<std::size_t, std::size_t> KernelGeometry::point_degree_histogram() const {
    std::map<std::size_t, std::size_t> h;
    for (const auto& inc : incidence) ++h[inc.size()];
    return h;
}

std::map<std::size_t, std::size_t> KernelGeometry::line_size_histogram() const {
    std::map<std::size_t, std::size_t> h;
    for (const auto& l : lines) ++h[l.size()];
    return h;
}

bool is_self_orthogonal(const FieldVector& v, const HermitianForm& f) { return evaluate_form(f, v, v).is_zero(); }

FieldVector polar_hyperplane(const FieldVector& v, const HermitianForm& f) {
    require_same_field(v.spec(), f.spec());
    if (v.size() != f.dim()) throw Error(ErrorCode::DimensionMismatch, "vector length differs from form dimension");
    if (v.is_zero()) throw Error(ErrorCode::ZeroVector, "polarity is undefined at the zero vector");
    FieldVector c(f.spec(), f.dim());
    for (std::size_t j = 0; j < f.dim(); ++j) {
        FieldElement acc = f.spec().zero();
        for (std::size_t i = 0; i < f.dim(); ++i) acc += frobenius_involution(v[i]) * f.gram()(i, j);
        c[j] = acc;
    }
    return c;
}

std::vector<FieldVector> polar_of_subspace(const std::vector<FieldVector>& basis, const HermitianForm& f) {
    if (basis.empty()) {
        std::vector<FieldVector> whole;
        for (std::size_t i = 0; i < f.dim(); ++i) whole.push_back(FieldVector::basis(f.spec(), f.dim(), i));
        return whole;
    }
    if (rank(std::span<const FieldVector>(basis)) != basis.size()) {
        throw Error(ErrorCode::DependentBasis, "subspace basis vectors are linearly dependent");
    }
    std::vector<FieldVector> functionals;
    for (const auto& b : basis) functionals.push_back(polar_hyperplane(b, f));
    const auto perp = nullspace(FieldMatrix::from_row_vectors(functionals));
    return canonical_basis(std::span<const FieldVector>(perp));
}

std::vector<FieldVector> subspace_points(const std::vector<FieldVector>& basis) {
    const auto canon = canonical_basis(std::span<const FieldVector>(basis));
    if (canon.empty()) return {};
    const FieldSpec& spec = canon.front().spec();
    std::vector<FieldVector> out;
    for (std::size_t lead = 0; lead < canon.size(); ++lead) {
        for (const auto& coeffs : normalized_partition(spec, canon.size(), lead, std::nullopt)) {
            FieldVector v(spec, canon.front().size());
            for (std::size_t i = 0; i < canon.size(); ++i) {
                if (!coeffs[i].is_zero()) v = v + canon[i] * coeffs[i];
            }
            out.push_back(normalize_ray(v));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

KernelGeometry enumerate_kernel(const HermitianForm& f, const EnumerationOptions& options) {
    const FieldSpec& spec = f.spec();
    const std::size_t n = f.dim();
    if (!options.guard_override && (n > kGuardDim || spec.q() > kGuardQ)) {
        throw Error(ErrorCode::TooLarge, "enumeration bound is dim <= 4 and q <= 5 (dim " + std::to_string(n) +
                                             ", q " + std::to_string(spec.q()) + "); pass the guard override to proceed");
    }

    // Partitions: (lead position, value of the next coordinate). Each is
    // scanned independently and the results are concatenated in partition
    // order, which is already the global lexicographic order.
    struct Partition {
        std::size_t lead;
        std::optional<std::uint32_t> second;
    };
    std::vector<Partition> parts;
    for (std::size_t lead = n; lead-- > 0;) {
        if (lead + 1 < n) {
            for (std::uint32_t s = 0; s < spec.order(); ++s) parts.push_back({lead, s});
        } else {
            parts.push_back({lead, std::nullopt});
        }
    }
    std::vector<std::vector<ProjectivePoint>> found(parts.size());
    auto scan = [&](std::size_t part) {
        for (auto& v : normalized_partition(spec, n, parts[part].lead, parts[part].second)) {
            if (is_self_orthogonal(v, f)) found[part].emplace_back(v);
        }
    };
    const unsigned threads = std::max(1U, options.threads);
    if (threads == 1) {
        for (std::size_t i = 0; i < parts.size(); ++i) scan(i);
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < threads; ++t) {
            pool.emplace_back([&, t] {
                for (std::size_t i = t; i < parts.size(); i += threads) scan(i);
            });
        }
        for (auto& th : pool) th.join();
    }

    KernelGeometry geom(f);
    for (auto& chunk : found) {
        for (auto& p : chunk) geom.points.push_back(std::move(p));
    }
    std::sort(geom.points.begin(), geom.points.end());
    geom.rebuild_index();

    // Lines: span each collinear pair not yet covered by a line, keep the
    // span when all its points are in the kernel.
    const std::size_t count = geom.points.size();
    std::vector<std::vector<std::size_t>> lines_through(count);
    for (std::size_t i = 0; i < count; ++i) {
        const FieldVector& x = geom.points[i].coords();
        for (std::size_t j = i + 1; j < count; ++j) {
            const FieldVector& y = geom.points[j].coords();
            if (!evaluate_form(f, x, y).is_zero()) continue;
            bool covered = false;
            for (auto l : lines_through[i]) {
                if (std::binary_search(geom.lines[l].begin(), geom.lines[l].end(), j)) {
                    covered = true;
                    break;
                }
            }
            if (covered) continue;
            std::vector<std::size_t> members;
            bool isotropic = true;
            for (const auto& p : subspace_points({x, y})) {
                auto idx = geom.index_of(p);
                if (!idx) {
                    isotropic = false;
                    break;
                }
                members.push_back(*idx);
            }
            if (!isotropic) continue;
            std::sort(members.begin(), members.end());
            const std::size_t id = geom.lines.size();
            for (auto m : members) lines_through[m].push_back(id);
            geom.lines.push_back(std::move(members));
        }
    }
    std::sort(geom.lines.begin(), geom.lines.end());
    geom.rebuild_index();
    return geom;
}

bool collinear(const FieldVector& x, const FieldVector& y, const KernelGeometry& geom) {
    if (!is_self_orthogonal(x, geom.form) || !is_self_orthogonal(y, geom.form)) {
        throw Error(ErrorCode::NotKernelPoint, "collinearity is defined between kernel points");
    }
    return evaluate_form(geom.form, x, y).is_zero();
}

bool share_line(std::size_t i, std::size_t j, const KernelGeometry& geom) {
    for (auto l : geom.incidence.at(i)) {
        if (std::binary_search(geom.lines[l].begin(), geom.lines[l].end(), j)) return true;
    }
    return false;
}

OneOrAllReport verify_one_or_all(const KernelGeometry& geom) {
    OneOrAllReport report;
    const std::size_t n = geom.points.size();

    std::vector<std::uint8_t> perp(n * n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) {
            const bool z = evaluate_form(geom.form, geom.points[i].coords(), geom.points[j].coords()).is_zero();
            perp[i * n + j] = perp[j * n + i] = z ? 1 : 0;
        }
    }

    for (std::size_t l = 0; l < geom.lines.size(); ++l) {
        const auto& line = geom.lines[l];
        bool isotropic = true;
        for (std::size_t a = 0; a < line.size() && isotropic; ++a)
            for (std::size_t b = a; b < line.size(); ++b)
                if (!perp[line[a] * n + line[b]]) {
                    isotropic = false;
                    break;
                }
        if (!isotropic) report.non_isotropic_lines.push_back(l);
    }

    for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t l = 0; l < geom.lines.size(); ++l) {
            const auto& line = geom.lines[l];
            if (std::binary_search(line.begin(), line.end(), x)) continue;
            ++report.pairs_checked;
            std::size_t count = 0;
            for (auto y : line) count += perp[x * n + y];
            ++report.collinear_count_distribution[count];
            if (count != 1 && count != line.size()) report.one_or_all_violations.push_back({x, l, count});

            std::size_t meeting = 0;
            for (auto v : geom.incidence[x]) {
                const auto& other = geom.lines[v];
                for (auto y : other) {
                    if (std::binary_search(line.begin(), line.end(), y)) {
                        ++meeting;
                        break;
                    }
                }
            }
            if (meeting != 1) report.unique_line_violations.push_back({x, l, meeting});
        }
    }
    return report;
}

std::vector<std::size_t> hermitian_curve(const FieldVector& x, const KernelGeometry& geom) {
    if (x.size() != geom.form.dim()) throw Error(ErrorCode::DimensionMismatch, "point dimension differs from form");
    if (x.is_zero()) throw Error(ErrorCode::ZeroVector, "the zero vector is not a point");
    if (is_self_orthogonal(x, geom.form)) {
        throw Error(ErrorCode::SelfOrthogonalInput, "Hermitian curves are cut by polars of non-kernel points");
    }
    const FieldVector c = polar_hyperplane(x, geom.form);
    std::vector<std::size_t> curve;
    for (std::size_t i = 0; i < geom.points.size(); ++i) {
        FieldElement acc = c.spec().zero();
        const FieldVector& p = geom.points[i].coords();
        for (std::size_t j = 0; j < p.size(); ++j) acc += c[j] * p[j];
        if (acc.is_zero()) curve.push_back(i);
    }
    return curve;
}

std::size_t unique_meet(const KernelGeometry& geom, std::size_t line, const std::vector<std::size_t>& curve) {
    if (line >= geom.lines.size()) throw Error(ErrorCode::InvalidArgument, "line index out of range");
    std::vector<std::size_t> sorted = curve;
    std::sort(sorted.begin(), sorted.end());
    std::vector<std::size_t> common;
    std::set_intersection(geom.lines[line].begin(), geom.lines[line].end(), sorted.begin(), sorted.end(),
                          std::back_inserter(common));
    if (common.size() != 1) {
        throw Error(ErrorCode::NotUnique,
                    "line " + std::to_string(line) + " meets the curve in " + std::to_string(common.size()) + " points");
    }
    return common.front();
}

UnitaryActionReport unitary_action(const FieldMatrix& u, const KernelGeometry& geom) {
    UnitaryActionReport report;
    report.point_image.resize(geom.points.size());
    std::vector<bool> hit(geom.points.size(), false);
    for (std::size_t i = 0; i < geom.points.size(); ++i) {
        auto idx = geom.index_of(u * geom.points[i].coords());
        report.point_image[i] = idx;
        if (!idx) {
            ++report.point_escapes;
            continue;
        }
        hit[*idx] = true;
    }
    report.points_permuted = report.point_escapes == 0 && std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });

    std::vector<bool> line_hit(geom.lines.size(), false);
    for (const auto& line : geom.lines) {
        std::vector<std::size_t> image;
        bool escaped = false;
        for (auto p : line) {
            if (!report.point_image[p]) {
                escaped = true;
                break;
            }
            image.push_back(*report.point_image[p]);
        }
        std::sort(image.begin(), image.end());
        auto l = escaped ? std::nullopt : geom.line_index(image);
        if (!l) {
            ++report.line_escapes;
            continue;
        }
        line_hit[*l] = true;
    }
    report.lines_permuted =
        report.line_escapes == 0 && std::all_of(line_hit.begin(), line_hit.end(), [](bool b) { return b; });
    return report;
}

}  // namespace gqt
