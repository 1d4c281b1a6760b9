#pragma once

// The quantum kernel of a Hermitian form: its self-orthogonal rays, the
// totally isotropic lines among them, the polarity w -> w^perp, and the
// incidence checks of the resulting polar space.

#include <cstdint>
#include <map>
#include <optional>
#include <unordered_map>
#include <vector>

#include "gqt/hermitian.hpp"

namespace gqt {

/// Ray representative whose leftmost nonzero coordinate is 1.
class ProjectivePoint {
   public:
    /// Normalizes v. Throws ZeroVector.
    explicit ProjectivePoint(const FieldVector& v) : coords_(normalize_ray(v)) {}

    const FieldVector& coords() const noexcept { return coords_; }
    std::size_t dim() const noexcept { return coords_.size(); }

    friend bool operator==(const ProjectivePoint& a, const ProjectivePoint& b) { return a.coords_ == b.coords_; }
    friend bool operator<(const ProjectivePoint& a, const ProjectivePoint& b) { return a.coords_ < b.coords_; }

   private:
    FieldVector coords_;
};

/// Points of the kernel in lexicographic coordinate order, and its lines as
/// sorted point-index lists in lexicographic order.
struct KernelGeometry {
    explicit KernelGeometry(HermitianForm f) : form(std::move(f)) {}

    HermitianForm form;
    std::vector<ProjectivePoint> points;
    std::vector<std::vector<std::size_t>> lines;
    /// incidence[i] lists the lines through point i, ascending.
    std::vector<std::vector<std::size_t>> incidence;

    /// Index of the ray of v among `points`, if it is one of them.
    std::optional<std::size_t> index_of(const FieldVector& v) const;
    std::optional<std::size_t> line_index(const std::vector<std::size_t>& sorted_points) const;

    /// Recomputes `incidence` and the lookup tables from `points` and `lines`.
    void rebuild_index();

    /// Distinct per-point line counts and per-line point counts.
    std::map<std::size_t, std::size_t> point_degree_histogram() const;
    std::map<std::size_t, std::size_t> line_size_histogram() const;

   private:
    std::unordered_map<std::uint64_t, std::size_t> point_lookup_;
    std::map<std::vector<std::size_t>, std::size_t> line_lookup_;
};

bool is_self_orthogonal(const FieldVector& v, const HermitianForm& f);

/// Coefficients c with <v,w> = sum_j c_j w_j, so pi(v) = {w : c.w = 0}. Throws ZeroVector.
FieldVector polar_hyperplane(const FieldVector& v, const HermitianForm& f);

/// Canonical basis of the intersection of pi(w) over w in `basis`.
/// An empty basis yields the whole space. Throws DependentBasis.
std::vector<FieldVector> polar_of_subspace(const std::vector<FieldVector>& basis, const HermitianForm& f);

/// All projective points of span(basis), normalized, in lexicographic order.
std::vector<FieldVector> subspace_points(const std::vector<FieldVector>& basis);

struct EnumerationOptions {
    /// Lifts the dim <= 4, q <= 5 desk-scale bound.
    bool guard_override = false;
    /// Worker threads for the point scan; the result does not depend on it.
    unsigned threads = 1;
};

/// Throws TooLarge past the guard.
KernelGeometry enumerate_kernel(const HermitianForm& f, const EnumerationOptions& options = {});

/// <x,y> = 0 for two kernel points. Throws NotKernelPoint.
bool collinear(const FieldVector& x, const FieldVector& y, const KernelGeometry& geom);

/// True iff points i and j lie on a common line of geom.
bool share_line(std::size_t i, std::size_t j, const KernelGeometry& geom);

struct IncidenceViolation {
    std::size_t point = 0;
    std::size_t line = 0;
    std::size_t count = 0;
};

struct OneOrAllReport {
    std::size_t pairs_checked = 0;
    /// Number of collinear points on the line, over all non-incident pairs.
    std::map<std::size_t, std::size_t> collinear_count_distribution;
    std::vector<IncidenceViolation> one_or_all_violations;
    /// Pairs where the number of lines through the point meeting the line is not 1.
    std::vector<IncidenceViolation> unique_line_violations;
    /// Lines that are not totally isotropic.
    std::vector<std::size_t> non_isotropic_lines;

    bool ok() const {
        return one_or_all_violations.empty() && unique_line_violations.empty() && non_isotropic_lines.empty();
    }
};

/// For every point x and line U with x off U, checks that x is collinear with
/// exactly one or with all points of U, and (rank 2) that exactly one line
/// through x meets U.
OneOrAllReport verify_one_or_all(const KernelGeometry& geom);

/// Indices of the kernel points in the plane pi(x). Throws SelfOrthogonalInput.
std::vector<std::size_t> hermitian_curve(const FieldVector& x, const KernelGeometry& geom);

/// The single point shared by a line and a curve. Throws NotUnique.
std::size_t unique_meet(const KernelGeometry& geom, std::size_t line, const std::vector<std::size_t>& curve);

struct UnitaryActionReport {
    std::size_t point_escapes = 0;
    std::size_t line_escapes = 0;
    bool points_permuted = false;
    bool lines_permuted = false;
    /// image of point i, when it stayed in the kernel
    std::vector<std::optional<std::size_t>> point_image;

    bool ok() const { return point_escapes == 0 && line_escapes == 0 && points_permuted && lines_permuted; }
};

/// Applies U to every point and line of geom and records where they land.
UnitaryActionReport unitary_action(const FieldMatrix& u, const KernelGeometry& geom);

}  // namespace gqt
