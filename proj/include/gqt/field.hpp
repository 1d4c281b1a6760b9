#pragma once

// Exact arithmetic in GF(p^k) with polynomial-basis elements, and the
// Frobenius involution x -> x^q on GF(q^2).

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "gqt/error.hpp"

namespace gqt {

namespace detail {
struct FieldData;
}

class FieldElement;

/// Handle to an immutable finite field GF(p^k).
///
/// Fields are interned: two specs built from the same (p, k, modulus) refer to
/// the same underlying object, and the object lives for the whole process, so
/// handles and elements are cheap to copy and safe to share between threads.
class FieldSpec {
   public:
    FieldSpec() = default;

    std::uint32_t p() const;
    std::uint32_t k() const;
    std::uint32_t characteristic() const { return p(); }
    /// Number of elements p^k.
    std::uint32_t order() const;
    /// Monic modulus, k+1 coefficients, low degree first.
    const std::vector<std::uint32_t>& modulus() const;

    bool has_involution() const;
    /// Order of the fixed subfield of the involution (p^(k/2)); throws NoInvolution for odd k.
    std::uint32_t q() const;
    /// First element outside the fixed subfield in canonical enumeration order.
    FieldElement kappa() const;

    FieldElement zero() const;
    FieldElement one() const;
    FieldElement from_int(std::int64_t n) const;
    /// Element with coefficient sequence `coeffs` (little-endian, length <= k, entries < p).
    FieldElement element(const std::vector<std::uint32_t>& coeffs) const;
    /// Element number `index` in canonical enumeration order (index = sum c_i p^i).
    FieldElement from_index(std::uint32_t index) const;
    /// All elements in canonical enumeration order.
    std::vector<FieldElement> elements() const;

    std::string name() const;

    bool valid() const noexcept { return data_ != nullptr; }
    const detail::FieldData* data() const noexcept { return data_; }

    friend bool operator==(const FieldSpec& a, const FieldSpec& b) noexcept { return a.data_ == b.data_; }

   private:
    friend class FieldElement;
    friend FieldSpec build_field(std::uint32_t, std::uint32_t, const std::optional<std::vector<std::uint32_t>>&);
    explicit FieldSpec(const detail::FieldData* d) : data_(d) {}
    const detail::FieldData* data_ = nullptr;
};

/// Element of a FieldSpec, stored by its canonical index.
class FieldElement {
   public:
    FieldElement() = default;
    FieldElement(const detail::FieldData* field, std::uint32_t index) : field_(field), index_(index) {}

    FieldSpec spec() const;
    std::uint32_t index() const noexcept { return index_; }
    /// Fixed-width little-endian coefficients (exactly k entries).
    std::vector<std::uint32_t> coeffs() const;
    bool is_zero() const noexcept { return index_ == 0; }
    bool is_one() const noexcept { return index_ == 1; }

    FieldElement operator+(const FieldElement& rhs) const;
    FieldElement operator-(const FieldElement& rhs) const;
    FieldElement operator*(const FieldElement& rhs) const;
    FieldElement operator/(const FieldElement& rhs) const;
    FieldElement operator-() const;
    FieldElement& operator+=(const FieldElement& rhs) { return *this = *this + rhs; }
    FieldElement& operator-=(const FieldElement& rhs) { return *this = *this - rhs; }
    FieldElement& operator*=(const FieldElement& rhs) { return *this = *this * rhs; }

    FieldElement inv() const;
    /// x^n; negative n uses the inverse.
    FieldElement pow(std::int64_t n) const;

    /// Polynomial text in the generator t, e.g. "2t^2+t+1".
    std::string to_string() const;

    friend bool operator==(const FieldElement& a, const FieldElement& b) noexcept {
        return a.field_ == b.field_ && a.index_ == b.index_;
    }
    friend bool operator<(const FieldElement& a, const FieldElement& b) noexcept { return a.index_ < b.index_; }

    const detail::FieldData* field() const noexcept { return field_; }

   private:
    const detail::FieldData* field_ = nullptr;
    std::uint32_t index_ = 0;
};

FieldSpec build_field(std::uint32_t p, std::uint32_t k,
                      const std::optional<std::vector<std::uint32_t>>& modulus = std::nullopt);

bool is_prime(std::uint64_t n);

/// True iff the monic polynomial (low degree first, entries < p) has no
/// nontrivial monic factor over F_p.
bool is_irreducible(const std::vector<std::uint32_t>& poly, std::uint32_t p);

enum class ArithOp { Add, Sub, Mul, Inv, Pow };

/// Dispatching form of the field operations; `operand` is an element for
/// add/sub/mul, an exponent for pow, and ignored for inv.
FieldElement arith(ArithOp op, const FieldElement& x,
                   const std::variant<std::monostate, FieldElement, std::int64_t>& operand = std::monostate{});

/// gamma(x) = x^q on GF(q^2). Throws NoInvolution when k is odd.
FieldElement frobenius_involution(const FieldElement& x);

/// gamma when the field has an involution, the identity otherwise. Used where
/// a form may be symmetric (orthogonal case) over fields without involution.
FieldElement conjugate_or_identity(const FieldElement& x);

bool in_fixed_subfield(const FieldElement& x);
std::vector<FieldElement> fixed_subfield(const FieldSpec& spec);

/// Unique (a, b) with x = a + kappa*b, a and b in the fixed subfield.
std::pair<FieldElement, FieldElement> decompose(const FieldElement& x);
FieldElement recompose(const FieldElement& a, const FieldElement& b);

/// Multiplicative norm x * gamma(x) = x^(q+1); lands in the fixed subfield.
FieldElement norm(const FieldElement& x);

/// The kappa-dependent reading a^2 + b^2 where x = a + kappa*b.
FieldElement sum_of_squares(const FieldElement& x);

/// True when kappa^2 = -1, the only case in which norm and sum_of_squares agree identically.
bool kappa_squares_to_minus_one(const FieldSpec& spec);

/// Parses "t+1", "2t^2+1", "t", "2", or a coefficient list "[1,1]" / "1,1".
FieldElement parse_element(const FieldSpec& spec, const std::string& text);

/// A point of the (i, m, p) lattice of finite modal theories: scalars
/// GF(p^(2i)), fixed subfield GF(p^i), state space of dimension m.
struct TheoryDescriptor {
    FieldSpec field;
    std::uint32_t subfield_order = 0;
    std::uint32_t dimension = 0;
    /// The involution is x -> x^involution_exponent.
    std::uint64_t involution_exponent = 0;
    std::uint32_t i = 0;
    std::uint32_t m = 0;
    std::uint32_t p = 0;
};

TheoryDescriptor theory_coordinates(std::uint32_t i, std::uint32_t m, std::uint32_t p);

}  // namespace gqt

template <>
struct std::hash<gqt::FieldElement> {
    std::size_t operator()(const gqt::FieldElement& x) const noexcept { return std::hash<std::uint32_t>{}(x.index()); }
};
