#include "gqt/field.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>
#include <tuple>

namespace gqt {

namespace detail {

using Poly = std::vector<std::uint32_t>;

namespace {

// Drops high zero coefficients; the zero polynomial becomes empty.
void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a modulo the monic polynomial m over F_p.
Poly poly_mod(Poly a, const Poly& m, std::uint32_t p) {
    trim(a);
    const std::size_t dm = m.size() - 1;
    while (a.size() > dm) {
        const std::uint32_t lead = a.back();
        const std::size_t shift = a.size() - 1 - dm;
        for (std::size_t i = 0; i <= dm; ++i) {
            a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + static_cast<std::uint64_t>(p - lead) * m[i]) % p);
        }
        trim(a);
    }
    return a;
}

}  // namespace

struct FieldData {
    std::uint32_t p = 0;
    std::uint32_t k = 0;
    std::uint32_t order = 0;
    Poly modulus;
    bool has_involution = false;
    std::uint32_t q = 0;
    std::uint32_t kappa = 0;

    // Operation tables, filled for small fields only.
    bool tabled = false;
    std::vector<std::uint32_t> add_table;
    std::vector<std::uint32_t> mul_table;
    std::vector<std::uint32_t> neg_table;
    std::vector<std::uint32_t> inv_table;
    std::vector<std::uint32_t> frob_table;

    static constexpr std::uint32_t kTableLimit = 256;

    Poly digits(std::uint32_t index) const {
        Poly d(k, 0);
        for (std::uint32_t i = 0; i < k; ++i) {
            d[i] = index % p;
            index /= p;
        }
        return d;
    }

    std::uint32_t encode(const Poly& d) const {
        std::uint32_t index = 0;
        for (std::size_t i = d.size(); i-- > 0;) index = index * p + d[i];
        return index;
    }

    std::uint32_t raw_add(std::uint32_t a, std::uint32_t b) const {
        Poly x = digits(a), y = digits(b);
        for (std::uint32_t i = 0; i < k; ++i) x[i] = (x[i] + y[i]) % p;
        return encode(x);
    }

    std::uint32_t raw_neg(std::uint32_t a) const {
        Poly x = digits(a);
        for (auto& c : x) c = (p - c) % p;
        return encode(x);
    }

    std::uint32_t raw_mul(std::uint32_t a, std::uint32_t b) const {
        const Poly x = digits(a), y = digits(b);
        Poly prod(2 * k, 0);
        for (std::uint32_t i = 0; i < k; ++i) {
            if (x[i] == 0) continue;
            for (std::uint32_t j = 0; j < k; ++j) {
                prod[i + j] = static_cast<std::uint32_t>((prod[i + j] + static_cast<std::uint64_t>(x[i]) * y[j]) % p);
            }
        }
        Poly r = poly_mod(std::move(prod), modulus, p);
        r.resize(k, 0);
        return encode(r);
    }

    std::uint32_t raw_pow(std::uint32_t a, std::uint64_t n) const {
        std::uint32_t result = 1;
        while (n > 0) {
            if (n & 1U) result = mul(result, a);
            a = mul(a, a);
            n >>= 1U;
        }
        return result;
    }

    std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
        return tabled ? add_table[static_cast<std::size_t>(a) * order + b] : raw_add(a, b);
    }
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
        return tabled ? mul_table[static_cast<std::size_t>(a) * order + b] : raw_mul(a, b);
    }
    std::uint32_t neg(std::uint32_t a) const { return tabled ? neg_table[a] : raw_neg(a); }
    std::uint32_t inv(std::uint32_t a) const {
        if (a == 0) throw Error(ErrorCode::DivisionByZero, "inverse of zero in " + name());
        return tabled ? inv_table[a] : raw_pow(a, order - 2);
    }
    std::uint32_t frob(std::uint32_t a) const { return tabled ? frob_table[a] : raw_pow(a, q); }

    std::string name() const {
        std::ostringstream os;
        os << "GF(" << order << ")";
        return os.str();
    }

    void build_tables() {
        if (order > kTableLimit) return;
        const std::size_t n = order;
        add_table.resize(n * n);
        mul_table.resize(n * n);
        neg_table.resize(n);
        inv_table.assign(n, 0);
        for (std::uint32_t a = 0; a < order; ++a) {
            neg_table[a] = raw_neg(a);
            for (std::uint32_t b = 0; b < order; ++b) {
                add_table[a * n + b] = raw_add(a, b);
                mul_table[a * n + b] = raw_mul(a, b);
            }
        }
        for (std::uint32_t a = 1; a < order; ++a) {
            for (std::uint32_t b = 1; b < order; ++b) {
                if (mul_table[a * n + b] == 1) {
                    inv_table[a] = b;
                    break;
                }
            }
        }
        tabled = true;
        if (has_involution) {
            frob_table.resize(n);
            for (std::uint32_t a = 0; a < order; ++a) frob_table[a] = raw_pow(a, q);
        }
    }
};

}  // namespace detail

using detail::FieldData;
using detail::Poly;

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) return false;
    }
    return true;
}

namespace {

std::uint64_t ipow(std::uint64_t base, std::uint32_t e) {
    std::uint64_t r = 1;
    while (e-- > 0) r *= base;
    return r;
}

bool divides(const Poly& divisor, const Poly& poly, std::uint32_t p) {
    return detail::poly_mod(poly, divisor, p).empty();
}

const FieldData* intern(FieldData&& candidate) {
    static std::mutex mutex;
    static std::map<std::tuple<std::uint32_t, std::uint32_t, Poly>, std::unique_ptr<FieldData>> registry;
    std::lock_guard lock(mutex);
    auto key = std::make_tuple(candidate.p, candidate.k, candidate.modulus);
    auto it = registry.find(key);
    if (it != registry.end()) return it->second.get();
    auto owned = std::make_unique<FieldData>(std::move(candidate));
    owned->build_tables();
    const FieldData* raw = owned.get();
    registry.emplace(std::move(key), std::move(owned));
    return raw;
}

const FieldData& checked(const FieldData* d) {
    if (d == nullptr) throw Error(ErrorCode::InvalidArgument, "use of an unbuilt field");
    return *d;
}

void same_field(const FieldElement& a, const FieldElement& b) {
    if (a.field() != b.field()) throw Error(ErrorCode::FieldMismatch, "operands belong to different fields");
}

}  // namespace

bool is_irreducible(const std::vector<std::uint32_t>& poly, std::uint32_t p) {
    Poly f = poly;
    detail::trim(f);
    if (f.size() < 2) return false;
    const std::size_t deg = f.size() - 1;
    if (deg == 1) return true;
    // Every reducible polynomial has a monic factor of degree <= deg/2.
    for (std::size_t d = 1; d <= deg / 2; ++d) {
        const std::uint64_t count = ipow(p, static_cast<std::uint32_t>(d));
        for (std::uint64_t n = 0; n < count; ++n) {
            Poly g(d + 1, 0);
            std::uint64_t m = n;
            for (std::size_t i = 0; i < d; ++i) {
                g[i] = static_cast<std::uint32_t>(m % p);
                m /= p;
            }
            g[d] = 1;
            if (divides(g, f, p)) return false;
        }
    }
    return true;
}

FieldSpec build_field(std::uint32_t p, std::uint32_t k, const std::optional<std::vector<std::uint32_t>>& modulus) {
    if (!is_prime(p)) throw Error(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
    if (k < 1) throw Error(ErrorCode::DegreeMismatch, "extension degree must be at least 1");
    const std::uint64_t order = ipow(p, k);
    if (order > (1ULL << 31)) throw Error(ErrorCode::TooLarge, "field order exceeds 2^31");

    FieldData data;
    data.p = p;
    data.k = k;
    data.order = static_cast<std::uint32_t>(order);

    if (modulus) {
        const Poly& m = *modulus;
        if (m.size() != k + 1) {
            throw Error(ErrorCode::DegreeMismatch,
                        "modulus has " + std::to_string(m.size()) + " coefficients, expected " + std::to_string(k + 1));
        }
        if (m.back() != 1) throw Error(ErrorCode::DegreeMismatch, "modulus must be monic");
        for (auto c : m) {
            if (c >= p) throw Error(ErrorCode::InvalidArgument, "modulus coefficient out of range");
        }
        if (!is_irreducible(m, p)) throw Error(ErrorCode::Reducible, "modulus is reducible over F_" + std::to_string(p));
        data.modulus = m;
    } else {
        // Lexicographic order on (c_0, c_1, ..., c_{k-1}), low degree compared first:
        // c_0 is the most significant digit of the counter.
        const std::uint64_t count = ipow(p, k);
        for (std::uint64_t n = 0; n < count; ++n) {
            Poly m(k + 1, 0);
            std::uint64_t r = n;
            for (std::size_t i = k; i-- > 0;) {
                m[i] = static_cast<std::uint32_t>(r % p);
                r /= p;
            }
            m[k] = 1;
            if (is_irreducible(m, p)) {
                data.modulus = std::move(m);
                break;
            }
        }
    }

    if (k % 2 == 0) {
        data.has_involution = true;
        data.q = static_cast<std::uint32_t>(ipow(p, k / 2));
        for (std::uint32_t x = 0; x < data.order; ++x) {
            if (data.raw_pow(x, data.q) != x) {
                data.kappa = x;
                break;
            }
        }
    }
    return FieldSpec(intern(std::move(data)));
}

// FieldSpec

std::uint32_t FieldSpec::p() const { return checked(data_).p; }
std::uint32_t FieldSpec::k() const { return checked(data_).k; }
std::uint32_t FieldSpec::order() const { return checked(data_).order; }
const std::vector<std::uint32_t>& FieldSpec::modulus() const { return checked(data_).modulus; }
bool FieldSpec::has_involution() const { return checked(data_).has_involution; }

std::uint32_t FieldSpec::q() const {
    const auto& d = checked(data_);
    if (!d.has_involution) throw Error(ErrorCode::NoInvolution, d.name() + " has odd extension degree");
    return d.q;
}

FieldElement FieldSpec::kappa() const {
    const auto& d = checked(data_);
    if (!d.has_involution) throw Error(ErrorCode::NoInvolution, d.name() + " has odd extension degree");
    return FieldElement(data_, d.kappa);
}

FieldElement FieldSpec::zero() const { return FieldElement(&checked(data_), 0); }
FieldElement FieldSpec::one() const { return FieldElement(&checked(data_), 1); }

FieldElement FieldSpec::from_int(std::int64_t n) const {
    const auto& d = checked(data_);
    std::int64_t r = n % static_cast<std::int64_t>(d.p);
    if (r < 0) r += d.p;
    return FieldElement(data_, static_cast<std::uint32_t>(r));
}

FieldElement FieldSpec::element(const std::vector<std::uint32_t>& coeffs) const {
    const auto& d = checked(data_);
    if (coeffs.size() > d.k) throw Error(ErrorCode::DimensionMismatch, "too many coefficients for " + d.name());
    for (auto c : coeffs) {
        if (c >= d.p) throw Error(ErrorCode::InvalidArgument, "coefficient " + std::to_string(c) + " not reduced mod p");
    }
    Poly full = coeffs;
    full.resize(d.k, 0);
    return FieldElement(data_, d.encode(full));
}

FieldElement FieldSpec::from_index(std::uint32_t index) const {
    const auto& d = checked(data_);
    if (index >= d.order) throw Error(ErrorCode::InvalidArgument, "element index out of range");
    return FieldElement(data_, index);
}

std::vector<FieldElement> FieldSpec::elements() const {
    const auto& d = checked(data_);
    std::vector<FieldElement> out;
    out.reserve(d.order);
    for (std::uint32_t i = 0; i < d.order; ++i) out.emplace_back(data_, i);
    return out;
}

std::string FieldSpec::name() const { return checked(data_).name(); }

// FieldElement

FieldSpec FieldElement::spec() const {
    return FieldSpec(field_);
}

std::vector<std::uint32_t> FieldElement::coeffs() const { return checked(field_).digits(index_); }

FieldElement FieldElement::operator+(const FieldElement& rhs) const {
    same_field(*this, rhs);
    return FieldElement(field_, checked(field_).add(index_, rhs.index_));
}

FieldElement FieldElement::operator-(const FieldElement& rhs) const {
    same_field(*this, rhs);
    const auto& d = checked(field_);
    return FieldElement(field_, d.add(index_, d.neg(rhs.index_)));
}

FieldElement FieldElement::operator*(const FieldElement& rhs) const {
    same_field(*this, rhs);
    return FieldElement(field_, checked(field_).mul(index_, rhs.index_));
}

FieldElement FieldElement::operator/(const FieldElement& rhs) const {
    same_field(*this, rhs);
    const auto& d = checked(field_);
    return FieldElement(field_, d.mul(index_, d.inv(rhs.index_)));
}

FieldElement FieldElement::operator-() const { return FieldElement(field_, checked(field_).neg(index_)); }

FieldElement FieldElement::inv() const { return FieldElement(field_, checked(field_).inv(index_)); }

FieldElement FieldElement::pow(std::int64_t n) const {
    const auto& d = checked(field_);
    if (n < 0) return inv().pow(-n);
    return FieldElement(field_, d.raw_pow(index_, static_cast<std::uint64_t>(n)));
}

std::string FieldElement::to_string() const {
    const auto c = coeffs();
    std::string out;
    for (std::size_t i = c.size(); i-- > 0;) {
        if (c[i] == 0) continue;
        if (!out.empty()) out += "+";
        if (i == 0) {
            out += std::to_string(c[i]);
            continue;
        }
        if (c[i] != 1) out += std::to_string(c[i]);
        out += "t";
        if (i > 1) out += "^" + std::to_string(i);
    }
    return out.empty() ? "0" : out;
}

FieldElement arith(ArithOp op, const FieldElement& x, const std::variant<std::monostate, FieldElement, std::int64_t>& operand) {
    auto element_operand = [&]() -> const FieldElement& {
        if (const auto* y = std::get_if<FieldElement>(&operand)) return *y;
        throw Error(ErrorCode::InvalidArgument, "operation requires an element operand");
    };
    switch (op) {
        case ArithOp::Add: return x + element_operand();
        case ArithOp::Sub: return x - element_operand();
        case ArithOp::Mul: return x * element_operand();
        case ArithOp::Inv: return x.inv();
        case ArithOp::Pow:
            if (const auto* n = std::get_if<std::int64_t>(&operand)) return x.pow(*n);
            throw Error(ErrorCode::InvalidArgument, "pow requires an integer exponent");
    }
    throw Error(ErrorCode::InvalidArgument, "unknown operation");
}

FieldElement frobenius_involution(const FieldElement& x) {
    const auto& d = checked(x.field());
    if (!d.has_involution) throw Error(ErrorCode::NoInvolution, d.name() + " has odd extension degree");
    return FieldElement(x.field(), d.frob(x.index()));
}

FieldElement conjugate_or_identity(const FieldElement& x) {
    const auto& d = checked(x.field());
    return d.has_involution ? FieldElement(x.field(), d.frob(x.index())) : x;
}

bool in_fixed_subfield(const FieldElement& x) { return frobenius_involution(x) == x; }

std::vector<FieldElement> fixed_subfield(const FieldSpec& spec) {
    std::vector<FieldElement> out;
    for (const auto& x : spec.elements()) {
        if (in_fixed_subfield(x)) out.push_back(x);
    }
    return out;
}

std::pair<FieldElement, FieldElement> decompose(const FieldElement& x) {
    // With x = a + kb and gamma(x) = a + gamma(k) b:
    //   b = (x - gamma(x)) / (k - gamma(k)),  a = x - k b.
    const FieldElement gx = frobenius_involution(x);
    const FieldElement kappa = x.spec().kappa();
    const FieldElement b = (x - gx) / (kappa - frobenius_involution(kappa));
    const FieldElement a = x - kappa * b;
    return {a, b};
}

FieldElement recompose(const FieldElement& a, const FieldElement& b) { return a + a.spec().kappa() * b; }

FieldElement norm(const FieldElement& x) { return x * frobenius_involution(x); }

FieldElement sum_of_squares(const FieldElement& x) {
    const auto [a, b] = decompose(x);
    return a * a + b * b;
}

bool kappa_squares_to_minus_one(const FieldSpec& spec) {
    const FieldElement k = spec.kappa();
    return k * k == -spec.one();
}

FieldElement parse_element(const FieldSpec& spec, const std::string& text) {
    std::string s;
    for (char c : text) {
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    }
    if (s.empty()) throw Error(ErrorCode::ParseError, "empty element text");

    const bool bracketed = s.front() == '[';
    if (bracketed || s.find(',') != std::string::npos) {
        if (bracketed) {
            if (s.back() != ']') throw Error(ErrorCode::ParseError, "unterminated coefficient list: " + text);
            s = s.substr(1, s.size() - 2);
        }
        std::vector<std::uint32_t> coeffs;
        std::stringstream ss(s);
        std::string item;
        while (std::getline(ss, item, ',')) {
            if (item.empty() || !std::all_of(item.begin(), item.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
                throw Error(ErrorCode::ParseError, "bad coefficient in: " + text);
            }
            coeffs.push_back(static_cast<std::uint32_t>(std::stoul(item)));
        }
        return spec.element(coeffs);
    }

    // Polynomial text: signed terms of the form [c][t[^e]].
    FieldElement result = spec.zero();
    const FieldElement t = spec.k() > 1 ? spec.from_index(spec.p()) : spec.zero();
    std::size_t pos = 0;
    bool any = false;
    while (pos < s.size()) {
        bool negative = false;
        if (s[pos] == '+' || s[pos] == '-') {
            negative = s[pos] == '-';
            ++pos;
        } else if (any) {
            throw Error(ErrorCode::ParseError, "expected '+' or '-' in: " + text);
        }
        std::size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        const bool has_coeff = pos > start;
        const std::int64_t coeff = has_coeff ? std::stoll(s.substr(start, pos - start)) : 1;
        std::int64_t exponent = 0;
        if (pos < s.size() && s[pos] == 't') {
            if (spec.k() == 1) throw Error(ErrorCode::ParseError, "generator t unavailable in a prime field");
            ++pos;
            exponent = 1;
            if (pos < s.size() && s[pos] == '^') {
                ++pos;
                start = pos;
                while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
                if (pos == start) throw Error(ErrorCode::ParseError, "missing exponent in: " + text);
                exponent = std::stoll(s.substr(start, pos - start));
            }
        } else if (!has_coeff) {
            throw Error(ErrorCode::ParseError, "cannot parse element: " + text);
        }
        FieldElement term = spec.from_int(coeff) * (exponent == 0 ? spec.one() : t.pow(exponent));
        result = negative ? result - term : result + term;
        any = true;
    }
    return result;
}

TheoryDescriptor theory_coordinates(std::uint32_t i, std::uint32_t m, std::uint32_t p) {
    if (i < 1 || m < 1) throw Error(ErrorCode::InvalidArgument, "theory coordinates i and m must be positive");
    if (!is_prime(p)) throw Error(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
    TheoryDescriptor d;
    d.field = build_field(p, 2 * i);
    d.subfield_order = d.field.q();
    d.dimension = m;
    d.involution_exponent = d.subfield_order;
    d.i = i;
    d.m = m;
    d.p = p;
    return d;
}

}  // namespace gqt
