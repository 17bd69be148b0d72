#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace cohopf {

enum class FieldKind : std::uint8_t { rational, prime };

/// Exact base field: Q or F_p with p prime.
struct Field {
    FieldKind kind = FieldKind::rational;
    std::uint64_t p = 0;

    static Field rational() { return Field{FieldKind::rational, 0}; }
    static Field prime(std::uint64_t p);

    bool operator==(const Field&) const = default;
    std::string str() const;
};

bool is_prime_u64(std::uint64_t n);

/// Exact field element tagged with its field. Arithmetic between elements of
/// different fields is a logic error and throws.
class Scalar {
public:
    Scalar() : f_(Field::rational()), v_(0) {}
    explicit Scalar(const Field& f) : f_(f), v_(0) {}

    static Scalar zero(const Field& f) { return Scalar(f); }
    static Scalar one(const Field& f);
    static Scalar from_int(const Field& f, long n);
    static Scalar from_mpq(const Field& f, const mpq_class& q);
    /// Parses "n", "-n" or "n/m". Returns nullopt on syntax error.
    static std::optional<Scalar> parse(const Field& f, std::string_view text);

    const Field& field() const { return f_; }
    /// Canonical value: reduced fraction over Q, integer residue in [0,p) over F_p.
    const mpq_class& value() const { return v_; }
    std::uint64_t residue() const;

    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1; }

    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;
    Scalar operator-() const;
    Scalar inverse() const;
    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    std::string str() const;

private:
    Field f_;
    mpq_class v_;

    void canonicalize();
    void check_same(const Scalar& o) const;
};

/// Residue arithmetic used by the packed prime-field matrix kernels.
namespace modp {
inline std::uint64_t add(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    std::uint64_t s = a + b;
    return s >= p ? s - p : s;
}
inline std::uint64_t sub(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return a >= b ? a - b : a + p - b;
}
inline std::uint64_t mul(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return (a * b) % p;  // fields in use have p*p < 2^64
}
std::uint64_t inv(std::uint64_t a, std::uint64_t p);
inline std::uint64_t neg(std::uint64_t a, std::uint64_t p) { return a == 0 ? 0 : p - a; }
}  // namespace modp

}  // namespace cohopf
