#include "cohopf/field.hpp"

namespace cohopf {

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

Field Field::prime(std::uint64_t p) {
    if (!is_prime_u64(p)) throw std::invalid_argument("Field::prime: " + std::to_string(p) + " is not prime");
    if (p >= (1ull << 31)) throw std::invalid_argument("Field::prime: modulus too large");
    return Field{FieldKind::prime, p};
}

std::string Field::str() const {
    return kind == FieldKind::rational ? "rational" : "prime " + std::to_string(p);
}

void Scalar::canonicalize() {
    if (f_.kind == FieldKind::prime) {
        if (v_.get_den() != 1) {
            // reduce a/b mod p as a * b^{-1}
            mpz_class num = v_.get_num(), den = v_.get_den();
            mpz_class pz(static_cast<unsigned long>(f_.p));
            mpz_class nr = num % pz, dr = den % pz;
            if (nr < 0) nr += pz;
            if (dr < 0) dr += pz;
            if (dr == 0) throw std::domain_error("Scalar: denominator divisible by p");
            std::uint64_t r = modp::mul(nr.get_ui(), modp::inv(dr.get_ui(), f_.p), f_.p);
            v_ = static_cast<unsigned long>(r);
        } else {
            mpz_class pz(static_cast<unsigned long>(f_.p));
            mpz_class r = v_.get_num() % pz;
            if (r < 0) r += pz;
            v_ = r;
        }
    }
    v_.canonicalize();
}

void Scalar::check_same(const Scalar& o) const {
    if (!(f_ == o.f_)) throw std::logic_error("Scalar: mixed-field arithmetic");
}

Scalar Scalar::one(const Field& f) {
    Scalar s(f);
    s.v_ = 1;
    return s;
}

Scalar Scalar::from_int(const Field& f, long n) {
    Scalar s(f);
    s.v_ = n;
    s.canonicalize();
    return s;
}

Scalar Scalar::from_mpq(const Field& f, const mpq_class& q) {
    Scalar s(f);
    s.v_ = q;
    s.canonicalize();
    return s;
}

std::optional<Scalar> Scalar::parse(const Field& f, std::string_view text) {
    if (text.empty()) return std::nullopt;
    std::string t(text);
    for (size_t i = 0; i < t.size(); ++i) {
        char c = t[i];
        bool ok = (c >= '0' && c <= '9') || c == '/' || (c == '-' && i == 0);
        if (!ok) return std::nullopt;
    }
    if (t.back() == '/' || t.find("//") != std::string::npos) return std::nullopt;
    try {
        mpq_class q(t, 10);
        q.canonicalize();
        return from_mpq(f, q);
    } catch (...) {
        return std::nullopt;
    }
}

std::uint64_t Scalar::residue() const {
    if (f_.kind != FieldKind::prime) throw std::logic_error("Scalar::residue on rational");
    return v_.get_num().get_ui();
}

Scalar Scalar::operator+(const Scalar& o) const {
    check_same(o);
    Scalar r(f_);
    r.v_ = v_ + o.v_;
    r.canonicalize();
    return r;
}

Scalar Scalar::operator-(const Scalar& o) const {
    check_same(o);
    Scalar r(f_);
    r.v_ = v_ - o.v_;
    r.canonicalize();
    return r;
}

Scalar Scalar::operator*(const Scalar& o) const {
    check_same(o);
    Scalar r(f_);
    r.v_ = v_ * o.v_;
    r.canonicalize();
    return r;
}

Scalar Scalar::operator/(const Scalar& o) const {
    check_same(o);
    if (o.is_zero()) throw std::domain_error("Scalar: division by zero");
    if (f_.kind == FieldKind::prime) return *this * o.inverse();
    Scalar r(f_);
    r.v_ = v_ / o.v_;
    r.canonicalize();
    return r;
}

Scalar Scalar::operator-() const {
    Scalar r(f_);
    r.v_ = -v_;
    r.canonicalize();
    return r;
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw std::domain_error("Scalar: inverse of zero");
    Scalar r(f_);
    if (f_.kind == FieldKind::prime) {
        r.v_ = static_cast<unsigned long>(modp::inv(residue(), f_.p));
    } else {
        r.v_ = 1 / v_;
    }
    return r;
}

bool Scalar::operator==(const Scalar& o) const {
    return f_ == o.f_ && v_ == o.v_;
}

std::string Scalar::str() const {
    return v_.get_str();
}

namespace modp {
std::uint64_t inv(std::uint64_t a, std::uint64_t p) {
    if (a == 0) throw std::domain_error("modp::inv(0)");
    // extended Euclid on signed values
    std::int64_t t = 0, nt = 1, r = static_cast<std::int64_t>(p), nr = static_cast<std::int64_t>(a % p);
    while (nr != 0) {
        std::int64_t q = r / nr;
        std::int64_t tmp = t - q * nt;
        t = nt;
        nt = tmp;
        tmp = r - q * nr;
        r = nr;
        nr = tmp;
    }
    if (r != 1) throw std::domain_error("modp::inv: not invertible");
    if (t < 0) t += static_cast<std::int64_t>(p);
    return static_cast<std::uint64_t>(t);
}
}  // namespace modp

}  // namespace cohopf
