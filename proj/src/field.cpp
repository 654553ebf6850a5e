#include "hoch/field.hpp"

namespace hoch {

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

Field Field::prime(std::uint64_t p) {
    if (!is_prime_u64(p)) throw std::invalid_argument("Field: modulus " + std::to_string(p) + " is not prime");
    return Field{p};
}

Field Field::parse(const std::string& s) {
    if (s == "Q") return rationals();
    if (s.rfind("Fp:", 0) == 0) return prime(std::stoull(s.substr(3)));
    throw std::invalid_argument("Field: expected \"Q\" or \"Fp:<p>\", got \"" + s + "\"");
}

std::string Field::str() const {
    return p == 0 ? "Q" : "Fp:" + std::to_string(p);
}

static std::uint64_t mod_pow(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
    unsigned __int128 acc = 1, base = b % m;
    while (e) {
        if (e & 1) acc = acc * base % m;
        base = base * base % m;
        e >>= 1;
    }
    return static_cast<std::uint64_t>(acc);
}

Scalar Scalar::one(const Field& f) {
    Scalar s(f);
    if (f.is_rational()) s.q_ = 1; else s.r_ = 1 % f.p;
    return s;
}

Scalar Scalar::from_int(const Field& f, long v) {
    Scalar s(f);
    if (f.is_rational()) {
        s.q_ = v;
    } else {
        long m = v % static_cast<long>(f.p);
        if (m < 0) m += static_cast<long>(f.p);
        s.r_ = static_cast<std::uint64_t>(m);
    }
    return s;
}

Scalar Scalar::parse(const Field& f, const std::string& s) {
    auto slash = s.find('/');
    if (f.is_rational()) {
        Scalar out(f);
        out.q_ = mpq_class(s);
        out.q_.canonicalize();
        return out;
    }
    if (slash == std::string::npos) {
        mpz_class z(s);
        mpz_class m = z % static_cast<unsigned long>(f.p);
        if (m < 0) m += static_cast<unsigned long>(f.p);
        Scalar out(f);
        out.r_ = m.get_ui();
        return out;
    }
    Scalar num = parse(f, s.substr(0, slash));
    Scalar den = parse(f, s.substr(slash + 1));
    return num / den;
}

bool Scalar::is_zero() const { return p_ == 0 ? q_ == 0 : r_ == 0; }
bool Scalar::is_one() const { return p_ == 0 ? q_ == 1 : r_ == 1 % p_; }

Scalar Scalar::operator+(const Scalar& o) const {
    check_same(o);
    Scalar s(field());
    if (p_ == 0) s.q_ = q_ + o.q_;
    else s.r_ = (r_ + o.r_) % p_;
    return s;
}

Scalar Scalar::operator-(const Scalar& o) const {
    check_same(o);
    Scalar s(field());
    if (p_ == 0) s.q_ = q_ - o.q_;
    else s.r_ = (r_ + p_ - o.r_) % p_;
    return s;
}

Scalar Scalar::operator*(const Scalar& o) const {
    check_same(o);
    Scalar s(field());
    if (p_ == 0) s.q_ = q_ * o.q_;
    else s.r_ = static_cast<std::uint64_t>(static_cast<unsigned __int128>(r_) * o.r_ % p_);
    return s;
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw std::domain_error("Scalar: inverse of zero");
    Scalar s(field());
    if (p_ == 0) s.q_ = 1 / q_;
    else s.r_ = mod_pow(r_, p_ - 2, p_);
    return s;
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inverse(); }

Scalar Scalar::operator-() const {
    Scalar s(field());
    if (p_ == 0) s.q_ = -q_;
    else s.r_ = r_ == 0 ? 0 : p_ - r_;
    return s;
}

bool Scalar::operator==(const Scalar& o) const {
    if (p_ != o.p_) return false;
    return p_ == 0 ? q_ == o.q_ : r_ == o.r_;
}

std::string Scalar::str() const {
    return p_ == 0 ? q_.get_str() : std::to_string(r_);
}

}  // namespace hoch
