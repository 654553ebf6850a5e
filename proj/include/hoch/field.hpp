#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <gmpxx.h>

namespace hoch {

// Active coefficient field: the rationals (p == 0) or a prime field F_p.
struct Field {
    std::uint64_t p = 0;

    bool is_rational() const { return p == 0; }
    bool operator==(const Field&) const = default;

    static Field rationals() { return Field{0}; }
    static Field prime(std::uint64_t p);

    // "Q" or "Fp:<p>"
    static Field parse(const std::string& s);
    std::string str() const;
};

bool is_prime_u64(std::uint64_t n);

// Exact field element. No floating point anywhere in the project.
class Scalar {
public:
    Scalar() = default;
    Scalar(const Field& f) : p_(f.p) {}

    static Scalar zero(const Field& f) { return Scalar(f); }
    static Scalar one(const Field& f);
    static Scalar from_int(const Field& f, long v);
    // decimal strings "a/b" or "c"
    static Scalar parse(const Field& f, const std::string& s);

    Field field() const { return Field{p_}; }
    bool is_zero() const;
    bool is_one() const;

    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;
    Scalar operator-() const;
    Scalar inverse() const;

    Scalar& operator+=(const Scalar& o) { *this = *this + o; return *this; }
    Scalar& operator-=(const Scalar& o) { *this = *this - o; return *this; }
    Scalar& operator*=(const Scalar& o) { *this = *this * o; return *this; }

    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    std::string str() const;

private:
    std::uint64_t p_ = 0;  // 0 = rationals
    mpq_class q_{0};
    std::uint64_t r_ = 0;  // residue when p_ > 0

    void check_same(const Scalar& o) const {
        if (p_ != o.p_) throw std::logic_error("Scalar: mixed fields");
    }
};

}  // namespace hoch
