#pragma once

#include "sarkisov/rational.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace sarkisov {

// An element of the cyclotomic field Q(zeta_N), stored as a rational vector
// over the power basis 1, z, ..., z^{phi(N)-1} reduced modulo the N-th
// cyclotomic polynomial. N is always the true conductor: after every
// operation the value is descended to the smallest cyclotomic field that
// contains it (with the usual convention N != 2 mod 4). Equality of values
// is therefore equality of representations.
class CycNum {
public:
    CycNum() : n_(1), c_(1, Rational(0)) {}

    static CycNum zero() { return CycNum(); }
    static CycNum one() { return from_rational(1); }
    static CycNum from_rational(const Rational& q);
    // zeta_N^k
    static CycNum root_of_unity(long n, long k = 1);
    // Value from coefficients over the power basis of Q(zeta_N); reduces and
    // canonicalizes.
    static CycNum from_coeffs(long n, std::vector<Rational> coeffs);

    long conductor() const { return n_; }
    const std::vector<Rational>& coeffs() const { return c_; }

    bool is_zero() const;
    bool is_rational() const { return n_ == 1; }
    // Defined only when is_rational().
    Rational rational_value() const { return c_[0]; }

    CycNum operator+(const CycNum& o) const;
    CycNum operator-(const CycNum& o) const;
    CycNum operator-() const;
    CycNum operator*(const CycNum& o) const;
    CycNum inverse() const;
    CycNum operator/(const CycNum& o) const { return *this * o.inverse(); }
    CycNum pow(long e) const;

    bool operator==(const CycNum& o) const { return n_ == o.n_ && c_ == o.c_; }
    bool operator!=(const CycNum& o) const { return !(*this == o); }

    // Galois automorphism zeta_N -> zeta_N^k, gcd(k, N) = 1.
    CycNum galois(long k) const;
    CycNum conj() const { return n_ == 1 ? *this : galois(n_ - 1); }

    // Multiplicative order when the value is a root of unity.
    std::optional<long> root_of_unity_order() const;

    // Canonical text form, usable as a hash key.
    std::string str() const;

    // Total order for deterministic sorting (lexicographic on the canonical
    // representation; not a field order).
    bool operator<(const CycNum& o) const;

private:
    long n_;
    std::vector<Rational> c_;

    void canonicalize();
    std::vector<Rational> galois_raw(long k) const;
    static CycNum raw(long n, std::vector<Rational> c) {
        CycNum x;
        x.n_ = n;
        x.c_ = std::move(c);
        return x;
    }
    CycNum lifted_to(long m) const;  // embed into Q(zeta_m), n_ | m
    friend CycNum cyc_mul_same(const CycNum& a, const CycNum& b);
};

long euler_phi(long n);
const std::vector<Int>& cyclotomic_poly(long n);

}  // namespace sarkisov
