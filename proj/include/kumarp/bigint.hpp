#pragma once

// Arbitrary-precision integer helpers shared by every module.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <set>
#include <string>

namespace kumarp {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt abs_value(const BigInt& a) { return a < 0 ? BigInt(-a) : a; }

inline BigInt gcd(const BigInt& a, const BigInt& b) {
    return boost::multiprecision::gcd(abs_value(a), abs_value(b));
}

inline BigInt numerator_of(const Rational& r) { return boost::multiprecision::numerator(r); }
inline BigInt denominator_of(const Rational& r) { return boost::multiprecision::denominator(r); }

/// num / den for any nonzero den (the two-argument Rational constructor
/// rejects negative denominators).
inline Rational make_rational(BigInt num, BigInt den) {
    if (den < 0) {
        num = -num;
        den = -den;
    }
    return Rational(num, den);
}

inline std::string to_string(const BigInt& a) { return a.str(); }

inline std::string to_string(const Rational& r) {
    if (denominator_of(r) == 1) return numerator_of(r).str();
    return numerator_of(r).str() + "/" + denominator_of(r).str();
}

inline int sign_of(const BigInt& a) { return a < 0 ? -1 : (a > 0 ? 1 : 0); }

/// Prime divisors of |n| by trial division. Values at desk scale are small.
inline std::set<std::uint64_t> prime_divisors(BigInt n) {
    std::set<std::uint64_t> primes;
    n = abs_value(n);
    if (n < 2) return primes;
    for (std::uint64_t p = 2; BigInt(p) * p <= n; ++p) {
        if (n % p == 0) {
            primes.insert(p);
            while (n % p == 0) n /= p;
        }
    }
    if (n > 1) primes.insert(n.convert_to<std::uint64_t>());
    return primes;
}

inline bool is_prime(std::uint64_t p) {
    if (p < 2) return false;
    for (std::uint64_t q = 2; q * q <= p; ++q)
        if (p % q == 0) return false;
    return true;
}

}  // namespace kumarp
