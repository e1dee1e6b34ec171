#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace kanex {

/// Exact scalar. Over a prime field the value is an integer residue in [0, p).
using Scalar = mpq_class;

/// The coefficient field of FinVect: the rationals or a prime field F_p.
class Field
{
public:
    static Field rationals() { return Field(0); }
    /// Throws std::invalid_argument when p is not prime.
    static Field prime(std::uint64_t p);

    bool is_rational() const { return p_ == 0; }
    std::uint64_t characteristic() const { return p_; }

    Scalar zero() const { return Scalar(0); }
    Scalar one() const { return Scalar(1); }
    Scalar from_int(long v) const;
    /// Brings an arbitrary rational into canonical form for this field.
    /// Over F_p the denominator must be invertible mod p.
    Scalar canonical(const Scalar& v) const;

    Scalar add(const Scalar& a, const Scalar& b) const;
    Scalar sub(const Scalar& a, const Scalar& b) const;
    Scalar mul(const Scalar& a, const Scalar& b) const;
    Scalar neg(const Scalar& a) const;
    /// Throws std::domain_error on zero.
    Scalar inv(const Scalar& a) const;

    bool is_canonical(const Scalar& v) const;

    std::string name() const;

    friend bool operator==(const Field&, const Field&) = default;

private:
    explicit Field(std::uint64_t p) : p_(p) {}
    void reduce(mpz_class& v) const;

    std::uint64_t p_;
};

bool is_prime(std::uint64_t n);

/// "p/q" with q > 0 and gcd 1; integers are written without a denominator.
std::string to_string(const Scalar& v);
/// Parses "p", "-p" or "p/q". Throws std::invalid_argument on malformed input or q = 0.
Scalar parse_rational(const std::string& text);

} // namespace kanex
