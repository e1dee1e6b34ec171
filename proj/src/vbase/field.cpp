#include "kanex/field.hpp"

#include <cctype>
#include <stdexcept>

namespace kanex {

bool is_prime(std::uint64_t n)
{
    if (n < 2)
        return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

Field Field::prime(std::uint64_t p)
{
    if (!is_prime(p))
        throw std::invalid_argument("field characteristic " + std::to_string(p) + " is not prime");
    return Field(p);
}

void Field::reduce(mpz_class& v) const
{
    mpz_class m(static_cast<unsigned long>(p_));
    mpz_fdiv_r(v.get_mpz_t(), v.get_mpz_t(), m.get_mpz_t());
}

Scalar Field::from_int(long v) const
{
    return canonical(Scalar(v));
}

Scalar Field::canonical(const Scalar& v) const
{
    if (is_rational()) {
        Scalar r(v);
        r.canonicalize();
        return r;
    }
    mpz_class num = v.get_num();
    mpz_class den = v.get_den();
    reduce(num);
    reduce(den);
    if (den == 0)
        throw std::domain_error("denominator vanishes modulo " + std::to_string(p_));
    if (den != 1) {
        mpz_class m(static_cast<unsigned long>(p_));
        mpz_class inv;
        mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), m.get_mpz_t());
        num *= inv;
        reduce(num);
    }
    return Scalar(num);
}

bool Field::is_canonical(const Scalar& v) const
{
    if (is_rational())
        return v.get_den() > 0;
    return v.get_den() == 1 && v >= 0 && v < Scalar(static_cast<unsigned long>(p_));
}

Scalar Field::add(const Scalar& a, const Scalar& b) const
{
    if (is_rational())
        return a + b;
    mpz_class s = a.get_num() + b.get_num();
    if (s >= static_cast<unsigned long>(p_))
        s -= static_cast<unsigned long>(p_);
    return Scalar(s);
}

Scalar Field::sub(const Scalar& a, const Scalar& b) const
{
    if (is_rational())
        return a - b;
    mpz_class s = a.get_num() - b.get_num();
    if (s < 0)
        s += static_cast<unsigned long>(p_);
    return Scalar(s);
}

Scalar Field::mul(const Scalar& a, const Scalar& b) const
{
    if (is_rational())
        return a * b;
    mpz_class s = a.get_num() * b.get_num();
    reduce(s);
    return Scalar(s);
}

Scalar Field::neg(const Scalar& a) const
{
    if (is_rational())
        return -a;
    if (a == 0)
        return a;
    return Scalar(mpz_class(static_cast<unsigned long>(p_)) - a.get_num());
}

Scalar Field::inv(const Scalar& a) const
{
    if (a == 0)
        throw std::domain_error("inverse of zero");
    if (is_rational())
        return 1 / a;
    mpz_class m(static_cast<unsigned long>(p_));
    mpz_class r;
    mpz_invert(r.get_mpz_t(), a.get_num_mpz_t(), m.get_mpz_t());
    return Scalar(r);
}

std::string Field::name() const
{
    return is_rational() ? "Q" : "F" + std::to_string(p_);
}

std::string to_string(const Scalar& value)
{
    Scalar v = value;
    v.canonicalize();
    if (v.get_den() == 1)
        return v.get_num().get_str();
    return v.get_num().get_str() + "/" + v.get_den().get_str();
}

namespace {

bool is_integer_literal(const std::string& s, bool allow_sign)
{
    std::size_t i = 0;
    if (allow_sign && !s.empty() && s[0] == '-')
        i = 1;
    if (i == s.size())
        return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i])))
            return false;
    return true;
}

} // namespace

Scalar parse_rational(const std::string& text)
{
    auto slash = text.find('/');
    std::string num = text.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
    if (!is_integer_literal(num, true) || !is_integer_literal(den, false))
        throw std::invalid_argument("malformed rational \"" + text + "\"");
    mpz_class d(den);
    if (d == 0)
        throw std::invalid_argument("zero denominator in \"" + text + "\"");
    Scalar r(mpz_class(num), d);
    r.canonicalize();
    return r;
}

} // namespace kanex
