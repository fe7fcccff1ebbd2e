#pragma once

// Exact arithmetic value types. Both are thin wrappers over GMP so that the
// rest of the library never sees a non-canonical number.

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "unity/error.hpp"

namespace unity {

/// Arbitrary-precision natural number.
class BigNat {
public:
    BigNat() = default;
    BigNat(std::uint64_t v) : value_(static_cast<unsigned long>(v)) {}  // NOLINT(google-explicit-constructor)

    explicit BigNat(std::string_view decimal)
    {
        if (decimal.empty() || value_.set_str(std::string(decimal), 10) != 0 || sgn(value_) < 0)
            throw InvalidArgument("not a decimal natural number: '" + std::string(decimal) + "'");
    }

    static BigNat from_mpz(mpz_class v)
    {
        if (sgn(v) < 0)
            throw ConsistencyError("negative value in BigNat");
        BigNat r;
        r.value_ = std::move(v);
        return r;
    }

    static BigNat factorial(unsigned long n)
    {
        BigNat r;
        mpz_fac_ui(r.value_.get_mpz_t(), n);
        return r;
    }

    const mpz_class& mpz() const noexcept { return value_; }

    bool is_zero() const noexcept { return sgn(value_) == 0; }

    std::string to_string() const { return value_.get_str(10); }

    BigNat& operator+=(const BigNat& o)
    {
        value_ += o.value_;
        return *this;
    }
    BigNat& operator*=(const BigNat& o)
    {
        value_ *= o.value_;
        return *this;
    }
    friend BigNat operator+(BigNat a, const BigNat& b) { return a += b; }
    friend BigNat operator*(BigNat a, const BigNat& b) { return a *= b; }

    /// Exact quotient; throws ConsistencyError when `divisor` does not divide.
    BigNat exact_div(const BigNat& divisor) const
    {
        if (divisor.is_zero())
            throw ConsistencyError("division by zero");
        if (!mpz_divisible_p(value_.get_mpz_t(), divisor.value_.get_mpz_t()))
            throw ConsistencyError(divisor.to_string() + " does not divide " + to_string());
        BigNat r;
        mpz_divexact(r.value_.get_mpz_t(), value_.get_mpz_t(), divisor.value_.get_mpz_t());
        return r;
    }

    friend bool operator==(const BigNat& a, const BigNat& b) { return cmp(a.value_, b.value_) == 0; }
    friend std::strong_ordering operator<=>(const BigNat& a, const BigNat& b)
    {
        return cmp(a.value_, b.value_) <=> 0;
    }

    friend std::ostream& operator<<(std::ostream& os, const BigNat& v) { return os << v.to_string(); }

private:
    mpz_class value_;
};

/// Normalized fraction: gcd(|num|, den) = 1, den >= 1, zero is 0/1.
class ExactRational {
public:
    ExactRational() = default;
    ExactRational(long v) : value_(v) {}  // NOLINT(google-explicit-constructor)

    ExactRational(long num, long den)
    {
        if (den == 0)
            throw InvalidArgument("zero denominator");
        value_ = mpq_class(mpz_class(num), mpz_class(den));
        value_.canonicalize();
    }

    ExactRational(const BigNat& num, const BigNat& den)
    {
        if (den.is_zero())
            throw InvalidArgument("zero denominator");
        value_ = mpq_class(num.mpz(), den.mpz());
        value_.canonicalize();
    }

    /// 1/d
    static ExactRational reciprocal(const BigNat& d) { return ExactRational(BigNat(1), d); }

    mpz_class numerator() const { return value_.get_num(); }
    mpz_class denominator() const { return value_.get_den(); }

    bool is_zero() const noexcept { return sgn(value_) == 0; }
    bool is_one() const { return value_ == 1; }

    /// Always "numerator/denominator", including integers ("1/1", "0/1").
    std::string to_string() const { return value_.get_num().get_str(10) + "/" + value_.get_den().get_str(10); }

    ExactRational& operator+=(const ExactRational& o)
    {
        value_ += o.value_;
        return *this;
    }
    ExactRational& operator-=(const ExactRational& o)
    {
        value_ -= o.value_;
        return *this;
    }
    ExactRational& operator*=(const ExactRational& o)
    {
        value_ *= o.value_;
        return *this;
    }
    ExactRational& operator/=(const ExactRational& o)
    {
        if (o.is_zero())
            throw InvalidArgument("division by zero");
        value_ /= o.value_;
        return *this;
    }
    friend ExactRational operator+(ExactRational a, const ExactRational& b) { return a += b; }
    friend ExactRational operator-(ExactRational a, const ExactRational& b) { return a -= b; }
    friend ExactRational operator*(ExactRational a, const ExactRational& b) { return a *= b; }
    friend ExactRational operator/(ExactRational a, const ExactRational& b) { return a /= b; }

    friend bool operator==(const ExactRational& a, const ExactRational& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const ExactRational& a, const ExactRational& b)
    {
        return cmp(a.value_, b.value_) <=> 0;
    }

    friend std::ostream& operator<<(std::ostream& os, const ExactRational& v) { return os << v.to_string(); }

private:
    mpq_class value_;
};

}  // namespace unity
