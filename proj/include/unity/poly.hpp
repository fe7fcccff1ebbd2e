#pragma once

// Truncated power series over exact rationals, plus the multinomial
// expansion helpers. Independent of the partition enumerator: nothing here
// includes partitions.hpp.

#include <span>
#include <vector>

#include "unity/bignum.hpp"

namespace unity {

/// Coefficients a_0..a_cap of a polynomial; everything above cap is dropped.
class DensePolynomial {
public:
    /// Zero polynomial with the given cap.
    explicit DensePolynomial(unsigned cap) : coeffs_(cap + 1) {}
    /// cap = coeffs.size() - 1; throws InvalidArgument on an empty list.
    explicit DensePolynomial(std::vector<ExactRational> coeffs);

    unsigned cap() const noexcept { return static_cast<unsigned>(coeffs_.size() - 1); }
    const ExactRational& operator[](unsigned j) const { return coeffs_[j]; }
    ExactRational& operator[](unsigned j) { return coeffs_[j]; }
    const std::vector<ExactRational>& coefficients() const noexcept { return coeffs_; }

    /// Copy with a different cap: extra terms dropped, missing ones zero.
    DensePolynomial truncated(unsigned cap) const;

    friend bool operator==(const DensePolynomial&, const DensePolynomial&) = default;

private:
    std::vector<ExactRational> coeffs_;
};

/// x + x^2/2 + ... + x^n/n, cap n.
DensePolynomial base_polynomial(unsigned n);

/// Convolution of p and q, keeping degrees 0..cap.
DensePolynomial multiply_truncated(const DensePolynomial& p, const DensePolynomial& q, unsigned cap);

/// p^e truncated at cap, by repeated squaring with truncation after every product.
DensePolynomial power_truncated(const DensePolynomial& p, unsigned e, unsigned cap);

/// Stored coefficient a_j; RangeError when j > cap.
ExactRational coefficient(const DensePolynomial& p, unsigned j);

/// p' with cap reduced by one (cap 0 stays 0).
DensePolynomial formal_derivative(const DensePolynomial& p);

/// p^(j)(0) / j!, via j formal derivatives. RangeError when j > cap.
ExactRational derivative_coefficient(const DensePolynomial& p, unsigned j);

/// Coefficient of t^n in (t + t^2/2 + ... + t^n/n)^n.
ExactRational power_series_coefficient(unsigned n);

/// m! / prod alpha_j!; InvalidArgument unless sum alpha_j = m.
BigNat multinomial_coefficient(unsigned m, std::span<const unsigned> alpha);

/// Weak compositions of m into n_vars parts, in decreasing lexicographic
/// order starting at (m, 0, ..., 0).
class WeakCompositionStream {
public:
    WeakCompositionStream(unsigned n_vars, unsigned m);

    /// Next composition, or nullptr when exhausted.
    const std::vector<unsigned>* next();

private:
    std::vector<unsigned> cur_;
    bool started_ = false;
    bool done_ = false;
};

std::vector<std::vector<unsigned>> enumerate_weak_compositions(unsigned n_vars, unsigned m);

}  // namespace unity
