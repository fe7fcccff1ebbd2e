#include "unity/poly.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "unity/error.hpp"

namespace unity {

DensePolynomial::DensePolynomial(std::vector<ExactRational> coeffs) : coeffs_(std::move(coeffs))
{
    if (coeffs_.empty())
        throw InvalidArgument("polynomial needs at least one coefficient");
}

DensePolynomial DensePolynomial::truncated(unsigned cap) const
{
    DensePolynomial out(cap);
    const unsigned keep = std::min(cap, this->cap());
    for (unsigned j = 0; j <= keep; ++j)
        out[j] = coeffs_[j];
    return out;
}

DensePolynomial base_polynomial(unsigned n)
{
    if (n == 0)
        throw RangeError("base polynomial needs n >= 1");
    DensePolynomial p(n);
    for (unsigned j = 1; j <= n; ++j)
        p[j] = ExactRational(1, static_cast<long>(j));
    return p;
}

DensePolynomial multiply_truncated(const DensePolynomial& p, const DensePolynomial& q, unsigned cap)
{
    DensePolynomial out(cap);
    for (unsigned i = 0; i <= std::min(p.cap(), cap); ++i) {
        if (p[i].is_zero())
            continue;
        for (unsigned j = 0; j <= q.cap() && i + j <= cap; ++j)
            if (!q[j].is_zero())
                out[i + j] += p[i] * q[j];
    }
    return out;
}

DensePolynomial power_truncated(const DensePolynomial& p, unsigned e, unsigned cap)
{
    DensePolynomial result(cap);
    result[0] = 1;
    DensePolynomial base = p.truncated(cap);
    while (e > 0) {
        if (e & 1u)
            result = multiply_truncated(result, base, cap);
        e >>= 1;
        if (e > 0)
            base = multiply_truncated(base, base, cap);
    }
    return result;
}

ExactRational coefficient(const DensePolynomial& p, unsigned j)
{
    if (j > p.cap())
        throw RangeError("coefficient index " + std::to_string(j) + " above cap " + std::to_string(p.cap()));
    return p[j];
}

DensePolynomial formal_derivative(const DensePolynomial& p)
{
    if (p.cap() == 0)
        return DensePolynomial(0);
    DensePolynomial out(p.cap() - 1);
    for (unsigned k = 0; k < p.cap(); ++k)
        out[k] = p[k + 1] * ExactRational(static_cast<long>(k + 1));
    return out;
}

ExactRational derivative_coefficient(const DensePolynomial& p, unsigned j)
{
    if (j > p.cap())
        throw RangeError("derivative order " + std::to_string(j) + " above cap " + std::to_string(p.cap()));
    DensePolynomial d = p;
    for (unsigned k = 0; k < j; ++k)
        d = formal_derivative(d);
    return d[0] / ExactRational(BigNat::factorial(j), BigNat(1));
}

ExactRational power_series_coefficient(unsigned n)
{
    return coefficient(power_truncated(base_polynomial(n), n, n), n);
}

BigNat multinomial_coefficient(unsigned m, std::span<const unsigned> alpha)
{
    const unsigned long weight = std::accumulate(alpha.begin(), alpha.end(), 0ul);
    if (weight != m)
        throw InvalidArgument("multi-index weight " + std::to_string(weight) + " != m = " + std::to_string(m));
    BigNat denom(1);
    for (unsigned a : alpha)
        denom *= BigNat::factorial(a);
    return BigNat::factorial(m).exact_div(denom);
}

WeakCompositionStream::WeakCompositionStream(unsigned n_vars, unsigned m)
{
    if (n_vars == 0)
        throw InvalidArgument("weak composition needs at least one variable");
    cur_.assign(n_vars, 0);
    cur_[0] = m;
}

const std::vector<unsigned>* WeakCompositionStream::next()
{
    if (done_)
        return nullptr;
    if (!started_) {
        started_ = true;
        return &cur_;
    }
    // Rightmost non-last position that can give one unit to its right.
    const std::size_t k = cur_.size();
    for (std::size_t j = k - 1; j-- > 0;) {
        if (cur_[j] == 0)
            continue;
        unsigned tail = 1;
        for (std::size_t i = j + 1; i < k; ++i) {
            tail += cur_[i];
            cur_[i] = 0;
        }
        --cur_[j];
        cur_[j + 1] = tail;
        return &cur_;
    }
    done_ = true;
    return nullptr;
}

std::vector<std::vector<unsigned>> enumerate_weak_compositions(unsigned n_vars, unsigned m)
{
    std::vector<std::vector<unsigned>> out;
    WeakCompositionStream stream(n_vars, m);
    while (const auto* a = stream.next())
        out.push_back(*a);
    return out;
}

}  // namespace unity
