#include "unity/partitions.hpp"

#include <string>

namespace unity {

void check_range(unsigned n, unsigned max_n)
{
    if (n == 0 || n > max_n)
        throw RangeError("n = " + std::to_string(n) + " out of supported range 1.." + std::to_string(max_n));
}

MultiplicityVector::MultiplicityVector(unsigned n, std::vector<PartCount> parts) : n_(n), parts_(std::move(parts))
{
    if (n_ == 0)
        throw InvalidArgument("cycle type of weight 0");
    unsigned long weight = 0;
    unsigned prev = 0;
    for (const auto& [part, mult] : parts_) {
        if (part <= prev || part > n_)
            throw InvalidArgument("parts must be strictly increasing and within 1..n");
        if (mult == 0)
            throw InvalidArgument("stored multiplicity must be >= 1");
        weight += static_cast<unsigned long>(part) * mult;
        prev = part;
    }
    if (weight != n_)
        throw InvalidArgument("weight " + std::to_string(weight) + " != n = " + std::to_string(n_));
}

MultiplicityVector MultiplicityVector::from_dense(std::span<const unsigned> counts)
{
    std::vector<PartCount> parts;
    for (std::size_t j = 0; j < counts.size(); ++j)
        if (counts[j] != 0)
            parts.push_back({static_cast<unsigned>(j + 1), counts[j]});
    return MultiplicityVector(static_cast<unsigned>(counts.size()), std::move(parts));
}

unsigned MultiplicityVector::count(unsigned j) const noexcept
{
    for (const auto& pc : parts_)
        if (pc.part == j)
            return pc.multiplicity;
    return 0;
}

std::vector<unsigned> MultiplicityVector::dense() const
{
    std::vector<unsigned> out(n_, 0);
    for (const auto& [part, mult] : parts_)
        out[part - 1] = mult;
    return out;
}

std::strong_ordering operator<=>(const MultiplicityVector& a, const MultiplicityVector& b)
{
    if (auto c = a.n_ <=> b.n_; c != 0)
        return c;
    // Merge walk: the first part present in either list is the first dense
    // position where the two can differ.
    auto i = a.parts_.begin();
    auto j = b.parts_.begin();
    while (i != a.parts_.end() || j != b.parts_.end()) {
        if (j == b.parts_.end() || (i != a.parts_.end() && i->part < j->part))
            return std::strong_ordering::greater;
        if (i == a.parts_.end() || j->part < i->part)
            return std::strong_ordering::less;
        if (auto c = i->multiplicity <=> j->multiplicity; c != 0)
            return c;
        ++i;
        ++j;
    }
    return std::strong_ordering::equal;
}

bool is_member(unsigned n, std::span<const long> counts)
{
    if (n == 0 || counts.size() != n)
        return false;
    long long weight = 0;
    for (std::size_t j = 0; j < counts.size(); ++j) {
        if (counts[j] < 0)
            return false;
        weight += static_cast<long long>(j + 1) * counts[j];
        if (weight > static_cast<long long>(n))
            return false;
    }
    return weight == static_cast<long long>(n);
}

CycleTypeStream::CycleTypeStream(unsigned n, unsigned max_n) : CycleTypeStream(n, {}, max_n) {}

CycleTypeStream::CycleTypeStream(unsigned n, std::span<const unsigned> fixed_prefix, unsigned max_n)
    : n_(n), frozen_(static_cast<unsigned>(fixed_prefix.size()))
{
    check_range(n, max_n);
    if (frozen_ > n_)
        throw InvalidArgument("prefix longer than n");
    dense_.assign(n_ + 1, 0);
    unsigned long used = 0;
    for (unsigned j = 1; j <= frozen_; ++j) {
        dense_[j] = fixed_prefix[j - 1];
        used += static_cast<unsigned long>(j) * dense_[j];
    }
    current_.n_ = n_;
    if (used > n_ || !greedy_fill(frozen_ + 1, static_cast<unsigned>(n_ - used)))
        done_ = true;
}

// Lexicographically largest completion of positions from_part..n carrying
// `remainder`. Any remainder that is 0 or >= from_part is achievable.
bool CycleTypeStream::greedy_fill(unsigned from_part, unsigned remainder)
{
    if (remainder != 0 && remainder < from_part)
        return false;
    for (unsigned i = from_part; i <= n_; ++i) {
        unsigned c = remainder / i;
        unsigned rest = remainder - c * i;
        if (rest != 0 && rest < i + 1)
            --c;
        dense_[i] = c;
        remainder -= c * i;
    }
    return remainder == 0;
}

bool CycleTypeStream::successor()
{
    // Rightmost position j that can be lowered while the freed weight still
    // fits into parts > j.
    unsigned suffix = 0;
    for (unsigned j = n_; j > frozen_; --j) {
        const unsigned a = dense_[j];
        if (j < n_ && a >= 1 && (suffix >= 1 || a >= 2)) {
            const unsigned drop = suffix >= 1 ? 1 : 2;
            dense_[j] = a - drop;
            return greedy_fill(j + 1, drop * j + suffix);
        }
        suffix += j * a;
    }
    return false;
}

void CycleTypeStream::publish()
{
    current_.parts_.clear();
    for (unsigned j = 1; j <= n_; ++j)
        if (dense_[j] != 0)
            current_.parts_.push_back({j, dense_[j]});
}

const MultiplicityVector* CycleTypeStream::next()
{
    if (done_)
        return nullptr;
    if (started_ && !successor()) {
        done_ = true;
        return nullptr;
    }
    started_ = true;
    publish();
    return &current_;
}

std::vector<MultiplicityVector> enumerate_cycle_types(unsigned n, unsigned max_n)
{
    std::vector<MultiplicityVector> out;
    CycleTypeStream stream(n, max_n);
    for (const auto& alpha : stream)
        out.push_back(alpha);
    return out;
}

BigNat partition_count(unsigned n, unsigned max_n)
{
    if (n > max_n)
        throw RangeError("n = " + std::to_string(n) + " out of supported range 0.." + std::to_string(max_n));
    std::vector<mpz_class> p(n + 1);
    p[0] = 1;
    for (unsigned m = 1; m <= n; ++m) {
        mpz_class acc = 0;
        for (unsigned long k = 1;; ++k) {
            const unsigned long g1 = k * (3 * k - 1) / 2;
            if (g1 > m)
                break;
            const unsigned long g2 = k * (3 * k + 1) / 2;
            mpz_class term = p[m - g1];
            if (g2 <= m)
                term += p[m - g2];
            if (k % 2 == 1)
                acc += term;
            else
                acc -= term;
        }
        p[m] = acc;
    }
    return BigNat::from_mpz(p[n]);
}

}  // namespace unity
