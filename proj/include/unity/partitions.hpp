#pragma once

#include <compare>
#include <cstddef>
#include <iterator>
#include <span>
#include <vector>

#include "unity/bignum.hpp"
#include "unity/error.hpp"

namespace unity {

/// Throws RangeError unless 1 <= n <= max_n.
void check_range(unsigned n, unsigned max_n);

/// One (part, multiplicity) entry of a sparse cycle type.
struct PartCount {
    unsigned part;
    unsigned multiplicity;
    friend bool operator==(const PartCount&, const PartCount&) = default;
};

/// Cycle type alpha = (alpha_1, ..., alpha_n) with sum j * alpha_j = n.
///
/// Stored sparsely: only parts with multiplicity >= 1, strictly increasing.
/// Ordering is lexicographic on the dense vector (n compared first).
class MultiplicityVector {
public:
    /// Validates; throws InvalidArgument on a weight mismatch, a zero
    /// multiplicity, a part outside 1..n or unsorted parts.
    MultiplicityVector(unsigned n, std::vector<PartCount> parts);

    static MultiplicityVector from_dense(std::span<const unsigned> counts);

    unsigned n() const noexcept { return n_; }
    const std::vector<PartCount>& parts() const noexcept { return parts_; }

    /// alpha_j for j in 1..n (0 outside the stored parts).
    unsigned count(unsigned j) const noexcept;

    /// Dense length-n view (alpha_1, ..., alpha_n).
    std::vector<unsigned> dense() const;

    friend bool operator==(const MultiplicityVector&, const MultiplicityVector&) = default;
    friend std::strong_ordering operator<=>(const MultiplicityVector& a, const MultiplicityVector& b);

private:
    friend class CycleTypeStream;
    MultiplicityVector() = default;

    unsigned n_ = 0;
    std::vector<PartCount> parts_;
};

/// True iff counts has length n, no negative entries and weight n.
bool is_member(unsigned n, std::span<const long> counts);

/// Streams S_n in strictly decreasing lexicographic order of the dense
/// vector, starting at (n, 0, ..., 0). O(n) state.
///
/// An optional fixed prefix (alpha_1..alpha_k) restricts the stream to the
/// vectors that start with it; the unrestricted stream is the concatenation
/// of the prefix streams for alpha_1 = n, n-1, ..., 0.
class CycleTypeStream {
public:
    explicit CycleTypeStream(unsigned n, unsigned max_n = kDefaultMaxN);
    CycleTypeStream(unsigned n, std::span<const unsigned> fixed_prefix, unsigned max_n = kDefaultMaxN);

    /// Advances and returns the next vector, or nullptr once exhausted.
    /// The pointee is overwritten by the following call.
    const MultiplicityVector* next();

    struct sentinel {};
    class iterator {
    public:
        using value_type = MultiplicityVector;
        using difference_type = std::ptrdiff_t;

        explicit iterator(CycleTypeStream* s) : stream_(s), cur_(s->next()) {}
        const MultiplicityVector& operator*() const { return *cur_; }
        const MultiplicityVector* operator->() const { return cur_; }
        iterator& operator++()
        {
            cur_ = stream_->next();
            return *this;
        }
        void operator++(int) { ++*this; }
        friend bool operator==(const iterator& it, sentinel) { return it.cur_ == nullptr; }

    private:
        CycleTypeStream* stream_;
        const MultiplicityVector* cur_;
    };

    iterator begin() { return iterator(this); }
    sentinel end() const { return {}; }

private:
    bool greedy_fill(unsigned from_part, unsigned remainder);
    bool successor();
    void publish();

    unsigned n_;
    unsigned frozen_;             // positions 1..frozen_ never change
    std::vector<unsigned> dense_;  // 1-based, dense_[0] unused
    MultiplicityVector current_;
    bool started_ = false;
    bool done_ = false;
};

/// Collects the whole stream. For tests and small n.
std::vector<MultiplicityVector> enumerate_cycle_types(unsigned n, unsigned max_n = kDefaultMaxN);

/// p(n) by Euler's pentagonal-number recurrence, without enumeration.
/// n = 0 is allowed (p(0) = 1); n > max_n throws RangeError.
BigNat partition_count(unsigned n, unsigned max_n = kDefaultMaxN);

}  // namespace unity
