#pragma once

#include <vector>

#include "unity/bignum.hpp"
#include "unity/partitions.hpp"

namespace unity {

/// 0!, 1!, ..., n!
class FactorialTable {
public:
    explicit FactorialTable(unsigned n);
    const BigNat& operator[](unsigned k) const { return table_.at(k); }
    unsigned size() const noexcept { return static_cast<unsigned>(table_.size()); }

private:
    std::vector<BigNat> table_;
};

/// D(alpha) = prod_j alpha_j! * j^alpha_j.
BigNat denominator(const MultiplicityVector& alpha);
BigNat denominator(const MultiplicityVector& alpha, const FactorialTable& fact);

/// n! / D(alpha), the number of permutations of n points with cycle type
/// alpha. Throws InvalidArgument if alpha is not of weight n and
/// ConsistencyError if the division is not exact.
BigNat cycle_count(unsigned n, const MultiplicityVector& alpha);
BigNat cycle_count(const MultiplicityVector& alpha, const FactorialTable& fact);

namespace serial {
/// Reference kernel: sum over S_n of n!/D(alpha), one stream, one thread.
BigNat cycle_count_total(unsigned n, unsigned max_n = kDefaultMaxN);
}  // namespace serial

namespace parallel {
/// Same sum, with S_n sharded on (alpha_1, alpha_2) prefixes and the shards
/// reduced by OpenMP. Bit-identical to serial::cycle_count_total.
BigNat cycle_count_total(unsigned n, unsigned threads, unsigned max_n = kDefaultMaxN);
}  // namespace parallel

/// sum over S_n of 1/D(alpha), computed as (sum n!/D(alpha)) / n! and
/// reduced. Returns the value found; it is not asserted to be 1.
ExactRational reciprocal_sum(unsigned n, unsigned max_n = kDefaultMaxN, unsigned threads = 1);

/// D(alpha) for every alpha in enumeration order, repetitions kept.
std::vector<BigNat> unit_fraction_decomposition(unsigned n, unsigned max_n = kDefaultMaxN);

struct TableRow {
    MultiplicityVector alpha;
    BigNat denominator;
};

std::vector<TableRow> render_table(unsigned n, unsigned max_n = kDefaultMaxN);

}  // namespace unity
