#pragma once

#include <functional>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "unity/bignum.hpp"
#include "unity/partitions.hpp"

namespace unity {

inline constexpr unsigned kCensusMaxN = 9;

/// Permutation of {1..n} in one-line notation.
class Permutation {
public:
    /// Throws InvalidArgument unless image is a rearrangement of 1..n.
    explicit Permutation(std::vector<unsigned> image);

    static Permutation identity(unsigned n);

    unsigned size() const noexcept { return static_cast<unsigned>(image_.size()); }
    /// Image of point i, 1-based.
    unsigned operator()(unsigned i) const { return image_.at(i - 1); }
    const std::vector<unsigned>& image() const noexcept { return image_; }

private:
    std::vector<unsigned> image_;
};

/// alpha_j = number of j-cycles. Works on a raw one-line image too, for the
/// census loop; the span overload assumes a valid 1-based permutation.
MultiplicityVector cycle_type(const Permutation& p);
MultiplicityVector cycle_type(std::span<const unsigned> image);

/// Tally of permutations by cycle type, ordered like the enumeration
/// stream (decreasing dense lex).
using Census = std::map<MultiplicityVector, BigNat, std::greater<>>;

namespace serial {
/// All n! permutations by lexicographic successor. RangeError for n = 0 or n > 9.
Census census(unsigned n);
}  // namespace serial

namespace parallel {
/// Sharded on the first image point; merged tallies equal serial::census.
Census census(unsigned n, unsigned threads);
}  // namespace parallel

struct CensusMismatch {
    std::vector<unsigned> alpha;  // dense
    BigNat expected;              // n!/D(alpha), or 0 for a key outside S_n
    BigNat actual;                // census tally, 0 when absent
};

/// First alpha (in enumeration order) where the tally differs from
/// cycle_count(n, alpha); keys outside S_n are reported after that.
std::optional<CensusMismatch> first_census_mismatch(unsigned n, const Census& census);

}  // namespace unity
