#include "unity/perm.hpp"

#include <algorithm>
#include <cstdint>
#include <exception>
#include <numeric>
#include <string>

#include <omp.h>

#include "unity/identity.hpp"

namespace unity {

Permutation::Permutation(std::vector<unsigned> image) : image_(std::move(image))
{
    if (image_.empty())
        throw InvalidArgument("empty permutation");
    std::vector<bool> seen(image_.size() + 1, false);
    for (unsigned v : image_) {
        if (v == 0 || v > image_.size() || seen[v])
            throw InvalidArgument("not a permutation of 1.." + std::to_string(image_.size()));
        seen[v] = true;
    }
}

Permutation Permutation::identity(unsigned n)
{
    std::vector<unsigned> img(n);
    std::iota(img.begin(), img.end(), 1u);
    return Permutation(std::move(img));
}

MultiplicityVector cycle_type(std::span<const unsigned> image)
{
    const std::size_t n = image.size();
    std::vector<unsigned> counts(n, 0);
    std::vector<bool> visited(n, false);
    for (std::size_t start = 0; start < n; ++start) {
        if (visited[start])
            continue;
        unsigned len = 0;
        for (std::size_t i = start; !visited[i]; i = image[i] - 1) {
            visited[i] = true;
            ++len;
        }
        ++counts[len - 1];
    }
    return MultiplicityVector::from_dense(counts);
}

MultiplicityVector cycle_type(const Permutation& p)
{
    return cycle_type(p.image());
}

namespace {

void check_census_range(unsigned n)
{
    if (n == 0 || n > kCensusMaxN)
        throw RangeError("oracle range exceeded: census supports 1.." + std::to_string(kCensusMaxN) + ", got " +
                         std::to_string(n));
}

using LocalTally = std::map<MultiplicityVector, std::uint64_t, std::greater<>>;

// Every permutation whose image starts with `first` (0 = no restriction).
void tally_shard(unsigned n, unsigned first, LocalTally& tally)
{
    std::vector<unsigned> img(n);
    std::iota(img.begin(), img.end(), 1u);
    auto tail = img.begin();
    if (first != 0) {
        std::rotate(img.begin(), img.begin() + (first - 1), img.begin() + first);
        tail = img.begin() + 1;
    }
    do {
        ++tally[cycle_type(img)];
    } while (std::next_permutation(tail, img.end()));
}

Census to_census(const LocalTally& tally)
{
    Census out;
    for (const auto& [alpha, c] : tally)
        out.emplace(alpha, BigNat(c));
    return out;
}

}  // namespace

namespace serial {

Census census(unsigned n)
{
    check_census_range(n);
    LocalTally tally;
    tally_shard(n, 0, tally);
    return to_census(tally);
}

}  // namespace serial

namespace parallel {

Census census(unsigned n, unsigned threads)
{
    check_census_range(n);
    std::vector<LocalTally> shards(n);
    std::vector<std::exception_ptr> errors(n);
    const int count = static_cast<int>(n);

#pragma omp parallel for schedule(dynamic, 1) num_threads(threads > 0 ? threads : 1)
    for (int s = 0; s < count; ++s) {
        try {
            tally_shard(n, static_cast<unsigned>(s) + 1, shards[s]);
        } catch (...) {
            errors[s] = std::current_exception();
        }
    }

    for (const auto& e : errors)
        if (e)
            std::rethrow_exception(e);
    LocalTally merged;
    for (const auto& shard : shards)
        for (const auto& [alpha, c] : shard)
            merged[alpha] += c;
    return to_census(merged);
}

}  // namespace parallel

std::optional<CensusMismatch> first_census_mismatch(unsigned n, const Census& census)
{
    const FactorialTable fact(n);
    std::size_t matched = 0;
    CycleTypeStream stream(n, std::max(n, kDefaultMaxN));
    for (const auto& alpha : stream) {
        BigNat expected = cycle_count(alpha, fact);
        auto it = census.find(alpha);
        BigNat actual = it == census.end() ? BigNat() : it->second;
        if (actual != expected)
            return CensusMismatch{alpha.dense(), std::move(expected), std::move(actual)};
        ++matched;
    }
    if (matched != census.size()) {
        for (const auto& [alpha, c] : census) {
            if (alpha.n() != n)
                return CensusMismatch{alpha.dense(), BigNat(), c};
        }
    }
    return std::nullopt;
}

}  // namespace unity
