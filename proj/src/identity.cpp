#include "unity/identity.hpp"

#include <array>
#include <exception>

#include <omp.h>

namespace unity {

FactorialTable::FactorialTable(unsigned n)
{
    table_.reserve(n + 1);
    table_.emplace_back(1);
    for (unsigned k = 1; k <= n; ++k)
        table_.push_back(table_.back() * BigNat(k));
}

BigNat denominator(const MultiplicityVector& alpha, const FactorialTable& fact)
{
    mpz_class d = 1;
    mpz_class power;
    for (const auto& [part, mult] : alpha.parts()) {
        mpz_ui_pow_ui(power.get_mpz_t(), part, mult);
        d *= power;
        d *= fact[mult].mpz();
    }
    return BigNat::from_mpz(std::move(d));
}

BigNat denominator(const MultiplicityVector& alpha)
{
    return denominator(alpha, FactorialTable(alpha.n()));
}

BigNat cycle_count(const MultiplicityVector& alpha, const FactorialTable& fact)
{
    return fact[alpha.n()].exact_div(denominator(alpha, fact));
}

BigNat cycle_count(unsigned n, const MultiplicityVector& alpha)
{
    if (alpha.n() != n)
        throw InvalidArgument("cycle type has weight " + std::to_string(alpha.n()) + ", expected " + std::to_string(n));
    return cycle_count(alpha, FactorialTable(n));
}

namespace {

BigNat sum_stream(CycleTypeStream& stream, const FactorialTable& fact)
{
    BigNat total;
    while (const auto* alpha = stream.next())
        total += cycle_count(*alpha, fact);
    return total;
}

}  // namespace

namespace serial {

BigNat cycle_count_total(unsigned n, unsigned max_n)
{
    CycleTypeStream stream(n, max_n);
    return sum_stream(stream, FactorialTable(n));
}

}  // namespace serial

namespace parallel {

BigNat cycle_count_total(unsigned n, unsigned threads, unsigned max_n)
{
    check_range(n, max_n);
    const FactorialTable fact(n);

    // Shards in serial stream order: alpha_1 descending, then alpha_2.
    std::vector<std::array<unsigned, 2>> shards;
    if (n == 1) {
        shards.push_back({1, 0});
    } else {
        for (unsigned a1 = n + 1; a1-- > 0;)
            for (unsigned a2 = (n - a1) / 2 + 1; a2-- > 0;)
                shards.push_back({a1, a2});
    }
    const std::size_t prefix_len = n == 1 ? 1 : 2;

    std::vector<BigNat> partial(shards.size());
    std::vector<std::exception_ptr> errors(shards.size());
    const long count = static_cast<long>(shards.size());

#pragma omp parallel for schedule(dynamic, 1) num_threads(threads > 0 ? threads : 1)
    for (long s = 0; s < count; ++s) {
        try {
            CycleTypeStream stream(n, std::span<const unsigned>(shards[s].data(), prefix_len), max_n);
            partial[s] = sum_stream(stream, fact);
        } catch (...) {
            errors[s] = std::current_exception();
        }
    }

    for (const auto& e : errors)
        if (e)
            std::rethrow_exception(e);
    BigNat total;
    for (const auto& p : partial)
        total += p;
    return total;
}

}  // namespace parallel

ExactRational reciprocal_sum(unsigned n, unsigned max_n, unsigned threads)
{
    const BigNat total = threads <= 1 ? serial::cycle_count_total(n, max_n)
                                      : parallel::cycle_count_total(n, threads, max_n);
    return ExactRational(total, BigNat::factorial(n));
}

std::vector<BigNat> unit_fraction_decomposition(unsigned n, unsigned max_n)
{
    CycleTypeStream stream(n, max_n);
    const FactorialTable fact(n);
    std::vector<BigNat> out;
    for (const auto& alpha : stream)
        out.push_back(denominator(alpha, fact));
    return out;
}

std::vector<TableRow> render_table(unsigned n, unsigned max_n)
{
    CycleTypeStream stream(n, max_n);
    const FactorialTable fact(n);
    std::vector<TableRow> rows;
    for (const auto& alpha : stream)
        rows.push_back({alpha, denominator(alpha, fact)});
    return rows;
}

}  // namespace unity
