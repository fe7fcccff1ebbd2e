// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure. `--with-n9` extends the permutation census to n = 9.

#include <algorithm>
#include <chrono>
#include <cstring>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "unity/cli.hpp"
#include "unity/identity.hpp"
#include "unity/partitions.hpp"
#include "unity/perm.hpp"
#include "unity/poly.hpp"

using namespace unity;

namespace {

struct Outcome {
    bool ok = true;
    std::string note;

    void require(bool cond, const std::string& what)
    {
        if (!cond && ok) {
            ok = false;
            note = what;
        }
    }
};

using Clock = std::chrono::steady_clock;

int failures = 0;

void criterion(int id, const std::string& name, double budget_ms, const std::function<void(Outcome&)>& body)
{
    Outcome o;
    const auto t0 = Clock::now();
    try {
        body(o);
    } catch (const std::exception& e) {
        o.require(false, std::string("exception: ") + e.what());
    }
    const double ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
    if (budget_ms > 0)
        o.require(ms < budget_ms, "runtime " + std::to_string(ms) + " ms over budget " + std::to_string(budget_ms) + " ms");
    std::cout << (o.ok ? "[PASS] " : "[FAIL] ") << "AC" << id << ' ' << name << " (" << static_cast<long>(ms) << " ms)";
    if (!o.ok) {
        std::cout << ": " << o.note;
        ++failures;
    }
    std::cout << std::endl;
}

std::vector<BigNat> nats(std::initializer_list<unsigned> xs)
{
    std::vector<BigNat> out;
    for (unsigned x : xs)
        out.emplace_back(x);
    return out;
}

std::vector<BigNat> sorted(std::vector<BigNat> v)
{
    std::sort(v.begin(), v.end());
    return v;
}

std::string capture_cli(std::vector<std::string> args, int& code)
{
    args.insert(args.begin(), "unity");
    std::vector<const char*> argv;
    for (const auto& a : args)
        argv.push_back(a.c_str());
    std::ostringstream out, err;
    code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return out.str();
}

}  // namespace

int main(int argc, char** argv)
{
    bool with_n9 = false;
    for (int i = 1; i < argc; ++i)
        if (std::strcmp(argv[i], "--with-n9") == 0)
            with_n9 = true;

    criterion(1, "table 6 reproduces the 11 rows", 10.0, [](Outcome& o) {
        std::ostringstream out;
        cli::write_table(out, 6, cli::OutputFormat::text, kDefaultMaxN);
        const std::vector<std::string> expected = {
            "alpha_1 alpha_2 alpha_3 alpha_4 alpha_5 alpha_6 denominator",
            "6 0 0 0 0 0 720", "4 1 0 0 0 0 48", "3 0 1 0 0 0 18", "2 2 0 0 0 0 16",
            "2 0 0 1 0 0 8",   "1 1 1 0 0 0 6",  "1 0 0 0 1 0 5",  "0 3 0 0 0 0 48",
            "0 1 0 1 0 0 8",   "0 0 2 0 0 0 18", "0 0 0 0 0 1 6",
        };
        std::istringstream is(out.str());
        std::vector<std::string> got;
        for (std::string line; std::getline(is, line);)
            got.push_back(line);
        o.require(got == expected, "table text differs");
    });

    criterion(2, "n = 6 summands and their exact sum", 0, [](Outcome& o) {
        const auto d = unit_fraction_decomposition(6);
        o.require(sorted(d) == sorted(nats({720, 48, 18, 16, 8, 6, 5, 48, 8, 18, 6})), "summand multiset");
        o.require(testing::incremental_reciprocal_sum(d) == 1, "per-term sum != 1");
        o.require(reciprocal_sum(6).to_string() == "1/1", "reciprocal_sum(6) != 1/1");
    });

    criterion(3, "reciprocal_sum(n) = 1/1 for n = 1..60", 60000.0, [](Outcome& o) {
        for (unsigned n = 1; n <= 60; ++n) {
            const auto s = reciprocal_sum(n);
            o.require(s.is_one(), "n = " + std::to_string(n) + " gave " + s.to_string());
        }
        unsigned long len = 0;
        CycleTypeStream stream(60);
        while (stream.next())
            ++len;
        o.require(len == 966467, "stream length at 60");
        o.require(partition_count(60) == BigNat(len), "partition_count(60) disagrees with stream length");
    });

    criterion(4, "poly route coefficient = 1 for n = 1..30", 30000.0, [](Outcome& o) {
        for (unsigned n = 1; n <= 30; ++n) {
            const auto c = coefficient(power_truncated(base_polynomial(n), n, n), n);
            o.require(c.is_one(), "n = " + std::to_string(n) + " gave " + c.to_string());
        }
    });

    const unsigned perm_max = with_n9 ? 9 : 8;
    criterion(5, "permutation census agrees for n = 1.." + std::to_string(perm_max), 10000.0, [&](Outcome& o) {
        for (unsigned n = 1; n <= perm_max; ++n) {
            const auto census = serial::census(n);
            const auto all = enumerate_cycle_types(n);
            o.require(census.size() == all.size(), "key count at n = " + std::to_string(n));
            BigNat total;
            for (const auto& alpha : all) {
                const auto it = census.find(alpha);
                o.require(it != census.end() && it->second == cycle_count(n, alpha),
                          "tally mismatch at n = " + std::to_string(n));
            }
            for (const auto& [alpha, c] : census)
                total += c;
            o.require(total == BigNat::factorial(n), "tallies do not sum to n! at n = " + std::to_string(n));
        }
    });

    criterion(6, "sorted decompositions for n = 3 and n = 4", 0, [](Outcome& o) {
        o.require(sorted(unit_fraction_decomposition(3)) == nats({2, 3, 6}), "n = 3");
        o.require(sorted(unit_fraction_decomposition(4)) == nats({3, 4, 4, 8, 24}), "n = 4");
    });

    criterion(7, "enumeration length = pentagonal p(n) for n = 1..60", 0, [](Outcome& o) {
        for (unsigned n = 1; n <= 60; ++n) {
            unsigned long len = 0;
            CycleTypeStream stream(n);
            while (stream.next())
                ++len;
            o.require(BigNat(len) == partition_count(n), "n = " + std::to_string(n));
            if (n == 6)
                o.require(len == 11, "p(6) != 11");
        }
    });

    criterion(8, "direct coefficient = derivative route, 100 random polynomials", 0, [](Outcome& o) {
        std::mt19937 rng(424242);
        std::uniform_int_distribution<unsigned> cap_dist(0, 12);
        for (int trial = 0; trial < 100; ++trial) {
            const auto p = testing::random_polynomial(rng, cap_dist(rng));
            for (unsigned j = 0; j <= p.cap(); ++j)
                o.require(coefficient(p, j) == derivative_coefficient(p, j), "trial " + std::to_string(trial));
        }
    });

    criterion(9, "multinomial sums = n_vars^m for n_vars <= 4, m <= 6", 0, [](Outcome& o) {
        for (unsigned k = 1; k <= 4; ++k) {
            for (unsigned m = 0; m <= 6; ++m) {
                BigNat sum;
                WeakCompositionStream s(k, m);
                while (const auto* a = s.next())
                    sum += multinomial_coefficient(m, *a);
                mpz_class expected;
                mpz_ui_pow_ui(expected.get_mpz_t(), k, m);
                o.require(sum.mpz() == expected, "k = " + std::to_string(k) + ", m = " + std::to_string(m));
            }
        }
    });

    criterion(10, "verify 40 identical for --threads 1 and 4", 0, [](Outcome& o) {
        for (const char* fmt : {"text", "csv", "json"}) {
            int c1 = -1, c4 = -1;
            const auto a = capture_cli({"verify", "40", "--threads", "1", "--format", fmt}, c1);
            const auto b = capture_cli({"verify", "40", "--threads", "4", "--format", fmt}, c4);
            o.require(c1 == 0 && c4 == 0, "nonzero exit code");
            o.require(!a.empty() && a == b, std::string("reports differ for format ") + fmt);
        }
    });

    std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << std::endl;
    return failures == 0 ? 0 : 1;
}
