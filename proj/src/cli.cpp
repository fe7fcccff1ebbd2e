#include "unity/cli.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <iomanip>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "unity/identity.hpp"
#include "unity/partitions.hpp"
#include "unity/perm.hpp"
#include "unity/poly.hpp"

namespace unity::cli {

namespace {

const char* status_word(bool pass) { return pass ? "pass" : "fail"; }

std::string join(const std::vector<unsigned>& v, char sep)
{
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i)
            s += sep;
        s += std::to_string(v[i]);
    }
    return s;
}

template <typename F>
RouteResult timed(std::string name, F&& body)
{
    RouteResult r;
    r.name = std::move(name);
    const auto t0 = std::chrono::steady_clock::now();
    body(r);
    r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

RouteResult direct_route(unsigned n, unsigned max_n, unsigned threads)
{
    return timed("direct", [&](RouteResult& r) {
        const ExactRational sum = reciprocal_sum(n, max_n, threads);
        r.result = sum.to_string();
        r.pass = sum.is_one();
        if (!r.pass)
            r.detail = "reciprocal sum is " + r.result + ", expected 1/1";
    });
}

RouteResult poly_route(unsigned n)
{
    return timed("poly", [&](RouteResult& r) {
        const ExactRational c = power_series_coefficient(n);
        r.result = c.to_string();
        r.pass = c.is_one();
        if (!r.pass)
            r.detail = "coefficient of t^" + std::to_string(n) + " is " + r.result + ", expected 1/1";
    });
}

RouteResult perm_route(unsigned n, unsigned threads)
{
    return timed("perm", [&](RouteResult& r) {
        const Census census = threads <= 1 ? serial::census(n) : parallel::census(n, threads);
        BigNat total;
        for (const auto& [alpha, c] : census)
            total += c;
        const ExactRational ratio(total, BigNat::factorial(n));
        r.result = ratio.to_string();
        const auto mismatch = first_census_mismatch(n, census);
        r.pass = !mismatch && ratio.is_one();
        if (mismatch)
            r.detail = "first mismatch at alpha (" + join(mismatch->alpha, ' ') + "): expected " +
                       mismatch->expected.to_string() + " census " + mismatch->actual.to_string();
        else if (!r.pass)
            r.detail = "census total is " + total.to_string() + ", expected n!";
    });
}

}  // namespace

OutputFormat parse_format(std::string_view s)
{
    if (s == "text")
        return OutputFormat::text;
    if (s == "csv")
        return OutputFormat::csv;
    if (s == "json")
        return OutputFormat::json;
    throw InvalidArgument("unknown output format '" + std::string(s) + "'");
}

bool RunReport::pass() const
{
    return !routes.empty() && std::all_of(routes.begin(), routes.end(), [](const RouteResult& r) { return r.pass; });
}

int exit_code(const RunReport& report)
{
    return report.pass() ? kExitOk : kExitDisagreement;
}

void write_report(std::ostream& out, const RunReport& report, OutputFormat format)
{
    const char* verdict = status_word(report.pass());
    switch (format) {
    case OutputFormat::text:
        out << "n: " << report.n << '\n';
        for (const auto& r : report.routes) {
            out << r.name << ": " << r.result << ' ' << status_word(r.pass);
            if (!r.detail.empty())
                out << " (" << r.detail << ')';
            out << '\n';
        }
        out << "verdict: " << verdict << '\n';
        break;
    case OutputFormat::csv:
        out << "n,route,result,status,detail,verdict\n";
        for (const auto& r : report.routes)
            out << report.n << ',' << r.name << ',' << r.result << ',' << status_word(r.pass) << ',' << r.detail << ','
                << verdict << '\n';
        break;
    case OutputFormat::json: {
        nlohmann::ordered_json j;
        j["n"] = report.n;
        j["routes"] = nlohmann::ordered_json::array();
        for (const auto& r : report.routes) {
            nlohmann::ordered_json route;
            route["name"] = r.name;
            route["result"] = r.result;
            route["status"] = status_word(r.pass);
            if (!r.detail.empty())
                route["detail"] = r.detail;
            j["routes"].push_back(std::move(route));
        }
        j["verdict"] = verdict;
        out << j.dump() << '\n';
        break;
    }
    }
}

void write_timings(std::ostream& err, const RunReport& report)
{
    for (const auto& r : report.routes)
        err << "elapsed " << r.name << ": " << std::fixed << std::setprecision(3) << r.elapsed_ms << " ms\n";
}

RunReport run_verify(unsigned n, unsigned max_n, unsigned threads)
{
    check_range(n, max_n);
    RunReport report;
    report.n = n;
    report.routes.push_back(direct_route(n, max_n, threads));
    return report;
}

RunReport run_oracle(unsigned n, const std::vector<std::string>& routes, unsigned max_n, unsigned threads)
{
    check_range(n, max_n);
    auto wants = [&](std::string_view name) { return std::find(routes.begin(), routes.end(), name) != routes.end(); };
    for (const auto& r : routes)
        if (r != "direct" && r != "poly" && r != "perm")
            throw InvalidArgument("unknown route '" + r + "'");
    if (routes.empty())
        throw InvalidArgument("no routes selected");
    if (wants("perm") && n > kCensusMaxN)
        throw RangeError("perm route needs n <= " + std::to_string(kCensusMaxN) + ", got " + std::to_string(n));

    RunReport report;
    report.n = n;
    if (wants("direct"))
        report.routes.push_back(direct_route(n, max_n, threads));
    if (wants("poly"))
        report.routes.push_back(poly_route(n));
    if (wants("perm"))
        report.routes.push_back(perm_route(n, threads));
    return report;
}

void write_table(std::ostream& out, unsigned n, OutputFormat format, unsigned max_n)
{
    CycleTypeStream stream(n, max_n);
    const FactorialTable fact(n);
    std::vector<unsigned> dense(n);
    auto fill_dense = [&](const MultiplicityVector& alpha) {
        std::fill(dense.begin(), dense.end(), 0u);
        for (const auto& [part, mult] : alpha.parts())
            dense[part - 1] = mult;
    };

    switch (format) {
    case OutputFormat::text:
    case OutputFormat::csv: {
        const char sep = format == OutputFormat::csv ? ',' : ' ';
        for (unsigned j = 1; j <= n; ++j)
            out << "alpha_" << j << sep;
        out << "denominator\n";
        for (const auto& alpha : stream) {
            fill_dense(alpha);
            out << join(dense, sep) << sep << denominator(alpha, fact) << '\n';
        }
        break;
    }
    case OutputFormat::json: {
        // Hand-streamed: every value is a digit string, nothing to escape.
        out << "{\"n\":" << n << ",\"rows\":[";
        bool first = true;
        for (const auto& alpha : stream) {
            fill_dense(alpha);
            out << (first ? "" : ",") << "{\"alpha\":[" << join(dense, ',') << "],\"denominator\":\""
                << denominator(alpha, fact) << "\"}";
            first = false;
        }
        out << "]}\n";
        break;
    }
    }
}

void write_decomposition(std::ostream& out, unsigned n, OutputFormat format, bool sorted, unsigned max_n)
{
    std::vector<BigNat> denoms = unit_fraction_decomposition(n, max_n);
    if (sorted)
        std::sort(denoms.begin(), denoms.end());

    switch (format) {
    case OutputFormat::text:
        for (std::size_t i = 0; i < denoms.size(); ++i)
            out << (i ? " " : "") << denoms[i];
        out << '\n';
        break;
    case OutputFormat::csv:
        out << "denominator\n";
        for (const auto& d : denoms)
            out << d << '\n';
        break;
    case OutputFormat::json: {
        nlohmann::ordered_json j;
        j["n"] = n;
        j["sorted"] = sorted;
        j["denominators"] = nlohmann::ordered_json::array();
        for (const auto& d : denoms)
            j["denominators"].push_back(d.to_string());
        out << j.dump() << '\n';
        break;
    }
    }
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Unit-fraction decompositions of 1 from cycle types of n", "unity"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string format_name = "text";
    unsigned max_n = kDefaultMaxN;
    unsigned threads = 1;
    app.add_option("--format", format_name, "Output format")->check(CLI::IsMember({"text", "csv", "json"}));
    app.add_option("--max-n", max_n, "Largest accepted n")->check(CLI::PositiveNumber);
    app.add_option("--threads", threads, "Worker threads for the parallel kernels")->check(CLI::PositiveNumber);

    unsigned n = 0;
    bool sorted = false;
    std::vector<std::string> routes;

    auto* table = app.add_subcommand("table", "Cycle types of n with their denominators");
    auto* verify = app.add_subcommand("verify", "Check that the reciprocal denominators sum to 1");
    auto* decompose = app.add_subcommand("decompose", "List the unit-fraction denominators");
    auto* oracle = app.add_subcommand("oracle", "Cross-check the identity by independent routes");
    for (auto* sub : {table, verify, decompose, oracle})
        sub->add_option("n", n, "Weight n")->required();
    decompose->add_flag("--sorted", sorted, "Sort denominators ascending");
    oracle->add_option("--routes", routes, "Comma-separated subset of direct,poly,perm")
        ->delimiter(',')
        ->check(CLI::IsMember({"direct", "poly", "perm"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        const OutputFormat format = parse_format(format_name);
        if (*table) {
            write_table(out, n, format, max_n);
        } else if (*decompose) {
            write_decomposition(out, n, format, sorted, max_n);
        } else {
            RunReport report;
            if (*verify) {
                report = run_verify(n, max_n, threads);
            } else {
                if (routes.empty()) {
                    routes = {"direct", "poly"};
                    if (n <= kCensusMaxN)
                        routes.emplace_back("perm");
                }
                report = run_oracle(n, routes, max_n, threads);
            }
            write_report(out, report, format);
            write_timings(err, report);
            for (const auto& r : report.routes)
                if (!r.pass)
                    err << "disagreement in route " << r.name << ": " << r.detail << '\n';
            return exit_code(report);
        }
    } catch (const RangeError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const InvalidArgument& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return kExitDisagreement;
    }
    return kExitOk;
}

}  // namespace unity::cli
