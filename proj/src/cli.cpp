#include "chowfactor/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "chowfactor/galeryser.hpp"
#include "chowfactor/serialize.hpp"
#include "chowfactor/symfunc.hpp"

namespace chowfactor {

namespace fs = std::filesystem;

namespace {

struct GlobalOptions {
    std::string format = "text";
    std::string cache_dir;
    bool no_cache = false;
    long long max_terms = ResourceLimits{}.max_terms;
};

std::optional<fs::path> resolve_cache_dir(const GlobalOptions& opts) {
    if (opts.no_cache) return std::nullopt;
    if (!opts.cache_dir.empty()) return fs::path(opts.cache_dir);
    if (const char* env = std::getenv("CHOWFACTOR_CACHE"); env && *env) return fs::path(env);
    if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg)
        return fs::path(xdg) / "chowfactor";
    if (const char* home = std::getenv("HOME"); home && *home)
        return fs::path(home) / ".cache" / "chowfactor";
    return std::nullopt;
}

// A cached table is only reused after structural validation: right key,
// one row per partition in canonical order, flags matching the classifier.
bool table_is_valid(const DegreeTable& t, int d, int n) {
    if (t.d != d || t.n != n) return false;
    std::vector<Partition> order;
    try {
        order = enumerate_partitions(d);
    } catch (const std::exception&) {
        return false;
    }
    if (t.rows.size() != order.size()) return false;
    for (std::size_t i = 0; i < order.size(); ++i) {
        const DegreeRow& row = t.rows[i];
        if (!(row.lambda == order[i])) return false;
        if (row.disc_degree <= 0 || row.chow_degree < 0) return false;
        if (row.hypersurface != is_hypersurface(row.lambda, n)) return false;
        if ((row.chow_degree > 0) != row.hypersurface) return false;
    }
    return true;
}

void atomic_write(const fs::path& target, const std::string& payload) {
    std::error_code ec;
    fs::create_directories(target.parent_path(), ec);
    std::mt19937_64 rng(std::random_device{}());
    const fs::path tmp = target.parent_path() /
                         (target.filename().string() + ".tmp-" + std::to_string(rng()));
    {
        std::ofstream stream(tmp, std::ios::binary | std::ios::trunc);
        stream << payload;
        if (!stream) {
            fs::remove(tmp, ec);
            return;  // cache write failure is not an error for the command itself
        }
    }
    fs::rename(tmp, target, ec);
    if (ec) fs::remove(tmp, ec);
}

DegreeTable load_or_solve_table(int d, int n, const ResourceLimits& limits,
                                const std::optional<fs::path>& cache_dir) {
    fs::path file;
    if (cache_dir) {
        file = *cache_dir / ("table_d" + std::to_string(d) + "_n" + std::to_string(n) + ".json");
        std::ifstream stream(file, std::ios::binary);
        if (stream) {
            try {
                nlohmann::json j = nlohmann::json::parse(stream);
                DegreeTable cached = degree_table_from_json(j);
                if (table_is_valid(cached, d, n)) return cached;
            } catch (const std::exception&) {
                // corrupt entry: fall through and recompute
            }
        }
    }
    DegreeTable table = solve_chow_degrees(d, n, limits);
    if (cache_dir) atomic_write(file, to_json(table).dump() + "\n");
    return table;
}

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    std::stringstream stream(text);
    std::string tok;
    while (std::getline(stream, tok, ',')) {
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(tok, &used);
        } catch (const std::exception&) {
            throw std::domain_error("not an integer: '" + tok + "'");
        }
        if (used != tok.size()) throw std::domain_error("not an integer: '" + tok + "'");
        out.push_back(v);
    }
    if (out.empty()) throw std::domain_error("empty integer list");
    return out;
}

std::string run_factor(int d, int n, const std::string& mu_text, const GlobalOptions& opts) {
    if (d < 2 || n < 2) throw std::domain_error("factor requires --d >= 2 and --n >= 2");
    Partition mu = mu_text.empty() ? Partition::ones(d) : partition_from_string(mu_text);
    if (mu.weight() != d)
        throw std::domain_error("--mu must be a partition of --d (got weight " +
                                std::to_string(mu.weight()) + ")");
    const ResourceLimits limits{opts.max_terms};
    DegreeTable table = load_or_solve_table(d, n, limits, resolve_cache_dir(opts));
    FactorReport report = factor_report(mu, table);
    if (mu == Partition::ones(d)) {
        for (const Factor& f : report.factors)
            if (f.multiplicity != multinomial(d, f.lambda))
                throw consistency_error(
                    "hyperdeterminant multiplicity differs from the multinomial coefficient");
    }
    return render(report, output_format_from_string(opts.format));
}

std::string run_degrees(int d, int n, const GlobalOptions& opts) {
    if (d < 2 || n < 2) throw std::domain_error("degrees requires --d >= 2 and --n >= 2");
    const ResourceLimits limits{opts.max_terms};
    DegreeTable table = load_or_solve_table(d, n, limits, resolve_cache_dir(opts));
    return render(table, output_format_from_string(opts.format));
}

std::string run_refinement_matrix(int d, const std::string& method, const GlobalOptions& opts) {
    if (d < 1) throw std::domain_error("refinement-matrix requires --d >= 1");
    const OutputFormat format = output_format_from_string(opts.format);
    if (method == "brute") return render(refinement_matrix_bruteforce(d), format);
    if (method == "symfunc") return render(refinement_matrix_symfunc(d), format);
    if (method == "both") {
        RefinementMatrix brute = refinement_matrix_bruteforce(d);
        RefinementMatrix sym = refinement_matrix_symfunc(d);
        if (!(brute == sym))
            throw consistency_error("brute-force and symmetric-function matrices differ at d = " +
                                    std::to_string(d));
        return render(brute, format, "yes");
    }
    throw std::domain_error("unknown --method '" + method + "' (expected brute, symfunc or both)");
}

std::string run_classify(int d, int n, const GlobalOptions& opts) {
    if (d < 2 || n < 2) throw std::domain_error("classify requires --d >= 2 and --n >= 2");
    ClassifyReport report{d, n, {}};
    for (const Partition& lambda : enumerate_partitions(d))
        report.rows.emplace_back(lambda, is_hypersurface(lambda, n));
    return render(report, output_format_from_string(opts.format));
}

std::string run_galeryser(const std::string& rows_text, const std::string& cols_text,
                          const GlobalOptions& opts) {
    std::vector<int> rows = parse_int_list(rows_text);
    for (int r : rows)
        if (r < 0) throw std::domain_error("row sums must be non-negative");
    Partition cols = partition_from_string(cols_text);
    BigInt count = gale_ryser_count(rows, cols);
    switch (output_format_from_string(opts.format)) {
        case OutputFormat::json: {
            nlohmann::json j;
            j["rows"] = rows;
            j["cols"] = to_json(cols);
            j["count"] = bigint_to_json(count);
            return j.dump(2) + "\n";
        }
        case OutputFormat::csv: {
            std::string out = "rows,cols,count\n";
            std::string rtext;
            for (std::size_t i = 0; i < rows.size(); ++i)
                rtext += (i ? "," : "") + std::to_string(rows[i]);
            out += "\"" + rtext + "\",\"" + partition_to_string(cols) + "\"," + count.str() + "\n";
            return out;
        }
        case OutputFormat::text: {
            std::string rtext;
            for (std::size_t i = 0; i < rows.size(); ++i)
                rtext += (i ? "," : "") + std::to_string(rows[i]);
            return "rows: " + rtext + "\ncols: " + partition_to_string(cols) +
                   "\ncount: " + count.str() + "\n";
        }
    }
    throw std::logic_error("unreachable");
}

std::string run_catalecticant(const std::string& coeffs_text, const GlobalOptions& opts) {
    std::vector<BigRat> coeffs;
    {
        std::stringstream stream(coeffs_text);
        std::string tok;
        while (std::getline(stream, tok, ',')) coeffs.push_back(bigrat_from_string(tok));
    }
    if (coeffs.size() < 3) throw std::domain_error("need at least 3 coefficients (a quadratic)");
    const int d = static_cast<int>(coeffs.size()) - 1;
    BinaryForm form(d, coeffs);
    BigRat det = catalecticant_det(form);  // throws for odd degree
    switch (output_format_from_string(opts.format)) {
        case OutputFormat::json: {
            nlohmann::json j;
            j["degree"] = d;
            j["k"] = d / 2;
            j["coeffs"] = nlohmann::json::array();
            for (const BigRat& c : coeffs) j["coeffs"].push_back(bigrat_to_string(c));
            j["determinant"] = bigrat_to_string(det);
            return j.dump(2) + "\n";
        }
        case OutputFormat::csv:
            return "degree,k,determinant\n" + std::to_string(d) + "," + std::to_string(d / 2) +
                   "," + bigrat_to_string(det) + "\n";
        case OutputFormat::text:
            return "degree: " + std::to_string(d) + "\nk: " + std::to_string(d / 2) +
                   "\ndeterminant: " + bigrat_to_string(det) + "\n";
    }
    throw std::logic_error("unreachable");
}

}  // namespace

CommandResult run_command(const std::vector<std::string>& argv) {
    CLI::App app{"Exact degrees, multiplicities and factor tables for symmetrized "
                 "discriminants and hyperdeterminants of polynomials"};
    app.name("chowfactor");
    app.require_subcommand(0, 1);

    GlobalOptions opts;
    app.add_option("--format", opts.format, "Output format: text, json or csv")
        ->capture_default_str();
    app.add_option("--cache-dir", opts.cache_dir,
                   "Directory for degree-table cache files (env CHOWFACTOR_CACHE)");
    app.add_flag("--no-cache", opts.no_cache, "Disable the on-disk degree-table cache");
    app.add_option("--max-terms", opts.max_terms,
                   "Refuse series computations needing more than this many monomials")
        ->capture_default_str();

    int d = 0, n = 0;
    std::string mu_text, method = "brute", rows_text, cols_text, coeffs_text;

    CLI::App* factor = app.add_subcommand(
        "factor", "Factor the symmetrized mu-discriminant (default mu = 1^d: hyperdeterminant)");
    factor->add_option("--d", d, "Degree of the forms")->required();
    factor->add_option("--n", n, "Number of variables")->required();
    factor->add_option("--mu", mu_text, "Partition of d, e.g. 4,2,2 (default 1^d)");

    CLI::App* degrees = app.add_subcommand("degrees", "Full degree table for all partitions of d");
    degrees->add_option("--d", d, "Degree of the forms")->required();
    degrees->add_option("--n", n, "Number of variables")->required();

    CLI::App* refmat = app.add_subcommand("refinement-matrix", "Refinement-count matrix M");
    refmat->add_option("--d", d, "Weight of the partitions")->required();
    refmat->add_option("--method", method, "brute, symfunc or both (compare)")
        ->capture_default_str();

    CLI::App* classify = app.add_subcommand("classify", "Which Chow duals are hypersurfaces");
    classify->add_option("--d", d, "Degree of the forms")->required();
    classify->add_option("--n", n, "Number of variables")->required();

    CLI::App* galeryser = app.add_subcommand("galeryser", "Count 0-1 matrices by row/column sums");
    galeryser->add_option("--rows", rows_text, "Row sums, e.g. 1,1,1")->required();
    galeryser->add_option("--cols", cols_text, "Column sums (a partition), e.g. 3")->required();

    CLI::App* catal = app.add_subcommand("catalecticant",
                                         "Determinant of the middle Hankel matrix of a binary form");
    catal->add_option("--coeffs", coeffs_text,
                      "Normalized coefficients c0,...,cd (integers or rationals)")
        ->required();

    // Global flags may appear before or after the subcommand.
    for (CLI::App* sub : app.get_subcommands(nullptr)) sub->fallthrough(true);

    CommandResult result;
    try {
        std::vector<std::string> args(argv.rbegin(), argv.rend());  // CLI11 wants reverse order
        app.parse(std::move(args));

        if (factor->parsed()) {
            result.out = run_factor(d, n, mu_text, opts);
        } else if (degrees->parsed()) {
            result.out = run_degrees(d, n, opts);
        } else if (refmat->parsed()) {
            result.out = run_refinement_matrix(d, method, opts);
        } else if (classify->parsed()) {
            result.out = run_classify(d, n, opts);
        } else if (galeryser->parsed()) {
            result.out = run_galeryser(rows_text, cols_text, opts);
        } else if (catal->parsed()) {
            result.out = run_catalecticant(coeffs_text, opts);
        } else {
            result.out = app.help();
        }
        return result;
    } catch (const CLI::CallForHelp&) {
        result.out = app.help();
        return result;
    } catch (const CLI::ParseError& e) {
        result.err = std::string("error: ") + e.what() + "\n";
        result.exit_code = 1;
        return result;
    } catch (const consistency_error& e) {
        result.err = std::string("internal consistency failure: ") + e.what() + "\n";
        result.exit_code = 2;
        return result;
    } catch (const resource_error& e) {
        result.err = std::string("error: ") + e.what() + "\n";
        result.exit_code = 1;
        return result;
    } catch (const std::domain_error& e) {
        result.err = std::string("error: ") + e.what() + "\n";
        result.exit_code = 1;
        return result;
    } catch (const std::exception& e) {
        result.err = std::string("internal error: ") + e.what() + "\n";
        result.exit_code = 2;
        return result;
    }
}

}  // namespace chowfactor
