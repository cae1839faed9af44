#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "lbr/arcs.hpp"
#include "lbr/errors.hpp"

namespace lbr::cli {

using json = nlohmann::ordered_json;

enum class Format { Text, Json };

struct QueryOptions {
    unsigned max_depth = 64;
    unsigned n_max = 16;
    /// Scan budget: exponents p/q with p <= scan_exp and q <= scan_den.
    unsigned scan_exp = 6;
    unsigned scan_den = 3;
    std::vector<Rational> scan_coeffs = ScanBudget{}.coefficients;
    /// Attach sampled arc-family evidence to bounded/valueset output.
    bool scan = false;
    std::uint64_t seed = 0;
    std::optional<std::string> at;
    std::size_t arity = 0;
    bool timing = false;
    Format format = Format::Text;
};

struct Query {
    std::string command;
    std::vector<std::string> arguments;
    QueryOptions options;
};

struct Response {
    json document;
    int exit_code = 0;
};

const std::vector<std::string>& commands();

/// Exit code for a library error: 2 syntax, 3 precondition, 4 exhausted or depth, 5 internal.
int exit_code(ErrorKind kind);

/// Parses command-line words (without the program name). Throws SyntaxError on usage errors.
Query parse_query(const std::vector<std::string>& words);

/// Runs one query; library errors become an error document with the mapped exit code.
Response run(const Query& query);
/// Parses and runs; usage errors become exit code 2.
Response run(const std::vector<std::string>& words);

/// Runs one query per nonempty, non-comment line, with at most `workers` in flight.
/// Results keep the input order.
std::vector<Response> run_batch(const std::vector<std::string>& lines, unsigned workers);

/// Splits a line into words, honouring single and double quotes.
std::vector<std::string> split_words(const std::string& line);

/// Aligned human-readable rendering of a document.
std::string render_text(const json& document);

/// Full program: parses argv, handles --batch and --format, writes to stdout/stderr.
int main_entry(int argc, char** argv);

}  // namespace lbr::cli
