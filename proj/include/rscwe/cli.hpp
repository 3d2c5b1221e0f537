#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "rscwe/codes.hpp"
#include "rscwe/cwe.hpp"

namespace rscwe::cli {

enum class ExitCode : int {
    Ok = 0,
    Mismatch = 1,
    Usage = 2,
    SizeLimit = 3,
};

enum class Method { Brute, Formula, Both };
enum class OutputFormat { Text, Json };

struct RunConfig {
    std::uint32_t p = 0;
    std::uint32_t m = 1;
    std::uint32_t k = 2;
    Method method = Method::Brute;
    std::string eval = "full";
    bool extended = false;
    OutputFormat output = OutputFormat::Text;
    std::uint64_t seed = 0;
    std::uint64_t budget = kDefaultCodewordBudget;
    std::uint32_t max_order = kDefaultMaxOrder;
    bool explain = false;
    std::uint32_t random_sets = 0;
};

/// Parses `full`, `punctured:<code>`, `primitive`, `standard`, `custom:<c1>,<c2>,...`.
/// Throws rscwe::Error(InvalidArgument) on malformed input.
EvalKind parse_eval_kind(const std::string& text);

/// Closed-form enumerator for the configuration, or nullopt when no closed form
/// applies (k outside {2, 3}, or a k = 3 evaluation set that is neither the
/// whole field nor the field minus one point).
std::optional<CwePolynomial> formula_cwe(const Field& field, std::uint32_t k, std::span<const FieldElement> alpha,
                                         bool extended);

/// Entry point behind the `rscwe` binary; `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rscwe::cli
