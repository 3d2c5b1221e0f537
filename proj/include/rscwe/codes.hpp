#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <variant>
#include <vector>

#include "rscwe/gf.hpp"

namespace rscwe {

inline constexpr std::uint64_t kDefaultCodewordBudget = std::uint64_t{1} << 24;

namespace eval {
struct Full {};
struct Punctured {
    FieldElement beta;
};
/// All nonzero elements.
struct Primitive {};
/// Zero followed by all nonzero elements.
struct Standard {};
struct Custom {
    std::vector<FieldElement> points;
};
}  // namespace eval

using EvalKind = std::variant<eval::Full, eval::Punctured, eval::Primitive, eval::Standard, eval::Custom>;

/// Ordered evaluation points for `kind`. Throws DuplicateEvaluationPoint for a
/// repeated custom point and InvalidArgument for an out-of-field one.
std::vector<FieldElement> make_eval_set(const Field& field, const EvalKind& kind);

/// RS_k(alpha), or ERS_k(alpha) when `extended`: codewords
/// (f(alpha_1), ..., f(alpha_n)[, f_{k-1}]) for deg f <= k-1.
class CodeSpec {
public:
    CodeSpec(Field field, std::uint32_t k, std::vector<FieldElement> alpha, bool extended);

    const Field& field() const noexcept { return field_; }
    std::uint32_t k() const noexcept { return k_; }
    std::span<const FieldElement> alpha() const noexcept { return alpha_; }
    bool extended() const noexcept { return extended_; }
    std::size_t num_points() const noexcept { return alpha_.size(); }
    std::size_t length() const noexcept { return alpha_.size() + (extended_ ? 1 : 0); }
    /// q^k, or 0 when it does not fit in 64 bits.
    std::uint64_t size() const noexcept;

private:
    Field field_;
    std::uint32_t k_;
    std::vector<FieldElement> alpha_;
    bool extended_;
};

/// Coefficients f_0..f_{k-1}.
using MessagePoly = std::vector<FieldElement>;
using Codeword = std::vector<FieldElement>;

/// Horner evaluation at every point; the extended coordinate f_{k-1} goes last.
Codeword encode(const CodeSpec& spec, std::span<const FieldElement> msg);

using CodewordVisitor = std::function<void(std::span<const FieldElement> msg, std::span<const FieldElement> word)>;

/// Visits encode(spec, msg) for every msg in F_q^k once, lexicographically in
/// (f_0, ..., f_{k-1}) by element code. Throws SizeLimit past `budget`.
void enumerate_codewords(const CodeSpec& spec, const CodewordVisitor& visit,
                         std::uint64_t budget = kDefaultCodewordBudget);

/// The slice of messages with f_{k-1} == lead; the q slices partition the code.
void enumerate_codeword_slice(const CodeSpec& spec, FieldElement lead, const CodewordVisitor& visit);

/// Budget from the RSCWE_BUDGET environment variable, else the default.
std::uint64_t codeword_budget_from_env();

}  // namespace rscwe
