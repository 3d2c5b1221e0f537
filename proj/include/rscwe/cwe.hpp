#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "rscwe/codes.hpp"
#include "rscwe/gf.hpp"

namespace rscwe {

/// exps[i] is the power of w_rho for the element rho with code i.
using ExponentVector = std::vector<std::uint32_t>;

/// Complete weight enumerator: sum over codewords of prod_rho w_rho^{t_rho},
/// stored as exponent vector -> positive coefficient. Like terms are merged on
/// insertion, and std::map keeps them in lexicographic order.
class CwePolynomial {
public:
    using Terms = std::map<ExponentVector, std::uint64_t>;

    CwePolynomial(std::uint32_t q, std::uint32_t length) : q_(q), length_(length) {}

    std::uint32_t q() const noexcept { return q_; }
    /// Code length, i.e. the total degree of every monomial.
    std::uint32_t length() const noexcept { return length_; }
    const Terms& terms() const noexcept { return terms_; }

    /// Throws ShapeMismatch unless `e` has q entries summing to the length.
    void add(const ExponentVector& e, std::uint64_t coefficient);
    void merge(const CwePolynomial& other);

    /// Sum of coefficients (q^k for a k-dimensional code).
    std::uint64_t mass() const noexcept;

    friend bool operator==(const CwePolynomial&, const CwePolynomial&) = default;

private:
    std::uint32_t q_;
    std::uint32_t length_;
    Terms terms_;
};

/// Builds one monomial factor by factor.
class Monomial {
public:
    explicit Monomial(std::uint32_t q) : exps_(q, 0) {}
    Monomial& times(FieldElement rho, std::uint32_t power = 1) {
        exps_[rho.code] += power;
        return *this;
    }
    const ExponentVector& exponents() const noexcept { return exps_; }

private:
    ExponentVector exps_;
};

struct WeightDistribution {
    /// a[i] = number of codewords of Hamming weight i.
    std::vector<std::uint64_t> a;

    /// Smallest i > 0 with a[i] > 0; nullopt for the zero code.
    std::optional<std::size_t> min_positive_weight() const;
};

/// Composition of a word: counts of each symbol.
ExponentVector composition(std::uint32_t q, std::span<const FieldElement> word);

/// Literal sum over all codewords. Slices by leading coefficient are tallied on
/// worker threads when the code is large enough to benefit.
CwePolynomial cwe_bruteforce(const CodeSpec& spec, std::uint64_t budget = kDefaultCodewordBudget);

/// Which transcription of a printed closed form a builder follows. `Corrected`
/// is the brute-force-validated one; `AsPrinted` reproduces the published text
/// (including its misprints) and exists so the errata can be demonstrated.
enum class Reading { Corrected, AsPrinted };

/// Dimension-2 RS / ERS enumerator for any n >= 2 distinct points.
CwePolynomial cwe_rs2(const Field& field, std::span<const FieldElement> alpha, bool extended,
                      Reading reading = Reading::Corrected);

/// Dimension-3 enumerator with alpha = all of F_q in code order (q >= 3).
CwePolynomial cwe_k3_fullfield(const Field& field, bool extended, Reading reading = Reading::Corrected);

/// Dimension-3 enumerator with alpha = F_q \ {beta} in code order (q >= 4).
CwePolynomial cwe_k3_punctured(const Field& field, FieldElement beta, bool extended,
                               Reading reading = Reading::Corrected);

/// Projection onto Hamming weights via the exponent of w_0.
WeightDistribution weight_distribution(const CwePolynomial& cwe);

struct TermMismatch {
    ExponentVector exponents;
    std::uint64_t left = 0;   // 0 when absent on the left
    std::uint64_t right = 0;  // 0 when absent on the right
};

struct CweComparison {
    bool equal = true;
    /// Lexicographically smallest differing exponent vector.
    std::optional<TermMismatch> first_difference;
};

/// Exact comparison. Throws ShapeMismatch when q or the length differ.
CweComparison cwe_equal(const CwePolynomial& a, const CwePolynomial& b);

std::string format_exponents(const ExponentVector& e);

}  // namespace rscwe
