#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <complex>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "rscwe/gf.hpp"

namespace rscwe {

using BigInt = boost::multiprecision::cpp_int;

/// Exact element of Z[zeta_p] in the power basis 1, zeta, ..., zeta^{p-2}.
///
/// zeta^{p-1} is eliminated via zeta^{p-1} = -(1 + zeta + ... + zeta^{p-2}) on
/// every construction, which makes the representation unique and `==` exact.
class CyclotomicInt {
public:
    explicit CyclotomicInt(std::uint32_t p);
    /// Takes coefficients of 1, zeta, ..., zeta^{len-1} for any len; exponents
    /// are folded mod p and the result reduced.
    CyclotomicInt(std::uint32_t p, std::span<const BigInt> coeffs);

    static CyclotomicInt constant(std::uint32_t p, const BigInt& c);
    /// zeta_p^{t mod p}.
    static CyclotomicInt root_power(std::uint32_t p, std::int64_t t);

    std::uint32_t p() const noexcept { return p_; }
    /// Length p-1 basis coefficients.
    const std::vector<BigInt>& coeffs() const noexcept { return coeffs_; }

    bool is_zero() const;
    /// True when the value lies in Z; `value` receives it.
    bool is_integer(BigInt* value = nullptr) const;

    CyclotomicInt operator-() const;
    CyclotomicInt& operator+=(const CyclotomicInt& rhs);
    CyclotomicInt& operator-=(const CyclotomicInt& rhs);
    CyclotomicInt& operator*=(const CyclotomicInt& rhs);
    CyclotomicInt& operator*=(const BigInt& rhs);

    friend CyclotomicInt operator+(CyclotomicInt a, const CyclotomicInt& b) { return a += b; }
    friend CyclotomicInt operator-(CyclotomicInt a, const CyclotomicInt& b) { return a -= b; }
    friend CyclotomicInt operator*(CyclotomicInt a, const CyclotomicInt& b) { return a *= b; }
    friend CyclotomicInt operator*(CyclotomicInt a, const BigInt& b) { return a *= b; }
    friend bool operator==(const CyclotomicInt& a, const CyclotomicInt& b);

    /// Complex conjugation, zeta -> zeta^{-1}.
    CyclotomicInt conj() const;

    /// Value at zeta = exp(2 pi i / p).
    std::complex<double> embed() const;

    std::string to_string() const;

private:
    void check_same_order(const CyclotomicInt& rhs) const;

    std::uint32_t p_;
    std::vector<BigInt> coeffs_;
};

/// Accumulates zeta^t terms with small integer weights before converting to a
/// CyclotomicInt; character sums over a whole field only need p counters.
class RootTally {
public:
    explicit RootTally(std::uint32_t p) : p_(p), counts_(p, 0) {}
    void add(std::uint32_t exponent, std::int64_t weight = 1) { counts_[exponent % p_] += weight; }
    CyclotomicInt value() const;

private:
    std::uint32_t p_;
    std::vector<std::int64_t> counts_;
};

/// sum over x in `set` of zeta_p^{Tr(b x)}.
CyclotomicInt additive_char_sum(const Field& field, FieldElement b, std::span<const FieldElement> set);
/// Same over the whole field.
CyclotomicInt additive_char_sum(const Field& field, FieldElement b);

/// G(eta, chi_1) = sum_x eta(x) zeta_p^{Tr(x)}. Throws CharacteristicTwo for p == 2.
CyclotomicInt gauss_sum(const Field& field);

/// sum_c zeta_p^{Tr(a2 c^2 + a1 c + a0)}, by direct summation.
CyclotomicInt quadratic_sum(const Field& field, FieldElement a2, FieldElement a1, FieldElement a0);

/// Right-hand side of the quadratic-sum evaluation:
/// G * eta(a2) * zeta_p^{Tr(a0 - a1^2 (4 a2)^{-1})}, given G.
CyclotomicInt quadratic_sum_closed_form(const Field& field, const CyclotomicInt& gauss, FieldElement a2,
                                        FieldElement a1, FieldElement a0);

/// Closed-form complex value (-1)^{m-1} i^{(p-1)^2 m / 4} p^{m/2} of the
/// quadratic Gauss sum, for odd p.
std::complex<double> gauss_sum_closed_form(std::uint32_t p, std::uint32_t m);

}  // namespace rscwe
