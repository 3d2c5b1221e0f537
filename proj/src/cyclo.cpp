#include "rscwe/cyclo.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "rscwe/error.hpp"

namespace rscwe {

namespace {

/// Fold a length-p vector (coefficients of zeta^0..zeta^{p-1}) into the basis.
std::vector<BigInt> reduce(std::vector<BigInt> full, std::uint32_t p) {
    const BigInt top = full[p - 1];
    full.resize(p - 1);
    if (top != 0)
        for (auto& c : full) c -= top;
    return full;
}

}  // namespace

CyclotomicInt::CyclotomicInt(std::uint32_t p) : p_(p), coeffs_(p - 1, BigInt(0)) {
    if (!is_prime(p)) throw Error(ErrorKind::InvalidPrime, "cyclotomic order must be prime");
}

CyclotomicInt::CyclotomicInt(std::uint32_t p, std::span<const BigInt> coeffs) : CyclotomicInt(p) {
    std::vector<BigInt> full(p, BigInt(0));
    for (std::size_t i = 0; i < coeffs.size(); ++i) full[i % p] += coeffs[i];
    coeffs_ = reduce(std::move(full), p);
}

CyclotomicInt CyclotomicInt::constant(std::uint32_t p, const BigInt& c) {
    CyclotomicInt out(p);
    out.coeffs_[0] = c;
    return out;
}

CyclotomicInt CyclotomicInt::root_power(std::uint32_t p, std::int64_t t) {
    const std::int64_t e = ((t % static_cast<std::int64_t>(p)) + p) % p;
    std::vector<BigInt> one(static_cast<std::size_t>(e) + 1, BigInt(0));
    one.back() = 1;
    return CyclotomicInt(p, one);
}

bool CyclotomicInt::is_zero() const {
    for (const auto& c : coeffs_)
        if (c != 0) return false;
    return true;
}

bool CyclotomicInt::is_integer(BigInt* value) const {
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0) return false;
    if (value) *value = coeffs_[0];
    return true;
}

void CyclotomicInt::check_same_order(const CyclotomicInt& rhs) const {
    if (p_ != rhs.p_)
        throw Error(ErrorKind::MixedCyclotomicOrder,
                    "operands in Z[zeta_" + std::to_string(p_) + "] and Z[zeta_" + std::to_string(rhs.p_) + "]");
}

CyclotomicInt CyclotomicInt::operator-() const {
    CyclotomicInt out = *this;
    for (auto& c : out.coeffs_) c = -c;
    return out;
}

CyclotomicInt& CyclotomicInt::operator+=(const CyclotomicInt& rhs) {
    check_same_order(rhs);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    return *this;
}

CyclotomicInt& CyclotomicInt::operator-=(const CyclotomicInt& rhs) {
    check_same_order(rhs);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    return *this;
}

CyclotomicInt& CyclotomicInt::operator*=(const CyclotomicInt& rhs) {
    check_same_order(rhs);
    std::vector<BigInt> full(p_, BigInt(0));
    const std::size_t len = coeffs_.size();
    for (std::size_t i = 0; i < len; ++i) {
        if (coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < len; ++j) full[(i + j) % p_] += coeffs_[i] * rhs.coeffs_[j];
    }
    coeffs_ = reduce(std::move(full), p_);
    return *this;
}

CyclotomicInt& CyclotomicInt::operator*=(const BigInt& rhs) {
    for (auto& c : coeffs_) c *= rhs;
    return *this;
}

bool operator==(const CyclotomicInt& a, const CyclotomicInt& b) {
    a.check_same_order(b);
    return a.coeffs_ == b.coeffs_;
}

CyclotomicInt CyclotomicInt::conj() const {
    std::vector<BigInt> full(p_, BigInt(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) full[(p_ - i) % p_] += coeffs_[i];
    CyclotomicInt out(p_);
    out.coeffs_ = reduce(std::move(full), p_);
    return out;
}

std::complex<double> CyclotomicInt::embed() const {
    std::complex<double> acc{0.0, 0.0};
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        const double angle = 2.0 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(p_);
        acc += coeffs_[i].convert_to<double>() * std::polar(1.0, angle);
    }
    return acc;
}

std::string CyclotomicInt::to_string() const {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < coeffs_.size(); ++i) os << (i ? "," : "") << coeffs_[i];
    os << "]_" << p_;
    return os.str();
}

CyclotomicInt RootTally::value() const {
    std::vector<BigInt> c(counts_.begin(), counts_.end());
    return CyclotomicInt(p_, c);
}

CyclotomicInt additive_char_sum(const Field& field, FieldElement b, std::span<const FieldElement> set) {
    RootTally tally(field.p());
    for (auto x : set) tally.add(field.trace(field.mul(b, x)));
    return tally.value();
}

CyclotomicInt additive_char_sum(const Field& field, FieldElement b) {
    const auto all = field.elements();
    return additive_char_sum(field, b, all);
}

CyclotomicInt gauss_sum(const Field& field) {
    if (field.p() == 2) throw Error(ErrorKind::CharacteristicTwo, "quadratic Gauss sum needs odd characteristic");
    RootTally tally(field.p());
    for (auto x : field.elements()) {
        const int eta = field.quadratic_character(x);
        if (eta != 0) tally.add(field.trace(x), eta);
    }
    return tally.value();
}

CyclotomicInt quadratic_sum(const Field& field, FieldElement a2, FieldElement a1, FieldElement a0) {
    if (field.p() == 2) throw Error(ErrorKind::CharacteristicTwo, "quadratic sum needs odd characteristic");
    if (a2.is_zero()) throw Error(ErrorKind::DegenerateQuadratic, "leading coefficient is zero");
    RootTally tally(field.p());
    for (auto c : field.elements()) {
        const FieldElement value = field.add(field.mul(field.add(field.mul(a2, c), a1), c), a0);
        tally.add(field.trace(value));
    }
    return tally.value();
}

CyclotomicInt quadratic_sum_closed_form(const Field& field, const CyclotomicInt& gauss, FieldElement a2,
                                        FieldElement a1, FieldElement a0) {
    if (a2.is_zero()) throw Error(ErrorKind::DegenerateQuadratic, "leading coefficient is zero");
    const FieldElement four_a2 = field.mul(field.from_integer(4), a2);
    const FieldElement shift = field.sub(a0, field.div(field.mul(a1, a1), four_a2));
    CyclotomicInt out = gauss * CyclotomicInt::root_power(field.p(), field.trace(shift));
    if (field.quadratic_character(a2) < 0) out = -out;
    return out;
}

std::complex<double> gauss_sum_closed_form(std::uint32_t p, std::uint32_t m) {
    if (p == 2) throw Error(ErrorKind::CharacteristicTwo, "closed form needs odd p");
    const double sign = (m - 1) % 2 == 0 ? 1.0 : -1.0;
    const std::uint64_t i_exp = static_cast<std::uint64_t>(p - 1) * (p - 1) * m / 4;
    static constexpr std::complex<double> kIPowers[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    const double magnitude = std::pow(static_cast<double>(p), static_cast<double>(m) / 2.0);
    return sign * magnitude * kIPowers[i_exp % 4];
}

}  // namespace rscwe
