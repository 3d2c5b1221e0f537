#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <vector>

namespace rscwe {

/// An element of GF(p^m), identified by the base-p integer of its coefficient
/// vector (c_0 + c_1 p + ... + c_{m-1} p^{m-1}). Code 0 is zero, code 1 is one.
struct FieldElement {
    std::uint32_t code = 0;

    constexpr FieldElement() = default;
    constexpr explicit FieldElement(std::uint32_t c) : code(c) {}

    constexpr bool is_zero() const noexcept { return code == 0; }
    friend constexpr auto operator<=>(FieldElement, FieldElement) = default;
};

inline constexpr std::uint32_t kDefaultMaxOrder = 4096;

bool is_prime(std::uint64_t n) noexcept;

/// GF(p^m) realised as F_p[x] / (modulus). Immutable after construction.
///
/// The modulus is the monic irreducible polynomial of degree m whose low
/// coefficients (c_0..c_{m-1}) have the smallest base-p code, so two fields
/// built from the same (p, m) are identical. Multiplication goes through
/// exp/log tables over a primitive element; `mul_polynomial` is the schoolbook
/// route the tables are built from.
class Field {
public:
    /// Throws InvalidPrime for non-prime p, InvalidArgument for m == 0 and
    /// SizeLimit when p^m exceeds `max_order`.
    static Field build(std::uint32_t p, std::uint32_t m, std::uint32_t max_order = kDefaultMaxOrder);

    std::uint32_t p() const noexcept { return p_; }
    std::uint32_t m() const noexcept { return m_; }
    std::uint32_t q() const noexcept { return q_; }

    /// Coefficients c_0..c_m of the modulus; c_m == 1.
    std::span<const std::uint32_t> modulus() const noexcept { return modulus_; }

    bool contains(FieldElement x) const noexcept { return x.code < q_; }
    FieldElement element(std::uint32_t code) const;
    /// Image of the integer n in the prime subfield.
    FieldElement from_integer(std::int64_t n) const noexcept;

    FieldElement zero() const noexcept { return FieldElement{0}; }
    FieldElement one() const noexcept { return FieldElement{1}; }

    FieldElement add(FieldElement a, FieldElement b) const noexcept;
    FieldElement sub(FieldElement a, FieldElement b) const noexcept;
    FieldElement neg(FieldElement a) const noexcept;
    FieldElement mul(FieldElement a, FieldElement b) const noexcept;
    FieldElement inv(FieldElement a) const;
    FieldElement div(FieldElement a, FieldElement b) const;
    FieldElement pow(FieldElement a, std::uint64_t e) const noexcept;

    /// Product by reduction of the polynomial product modulo the modulus.
    FieldElement mul_polynomial(FieldElement a, FieldElement b) const noexcept;

    /// Absolute trace to F_p, returned as an integer in [0, p).
    std::uint32_t trace(FieldElement x) const noexcept;

    /// Quadratic character: 0 at zero, +1 on nonzero squares, -1 otherwise.
    /// Throws CharacteristicTwo for p == 2.
    int quadratic_character(FieldElement x) const;

    /// All q elements in ascending code order.
    std::vector<FieldElement> elements() const;

    FieldElement primitive_element() const noexcept { return FieldElement{exp_[1 % (q_ - 1)]}; }

    friend bool operator==(const Field& a, const Field& b) noexcept {
        return a.p_ == b.p_ && a.m_ == b.m_ && a.modulus_ == b.modulus_;
    }

private:
    Field() = default;

    std::uint32_t p_ = 0;
    std::uint32_t m_ = 0;
    std::uint32_t q_ = 0;
    std::vector<std::uint32_t> modulus_;
    std::vector<std::uint32_t> exp_;  // exp_[i] = g^i, i in [0, q-1)
    std::vector<std::uint32_t> log_;  // log_[x] for x != 0
};

}  // namespace rscwe
