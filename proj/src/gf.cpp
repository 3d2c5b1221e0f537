#include "rscwe/gf.hpp"

#include <string>

#include "rscwe/error.hpp"

namespace rscwe {

namespace {

using Poly = std::vector<std::uint32_t>;  // low-to-high coefficients over F_p

void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
    // p is prime and small, Fermat is enough.
    std::uint64_t r = 1, b = a % p;
    for (std::uint32_t e = p - 2; e; e >>= 1) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
    }
    return static_cast<std::uint32_t>(r);
}

/// Remainder of a modulo b (b nonzero, not necessarily monic).
Poly poly_mod(Poly a, const Poly& b, std::uint32_t p) {
    trim(a);
    const std::size_t db = b.size() - 1;
    const std::uint32_t lead_inv = inv_mod(b.back(), p);
    while (a.size() >= b.size()) {
        const std::uint64_t factor = static_cast<std::uint64_t>(a.back()) * lead_inv % p;
        const std::size_t shift = a.size() - 1 - db;
        for (std::size_t i = 0; i <= db; ++i) {
            const std::uint64_t t = factor * b[i] % p;
            a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - t) % p);
        }
        trim(a);
    }
    return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& f, std::uint32_t p) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = static_cast<std::uint32_t>((r[i + j] + static_cast<std::uint64_t>(a[i]) * b[j]) % p);
    return poly_mod(std::move(r), f, p);
}

Poly poly_gcd(Poly a, Poly b, std::uint32_t p) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        Poly r = poly_mod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

/// Ben-Or: f of degree m is irreducible iff gcd(f, x^{p^i} - x) = 1 for 1 <= i <= m/2.
/// The i = 1 test is exactly the absence of roots in F_p.
bool is_irreducible(const Poly& f, std::uint32_t p) {
    const std::size_t m = f.size() - 1;
    if (m == 1) return true;
    Poly x_power{0, 1};  // x^{p^i} mod f
    for (std::size_t i = 1; i <= m / 2; ++i) {
        Poly acc{1};
        Poly base = x_power;
        for (std::uint32_t e = p; e; e >>= 1) {
            if (e & 1) acc = poly_mulmod(acc, base, f, p);
            base = poly_mulmod(base, base, f, p);
        }
        x_power = acc;
        Poly diff = x_power;
        if (diff.size() < 2) diff.resize(2, 0);
        diff[1] = (diff[1] + p - 1) % p;
        trim(diff);
        if (diff.empty()) return false;
        Poly g = poly_gcd(f, diff, p);
        if (g.size() != 1) return false;
    }
    return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

}  // namespace

bool is_prime(std::uint64_t n) noexcept {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

Field Field::build(std::uint32_t p, std::uint32_t m, std::uint32_t max_order) {
    if (!is_prime(p)) throw Error(ErrorKind::InvalidPrime, "p must be prime, got " + std::to_string(p));
    if (m == 0) throw Error(ErrorKind::InvalidArgument, "m must be positive");
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < m; ++i) {
        q *= p;
        if (q > max_order)
            throw Error(ErrorKind::SizeLimit, "field order " + std::to_string(p) + "^" + std::to_string(m) +
                                                  " exceeds bound " + std::to_string(max_order));
    }

    Field f;
    f.p_ = p;
    f.m_ = m;
    f.q_ = static_cast<std::uint32_t>(q);

    for (std::uint32_t code = 0; code < f.q_; ++code) {
        Poly cand(m + 1, 0);
        for (std::uint32_t i = 0, c = code; i < m; ++i, c /= p) cand[i] = c % p;
        cand[m] = 1;
        if (is_irreducible(cand, p)) {
            f.modulus_ = std::move(cand);
            break;
        }
    }
    // Irreducible polynomials of every degree exist, so the loop always finds one.

    const std::uint32_t group = f.q_ - 1;
    f.exp_.assign(group, 1);
    f.log_.assign(f.q_, 0);
    if (group > 1) {
        const auto factors = prime_factors(group);
        auto slow_pow = [&](FieldElement a, std::uint64_t e) {
            FieldElement r{1};
            for (; e; e >>= 1) {
                if (e & 1) r = f.mul_polynomial(r, a);
                a = f.mul_polynomial(a, a);
            }
            return r;
        };
        std::uint32_t gen = 2;
        for (; gen < f.q_; ++gen) {
            bool primitive = true;
            for (auto r : factors)
                if (slow_pow(FieldElement{gen}, group / r).code == 1) {
                    primitive = false;
                    break;
                }
            if (primitive) break;
        }
        FieldElement x{1};
        for (std::uint32_t i = 0; i < group; ++i) {
            f.exp_[i] = x.code;
            f.log_[x.code] = i;
            x = f.mul_polynomial(x, FieldElement{gen});
        }
    }
    return f;
}

FieldElement Field::element(std::uint32_t code) const {
    if (code >= q_) throw Error(ErrorKind::InvalidArgument, "element code " + std::to_string(code) + " out of range");
    return FieldElement{code};
}

FieldElement Field::from_integer(std::int64_t n) const noexcept {
    const std::int64_t r = ((n % p_) + p_) % p_;
    return FieldElement{static_cast<std::uint32_t>(r)};
}

FieldElement Field::add(FieldElement a, FieldElement b) const noexcept {
    if (p_ == 2) return FieldElement{a.code ^ b.code};
    std::uint32_t out = 0, scale = 1;
    for (std::uint32_t x = a.code, y = b.code; x || y; x /= p_, y /= p_, scale *= p_)
        out += ((x % p_ + y % p_) % p_) * scale;
    return FieldElement{out};
}

FieldElement Field::neg(FieldElement a) const noexcept {
    if (p_ == 2) return a;
    std::uint32_t out = 0, scale = 1;
    for (std::uint32_t x = a.code; x; x /= p_, scale *= p_) out += ((p_ - x % p_) % p_) * scale;
    return FieldElement{out};
}

FieldElement Field::sub(FieldElement a, FieldElement b) const noexcept { return add(a, neg(b)); }

FieldElement Field::mul(FieldElement a, FieldElement b) const noexcept {
    if (a.is_zero() || b.is_zero()) return FieldElement{0};
    const std::uint32_t group = q_ - 1;
    std::uint32_t e = log_[a.code] + log_[b.code];
    if (e >= group) e -= group;
    return FieldElement{exp_[e]};
}

FieldElement Field::inv(FieldElement a) const {
    if (a.is_zero()) throw Error(ErrorKind::DivisionByZero, "inverse of zero");
    const std::uint32_t group = q_ - 1;
    return FieldElement{exp_[(group - log_[a.code]) % group]};
}

FieldElement Field::div(FieldElement a, FieldElement b) const { return mul(a, inv(b)); }

FieldElement Field::pow(FieldElement a, std::uint64_t e) const noexcept {
    if (e == 0) return FieldElement{1};
    if (a.is_zero()) return FieldElement{0};
    const std::uint64_t group = q_ - 1;
    return FieldElement{exp_[static_cast<std::uint32_t>((log_[a.code] * (e % group)) % group)]};
}

FieldElement Field::mul_polynomial(FieldElement a, FieldElement b) const noexcept {
    std::vector<std::uint64_t> prod(2 * m_, 0);
    std::vector<std::uint32_t> da(m_), db(m_);
    for (std::uint32_t i = 0, x = a.code, y = b.code; i < m_; ++i, x /= p_, y /= p_) {
        da[i] = x % p_;
        db[i] = y % p_;
    }
    for (std::uint32_t i = 0; i < m_; ++i)
        for (std::uint32_t j = 0; j < m_; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
    // modulus is monic: x^m = -(c_0 + ... + c_{m-1} x^{m-1})
    for (std::uint32_t d = 2 * m_ - 1; d >= m_; --d) {
        const std::uint64_t top = prod[d];
        if (top == 0) continue;
        prod[d] = 0;
        for (std::uint32_t i = 0; i < m_; ++i)
            prod[d - m_ + i] = (prod[d - m_ + i] + (p_ - top) * modulus_[i]) % p_;
    }
    std::uint32_t out = 0;
    for (std::uint32_t i = m_; i-- > 0;) out = out * p_ + static_cast<std::uint32_t>(prod[i]);
    return FieldElement{out};
}

std::uint32_t Field::trace(FieldElement x) const noexcept {
    FieldElement acc{0}, term = x;
    for (std::uint32_t i = 0; i < m_; ++i) {
        acc = add(acc, term);
        term = pow(term, p_);
    }
    // Tr lands in the prime subfield, whose codes are exactly [0, p).
    return acc.code;
}

int Field::quadratic_character(FieldElement x) const {
    if (p_ == 2) throw Error(ErrorKind::CharacteristicTwo, "quadratic character needs odd characteristic");
    if (x.is_zero()) return 0;
    const FieldElement r = pow(x, (q_ - 1) / 2);
    return r.code == 1 ? 1 : -1;
}

std::vector<FieldElement> Field::elements() const {
    std::vector<FieldElement> out;
    out.reserve(q_);
    for (std::uint32_t c = 0; c < q_; ++c) out.emplace_back(c);
    return out;
}

}  // namespace rscwe
