#include "rscwe/cwe.hpp"

#include <future>
#include <numeric>
#include <thread>

#include "rscwe/error.hpp"

namespace rscwe {

void CwePolynomial::add(const ExponentVector& e, std::uint64_t coefficient) {
    if (e.size() != q_)
        throw Error(ErrorKind::ShapeMismatch,
                    "exponent vector has " + std::to_string(e.size()) + " entries, expected " + std::to_string(q_));
    const std::uint64_t degree = std::accumulate(e.begin(), e.end(), std::uint64_t{0});
    if (degree != length_)
        throw Error(ErrorKind::ShapeMismatch, "monomial " + format_exponents(e) + " has degree " +
                                                  std::to_string(degree) + ", code length is " +
                                                  std::to_string(length_));
    if (coefficient == 0) return;
    terms_[e] += coefficient;
}

void CwePolynomial::merge(const CwePolynomial& other) {
    if (other.q_ != q_ || other.length_ != length_)
        throw Error(ErrorKind::ShapeMismatch, "cannot merge enumerators of different shape");
    for (const auto& [e, c] : other.terms_) terms_[e] += c;
}

std::uint64_t CwePolynomial::mass() const noexcept {
    std::uint64_t s = 0;
    for (const auto& [e, c] : terms_) s += c;
    return s;
}

std::optional<std::size_t> WeightDistribution::min_positive_weight() const {
    for (std::size_t i = 1; i < a.size(); ++i)
        if (a[i] > 0) return i;
    return std::nullopt;
}

ExponentVector composition(std::uint32_t q, std::span<const FieldElement> word) {
    ExponentVector e(q, 0);
    for (auto s : word) ++e[s.code];
    return e;
}

CwePolynomial cwe_bruteforce(const CodeSpec& spec, std::uint64_t budget) {
    const std::uint32_t q = spec.field().q();
    const auto length = static_cast<std::uint32_t>(spec.length());
    const std::uint64_t total = spec.size();
    if (total == 0 || total > budget)
        throw Error(ErrorKind::SizeLimit, "code has " + std::to_string(q) + "^" + std::to_string(spec.k()) +
                                              " codewords, budget is " + std::to_string(budget));

    auto tally_slice = [&](std::uint32_t first, std::uint32_t last) {
        CwePolynomial part(q, length);
        for (std::uint32_t lead = first; lead < last; ++lead)
            enumerate_codeword_slice(spec, FieldElement{lead},
                                     [&](auto, auto word) { part.add(composition(q, word), 1); });
        return part;
    };

    const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    const unsigned workers = total >= (1u << 16) ? std::min<unsigned>(hw, q) : 1u;
    if (workers == 1) return tally_slice(0, q);

    std::vector<std::future<CwePolynomial>> parts;
    for (unsigned w = 0; w < workers; ++w) {
        const auto first = static_cast<std::uint32_t>(std::uint64_t{q} * w / workers);
        const auto last = static_cast<std::uint32_t>(std::uint64_t{q} * (w + 1) / workers);
        parts.push_back(std::async(std::launch::async, tally_slice, first, last));
    }
    CwePolynomial out(q, length);
    for (auto& f : parts) out.merge(f.get());
    return out;
}

namespace {

std::uint64_t halve(std::uint64_t x, const char* where) {
    if (x % 2 != 0)
        throw Error(ErrorKind::NonIntegralCoefficient, std::string(where) + ": odd numerator " + std::to_string(x));
    return x / 2;
}

/// w_rho^{1 + s * eta(rho - center)} over rho != center (and != skip).
void times_quadratic_profile(Monomial& mono, const Field& f, FieldElement center, int s,
                             std::optional<FieldElement> skip = std::nullopt) {
    for (auto rho : f.elements()) {
        if (rho == center || (skip && rho == *skip)) continue;
        const int power = 1 + s * f.quadratic_character(f.sub(rho, center));
        if (power > 0) mono.times(rho, static_cast<std::uint32_t>(power));
    }
}

/// prod over rho in the trace kernel (excluding 0 when `nonzero_only`) of
/// w_{scale * rho + shift}^2.
void times_trace_kernel_coset(Monomial& mono, const Field& f, FieldElement scale, FieldElement shift,
                              bool nonzero_only) {
    for (auto rho : f.elements()) {
        if (nonzero_only && rho.is_zero()) continue;
        if (f.trace(rho) != 0) continue;
        mono.times(f.add(f.mul(scale, rho), shift), 2);
    }
}

Monomial all_but(const Field& f, std::optional<FieldElement> excluded) {
    Monomial m(f.q());
    for (auto rho : f.elements())
        if (!excluded || rho != *excluded) m.times(rho);
    return m;
}

std::vector<FieldElement> nonzero(const Field& f) {
    auto all = f.elements();
    return {all.begin() + 1, all.end()};
}

}  // namespace

CwePolynomial cwe_rs2(const Field& f, std::span<const FieldElement> alpha, bool extended, Reading reading) {
    const auto n = static_cast<std::uint32_t>(alpha.size());
    if (n < 2) throw Error(ErrorKind::ParameterOutOfRange, "dimension-2 enumerator needs n >= 2");
    {
        std::vector<bool> seen(f.q(), false);
        for (auto a : alpha) {
            if (!f.contains(a) || seen[a.code])
                throw Error(ErrorKind::DuplicateEvaluationPoint, "evaluation points must be distinct field elements");
            seen[a.code] = true;
        }
    }
    const std::uint32_t q = f.q();
    CwePolynomial out(q, n + (extended ? 1 : 0));

    // Constant messages: every coordinate equal to gamma_0, extended coordinate 0.
    for (auto rho : f.elements()) {
        Monomial m(q);
        m.times(rho, n);
        if (extended && reading == Reading::Corrected) m.times(f.zero());
        out.add(m.exponents(), 1);
    }
    // gamma_0 + gamma_1 x with gamma_1 != 0: n distinct values.
    for (auto g0 : f.elements())
        for (auto g1 : nonzero(f)) {
            Monomial m(q);
            for (auto a : alpha) m.times(f.add(g0, f.mul(g1, a)));
            if (extended) m.times(g1);
            out.add(m.exponents(), 1);
        }
    return out;
}

CwePolynomial cwe_k3_fullfield(const Field& f, bool extended, Reading reading) {
    const std::uint32_t q = f.q();
    if (q < 3) throw Error(ErrorKind::ParameterOutOfRange, "full-field dimension-3 enumerator needs q >= 3");
    const std::uint64_t qq = q;
    CwePolynomial out(q, q + (extended ? 1 : 0));
    const FieldElement zero = f.zero();

    if (f.p() == 2) {
        if (!extended) {
            for (auto rho : f.elements()) out.add(Monomial(q).times(rho, q).exponents(), 1);
            out.add(all_but(f, std::nullopt).exponents(), (qq - 1) * 2 * qq);
            for (auto g1 : nonzero(f))
                for (auto g0 : f.elements()) {
                    Monomial m(q);
                    times_trace_kernel_coset(m, f, g1, g0, false);
                    out.add(m.exponents(), qq - 1);
                }
        } else {
            for (auto rho : f.elements()) out.add(Monomial(q).times(zero).times(rho, q).exponents(), 1);
            out.add(all_but(f, std::nullopt).times(zero).exponents(), (qq - 1) * qq);
            for (auto g2 : nonzero(f)) out.add(all_but(f, std::nullopt).times(g2).exponents(), qq);
            for (auto g2 : nonzero(f))
                for (auto g1 : nonzero(f))
                    for (auto g0 : f.elements()) {
                        Monomial m(q);
                        m.times(g2);
                        times_trace_kernel_coset(m, f, g1, g0, false);
                        out.add(m.exponents(), 1);
                    }
        }
        return out;
    }

    if (!extended) {
        for (auto rho : f.elements()) out.add(Monomial(q).times(rho, q).exponents(), 1);
        out.add(all_but(f, std::nullopt).exponents(), (qq - 1) * qq);
        const std::uint64_t c = halve((qq - 1) * qq, "full-field RS vertex terms");
        for (int eps : {-1, 1})
            for (auto g1 : f.elements()) {
                Monomial m(q);
                m.times(g1);
                times_quadratic_profile(m, f, g1, eps);
                out.add(m.exponents(), c);
            }
    } else {
        const std::uint64_t lead = reading == Reading::Corrected ? 1 : qq;
        for (auto rho : f.elements()) out.add(Monomial(q).times(zero).times(rho, q).exponents(), lead);
        out.add(all_but(f, std::nullopt).times(zero).exponents(), (qq - 1) * qq);
        for (auto g2 : nonzero(f)) {
            const int eta2 = f.quadratic_character(g2);
            for (auto g1 : f.elements()) {
                Monomial m(q);
                m.times(g2).times(g1);
                times_quadratic_profile(m, f, g1, eta2);
                out.add(m.exponents(), qq);
            }
        }
    }
    return out;
}

CwePolynomial cwe_k3_punctured(const Field& f, FieldElement beta, bool extended, Reading reading) {
    const std::uint32_t q = f.q();
    if (q < 4) throw Error(ErrorKind::ParameterOutOfRange, "punctured dimension-3 enumerator needs q >= 4");
    if (!f.contains(beta)) throw Error(ErrorKind::InvalidArgument, "punctured point not in field");
    // The enumerator does not depend on beta; it only fixes the evaluation set.
    const std::uint64_t qq = q;
    CwePolynomial out(q, q - 1 + (extended ? 1 : 0));
    const FieldElement zero = f.zero();

    if (f.p() == 2) {
        if (!extended) {
            if (reading == Reading::Corrected) {
                for (auto rho : f.elements()) out.add(Monomial(q).times(rho, q - 1).exponents(), 1);
                for (auto g : f.elements()) out.add(all_but(f, g).exponents(), 2 * (qq - 1));
            } else {
                for (auto rho : f.elements()) out.add(Monomial(q).times(rho, q).exponents(), 1);
                out.add(all_but(f, std::nullopt).exponents(), 2 * (qq - 1));
            }
            for (auto g1 : nonzero(f))
                for (auto g0 : f.elements()) {
                    Monomial m(q);
                    m.times(g0);
                    times_trace_kernel_coset(m, f, g1, g0, true);
                    out.add(m.exponents(), qq - 1);
                }
        } else {
            for (auto rho : f.elements()) out.add(Monomial(q).times(zero).times(rho, q - 1).exponents(), 1);
            for (auto g1 : f.elements()) out.add(all_but(f, g1).times(zero).exponents(), qq - 1);
            for (auto g2 : nonzero(f))
                for (auto g1 : f.elements()) out.add(all_but(f, g1).times(g2).exponents(), 1);
            for (auto g2 : nonzero(f))
                for (auto g1 : nonzero(f))
                    for (auto g0 : f.elements()) {
                        Monomial m(q);
                        m.times(g2).times(g0);
                        times_trace_kernel_coset(m, f, g1, g0, true);
                        out.add(m.exponents(), 1);
                    }
        }
        return out;
    }

    if (!extended) {
        for (auto rho : f.elements()) out.add(Monomial(q).times(rho, q - 1).exponents(), 1);
        for (auto g : f.elements()) out.add(all_but(f, g).exponents(), qq - 1);
        const std::uint64_t half = halve(qq - 1, "punctured RS vertex terms");
        for (int eps : {-1, 1})
            for (auto g1 : f.elements()) {
                Monomial m(q);
                times_quadratic_profile(m, f, g1, eps);
                out.add(m.exponents(), half);
            }
        for (int eps : {-1, 1})
            for (auto g1 : f.elements())
                for (auto g0 : f.elements()) {
                    if (f.quadratic_character(g0) != eps) continue;
                    const FieldElement shifted = f.add(g0, g1);
                    Monomial m(q);
                    m.times(g1).times(shifted);
                    times_quadratic_profile(m, f, g1, eps, shifted);
                    out.add(m.exponents(), qq - 1);
                }
    } else {
        for (auto rho : f.elements()) out.add(Monomial(q).times(zero).times(rho, q - 1).exponents(), 1);
        for (auto g0 : f.elements()) out.add(all_but(f, g0).times(zero).exponents(), qq - 1);
        for (auto g2 : nonzero(f)) {
            const int eta2 = f.quadratic_character(g2);
            for (auto g1 : f.elements()) {
                Monomial m(q);
                m.times(g2);
                times_quadratic_profile(m, f, g1, eta2);
                out.add(m.exponents(), 1);
            }
        }
        for (int eps : {-1, 1})
            for (auto g2 : nonzero(f)) {
                if (f.quadratic_character(g2) != eps) continue;
                for (auto g1 : f.elements())
                    for (auto g0 : f.elements()) {
                        if (f.quadratic_character(g0) != eps) continue;
                        const FieldElement shifted = f.add(g0, g1);
                        Monomial m(q);
                        m.times(g2).times(g1).times(shifted);
                        times_quadratic_profile(m, f, g1, eps, shifted);
                        out.add(m.exponents(), 2);
                    }
            }
    }
    return out;
}

WeightDistribution weight_distribution(const CwePolynomial& cwe) {
    WeightDistribution wd;
    wd.a.assign(cwe.length() + 1, 0);
    for (const auto& [e, c] : cwe.terms()) wd.a[cwe.length() - e[0]] += c;
    return wd;
}

CweComparison cwe_equal(const CwePolynomial& a, const CwePolynomial& b) {
    if (a.q() != b.q() || a.length() != b.length())
        throw Error(ErrorKind::ShapeMismatch, "comparing enumerators over q=" + std::to_string(a.q()) + ", n=" +
                                                  std::to_string(a.length()) + " and q=" + std::to_string(b.q()) +
                                                  ", n=" + std::to_string(b.length()));
    auto ia = a.terms().begin(), ib = b.terms().begin();
    const auto ea = a.terms().end(), eb = b.terms().end();
    while (ia != ea || ib != eb) {
        if (ib == eb || (ia != ea && ia->first < ib->first))
            return {false, TermMismatch{ia->first, ia->second, 0}};
        if (ia == ea || ib->first < ia->first) return {false, TermMismatch{ib->first, 0, ib->second}};
        if (ia->second != ib->second) return {false, TermMismatch{ia->first, ia->second, ib->second}};
        ++ia;
        ++ib;
    }
    return {};
}

std::string format_exponents(const ExponentVector& e) {
    std::string s = "[";
    for (std::size_t i = 0; i < e.size(); ++i) s += (i ? "," : "") + std::to_string(e[i]);
    return s + "]";
}

}  // namespace rscwe
