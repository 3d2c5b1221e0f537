#include "rscwe/codes.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

#include "rscwe/error.hpp"

namespace rscwe {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

void require_distinct(const Field& field, std::span<const FieldElement> points) {
    std::vector<bool> seen(field.q(), false);
    for (auto x : points) {
        if (!field.contains(x))
            throw Error(ErrorKind::InvalidArgument, "evaluation point " + std::to_string(x.code) + " not in field");
        if (seen[x.code])
            throw Error(ErrorKind::DuplicateEvaluationPoint, "evaluation point " + std::to_string(x.code) + " repeated");
        seen[x.code] = true;
    }
}

void encode_into(const CodeSpec& spec, std::span<const FieldElement> msg, Codeword& out) {
    const Field& f = spec.field();
    const auto alpha = spec.alpha();
    for (std::size_t i = 0; i < alpha.size(); ++i) {
        FieldElement acc{0};
        for (std::size_t j = msg.size(); j-- > 0;) acc = f.add(f.mul(acc, alpha[i]), msg[j]);
        out[i] = acc;
    }
    if (spec.extended()) out[alpha.size()] = msg.back();
}

/// Odometer over the first `free` message coordinates, last-free fastest.
void walk(const CodeSpec& spec, MessagePoly& msg, std::size_t free, const CodewordVisitor& visit) {
    const std::uint32_t q = spec.field().q();
    Codeword word(spec.length());
    std::fill(msg.begin(), msg.begin() + static_cast<std::ptrdiff_t>(free), FieldElement{0});
    while (true) {
        encode_into(spec, msg, word);
        visit(msg, word);
        std::size_t pos = free;
        while (pos > 0) {
            --pos;
            if (msg[pos].code + 1 < q) {
                ++msg[pos].code;
                break;
            }
            msg[pos].code = 0;
            if (pos == 0) return;
        }
        if (free == 0) return;
    }
}

}  // namespace

std::vector<FieldElement> make_eval_set(const Field& field, const EvalKind& kind) {
    return std::visit(
        Overloaded{
            [&](const eval::Full&) { return field.elements(); },
            [&](const eval::Punctured& p) {
                if (!field.contains(p.beta))
                    throw Error(ErrorKind::InvalidArgument, "punctured point not in field");
                std::vector<FieldElement> out;
                for (auto x : field.elements())
                    if (x != p.beta) out.push_back(x);
                return out;
            },
            [&](const eval::Primitive&) {
                auto all = field.elements();
                return std::vector<FieldElement>(all.begin() + 1, all.end());
            },
            [&](const eval::Standard&) { return field.elements(); },
            [&](const eval::Custom& c) {
                require_distinct(field, c.points);
                return c.points;
            },
        },
        kind);
}

CodeSpec::CodeSpec(Field field, std::uint32_t k, std::vector<FieldElement> alpha, bool extended)
    : field_(std::move(field)), k_(k), alpha_(std::move(alpha)), extended_(extended) {
    if (k_ == 0) throw Error(ErrorKind::ParameterOutOfRange, "dimension k must be at least 1");
    require_distinct(field_, alpha_);
    if (alpha_.size() < k_ || alpha_.size() > field_.q())
        throw Error(ErrorKind::ParameterOutOfRange, "need k <= n <= q, got k=" + std::to_string(k_) +
                                                        " n=" + std::to_string(alpha_.size()));
}

std::uint64_t CodeSpec::size() const noexcept {
    std::uint64_t s = 1;
    for (std::uint32_t i = 0; i < k_; ++i) {
        if (s > UINT64_MAX / field_.q()) return 0;
        s *= field_.q();
    }
    return s;
}

Codeword encode(const CodeSpec& spec, std::span<const FieldElement> msg) {
    if (msg.size() != spec.k())
        throw Error(ErrorKind::DimensionMismatch,
                    "message has " + std::to_string(msg.size()) + " coefficients, code dimension is " +
                        std::to_string(spec.k()));
    for (auto c : msg)
        if (!spec.field().contains(c)) throw Error(ErrorKind::InvalidArgument, "message coefficient not in field");
    Codeword out(spec.length());
    encode_into(spec, msg, out);
    return out;
}

void enumerate_codewords(const CodeSpec& spec, const CodewordVisitor& visit, std::uint64_t budget) {
    const std::uint64_t total = spec.size();
    if (total == 0 || total > budget)
        throw Error(ErrorKind::SizeLimit, "code has q^k = " + std::to_string(spec.field().q()) + "^" +
                                              std::to_string(spec.k()) + " codewords, budget is " +
                                              std::to_string(budget));
    MessagePoly msg(spec.k());
    walk(spec, msg, spec.k(), visit);
}

void enumerate_codeword_slice(const CodeSpec& spec, FieldElement lead, const CodewordVisitor& visit) {
    if (!spec.field().contains(lead)) throw Error(ErrorKind::InvalidArgument, "slice coefficient not in field");
    MessagePoly msg(spec.k());
    msg.back() = lead;
    walk(spec, msg, spec.k() - 1, visit);
}

std::uint64_t codeword_budget_from_env() {
    if (const char* env = std::getenv("RSCWE_BUDGET")) {
        char* end = nullptr;
        const unsigned long long v = std::strtoull(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) return v;
    }
    return kDefaultCodewordBudget;
}

}  // namespace rscwe
