#include "rscwe/counts.hpp"

#include "rscwe/error.hpp"

namespace rscwe {

namespace {

FieldElement eval_quadratic(const Field& f, FieldElement a2, FieldElement a1, FieldElement a0, FieldElement x) {
    return f.add(f.mul(f.add(f.mul(a2, x), a1), x), a0);
}

void require_odd(const Field& f) {
    if (f.p() == 2) throw Error(ErrorKind::CharacteristicTwo, "operation needs odd characteristic");
}

}  // namespace

std::uint64_t count_oracle(const Field& field, const CountQuery& query) {
    std::uint64_t n = 0;
    for (auto x : field.elements()) {
        if (query.punctured && x == *query.punctured) continue;
        if (eval_quadratic(field, query.a2, query.a1, query.a0, x) == query.rho) ++n;
    }
    return n;
}

FieldElement quadratic_vertex(const Field& field, FieldElement a2, FieldElement a1, FieldElement a0) {
    require_odd(field);
    if (a2.is_zero()) throw Error(ErrorKind::DegenerateQuadratic, "leading coefficient is zero");
    const FieldElement four = field.from_integer(4);
    const FieldElement num = field.sub(field.mul(four, field.mul(a0, a2)), field.mul(a1, a1));
    return field.div(num, field.mul(four, a2));
}

std::uint64_t count_full_field(const Field& f, const CountQuery& query) {
    const auto& [a2, a1, a0, rho, punctured] = query;
    if (a2.is_zero()) {
        if (!a1.is_zero()) return 1;
        return rho == a0 ? f.q() : 0;
    }
    if (f.p() == 2) {
        if (a1.is_zero()) return 1;
        const FieldElement t = f.mul(f.div(a2, f.mul(a1, a1)), f.sub(rho, a0));
        return f.trace(t) == 0 ? 2 : 0;
    }
    const FieldElement vertex = quadratic_vertex(f, a2, a1, a0);
    if (rho == vertex) return 1;
    return static_cast<std::uint64_t>(1 + f.quadratic_character(a2) * f.quadratic_character(f.sub(rho, vertex)));
}

std::uint64_t count_punctured(const Field& f, const CountQuery& query) {
    if (!query.punctured) throw Error(ErrorKind::InvalidArgument, "count_punctured needs a punctured point");
    const auto& [a2, a1, a0, rho, punctured] = query;
    const FieldElement beta = *punctured;
    const FieldElement at_beta = eval_quadratic(f, a2, a1, a0, beta);

    if (a2.is_zero()) {
        if (a1.is_zero()) return rho == a0 ? f.q() - 1 : 0;
        return rho == at_beta ? 0 : 1;
    }
    if (f.p() == 2) {
        if (a1.is_zero()) return rho == at_beta ? 0 : 1;
        if (rho == at_beta) return 1;
        const FieldElement t = f.mul(f.div(a2, f.mul(a1, a1)), f.sub(rho, a0));
        return f.trace(t) == 0 ? 2 : 0;
    }
    const FieldElement vertex = quadratic_vertex(f, a2, a1, a0);
    if (rho == vertex) return rho == at_beta ? 0 : 1;
    const int s = f.quadratic_character(a2) * f.quadratic_character(f.sub(rho, vertex));
    // rho == at_beta is attained, so s == +1 there and the count is 1.
    return static_cast<std::uint64_t>(rho == at_beta ? s : 1 + s);
}

std::uint64_t count_closed_form(const Field& field, const CountQuery& query) {
    return query.punctured ? count_punctured(field, query) : count_full_field(field, query);
}

std::uint32_t m_cardinality(const Field& f, FieldElement beta, FieldElement g2, FieldElement g1, FieldElement g0) {
    require_odd(f);
    if (g2.is_zero()) throw Error(ErrorKind::DegenerateQuadratic, "gamma_2 must be nonzero");
    (void)beta;
    if (g0 == g1) return 1;
    return static_cast<std::uint32_t>(1 + f.quadratic_character(g2) * f.quadratic_character(f.sub(g0, g1)));
}

std::uint32_t m_oracle(const Field& f, FieldElement beta, FieldElement g2, FieldElement g1, FieldElement g0) {
    require_odd(f);
    if (g2.is_zero()) return 0;  // a2 = g2 must be a valid leading coefficient
    std::uint32_t n = 0;
    const FieldElement a2 = g2;
    for (auto a1 : f.elements()) {
        const FieldElement a0 = f.sub(g0, f.add(f.mul(a2, f.mul(beta, beta)), f.mul(a1, beta)));
        if (quadratic_vertex(f, a2, a1, a0) == g1) ++n;
    }
    return n;
}

}  // namespace rscwe
