#pragma once

#include <cstdint>
#include <optional>

#include "rscwe/gf.hpp"

namespace rscwe {

/// Number of x in a domain with a2 x^2 + a1 x + a0 == rho. The domain is the
/// whole field, or the field with `punctured` removed.
struct CountQuery {
    FieldElement a2;
    FieldElement a1;
    FieldElement a0;
    FieldElement rho;
    std::optional<FieldElement> punctured;
};

/// Direct iteration over the domain.
std::uint64_t count_oracle(const Field& field, const CountQuery& query);

/// Closed-form count over the whole field (ignores `query.punctured`).
///   a2 = 0:        q, 0 or 1 depending on a1 and rho - a0
///   p = 2:         1 if a1 = 0, else 2 or 0 by Tr(a2 a1^{-2} (rho - a0))
///   p odd:         1 at the vertex value, else 1 + eta(a2) eta(rho - vertex)
std::uint64_t count_full_field(const Field& field, const CountQuery& query);

/// Closed-form count over F_q \ {beta}. Requires `query.punctured`.
std::uint64_t count_punctured(const Field& field, const CountQuery& query);

/// Dispatches on `query.punctured`.
std::uint64_t count_closed_form(const Field& field, const CountQuery& query);

/// Vertex value (4 a2)^{-1} (4 a0 a2 - a1^2) of a quadratic; odd p, a2 != 0.
FieldElement quadratic_vertex(const Field& field, FieldElement a2, FieldElement a1, FieldElement a0);

/// |{(a0, a1, a2) : a2 = g2, vertex(a2, a1, a0) = g1, a2 b^2 + a1 b + a0 = g0}|
/// in closed form: 1 if g0 == g1, else 1 + eta(g2) eta(g0 - g1).
/// Throws CharacteristicTwo for p == 2 and DegenerateQuadratic for g2 == 0.
std::uint32_t m_cardinality(const Field& field, FieldElement beta, FieldElement g2, FieldElement g1,
                            FieldElement g0);

/// Same cardinality by enumerating a1 (a2 and a0 are then forced).
std::uint32_t m_oracle(const Field& field, FieldElement beta, FieldElement g2, FieldElement g1, FieldElement g0);

}  // namespace rscwe
