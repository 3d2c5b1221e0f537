#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "rscwe/cwe.hpp"

namespace rscwe {

/// An enumerator together with the code it describes.
struct CweRecord {
    std::uint32_t p = 0;
    std::uint32_t m = 0;
    std::uint32_t k = 0;
    bool extended = false;
    std::vector<std::uint32_t> alpha;  // element codes
    CwePolynomial cwe{0, 0};

    friend bool operator==(const CweRecord&, const CweRecord&) = default;
};

/// Canonical compact JSON: keys sorted, terms sorted by exponent vector,
///   {"alpha":[..],"extended":b,"k":k,"m":m,"n":len,"p":p,"terms":[{"c":c,"e":[..]},..]}
/// where "n" is the code length (total degree of every monomial).
std::string serialize_json(const CweRecord& record);

/// Inverse of serialize_json. Throws ParseError naming the offending JSON path.
CweRecord deserialize_json(std::string_view text);

/// One monomial per line, `c * w[i]^t w[j]^t ...`, in the JSON term order.
std::string render_text(const CwePolynomial& cwe);

std::string serialize_weights_json(const CweRecord& record, const WeightDistribution& wd);
std::string render_weights_text(const WeightDistribution& wd);

}  // namespace rscwe
