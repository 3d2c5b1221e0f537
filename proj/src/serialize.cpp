#include "rscwe/serialize.hpp"

#include <sstream>

#include "json.hpp"
#include "rscwe/error.hpp"
#include "rscwe/gf.hpp"

namespace rscwe {

using nlohmann::json;

namespace {

[[noreturn]] void parse_error(const std::string& path, const std::string& what) {
    throw Error(ErrorKind::ParseError, (path.empty() ? "/" : path) + ": " + what);
}

const json& field_at(const json& obj, const char* key) {
    auto it = obj.find(key);
    if (it == obj.end()) parse_error("", std::string("missing key \"") + key + "\"");
    return *it;
}

std::uint64_t as_unsigned(const json& v, const std::string& path) {
    if (!v.is_number_unsigned()) parse_error(path, "expected a nonnegative integer");
    return v.get<std::uint64_t>();
}

std::uint32_t as_u32(const json& v, const std::string& path) {
    const std::uint64_t x = as_unsigned(v, path);
    if (x > UINT32_MAX) parse_error(path, "value out of range");
    return static_cast<std::uint32_t>(x);
}

json header(const CweRecord& r) {
    json j;
    j["p"] = r.p;
    j["m"] = r.m;
    j["k"] = r.k;
    j["n"] = r.cwe.length();
    j["extended"] = r.extended;
    j["alpha"] = r.alpha;
    return j;
}

}  // namespace

std::string serialize_json(const CweRecord& record) {
    json j = header(record);
    json terms = json::array();
    for (const auto& [e, c] : record.cwe.terms()) terms.push_back(json{{"e", e}, {"c", c}});
    j["terms"] = std::move(terms);
    return j.dump();
}

CweRecord deserialize_json(std::string_view text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        parse_error("", e.what());
    }
    if (!j.is_object()) parse_error("", "expected an object");

    CweRecord r;
    r.p = as_u32(field_at(j, "p"), "/p");
    r.m = as_u32(field_at(j, "m"), "/m");
    r.k = as_u32(field_at(j, "k"), "/k");
    const std::uint32_t length = as_u32(field_at(j, "n"), "/n");
    const json& ext = field_at(j, "extended");
    if (!ext.is_boolean()) parse_error("/extended", "expected a boolean");
    r.extended = ext.get<bool>();

    if (!is_prime(r.p)) parse_error("/p", "not a prime");
    if (r.m == 0 || r.m > 32) parse_error("/m", "out of range");
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < r.m; ++i) {
        q *= r.p;
        if (q > UINT32_MAX) parse_error("/m", "field order out of range");
    }

    const json& alpha = field_at(j, "alpha");
    if (!alpha.is_array()) parse_error("/alpha", "expected an array");
    for (std::size_t i = 0; i < alpha.size(); ++i) {
        const std::string path = "/alpha/" + std::to_string(i);
        const std::uint32_t code = as_u32(alpha[i], path);
        if (code >= q) parse_error(path, "element code out of range");
        r.alpha.push_back(code);
    }
    if (length != r.alpha.size() + (r.extended ? 1 : 0))
        parse_error("/n", "code length does not match alpha and extended flag");

    r.cwe = CwePolynomial(static_cast<std::uint32_t>(q), length);
    const json& terms = field_at(j, "terms");
    if (!terms.is_array()) parse_error("/terms", "expected an array");
    const ExponentVector* previous = nullptr;
    for (std::size_t t = 0; t < terms.size(); ++t) {
        const std::string path = "/terms/" + std::to_string(t);
        const json& term = terms[t];
        if (!term.is_object()) parse_error(path, "expected an object");
        auto ie = term.find("e");
        auto ic = term.find("c");
        if (ie == term.end()) parse_error(path, "missing key \"e\"");
        if (ic == term.end()) parse_error(path, "missing key \"c\"");
        if (!ie->is_array()) parse_error(path + "/e", "expected an array");
        if (ie->size() != q)
            parse_error(path + "/e", "expected " + std::to_string(q) + " exponents, got " + std::to_string(ie->size()));
        ExponentVector e;
        e.reserve(q);
        std::uint64_t degree = 0;
        for (std::size_t i = 0; i < ie->size(); ++i) {
            e.push_back(as_u32((*ie)[i], path + "/e/" + std::to_string(i)));
            degree += e.back();
        }
        if (degree != length) parse_error(path + "/e", "exponents sum to " + std::to_string(degree));
        const std::uint64_t c = as_unsigned(*ic, path + "/c");
        if (c == 0) parse_error(path + "/c", "coefficient must be positive");
        if (previous && !(*previous < e)) parse_error(path + "/e", "terms not strictly increasing");
        r.cwe.add(e, c);
        previous = &r.cwe.terms().find(e)->first;
    }
    return r;
}

std::string render_text(const CwePolynomial& cwe) {
    std::ostringstream os;
    for (const auto& [e, c] : cwe.terms()) {
        os << c << " *";
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] != 0) os << " w[" << i << "]^" << e[i];
        os << '\n';
    }
    return os.str();
}

std::string serialize_weights_json(const CweRecord& record, const WeightDistribution& wd) {
    json j = header(record);
    j["weights"] = wd.a;
    return j.dump();
}

std::string render_weights_text(const WeightDistribution& wd) {
    std::ostringstream os;
    for (std::size_t i = 0; i < wd.a.size(); ++i) os << "A[" << i << "] = " << wd.a[i] << '\n';
    return os.str();
}

}  // namespace rscwe
