// Acceptance sweep: one line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "rscwe/counts.hpp"
#include "rscwe/cwe.hpp"
#include "rscwe/cyclo.hpp"
#include "rscwe/errata.hpp"
#include "rscwe/error.hpp"
#include "rscwe/serialize.hpp"
#include "test_support.hpp"

using namespace rscwe;
using rscwe::testing::prime_powers;
using rscwe::testing::random_element;
using rscwe::testing::random_nonzero;

namespace {

std::vector<CweRecord> produced;

struct Outcome {
    bool ok = true;
    std::size_t checks = 0;
    std::string first_failure;

    void expect(bool cond, const std::string& what) {
        ++checks;
        if (!cond && ok) first_failure = what;
        ok = ok && cond;
    }
};

std::string field_name(const Field& f) { return "GF(" + std::to_string(f.p()) + "^" + std::to_string(f.m()) + ")"; }

std::vector<std::uint32_t> codes_of(std::span<const FieldElement> xs) {
    std::vector<std::uint32_t> out;
    for (auto x : xs) out.push_back(x.code);
    return out;
}

/// Compares a closed form against brute force and keeps the result for the structural suite.
void oracle_check(Outcome& out, const Field& f, std::uint32_t k, const std::vector<FieldElement>& alpha,
                  bool extended, const CwePolynomial& formula, const std::string& label) {
    const CodeSpec spec(f, k, alpha, extended);
    const auto brute = cwe_bruteforce(spec);
    const auto cmp = cwe_equal(formula, brute);
    std::string why = label;
    if (!cmp.equal)
        why += " first difference at " + format_exponents(cmp.first_difference->exponents) + ": formula " +
               std::to_string(cmp.first_difference->left) + ", brute " + std::to_string(cmp.first_difference->right);
    out.expect(cmp.equal, why);
    produced.push_back(CweRecord{f.p(), f.m(), k, extended, codes_of(alpha), brute});
}

Outcome criterion1(std::mt19937_64& rng) {
    Outcome out;
    for (auto [p, m] : prime_powers(27)) {
        if (p > 5) continue;
        const Field f = Field::build(p, m);
        std::vector<std::vector<FieldElement>> sets{make_eval_set(f, eval::Full{}), make_eval_set(f, eval::Standard{})};
        // GF(2) has a single nonzero element, too few points for dimension 2.
        if (f.q() > 2) sets.push_back(make_eval_set(f, eval::Primitive{}));
        while (sets.size() < 30) {
            auto alpha = f.elements();
            std::shuffle(alpha.begin(), alpha.end(), rng);
            alpha.resize(std::uniform_int_distribution<std::size_t>(2, f.q())(rng));
            sets.push_back(std::move(alpha));
        }
        for (std::size_t i = 0; i < sets.size(); ++i)
            for (bool extended : {false, true})
                oracle_check(out, f, 2, sets[i], extended, cwe_rs2(f, sets[i], extended),
                             field_name(f) + " set " + std::to_string(i) + (extended ? " ERS" : " RS"));
    }
    return out;
}

const std::vector<std::pair<std::uint32_t, std::uint32_t>> kDim3Fields{
    {3, 1}, {2, 2}, {5, 1}, {7, 1}, {2, 3}, {3, 2}, {11, 1}, {13, 1}, {2, 4}, {5, 2}, {3, 3}};

Outcome criterion2() {
    Outcome out;
    for (auto [p, m] : kDim3Fields) {
        const Field f = Field::build(p, m);
        for (bool extended : {false, true})
            oracle_check(out, f, 3, f.elements(), extended, cwe_k3_fullfield(f, extended),
                         field_name(f) + (extended ? " ERS" : " RS"));
    }
    // The printed extended leading coefficient must be rejected by the oracle and documented.
    const Field gf3 = Field::build(3, 1);
    const auto printed = cwe_k3_fullfield(gf3, true, Reading::AsPrinted);
    out.expect(!cwe_equal(printed, cwe_bruteforce(CodeSpec(gf3, 3, gf3.elements(), true))).equal,
               "printed extended full-field form unexpectedly matches brute force");
    bool ledger_ok = true;
    const std::string ledger = explain_errata(&ledger_ok);
    out.expect(ledger_ok, "errata ledger self-checks failed");
    out.expect(ledger.find("[E2]") != std::string::npos, "errata ledger lacks the leading-coefficient entry");
    return out;
}

Outcome criterion3() {
    Outcome out;
    for (auto [p, m] : kDim3Fields) {
        const Field f = Field::build(p, m);
        if (f.q() < 4) continue;
        for (auto beta : {FieldElement{0}, f.primitive_element()})
            for (bool extended : {false, true})
                oracle_check(out, f, 3, make_eval_set(f, eval::Punctured{beta}), extended,
                             cwe_k3_punctured(f, beta, extended),
                             field_name(f) + " beta " + std::to_string(beta.code) + (extended ? " ERS" : " RS"));
    }
    return out;
}

Outcome criterion4() {
    Outcome out;
    for (auto [p, m] : prime_powers(2197, true)) {
        if (p > 13) continue;
        const Field f = Field::build(p, m);
        const auto g = gauss_sum(f);
        const long eta = f.quadratic_character(f.neg(f.one()));
        out.expect(g * g == CyclotomicInt::constant(p, eta * static_cast<long>(f.q())), field_name(f) + " G^2");
        const auto z = g.embed();
        const auto want = gauss_sum_closed_form(p, m);
        out.expect(std::abs(z.real() - want.real()) < 1e-9 && std::abs(z.imag() - want.imag()) < 1e-9,
                   field_name(f) + " embedding");
    }
    return out;
}

Outcome criterion5(std::mt19937_64& rng) {
    Outcome out;
    for (auto [p, m] : prime_powers(81, true)) {
        const Field f = Field::build(p, m);
        const auto g = gauss_sum(f);
        for (int i = 0; i < 100; ++i) {
            const auto a2 = random_nonzero(f, rng), a1 = random_element(f, rng), a0 = random_element(f, rng);
            out.expect(quadratic_sum(f, a2, a1, a0) == quadratic_sum_closed_form(f, g, a2, a1, a0),
                       field_name(f) + " triple (" + std::to_string(a2.code) + "," + std::to_string(a1.code) + "," +
                           std::to_string(a0.code) + ")");
        }
    }
    return out;
}

void check_count(Outcome& out, const Field& f, const CountQuery& query) {
    if (count_closed_form(f, query) != count_oracle(f, query))
        out.expect(false, field_name(f) + " count a2=" + std::to_string(query.a2.code) + " a1=" +
                              std::to_string(query.a1.code) + " a0=" + std::to_string(query.a0.code) +
                              " rho=" + std::to_string(query.rho.code) +
                              (query.punctured ? " beta=" + std::to_string(query.punctured->code) : ""));
    else
        ++out.checks;
}

void check_m(Outcome& out, const Field& f, FieldElement beta, FieldElement g2, FieldElement g1, FieldElement g0) {
    if (m_cardinality(f, beta, g2, g1, g0) != m_oracle(f, beta, g2, g1, g0))
        out.expect(false, field_name(f) + " M beta=" + std::to_string(beta.code) + " g=(" + std::to_string(g2.code) +
                              "," + std::to_string(g1.code) + "," + std::to_string(g0.code) + ")");
    else
        ++out.checks;
}

Outcome criterion6(std::mt19937_64& rng) {
    Outcome out;
    for (auto [p, m] : prime_powers(9)) {
        const Field f = Field::build(p, m);
        const auto all = f.elements();
        for (auto a2 : all)
            for (auto a1 : all)
                for (auto a0 : all)
                    for (auto rho : all) {
                        check_count(out, f, {a2, a1, a0, rho, std::nullopt});
                        for (auto beta : all) check_count(out, f, {a2, a1, a0, rho, beta});
                    }
        if (p == 2) continue;
        for (auto beta : all)
            for (auto g2 : all) {
                if (g2.is_zero()) continue;
                for (auto g1 : all)
                    for (auto g0 : all) check_m(out, f, beta, g2, g1, g0);
            }
    }
    for (auto [p, m] : prime_powers(64)) {
        const Field f = Field::build(p, m);
        std::bernoulli_distribution punctured(0.5);
        for (int i = 0; i < 10000; ++i) {
            CountQuery query{random_element(f, rng), random_element(f, rng), random_element(f, rng),
                             random_element(f, rng), std::nullopt};
            if (punctured(rng)) query.punctured = random_element(f, rng);
            check_count(out, f, query);
        }
        if (p == 2 || f.q() > 27) continue;
        for (int i = 0; i < 10000; ++i)
            check_m(out, f, random_element(f, rng), random_nonzero(f, rng), random_element(f, rng),
                    random_element(f, rng));
    }
    return out;
}

Outcome criterion7() {
    Outcome out;
    for (const auto& rec : produced) {
        const auto& cwe = rec.cwe;
        const std::string label =
            "p=" + std::to_string(rec.p) + " m=" + std::to_string(rec.m) + " k=" + std::to_string(rec.k) +
            " n=" + std::to_string(cwe.length()) + (rec.extended ? " ERS" : " RS");
        std::uint64_t qk = 1;
        for (std::uint32_t i = 0; i < rec.k; ++i) qk *= cwe.q();
        out.expect(cwe.mass() == qk, label + " mass");
        bool degrees = true;
        for (const auto& [e, c] : cwe.terms()) {
            std::uint64_t s = 0;
            for (auto t : e) s += t;
            degrees = degrees && s == cwe.length();
        }
        out.expect(degrees, label + " exponent sums");
        const auto wd = weight_distribution(cwe);
        out.expect(!wd.a.empty() && wd.a[0] == 1, label + " A[0]");
        out.expect(wd.min_positive_weight() == cwe.length() - rec.k + 1, label + " minimum weight");
        const std::string text = serialize_json(rec);
        const auto back = deserialize_json(text);
        out.expect(back == rec && serialize_json(back) == text, label + " JSON round trip");
    }
    out.expect(!produced.empty(), "no enumerators were produced");
    return out;
}

struct Criterion {
    int id;
    const char* name;
    double budget_s;
    std::function<Outcome()> run;
};

}  // namespace

int main() {
    std::mt19937_64 rng(rscwe::testing::kSeed);
    std::printf("seed %llu\n", static_cast<unsigned long long>(rscwe::testing::kSeed));

    const std::vector<Criterion> criteria{
        {1, "dimension-2 RS/ERS closed form vs brute force, p in {2,3,5}, q <= 27", 10, [&] { return criterion1(rng); }},
        {2, "dimension-3 full-field closed form vs brute force", 60, criterion2},
        {3, "dimension-3 punctured closed form vs brute force", 60, criterion3},
        {4, "Gauss sum: G^2 = eta(-1) q and complex embedding, odd p <= 13, q <= 2197", 30, criterion4},
        {5, "quadratic character sums vs closed form, odd q <= 81", 10, [&] { return criterion5(rng); }},
        {6, "solution counts and M cardinality vs oracles", 20, [&] { return criterion6(rng); }},
        {7, "structural suite on every enumerator from criteria 1-3", 0, criterion7},
    };

    bool all_ok = true;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome outcome;
        try {
            outcome = c.run();
        } catch (const std::exception& e) {
            outcome.expect(false, std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const bool in_time = c.budget_s <= 0 || secs < c.budget_s;
        const bool pass = outcome.ok && in_time;
        all_ok = all_ok && pass;
        std::printf("[%s] C%d %s: %zu checks, %.2f s", pass ? "PASS" : "FAIL", c.id, c.name, outcome.checks, secs);
        if (c.budget_s > 0) std::printf(" (budget %.0f s)", c.budget_s);
        if (!outcome.ok) std::printf(" -- %s", outcome.first_failure.c_str());
        if (!in_time) std::printf(" -- over time budget");
        std::printf("\n");
    }
    return all_ok ? 0 : 1;
}
