#include "rscwe/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <map>
#include <ostream>
#include <random>
#include <sstream>

#include "json.hpp"
#include "rscwe/errata.hpp"
#include "rscwe/error.hpp"
#include "rscwe/serialize.hpp"

namespace rscwe::cli {

namespace {

std::uint32_t parse_code(const std::string& s) {
    std::size_t used = 0;
    unsigned long v = 0;
    try {
        v = std::stoul(s, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used == 0 || used != s.size() || v > UINT32_MAX)
        throw Error(ErrorKind::InvalidArgument, "bad element code \"" + s + "\"");
    return static_cast<std::uint32_t>(v);
}

CweRecord make_record(const RunConfig& cfg, std::span<const FieldElement> alpha, CwePolynomial cwe) {
    CweRecord r;
    r.p = cfg.p;
    r.m = cfg.m;
    r.k = cfg.k;
    r.extended = cfg.extended;
    for (auto a : alpha) r.alpha.push_back(a.code);
    r.cwe = std::move(cwe);
    return r;
}

void print_cwe(const RunConfig& cfg, const CweRecord& record, std::ostream& out) {
    if (cfg.output == OutputFormat::Json)
        out << serialize_json(record) << '\n';
    else
        out << render_text(record.cwe);
}

std::string describe_mismatch(const CweComparison& cmp) {
    const auto& d = *cmp.first_difference;
    return "first differing term w^" + format_exponents(d.exponents) + ": brute=" + std::to_string(d.left) +
           " formula=" + std::to_string(d.right);
}

CwePolynomial formula_or_throw(const Field& field, const RunConfig& cfg, std::span<const FieldElement> alpha) {
    auto cwe = formula_cwe(field, cfg.k, alpha, cfg.extended);
    if (!cwe)
        throw Error(ErrorKind::InvalidArgument, "no closed form for k=" + std::to_string(cfg.k) + " with " +
                                                    std::to_string(alpha.size()) + " evaluation points");
    return std::move(*cwe);
}

/// Random evaluation set of size in [max(k, 2), q], in random order.
std::vector<FieldElement> random_eval_set(const Field& field, std::uint32_t k, std::mt19937_64& rng) {
    auto all = field.elements();
    std::shuffle(all.begin(), all.end(), rng);
    std::uniform_int_distribution<std::uint32_t> size(std::max<std::uint32_t>(k, 2), field.q());
    all.resize(size(rng));
    return all;
}

int run_compare(const RunConfig& cfg, const Field& field, std::span<const FieldElement> alpha, std::ostream& out) {
    auto check_one = [&](std::span<const FieldElement> points, std::ostream& os) {
        const CodeSpec spec(field, cfg.k, {points.begin(), points.end()}, cfg.extended);
        const CwePolynomial brute = cwe_bruteforce(spec, cfg.budget);
        const CwePolynomial formula = formula_or_throw(field, cfg, points);
        const CweComparison cmp = cwe_equal(brute, formula);
        if (cfg.output == OutputFormat::Json) {
            nlohmann::json j{{"equal", cmp.equal}, {"terms", brute.terms().size()}, {"mass", brute.mass()}};
            std::vector<std::uint32_t> codes;
            for (auto a : points) codes.push_back(a.code);
            j["alpha"] = codes;
            if (!cmp.equal) {
                const auto& d = *cmp.first_difference;
                j["difference"] = {{"e", d.exponents}, {"brute", d.left}, {"formula", d.right}};
            }
            os << j.dump() << '\n';
        } else if (cmp.equal) {
            os << "equal: " << brute.terms().size() << " terms, " << brute.mass() << " codewords\n";
        } else {
            os << "MISMATCH: " << describe_mismatch(cmp) << '\n';
        }
        return cmp.equal;
    };

    bool all_equal = check_one(alpha, out);
    if (cfg.random_sets > 0) {
        if (cfg.output == OutputFormat::Text) out << "random evaluation sets: " << cfg.random_sets << ", seed " << cfg.seed << '\n';
        std::mt19937_64 rng(cfg.seed);
        for (std::uint32_t i = 0; i < cfg.random_sets; ++i) {
            const auto points = random_eval_set(field, cfg.k, rng);
            all_equal = check_one(points, out) && all_equal;
        }
    }
    return static_cast<int>(all_equal ? ExitCode::Ok : ExitCode::Mismatch);
}

}  // namespace

EvalKind parse_eval_kind(const std::string& text) {
    if (text == "full") return eval::Full{};
    if (text == "primitive") return eval::Primitive{};
    if (text == "standard") return eval::Standard{};
    if (text.rfind("punctured:", 0) == 0) return eval::Punctured{FieldElement{parse_code(text.substr(10))}};
    if (text.rfind("custom:", 0) == 0) {
        eval::Custom c;
        std::stringstream ss(text.substr(7));
        for (std::string item; std::getline(ss, item, ',');) c.points.emplace_back(parse_code(item));
        if (c.points.empty()) throw Error(ErrorKind::InvalidArgument, "custom evaluation set is empty");
        return c;
    }
    throw Error(ErrorKind::InvalidArgument, "unknown evaluation set \"" + text + "\"");
}

std::optional<CwePolynomial> formula_cwe(const Field& field, std::uint32_t k, std::span<const FieldElement> alpha,
                                         bool extended) {
    if (k == 2) return cwe_rs2(field, alpha, extended);
    if (k != 3) return std::nullopt;
    // The enumerator depends only on the set of points, not their order.
    std::vector<bool> present(field.q(), false);
    for (auto a : alpha) present[a.code] = true;
    if (alpha.size() == field.q()) return cwe_k3_fullfield(field, extended);
    if (alpha.size() + 1 == field.q() && field.q() >= 4) {
        const auto missing = std::find(present.begin(), present.end(), false) - present.begin();
        return cwe_k3_punctured(field, FieldElement{static_cast<std::uint32_t>(missing)}, extended);
    }
    return std::nullopt;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Complete weight enumerators of Reed-Solomon codes over GF(p^m)", "rscwe"};
    app.require_subcommand(1);

    RunConfig cfg;
    cfg.budget = codeword_budget_from_env();

    const std::map<std::string, Method> methods{
        {"brute", Method::Brute}, {"formula", Method::Formula}, {"both", Method::Both}};
    const std::map<std::string, OutputFormat> formats{{"text", OutputFormat::Text}, {"json", OutputFormat::Json}};

    auto add_code_options = [&](CLI::App* sub) {
        sub->add_option("--p", cfg.p, "Field characteristic")->required();
        sub->add_option("--m", cfg.m, "Extension degree")->capture_default_str();
        sub->add_option("--k", cfg.k, "Code dimension")->capture_default_str();
        sub->add_option("--eval", cfg.eval,
                        "Evaluation set: full | punctured:<code> | primitive | standard | custom:<c1>,<c2>,...")
            ->capture_default_str();
        sub->add_flag("--extended", cfg.extended, "Append the f_{k-1} coordinate");
        sub->add_option("--output", cfg.output, "text | json")->transform(CLI::CheckedTransformer(formats));
        sub->add_option("--budget", cfg.budget, "Maximum number of codewords to enumerate (env RSCWE_BUDGET)");
        sub->add_option("--max-q", cfg.max_order, "Maximum field order")->capture_default_str();
        sub->add_flag("--explain", cfg.explain, "Append the errata ledger");
    };

    auto* compute = app.add_subcommand("compute", "Print the complete weight enumerator");
    add_code_options(compute);
    compute->add_option("--method", cfg.method, "brute | formula | both")->transform(CLI::CheckedTransformer(methods));

    auto* compare = app.add_subcommand("compare", "Check the closed form against enumeration");
    add_code_options(compare);
    compare->add_option("--random-sets", cfg.random_sets, "Also compare this many random evaluation sets");
    compare->add_option("--seed", cfg.seed, "Seed for --random-sets")->capture_default_str();

    auto* weights = app.add_subcommand("weights", "Print the Hamming weight distribution");
    add_code_options(weights);
    weights->add_option("--method", cfg.method, "brute | formula | both")->transform(CLI::CheckedTransformer(methods));

    auto* explain = app.add_subcommand("explain", "Print the errata ledger for the printed closed forms");

    std::vector<std::string> storage{"rscwe"};
    storage.insert(storage.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (auto& s : storage) argv.push_back(s.data());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return static_cast<int>(ExitCode::Ok);
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return static_cast<int>(ExitCode::Usage);
    }

    try {
        if (explain->parsed()) {
            bool ok = true;
            out << explain_errata(&ok);
            return static_cast<int>(ok ? ExitCode::Ok : ExitCode::Mismatch);
        }

        const Field field = Field::build(cfg.p, cfg.m, cfg.max_order);
        const auto alpha = make_eval_set(field, parse_eval_kind(cfg.eval));
        const CodeSpec spec(field, cfg.k, alpha, cfg.extended);
        int code = static_cast<int>(ExitCode::Ok);

        if (compare->parsed()) {
            code = run_compare(cfg, field, alpha, out);
        } else {
            std::optional<CwePolynomial> cwe;
            if (cfg.method != Method::Formula) cwe = cwe_bruteforce(spec, cfg.budget);
            if (cfg.method != Method::Brute) {
                CwePolynomial formula = formula_or_throw(field, cfg, alpha);
                if (cwe) {
                    const auto cmp = cwe_equal(*cwe, formula);
                    if (!cmp.equal) {
                        err << "MISMATCH: " << describe_mismatch(cmp) << '\n';
                        return static_cast<int>(ExitCode::Mismatch);
                    }
                } else {
                    cwe = std::move(formula);
                }
            }
            const CweRecord record = make_record(cfg, alpha, std::move(*cwe));
            if (compute->parsed()) {
                print_cwe(cfg, record, out);
            } else {
                const WeightDistribution wd = weight_distribution(record.cwe);
                if (cfg.output == OutputFormat::Json)
                    out << serialize_weights_json(record, wd) << '\n';
                else
                    out << render_weights_text(wd);
            }
        }
        if (cfg.explain) out << '\n' << explain_errata();
        return code;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return static_cast<int>(e.kind() == ErrorKind::SizeLimit ? ExitCode::SizeLimit : ExitCode::Usage);
    }
}

}  // namespace rscwe::cli
