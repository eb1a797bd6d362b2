// Command surface: exact dual Grothendieck evaluation, last-passage column
// laws (closed form, capped oracle, Monte Carlo), random-word statistics,
// the Plancherel limit table, and the named verification suites.

#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "dglpp/emit.hpp"
#include "dglpp/lpp.hpp"
#include "dglpp/plancherel.hpp"
#include "dglpp/suites.hpp"
#include "dglpp/symfunc.hpp"

namespace {

std::uint64_t env_budget(const char* name, std::uint64_t fallback) {
    const char* value = std::getenv(name);
    if (value == nullptr || *value == '\0') return fallback;
    return std::strtoull(value, nullptr, 10);
}

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto comma = text.find(',', pos);
        std::string tok = text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        out.push_back(std::stoi(tok));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"dual Grothendieck polynomials and last-passage column laws"};
    app.require_subcommand(1);
    // Let --format / --output appear after the subcommand as well.
    app.fallthrough();

    std::string format = "json";
    std::string output;
    app.add_option("--format", format, "output format: json or csv")->capture_default_str();
    app.add_option("--output", output, "write to this file instead of stdout");

    const std::uint64_t oracle_budget =
        env_budget("DGLPP_ORACLE_BUDGET", dglpp::kDefaultOracleBudget);
    const std::uint64_t word_budget = env_budget("DGLPP_WORD_BUDGET", dglpp::kDefaultWordBudget);

    // eval-g
    auto* eval_g = app.add_subcommand("eval-g", "evaluate g_lambda at a rational point");
    std::string shape_text, q_text, method = "det-h";
    eval_g->add_option("--shape", shape_text, "partition, e.g. 2,1")->required();
    eval_g->add_option("--q", q_text, "evaluation point, e.g. 1/2,1/3 or 1^2;1/2,1/3")->required();
    eval_g->add_option("--method", method, "pp (combinatorial sum), det-h, or det-e")
        ->check(CLI::IsMember({"pp", "det-h", "det-e"}))
        ->capture_default_str();

    // dist / oracle / simulate
    auto* dist_cmd = app.add_subcommand("dist", "closed-form joint column law up to a width");
    auto* oracle_cmd = app.add_subcommand("oracle", "capped exhaustive column law");
    auto* simulate_cmd = app.add_subcommand("simulate", "Monte Carlo column law");
    int m = 0, n = 0, max_part = 0, cap = 12, workers = 1;
    std::uint64_t samples = 1'000'000, seed = 0;
    std::string dist_q;
    for (CLI::App* cmd : {dist_cmd, oracle_cmd, simulate_cmd}) {
        cmd->add_option("--m", m, "rows")->required();
        cmd->add_option("--n", n, "columns")->required();
        cmd->add_option("--q", dist_q, "column parameters, e.g. 1/2,1/3")->required();
    }
    dist_cmd->add_option("--max-part", max_part, "include all lambda with lambda_1 <= this")
        ->required();
    oracle_cmd->add_option("--cap", cap, "entry cap K")->capture_default_str();
    simulate_cmd->add_option("--samples", samples, "sample count")->capture_default_str();
    simulate_cmd->add_option("--seed", seed, "rng seed")->capture_default_str();
    simulate_cmd->add_option("--workers", workers, "worker threads")->capture_default_str();

    // words
    auto* words_cmd = app.add_subcommand("words", "exact law of (L_m, ..., L_1) over uniform words");
    int wm = 0, wn = 0;
    words_cmd->add_option("--m", wm, "alphabet size")->required();
    words_cmd->add_option("--n", wn, "word length")->required();

    // limit
    auto* limit_cmd = app.add_subcommand("limit", "Plancherel limit convergence table");
    int lm = 0;
    std::string lshape, lgamma = "1", ln_values = "10,20,40,80";
    limit_cmd->add_option("--m", lm, "rows")->required();
    limit_cmd->add_option("--shape", lshape, "partition, e.g. 1,1")->required();
    limit_cmd->add_option("--gamma", lgamma, "rate gamma > 0")->capture_default_str();
    limit_cmd->add_option("--n-values", ln_values, "comma-separated n list")->capture_default_str();

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "run named verification suites");
    std::string suites_text = "all", size_text = "medium";
    std::uint64_t verify_seed = dglpp::SuiteConfig{}.seed;
    verify_cmd->add_option("--suite", suites_text, "comma-separated suite names, or 'all'")
        ->capture_default_str();
    verify_cmd->add_option("--size", size_text, "small or medium")
        ->check(CLI::IsMember({"small", "medium"}))
        ->capture_default_str();
    verify_cmd->add_option("--seed", verify_seed, "seed for statistical checks")
        ->capture_default_str();

    CLI11_PARSE(app, argc, argv);

    try {
        const dglpp::EmitFormat fmt = dglpp::parse_format(format);

        if (eval_g->parsed()) {
            dglpp::Partition shape = dglpp::Partition::parse(shape_text);
            dglpp::EvalPoint pt = dglpp::EvalPoint::parse(q_text);
            dglpp::Rational value;
            if (method == "pp")
                value = dglpp::g_eval_combinatorial(shape, pt);
            else if (method == "det-e")
                value = dglpp::g_eval_det_e(shape, pt);
            else
                value = dglpp::g_eval_det_h(
                    shape, std::max<int>(1, static_cast<int>(shape.length())), pt);
            dglpp::emit_output(value.str(), output);
            return 0;
        }
        if (dist_cmd->parsed() || oracle_cmd->parsed() || simulate_cmd->parsed()) {
            dglpp::GeometricParams params(m, n, dglpp::parse_q_list(dist_q));
            dglpp::JointDistribution result;
            if (dist_cmd->parsed())
                result = dglpp::closed_form_distribution(params, max_part);
            else if (oracle_cmd->parsed())
                result = dglpp::oracle_distribution(params, cap, oracle_budget);
            else
                result = dglpp::monte_carlo_distribution(params, samples, seed, workers);
            dglpp::emit_output(dglpp::render_distribution(result, fmt), output);
            return 0;
        }
        if (words_cmd->parsed()) {
            dglpp::JointDistribution result = dglpp::word_distribution_exhaustive(wm, wn, word_budget);
            dglpp::emit_output(dglpp::render_distribution(result, fmt), output);
            return 0;
        }
        if (limit_cmd->parsed()) {
            dglpp::ConvergenceTable table = dglpp::plancherel_limit_check(
                lm, dglpp::Partition::parse(lshape), dglpp::Rational::parse(lgamma),
                parse_int_list(ln_values));
            dglpp::emit_output(dglpp::render_convergence(table, fmt), output);
            return 0;
        }
        if (verify_cmd->parsed()) {
            dglpp::SuiteConfig config;
            config.size = size_text == "small" ? dglpp::SuiteConfig::Size::Small
                                               : dglpp::SuiteConfig::Size::Medium;
            config.seed = verify_seed;
            config.oracle_budget = oracle_budget;
            config.word_budget = word_budget;
            std::vector<std::string> names;
            if (suites_text == "all") {
                names = dglpp::suite_names();
            } else {
                std::size_t pos = 0;
                while (pos <= suites_text.size()) {
                    auto comma = suites_text.find(',', pos);
                    names.push_back(suites_text.substr(
                        pos, comma == std::string::npos ? std::string::npos : comma - pos));
                    if (comma == std::string::npos) break;
                    pos = comma + 1;
                }
            }
            std::string all_text;
            bool all_pass = true;
            for (const std::string& name : names) {
                dglpp::SuiteReport report = dglpp::run_suite(name, config);
                all_text += report.format_text();
                all_pass = all_pass && report.passed;
            }
            dglpp::emit_output(all_text, output);
            return all_pass ? 0 : 1;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
