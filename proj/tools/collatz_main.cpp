// Command-line front end: trace orbits, evaluate and rearrange words,
// verify the rearrangement bound and both corollary checks over a range,
// and scan ranges to CSV.
//
// Exit codes: 0 success, 1 verification failure (a bound or corollary that
// should hold, fails), 2 usage or parse errors.

#include <exception>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "collatz/orbit.hpp"
#include "collatz/rearrange.hpp"
#include "collatz/scan.hpp"
#include "collatz/system_config.hpp"

namespace {

using namespace collatz;

mpz_class parse_positive_integer(const std::string& text, const char* what) {
    const Rational r = Rational::parse(text);
    if (!r.is_integer() || !r.is_positive()) {
        throw std::invalid_argument(std::string(what) + " must be a positive integer");
    }
    return r.numerator();
}

int run_trace(const std::string& n_text, std::int64_t step_cap) {
    const mpz_class n = parse_positive_integer(n_text, "n");
    const OrbitTrace trace = trace_orbit(n, step_cap);
    const MapPair pair = MapPair::collatz();

    std::cout << "n: " << trace.start.get_str() << '\n';
    std::cout << "orbit:";
    for (const mpz_class& v : trace.values) std::cout << ' ' << v.get_str();
    std::cout << '\n';
    std::cout << "steps: " << trace.steps << '\n';
    std::cout << "reached_one: " << (trace.reached_one ? "true" : "false") << '\n';
    std::cout << "word: " << trace.word.format(pair) << '\n';
    std::cout << "l: " << trace.word.block_count(Letter::Second) << '\n';
    std::cout << "sigma_e: " << trace.word.exponent_sum(Letter::First) << '\n';
    std::cout << "sigma_o: " << trace.word.exponent_sum(Letter::Second) << '\n';
    return 0;
}

int run_word_eval(const MapPair& pair, const std::string& word_text, const std::string& n_text) {
    const Word word = Word::parse(word_text, pair);
    const Rational n = Rational::parse(n_text);
    const Rational stepwise = evaluate_stepwise(word, pair, n);
    const Rational closed = evaluate_closed(word, pair, n);
    if (stepwise != closed) {
        throw std::logic_error("stepwise and closed evaluation disagree");
    }
    std::cout << "word: " << word.format(pair) << '\n';
    std::cout << "n: " << n << '\n';
    std::cout << "value: " << stepwise << '\n';
    return 0;
}

int run_rearrange(const MapPair& pair, bool is_collatz, const std::string& word_text,
                  const std::optional<std::string>& n_text, bool show_steps) {
    const Word word = Word::parse(word_text, pair);
    const RearrangeResult result = rearrange_iterative(word, pair);

    std::cout << "word: " << word.format(pair) << '\n';
    std::cout << "normal: " << result.normal_word.format(pair) << '\n';
    std::cout << "C: " << result.correction << '\n';

    const bool sum_applies = is_collatz && commutator_sum_applicable(word);
    if (sum_applies) {
        std::vector<std::pair<std::string, Rational>> terms;
        const Rational c_sum = correction_commutator_sum(word, &terms);
        if (c_sum != result.correction) {
            throw std::logic_error("commutator sum disagrees with the iterative correction");
        }
        std::cout << "C_terms:";
        for (std::size_t i = 0; i < terms.size(); ++i) {
            std::cout << (i == 0 ? " " : " + ") << terms[i].second;
        }
        std::cout << '\n';
    }

    if (show_steps) {
        std::cout << "steps: " << result.steps.size() << '\n';
        for (std::size_t i = 0; i < result.steps.size(); ++i) {
            const RearrangeStep& s = result.steps[i];
            std::cout << "  step " << (i + 1) << ": " << s.state.format(pair) << "  (delta "
                      << s.delta << ", C so far " << s.correction_so_far << ")\n";
        }
    }

    if (!n_text) return 0;

    const Rational n = Rational::parse(*n_text);
    const Rational word_value = evaluate_stepwise(word, pair, n);
    const Rational normal_value = evaluate_stepwise(result.normal_word, pair, n);
    if (word_value != normal_value + result.correction) {
        throw std::logic_error("word value does not equal normal value plus C");
    }
    std::cout << "n: " << n << '\n';
    std::cout << "W: " << word_value << '\n';
    std::cout << "normal_value: " << normal_value << '\n';

    if (sum_applies && n.is_positive()) {
        const RearrangementReport report = analyze(word, n);
        std::cout << "bounds_ok: " << (report.bounds_ok ? "true" : "false") << '\n';
        std::cout << "corollary1: " << to_string(report.ceiling_identity) << '\n';
        std::cout << "corollary2: " << to_string(report.exponent_inequality) << '\n';
        const bool failed = !report.bounds_ok || report.ceiling_identity == Verdict::Fails ||
                            report.exponent_inequality == Verdict::Fails;
        return failed ? 1 : 0;
    }
    return 0;
}

int run_commutator(const MapPair& pair, std::int64_t a, std::int64_t b) {
    std::cout << commutator_constant(power_closed(pair.second, a), power_closed(pair.first, b))
              << '\n';
    return 0;
}

int run_verify(std::uint64_t from, std::uint64_t to, std::int64_t step_cap) {
    std::uint64_t reached = 0, applicable = 0, bounds_ok = 0;
    std::uint64_t c1_holds = 0, c1_fails = 0, c2_holds = 0, c2_fails = 0;

    for (std::uint64_t n = from; n <= to; ++n) {
        const mpz_class start(static_cast<unsigned long>(n));
        const OrbitTrace trace = trace_orbit(start, step_cap);
        if (!trace.reached_one) continue;
        ++reached;
        if (!commutator_sum_applicable(trace.word)) continue;
        ++applicable;
        const RearrangementReport report = analyze(trace.word, Rational(start));
        if (report.bounds_ok) ++bounds_ok;
        if (report.ceiling_identity == Verdict::Holds) ++c1_holds;
        if (report.ceiling_identity == Verdict::Fails) ++c1_fails;
        if (report.exponent_inequality == Verdict::Holds) ++c2_holds;
        if (report.exponent_inequality == Verdict::Fails) ++c2_fails;
    }

    const std::uint64_t total = to - from + 1;
    std::cout << "range: [" << from << ", " << to << "]\n";
    std::cout << "orbits: " << total << ", reached_one: " << reached << '\n';
    std::cout << "applicable (bracketed, l >= 2): " << applicable << '\n';
    std::cout << "bounds_ok: " << bounds_ok << "/" << applicable << '\n';
    std::cout << "corollary1: holds " << c1_holds << ", fails " << c1_fails << '\n';
    std::cout << "corollary2: holds " << c2_holds << ", fails " << c2_fails << '\n';

    const bool failed = bounds_ok != applicable || c1_fails > 0 || c2_fails > 0;
    std::cout << "verify: " << (failed ? "FAILED" : "ok") << '\n';
    return failed ? 1 : 0;
}

int run_scan(std::uint64_t from, std::uint64_t to, const std::optional<std::string>& csv_path,
             int jobs, std::int64_t step_cap) {
    const std::vector<ScanRecord> records = scan_range(from, to, step_cap, jobs);

    if (csv_path) {
        std::ofstream out(*csv_path, std::ios::binary);
        if (!out) {
            throw std::runtime_error("cannot open " + *csv_path + " for writing");
        }
        write_csv(out, records);
    } else {
        write_csv(std::cout, records);
    }

    std::uint64_t failures = 0, reached = 0;
    for (const ScanRecord& r : records) {
        if (r.reached_one) ++reached;
        if (r.ceiling_identity == Verdict::Fails || r.exponent_inequality == Verdict::Fails)
            ++failures;
    }
    std::cerr << "scanned [" << from << ", " << to << "]: " << records.size()
              << " records, reached_one " << reached << ", corollary failures " << failures
              << '\n';
    return failures > 0 ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Collatz composition words: orbits, commutator rearrangement, range scans"};
    app.require_subcommand(1);

    std::string system_path;
    app.add_option("--system", system_path,
                   "JSON config binding a generic affine pair (default: Collatz E/O)");

    auto* trace_cmd = app.add_subcommand("trace", "trace one orbit and extract its word");
    std::string trace_n;
    trace_cmd->add_option("n", trace_n, "start value (positive integer)")->required();

    auto* eval_cmd = app.add_subcommand("word-eval", "evaluate a word at a rational point");
    std::string eval_word, eval_n;
    eval_cmd->add_option("word", eval_word, "word, e.g. \"E^3 O^2 E^1\"")->required();
    eval_cmd->add_option("--n", eval_n, "rational evaluation point")->required();

    auto* rearr_cmd = app.add_subcommand("rearrange", "rearrange a word into normal form");
    std::string rearr_word;
    std::string rearr_n;
    bool rearr_steps = false;
    rearr_cmd->add_option("word", rearr_word, "word to rearrange")->required();
    auto* rearr_n_opt = rearr_cmd->add_option("--n", rearr_n, "rational evaluation point");
    rearr_cmd->add_flag("--steps", rearr_steps, "print the swap-by-swap trace");

    auto* comm_cmd = app.add_subcommand("commutator", "constant commutator of map powers");
    std::int64_t comm_a = 0, comm_b = 0;
    comm_cmd->add_option("--a", comm_a, "power of the second map (O by default)")
        ->required()
        ->check(CLI::NonNegativeNumber);
    comm_cmd->add_option("--b", comm_b, "power of the first map (E by default)")
        ->required()
        ->check(CLI::NonNegativeNumber);

    auto* verify_cmd = app.add_subcommand("verify", "check bound and corollaries over a range");
    std::uint64_t verify_from = 0, verify_to = 0;
    verify_cmd->add_option("--from", verify_from)->required()->check(CLI::PositiveNumber);
    verify_cmd->add_option("--to", verify_to)->required()->check(CLI::PositiveNumber);

    auto* scan_cmd = app.add_subcommand("scan", "scan a range into CSV records");
    std::uint64_t scan_from = 0, scan_to = 0;
    std::string scan_csv;
    int scan_jobs = 0;
    std::int64_t scan_cap = kDefaultStepCap;
    scan_cmd->add_option("--from", scan_from)->required()->check(CLI::PositiveNumber);
    scan_cmd->add_option("--to", scan_to)->required()->check(CLI::PositiveNumber);
    auto* scan_csv_opt = scan_cmd->add_option("--csv", scan_csv, "write CSV here instead of stdout");
    scan_cmd->add_option("--jobs", scan_jobs, "worker threads (default: all cores)");
    scan_cmd->add_option("--step-cap", scan_cap, "orbit step cap")->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        MapPair pair = MapPair::collatz();
        const bool is_collatz = system_path.empty();
        if (!is_collatz) {
            pair = load_system_config(system_path);
            std::cerr << "system: " << pair.first << "; " << pair.second << "; ["
                      << pair.first.label() << "," << pair.second.label()
                      << "] = " << commutator_constant(pair.first, pair.second) << '\n';
        }

        if (trace_cmd->parsed() || verify_cmd->parsed() || scan_cmd->parsed()) {
            if (!is_collatz) {
                std::cerr << "error: orbit dynamics are defined for the default E/O system only; "
                             "evaluate words directly with word-eval/rearrange instead\n";
                return 2;
            }
        }

        if (trace_cmd->parsed()) return run_trace(trace_n, kDefaultStepCap);
        if (eval_cmd->parsed()) return run_word_eval(pair, eval_word, eval_n);
        if (rearr_cmd->parsed()) {
            std::optional<std::string> n_text;
            if (rearr_n_opt->count() > 0) n_text = rearr_n;
            return run_rearrange(pair, is_collatz, rearr_word, n_text, rearr_steps);
        }
        if (comm_cmd->parsed()) return run_commutator(pair, comm_a, comm_b);
        if (verify_cmd->parsed()) {
            if (verify_from > verify_to) throw std::invalid_argument("--from must be <= --to");
            return run_verify(verify_from, verify_to, kDefaultStepCap);
        }
        if (scan_cmd->parsed()) {
            if (scan_from > scan_to) throw std::invalid_argument("--from must be <= --to");
            std::optional<std::string> csv_path;
            if (scan_csv_opt->count() > 0) csv_path = scan_csv;
            return run_scan(scan_from, scan_to, csv_path, scan_jobs, scan_cap);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;  // unreachable with require_subcommand(1)
}
