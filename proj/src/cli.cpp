#include "qobdd/cli.hpp"

#include <cerrno>
#include <cmath>
#include <cstdlib>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qobdd/classical.hpp"
#include "qobdd/collapse.hpp"
#include "qobdd/errors.hpp"
#include "qobdd/evaluator.hpp"
#include "qobdd/io.hpp"
#include "qobdd/program.hpp"
#include "qobdd/synthesis.hpp"

namespace qobdd {

namespace {

constexpr std::size_t kReportInputBound = 12;  // per-input tables stop at 2^12 rows

std::string num(double v) { return format_significant(v, 12); }

std::size_t to_count(const std::string& token, const char* what) {
    if (token.empty() || token[0] == '-' || token[0] == '+')
        throw std::invalid_argument(std::string(what) + " must be a non-negative integer, got '" +
                                    token + "'");
    errno = 0;
    char* end = nullptr;
    unsigned long long v = std::strtoull(token.c_str(), &end, 10);
    if (end != token.c_str() + token.size() || errno == ERANGE)
        throw std::invalid_argument(std::string(what) + " must be a non-negative integer, got '" +
                                    token + "'");
    return static_cast<std::size_t>(v);
}

double to_double(const std::string& token, const char* what) {
    errno = 0;
    char* end = nullptr;
    double v = std::strtod(token.c_str(), &end);
    if (token.empty() || end != token.c_str() + token.size())
        throw std::invalid_argument(std::string(what) + " must be a number, got '" + token + "'");
    return v;
}

// Accepts a plain double, "pi", or "pi/D".
double parse_angle(const std::string& token) {
    if (token == "pi") return M_PI;
    if (token.rfind("pi/", 0) == 0)
        return M_PI / to_double(token.substr(3), "angle divisor");
    return to_double(token, "angle");
}

std::string program_summary(const KQobddProgram& p) {
    return "n=" + std::to_string(p.n) + " k=" + std::to_string(p.k) +
           " width=" + std::to_string(p.width) + " length=" + std::to_string(p.length()) +
           " size=" + std::to_string(p.size());
}

void require_report_bound(std::size_t n, const char* command) {
    if (n > kReportInputBound)
        throw GuardError(std::string(command) + " enumerates all inputs and needs n <= " +
                         std::to_string(kReportInputBound) + ", got " + std::to_string(n));
}

struct Context {
    std::ostream& out;
    std::ostream& err;
    int exit_code = 0;
};

void cmd_validate(Context& ctx, const std::string& file) {
    const std::string text = read_text_file(file);
    std::vector<std::string> findings;
    std::string summary;
    if (peek_document_kind(text) == DocumentKind::kKQobdd) {
        KQobddProgram p = parse_program_unvalidated(text);
        findings = validate(p);
        summary = "kqobdd " + program_summary(p);
    } else {
        DetObdd d = parse_det_obdd_unvalidated(text);
        findings = validate(d);
        summary = "detobdd n=" + std::to_string(d.n) + " width=" + std::to_string(d.width);
    }
    if (findings.empty()) {
        ctx.out << "valid: " << summary << "\n";
    } else {
        for (const auto& finding : findings) ctx.out << "finding: " << finding << "\n";
        ctx.exit_code = 1;
    }
}

void cmd_eval(Context& ctx, const std::string& file, const std::string& bits) {
    KQobddProgram p = parse_program(read_text_file(file));
    InputAssignment a = InputAssignment::from_string(bits);
    if (a.size() != p.n)
        throw std::invalid_argument("input has " + std::to_string(a.size()) +
                                    " bits, expected " + std::to_string(p.n));
    EvalReport report = evaluate(p, a);
    ctx.out << "input: " << a.to_string() << "\n";
    for (std::size_t j = 0; j < report.beta.dim(); ++j)
        ctx.out << "beta " << j << ": " << num(report.beta[j].real()) << " "
                << num(report.beta[j].imag()) << "\n";
    ctx.out << "acceptance: " << num(report.acceptance) << "\n";
    ctx.out << "residual layer-product: " << num(report.residual_matrix_product) << "\n";
    if (report.residual_path_sum)
        ctx.out << "residual path-sum: " << num(*report.residual_path_sum) << "\n";
    else
        ctx.out << "residual path-sum: skipped (guard)\n";
}

void cmd_truth_table(Context& ctx, const std::string& file, double threshold, bool weak) {
    KQobddProgram p = parse_program(read_text_file(file));
    auto rows = truth_map(p, threshold, /*strict=*/!weak);
    ctx.out << "# input\tacceptance\taccept\n";
    for (const auto& row : rows)
        ctx.out << row.input.to_string() << "\t" << num(row.acceptance) << "\t"
                << (row.accept ? "yes" : "no") << "\n";
}

void cmd_binary_synthesis(Context& ctx, const std::string& op, const std::string& file1,
                          const std::string& file2, const std::string& out_path) {
    KQobddProgram p1 = parse_program(read_text_file(file1));
    KQobddProgram p2 = parse_program(read_text_file(file2));
    KQobddProgram result = op == "and" ? and_synthesis(p1, p2) : or_synthesis(p1, p2);
    write_text_file(out_path, serialize_program(result));
    ctx.out << "wrote '" << out_path << "': " << program_summary(result) << "\n";
}

void cmd_not(Context& ctx, const std::string& file, const std::string& out_path) {
    KQobddProgram p = parse_program(read_text_file(file));
    KQobddProgram result = not_synthesis(p);
    write_text_file(out_path, serialize_program(result));
    ctx.out << "wrote '" << out_path << "': " << program_summary(result) << "\n";
}

void cmd_collapse(Context& ctx, const std::string& file, const std::string& out_path,
                  bool entangled) {
    KQobddProgram p = parse_program(read_text_file(file));
    QobddProgram collapsed_program = entangled ? collapse_entangled(p) : collapse(p);
    const KQobddProgram& collapsed = collapsed_program.get();
    write_text_file(out_path, serialize_program(collapsed));
    ctx.out << "width: " << p.width << " -> " << collapsed.width << "\n";
    ctx.out << "length: " << p.length() << " -> " << collapsed.length() << "\n";
    ctx.out << "size: " << p.size() << " -> " << collapsed.size() << "\n";
    ctx.out << "wrote '" << out_path << "'\n";
    if (p.n > kReportInputBound) {
        ctx.out << "per-input report skipped: n > " << kReportInputBound << "\n";
        return;
    }
    ctx.out << "# input\toriginal\tcollapsed\tpredicted\tresidual\n";
    double max_residual = 0.0;
    const std::size_t total = std::size_t{1} << p.n;
    for (std::size_t idx = 0; idx < total; ++idx) {
        InputAssignment a = InputAssignment::from_index(p.n, idx);
        double original = acceptance(p, a);
        double predicted = entangled ? entangled_predicted_acceptance(original, p.width, p.k)
                                     : predicted_acceptance(original, p.width, p.k);
        CollapseReport row = collapse_report(p, collapsed, a, predicted);
        ctx.out << a.to_string() << "\t" << num(row.original) << "\t" << num(row.collapsed)
                << "\t" << num(row.predicted) << "\t" << num(row.residual) << "\n";
        if (row.residual > max_residual) max_residual = row.residual;
    }
    ctx.out << "max residual: " << num(max_residual) << "\n";
}

void cmd_lift(Context& ctx, const std::string& file, const std::string& out_path) {
    DetObdd d = parse_det_obdd(read_text_file(file));
    QobddProgram lifted = lift_reversible(d);
    write_text_file(out_path, serialize_program(lifted));
    ctx.out << "wrote '" << out_path << "': " << program_summary(lifted) << "\n";
}

void cmd_demo(Context& ctx, const std::string& kind, const std::vector<std::string>& args,
              const std::string& out_path) {
    std::string text;
    if (kind == "no_n") {
        if (args.size() != 1) throw std::invalid_argument("demo no_n takes exactly one value: N");
        std::size_t n = to_count(args[0], "N");
        if (n == 0) throw std::invalid_argument("N must be >= 1");
        if (n > kParseVariableGuard)
            throw GuardError("N " + std::to_string(n) + " exceeds the guard " +
                             std::to_string(kParseVariableGuard));
        text = serialize_det_obdd(build_no_n(n));
    } else if (kind == "parity") {
        if (args.size() != 2 && args.size() != 3)
            throw std::invalid_argument("demo parity takes N THETA and an optional K");
        std::size_t n = to_count(args[0], "N");
        if (n == 0) throw std::invalid_argument("N must be >= 1");
        if (n > kParseVariableGuard)
            throw GuardError("N " + std::to_string(n) + " exceeds the guard " +
                             std::to_string(kParseVariableGuard));
        double theta = parse_angle(args[1]);
        std::size_t k = args.size() == 3 ? to_count(args[2], "K") : 1;
        if (k == 0) throw std::invalid_argument("K must be >= 1");
        if (k > kParseLayerGuard)
            throw GuardError("K " + std::to_string(k) + " exceeds the guard " +
                             std::to_string(kParseLayerGuard));
        text = serialize_program(build_rotation_program(n, theta, {1}, k));
    } else {
        throw std::invalid_argument("unknown demo '" + kind + "'; available: no_n, parity");
    }
    if (out_path.empty()) {
        ctx.out << text;
    } else {
        write_text_file(out_path, text);
        ctx.out << "wrote '" << out_path << "'\n";
    }
}

void cmd_random(Context& ctx, std::size_t width, std::size_t k, std::size_t n,
                std::uint64_t seed, const std::string& out_path) {
    if (width == 0 || k == 0 || n == 0)
        throw std::invalid_argument("width, k and n must all be >= 1");
    if (width > kParseWidthGuard || n > kParseVariableGuard || k > kParseLayerGuard)
        throw GuardError("requested program exceeds the size guards");
    KQobddProgram p = build_random_program(width, k, n, seed, {0});
    write_text_file(out_path, serialize_program(p));
    ctx.out << "wrote '" << out_path << "': " << program_summary(p) << " seed=" << seed << "\n";
}

void cmd_compare(Context& ctx, const std::string& file1, const std::string& file2) {
    KQobddProgram p1 = parse_program(read_text_file(file1));
    KQobddProgram p2 = parse_program(read_text_file(file2));
    if (p1.n != p2.n)
        throw std::invalid_argument("programs read different variable counts: " +
                                    std::to_string(p1.n) + " vs " + std::to_string(p2.n));
    require_report_bound(p1.n, "compare");
    double max_diff = -1.0;
    InputAssignment argmax;
    const std::size_t total = std::size_t{1} << p1.n;
    for (std::size_t idx = 0; idx < total; ++idx) {
        InputAssignment a = InputAssignment::from_index(p1.n, idx);
        double diff = std::abs(acceptance(p1, a) - acceptance(p2, a));
        if (diff > max_diff) {
            max_diff = diff;
            argmax = a;
        }
    }
    ctx.out << "inputs: " << total << "\n";
    ctx.out << "max acceptance difference: " << num(max_diff) << " at input "
            << argmax.to_string() << "\n";
}

}  // namespace

int run_command(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    Context ctx{out, err};

    CLI::App app{"exact simulator and transformer for k-layer quantum OBDD programs"};
    app.name("qobdd");
    app.require_subcommand(1);

    std::string file, file2, bits, out_path, demo_kind;
    std::vector<std::string> demo_args;
    double threshold = 0.5;
    bool weak = false;
    std::size_t width = 0, k = 0, n = 0;
    std::uint64_t seed = 0;

    auto* validate_cmd =
        app.add_subcommand("validate", "parse a document and report every invariant violation");
    validate_cmd->add_option("file", file, "program or automaton document")->required();
    validate_cmd->callback([&] { cmd_validate(ctx, file); });

    auto* eval_cmd = app.add_subcommand("eval", "final amplitudes and acceptance on one input");
    eval_cmd->add_option("file", file, "program document")->required();
    eval_cmd->add_option("--input", bits, "assignment as a 0/1 string, one bit per variable")
        ->required();
    eval_cmd->callback([&] { cmd_eval(ctx, file, bits); });

    auto* tt_cmd = app.add_subcommand("truth-table", "acceptance of every input as TSV");
    tt_cmd->add_option("file", file, "program document")->required();
    tt_cmd->add_option("--threshold", threshold, "acceptance threshold (default 0.5)");
    auto* strict_flag = tt_cmd->add_flag("--strict", "accept on acceptance > threshold (default)");
    auto* weak_flag = tt_cmd->add_flag("--weak", weak, "accept on acceptance >= threshold");
    weak_flag->excludes(strict_flag);
    tt_cmd->callback([&] { cmd_truth_table(ctx, file, threshold, weak); });

    auto* and_cmd = app.add_subcommand("and", "conjunction of two programs over the same variables");
    and_cmd->add_option("file1", file, "first program document")->required();
    and_cmd->add_option("file2", file2, "second program document")->required();
    and_cmd->add_option("-o,--output", out_path, "where to write the result")->required();
    and_cmd->callback([&] { cmd_binary_synthesis(ctx, "and", file, file2, out_path); });

    auto* or_cmd = app.add_subcommand("or", "disjunction of two programs over the same variables");
    or_cmd->add_option("file1", file, "first program document")->required();
    or_cmd->add_option("file2", file2, "second program document")->required();
    or_cmd->add_option("-o,--output", out_path, "where to write the result")->required();
    or_cmd->callback([&] { cmd_binary_synthesis(ctx, "or", file, file2, out_path); });

    auto* not_cmd = app.add_subcommand("not", "complement a program's accepting set");
    not_cmd->add_option("file", file, "program document")->required();
    not_cmd->add_option("-o,--output", out_path, "where to write the result")->required();
    not_cmd->callback([&] { cmd_not(ctx, file, out_path); });

    auto* collapse_cmd = app.add_subcommand(
        "collapse", "single-pass uniform-guess simulation of a k-layer program");
    collapse_cmd->add_option("file", file, "program document")->required();
    collapse_cmd->add_option("-o,--output", out_path, "where to write the result")->required();
    bool entangled = false;
    collapse_cmd->add_flag("--entangled", entangled,
                           "use the entangled-record construction, which obeys its affine law "
                           "exactly at width w^(2k-1)+2");
    collapse_cmd->callback([&] { cmd_collapse(ctx, file, out_path, entangled); });

    auto* lift_cmd = app.add_subcommand("lift", "permutation-matrix lift of a reversible automaton");
    lift_cmd->add_option("file", file, "automaton document")->required();
    lift_cmd->add_option("-o,--output", out_path, "where to write the result")->required();
    lift_cmd->callback([&] { cmd_lift(ctx, file, out_path); });

    auto* demo_cmd = app.add_subcommand("demo", "built-in example documents");
    demo_cmd->add_option("kind", demo_kind, "no_n or parity")->required();
    demo_cmd->add_option("args", demo_args, "no_n N | parity N THETA [K]");
    demo_cmd->add_option("-o,--output", out_path, "write to a file instead of stdout");
    demo_cmd->callback([&] { cmd_demo(ctx, demo_kind, demo_args, out_path); });

    auto* random_cmd = app.add_subcommand("random", "seeded random program, accepting state 0");
    random_cmd->add_option("--width", width, "state-space dimension")->required();
    random_cmd->add_option("--k", k, "layer count")->required();
    random_cmd->add_option("--n", n, "variable count")->required();
    random_cmd->add_option("--seed", seed, "generator seed")->required();
    random_cmd->add_option("-o,--output", out_path, "where to write the result")->required();
    random_cmd->callback([&] { cmd_random(ctx, width, k, n, seed, out_path); });

    auto* compare_cmd =
        app.add_subcommand("compare", "max acceptance difference over all inputs");
    compare_cmd->add_option("file1", file, "first program document")->required();
    compare_cmd->add_option("file2", file2, "second program document")->required();
    compare_cmd->callback([&] { cmd_compare(ctx, file, file2); });

    try {
        app.parse(argc, argv);
        return ctx.exit_code;
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    } catch (const GuardError& e) {
        err << "guard exceeded: " << e.what() << "\n";
        return 3;
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return 1;
    } catch (const ValidationError& e) {
        err << "validation error: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("qobdd");
    for (const auto& arg : args) argv.push_back(arg.c_str());
    return run_command(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace qobdd
