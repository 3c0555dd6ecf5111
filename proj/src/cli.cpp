#include "demazure/cli.hpp"

#include "demazure/bench.hpp"
#include "demazure/hopping.hpp"
#include "demazure/oracle.hpp"
#include "demazure/permutation.hpp"
#include "demazure/signed_permutation.hpp"
#include "demazure/text.hpp"
#include "demazure/verify.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <map>
#include <ostream>
#include <stdexcept>

namespace demazure::cli {

namespace {

struct Options {
    std::string type = "a";
    bool trace = false;
    std::string algo = "hopping";
    std::string first;
    std::string second;

    int tracked = 0;
    std::string list;

    bool from_sequence = false;
    bool signed_output = false;

    std::string dot;

    std::uint64_t seed = 1;
    int samples = VerifyOptions{}.samples;
    int samples_b = VerifyOptions{}.samples_b;

    std::string ns = "100,500,1000";
    int trials = 10;
    std::string csv;
};

bool type_b(const Options& o) { return o.type == "b" || o.type == "B"; }

void print_list_header(std::ostream& out, int t, std::span<const int> list) {
    out << "# h_" << t << ' ' << format_list(list) << '\n';
}

std::vector<int> signed_list(std::span<const int> embedded, int n) {
    std::vector<int> out;
    for (int x : embedded) out.push_back(signed_value(x, n));
    return out;
}

int cmd_star(const Options& o, std::ostream& out) {
    if (!type_b(o)) {
        const auto w = parse_permutation(o.first);
        const auto v = parse_permutation(o.second);
        if (o.algo == "oracle") {
            out << format_permutation(demazure_oracle(w, v)) << '\n';
            return kExitOk;
        }
        if (o.algo != "hopping") throw std::invalid_argument("star: type A algorithms are hopping, oracle");
        const auto result = demazure_star(w, v);
        if (o.trace) {
            for (const auto& trace : result.traces) {
                print_list_header(out, trace.tracked(), trace.list());
                for (const auto& line : render_trace(trace)) out << line << '\n';
            }
            out << "# product\n";
        }
        out << format_permutation(result.product) << '\n';
        return kExitOk;
    }

    const auto w = parse_signed(o.first);
    const auto v = parse_signed(o.second);
    if (o.algo == "oracle") {
        out << format_signed(demazure_oracle_b(w, v)) << '\n';
    } else if (o.algo == "unfolded") {
        const auto result = demazure_star(unfold(w), unfold(v));
        if (o.trace) {
            for (const auto& trace : result.traces) {
                print_list_header(out, signed_value(trace.tracked(), w.rank()),
                                  signed_list(trace.list(), w.rank()));
                for (const auto& line : render_trace_b(trace)) out << line << '\n';
            }
            out << "# product\n";
        }
        out << format_signed(fold(result.product)) << '\n';
    } else if (o.algo == "hopping") {
        const auto result = demazure_star_b(w, v);
        if (o.trace) {
            for (const auto& trace : result.traces) {
                print_list_header(out, trace.tracked(), signed_list(trace.list(), w.rank()));
                for (const auto& line : render_trace_b(trace)) out << line << '\n';
            }
            out << "# product\n";
        }
        out << format_signed(result.product) << '\n';
    } else {
        throw std::invalid_argument("star: type B algorithms are hopping, unfolded, oracle");
    }
    return kExitOk;
}

int cmd_hop(const Options& o, std::ostream& out) {
    const HopList list(parse_int_list(o.list));
    if (!type_b(o)) {
        const auto w = parse_permutation(o.first);
        const auto result = hop(w, o.tracked, list);
        if (o.trace) {
            for (const auto& line : render_trace(result.trace)) out << line << '\n';
        } else {
            out << format_permutation(result.word) << '\n';
        }
        return kExitOk;
    }
    const auto w = parse_signed(o.first);
    const auto result = hop_b(w, o.tracked, list);
    if (o.trace) {
        for (const auto& line : render_trace_b(result.trace)) out << line << '\n';
        out << "# folded\n";
    }
    out << format_signed(result.word) << '\n';
    return kExitOk;
}

int cmd_decompose(const Options& o, std::ostream& out) {
    if (!type_b(o)) {
        if (o.from_sequence) {
            const auto js = parse_int_list(o.first);
            InversionSequence seq{static_cast<int>(js.size()) + 1, js};
            out << format_permutation(reconstruct(seq)) << '\n';
            return kExitOk;
        }
        const auto w = parse_permutation(o.first);
        out << "sequence " << format_list(inversion_sequence(w).js) << '\n';
        out << "reduced_word " << format_list(reduced_word(w)) << '\n';
        out << "length " << length(w) << '\n';
        return kExitOk;
    }
    if (o.from_sequence) {
        const auto js = parse_int_list(o.first);
        out << format_signed(reconstruct_b(js, static_cast<int>(js.size()))) << '\n';
        return kExitOk;
    }
    const auto w = parse_signed(o.first);
    out << "sequence " << format_list(inversion_sequence_b(w)) << '\n';
    out << "strings " << format_list(string_exponents_b(w)) << '\n';
    out << "length " << length_b(w) << '\n';
    return kExitOk;
}

int cmd_unfold(const Options& o, std::ostream& out) {
    const auto w = parse_signed(o.first);
    if (o.signed_output) {
        out << format_list(unfold_signed(w)) << '\n';
        return kExitOk;
    }
    const auto p = unfold(w);
    std::string sep;
    for (int x : p.entries()) {
        out << sep << x;
        sep = " ";
    }
    out << '\n';
    return kExitOk;
}

int cmd_fold(const Options& o, std::ostream& out) {
    out << format_signed(fold(parse_permutation(o.first))) << '\n';
    return kExitOk;
}

void write_dot(const std::vector<Permutation>& elements, std::ostream& out) {
    out << "digraph bruhat {\n  rankdir=BT;\n";
    for (std::size_t k = 0; k < elements.size(); ++k) {
        out << "  n" << k << " [label=\"" << format_permutation(elements[k]) << "\"];\n";
    }
    for (const auto& [lo, hi] : hasse_edges(elements)) out << "  n" << lo << " -> n" << hi << ";\n";
    out << "}\n";
}

int cmd_interval(const Options& o, std::ostream& out) {
    const auto w = parse_permutation(o.first);
    auto elements = lower_interval(w);
    std::stable_sort(elements.begin(), elements.end(), [](const Permutation& a, const Permutation& b) {
        return length(a) < length(b);
    });
    if (o.dot.empty()) {
        for (const auto& u : elements) out << format_permutation(u) << '\n';
        return kExitOk;
    }
    if (o.dot == "-") {
        write_dot(elements, out);
        return kExitOk;
    }
    std::ofstream file(o.dot);
    if (!file) throw std::invalid_argument("interval: cannot write " + o.dot);
    write_dot(elements, file);
    out << elements.size() << " elements written to " << o.dot << '\n';
    return kExitOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
    VerifyOptions options;
    options.seed = o.seed;
    options.samples = o.samples;
    options.samples_b = o.samples_b;
    const auto results = run_verify(options);
    out << format_suite_table(results);
    const bool ok = std::all_of(results.begin(), results.end(), [](const SuiteResult& r) { return r.passed(); });
    return ok ? kExitOk : kExitFailed;
}

int cmd_bench(const Options& o, std::ostream& out, std::ostream& err) {
    const auto ns = parse_int_list(o.ns);
    const auto type = type_b(o) ? GroupType::B : GroupType::A;
    const auto report = run_bench(type, ns, o.trials, o.seed);
    if (o.csv.empty() || o.csv == "-") {
        write_csv(report, out);
    } else {
        std::ofstream file(o.csv);
        if (!file) throw std::invalid_argument("bench: cannot write " + o.csv);
        write_csv(report, file);
    }
    std::map<int, double> hopping, oracle;
    for (const auto& row : report.rows) (row.algo == "hopping" ? hopping : oracle)[row.n] = row.mean_ns;
    for (const auto& [n, h] : hopping) {
        err << "n=" << n << " oracle/hopping mean ratio " << oracle[n] / h << '\n';
    }
    return kExitOk;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Demazure products on symmetric and signed permutation groups", "demazure"};
    app.require_subcommand(1);
    Options o;

    auto add_type = [&](CLI::App* sub) {
        sub->add_option("--type", o.type, "group: a (permutations) or b (signed permutations)")
            ->check(CLI::IsMember({"a", "b", "A", "B"}));
    };

    auto* star = app.add_subcommand("star", "Demazure product w * v");
    add_type(star);
    star->add_flag("--trace", o.trace, "print every hop step");
    star->add_option("--algo", o.algo, "hopping, oracle, or (type b) unfolded");
    star->add_option("w", o.first, "left factor")->required();
    star->add_option("v", o.second, "right factor")->required();

    auto* hop_cmd = app.add_subcommand("hop", "apply a single hopping operator");
    add_type(hop_cmd);
    hop_cmd->add_flag("--trace", o.trace, "print every step");
    hop_cmd->add_option("--t", o.tracked, "tracked value")->required();
    hop_cmd->add_option("--list", o.list, "ordered target list, e.g. 3,6,5")->required();
    hop_cmd->add_option("word", o.first, "w")->required();

    auto* decompose = app.add_subcommand("decompose", "inversion sequence, reduced word and length");
    add_type(decompose);
    decompose->add_flag("--from-sequence", o.from_sequence, "rebuild the word from a sequence");
    decompose->add_option("word", o.first, "w or a sequence")->required();

    auto* unfold_cmd = app.add_subcommand("unfold", "signed permutation to a permutation of [2n]");
    add_type(unfold_cmd);
    unfold_cmd->add_flag("--signed", o.signed_output, "print signed values instead of 1..2n");
    unfold_cmd->add_option("word", o.first, "signed permutation")->required();

    auto* fold_cmd = app.add_subcommand("fold", "mirror-symmetric permutation of [2n] to B_n");
    add_type(fold_cmd);
    fold_cmd->add_option("word", o.first, "permutation of [2n]")->required();

    auto* interval = app.add_subcommand("interval", "lower Bruhat interval [e, w]");
    add_type(interval);
    interval->add_option("--dot", o.dot, "write the Hasse diagram as DOT ('-' for stdout)");
    interval->add_option("word", o.first, "w")->required();

    auto* verify = app.add_subcommand("verify", "run the property sweeps");
    verify->add_option("--seed", o.seed, "base seed");
    verify->add_option("--samples", o.samples, "random pairs per sampled type-A rank")->check(CLI::PositiveNumber);
    verify->add_option("--samples-b", o.samples_b, "random pairs per sampled type-B rank")
        ->check(CLI::PositiveNumber);

    auto* bench = app.add_subcommand("bench", "time hopping against the reduced-word oracle");
    add_type(bench);
    bench->add_option("--ns", o.ns, "comma separated ranks");
    bench->add_option("--trials", o.trials, "timed pairs per rank")->check(CLI::PositiveNumber);
    bench->add_option("--seed", o.seed, "input seed");
    bench->add_option("--csv", o.csv, "output path ('-' for stdout)");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp& e) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }

    try {
        if (*star) return cmd_star(o, out);
        if (*hop_cmd) return cmd_hop(o, out);
        if (*decompose) return cmd_decompose(o, out);
        if (*unfold_cmd) return cmd_unfold(o, out);
        if (*fold_cmd) return cmd_fold(o, out);
        if (*interval) {
            if (type_b(o)) throw std::invalid_argument("interval: only type a is supported");
            return cmd_interval(o, out);
        }
        if (*verify) return cmd_verify(o, out);
        if (*bench) return cmd_bench(o, out, err);
    } catch (const BenchMismatch& e) {
        err << "error: " << e.what() << '\n';
        return kExitFailed;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::out_of_range& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitFailed;
    }
    return kExitUsage;
}

} // namespace demazure::cli
