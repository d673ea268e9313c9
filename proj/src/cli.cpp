#include "weave/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>

#include "weave/census.hpp"
#include "weave/classify.hpp"
#include "weave/textio.hpp"

namespace weave::cli {

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct EnumOptions {
    int n = 0;
    std::string mode = "interweavings";
    std::string shard;
    int threads = 1;
    bool allow_large = false;
    bool progress = false;
};

struct MatrixOptions {
    std::vector<std::string> words;
    std::string file;
};

void add_enum_options(CLI::App* sub, EnumOptions& o, bool with_mode) {
    sub->add_option("--n", o.n, "matrix order")->required();
    if (with_mode) {
        sub->add_option("--mode", o.mode, "all | interweavings")
            ->check(CLI::IsMember({"all", "interweavings"}));
    }
    sub->add_option("--shard", o.shard, "process only shard INDEX/TOTAL of the first-row values");
    sub->add_option("--threads", o.threads, "worker threads (each runs one shard)")
        ->check(CLI::Range(1, 256));
    sub->add_flag("--allow-large", o.allow_large,
                  "permit n >= 6; such runs take hours or longer");
    sub->add_flag("--progress", o.progress,
                  "report candidates examined per shard on standard error");
}

void add_matrix_options(CLI::App* sub, MatrixOptions& o) {
    sub->add_option("matrix", o.words, "row words of the matrix, e.g. 1 2");
    sub->add_option("--file", o.file, "file holding a tuple line or a 0/1 grid");
}

EnumConfig make_config(const EnumOptions& o) {
    EnumConfig cfg;
    cfg.n = o.n;
    cfg.mode = o.mode == "all" ? EnumMode::all_classes : EnumMode::interweavings;
    cfg.limit_override = o.allow_large;
    if (!o.shard.empty()) cfg.shard = parse_shard(o.shard);
    if (!o.shard.empty() && o.threads > 1) {
        throw ConfigError("--shard and --threads > 1 cannot be combined");
    }
    if (cfg.n >= kGuardedEnumOrder && !cfg.limit_override) {
        throw ConfigError("n = " + std::to_string(cfg.n) +
                          " needs --allow-large (full enumeration runs for hours or longer)");
    }
    cfg.validate();
    return cfg;
}

CountReport run_enumeration(const EnumOptions& o, const RecordSink& sink, std::ostream& err) {
    const EnumConfig cfg = make_config(o);
    ProgressFn progress;
    std::mutex err_mutex;
    if (o.progress) {
        progress = [&](int shard, std::uint64_t candidates) {
            std::lock_guard lock(err_mutex);
            err << "shard " << shard << ": " << candidates << " candidates examined\n";
        };
    }
    if (o.threads > 1) return enumerate_parallel(cfg, o.threads, sink, progress);
    return enumerate_classes(cfg, sink, progress);
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot read '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

BitMatrix read_matrix(const MatrixOptions& o) {
    if (!o.file.empty() && !o.words.empty()) {
        throw UsageError("give either an inline tuple or --file, not both");
    }
    if (!o.file.empty()) return parse_matrix(slurp(o.file));
    if (o.words.empty()) throw UsageError("no matrix given");
    std::string joined;
    for (const auto& w : o.words) {
        if (!joined.empty()) joined += ' ';
        joined += w;
    }
    return parse_tuple(joined);
}

// Writes to the named file, or to `fallback` when the path is empty.
class Output {
public:
    Output(const std::string& path, std::ostream& fallback) : stream_(&fallback) {
        if (!path.empty()) {
            file_ = std::make_unique<std::ofstream>(path, std::ios::binary | std::ios::trunc);
            if (!*file_) throw UsageError("cannot write '" + path + "'");
            stream_ = file_.get();
        }
    }
    std::ostream& stream() { return *stream_; }
    void finish() {
        stream_->flush();
        if (!*stream_) throw UsageError("write failed");
    }

private:
    std::unique_ptr<std::ofstream> file_;
    std::ostream* stream_;
};

const char* yes_no(bool b) { return b ? "yes" : "no"; }

}  // namespace

std::string format_report(const CountReport& r) {
    std::ostringstream out;
    out << "n: " << r.n << '\n';
    out << "q_count: " << r.q_count << '\n';
    if (r.b_bar) out << "b_bar: " << *r.b_bar << '\n';
    out << "q_bar: " << r.q_bar << '\n';
    out << "m_bar: " << r.m_bar << '\n';
    out << "r_bar: " << r.r_bar << '\n';
    out << "candidates_examined: " << r.candidates_examined << '\n';
    out << "elapsed: " << std::fixed << std::setprecision(6) << r.elapsed.count() << "s\n";
    return out.str();
}

CountReport parse_report(std::istream& in) {
    std::map<std::string, std::string> fields;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        const auto colon = line.find(": ");
        if (colon == std::string::npos) throw ParseError(line_no, 0, "expected 'key: value'");
        fields[line.substr(0, colon)] = line.substr(colon + 2);
    }
    auto number = [&](const std::string& key) -> std::uint64_t {
        const auto it = fields.find(key);
        if (it == fields.end()) throw ParseError(line_no, 0, "missing key '" + key + "'");
        try {
            return std::stoull(it->second);
        } catch (const std::logic_error&) {
            throw ParseError(line_no, 0, "key '" + key + "' is not an integer");
        }
    };
    CountReport r;
    r.n = static_cast<int>(number("n"));
    r.mode = fields.count("b_bar") ? EnumMode::all_classes : EnumMode::interweavings;
    r.q_count = number("q_count");
    if (r.mode == EnumMode::all_classes) r.b_bar = number("b_bar");
    r.q_bar = number("q_bar");
    r.m_bar = number("m_bar");
    r.r_bar = number("r_bar");
    r.candidates_examined = number("candidates_examined");
    if (const auto it = fields.find("elapsed"); it != fields.end()) {
        try {
            r.elapsed = std::chrono::duration<double>(std::stod(it->second));
        } catch (const std::logic_error&) {
            throw ParseError(line_no, 0, "elapsed is not a number");
        }
    }
    return r;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Weaving structures as binary matrices: census, listing and classification",
                 "weave"};
    app.require_subcommand(1, 1);

    EnumOptions count_opts;
    auto* count = app.add_subcommand("count", "count the classes of order n");
    add_enum_options(count, count_opts, true);

    EnumOptions list_opts;
    std::string list_filter = "all";
    std::string list_out;
    auto* list = app.add_subcommand("list", "print one canonical representative per interweaving");
    add_enum_options(list, list_opts, false);
    list->add_option("--filter", list_filter, "all | mirror | rotation")
        ->check(CLI::IsMember({"all", "mirror", "rotation"}));
    list->add_option("--out", list_out, "output file (default: standard output)");

    MatrixOptions classify_opts;
    auto* classify_cmd = app.add_subcommand("classify", "report the class of one matrix");
    add_matrix_options(classify_cmd, classify_opts);

    MatrixOptions render_opts;
    std::string render_format = "grid";
    std::string render_out;
    auto* render = app.add_subcommand("render", "draw a matrix as a weave pattern");
    add_matrix_options(render, render_opts);
    render->add_option("--format", render_format, "grid | pbm")
        ->check(CLI::IsMember({"grid", "pbm"}));
    render->add_option("--out", render_out, "output file (default: standard output)");

    int verify_n_max = 0;
    std::string verify_expected;
    int verify_threads = 1;
    auto* verify = app.add_subcommand("verify", "compare computed counts with the reference table");
    verify->add_option("--n-max", verify_n_max, "largest order to enumerate (2..5)")
        ->required()
        ->check(CLI::Range(2, 5));
    verify->add_option("--expected", verify_expected,
                       "fixture of expected counts, one 'n key value' per line");
    verify->add_option("--threads", verify_threads, "worker threads")->check(CLI::Range(1, 256));

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    CLI::App* active = app.get_subcommands().front();
    try {
        if (active == count) {
            out << format_report(run_enumeration(count_opts, {}, err));
        } else if (active == list) {
            list_opts.mode = "interweavings";
            Output dest(list_out, out);
            auto& os = dest.stream();
            run_enumeration(list_opts, [&](const ClassRecord& r) {
                if ((list_filter == "mirror" && !r.self_mirror) ||
                    (list_filter == "rotation" && !r.rotation_stable)) {
                    return;
                }
                os << format_tuple(r.canonical) << '\n';
            }, err);
            dest.finish();
        } else if (active == classify_cmd) {
            const BitMatrix a = read_matrix(classify_opts);
            const ClassRecord r = weave::classify(a);
            out << "order: " << a.order() << '\n';
            out << "input: " << format_tuple(a) << '\n';
            out << "canonical: " << format_tuple(r.canonical) << '\n';
            out << "input_canonical: " << yes_no(r.canonical == a) << '\n';
            out << "orbit_size: " << r.orbit_size << '\n';
            out << "interweaving: " << yes_no(r.is_interweaving) << '\n';
            out << "self_mirror: " << yes_no(r.self_mirror) << '\n';
            out << "rotation_stable: " << yes_no(r.rotation_stable) << '\n';
        } else if (active == render) {
            const BitMatrix a = read_matrix(render_opts);
            Output dest(render_out, out);
            dest.stream() << (render_format == "pbm" ? render_pbm(a) : render_grid(a));
            dest.finish();
        } else if (active == verify) {
            ExpectedTable expected = ExpectedTable::reference();
            if (!verify_expected.empty()) {
                std::istringstream in(slurp(verify_expected));
                expected = ExpectedTable::parse(in);
            }
            const auto cells = verify_table(verify_n_max, expected, verify_threads);
            out << std::left << std::setw(3) << "n" << std::setw(16) << "cell" << std::right
                << std::setw(14) << "expected" << std::setw(14) << "computed" << "  status\n";
            for (const auto& c : cells) {
                out << std::left << std::setw(3) << c.n << std::setw(16) << c.key << std::right
                    << std::setw(14) << c.expected << std::setw(14) << c.computed << "  "
                    << (c.pass ? "pass" : "FAIL") << '\n';
            }
            const bool ok = all_pass(cells);
            out << (ok ? "all cells pass" : "verification FAILED") << '\n';
            return ok ? kExitOk : kExitMismatch;
        }
    } catch (const ParseError& e) {
        err << "weave " << active->get_name() << ": parse error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const ConfigError& e) {
        err << "weave " << active->get_name() << ": " << e.what() << "\n\n" << active->help();
        return kExitUsage;
    } catch (const UsageError& e) {
        err << "weave " << active->get_name() << ": " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::logic_error& e) {
        // OutOfRange and friends from the library: bad matrix input.
        err << "weave " << active->get_name() << ": " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitOk;
}

}  // namespace weave::cli
