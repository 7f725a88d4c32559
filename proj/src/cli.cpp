#include "zcfast/cli.hpp"

#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "zcfast/bench.hpp"
#include "zcfast/io.hpp"
#include "zcfast/oracle.hpp"
#include "zcfast/pattern.hpp"
#include "zcfast/transform.hpp"
#include "zcfast/verify.hpp"

namespace zcfast {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitBadArgs = 2;

struct SequenceFlags {
    std::int64_t p = 0;
    std::int64_t u = 0;
    std::int64_t ts = 0;
    std::string out;
    std::string format = "csv";
};

void add_sequence_flags(CLI::App* cmd, SequenceFlags& f) {
    cmd->add_option("--p", f.p, "prime sequence length")->required();
    cmd->add_option("--u", f.u, "root in [1, P-1]")->required();
    cmd->add_option("--ts", f.ts, "cyclic shift in [0, P-1]");
    cmd->add_option("--out", f.out, "output path (default stdout)");
    cmd->add_option("--format", f.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
}

class Sink {
public:
    Sink(const std::string& path, std::ostream& fallback) : stream_(&fallback) {
        if (!path.empty()) {
            file_.open(path);
            if (!file_) throw std::invalid_argument("cannot open output file: " + path);
            stream_ = &file_;
        }
    }
    std::ostream& get() { return *stream_; }

private:
    std::ofstream file_;
    std::ostream* stream_;
};

void emit(const SequenceFlags& f, const ZcParams& params, const ComplexSequence& seq, std::ostream& out) {
    Sink sink(f.out, out);
    if (f.format == "json") {
        io::write_json(sink.get(), params, seq);
    } else {
        io::write_csv(sink.get(), seq);
    }
}

ComplexSequence run_transform(const ZcParams& params, Direction dir, const std::string& method) {
    if (method == "fast") return execute(TransformPlan(params, dir));
    if (method == "reference") return dir == Direction::kDft ? dft_reference(params) : idft_reference(params);
    const auto z = zc_time(params);
    return dir == Direction::kDft ? oracle::naive_dft(z) : oracle::naive_idft(z);
}

std::vector<std::string> split_flips(const std::string& list) {
    std::vector<std::string> steps;
    std::stringstream ss(list);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item == "none") continue;
        if (item != "dft" && item != "idft" && item != "conj") throw std::invalid_argument("unknown flip: " + item);
        steps.push_back(item);
    }
    return steps;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Zadoff-Chu sequences and their O(P) DFT/IDFT", "zcfast"};
    app.require_subcommand(1);

    SequenceFlags gen_flags;
    auto* gen = app.add_subcommand("gen", "write a ZC sequence");
    add_sequence_flags(gen, gen_flags);

    SequenceFlags dft_flags;
    std::string dft_method = "fast";
    auto* dft = app.add_subcommand("dft", "DFT of a ZC sequence");
    add_sequence_flags(dft, dft_flags);
    dft->add_option("--method", dft_method)->check(CLI::IsMember({"fast", "reference", "naive"}));

    SequenceFlags idft_flags;
    std::string idft_method = "fast";
    bool normalize = false;
    auto* idft = app.add_subcommand("idft", "IDFT of a ZC sequence");
    add_sequence_flags(idft, idft_flags);
    idft->add_option("--method", idft_method)->check(CLI::IsMember({"fast", "reference", "naive"}));
    idft->add_flag("--normalize", normalize, "divide by P");

    SequenceFlags pat_flags;
    std::string flips = "none";
    auto* pat = app.add_subcommand("pattern", "export an lmFH pattern as CSV");
    pat->add_option("--p", pat_flags.p)->required();
    pat->add_option("--u", pat_flags.u)->required();
    pat->add_option("--ts", pat_flags.ts);
    pat->add_option("--flip", flips, "comma list of dft|idft|conj, applied in order");
    pat->add_option("--out", pat_flags.out);

    VerifyOptions verify_opts;
    auto* verify = app.add_subcommand("verify", "run the invariant suite");
    verify->add_option("--pmax", verify_opts.pmax, "largest prime swept");
    verify->add_flag("--include-839", verify_opts.include_839);
    verify->add_option("--inject-fault", verify_opts.fs_fault, "offset fast-path Fs (mutation check)")->group("");

    std::int64_t bench_p = 839, bench_u = 25, bench_reps = 100;
    auto* bench = app.add_subcommand("bench", "time fast vs reference vs naive");
    bench->add_option("--p", bench_p);
    bench->add_option("--u", bench_u);
    bench->add_option("--reps", bench_reps);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitBadArgs;
    }

    try {
        if (*gen) {
            const ZcParams params(Prime(gen_flags.p), gen_flags.u, gen_flags.ts);
            emit(gen_flags, params, zc_time(params), out);
        } else if (*dft) {
            const ZcParams params(Prime(dft_flags.p), dft_flags.u, dft_flags.ts);
            emit(dft_flags, params, run_transform(params, Direction::kDft, dft_method), out);
        } else if (*idft) {
            const ZcParams params(Prime(idft_flags.p), idft_flags.u, idft_flags.ts);
            auto seq = run_transform(params, Direction::kIdft, idft_method);
            if (normalize) {
                for (auto& v : seq) v /= static_cast<double>(params.P.value());
            }
            emit(idft_flags, params, seq, out);
        } else if (*pat) {
            const ZcParams params(Prime(pat_flags.p), pat_flags.u, pat_flags.ts);
            auto pattern = make_pattern(params.P, -params.u, 0, params.ts);
            for (const auto& step : split_flips(flips)) {
                if (step == "dft") pattern = flip_dft(pattern);
                else if (step == "idft") pattern = flip_idft(pattern);
                else pattern = flip_conjugate(pattern);
            }
            Sink sink(pat_flags.out, out);
            sink.get() << export_pattern(pattern);
        } else if (*verify) {
            const auto report = run_verification(verify_opts);
            report.print(out);
            return report.all_passed() ? kExitOk : kExitVerifyFailed;
        } else if (*bench) {
            const ZcParams params(Prime(bench_p), bench_u);
            out << run_bench(params, bench_reps).to_json() << '\n';
        }
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kExitBadArgs;
    }
    return kExitOk;
}

}  // namespace zcfast
