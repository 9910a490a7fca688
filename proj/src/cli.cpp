#include "tcc/cli.hpp"

#include <algorithm>
#include <iomanip>
#include <ostream>

#include "CLI11.hpp"
#include "tcc/centralizer.hpp"
#include "tcc/channel.hpp"
#include "tcc/code.hpp"
#include "tcc/comb.hpp"
#include "tcc/io.hpp"
#include "tcc/report.hpp"
#include "tcc/verify.hpp"

namespace tcc::cli {

namespace {

using nlohmann::json;

/// Raised for invalid flag combinations; maps to exit code 1.
struct UsageError : Error {
    using Error::Error;
};

/// Raised after a verification or simulation failure has been reported; maps to exit code 2.
struct Failed {};

struct Options {
    std::int64_t n = -1, p = -1, x = -1, y = -1, a = -1;
    std::string matrix_file;
    bool json = false;
    std::uint64_t seed = 0;
    std::size_t t = 0;
    std::uint64_t trials = 1000;
    bool exhaustive = false;
    std::uint32_t p_max = 7;
    std::size_t n_max = 5;
    bool quiet = false;
};

void add_comb_flags(CLI::App* cmd, Options& o) {
    cmd->add_option("--n", o.n, "matrix order (>= 2)");
    cmd->add_option("--p", o.p, "field characteristic (prime)");
    cmd->add_option("--x", o.x, "coefficient of J_n, in [0, p)");
    cmd->add_option("--y", o.y, "coefficient of I_n, in [0, p)");
}

void add_code_flags(CLI::App* cmd, Options& o) {
    add_comb_flags(cmd, o);
    cmd->add_option("--a", o.a, "twist constant, in [0, p)")->required();
    cmd->add_option("--matrix-file", o.matrix_file, "read A from a matrix file instead of --n/--x/--y");
}

Felt field_value(std::int64_t v, const char* name, Prime p) {
    if (v < 0 || static_cast<std::uint64_t>(v) >= p.value())
        throw UsageError(std::string("--") + name + " must be given and lie in [0, " + std::to_string(p.value()) + ")");
    return Felt(static_cast<std::uint64_t>(v), p);
}

Prime prime_flag(std::int64_t p) {
    if (p < 0) throw UsageError("--p is required");
    try {
        return Prime(static_cast<std::uint64_t>(p));
    } catch (const Error& e) {
        throw UsageError(e.what());
    }
}

CombParams comb_params(const Options& o) {
    const auto p = prime_flag(o.p);
    if (o.n < 0) throw UsageError("--n is required");
    try {
        return CombParams(static_cast<std::size_t>(o.n), field_value(o.x, "x", p), field_value(o.y, "y", p));
    } catch (const UsageError&) {
        throw;
    } catch (const Error& e) {
        throw UsageError(e.what());
    }
}

/// The twisted matrix together with the (x, y) it came from, when known.
struct Source {
    TwistSpec spec;
    std::optional<CombParams> params;
};

Source code_source(const Options& o) {
    if (!o.matrix_file.empty()) {
        if (o.n >= 0 || o.x >= 0 || o.y >= 0) throw UsageError("--matrix-file cannot be combined with --n/--x/--y");
        Matrix A = [&] {
            try {
                return read_matrix_file(o.matrix_file);
            } catch (const Error& e) {
                throw UsageError(e.what());
            }
        }();
        if (o.p >= 0 && static_cast<std::uint64_t>(o.p) != A.prime().value())
            throw UsageError("--p disagrees with the field in the matrix file");
        if (!A.is_square()) throw UsageError("matrix file must describe a square matrix");
        const auto a = field_value(o.a, "a", A.prime());
        try {
            return {TwistSpec(std::move(A), a), std::nullopt};
        } catch (const Error& e) {
            throw UsageError(e.what());
        }
    }
    const auto params = comb_params(o);
    return {TwistSpec(comb_matrix(params), field_value(o.a, "a", params.prime())), params};
}

std::vector<std::vector<std::uint32_t>> rows_of(const LinearCode& code) {
    std::vector<std::vector<std::uint32_t>> out;
    if (!code.generator()) return out;
    const auto& g = *code.generator();
    for (std::size_t i = 0; i < g.rows(); ++i) {
        const auto r = g.row(i);
        out.emplace_back(r.raw().begin(), r.raw().end());
    }
    return out;
}

CodeSummary summarize(const Source& src, const LinearCode& code) {
    CodeSummary s;
    s.p = src.spec.prime().value();
    s.n = src.spec.n();
    if (src.params) {
        s.x = src.params->x.value();
        s.y = src.params->y.value();
    }
    s.a = src.spec.a.value();
    s.length = code.length();
    s.dimension = code.dimension();
    s.generator = rows_of(code);
    return s;
}

void print_matrix(std::ostream& out, const Matrix& m, const std::string& indent = "  ") {
    for (std::size_t i = 0; i < m.rows(); ++i) {
        out << indent;
        for (std::size_t j = 0; j < m.cols(); ++j) out << (j ? " " : "") << std::setw(2) << m.at(i, j);
        out << '\n';
    }
}

std::string spectrum_str(const std::vector<std::pair<std::uint32_t, std::size_t>>& s) {
    std::string r = "{";
    for (std::size_t i = 0; i < s.size(); ++i)
        r += (i ? ", " : "") + std::to_string(s[i].first) + ":" + std::to_string(s[i].second);
    return r + "}";
}

std::vector<std::pair<std::uint32_t, std::size_t>> flatten(const Spectrum& s) {
    std::vector<std::pair<std::uint32_t, std::size_t>> out;
    for (const auto& [v, m] : s.entries) out.emplace_back(v.value(), m);
    return out;
}

std::string header(const CodeSummary& s) {
    std::string h = "p=" + std::to_string(s.p) + " n=" + std::to_string(s.n);
    if (s.x) h += " x=" + std::to_string(*s.x);
    if (s.y) h += " y=" + std::to_string(*s.y);
    return h + " a=" + std::to_string(s.a);
}

// ---------------------------------------------------------------- commands

int cmd_spectrum(const Options& o, std::ostream& out) {
    const auto params = comb_params(o);
    const auto A = comb_matrix(params);
    SpectrumSummary s;
    s.p = params.prime().value();
    s.n = params.n;
    s.x = params.x.value();
    s.y = params.y.value();
    s.spectrum = flatten(comb_spectrum(params));
    if (s.p <= eigen_scan_max_prime) s.scan = flatten(eigen_scan(A));
    s.diagonalizable = comb_spectrum(params).total_multiplicity() == params.n;

    if (o.json) {
        out << json(s).dump() << '\n';
        return ok;
    }
    out << "A = " << s.x << "*J_" << s.n << " + " << s.y << "*I_" << s.n << " over GF(" << s.p << ")\n";
    print_matrix(out, A);
    out << "eigenvalues (value:geometric multiplicity): " << spectrum_str(s.spectrum) << '\n';
    if (s.scan)
        out << "eigen scan cross-check:                     " << spectrum_str(*s.scan)
            << (*s.scan == s.spectrum ? "  (agrees)" : "  (DISAGREES)") << '\n';
    else
        out << "eigen scan cross-check: skipped (p > " << eigen_scan_max_prime << ")\n";
    out << (s.diagonalizable ? "diagonalizable over GF(p)" : "defective over GF(p): not diagonalizable") << '\n';
    if (s.diagonalizable) {
        const auto [P, D] = diagonalize(params);
        out << "P (rows form an eigenbasis):\n";
        print_matrix(out, P);
        out << "D = P A P^-1:\n";
        print_matrix(out, D);
    }
    return ok;
}

int cmd_build(const Options& o, std::ostream& out) {
    const auto src = code_source(o);
    const auto code = code_from_basis(centralizer_code(src.spec));
    const auto s = summarize(src, code);
    if (o.json) {
        out << json(s).dump() << '\n';
        return ok;
    }
    out << "C(A, a) for " << header(s) << '\n';
    out << "dimension " << s.dimension << " (length " << s.length << ")\n";
    if (code.generator()) {
        out << "generator (RREF, rows are column-stacked codewords):\n";
        print_matrix(out, *code.generator());
    } else {
        out << "zero code: only the zero matrix satisfies AB = aBA\n";
    }
    return ok;
}

int cmd_analyze(const Options& o, std::ostream& out, std::ostream& err) {
    const auto src = code_source(o);
    const auto code = code_from_basis(centralizer_code(src.spec));
    auto s = summarize(src, code);
    if (code.dimension() == 0) {
        err << "zero code: C(A, a) = {0} has no minimum distance\n";
        return failure;
    }
    const auto r = analyze(code);
    s.min_distance = r.min_distance;
    s.mds = r.mds;
    s.detect = r.detect;
    s.correct = r.correct;
    s.rate = r.rate;
    if (o.json) {
        out << json(s).dump() << '\n';
        return ok;
    }
    out << "C(A, a) for " << header(s) << '\n';
    out << "parameters  [" << r.length << ", " << r.dimension << ", " << r.min_distance << "]\n";
    out << "MDS         " << (r.mds ? "yes (d = N - k + 1)" : "no") << '\n';
    out << "detects     " << r.detect << " errors\n";
    out << "corrects    " << r.correct << " errors\n";
    out << "rate        " << r.rate.str() << '\n';
    return ok;
}

int cmd_verify(const Options& o, std::ostream& out) {
    if (o.p_max > verify_max_prime || o.n_max > verify_max_order || o.n_max < 2 || o.p_max < 2)
        throw UsageError("verify requires 2 <= --p-max <= 13 and 2 <= --n-max <= 6");
    const auto rows = verify_sweep(o.p_max, o.n_max);
    std::size_t hyp = 0, matched = 0;
    std::vector<const VerifyRow*> bad;
    for (const auto& r : rows) {
        if (!r.hypotheses_met) continue;
        ++hyp;
        if (r.matches_theorem.value_or(false))
            ++matched;
        else
            bad.push_back(&r);
    }
    if (o.json) {
        json j;
        j["rows"] = rows;
        j["summary"] = {{"tuples", rows.size()}, {"hypothesis_rows", hyp}, {"matching", matched}, {"mismatching", bad.size()}};
        out << j.dump() << '\n';
    } else {
        if (!o.quiet) {
            out << "   p  n   x   y   a  hyp  dim    d  mds  result\n";
            for (const auto& r : rows) {
                out << std::setw(4) << r.p << std::setw(3) << r.n << std::setw(4) << r.x << std::setw(4) << r.y
                    << std::setw(4) << r.a << std::setw(5) << (r.hypotheses_met ? "yes" : "no") << std::setw(5) << r.dim
                    << std::setw(5) << (r.d ? std::to_string(*r.d) : "-") << std::setw(5)
                    << (r.mds ? (*r.mds ? "yes" : "no") : "-") << "  ";
                if (r.matches_theorem)
                    out << (*r.matches_theorem ? "matches [n^2, 1, n^2]" : "MISMATCH");
                else
                    out << r.note;
                out << '\n';
            }
        }
        for (const auto* r : bad)
            out << "mismatch: p=" << r->p << " n=" << r->n << " x=" << r->x << " y=" << r->y << " a=" << r->a
                << " dim=" << r->dim << '\n';
        out << rows.size() << " tuples, " << hyp << " meet the hypotheses, " << matched << " match the theorem\n";
    }
    if (!bad.empty()) throw Failed{};
    return ok;
}

int cmd_simulate(const Options& o, std::ostream& out, std::ostream& err) {
    const auto src = code_source(o);
    const auto code = code_from_basis(centralizer_code(src.spec));
    if (src.params && !theorem_hypotheses(*src.params, src.spec.a))
        err << "warning: parameters do not meet p | xn + y, x != 0, y != 0, a not in {0, 1}\n";
    if (code.dimension() == 0) {
        err << "zero code: C(A, a) = {0}; nothing to transmit\n";
        return failure;
    }
    if (o.t > code.length()) throw UsageError("--t exceeds the code length " + std::to_string(code.length()));

    const auto base = summarize(src, code);
    SimulationSummary s;
    s.p = base.p;
    s.n = base.n;
    s.x = base.x;
    s.y = base.y;
    s.a = base.a;
    s.length = base.length;
    s.dimension = base.dimension;
    s.t = o.t;
    s.seed = o.seed;
    s.mode = o.exhaustive ? "exhaustive" : "monte_carlo";
    try {
        s.capacity = analyze(code).correct;
    } catch (const GuardExceeded&) {
    }

    if (o.exhaustive) {
        s.correction_ok = exhaustive_correction_check(code, o.t);
        try {
            s.detection_ok = exhaustive_detection_check(code, o.t);
        } catch (const GuardExceeded&) {
        }
        s.pass = *s.correction_ok;
    } else {
        if (o.trials == 0) throw UsageError("--trials must be at least 1");
        s.stats = monte_carlo(code, o.t, o.trials, o.seed);
        s.pass = s.stats->successes == s.stats->trials;
    }

    if (o.json) {
        out << json(s).dump() << '\n';
    } else {
        out << "channel simulation for " << header(base) << ", t = " << s.t << " (" << s.mode << ")\n";
        if (s.stats)
            out << "trials " << s.stats->trials << ", successes " << s.stats->successes << ", ambiguous "
                << s.stats->ambiguous << ", miscorrected " << s.stats->miscorrected << " (seed " << s.seed << ")\n";
        if (s.correction_ok)
            out << "every weight-" << s.t << " pattern corrected: " << (*s.correction_ok ? "yes" : "no") << '\n';
        if (s.detection_ok)
            out << "every pattern of weight 1.." << s.t << " detected: " << (*s.detection_ok ? "yes" : "no") << '\n';
        if (s.capacity) {
            if (s.t <= *s.capacity)
                out << (s.pass ? "PASS" : "FAIL") << ": t = " << s.t << " within correction capacity " << *s.capacity
                    << '\n';
            else
                out << (s.pass ? "PASS" : "FAIL") << ": t = " << s.t << " exceeds correction capacity " << *s.capacity
                    << '\n';
        } else {
            out << (s.pass ? "PASS" : "FAIL") << '\n';
        }
    }
    if (!s.pass) throw Failed{};
    return ok;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Twisted centralizer codes over prime fields", "tcc"};
    app.require_subcommand(1);
    Options o;

    auto* spectrum = app.add_subcommand("spectrum", "spectrum and diagonalization of A = xJ_n + yI_n");
    add_comb_flags(spectrum, o);

    auto* build = app.add_subcommand("build", "compute C(A, a) and its RREF generator");
    add_code_flags(build, o);

    auto* analyze_cmd = app.add_subcommand("analyze", "code parameters [N, k, d], MDS, capacities and rate");
    add_code_flags(analyze_cmd, o);

    auto* verify = app.add_subcommand("verify", "sweep all (p, n, x, y, a) and check the [n^2, 1, n^2] theorem");
    verify->add_option("--p-max", o.p_max, "largest prime in the sweep (<= 13)")->capture_default_str();
    verify->add_option("--n-max", o.n_max, "largest order in the sweep (<= 6)")->capture_default_str();
    verify->add_flag("--quiet", o.quiet, "print only mismatches and the summary");

    auto* simulate = app.add_subcommand("simulate", "symbol-error channel simulation");
    add_code_flags(simulate, o);
    simulate->add_option("--t", o.t, "number of corrupted symbols per word")->required();
    simulate->add_option("--trials", o.trials, "Monte Carlo trials")->capture_default_str();
    simulate->add_flag("--exhaustive", o.exhaustive, "sweep every weight-t error pattern instead of sampling");

    for (auto* cmd : {spectrum, build, analyze_cmd, verify, simulate}) {
        cmd->add_flag("--json", o.json, "machine-readable output");
        cmd->add_option("--seed", o.seed, "random seed")->capture_default_str();
    }

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        app.exit(e, out, err);
        return ok;
    } catch (const CLI::CallForAllHelp& e) {
        app.exit(e, out, err);
        return ok;
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return usage;
    }

    try {
        if (*spectrum) return cmd_spectrum(o, out);
        if (*build) return cmd_build(o, out);
        if (*analyze_cmd) return cmd_analyze(o, out, err);
        if (*verify) return cmd_verify(o, out);
        if (*simulate) return cmd_simulate(o, out, err);
    } catch (const Failed&) {
        return failure;
    } catch (const UsageError& e) {
        err << "tcc: " << e.what() << '\n';
        return usage;
    } catch (const GuardExceeded& e) {
        err << "tcc: " << e.what() << '\n';
        return guard;
    } catch (const Error& e) {
        err << "tcc: " << e.what() << '\n';
        return usage;
    }
    return usage;
}

}  // namespace tcc::cli
