#include "tcc/verify.hpp"

#include "tcc/centralizer.hpp"

namespace tcc {

namespace {

constexpr std::uint64_t observed_distance_limit = 4096;

struct Tuple {
    std::uint32_t p;
    std::size_t n;
    std::uint32_t x, y, a;
};

std::vector<Tuple> sweep_tuples(std::uint32_t p_max, std::size_t n_max) {
    if (p_max > verify_max_prime || n_max > verify_max_order)
        throw Error("verify sweep is limited to p <= " + std::to_string(verify_max_prime) + " and n <= " +
                    std::to_string(verify_max_order));
    std::vector<Tuple> out;
    for (std::uint32_t p = 2; p <= p_max; ++p) {
        if (!is_prime(p)) continue;
        for (std::size_t n = 2; n <= n_max; ++n)
            for (std::uint32_t x = 0; x < p; ++x)
                for (std::uint32_t y = 0; y < p; ++y)
                    for (std::uint32_t a = 0; a < p; ++a) out.push_back({p, n, x, y, a});
    }
    return out;
}

bool few_codewords(const LinearCode& code) {
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < code.dimension(); ++i)
        if ((total *= code.prime().value()) > observed_distance_limit) return false;
    return true;
}

VerifyRow run(const Tuple& t) {
    const Prime p(t.p);
    return verify_tuple(CombParams(t.n, Felt(t.x, p), Felt(t.y, p)), Felt(t.a, p));
}

std::string outside_reason(const CombParams& params, Felt a) {
    if (params.x.is_zero()) return "outside theorem: x = 0";
    if (params.y.is_zero()) return "outside theorem: y = 0";
    if (!params.row_sum().is_zero()) return "outside theorem: p does not divide xn + y";
    return "outside theorem: a = " + std::to_string(a.value());
}

}  // namespace

bool theorem_hypotheses(const CombParams& params, Felt a) {
    return params.row_sum().is_zero() && !params.x.is_zero() && !params.y.is_zero() && a.value() != 0 &&
           a.value() != 1;
}

VerifyRow verify_tuple(const CombParams& params, Felt a) {
    const auto n = params.n;
    const auto p = params.prime();
    VerifyRow row{p.value(), n, params.x.value(), params.y.value(), a.value(), theorem_hypotheses(params, a), 0, {}, {}, {}, {}};

    const auto basis = centralizer_code(TwistSpec(comb_matrix(params), a));
    const auto code = code_from_basis(basis);
    row.dim = code.dimension();

    const bool want_distance =
        row.dim > 0 && (row.hypotheses_met || few_codewords(code));
    std::optional<CodeReport> report;
    if (want_distance) {
        try {
            report = analyze(code);
            row.d = report->min_distance;
            row.mds = report->mds;
        } catch (const GuardExceeded&) {
        }
    }

    if (row.hypotheses_met) {
        const Vector ones(p, std::vector<std::uint32_t>(n * n, 1));
        const auto expected = report_from_parameters(n * n, 1, n * n);
        row.matches_theorem = row.dim == 1 && code.generator()->row(0) == ones && report && *report == expected;
    } else {
        row.note = outside_reason(params, a);
    }
    return row;
}

std::vector<VerifyRow> verify_sweep(std::uint32_t p_max, std::size_t n_max) {
    const auto tuples = sweep_tuples(p_max, n_max);
    std::vector<std::optional<VerifyRow>> slots(tuples.size());
#pragma omp parallel for schedule(dynamic, 16)
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(tuples.size()); ++i) slots[i] = run(tuples[i]);
    std::vector<VerifyRow> rows;
    rows.reserve(slots.size());
    for (auto& s : slots) rows.push_back(std::move(*s));
    return rows;
}

namespace serial {

std::vector<VerifyRow> verify_sweep(std::uint32_t p_max, std::size_t n_max) {
    std::vector<VerifyRow> rows;
    for (const auto& t : sweep_tuples(p_max, n_max)) rows.push_back(run(t));
    return rows;
}

}  // namespace serial

}  // namespace tcc
