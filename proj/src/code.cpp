#include "tcc/code.hpp"

#include <algorithm>
#include <limits>

#include "codebook.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace tcc {

LinearCode::LinearCode(Prime p, std::size_t length, std::span<const Vector> rows) : p_(p), length_(length) {
    if (length == 0) throw Error("code length must be positive");
    for (const auto& r : rows) {
        if (r.prime() != p) throw Error("generator row over the wrong field");
        if (r.size() != length) throw Error("generator row length does not match code length");
    }
    const auto canonical = canonical_row_basis(rows);
    if (!canonical.empty()) generator_ = Matrix::from_rows(canonical);
}

std::uint64_t LinearCode::codeword_count(std::uint64_t limit) const {
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < dimension(); ++i) {
        total *= p_.value();
        if (total > limit)
            throw GuardExceeded("p^k = " + std::to_string(p_.value()) + "^" + std::to_string(dimension()) +
                                " exceeds enumeration limit " + std::to_string(limit));
    }
    return total;
}

Vector LinearCode::message_at(std::uint64_t index) const {
    Vector m(p_, dimension());
    for (std::size_t i = dimension(); i-- > 0;) {
        m.raw()[i] = static_cast<std::uint32_t>(index % p_.value());
        index /= p_.value();
    }
    return m;
}

bool LinearCode::contains(const Vector& word) const {
    if (word.size() != length_) throw Error("word length does not match code length");
    if (!generator_) return hamming_weight(word) == 0;
    std::vector<Vector> rows;
    for (std::size_t i = 0; i < generator_->rows(); ++i) rows.push_back(generator_->row(i));
    return in_row_space(rows, word);
}

LinearCode code_from_basis(const CentralizerBasis& basis) {
    const auto n = basis.spec.n();
    const auto rows = basis.vec_rows();
    return LinearCode(basis.spec.prime(), n * n, rows);
}

namespace {

void require_nonzero(const LinearCode& code) {
    if (code.dimension() == 0) throw Error("zero code has no minimum distance");
}

DecodeResult to_result(const LinearCode& code, const detail::Codebook& book, const detail::Nearest& best) {
    const auto w = book.word(best.index);
    return {best.ties == 1 ? DecodeStatus::unique : DecodeStatus::ambiguous,
            Vector(code.prime(), std::vector<std::uint32_t>(w.begin(), w.end())), code.message_at(best.index),
            best.distance};
}

void require_word(const LinearCode& code, const Vector& word) {
    if (word.prime() != code.prime()) throw Error("received word over the wrong field");
    if (word.size() != code.length()) throw Error("received word length does not match code length");
}

}  // namespace

std::size_t min_distance(const LinearCode& code) {
    require_nonzero(code);
    const detail::Codebook book(code);
    const auto total = static_cast<std::int64_t>(book.size());
    std::size_t best = std::numeric_limits<std::size_t>::max();
#pragma omp parallel for reduction(min : best) schedule(static)
    for (std::int64_t i = 1; i < total; ++i) {
        std::size_t w = 0;
        for (auto e : book.word(static_cast<std::uint64_t>(i))) w += e != 0;
        best = std::min(best, w);
    }
    return best;
}

CodeReport report_from_parameters(std::size_t length, std::size_t dimension, std::size_t distance) {
    if (dimension == 0) throw Error("zero code has no minimum distance");
    if (distance == 0 || distance + dimension > length + 1)
        throw Error("parameters violate the Singleton bound: d = " + std::to_string(distance) + " > N - k + 1");
    return {length,
            dimension,
            distance,
            distance == length - dimension + 1,
            distance - 1,
            (distance - 1) / 2,
            Rate{dimension, length}};
}

CodeReport analyze(const LinearCode& code) {
    return report_from_parameters(code.length(), code.dimension(), min_distance(code));
}

Vector encode(const LinearCode& code, const Vector& msg) {
    if (msg.prime() != code.prime()) throw Error("message over the wrong field");
    if (msg.size() != code.dimension())
        throw Error("message length " + std::to_string(msg.size()) + " does not match dimension " +
                    std::to_string(code.dimension()));
    if (!code.generator()) return Vector(code.prime(), code.length());
    return vec_mat(msg, *code.generator());
}

DecodeResult decode_nearest(const LinearCode& code, const Vector& word) {
    require_word(code, word);
    const detail::Codebook book(code);
    const auto total = book.size();
    detail::Nearest best;
#pragma omp parallel
    {
        std::uint64_t begin = 0, end = total;
#ifdef _OPENMP
        const auto threads = static_cast<std::uint64_t>(omp_get_num_threads());
        const auto id = static_cast<std::uint64_t>(omp_get_thread_num());
        begin = total * id / threads;
        end = total * (id + 1) / threads;
#endif
        const auto local = book.scan(word.raw(), begin, end);
#pragma omp critical
        best.merge(local);
    }
    return to_result(code, book, best);
}

namespace serial {

std::size_t min_distance(const LinearCode& code) {
    require_nonzero(code);
    std::size_t best = std::numeric_limits<std::size_t>::max();
    const auto total = code.codeword_count();
    for (std::uint64_t i = 1; i < total; ++i) best = std::min(best, hamming_weight(encode(code, code.message_at(i))));
    return best;
}

DecodeResult decode_nearest(const LinearCode& code, const Vector& word) {
    require_word(code, word);
    const auto total = code.codeword_count();
    std::size_t best = std::numeric_limits<std::size_t>::max();
    std::uint64_t best_index = 0, ties = 0;
    for (std::uint64_t i = 0; i < total; ++i) {
        const auto d = hamming_distance(encode(code, code.message_at(i)), word);
        if (d < best) {
            best = d;
            best_index = i;
            ties = 1;
        } else if (d == best) {
            ++ties;
        }
    }
    const auto msg = code.message_at(best_index);
    return {ties == 1 ? DecodeStatus::unique : DecodeStatus::ambiguous, encode(code, msg), msg, best};
}

}  // namespace serial

}  // namespace tcc
