#pragma once

// Shared helpers for the test suites: seeded random generators for factors,
// classes and whole inputs, plus small exact-arithmetic oracles that are
// independent of the library implementation.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "wilddiag/diagram.hpp"
#include "wilddiag/jordan.hpp"
#include "wilddiag/puiseux.hpp"

namespace testutil {

using wilddiag::CycloNumber;
using wilddiag::ExpFactor;
using wilddiag::Int;
using wilddiag::JordanClass;
using wilddiag::Rational;

using Rng = std::mt19937;

inline std::int64_t pick(Rng& rng, std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

inline CycloNumber random_cyclo(Rng& rng) {
    static const std::int64_t levels[] = {1, 1, 2, 3, 4, 6, 8};
    const std::int64_t level = levels[pick(rng, 0, 6)];
    std::int64_t num = pick(rng, -3, 3);
    if (num == 0) num = 1;
    const Rational scalar(num, pick(rng, 1, 2));
    return CycloNumber(scalar) * CycloNumber::root_of_unity(level, pick(rng, 0, level - 1));
}

// A nonzero factor with 1..max_terms terms, exponent denominators <= 4.
inline ExpFactor random_factor(Rng& rng, int max_terms = 2, std::int64_t max_den = 4) {
    for (;;) {
        ExpFactor q;
        const int terms = static_cast<int>(pick(rng, 1, max_terms));
        for (int t = 0; t < terms; ++t) {
            const Rational exponent(pick(rng, 1, 6), pick(rng, 1, max_den));
            q.add_term(exponent, random_cyclo(rng));
        }
        if (!q.is_zero()) return q;
    }
}

// Random partition of n, weakly decreasing.
inline std::vector<std::int64_t> random_partition(Rng& rng, std::int64_t n) {
    std::vector<std::int64_t> parts;
    while (n > 0) {
        const std::int64_t p = pick(rng, 1, n);
        parts.push_back(p);
        n -= p;
    }
    std::sort(parts.begin(), parts.end(), std::greater<>());
    return parts;
}

inline JordanClass random_jordan(Rng& rng, std::int64_t n) {
    const std::int64_t groups = pick(rng, 1, std::min<std::int64_t>(3, n));
    // Split n into `groups` positive chunks, one partition per eigenvalue.
    std::vector<std::int64_t> sizes(static_cast<std::size_t>(groups), 1);
    for (std::int64_t extra = n - groups; extra > 0; --extra)
        ++sizes[static_cast<std::size_t>(pick(rng, 0, groups - 1))];
    std::vector<JordanClass::Entry> entries;
    for (std::size_t i = 0; i < sizes.size(); ++i)
        entries.emplace_back("e" + std::to_string(i + 1), random_partition(rng, sizes[i]));
    return JordanClass(n, std::move(entries));
}

// Distinct random circles with multiplicities and random formal monodromies,
// plus up to max_poles random tame classes.
inline wilddiag::ProblemInput random_input(Rng& rng, int max_circles = 3, int max_poles = 3) {
    wilddiag::ProblemInput input;
    const int want = static_cast<int>(pick(rng, 1, max_circles));
    int guard = 0;
    while (static_cast<int>(input.infinity.size()) < want && ++guard < 40) {
        ExpFactor q;
        if (pick(rng, 0, 5) == 0 &&
            std::none_of(input.infinity.begin(), input.infinity.end(),
                         [](const auto& e) { return e.circle.rep().is_zero(); })) {
            // tame circle
        } else {
            q = random_factor(rng);
        }
        wilddiag::Circle c = wilddiag::circle_of(q);
        if (std::any_of(input.infinity.begin(), input.infinity.end(),
                        [&](const auto& e) { return e.circle == c; }))
            continue;
        const std::int64_t mult = pick(rng, 1, 3);
        JordanClass monodromy = pick(rng, 0, 1) ? JordanClass::regular_semisimple(mult)
                                                : random_jordan(rng, mult);
        input.infinity.push_back({std::move(c), mult, std::move(monodromy), false});
    }
    if (input.infinity.empty()) {
        ExpFactor q;
        q.add_term(Rational(1), CycloNumber(Rational(1)));
        input.infinity.push_back({wilddiag::circle_of(q), 1, JordanClass::regular_semisimple(1), false});
    }
    const std::int64_t n = input.rank();
    const int poles = static_cast<int>(pick(rng, 0, max_poles));
    static const char* locations[] = {"0", "1", "t", "u"};
    for (int k = 0; k < poles; ++k)
        input.poles.push_back({locations[k], random_jordan(rng, n)});
    return input;
}

// ---------------------------------------------------------------------------
// Exact linear algebra over Q, used as an independent oracle for the
// partition-combinatorics routines.

using Mat = std::vector<std::vector<Rational>>;

inline Mat mat_mul(const Mat& a, const Mat& b) {
    const std::size_t n = a.size();
    Mat c(n, std::vector<Rational>(n, Rational(0)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            if (a[i][k] == 0) continue;
            for (std::size_t j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
        }
    return c;
}

inline std::int64_t mat_rank(Mat a) {
    const std::size_t n = a.size();
    std::int64_t rank = 0;
    std::size_t row = 0;
    for (std::size_t col = 0; col < n && row < n; ++col) {
        std::size_t sel = row;
        while (sel < n && a[sel][col] == 0) ++sel;
        if (sel == n) continue;
        std::swap(a[sel], a[row]);
        for (std::size_t i = 0; i < n; ++i) {
            if (i == row || a[i][col] == 0) continue;
            const Rational f = a[i][col] / a[row][col];
            for (std::size_t j = col; j < n; ++j) a[i][j] -= f * a[row][j];
        }
        ++row;
        ++rank;
    }
    return rank;
}

// Jordan matrix of the class, with eigenvalue j realized as the integer j+1.
inline Mat jordan_matrix(const JordanClass& cls) {
    const std::size_t n = static_cast<std::size_t>(cls.size());
    Mat m(n, std::vector<Rational>(n, Rational(0)));
    std::size_t pos = 0;
    for (std::size_t j = 0; j < cls.entries().size(); ++j) {
        const Rational eigenvalue(static_cast<std::int64_t>(j) + 1);
        for (std::int64_t block : cls.entries()[j].second) {
            for (std::int64_t i = 0; i < block; ++i) {
                m[pos + i][pos + i] = eigenvalue;
                if (i + 1 < block) m[pos + i][pos + i + 1] = 1;
            }
            pos += static_cast<std::size_t>(block);
        }
    }
    return m;
}

// Greedy minimal-marking leg dimensions computed from actual matrix ranks:
// at each step multiply by the factor (J - eigenvalue) whose rank drop is
// largest, ties by entry order.
inline std::vector<std::int64_t> leg_dims_by_rank(const JordanClass& cls) {
    const std::size_t n = static_cast<std::size_t>(cls.size());
    const Mat jordan = jordan_matrix(cls);
    Mat identity(n, std::vector<Rational>(n, Rational(0)));
    for (std::size_t i = 0; i < n; ++i) identity[i][i] = 1;

    auto factor_for = [&](std::size_t j) {
        Mat f = jordan;
        for (std::size_t i = 0; i < n; ++i) f[i][i] -= Rational(static_cast<std::int64_t>(j) + 1);
        return f;
    };

    Mat product = identity;
    std::int64_t current = static_cast<std::int64_t>(n);
    std::vector<std::int64_t> dims{current};
    std::vector<std::int64_t> used(cls.entries().size(), 0);
    const std::int64_t w = cls.min_poly_degree();
    for (std::int64_t step = 0; step < w; ++step) {
        std::size_t best = 0;
        std::int64_t best_rank = -1;
        for (std::size_t j = 0; j < cls.entries().size(); ++j) {
            if (used[j] >= cls.entries()[j].second.front()) continue;
            const std::int64_t r = mat_rank(mat_mul(product, factor_for(j)));
            if (best_rank < 0 || current - r > current - best_rank) {
                best_rank = r;
                best = j;
            }
        }
        product = mat_mul(product, factor_for(best));
        ++used[best];
        current = best_rank;
        if (step + 1 < w) dims.push_back(current);
    }
    return dims;
}

// All distinct marking orders (entry index sequences) of a class.
inline std::vector<std::vector<std::size_t>> all_minimal_orders(const JordanClass& cls) {
    std::vector<std::size_t> base;
    for (std::size_t j = 0; j < cls.entries().size(); ++j)
        for (std::int64_t k = 0; k < cls.entries()[j].second.front(); ++k) base.push_back(j);
    std::sort(base.begin(), base.end());
    std::vector<std::vector<std::size_t>> orders;
    do {
        orders.push_back(base);
    } while (std::next_permutation(base.begin(), base.end()));
    return orders;
}

// Quadratic form of a type-A chain with the given dimensions.
inline std::int64_t chain_pairing(const std::vector<std::int64_t>& dims) {
    std::int64_t total = 0;
    for (std::size_t i = 0; i < dims.size(); ++i) total += 2 * dims[i] * dims[i];
    for (std::size_t i = 0; i + 1 < dims.size(); ++i) total -= 2 * dims[i] * dims[i + 1];
    return total;
}

}  // namespace testutil
