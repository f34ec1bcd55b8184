#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace wilddiag {

/**
 * A conjugacy class in GL_n, recorded by Jordan type: one entry per eigenvalue
 * (an opaque label) with the partition of its generalized eigenspace. All
 * derived quantities depend only on the partitions and which labels coincide,
 * never on eigenvalue values.
 */
class JordanClass {
public:
    using Entry = std::pair<std::string, std::vector<std::int64_t>>;

    JordanClass(std::int64_t n, std::vector<Entry> entries);

    /// n distinct eigenvalue labels, all partitions trivial; the default for
    /// an unspecified formal monodromy.
    static JordanClass regular_semisimple(std::int64_t n);

    /// One eigenvalue with partition 1+1+...+1 (a scalar matrix).
    static JordanClass central(std::int64_t n);

    std::int64_t size() const { return n_; }
    const std::vector<Entry>& entries() const { return entries_; }
    bool is_central() const;

    /// Degree of the minimal polynomial: sum of the largest parts.
    std::int64_t min_poly_degree() const;

    /// Dimension of the class: n^2 minus the sum of squared conjugate-partition
    /// parts. Always even; zero exactly for central classes.
    std::int64_t class_dim() const;

    /**
     * Dimension vector down the leg of a minimal marking, starting at n.
     * The canonical marking is greedy: at each step use the eigenvalue whose
     * remaining rank drop is largest (ties broken by entry order). Length
     * equals min_poly_degree(); the trailing zero after the final factor is
     * not included.
     */
    std::vector<std::int64_t> leg_dims() const;

    /// Dimension vector for an explicit marking: a sequence of entry indices
    /// in which entry j appears exactly largest-part(j) times.
    std::vector<std::int64_t> leg_dims_for_order(const std::vector<std::size_t>& order) const;

    bool operator==(const JordanClass& o) const { return n_ == o.n_ && entries_ == o.entries_; }

    std::string to_string() const;

private:
    std::int64_t n_;
    std::vector<Entry> entries_;
};

}  // namespace wilddiag
