#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "wilddiag/jordan.hpp"
#include "wilddiag/puiseux.hpp"

namespace wilddiag {

/// Small dense square integer matrix (Cartan matrices, congruence witnesses).
struct IntMat {
    explicit IntMat(int n = 0) : n_(n), v_(static_cast<std::size_t>(n) * n, 0) {}
    static IntMat identity(int n);

    int size() const { return n_; }
    std::int64_t& at(int i, int j) { return v_[static_cast<std::size_t>(i) * n_ + j]; }
    std::int64_t at(int i, int j) const { return v_[static_cast<std::size_t>(i) * n_ + j]; }

    bool operator==(const IntMat& o) const { return n_ == o.n_ && v_ == o.v_; }
    bool operator!=(const IntMat& o) const { return !(*this == o); }
    bool is_symmetric() const;

    Int det() const;  // exact, fraction-free

    std::string to_string() const;

private:
    int n_;
    std::vector<std::int64_t> v_;
};

IntMat make_mat(const std::vector<std::vector<std::int64_t>>& rows);

enum class NodeKind { core, formal_leg, tame_leg };
std::string to_string(NodeKind kind);

struct DiagramNode {
    int id;
    std::string label;
    NodeKind kind;
    std::int64_t dim;
    std::int64_t beta;  // covering degree of the circle; core nodes only
};

/**
 * Nodes with dimensions plus a symmetric integer edge matrix and per-node loop
 * counts. Edge and loop multiplicities may be negative. The oriented adjacency
 * has B_ij equal to the edge multiplicity for i != j and B_ii twice the loop
 * count.
 */
class Diagram {
public:
    int add_node(std::string label, NodeKind kind, std::int64_t dim, std::int64_t beta = 0);
    void add_edge(int a, int b, std::int64_t mult);
    void set_loops(int node, std::int64_t count);

    int size() const { return static_cast<int>(nodes_.size()); }
    const std::vector<DiagramNode>& nodes() const { return nodes_; }
    std::int64_t edge(int a, int b) const { return edges_[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]; }
    std::int64_t loops(int node) const { return loops_[static_cast<std::size_t>(node)]; }

    /// Oriented adjacency matrix B.
    IntMat adjacency() const;

    std::vector<std::int64_t> dims() const;

private:
    std::vector<DiagramNode> nodes_;
    std::vector<std::vector<std::int64_t>> edges_;
    std::vector<std::int64_t> loops_;
};

struct CartanData {
    IntMat cartan;                   // C = 2 Id - B
    std::vector<std::int64_t> dims;  // node dimension vector d
    std::int64_t pairing;            // (d, d)
    std::int64_t dim_b;              // 2 - (d, d); meaningful when the space is nonempty
};

struct InfinityEntry {
    Circle circle;
    std::int64_t mult;
    JordanClass monodromy;         // class in GL_mult
    bool monodromy_default;        // true when the class was not specified
};

struct TamePole {
    std::string location;  // metadata only; must be pairwise distinct
    JordanClass cls;       // class in GL_n
};

/// Formal data: circles with multiplicities and monodromy classes at infinity,
/// plus tame poles at finite distance.
struct ProblemInput {
    std::vector<InfinityEntry> infinity;
    std::vector<TamePole> poles;

    std::int64_t rank() const;
    IrregularClass theta() const;
    void validate() const;  // throws validation_error
};

/// Core diagram: one node per circle, edge and loop counts from the
/// irregularities of the pairwise Hom classes minus the covering-degree terms.
Diagram core_diagram(const ProblemInput& input);

/// Attaches the minimal-marking leg of each formal monodromy class, the end
/// node identified with the corresponding core node.
Diagram glue_formal_legs(Diagram core, const ProblemInput& input);

/// Splays a tame-pole leg over the core: chain nodes below the top, with the
/// second leg node linked to core node i by beta_i edges. Central classes
/// leave the diagram unchanged (with a warning).
Diagram add_tame_pole(Diagram g, const JordanClass& cls, const std::string& location,
                      std::vector<std::string>* warnings);

CartanData cartan(const Diagram& g);

/// Closed-form dimension count from the input data alone:
/// Irr(End Theta) + 2 - n^2 - sum n_i^2 + sum dim C_i + sum dim C-hat_k.
/// Must agree with 2 - (d, d) from the built diagram.
std::int64_t dim_oracle(const ProblemInput& input);

struct BuildResult {
    Diagram diagram;
    CartanData cartan;
    std::int64_t irr_end;
    std::int64_t rank;
    std::vector<std::string> warnings;
};

BuildResult build_diagram(const ProblemInput& input);

Diagram remove_node(const Diagram& g, int idx);

/// Equality up to node relabeling: some permutation matches dims, edges and
/// loops. Labels and kinds are ignored.
bool diagrams_isomorphic(const Diagram& a, const Diagram& b);

/// Whether g^T m1 g == m2 (exact integer arithmetic).
bool congruent(const IntMat& m1, const IntMat& m2, const IntMat& g);

/// Exhaustive search for a unimodular g with entries in [-bound, bound] and
/// g^T m1 g == m2. Deterministic; feasible for small sizes only.
std::optional<IntMat> search_congruence(const IntMat& m1, const IntMat& m2, std::int64_t bound);

}  // namespace wilddiag
