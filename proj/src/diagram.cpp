#include "wilddiag/diagram.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "wilddiag/errors.hpp"

namespace wilddiag {

IntMat IntMat::identity(int n) {
    IntMat m(n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

bool IntMat::is_symmetric() const {
    for (int i = 0; i < n_; ++i)
        for (int j = i + 1; j < n_; ++j)
            if (at(i, j) != at(j, i)) return false;
    return true;
}

Int IntMat::det() const {
    if (n_ == 0) return 1;
    // Bareiss fraction-free elimination.
    std::vector<std::vector<Int>> a(static_cast<std::size_t>(n_), std::vector<Int>(static_cast<std::size_t>(n_)));
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) a[i][j] = at(i, j);
    Int prev = 1;
    int sign = 1;
    for (int k = 0; k + 1 < n_; ++k) {
        if (a[k][k] == 0) {
            int swap_row = -1;
            for (int i = k + 1; i < n_; ++i)
                if (a[i][k] != 0) {
                    swap_row = i;
                    break;
                }
            if (swap_row < 0) return 0;
            std::swap(a[k], a[swap_row]);
            sign = -sign;
        }
        for (int i = k + 1; i < n_; ++i)
            for (int j = k + 1; j < n_; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
        prev = a[k][k];
    }
    return sign > 0 ? a[n_ - 1][n_ - 1] : -a[n_ - 1][n_ - 1];
}

std::string IntMat::to_string() const {
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < n_; ++i) {
        if (i) os << "; ";
        for (int j = 0; j < n_; ++j) {
            if (j) os << " ";
            os << at(i, j);
        }
    }
    os << "]";
    return os.str();
}

IntMat make_mat(const std::vector<std::vector<std::int64_t>>& rows) {
    IntMat m(static_cast<int>(rows.size()));
    for (int i = 0; i < m.size(); ++i) {
        if (static_cast<int>(rows[static_cast<std::size_t>(i)].size()) != m.size())
            throw internal_error("make_mat requires a square table");
        for (int j = 0; j < m.size(); ++j) m.at(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    }
    return m;
}

std::string to_string(NodeKind kind) {
    switch (kind) {
        case NodeKind::core: return "core";
        case NodeKind::formal_leg: return "formal-leg";
        case NodeKind::tame_leg: return "tame-leg";
    }
    throw internal_error("unknown node kind");
}

int Diagram::add_node(std::string label, NodeKind kind, std::int64_t dim, std::int64_t beta) {
    if (dim < 1) throw internal_error("node dimensions must be positive");
    const int id = size();
    nodes_.push_back({id, std::move(label), kind, dim, beta});
    for (auto& row : edges_) row.push_back(0);
    edges_.emplace_back(static_cast<std::size_t>(id) + 1, 0);
    loops_.push_back(0);
    return id;
}

void Diagram::add_edge(int a, int b, std::int64_t mult) {
    if (a == b) throw internal_error("use set_loops for diagonal entries");
    edges_[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] += mult;
    edges_[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)] += mult;
}

void Diagram::set_loops(int node, std::int64_t count) { loops_[static_cast<std::size_t>(node)] = count; }

IntMat Diagram::adjacency() const {
    IntMat b(size());
    for (int i = 0; i < size(); ++i) {
        b.at(i, i) = 2 * loops(i);
        for (int j = 0; j < size(); ++j)
            if (i != j) b.at(i, j) = edge(i, j);
    }
    return b;
}

std::vector<std::int64_t> Diagram::dims() const {
    std::vector<std::int64_t> d;
    d.reserve(nodes_.size());
    for (const auto& node : nodes_) d.push_back(node.dim);
    return d;
}

std::int64_t ProblemInput::rank() const {
    std::int64_t n = 0;
    for (const auto& entry : infinity) n += entry.mult * entry.circle.ram();
    return n;
}

IrregularClass ProblemInput::theta() const {
    IrregularClass theta;
    for (const auto& entry : infinity) theta.add(entry.circle, entry.mult);
    return theta;
}

void ProblemInput::validate() const {
    if (infinity.empty()) throw validation_error("the irregular class at infinity is empty");
    for (std::size_t i = 0; i < infinity.size(); ++i) {
        const auto& entry = infinity[i];
        if (entry.mult < 1) throw validation_error("circle multiplicities must be positive");
        if (entry.monodromy.size() != entry.mult)
            throw validation_error("monodromy class size " + std::to_string(entry.monodromy.size()) +
                                   " does not match multiplicity " + std::to_string(entry.mult) +
                                   " for circle " + entry.circle.to_string());
        for (std::size_t j = i + 1; j < infinity.size(); ++j)
            if (entry.circle == infinity[j].circle)
                throw validation_error("duplicate circle " + entry.circle.to_string() + " at infinity");
    }
    const std::int64_t n = rank();
    std::set<std::string> locations;
    for (const auto& pole : poles) {
        if (!locations.insert(pole.location).second)
            throw validation_error("duplicate pole location '" + pole.location + "'");
        if (pole.cls.size() != n)
            throw validation_error("class at pole '" + pole.location + "' has size " +
                                   std::to_string(pole.cls.size()) + " but the connection has rank " +
                                   std::to_string(n));
    }
}

Diagram core_diagram(const ProblemInput& input) {
    input.validate();
    const auto& entries = input.infinity;
    const int m = static_cast<int>(entries.size());
    Diagram g;
    for (const auto& entry : entries)
        g.add_node(entry.circle.to_string(), NodeKind::core, entry.mult, entry.circle.ram());
    for (int i = 0; i < m; ++i) {
        const Circle& ci = entries[static_cast<std::size_t>(i)].circle;
        for (int j = i; j < m; ++j) {
            const Circle& cj = entries[static_cast<std::size_t>(j)].circle;
            const std::int64_t a_ij = irr_class(hom_class(ci, cj));
            if (i == j) {
                const std::int64_t b_ii = a_ij - ci.ram() * ci.ram() + 1;
                if (b_ii % 2 != 0)
                    throw internal_error("odd loop count at node " + ci.to_string());
                g.set_loops(i, b_ii / 2);
            } else {
                g.add_edge(i, j, a_ij - ci.ram() * cj.ram());
            }
        }
    }
    return g;
}

Diagram glue_formal_legs(Diagram core, const ProblemInput& input) {
    for (std::size_t i = 0; i < input.infinity.size(); ++i) {
        const auto& entry = input.infinity[i];
        if (entry.monodromy.size() != entry.mult)
            throw validation_error("monodromy class size does not match the multiplicity of " +
                                   entry.circle.to_string());
        const std::vector<std::int64_t> dims = entry.monodromy.leg_dims();
        int prev = static_cast<int>(i);
        for (std::size_t k = 1; k < dims.size(); ++k) {
            int node = core.add_node(entry.circle.to_string() + ":" + std::to_string(k + 1),
                                     NodeKind::formal_leg, dims[k]);
            core.add_edge(prev, node, 1);
            prev = node;
        }
    }
    return core;
}

Diagram add_tame_pole(Diagram g, const JordanClass& cls, const std::string& location,
                      std::vector<std::string>* warnings) {
    std::int64_t n = 0;
    for (const auto& node : g.nodes())
        if (node.kind == NodeKind::core) n += node.dim * node.beta;
    if (cls.size() != n)
        throw validation_error("class at pole '" + location + "' has size " +
                               std::to_string(cls.size()) + " but the connection has rank " +
                               std::to_string(n));
    const std::vector<std::int64_t> dims = cls.leg_dims();
    if (dims.size() == 1) {
        if (warnings)
            warnings->push_back("central class at pole '" + location + "' adds nothing to the diagram");
        return g;
    }
    int prev = -1;
    for (std::size_t k = 1; k < dims.size(); ++k) {
        int node = g.add_node(location + ":" + std::to_string(k + 1), NodeKind::tame_leg, dims[k]);
        if (prev < 0) {
            // The splayed top node: beta_i edges to each core node.
            for (const auto& core_node : g.nodes())
                if (core_node.kind == NodeKind::core) g.add_edge(core_node.id, node, core_node.beta);
        } else {
            g.add_edge(prev, node, 1);
        }
        prev = node;
    }
    return g;
}

CartanData cartan(const Diagram& g) {
    const IntMat b = g.adjacency();
    const int n = b.size();
    IntMat c(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) c.at(i, j) = (i == j ? 2 : 0) - b.at(i, j);
    const std::vector<std::int64_t> d = g.dims();
    std::int64_t pairing = 0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) pairing += c.at(i, j) * d[static_cast<std::size_t>(i)] * d[static_cast<std::size_t>(j)];
    if (pairing % 2 != 0) throw internal_error("odd pairing (d, d)");
    return CartanData{c, d, pairing, 2 - pairing};
}

std::int64_t dim_oracle(const ProblemInput& input) {
    input.validate();
    const std::int64_t n = input.rank();
    std::int64_t total = end_irr(input.theta()) + 2 - n * n;
    for (const auto& entry : input.infinity) {
        total -= entry.mult * entry.mult;
        total += entry.monodromy.class_dim();
    }
    for (const auto& pole : input.poles) total += pole.cls.class_dim();
    return total;
}

BuildResult build_diagram(const ProblemInput& input) {
    BuildResult result;
    result.diagram = glue_formal_legs(core_diagram(input), input);
    for (const auto& pole : input.poles)
        result.diagram = add_tame_pole(std::move(result.diagram), pole.cls, pole.location, &result.warnings);
    result.cartan = cartan(result.diagram);
    result.irr_end = end_irr(input.theta());
    result.rank = input.rank();
    return result;
}

Diagram remove_node(const Diagram& g, int idx) {
    if (idx < 0 || idx >= g.size()) throw validation_error("node index out of range");
    Diagram out;
    std::vector<int> map(static_cast<std::size_t>(g.size()), -1);
    for (const auto& node : g.nodes()) {
        if (node.id == idx) continue;
        map[static_cast<std::size_t>(node.id)] = out.add_node(node.label, node.kind, node.dim, node.beta);
    }
    for (int i = 0; i < g.size(); ++i) {
        if (i == idx) continue;
        out.set_loops(map[static_cast<std::size_t>(i)], g.loops(i));
        for (int j = i + 1; j < g.size(); ++j)
            if (j != idx && g.edge(i, j) != 0)
                out.add_edge(map[static_cast<std::size_t>(i)], map[static_cast<std::size_t>(j)], g.edge(i, j));
    }
    return out;
}

bool diagrams_isomorphic(const Diagram& a, const Diagram& b) {
    if (a.size() != b.size()) return false;
    const int n = a.size();
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool ok = true;
        for (int i = 0; i < n && ok; ++i) {
            if (a.nodes()[static_cast<std::size_t>(i)].dim != b.nodes()[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])].dim ||
                a.loops(i) != b.loops(perm[static_cast<std::size_t>(i)]))
                ok = false;
            for (int j = i + 1; j < n && ok; ++j)
                if (a.edge(i, j) != b.edge(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(j)])) ok = false;
        }
        if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

bool congruent(const IntMat& m1, const IntMat& m2, const IntMat& g) {
    if (m1.size() != m2.size() || m1.size() != g.size())
        throw validation_error("congruence check requires matrices of equal size");
    const int n = m1.size();
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            std::int64_t sum = 0;
            for (int k = 0; k < n; ++k)
                for (int l = 0; l < n; ++l) sum += g.at(k, i) * m1.at(k, l) * g.at(l, j);
            if (sum != m2.at(i, j)) return false;
        }
    }
    return true;
}

namespace {

std::int64_t bilinear(const IntMat& m, const std::vector<std::int64_t>& u,
                      const std::vector<std::int64_t>& v) {
    std::int64_t sum = 0;
    for (int i = 0; i < m.size(); ++i)
        for (int j = 0; j < m.size(); ++j)
            sum += u[static_cast<std::size_t>(i)] * m.at(i, j) * v[static_cast<std::size_t>(j)];
    return sum;
}

bool extend_columns(const IntMat& m1, const IntMat& m2,
                    const std::vector<std::vector<std::int64_t>>& columns,
                    std::vector<const std::vector<std::int64_t>*>& chosen, int j, IntMat& out) {
    const int n = m1.size();
    if (j == n) {
        IntMat g(n);
        for (int col = 0; col < n; ++col)
            for (int row = 0; row < n; ++row) g.at(row, col) = (*chosen[static_cast<std::size_t>(col)])[static_cast<std::size_t>(row)];
        Int d = g.det();
        if (d != 1 && d != -1) return false;
        out = g;
        return true;
    }
    for (const auto& col : columns) {
        if (bilinear(m1, col, col) != m2.at(j, j)) continue;
        bool ok = true;
        for (int i = 0; i < j && ok; ++i)
            if (bilinear(m1, *chosen[static_cast<std::size_t>(i)], col) != m2.at(i, j)) ok = false;
        if (!ok) continue;
        chosen[static_cast<std::size_t>(j)] = &col;
        if (extend_columns(m1, m2, columns, chosen, j + 1, out)) return true;
    }
    return false;
}

}  // namespace

std::optional<IntMat> search_congruence(const IntMat& m1, const IntMat& m2, std::int64_t bound) {
    if (m1.size() != m2.size())
        throw validation_error("congruence search requires matrices of equal size");
    if (bound < 0) throw validation_error("search bound must be nonnegative");
    const int n = m1.size();
    if (n == 0) return IntMat(0);
    double space = 1;
    for (int i = 0; i < n; ++i) space *= static_cast<double>(2 * bound + 1);
    if (space > 2e6) throw validation_error("congruence search space too large");

    std::vector<std::vector<std::int64_t>> columns;
    std::vector<std::int64_t> col(static_cast<std::size_t>(n), -bound);
    for (;;) {
        columns.push_back(col);
        int i = 0;
        while (i < n && col[static_cast<std::size_t>(i)] == bound) {
            col[static_cast<std::size_t>(i)] = -bound;
            ++i;
        }
        if (i == n) break;
        ++col[static_cast<std::size_t>(i)];
    }

    std::vector<const std::vector<std::int64_t>*> chosen(static_cast<std::size_t>(n), nullptr);
    IntMat out(n);
    if (extend_columns(m1, m2, columns, chosen, 0, out)) return out;
    return std::nullopt;
}

}  // namespace wilddiag
