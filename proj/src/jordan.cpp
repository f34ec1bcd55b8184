#include "wilddiag/jordan.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "wilddiag/errors.hpp"

namespace wilddiag {

namespace {

// Number of parts strictly greater than t; the t-th part of the conjugate
// partition. The partition is sorted descending.
std::int64_t parts_above(const std::vector<std::int64_t>& partition, std::int64_t t) {
    std::int64_t count = 0;
    for (std::int64_t p : partition) {
        if (p > t)
            ++count;
        else
            break;
    }
    return count;
}

}  // namespace

JordanClass::JordanClass(std::int64_t n, std::vector<Entry> entries) : n_(n), entries_(std::move(entries)) {
    if (n_ < 1) throw validation_error("class size must be positive");
    if (entries_.empty()) throw validation_error("a conjugacy class needs at least one eigenvalue");
    std::set<std::string> labels;
    std::int64_t total = 0;
    for (auto& [label, partition] : entries_) {
        if (label.empty()) throw validation_error("eigenvalue labels must be nonempty");
        if (!labels.insert(label).second)
            throw validation_error("duplicate eigenvalue label '" + label + "'");
        if (partition.empty()) throw validation_error("empty partition for eigenvalue '" + label + "'");
        for (std::int64_t p : partition) {
            if (p < 1) throw validation_error("partition parts must be positive");
            total += p;
        }
        std::sort(partition.begin(), partition.end(), std::greater<>());
    }
    if (total != n_)
        throw validation_error("partitions sum to " + std::to_string(total) +
                               " but the class lives in GL_" + std::to_string(n_));
}

JordanClass JordanClass::regular_semisimple(std::int64_t n) {
    std::vector<Entry> entries;
    for (std::int64_t i = 1; i <= n; ++i)
        entries.emplace_back("e" + std::to_string(i), std::vector<std::int64_t>{1});
    return JordanClass(n, std::move(entries));
}

JordanClass JordanClass::central(std::int64_t n) {
    return JordanClass(n, {{"c", std::vector<std::int64_t>(static_cast<std::size_t>(n), 1)}});
}

bool JordanClass::is_central() const {
    return entries_.size() == 1 && entries_.front().second.front() == 1;
}

std::int64_t JordanClass::min_poly_degree() const {
    std::int64_t degree = 0;
    for (const auto& [label, partition] : entries_) degree += partition.front();
    return degree;
}

std::int64_t JordanClass::class_dim() const {
    std::int64_t centralizer = 0;
    for (const auto& [label, partition] : entries_) {
        for (std::int64_t t = 0; t < partition.front(); ++t) {
            std::int64_t c = parts_above(partition, t);
            centralizer += c * c;
        }
    }
    return n_ * n_ - centralizer;
}

std::vector<std::int64_t> JordanClass::leg_dims() const {
    const std::int64_t w = min_poly_degree();
    std::vector<std::int64_t> used(entries_.size(), 0);
    std::vector<std::int64_t> dims{n_};
    std::int64_t current = n_;
    for (std::int64_t step = 0; step < w; ++step) {
        std::size_t best = 0;
        std::int64_t best_drop = -1;
        for (std::size_t j = 0; j < entries_.size(); ++j) {
            std::int64_t drop = parts_above(entries_[j].second, used[j]);
            if (drop > best_drop) {
                best_drop = drop;
                best = j;
            }
        }
        if (best_drop < 1) throw internal_error("minimal marking ran out of rank drops");
        ++used[best];
        current -= best_drop;
        if (step + 1 < w) dims.push_back(current);
    }
    if (current != 0) throw internal_error("minimal marking does not annihilate the class");
    return dims;
}

std::vector<std::int64_t> JordanClass::leg_dims_for_order(const std::vector<std::size_t>& order) const {
    const std::int64_t w = min_poly_degree();
    if (static_cast<std::int64_t>(order.size()) != w)
        throw validation_error("marking length must equal the minimal polynomial degree");
    std::vector<std::int64_t> used(entries_.size(), 0);
    std::vector<std::int64_t> dims{n_};
    std::int64_t current = n_;
    for (std::size_t step = 0; step < order.size(); ++step) {
        std::size_t j = order[step];
        if (j >= entries_.size()) throw validation_error("marking index out of range");
        if (used[j] >= entries_[j].second.front())
            throw validation_error("marking uses an eigenvalue more often than its largest part");
        current -= parts_above(entries_[j].second, used[j]);
        ++used[j];
        if (step + 1 < order.size()) dims.push_back(current);
    }
    if (current != 0) throw internal_error("marking does not annihilate the class");
    return dims;
}

std::string JordanClass::to_string() const {
    std::ostringstream os;
    os << "{ ";
    bool first_entry = true;
    for (const auto& [label, partition] : entries_) {
        if (!first_entry) os << ", ";
        os << label << ": [";
        for (std::size_t i = 0; i < partition.size(); ++i) {
            if (i) os << ", ";
            os << partition[i];
        }
        os << "]";
        first_entry = false;
    }
    os << " }";
    return os.str();
}

}  // namespace wilddiag
