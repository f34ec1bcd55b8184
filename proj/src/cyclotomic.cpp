#include "wilddiag/cyclotomic.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <sstream>

#include "wilddiag/errors.hpp"

namespace wilddiag {

std::int64_t euler_phi(std::int64_t n) {
    if (n < 1) throw validation_error("euler_phi requires a positive argument");
    std::int64_t result = n;
    std::int64_t m = n;
    for (std::int64_t p = 2; p * p <= m; ++p) {
        if (m % p) continue;
        result -= result / p;
        while (m % p == 0) m /= p;
    }
    if (m > 1) result -= result / m;
    return result;
}

std::vector<std::int64_t> divisors(std::int64_t n) {
    std::vector<std::int64_t> small, large;
    for (std::int64_t d = 1; d * d <= n; ++d) {
        if (n % d) continue;
        small.push_back(d);
        if (d != n / d) large.push_back(n / d);
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

namespace {

// Polynomials are coefficient vectors, ascending degree.

std::vector<Int> x_pow_minus_one(std::int64_t n) {
    std::vector<Int> p(static_cast<std::size_t>(n) + 1, 0);
    p.front() = -1;
    p.back() = 1;
    return p;
}

// Exact division by a monic divisor; throws if the division leaves a remainder.
std::vector<Int> poly_div_exact(std::vector<Int> num, const std::vector<Int>& den) {
    if (den.empty() || den.back() != 1) throw internal_error("poly_div_exact needs a monic divisor");
    if (num.size() < den.size()) throw internal_error("poly_div_exact: degree underflow");
    std::vector<Int> quot(num.size() - den.size() + 1);
    for (std::size_t k = quot.size(); k-- > 0;) {
        Int c = num[k + den.size() - 1];
        quot[k] = c;
        if (c != 0)
            for (std::size_t j = 0; j < den.size(); ++j) num[k + j] -= c * den[j];
    }
    for (const Int& v : num)
        if (v != 0) throw internal_error("poly_div_exact: nonzero remainder");
    return quot;
}

std::vector<Int> compute_cyclotomic(std::int64_t n) {
    // Phi_d for all divisors d of n, in ascending order; each obtained by
    // dividing x^d - 1 by the product of the Phi_e over proper divisors e.
    std::map<std::int64_t, std::vector<Int>> table;
    for (std::int64_t d : divisors(n)) {
        std::vector<Int> p = x_pow_minus_one(d);
        for (std::int64_t e : divisors(d))
            if (e != d) p = poly_div_exact(std::move(p), table.at(e));
        table.emplace(d, std::move(p));
    }
    return table.at(n);
}

const std::vector<Int>& cyclotomic_cached(std::int64_t n) {
    thread_local std::map<std::int64_t, std::vector<Int>> cache;
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, compute_cyclotomic(n)).first;
    return it->second;
}

void trim(std::vector<Rational>& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

// Remainder of p modulo the monic integer polynomial m.
std::vector<Rational> poly_mod(std::vector<Rational> p, const std::vector<Int>& m) {
    trim(p);
    while (p.size() >= m.size()) {
        Rational c = p.back();
        std::size_t shift = p.size() - m.size();
        if (c != 0)
            for (std::size_t j = 0; j + 1 < m.size(); ++j) p[shift + j] -= c * Rational(m[j]);
        p.pop_back();
        trim(p);
    }
    return p;
}

// Solves A y = rhs where A has full column rank; nullopt when inconsistent.
std::optional<std::vector<Rational>> solve_exact(std::vector<std::vector<Rational>> a,
                                                 std::vector<Rational> rhs) {
    const std::size_t rows = a.size();
    const std::size_t cols = rows ? a.front().size() : 0;
    std::vector<std::size_t> pivot_row(cols);
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t sel = r;
        while (sel < rows && a[sel][c] == 0) ++sel;
        if (sel == rows) return std::nullopt;  // column rank defect: cannot happen for embeddings
        std::swap(a[sel], a[r]);
        std::swap(rhs[sel], rhs[r]);
        Rational inv = a[r][c];
        for (std::size_t j = c; j < cols; ++j) a[r][j] /= inv;
        rhs[r] /= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || a[i][c] == 0) continue;
            Rational f = a[i][c];
            for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
            rhs[i] -= f * rhs[r];
        }
        pivot_row[c] = r;
        ++r;
    }
    for (std::size_t i = r; i < rows; ++i)
        if (rhs[i] != 0) return std::nullopt;
    std::vector<Rational> y(cols);
    for (std::size_t c = 0; c < cols; ++c) y[c] = rhs[pivot_row[c]];
    return y;
}

}  // namespace

std::vector<Int> cyclotomic_poly(std::int64_t n) {
    if (n < 1) throw validation_error("cyclotomic_poly requires a positive level");
    return cyclotomic_cached(n);
}

CycloNumber::CycloNumber(std::int64_t level, std::vector<Rational> coords) {
    if (level < 1) throw validation_error("cyclotomic level must be positive");
    if (static_cast<std::int64_t>(coords.size()) != euler_phi(level))
        throw internal_error("coordinate vector has wrong length for its level");
    level_ = level;
    coords_ = std::move(coords);
}

CycloNumber CycloNumber::from_poly(std::int64_t level, std::vector<Rational> poly) {
    const auto& phi_poly = cyclotomic_cached(level);
    std::vector<Rational> rem = poly_mod(std::move(poly), phi_poly);
    rem.resize(static_cast<std::size_t>(euler_phi(level)), Rational(0));
    CycloNumber out;
    out.level_ = level;
    out.coords_ = std::move(rem);
    return out;
}

CycloNumber CycloNumber::root_of_unity(std::int64_t n, std::int64_t a) {
    if (n < 1) throw validation_error("root of unity level must be positive");
    a %= n;
    if (a < 0) a += n;
    std::vector<Rational> poly(static_cast<std::size_t>(a) + 1, Rational(0));
    poly.back() = 1;
    return from_poly(n, std::move(poly));
}

bool CycloNumber::is_zero() const {
    return std::all_of(coords_.begin(), coords_.end(), [](const Rational& c) { return c == 0; });
}

bool CycloNumber::is_one() const {
    if (coords_[0] != 1) return false;
    return std::all_of(coords_.begin() + 1, coords_.end(),
                       [](const Rational& c) { return c == 0; });
}

bool CycloNumber::is_rational() const {
    return std::all_of(coords_.begin() + 1, coords_.end(),
                       [](const Rational& c) { return c == 0; });
}

Rational CycloNumber::rational_value() const {
    if (!is_rational()) throw internal_error("rational_value on a non-rational element");
    return coords_[0];
}

CycloNumber CycloNumber::embedded(std::int64_t m) const {
    if (m == level_) return *this;
    if (m < 1 || m % level_ != 0) throw internal_error("embed target must be a multiple of the level");
    const std::int64_t k = m / level_;
    std::vector<Rational> poly(static_cast<std::size_t>((coords_.size() - 1) * k + 1), Rational(0));
    for (std::size_t i = 0; i < coords_.size(); ++i) poly[i * k] = coords_[i];
    return from_poly(m, std::move(poly));
}

namespace {

// Rows-by-columns matrix whose columns are the power basis of Q(zeta_m)
// written in coordinates at level n.
const std::vector<std::vector<Rational>>& embedding_basis(std::int64_t m, std::int64_t n) {
    thread_local std::map<std::pair<std::int64_t, std::int64_t>, std::vector<std::vector<Rational>>>
        cache;
    auto it = cache.find({m, n});
    if (it != cache.end()) return it->second;
    const std::size_t phi_m = static_cast<std::size_t>(euler_phi(m));
    const std::size_t phi_n = static_cast<std::size_t>(euler_phi(n));
    std::vector<std::vector<Rational>> a(phi_n, std::vector<Rational>(phi_m));
    for (std::size_t j = 0; j < phi_m; ++j) {
        CycloNumber basis = CycloNumber::root_of_unity(m, static_cast<std::int64_t>(j)).embedded(n);
        for (std::size_t i = 0; i < phi_n; ++i) a[i][j] = basis.coords()[i];
    }
    return cache.emplace(std::make_pair(m, n), std::move(a)).first->second;
}

}  // namespace

CycloNumber CycloNumber::reduced() const {
    if (level_ == 1) return *this;
    if (is_rational()) return CycloNumber(coords_[0]);
    for (std::int64_t m : divisors(level_)) {
        if (m == 1 || m == level_) continue;
        if (auto y = solve_exact(embedding_basis(m, level_), coords_)) return CycloNumber(m, std::move(*y));
    }
    return *this;
}

bool CycloNumber::equals(const CycloNumber& other) const {
    if (level_ == other.level_) return coords_ == other.coords_;
    const std::int64_t l = std::lcm(level_, other.level_);
    return embedded(l).coords_ == other.embedded(l).coords_;
}

CycloNumber CycloNumber::operator+(const CycloNumber& rhs) const {
    const std::int64_t l = std::lcm(level_, rhs.level_);
    CycloNumber a = embedded(l), b = rhs.embedded(l);
    for (std::size_t i = 0; i < a.coords_.size(); ++i) a.coords_[i] += b.coords_[i];
    return a;
}

CycloNumber CycloNumber::operator-(const CycloNumber& rhs) const {
    const std::int64_t l = std::lcm(level_, rhs.level_);
    CycloNumber a = embedded(l), b = rhs.embedded(l);
    for (std::size_t i = 0; i < a.coords_.size(); ++i) a.coords_[i] -= b.coords_[i];
    return a;
}

CycloNumber CycloNumber::operator*(const CycloNumber& rhs) const {
    const std::int64_t l = std::lcm(level_, rhs.level_);
    CycloNumber a = embedded(l), b = rhs.embedded(l);
    std::vector<Rational> prod(a.coords_.size() + b.coords_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.coords_.size(); ++i) {
        if (a.coords_[i] == 0) continue;
        for (std::size_t j = 0; j < b.coords_.size(); ++j)
            if (b.coords_[j] != 0) prod[i + j] += a.coords_[i] * b.coords_[j];
    }
    return from_poly(l, std::move(prod));
}

CycloNumber CycloNumber::operator-() const {
    CycloNumber out = *this;
    for (Rational& c : out.coords_) c = -c;
    return out;
}

std::string CycloNumber::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < coords_.size(); ++i) {
        const Rational& c = coords_[i];
        if (c == 0) continue;
        Rational mag = c < 0 ? Rational(-c) : c;
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        if (i == 0) {
            os << wilddiag::to_string(mag);
        } else {
            if (mag != 1) os << wilddiag::to_string(mag) << " ";
            os << "z" << level_ << "^" << i;
        }
    }
    return os.str();
}

}  // namespace wilddiag
