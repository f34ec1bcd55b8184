#include "wilddiag/puiseux.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "wilddiag/errors.hpp"

namespace wilddiag {

namespace {

// Order on level-reduced coefficients: lower level first, then coordinates
// with the larger vector first (so 1 precedes -1 and orbit minima pick the
// positive-leading conjugate).
int coeff_key_compare(const CycloNumber& a, const CycloNumber& b) {
    if (a.level() != b.level()) return a.level() < b.level() ? -1 : 1;
    for (std::size_t i = 0; i < a.coords().size(); ++i) {
        if (a.coords()[i] != b.coords()[i]) return a.coords()[i] > b.coords()[i] ? -1 : 1;
    }
    return 0;
}

// Writes coeff (level-reduced) as r * zN^k if possible; k = 0 means rational.
struct Monomial {
    Rational scalar;
    std::int64_t level;
    std::int64_t power;
};

bool as_monomial(const CycloNumber& c, Monomial& out) {
    if (c.is_rational()) {
        out = {c.rational_value(), 1, 0};
        return true;
    }
    const std::int64_t n = c.level();
    for (std::int64_t k = 1; k < n; ++k) {
        CycloNumber t = c * CycloNumber::root_of_unity(n, n - k);
        if (t.is_rational()) {
            out = {t.rational_value(), n, k};
            return true;
        }
    }
    return false;
}

std::string exponent_string(const Rational& e) {
    if (e == 1) return "x";
    if (is_integer(e)) return "x^" + rat_num(e).str();
    return "x^(" + rat_num(e).str() + "/" + rat_den(e).str() + ")";
}

}  // namespace

void ExpFactor::add_term(const Rational& exponent, const CycloNumber& c) {
    if (exponent <= 0) throw validation_error("factor exponents must be positive");
    CycloNumber value = c.reduced();
    auto it = terms_.find(exponent);
    if (it != terms_.end()) {
        value = (it->second + value).reduced();
        terms_.erase(it);
    }
    if (!value.is_zero()) terms_.emplace(exponent, std::move(value));
}

std::int64_t ExpFactor::ram() const {
    std::int64_t r = 1;
    for (const auto& [e, c] : terms_) r = std::lcm(r, to_int64(rat_den(e)));
    return r;
}

Rational ExpFactor::slope() const {
    if (terms_.empty()) return Rational(0);
    return terms_.rbegin()->first;
}

ExpFactor ExpFactor::conjugated(std::int64_t a) const {
    const std::int64_t r = ram();
    a %= r;
    if (a < 0) a += r;
    ExpFactor out;
    for (const auto& [e, c] : terms_) {
        Rational kr = e * r;
        if (!is_integer(kr)) throw internal_error("exponent not an integer over the ramification");
        const std::int64_t k = to_int64(rat_num(kr)) % r;
        out.add_term(e, c * CycloNumber::root_of_unity(r, a * k));
    }
    return out;
}

ExpFactor ExpFactor::scaled(const CycloNumber& gamma) const {
    ExpFactor out;
    for (const auto& [e, c] : terms_) out.add_term(e, c * gamma);
    return out;
}

ExpFactor ExpFactor::operator-(const ExpFactor& rhs) const {
    ExpFactor out = *this;
    for (const auto& [e, c] : rhs.terms_) out.add_term(e, -c);
    return out;
}

ExpFactor ExpFactor::operator-() const {
    ExpFactor out;
    for (const auto& [e, c] : terms_) out.add_term(e, -c);
    return out;
}

int ExpFactor::compare(const ExpFactor& a, const ExpFactor& b) {
    // Exponent lists, descending: the factor with the larger list comes first,
    // a longer list beating a shorter prefix.
    auto ita = a.terms_.rbegin();
    auto itb = b.terms_.rbegin();
    for (; ita != a.terms_.rend() && itb != b.terms_.rend(); ++ita, ++itb) {
        if (ita->first != itb->first) return ita->first > itb->first ? -1 : 1;
    }
    if (ita != a.terms_.rend()) return -1;
    if (itb != b.terms_.rend()) return 1;
    // Same exponents: compare coefficients, largest exponent first.
    ita = a.terms_.rbegin();
    itb = b.terms_.rbegin();
    for (; ita != a.terms_.rend(); ++ita, ++itb) {
        int c = coeff_key_compare(ita->second, itb->second);
        if (c != 0) return c;
    }
    return 0;
}

std::string ExpFactor::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        Monomial m;
        if (as_monomial(it->second, m)) {
            const bool neg = m.scalar < 0;
            Rational mag = neg ? Rational(-m.scalar) : m.scalar;
            if (first)
                os << (neg ? "-" : "");
            else
                os << (neg ? " - " : " + ");
            if (m.power == 0) {
                if (mag != 1) os << wilddiag::to_string(mag);
            } else {
                if (mag != 1) os << wilddiag::to_string(mag) << " ";
                os << "z" << m.level << "^" << m.power << " ";
            }
        } else {
            // Not expressible in the input grammar; display-only fallback.
            if (!first) os << " + ";
            os << "(" << it->second.to_string() << ") ";
        }
        os << exponent_string(it->first);
        first = false;
    }
    return os.str();
}

Circle::Circle(const ExpFactor& q) : ram_(q.ram()) {
    std::vector<ExpFactor> orbit;
    orbit.reserve(static_cast<std::size_t>(ram_));
    for (std::int64_t a = 0; a < ram_; ++a) orbit.push_back(q.conjugated(a));
    for (std::size_t i = 0; i < orbit.size(); ++i)
        for (std::size_t j = i + 1; j < orbit.size(); ++j)
            if (orbit[i] == orbit[j]) throw internal_error("degenerate Galois orbit");
    rep_ = *std::min_element(orbit.begin(), orbit.end(), [](const ExpFactor& a, const ExpFactor& b) {
        return ExpFactor::compare(a, b) < 0;
    });
}

std::int64_t Circle::irr() const {
    Rational v = slope() * ram_;
    if (!is_integer(v)) throw internal_error("irregularity is not an integer");
    return to_int64(rat_num(v));
}

std::vector<ExpFactor> Circle::orbit() const {
    std::vector<ExpFactor> out;
    out.reserve(static_cast<std::size_t>(ram_));
    for (std::int64_t a = 0; a < ram_; ++a) out.push_back(rep_.conjugated(a));
    return out;
}

void IrregularClass::add(const Circle& c, std::int64_t mult) {
    if (mult < 1) throw validation_error("circle multiplicities must be positive");
    for (auto& [circle, m] : entries_) {
        if (circle == c) {
            m += mult;
            return;
        }
    }
    entries_.emplace_back(c, mult);
}

std::int64_t IrregularClass::rank() const {
    std::int64_t n = 0;
    for (const auto& [c, m] : entries_) n += m * c.ram();
    return n;
}

void IrregularClass::sort_canonical() {
    std::sort(entries_.begin(), entries_.end(),
              [](const auto& a, const auto& b) { return Circle::compare(a.first, b.first) < 0; });
}

std::string IrregularClass::to_string() const {
    if (entries_.empty()) return "(empty)";
    std::ostringstream os;
    bool first = true;
    for (const auto& [c, m] : entries_) {
        if (!first) os << " + ";
        if (m != 1) os << m;
        os << c.to_string();
        first = false;
    }
    return os.str();
}

std::int64_t irr_circle(const Circle& c) { return c.irr(); }

namespace {

struct RepPairLess {
    bool operator()(const std::pair<ExpFactor, ExpFactor>& a,
                    const std::pair<ExpFactor, ExpFactor>& b) const {
        const int first = ExpFactor::compare(a.first, b.first);
        if (first != 0) return first < 0;
        return ExpFactor::compare(a.second, b.second) < 0;
    }
};

}  // namespace

IrregularClass hom_class(const Circle& c1, const Circle& c2) {
    // Memo on canonical representatives; hom_class is pure and reps are
    // value-canonical, so this is invisible apart from the speedup.
    thread_local std::map<std::pair<ExpFactor, ExpFactor>, IrregularClass, RepPairLess> memo;
    const auto key = std::make_pair(c1.rep(), c2.rep());
    if (auto it = memo.find(key); it != memo.end()) return it->second;

    const std::vector<ExpFactor> from = c1.orbit();
    const std::vector<ExpFactor> to = c2.orbit();
    std::vector<std::pair<Circle, std::int64_t>> groups;
    for (const ExpFactor& qa : to) {
        for (const ExpFactor& qb : from) {
            Circle c = circle_of(qa - qb);
            bool found = false;
            for (auto& [circle, count] : groups) {
                if (circle == c) {
                    ++count;
                    found = true;
                    break;
                }
            }
            if (!found) groups.emplace_back(std::move(c), 1);
        }
    }
    IrregularClass out;
    for (const auto& [circle, count] : groups) {
        if (count % circle.ram() != 0)
            throw internal_error("orbit group size is not divisible by the ramification");
        out.add(circle, count / circle.ram());
    }
    out.sort_canonical();
    memo.emplace(key, out);
    return out;
}

std::int64_t irr_class(const IrregularClass& theta) {
    std::int64_t total = 0;
    for (const auto& [c, m] : theta.entries()) total += m * c.irr();
    return total;
}

std::int64_t end_irr(const IrregularClass& theta) {
    std::int64_t total = 0;
    const auto& entries = theta.entries();
    for (const auto& [ci, ni] : entries)
        for (const auto& [cj, nj] : entries) total += ni * nj * irr_class(hom_class(ci, cj));
    return total;
}

}  // namespace wilddiag
