#include "dqchar/laurent.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "dqchar/cartan.hpp"

namespace dqchar {

LaurentMonomial LaurentMonomial::y(int node, int shift, int exp) {
    LaurentMonomial m;
    if (exp != 0) m.factors_.push_back({{node, shift}, exp});
    return m;
}

LaurentMonomial LaurentMonomial::from_factors(std::vector<std::pair<YVar, int>> factors) {
    std::sort(factors.begin(), factors.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    LaurentMonomial m;
    for (auto& [var, exp] : factors) {
        if (!m.factors_.empty() && m.factors_.back().first == var)
            m.factors_.back().second += exp;
        else
            m.factors_.push_back({var, exp});
    }
    std::erase_if(m.factors_, [](const auto& f) { return f.second == 0; });
    return m;
}

int LaurentMonomial::exponent(YVar v) const {
    auto it = std::lower_bound(factors_.begin(), factors_.end(), v,
                               [](const auto& f, const YVar& key) { return f.first < key; });
    return (it != factors_.end() && it->first == v) ? it->second : 0;
}

LaurentMonomial LaurentMonomial::operator*(const LaurentMonomial& rhs) const {
    // merge of two sorted factor lists
    LaurentMonomial out;
    out.factors_.reserve(factors_.size() + rhs.factors_.size());
    auto a = factors_.begin(), b = rhs.factors_.begin();
    while (a != factors_.end() || b != rhs.factors_.end()) {
        if (b == rhs.factors_.end() || (a != factors_.end() && a->first < b->first)) {
            out.factors_.push_back(*a++);
        } else if (a == factors_.end() || b->first < a->first) {
            out.factors_.push_back(*b++);
        } else {
            int e = a->second + b->second;
            if (e != 0) out.factors_.push_back({a->first, e});
            ++a;
            ++b;
        }
    }
    return out;
}

LaurentMonomial LaurentMonomial::inverse() const {
    LaurentMonomial out = *this;
    for (auto& [var, exp] : out.factors_) exp = -exp;
    return out;
}

LaurentMonomial LaurentMonomial::pow(int e) const {
    if (e == 0) return {};
    LaurentMonomial out = *this;
    for (auto& [var, exp] : out.factors_) exp *= e;
    return out;
}

bool LaurentMonomial::is_dominant() const {
    return std::all_of(factors_.begin(), factors_.end(),
                       [](const auto& f) { return f.second > 0; });
}

bool LaurentMonomial::is_antidominant() const {
    return std::all_of(factors_.begin(), factors_.end(),
                       [](const auto& f) { return f.second < 0; });
}

LaurentMonomial LaurentMonomial::swapped_spin_nodes(int rank) const {
    std::vector<std::pair<YVar, int>> fs = factors_;
    for (auto& [var, exp] : fs) {
        if (var.node == rank - 1)
            var.node = rank;
        else if (var.node == rank)
            var.node = rank - 1;
    }
    return from_factors(std::move(fs));
}

LaurentMonomial LaurentMonomial::shifted(int delta) const {
    LaurentMonomial out = *this;
    for (auto& [var, exp] : out.factors_) var.shift += delta;
    return out;
}

std::string LaurentMonomial::canonical_string() const {
    if (factors_.empty()) return "1";
    std::ostringstream os;
    bool first = true;
    for (const auto& [var, exp] : factors_) {
        if (!first) os << ' ';
        first = false;
        os << "Y[" << var.node << ',' << var.shift << ']';
        if (exp != 1) os << '^' << exp;
    }
    return os.str();
}

namespace {

[[noreturn]] void parse_fail(const std::string& text) {
    throw std::invalid_argument("malformed monomial string: \"" + text + "\"");
}

long parse_int(const std::string& text, const std::string& all, std::size_t& pos) {
    std::size_t start = pos;
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start) parse_fail(all);
    return std::strtol(text.substr(start, pos - start).c_str(), nullptr, 10);
}

}  // namespace

LaurentMonomial LaurentMonomial::parse(const std::string& text) {
    if (text == "1") return {};
    std::vector<std::pair<YVar, int>> factors;
    std::istringstream is(text);
    std::string token;
    while (is >> token) {
        std::size_t pos = 0;
        if (token.compare(0, 2, "Y[") != 0) parse_fail(text);
        pos = 2;
        long node = parse_int(token, text, pos);
        if (pos >= token.size() || token[pos] != ',') parse_fail(text);
        ++pos;
        long shift = parse_int(token, text, pos);
        if (pos >= token.size() || token[pos] != ']') parse_fail(text);
        ++pos;
        long exp = 1;
        if (pos < token.size()) {
            if (token[pos] != '^') parse_fail(text);
            ++pos;
            exp = parse_int(token, text, pos);
            if (pos != token.size() || exp == 0 || exp == 1) parse_fail(text);
        }
        factors.push_back({{static_cast<int>(node), static_cast<int>(shift)},
                           static_cast<int>(exp)});
    }
    if (factors.empty()) parse_fail(text);
    LaurentMonomial m = from_factors(std::move(factors));
    std::istringstream rs(text);
    std::string t, joined;
    while (rs >> t) {
        if (!joined.empty()) joined += ' ';
        joined += t;
    }
    if (m.canonical_string() != joined)
        parse_fail(text);  // not in canonical order / duplicated variable
    return m;
}

Int LaurentPolynomial::coefficient(const LaurentMonomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Int(0) : it->second;
}

void LaurentPolynomial::add(const LaurentMonomial& m, const Int& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

LaurentPolynomial& LaurentPolynomial::operator+=(const LaurentPolynomial& rhs) {
    for (const auto& [m, c] : rhs.terms_) add(m, c);
    return *this;
}

LaurentPolynomial& LaurentPolynomial::operator-=(const LaurentPolynomial& rhs) {
    for (const auto& [m, c] : rhs.terms_) add(m, -c);
    return *this;
}

LaurentPolynomial LaurentPolynomial::operator+(const LaurentPolynomial& rhs) const {
    LaurentPolynomial out = *this;
    out += rhs;
    return out;
}

LaurentPolynomial LaurentPolynomial::operator-(const LaurentPolynomial& rhs) const {
    LaurentPolynomial out = *this;
    out -= rhs;
    return out;
}

LaurentPolynomial LaurentPolynomial::operator*(const LaurentMonomial& m) const {
    LaurentPolynomial out;
    for (const auto& [mono, c] : terms_) out.terms_.emplace(mono * m, c);
    return out;
}

LaurentPolynomial LaurentPolynomial::operator*(const LaurentPolynomial& rhs) const {
    LaurentPolynomial out;
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : rhs.terms_) out.add(ma * mb, ca * cb);
    return out;
}

LaurentPolynomial LaurentPolynomial::operator*(const Int& c) const {
    LaurentPolynomial out;
    if (c == 0) return out;
    for (const auto& [m, coeff] : terms_) out.terms_.emplace(m, coeff * c);
    return out;
}

Int LaurentPolynomial::coefficient_sum() const {
    Int total = 0;
    for (const auto& [m, c] : terms_) total += c;
    return total;
}

LaurentPolynomial LaurentPolynomial::swapped_spin_nodes(int rank) const {
    LaurentPolynomial out;
    for (const auto& [m, c] : terms_) out.add(m.swapped_spin_nodes(rank), c);
    return out;
}

LaurentPolynomial LaurentPolynomial::shifted(int delta) const {
    LaurentPolynomial out;
    for (const auto& [m, c] : terms_) out.terms_.emplace(m.shifted(delta), c);
    return out;
}

std::optional<std::map<std::pair<int, int>, long>> factor_over_A(
    const DynkinD& d, const LaurentMonomial& reference, const LaurentMonomial& m,
    int window_lo, int window_hi) {
    const int n = d.rank();
    // target = reference * m^{-1} must equal prod A_{j,l}^{e_{j,l}}
    LaurentMonomial target = reference * m.inverse();

    for (const auto& [var, exp] : target.factors()) {
        (void)exp;
        if (var.shift < window_lo - 1 || var.shift > window_hi + 1) return std::nullopt;
    }

    // e[j][l] determined row by row: the exponent of Y_{j,s} in the target
    // is e_{j,s+1} + e_{j,s-1} - sum_{j' ~ j} e_{j',s}.
    auto e = std::map<std::pair<int, int>, long>{};
    auto e_at = [&](int j, int l) -> long {
        auto it = e.find({j, l});
        return it == e.end() ? 0 : it->second;
    };

    for (int s = window_lo - 1; s <= window_hi + 1; ++s) {
        for (int j = 1; j <= n; ++j) {
            long nbr = 0;
            for (int j2 : d.neighbors(j)) nbr += e_at(j2, s);
            long val = target.exponent({j, s}) - e_at(j, s - 1) + nbr;
            if (s + 1 > window_hi) {
                if (val != 0) return std::nullopt;  // inconsistent beyond the window
            } else if (val != 0) {
                if (val < 0) return std::nullopt;
                e[{j, s + 1}] = val;
            }
        }
    }

    // soundness: the solved exponents must reproduce the target exactly
    LaurentMonomial product;
    for (const auto& [key, exp] : e)
        product = product * a_monomial(d, key.first, key.second).pow(static_cast<int>(exp));
    if (product != target) return std::nullopt;
    return e;
}

std::optional<std::map<std::pair<int, int>, long>> factor_over_A(
    const DynkinD& d, const LaurentMonomial& reference, const LaurentMonomial& m) {
    int lo = std::numeric_limits<int>::max();
    int hi = std::numeric_limits<int>::min();
    for (const auto* mono : {&reference, &m})
        for (const auto& [var, exp] : mono->factors()) {
            (void)exp;
            lo = std::min(lo, var.shift);
            hi = std::max(hi, var.shift);
        }
    if (lo > hi) {  // both inputs empty
        lo = 0;
        hi = 0;
    }
    return factor_over_A(d, reference, m, lo - d.rank(), hi + d.rank());
}

}  // namespace dqchar
