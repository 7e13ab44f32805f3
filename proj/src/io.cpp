#include "dqchar/io.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <vector>

#include <nlohmann/json.hpp>

namespace dqchar {

namespace {

struct TermRow {
    std::string text;
    const LaurentMonomial* mono;
    Int coeff;
};

// terms in canonical-string order, the order every emitter uses
std::vector<TermRow> sorted_terms(const LaurentPolynomial& p) {
    std::vector<TermRow> rows;
    rows.reserve(p.term_count());
    for (const auto& [m, c] : p.terms()) rows.push_back({m.canonical_string(), &m, c});
    std::sort(rows.begin(), rows.end(),
              [](const TermRow& a, const TermRow& b) { return a.text < b.text; });
    return rows;
}

long small_coeff(const Int& c) {
    if (!c.fits_slong_p())
        throw std::overflow_error("coefficient too large for JSON number: " + to_string(c));
    return c.get_si();
}

}  // namespace

std::vector<std::string> term_lines(const LaurentPolynomial& p) {
    std::vector<std::string> lines;
    for (const auto& row : sorted_terms(p))
        lines.push_back(row.coeff == 1 ? row.text : to_string(row.coeff) + "*" + row.text);
    return lines;
}

std::string to_text(const QCharacter& qc) {
    std::ostringstream os;
    for (const auto& line : term_lines(qc.terms)) os << line << '\n';
    return os.str();
}

nlohmann::json to_json(const QCharacter& qc) {
    nlohmann::json j;
    j["n"] = qc.rank;
    j["node"] = qc.node;
    j["shift"] = qc.shift;
    j["dimension"] = to_string(dimension(qc));
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& row : sorted_terms(qc.terms)) {
        nlohmann::json factors = nlohmann::json::array();
        for (const auto& [var, exp] : row.mono->factors())
            factors.push_back({{"node", var.node}, {"shift", var.shift}, {"power", exp}});
        terms.push_back({{"coeff", small_coeff(row.coeff)}, {"factors", factors}});
    }
    j["terms"] = std::move(terms);
    return j;
}

QCharacter from_json(const nlohmann::json& j) {
    QCharacter qc;
    qc.rank = j.at("n").get<int>();
    qc.node = j.at("node").get<int>();
    qc.shift = j.at("shift").get<int>();
    for (const auto& term : j.at("terms")) {
        std::vector<std::pair<YVar, int>> factors;
        for (const auto& f : term.at("factors"))
            factors.push_back({{f.at("node").get<int>(), f.at("shift").get<int>()},
                               f.at("power").get<int>()});
        qc.terms.add(LaurentMonomial::from_factors(std::move(factors)),
                     Int(term.at("coeff").get<long>()));
    }
    if (to_string(qc.terms.coefficient_sum()) != j.at("dimension").get<std::string>())
        throw std::invalid_argument("dimension field disagrees with the coefficient sum");
    auto [dom, antidom] = dominance_report(qc.terms);
    qc.dominant = std::move(dom);
    qc.antidominant = std::move(antidom);
    return qc;
}

std::string to_latex(const LaurentPolynomial& p) {
    std::ostringstream os;
    bool first = true;
    for (const auto& row : sorted_terms(p)) {
        if (!first) os << " + ";
        first = false;
        if (row.coeff != 1) os << to_string(row.coeff);
        for (const auto& [var, exp] : row.mono->factors()) {
            if (exp == 1)
                os << "Y_{" << var.node << ',' << var.shift << '}';
            else
                os << "Y^{" << exp << "}_{" << var.node << ',' << var.shift << '}';
        }
        if (row.mono->is_identity()) os << '1';
    }
    if (first) os << '0';
    return os.str();
}

std::string diff_lines(const std::vector<std::string>& expected,
                       const std::vector<std::string>& actual) {
    const std::size_t ne = expected.size(), na = actual.size();
    // longest common subsequence table
    std::vector<std::vector<std::size_t>> lcs(ne + 1, std::vector<std::size_t>(na + 1, 0));
    for (std::size_t i = ne; i-- > 0;)
        for (std::size_t j = na; j-- > 0;)
            lcs[i][j] = expected[i] == actual[j] ? lcs[i + 1][j + 1] + 1
                                                 : std::max(lcs[i + 1][j], lcs[i][j + 1]);
    std::ostringstream os;
    std::size_t i = 0, j = 0;
    bool differ = false;
    while (i < ne || j < na) {
        if (i < ne && j < na && expected[i] == actual[j]) {
            os << ' ' << expected[i] << '\n';
            ++i, ++j;
        } else if (j < na && (i == ne || lcs[i][j + 1] >= lcs[i + 1][j])) {
            os << '+' << actual[j] << '\n';
            ++j;
            differ = true;
        } else {
            os << '-' << expected[i] << '\n';
            ++i;
            differ = true;
        }
    }
    return differ ? os.str() : std::string();
}

}  // namespace dqchar
