#ifndef DQCHAR_IO_HPP
#define DQCHAR_IO_HPP

#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "dqchar/qchar.hpp"

namespace dqchar {

// One line per distinct monomial, sorted by canonical string, coefficient
// printed as a "c*" prefix when > 1.  The stable text format the goldens
// pin down.
std::vector<std::string> term_lines(const LaurentPolynomial& p);
std::string to_text(const QCharacter& qc);

nlohmann::json to_json(const QCharacter& qc);
QCharacter from_json(const nlohmann::json& j);

// Paper-style fragment: Y_{i,l} / Y^{e}_{i,l} products joined with " + ".
std::string to_latex(const LaurentPolynomial& p);

// Simple unified-style diff of two line lists ("-" expected, "+" actual);
// empty when equal.
std::string diff_lines(const std::vector<std::string>& expected,
                       const std::vector<std::string>& actual);

}  // namespace dqchar

#endif
