#ifndef DQCHAR_TEST_HELPERS_HPP
#define DQCHAR_TEST_HELPERS_HPP

#include <random>
#include <string>
#include <vector>

#include "dqchar/laurent.hpp"

namespace dqchar::test {

inline LaurentMonomial mono(const std::string& text) { return LaurentMonomial::parse(text); }

inline LaurentPolynomial poly(std::initializer_list<std::pair<std::string, int>> terms) {
    LaurentPolynomial p;
    for (const auto& [text, coeff] : terms) p.add(mono(text), coeff);
    return p;
}

// uniformly random sparse monomial over nodes 1..max_node, shifts
// -max_shift..max_shift, exponents -2..2
inline LaurentMonomial random_monomial(std::mt19937& rng, int max_node = 4, int max_shift = 6,
                                       int max_factors = 4) {
    std::uniform_int_distribution<int> n_factors(0, max_factors);
    std::uniform_int_distribution<int> node(1, max_node);
    std::uniform_int_distribution<int> shift(-max_shift, max_shift);
    std::uniform_int_distribution<int> exp(-2, 2);
    std::vector<std::pair<YVar, int>> factors;
    int count = n_factors(rng);
    for (int i = 0; i < count; ++i) factors.push_back({{node(rng), shift(rng)}, exp(rng)});
    return LaurentMonomial::from_factors(std::move(factors));
}

inline LaurentPolynomial random_polynomial(std::mt19937& rng, int max_terms = 5) {
    std::uniform_int_distribution<int> n_terms(0, max_terms);
    std::uniform_int_distribution<int> coeff(-3, 3);
    LaurentPolynomial p;
    int count = n_terms(rng);
    for (int i = 0; i < count; ++i) p.add(random_monomial(rng), coeff(rng));
    return p;
}

}  // namespace dqchar::test

#endif
