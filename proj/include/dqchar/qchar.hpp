#ifndef DQCHAR_QCHAR_HPP
#define DQCHAR_QCHAR_HPP

#include <utility>
#include <vector>

#include "dqchar/cartan.hpp"
#include "dqchar/laurent.hpp"

namespace dqchar {

// q-character of the fundamental module L(Y_{node,shift}) at rank n,
// with the dominance analysis cached at construction.
struct QCharacter {
    int rank = 0;
    int node = 0;
    int shift = 0;
    LaurentPolynomial terms;
    long path_count = 0;

    std::vector<std::pair<LaurentMonomial, Int>> dominant;
    std::vector<std::pair<LaurentMonomial, Int>> antidominant;
};

// Sum of path weights over P_{node,shift}; for node = n the spin-node swap
// of the node n-1 character.  Parity: node - shift odd for node <= n-1,
// (n-1) - shift odd for node = n; throws std::invalid_argument otherwise.
QCharacter q_character(int rank, int node, int shift);

// Smallest nonnegative shift of valid parity for this node.
int default_shift(int rank, int node);

// |P_{i,0}| in closed form: sum_{j<=i} sum_{l<=i-j} C(n-1,j) C(n-1,l) for
// i <= n-2, and 2^{n-1} for the spin nodes.
Int path_count_formula(int rank, int node);

// Number of monomials counted with multiplicity: C(2n-2,i) +
// 2 sum_{j<=i} sum_{l<=i-j-1} C(n-1,j) C(n-1,l) for i <= n-2, 2^{n-1}
// for the spin nodes.
Int monomial_count_formula(int rank, int node);

Int dimension(const QCharacter& qc);

std::pair<std::vector<std::pair<LaurentMonomial, Int>>,
          std::vector<std::pair<LaurentMonomial, Int>>>
dominance_report(const LaurentPolynomial& terms);

}  // namespace dqchar

#endif
