#include "dqchar/cartan.hpp"

#include <stdexcept>
#include <string>

#include "dqchar/laurent.hpp"

namespace dqchar {

DynkinD::DynkinD(int rank) : rank_(rank) {
    if (rank < 4)
        throw std::invalid_argument("type D requires rank >= 4, got " + std::to_string(rank));
}

void DynkinD::require_node(int i) const {
    if (!valid_node(i))
        throw std::invalid_argument("node " + std::to_string(i) + " out of range 1.." +
                                    std::to_string(rank_));
}

std::vector<int> DynkinD::neighbors(int i) const {
    require_node(i);
    std::vector<int> out;
    if (i <= rank_ - 2) {
        if (i > 1) out.push_back(i - 1);
        if (i < rank_ - 2) out.push_back(i + 1);
        if (i == rank_ - 2) {
            out.push_back(rank_ - 1);
            out.push_back(rank_);
        }
    } else {
        out.push_back(rank_ - 2);  // both spin nodes hang off n-2
    }
    return out;
}

bool DynkinD::adjacent(int i, int j) const {
    for (int v : neighbors(i))
        if (v == j) return true;
    return false;
}

int DynkinD::dual_node(int i) const {
    require_node(i);
    if (i <= rank_ - 2 || rank_ % 2 == 0) return i;
    return i == rank_ ? rank_ - 1 : rank_;
}

Int DynkinD::cp_dimension(int i) const {
    require_node(i);
    if (i >= rank_ - 1) return pow2(static_cast<unsigned long>(rank_ - 1));
    Int total = 0;
    for (int j = 0; 2 * j <= i; ++j)
        total += binomial(static_cast<unsigned long>(2 * rank_),
                          static_cast<unsigned long>(i - 2 * j));
    return total;
}

LaurentMonomial a_monomial(const DynkinD& d, int node, int shift) {
    std::vector<std::pair<YVar, int>> factors;
    factors.push_back({{node, shift + 1}, 1});
    factors.push_back({{node, shift - 1}, 1});
    for (int j : d.neighbors(node)) factors.push_back({{j, shift}, -1});
    return LaurentMonomial::from_factors(std::move(factors));
}

}  // namespace dqchar
