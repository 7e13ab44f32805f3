#ifndef DQCHAR_CARTAN_HPP
#define DQCHAR_CARTAN_HPP

#include <vector>

#include "dqchar/numeric.hpp"

namespace dqchar {

class LaurentMonomial;

// Dynkin diagram of type D_n in Bourbaki labeling: the chain 1-2-...-(n-2)
// with both spin nodes n-1 and n attached to n-2.  Adjacency is generated
// from the rank, never stored, so malformed diagrams are unrepresentable.
class DynkinD {
  public:
    explicit DynkinD(int rank);

    int rank() const { return rank_; }

    bool valid_node(int i) const { return i >= 1 && i <= rank_; }

    // Nodes j with c_{ij} = -1, in increasing order.
    std::vector<int> neighbors(int i) const;

    bool adjacent(int i, int j) const;

    // i* with w0(alpha_i) = -alpha_{i*}: identity except that the spin
    // nodes swap when the rank is odd.
    int dual_node(int i) const;

    // dim L(Y_{i,0}) restricted to the finite-type subalgebra:
    // 2^{n-1} for the spin nodes, sum_{j<=i/2} C(2n, i-2j) otherwise.
    Int cp_dimension(int i) const;

  private:
    void require_node(int i) const;

    int rank_;
};

// A_{i,k} = Y_{i,k+1} Y_{i,k-1} prod_{j ~ i} Y_{j,k}^{-1}  (simply laced).
LaurentMonomial a_monomial(const DynkinD& d, int node, int shift);

}  // namespace dqchar

#endif
