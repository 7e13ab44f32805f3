#ifndef DQCHAR_SCREENING_HPP
#define DQCHAR_SCREENING_HPP

#include <map>
#include <string>
#include <vector>

#include "dqchar/cartan.hpp"
#include "dqchar/laurent.hpp"
#include "dqchar/qchar.hpp"

namespace dqchar {

// Element of the quotient module attached to node j: a finite map from
// basis shifts of S_{j,.} to polynomial coefficients.  After reduce() at
// most one shift per parity class survives.  The zero element is the
// empty map.
struct ScreeningElement {
    int node = 0;
    std::map<int, LaurentPolynomial> components;

    bool is_zero() const { return components.empty(); }
};

// Derivation rule: each factor Y_{j,l}^u of each term c*m contributes
// c*u*m at basis shift l.  Variables of other nodes contribute nothing.
ScreeningElement apply_screening_raw(const DynkinD& d, int node, const LaurentPolynomial& f);

// Rewrites every component at shift l down to l-2 (multiplying by
// A_{j,l-1}) until only the minimal present shift of each parity class
// remains; drops zero components.
ScreeningElement reduce(const DynkinD& d, ScreeningElement e);

// f lies in ker S_j iff the reduced image is the zero element.
bool is_in_kernel(const DynkinD& d, int node, const LaurentPolynomial& f);

struct KernelCheck {
    int node = 0;
    bool in_kernel = false;
    std::string residue;  // serialized reduced components on failure
};

struct VerificationReport {
    std::vector<KernelCheck> checks;
    bool all_pass = true;
};

// Kernel membership for every node of the diagram; failures carry the
// offending residue.  threads caps the parallel fan-out (0 = serial).
VerificationReport verify_qcharacter(const QCharacter& qc, unsigned threads = 0);

}  // namespace dqchar

#endif
