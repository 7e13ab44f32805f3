#ifndef DQCHAR_WEIGHTS_HPP
#define DQCHAR_WEIGHTS_HPP

#include "dqchar/laurent.hpp"
#include "dqchar/paths.hpp"

namespace dqchar {

// How a glued path crosses the x = n-1 axis.  Vertical travel enters at
// l2 = y_{n-1}, leaves at l1 = y'_{n-1}, l2 > l1; dir = +1 means the
// adjacent step descends (heights grow downward).
struct TravelConfig {
    enum class Kind { StraightPass, UpperCorner, LowerCorner, Vertical };

    Kind kind = Kind::StraightPass;
    int corner_height = 0;  // UpperCorner / LowerCorner
    int l1 = 0;             // Vertical: exit height
    int l2 = 0;             // Vertical: entry height
    int entry_dir = 0;      // Vertical: +1 descending entry, -1 ascending
    int exit_dir = 0;       // Vertical: +1 descending exit, -1 ascending

    bool operator==(const TravelConfig&) const = default;
};

TravelConfig classify_travel(const Path& glued);

// Spin-node contribution of a glued path: 1 for a straight pass, the
// corner monomial Y_{n-1,c} Y_{n,c} (or its inverse) for an axis corner,
// and a two-term binomial for vertical travel, with the node pairing
// selected by (l2 - l1) mod 4.
LaurentPolynomial z_factor(const TravelConfig& cfg, int rank);

// Monomial of a spin-family path: interior corners contribute
// Y^{+-1}_{j,l}; the endpoint picks node n-1 or n by (y_{n-1} - k) mod 4.
LaurentMonomial spin_weight(const Path& spin);

// One- or two-term weight of a glued path: z_factor times the corner
// factors Y^{+-1}_{jbar,l} away from the axis, jbar = j below the axis and
// N - j above it.
LaurentPolynomial glued_weight(const Path& glued);

// Uniform entry point for both families.
LaurentPolynomial weight(const Path& p);

}  // namespace dqchar

#endif
