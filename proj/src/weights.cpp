#include "dqchar/weights.hpp"

#include <cassert>
#include <stdexcept>

namespace dqchar {

TravelConfig classify_travel(const Path& glued) {
    if (glued.is_spin())
        throw std::invalid_argument("classify_travel expects a glued path");
    const int yl = glued.left_middle(), yr = glued.right_middle();
    const int entry_h = glued.entry_height(), exit_h = glued.exit_height();

    TravelConfig cfg;
    if (yl > yr) {
        cfg.kind = TravelConfig::Kind::Vertical;
        cfg.l2 = yl;
        cfg.l1 = yr;
        cfg.entry_dir = entry_h == yl - 1 ? +1 : -1;
        cfg.exit_dir = exit_h == yr + 1 ? +1 : -1;
    } else if (entry_h == yl + 1 && exit_h == yl + 1) {
        cfg.kind = TravelConfig::Kind::UpperCorner;
        cfg.corner_height = yl;
    } else if (entry_h == yl - 1 && exit_h == yl - 1) {
        cfg.kind = TravelConfig::Kind::LowerCorner;
        cfg.corner_height = yl;
    } else {
        cfg.kind = TravelConfig::Kind::StraightPass;
    }
    return cfg;
}

LaurentPolynomial z_factor(const TravelConfig& cfg, int rank) {
    const int a = rank - 1, b = rank;  // the two spin nodes
    switch (cfg.kind) {
        case TravelConfig::Kind::StraightPass:
            return LaurentPolynomial::one();
        case TravelConfig::Kind::UpperCorner:
            return LaurentPolynomial(LaurentMonomial::y(a, cfg.corner_height) *
                                     LaurentMonomial::y(b, cfg.corner_height));
        case TravelConfig::Kind::LowerCorner:
            return LaurentPolynomial(LaurentMonomial::y(a, cfg.corner_height, -1) *
                                     LaurentMonomial::y(b, cfg.corner_height, -1));
        case TravelConfig::Kind::Vertical:
            break;
    }

    // sign at the exit height l1 flips on an ascending exit, at the entry
    // height l2 on a descending entry; the residue of l2-l1 mod 4 picks
    // same-node or mixed-node pairing
    const int s1 = cfg.exit_dir == -1 ? -1 : +1;
    const int s2 = cfg.entry_dir == +1 ? -1 : +1;
    const int r = (cfg.l2 - cfg.l1) % 4;
    const bool mixed = (cfg.entry_dir == cfg.exit_dir) == (r == 2);

    LaurentPolynomial z;
    if (mixed) {
        z.add(LaurentMonomial::y(a, cfg.l1, s1) * LaurentMonomial::y(b, cfg.l2, s2), 1);
        z.add(LaurentMonomial::y(b, cfg.l1, s1) * LaurentMonomial::y(a, cfg.l2, s2), 1);
    } else {
        z.add(LaurentMonomial::y(a, cfg.l1, s1) * LaurentMonomial::y(a, cfg.l2, s2), 1);
        z.add(LaurentMonomial::y(b, cfg.l1, s1) * LaurentMonomial::y(b, cfg.l2, s2), 1);
    }
    return z;
}

LaurentMonomial spin_weight(const Path& spin) {
    if (!spin.is_spin())
        throw std::invalid_argument("spin_weight expects a spin-family path");
    const int n = spin.family().rank, k = spin.family().shift;

    LaurentMonomial m;
    CornerSets cs = corners(spin);
    for (const auto& c : cs.upper) {
        if (c.x != n - 1) {
            m = m * LaurentMonomial::y(c.x, c.y);
            continue;
        }
        int res = (((c.y - k) % 4) + 4) % 4;
        assert(res == 0 || res == 2);
        m = m * LaurentMonomial::y(res == 0 ? n - 1 : n, c.y);
    }
    for (const auto& c : cs.lower) {
        if (c.x != n - 1) {
            m = m * LaurentMonomial::y(c.x, c.y, -1);
            continue;
        }
        int res = (((c.y - k) % 4) + 4) % 4;
        assert(res == 0 || res == 2);
        m = m * LaurentMonomial::y(res == 0 ? n : n - 1, c.y, -1);
    }
    return m;
}

LaurentPolynomial glued_weight(const Path& glued) {
    if (glued.is_spin())
        throw std::invalid_argument("glued_weight expects a glued-family path");
    const int n = glued.family().rank, N = 2 * n - 2;

    LaurentMonomial outer;
    CornerSets cs = corners(glued);
    for (const auto& c : cs.upper)
        if (c.x != n - 1) outer = outer * LaurentMonomial::y(c.x <= n - 2 ? c.x : N - c.x, c.y);
    for (const auto& c : cs.lower)
        if (c.x != n - 1)
            outer = outer * LaurentMonomial::y(c.x <= n - 2 ? c.x : N - c.x, c.y, -1);

    return z_factor(classify_travel(glued), n) * outer;
}

LaurentPolynomial weight(const Path& p) {
    if (p.is_spin()) return LaurentPolynomial(spin_weight(p));
    return glued_weight(p);
}

}  // namespace dqchar
