#include "dqchar/qchar.hpp"

#include <stdexcept>
#include <string>

#include "dqchar/paths.hpp"
#include "dqchar/weights.hpp"

namespace dqchar {

namespace {

void require_parity(int rank, int node, int shift) {
    int probe = node == rank ? rank - 1 : node;
    if (((probe - shift) % 2 + 2) % 2 != 1)
        throw std::invalid_argument(
            "parity violation: require node - shift = 1 (mod 2), with node " +
            std::to_string(rank) + " read as " + std::to_string(rank - 1) +
            "; got node=" + std::to_string(node) + ", shift=" + std::to_string(shift));
}

}  // namespace

int default_shift(int rank, int node) {
    int probe = node == rank ? rank - 1 : node;
    return ((probe - 1) % 2 + 2) % 2 == 0 ? 0 : 1;
}

QCharacter q_character(int rank, int node, int shift) {
    DynkinD d(rank);
    if (!d.valid_node(node))
        throw std::invalid_argument("node " + std::to_string(node) + " out of range 1.." +
                                    std::to_string(rank));
    require_parity(rank, node, shift);

    QCharacter qc;
    qc.rank = rank;
    qc.node = node;
    qc.shift = shift;

    if (node == rank) {
        QCharacter base = q_character(rank, rank - 1, shift);
        qc.terms = base.terms.swapped_spin_nodes(rank);
        qc.path_count = base.path_count;
    } else {
        PathFamily fam = family(rank, node, shift);
        for_each_path(fam, [&](const Path& p) {
            qc.terms += weight(p);
            ++qc.path_count;
        });
    }

    auto [dom, antidom] = dominance_report(qc.terms);
    qc.dominant = std::move(dom);
    qc.antidominant = std::move(antidom);
    return qc;
}

Int path_count_formula(int rank, int node) {
    DynkinD d(rank);
    if (!d.valid_node(node))
        throw std::invalid_argument("node out of range: " + std::to_string(node));
    if (node >= rank - 1) return pow2(static_cast<unsigned long>(rank - 1));
    Int total = 0;
    for (int j = 0; j <= node; ++j)
        for (int l = 0; l <= node - j; ++l)
            total += binomial(static_cast<unsigned long>(rank - 1), static_cast<unsigned long>(j)) *
                     binomial(static_cast<unsigned long>(rank - 1), static_cast<unsigned long>(l));
    return total;
}

Int monomial_count_formula(int rank, int node) {
    DynkinD d(rank);
    if (!d.valid_node(node))
        throw std::invalid_argument("node out of range: " + std::to_string(node));
    if (node >= rank - 1) return pow2(static_cast<unsigned long>(rank - 1));
    Int total = binomial(static_cast<unsigned long>(2 * rank - 2),
                         static_cast<unsigned long>(node));
    for (int j = 0; j <= node; ++j)
        for (int l = 0; l <= node - j - 1; ++l)
            total += 2 *
                     binomial(static_cast<unsigned long>(rank - 1), static_cast<unsigned long>(j)) *
                     binomial(static_cast<unsigned long>(rank - 1), static_cast<unsigned long>(l));
    return total;
}

Int dimension(const QCharacter& qc) { return qc.terms.coefficient_sum(); }

std::pair<std::vector<std::pair<LaurentMonomial, Int>>,
          std::vector<std::pair<LaurentMonomial, Int>>>
dominance_report(const LaurentPolynomial& terms) {
    std::vector<std::pair<LaurentMonomial, Int>> dom, antidom;
    for (const auto& [m, c] : terms.terms()) {
        if (m.is_dominant()) dom.push_back({m, c});
        if (m.is_antidominant()) antidom.push_back({m, c});
    }
    return {dom, antidom};
}

}  // namespace dqchar
