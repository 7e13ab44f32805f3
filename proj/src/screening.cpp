#include "dqchar/screening.hpp"

#include <atomic>
#include <sstream>
#include <thread>
#include <vector>

namespace dqchar {

ScreeningElement apply_screening_raw(const DynkinD& d, int node, const LaurentPolynomial& f) {
    if (!d.valid_node(node))
        throw std::invalid_argument("screening node out of range: " + std::to_string(node));
    ScreeningElement e;
    e.node = node;
    for (const auto& [m, c] : f.terms())
        for (const auto& [var, u] : m.factors())
            if (var.node == node) e.components[var.shift].add(m, c * u);
    std::erase_if(e.components, [](const auto& kv) { return kv.second.is_zero(); });
    return e;
}

ScreeningElement reduce(const DynkinD& d, ScreeningElement e) {
    // push every component down two at a time (S_{j,l} ~ A_{j,l-1} S_{j,l-2})
    // onto the minimal shift present in its parity class
    for (int parity : {0, 1}) {
        int target = 0;
        bool found = false;
        for (const auto& [shift, poly] : e.components)
            if (((shift % 2) + 2) % 2 == parity) {
                target = shift;
                found = true;
                break;
            }
        if (!found) continue;
        for (;;) {
            int top = target;
            for (const auto& [shift, poly] : e.components)
                if (((shift % 2) + 2) % 2 == parity && shift > top) top = shift;
            if (top == target) break;
            LaurentPolynomial moved =
                e.components[top] * a_monomial(d, e.node, top - 1);
            e.components.erase(top);
            auto it = e.components.find(top - 2);
            if (it == e.components.end())
                e.components.emplace(top - 2, std::move(moved));
            else
                it->second += moved;
        }
    }
    std::erase_if(e.components, [](const auto& kv) { return kv.second.is_zero(); });
    return e;
}

bool is_in_kernel(const DynkinD& d, int node, const LaurentPolynomial& f) {
    return reduce(d, apply_screening_raw(d, node, f)).is_zero();
}

namespace {

std::string serialize_residue(const ScreeningElement& e) {
    std::ostringstream os;
    bool first = true;
    for (const auto& [shift, poly] : e.components) {
        if (!first) os << "; ";
        first = false;
        os << "S[" << e.node << ',' << shift << "] -> ";
        bool first_term = true;
        for (const auto& [m, c] : poly.terms()) {
            if (!first_term) os << " + ";
            first_term = false;
            if (c != 1) os << to_string(c) << '*';
            os << m.canonical_string();
        }
    }
    return os.str();
}

}  // namespace

VerificationReport verify_qcharacter(const QCharacter& qc, unsigned threads) {
    DynkinD d(qc.rank);
    VerificationReport report;
    report.checks.resize(qc.rank);

    auto run_node = [&](int j) {
        KernelCheck check;
        check.node = j;
        ScreeningElement residue = reduce(d, apply_screening_raw(d, j, qc.terms));
        check.in_kernel = residue.is_zero();
        if (!check.in_kernel) check.residue = serialize_residue(residue);
        report.checks[j - 1] = std::move(check);
    };

    if (threads <= 1) {
        for (int j = 1; j <= qc.rank; ++j) run_node(j);
    } else {
        std::atomic<int> next{1};
        std::vector<std::thread> pool;
        unsigned count = std::min<unsigned>(threads, static_cast<unsigned>(qc.rank));
        for (unsigned t = 0; t < count; ++t)
            pool.emplace_back([&] {
                for (int j = next.fetch_add(1); j <= qc.rank; j = next.fetch_add(1))
                    run_node(j);
            });
        for (auto& th : pool) th.join();
    }

    for (const auto& check : report.checks)
        if (!check.in_kernel) report.all_pass = false;
    return report;
}

}  // namespace dqchar
