// Command-line front end: compute q-characters of fundamental modules of
// type D, list the underlying path families, tabulate the counting
// formulas, and run the self-verification suite.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "dqchar/cartan.hpp"
#include "dqchar/io.hpp"
#include "dqchar/laurent.hpp"
#include "dqchar/paths.hpp"
#include "dqchar/qchar.hpp"
#include "dqchar/screening.hpp"
#include "dqchar/weights.hpp"

namespace {

using namespace dqchar;

constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;

std::string golden_filename(int n, int node, int shift) {
    std::ostringstream os;
    os << "qchar_n" << n << "_node" << node << "_shift" << shift << ".txt";
    return os.str();
}

std::string normalize(const std::string& line) {
    std::string out;
    bool in_space = true;  // also strips leading blanks
    for (char ch : line) {
        if (ch == ' ' || ch == '\t') {
            if (!in_space) out += ' ';
            in_space = true;
        } else {
            out += ch;
            in_space = false;
        }
    }
    while (!out.empty() && out.back() == ' ') out.pop_back();
    return out;
}

std::vector<std::string> read_lines(const std::filesystem::path& file) {
    std::ifstream in(file);
    if (!in) throw std::invalid_argument("cannot open " + file.string());
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) {
        std::string norm = normalize(line);
        if (!norm.empty()) lines.push_back(norm);
    }
    return lines;
}

int run_qchar(int n, int node, std::optional<int> shift, const std::string& format) {
    int k = shift.value_or(default_shift(n, node));
    QCharacter qc = q_character(n, node, k);
    if (format == "json")
        std::cout << to_json(qc).dump(2) << '\n';
    else if (format == "latex")
        std::cout << to_latex(qc.terms) << '\n';
    else
        std::cout << to_text(qc);
    return 0;
}

int run_paths(int n, int node, std::optional<int> shift, const std::string& format) {
    int k = shift.value_or(default_shift(n, node));
    PathFamily fam = family(n, node, k);

    long path_count = 0;
    Int term_count = 0;
    nlohmann::json rows = nlohmann::json::array();
    std::ostringstream text;
    for_each_path(fam, [&](const Path& p) {
        ++path_count;
        LaurentPolynomial w = weight(p);
        term_count += w.coefficient_sum();
        std::vector<std::string> terms = term_lines(w);
        if (format == "json") {
            nlohmann::json row;
            if (fam.is_spin()) {
                row["heights"] = p.heights();
            } else {
                row["left"] = std::vector<int>(p.heights().begin(), p.heights().begin() + n);
                row["right"] = std::vector<int>(p.heights().begin() + n, p.heights().end());
            }
            row["weight"] = terms;
            rows.push_back(std::move(row));
        } else {
            text << p.to_string() << " -> ";
            for (std::size_t t = 0; t < terms.size(); ++t)
                text << (t ? " + " : "") << terms[t];
            text << '\n';
        }
    });

    if (format == "json") {
        nlohmann::json j;
        j["n"] = n;
        j["node"] = node;
        j["shift"] = k;
        j["path_count"] = path_count;
        j["term_count"] = to_string(term_count);
        j["paths"] = std::move(rows);
        std::cout << j.dump(2) << '\n';
    } else {
        text << "# paths: " << path_count << "  terms: " << to_string(term_count) << '\n';
        std::cout << text.str();
    }
    return 0;
}

int run_dims(int n_min, int n_max, const std::string& format) {
    if (n_min < 4 || n_max < n_min)
        throw std::invalid_argument("need 4 <= n-min <= n-max");

    nlohmann::json rows = nlohmann::json::array();
    std::ostringstream text;
    text << "   n  node          paths      monomials   cp_dimension  flag\n";
    bool all_match = true;
    for (int n = n_min; n <= n_max; ++n) {
        DynkinD d(n);
        for (int i = 1; i <= n; ++i) {
            Int paths = path_count_formula(n, i);
            Int monomials = monomial_count_formula(n, i);
            Int cp = d.cp_dimension(i);
            bool match = monomials == cp;
            all_match = all_match && match;
            if (format == "json") {
                rows.push_back({{"n", n},
                                {"node", i},
                                {"path_count", to_string(paths)},
                                {"monomial_count", to_string(monomials)},
                                {"cp_dimension", to_string(cp)},
                                {"flag", match ? "match" : "MISMATCH"}});
            } else {
                std::ostringstream row;
                row.width(4);
                row << n;
                row.width(6);
                row << i;
                row.width(15);
                row << to_string(paths);
                row.width(15);
                row << to_string(monomials);
                row.width(15);
                row << to_string(cp);
                row << "  " << (match ? "match" : "MISMATCH");
                text << row.str() << '\n';
            }
        }
    }
    if (format == "json")
        std::cout << nlohmann::json{{"rows", rows}}.dump(2) << '\n';
    else
        std::cout << text.str();
    return all_match ? 0 : kExitVerifyFailed;
}

struct VerifyOptions {
    int n = 0;
    std::optional<int> node;
    std::optional<int> shift;
    bool deep = false;
    std::string golden_dir;
    unsigned threads = 0;
};

class FamilyVerifier {
  public:
    FamilyVerifier(const VerifyOptions& opt, std::ostream& out) : opt_(opt), out_(out) {}

    bool run() {
        std::vector<int> nodes;
        if (opt_.node)
            nodes.push_back(*opt_.node);
        else
            for (int i = 1; i <= opt_.n; ++i) nodes.push_back(i);

        bool ok = true;
        for (int i : nodes) {
            int k = opt_.shift.value_or(default_shift(opt_.n, i));
            ok = verify_family(i, k) && ok;
        }
        out_ << (ok ? "verify: all checks passed" : "verify: FAILURES detected") << '\n';
        return ok;
    }

  private:
    void report(bool ok, const std::string& what, const std::string& detail = "") {
        out_ << "  " << (ok ? "ok" : "FAIL") << ": " << what;
        if (!ok && !detail.empty()) out_ << "\n" << detail;
        out_ << '\n';
        ok_ = ok_ && ok;
    }

    bool verify_family(int i, int k) {
        const int n = opt_.n;
        out_ << "family n=" << n << " node=" << i << " shift=" << k << '\n';
        ok_ = true;
        DynkinD d(n);
        QCharacter qc = q_character(n, i, k);

        VerificationReport kernels = verify_qcharacter(qc, opt_.threads);
        for (const auto& check : kernels.checks)
            report(check.in_kernel, "screening kernel S_" + std::to_string(check.node),
                   "    residue: " + check.residue);

        LaurentMonomial dom = LaurentMonomial::y(i, k);
        LaurentMonomial antidom = LaurentMonomial::y(d.dual_node(i), 2 * n - 2 + k, -1);
        report(qc.dominant.size() == 1 && qc.dominant[0].first == dom &&
                   qc.dominant[0].second == 1,
               "unique dominant monomial " + dom.canonical_string() + " with coefficient 1");
        report(qc.antidominant.size() == 1 && qc.antidominant[0].first == antidom &&
                   qc.antidominant[0].second == 1,
               "unique anti-dominant monomial " + antidom.canonical_string() +
                   " with coefficient 1");

        Int dim = dimension(qc);
        report(dim == monomial_count_formula(n, i) && dim == d.cp_dimension(i),
               "dimension " + to_string(dim) + " agrees with both counting formulas");
        if (i <= n - 1)
            report(Int(qc.path_count) == path_count_formula(n, i),
                   "path count " + std::to_string(qc.path_count) + " matches the closed form");

        bool cone_ok = true;
        std::string cone_detail;
        for (const auto& [m, c] : qc.terms.terms()) {
            if (!factor_over_A(d, dom, m)) {
                cone_ok = false;
                cone_detail = "    unreachable term: " + m.canonical_string();
                break;
            }
        }
        report(cone_ok, "every term factors as highest * prod A^{-e}, e >= 0", cone_detail);

        {
            PathFamily fam = family(n, i == n ? n - 1 : i, k);
            std::vector<Path> direct = enumerate(fam);
            std::vector<Path> by_moves = enumerate_by_moves(fam);
            std::set<std::vector<int>> a, b;
            for (const auto& p : direct) a.insert(p.heights());
            for (const auto& p : by_moves) b.insert(p.heights());
            report(a == b, "move closure reaches the whole family (" +
                               std::to_string(direct.size()) + " paths)");
        }

        if (i >= n - 1) {
            QCharacter spin = q_character(n, n - 1, k);
            QCharacter swapped = q_character(n, n, k);
            report(swapped.terms == spin.terms.swapped_spin_nodes(n),
                   "spin-node swap symmetry between nodes " + std::to_string(n - 1) + " and " +
                       std::to_string(n));
        }

        report(q_character(n, i, k + 2).terms == qc.terms.shifted(2),
               "translation: shift k+2 equals the shift-by-2 image");

        if (!opt_.golden_dir.empty()) {
            std::filesystem::path file =
                std::filesystem::path(opt_.golden_dir) / golden_filename(n, i, k);
            if (std::filesystem::exists(file)) {
                std::vector<std::string> expected = read_lines(file);
                std::vector<std::string> actual = term_lines(qc.terms);
                std::string diff = diff_lines(expected, actual);
                report(diff.empty(), "golden file " + file.filename().string(), diff);
            }
        }

        if (opt_.deep) {
            bool sensitive = true;
            std::string detail;
            for (const auto& [m, c] : qc.terms.terms()) {
                LaurentPolynomial mutated = qc.terms;
                mutated.add(m, -c);
                bool broke = false;
                for (int j = 1; j <= n && !broke; ++j)
                    broke = !is_in_kernel(d, j, mutated);
                if (!broke) {
                    sensitive = false;
                    detail = "    deletion not detected: " + m.canonical_string();
                    break;
                }
            }
            report(sensitive, "mutation sensitivity (every single-term deletion detected)",
                   detail);
        }

        return ok_;
    }

    const VerifyOptions& opt_;
    std::ostream& out_;
    bool ok_ = true;
};

int run_verify(const VerifyOptions& opt) {
    if (opt.shift && !opt.node)
        throw std::invalid_argument("--shift requires --node");
    std::ostringstream buffer;
    FamilyVerifier verifier(opt, buffer);
    bool ok = verifier.run();
    std::cout << buffer.str();
    return ok ? 0 : kExitVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"q-characters of fundamental modules of the type-D quantum affine algebra"};
    app.require_subcommand(1);

    int n = 0, node = 0;
    std::optional<int> shift;
    std::string format = "text";
    int n_min = 4, n_max = 12;
    VerifyOptions vopt;
    vopt.threads = std::max(1u, std::thread::hardware_concurrency());

    CLI::App* qchar_cmd = app.add_subcommand("qchar", "print one fundamental q-character");
    qchar_cmd->add_option("--n", n, "rank (>= 4)")->required();
    qchar_cmd->add_option("--node", node, "Dynkin node 1..n")->required();
    qchar_cmd->add_option("--shift", shift, "spectral shift k (default: smallest valid)");
    qchar_cmd->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "json", "latex"}));

    CLI::App* paths_cmd = app.add_subcommand("paths", "list a path family with weights");
    paths_cmd->add_option("--n", n, "rank (>= 4)")->required();
    paths_cmd->add_option("--node", node, "Dynkin node 1..n-1")->required();
    paths_cmd->add_option("--shift", shift, "spectral shift k (default: smallest valid)");
    paths_cmd->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "json"}));

    CLI::App* dims_cmd = app.add_subcommand("dims", "tabulate the counting formulas");
    dims_cmd->add_option("--n-min", n_min, "smallest rank (default 4)");
    dims_cmd->add_option("--n-max", n_max, "largest rank (default 12)");
    dims_cmd->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "json"}));

    CLI::App* verify_cmd =
        app.add_subcommand("verify", "run the invariant suite against the screening oracle");
    verify_cmd->add_option("--n", vopt.n, "rank (>= 4)")->required();
    verify_cmd->add_option("--node", vopt.node, "restrict to one node");
    verify_cmd->add_option("--shift", vopt.shift, "spectral shift (needs --node)");
    verify_cmd->add_flag("--deep", vopt.deep, "add exhaustive mutation tests");
    verify_cmd->add_option("--golden", vopt.golden_dir, "directory of golden q-character files");
    verify_cmd->add_option("--threads", vopt.threads, "parallel screening jobs");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (qchar_cmd->parsed()) return run_qchar(n, node, shift, format);
        if (paths_cmd->parsed()) return run_paths(n, node, shift, format);
        if (dims_cmd->parsed()) return run_dims(n_min, n_max, format);
        return run_verify(vopt);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitVerifyFailed;
    }
}
