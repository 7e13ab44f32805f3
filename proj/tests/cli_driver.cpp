// Exercises the installed CLI end to end: golden comparison, JSON schema,
// exit codes, and byte determinism.  argv[1] = CLI binary, argv[2] =
// fixtures directory.

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <nlohmann/json.hpp>

#include "dqchar/io.hpp"
#include "dqchar/qchar.hpp"

namespace fs = std::filesystem;

namespace {

int g_failures = 0;

#define EXPECT(cond, msg)                                              \
    do {                                                               \
        if (!(cond)) {                                                 \
            std::cerr << "[FAIL] " << __LINE__ << ": " << msg << "\n"; \
            ++g_failures;                                              \
        }                                                              \
    } while (0)

struct RunResult {
    int exit_code = -1;
    std::string out;
    std::string err;
};

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

RunResult run(const std::string& binary, const std::string& args) {
    fs::path tmp = fs::temp_directory_path();
    fs::path out_file = tmp / "dqchar_cli_out.txt";
    fs::path err_file = tmp / "dqchar_cli_err.txt";
    std::string cmd = binary + " " + args + " > " + out_file.string() + " 2> " +
                      err_file.string();
    int status = std::system(cmd.c_str());
    RunResult r;
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    r.out = slurp(out_file);
    r.err = slurp(err_file);
    return r;
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 3) {
        std::cerr << "usage: cli_driver <dqchar-binary> <fixtures-dir>\n";
        return 2;
    }
    const std::string binary = argv[1];
    const fs::path fixtures = argv[2];

    {
        RunResult r = run(binary, "qchar --n 4 --node 3 --shift 0 --format text");
        EXPECT(r.exit_code == 0, "qchar text exit code");
        EXPECT(r.out == slurp(fixtures / "qchar_n4_node3_shift0.txt"),
               "node-3 text output equals the golden file");

        RunResult again = run(binary, "qchar --n 4 --node 3 --shift 0 --format text");
        EXPECT(again.out == r.out, "byte-identical output on identical input");
    }

    {
        RunResult r = run(binary, "qchar --n 4 --node 2 --shift 1 --format json");
        EXPECT(r.exit_code == 0, "qchar json exit code");
        nlohmann::json j = nlohmann::json::parse(r.out);
        EXPECT(j["dimension"] == "29", "dimension field");
        bool coeff2 = false;
        for (const auto& term : j["terms"])
            if (term["coeff"] == 2) {
                coeff2 = true;
                EXPECT(term["factors"][0]["node"] == 2 && term["factors"][0]["shift"] == 3 &&
                           term["factors"][0]["power"] == 1,
                       "coefficient-2 term first factor");
                EXPECT(term["factors"][1]["node"] == 2 && term["factors"][1]["shift"] == 5 &&
                           term["factors"][1]["power"] == -1,
                       "coefficient-2 term second factor");
            }
        EXPECT(coeff2, "coefficient-2 term present in JSON");

        dqchar::QCharacter back = dqchar::from_json(j);
        dqchar::QCharacter direct = dqchar::q_character(4, 2, 1);
        EXPECT(back.terms == direct.terms, "JSON round-trips through from_json");
    }

    {
        RunResult r = run(binary, "qchar --n 4 --node 2 --shift 0");
        EXPECT(r.exit_code == 2, "parity violation exits 2");
        EXPECT(r.err.find("parity") != std::string::npos, "diagnostic names the parity rule");
    }

    {
        RunResult r = run(binary, "qchar --n 4 --node 1 --format latex");
        EXPECT(r.exit_code == 0, "latex exit code");
        EXPECT(r.out.find("Y^{-1}_{1,2}Y_{2,1}") != std::string::npos,
               "latex exponent placement");
    }

    {
        RunResult r = run(binary, "paths --n 4 --node 2 --shift 1");
        EXPECT(r.exit_code == 0, "paths exit code");
        EXPECT(r.out.find("# paths: 22  terms: 29") != std::string::npos,
               "path family size and term total");

        RunResult spin = run(binary, "paths --n 4 --node 3 --shift 0");
        EXPECT(spin.out.find("# paths: 8  terms: 8") != std::string::npos,
               "spin family size and term total");

        RunResult big = run(binary, "paths --n 10 --node 9 --shift 0 --format json");
        nlohmann::json j = nlohmann::json::parse(big.out);
        EXPECT(j["path_count"] == 512, "spin family size at n=10");
        EXPECT(j["term_count"] == "512", "spin family term total at n=10");
    }

    {
        RunResult r = run(binary, "dims --n-min 4 --n-max 6");
        EXPECT(r.exit_code == 0, "dims exit code");
        EXPECT(r.out.find("MISMATCH") == std::string::npos, "no dims mismatches");
        EXPECT(r.out.find("match") != std::string::npos, "dims rows flagged");
    }

    {
        RunResult r =
            run(binary, "verify --n 4 --deep --golden " + fixtures.string());
        EXPECT(r.exit_code == 0, "verify --n 4 --deep --golden passes");
        EXPECT(r.out.find("FAIL") == std::string::npos, "no failing verify lines");
    }

    {
        // corrupt one golden line and watch verify catch it with a diff
        fs::path tmp = fs::temp_directory_path() / "dqchar_corrupt_golden";
        fs::create_directories(tmp);
        for (const auto& entry : fs::directory_iterator(fixtures))
            fs::copy_file(entry.path(), tmp / entry.path().filename(),
                          fs::copy_options::overwrite_existing);
        {
            std::ofstream out(tmp / "qchar_n4_node1_shift0.txt", std::ios::app);
            out << "Y[9,9]\n";
        }
        RunResult r = run(binary, "verify --n 4 --golden " + tmp.string());
        EXPECT(r.exit_code == 1, "corrupted golden exits 1");
        EXPECT(r.out.find("-Y[9,9]") != std::string::npos, "diff marks the missing line");
    }

    {
        RunResult r = run(binary, "qchar --n 4");
        EXPECT(r.exit_code == 2, "missing required option exits 2");
        RunResult help = run(binary, "--help");
        EXPECT(help.exit_code == 0, "--help exits 0");
    }

    if (g_failures > 0) {
        std::cerr << g_failures << " CLI check(s) failed\n";
        return 1;
    }
    std::cout << "all CLI checks passed\n";
    return 0;
}
