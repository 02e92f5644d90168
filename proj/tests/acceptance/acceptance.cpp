// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any failure.
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "kazcalc/cli.hpp"
#include "kazcalc/consistency.hpp"

using namespace kazcalc;

namespace
{

struct Golden
{
    std::string name;
    std::vector<std::string> args;
};

std::vector<Golden> read_invocations(const std::filesystem::path &file)
{
    std::ifstream in(file);
    std::vector<Golden> out;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#')
            continue;
        const auto bar = line.find(" | ");
        Golden g{line.substr(0, bar), {}};
        std::istringstream args(line.substr(bar + 3));
        std::string a;
        while (args >> a)
            g.args.push_back(a);
        out.push_back(std::move(g));
    }
    return out;
}

std::pair<int, std::string> run_cli(const std::vector<std::string> &args)
{
    std::vector<const char *> argv{"kazcalc"};
    for (const auto &a : args)
        argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int status = cli::main_entry(static_cast<int>(argv.size()), argv.data(), out, err);
    return {status, out.str()};
}

std::string slurp(const std::filesystem::path &p)
{
    std::ifstream in(p, std::ios::binary);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

CheckOutcome check_cli_determinism(const std::filesystem::path &golden_dir)
{
    CheckOutcome out{11, "CLI goldens byte-identical across runs; consistency exits 0", true, {}};
    const auto start = std::chrono::steady_clock::now();
    const auto invocations = read_invocations(golden_dir / "invocations.txt");
    int checked = 0;
    for (const auto &g : invocations) {
        const auto first = run_cli(g.args);
        const auto second = run_cli(g.args);
        const std::string want = slurp(golden_dir / (g.name + ".out"));
        if (first.first != 0 || first != second || first.second != want) {
            out.passed = false;
            out.detail += g.name + " differs; ";
        }
        ++checked;
    }
    if (checked != 10) {
        out.passed = false;
        out.detail += "expected 10 invocations, found " + std::to_string(checked) + "; ";
    }
    const auto consistency = run_cli({"consistency"});
    if (consistency.first != 0) {
        out.passed = false;
        out.detail += "consistency exited " + std::to_string(consistency.first);
    }
    if (out.passed)
        out.detail = std::to_string(checked) + " goldens, consistency exit 0";
    out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return out;
}

} // namespace

int main(int argc, char **argv)
{
    if (argc != 2) {
        std::cerr << "usage: kazcalc_acceptance <golden-dir>\n";
        return 2;
    }
    const std::filesystem::path golden_dir = std::filesystem::absolute(argv[1]);
    ::unsetenv("KAZCALC_TRUNCATION");
    // Goldens refer to companion files by relative path.
    std::filesystem::current_path(golden_dir);

    const auto start = std::chrono::steady_clock::now();
    std::vector<CheckOutcome> outcomes = run_consistency_suite();
    for (auto &o : outcomes)
        if (o.id == 8 && o.seconds >= 1.0) {
            o.passed = false;
            o.detail += "; took " + std::to_string(o.seconds) + " s";
        }
    outcomes.push_back(check_cli_determinism(golden_dir));
    const double total = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

    int failures = 0;
    for (const auto &o : outcomes) {
        failures += o.passed ? 0 : 1;
        std::printf("%s  criterion %2d  %-70s  %s  [%.3f s]\n", o.passed ? "PASS" : "FAIL", o.id, o.name.c_str(),
                    o.detail.c_str(), o.seconds);
    }
    std::printf("%d/%zu criteria passed in %.3f s\n", static_cast<int>(outcomes.size()) - failures, outcomes.size(),
                total);
    return failures == 0 ? 0 : 1;
}
