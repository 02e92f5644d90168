#ifndef KAZCALC_TOOLS_CLI_HPP
#define KAZCALC_TOOLS_CLI_HPP

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "kazcalc/cobordism.hpp"
#include "kazcalc/spectral.hpp"

namespace kazcalc::cli
{

enum class Format
{
    table,
    json,
};

struct QuerySpec
{
    std::string command;
    std::string family;
    std::optional<int> codim;
    std::optional<int> dim;
    std::optional<int> r;
    std::optional<std::uint64_t> m;
    std::optional<int> stratum;
    std::vector<int> multi_index;
    int truncation = default_truncation;
    Format format = Format::table;
    std::string target;
    std::string custom_file;
    std::string page = "inf";
    bool closed = false;
    bool framed = false;
    bool annotate_rewritten = false;
    int max_j = 4;
};

struct RunResult
{
    int status = 0;
    std::string output;
};

// Exit codes.
inline constexpr int exit_ok = 0;
inline constexpr int exit_failure = 1;
inline constexpr int exit_usage = 2;

// Executes one query. Usage errors are not caught here.
RunResult run(const QuerySpec &query);

// Parses argv, runs, writes to out/err and returns the process exit status.
int main_entry(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

// inputs.cpp
TargetProfile parse_target(const std::string &text);
FormalBundle parse_bundle(const std::string &text);
SingularityFamily parse_custom_family(std::istream &in, int k, int truncation = default_truncation);
SingularityFamily load_custom_family(const std::string &path, int k, int truncation = default_truncation);

// render.cpp
nlohmann::ordered_json to_json(const Integer &x);
nlohmann::ordered_json series_json(const TruncatedSeries &s);
std::string render_page(const Page &page, Format format, const nlohmann::ordered_json &header,
                        bool annotate_rewritten = false);
std::string render_table(const std::vector<std::pair<std::string, std::string>> &rows);

} // namespace kazcalc::cli

#endif
