#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <map>
#include <sstream>

#include "kazcalc/cli.hpp"
#include "kazcalc/error.hpp"

namespace kazcalc::cli
{

namespace
{

std::string trim(std::string_view s)
{
    auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string_view::npos)
        return {};
    auto e = s.find_last_not_of(" \t\r\n");
    return std::string(s.substr(b, e - b + 1));
}

int parse_int(const std::string &s, const std::string &what)
{
    int value = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc() || p != s.data() + s.size())
        throw UsageError("bad " + what + ": '" + s + "'");
    return value;
}

std::string strip_comment(const std::string &line)
{
    return trim(line.substr(0, line.find('#')));
}

std::vector<Integer> parse_betti_list(const std::string &text)
{
    std::string cleaned;
    for (char ch : text) {
        if (ch == '[' || ch == ']' || ch == ',')
            cleaned += ' ';
        else
            cleaned += ch;
    }
    std::istringstream in(cleaned);
    std::vector<Integer> betti;
    std::string tok;
    while (in >> tok) {
        if (!std::all_of(tok.begin(), tok.end(), [](unsigned char c) { return std::isdigit(c); }))
            throw UsageError("bad Betti number '" + tok + "' in target profile");
        betti.emplace_back(tok);
    }
    if (betti.empty())
        throw UsageError("empty target profile");
    return betti;
}

} // namespace

TargetProfile parse_target(const std::string &text)
{
    const bool inline_list = std::all_of(text.begin(), text.end(), [](unsigned char c) {
        return std::isdigit(c) || std::isspace(c) || c == ',' || c == '[' || c == ']';
    });
    if (inline_list)
        return TargetProfile(parse_betti_list(text));

    std::ifstream in(text);
    if (!in)
        throw UsageError("cannot open target file '" + text + "'");
    std::string all, line;
    while (std::getline(in, line))
        all += strip_comment(line) + ' ';
    return TargetProfile(parse_betti_list(all));
}

// Inverse of to_string(FormalBundle): "eps^2 + 2*gammaSO_3 + 1*nonorientable", or "0".
FormalBundle parse_bundle(const std::string &text)
{
    FormalBundle b;
    std::string rest = text;
    std::size_t pos = 0;
    while (pos <= rest.size()) {
        std::size_t next = rest.find('+', pos);
        if (next == std::string::npos)
            next = rest.size();
        std::string term = trim(std::string_view(rest).substr(pos, next - pos));
        pos = next + 1;
        if (term.empty())
            throw UsageError("empty term in bundle '" + text + "'");
        if (term == "0")
            continue;
        int mult = 1;
        if (auto star = term.find('*'); star != std::string::npos) {
            mult = parse_int(trim(term.substr(0, star)), "bundle multiplicity");
            term = trim(term.substr(star + 1));
        }
        if (mult < 0)
            throw UsageError("negative multiplicity in bundle '" + text + "'");
        if (term.rfind("eps^", 0) == 0) {
            b.trivial += mult * parse_int(term.substr(4), "trivial rank");
        } else if (term == "eps") {
            b.trivial += mult;
        } else if (term.rfind("gammaSO_", 0) == 0) {
            const int d = parse_int(term.substr(8), "oriented rank");
            if (d < 1)
                throw UsageError("oriented rank must be positive in bundle '" + text + "'");
            b.oriented[d] += mult;
        } else if (term == "nonorientable") {
            b.non_orientable += mult;
        } else {
            throw UsageError("unknown bundle term '" + term + "'");
        }
    }
    return b;
}

// Line format, '#' starts a comment:
//   stratum <index> <source_codim> <degrees,comma,separated | -> <extra_shift> <zero 0|1>
//   bundle <index> source|target <descriptor>
SingularityFamily parse_custom_family(std::istream &in, int k, int truncation)
{
    std::map<int, StratumSpec> strata;
    std::vector<int> order;
    std::string raw;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        const std::string line = strip_comment(raw);
        if (line.empty())
            continue;
        const std::string where = "line " + std::to_string(lineno) + ": ";
        std::istringstream ls(line);
        std::string keyword;
        ls >> keyword;
        if (keyword == "stratum") {
            std::string idx, codim, degrees, shift, zero, extra;
            if (!(ls >> idx >> codim >> degrees >> shift >> zero) || (ls >> extra))
                throw UsageError(where + "expected 'stratum <index> <codim> <degrees|-> <shift> <zero>'");
            StratumSpec s;
            s.index = parse_int(idx, "stratum index");
            s.source_codim = parse_int(codim, "source codimension");
            if (degrees != "-") {
                std::vector<int> gens;
                std::istringstream ds(degrees);
                std::string d;
                while (std::getline(ds, d, ','))
                    gens.push_back(parse_int(d, "generator degree"));
                s.column_base = GradedRingSpec::polynomial(gens);
            }
            s.extra_shift = parse_int(shift, "extra shift");
            if (zero != "0" && zero != "1")
                throw UsageError(where + "zero flag must be 0 or 1");
            s.zero_column = zero == "1";
            if (strata.count(s.index))
                throw UsageError(where + "duplicate stratum " + idx);
            order.push_back(s.index);
            strata.emplace(s.index, std::move(s));
        } else if (keyword == "bundle") {
            std::string idx, side;
            if (!(ls >> idx >> side))
                throw UsageError(where + "expected 'bundle <index> source|target <descriptor>'");
            std::string desc;
            std::getline(ls, desc);
            auto it = strata.find(parse_int(idx, "stratum index"));
            if (it == strata.end())
                throw UsageError(where + "bundle for undeclared stratum " + idx);
            if (side == "source")
                it->second.source_bundle = parse_bundle(trim(desc));
            else if (side == "target")
                it->second.target_bundle = parse_bundle(trim(desc));
            else
                throw UsageError(where + "bundle side must be 'source' or 'target'");
        } else {
            throw UsageError(where + "unknown keyword '" + keyword + "'");
        }
    }
    std::vector<StratumSpec> list;
    for (int idx : order)
        list.push_back(strata.at(idx));
    SingularityFamily family = SingularityFamily::custom(k, std::move(list));
    validate_block_degenerate(family, truncation);
    return family;
}

SingularityFamily load_custom_family(const std::string &path, int k, int truncation)
{
    std::ifstream in(path);
    if (!in)
        throw UsageError("cannot open custom family file '" + path + "'");
    return parse_custom_family(in, k, truncation);
}

} // namespace kazcalc::cli
