#include "kazcalc/cli.hpp"

#include <cstdlib>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "kazcalc/bordism.hpp"
#include "kazcalc/consistency.hpp"
#include "kazcalc/error.hpp"
#include "kazcalc/thom.hpp"

namespace kazcalc::cli
{

using nlohmann::ordered_json;

namespace
{

int require(const std::optional<int> &v, const std::string &flag, const std::string &command)
{
    if (!v)
        throw UsageError(command + " needs " + flag);
    return *v;
}

int require_codim(const QuerySpec &q)
{
    const int k = require(q.codim, "--codim", q.command);
    if (k < 1)
        throw UsageError("--codim must be at least 1");
    return k;
}

SingularityFamily make_family(const QuerySpec &q)
{
    if (q.family.empty())
        throw UsageError(q.command + " needs --family");
    const int k = require_codim(q);
    if (q.family == "prim")
        return SingularityFamily::prim(k);
    if (q.family == "morin")
        return SingularityFamily::morin(k);
    if (q.family == "sigma1r")
        return SingularityFamily::sigma1r(k, require(q.r, "--r", q.command + " --family sigma1r"));
    if (q.family == "custom") {
        if (q.custom_file.empty())
            throw UsageError("--family custom needs --custom FILE");
        return load_custom_family(q.custom_file, k, q.truncation);
    }
    throw UsageError("unknown family '" + q.family + "' (expected prim, morin, sigma1r or custom)");
}

// Stratum to cut at: --r if given, else the top stratum of a truncated family.
int cut_index(const QuerySpec &q, const SingularityFamily &family)
{
    if (q.r)
        return *q.r;
    if (auto top = family.top_index())
        return *top;
    throw UsageError(q.command + " on " + family.name() + " needs --r");
}

ordered_json header(const QuerySpec &q)
{
    ordered_json h;
    h["schema"] = 1;
    h["command"] = q.command;
    ordered_json in = ordered_json::object();
    if (!q.family.empty())
        in["family"] = q.family;
    if (q.codim)
        in["codim"] = *q.codim;
    if (q.dim)
        in["dim"] = *q.dim;
    if (q.r)
        in["r"] = *q.r;
    if (q.m)
        in["m"] = *q.m;
    if (q.stratum)
        in["stratum"] = *q.stratum;
    if (!q.multi_index.empty())
        in["multi_index"] = q.multi_index;
    if (!q.target.empty())
        in["target"] = q.target;
    if (!q.custom_file.empty())
        in["custom"] = q.custom_file;
    if (q.closed)
        in["closed"] = true;
    if (q.framed)
        in["framed"] = true;
    if (q.command == "page")
        in["page"] = q.page;
    if (q.command == "tower" && !q.target.empty())
        in["max_j"] = q.max_j;
    h["inputs"] = std::move(in);
    h["truncation"] = q.truncation;
    return h;
}

using Rows = std::vector<std::pair<std::string, std::string>>;

std::string emit(const QuerySpec &q, ordered_json doc, const Rows &rows)
{
    if (q.format == Format::json)
        return doc.dump(2) + '\n';
    return render_table(rows);
}

std::string join(const std::vector<std::string> &parts, const std::string &sep)
{
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i)
        out += (i ? sep : "") + parts[i];
    return out;
}

std::string join_ints(const std::vector<int> &xs)
{
    std::vector<std::string> parts;
    for (int x : xs)
        parts.push_back(std::to_string(x));
    return join(parts, ",");
}

std::string profile_string(const TargetProfile &t)
{
    std::vector<std::string> parts;
    for (const Integer &b : t.betti())
        parts.push_back(b.str());
    return "[" + join(parts, ",") + "]";
}

std::string run_rank(const QuerySpec &q)
{
    const SingularityFamily family = make_family(q);
    const int k = family.codim();
    ordered_json doc = header(q);
    Rows rows{{"family", family.name()}};
    Integer rank;
    if (!q.target.empty()) {
        const TargetProfile target = parse_target(q.target);
        if (q.dim && target.dim() != *q.dim + k)
            throw UsageError("target dimension " + std::to_string(target.dim()) + " differs from dim + codim = "
                             + std::to_string(*q.dim + k));
        rank = cob_rank_over_target(family, target, q.truncation);
        rows.emplace_back("target", profile_string(target));
    } else {
        const int n = require(q.dim, "--dim or --target", "rank");
        rank = q.closed ? cob_rank_closed(family, n, q.truncation) : cob_rank(family, n, q.truncation);
        rows.emplace_back("dim", std::to_string(n));
    }
    rows.emplace_back("rank", rank.str());
    doc["rank"] = to_json(rank);
    return emit(q, std::move(doc), rows);
}

std::string run_series(const QuerySpec &q)
{
    const SingularityFamily family = make_family(q);
    const TruncatedSeries s =
        q.closed ? closed_form_series(family, q.truncation) : kazarian_homology_series(family, q.truncation);
    ordered_json doc = header(q);
    doc["coeffs"] = series_json(s);
    return emit(q, std::move(doc), {{"family", family.name()}, {"series", to_string(s)}});
}

std::string run_page(const QuerySpec &q)
{
    const SingularityFamily family = make_family(q);
    Page page = build_e1(family, q.truncation);
    if (q.page == "inf")
        page = apply_d1(page, family);
    std::string out = render_page(page, q.format, header(q), q.annotate_rewritten);
    if (q.format == Format::table)
        out = "family  " + family.name() + '\n' + out;
    return out;
}

SingularityFamily::Kind thom_kind(const QuerySpec &q)
{
    if (q.family == "prim")
        return SingularityFamily::Kind::prim;
    if (q.family == "morin")
        return SingularityFamily::Kind::morin;
    throw UsageError("thom needs --family prim or morin");
}

std::string run_thom(const QuerySpec &q)
{
    const auto kind = thom_kind(q);
    const int k = require_codim(q);
    const int i = require(q.stratum, "--stratum", "thom");
    const ThomResult res = q.multi_index.empty() ? thom_polynomial(kind, k, i)
                                                 : higher_thom_polynomial(kind, k, i, q.multi_index);
    ordered_json doc = header(q);
    doc["polynomial"] = to_string(res.polynomial);
    doc["degree"] = res.polynomial.degree();
    doc["notes"] = res.notes;
    Rows rows{{"family", to_string(kind) + " k=" + std::to_string(k)},
              {"stratum", std::to_string(i)},
              {"polynomial", to_string(res.polynomial)},
              {"degree", std::to_string(res.polynomial.degree())}};
    for (const auto &note : res.notes)
        rows.emplace_back("note", note);
    return emit(q, std::move(doc), rows);
}

std::string run_tower(const QuerySpec &q)
{
    const SingularityFamily family = make_family(q);
    const int r = cut_index(q, family);
    const TowerDescription tower = postnikov_tower(family, r);
    ordered_json doc = header(q);
    ordered_json stages = ordered_json::array();
    Rows rows{{"family", family.name()}, {"cut", std::to_string(r)}};
    for (std::size_t s = 0; s < tower.stages.size(); ++s) {
        const TowerStage &st = tower.stages[s];
        stages.push_back({{"strata", st.strata}, {"bottom_degrees", st.bottom_degrees}});
        rows.emplace_back("stage " + std::to_string(s),
                          "strata " + join_ints(st.strata) + "; bottom degrees " + join_ints(st.bottom_degrees));
    }
    doc["stages"] = std::move(stages);
    if (!q.target.empty()) {
        const TargetProfile target = parse_target(q.target);
        ordered_json e1 = ordered_json::array();
        for (const TowerE1Entry &e : tower_e1_table(family, r, target, q.max_j)) {
            e1.push_back({{"stratum", e.stratum}, {"j", e.j}, {"rank", to_json(e.rank)}});
            rows.emplace_back("E1[" + std::to_string(e.stratum) + "," + std::to_string(e.j) + "]", e.rank.str());
        }
        doc["e1"] = std::move(e1);
    }
    return emit(q, std::move(doc), rows);
}

std::string run_bordism(const QuerySpec &q)
{
    const SingularityFamily family = make_family(q);
    const int n = require(q.dim, "--dim", "bordism");
    if (n < 0)
        throw UsageError("--dim must be non-negative");
    const Integer rank =
        q.framed ? framed_bordism_rank(family, n, q.truncation) : bordism_rank(family, n, q.truncation);
    ordered_json doc = header(q);
    doc["rank"] = to_json(rank);
    Rows rows{{"family", family.name()}, {"dim", std::to_string(n)}, {q.framed ? "framed rank" : "rank", rank.str()}};
    // Below n = 2 every prime is safe.
    if (n >= 2) {
        const std::uint64_t p = safe_prime_bound(static_cast<std::uint64_t>(n));
        doc["safe_prime"] = p;
        rows.emplace_back("safe prime", std::to_string(p));
    }
    return emit(q, std::move(doc), rows);
}

std::string run_fold_torsion(const QuerySpec &q)
{
    if (!q.m)
        throw UsageError("fold-torsion needs --m");
    if (*q.m < 1)
        throw UsageError("--m must be positive");
    const FoldTorsionReport rep = fold_torsion(*q.m);
    ordered_json doc = header(q);
    doc["t"] = rep.t;
    doc["rank_part"] = to_json(rep.rank_part);
    doc["torsion"] = rep.torsion_descriptor;
    return emit(q, std::move(doc),
                {{"m", std::to_string(rep.m)},
                 {"t", std::to_string(rep.t)},
                 {"rank_part", rep.rank_part.str()},
                 {"torsion", rep.torsion_descriptor}});
}

std::string run_split_check(const QuerySpec &q)
{
    const SingularityFamily family = make_family(q);
    const int r = cut_index(q, family);
    const SplittingReport rep = splitting_verdict(family, r, q.truncation);
    ordered_json doc = header(q);
    doc["verdict"] = to_string(rep.verdict);
    doc["source_bundle"] = to_string(rep.source_bundle);
    doc["target_bundle"] = to_string(rep.target_bundle);
    doc["source_euler"] = to_string(rep.source_euler);
    doc["target_euler"] = to_string(rep.target_euler);
    doc["last_column"] = series_json(rep.last_column);
    return emit(q, std::move(doc),
                {{"family", family.name()},
                 {"stratum", std::to_string(r)},
                 {"verdict", to_string(rep.verdict)},
                 {"source bundle", to_string(rep.source_bundle)},
                 {"source euler", to_string(rep.source_euler)},
                 {"target bundle", to_string(rep.target_bundle)},
                 {"target euler", to_string(rep.target_euler)},
                 {"last column", to_string(rep.last_column)}});
}

std::string run_obstruction(const QuerySpec &q)
{
    const SingularityFamily family = make_family(q);
    const int r = cut_index(q, family);
    TargetProfile target;
    if (!q.target.empty()) {
        target = parse_target(q.target);
    } else {
        const int n = require(q.dim, "--dim or --target", "obstruction");
        if (n < 0)
            throw UsageError("--dim must be non-negative");
        target = TargetProfile::euclidean(n + family.codim());
    }
    const Integer rank = elimination_obstruction_rank(family, r, target);
    ordered_json doc = header(q);
    doc["rank"] = to_json(rank);
    return emit(q, std::move(doc),
                {{"family", family.name()},
                 {"stratum", std::to_string(r)},
                 {"target", profile_string(target)},
                 {"rank", rank.str()}});
}

RunResult run_consistency(const QuerySpec &q)
{
    const auto outcomes = run_consistency_suite(q.truncation);
    bool all = true;
    ordered_json doc = header(q);
    ordered_json checks = ordered_json::array();
    std::ostringstream os;
    for (const CheckOutcome &c : outcomes) {
        all = all && c.passed;
        checks.push_back({{"id", c.id}, {"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
        os << (c.passed ? "PASS " : "FAIL ") << c.id << "  " << c.name << "  (" << c.detail << ")\n";
    }
    doc["checks"] = std::move(checks);
    doc["passed"] = all;
    return {all ? exit_ok : exit_failure, q.format == Format::json ? doc.dump(2) + '\n' : os.str()};
}

} // namespace

RunResult run(const QuerySpec &q)
{
    if (q.truncation < 1)
        throw UsageError("truncation must be at least 1");
    if (q.command == "rank")
        return {exit_ok, run_rank(q)};
    if (q.command == "series")
        return {exit_ok, run_series(q)};
    if (q.command == "page")
        return {exit_ok, run_page(q)};
    if (q.command == "thom")
        return {exit_ok, run_thom(q)};
    if (q.command == "tower")
        return {exit_ok, run_tower(q)};
    if (q.command == "bordism")
        return {exit_ok, run_bordism(q)};
    if (q.command == "fold-torsion")
        return {exit_ok, run_fold_torsion(q)};
    if (q.command == "split-check")
        return {exit_ok, run_split_check(q)};
    if (q.command == "obstruction")
        return {exit_ok, run_obstruction(q)};
    if (q.command == "consistency")
        return run_consistency(q);
    throw UsageError("unknown command '" + q.command + "'");
}

int main_entry(int argc, const char *const *argv, std::ostream &out, std::ostream &err)
{
    QuerySpec q;
    if (const char *env = std::getenv("KAZCALC_TRUNCATION"); env && *env) {
        try {
            q.truncation = std::stoi(env);
        } catch (const std::exception &) {
            err << "error: KAZCALC_TRUNCATION is not an integer: '" << env << "'\n";
            return exit_usage;
        }
    }

    CLI::App app{"Rational cobordism ranks of singular maps via Kazarian spectral sequences", "kazcalc"};
    app.require_subcommand(1);
    std::string format = "table";

    auto common = [&](CLI::App *sub) {
        sub->add_option("--truncation", q.truncation, "Series truncation N (default 60, or $KAZCALC_TRUNCATION)");
        sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"table", "json"}));
    };
    auto family_opts = [&](CLI::App *sub) {
        sub->add_option("--family", q.family, "prim | morin | sigma1r | custom");
        sub->add_option("--codim", q.codim, "Codimension k");
        sub->add_option("--r", q.r, "Top stratum for sigma1r, or the stratum to cut at");
        sub->add_option("--custom", q.custom_file, "Custom family description file");
    };

    auto *rank = app.add_subcommand("rank", "rk Cob(n, k) (x) Q, or over a target profile");
    family_opts(rank);
    rank->add_option("--dim", q.dim, "Source dimension n");
    rank->add_option("--target", q.target, "Betti profile of the target: inline list or file");
    rank->add_flag("--closed", q.closed, "Use the closed form instead of the spectral sequence");

    auto *series = app.add_subcommand("series", "Poincare series of the Kazarian space");
    family_opts(series);
    series->add_flag("--closed", q.closed, "Use the closed form instead of the spectral sequence");

    auto *page = app.add_subcommand("page", "E1 or E-infinity page as a rank table");
    family_opts(page);
    page->add_option("--page", q.page, "1 or inf")->check(CLI::IsMember({"1", "inf"}));
    page->add_flag("--annotate-rewritten", q.annotate_rewritten, "Also list ranks indexed by deg - c_i");

    auto *thom = app.add_subcommand("thom", "Thom polynomial of a stratum");
    thom->add_option("--family", q.family, "prim | morin");
    thom->add_option("--codim", q.codim, "Codimension k");
    thom->add_option("--stratum", q.stratum, "Stratum index i");
    thom->add_option("--multi-index", q.multi_index, "Comma-separated multi-index for higher Thom polynomials")
        ->delimiter(',');

    auto *tower = app.add_subcommand("tower", "Parity-block tower and its E1 table");
    family_opts(tower);
    tower->add_option("--target", q.target, "Betti profile of the target: inline list or file");
    tower->add_option("--max-j", q.max_j, "Largest j in the E1 table");

    auto *bordism = app.add_subcommand("bordism", "Left-right bordism rank");
    family_opts(bordism);
    bordism->add_option("--dim", q.dim, "Dimension n");
    bordism->add_flag("--framed", q.framed, "rk Omega_n(K) (x) Q instead");

    auto *fold = app.add_subcommand("fold-torsion", "3-primary torsion parameter t(m) of fold cobordism");
    fold->add_option("--m", q.m, "m >= 1");

    auto *split = app.add_subcommand("split-check", "Euler-class splitting criterion for the top stratum");
    family_opts(split);

    auto *obstruction = app.add_subcommand("obstruction", "Rank of the elimination obstruction group");
    family_opts(obstruction);
    obstruction->add_option("--dim", q.dim, "Source dimension n (Euclidean target of dimension n + k)");
    obstruction->add_option("--target", q.target, "Betti profile of the target: inline list or file");

    auto *consistency = app.add_subcommand("consistency", "Run the cross-oracle consistency suite");

    for (auto *sub : {rank, series, page, thom, tower, bordism, fold, split, obstruction, consistency})
        common(sub);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::ParseError &e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return exit_ok;
        }
        for (const CLI::App *sub : app.get_subcommands())
            if (sub->get_help_ptr() && sub->get_help_ptr()->count() > 0) {
                out << sub->help();
                return exit_ok;
            }
        err << "error: " << e.what() << '\n';
        return exit_usage;
    }

    q.command = app.get_subcommands().front()->get_name();
    q.format = format == "json" ? Format::json : Format::table;

    try {
        RunResult res = run(q);
        out << res.output;
        return res.status;
    } catch (const UsageError &e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::exception &e) {
        err << "internal error: " << e.what() << '\n';
        return exit_failure;
    }
}

} // namespace kazcalc::cli
