#include <algorithm>
#include <cstdint>
#include <sstream>

#include "kazcalc/cli.hpp"

namespace kazcalc::cli
{

using nlohmann::ordered_json;

// Small enough ranks go out as JSON numbers, anything wider as a decimal string.
ordered_json to_json(const Integer &x)
{
    if (x >= std::numeric_limits<std::int64_t>::min() && x <= std::numeric_limits<std::int64_t>::max())
        return static_cast<std::int64_t>(x);
    return x.str();
}

ordered_json series_json(const TruncatedSeries &s)
{
    ordered_json arr = ordered_json::array();
    for (const Integer &c : s.coefficients())
        arr.push_back(to_json(c));
    return arr;
}

std::string render_table(const std::vector<std::pair<std::string, std::string>> &rows)
{
    std::size_t width = 0;
    for (const auto &row : rows)
        width = std::max(width, row.first.size());
    std::ostringstream os;
    for (const auto &[key, value] : rows)
        os << key << std::string(width - key.size() + 2, ' ') << value << '\n';
    return os.str();
}

namespace
{

std::string pad_left(const std::string &s, std::size_t width)
{
    return s.size() >= width ? s : std::string(width - s.size(), ' ') + s;
}

} // namespace

std::string render_page(const Page &page, Format format, const ordered_json &header, bool annotate_rewritten)
{
    const auto &columns = page.columns();
    const int n = page.truncation();
    if (format == Format::json) {
        ordered_json doc = header;
        doc["page"] = page.kind() == PageKind::e1 ? "E1" : "Einf";
        ordered_json cols = ordered_json::array();
        for (const Column &c : columns) {
            ordered_json col;
            col["index"] = c.index;
            col["codim"] = c.source_codim;
            col["coeffs"] = series_json(c.total());
            if (annotate_rewritten)
                col["rewritten_offset"] = c.source_codim;
            cols.push_back(std::move(col));
        }
        doc["columns"] = std::move(cols);
        return doc.dump(2) + '\n';
    }

    std::ostringstream os;
    os << (page.kind() == PageKind::e1 ? "E1" : "Einf") << " page, truncation " << n << '\n';
    if (columns.empty()) {
        os << "(no columns)\n";
        return os.str();
    }

    std::vector<std::string> heads;
    std::size_t width = 3;
    for (const Column &c : columns) {
        heads.push_back("r=" + std::to_string(c.index));
        width = std::max(width, heads.back().size());
        const TruncatedSeries total = c.total();
        for (const Integer &x : total.coefficients())
            width = std::max(width, x.str().size());
    }

    os << pad_left("deg", 4);
    for (const auto &h : heads)
        os << ' ' << pad_left(h, width);
    os << '\n';
    os << pad_left("c_i", 4);
    for (const Column &c : columns)
        os << ' ' << pad_left(std::to_string(c.source_codim), width);
    os << '\n';
    for (int d = 0; d <= n; ++d) {
        os << pad_left(std::to_string(d), 4);
        for (const Column &c : columns)
            os << ' ' << pad_left(c.total().coefficient(d).str(), width);
        os << '\n';
    }

    if (annotate_rewritten) {
        // Same ranks, indexed by q = deg - c_i within each column.
        os << "rewritten (q = deg - c_i)\n";
        for (const Column &c : columns) {
            os << "r=" << c.index << ':';
            for (int q = 0; q + c.source_codim <= n; ++q)
                os << ' ' << c.total().coefficient(q + c.source_codim).str();
            os << '\n';
        }
    }
    return os.str();
}

} // namespace kazcalc::cli
