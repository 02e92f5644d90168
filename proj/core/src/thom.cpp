#include "kazcalc/thom.hpp"

#include <sstream>

#include "kazcalc/error.hpp"

namespace kazcalc
{

namespace
{

void require_table_family(SingularityFamily::Kind family)
{
    if (family != SingularityFamily::Kind::prim && family != SingularityFamily::Kind::morin)
        throw UsageError("Thom polynomial tables exist only for prim and Morin maps");
}

void require_args(int k, int i)
{
    if (k < 1)
        throw UsageError("codimension must be at least 1");
    if (i < 1)
        throw UsageError("the regular stratum (i = 0) has no Thom polynomial");
}

const char *rational_note = "exact over Q; integrally only modulo 2-primary torsion";
const char *normalized_note = "proportionality constant normalized to 1";
const char *null_homologous_note = "all singularity strata and their normal characteristic cycles are null-homologous";

} // namespace

std::string CharClass::name() const
{
    return (kind == Kind::pontrjagin ? "p_" : "chi_") + std::to_string(index);
}

CharClassPoly CharClassPoly::constant(Integer c)
{
    CharClassPoly p;
    p.add_term({}, c);
    return p;
}

CharClassPoly CharClassPoly::generator(CharClass g, int power)
{
    if (power < 0)
        throw UsageError("negative power of a characteristic class");
    Monomial m;
    if (power > 0)
        m[g] = power;
    CharClassPoly p;
    p.add_term(m, 1);
    return p;
}

void CharClassPoly::add_term(const Monomial &m, const Integer &c)
{
    if (c.is_zero())
        return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

namespace
{

int monomial_degree(const Monomial &m)
{
    int d = 0;
    for (const auto &[g, e] : m)
        d += g.degree() * e;
    return d;
}

} // namespace

bool CharClassPoly::is_homogeneous() const
{
    if (terms_.empty())
        return true;
    const int d = monomial_degree(terms_.begin()->first);
    for (const auto &[m, c] : terms_)
        if (monomial_degree(m) != d)
            return false;
    return true;
}

int CharClassPoly::degree() const
{
    int d = -1;
    for (const auto &[m, c] : terms_)
        d = std::max(d, monomial_degree(m));
    return d;
}

int CharClassPoly::max_pontrjagin_index() const
{
    int best = 0;
    for (const auto &[m, c] : terms_)
        for (const auto &[g, e] : m)
            if (g.kind == CharClass::Kind::pontrjagin && e > 0)
                best = std::max(best, g.index);
    return best;
}

CharClassPoly &CharClassPoly::operator+=(const CharClassPoly &other)
{
    for (const auto &[m, c] : other.terms_)
        add_term(m, c);
    return *this;
}

CharClassPoly operator*(const CharClassPoly &a, const CharClassPoly &b)
{
    CharClassPoly out;
    for (const auto &[ma, ca] : a.terms_) {
        for (const auto &[mb, cb] : b.terms_) {
            Monomial m = ma;
            for (const auto &[g, e] : mb)
                m[g] += e;
            out.add_term(m, ca * cb);
        }
    }
    return out;
}

std::string to_string(const CharClassPoly &p)
{
    if (p.is_zero())
        return "0";
    std::ostringstream os;
    bool first_term = true;
    for (const auto &[m, c] : p.terms()) {
        if (!first_term)
            os << (c.sign() < 0 ? " - " : " + ");
        else if (c.sign() < 0)
            os << "-";
        first_term = false;
        const Integer mag = abs(c);
        if (m.empty()) {
            os << mag;
            continue;
        }
        if (mag != 1)
            os << mag << "*";
        bool first_factor = true;
        for (const auto &[g, e] : m) {
            os << (first_factor ? "" : "*") << g.name();
            if (e != 1)
                os << "^" << e;
            first_factor = false;
        }
    }
    return os.str();
}

ThomResult thom_polynomial(SingularityFamily::Kind family, int k, int i)
{
    require_table_family(family);
    require_args(k, i);
    ThomResult out;
    if (k % 2 == 0) {
        out.notes.push_back(null_homologous_note);
        return out;
    }
    const int l = (k - 1) / 2;
    if (family == SingularityFamily::Kind::prim) {
        out.polynomial = CharClassPoly::generator(CharClass::euler(k + 1), i);
        out.notes.push_back(rational_note);
        out.notes.push_back(normalized_note);
        return out;
    }
    if (i % 2 == 0)
        out.polynomial = CharClassPoly::generator(CharClass::pontrjagin(l + 1), i / 2);
    return out;
}

ThomResult higher_thom_polynomial(SingularityFamily::Kind family, int k, int i, const std::vector<int> &multi_index)
{
    require_table_family(family);
    require_args(k, i);
    const int l = k / 2;
    for (int entry : multi_index)
        if (entry < 1 || entry > l)
            throw UsageError("multi-index entry " + std::to_string(entry) + " outside 1.."
                             + std::to_string(l));
    ThomResult out = thom_polynomial(family, k, i);
    if (out.polynomial.is_zero())
        return out;
    CharClassPoly normal_class = CharClassPoly::constant(1);
    for (int entry : multi_index)
        normal_class = normal_class * CharClassPoly::generator(CharClass::pontrjagin(entry));
    out.polynomial = out.polynomial * normal_class;
    return out;
}

int pontrjagin_vanishing_bound(int k)
{
    if (k < 1 || k % 2 == 0)
        throw UsageError("the Pontrjagin vanishing bound needs odd codimension k");
    return (k - 1) / 2 + 1;
}

} // namespace kazcalc
