#ifndef KAZCALC_THOM_HPP
#define KAZCALC_THOM_HPP

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "kazcalc/series.hpp"
#include "kazcalc/spectral.hpp"

namespace kazcalc
{

// A named rational characteristic class: p_i (degree 4i) or the Euler class
// chi_d of an oriented rank-d bundle (degree d).
struct CharClass
{
    // Euler classes sort (and print) first.
    enum class Kind
    {
        euler,
        pontrjagin,
    };

    Kind kind;
    int index;

    static CharClass pontrjagin(int i) { return {Kind::pontrjagin, i}; }
    static CharClass euler(int d) { return {Kind::euler, d}; }

    int degree() const noexcept { return kind == Kind::pontrjagin ? 4 * index : index; }
    std::string name() const;

    auto operator<=>(const CharClass &) const = default;
};

using Monomial = std::map<CharClass, int>;

class CharClassPoly
{
public:
    CharClassPoly() = default;

    static CharClassPoly constant(Integer c);
    static CharClassPoly generator(CharClass g, int power = 1);

    const std::map<Monomial, Integer> &terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_homogeneous() const;
    // Degree of the (homogeneous) polynomial; -1 for zero.
    int degree() const;
    // Largest Pontrjagin index appearing, 0 if none.
    int max_pontrjagin_index() const;

    CharClassPoly &operator+=(const CharClassPoly &other);
    friend CharClassPoly operator*(const CharClassPoly &a, const CharClassPoly &b);
    bool operator==(const CharClassPoly &) const = default;

private:
    void add_term(const Monomial &m, const Integer &c);

    std::map<Monomial, Integer> terms_;
};

// "chi_4^2*p_1", "0", "2*p_1^2 + p_2".
std::string to_string(const CharClassPoly &p);

struct ThomResult
{
    CharClassPoly polynomial;
    std::vector<std::string> notes;
};

// Thom polynomial of the Sigma^{1_i} stratum for prim or Morin maps of codimension k.
ThomResult thom_polynomial(SingularityFamily::Kind family, int k, int i);

// Push-forward of the normal class p_I along the Sigma^{1_i} stratum.
// Every entry of `multi_index` must lie in 1..l where k = 2l + 1.
ThomResult higher_thom_polynomial(SingularityFamily::Kind family, int k, int i, const std::vector<int> &multi_index);

// For Morin maps of odd codimension k = 2l + 1, p_j of the virtual normal
// bundle vanishes for j > l + 1; returns l + 1.
int pontrjagin_vanishing_bound(int k);

} // namespace kazcalc

#endif
