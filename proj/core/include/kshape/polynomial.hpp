#pragma once

#include <array>
#include <map>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "kshape/pistol.hpp"

namespace kshape {

using BigInt = boost::multiprecision::cpp_int;

/// Fixed variable slots for the six-variable polynomial ring used
/// throughout: x, y, z and their barred companions (printed xb, yb, zb).
inline constexpr int kNumVars = 6;
enum Var : int { VarX = 0, VarY = 1, VarZ = 2, VarXBar = 3, VarYBar = 4, VarZBar = 5 };

using Exponents = std::array<int, kNumVars>;

/// Orders monomials by total degree first, ties broken graded reverse
/// lexicographically, largest first — so map iteration prints leading
/// terms first.
struct GrevlexDescending {
    bool operator()(const Exponents& a, const Exponents& b) const;
};

/// A sparse multivariate polynomial with arbitrary-precision integer
/// coefficients.  Zero coefficients are never stored.
class MultiPoly {
public:
    MultiPoly() = default;

    static MultiPoly constant(BigInt value);
    static MultiPoly variable(int var, int power = 1);
    static MultiPoly monomial(const Exponents& exps, BigInt coefficient);

    bool is_zero() const { return terms_.empty(); }
    const std::map<Exponents, BigInt, GrevlexDescending>& terms() const { return terms_; }
    BigInt coefficient(const Exponents& exps) const;
    int total_degree() const;  // -1 for the zero polynomial

    MultiPoly& operator+=(const MultiPoly& rhs);
    MultiPoly& operator-=(const MultiPoly& rhs);
    MultiPoly operator+(const MultiPoly& rhs) const;
    MultiPoly operator-(const MultiPoly& rhs) const;
    MultiPoly operator*(const MultiPoly& rhs) const;
    MultiPoly operator*(const BigInt& scalar) const;
    MultiPoly operator-() const;
    bool operator==(const MultiPoly&) const = default;

    /// Substitutes var -> var + 1 (binomial expansion).
    MultiPoly shift_var(int var) const;

    /// Substitutes the variable `src` by the variable `dst`.
    MultiPoly substitute_var(int src, int dst) const;

    /// Substitutes the variable by a constant.
    MultiPoly specialize(int var, const BigInt& value) const;

    BigInt evaluate(const std::array<BigInt, kNumVars>& point) const;

    /// "2*x^3 + x^2", "x*y + x*z + y*z", "0"; barred variables print as
    /// xb, yb, zb.
    std::string to_string() const;

private:
    void add_term(const Exponents& exps, const BigInt& coefficient);

    std::map<Exponents, BigInt, GrevlexDescending> terms_;
};

/// q(1) = x^2; q(k+1) = x^2 * (q(k) at x+1  -  q(k) at x).
MultiPoly gandhi(int k);

/// g(k) = gandhi(k-1) evaluated at x = 1, for k >= 2.
BigInt genocchi(int k);

/// F(1) = 1; F(k+1) = (x+y)(x+z) F(k) at x+1  -  x^2 F(k), symmetric in
/// x, y, z.
MultiPoly dumont_foata(int k);

/// G(1) = 1; G(k+1) = (x+zb)(y+xb) G(k) at (x+1, xb+1)
///                    + (x(yb-y) + xb(z-zb) - x*xb) G(k).
/// Setting xb=x, yb=y, zb=z recovers dumont_foata(k).
MultiPoly generalized_dumont_foata(int k);

/// Which monomial a pistol contributes in a generating sum.
enum class PistolWeighting {
    GandhiFixed,        // x^(fix+2)
    MaxFixProminent,    // x^max y^fix z^pro
    MaxFixSurfixed,     // x^max y^fix z^sur
    SixVariable,        // x^mo y^fl z^snl xb^me yb^fnl zb^sl
};

/// Sums the chosen monomial over all surjective pistols of height k.
MultiPoly poly_from_pistols(int k, PistolWeighting weighting,
                            ProminentConvention convention =
                                ProminentConvention::ExcludeTopIncludeFirst);

/// Which monomial an irreducible shape contributes in a generating sum.
enum class ShapeWeighting {
    SiteTriple,   // x^ful y^fr z^(fro+sch)
    GandhiFree,   // x^(fr+2)
};

/// Sums the chosen monomial over all irreducible (k+1)-shapes, reached as
/// images of the pistols of height k.
MultiPoly poly_from_shapes(int k, ShapeWeighting weighting = ShapeWeighting::SiteTriple);

/// True when the polynomial is invariant under all permutations of x, y, z.
bool is_symmetric_xyz(const MultiPoly& p);

} // namespace kshape
