#pragma once

// Exact univariate polynomials over Q in the variable t.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace ellsurf {

using Integer = mpz_class;
using Rational = mpq_class;

/// "p/q", or "p" when q == 1.
std::string to_string(const Rational& q);

/// Parses "p" or "p/q" (optional leading '-'); throws ParseError.
Rational parse_rational(std::string_view text);

/// Order of vanishing, with a sentinel for the zero function that compares
/// greater than every natural number.
class Valuation {
public:
    constexpr Valuation() = default;
    constexpr explicit Valuation(std::uint32_t v) : raw_(v) {}

    static constexpr Valuation infinity() { return Valuation(kInf); }

    constexpr bool is_infinite() const { return raw_ == kInf; }
    std::uint32_t value() const;

    /// v - k, saturating at infinity. Requires v >= k.
    Valuation minus(std::uint32_t k) const;

    constexpr auto operator<=>(const Valuation&) const = default;
    constexpr bool operator==(const Valuation&) const = default;
    constexpr bool operator>=(std::uint32_t v) const { return raw_ >= v; }
    constexpr bool operator==(std::uint32_t v) const { return raw_ == v; }

    std::string to_string() const;

private:
    static constexpr std::uint32_t kInf = std::numeric_limits<std::uint32_t>::max();
    std::uint32_t raw_ = 0;
};

class Poly {
public:
    Poly() = default;
    /// Coefficients low to high; trailing zeros are stripped.
    explicit Poly(std::vector<Rational> coeffs);

    static Poly from_ints(std::initializer_list<long> coeffs);
    static Poly constant(const Rational& c);
    static Poly monomial(const Rational& c, std::size_t exponent);
    static Poly variable() { return monomial(Rational(1), 1); }

    bool is_zero() const { return coeffs_.empty(); }
    bool is_constant() const { return coeffs_.size() <= 1; }
    /// nullopt for the zero polynomial.
    std::optional<std::size_t> degree() const;
    /// Number of stored coefficients: degree + 1, or 0 for the zero polynomial.
    std::size_t size() const { return coeffs_.size(); }

    /// Coefficient of t^i; zero beyond the degree.
    Rational coefficient(std::size_t i) const;
    const std::vector<Rational>& coefficients() const { return coeffs_; }
    const Rational& leading() const;

    Rational eval(const Rational& x) const;
    Poly derivative() const;
    Poly monic() const;
    bool is_monic() const { return !is_zero() && leading() == 1; }

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Rational& c);

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
    friend Poly operator*(const Rational& c, Poly a) { return a *= c; }

    friend bool operator==(const Poly&, const Poly&) = default;

    /// Human-readable form accepted by parse_poly, e.g. "4*t^3 + 27".
    std::string to_string() const;

private:
    void normalize();
    std::vector<Rational> coeffs_;
};

struct DivMod {
    Poly quotient;
    Poly remainder;
};

/// Euclidean division; throws DomainError on a zero divisor.
DivMod divmod(const Poly& a, const Poly& b);
/// Quotient of an exact division; throws DomainError if b does not divide a.
Poly div_exact(const Poly& a, const Poly& b);
/// Monic gcd; gcd(0, 0) = 0.
Poly gcd(const Poly& a, const Poly& b);
Poly pow(const Poly& p, unsigned e);
bool divides(const Poly& d, const Poly& a);

/// Sort key for places: degree first, then coefficients low to high.
bool canonical_less(const Poly& a, const Poly& b);

struct SquarefreeFactor {
    Poly factor;  // monic, squarefree, degree >= 1
    unsigned multiplicity;
};

/// Yun decomposition: f = lc(f) * prod factor^multiplicity, factors pairwise
/// coprime, ordered by multiplicity. Throws DomainError for f == 0.
std::vector<SquarefreeFactor> squarefree_decompose(const Poly& f);

/// gcd(f, f') is constant. False for the zero polynomial.
bool is_squarefree(const Poly& f);

/// Largest e with p^e | f. p must be monic of positive degree.
Valuation valuation(const Poly& f, const Poly& p);

struct ValuationLayer {
    Poly factor;  // monic squarefree piece of the cluster
    Valuation v;  // valuation of g at every root of `factor`
};

/// Splits a monic squarefree cluster pi into pieces on which v(g) is constant.
/// Pieces are returned in increasing valuation; g == 0 yields one infinite layer.
std::vector<ValuationLayer> valuation_layers(const Poly& pi, const Poly& g);

/// s^d * f(1/s). Requires deg f <= d.
Poly reverse_pad(const Poly& f, std::size_t d);

/// max |coefficient|; 0 for the zero polynomial.
Rational naive_height(const Poly& f);

/// Parses the polynomial grammar
///   poly  := term (("+"|"-") term)*
///   term  := coeff ("*" mono)? | mono
///   mono  := "t" ("^" uint)?
///   coeff := int ("/" uint)?
/// ignoring whitespace. A leading "-" before a bare monomial is also accepted.
Poly parse_poly(std::string_view text);

/// Reduced quotient num/den with den monic.
struct RatFunc {
    Poly num;
    Poly den = Poly::constant(Rational(1));

    static RatFunc make(Poly num, Poly den);
    bool is_zero() const { return num.is_zero(); }
    friend bool operator==(const RatFunc&, const RatFunc&) = default;
    std::string to_string() const;
};

/// Accepts either a bare polynomial or "(num)/(den)".
RatFunc parse_ratfunc(std::string_view text);

}  // namespace ellsurf
