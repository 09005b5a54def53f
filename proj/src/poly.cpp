#include "ellsurf/poly.hpp"

#include <algorithm>
#include <cctype>
#include <utility>

#include "ellsurf/error.hpp"

namespace ellsurf {

std::string to_string(const Rational& q) { return q.get_str(); }

Rational parse_rational(std::string_view text) {
    std::size_t i = 0;
    bool neg = false;
    if (i < text.size() && text[i] == '-') {
        neg = true;
        ++i;
    }
    auto digits = [&](std::size_t& pos) {
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start) throw ParseError("expected digits", pos);
        return Integer(std::string(text.substr(start, pos - start)));
    };
    Integer num = digits(i);
    Integer den = 1;
    if (i < text.size() && text[i] == '/') {
        ++i;
        den = digits(i);
        if (den == 0) throw ParseError("zero denominator", i - 1);
    }
    if (i != text.size()) throw ParseError("trailing characters in rational", i);
    Rational q(neg ? Integer(-num) : num, den);
    q.canonicalize();
    return q;
}

// ---------------------------------------------------------------------------
// Valuation

std::uint32_t Valuation::value() const {
    if (is_infinite()) throw DomainError("infinite_valuation", "valuation is infinite");
    return raw_;
}

Valuation Valuation::minus(std::uint32_t k) const {
    if (is_infinite()) return *this;
    if (raw_ < k) throw DomainError("negative_valuation", "valuation underflow");
    return Valuation(raw_ - k);
}

std::string Valuation::to_string() const {
    return is_infinite() ? std::string("inf") : std::to_string(raw_);
}

// ---------------------------------------------------------------------------
// Poly

Poly::Poly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

void Poly::normalize() {
    while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

Poly Poly::from_ints(std::initializer_list<long> coeffs) {
    std::vector<Rational> c;
    c.reserve(coeffs.size());
    for (long v : coeffs) c.emplace_back(v);
    return Poly(std::move(c));
}

Poly Poly::constant(const Rational& c) { return Poly(std::vector<Rational>{c}); }

Poly Poly::monomial(const Rational& c, std::size_t exponent) {
    std::vector<Rational> v(exponent + 1);
    v[exponent] = c;
    return Poly(std::move(v));
}

std::optional<std::size_t> Poly::degree() const {
    if (coeffs_.empty()) return std::nullopt;
    return coeffs_.size() - 1;
}

Rational Poly::coefficient(std::size_t i) const {
    return i < coeffs_.size() ? coeffs_[i] : Rational(0);
}

const Rational& Poly::leading() const {
    if (coeffs_.empty()) throw DomainError("zero_polynomial", "leading coefficient of zero polynomial");
    return coeffs_.back();
}

Rational Poly::eval(const Rational& x) const {
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Poly Poly::derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<Rational> d(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * static_cast<unsigned long>(i);
    return Poly(std::move(d));
}

Poly Poly::monic() const {
    if (is_zero()) return {};
    Poly r = *this;
    Rational inv = 1 / leading();
    for (auto& c : r.coeffs_) c *= inv;
    return r;
}

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

Poly& Poly::operator+=(const Poly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    normalize();
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    normalize();
    return *this;
}

Poly& Poly::operator*=(const Rational& c) {
    if (sgn(c) == 0) {
        coeffs_.clear();
        return *this;
    }
    for (auto& x : coeffs_) x *= c;
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> r(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (sgn(a.coeffs_[i]) == 0) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) r[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return Poly(std::move(r));
}

std::string Poly::to_string() const {
    if (is_zero()) return "0";
    std::string out;
    bool first = true;
    for (std::size_t k = coeffs_.size(); k-- > 0;) {
        const Rational& c = coeffs_[k];
        if (sgn(c) == 0) continue;
        Rational mag = abs(c);
        if (first) {
            if (sgn(c) < 0) out += "-";
        } else {
            out += sgn(c) < 0 ? " - " : " + ";
        }
        std::string mono;
        if (k == 1) mono = "t";
        else if (k > 1) mono = "t^" + std::to_string(k);
        if (k == 0) {
            out += ellsurf::to_string(mag);
        } else if (mag == 1) {
            // "-t" is outside the strict grammar; keep an explicit coefficient there.
            out += (first && sgn(c) < 0) ? "1*" + mono : mono;
        } else {
            out += ellsurf::to_string(mag) + "*" + mono;
        }
        first = false;
    }
    return out;
}

DivMod divmod(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw DomainError("division_by_zero", "polynomial division by zero");
    if (a.size() < b.size()) return {Poly{}, a};
    std::vector<Rational> rem = a.coefficients();
    const std::size_t db = b.size() - 1;
    std::vector<Rational> quot(a.size() - db);
    const Rational inv = 1 / b.leading();
    for (std::size_t k = rem.size(); k-- > db;) {
        if (sgn(rem[k]) == 0) continue;
        Rational q = rem[k] * inv;
        quot[k - db] = q;
        for (std::size_t j = 0; j <= db; ++j) rem[k - db + j] -= q * b.coefficient(j);
    }
    rem.resize(db);
    return {Poly(std::move(quot)), Poly(std::move(rem))};
}

Poly div_exact(const Poly& a, const Poly& b) {
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) throw DomainError("inexact_division", "polynomial division is not exact");
    return q;
}

bool divides(const Poly& d, const Poly& a) { return divmod(a, d).remainder.is_zero(); }

Poly gcd(const Poly& a, const Poly& b) {
    Poly x = a.monic();
    Poly y = b.monic();
    while (!y.is_zero()) {
        Poly r = divmod(x, y).remainder.monic();
        x = std::move(y);
        y = std::move(r);
    }
    return x;
}

Poly pow(const Poly& p, unsigned e) {
    Poly result = Poly::constant(Rational(1));
    Poly base = p;
    while (e > 0) {
        if (e & 1u) result = result * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return result;
}

bool canonical_less(const Poly& a, const Poly& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    for (std::size_t i = 0; i < a.size(); ++i) {
        int c = cmp(a.coefficients()[i], b.coefficients()[i]);
        if (c != 0) return c < 0;
    }
    return false;
}

std::vector<SquarefreeFactor> squarefree_decompose(const Poly& f) {
    if (f.is_zero()) throw DomainError("zero_polynomial", "squarefree decomposition of zero");
    std::vector<SquarefreeFactor> out;
    if (f.is_constant()) return out;
    Poly g = f.monic();
    Poly dg = g.derivative();
    Poly a = gcd(g, dg);
    Poly b = div_exact(g, a);
    Poly c = div_exact(dg, a);
    Poly d = c - b.derivative();
    for (unsigned i = 1; !b.is_constant(); ++i) {
        Poly ai = gcd(b, d);
        b = div_exact(b, ai);
        c = div_exact(d, ai);
        d = c - b.derivative();
        if (!ai.is_constant()) out.push_back({std::move(ai), i});
    }
    return out;
}

bool is_squarefree(const Poly& f) {
    if (f.is_zero()) return false;
    return gcd(f, f.derivative()).is_constant();
}

Valuation valuation(const Poly& f, const Poly& p) {
    if (p.is_constant() || !p.is_monic())
        throw DomainError("invalid_place", "valuation requires a monic polynomial of positive degree");
    if (f.is_zero()) return Valuation::infinity();
    std::uint32_t e = 0;
    Poly cur = f;
    for (;;) {
        auto [q, r] = divmod(cur, p);
        if (!r.is_zero()) break;
        cur = std::move(q);
        ++e;
    }
    return Valuation(e);
}

std::vector<ValuationLayer> valuation_layers(const Poly& pi, const Poly& g) {
    if (pi.is_constant()) return {};
    if (g.is_zero()) return {{pi, Valuation::infinity()}};
    std::vector<ValuationLayer> out;
    Poly at_least = gcd(pi, g);  // roots with v >= j
    Poly none = div_exact(pi, at_least);
    if (!none.is_constant()) out.push_back({none.monic(), Valuation(0)});
    Poly rest = g;
    for (std::uint32_t j = 1; !at_least.is_constant(); ++j) {
        rest = div_exact(rest, at_least);
        Poly next = gcd(at_least, rest);
        Poly exact = div_exact(at_least, next);
        if (!exact.is_constant()) out.push_back({exact.monic(), Valuation(j)});
        at_least = std::move(next);
    }
    return out;
}

Poly reverse_pad(const Poly& f, std::size_t d) {
    if (f.size() > d + 1)
        throw DomainError("degree_exceeds_frame",
                          "degree " + std::to_string(f.size() - 1) + " exceeds window " + std::to_string(d));
    std::vector<Rational> r(d + 1);
    for (std::size_t i = 0; i < f.size(); ++i) r[d - i] = f.coefficients()[i];
    return Poly(std::move(r));
}

Rational naive_height(const Poly& f) {
    Rational h = 0;
    for (const auto& c : f.coefficients()) h = std::max(h, Rational(abs(c)));
    return h;
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

constexpr unsigned long kMaxExponent = 1'000'000;

class PolyParser {
public:
    PolyParser(std::string_view text, std::size_t base) : text_(text), base_(base) {}

    Poly parse() {
        Poly acc = term();
        for (;;) {
            skip_ws();
            if (at_end()) break;
            char op = text_[pos_];
            if (op != '+' && op != '-') fail("expected '+' or '-'");
            ++pos_;
            Poly t = term();
            if (op == '+') acc += t;
            else acc -= t;
        }
        return acc;
    }

private:
    Poly term() {
        skip_ws();
        if (at_end()) fail("expected term");
        char c = text_[pos_];
        if (c == 't') return mono(Rational(1));
        if (c == '-' || std::isdigit(static_cast<unsigned char>(c))) {
            if (c == '-' && next_non_ws(pos_ + 1) == 't') {
                pos_ = skip_from(pos_ + 1);
                return mono(Rational(-1));
            }
            Rational k = coeff();
            skip_ws();
            if (!at_end() && text_[pos_] == '*') {
                ++pos_;
                skip_ws();
                if (at_end() || text_[pos_] != 't') fail("expected 't' after '*'");
                return mono(k);
            }
            return Poly::constant(k);
        }
        fail("expected term");
    }

    Poly mono(const Rational& k) {
        ++pos_;  // 't'
        skip_ws();
        unsigned long e = 1;
        if (!at_end() && text_[pos_] == '^') {
            ++pos_;
            skip_ws();
            std::size_t start = pos_;
            Integer v = uint_digits();
            if (v > kMaxExponent) {
                pos_ = start;
                fail("exponent overflow (> 1000000)");
            }
            e = v.get_ui();
        }
        // Trailing divisor, as in "t/2" or "3*t^2/4".
        skip_ws();
        if (!at_end() && text_[pos_] == '/') {
            ++pos_;
            skip_ws();
            std::size_t at = pos_;
            Integer den = uint_digits();
            if (den == 0) {
                pos_ = at;
                fail("zero denominator");
            }
            return Poly::monomial(k / Rational(den), e);
        }
        return Poly::monomial(k, e);
    }

    Rational coeff() {
        bool neg = false;
        if (text_[pos_] == '-') {
            neg = true;
            ++pos_;
            skip_ws();
        }
        Integer num = uint_digits();
        Integer den = 1;
        skip_ws();
        if (!at_end() && text_[pos_] == '/') {
            ++pos_;
            skip_ws();
            std::size_t at = pos_;
            den = uint_digits();
            if (den == 0) {
                pos_ = at;
                fail("zero denominator");
            }
        }
        Rational q(neg ? Integer(-num) : num, den);
        q.canonicalize();
        return q;
    }

    Integer uint_digits() {
        std::size_t start = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (pos_ == start) fail("expected digits");
        return Integer(std::string(text_.substr(start, pos_ - start)));
    }

    bool at_end() const { return pos_ >= text_.size(); }
    static bool is_ws(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }
    void skip_ws() { pos_ = skip_from(pos_); }
    std::size_t skip_from(std::size_t p) const {
        while (p < text_.size() && is_ws(text_[p])) ++p;
        return p;
    }
    char next_non_ws(std::size_t p) const {
        p = skip_from(p);
        return p < text_.size() ? text_[p] : '\0';
    }
    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, base_ + pos_); }

    std::string_view text_;
    std::size_t base_;
    std::size_t pos_ = 0;
};

}  // namespace

Poly parse_poly(std::string_view text) { return PolyParser(text, 0).parse(); }

RatFunc RatFunc::make(Poly num, Poly den) {
    if (den.is_zero()) throw DomainError("zero_denominator", "rational function with zero denominator");
    if (num.is_zero()) return RatFunc{};
    Poly g = gcd(num, den);
    num = div_exact(num, g);
    den = div_exact(den, g);
    Rational lc = den.leading();
    num *= 1 / lc;
    den *= 1 / lc;
    return RatFunc{std::move(num), std::move(den)};
}

std::string RatFunc::to_string() const {
    if (den == Poly::constant(Rational(1))) return num.to_string();
    return "(" + num.to_string() + ")/(" + den.to_string() + ")";
}

RatFunc parse_ratfunc(std::string_view text) {
    std::size_t p = 0;
    while (p < text.size() && std::isspace(static_cast<unsigned char>(text[p]))) ++p;
    if (p >= text.size() || text[p] != '(') return RatFunc::make(parse_poly(text), Poly::constant(Rational(1)));

    auto group = [&](std::size_t open) {
        std::size_t close = text.find(')', open + 1);
        if (close == std::string_view::npos) throw ParseError("unbalanced '('", open);
        Poly body = PolyParser(text.substr(open + 1, close - open - 1), open + 1).parse();
        return std::pair{std::move(body), close + 1};
    };
    auto [num, after] = group(p);
    p = after;
    while (p < text.size() && std::isspace(static_cast<unsigned char>(text[p]))) ++p;
    Poly den = Poly::constant(Rational(1));
    if (p < text.size()) {
        if (text[p] != '/') throw ParseError("expected '/'", p);
        ++p;
        while (p < text.size() && std::isspace(static_cast<unsigned char>(text[p]))) ++p;
        if (p >= text.size() || text[p] != '(') throw ParseError("expected '('", p);
        auto [d, end] = group(p);
        den = std::move(d);
        p = end;
        while (p < text.size() && std::isspace(static_cast<unsigned char>(text[p]))) ++p;
        if (p != text.size()) throw ParseError("trailing characters", p);
    }
    if (den.is_zero()) throw ParseError("zero denominator", p);
    return RatFunc::make(std::move(num), std::move(den));
}

}  // namespace ellsurf
