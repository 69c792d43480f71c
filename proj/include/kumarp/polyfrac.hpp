#pragma once

// Sparse multivariate integer polynomials and rational functions kept in
// factored form: scalar * num / (product of primitive linear forms).
//
// Variable order is x_0 < x_1 < ... < x_{n-1} (the scaling character, when
// present, is the last and largest variable); the monomial order is graded
// lexicographic with respect to it.

#include "kumarp/bigint.hpp"
#include "kumarp/cartan.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace kumarp {

class PolyError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

using Exponent = std::vector<int>;

struct GrlexLess {
    bool operator()(const Exponent& a, const Exponent& b) const {
        const int da = std::accumulate(a.begin(), a.end(), 0);
        const int db = std::accumulate(b.begin(), b.end(), 0);
        if (da != db) return da < db;
        for (std::size_t k = a.size(); k-- > 0;)
            if (a[k] != b[k]) return a[k] < b[k];
        return false;
    }
};

class LinearForm;

class MultiPoly {
  public:
    using Terms = std::map<Exponent, BigInt, GrlexLess>;

    MultiPoly() = default;
    explicit MultiPoly(std::size_t nvars) : nvars_(nvars) {}

    static MultiPoly constant(std::size_t nvars, const BigInt& c) {
        MultiPoly p(nvars);
        p.add_term(Exponent(nvars, 0), c);
        return p;
    }
    static MultiPoly variable(std::size_t nvars, std::size_t k) {
        MultiPoly p(nvars);
        Exponent e(nvars, 0);
        e.at(k) = 1;
        p.add_term(e, 1);
        return p;
    }
    static MultiPoly linear(std::span<const std::int64_t> coeffs) {
        MultiPoly p(coeffs.size());
        for (std::size_t k = 0; k < coeffs.size(); ++k) {
            if (coeffs[k] == 0) continue;
            Exponent e(coeffs.size(), 0);
            e[k] = 1;
            p.add_term(e, coeffs[k]);
        }
        return p;
    }

    std::size_t nvars() const { return nvars_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    /// Total degree; -1 for the zero polynomial.
    int degree() const {
        if (terms_.empty()) return -1;
        const auto& e = terms_.rbegin()->first;
        return std::accumulate(e.begin(), e.end(), 0);
    }
    bool is_constant() const { return degree() <= 0; }
    /// Constant term (0 when absent).
    BigInt constant_term() const {
        auto it = terms_.find(Exponent(nvars_, 0));
        return it == terms_.end() ? BigInt(0) : it->second;
    }
    const BigInt& leading_coefficient() const {
        if (terms_.empty()) throw PolyError("leading coefficient of zero polynomial");
        return terms_.rbegin()->second;
    }
    /// Positive gcd of the coefficients; 0 for the zero polynomial.
    BigInt content() const {
        BigInt g = 0;
        for (const auto& [e, c] : terms_) {
            g = gcd(g, c);
            if (g == 1) break;
        }
        return g;
    }

    void add_term(const Exponent& e, const BigInt& c) {
        if (e.size() != nvars_) throw PolyError("exponent length does not match variable count");
        if (c == 0) return;
        auto [it, inserted] = terms_.try_emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    MultiPoly& operator+=(const MultiPoly& o) {
        check_same(o);
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    MultiPoly& operator-=(const MultiPoly& o) {
        check_same(o);
        for (const auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }
    MultiPoly& operator*=(const BigInt& c) {
        if (c == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& [e, v] : terms_) v *= c;
        return *this;
    }
    /// Exact division of every coefficient; throws if inexact.
    MultiPoly& divide_exact(const BigInt& c) {
        if (c == 0) throw PolyError("division by zero");
        for (auto& [e, v] : terms_) {
            if (v % c != 0) throw PolyError("inexact scalar division");
            v /= c;
        }
        return *this;
    }

    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator-(MultiPoly a) { return a *= BigInt(-1); }
    friend MultiPoly operator*(MultiPoly a, const BigInt& c) { return a *= c; }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
        a.check_same(b);
        MultiPoly out(a.nvars_);
        Exponent e(a.nvars_);
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) {
                for (std::size_t k = 0; k < e.size(); ++k) e[k] = ea[k] + eb[k];
                out.add_term(e, ca * cb);
            }
        return out;
    }
    MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }

    /// Multiply by the linear form sum_k coeffs[k] x_k.
    MultiPoly times_linear(std::span<const std::int64_t> coeffs) const {
        if (coeffs.size() != nvars_) throw PolyError("linear form has wrong variable count");
        MultiPoly out(nvars_);
        for (const auto& [e, c] : terms_) {
            for (std::size_t k = 0; k < nvars_; ++k) {
                if (coeffs[k] == 0) continue;
                Exponent f = e;
                ++f[k];
                out.add_term(f, c * coeffs[k]);
            }
        }
        return out;
    }

    bool operator==(const MultiPoly& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }

    Rational eval(std::span<const std::int64_t> point) const {
        if (point.size() != nvars_) throw PolyError("evaluation point has wrong dimension");
        Rational s = 0;
        for (const auto& [e, c] : terms_) {
            BigInt t = c;
            for (std::size_t k = 0; k < nvars_; ++k)
                for (int j = 0; j < e[k]; ++j) t *= point[k];
            s += t;
        }
        return s;
    }

  private:
    void check_same(const MultiPoly& o) const {
        if (nvars_ != o.nvars_) throw PolyError("variable count mismatch");
    }

    std::size_t nvars_ = 0;
    Terms terms_;
};

/// Nonzero primitive degree-one form with positive first nonzero
/// coefficient.
class LinearForm {
  public:
    struct Normalized;

    /// Splits v = factor * form with form primitive and sign-normalized.
    static Normalized normalize(const RootVector& v);

    const std::vector<std::int64_t>& coeffs() const { return coeffs_; }
    std::size_t nvars() const { return coeffs_.size(); }
    MultiPoly as_poly() const { return MultiPoly::linear(coeffs_); }

    Rational eval(std::span<const std::int64_t> point) const {
        BigInt s = 0;
        for (std::size_t k = 0; k < coeffs_.size(); ++k) s += BigInt(coeffs_[k]) * point[k];
        return s;
    }

    auto operator<=>(const LinearForm&) const = default;
    bool operator==(const LinearForm&) const = default;

  private:
    std::vector<std::int64_t> coeffs_;
};

struct LinearForm::Normalized {
    LinearForm form;
    std::int64_t factor;
};

inline LinearForm::Normalized LinearForm::normalize(const RootVector& v) {
    std::int64_t g = 0;
    std::int64_t first = 0;
    for (auto c : v) {
        g = std::gcd(g, c < 0 ? -c : c);
        if (first == 0) first = c;
    }
    if (g == 0) throw PolyError("zero weight cannot be a linear form");
    const std::int64_t factor = first > 0 ? g : -g;
    Normalized n{LinearForm{}, factor};
    n.form.coeffs_.reserve(v.size());
    for (auto c : v) n.form.coeffs_.push_back(c / factor);
    return n;
}

/// Exact quotient p / f, or nullopt when f does not divide p.
inline std::optional<MultiPoly> divide_by_linear(const MultiPoly& p, const LinearForm& f) {
    if (p.nvars() != f.nvars()) throw PolyError("variable count mismatch");
    const auto& a = f.coeffs();
    std::size_t lead = a.size();
    for (std::size_t k = a.size(); k-- > 0;)
        if (a[k] != 0) {
            lead = k;
            break;
        }
    if (lead == a.size()) throw PolyError("zero linear form");
    const BigInt lc = a[lead];
    // Treat p as univariate in x_lead: each step cancels one term of top
    // x_lead-degree and only produces terms of lower x_lead-degree.
    MultiPoly rem = p;
    MultiPoly quot(p.nvars());
    while (!rem.is_zero()) {
        const Exponent* top = nullptr;
        for (const auto& [e, c] : rem.terms())
            if (!top || e[lead] > (*top)[lead]) top = &e;
        if ((*top)[lead] == 0) return std::nullopt;
        const BigInt c = rem.terms().at(*top);
        if (c % lc != 0) return std::nullopt;
        Exponent qe = *top;
        --qe[lead];
        MultiPoly term(p.nvars());
        term.add_term(qe, c / lc);
        quot += term;
        rem -= term.times_linear(a);
    }
    return quot;
}

/// scalar * num / prod(den). Canonical form: num primitive with positive
/// leading coefficient, den sorted, no den factor divides num, zero is
/// (0, 0, {}).
class FactoredRational {
  public:
    FactoredRational() = default;

    static FactoredRational zero(std::size_t nvars) {
        FactoredRational r;
        r.num_ = MultiPoly(nvars);
        r.scalar_ = 0;
        return r;
    }

    static FactoredRational one(std::size_t nvars) { return from_parts(1, MultiPoly::constant(nvars, 1), {}); }

    /// 1 / prod(weights): content and sign of each weight are folded into
    /// the scalar. Already reduced.
    static FactoredRational from_weights(std::size_t nvars, std::span<const RootVector> weights) {
        FactoredRational r;
        r.num_ = MultiPoly::constant(nvars, 1);
        BigInt prod = 1;
        for (const auto& w : weights) {
            if (w.size() != nvars) throw PolyError("weight has wrong dimension");
            auto n = LinearForm::normalize(w);
            prod *= n.factor;
            r.den_.push_back(std::move(n.form));
        }
        std::sort(r.den_.begin(), r.den_.end());
        r.scalar_ = make_rational(1, prod);
        return r;
    }

    /// General constructor; normalizes and cancels.
    static FactoredRational from_parts(const Rational& scalar, MultiPoly num, std::vector<LinearForm> den) {
        FactoredRational r;
        for (const auto& f : den)
            if (f.nvars() != num.nvars()) throw PolyError("variable count mismatch");
        r.num_ = std::move(num);
        r.scalar_ = scalar;
        r.den_ = std::move(den);
        std::sort(r.den_.begin(), r.den_.end());
        r.normalize();
        return r;
    }

    std::size_t nvars() const { return num_.nvars(); }
    const MultiPoly& numerator() const { return num_; }
    const Rational& scalar() const { return scalar_; }
    const std::vector<LinearForm>& denominator() const { return den_; }
    bool is_zero() const { return scalar_ == 0; }
    int sign() const { return scalar_ < 0 ? -1 : 1; }
    /// deg(num) - |den|; only meaningful for nonzero values.
    int degree() const { return num_.degree() - static_cast<int>(den_.size()); }
    /// Numerator polynomial is a nonzero constant.
    bool has_constant_numerator() const { return !is_zero() && num_.degree() == 0; }
    /// scalar * num with the scalar denominator equal to 1.
    bool has_integral_numerator() const { return !is_zero() && denominator_of(scalar_) == 1; }

    FactoredRational scaled(const Rational& c) const {
        if (c == 0) return zero(nvars());
        FactoredRational r = *this;
        r.scalar_ *= c;
        return r;
    }
    FactoredRational operator-() const { return scaled(-1); }

    friend FactoredRational operator+(const FactoredRational& a, const FactoredRational& b) {
        if (a.nvars() != b.nvars()) throw PolyError("variable count mismatch");
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        // least common multiset denominator
        std::vector<LinearForm> common;
        std::vector<LinearForm> extra_a, extra_b;  // factors missing from a / b
        std::size_t i = 0, j = 0;
        while (i < a.den_.size() || j < b.den_.size()) {
            if (j == b.den_.size() || (i < a.den_.size() && a.den_[i] < b.den_[j])) {
                common.push_back(a.den_[i]);
                extra_b.push_back(a.den_[i++]);
            } else if (i == a.den_.size() || b.den_[j] < a.den_[i]) {
                common.push_back(b.den_[j]);
                extra_a.push_back(b.den_[j++]);
            } else {
                common.push_back(a.den_[i]);
                ++i;
                ++j;
            }
        }
        const BigInt pa = numerator_of(a.scalar_), qa = denominator_of(a.scalar_);
        const BigInt pb = numerator_of(b.scalar_), qb = denominator_of(b.scalar_);
        MultiPoly na = a.num_, nb = b.num_;
        for (const auto& f : extra_a) na = na.times_linear(f.coeffs());
        for (const auto& f : extra_b) nb = nb.times_linear(f.coeffs());
        na *= pa * qb;
        nb *= pb * qa;
        na += nb;
        return from_parts(make_rational(1, qa * qb), std::move(na), std::move(common));
    }
    friend FactoredRational operator-(const FactoredRational& a, const FactoredRational& b) { return a + (-b); }
    FactoredRational& operator+=(const FactoredRational& o) { return *this = *this + o; }

    bool operator==(const FactoredRational& o) const {
        return scalar_ == o.scalar_ && num_ == o.num_ && den_ == o.den_;
    }

    /// Exact value at an integer point; throws if a denominator factor
    /// vanishes there.
    Rational eval_at(std::span<const std::int64_t> point) const {
        if (point.size() != nvars()) throw PolyError("evaluation point has wrong dimension");
        Rational d = 1;
        for (const auto& f : den_) {
            Rational v = f.eval(point);
            if (v == 0) throw PolyError("denominator vanishes at evaluation point");
            d *= v;
        }
        return scalar_ * num_.eval(point) / d;
    }

  private:
    void normalize() {
        if (num_.is_zero() || scalar_ == 0) {
            *this = zero(num_.nvars());
            return;
        }
        normalize_content();
        // cancel linear factors; den_ is sorted so equal forms are adjacent
        std::vector<LinearForm> kept;
        kept.reserve(den_.size());
        for (std::size_t k = 0; k < den_.size();) {
            std::size_t end = k;
            while (end < den_.size() && den_[end] == den_[k]) ++end;
            std::size_t remaining = end - k;
            while (remaining > 0 && num_.degree() > 0) {
                auto q = divide_by_linear(num_, den_[k]);
                if (!q) break;
                num_ = std::move(*q);
                --remaining;
            }
            kept.insert(kept.end(), remaining, den_[k]);
            k = end;
        }
        den_ = std::move(kept);
        normalize_content();
    }

    void normalize_content() {
        BigInt c = num_.content();
        if (num_.leading_coefficient() < 0) c = -c;
        if (c != 1) {
            num_.divide_exact(c);
            scalar_ *= c;
        }
    }

    MultiPoly num_;
    Rational scalar_ = 0;
    std::vector<LinearForm> den_;
};

/// Display names for variables, e.g. {"a1","a2","d"}.
using VariableNames = std::vector<std::string>;

inline VariableNames default_names(std::size_t nvars, const std::string& stem = "x") {
    VariableNames v;
    for (std::size_t k = 0; k < nvars; ++k) v.push_back(stem + std::to_string(k + 1));
    return v;
}

/// Expanded polynomial, terms in decreasing grlex order: "a1^2-3*a1*a2+1".
inline std::string render_poly(const MultiPoly& p, const VariableNames& names) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        const auto& [e, c] = *it;
        std::string mono;
        for (std::size_t k = 0; k < e.size(); ++k) {
            if (e[k] == 0) continue;
            if (!mono.empty()) mono += '*';
            mono += names.at(k);
            if (e[k] > 1) mono += '^' + std::to_string(e[k]);
        }
        BigInt mag = abs_value(c);
        if (c < 0)
            out += '-';
        else if (!first)
            out += '+';
        if (mono.empty())
            out += mag.str();
        else if (mag == 1)
            out += mono;
        else
            out += mag.str() + "*" + mono;
        first = false;
    }
    return out;
}

/// Linear forms print in increasing variable order: "a1+2*a2-d".
inline std::string render_linear(const LinearForm& f, const VariableNames& names) {
    std::string out;
    const auto& c = f.coeffs();
    for (std::size_t k = 0; k < c.size(); ++k) {
        if (c[k] == 0) continue;
        const auto mag = c[k] < 0 ? -c[k] : c[k];
        if (c[k] < 0)
            out += '-';
        else if (!out.empty())
            out += '+';
        if (mag != 1) out += std::to_string(mag) + "*";
        out += names.at(k);
    }
    return out;
}

/// "num / (den)": the numerator includes the integer part of the scalar,
/// the denominator its integer denominator and the linear factors, e.g.
/// "-1 / ((a1)*(a2)*(a1+a2))" or "1 / (6*(x)^2)".
inline std::string render(const FactoredRational& r, const VariableNames& names) {
    if (r.is_zero()) return "0";
    const std::string num = render_poly(r.numerator() * numerator_of(r.scalar()), names);
    std::vector<std::string> parts;
    if (denominator_of(r.scalar()) != 1) parts.push_back(denominator_of(r.scalar()).str());
    const auto& den = r.denominator();
    for (std::size_t k = 0; k < den.size();) {
        std::size_t end = k;
        while (end < den.size() && den[end] == den[k]) ++end;
        std::string f = "(" + render_linear(den[k], names) + ")";
        if (end - k > 1) f += "^" + std::to_string(end - k);
        parts.push_back(f);
        k = end;
    }
    if (parts.empty()) return num;
    const bool compound = r.numerator().terms().size() > 1;
    std::string d;
    for (std::size_t k = 0; k < parts.size(); ++k) d += (k ? "*" : "") + parts[k];
    return (compound ? "(" + num + ")" : num) + " / (" + d + ")";
}

inline nlohmann::json to_json(const MultiPoly& p) {
    nlohmann::json terms = nlohmann::json::array();
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it)
        terms.push_back({{"exponent", it->first}, {"coefficient", it->second.str()}});
    return terms;
}

inline nlohmann::json to_json(const FactoredRational& r) {
    nlohmann::json den = nlohmann::json::array();
    for (const auto& f : r.denominator()) den.push_back(f.coeffs());
    return {{"nvars", r.nvars()},
            {"scalar", {{"num", numerator_of(r.scalar()).str()}, {"den", denominator_of(r.scalar()).str()}}},
            {"numerator", to_json(r.numerator())},
            {"denominator", den}};
}

inline FactoredRational factored_rational_from_json(const nlohmann::json& j) {
    const auto nvars = j.at("nvars").get<std::size_t>();
    Rational scalar = make_rational(BigInt(j.at("scalar").at("num").get<std::string>()),
                                    BigInt(j.at("scalar").at("den").get<std::string>()));
    MultiPoly num(nvars);
    for (const auto& t : j.at("numerator"))
        num.add_term(t.at("exponent").get<Exponent>(), BigInt(t.at("coefficient").get<std::string>()));
    std::vector<LinearForm> den;
    for (const auto& f : j.at("denominator")) {
        auto n = LinearForm::normalize(f.get<RootVector>());
        scalar /= n.factor;
        den.push_back(std::move(n.form));
    }
    return FactoredRational::from_parts(scalar, std::move(num), std::move(den));
}

}  // namespace kumarp
