#pragma once

// Smooth / rationally smooth / p-smooth / Z-smooth classification of the
// torus fixed points of a Schubert variety X_w, read off the numerators of
// the equivariant multiplicities over Bruhat intervals [x, w].

#include "kumarp/bigint.hpp"
#include "kumarp/eqmult.hpp"
#include "kumarp/weyl.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace kumarp {

class CriteriaError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

enum class NumeratorKind { Integer, NonIntegral, NonConstant };

/// What the criteria need to know about f_{y,w}.
struct PointStatus {
    WeylElement y;
    NumeratorKind kind = NumeratorKind::NonConstant;
    BigInt abs_f;  // |f_{y,w}| when kind == Integer

    bool operator==(const PointStatus&) const = default;
};

inline PointStatus status_of(const NumeratorReport& r) {
    if (r.is_zero) throw CriteriaError("zero multiplicity: point is not in the Schubert variety");
    PointStatus s{r.y, NumeratorKind::NonConstant, 0};
    if (r.is_constant) {
        s.kind = r.is_integral ? NumeratorKind::Integer : NumeratorKind::NonIntegral;
        if (r.abs_f) s.abs_f = *r.abs_f;
    }
    return s;
}

struct LocusPoint {
    PointStatus status;
    bool rationally_smooth = false;
    bool smooth = false;
    bool z_smooth = false;
    std::map<std::uint64_t, bool> p_smooth;
    std::optional<std::set<std::uint64_t>> torsion_primes;  // only where rationally smooth
};

struct LocusReport {
    WeylElement w;
    std::vector<LocusPoint> points;
};

/// Classifier over a completed table of numerators for [e, w].
class SchubertLocus {
  public:
    SchubertLocus(WeylGroup group, const MultiplicityTable& table) : group_(std::move(group)), w_(table.w()) {
        for (const auto& r : table.reports()) points_.push_back(status_of(r));
    }

    SchubertLocus(WeylGroup group, WeylElement w, std::vector<PointStatus> points)
        : group_(std::move(group)), w_(std::move(w)), points_(std::move(points)) {}

    const WeylElement& w() const { return w_; }
    const std::vector<PointStatus>& points() const { return points_; }

    /// Statuses of all y in [x, w].
    std::vector<const PointStatus*> interval(const WeylElement& x) const {
        if (!group_.bruhat_leq(x, w_)) throw CriteriaError("point is not in the Schubert variety (x not <= w)");
        std::vector<const PointStatus*> out;
        for (const auto& s : points_)
            if (group_.bruhat_leq(x, s.y)) out.push_back(&s);
        return out;
    }

    /// Every f_{y,w}, y in [x, w], is an integer not divisible by p.
    bool p_smooth_at(const WeylElement& x, std::uint64_t p) const {
        if (!is_prime(p)) throw CriteriaError(std::to_string(p) + " is not prime");
        for (const auto* s : interval(x))
            if (s->kind != NumeratorKind::Integer || s->abs_f % p == 0) return false;
        return true;
    }

    /// Every f_{y,w}, y in [x, w], is constant.
    bool rationally_smooth_at(const WeylElement& x) const {
        for (const auto* s : interval(x))
            if (s->kind == NumeratorKind::NonConstant) return false;
        return true;
    }

    /// Every f_{y,w}, y in [x, w], is a unit.
    bool smooth_at(const WeylElement& x) const {
        for (const auto* s : interval(x))
            if (s->kind != NumeratorKind::Integer || s->abs_f != 1) return false;
        return true;
    }

    /// The smooth and Z-smooth loci of Schubert varieties coincide, so this
    /// is smooth_at; kept separate so the identity stays a checked property.
    bool z_smooth_at(const WeylElement& x) const { return smooth_at(x); }

    /// Point-only variants: look at f_{x,w} alone.
    bool smooth_at_pointwise(const WeylElement& x) const {
        const auto& s = status(x);
        return s.kind == NumeratorKind::Integer && s.abs_f == 1;
    }
    bool rationally_smooth_at_pointwise(const WeylElement& x) const {
        return status(x).kind != NumeratorKind::NonConstant;
    }

    /// Primes dividing some f_{y,w} over [x, w]; requires rational
    /// smoothness at x.
    std::set<std::uint64_t> torsion_primes(const WeylElement& x) const {
        std::set<std::uint64_t> out;
        for (const auto* s : interval(x)) {
            if (s->kind == NumeratorKind::NonConstant)
                throw CriteriaError("torsion primes need a rationally smooth point");
            if (s->kind == NumeratorKind::NonIntegral)
                throw CriteriaError("torsion primes undefined for a non-integral numerator");
            auto ps = prime_divisors(s->abs_f);
            out.insert(ps.begin(), ps.end());
        }
        return out;
    }

    const PointStatus& status(const WeylElement& y) const {
        for (const auto& s : points_)
            if (s.y == y) return s;
        throw CriteriaError("point is not in the Schubert variety");
    }

    LocusReport report(const std::vector<std::uint64_t>& primes) const {
        LocusReport out{w_, {}};
        for (const auto& s : points_) {
            LocusPoint pt;
            pt.status = s;
            pt.rationally_smooth = rationally_smooth_at(s.y);
            pt.smooth = smooth_at(s.y);
            pt.z_smooth = z_smooth_at(s.y);
            for (auto p : primes) pt.p_smooth[p] = p_smooth_at(s.y, p);
            if (pt.rationally_smooth && all_integral(s.y)) pt.torsion_primes = torsion_primes(s.y);
            out.points.push_back(std::move(pt));
        }
        return out;
    }

  private:
    bool all_integral(const WeylElement& x) const {
        for (const auto* s : interval(x))
            if (s->kind != NumeratorKind::Integer) return false;
        return true;
    }

    WeylGroup group_;
    WeylElement w_;
    std::vector<PointStatus> points_;
};

/// Violations of smooth => Z-smooth => p-smooth => rationally smooth and of
/// smooth <=> Z-smooth; empty when consistent.
inline std::vector<std::string> chain_violations(const LocusReport& report) {
    std::vector<std::string> out;
    for (const auto& pt : report.points) {
        const std::string where = "y=" + format_word(pt.status.y.word) + " w=" + format_word(report.w.word);
        if (pt.smooth != pt.z_smooth) out.push_back(where + ": smooth != Z-smooth");
        for (const auto& [p, ok] : pt.p_smooth) {
            if (pt.z_smooth && !ok) out.push_back(where + ": Z-smooth but not " + std::to_string(p) + "-smooth");
            if (ok && !pt.rationally_smooth)
                out.push_back(where + ": " + std::to_string(p) + "-smooth but not rationally smooth");
        }
        if (pt.smooth && !pt.rationally_smooth) out.push_back(where + ": smooth but not rationally smooth");
        if (pt.torsion_primes)
            for (const auto& [p, ok] : pt.p_smooth)
                if (ok == (pt.torsion_primes->count(p) != 0))
                    out.push_back(where + ": torsion primes disagree with " + std::to_string(p) + "-smoothness");
    }
    return out;
}

/// Coefficients of sum_{y in [x, w]} q^{l(y) - l(x)}.
inline std::vector<int> rank_generating_function(const WeylGroup& group, const WeylElement& x,
                                                 const WeylElement& w) {
    std::vector<int> coeffs(w.length() - x.length() + 1, 0);
    for (const auto& y : group.bruhat_interval(x, w)) ++coeffs[y.length() - x.length()];
    return coeffs;
}

inline bool is_palindromic(const std::vector<int>& c) { return std::equal(c.begin(), c.end(), c.rbegin()); }

/// Rank symmetry of the single interval [x, w].
inline bool interval_is_rank_symmetric(const WeylGroup& group, const WeylElement& x, const WeylElement& w) {
    return is_palindromic(rank_generating_function(group, x, w));
}

/// True iff e is a reflection: an involution whose fixed space is a hyperplane,
/// i.e. e != 1, e^2 = 1 and rank(e - I) = 1.
inline bool is_reflection(const WeylElement& e) {
    const int n = e.rank;
    auto m = [&](int i, int j) { return e.at(i, j) - (i == j ? 1 : 0); };
    bool nonzero = false;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (m(i, j) != 0) nonzero = true;
            std::int64_t sq = 0;
            for (int k = 0; k < n; ++k) sq += e.at(i, k) * e.at(k, j);
            if (sq != (i == j ? 1 : 0)) return false;
        }
    if (!nonzero) return false;
    for (int i = 0; i < n; ++i)
        for (int k = i + 1; k < n; ++k)
            for (int j = 0; j < n; ++j)
                for (int l = j + 1; l < n; ++l)
                    if (m(i, j) * m(k, l) != m(i, l) * m(k, j)) return false;
    return true;
}

/// Degree of u in the Bruhat graph on [e, w]: the number of v <= w with
/// u^{-1} v a reflection. Deodhar's inequality says this is at least l(w).
inline int bruhat_graph_degree(const WeylGroup& group, const WeylElement& u, const std::vector<WeylElement>& lower) {
    Word inv(u.word.rbegin(), u.word.rend());
    int deg = 0;
    for (const auto& v : lower) {
        Word prod = inv;
        prod.insert(prod.end(), v.word.begin(), v.word.end());
        if (is_reflection(group.element_from_word(prod))) ++deg;
    }
    return deg;
}

/// Carrell-Peterson rational smoothness test, independent of any
/// multiplicity computation: X_w is rationally smooth at x iff the Bruhat
/// graph on [e, w] is regular of degree l(w) at every u in [x, w].
/// At x = e this is equivalent to interval_is_rank_symmetric(e, w); for
/// other x the single interval [x, w] is not enough (A3, x = s2,
/// w = s2 s1 s3 s2 is rank-symmetric but singular).
inline bool palindromicity_oracle(const WeylGroup& group, const WeylElement& x, const WeylElement& w) {
    const auto upper = group.bruhat_interval(x, w);
    const auto lower = group.lower_interval(w);
    for (const auto& u : upper)
        if (bruhat_graph_degree(group, u, lower) != w.length()) return false;
    return true;
}

}  // namespace kumarp
