#pragma once

// Equivariant multiplicities of Schubert varieties at torus fixed points,
// computed by pushing forward along a Bott-Samelson resolution.
//
// For a reduced word (i_1, ..., i_N) of w the fixed points of the
// resolution are the masks eps in {0,1}^N; the mask lies over
// y = s_{i_1}^{eps_1} ... s_{i_N}^{eps_N}, it is a smooth point with tangent
// weights -sigma_j(alpha_{i_j}) (sigma_j the prefix product through j), and
// the map is birational, so
//     e_y X_w = sum over masks over y of 1 / prod(weights).

#include "kumarp/bigint.hpp"
#include "kumarp/polyfrac.hpp"
#include "kumarp/weyl.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

namespace kumarp {

/// Raised when a request exceeds the supported size (word length cap).
class ResourceCapError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

inline constexpr int kMaxSchubertLength = 24;

using Mask = std::vector<bool>;

struct NumeratorReport {
    WeylElement y;
    WeylElement w;
    FactoredRational value;
    MultiPoly f;                         // primitive, sign-normalized
    Rational f_scalar;                   // value = f_scalar * f / prod(den_factors)
    std::vector<LinearForm> den_factors;
    bool is_zero = false;
    bool is_constant = false;
    bool is_integral = false;
    std::optional<BigInt> abs_f;  // set when constant and integral
};

inline NumeratorReport make_report(WeylElement y, WeylElement w, FactoredRational value) {
    NumeratorReport r;
    r.y = std::move(y);
    r.w = std::move(w);
    r.is_zero = value.is_zero();
    r.f = value.numerator();
    r.f_scalar = value.scalar();
    r.den_factors = value.denominator();
    r.is_constant = value.has_constant_numerator();
    r.is_integral = value.has_integral_numerator();
    if (r.is_constant && r.is_integral)
        r.abs_f = abs_value(numerator_of(value.scalar()) * value.numerator().constant_term());
    r.value = std::move(value);
    return r;
}

namespace detail {

inline void check_word(const WeylGroup& group, const Word& word) {
    for (int i : word)
        if (i < 0 || i >= group.rank()) throw WeylError("word letter out of range");
    if (static_cast<int>(word.size()) > kMaxSchubertLength)
        throw ResourceCapError("word length " + std::to_string(word.size()) + " exceeds the cap of " +
                               std::to_string(kMaxSchubertLength));
}

/// Visits every mask with its endpoint matrix and tangent weights.
template <class Visit>
void sweep_masks(const WeylGroup& group, const Word& word, Visit&& visit) {
    const std::size_t n = word.size();
    Mask mask(n);
    std::vector<RootVector> weights(n);
    std::vector<WeylElement> prefix(n + 1);
    prefix[0] = group.identity();
    std::function<void(std::size_t)> rec = [&](std::size_t j) {
        if (j == n) {
            visit(static_cast<const Mask&>(mask), prefix[n], static_cast<const std::vector<RootVector>&>(weights));
            return;
        }
        const int letter = word[j];
        for (int eps = 0; eps < 2; ++eps) {
            mask[j] = eps == 1;
            prefix[j + 1] = prefix[j];
            if (eps) group.right_multiply_matrix(prefix[j + 1], letter);
            RootVector wt = group.image_of_simple(prefix[j + 1], letter);
            for (auto& c : wt) c = -c;
            weights[j] = std::move(wt);
            rec(j + 1);
        }
    };
    rec(0);
}

}  // namespace detail

/// Masks whose product of selected reflections equals y.
inline std::vector<Mask> bs_fixed_points(const WeylGroup& group, const Word& word, const WeylElement& y) {
    detail::check_word(group, word);
    std::vector<Mask> out;
    detail::sweep_masks(group, word, [&](const Mask& m, const WeylElement& end, const auto&) {
        if (end.matrix == y.matrix) out.push_back(m);
    });
    return out;
}

/// Tangent weights of the Bott-Samelson resolution at the mask.
inline std::vector<RootVector> bs_tangent_weights(const WeylGroup& group, const Word& word, const Mask& mask) {
    if (mask.size() != word.size()) throw WeylError("mask length does not match word length");
    WeylElement sigma = group.identity();
    std::vector<RootVector> out;
    for (std::size_t j = 0; j < word.size(); ++j) {
        if (mask[j]) group.right_multiply_matrix(sigma, word[j]);
        RootVector wt = group.image_of_simple(sigma, word[j]);
        for (auto& c : wt) c = -c;
        out.push_back(std::move(wt));
    }
    return out;
}

/// e_y X_w for the Schubert variety of the element with reduced word `word`.
inline FactoredRational equivariant_multiplicity(const WeylGroup& group, const Word& word, const WeylElement& y) {
    detail::check_word(group, word);
    if (!group.is_reduced(word)) throw WeylError("word " + format_word(word) + " is not reduced");
    auto total = FactoredRational::zero(group.rank());
    detail::sweep_masks(group, word, [&](const Mask&, const WeylElement& end, const std::vector<RootVector>& wts) {
        if (end.matrix == y.matrix)
            total += FactoredRational::from_weights(group.rank(), wts);
    });
    return total;
}

inline NumeratorReport numerator(const WeylGroup& group, const Word& word, const WeylElement& y) {
    auto value = equivariant_multiplicity(group, word, y);
    return make_report(y, group.element_from_word(word), std::move(value));
}

/// Reports for every y in [e, w], from one sweep over all masks of a
/// reduced word of w.
class MultiplicityTable {
  public:
    MultiplicityTable(const WeylGroup& group, const WeylElement& w) : MultiplicityTable(group, w, w.word) {}

    /// Uses the given reduced word of w for the resolution.
    MultiplicityTable(const WeylGroup& group, const WeylElement& w, const Word& word) : w_(w) {
        detail::check_word(group, word);
        if (group.element_from_word(word) != w) throw WeylError("word does not represent w");
        if (!group.is_reduced(word)) throw WeylError("word " + format_word(word) + " is not reduced");
        std::map<std::vector<std::int64_t>, FactoredRational> buckets;
        detail::sweep_masks(group, word, [&](const Mask&, const WeylElement& end, const std::vector<RootVector>& wts) {
            auto term = FactoredRational::from_weights(group.rank(), wts);
            auto [it, inserted] = buckets.try_emplace(end.matrix, term);
            if (!inserted) it->second += term;
        });
        for (auto& y : group.lower_interval(w)) {
            auto it = buckets.find(y.matrix);
            auto value = it == buckets.end() ? FactoredRational::zero(group.rank()) : it->second;
            index_.emplace(y.matrix, reports_.size());
            reports_.push_back(make_report(std::move(y), w, std::move(value)));
        }
    }

    const WeylElement& w() const { return w_; }
    /// Sorted by length of y, then matrix.
    const std::vector<NumeratorReport>& reports() const { return reports_; }

    /// The report at y; a zero report when y is not below w.
    NumeratorReport at(const WeylElement& y) const {
        auto it = index_.find(y.matrix);
        if (it != index_.end()) return reports_[it->second];
        return make_report(y, w_, FactoredRational::zero(y.rank));
    }
    bool contains(const WeylElement& y) const { return index_.count(y.matrix) != 0; }

  private:
    WeylElement w_;
    std::vector<NumeratorReport> reports_;
    std::map<std::vector<std::int64_t>, std::size_t> index_;
};

inline MultiplicityTable multiplicity_table(const WeylGroup& group, const WeylElement& w) {
    return MultiplicityTable(group, w);
}

}  // namespace kumarp
