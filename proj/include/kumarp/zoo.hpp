#pragma once

// Equivariant multiplicities of small example singularities: Kleinian
// surface singularities, minimal nilpotent orbit closures, and the
// torsion-order consistency table.

#include "kumarp/bigint.hpp"
#include "kumarp/cartan.hpp"
#include "kumarp/polyfrac.hpp"
#include "kumarp/weyl.hpp"

#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace kumarp {

/// (1/d) * sum over fixed points of 1 / prod(tangent weights): the
/// multiplicity at the image of a degree-d proper map with finitely many
/// fixed points over it.
inline FactoredRational pushforward_multiplicity(std::int64_t d, std::size_t nvars,
                                                 const std::vector<std::vector<RootVector>>& fixed_points) {
    if (d < 1) throw std::invalid_argument("degree must be positive");
    auto sum = FactoredRational::zero(nvars);
    for (const auto& weights : fixed_points) {
        if (weights.empty()) throw std::invalid_argument("fixed point without tangent weights");
        sum += FactoredRational::from_weights(nvars, weights);
    }
    return sum.scaled(make_rational(1, d));
}

/// Multiplicity at the unique fixed point over a smooth base point of a
/// degree-d finite map: d / prod(base weights).
inline FactoredRational cover_multiplicity(std::int64_t d, const std::vector<RootVector>& base_weights) {
    if (d < 1) throw std::invalid_argument("degree must be positive");
    if (base_weights.empty()) throw std::invalid_argument("no base weights");
    return FactoredRational::from_weights(base_weights.front().size(), base_weights).scaled(BigInt(d));
}

/// A torsion group Z/(order) in cohomological degree `degree`.
struct TorsionEntry {
    int degree;
    std::uint64_t order;
};

inline BigInt torsion_order(const std::vector<TorsionEntry>& table) {
    BigInt n = 1;
    for (const auto& t : table) n *= t.order;
    return n;
}

struct ZooResult {
    std::string name;
    int dim = 0;
    FactoredRational mult;
    VariableNames names;
    std::optional<BigInt> abs_numerator;  // when the numerator is an integer constant
    std::optional<BigInt> paper_expected;
    std::optional<BigInt> torsion_order_fixture;
};

namespace detail {
inline std::optional<BigInt> abs_constant_numerator(const FactoredRational& r) {
    if (!r.has_constant_numerator() || !r.has_integral_numerator()) return std::nullopt;
    return abs_value(numerator_of(r.scalar()) * r.numerator().constant_term());
}
}  // namespace detail

// Cohomology of the punctured neighbourhoods, as torsion tables.
inline std::vector<TorsionEntry> kleinian_a_torsion(int n) {
    return {{2, static_cast<std::uint64_t>(n + 1)}};
}
inline std::vector<TorsionEntry> minimal_c_torsion(int n) {
    std::vector<TorsionEntry> t;
    for (int k = 2; k <= 4 * n - 2; k += 2) t.push_back({k, 2});
    return t;
}
inline std::vector<TorsionEntry> minimal_g2_torsion() { return {{4, 3}, {6, 2}, {8, 3}}; }
inline std::vector<TorsionEntry> cg2_torsion() { return {{2, 3}, {4, 3}, {6, 3}}; }

/// C^2 / mu_{n+1} embedded as uv = w^{n+1} with weights (e1 + n e2, e2 - e1,
/// e2); projection to (u, v) is finite of degree n+1.
inline ZooResult kleinian_a(int n) {
    if (n < 1) throw std::invalid_argument("Kleinian A_n needs n >= 1");
    ZooResult r;
    r.name = "kleinian-A" + std::to_string(n);
    r.dim = 2;
    r.names = {"e1", "e2"};
    r.mult = cover_multiplicity(n + 1, {{1, n}, {-1, 1}});
    r.abs_numerator = detail::abs_constant_numerator(r.mult);
    r.paper_expected = BigInt(n + 1);
    r.torsion_order_fixture = torsion_order(kleinian_a_torsion(n));
    return r;
}

struct WeightedHypersurface {
    std::string name;
    std::int64_t weights[3];
    std::set<std::uint64_t> non_p_smooth_primes;  // primes dividing the index of connection
};

inline WeightedHypersurface weighted_hypersurface(char family, int n) {
    switch (family) {
        case 'D':
            if (n < 4) break;
            return {"D" + std::to_string(n), {2, n - 2, n - 1}, {2}};
        case 'E':
            if (n == 6) return {"E6", {3, 4, 6}, {3}};
            if (n == 7) return {"E7", {4, 6, 9}, {2}};
            if (n == 8) return {"E8", {6, 10, 15}, {}};
            break;
        default:
            break;
    }
    throw std::invalid_argument("no weighted Kleinian model for type " + std::string(1, family) + std::to_string(n));
}

/// Kleinian D/E singularity with its C^*-action; the projection forgetting
/// the last coordinate is a double cover of C^2.
inline ZooResult weighted_kleinian(char family, int n) {
    const auto h = weighted_hypersurface(family, n);
    ZooResult r;
    r.name = "kleinian-" + h.name;
    r.dim = 2;
    r.names = {"chi"};
    r.mult = cover_multiplicity(2, {{h.weights[0]}, {h.weights[1]}});
    r.abs_numerator = detail::abs_constant_numerator(r.mult);
    return r;
}

/// e_0 of the minimal nilpotent orbit closure, summing over the fixed points
/// of the line bundle G x^P g_highest on G/P. Variables: simple roots, then
/// the scaling character.
inline ZooResult minimal_orbit_multiplicity(const Gcm& gcm) {
    const WeylGroup group(gcm);
    const auto data = highest_root_and_lengths(gcm);
    const auto pos = positive_roots(gcm);
    const int rank = gcm.rank;
    const std::size_t nvars = static_cast<std::size_t>(rank) + 1;
    const std::set<int> levi(data.orthogonal_simple.begin(), data.orthogonal_simple.end());

    std::vector<RootVector> base;  // Phi^+ minus Phi^+ of the Levi
    for (const auto& b : pos) {
        bool inside = true;
        for (int i = 0; i < rank; ++i)
            if (b[i] != 0 && !levi.count(i)) inside = false;
        if (!inside) base.push_back(b);
    }
    RootVector fibre = data.highest_root;
    fibre.push_back(1);
    for (auto& b : base) b.push_back(0);

    auto sum = FactoredRational::zero(nvars);
    for (const auto& w : group.minimal_coset_reps(data.orthogonal_simple)) {
        std::vector<RootVector> weights{group.apply(w, fibre)};
        for (const auto& b : base) weights.push_back(group.apply(w, b));
        sum += FactoredRational::from_weights(nvars, weights);
    }

    ZooResult r;
    r.name = "minimal-orbit-" + (gcm.label.empty() ? gcm_digest(gcm) : gcm.label);
    r.dim = static_cast<int>(base.size()) + 1;
    r.names = default_names(static_cast<std::size_t>(rank), "a");
    r.names.push_back("d");
    r.mult = -sum;
    r.abs_numerator = detail::abs_constant_numerator(r.mult);
    return r;
}

inline ZooResult minimal_orbit_c(int n) {
    auto r = minimal_orbit_multiplicity(builtin_gcm("C", n));
    r.paper_expected = BigInt(1) << (2 * n - 1);
    r.torsion_order_fixture = torsion_order(minimal_c_torsion(n));
    return r;
}

inline ZooResult minimal_orbit_g2() {
    auto r = minimal_orbit_multiplicity(builtin_gcm("G", 2));
    r.paper_expected = BigInt(18);
    r.torsion_order_fixture = torsion_order(minimal_g2_torsion());
    return r;
}

struct ConsistencyRow {
    std::string example;
    BigInt abs_numerator;
    BigInt torsion_order;
    bool computed = true;  // false: both values are literature fixtures
    bool match = false;
};

/// Numerators against the torsion orders of the punctured neighbourhoods.
inline std::vector<ConsistencyRow> consistency_table(int kleinian_n = 5, int c_n = 3) {
    std::vector<ConsistencyRow> rows;
    auto add = [&](const ZooResult& z) {
        ConsistencyRow row{z.name, z.abs_numerator.value_or(0), z.torsion_order_fixture.value_or(0), true, false};
        row.match = z.abs_numerator && z.torsion_order_fixture && *z.abs_numerator == *z.torsion_order_fixture;
        rows.push_back(row);
    };
    add(kleinian_a(kleinian_n));
    add(minimal_orbit_c(c_n));
    add(minimal_orbit_g2());
    // quasi-minimal cg2 slice: 27 / ((a0+a1)(a0+a1+3a2)(2a0+5a1+6a2)(2a0+5a1+9a2))
    const BigInt cg2_numerator = 27;
    const BigInt cg2_order = torsion_order(cg2_torsion());
    rows.push_back({"quasi-minimal-cg2", cg2_numerator, cg2_order, false, cg2_numerator == cg2_order});
    return rows;
}

struct MismatchRow {
    std::string example;
    std::int64_t degree_constant;  // e = 1 / (d chi^2)
    std::set<std::uint64_t> primes_dividing_constant;
    std::set<std::uint64_t> non_p_smooth_primes;
    bool mismatch = false;
};

/// Kleinian D/E singularities, where the torsion-freeness hypothesis fails:
/// the multiplicity constant and the non-p-smooth primes are unrelated.
inline std::vector<MismatchRow> hypothesis_failure_demo(int d_n = 5) {
    std::vector<MismatchRow> rows;
    const std::pair<char, int> cases[] = {{'D', d_n}, {'E', 6}, {'E', 7}, {'E', 8}};
    for (auto [family, n] : cases) {
        const auto h = weighted_hypersurface(family, n);
        const auto z = weighted_kleinian(family, n);
        if (!z.mult.has_constant_numerator()) throw std::logic_error("weighted Kleinian numerator not constant");
        const Rational c = z.mult.scalar() * z.mult.numerator().constant_term();
        if (numerator_of(c) != 1) throw std::logic_error("weighted Kleinian multiplicity is not 1/(d chi^2)");
        MismatchRow row;
        row.example = h.name;
        row.degree_constant = denominator_of(c).convert_to<std::int64_t>();
        row.primes_dividing_constant = prime_divisors(denominator_of(c));
        row.non_p_smooth_primes = h.non_p_smooth_primes;
        row.mismatch = row.primes_dividing_constant != row.non_p_smooth_primes;
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace kumarp
