#pragma once

// Generalized Cartan matrices, root-lattice vectors and finite-type root
// combinatorics.
//
// Conventions: indices are 0-based in the API (the text word syntax is
// 1-based), a[i][j] = <alpha_i^vee, alpha_j>, so that
//     s_i(v) = v - (sum_j a[i][j] v[j]) alpha_i,
// and the symmetrized form is (alpha_i, alpha_j) = d[i] a[i][j].

#include "kumarp/bigint.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace kumarp {

class CartanError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// Raised when a finite-type-only operation meets an infinite root system.
class NonFiniteTypeError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Coordinates in the basis of simple roots (zoo examples may append extra
/// coordinates, e.g. the scaling character).
using RootVector = std::vector<std::int64_t>;

using IntMatrix = std::vector<std::vector<int>>;

struct Gcm {
    int rank = 0;
    IntMatrix matrix;
    std::vector<int> symmetrizer;
    std::string label;  // "A2", "G2", "affine-A1", ... or empty for custom input

    int entry(int i, int j) const { return matrix[i][j]; }
    bool operator==(const Gcm& o) const { return matrix == o.matrix; }
};

namespace detail {

inline void check_cartan_axioms(const IntMatrix& a) {
    const auto n = a.size();
    if (n == 0) throw CartanError("Cartan matrix must have positive rank");
    for (const auto& row : a)
        if (row.size() != n) throw CartanError("Cartan matrix must be square");
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i][i] != 2) throw CartanError("Cartan matrix diagonal entries must equal 2");
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            if (a[i][j] > 0) throw CartanError("off-diagonal Cartan entries must be <= 0");
            if ((a[i][j] == 0) != (a[j][i] == 0))
                throw CartanError("Cartan matrix must satisfy a[i][j] = 0 iff a[j][i] = 0");
        }
    }
}

/// Per connected component: propagate d_j = d_i a_ij / a_ji, then clear
/// denominators and make each component primitive.
inline std::vector<int> compute_symmetrizer(const IntMatrix& a) {
    const int n = static_cast<int>(a.size());
    std::vector<std::optional<Rational>> d(n);
    std::vector<int> result(n, 0);
    for (int root = 0; root < n; ++root) {
        if (d[root]) continue;
        std::vector<int> component{root};
        d[root] = Rational(1);
        for (std::size_t k = 0; k < component.size(); ++k) {
            const int i = component[k];
            for (int j = 0; j < n; ++j) {
                if (j == i || a[i][j] == 0) continue;
                Rational dj = *d[i] * a[i][j] / a[j][i];
                if (!d[j]) {
                    d[j] = dj;
                    component.push_back(j);
                } else if (*d[j] != dj) {
                    throw CartanError("Cartan matrix is not symmetrizable");
                }
            }
        }
        BigInt lcm = 1;
        for (int i : component) {
            BigInt den = denominator_of(*d[i]);
            lcm = lcm / gcd(lcm, den) * den;
        }
        BigInt g = 0;
        for (int i : component) g = gcd(g, numerator_of(*d[i] * lcm));
        for (int i : component) result[i] = (numerator_of(*d[i] * lcm) / g).convert_to<int>();
    }
    return result;
}

}  // namespace detail

/// Validates the Cartan axioms and attaches the computed symmetrizer.
inline Gcm make_gcm(IntMatrix matrix, std::string label = {}) {
    detail::check_cartan_axioms(matrix);
    Gcm g;
    g.rank = static_cast<int>(matrix.size());
    g.symmetrizer = detail::compute_symmetrizer(matrix);
    g.matrix = std::move(matrix);
    g.label = std::move(label);
    return g;
}

/// Standard (Bourbaki-numbered) Cartan data. Family letters: A B C D E F G,
/// plus "affine-A1" (n ignored).
inline Gcm builtin_gcm(const std::string& family, int n = 0) {
    if (family == "affine-A1") return make_gcm({{2, -2}, {-2, 2}}, "affine-A1");
    if (family.size() != 1) throw CartanError("unknown Cartan type: " + family);
    const char t = family[0];
    auto chain = [](int r) {
        IntMatrix a(r, std::vector<int>(r, 0));
        for (int i = 0; i < r; ++i) {
            a[i][i] = 2;
            if (i + 1 < r) a[i][i + 1] = a[i + 1][i] = -1;
        }
        return a;
    };
    const std::string label = family + std::to_string(n);
    switch (t) {
        case 'A':
            if (n < 1) break;
            return make_gcm(chain(n), label);
        case 'B': {
            if (n < 1) break;
            auto a = chain(n);
            if (n >= 2) a[n - 1][n - 2] = -2;  // alpha_n short
            return make_gcm(a, label);
        }
        case 'C': {
            if (n < 1) break;
            auto a = chain(n);
            if (n >= 2) a[n - 2][n - 1] = -2;  // alpha_n long
            return make_gcm(a, label);
        }
        case 'D': {
            if (n < 4) break;
            auto a = chain(n);
            a[n - 2][n - 1] = a[n - 1][n - 2] = 0;
            a[n - 3][n - 1] = a[n - 1][n - 3] = -1;
            return make_gcm(a, label);
        }
        case 'E': {
            if (n < 6 || n > 8) break;
            IntMatrix a(n, std::vector<int>(n, 0));
            for (int i = 0; i < n; ++i) a[i][i] = 2;
            auto link = [&](int i, int j) { a[i][j] = a[j][i] = -1; };
            link(0, 2);
            link(1, 3);
            for (int i = 2; i + 1 < n; ++i) link(i, i + 1);
            return make_gcm(a, label);
        }
        case 'F': {
            if (n != 4) break;
            auto a = chain(4);
            a[2][1] = -2;  // alpha_1, alpha_2 long
            return make_gcm(a, label);
        }
        case 'G': {
            if (n != 2) break;
            // alpha_1 short, alpha_2 long
            return make_gcm({{2, -3}, {-1, 2}}, label);
        }
        default:
            throw CartanError("unknown Cartan type: " + family);
    }
    throw CartanError("rank " + std::to_string(n) + " out of range for type " + family);
}

/// Parses tags such as "A3", "G2", "E8" or "affine-A1".
inline Gcm gcm_from_tag(const std::string& tag) {
    if (tag == "affine-A1" || tag == "A1~") return builtin_gcm("affine-A1");
    if (tag.size() < 2 || !std::isalpha(static_cast<unsigned char>(tag[0])))
        throw CartanError("unknown Cartan type tag: " + tag);
    int n = 0;
    for (std::size_t k = 1; k < tag.size(); ++k) {
        if (!std::isdigit(static_cast<unsigned char>(tag[k])))
            throw CartanError("unknown Cartan type tag: " + tag);
        n = n * 10 + (tag[k] - '0');
        if (n > 1000) throw CartanError("rank out of range: " + tag);
    }
    return builtin_gcm(std::string(1, static_cast<char>(std::toupper(tag[0]))), n);
}

/// GCM document: {"rank": 2, "matrix": [2, -2, -2, 2]} (row-major); a nested
/// array of rows is accepted as well.
inline Gcm gcm_from_json(const nlohmann::json& doc) {
    try {
        const int rank = doc.at("rank").get<int>();
        if (rank <= 0) throw CartanError("rank must be positive");
        const auto& m = doc.at("matrix");
        IntMatrix a(rank, std::vector<int>(rank));
        if (m.size() == static_cast<std::size_t>(rank) * rank && !m.empty() && m[0].is_number()) {
            for (int i = 0; i < rank; ++i)
                for (int j = 0; j < rank; ++j) a[i][j] = m[i * rank + j].get<int>();
        } else if (m.size() == static_cast<std::size_t>(rank)) {
            for (int i = 0; i < rank; ++i) {
                if (m[i].size() != static_cast<std::size_t>(rank))
                    throw CartanError("matrix row has wrong length");
                for (int j = 0; j < rank; ++j) a[i][j] = m[i][j].get<int>();
            }
        } else {
            throw CartanError("matrix must have rank*rank entries");
        }
        return make_gcm(std::move(a), doc.value("label", std::string{}));
    } catch (const nlohmann::json::exception& e) {
        throw CartanError(std::string("malformed GCM document: ") + e.what());
    }
}

inline Gcm gcm_from_text(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw CartanError(std::string("malformed GCM document: ") + e.what());
    }
    return gcm_from_json(doc);
}

/// FNV-1a over the matrix entries; stable content key for caches.
inline std::string gcm_digest(const Gcm& g) {
    std::uint64_t h = 1469598103934665603ULL;
    auto mix = [&](std::int64_t v) {
        for (int k = 0; k < 8; ++k) {
            h ^= static_cast<std::uint8_t>(static_cast<std::uint64_t>(v) >> (8 * k));
            h *= 1099511628211ULL;
        }
    };
    mix(g.rank);
    for (const auto& row : g.matrix)
        for (int v : row) mix(v);
    std::ostringstream os;
    os << std::hex;
    os.width(16);
    os.fill('0');
    os << h;
    return os.str();
}

inline RootVector simple_root(const Gcm& g, int i) {
    RootVector v(g.rank, 0);
    v.at(i) = 1;
    return v;
}

/// s_i(v) = v - <alpha_i^vee, v> alpha_i. Extra trailing coordinates of v
/// (beyond the rank) are fixed.
inline RootVector simple_reflection(const Gcm& g, int i, RootVector v) {
    if (i < 0 || i >= g.rank) throw CartanError("simple reflection index out of range");
    if (static_cast<int>(v.size()) < g.rank) throw CartanError("root vector shorter than rank");
    std::int64_t pairing = 0;
    for (int j = 0; j < g.rank; ++j) pairing += static_cast<std::int64_t>(g.matrix[i][j]) * v[j];
    v[i] -= pairing;
    return v;
}

inline std::int64_t inner_product(const Gcm& g, const RootVector& u, const RootVector& v) {
    std::int64_t s = 0;
    for (int i = 0; i < g.rank; ++i)
        for (int j = 0; j < g.rank; ++j)
            s += u[i] * v[j] * g.symmetrizer[i] * g.matrix[i][j];
    return s;
}

/// +1 if all coordinates are >= 0 (and some > 0), -1 if all are <= 0 (and
/// some < 0), 0 otherwise (zero or mixed signs).
inline int root_sign(const RootVector& v) {
    bool pos = false, neg = false;
    for (auto c : v) {
        pos |= c > 0;
        neg |= c < 0;
    }
    if (pos && !neg) return 1;
    if (neg && !pos) return -1;
    return 0;
}

inline std::int64_t height(const RootVector& v) { return std::accumulate(v.begin(), v.end(), std::int64_t{0}); }

namespace detail {
inline bool root_order(const RootVector& a, const RootVector& b) {
    const auto ha = height(a), hb = height(b);
    if (ha != hb) return ha < hb;
    return a < b;
}
}  // namespace detail

/// All positive roots, sorted by height then lexicographically. Closure of
/// the simple roots under simple reflections; a cap detects infinite type.
inline std::vector<RootVector> positive_roots(const Gcm& g, std::size_t cap = 4096) {
    std::set<RootVector> seen;
    std::vector<RootVector> queue;
    for (int i = 0; i < g.rank; ++i) {
        queue.push_back(simple_root(g, i));
        seen.insert(queue.back());
    }
    for (std::size_t k = 0; k < queue.size(); ++k) {
        for (int i = 0; i < g.rank; ++i) {
            RootVector r = simple_reflection(g, i, queue[k]);
            if (root_sign(r) <= 0) continue;  // only -alpha_i leaves the positive cone
            if (seen.insert(r).second) {
                if (seen.size() > cap)
                    throw NonFiniteTypeError("root system is not of finite type (root closure exceeded cap)");
                queue.push_back(std::move(r));
            }
        }
    }
    std::sort(queue.begin(), queue.end(), detail::root_order);
    return queue;
}

struct HighestRootData {
    RootVector highest_root;
    std::vector<RootVector> long_roots;  // positive and negative, maximal length
    std::vector<int> orthogonal_simple;  // { i : (highest, alpha_i) = 0 }
};

inline HighestRootData highest_root_and_lengths(const Gcm& g) {
    const auto pos = positive_roots(g);
    HighestRootData out;
    out.highest_root = pos.back();
    for (const auto& b : pos)
        for (int i = 0; i < g.rank; ++i)
            if (b[i] > out.highest_root[i])
                throw CartanError("no unique highest root (root system is not irreducible)");
    std::int64_t longest = 0;
    for (const auto& b : pos) longest = std::max(longest, inner_product(g, b, b));
    for (const auto& b : pos) {
        if (inner_product(g, b, b) != longest) continue;
        out.long_roots.push_back(b);
        RootVector neg = b;
        for (auto& c : neg) c = -c;
        out.long_roots.push_back(std::move(neg));
    }
    for (int i = 0; i < g.rank; ++i)
        if (inner_product(g, out.highest_root, simple_root(g, i)) == 0) out.orthogonal_simple.push_back(i);
    return out;
}

}  // namespace kumarp
