#pragma once

// Weyl group elements of an arbitrary GCM, represented faithfully by their
// action on the root lattice (Tits representation) together with a
// certified reduced word.

#include "kumarp/cartan.hpp"

#include <algorithm>
#include <compare>
#include <cstdint>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace kumarp {

class WeylError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// Simple-reflection indices, 0-based.
using Word = std::vector<int>;

/// "1,2,1" -> {0,1,0}; the empty string is the identity. Whitespace is
/// ignored.
inline Word parse_word(const std::string& text) {
    Word w;
    std::string token;
    auto flush = [&] {
        if (token.empty()) throw WeylError("empty letter in word \"" + text + "\"");
        int v = 0;
        for (char c : token) {
            if (!std::isdigit(static_cast<unsigned char>(c))) throw WeylError("bad letter in word \"" + text + "\"");
            v = v * 10 + (c - '0');
            if (v > 1000000) throw WeylError("letter too large in word \"" + text + "\"");
        }
        if (v < 1) throw WeylError("letters are 1-based in word \"" + text + "\"");
        w.push_back(v - 1);
        token.clear();
    };
    bool any = false;
    for (char c : text) {
        if (std::isspace(static_cast<unsigned char>(c))) continue;
        any = true;
        if (c == ',')
            flush();
        else
            token.push_back(c);
    }
    if (any) flush();
    return w;
}

inline std::string format_word(const Word& w) {
    std::string s;
    for (std::size_t k = 0; k < w.size(); ++k) {
        if (k) s += ',';
        s += std::to_string(w[k] + 1);
    }
    return s;
}

/// A group element: `matrix` is row-major rank x rank with column j equal to
/// the image of alpha_j; `word` is a reduced word. Equality and ordering
/// look at the matrix only.
struct WeylElement {
    int rank = 0;
    std::vector<std::int64_t> matrix;
    Word word;

    int length() const { return static_cast<int>(word.size()); }
    std::int64_t at(int row, int col) const { return matrix[row * rank + col]; }

    bool operator==(const WeylElement& o) const { return matrix == o.matrix; }
    std::strong_ordering operator<=>(const WeylElement& o) const {
        if (auto c = length() <=> o.length(); c != 0) return c;
        return matrix <=> o.matrix;
    }
};

class WeylGroup {
  public:
    explicit WeylGroup(Gcm gcm) : gcm_(std::move(gcm)) {}

    const Gcm& gcm() const { return gcm_; }
    int rank() const { return gcm_.rank; }

    WeylElement identity() const {
        WeylElement e;
        e.rank = rank();
        e.matrix.assign(static_cast<std::size_t>(rank()) * rank(), 0);
        for (int i = 0; i < rank(); ++i) e.matrix[i * rank() + i] = 1;
        return e;
    }

    /// e(v) for v in the root lattice; trailing coordinates beyond the rank
    /// are fixed.
    RootVector apply(const WeylElement& e, const RootVector& v) const {
        check(e);
        RootVector out = v;
        for (int r = 0; r < rank(); ++r) {
            std::int64_t s = 0;
            for (int c = 0; c < rank(); ++c) s += e.at(r, c) * v[c];
            out[r] = s;
        }
        return out;
    }

    /// e(alpha_i), i.e. column i of the matrix.
    RootVector image_of_simple(const WeylElement& e, int i) const {
        RootVector out(rank());
        for (int r = 0; r < rank(); ++r) out[r] = e.at(r, i);
        return out;
    }

    /// Matrix of e * s_i. The word is left untouched (callers decide).
    void right_multiply_matrix(WeylElement& e, int i) const {
        check_index(i);
        const int n = rank();
        // column_j(e s_i) = e(alpha_j - a_ij alpha_i) = col_j - a_ij col_i
        for (int j = 0; j < n; ++j) {
            const int a = gcm_.matrix[i][j];
            if (a == 0 || j == i) continue;
            for (int r = 0; r < n; ++r) e.matrix[r * n + j] -= a * e.matrix[r * n + i];
        }
        for (int r = 0; r < n; ++r) e.matrix[r * n + i] = -e.matrix[r * n + i];
    }

    bool is_right_descent(const WeylElement& e, int i) const {
        check_index(i);
        return root_sign(image_of_simple(e, i)) < 0;
    }

    std::vector<int> right_descents(const WeylElement& e) const {
        check(e);
        std::vector<int> d;
        for (int i = 0; i < rank(); ++i)
            if (is_right_descent(e, i)) d.push_back(i);
        return d;
    }

    /// e * s_i with a certified reduced word.
    WeylElement multiply_simple(const WeylElement& e, int i) const {
        WeylElement out = e;
        const bool descent = is_right_descent(e, i);
        right_multiply_matrix(out, i);
        if (!descent)
            out.word.push_back(i);
        else
            out.word = canonical_reduced_word(out);
        return out;
    }

    /// Greedy: strip the smallest right descent until the identity remains.
    Word canonical_reduced_word(const WeylElement& e) const {
        check(e);
        WeylElement cur = e;
        Word reversed;
        for (;;) {
            int d = -1;
            for (int i = 0; i < rank(); ++i)
                if (is_right_descent(cur, i)) {
                    d = i;
                    break;
                }
            if (d < 0) break;
            reversed.push_back(d);
            right_multiply_matrix(cur, d);
        }
        return Word(reversed.rbegin(), reversed.rend());
    }

    /// Element of an arbitrary word; the stored word is the input when it is
    /// reduced and the canonical reduced word otherwise.
    WeylElement element_from_word(const Word& w) const {
        WeylElement e = identity();
        for (int i : w) {
            check_index(i);
            right_multiply_matrix(e, i);
        }
        e.word = canonical_reduced_word(e);
        if (e.word.size() == w.size()) e.word = w;
        return e;
    }

    bool is_reduced(const Word& w) const { return element_from_word(w).length() == static_cast<int>(w.size()); }

    struct ReducedWords {
        std::vector<Word> words;
        bool truncated = false;
    };

    /// All reduced words (lexicographically sorted), at most `cap` of them.
    ReducedWords all_reduced_words(const WeylElement& e, std::size_t cap = 100000) const {
        if (cap == 0) throw WeylError("cap must be positive");
        ReducedWords out;
        Word suffix;
        collect_words(e, suffix, cap, out);
        std::sort(out.words.begin(), out.words.end());
        return out;
    }

    /// y <= w in the Bruhat order, via the lifting property on a right
    /// descent of w.
    bool bruhat_leq(const WeylElement& y, const WeylElement& w) const {
        check(y);
        check(w);
        WeylElement a = y, b = w;
        int len_a = y.length(), len_b = w.length();
        for (;;) {
            if (len_a > len_b) return false;
            if (len_b == 0) return len_a == 0;
            int s = 0;
            while (!is_right_descent(b, s)) ++s;
            if (is_right_descent(a, s)) {
                right_multiply_matrix(a, s);
                --len_a;
            }
            right_multiply_matrix(b, s);
            --len_b;
        }
    }

    /// { y : x <= y <= z }, sorted by length then matrix.
    std::vector<WeylElement> bruhat_interval(const WeylElement& x, const WeylElement& z) const {
        if (!bruhat_leq(x, z)) throw WeylError("bruhat_interval: lower bound is not below upper bound");
        std::vector<WeylElement> out;
        for (auto& y : lower_interval(z))
            if (bruhat_leq(x, y)) out.push_back(std::move(y));
        return out;
    }

    /// [e, z] as the set of subword products of a reduced word of z.
    std::vector<WeylElement> lower_interval(const WeylElement& z) const {
        check(z);
        std::set<WeylElement> current{identity()};
        for (int i : z.word) {
            std::set<WeylElement> next = current;
            for (const auto& y : current) next.insert(multiply_simple(y, i));
            current.swap(next);
        }
        return {current.begin(), current.end()};
    }

    /// All elements of length <= max_length (breadth-first by right
    /// multiplication). Works for any GCM.
    std::vector<WeylElement> enumerate_ball(int max_length) const {
        if (max_length < 0) throw WeylError("max length must be non-negative");
        std::vector<WeylElement> out{identity()};
        std::vector<WeylElement> layer{identity()};
        for (int len = 1; len <= max_length && !layer.empty(); ++len) {
            std::set<WeylElement> next;
            for (const auto& e : layer)
                for (int i = 0; i < rank(); ++i)
                    if (!is_right_descent(e, i)) next.insert(multiply_simple(e, i));
            layer.assign(next.begin(), next.end());
            out.insert(out.end(), layer.begin(), layer.end());
        }
        return out;
    }

    /// Whole group; finite type only.
    std::vector<WeylElement> all_elements() const {
        const auto n_pos = positive_roots(gcm_).size();
        return enumerate_ball(static_cast<int>(n_pos));
    }

    /// Minimal-length representatives of W / W_I; finite type only.
    std::vector<WeylElement> minimal_coset_reps(const std::vector<int>& parabolic) const {
        for (int i : parabolic) check_index(i);
        std::vector<WeylElement> out;
        for (auto& e : all_elements()) {
            bool minimal = true;
            for (int i : parabolic) minimal = minimal && !is_right_descent(e, i);
            if (minimal) out.push_back(std::move(e));
        }
        return out;
    }

    WeylElement longest_element() const {
        auto all = all_elements();
        return all.back();
    }

    /// Number of positive roots sent to negative roots; finite type only.
    int inversion_count(const WeylElement& e) const {
        int n = 0;
        for (const auto& b : positive_roots(gcm_))
            if (root_sign(apply(e, b)) < 0) ++n;
        return n;
    }

  private:
    void check_index(int i) const {
        if (i < 0 || i >= rank()) throw WeylError("simple reflection index out of range");
    }
    void check(const WeylElement& e) const {
        if (e.rank != rank() || e.matrix.size() != static_cast<std::size_t>(rank()) * rank())
            throw WeylError("element does not belong to this Weyl group");
    }

    void collect_words(const WeylElement& e, Word& suffix, std::size_t cap, ReducedWords& out) const {
        bool any = false;
        for (int i = 0; i < rank(); ++i) {
            if (!is_right_descent(e, i)) continue;
            any = true;
            WeylElement next = e;
            right_multiply_matrix(next, i);
            suffix.push_back(i);
            collect_words(next, suffix, cap, out);
            suffix.pop_back();
            if (out.truncated) return;
        }
        if (any) return;
        if (out.words.size() >= cap) {
            out.truncated = true;
            return;
        }
        out.words.emplace_back(suffix.rbegin(), suffix.rend());
    }

    Gcm gcm_;
};

}  // namespace kumarp
