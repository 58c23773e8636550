#pragma once

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "permpoly/error.hpp"

namespace permpoly {

struct DegreeMismatch final : Error {
    DegreeMismatch() : Error("permutations act on sets of different sizes") {}
};
struct OverlappingCycles final : Error {
    OverlappingCycles() : Error("cycles are not pairwise disjoint") {}
};
struct IndexOutOfRange final : Error {
    explicit IndexOutOfRange(int x) : Error("index out of range: " + std::to_string(x)) {}
};
struct NotABijection final : Error {
    NotABijection() : Error("image table is not a bijection") {}
};

/// A permutation of {0, ..., q-1}, stored as a dense image table so that
/// application is O(1). Immutable value type.
class Permutation {
  public:
    explicit Permutation(std::vector<int> images) : images_(std::move(images)) {
        const int q = static_cast<int>(images_.size());
        std::vector<char> seen(q, 0);
        for (int y : images_) {
            if (y < 0 || y >= q || seen[y]) throw NotABijection();
            seen[y] = 1;
        }
    }

    static Permutation identity(int q) {
        std::vector<int> img(q);
        std::iota(img.begin(), img.end(), 0);
        return Permutation(std::move(img));
    }

    /// Product of disjoint cycles given as index sequences; points not
    /// mentioned are fixed.
    static Permutation from_cycles(int q, const std::vector<std::vector<int>>& cycles) {
        std::vector<int> img(q);
        std::iota(img.begin(), img.end(), 0);
        std::vector<char> used(q, 0);
        for (const auto& c : cycles) {
            for (int x : c) {
                if (x < 0 || x >= q) throw IndexOutOfRange(x);
                if (used[x]) throw OverlappingCycles();
                used[x] = 1;
            }
            for (std::size_t i = 0; i < c.size(); ++i) img[c[i]] = c[(i + 1) % c.size()];
        }
        return Permutation(std::move(img));
    }

    int degree() const { return static_cast<int>(images_.size()); }
    int operator()(int x) const { return images_[x]; }
    const std::vector<int>& images() const { return images_; }

    bool is_identity() const {
        for (int x = 0; x < degree(); ++x)
            if (images_[x] != x) return false;
        return true;
    }

    Permutation inverse() const {
        std::vector<int> inv(images_.size());
        for (int x = 0; x < degree(); ++x) inv[images_[x]] = x;
        return Permutation(std::move(inv));
    }

    /// f^k for any integer k; each cycle is rotated by k mod its length, so
    /// negative and huge exponents cost the same as small ones.
    Permutation power(long long k) const {
        const int q = degree();
        std::vector<int> img(q);
        std::vector<char> seen(q, 0);
        for (int s = 0; s < q; ++s) {
            if (seen[s]) continue;
            std::vector<int> cyc;
            for (int x = s; !seen[x]; x = images_[x]) {
                seen[x] = 1;
                cyc.push_back(x);
            }
            const long long len = static_cast<long long>(cyc.size());
            const long long shift = ((k % len) + len) % len;
            for (std::size_t i = 0; i < cyc.size(); ++i)
                img[cyc[i]] = cyc[(i + shift) % cyc.size()];
        }
        return Permutation(std::move(img));
    }

    std::vector<int> fixed_points() const {
        std::vector<int> fp;
        for (int x = 0; x < degree(); ++x)
            if (images_[x] == x) fp.push_back(x);
        return fp;
    }

    bool has_fixed_point() const {
        for (int x = 0; x < degree(); ++x)
            if (images_[x] == x) return true;
        return false;
    }

    /// Nontrivial cycles, each starting at its smallest point, ordered by
    /// that point.
    std::vector<std::vector<int>> cycles() const {
        const int q = degree();
        std::vector<std::vector<int>> out;
        std::vector<char> seen(q, 0);
        for (int s = 0; s < q; ++s) {
            if (seen[s] || images_[s] == s) {
                seen[s] = 1;
                continue;
            }
            std::vector<int> cyc;
            for (int x = s; !seen[x]; x = images_[x]) {
                seen[x] = 1;
                cyc.push_back(x);
            }
            out.push_back(std::move(cyc));
        }
        return out;
    }

    /// lcm of cycle lengths.
    unsigned long long order() const {
        unsigned long long ord = 1;
        std::vector<char> seen(degree(), 0);
        for (int s = 0; s < degree(); ++s) {
            if (seen[s]) continue;
            unsigned long long len = 0;
            for (int x = s; !seen[x]; x = images_[x]) {
                seen[x] = 1;
                ++len;
            }
            ord = std::lcm(ord, len);
        }
        return ord;
    }

    /// Multiset of cycle lengths including fixed points, ascending.
    std::vector<int> cycle_type() const {
        std::vector<int> type;
        std::vector<char> seen(degree(), 0);
        for (int s = 0; s < degree(); ++s) {
            if (seen[s]) continue;
            int len = 0;
            for (int x = s; !seen[x]; x = images_[x]) {
                seen[x] = 1;
                ++len;
            }
            type.push_back(len);
        }
        std::sort(type.begin(), type.end());
        return type;
    }

    /// Disjoint-cycle notation with indices, e.g. "(0 1)(2 3)"; "()" for the
    /// identity.
    std::string cycle_string() const {
        auto cs = cycles();
        if (cs.empty()) return "()";
        std::string out;
        for (const auto& c : cs) {
            out += '(';
            for (std::size_t i = 0; i < c.size(); ++i) {
                if (i) out += ' ';
                out += std::to_string(c[i]);
            }
            out += ')';
        }
        return out;
    }

    friend bool operator==(const Permutation& a, const Permutation& b) {
        return a.images_ == b.images_;
    }
    friend auto operator<=>(const Permutation& a, const Permutation& b) {
        return a.images_ <=> b.images_;
    }

  private:
    std::vector<int> images_;
};

/// (f . g)(x) = f(g(x)); applied right to left.
inline Permutation compose(const Permutation& f, const Permutation& g) {
    if (f.degree() != g.degree()) throw DegreeMismatch();
    std::vector<int> img(f.degree());
    for (int x = 0; x < f.degree(); ++x) img[x] = f(g(x));
    return Permutation(std::move(img));
}

inline Permutation power(const Permutation& f, long long k) { return f.power(k); }

/// s f s^{-1}.
inline Permutation conjugate(const Permutation& s, const Permutation& f) {
    if (s.degree() != f.degree()) throw DegreeMismatch();
    std::vector<int> img(s.degree());
    for (int x = 0; x < s.degree(); ++x) img[s(x)] = s(f(x));
    return Permutation(std::move(img));
}

inline std::vector<int> fixed_points(const Permutation& f) { return f.fixed_points(); }

}  // namespace permpoly
