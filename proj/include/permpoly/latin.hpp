#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "permpoly/error.hpp"
#include "permpoly/groups.hpp"
#include "permpoly/perm.hpp"

namespace permpoly {

struct NotAPermTuple final : Error {
    NotAPermTuple() : Error("some beta_i beta_j^{-1} has a fixed point") {}
};
struct NotLatin final : Error {
    NotLatin() : Error("grid is not a Latin square") {}
};
struct SizeMismatch final : Error {
    SizeMismatch() : Error("squares have different orders") {}
};
struct UnsupportedCase final : Error {
    using Error::Error;
};
struct NotSimpleIntersection final : Error {
    explicit NotSimpleIntersection(int i)
        : Error("h does not intersect beta_" + std::to_string(i) + " simply"), index(i) {}
    int index;
};

/// Ordered q-tuple (beta_0, ..., beta_{q-1}) of degree-q permutations. It
/// corresponds to a bivariate grid exactly when beta_i beta_j^{-1} is
/// fixed-point free for all i != j; is_valid() checks that.
struct PermTuple {
    std::vector<Permutation> betas;

    int q() const { return static_cast<int>(betas.size()); }

    bool is_valid() const {
        const int n = q();
        if (n == 0) return false;
        for (int i = 0; i < n; ++i) {
            if (betas[i].degree() != n) return false;
            for (int j = i + 1; j < n; ++j)
                for (int x = 0; x < n; ++x)
                    if (betas[i](x) == betas[j](x)) return false;
        }
        return true;
    }
};

/// The element sequence of an ordered group, viewed as a tuple.
inline PermTuple group_tuple(const OrderedGroup& g) { return PermTuple{g.elements()}; }

/// A q x q grid of symbols 0..q-1. Construction checks shape and symbol
/// range only; Latin-ness is a separate query so damaged grids can still be
/// loaded and reported on.
class LatinSquare {
  public:
    explicit LatinSquare(std::vector<std::vector<int>> cells) : cells_(std::move(cells)) {
        const int q = static_cast<int>(cells_.size());
        if (q == 0) throw Error("empty grid");
        for (const auto& row : cells_) {
            if (static_cast<int>(row.size()) != q) throw Error("grid is not square");
            for (int v : row)
                if (v < 0 || v >= q) throw Error("symbol out of range");
        }
    }

    int q() const { return static_cast<int>(cells_.size()); }
    int cell(int x, int y) const { return cells_[x][y]; }
    const std::vector<std::vector<int>>& cells() const { return cells_; }

    bool is_latin() const {
        const int n = q();
        for (int x = 0; x < n; ++x) {
            std::vector<char> row(n, 0), col(n, 0);
            for (int y = 0; y < n; ++y) {
                if (row[cells_[x][y]]++) return false;
                if (col[cells_[y][x]]++) return false;
            }
        }
        return true;
    }

    friend bool operator==(const LatinSquare& a, const LatinSquare& b) {
        return a.cells_ == b.cells_;
    }

  private:
    std::vector<std::vector<int>> cells_;
};

/// cells[x][beta_i(x)] = i. Throws NotAPermTuple if any cell would be written
/// twice (equivalently, some beta_i beta_j^{-1} has a fixed point).
inline LatinSquare tuple_to_square(const PermTuple& t) {
    const int q = t.q();
    if (q == 0) throw NotAPermTuple();
    std::vector<std::vector<int>> cells(q, std::vector<int>(q, -1));
    for (int i = 0; i < q; ++i) {
        if (t.betas[i].degree() != q) throw NotAPermTuple();
        for (int x = 0; x < q; ++x) {
            int y = t.betas[i](x);
            if (cells[x][y] != -1) throw NotAPermTuple();
            cells[x][y] = i;
        }
    }
    return LatinSquare(std::move(cells));
}

/// beta_i(x) = the unique y with cells[x][y] = i.
inline PermTuple square_to_tuple(const LatinSquare& s) {
    if (!s.is_latin()) throw NotLatin();
    const int q = s.q();
    std::vector<std::vector<int>> images(q, std::vector<int>(q));
    for (int x = 0; x < q; ++x)
        for (int y = 0; y < q; ++y) images[s.cell(x, y)][x] = y;
    PermTuple t;
    t.betas.reserve(q);
    for (int i = 0; i < q; ++i) t.betas.emplace_back(std::move(images[i]));
    return t;
}

/// True iff the q^2 superimposed pairs are pairwise distinct.
inline bool are_orthogonal(const LatinSquare& s1, const LatinSquare& s2) {
    if (s1.q() != s2.q()) throw SizeMismatch();
    const int q = s1.q();
    std::vector<char> seen(static_cast<std::size_t>(q) * q, 0);
    for (int x = 0; x < q; ++x)
        for (int y = 0; y < q; ++y) {
            std::size_t pair = static_cast<std::size_t>(s1.cell(x, y)) * q + s2.cell(x, y);
            if (seen[pair]++) return false;
        }
    return true;
}

/// True iff the graphs of h and b share exactly one point.
inline bool intersects_simply(const Permutation& h, const Permutation& b) {
    if (h.degree() != b.degree()) throw DegreeMismatch();
    int hits = 0;
    for (int x = 0; x < h.degree(); ++x)
        if (h(x) == b(x) && ++hits > 1) return false;
    return hits == 1;
}

inline bool intersects_lpp_simply(const Permutation& h, const PermTuple& t) {
    for (const auto& b : t.betas)
        if (!intersects_simply(h, b)) return false;
    return true;
}

/// The explicit companion permutation for the digit-shift family: h(c_t) is a
/// word in the generators applied to c_t, with the word's exponents read off
/// the digits of t. Three cases: for odd p the word is the t-th group element
/// itself; for p = 2 the exponents are rotated/mixed combinations of the
/// digits (delta = 1 needs n >= 2, delta = 2 needs n >= 5).
inline Permutation companion_h(const T31Params& prm) {
    prm.validate();
    const int p = prm.p, n = prm.n, delta = prm.delta;
    if (p == 2 && delta == 2 && n < 5)
        throw UnsupportedCase(
            "no closed-form companion for p=2, delta=2, n < 5; "
            "use the orthogonal-mate search instead");

    OrderedGroup g = t31_group(prm);
    const int q = g.q();
    std::vector<int> images(q);
    for (int t = 0; t < q; ++t) {
        const std::vector<int> d = g.exponents_of(t);
        std::vector<int> e(d.size());
        if (p % 2 == 1) {
            e = d;
        } else if (delta == 1) {
            // (t_{n-1}, t_0 + t_{n-1}, t_1, ..., t_{n-2})
            e[0] = d[n - 1];
            e[1] = (d[0] + d[n - 1]) % 2;
            for (int k = 2; k < n; ++k) e[k] = d[k - 1];
        } else {
            // digits: d[0] in Z_4 splits as t00 + 2 t01; d[1..n-2] in Z_2
            const int t00 = d[0] % 2, t01 = d[0] / 2;
            int s1 = 0, s2 = 0;
            for (int k = 1; 2 * k + 1 <= n - 2; ++k) s1 += d[2 * k - 1] + d[2 * k + 1];
            for (int k = 1; 2 * k + 2 <= n - 2; ++k) s2 += d[2 * k] + d[2 * k + 2];
            e[0] = (d[n - 2] + 2 * d[n - 3]) % 4;
            e[1] = ((t00 + s1 - d[1]) % 2 + 2) % 2;
            e[2] = ((t01 + s2 - d[2]) % 2 + 2) % 2;
            for (int k = 3; k <= n - 2; ++k) e[k] = d[k - 2];
        }
        images[t] = g.element(g.index_of_exponents(e))(t);
    }
    return Permutation(std::move(images));
}

/// (h beta_0, ..., h beta_{q-1}); requires h to intersect every beta_i
/// simply, which makes the result's square orthogonal to the original.
inline PermTuple companion_tuple(const PermTuple& t, const Permutation& h) {
    for (int i = 0; i < t.q(); ++i)
        if (!intersects_simply(h, t.betas[i])) throw NotSimpleIntersection(i);
    PermTuple out;
    out.betas.reserve(t.q());
    for (const auto& b : t.betas) out.betas.push_back(compose(h, b));
    return out;
}

/// Outcome of the orthogonal-mate backtracking search. Exhausted is a proof
/// that no mate exists; BudgetExceeded is inconclusive.
struct MateSearchResult {
    enum class Status { Found, Exhausted, BudgetExceeded };
    Status status;
    std::optional<LatinSquare> mate;
    std::uint64_t steps = 0;

    bool found() const { return status == Status::Found; }
};

/// Cell-by-cell backtracking over the pair-coverage constraint: cells are
/// filled row-major, symbols tried in increasing order, so a found mate is
/// the lexicographically first one. A step is one attempted placement.
inline MateSearchResult find_orthogonal_mate(const LatinSquare& s,
                                             std::uint64_t budget = 100'000'000) {
    if (!s.is_latin()) throw NotLatin();
    const int q = s.q();
    std::vector<std::vector<int>> m(q, std::vector<int>(q, -1));
    std::vector<char> row_used(static_cast<std::size_t>(q) * q, 0);
    std::vector<char> col_used(static_cast<std::size_t>(q) * q, 0);
    std::vector<char> pair_used(static_cast<std::size_t>(q) * q, 0);
    std::uint64_t steps = 0;
    bool out_of_budget = false;

    // iterative DFS; cur[pos] is the symbol currently placed at cell pos
    std::vector<int> cur(static_cast<std::size_t>(q) * q, -1);
    int pos = 0;
    while (true) {
        if (pos == q * q) {
            return {MateSearchResult::Status::Found, LatinSquare(std::move(m)), steps};
        }
        const int x = pos / q, y = pos % q;
        int sym = cur[pos] + 1;
        if (cur[pos] != -1) {
            // undo previous placement at this cell before trying the next symbol
            row_used[static_cast<std::size_t>(x) * q + cur[pos]] = 0;
            col_used[static_cast<std::size_t>(y) * q + cur[pos]] = 0;
            pair_used[static_cast<std::size_t>(s.cell(x, y)) * q + cur[pos]] = 0;
            m[x][y] = -1;
            cur[pos] = -1;
        }
        bool placed = false;
        for (; sym < q; ++sym) {
            if (row_used[static_cast<std::size_t>(x) * q + sym] ||
                col_used[static_cast<std::size_t>(y) * q + sym] ||
                pair_used[static_cast<std::size_t>(s.cell(x, y)) * q + sym])
                continue;
            if (++steps > budget) {
                out_of_budget = true;
                break;
            }
            cur[pos] = sym;
            m[x][y] = sym;
            row_used[static_cast<std::size_t>(x) * q + sym] = 1;
            col_used[static_cast<std::size_t>(y) * q + sym] = 1;
            pair_used[static_cast<std::size_t>(s.cell(x, y)) * q + sym] = 1;
            placed = true;
            break;
        }
        if (out_of_budget) return {MateSearchResult::Status::BudgetExceeded, std::nullopt, steps};
        if (placed) {
            ++pos;
        } else {
            if (pos == 0) return {MateSearchResult::Status::Exhausted, std::nullopt, steps};
            --pos;
        }
    }
}

}  // namespace permpoly
