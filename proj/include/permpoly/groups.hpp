#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "permpoly/error.hpp"
#include "permpoly/field.hpp"
#include "permpoly/perm.hpp"

namespace permpoly {

struct InvalidParams final : Error {
    using Error::Error;
};
struct NonCommutingGenerators final : Error {
    NonCommutingGenerators() : Error("generators do not commute pairwise") {}
};
struct DegenerateGroup final : Error {
    DegenerateGroup() : Error("generator products are not pairwise distinct") {}
};
struct NotAbelian final : Error {
    NotAbelian() : Error("group is not abelian") {}
};

/// Parameters of the q = p^n family generated by the digit-shift permutations
/// a_0, ..., a_{n-delta}: a_0 steps the low base-p^delta digit, a_i steps
/// digit i. CLI family tag: "t31".
struct T31Params {
    int p;
    int n;
    int delta;

    void validate() const {
        if (!is_prime(p)) throw InvalidParams("p must be prime");
        if (delta != 1 && delta != 2) throw InvalidParams("delta must be 1 or 2");
        if (n < 2) throw InvalidParams("n must be at least 2");
        if (n < delta) throw InvalidParams("n must be at least delta");
        long long q = 1;
        for (int i = 0; i < n; ++i) {
            q *= p;
            if (q > Field::max_q) throw InvalidParams("p^n exceeds 2^16");
        }
    }

    int q() const {
        int r = 1;
        for (int i = 0; i < n; ++i) r *= p;
        return r;
    }
};

/// Parameters of the block-cycle pair family: a is t = q/l disjoint l-cycles
/// on consecutive blocks, b is l disjoint t-cycles with stride l, l = p^e.
/// CLI family tag: "klenian".
struct KlenianParams {
    int p;
    int n;
    int e;

    void validate() const {
        if (!is_prime(p)) throw InvalidParams("p must be prime");
        if (n < 1) throw InvalidParams("n must be at least 1");
        if (e < 0 || e >= n) throw InvalidParams("e must satisfy 0 <= e < n");
        long long q = 1;
        for (int i = 0; i < n; ++i) {
            q *= p;
            if (q > Field::max_q) throw InvalidParams("p^n exceeds 2^16");
        }
    }

    int q() const {
        int r = 1;
        for (int i = 0; i < n; ++i) r *= p;
        return r;
    }
    int ell() const {
        int r = 1;
        for (int i = 0; i < e; ++i) r *= p;
        return r;
    }
    int t() const { return q() / ell(); }
};

inline int ipow(int b, int e) {
    int r = 1;
    while (e-- > 0) r *= b;
    return r;
}

/// [a_0, a_1, ..., a_{n-delta}] acting on indices 0..q-1.
inline std::vector<Permutation> t31_generators(const T31Params& prm) {
    prm.validate();
    const int p = prm.p, n = prm.n, delta = prm.delta, q = prm.q();
    std::vector<Permutation> gens;
    gens.reserve(n - delta + 1);
    {
        const int pd = ipow(p, delta);
        std::vector<std::vector<int>> cycles;
        for (int j = 0; j < q / pd; ++j) {
            std::vector<int> c(pd);
            for (int r = 0; r < pd; ++r) c[r] = j * pd + r;
            cycles.push_back(std::move(c));
        }
        gens.push_back(Permutation::from_cycles(q, cycles));
    }
    for (int i = 1; i <= n - delta; ++i) {
        const int step = ipow(p, i + delta - 1);
        const int mod = step * p;
        std::vector<std::vector<int>> cycles;
        for (int j = 0; j < q; ++j) {
            if (j % mod >= step) continue;
            std::vector<int> c(p);
            for (int r = 0; r < p; ++r) c[r] = j + r * step;
            cycles.push_back(std::move(c));
        }
        gens.push_back(Permutation::from_cycles(q, cycles));
    }
    return gens;
}

inline std::pair<Permutation, Permutation> klenian_generators(const KlenianParams& prm) {
    prm.validate();
    const int q = prm.q(), l = prm.ell(), t = prm.t();
    std::vector<std::vector<int>> ca, cb;
    for (int i = 0; i < t; ++i) {
        std::vector<int> c(l);
        for (int r = 0; r < l; ++r) c[r] = i * l + r;
        ca.push_back(std::move(c));
    }
    for (int j = 0; j < l; ++j) {
        std::vector<int> c(t);
        for (int r = 0; r < t; ++r) c[r] = j + r * l;
        cb.push_back(std::move(c));
    }
    return {Permutation::from_cycles(q, ca), Permutation::from_cycles(q, cb)};
}

/// An order-q sequence of commuting permutations indexed by mixed-radix
/// exponent tuples: elements[t] = prod_k gens[k]^{d_k} where (d_0, d_1, ...)
/// are the digits of t with the given bounds, d_0 least significant.
class OrderedGroup {
  public:
    static OrderedGroup enumerate(std::vector<Permutation> gens, std::vector<int> bounds) {
        if (gens.empty() || gens.size() != bounds.size())
            throw InvalidParams("one exponent bound per generator required");
        const int q = gens[0].degree();
        long long prod = 1;
        for (int b : bounds) {
            if (b < 1) throw InvalidParams("bounds must be positive");
            prod *= b;
        }
        if (prod != q) throw InvalidParams("product of bounds must equal the degree");
        for (std::size_t i = 0; i < gens.size(); ++i)
            for (std::size_t j = i + 1; j < gens.size(); ++j)
                if (compose(gens[i], gens[j]) != compose(gens[j], gens[i]))
                    throw NonCommutingGenerators();

        std::vector<Permutation> elems;
        elems.reserve(q);
        // powers[k][d] = gens[k]^d
        std::vector<std::vector<Permutation>> powers(gens.size());
        for (std::size_t k = 0; k < gens.size(); ++k) {
            powers[k].push_back(Permutation::identity(q));
            for (int d = 1; d < bounds[k]; ++d)
                powers[k].push_back(compose(gens[k], powers[k].back()));
        }
        for (int t = 0; t < q; ++t) {
            int tt = t;
            Permutation e = Permutation::identity(q);
            for (std::size_t k = 0; k < gens.size(); ++k) {
                const int d = tt % bounds[k];
                tt /= bounds[k];
                if (d) e = compose(e, powers[k][d]);
            }
            elems.push_back(std::move(e));
        }
        std::map<std::vector<int>, int> index;
        for (int t = 0; t < q; ++t)
            if (!index.emplace(elems[t].images(), t).second) throw DegenerateGroup();
        return OrderedGroup(q, std::move(gens), std::move(bounds), std::move(elems),
                            std::move(index));
    }

    int q() const { return q_; }
    const std::vector<Permutation>& gens() const { return gens_; }
    const std::vector<int>& bounds() const { return bounds_; }
    const std::vector<Permutation>& elements() const { return elements_; }
    const Permutation& element(int t) const { return elements_[t]; }

    /// Digits of t in the mixed-radix system of the bounds, least significant
    /// first.
    std::vector<int> exponents_of(int t) const {
        std::vector<int> d(bounds_.size());
        for (std::size_t k = 0; k < bounds_.size(); ++k) {
            d[k] = t % bounds_[k];
            t /= bounds_[k];
        }
        return d;
    }

    int index_of_exponents(const std::vector<int>& d) const {
        int t = 0;
        for (std::size_t k = bounds_.size(); k-- > 0;) t = t * bounds_[k] + d[k];
        return t;
    }

    /// Position of a permutation in the element order, if it is a member.
    std::optional<int> index_of(const Permutation& f) const {
        auto it = index_.find(f.images());
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }
    bool contains(const Permutation& f) const { return index_.count(f.images()) != 0; }

  private:
    OrderedGroup(int q, std::vector<Permutation> gens, std::vector<int> bounds,
                 std::vector<Permutation> elems, std::map<std::vector<int>, int> index)
        : q_(q),
          gens_(std::move(gens)),
          bounds_(std::move(bounds)),
          elements_(std::move(elems)),
          index_(std::move(index)) {}

    int q_;
    std::vector<Permutation> gens_;
    std::vector<int> bounds_;
    std::vector<Permutation> elements_;
    std::map<std::vector<int>, int> index_;
};

inline OrderedGroup t31_group(const T31Params& prm) {
    std::vector<int> bounds{ipow(prm.p, prm.delta)};
    for (int i = 1; i <= prm.n - prm.delta; ++i) bounds.push_back(prm.p);
    return OrderedGroup::enumerate(t31_generators(prm), std::move(bounds));
}

/// Element order: index t = s + r * p^e holds a^s b^r.
inline OrderedGroup klenian_group(const KlenianParams& prm) {
    auto [a, b] = klenian_generators(prm);
    return OrderedGroup::enumerate({a, b}, {prm.ell(), prm.t()});
}

/// Literal checks of the properties that make an ordered tuple of
/// permutations the group of a permutation group polynomial. Reports,
/// never throws.
struct ValidationReport {
    bool order_is_q = false;
    bool closed = false;
    bool abelian = false;
    bool fixed_point_free = false;
    bool contains_identity_at_0 = false;

    bool all() const {
        return order_is_q && closed && abelian && fixed_point_free && contains_identity_at_0;
    }
};

inline ValidationReport validate_pgp_group(const OrderedGroup& g) {
    ValidationReport rep;
    const auto& els = g.elements();
    const int q = g.q();

    std::map<std::vector<int>, int> set;
    for (int t = 0; t < static_cast<int>(els.size()); ++t) set.emplace(els[t].images(), t);
    rep.order_is_q = static_cast<int>(els.size()) == q && static_cast<int>(set.size()) == q;
    rep.contains_identity_at_0 = !els.empty() && els[0].is_identity();

    rep.closed = true;
    rep.abelian = true;
    for (std::size_t i = 0; i < els.size(); ++i) {
        if (!rep.closed && !rep.abelian) break;
        for (std::size_t j = i; j < els.size(); ++j) {
            Permutation prod = compose(els[i], els[j]);
            if (!set.count(prod.images())) rep.closed = false;
            if (j > i) {
                Permutation rev = compose(els[j], els[i]);
                if (prod != rev) rep.abelian = false;
                if (!set.count(rev.images())) rep.closed = false;
            }
        }
    }

    rep.fixed_point_free = true;
    for (const auto& e : els)
        if (!e.is_identity() && e.has_fixed_point()) {
            rep.fixed_point_free = false;
            break;
        }
    return rep;
}

/// Cyclic factor orders of an abelian p-group, ascending (so consecutive
/// entries divide each other). Derived from the element-order statistics:
/// with p^{s_k} elements of order dividing p^k, the number of factors of
/// order >= p^k is s_k - s_{k-1}.
inline std::vector<long long> group_invariants(const OrderedGroup& g) {
    for (std::size_t i = 0; i < g.gens().size(); ++i)
        for (std::size_t j = i + 1; j < g.gens().size(); ++j)
            if (compose(g.gens()[i], g.gens()[j]) != compose(g.gens()[j], g.gens()[i]))
                throw NotAbelian();

    const int q = g.q();
    if (q == 1) return {};
    int p = 2;
    while (q % p != 0) ++p;
    int n = 0;
    for (int r = q; r > 1; r /= p) {
        if (r % p != 0) throw InvalidParams("group order is not a prime power");
        ++n;
    }

    std::vector<long long> ordcount(n + 1, 0);  // elements of order exactly p^k
    for (const auto& e : g.elements()) {
        unsigned long long o = e.order();
        int k = 0;
        while (o > 1) {
            if (o % p != 0) throw InvalidParams("element order is not a power of p");
            o /= p;
            ++k;
        }
        if (k > n) throw InvalidParams("element order exceeds the group order");
        ++ordcount[k];
    }
    // s_k = log_p #{x : ord(x) | p^k}
    std::vector<int> s(n + 1, 0);
    long long running = 0;
    for (int k = 0; k <= n; ++k) {
        running += ordcount[k];
        long long d = running;
        int sk = 0;
        while (d > 1) {
            if (d % p != 0) throw InvalidParams("order statistics are not p-power sized");
            d /= p;
            ++sk;
        }
        s[k] = sk;
    }
    std::vector<long long> factors;
    for (int k = n; k >= 1; --k) {
        const int at_least_k = s[k] - s[k - 1];
        const int at_least_k1 = (k < n) ? s[k + 1] - s[k] : 0;
        for (int c = 0; c < at_least_k - at_least_k1; ++c) {
            long long f = 1;
            for (int i = 0; i < k; ++i) f *= p;
            factors.push_back(f);
        }
    }
    std::sort(factors.begin(), factors.end());
    return factors;
}

}  // namespace permpoly
