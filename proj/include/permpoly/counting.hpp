#pragma once

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "permpoly/error.hpp"
#include "permpoly/groups.hpp"

namespace permpoly {

/// Exact nonnegative count; no floating point anywhere in the counting code.
using BigCount = boost::multiprecision::cpp_int;

struct DivisibilityFails final : Error {
    explicit DivisibilityFails(int k)
        : Error("p^{delta-1} does not divide v_{" + std::to_string(k) + ",0}"), index(k) {}
    int index;
};
struct PreconditionJ final : Error {
    PreconditionJ() : Error("p^{n-2e} does not divide j") {}
};
struct BadRange final : Error {
    using Error::Error;
};
struct OutOfRangeE final : Error {
    using Error::Error;
};
struct GuardExceeded final : Error {
    explicit GuardExceeded(int q, int guard)
        : Error("brute-force scan over S_" + std::to_string(q) + " refused (guard " +
                std::to_string(guard) + "); raise the guard to override") {}
};
struct InternalInconsistency final : Error {
    using Error::Error;
};

inline BigCount factorial(int n) {
    BigCount r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

/// phi(p^e) = p^e - p^{e-1}; phi(1) = 1.
inline BigCount totient_prime_power(int p, int e) {
    if (e == 0) return 1;
    BigCount pe = 1;
    for (int i = 0; i < e - 1; ++i) pe *= p;
    return pe * (p - 1);
}

inline BigCount checked_div(const BigCount& num, const BigCount& den, const char* what) {
    if (den == 0 || num % den != 0)
        throw InternalInconsistency(std::string("non-exact division in ") + what);
    return num / den;
}

/// An exponent tuple (v_0, v_1, ..., v_{n-delta}) with v_0 in Z_{p^delta} and
/// the rest in Z_p.
using ExponentVector = std::vector<int>;
using ModpMatrix = std::vector<std::vector<int>>;

/// Row 0 is (v_{0,0}, v_{0,1} p^{delta-1}, ...) mod p; row k >= 1 divides the
/// leading entry by p^{delta-1} first (DivisibilityFails if it cannot).
inline ModpMatrix conjugation_matrix(const std::vector<ExponentVector>& vs, int p, int delta) {
    const int m = static_cast<int>(vs.size());
    const int pd1 = ipow(p, delta - 1);
    ModpMatrix a(m, std::vector<int>(m));
    for (int j = 0; j < m; ++j)
        a[0][j] = (j == 0 ? vs[0][0] : vs[0][j] * pd1) % p;
    for (int k = 1; k < m; ++k) {
        if (vs[k][0] % pd1 != 0) throw DivisibilityFails(k);
        a[k][0] = (vs[k][0] / pd1) % p;
        for (int j = 1; j < m; ++j) a[k][j] = vs[k][j] % p;
    }
    return a;
}

/// Determinant mod p by elimination.
inline int det_mod_p(ModpMatrix a, int p) {
    const int m = static_cast<int>(a.size());
    long long det = 1;
    for (int c = 0; c < m; ++c) {
        int piv = -1;
        for (int r = c; r < m; ++r)
            if (a[r][c] % p != 0) {
                piv = r;
                break;
            }
        if (piv < 0) return 0;
        if (piv != c) {
            std::swap(a[piv], a[c]);
            det = (p - det % p) % p;
        }
        det = (det * a[c][c]) % p;
        // inverse of pivot via Fermat
        long long inv = 1, base = a[c][c] % p, k = p - 2;
        while (k > 0) {
            if (k & 1) inv = inv * base % p;
            base = base * base % p;
            k >>= 1;
        }
        for (int r = c + 1; r < m; ++r) {
            const long long f = a[r][c] % p * inv % p;
            if (f == 0) continue;
            for (int cc = c; cc < m; ++cc)
                a[r][cc] = static_cast<int>(((a[r][cc] - f * a[c][cc]) % p + p) % p);
        }
    }
    return static_cast<int>((det % p + p) % p);
}

/// Whether the conjugation-constraint set cut out by the exponent tuples is
/// nonempty (in which case its size is p^n): needs p^{delta-1} | v_{k,0} for
/// k >= 1 and a nonzero determinant.
inline bool nset_nonempty_t31(const std::vector<ExponentVector>& vs, const T31Params& prm) {
    prm.validate();
    const int m = prm.n - prm.delta + 1;
    if (static_cast<int>(vs.size()) != m) throw BadRange("expected n-delta+1 exponent tuples");
    const int pd = ipow(prm.p, prm.delta);
    for (int k = 0; k < m; ++k) {
        if (static_cast<int>(vs[k].size()) != m)
            throw BadRange("each exponent tuple needs n-delta+1 entries");
        if (vs[k][0] < 0 || vs[k][0] >= pd) throw BadRange("v_{k,0} out of range");
        for (int j = 1; j < m; ++j)
            if (vs[k][j] < 0 || vs[k][j] >= prm.p) throw BadRange("v_{k,j} out of range");
    }
    const int pd1 = ipow(prm.p, prm.delta - 1);
    for (int k = 1; k < m; ++k)
        if (vs[k][0] % pd1 != 0) return false;
    return det_mod_p(conjugation_matrix(vs, prm.p, prm.delta), prm.p) != 0;
}

/// Whether the set {h : h a h^{-1} = a^i b^j, h b h^{-1} = a^u b^v} is
/// nonempty (in which case its size is p^n). Requires e >= 1, e <= n-e and
/// p^{n-2e} | j. Two conditions: a^u b^v must have full order p^{n-e}, and no
/// (beta, alpha) may satisfy both congruences i p^alpha = beta u (mod p^e)
/// and j p^alpha = beta v (mod p^{n-e}). beta only matters mod p^{n-e}.
inline bool nset_nonempty_klenian(int i, int j, int u, int v, const KlenianParams& prm) {
    prm.validate();
    const int p = prm.p, n = prm.n, e = prm.e;
    if (e < 1 || e > n - e) throw BadRange("requires 1 <= e <= n-e");
    const int pe = ipow(p, e), pne = ipow(p, n - e);
    if (i < 0 || i >= pe || u < 0 || u >= pe) throw BadRange("i, u must lie in Z_{p^e}");
    if (j < 0 || j >= pne || v < 0 || v >= pne) throw BadRange("j, v must lie in Z_{p^{n-e}}");
    if (j % ipow(p, n - 2 * e) != 0) throw PreconditionJ();

    // ord(a^u b^v) = max of the two cyclic orders; it must be exactly p^{n-e}
    const long long ord_u = u == 0 ? 1 : pe / std::gcd(pe, u);
    const long long ord_v = v == 0 ? 1 : pne / std::gcd(pne, v);
    if (std::max(ord_u, ord_v) != pne) return false;

    long long palpha = 1;
    for (int alpha = 0; alpha < e; ++alpha, palpha *= p) {
        for (int beta = 0; beta < pne; ++beta) {
            const bool first = (i * palpha - static_cast<long long>(beta) * u) % pe == 0;
            const bool second = (j * palpha - static_cast<long long>(beta) * v) % pne == 0;
            if (first && second) return false;
        }
    }
    return true;
}

/// Count of distinct ordered tuples of the digit-shift form:
/// q! (q-1)! / ((p^n - p^{(delta-1)(n-delta+1)}) prod_{i=1}^{n-delta} (p^{n-delta+1} - p^i)).
inline BigCount count_t31(const T31Params& prm) {
    prm.validate();
    const int p = prm.p, n = prm.n, delta = prm.delta;
    const int q = prm.q();
    BigCount denom = BigCount(ipow(p, n)) - ipow(p, (delta - 1) * (n - delta + 1));
    for (int i = 1; i <= n - delta; ++i)
        denom *= BigCount(ipow(p, n - delta + 1)) - ipow(p, i);
    return checked_div(factorial(q) * factorial(q - 1), denom, "count_t31");
}

/// Count of distinct ordered tuples of the block-cycle form, for
/// 1 <= e <= floor(n/2); e in (n/2, n) is normalized to n-e, e = 0 is the
/// previously known case and is refused.
inline BigCount count_klenian(const KlenianParams& prm) {
    prm.validate();
    const int p = prm.p, n = prm.n;
    int e = prm.e;
    if (e == 0)
        throw OutOfRangeE("e = 0 counting is prior work; this computes e >= 1 only");
    if (e > n - e) e = n - e;
    const int q = prm.q();
    BigCount denom;
    if (2 * e < n) {
        denom = BigCount(ipow(p, 2 * e)) * totient_prime_power(p, e) *
                totient_prime_power(p, n - e);
    } else {
        denom = totient_prime_power(p, e) * totient_prime_power(p, e) *
                (BigCount(ipow(p, 2 * e)) + ipow(p, 2 * e - 1));
    }
    return checked_div(factorial(q) * factorial(q - 1), denom, "count_klenian");
}

/// Closed-form normalizer sizes, p^n * |B|; the brute-force scans must agree
/// with these.
inline BigCount normalizer_size_t31(const T31Params& prm) {
    prm.validate();
    const int p = prm.p, n = prm.n, delta = prm.delta;
    BigCount b = BigCount(ipow(p, n)) - ipow(p, (delta - 1) * (n - delta + 1));
    for (int i = 1; i <= n - delta; ++i) b *= BigCount(ipow(p, n - delta + 1)) - ipow(p, i);
    return BigCount(prm.q()) * b;
}

inline BigCount normalizer_size_klenian(const KlenianParams& prm) {
    prm.validate();
    const int p = prm.p, n = prm.n;
    int e = prm.e;
    if (e == 0) throw OutOfRangeE("e = 0 normalizer size is not computed here");
    if (e > n - e) e = n - e;
    BigCount b;
    if (2 * e < n)
        b = BigCount(ipow(p, 2 * e)) * totient_prime_power(p, e) * totient_prime_power(p, n - e);
    else
        b = BigCount(ipow(p, 2 * e - 1)) * totient_prime_power(p, e) *
            totient_prime_power(p, e) * (p + 1);
    return BigCount(prm.q()) * b;
}

namespace detail {

constexpr int default_scan_guard = 9;

inline void check_guard(int q, int guard) {
    if (q > guard) throw GuardExceeded(q, guard);
}

/// s f s^{-1} on raw image tables, written into out.
inline void conj_into(const std::vector<int>& s, const std::vector<int>& f,
                      std::vector<int>& out) {
    const int q = static_cast<int>(s.size());
    for (int x = 0; x < q; ++x) out[s[x]] = s[f[x]];
}

}  // namespace detail

/// |{h in S_q : h G h^{-1} = G}| by full scan, enumerating S_q in
/// lexicographic image-table order. Guarded: S_9 is the default ceiling.
inline BigCount normalizer_bruteforce(const OrderedGroup& g,
                                      int guard = detail::default_scan_guard) {
    const int q = g.q();
    detail::check_guard(q, guard);
    std::vector<std::vector<int>> gens;
    for (const auto& gen : g.gens()) gens.push_back(gen.images());

    std::vector<int> h(q);
    std::iota(h.begin(), h.end(), 0);
    std::vector<int> conj(q);
    long long count = 0;
    do {
        bool ok = true;
        for (const auto& gen : gens) {
            detail::conj_into(h, gen, conj);
            // membership in G: compare against each element (q is tiny here)
            bool member = false;
            for (const auto& e : g.elements())
                if (e.images() == conj) {
                    member = true;
                    break;
                }
            if (!member) {
                ok = false;
                break;
            }
        }
        if (ok) ++count;
    } while (std::next_permutation(h.begin(), h.end()));
    return count;
}

/// |{h in S_q : h g = g h for every generator g}| by full scan.
inline BigCount centralizer_bruteforce(const OrderedGroup& g,
                                       int guard = detail::default_scan_guard) {
    const int q = g.q();
    detail::check_guard(q, guard);
    std::vector<std::vector<int>> gens;
    for (const auto& gen : g.gens()) gens.push_back(gen.images());

    std::vector<int> h(q);
    std::iota(h.begin(), h.end(), 0);
    long long count = 0;
    do {
        bool ok = true;
        for (const auto& gen : gens) {
            for (int x = 0; x < q; ++x)
                if (h[gen[x]] != gen[h[x]]) {
                    ok = false;
                    break;
                }
            if (!ok) break;
        }
        if (ok) ++count;
    } while (std::next_permutation(h.begin(), h.end()));
    return count;
}

/// |{h : h gens[k] h^{-1} = elements[targets[k]] for every k}| by full scan;
/// targets[k] is the element index the k-th generator must conjugate to.
inline BigCount nset_bruteforce(const OrderedGroup& g, const std::vector<int>& targets,
                                int guard = detail::default_scan_guard) {
    const int q = g.q();
    detail::check_guard(q, guard);
    if (targets.size() != g.gens().size())
        throw BadRange("one target element index per generator required");
    std::vector<std::vector<int>> gens, tgts;
    for (const auto& gen : g.gens()) gens.push_back(gen.images());
    for (int t : targets) {
        if (t < 0 || t >= q) throw BadRange("target element index out of range");
        tgts.push_back(g.element(t).images());
    }

    std::vector<int> h(q);
    std::iota(h.begin(), h.end(), 0);
    std::vector<int> conj(q);
    long long count = 0;
    do {
        bool ok = true;
        for (std::size_t k = 0; k < gens.size(); ++k) {
            detail::conj_into(h, gens[k], conj);
            if (conj != tgts[k]) {
                ok = false;
                break;
            }
        }
        if (ok) ++count;
    } while (std::next_permutation(h.begin(), h.end()));
    return count;
}

/// q * q! / |C|, the size of the equivalence class. The centralizer size is
/// brute-forced when q fits under the guard; otherwise the group must be a
/// validated regular abelian group, whose centralizer in S_q is itself, so
/// |C| = q.
inline BigCount count_equivalents(const OrderedGroup& g,
                                  int guard = detail::default_scan_guard) {
    const ValidationReport rep = validate_pgp_group(g);
    if (!rep.all())
        throw InvalidParams("count_equivalents requires a validated ordered group");
    const int q = g.q();
    BigCount centralizer;
    if (q <= guard)
        centralizer = centralizer_bruteforce(g, guard);
    else
        centralizer = q;  // regular abelian subgroups are self-centralizing
    return checked_div(BigCount(q) * factorial(q), centralizer, "count_equivalents");
}

}  // namespace permpoly
