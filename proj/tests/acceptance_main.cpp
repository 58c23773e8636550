// Acceptance suite: one pass/fail line per criterion, exit 0 only if all
// pass. Everything here is exact; the brute-force oracles are full S_q scans.

#include <chrono>
#include <cstdio>
#include <exception>
#include <string>
#include <vector>

#include "permpoly/permpoly.hpp"

using namespace permpoly;

namespace {

int g_failures = 0;

template <typename Fn>
void criterion(int num, const std::string& label, Fn&& body) {
    const auto start = std::chrono::steady_clock::now();
    bool ok = false;
    std::string note;
    try {
        ok = body();
    } catch (const std::exception& ex) {
        note = std::string(" [exception: ") + ex.what() + "]";
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("[%s] %d. %s (%.2fs)%s\n", ok ? "PASS" : "FAIL", num, label.c_str(), secs,
                note.c_str());
    std::fflush(stdout);
    if (!ok) ++g_failures;
}

std::vector<T31Params> t31_params_up_to(int maxq) {
    std::vector<T31Params> out;
    for (int p : {2, 3, 5, 7}) {
        long long q = static_cast<long long>(p) * p;
        for (int n = 2; q <= maxq; ++n, q *= p)
            for (int delta : {1, 2}) out.push_back({p, n, delta});
    }
    return out;
}

std::vector<KlenianParams> klenian_params_up_to(int maxq) {
    std::vector<KlenianParams> out;
    for (int p = 2; p <= maxq; ++p) {
        if (!is_prime(p)) continue;
        long long q = p;
        for (int n = 1; q <= maxq; ++n, q *= p)
            for (int e = 0; e < n; ++e) out.push_back({p, n, e});
    }
    return out;
}

bool check_groups_validate() {
    for (const auto& prm : t31_params_up_to(64))
        if (!validate_pgp_group(t31_group(prm)).all()) return false;
    for (const auto& prm : klenian_params_up_to(64))
        if (!validate_pgp_group(klenian_group(prm)).all()) return false;
    return true;
}

bool check_companions() {
    for (const auto& prm : t31_params_up_to(64)) {
        const bool supported = prm.p % 2 == 1 || prm.delta == 1 || prm.n >= 5;
        if (!supported) continue;
        auto tuple = group_tuple(t31_group(prm));
        auto h = companion_h(prm);
        if (!intersects_lpp_simply(h, tuple)) return false;
        auto mate = tuple_to_square(companion_tuple(tuple, h));
        if (!are_orthogonal(tuple_to_square(tuple), mate)) return false;
    }
    return true;
}

bool check_t31_counts() {
    const std::vector<std::pair<T31Params, BigCount>> cases{
        {{2, 2, 1}, BigCount(24)},        {{2, 2, 2}, BigCount(72)},
        {{2, 3, 1}, BigCount(1209600)},   {{2, 3, 2}, BigCount(25401600)},
        {{3, 2, 1}, BigCount(304819200)}, {{3, 2, 2}, BigCount("2438553600")},
    };
    for (const auto& [prm, expect] : cases) {
        const BigCount closed = count_t31(prm);
        if (closed != expect) return false;
        auto g = t31_group(prm);
        const BigCount norm = normalizer_bruteforce(g);
        const BigCount oracle = factorial(g.q()) * factorial(g.q()) / norm;
        if (closed != oracle) return false;
        if (norm != normalizer_size_t31(prm)) return false;
    }
    return true;
}

bool check_klenian_counts() {
    const std::vector<std::pair<KlenianParams, BigCount>> cases{
        {{2, 2, 1}, BigCount(24)},
        {{2, 3, 1}, BigCount(25401600)},
        {{3, 2, 1}, BigCount(304819200)},
    };
    for (const auto& [prm, expect] : cases) {
        const BigCount closed = count_klenian(prm);
        if (closed != expect) return false;
        auto g = klenian_group(prm);
        const BigCount norm = normalizer_bruteforce(g);
        if (closed != factorial(g.q()) * factorial(g.q()) / norm) return false;
        if (norm != normalizer_size_klenian(prm)) return false;
    }
    return true;
}

bool check_dichotomy() {
    // digit-shift family, exhaustive over all exponent tuples at q in {4, 8}
    for (const auto& prm : std::vector<T31Params>{{2, 2, 1}, {2, 2, 2}, {2, 3, 1}, {2, 3, 2}}) {
        auto g = t31_group(prm);
        const int q = g.q();
        const int m = prm.n - prm.delta + 1;
        BigCount sum = 0;
        std::vector<int> flat(m, 0);  // each entry indexes an element of Z_{p^delta} x Z_p^...
        while (true) {
            std::vector<ExponentVector> vs;
            std::vector<int> targets;
            for (int k = 0; k < m; ++k) {
                vs.push_back(g.exponents_of(flat[k]));
                targets.push_back(flat[k]);
            }
            const BigCount bf = nset_bruteforce(g, targets);
            if (bf != 0 && bf != q) return false;
            if ((bf != 0) != nset_nonempty_t31(vs, prm)) return false;
            sum += bf;
            int k = m - 1;
            while (k >= 0 && ++flat[k] == q) flat[k--] = 0;
            if (k < 0) break;
        }
        if (sum != normalizer_bruteforce(g)) return false;
    }
    // block-cycle family at q in {4, 8}: all (i, j, u, v)
    for (const auto& prm : std::vector<KlenianParams>{{2, 2, 1}, {2, 3, 1}}) {
        auto g = klenian_group(prm);
        const int q = g.q();
        const int pe = g.bounds()[0], pne = g.bounds()[1];
        const int pn2e = ipow(prm.p, prm.n - 2 * prm.e);
        BigCount sum = 0;
        for (int i = 0; i < pe; ++i)
            for (int j = 0; j < pne; ++j)
                for (int u = 0; u < pe; ++u)
                    for (int v = 0; v < pne; ++v) {
                        const BigCount bf = nset_bruteforce(g, {i + j * pe, u + v * pe});
                        if (bf != 0 && bf != q) return false;
                        sum += bf;
                        if (j % pn2e != 0) {
                            // j breaks the divisibility precondition: the
                            // set is empty outright
                            if (bf != 0) return false;
                        } else if ((bf != 0) != nset_nonempty_klenian(i, j, u, v, prm)) {
                            return false;
                        }
                    }
        if (sum != normalizer_bruteforce(g)) return false;
    }
    return true;
}

bool check_equivalents() {
    for (const auto& prm :
         std::vector<T31Params>{{2, 2, 1}, {2, 2, 2}, {2, 3, 1}, {2, 3, 2}, {3, 2, 1}, {3, 2, 2}}) {
        auto g = t31_group(prm);
        if (centralizer_bruteforce(g) != g.q()) return false;
        if (count_equivalents(g) != factorial(g.q())) return false;
    }
    for (const auto& prm : std::vector<KlenianParams>{{2, 2, 1}, {2, 3, 1}, {3, 2, 1}}) {
        auto g = klenian_group(prm);
        if (centralizer_bruteforce(g) != g.q()) return false;
        if (count_equivalents(g) != factorial(g.q())) return false;
    }
    return true;
}

bool check_round_trips() {
    for (const auto& prm : t31_params_up_to(16)) {
        auto tuple = group_tuple(t31_group(prm));
        if (!tuple.is_valid()) return false;
        auto square = tuple_to_square(tuple);
        if (!square.is_latin()) return false;
        if (square_to_tuple(square).betas != tuple.betas) return false;
        if (tuple_to_square(square_to_tuple(square)) != square) return false;

        Field f(prm.p, prm.n);
        auto poly = interpolate_bivariate(f, square.cells());
        if (eval_table(poly) != square.cells()) return false;
        if (!is_lpp_poly(poly)) return false;

        auto damaged = square.cells();
        damaged[0][0] = damaged[0][1];
        if (LatinSquare(damaged).is_latin()) return false;
        if (is_lpp_poly(interpolate_bivariate(f, damaged))) return false;
    }
    for (const auto& prm : klenian_params_up_to(16)) {
        auto tuple = group_tuple(klenian_group(prm));
        auto square = tuple_to_square(tuple);
        if (!square.is_latin()) return false;
        if (square_to_tuple(square).betas != tuple.betas) return false;
    }
    return true;
}

bool check_mate_oracle() {
    // q = 4 and q = 9: search finds a mate, and the closed-form companion
    // independently verifies orthogonal
    for (const auto& prm : std::vector<T31Params>{{2, 2, 1}, {3, 2, 1}}) {
        auto tuple = group_tuple(t31_group(prm));
        auto square = tuple_to_square(tuple);
        auto found = find_orthogonal_mate(square);
        if (!found.found()) return false;
        if (!are_orthogonal(square, *found.mate)) return false;
        auto companion = tuple_to_square(companion_tuple(tuple, companion_h(prm)));
        if (!are_orthogonal(square, companion)) return false;
    }
    // q = 2: proven exhausted
    auto q2 = tuple_to_square(group_tuple(klenian_group({2, 1, 0})));
    return find_orthogonal_mate(q2).status == MateSearchResult::Status::Exhausted;
}

}  // namespace

int main() {
    criterion(1, "constructed groups are order-q, abelian, fixed-point-free for all q <= 64",
              check_groups_validate);
    criterion(2, "closed-form companions intersect simply and give orthogonal pairs, q <= 64",
              check_companions);
    criterion(3, "digit-shift counts match (q!)^2 / normalizer at six parameter sets",
              check_t31_counts);
    criterion(4, "block-cycle counts match (q!)^2 / normalizer at three parameter sets",
              check_klenian_counts);
    criterion(5, "conjugation-set sizes are 0 or q and match the closed criteria at q in {4,8}",
              check_dichotomy);
    criterion(6, "equivalence class size is q! for both families at q in {4,8,9}",
              check_equivalents);
    criterion(7, "tuple/square/polynomial round trips and Latin agreement, q <= 16",
              check_round_trips);
    criterion(8, "mate search finds mates at q in {4,9} and proves none exists at q = 2",
              check_mate_oracle);

    if (g_failures) {
        std::printf("%d criterion(s) FAILED\n", g_failures);
        return 1;
    }
    std::printf("all criteria passed\n");
    return 0;
}
