#pragma once

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

#include "permpoly/error.hpp"

namespace permpoly {

struct NotPrime final : Error {
    explicit NotPrime(long long p) : Error("not a prime: " + std::to_string(p)) {}
};
struct DegreeZero final : Error {
    DegreeZero() : Error("extension degree must be at least 1") {}
};
struct FieldTooLarge final : Error {
    FieldTooLarge(long long q) : Error("field size " + std::to_string(q) + " exceeds 2^16") {}
};
struct FieldMismatch final : Error {
    FieldMismatch() : Error("operands belong to different fields") {}
};
struct ZeroInverse final : Error {
    ZeroInverse() : Error("zero has no multiplicative inverse") {}
};

inline bool is_prime(long long p) {
    if (p < 2) return false;
    for (long long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

class FieldElement;

/// The field F_q = F_p[X]/(m), q = p^n, with elements labeled c_0, ..., c_{q-1}:
/// the coordinate vector of c_t in the power basis of the modulus root is the
/// little-endian base-p digit expansion of t. The modulus m is the
/// lexicographically smallest monic irreducible of degree n over F_p,
/// coefficients compared low-degree-first. Arithmetic is exact; q is capped at
/// 2^16 so full q x q tables stay in memory.
///
/// Immutable after construction; all operations are pure and thread-safe.
class Field {
  public:
    static constexpr int max_q = 1 << 16;

    Field(int p, int n) : p_(p), n_(n) {
        if (!is_prime(p)) throw NotPrime(p);
        if (n < 1) throw DegreeZero();
        long long q = 1;
        for (int i = 0; i < n; ++i) {
            q *= p;
            if (q > max_q) throw FieldTooLarge(q);
        }
        q_ = static_cast<int>(q);
        modulus_ = least_irreducible(p, n);
        build_reduction_table();
    }

    /// Construct with an explicit monic modulus (n+1 little-endian digits);
    /// irreducibility is re-verified by trial division.
    Field(int p, int n, std::vector<int> modulus) : Field(p, n) {
        if (static_cast<int>(modulus.size()) != n + 1 || modulus[n] != 1)
            throw Error("modulus must be monic of degree n");
        for (int d : modulus)
            if (d < 0 || d >= p) throw Error("modulus digit out of range");
        if (!is_irreducible(modulus, p)) throw Error("modulus is reducible");
        modulus_ = std::move(modulus);
        build_reduction_table();
    }

    int p() const { return p_; }
    int n() const { return n_; }
    int q() const { return q_; }
    const std::vector<int>& modulus() const { return modulus_; }

    bool operator==(const Field& o) const {
        return p_ == o.p_ && n_ == o.n_ && modulus_ == o.modulus_;
    }

    /// Little-endian base-p digits of t (exactly n entries).
    std::vector<int> digits(int t) const {
        std::vector<int> d(n_);
        for (int i = 0; i < n_; ++i) {
            d[i] = t % p_;
            t /= p_;
        }
        return d;
    }

    int index_of(const std::vector<int>& digits) const {
        int t = 0;
        for (int i = n_ - 1; i >= 0; --i) t = t * p_ + digits[i];
        return t;
    }

    int add(int a, int b) const {
        check_range(a);
        check_range(b);
        int r = 0, m = 1;
        for (int i = 0; i < n_; ++i) {
            r += ((a % p_ + b % p_) % p_) * m;
            a /= p_;
            b /= p_;
            m *= p_;
        }
        return r;
    }

    int neg(int a) const {
        check_range(a);
        int r = 0, m = 1;
        for (int i = 0; i < n_; ++i) {
            r += ((p_ - a % p_) % p_) * m;
            a /= p_;
            m *= p_;
        }
        return r;
    }

    int sub(int a, int b) const { return add(a, neg(b)); }

    int mul(int a, int b) const {
        check_range(a);
        check_range(b);
        // convolution of digit vectors, then reduction of X^n..X^{2n-2}
        std::array<long long, 2 * max_degree - 1> prod{};
        std::array<int, max_degree> da{}, db{};
        for (int i = 0; i < n_; ++i) {
            da[i] = a % p_;
            a /= p_;
            db[i] = b % p_;
            b /= p_;
        }
        for (int i = 0; i < n_; ++i) {
            if (da[i] == 0) continue;
            for (int j = 0; j < n_; ++j) prod[i + j] += static_cast<long long>(da[i]) * db[j];
        }
        std::array<int, max_degree> red{};
        for (int i = 0; i < n_; ++i) red[i] = static_cast<int>(prod[i] % p_);
        for (int k = 2 * n_ - 2; k >= n_; --k) {
            int c = static_cast<int>(prod[k] % p_);
            if (c == 0) continue;
            const std::vector<int>& row = reduction_[k - n_];
            for (int i = 0; i < n_; ++i) red[i] = (red[i] + c * row[i]) % p_;
        }
        int r = 0;
        for (int i = n_ - 1; i >= 0; --i) r = r * p_ + red[i];
        return r;
    }

    int pow(int a, long long k) const {
        check_range(a);
        if (k < 0) {
            a = inv(a);
            k = -k;
        }
        int r = 1;
        while (k > 0) {
            if (k & 1) r = mul(r, a);
            a = mul(a, a);
            k >>= 1;
        }
        return r;
    }

    /// Multiplicative inverse, computed as a^(q-2).
    int inv(int a) const {
        if (a == 0) throw ZeroInverse();
        return pow(a, q_ - 2);
    }

    FieldElement element(int t) const;
    FieldElement zero() const;
    FieldElement one() const;

  private:
    static constexpr int max_degree = 16;  // 2^16 caps n at 16

    int p_, n_, q_;
    std::vector<int> modulus_;
    std::vector<std::vector<int>> reduction_;  // X^{n+k} mod modulus, k = 0..n-2

    void check_range(int a) const {
        if (a < 0 || a >= q_) throw Error("element index out of range: " + std::to_string(a));
    }

    void build_reduction_table() {
        reduction_.assign(n_ > 1 ? n_ - 1 : 0, std::vector<int>(n_));
        // X^n = -(m_0 + m_1 X + ... + m_{n-1} X^{n-1})
        std::vector<int> cur(n_);
        for (int i = 0; i < n_; ++i) cur[i] = (p_ - modulus_[i]) % p_;
        for (int k = 0; k + n_ <= 2 * n_ - 2; ++k) {
            reduction_[k] = cur;
            // multiply by X and fold the overflow term
            std::vector<int> next(n_);
            int top = cur[n_ - 1];
            for (int i = n_ - 1; i >= 1; --i) next[i] = cur[i - 1];
            next[0] = 0;
            if (top != 0)
                for (int i = 0; i < n_; ++i)
                    next[i] = (next[i] + top * ((p_ - modulus_[i]) % p_)) % p_;
            cur = next;
        }
    }

    // remainder of a by monic divisor d over F_p, little-endian, trimmed
    static std::vector<int> poly_rem(std::vector<int> a, const std::vector<int>& d, int p) {
        auto trim = [](std::vector<int>& v) {
            while (!v.empty() && v.back() == 0) v.pop_back();
        };
        trim(a);
        const int dd = static_cast<int>(d.size()) - 1;
        while (static_cast<int>(a.size()) - 1 >= dd && !a.empty()) {
            int c = a.back();
            int sh = static_cast<int>(a.size()) - 1 - dd;
            for (int i = 0; i <= dd; ++i) a[sh + i] = ((a[sh + i] - c * d[i]) % p + p) % p;
            trim(a);
        }
        return a;
    }

    static bool is_irreducible(const std::vector<int>& m, int p) {
        const int deg = static_cast<int>(m.size()) - 1;
        if (deg == 1) return true;
        // trial division against all monic polynomials of degree <= deg/2
        for (int d = 1; 2 * d <= deg; ++d) {
            std::vector<int> div(d + 1, 0);
            div[d] = 1;
            while (true) {
                if (poly_rem(m, div, p).empty()) return false;
                int i = 0;
                while (i < d && div[i] == p - 1) div[i++] = 0;
                if (i == d) break;
                ++div[i];
            }
        }
        return true;
    }

    static std::vector<int> least_irreducible(int p, int n) {
        // lexicographic scan over low coefficients (c_0, ..., c_{n-1}),
        // c_0 most significant
        std::vector<int> low(n, 0);
        while (true) {
            std::vector<int> m(low);
            m.push_back(1);
            if (is_irreducible(m, p)) return m;
            int i = n - 1;
            while (i >= 0 && low[i] == p - 1) low[i--] = 0;
            if (i < 0) break;
            ++low[i];
        }
        throw Error("no irreducible modulus found");  // unreachable: one always exists
    }
};

inline Field make_field(int p, int n) { return Field(p, n); }

/// A value c_t of a Field. Keeps a pointer to its field, which must outlive it.
class FieldElement {
  public:
    FieldElement(const Field& f, int index) : field_(&f), index_(index) {
        if (index < 0 || index >= f.q()) throw Error("element index out of range");
    }

    int index() const { return index_; }
    const Field& field() const { return *field_; }
    std::vector<int> digits() const { return field_->digits(index_); }

    FieldElement inverse() const { return {*field_, field_->inv(index_)}; }

    friend FieldElement operator+(const FieldElement& a, const FieldElement& b) {
        check_same(a, b);
        return {*a.field_, a.field_->add(a.index_, b.index_)};
    }
    friend FieldElement operator-(const FieldElement& a, const FieldElement& b) {
        check_same(a, b);
        return {*a.field_, a.field_->sub(a.index_, b.index_)};
    }
    friend FieldElement operator*(const FieldElement& a, const FieldElement& b) {
        check_same(a, b);
        return {*a.field_, a.field_->mul(a.index_, b.index_)};
    }
    friend FieldElement operator-(const FieldElement& a) {
        return {*a.field_, a.field_->neg(a.index_)};
    }
    friend bool operator==(const FieldElement& a, const FieldElement& b) {
        return *a.field_ == *b.field_ && a.index_ == b.index_;
    }

  private:
    const Field* field_;
    int index_;

    static void check_same(const FieldElement& a, const FieldElement& b) {
        if (!(*a.field_ == *b.field_)) throw FieldMismatch();
    }
};

inline FieldElement Field::element(int t) const { return {*this, t}; }
inline FieldElement Field::zero() const { return {*this, 0}; }
inline FieldElement Field::one() const { return {*this, 1}; }

}  // namespace permpoly
