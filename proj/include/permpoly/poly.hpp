#pragma once

#include <utility>
#include <vector>

#include "permpoly/error.hpp"
#include "permpoly/field.hpp"
#include "permpoly/latin.hpp"

namespace permpoly {

/// Polynomial in two variables over a Field, of degree < q in each variable.
/// coeffs[i][j] (a field-element index) multiplies X1^i X2^j. Coefficient
/// values depend on the c_t element labeling the Field fixes.
class BivariatePoly {
  public:
    BivariatePoly(Field field, std::vector<std::vector<int>> coeffs)
        : field_(std::move(field)), coeffs_(std::move(coeffs)) {
        const int q = field_.q();
        if (static_cast<int>(coeffs_.size()) != q) throw Error("coefficient grid must be q x q");
        for (const auto& row : coeffs_) {
            if (static_cast<int>(row.size()) != q) throw Error("coefficient grid must be q x q");
            for (int c : row)
                if (c < 0 || c >= q) throw Error("coefficient index out of range");
        }
    }

    static BivariatePoly zero(const Field& f) {
        return {f, std::vector<std::vector<int>>(f.q(), std::vector<int>(f.q(), 0))};
    }

    const Field& field() const { return field_; }
    int coeff(int i, int j) const { return coeffs_[i][j]; }
    const std::vector<std::vector<int>>& coeffs() const { return coeffs_; }

    friend bool operator==(const BivariatePoly& a, const BivariatePoly& b) {
        return a.field_ == b.field_ && a.coeffs_ == b.coeffs_;
    }

  private:
    Field field_;
    std::vector<std::vector<int>> coeffs_;
};

namespace detail {

/// Lagrange basis over the full point set c_0..c_{q-1}: basis[s] is the
/// coefficient vector of the unique degree-<q polynomial that is 1 at c_s and
/// 0 at every other point. Built once per interpolation, O(q^2).
inline std::vector<std::vector<int>> lagrange_basis(const Field& f) {
    const int q = f.q();
    // master(X) = prod_r (X - c_r), degree q
    std::vector<int> master(q + 1, 0);
    master[0] = 1;  // constant 1; treated little-endian, entries are element indices
    int deg = 0;
    for (int r = 0; r < q; ++r) {
        const int neg_r = f.neg(r);
        for (int i = deg + 1; i >= 1; --i)
            master[i] = f.add(master[i - 1], f.mul(master[i], neg_r));
        master[0] = f.mul(master[0], neg_r);
        ++deg;
    }
    std::vector<std::vector<int>> basis(q);
    for (int s = 0; s < q; ++s) {
        // synthetic division: master / (X - c_s)
        std::vector<int> num(q);
        int carry = master[q];
        for (int i = q - 1; i >= 0; --i) {
            num[i] = carry;
            carry = f.add(master[i], f.mul(carry, s));
        }
        // normalize so the basis polynomial is 1 at c_s
        int val = 0;
        for (int i = q - 1; i >= 0; --i) val = f.add(f.mul(val, s), num[i]);
        const int scale = f.inv(val);
        for (int& c : num) c = f.mul(c, scale);
        basis[s] = std::move(num);
    }
    return basis;
}

}  // namespace detail

/// The unique polynomial P of degree < q in each variable with
/// P(c_x, c_y) = c_{table[x][y]} for all x, y, by tensored univariate
/// Lagrange interpolation (rows in X2, then columns in X1). O(q^3).
inline BivariatePoly interpolate_bivariate(const Field& f,
                                           const std::vector<std::vector<int>>& table) {
    const int q = f.q();
    if (static_cast<int>(table.size()) != q) throw Error("value table must be q x q");
    for (const auto& row : table) {
        if (static_cast<int>(row.size()) != q) throw Error("value table must be q x q");
        for (int v : row)
            if (v < 0 || v >= q) throw Error("table entry out of range");
    }
    const auto basis = detail::lagrange_basis(f);

    // rows[x][j]: coefficient of X2^j in the interpolant of row x
    std::vector<std::vector<int>> rows(q, std::vector<int>(q, 0));
    for (int x = 0; x < q; ++x)
        for (int y = 0; y < q; ++y) {
            const int v = table[x][y];
            if (v == 0) continue;
            for (int j = 0; j < q; ++j)
                rows[x][j] = f.add(rows[x][j], f.mul(v, basis[y][j]));
        }
    // columns: interpolate x -> rows[x][j] in X1
    std::vector<std::vector<int>> coeffs(q, std::vector<int>(q, 0));
    for (int j = 0; j < q; ++j)
        for (int x = 0; x < q; ++x) {
            const int v = rows[x][j];
            if (v == 0) continue;
            for (int i = 0; i < q; ++i)
                coeffs[i][j] = f.add(coeffs[i][j], f.mul(v, basis[x][i]));
        }
    return {f, std::move(coeffs)};
}

/// Horner in X1 of Horner evaluations in X2; arguments and result are
/// element indices.
inline int eval_poly(const BivariatePoly& P, int x, int y) {
    const Field& f = P.field();
    const int q = f.q();
    int acc = 0;
    for (int i = q - 1; i >= 0; --i) {
        int row = 0;
        for (int j = q - 1; j >= 0; --j) row = f.add(f.mul(row, y), P.coeff(i, j));
        acc = f.add(f.mul(acc, x), row);
    }
    return acc;
}

inline FieldElement eval_poly(const BivariatePoly& P, const FieldElement& x,
                              const FieldElement& y) {
    if (!(x.field() == P.field()) || !(y.field() == P.field())) throw FieldMismatch();
    return P.field().element(eval_poly(P, x.index(), y.index()));
}

/// Full q x q value table, O(q^3): collapse X1 per row point, then evaluate
/// the resulting univariate polynomial at every second point.
inline std::vector<std::vector<int>> eval_table(const BivariatePoly& P) {
    const Field& f = P.field();
    const int q = f.q();
    std::vector<std::vector<int>> out(q, std::vector<int>(q));
    std::vector<int> collapsed(q);
    for (int x = 0; x < q; ++x) {
        for (int j = 0; j < q; ++j) {
            int acc = 0;
            for (int i = q - 1; i >= 0; --i) acc = f.add(f.mul(acc, x), P.coeff(i, j));
            collapsed[j] = acc;
        }
        for (int y = 0; y < q; ++y) {
            int acc = 0;
            for (int j = q - 1; j >= 0; --j) acc = f.add(f.mul(acc, y), collapsed[j]);
            out[x][y] = acc;
        }
    }
    return out;
}

/// True iff every univariate section (either variable fixed) permutes F_q,
/// i.e. the value table is a Latin square.
inline bool is_lpp_poly(const BivariatePoly& P) {
    return LatinSquare(eval_table(P)).is_latin();
}

}  // namespace permpoly
