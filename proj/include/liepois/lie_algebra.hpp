#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "liepois/errors.hpp"
#include "liepois/rational.hpp"

namespace liepois {

using Vec = std::vector<Rational>;    // element of g (or g*) in basis coordinates
using Matrix = std::vector<Vec>;      // row-major, rational entries

inline Vec zero_vec(unsigned dim) { return Vec(dim, Rational(0)); }
inline Matrix zero_matrix(unsigned dim) { return Matrix(dim, zero_vec(dim)); }

inline bool is_zero_vec(const Vec& v) {
    for (const auto& x : v)
        if (!x.is_zero()) return false;
    return true;
}

// Finite-dimensional Lie algebra over Q by structure constants.
// Constants are stored sparsely, keyed by (i,j) with i < j; the (j,i) values
// are derived by antisymmetry so the two can never disagree.
class LieAlgebra {
public:
    struct Report {
        bool ok = true;
        std::string message;            // empty on pass
        std::vector<unsigned> indices;  // offending (i,j[,k]) if any
    };

    LieAlgebra(unsigned dim, std::vector<std::string> labels)
        : dim_(dim), labels_(std::move(labels)) {
        if (dim_ < 1) throw InputError("LieAlgebra: dim must be >= 1");
        if (labels_.size() != dim_) throw InputError("LieAlgebra: label count != dim");
    }

    unsigned dim() const { return dim_; }
    const std::vector<std::string>& labels() const { return labels_; }

    // declare c^k_{ij}; accepts any (i,j), folds to canonical i<j storage and
    // cross-checks repeated/antisymmetric declarations
    void set_structure_constant(unsigned i, unsigned j, unsigned k, const Rational& c) {
        check_index(i);
        check_index(j);
        check_index(k);
        if (i == j) {
            if (!c.is_zero())
                throw AntisymmetryViolation("nonzero [e_i,e_i] component at i=" +
                                            std::to_string(i));
            return;
        }
        const bool flip = i > j;
        auto key = flip ? std::make_pair(j, i) : std::make_pair(i, j);
        Rational canon = flip ? -c : c;
        auto it = constants_.find(key);
        if (it == constants_.end()) {
            if (canon.is_zero()) return;
            Vec row = zero_vec(dim_);
            row[k] = canon;
            constants_.emplace(key, std::move(row));
        } else {
            if (!it->second[k].is_zero() && it->second[k] != canon)
                throw AntisymmetryViolation(
                    "conflicting structure constants for (" + std::to_string(i) + "," +
                    std::to_string(j) + "," + std::to_string(k) + ")");
            it->second[k] = canon;
        }
    }

    // [e_i, e_j] as a coordinate vector
    Vec bracket_basis(unsigned i, unsigned j) const {
        Vec out = zero_vec(dim_);
        if (i == j) return out;
        auto key = i < j ? std::make_pair(i, j) : std::make_pair(j, i);
        auto it = constants_.find(key);
        if (it == constants_.end()) return out;
        for (unsigned k = 0; k < dim_; ++k)
            out[k] = i < j ? it->second[k] : -it->second[k];
        return out;
    }

    Vec bracket(const Vec& x, const Vec& y) const {
        Vec out = zero_vec(dim_);
        for (unsigned i = 0; i < dim_; ++i) {
            if (x[i].is_zero()) continue;
            for (unsigned j = 0; j < dim_; ++j) {
                if (y[j].is_zero()) continue;
                Vec b = bracket_basis(i, j);
                for (unsigned k = 0; k < dim_; ++k)
                    if (!b[k].is_zero()) out[k] += x[i] * y[j] * b[k];
            }
        }
        return out;
    }

    // ad matrix of e_i: (ad_i)[k][j] = c^k_{ij}
    Matrix ad_basis(unsigned i) const {
        Matrix m = zero_matrix(dim_);
        for (unsigned j = 0; j < dim_; ++j) {
            Vec b = bracket_basis(i, j);
            for (unsigned k = 0; k < dim_; ++k) m[k][j] = b[k];
        }
        return m;
    }

    // Jacobi on all triples; antisymmetry is structural but we re-derive and
    // report the first violation with indices for defect certificates.
    Report validate() const {
        for (unsigned i = 0; i < dim_; ++i)
            for (unsigned j = i + 1; j < dim_; ++j) {
                Vec fwd = bracket_basis(i, j);
                Vec bwd = bracket_basis(j, i);
                for (unsigned k = 0; k < dim_; ++k)
                    if (fwd[k] + bwd[k] != Rational(0))
                        return {false, "antisymmetry violated", {i, j, k}};
            }
        for (unsigned i = 0; i < dim_; ++i)
            for (unsigned j = i + 1; j < dim_; ++j)
                for (unsigned k = j + 1; k < dim_; ++k) {
                    Vec acc = bracket(bracket_basis(i, j), basis(k));
                    Vec t2 = bracket(bracket_basis(j, k), basis(i));
                    Vec t3 = bracket(bracket_basis(k, i), basis(j));
                    for (unsigned m = 0; m < dim_; ++m) acc[m] += t2[m] + t3[m];
                    if (!is_zero_vec(acc))
                        return {false, "Jacobi identity violated", {i, j, k}};
                }
        return {};
    }

    Vec basis(unsigned i) const {
        Vec v = zero_vec(dim_);
        v[i] = Rational(1);
        return v;
    }

private:
    unsigned dim_;
    std::vector<std::string> labels_;
    std::map<std::pair<unsigned, unsigned>, Vec> constants_;  // i<j -> c^*_{ij}

    void check_index(unsigned i) const {
        if (i >= dim_) throw InputError("LieAlgebra: index out of range");
    }
};

// exact Gaussian elimination; returns empty optional-like flag via bool
inline bool invert_matrix(const Matrix& m, Matrix& out) {
    const unsigned n = static_cast<unsigned>(m.size());
    Matrix a = m;
    out = zero_matrix(n);
    for (unsigned i = 0; i < n; ++i) out[i][i] = Rational(1);
    for (unsigned col = 0; col < n; ++col) {
        unsigned pivot = col;
        while (pivot < n && a[pivot][col].is_zero()) ++pivot;
        if (pivot == n) return false;
        std::swap(a[pivot], a[col]);
        std::swap(out[pivot], out[col]);
        Rational inv = Rational(1) / a[col][col];
        for (unsigned j = 0; j < n; ++j) {
            a[col][j] *= inv;
            out[col][j] *= inv;
        }
        for (unsigned row = 0; row < n; ++row) {
            if (row == col || a[row][col].is_zero()) continue;
            Rational f = a[row][col];
            for (unsigned j = 0; j < n; ++j) {
                a[row][j] -= f * a[col][j];
                out[row][j] -= f * out[col][j];
            }
        }
    }
    return true;
}

inline Vec matrix_apply(const Matrix& m, const Vec& v) {
    Vec out = zero_vec(static_cast<unsigned>(m.size()));
    for (unsigned i = 0; i < m.size(); ++i)
        for (unsigned j = 0; j < v.size(); ++j)
            if (!m[i][j].is_zero() && !v[j].is_zero()) out[i] += m[i][j] * v[j];
    return out;
}

}  // namespace liepois
