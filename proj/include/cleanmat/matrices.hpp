#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "cleanmat/poly.hpp"
#include "cleanmat/rings.hpp"

namespace cleanmat {

// Dense exact matrix over one ring of the tower.  Sizes are capped at
// max_dim x max_dim so the O(n^4) division-free algorithms and the
// factorial-cost test oracles stay tractable.
class Matrix {
public:
    static constexpr int max_dim = 8;

    Matrix(RingPtr ring, int rows, int cols);
    Matrix(RingPtr ring, int rows, int cols, std::vector<RingElement> entries);

    static Matrix zero(const RingPtr& ring, int n) { return Matrix(ring, n, n); }
    static Matrix identity(const RingPtr& ring, int n);
    static Matrix from_rows(const RingPtr& ring,
                            const std::vector<std::vector<RingElement>>& rows);

    const RingPtr& ring_ptr() const { return ring_; }
    const Ring& ring() const { return *ring_; }
    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    const RingElement& at(int i, int j) const;
    void set(int i, int j, RingElement v);

    Matrix add(const Matrix& other) const;
    Matrix sub(const Matrix& other) const;
    Matrix mul(const Matrix& other) const;
    Matrix neg() const;
    Matrix scalar_mul(const RingElement& c) const;

    bool operator==(const Matrix& other) const;
    bool operator!=(const Matrix& other) const { return !(*this == other); }

private:
    void check_same_ring(const Matrix& other) const;

    RingPtr ring_;
    int rows_ = 0;
    int cols_ = 0;
    std::vector<RingElement> entries_;
};

Matrix operator+(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a, const Matrix& b);
Matrix operator*(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a);

// Characteristic polynomial det(tI - A), monic of degree n, by the Berkowitz
// division-free recurrence.  Exact over rings with zero divisors.
Polynomial charpoly(const Matrix& A);

// Exact determinant, division-free: (-1)^n * charpoly(A)(0).
RingElement determinant(const Matrix& A);

// Adjugate (transposed cofactor matrix): A * adj(A) = det(A) * I.
Matrix adjugate(const Matrix& A);

// Inverse when det(A) is a unit: adj(A) * det(A)^-1, with both products
// against A re-verified to be the identity before returning.
std::optional<Matrix> try_invert_matrix(const Matrix& A);

// Companion matrix of a monic polynomial: subdiagonal of ones, last column
// -a_0, ..., -a_{n-1}.
Matrix companion(const Polynomial& h);
bool is_companion(const Matrix& A);

// Sum of coeff(i) * A^i with A^0 = I.
Matrix eval_at_matrix(const Polynomial& p, const Matrix& A);

// Columns alpha, A*alpha, ..., A^{n-1}*alpha.
Matrix krylov_matrix(const Matrix& A, const std::vector<RingElement>& alpha);

// Searches for a column whose Krylov matrix is invertible.  Matrices agreeing
// with a companion matrix below the main diagonal short-circuit to alpha =
// e_1.  Finite rings are exhausted (within budget); over infinite rings the
// candidate box is the standard basis plus all 0/±1 columns, so an empty
// result over an infinite ring means "no witness found", not "not cyclic".
std::optional<std::vector<RingElement>> is_cyclic(const Matrix& A,
                                                  std::int64_t budget = 1 << 20);

// gamma^-1 * A * gamma; gamma must have unit determinant.
Matrix conjugate(const Matrix& A, const Matrix& gamma);

}  // namespace cleanmat
