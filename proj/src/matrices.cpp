#include "cleanmat/matrices.hpp"

#include <algorithm>

namespace cleanmat {

Matrix::Matrix(RingPtr ring, int rows, int cols)
    : ring_(std::move(ring)), rows_(rows), cols_(cols) {
    if (rows < 1 || cols < 1) throw PreconditionError("matrix dimensions must be positive");
    if (rows > max_dim || cols > max_dim) {
        throw GuardError("matrix dimension exceeds " + std::to_string(max_dim));
    }
    entries_.assign(static_cast<size_t>(rows) * cols, ring_->zero());
}

Matrix::Matrix(RingPtr ring, int rows, int cols, std::vector<RingElement> entries)
    : Matrix(std::move(ring), rows, cols) {
    if (entries.size() != static_cast<size_t>(rows) * cols) {
        throw PreconditionError("entry count does not match matrix shape");
    }
    for (const RingElement& e : entries) {
        if (!e.valid() || !e.ring().same_as(*ring_)) {
            throw DescriptorMismatchError("matrix entry outside " + ring_->name());
        }
    }
    entries_ = std::move(entries);
}

Matrix Matrix::identity(const RingPtr& ring, int n) {
    Matrix I(ring, n, n);
    for (int i = 0; i < n; ++i) I.set(i, i, ring->one());
    return I;
}

Matrix Matrix::from_rows(const RingPtr& ring,
                         const std::vector<std::vector<RingElement>>& rows) {
    if (rows.empty() || rows[0].empty()) throw PreconditionError("empty matrix literal");
    std::vector<RingElement> flat;
    for (const auto& row : rows) {
        if (row.size() != rows[0].size()) throw PreconditionError("ragged matrix literal");
        flat.insert(flat.end(), row.begin(), row.end());
    }
    return Matrix(ring, static_cast<int>(rows.size()), static_cast<int>(rows[0].size()),
                  std::move(flat));
}

const RingElement& Matrix::at(int i, int j) const {
    if (i < 0 || i >= rows_ || j < 0 || j >= cols_) {
        throw PreconditionError("matrix index out of range");
    }
    return entries_[static_cast<size_t>(i) * cols_ + j];
}

void Matrix::set(int i, int j, RingElement v) {
    if (i < 0 || i >= rows_ || j < 0 || j >= cols_) {
        throw PreconditionError("matrix index out of range");
    }
    if (!v.valid() || !v.ring().same_as(*ring_)) {
        throw DescriptorMismatchError("matrix entry outside " + ring_->name());
    }
    entries_[static_cast<size_t>(i) * cols_ + j] = std::move(v);
}

void Matrix::check_same_ring(const Matrix& other) const {
    if (!ring_->same_as(*other.ring_)) {
        throw DescriptorMismatchError("matrices over different rings: " + ring_->name() +
                                      " vs " + other.ring_->name());
    }
}

Matrix Matrix::add(const Matrix& other) const {
    check_same_ring(other);
    if (rows_ != other.rows_ || cols_ != other.cols_) {
        throw PreconditionError("matrix shape mismatch in add");
    }
    Matrix out(ring_, rows_, cols_);
    for (size_t k = 0; k < entries_.size(); ++k) {
        out.entries_[k] = ring_->add(entries_[k], other.entries_[k]);
    }
    return out;
}

Matrix Matrix::sub(const Matrix& other) const { return add(other.neg()); }

Matrix Matrix::neg() const {
    Matrix out(ring_, rows_, cols_);
    for (size_t k = 0; k < entries_.size(); ++k) out.entries_[k] = ring_->neg(entries_[k]);
    return out;
}

Matrix Matrix::mul(const Matrix& other) const {
    check_same_ring(other);
    if (cols_ != other.rows_) throw PreconditionError("matrix shape mismatch in mul");
    Matrix out(ring_, rows_, other.cols_);
    for (int i = 0; i < rows_; ++i) {
        for (int j = 0; j < other.cols_; ++j) {
            RingElement acc = ring_->zero();
            for (int k = 0; k < cols_; ++k) {
                acc = ring_->add(acc, ring_->mul(at(i, k), other.at(k, j)));
            }
            out.set(i, j, std::move(acc));
        }
    }
    return out;
}

Matrix Matrix::scalar_mul(const RingElement& c) const {
    Matrix out(ring_, rows_, cols_);
    for (size_t k = 0; k < entries_.size(); ++k) out.entries_[k] = ring_->mul(entries_[k], c);
    return out;
}

bool Matrix::operator==(const Matrix& other) const {
    check_same_ring(other);
    if (rows_ != other.rows_ || cols_ != other.cols_) return false;
    for (size_t k = 0; k < entries_.size(); ++k) {
        if (entries_[k] != other.entries_[k]) return false;
    }
    return true;
}

Matrix operator+(const Matrix& a, const Matrix& b) { return a.add(b); }
Matrix operator-(const Matrix& a, const Matrix& b) { return a.sub(b); }
Matrix operator*(const Matrix& a, const Matrix& b) { return a.mul(b); }
Matrix operator-(const Matrix& a) { return a.neg(); }

Polynomial charpoly(const Matrix& A) {
    if (!A.is_square()) throw PreconditionError("characteristic polynomial needs a square matrix");
    const RingPtr& ring = A.ring_ptr();
    const int n = A.rows();

    // Berkowitz recurrence.  v holds the coefficients of the characteristic
    // polynomial of the leading r x r block, highest degree first.
    std::vector<RingElement> v = {ring->one(), ring->neg(A.at(0, 0))};
    for (int r = 2; r <= n; ++r) {
        // Toeplitz column: t_0 = 1, t_1 = -a_rr, t_k = -(R * B^{k-2} * C)
        // with B the leading (r-1) block, R the row left of a_rr, C the
        // column above it.
        std::vector<RingElement> t;
        t.reserve(static_cast<size_t>(r) + 1);
        t.push_back(ring->one());
        t.push_back(ring->neg(A.at(r - 1, r - 1)));
        std::vector<RingElement> w(static_cast<size_t>(r) - 1);
        for (int i = 0; i < r - 1; ++i) w[static_cast<size_t>(i)] = A.at(i, r - 1);
        for (int k = 2; k <= r; ++k) {
            RingElement dot = ring->zero();
            for (int i = 0; i < r - 1; ++i) {
                dot = ring->add(dot, ring->mul(A.at(r - 1, i), w[static_cast<size_t>(i)]));
            }
            t.push_back(ring->neg(dot));
            if (k == r) break;
            std::vector<RingElement> next(static_cast<size_t>(r) - 1, ring->zero());
            for (int i = 0; i < r - 1; ++i) {
                for (int j = 0; j < r - 1; ++j) {
                    next[static_cast<size_t>(i)] = ring->add(
                        next[static_cast<size_t>(i)],
                        ring->mul(A.at(i, j), w[static_cast<size_t>(j)]));
                }
            }
            w = std::move(next);
        }

        std::vector<RingElement> nv(static_cast<size_t>(r) + 1, ring->zero());
        for (size_t i = 0; i < nv.size(); ++i) {
            for (size_t j = 0; j < v.size(); ++j) {
                if (i < j || i - j >= t.size()) continue;
                nv[i] = ring->add(nv[i], ring->mul(t[i - j], v[j]));
            }
        }
        v = std::move(nv);
    }

    // v is descending; the polynomial type wants lowest first.
    std::vector<RingElement> coeffs(v.rbegin(), v.rend());
    return Polynomial(ring, std::move(coeffs));
}

RingElement determinant(const Matrix& A) {
    if (!A.is_square()) throw PreconditionError("determinant needs a square matrix");
    const RingPtr& ring = A.ring_ptr();
    RingElement chi0 = charpoly(A).coeff(0);
    return A.rows() % 2 == 0 ? chi0 : ring->neg(chi0);
}

namespace {

Matrix drop_row_col(const Matrix& A, int row, int col) {
    Matrix out(A.ring_ptr(), A.rows() - 1, A.cols() - 1);
    int oi = 0;
    for (int i = 0; i < A.rows(); ++i) {
        if (i == row) continue;
        int oj = 0;
        for (int j = 0; j < A.cols(); ++j) {
            if (j == col) continue;
            out.set(oi, oj, A.at(i, j));
            ++oj;
        }
        ++oi;
    }
    return out;
}

}  // namespace

Matrix adjugate(const Matrix& A) {
    if (!A.is_square()) throw PreconditionError("adjugate needs a square matrix");
    const RingPtr& ring = A.ring_ptr();
    const int n = A.rows();
    if (n == 1) return Matrix::identity(ring, 1);
    Matrix adj(ring, n, n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            RingElement minor = determinant(drop_row_col(A, i, j));
            adj.set(j, i, (i + j) % 2 == 0 ? minor : ring->neg(minor));
        }
    }
    return adj;
}

std::optional<Matrix> try_invert_matrix(const Matrix& A) {
    if (!A.is_square()) throw PreconditionError("inverse needs a square matrix");
    const RingPtr& ring = A.ring_ptr();
    auto det_inv = ring->try_invert(determinant(A));
    if (!det_inv) return std::nullopt;
    Matrix inv = adjugate(A).scalar_mul(*det_inv);
    Matrix I = Matrix::identity(ring, A.rows());
    if (A * inv != I || inv * A != I) {
        throw VerificationError("adjugate inverse failed the identity check");
    }
    return inv;
}

Matrix companion(const Polynomial& h) {
    if (!h.is_monic() || h.degree() < 1) {
        throw PreconditionError("companion matrix needs a monic polynomial of degree >= 1");
    }
    const RingPtr& ring = h.ring_ptr();
    const int n = h.degree();
    Matrix C(ring, n, n);
    for (int j = 0; j + 1 < n; ++j) C.set(j + 1, j, ring->one());
    for (int i = 0; i < n; ++i) C.set(i, n - 1, ring->neg(h.coeff(i)));
    return C;
}

bool is_companion(const Matrix& A) {
    if (!A.is_square()) return false;
    const Ring& ring = A.ring();
    const int n = A.rows();
    if (n == 1) return true;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j + 1 < n; ++j) {
            bool want_one = (i == j + 1);
            if (want_one ? !ring.is_one(A.at(i, j)) : !ring.is_zero(A.at(i, j))) return false;
        }
    }
    return true;
}

Matrix eval_at_matrix(const Polynomial& p, const Matrix& A) {
    if (!A.is_square()) throw PreconditionError("polynomial evaluation needs a square matrix");
    const RingPtr& ring = A.ring_ptr();
    if (!ring->same_as(p.ring())) {
        throw DescriptorMismatchError("polynomial and matrix over different rings");
    }
    Matrix acc = Matrix::zero(ring, A.rows());
    Matrix I = Matrix::identity(ring, A.rows());
    for (int i = p.degree(); i >= 0; --i) {
        acc = acc * A + I.scalar_mul(p.coeff(i));
    }
    return acc;
}

Matrix krylov_matrix(const Matrix& A, const std::vector<RingElement>& alpha) {
    if (!A.is_square()) throw PreconditionError("Krylov matrix needs a square matrix");
    const int n = A.rows();
    if (static_cast<int>(alpha.size()) != n) {
        throw PreconditionError("Krylov column length must match the matrix size");
    }
    const RingPtr& ring = A.ring_ptr();
    Matrix K(ring, n, n);
    std::vector<RingElement> col = alpha;
    for (int j = 0; j < n; ++j) {
        for (int i = 0; i < n; ++i) K.set(i, j, col[static_cast<size_t>(i)]);
        if (j + 1 == n) break;
        std::vector<RingElement> next(static_cast<size_t>(n), ring->zero());
        for (int i = 0; i < n; ++i) {
            for (int k = 0; k < n; ++k) {
                next[static_cast<size_t>(i)] =
                    ring->add(next[static_cast<size_t>(i)],
                              ring->mul(A.at(i, k), col[static_cast<size_t>(k)]));
            }
        }
        col = std::move(next);
    }
    return K;
}

namespace {

bool companion_below_diagonal(const Matrix& A) {
    const Ring& ring = A.ring();
    for (int i = 0; i < A.rows(); ++i) {
        for (int j = 0; j < i; ++j) {
            bool want_one = (i == j + 1);
            if (want_one ? !ring.is_one(A.at(i, j)) : !ring.is_zero(A.at(i, j))) return false;
        }
    }
    return true;
}

bool krylov_invertible(const Matrix& A, const std::vector<RingElement>& alpha) {
    return A.ring().is_unit(determinant(krylov_matrix(A, alpha)));
}

}  // namespace

std::optional<std::vector<RingElement>> is_cyclic(const Matrix& A, std::int64_t budget) {
    if (!A.is_square()) throw PreconditionError("cyclicity test needs a square matrix");
    const RingPtr& ring = A.ring_ptr();
    const int n = A.rows();

    if (companion_below_diagonal(A)) {
        std::vector<RingElement> e1(static_cast<size_t>(n), ring->zero());
        e1[0] = ring->one();
        if (krylov_invertible(A, e1)) return e1;
    }

    if (ring->is_finite()) {
        Int total = 1;
        for (int i = 0; i < n; ++i) total *= *ring->cardinality();
        if (total > budget) return std::nullopt;  // inconclusive, callers treat as no witness
        for (Int k = 0; k < total; ++k) {
            std::vector<RingElement> alpha;
            alpha.reserve(static_cast<size_t>(n));
            Int rest = k;
            for (int i = 0; i < n; ++i) {
                alpha.push_back(ring->element_at(rest % *ring->cardinality()));
                rest /= *ring->cardinality();
            }
            if (krylov_invertible(A, alpha)) return alpha;
        }
        return std::nullopt;
    }

    // Infinite ring: bounded candidate box of standard basis and 0/±1 columns.
    for (int i = 0; i < n; ++i) {
        std::vector<RingElement> e(static_cast<size_t>(n), ring->zero());
        e[static_cast<size_t>(i)] = ring->one();
        if (krylov_invertible(A, e)) return e;
    }
    std::int64_t total = 1;
    for (int i = 0; i < n; ++i) total *= 3;
    for (std::int64_t k = 0; k < total; ++k) {
        std::vector<RingElement> alpha;
        alpha.reserve(static_cast<size_t>(n));
        std::int64_t rest = k;
        for (int i = 0; i < n; ++i) {
            int digit = static_cast<int>(rest % 3);
            rest /= 3;
            alpha.push_back(ring->from_int(digit == 2 ? -1 : digit));
        }
        if (krylov_invertible(A, alpha)) return alpha;
    }
    return std::nullopt;
}

Matrix conjugate(const Matrix& A, const Matrix& gamma) {
    auto inv = try_invert_matrix(gamma);
    if (!inv) throw PreconditionError("conjugating matrix must have unit determinant");
    return *inv * A * gamma;
}

}  // namespace cleanmat
