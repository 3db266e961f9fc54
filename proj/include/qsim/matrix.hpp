#pragma once

#include <initializer_list>
#include <vector>

#include "qsim/state.hpp"

namespace qsim {

/// Row-major dense complex matrix. Kets and bras are represented as n-by-1 and
/// 1-by-n matrices respectively, so tensor_product covers vectors as well.
class DenseMatrix {
 public:
  /// Zero-filled rows-by-cols matrix.
  DenseMatrix(int rows, int cols);

  static DenseMatrix identity(int n);

  /// Builds a matrix from a nested brace list; all rows must have equal width.
  static DenseMatrix from_rows(
      std::initializer_list<std::initializer_list<Complex>> rows);

  /// n-by-1 column matrix holding v.
  static DenseMatrix column(const std::vector<Complex>& v);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Complex& at(int row, int col);
  const Complex& at(int row, int col) const;

  DenseMatrix operator*(const DenseMatrix& rhs) const;

  /// Matrix-vector product; v.size() must equal cols().
  std::vector<Complex> operator*(const std::vector<Complex>& v) const;

  /// Conjugate transpose.
  DenseMatrix adjoint() const;

 private:
  int rows_;
  int cols_;
  std::vector<Complex> entries_;
};

/// Kronecker product: block (i,j) of the result is a(i,j) * b. Result is
/// (a.rows*b.rows) by (a.cols*b.cols).
DenseMatrix tensor_product(const DenseMatrix& a, const DenseMatrix& b);

/// <bra|ket> = sum_i conj(bra[i]) * ket[i]. Dimensions must match.
Complex inner_product(const StateVector& bra, const StateVector& ket);

/// |ket><bra|: entry (i,j) = ket[i] * conj(bra[j]).
DenseMatrix outer_product(const StateVector& ket, const StateVector& bra);

/// True iff the max-norm of (m^dagger * m - I) is at most tol. m must be
/// square.
bool is_unitary(const DenseMatrix& m, double tol = 1e-10);

/// For a 2-qubit state with amplitudes (alpha, beta, gamma, delta): true iff
/// |alpha*delta - beta*gamma| <= tol, i.e. the state factors into a tensor
/// product of two single-qubit states (otherwise it is entangled).
bool is_product_state_2q(const StateVector& s, double tol = 1e-10);

/// Largest entrywise |a - b|; dimensions must match.
double max_abs_diff(const DenseMatrix& a, const DenseMatrix& b);

}  // namespace qsim
