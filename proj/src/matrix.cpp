#include "qsim/matrix.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace qsim {

DenseMatrix::DenseMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
  if (rows < 1 || cols < 1) {
    throw std::invalid_argument("DenseMatrix: dimensions must be positive");
  }
  entries_.assign(static_cast<std::size_t>(rows) * cols, Complex{0.0, 0.0});
}

DenseMatrix DenseMatrix::identity(int n) {
  DenseMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = Complex{1.0, 0.0};
  return m;
}

DenseMatrix DenseMatrix::from_rows(
    std::initializer_list<std::initializer_list<Complex>> rows) {
  const int num_rows = static_cast<int>(rows.size());
  if (num_rows == 0) {
    throw std::invalid_argument("DenseMatrix::from_rows: empty row list");
  }
  const int num_cols = static_cast<int>(rows.begin()->size());
  DenseMatrix m(num_rows, num_cols);
  int r = 0;
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != num_cols) {
      throw std::invalid_argument("DenseMatrix::from_rows: ragged rows");
    }
    int c = 0;
    for (const Complex& v : row) m.at(r, c++) = v;
    ++r;
  }
  return m;
}

DenseMatrix DenseMatrix::column(const std::vector<Complex>& v) {
  DenseMatrix m(static_cast<int>(v.size()), 1);
  for (int i = 0; i < m.rows(); ++i) m.at(i, 0) = v[static_cast<std::size_t>(i)];
  return m;
}

Complex& DenseMatrix::at(int row, int col) {
  if (row < 0 || row >= rows_ || col < 0 || col >= cols_) {
    throw std::out_of_range("DenseMatrix::at: (" + std::to_string(row) + ", " +
                            std::to_string(col) + ") out of range");
  }
  return entries_[static_cast<std::size_t>(row) * cols_ + col];
}

const Complex& DenseMatrix::at(int row, int col) const {
  return const_cast<DenseMatrix*>(this)->at(row, col);
}

DenseMatrix DenseMatrix::operator*(const DenseMatrix& rhs) const {
  if (cols_ != rhs.rows_) {
    throw std::invalid_argument("DenseMatrix::operator*: dimension mismatch");
  }
  DenseMatrix out(rows_, rhs.cols_);
  for (int i = 0; i < rows_; ++i) {
    for (int k = 0; k < cols_; ++k) {
      const Complex aik = at(i, k);
      if (aik == Complex{0.0, 0.0}) continue;
      for (int j = 0; j < rhs.cols_; ++j) {
        out.at(i, j) += aik * rhs.at(k, j);
      }
    }
  }
  return out;
}

std::vector<Complex> DenseMatrix::operator*(
    const std::vector<Complex>& v) const {
  if (static_cast<int>(v.size()) != cols_) {
    throw std::invalid_argument("DenseMatrix::operator*: vector length " +
                                std::to_string(v.size()) + " != cols " +
                                std::to_string(cols_));
  }
  std::vector<Complex> out(static_cast<std::size_t>(rows_), Complex{0.0, 0.0});
  for (int i = 0; i < rows_; ++i) {
    Complex acc{0.0, 0.0};
    for (int j = 0; j < cols_; ++j) acc += at(i, j) * v[static_cast<std::size_t>(j)];
    out[static_cast<std::size_t>(i)] = acc;
  }
  return out;
}

DenseMatrix DenseMatrix::adjoint() const {
  DenseMatrix out(cols_, rows_);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) {
      out.at(j, i) = std::conj(at(i, j));
    }
  }
  return out;
}

DenseMatrix tensor_product(const DenseMatrix& a, const DenseMatrix& b) {
  DenseMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (int ia = 0; ia < a.rows(); ++ia) {
    for (int ja = 0; ja < a.cols(); ++ja) {
      const Complex scale = a.at(ia, ja);
      if (scale == Complex{0.0, 0.0}) continue;
      for (int ib = 0; ib < b.rows(); ++ib) {
        for (int jb = 0; jb < b.cols(); ++jb) {
          out.at(ia * b.rows() + ib, ja * b.cols() + jb) = scale * b.at(ib, jb);
        }
      }
    }
  }
  return out;
}

Complex inner_product(const StateVector& bra, const StateVector& ket) {
  if (bra.num_qubits() != ket.num_qubits()) {
    throw std::invalid_argument("inner_product: qubit count mismatch");
  }
  Complex acc{0.0, 0.0};
  const auto& b = bra.amplitudes();
  const auto& k = ket.amplitudes();
  for (std::size_t i = 0; i < b.size(); ++i) acc += std::conj(b[i]) * k[i];
  return acc;
}

DenseMatrix outer_product(const StateVector& ket, const StateVector& bra) {
  const auto& k = ket.amplitudes();
  const auto& b = bra.amplitudes();
  DenseMatrix out(static_cast<int>(k.size()), static_cast<int>(b.size()));
  for (int i = 0; i < out.rows(); ++i) {
    for (int j = 0; j < out.cols(); ++j) {
      out.at(i, j) = k[static_cast<std::size_t>(i)] *
                     std::conj(b[static_cast<std::size_t>(j)]);
    }
  }
  return out;
}

bool is_unitary(const DenseMatrix& m, double tol) {
  if (m.rows() != m.cols()) {
    throw std::invalid_argument("is_unitary: matrix must be square");
  }
  const DenseMatrix product = m.adjoint() * m;
  return max_abs_diff(product, DenseMatrix::identity(m.rows())) <= tol;
}

bool is_product_state_2q(const StateVector& s, double tol) {
  if (s.num_qubits() != 2) {
    throw std::invalid_argument("is_product_state_2q: state must have 2 qubits");
  }
  const auto& a = s.amplitudes();
  return std::abs(a[0] * a[3] - a[1] * a[2]) <= tol;
}

double max_abs_diff(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw std::invalid_argument("max_abs_diff: dimension mismatch");
  }
  double worst = 0.0;
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) {
      worst = std::max(worst, std::abs(a.at(i, j) - b.at(i, j)));
    }
  }
  return worst;
}

}  // namespace qsim
