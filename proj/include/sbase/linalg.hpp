#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "sbase/gf.hpp"

namespace sbase {

// Dense matrix over a finite field. Vectors are rows and act on the right:
// row i of g is the image of the i-th basis vector.
class Matrix {
 public:
  Matrix() = default;
  Matrix(FieldPtr F, int rows, int cols);

  static Matrix identity(FieldPtr F, int n);
  static Matrix scalar(FieldPtr F, int n, Elt a);
  static Matrix from_rows(FieldPtr F, const std::vector<std::vector<Elt>>& rows);

  const FieldPtr& field() const { return F_; }
  int rows() const { return r_; }
  int cols() const { return c_; }
  bool square() const { return r_ == c_; }
  Elt operator()(int i, int j) const { return a_[static_cast<size_t>(i) * c_ + j]; }
  Elt& at(int i, int j) { return a_[static_cast<size_t>(i) * c_ + j]; }
  const std::vector<Elt>& data() const { return a_; }

  Matrix operator*(const Matrix& o) const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix scaled(Elt a) const;
  bool operator==(const Matrix& o) const;
  bool operator!=(const Matrix& o) const { return !(*this == o); }
  // canonical order: dimensions, then row-major codes
  bool operator<(const Matrix& o) const;

  bool is_identity() const;
  bool is_scalar() const;
  bool is_diagonal() const;
  bool is_upper_triangular() const;
  bool is_lower_triangular() const;

  // "a,b;c,d" with integer codes
  std::string str() const;
  static Matrix parse(FieldPtr F, std::string_view text);
  // canonical byte encoding: n, then row-major codes (two bytes each)
  std::vector<uint8_t> key_bytes() const;

 private:
  void same_field(const Matrix& o) const;
  FieldPtr F_;
  int r_ = 0, c_ = 0;
  std::vector<Elt> a_;
};

Matrix transpose(const Matrix& g);
Matrix inverse(const Matrix& g);
Elt det(const Matrix& g);
int rank(const Matrix& g);
// entrywise a -> a^(p^j)
Matrix frob(const Matrix& g, int j);
// inverse transpose
Matrix iota(const Matrix& g);
// row i has its 1 in column sigma[i]
Matrix perm_matrix(FieldPtr F, const std::vector<int>& sigma);
// blocks g * h(i,j); the outer index runs over h
Matrix kron(const Matrix& g, const Matrix& h);
Matrix block_diag(const std::vector<Matrix>& blocks);
Matrix diag(FieldPtr F, const std::vector<Elt>& entries);
Matrix pow(const Matrix& g, int64_t e);
// element-wise copy with a sub-block written at (r0, c0)
void set_block(Matrix& dst, int r0, int c0, const Matrix& src);
Matrix get_block(const Matrix& src, int r0, int c0, int rows, int cols);

// row vector helpers
std::vector<Elt> vec_mul(const std::vector<Elt>& v, const Matrix& g);
// rank of a list of row vectors
int rank_rows(FieldPtr F, const std::vector<std::vector<Elt>>& rows, int ncols);

int perm_sign(const std::vector<int>& sigma);

}  // namespace sbase
