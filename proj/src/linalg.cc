#include "sbase/linalg.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace sbase {

Matrix::Matrix(FieldPtr F, int rows, int cols) : F_(std::move(F)), r_(rows), c_(cols) {
  if (rows < 0 || cols < 0) throw DimensionError("negative dimension");
  a_.assign(static_cast<size_t>(rows) * cols, 0);
}

Matrix Matrix::identity(FieldPtr F, int n) { return scalar(std::move(F), n, 1); }

Matrix Matrix::scalar(FieldPtr F, int n, Elt a) {
  Matrix m(std::move(F), n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = a;
  return m;
}

Matrix Matrix::from_rows(FieldPtr F, const std::vector<std::vector<Elt>>& rows) {
  int r = static_cast<int>(rows.size());
  int c = r ? static_cast<int>(rows[0].size()) : 0;
  Matrix m(F, r, c);
  for (int i = 0; i < r; ++i) {
    if (static_cast<int>(rows[i].size()) != c) throw DimensionError("ragged rows");
    for (int j = 0; j < c; ++j) {
      if (!F->valid(rows[i][j])) throw FieldError("entry code out of range");
      m.at(i, j) = rows[i][j];
    }
  }
  return m;
}

void Matrix::same_field(const Matrix& o) const {
  if (!F_ || !o.F_ || !F_->same(*o.F_)) throw FieldError("matrices over different fields");
}

Matrix Matrix::operator*(const Matrix& o) const {
  same_field(o);
  if (c_ != o.r_) throw DimensionError("product dimension mismatch");
  Matrix m(F_, r_, o.c_);
  const Field& F = *F_;
  for (int i = 0; i < r_; ++i)
    for (int k = 0; k < c_; ++k) {
      Elt a = (*this)(i, k);
      if (!a) continue;
      for (int j = 0; j < o.c_; ++j) {
        Elt b = o(k, j);
        if (b) m.at(i, j) = F.add(m(i, j), F.mul(a, b));
      }
    }
  return m;
}

Matrix Matrix::operator+(const Matrix& o) const {
  same_field(o);
  if (r_ != o.r_ || c_ != o.c_) throw DimensionError("sum dimension mismatch");
  Matrix m(F_, r_, c_);
  for (size_t i = 0; i < a_.size(); ++i) m.a_[i] = F_->add(a_[i], o.a_[i]);
  return m;
}

Matrix Matrix::operator-(const Matrix& o) const {
  same_field(o);
  if (r_ != o.r_ || c_ != o.c_) throw DimensionError("difference dimension mismatch");
  Matrix m(F_, r_, c_);
  for (size_t i = 0; i < a_.size(); ++i) m.a_[i] = F_->sub(a_[i], o.a_[i]);
  return m;
}

Matrix Matrix::scaled(Elt a) const {
  Matrix m(*this);
  for (auto& x : m.a_) x = F_->mul(x, a);
  return m;
}

bool Matrix::operator==(const Matrix& o) const {
  if (r_ != o.r_ || c_ != o.c_) return false;
  if (F_ && o.F_ && !F_->same(*o.F_)) return false;
  return a_ == o.a_;
}

bool Matrix::operator<(const Matrix& o) const {
  if (r_ != o.r_) return r_ < o.r_;
  if (c_ != o.c_) return c_ < o.c_;
  return a_ < o.a_;
}

bool Matrix::is_identity() const { return square() && is_scalar() && (r_ == 0 || a_[0] == 1); }

bool Matrix::is_scalar() const {
  if (!is_diagonal()) return false;
  for (int i = 1; i < r_; ++i)
    if ((*this)(i, i) != (*this)(0, 0)) return false;
  return true;
}

bool Matrix::is_diagonal() const {
  for (int i = 0; i < r_; ++i)
    for (int j = 0; j < c_; ++j)
      if (i != j && (*this)(i, j)) return false;
  return true;
}

bool Matrix::is_upper_triangular() const {
  for (int i = 0; i < r_; ++i)
    for (int j = 0; j < i && j < c_; ++j)
      if ((*this)(i, j)) return false;
  return true;
}

bool Matrix::is_lower_triangular() const {
  for (int i = 0; i < r_; ++i)
    for (int j = i + 1; j < c_; ++j)
      if ((*this)(i, j)) return false;
  return true;
}

std::string Matrix::str() const {
  std::string s;
  for (int i = 0; i < r_; ++i) {
    if (i) s += ';';
    for (int j = 0; j < c_; ++j) {
      if (j) s += ',';
      s += std::to_string((*this)(i, j));
    }
  }
  return s;
}

Matrix Matrix::parse(FieldPtr F, std::string_view text) {
  std::vector<std::vector<Elt>> rows;
  std::vector<Elt> cur;
  std::string tok;
  auto flush_tok = [&]() {
    size_t b = tok.find_first_not_of(" \t\n");
    size_t e = tok.find_last_not_of(" \t\n");
    if (b == std::string::npos) throw ParseError("empty matrix entry");
    std::string_view t(tok.data() + b, e - b + 1);
    long v = 0;
    auto res = std::from_chars(t.data(), t.data() + t.size(), v);
    if (res.ec != std::errc() || res.ptr != t.data() + t.size() || v < 0)
      throw ParseError("bad matrix entry '" + std::string(t) + "'");
    if (!F->valid(static_cast<Elt>(v))) throw ParseError("entry out of field range: " + std::string(t));
    cur.push_back(static_cast<Elt>(v));
    tok.clear();
  };
  for (char ch : text) {
    if (ch == ',') {
      flush_tok();
    } else if (ch == ';') {
      flush_tok();
      rows.push_back(std::move(cur));
      cur.clear();
    } else {
      tok += ch;
    }
  }
  flush_tok();
  rows.push_back(std::move(cur));
  for (auto& r : rows)
    if (r.size() != rows[0].size()) throw ParseError("ragged matrix rows");
  return from_rows(F, rows);
}

std::vector<uint8_t> Matrix::key_bytes() const {
  std::vector<uint8_t> out;
  out.reserve(2 + 2 * a_.size());
  out.push_back(static_cast<uint8_t>(r_));
  out.push_back(static_cast<uint8_t>(c_));
  for (Elt x : a_) {
    out.push_back(static_cast<uint8_t>(x >> 8));
    out.push_back(static_cast<uint8_t>(x & 0xff));
  }
  return out;
}

Matrix transpose(const Matrix& g) {
  Matrix t(g.field(), g.cols(), g.rows());
  for (int i = 0; i < g.rows(); ++i)
    for (int j = 0; j < g.cols(); ++j) t.at(j, i) = g(i, j);
  return t;
}

namespace {

// row-reduces a copy, returns rank and determinant contribution
struct Reduction {
  int rank = 0;
  Elt det = 1;
};

Reduction reduce(Matrix& m, Matrix* aug) {
  const Field& F = *m.field();
  Reduction out;
  int r = 0;
  for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
    int piv = -1;
    for (int i = r; i < m.rows(); ++i)
      if (m(i, c)) {
        piv = i;
        break;
      }
    if (piv < 0) {
      out.det = 0;
      continue;
    }
    if (piv != r) {
      for (int j = 0; j < m.cols(); ++j) std::swap(m.at(r, j), m.at(piv, j));
      if (aug)
        for (int j = 0; j < aug->cols(); ++j) std::swap(aug->at(r, j), aug->at(piv, j));
      out.det = F.neg(out.det);
    }
    Elt pv = m(r, c);
    out.det = F.mul(out.det, pv);
    Elt ip = F.inv(pv);
    for (int j = 0; j < m.cols(); ++j) m.at(r, j) = F.mul(m(r, j), ip);
    if (aug)
      for (int j = 0; j < aug->cols(); ++j) aug->at(r, j) = F.mul((*aug)(r, j), ip);
    for (int i = 0; i < m.rows(); ++i) {
      if (i == r) continue;
      Elt t = m(i, c);
      if (!t) continue;
      Elt nt = F.neg(t);
      for (int j = 0; j < m.cols(); ++j) m.at(i, j) = F.add(m(i, j), F.mul(nt, m(r, j)));
      if (aug)
        for (int j = 0; j < aug->cols(); ++j) aug->at(i, j) = F.add((*aug)(i, j), F.mul(nt, (*aug)(r, j)));
    }
    ++r;
  }
  out.rank = r;
  if (r < m.rows()) out.det = 0;
  return out;
}

}  // namespace

Matrix inverse(const Matrix& g) {
  if (!g.square()) throw DimensionError("inverse of non-square matrix");
  Matrix m(g);
  Matrix aug = Matrix::identity(g.field(), g.rows());
  Reduction r = reduce(m, &aug);
  if (r.rank < g.rows()) throw SingularMatrix("matrix is singular");
  return aug;
}

Elt det(const Matrix& g) {
  if (!g.square()) throw DimensionError("determinant of non-square matrix");
  Matrix m(g);
  Reduction r = reduce(m, nullptr);
  return r.rank < g.rows() ? 0 : r.det;
}

int rank(const Matrix& g) {
  Matrix m(g);
  return reduce(m, nullptr).rank;
}

Matrix frob(const Matrix& g, int j) {
  Matrix m(g);
  const Field& F = *g.field();
  if (F.f() == 1 || j % static_cast<int>(F.f()) == 0) return m;
  for (int i = 0; i < g.rows(); ++i)
    for (int c = 0; c < g.cols(); ++c) m.at(i, c) = F.frobenius(g(i, c), j);
  return m;
}

Matrix iota(const Matrix& g) { return transpose(inverse(g)); }

Matrix perm_matrix(FieldPtr F, const std::vector<int>& sigma) {
  int n = static_cast<int>(sigma.size());
  std::vector<bool> seen(n, false);
  Matrix m(F, n, n);
  for (int i = 0; i < n; ++i) {
    if (sigma[i] < 0 || sigma[i] >= n || seen[sigma[i]]) throw InvalidArgument("not a permutation");
    seen[sigma[i]] = true;
    m.at(i, sigma[i]) = 1;
  }
  return m;
}

Matrix kron(const Matrix& g, const Matrix& h) {
  if (!g.field()->same(*h.field())) throw FieldError("matrices over different fields");
  const Field& F = *g.field();
  Matrix m(g.field(), g.rows() * h.rows(), g.cols() * h.cols());
  for (int bi = 0; bi < h.rows(); ++bi)
    for (int bj = 0; bj < h.cols(); ++bj) {
      Elt s = h(bi, bj);
      if (!s) continue;
      for (int i = 0; i < g.rows(); ++i)
        for (int j = 0; j < g.cols(); ++j) m.at(bi * g.rows() + i, bj * g.cols() + j) = F.mul(s, g(i, j));
    }
  return m;
}

Matrix block_diag(const std::vector<Matrix>& blocks) {
  if (blocks.empty()) throw DimensionError("no blocks");
  int r = 0, c = 0;
  for (auto& b : blocks) {
    if (!b.field()->same(*blocks[0].field())) throw FieldError("blocks over different fields");
    r += b.rows();
    c += b.cols();
  }
  Matrix m(blocks[0].field(), r, c);
  int r0 = 0, c0 = 0;
  for (auto& b : blocks) {
    set_block(m, r0, c0, b);
    r0 += b.rows();
    c0 += b.cols();
  }
  return m;
}

Matrix diag(FieldPtr F, const std::vector<Elt>& entries) {
  int n = static_cast<int>(entries.size());
  Matrix m(F, n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = entries[i];
  return m;
}

Matrix pow(const Matrix& g, int64_t e) {
  Matrix base = e < 0 ? inverse(g) : g;
  if (e < 0) e = -e;
  Matrix r = Matrix::identity(g.field(), g.rows());
  while (e) {
    if (e & 1) r = r * base;
    base = base * base;
    e >>= 1;
  }
  return r;
}

void set_block(Matrix& dst, int r0, int c0, const Matrix& src) {
  if (r0 + src.rows() > dst.rows() || c0 + src.cols() > dst.cols()) throw DimensionError("block out of range");
  for (int i = 0; i < src.rows(); ++i)
    for (int j = 0; j < src.cols(); ++j) dst.at(r0 + i, c0 + j) = src(i, j);
}

Matrix get_block(const Matrix& src, int r0, int c0, int rows, int cols) {
  Matrix m(src.field(), rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m.at(i, j) = src(r0 + i, c0 + j);
  return m;
}

std::vector<Elt> vec_mul(const std::vector<Elt>& v, const Matrix& g) {
  if (static_cast<int>(v.size()) != g.rows()) throw DimensionError("vector length mismatch");
  const Field& F = *g.field();
  std::vector<Elt> out(g.cols(), 0);
  for (int i = 0; i < g.rows(); ++i) {
    if (!v[i]) continue;
    for (int j = 0; j < g.cols(); ++j) out[j] = F.add(out[j], F.mul(v[i], g(i, j)));
  }
  return out;
}

int rank_rows(FieldPtr F, const std::vector<std::vector<Elt>>& rows, int ncols) {
  if (rows.empty()) return 0;
  Matrix m(F, static_cast<int>(rows.size()), ncols);
  for (size_t i = 0; i < rows.size(); ++i)
    for (int j = 0; j < ncols; ++j) m.at(static_cast<int>(i), j) = rows[i][j];
  return rank(m);
}

int perm_sign(const std::vector<int>& sigma) {
  int n = static_cast<int>(sigma.size());
  std::vector<bool> seen(n, false);
  int sign = 1;
  for (int i = 0; i < n; ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (int j = i; !seen[j]; j = sigma[j]) {
      seen[j] = true;
      ++len;
    }
    if (len % 2 == 0) sign = -sign;
  }
  return sign;
}

}  // namespace sbase
