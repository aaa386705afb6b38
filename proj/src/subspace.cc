#include "sbase/subspace.hpp"

#include <sstream>

namespace sbase {

Subspace::Subspace(FieldPtr F, int n) : F_(std::move(F)), n_(n) {}

Subspace Subspace::span(FieldPtr F, int n, const std::vector<Vec>& rows) {
  Subspace s(std::move(F), n);
  for (auto& r : rows) {
    if (static_cast<int>(r.size()) != n) throw DimensionError("subspace: vector length");
    s.rows_.push_back(r);
  }
  s.reduce();
  return s;
}

Subspace Subspace::coordinate(FieldPtr F, int n, const std::vector<int>& idx) {
  std::vector<Vec> rows;
  for (int i : idx) {
    if (i < 0 || i >= n) throw DimensionError("subspace: coordinate index");
    Vec v(n, 0);
    v[i] = 1;
    rows.push_back(v);
  }
  return span(std::move(F), n, rows);
}

Subspace Subspace::whole(FieldPtr F, int n) {
  std::vector<int> all(n);
  for (int i = 0; i < n; ++i) all[i] = i;
  return coordinate(std::move(F), n, all);
}

void Subspace::reduce() {
  const Field& F = *F_;
  std::vector<Vec> m = std::move(rows_);
  rows_.clear();
  int r = 0;
  for (int c = 0; c < n_ && r < static_cast<int>(m.size()); ++c) {
    int piv = -1;
    for (int i = r; i < static_cast<int>(m.size()); ++i)
      if (m[i][c]) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    std::swap(m[r], m[piv]);
    Elt s = F.inv(m[r][c]);
    for (auto& e : m[r]) e = F.mul(e, s);
    for (int i = 0; i < static_cast<int>(m.size()); ++i) {
      if (i == r || !m[i][c]) continue;
      Elt t = m[i][c];
      for (int k = 0; k < n_; ++k) m[i][k] = F.sub(m[i][k], F.mul(t, m[r][k]));
    }
    ++r;
  }
  m.resize(r);
  rows_ = std::move(m);
}

bool Subspace::contains(const Vec& v) const {
  const Field& F = *F_;
  Vec w = v;
  for (auto& row : rows_) {
    int c = 0;
    while (!row[c]) ++c;
    if (!w[c]) continue;
    Elt t = w[c];
    for (int k = 0; k < n_; ++k) w[k] = F.sub(w[k], F.mul(t, row[k]));
  }
  for (Elt e : w)
    if (e) return false;
  return true;
}

bool Subspace::contains(const Subspace& o) const {
  for (auto& r : o.rows_)
    if (!contains(r)) return false;
  return true;
}

Subspace Subspace::perp() const {
  // free columns of the echelon form give the annihilator basis
  const Field& F = *F_;
  std::vector<int> pivc;
  for (auto& row : rows_) {
    int c = 0;
    while (!row[c]) ++c;
    pivc.push_back(c);
  }
  std::vector<bool> is_piv(n_, false);
  for (int c : pivc) is_piv[c] = true;
  std::vector<Vec> out;
  for (int fcol = 0; fcol < n_; ++fcol) {
    if (is_piv[fcol]) continue;
    Vec v(n_, 0);
    v[fcol] = 1;
    for (size_t i = 0; i < rows_.size(); ++i) v[pivc[i]] = F.neg(rows_[i][fcol]);
    out.push_back(v);
  }
  return span(F_, n_, out);
}

Subspace Subspace::image(const Matrix& g) const {
  std::vector<Vec> out;
  for (auto& r : rows_) out.push_back(vec_mul(r, g));
  return span(F_, n_, out);
}

Subspace Subspace::frob(int j) const {
  if (j == 0) return *this;
  std::vector<Vec> out = rows_;
  for (auto& r : out)
    for (auto& e : r) e = F_->frobenius(e, j);
  return span(F_, n_, out);
}

Subspace Subspace::operator+(const Subspace& o) const {
  std::vector<Vec> all = rows_;
  all.insert(all.end(), o.rows_.begin(), o.rows_.end());
  return span(F_, n_, all);
}

std::string Subspace::str() const {
  std::ostringstream os;
  os << "<";
  for (size_t i = 0; i < rows_.size(); ++i) {
    if (i) os << ";";
    for (int k = 0; k < n_; ++k) os << (k ? "," : "") << rows_[i][k];
  }
  os << ">";
  return os.str();
}

Subspace act(const Subspace& U, const SemiElement& x) {
  if (x.l) throw InvalidArgument("iota acts on pairs, not single subspaces");
  return U.frob(x.j).image(x.g);
}

SubspacePair act(const SubspacePair& P, const SemiElement& x) {
  SubspacePair r = x.l ? SubspacePair{P.W.perp(), P.U.perp()} : P;
  r.U = r.U.frob(x.j).image(x.g);
  r.W = r.W.frob(x.j).image(x.g);
  return r;
}

namespace {

// basis of the nullspace of the rows x d system
std::vector<Vec> nullspace(const Field& F, std::vector<Vec> m, int d) {
  int r = 0;
  std::vector<int> pivc;
  for (int c = 0; c < d && r < static_cast<int>(m.size()); ++c) {
    int piv = -1;
    for (int i = r; i < static_cast<int>(m.size()); ++i)
      if (m[i][c]) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    std::swap(m[r], m[piv]);
    Elt s = F.inv(m[r][c]);
    for (auto& e : m[r]) e = F.mul(e, s);
    for (int i = 0; i < static_cast<int>(m.size()); ++i) {
      if (i == r || !m[i][c]) continue;
      Elt t = m[i][c];
      for (int k = 0; k < d; ++k) m[i][k] = F.sub(m[i][k], F.mul(t, m[r][k]));
    }
    pivc.push_back(c);
    ++r;
  }
  std::vector<bool> is_piv(d, false);
  for (int c : pivc) is_piv[c] = true;
  std::vector<Vec> out;
  for (int fcol = 0; fcol < d; ++fcol) {
    if (is_piv[fcol]) continue;
    Vec v(d, 0);
    v[fcol] = 1;
    for (size_t i = 0; i < pivc.size(); ++i) v[pivc[i]] = F.neg(m[i][fcol]);
    out.push_back(v);
  }
  return out;
}

Elt bilinear(const Field& F, const Vec& x, const Matrix& B, const Vec& w) {
  Elt s = 0;
  const int n = B.rows();
  for (int a = 0; a < n; ++a) {
    if (!x[a]) continue;
    Elt t = 0;
    for (int b = 0; b < n; ++b)
      if (B(a, b) && w[b]) t = F.add(t, F.mul(B(a, b), w[b]));
    s = F.add(s, F.mul(x[a], t));
  }
  return s;
}

}  // namespace

bool provably_singular(const std::vector<Matrix>& span) {
  if (span.empty()) return true;
  FieldPtr Fp = span[0].field();
  const Field& F = *Fp;
  const int n = span[0].rows();
  // common kernel on either side
  for (int side = 0; side < 2; ++side) {
    std::vector<Vec> eqs;
    for (auto& B : span)
      for (int c = 0; c < n; ++c) {
        Vec e(n);
        for (int i = 0; i < n; ++i) e[i] = side ? B(c, i) : B(i, c);
        eqs.push_back(std::move(e));
      }
    if (!nullspace(F, eqs, n).empty()) return true;
  }
  // a coordinate subspace X with dim(X M, M in span) < dim X, rows or columns
  if (n > 12) return false;
  for (int side = 0; side < 2; ++side)
    for (uint32_t mask = 1; mask < (1u << n); ++mask) {
      std::vector<Vec> img;
      int size = 0;
      for (int i = 0; i < n; ++i) {
        if (!(mask >> i & 1)) continue;
        ++size;
        for (auto& B : span) {
          Vec v(n);
          for (int c = 0; c < n; ++c) v[c] = side ? B(c, i) : B(i, c);
          img.push_back(std::move(v));
        }
      }
      if (rank_rows(Fp, img, n) < size) return true;
    }
  return false;
}

std::vector<FamilyResult> solve_families(const std::vector<LinearFamily>& fams,
                                         const std::vector<Containment>& cons, uint64_t enum_cap) {
  std::vector<FamilyResult> out;
  for (const auto& fam : fams) {
    if (fam.basis.empty()) throw InvalidArgument("family with empty basis");
    FieldPtr Fp = fam.basis[0].field();
    const Field& F = *Fp;
    const int n = fam.basis[0].rows();
    const int d = static_cast<int>(fam.basis.size());
    Matrix left = fam.left.rows() ? fam.left : Matrix::identity(Fp, n);
    std::vector<Vec> eqs;
    for (const auto& c : cons) {
      SubspacePair X = fam.l ? SubspacePair{c.src.W.perp(), c.src.U.perp()} : c.src;
      const Subspace* src[2] = {&X.U, &X.W};
      const Subspace* dst[2] = {&c.dst.U, &c.dst.W};
      for (int part = 0; part < 2; ++part) {
        Subspace Y = src[part]->frob(fam.j).image(left);
        Subspace ann = dst[part]->perp();
        for (auto& x : Y.rows())
          for (auto& w : ann.rows()) {
            Vec e(d);
            for (int k = 0; k < d; ++k) e[k] = bilinear(F, x, fam.basis[k], w);
            eqs.push_back(std::move(e));
          }
      }
    }
    FamilyResult res;
    res.family = fam;
    for (auto& v : nullspace(F, eqs, d)) {
      Matrix g(Fp, n, n);
      for (int k = 0; k < d; ++k)
        if (v[k]) g = g + fam.basis[k].scaled(v[k]);
      res.kernel.push_back(g);
    }
    const int kd = static_cast<int>(res.kernel.size());
    uint64_t total = 1;
    bool small = true;
    for (int k = 0; k < kd && small; ++k) {
      if (total > enum_cap / F.q()) small = false;
      total *= F.q();
    }
    if (small) {
      res.enumerated = true;
      std::vector<Elt> coef(kd, 0);
      for (uint64_t t = 0; t < total; ++t) {
        uint64_t u = t;
        Matrix g(Fp, n, n);
        for (int k = 0; k < kd; ++k) {
          coef[k] = static_cast<Elt>(u % F.q());
          u /= F.q();
          if (coef[k]) g = g + res.kernel[k].scaled(coef[k]);
        }
        if (det(g) == 0) continue;
        res.members.emplace_back(left * g, fam.j, fam.l);
      }
      res.count = res.members.size();
    } else if (provably_singular(res.kernel)) {
      res.enumerated = true;
      res.singular = true;
    }
    out.push_back(std::move(res));
  }
  return out;
}

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::holds: return "holds";
    case Verdict::fails: return "fails";
    default: return "inconclusive";
  }
}

Verdict all_members(const std::vector<FamilyResult>& res, const Predicate& pred) {
  bool open = false;
  for (auto& r : res) {
    if (!r.enumerated) {
      open = true;
      continue;
    }
    for (auto& m : r.members)
      if (!pred(m)) return Verdict::fails;
  }
  return open ? Verdict::inconclusive : Verdict::holds;
}

Verdict none_exist(const std::vector<FamilyResult>& res) {
  return all_members(res, [](const SemiElement&) { return false; });
}

std::vector<Matrix> diagonal_basis(FieldPtr F, int n) {
  std::vector<std::pair<int, int>> pos;
  for (int i = 0; i < n; ++i) pos.emplace_back(i, i);
  return unit_basis(F, n, pos);
}

std::vector<Matrix> tied_diagonal_basis(FieldPtr F, int n, const std::vector<std::vector<int>>& ties) {
  std::vector<int> group(n, -1);
  for (size_t t = 0; t < ties.size(); ++t)
    for (int i : ties[t]) {
      if (i < 0 || i >= n || group[i] >= 0) throw InvalidArgument("tied_diagonal_basis: bad tie");
      group[i] = static_cast<int>(t);
    }
  std::vector<Matrix> out;
  for (size_t t = 0; t < ties.size(); ++t) {
    Matrix m(F, n, n);
    for (int i : ties[t]) m.at(i, i) = 1;
    out.push_back(m);
  }
  for (int i = 0; i < n; ++i)
    if (group[i] < 0) {
      Matrix m(F, n, n);
      m.at(i, i) = 1;
      out.push_back(m);
    }
  return out;
}

std::vector<Matrix> block_basis(FieldPtr F, const std::vector<int>& sizes) {
  int n = 0;
  for (int s : sizes) n += s;
  std::vector<std::pair<int, int>> pos;
  int off = 0;
  for (int s : sizes) {
    for (int a = 0; a < s; ++a)
      for (int b = 0; b < s; ++b) pos.emplace_back(off + a, off + b);
    off += s;
  }
  return unit_basis(F, n, pos);
}

std::vector<Matrix> unit_basis(FieldPtr F, int n, const std::vector<std::pair<int, int>>& pos) {
  std::vector<Matrix> out;
  for (auto [r, c] : pos) {
    Matrix m(F, n, n);
    m.at(r, c) = 1;
    out.push_back(m);
  }
  return out;
}

}  // namespace sbase
