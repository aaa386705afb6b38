#include "sbase/bounds.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "sbase/errors.hpp"
#include "sbase/gf.hpp"

namespace sbase {

mpz_class ipow(const mpz_class& b, unsigned long e) {
  mpz_class r;
  mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
  return r;
}

namespace {

mpq_class qpow(const mpq_class& b, unsigned long e) {
  mpq_class r(ipow(b.get_num(), e), ipow(b.get_den(), e));
  r.canonicalize();
  return r;
}

// exact k-th root of a nonnegative integer, if any
bool exact_root(const mpz_class& v, unsigned k, mpz_class& out) {
  if (k == 1) {
    out = v;
    return true;
  }
  return mpz_root(out.get_mpz_t(), v.get_mpz_t(), k) != 0;
}

}  // namespace

RootRational::RootRational(const mpq_class& r, unsigned root) : r_(r), k_(root) {
  r_.canonicalize();
  if (k_ == 0) throw InvalidArgument("root of order 0");
  if (r_ <= 0) throw InvalidArgument("RootRational needs a positive value");
  normalize();
}

RootRational RootRational::power(const mpq_class& base, long num, unsigned den) {
  if (base <= 0) throw InvalidArgument("power of a nonpositive base");
  mpq_class b = num >= 0 ? base : mpq_class(1) / base;
  return RootRational(qpow(b, static_cast<unsigned long>(num >= 0 ? num : -num)), den);
}

// pull the root out whenever numerator and denominator are perfect powers
void RootRational::normalize() {
  for (unsigned d = k_; d >= 2; --d) {
    if (k_ % d) continue;
    mpz_class a, b;
    if (exact_root(r_.get_num(), d, a) && exact_root(r_.get_den(), d, b)) {
      r_ = mpq_class(a, b);
      r_.canonicalize();
      k_ /= d;
      normalize();
      return;
    }
  }
}

RootRational RootRational::operator*(const RootRational& o) const {
  unsigned k = std::lcm(k_, o.k_);
  return RootRational(qpow(r_, k / k_) * qpow(o.r_, k / o.k_), k);
}

RootRational RootRational::operator/(const RootRational& o) const {
  unsigned k = std::lcm(k_, o.k_);
  return RootRational(qpow(r_, k / k_) / qpow(o.r_, k / o.k_), k);
}

RootRational RootRational::pow(long e) const {
  mpq_class b = e >= 0 ? r_ : mpq_class(1) / r_;
  return RootRational(qpow(b, static_cast<unsigned long>(e >= 0 ? e : -e)), k_);
}

RootRational RootRational::operator+(const RootRational& o) const {
  if (k_ != 1 || o.k_ != 1) throw InvalidArgument("sum of irrational roots");
  return RootRational(r_ + o.r_);
}

int RootRational::compare(const RootRational& o) const {
  unsigned k = std::lcm(k_, o.k_);
  return cmp(qpow(r_, k / k_), qpow(o.r_, k / o.k_));
}

std::string RootRational::str() const {
  if (k_ == 1) return r_.get_str();
  return "(" + r_.get_str() + ")^(1/" + std::to_string(k_) + ")";
}

std::string RootRational::approx(int digits) const {
  mpf_class v(r_, 256);
  if (k_ > 1) {
    // bisection on x^k = v
    mpf_class x(1, 256);
    mpf_class lo(0, 256), hi(v > 1 ? v : mpf_class(1, 256), 256);
    for (int it = 0; it < 400; ++it) {
      x = (lo + hi) / 2;
      mpf_class p(1, 256);
      for (unsigned i = 0; i < k_; ++i) p *= x;
      (p < v ? lo : hi) = x;
    }
    v = x;
  }
  mp_exp_t ex;
  std::string s = v.get_str(ex, 10, digits);
  if (s.empty()) return "0";
  std::string m = s.substr(0, 1);
  if (s.size() > 1) m += "." + s.substr(1);
  return m + "e" + std::to_string(ex - 1);
}

// ---- class sizes

mpq_class class_size_lower(int n, uint64_t q, int s) {
  if (n < 1 || s < 1 || s > n) throw InvalidArgument("class_size_lower: need 1 <= s <= n");
  if (q < 2) throw InvalidArgument("class_size_lower: q < 2");
  unsigned long e;
  if (2 * s >= n)
    e = static_cast<unsigned long>(n) * s;
  else if (4 * s >= n)
    e = 2ul * s * (n - s);
  else
    throw OutOfRegime("class_size_lower: s < n/4");
  return mpq_class(ipow(mpz_class(static_cast<unsigned long>(q)), e), 2 * n);
}

RootRational class_size_floor_half(int n, uint64_t q) {
  return RootRational::power(mpq_class(static_cast<unsigned long>(q)), static_cast<long>(n) * n, 2) /
         RootRational::from_int(2 * n);
}

RootRational class_size_floor_quarter(int n, uint64_t q) {
  return RootRational::power(mpq_class(static_cast<unsigned long>(q)), 3l * n * n, 8) /
         RootRational::from_int(2 * n);
}

RootRational qhat_AB(const RootRational& A, const RootRational& B, int c) {
  if (c < 1) throw InvalidArgument("qhat_AB: c < 1");
  return B * (A / B).pow(c);
}

// ---- primitive solvable bound

int PrimitiveSolvableProfile::l() const {
  int k = 0;
  for (int v = e(); v > 1; v >>= 1) ++k;
  return k;
}

namespace {

std::vector<std::pair<uint64_t, int>> factor(uint64_t v) {
  std::vector<std::pair<uint64_t, int>> f;
  for (uint64_t p = 2; p * p <= v; ++p)
    if (v % p == 0) {
      int k = 0;
      while (v % p == 0) v /= p, ++k;
      f.emplace_back(p, k);
    }
  if (v > 1) f.emplace_back(v, 1);
  return f;
}

bool is_prime_power(uint64_t q) {
  auto f = factor(q);
  return f.size() == 1;
}

}  // namespace

void PrimitiveSolvableProfile::validate() const {
  if (n < 1 || m < 1 || n % m) throw InvalidArgument("profile: m must divide n");
  if (q < 2 || !is_prime_power(q)) throw InvalidArgument("profile: q is not a prime power");
  mpz_class qm1 = ipow(mpz_class(static_cast<unsigned long>(q)), m) - 1;
  for (auto [p, k] : factor(e()))
    if (mpz_class(qm1 % static_cast<unsigned long>(p)) != 0)
      throw InvalidArgument("profile: prime " + std::to_string(p) + " of e does not divide q^m - 1");
}

mpz_class sp_order(int l, uint64_t p) {
  mpz_class P(static_cast<unsigned long>(p));
  mpz_class r = ipow(P, static_cast<unsigned long>(l) * l);
  for (int j = 1; j <= l; ++j) r *= ipow(P, 2ul * j) - 1;
  return r;
}

HBound primitive_H_bound(const PrimitiveSolvableProfile& p) {
  p.validate();
  mpz_class Q(static_cast<unsigned long>(p.q));
  mpq_class head((ipow(Q, p.m) - 1) / (Q - 1) * p.m);
  mpq_class E(p.e());
  int l = p.l();
  RootRational first = RootRational::power(E, 2 * l + 1, 1);
  RootRational cap = RootRational::power(E, 13, 2);
  HBound h;
  h.printed = RootRational(head) * std::min(first, cap);
  RootRational first_fa = RootRational::power(E, 2 * l + 3, 1);
  h.with_fa = RootRational(head) * std::min(first_fa, cap);
  mpz_class sp = 1;
  for (auto [pr, k] : factor(p.e())) sp *= sp_order(k, pr);
  h.sp_product = head * E * E * sp;
  return h;
}

// ---- Gluck-Manz

RootRational gluck_manz(int n, uint64_t q) {
  return RootRational::power(mpq_class(static_cast<unsigned long>(q)), 9l * n, 4) / RootRational(mpq_class(14, 5));
}

bool gluck_manz_holds(const mpz_class& order, int n, uint64_t q) {
  mpq_class lhs = qpow(mpq_class(order), 4) * qpow(mpq_class(14, 5), 4);
  return lhs < mpq_class(ipow(mpz_class(static_cast<unsigned long>(q)), 9ul * n));
}

// ---- scans

std::vector<uint64_t> prime_powers_upto(uint64_t qmax) {
  std::vector<uint64_t> out;
  for (uint64_t q = 2; q <= qmax; ++q)
    if (is_prime_power(q)) out.push_back(q);
  return out;
}

std::vector<SinbaseRow> sinbase_scan(int nmin, int nmax, uint64_t qmax) {
  if (nmin < 4) throw InvalidArgument("sinbase_scan: n >= 4");
  std::vector<SinbaseRow> rows;
  RootRational one = RootRational::from_int(1);
  for (int n = nmin; n <= nmax; ++n)
    for (uint64_t q : prime_powers_upto(qmax)) {
      SinbaseRow r;
      r.n = n, r.q = q;
      mpz_class Q(static_cast<unsigned long>(q));
      mpz_class qn1 = ipow(Q, n) - 1;
      r.a = n * qn1 / (Q - 1);
      r.a_printed = mpq_class(n * qn1, n - 1);
      r.a_printed.canonicalize();
      r.b = class_size_floor_half(n, q);
      r.ratio = RootRational(mpq_class(r.a * r.a)) / r.b;
      r.ratio_printed = RootRational(r.a_printed * r.a_printed) / r.b;
      r.flagged = !(r.ratio < one);
      r.flagged_printed = !(r.ratio_printed < one);
      rows.push_back(std::move(r));
    }
  return rows;
}

std::string sinbase_tsv(const std::vector<SinbaseRow>& rows) {
  std::ostringstream os;
  os << "n\tq\ta\tb\tverdict\ta^2/b\ta_(n-1)\tverdict_(n-1)\ta_(n-1)^2/b\n";
  for (auto& r : rows)
    os << r.n << '\t' << r.q << '\t' << r.a << '\t' << r.b.str() << '\t' << (r.flagged ? "ge1" : "lt1") << '\t'
       << r.ratio.str() << '\t' << r.a_printed << '\t' << (r.flagged_printed ? "ge1" : "lt1") << '\t'
       << r.ratio_printed.str() << '\n';
  return os.str();
}

std::vector<ThresholdRow> case2_n5(uint64_t qmax, bool exact_exponent) {
  std::vector<ThresholdRow> rows;
  mpq_class num = 25 * 25 + 500 * 500 + 624 * 624;
  for (uint64_t q : prime_powers_upto(qmax)) {
    mpq_class Q(static_cast<unsigned long>(q));
    RootRational B = exact_exponent ? RootRational::power(Q, 25, 2) / RootRational::from_int(10)
                                    : RootRational(qpow(Q, 12) / 10);
    ThresholdRow r;
    r.q = q;
    r.value = RootRational(num) / B;
    r.below_one = r.value < RootRational::from_int(1);
    rows.push_back(r);
  }
  return rows;
}

std::vector<ThresholdRow> case3_n4(uint64_t qmax) {
  std::vector<ThresholdRow> rows;
  for (uint64_t q : prime_powers_upto(qmax)) {
    if (q % 2 == 0) continue;
    mpq_class Q(static_cast<unsigned long>(q));
    mpq_class a = 48 * (Q + 1);
    ThresholdRow r;
    r.q = q;
    r.value = RootRational(a * a / (qpow(Q, 6) / 8));
    r.below_one = r.value < RootRational::from_int(1);
    rows.push_back(r);
  }
  return rows;
}

uint64_t threshold(const std::vector<ThresholdRow>& rows) {
  uint64_t q0 = rows.empty() ? 0 : rows.front().q;
  bool reset = false;
  for (auto& r : rows) {
    if (reset) q0 = r.q, reset = false;
    if (!r.below_one) reset = true, q0 = 0;
  }
  return q0;
}

// ---- dominance

namespace {

uint64_t perm_order(const PermVec& x) {
  std::vector<bool> seen(x.size());
  uint64_t o = 1;
  for (size_t p = 0; p < x.size(); ++p) {
    if (seen[p]) continue;
    uint64_t len = 0;
    for (size_t c = p; !seen[c]; c = x[c]) seen[c] = true, ++len;
    o = std::lcm(o, len);
  }
  return o;
}

// tuples of length k, extending a prefix whose pointwise stabilizer is stab,
// that still have a nontrivial stabilizer at the end
mpz_class count_nonbase(const std::vector<PermVec>& elems, const std::vector<uint32_t>& stab, size_t degree, int k) {
  if (stab.size() == 1) return 0;  // identity only: every extension is a base
  if (k == 0) return 1;
  mpz_class total = 0;
  for (uint32_t p = 0; p < degree; ++p) {
    std::vector<uint32_t> sub;
    for (uint32_t e : stab)
      if (elems[e][p] == p) sub.push_back(e);
    total += count_nonbase(elems, sub, degree, k - 1);
  }
  return total;
}

}  // namespace

DominanceReport dominance(const std::vector<PermVec>& gens, size_t degree, int c, uint64_t closure_cap) {
  if (c < 1) throw InvalidArgument("dominance: c < 1");
  DominanceReport rep;
  rep.degree = degree;
  std::vector<PermVec> gl = gens;
  if (gl.empty()) {
    PermVec id(degree);
    std::iota(id.begin(), id.end(), 0u);
    gl.push_back(id);
  }
  std::vector<PermVec> elems = perm_closure(gl, closure_cap);
  rep.order = static_cast<unsigned long>(elems.size());
  auto index_of = [&](const PermVec& x) {
    return static_cast<size_t>(std::lower_bound(elems.begin(), elems.end(), x) - elems.begin());
  };
  std::vector<PermVec> ginv;
  for (auto& g : gl) {
    PermVec h(degree);
    for (size_t p = 0; p < degree; ++p) h[g[p]] = static_cast<uint32_t>(p);
    ginv.push_back(h);
  }

  std::vector<int> cls(elems.size(), -1);
  for (size_t i = 0; i < elems.size(); ++i) {
    if (cls[i] >= 0) continue;
    uint64_t o = perm_order(elems[i]);
    if (!is_prime(o)) continue;
    int id = static_cast<int>(rep.classes.size());
    PrimeClass pc;
    pc.prime = o;
    for (size_t p = 0; p < degree; ++p) pc.fixed += elems[i][p] == p;
    std::vector<size_t> queue{i};
    cls[i] = id;
    for (size_t h = 0; h < queue.size(); ++h) {
      const PermVec& x = elems[queue[h]];
      pc.in_H += x[0] == 0;
      for (size_t g = 0; g < gl.size(); ++g) {
        PermVec y(degree);
        for (size_t p = 0; p < degree; ++p) y[p] = gl[g][x[ginv[g][p]]];
        size_t j = index_of(y);
        if (cls[j] < 0) cls[j] = id, queue.push_back(j);
      }
    }
    pc.size = queue.size();
    rep.classes.push_back(pc);
  }

  // exact proportion of c-tuples that are not bases
  std::vector<uint32_t> all(elems.size());
  std::iota(all.begin(), all.end(), 0u);
  mpz_class nonbase = count_nonbase(elems, all, degree, c);
  rep.Q = mpq_class(nonbase, ipow(mpz_class(static_cast<unsigned long>(degree)), c));
  rep.Q.canonicalize();

  rep.qhat = 0;
  mpq_class& sum_class_fpr = rep.class_sum;
  sum_class_fpr = 0;
  uint64_t A = 0, B = 0;
  for (auto& pc : rep.classes) {
    mpq_class fpr(static_cast<unsigned long>(pc.fixed), static_cast<unsigned long>(degree));
    fpr.canonicalize();
    rep.qhat += pc.size * qpow(fpr, c);
    // the same sum through |x^G cap H| / |x^G|, valid for transitive actions
    mpq_class fpr_h(static_cast<unsigned long>(pc.in_H), static_cast<unsigned long>(pc.size));
    fpr_h.canonicalize();
    sum_class_fpr += pc.size * qpow(fpr_h, c);
    A += pc.in_H;
    B = B == 0 ? pc.size : std::min<uint64_t>(B, pc.size);
  }
  rep.q_le_qhat = rep.Q <= rep.qhat;
  if (rep.classes.empty()) {
    rep.lemma_AB = RootRational::from_int(1);
    rep.ab_dominates = true;  // trivial group: empty class sum
  } else if (A == 0) {
    rep.lemma_AB = RootRational::from_int(1);
    rep.ab_dominates = sum_class_fpr == 0;
  } else {
    rep.lemma_AB = qhat_AB(RootRational(mpq_class(static_cast<unsigned long>(A))),
                           RootRational(mpq_class(static_cast<unsigned long>(B))), c);
    rep.ab_dominates = sum_class_fpr == 0 || RootRational(sum_class_fpr) <= rep.lemma_AB;
  }
  return rep;
}

DominanceReport dominance(const CosetSpace& cs, int c, uint64_t closure_cap) {
  std::vector<PermVec> gens(cs.action().begin(), cs.action().end());
  return dominance(gens, cs.size(), c, closure_cap);
}

std::string DominanceReport::str() const {
  std::ostringstream os;
  os << "degree " << degree << ", |G| " << order << ", " << classes.size() << " prime-order classes; Q = " << Q
     << " <= Qhat = " << qhat << ": " << (q_le_qhat ? "yes" : "no") << "; B(A/B)^c = " << lemma_AB.str()
     << " dominates: " << (ab_dominates ? "yes" : "no");
  return os.str();
}

}  // namespace sbase
