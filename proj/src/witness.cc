#include "sbase/witness.hpp"

#include <sstream>

namespace sbase {

namespace {

bool central(const SemiElement& e) { return e.l == 0 && e.j == 0 && e.g.is_scalar(); }

std::vector<int> range(int lo, int hi) {
  std::vector<int> v;
  for (int i = lo; i < hi; ++i) v.push_back(i);
  return v;
}

std::vector<std::pair<int, int>> diagonal_positions(int n) {
  std::vector<std::pair<int, int>> pos;
  for (int i = 0; i < n; ++i) pos.emplace_back(i, i);
  return pos;
}

std::vector<uint32_t> prime_powers(uint32_t lo, uint32_t hi) {
  std::vector<uint32_t> out;
  for (uint32_t q = lo; q <= hi; ++q) {
    uint32_t p = 2;
    while (q % p) ++p;
    uint32_t r = q;
    while (r % p == 0) r /= p;
    if (r == 1) out.push_back(q);
  }
  return out;
}

// summary of the solutions that violate pred, for the report
struct Tally {
  uint64_t total = 0;
  uint64_t bad = 0;
  std::string example;
  bool capped = false;
};

Tally tally(const std::vector<FamilyResult>& res, const Predicate& pred) {
  Tally t;
  for (auto& r : res) {
    if (!r.enumerated) {
      t.capped = true;
      continue;
    }
    t.total += r.count;
    for (auto& m : r.members)
      if (!pred(m)) {
        if (!t.bad) t.example = m.str();
        ++t.bad;
      }
  }
  return t;
}

std::string describe(const std::string& what, const Tally& t) {
  std::ostringstream os;
  os << what << ": " << t.total << " solutions";
  if (t.capped) os << " (some families too large to enumerate)";
  if (t.bad) os << ", " << t.bad << " outside the target, e.g. " << t.example;
  return os.str();
}

Verdict verdict_of(const Tally& t) {
  if (t.bad) return Verdict::fails;
  return t.capped ? Verdict::inconclusive : Verdict::holds;
}

SubspacePair same(const Subspace& U) { return {U, U}; }

std::vector<LinearFamily> over_frobenius(const FieldPtr& F, int l, const Matrix& left, const std::vector<Matrix>& basis,
                                         const std::string& label) {
  std::vector<LinearFamily> fams;
  for (uint32_t j = 0; j < F->f(); ++j) fams.push_back({l, static_cast<int>(j), left, basis, label});
  return fams;
}

std::string join(const std::vector<int>& v) {
  std::string s;
  for (size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

}  // namespace

std::string WitnessCheck::str() const {
  std::ostringstream os;
  os << family << " n=" << n << " q=" << q;
  if (!params.empty()) os << " " << params;
  os << ": " << verdict_name(verdict);
  if (!detail.empty()) os << " (" << detail << ")";
  return os.str();
}

Verdict combine(const std::vector<Verdict>& vs) {
  bool open = false;
  for (Verdict v : vs) {
    if (v == Verdict::fails) return Verdict::fails;
    open |= v == Verdict::inconclusive;
  }
  return open ? Verdict::inconclusive : Verdict::holds;
}

// ---- all factors of dimension 1

WitnessCheck check_ni1(FieldPtr F, int n) {
  WitnessCheck out{"ni1", n, F->q(), "", Verdict::inconclusive, ""};
  Triple t = prop_ni1_xyz(F, n);
  std::vector<std::pair<int, int>> upper;
  for (int r = 0; r < n; ++r)
    for (int c = r; c < n; ++c) upper.emplace_back(r, c);
  std::vector<Containment> cons;
  for (int k = 1; k < n; ++k) {
    Subspace V = Subspace::coordinate(F, n, range(n - k, n));
    cons.push_back({same(V), same(V)});
    for (const Matrix* c : {&t.x, &t.y, &t.z}) {
      Subspace Vc = V.image(*c);
      cons.push_back({same(Vc), same(Vc)});
    }
  }
  auto res = solve_families(over_frobenius(F, 0, Matrix(), unit_basis(F, n, upper), "borel"), cons);
  Tally tl = tally(res, central);
  out.verdict = verdict_of(tl);
  out.detail = describe("flag stabilizers of 1, x, y, z", tl);
  return out;
}

// ---- five points in distinct regular orbits

WitnessCheck check_orbit_witnesses(OrbitScheme s, FieldPtr F, const OrbitParams& p) {
  const int n = p.n;
  WitnessCheck out{s == OrbitScheme::orb ? "orb" : "orb2", n, F->q(), "", Verdict::inconclusive, ""};
  auto zs = orbit_witnesses(s, F, p);
  const int m = static_cast<int>(orbit_vectors(s, F, p)[0].size());
  out.params = "m=" + std::to_string(m) + (s == OrbitScheme::orb2 ? " l=" + std::to_string(p.l) : "");
  Subspace U = Subspace::coordinate(F, n, range(n - m, n));

  // shape of (S cap S^x) cap (S cap S^x)^y
  std::vector<LinearFamily> fams;
  if (s == OrbitScheme::orb) {
    fams.push_back({0, 0, Matrix(), diagonal_basis(F, n), "diag"});
    // a field automorphism part forces the first two diagonal entries equal
    for (uint32_t j = 1; j < F->f(); ++j)
      fams.push_back({0, static_cast<int>(j), Matrix(), tied_diagonal_basis(F, n, {{0, 1}}), "phi diag"});
  } else {
    const int l = p.l, sidx = n - l;
    auto pos = diagonal_positions(n);
    pos.emplace_back(sidx - 1, sidx);  // beta_s
    pos.emplace_back(l, l - 1);        // beta_{l+1}
    fams.push_back({0, 0, Matrix(), unit_basis(F, n, pos), "corner blocks"});
  }

  std::vector<Verdict> vs;
  std::vector<std::string> notes;
  std::vector<Subspace> Uz;
  for (auto& z : zs) Uz.push_back(U.image(z));
  for (size_t i = 0; i < zs.size(); ++i) {
    auto res = solve_families(fams, {{same(Uz[i]), same(Uz[i])}});
    Tally tl = tally(res, central);
    vs.push_back(verdict_of(tl));
    if (tl.bad || tl.capped) notes.push_back("point " + std::to_string(i + 1) + " " + describe("stabilizer", tl));
  }
  for (size_t i = 0; i < zs.size(); ++i)
    for (size_t k = 0; k < zs.size(); ++k) {
      if (i == k) continue;
      Verdict v = none_exist(solve_families(fams, {{same(Uz[i]), same(Uz[k])}}));
      vs.push_back(v);
      if (v != Verdict::holds)
        notes.push_back("points " + std::to_string(i + 1) + "," + std::to_string(k + 1) + " " + verdict_name(v) +
                        " to separate");
    }
  out.verdict = combine(vs);
  if (notes.empty()) {
    out.detail = "5 regular points, 20 ordered pairs separated";
  } else {
    for (size_t i = 0; i < notes.size(); ++i) out.detail += (i ? "; " : "") + notes[i];
  }
  return out;
}

// ---- z for the cases with iota

namespace {

// block reversal: the first d_i coordinates go to the last d_i for every
// prefix length d_i of the chain
Matrix chain_reversal(const FieldPtr& F, int n, const std::vector<int>& prefix) {
  std::vector<int> sigma(n);
  for (int i = 0; i < n; ++i) sigma[i] = i;
  int prev = 0;
  for (int d : prefix) {
    for (int i = prev; i < d; ++i) {
      int k = n - d + (i - prev);
      sigma[i] = k;
      sigma[k] = i;
    }
    prev = d;
  }
  return perm_matrix(F, sigma);
}

struct GrSetup {
  std::vector<SubspacePair> pairs;
  Matrix iota_left;
  std::vector<int> iota_blocks;
  std::vector<Matrix> gamma_basis;
  bool gamma_phi = true;  // field automorphisms allowed in the shape
};

std::vector<Matrix> diag_plus(const FieldPtr& F, int n, const std::vector<std::pair<int, int>>& extra) {
  auto pos = diagonal_positions(n);
  pos.insert(pos.end(), extra.begin(), extra.end());
  return unit_basis(F, n, pos);
}

// the 2x2 blocks starting at the (1-based) positions lie inside the given regions
bool blocks_fit(const std::vector<int>& starts, const std::vector<int>& regions) {
  std::vector<int> off{0};
  for (int b : regions) off.push_back(off.back() + b);
  for (int s : starts) {
    int r0 = s - 1, ok = 0;
    for (size_t b = 0; b + 1 < off.size(); ++b) ok |= off[b] <= r0 && r0 + 1 < off[b + 1];
    if (!ok) return false;
  }
  return true;
}

GrSetup gr_setup(GrVariant v, const FieldPtr& F, const GrParams& p, PairKind kind) {
  const int n = p.n;
  GrSetup s;
  if (v == GrVariant::q23mr) {
    // U_1 of dimension 1 inside U_t of dimension d_t, both flags parabolic
    if (2 * p.dt > n) throw InvalidArgument("q23mr check: need 2 d_t <= n");
    for (int d : {1, p.dt}) s.pairs.push_back(pair_subspaces(F, {n, d, PairKind::parabolic, false, true}));
    s.iota_left = chain_reversal(F, n, {1, p.dt});
    s.iota_blocks = {1, p.dt - 1};
    if (n > 2 * p.dt) s.iota_blocks.push_back(n - 2 * p.dt);
    s.iota_blocks.push_back(p.dt - 1);
    s.iota_blocks.push_back(1);
  } else {
    int m = v == GrVariant::case221 ? 2 : p.m;
    PairStabilizerSpec spec{n, m, kind, false, true};
    s.pairs.push_back(pair_subspaces(F, spec));
    s.iota_left = pair_iota_element(F, spec).g;
    s.iota_blocks = pair_blocks(spec);
  }
  switch (v) {
    case GrVariant::def1: {
      // single equality alpha_r = alpha_{r+1}
      s.gamma_basis = tied_diagonal_basis(F, n, {{p.r - 1, p.r}});
      break;
    }
    case GrVariant::def2:
      // both m-blocks scalar
      s.gamma_basis = tied_diagonal_basis(F, n, {range(0, p.m), range(p.m, n)});
      break;
    case GrVariant::q23:
    case GrVariant::q23mr: {
      std::vector<std::pair<int, int>> extra;
      for (int j : p.lambda1) extra.emplace_back(j - 1, j);
      s.gamma_basis = diag_plus(F, n, extra);
      s.gamma_phi = false;
      break;
    }
    case GrVariant::case221: {
      std::vector<std::pair<int, int>> extra{{n - 2, n - 1}, {n - 1, n - 2}};
      s.gamma_basis = diag_plus(F, n, extra);
      s.gamma_phi = false;
      break;
    }
    case GrVariant::case222: {
      int j = p.j1 - 1;
      s.gamma_basis = diag_plus(F, n, {{j, j + 1}, {j + 1, j}});
      s.gamma_phi = false;
      break;
    }
  }
  return s;
}

std::string gr_param_text(GrVariant v, const GrParams& p, PairKind kind) {
  std::string k = kind == PairKind::parabolic ? "P" : "GLxGL";
  switch (v) {
    case GrVariant::def1: return k + " m=" + std::to_string(p.m) + " r=" + std::to_string(p.r);
    case GrVariant::def2: return "P m=" + std::to_string(p.m);
    case GrVariant::q23: return k + " m=" + std::to_string(p.m) + " blocks=" + join(p.lambda1);
    case GrVariant::q23mr: return "P d_t=" + std::to_string(p.dt) + " blocks=" + join(p.lambda1);
    case GrVariant::case221: return "GLxGL m=2";
    default: return k + " m=" + std::to_string(p.m) + " j1=" + std::to_string(p.j1);
  }
}

}  // namespace

WitnessCheck check_gr(GrVariant v, FieldPtr F, const GrParams& p, PairKind kind) {
  WitnessCheck out{gr_variant_name(v), p.n, F->q(), gr_param_text(v, p, kind), Verdict::inconclusive, ""};
  if (v == GrVariant::def2 || v == GrVariant::q23mr) kind = PairKind::parabolic;
  if (v == GrVariant::case221) kind = PairKind::direct_sum;
  SemiElement z(gr_z(v, F, p));
  GrSetup s = gr_setup(v, F, p, kind);
  std::vector<Containment> cons;
  for (auto& P : s.pairs) {
    cons.push_back({P, P});
    SubspacePair Pz = act(P, z);
    cons.push_back({Pz, Pz});
  }
  std::vector<Containment> gamma_cons = cons;
  if (v == GrVariant::case222) {
    // the linear part also fixes <v_j1, ..., v_n>
    Subspace X = Subspace::coordinate(F, p.n, range(p.j1 - 1, p.n));
    Subspace Xz = act(X, z);
    gamma_cons.push_back({same(X), same(X)});
    gamma_cons.push_back({same(Xz), same(Xz)});
  }
  const bool phi = s.gamma_phi;
  auto families = [&](int l, const Matrix& left, const std::vector<Matrix>& basis, const std::string& label) {
    return phi ? over_frobenius(F, l, left, basis, label)
               : std::vector<LinearFamily>{{l, 0, left, basis, label}};
  };
  Tally gt = tally(solve_families(families(0, Matrix(), s.gamma_basis, "gamma"), gamma_cons), central);

  // an iota-type element c of the intersection has c^2 in its linear-or-phi
  // part, which the line above pins down; keep only those c
  auto iota_res = solve_families(families(1, s.iota_left, block_basis(F, s.iota_blocks), "iota"), cons);
  Tally it;
  for (auto& r : iota_res) {
    if (!r.enumerated) {
      it.capped = true;
      continue;
    }
    it.total += r.count;
    for (auto& c : r.members)
      if (central(c * c)) {
        if (!it.bad) it.example = c.str();
        ++it.bad;
      }
  }
  out.verdict = combine({verdict_of(gt), verdict_of(it)});
  std::ostringstream os;
  os << describe("without iota", gt) << "; with iota: " << it.total << " solutions";
  if (it.capped) os << " (some families too large to enumerate)";
  if (it.bad) os << ", " << it.bad << " square to scalars, e.g. " << it.example;
  out.detail = os.str();
  return out;
}

// ---- sweeps

std::vector<WitnessCheck> sweep_ni1(int nmax, uint32_t qmax) {
  std::vector<WitnessCheck> out;
  for (int n = 2; n <= nmax; ++n)
    for (uint32_t q : prime_powers(2, qmax)) {
      if (n == 2 && q <= 3) continue;
      out.push_back(check_ni1(gf(q), n));
    }
  return out;
}

std::vector<WitnessCheck> sweep_orb(int nmax, uint32_t qmax) {
  std::vector<WitnessCheck> out;
  for (int n = 4; n <= nmax; ++n)
    for (int m = 2; n - m >= 2; ++m)
      for (uint32_t q : prime_powers(2, qmax)) out.push_back(check_orbit_witnesses(OrbitScheme::orb, gf(q), {n, m, 0}));
  return out;
}

std::vector<WitnessCheck> sweep_orb2(const std::vector<int>& ns, const std::vector<uint32_t>& qs) {
  std::vector<WitnessCheck> out;
  for (int n : ns)
    for (int l = n / 2 + 1; l + 1 <= n; ++l) {
      bool l_ok = n % 2 == 0 ? 2 * l > n : 2 * l > n + 1;
      if (!l_ok || n - l + 1 < 3) continue;
      for (uint32_t q : qs) out.push_back(check_orbit_witnesses(OrbitScheme::orb2, gf(q), {n, 0, l}));
    }
  return out;
}

namespace {

// increasing disjoint 2x2 block starts in 1..n-1, at least min_count of them
void block_sets(int n, size_t min_count, std::vector<int>& cur, int from, std::vector<std::vector<int>>& out) {
  if (cur.size() >= min_count) out.push_back(cur);
  for (int s = from; s + 1 <= n; ++s) {
    cur.push_back(s);
    block_sets(n, min_count, cur, s + 2, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<WitnessCheck> sweep_gr(GrVariant v, int nmax, uint32_t qmax) {
  std::vector<WitnessCheck> out;
  // the cases built on 2x2 blocks only arise over GF(2), GF(3), GF(5)
  bool small = v != GrVariant::def1 && v != GrVariant::def2;
  std::vector<uint32_t> qs;
  for (uint32_t q : prime_powers(2, qmax))
    if (!small || q == 2 || q == 3 || q == 5) qs.push_back(q);
  // n in {3, 4} of the small-field cases is settled by direct computation instead
  for (int n = small ? 5 : 3; n <= nmax; ++n)
    for (uint32_t q : qs) {
      FieldPtr F = gf(q);
      switch (v) {
        case GrVariant::def1:
          for (PairKind kind : {PairKind::parabolic, PairKind::direct_sum})
            for (int m = 1; 2 * m <= n; ++m) {
              if (kind == PairKind::parabolic && 2 * m == n) continue;  // U = W is the other variant
              // r runs over positions left of U, plus the first pair inside U
              for (int r = 1; r <= n - m + (m >= 2 ? 1 : 0); ++r) {
                GrParams p;
                p.n = n, p.m = m, p.r = r;
                out.push_back(check_gr(v, F, p, kind));
              }
            }
          break;
        case GrVariant::def2:
          if (n >= 4 && n % 2 == 0) {
            GrParams p;
            p.n = n, p.m = n / 2;
            out.push_back(check_gr(v, F, p, PairKind::parabolic));
          }
          break;
        case GrVariant::q23:
          for (PairKind kind : {PairKind::parabolic, PairKind::direct_sum})
            for (int m = 2; 2 * m <= n; ++m) {
              if (kind == PairKind::parabolic && 2 * m == n) continue;
              PairStabilizerSpec spec{n, m, kind, false, true};
              std::vector<std::vector<int>> sets;
              std::vector<int> cur;
              block_sets(n, 2, cur, 1, sets);
              for (auto& lam : sets) {
                if (!blocks_fit(lam, pair_blocks(spec))) continue;
                GrParams p;
                p.n = n, p.m = m, p.lambda1 = lam;
                out.push_back(check_gr(v, F, p, kind));
              }
            }
          break;
        case GrVariant::q23mr:
          for (int dt = 3; 2 * dt <= n; ++dt) {
            std::vector<int> regions{1, dt - 1};
            if (n > 2 * dt) regions.push_back(n - 2 * dt);
            regions.push_back(dt - 1);
            regions.push_back(1);
            std::vector<std::vector<int>> sets;
            std::vector<int> cur;
            block_sets(n, 2, cur, 1, sets);
            for (auto& lam : sets) {
              if (!blocks_fit(lam, regions)) continue;
              GrParams p;
              p.n = n, p.dt = dt, p.lambda1 = lam;
              out.push_back(check_gr(v, F, p, PairKind::parabolic));
            }
          }
          break;
        case GrVariant::case221:
          if (n >= 5) {
            GrParams p;
            p.n = n, p.m = 2;
            out.push_back(check_gr(v, F, p, PairKind::direct_sum));
          }
          break;
        case GrVariant::case222:
          for (PairKind kind : {PairKind::parabolic, PairKind::direct_sum})
            for (int m = 1; 2 * m <= n; ++m) {
              if (m == 2) continue;
              PairStabilizerSpec spec{n, m, kind, false, true};
              for (int j1 = 3; j1 + 1 <= n - 1; ++j1) {
                if (!blocks_fit({j1}, pair_blocks(spec))) continue;
                GrParams p;
                p.n = n, p.m = m, p.j1 = j1;
                out.push_back(check_gr(v, F, p, kind));
              }
            }
          break;
      }
    }
  return out;
}

}  // namespace sbase
