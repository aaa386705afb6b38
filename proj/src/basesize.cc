#include "sbase/basesize.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <unordered_map>

#include "json.hpp"

namespace sbase {

namespace {

constexpr size_t kProbeCap = 4096;

std::vector<Elt> vec_act(const std::vector<Elt>& v, const SemiElement& x) {
  std::vector<Elt> w = v;
  if (x.j)
    for (auto& e : w) e = x.field()->frobenius(e, x.j);
  return vec_mul(w, x.g);
}

bool any_iota(const MatGroup& S) {
  if (S.ambient().allow_iota)
    for (auto& g : S.gens())
      if (g.l) return true;
  return false;
}

}  // namespace

struct CosetSpace::Index {
  std::unordered_map<std::string, std::vector<uint32_t>> buckets;
  std::vector<SemiElement> rep_inv;
};

CosetSpace::CosetSpace(const MatGroup& G, const MatGroup& S, uint64_t index_cap)
    : G_(G), S_(S), index_(std::make_shared<Index>()) {
  if (index_cap > kMaxIndex) index_cap = kMaxIndex;
  if (!(G.ambient() == S.ambient())) throw InvalidArgument("coset_space: ambient mismatch");
  if (G.has_predicate() || G.enumerated())
    for (auto& s : S.gens())
      if (!G.contains(s)) throw InvalidArgument("coset_space: S is not a subgroup of G");

  // S-orbits of basis vectors; their image under r depends only on the coset S r
  if (!any_iota(S)) {
    const int n = G.ambient().n;
    std::set<std::vector<Elt>> seen;
    for (int b = 0; b < n; ++b) {
      std::vector<Elt> e(n, 0);
      e[b] = 1;
      if (seen.count(e)) continue;
      std::vector<std::vector<Elt>> orbit{e};
      std::set<std::vector<Elt>> local{e};
      for (size_t i = 0; i < orbit.size() && local.size() + seen.size() <= kProbeCap; ++i)
        for (auto& s : S.gens()) {
          auto w = vec_act(orbit[i], s);
          if (local.insert(w).second) orbit.push_back(w);
        }
      if (local.size() + seen.size() > kProbeCap) break;
      seen.insert(local.begin(), local.end());
    }
    probe_.assign(seen.begin(), seen.end());
  }

  const auto& gens = G.gens();
  action_.assign(gens.size(), {});
  SemiElement id = SemiElement::identity(G.ambient());
  reps_.push_back(id);
  index_->rep_inv.push_back(id);
  index_->buckets[bucket_key(id)].push_back(0);
  for (size_t p = 0; p < reps_.size(); ++p) {
    for (size_t i = 0; i < gens.size(); ++i) {
      SemiElement y = reps_[p] * gens[i];
      std::string key = bucket_key(y);
      auto hit = lookup(y, key);
      uint32_t q;
      if (hit) {
        q = *hit;
      } else {
        if (reps_.size() >= index_cap) throw IndexCapExceeded("coset space index exceeds cap " + std::to_string(index_cap));
        q = static_cast<uint32_t>(reps_.size());
        reps_.push_back(y);
        index_->rep_inv.push_back(y.inverse());
        index_->buckets[key].push_back(q);
      }
      action_[i].push_back(q);
    }
  }
}

std::string CosetSpace::bucket_key(const SemiElement& x) const {
  if (probe_.empty()) return {};
  std::vector<std::vector<Elt>> img;
  img.reserve(probe_.size());
  for (auto& v : probe_) img.push_back(vec_act(v, x));
  std::sort(img.begin(), img.end());
  std::string out;
  out.reserve(img.size() * img[0].size() * 2);
  for (auto& v : img)
    for (Elt e : v) {
      out.push_back(static_cast<char>(e & 0xff));
      out.push_back(static_cast<char>(e >> 8));
    }
  return out;
}

std::optional<uint32_t> CosetSpace::lookup(const SemiElement& x, const std::string& key) const {
  auto it = index_->buckets.find(key);
  if (it == index_->buckets.end()) return std::nullopt;
  for (uint32_t r : it->second)
    if (S_.contains(x * index_->rep_inv[r])) return r;
  return std::nullopt;
}

uint32_t CosetSpace::point_of(const SemiElement& x) const {
  auto hit = lookup(x, bucket_key(x));
  if (!hit) throw InvalidArgument("point_of: element outside G");
  return *hit;
}

std::vector<uint32_t> CosetSpace::perm_of(const SemiElement& x) const {
  std::vector<uint32_t> out(size());
  for (size_t p = 0; p < size(); ++p) out[p] = point_of(reps_[p] * x);
  return out;
}

// ---- point action

PointAction::PointAction(const CosetSpace& cs, uint64_t cap) : n_(cs.size()) {
  const MatGroup& S = cs.S();
  const ElementSet& es = S.elements(cap);
  const size_t m = es.size();
  elems_.reserve(m);
  for (size_t i = 0; i < m; ++i) elems_.push_back(es.element(i));
  std::vector<std::vector<uint32_t>> gperm;
  for (auto& s : S.gens()) gperm.push_back(cs.perm_of(s));

  perm_.assign(m * n_, 0);
  std::vector<bool> done(m, false);
  size_t root = es.find(es.codec().pack(SemiElement::identity(S.ambient())));
  for (size_t p = 0; p < n_; ++p) perm_[root * n_ + p] = static_cast<uint16_t>(p);
  done[root] = true;
  std::deque<size_t> queue{root};
  while (!queue.empty()) {
    size_t e = queue.front();
    queue.pop_front();
    for (size_t t = 0; t < gperm.size(); ++t) {
      size_t c = es.find(es.codec().pack(elems_[e] * S.gens()[t]));
      if (done[c]) continue;
      done[c] = true;
      for (size_t p = 0; p < n_; ++p) perm_[c * n_ + p] = static_cast<uint16_t>(gperm[t][perm_[e * n_ + p]]);
      queue.push_back(c);
    }
  }
  for (size_t e = 0; e < m; ++e) {
    bool id = true;
    for (size_t p = 0; p < n_ && id; ++p) id = perm_[e * n_ + p] == p;
    kernel_ += id;
  }
  gorder_ = mpz_class(static_cast<unsigned long>(n_)) * mpz_class(static_cast<unsigned long>(m / kernel_));
}

mpz_class PointAction::quotient_order() const { return gorder_; }

PointAction::Subgroup PointAction::all() const {
  Subgroup h(elems_.size());
  for (size_t i = 0; i < h.size(); ++i) h[i] = static_cast<uint32_t>(i);
  return h;
}

PointAction::Subgroup PointAction::stabilizer(const Subgroup& H, uint32_t p) const {
  Subgroup out;
  for (uint32_t e : H)
    if (image(e, p) == p) out.push_back(e);
  return out;
}

std::vector<std::pair<uint32_t, uint32_t>> PointAction::orbits(const Subgroup& H, const std::vector<bool>* domain) const {
  std::vector<bool> seen(n_, false);
  std::vector<std::pair<uint32_t, uint32_t>> out;
  for (uint32_t p = 0; p < n_; ++p) {
    if (seen[p] || (domain && !(*domain)[p])) continue;
    uint32_t size = 0;
    for (uint32_t e : H) {
      uint32_t q = image(e, p);
      if (!seen[q]) {
        seen[q] = true;
        ++size;
      }
    }
    out.emplace_back(p, size);
  }
  return out;
}

// ---- base size

namespace {

struct Search {
  const PointAction& pa;
  uint64_t cap;
  uint64_t work = 0;

  void charge(uint64_t w) {
    work += w;
    if (work > cap) throw WorkCapExceeded("base size search exceeded work cap");
  }

  // |H : K| <= maxorb^t is necessary for t more points to suffice
  bool feasible(size_t h, uint32_t maxorb, int t) const {
    mpz_class bound = 1;
    for (int i = 0; i < t; ++i) bound *= maxorb;
    return mpz_class(static_cast<unsigned long>(h / pa.kernel_order())) <= bound;
  }

  std::vector<std::pair<uint32_t, uint32_t>> sorted_orbits(const PointAction::Subgroup& H,
                                                           const std::vector<bool>* dom) {
    charge(H.size() + pa.degree());
    auto orb = pa.orbits(H, dom);
    std::stable_sort(orb.begin(), orb.end(), [](auto& a, auto& b) { return a.second > b.second; });
    return orb;
  }

  bool reach(const PointAction::Subgroup& H, int t) {
    if (H.size() == pa.kernel_order()) return true;
    if (t == 0) return false;
    auto orb = sorted_orbits(H, nullptr);
    if (!feasible(H.size(), orb.empty() ? 1 : orb[0].second, t)) return false;
    for (auto [p, sz] : orb) {
      if (sz == 1) break;
      charge(H.size());
      if (reach(pa.stabilizer(H, p), t - 1)) return true;
    }
    return false;
  }

  mpz_class count(const PointAction::Subgroup& H, int t, const std::vector<bool>* dom, uint64_t dom_size) {
    if (H.size() == pa.kernel_order()) {
      mpz_class r = 1;
      for (int i = 0; i < t; ++i) r *= static_cast<unsigned long>(dom_size);
      return r;
    }
    if (t == 0) return 0;
    auto orb = sorted_orbits(H, dom);
    uint32_t maxorb = 1;
    for (auto& o : orb) maxorb = std::max(maxorb, o.second);
    if (!feasible(H.size(), maxorb, t)) return 0;
    mpz_class total = 0;
    for (auto [p, sz] : orb) {
      charge(H.size());
      total += count(pa.stabilizer(H, p), t - 1, dom, dom_size);
    }
    return total;
  }
};

}  // namespace

std::vector<PermVec> perm_closure(const std::vector<PermVec>& gens, uint64_t cap) {
  if (gens.empty()) return {};
  const size_t n = gens[0].size();
  PermVec id(n);
  for (size_t i = 0; i < n; ++i) id[i] = static_cast<uint32_t>(i);
  std::set<PermVec> seen{id};
  std::vector<PermVec> queue{id};
  for (size_t i = 0; i < queue.size(); ++i)
    for (auto& g : gens) {
      PermVec h(n);
      for (size_t p = 0; p < n; ++p) h[p] = g[queue[i][p]];
      if (seen.insert(h).second) {
        if (seen.size() > cap) throw CapExceeded("permutation closure exceeds cap");
        queue.push_back(std::move(h));
      }
    }
  return {seen.begin(), seen.end()};
}

std::string BaseSizeResult::str() const {
  if (value) return std::to_string(*value);
  return ">= " + std::to_string(lower_bound) + (capped ? " (work cap)" : "");
}

int log_lower(const mpz_class& order, const mpz_class& d) {
  if (d < 2) throw InvalidArgument("log_lower: degree below 2");
  int k = 0;
  mpz_class p = 1;
  while (p < order) {
    p *= d;
    ++k;
  }
  return k;
}

BaseSizeResult base_size_exact(const PointAction& pa, int max_c, uint64_t work_cap) {
  BaseSizeResult r;
  if (pa.quotient_order() == 1) {
    r.value = 0;
    return r;
  }
  if (pa.order() == pa.kernel_order()) {
    r.value = 1;
    r.lower_bound = 1;
    return r;
  }
  Search s{pa, work_cap};
  int lb = std::max(2, log_lower(pa.quotient_order(), static_cast<unsigned long>(pa.degree())));
  r.lower_bound = lb;
  try {
    for (int c = lb; c <= max_c; ++c) {
      r.lower_bound = c;
      if (s.reach(pa.all(), c - 1)) {
        r.value = c;
        r.work = s.work;
        return r;
      }
    }
    r.lower_bound = max_c + 1;
  } catch (const WorkCapExceeded&) {
    r.capped = true;
  }
  r.work = s.work;
  return r;
}

mpz_class reg_count(const PointAction& pa, int k, RegMode mode, uint64_t work_cap) {
  if (k < 1) throw InvalidArgument("reg_count: k must be positive");
  Search s{pa, work_cap};
  if (mode == RegMode::full) return s.count(pa.all(), k - 1, nullptr, pa.degree());
  std::vector<bool> dom(pa.degree(), true);
  dom[0] = false;
  return s.count(pa.all(), k - 1, &dom, pa.degree() - 1);
}

// ---- claims and certificates

const char* claim_name(ClaimKind k) {
  switch (k) {
    case ClaimKind::in_Z: return "in_Z";
    case ClaimKind::in_D: return "in_D";
    case ClaimKind::in_RT: return "in_RT";
    case ClaimKind::in_LT: return "in_LT";
    case ClaimKind::equals_core: return "equals_core";
    case ClaimKind::order_is: return "order_is";
    case ClaimKind::base_size_eq: return "base_size_eq";
    case ClaimKind::base_size_le: return "base_size_le";
    default: return "reg_ge";
  }
}

ClaimKind parse_claim(const std::string& s) {
  for (int i = 0; i <= static_cast<int>(ClaimKind::reg_ge); ++i)
    if (s == claim_name(static_cast<ClaimKind>(i))) return static_cast<ClaimKind>(i);
  throw ParseError("unknown claim: " + s);
}

MatGroup intersect_conjugates(const MatGroup& S, const std::vector<SemiElement>& conjugators,
                              std::vector<uint64_t>* trace, uint64_t cap) {
  const ElementSet& es = S.elements(cap);
  std::vector<SemiElement> cur;
  cur.reserve(es.size());
  for (size_t i = 0; i < es.size(); ++i) cur.push_back(es.element(i));
  if (trace) trace->push_back(cur.size());
  for (auto& a : conjugators) {
    SemiElement ai = a.inverse();
    std::vector<SemiElement> next;
    // s lies in S^a exactly when a s a^-1 lies in S
    for (auto& s : cur)
      if (es.contains(a * s * ai)) next.push_back(s);
    cur = std::move(next);
    if (trace) trace->push_back(cur.size());
  }
  return MatGroup::from_list(S.ambient(), cur, "intersection");
}

bool evaluate_claim(const MatGroup& I, const Claim& c, uint64_t core_order) {
  switch (c.kind) {
    case ClaimKind::in_Z: return is_in_Z(I, c.modulo_phi);
    case ClaimKind::in_D: return is_in_D(I, c.modulo_phi);
    case ClaimKind::in_RT: return is_in_RT(I, c.modulo_phi);
    case ClaimKind::in_LT: return is_in_LT(I, c.modulo_phi);
    case ClaimKind::equals_core: return I.order() == core_order;
    case ClaimKind::order_is: return I.order() == c.value;
    default: throw InvalidArgument(std::string("claim is not about an intersection: ") + claim_name(c.kind));
  }
}

Certificate check_intersection(const MatGroup& S, const std::vector<SemiElement>& conjugators, const Claim& claim,
                               uint64_t core_order) {
  Certificate c;
  c.ambient = S.ambient();
  c.conjugators = conjugators;
  c.claim = claim;
  MatGroup I = intersect_conjugates(S, conjugators, &c.order_trace);
  c.verified = evaluate_claim(I, claim, core_order);
  return c;
}

std::string Certificate::to_json() const {
  using nlohmann::ordered_json;
  ordered_json j;
  j["case"] = case_name;
  j["ambient"] = {{"n", ambient.n},
                  {"q", ambient.F ? ambient.F->q() : 0},
                  {"phi", ambient.allow_phi},
                  {"iota", ambient.allow_iota}};
  j["subgroup"] = {{"tag", subgroup_tag}, {"params", params.empty() ? ordered_json::object() : ordered_json::parse(params)}};
  ordered_json cj = ordered_json::array();
  for (auto& x : conjugators) cj.push_back(x.str());
  j["conjugators"] = cj;
  j["claim"] = {{"kind", claim_name(claim.kind)}, {"value", claim.value}, {"modulo_phi", claim.modulo_phi}};
  j["verified"] = verified;
  j["order_trace"] = order_trace;
  j["seed"] = seed;
  if (wall_time_ms)
    j["wall_time_ms"] = *wall_time_ms;
  else
    j["wall_time_ms"] = nullptr;
  return j.dump(2) + "\n";
}

Certificate Certificate::from_json(const std::string& text) {
  using nlohmann::ordered_json;
  Certificate c;
  try {
    ordered_json j = ordered_json::parse(text);
    c.case_name = j.at("case").get<std::string>();
    auto& a = j.at("ambient");
    uint32_t q = a.at("q").get<uint32_t>();
    c.ambient = Ambient(a.at("n").get<int>(), gf(q), a.at("phi").get<bool>(), a.at("iota").get<bool>());
    c.subgroup_tag = j.at("subgroup").at("tag").get<std::string>();
    c.params = j.at("subgroup").at("params").dump();
    for (auto& x : j.at("conjugators")) c.conjugators.push_back(SemiElement::parse(c.ambient.F, x.get<std::string>()));
    auto& cl = j.at("claim");
    c.claim.kind = parse_claim(cl.at("kind").get<std::string>());
    c.claim.value = cl.at("value").get<uint64_t>();
    c.claim.modulo_phi = cl.at("modulo_phi").get<bool>();
    c.verified = j.at("verified").get<bool>();
    c.order_trace = j.at("order_trace").get<std::vector<uint64_t>>();
    c.seed = j.at("seed").get<uint64_t>();
    if (!j.at("wall_time_ms").is_null()) c.wall_time_ms = j.at("wall_time_ms").get<uint64_t>();
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("certificate: ") + e.what());
  } catch (const Error& e) {
    throw ParseError(std::string("certificate: ") + e.what());
  }
  return c;
}

// ---- seeded search

uint64_t split_seed(uint64_t seed, uint64_t counter) {
  uint64_t z = seed + (counter + 1) * 0x9e3779b97f4a7c15ull;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

WordSampler::WordSampler(std::vector<SemiElement> gens, uint64_t seed, int length)
    : gens_(std::move(gens)), rng_(seed), length_(length) {
  if (gens_.empty()) throw InvalidArgument("word sampler needs generators");
}

SemiElement WordSampler::next() {
  SemiElement w = gens_[rng_() % gens_.size()];
  for (int i = 1; i < length_; ++i) w = w * gens_[rng_() % gens_.size()];
  return w;
}

SearchResult random_search(const MatGroup& S, const std::vector<SemiElement>& g_gens, int c, const Claim& claim,
                           uint64_t core_order, uint64_t seed, uint64_t trials) {
  SearchResult r;
  if (c < 1) throw InvalidArgument("random_search: c must be positive");
  for (uint64_t t = 0; t < trials; ++t) {
    WordSampler ws(g_gens, split_seed(seed, t));
    std::vector<SemiElement> conj;
    for (int i = 1; i < c; ++i) conj.push_back(ws.next());
    Certificate cert = check_intersection(S, conj, claim, core_order);
    r.trials_used = t + 1;
    if (cert.verified) {
      cert.seed = seed;
      r.cert = std::move(cert);
      return r;
    }
    // a single trial decides the empty list
    if (c == 1) break;
  }
  return r;
}

}  // namespace sbase
