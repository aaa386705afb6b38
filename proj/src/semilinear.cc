#include "sbase/semilinear.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>
#include <thread>

namespace sbase {

Ambient::Ambient(int n_, FieldPtr F_, bool phi, bool io) : n(n_), F(std::move(F_)), allow_phi(phi), allow_iota(io) {
  if (n < 1) throw DimensionError("dimension must be positive");
  if (allow_iota && n < 3) throw InvalidArgument("iota is only used for n >= 3");
  if (allow_phi && F->f() == 1) allow_phi = false;
}

bool Ambient::operator==(const Ambient& o) const {
  return n == o.n && F->same(*o.F) && allow_phi == o.allow_phi && allow_iota == o.allow_iota;
}

std::string Ambient::str() const {
  std::string s = "GL(" + std::to_string(n) + "," + std::to_string(F->q()) + ")";
  if (allow_phi) s += "+phi";
  if (allow_iota) s += "+iota";
  return s;
}

SemiElement::SemiElement(Matrix g_, int j_, int l_) : l(l_ & 1), j(j_), g(std::move(g_)) {
  if (!g.square()) throw DimensionError("semilinear element needs a square matrix");
  int f = static_cast<int>(g.field()->f());
  j = ((j % f) + f) % f;
}

SemiElement SemiElement::identity(const Ambient& amb) { return SemiElement(Matrix::identity(amb.F, amb.n)); }

SemiElement SemiElement::phi(const Ambient& amb) { return SemiElement(Matrix::identity(amb.F, amb.n), 1, 0); }

SemiElement SemiElement::iota(const Ambient& amb) {
  if (amb.n < 3) throw InvalidArgument("iota is only used for n >= 3");
  return SemiElement(Matrix::identity(amb.F, amb.n), 0, 1);
}

SemiElement SemiElement::operator*(const SemiElement& o) const {
  if (n() != o.n()) throw DimensionError("dimension mismatch");
  Matrix a = o.l ? sbase::iota(g) : g;
  if (o.j) a = frob(a, o.j);
  return SemiElement(a * o.g, j + o.j, l ^ o.l);
}

SemiElement SemiElement::inverse() const {
  Matrix gi = sbase::inverse(g);
  Matrix a = l ? transpose(g) : gi;  // iota(g^-1) = g^T
  return SemiElement(frob(a, -j), -j, l);
}

bool SemiElement::operator<(const SemiElement& o) const {
  if (l != o.l) return l < o.l;
  if (j != o.j) return j < o.j;
  return g < o.g;
}

std::string SemiElement::str() const {
  return "iota^" + std::to_string(l) + " phi^" + std::to_string(j) + " [" + g.str() + "]";
}

SemiElement SemiElement::parse(FieldPtr F, std::string_view text) {
  std::string s(text);
  int l = 0, j = 0;
  size_t lb = s.find('[');
  std::string head = lb == std::string::npos ? "" : s.substr(0, lb);
  std::string body = lb == std::string::npos ? s : s.substr(lb + 1);
  if (lb != std::string::npos) {
    size_t rb = body.rfind(']');
    if (rb == std::string::npos) throw ParseError("missing ']' in element");
    body = body.substr(0, rb);
  }
  std::istringstream hs(head);
  std::string tok;
  while (hs >> tok) {
    auto grab = [&](const std::string& pre) -> int {
      try {
        return std::stoi(tok.substr(pre.size()));
      } catch (...) {
        throw ParseError("bad token '" + tok + "'");
      }
    };
    if (tok.rfind("iota^", 0) == 0)
      l = grab("iota^");
    else if (tok.rfind("phi^", 0) == 0)
      j = grab("phi^");
    else
      throw ParseError("bad token '" + tok + "'");
  }
  Matrix g = Matrix::parse(F, body);
  if (!g.square()) throw ParseError("element matrix must be square");
  if (det(g) == 0) throw ParseError("element matrix is singular");
  return SemiElement(g, j, l);
}

SemiElement conj(const SemiElement& h, const SemiElement& x) { return x.inverse() * h * x; }

SemiElement power(const SemiElement& a, int64_t e) {
  SemiElement base = e < 0 ? a.inverse() : a;
  if (e < 0) e = -e;
  SemiElement r(Matrix::identity(a.field(), a.n()));
  while (e) {
    if (e & 1) r = r * base;
    base = base * base;
    e >>= 1;
  }
  return r;
}

uint64_t element_order(const SemiElement& a, uint64_t cap) {
  SemiElement x = a;
  for (uint64_t k = 1; k <= cap; ++k) {
    if (x.l == 0 && x.j == 0 && x.g.is_identity()) return k;
    x = x * a;
  }
  throw CapExceeded("element order above cap");
}

bool elem_in_Z(const SemiElement& x, bool modulo_phi) {
  return x.l == 0 && (modulo_phi || x.j == 0) && x.g.is_scalar();
}
bool elem_in_D(const SemiElement& x, bool modulo_phi) {
  return x.l == 0 && (modulo_phi || x.j == 0) && x.g.is_diagonal();
}
bool elem_in_RT(const SemiElement& x, bool modulo_phi) {
  return x.l == 0 && (modulo_phi || x.j == 0) && x.g.is_upper_triangular();
}
bool elem_in_LT(const SemiElement& x, bool modulo_phi) {
  return x.l == 0 && (modulo_phi || x.j == 0) && x.g.is_lower_triangular();
}

size_t KeyHash::operator()(const Key& k) const {
  uint64_t h = 0x9e3779b97f4a7c15ull;
  for (uint64_t w : k.w) {
    h ^= w + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    h *= 0xbf58476d1ce4e5b9ull;
    h ^= h >> 31;
  }
  return static_cast<size_t>(h);
}

namespace {

int bits_for(uint64_t maxval) {
  int b = 0;
  while ((1ull << b) <= maxval) ++b;
  return b;
}

struct BitWriter {
  Key& k;
  int pos = 0;
  void put(uint64_t v, int b) {
    while (b > 0) {
      int room = 64 - (pos & 63);
      int take = std::min(room, b);
      uint64_t chunk = (v >> (b - take)) & ((take == 64) ? ~0ull : ((1ull << take) - 1));
      k.w[pos >> 6] |= chunk << (room - take);
      pos += take;
      b -= take;
    }
  }
};

struct BitReader {
  const Key& k;
  int pos = 0;
  uint64_t get(int b) {
    uint64_t v = 0;
    while (b > 0) {
      int room = 64 - (pos & 63);
      int take = std::min(room, b);
      uint64_t chunk = (k.w[pos >> 6] >> (room - take)) & ((take == 64) ? ~0ull : ((1ull << take) - 1));
      v = (take == 64) ? chunk : ((v << take) | chunk);
      pos += take;
      b -= take;
    }
    return v;
  }
};

}  // namespace

bool KeyCodec::fits(const Ambient& amb) {
  if (amb.n > 16) return false;
  int eb = bits_for(amb.F->q() - 1);
  int jb = amb.allow_phi ? bits_for(amb.F->f() - 1) : 0;
  int lb = amb.allow_iota ? 1 : 0;
  return lb + jb + amb.n * amb.n * eb <= 256;
}

KeyCodec::KeyCodec(const Ambient& amb) : amb_(amb) {
  if (!fits(amb)) throw NotEnumerable("elements of " + amb.str() + " do not fit a 256-bit key");
  eb_ = bits_for(amb.F->q() - 1);
  jb_ = amb.allow_phi ? bits_for(amb.F->f() - 1) : 0;
  lb_ = amb.allow_iota ? 1 : 0;
}

void KeyCodec::pack_raw(int l, int j, const uint16_t* e, Key& out) const {
  out = Key{};
  BitWriter w{out};
  if (lb_) w.put(static_cast<uint64_t>(l), lb_);
  if (jb_) w.put(static_cast<uint64_t>(j), jb_);
  const int nn = amb_.n * amb_.n;
  for (int i = 0; i < nn; ++i) w.put(e[i], eb_);
}

void KeyCodec::unpack_raw(const Key& k, int& l, int& j, uint16_t* e) const {
  BitReader r{k};
  l = lb_ ? static_cast<int>(r.get(lb_)) : 0;
  j = jb_ ? static_cast<int>(r.get(jb_)) : 0;
  const int nn = amb_.n * amb_.n;
  for (int i = 0; i < nn; ++i) e[i] = static_cast<uint16_t>(r.get(eb_));
}

Key KeyCodec::pack(const SemiElement& x) const {
  if (x.n() != amb_.n || !x.field()->same(*amb_.F)) throw DimensionError("element outside ambient " + amb_.str());
  if (x.l && !amb_.allow_iota) throw InvalidArgument("iota element in ambient without iota");
  if (x.j && !amb_.allow_phi) throw InvalidArgument("phi element in ambient without phi");
  uint16_t e[256];
  const auto& d = x.g.data();
  for (size_t i = 0; i < d.size(); ++i) e[i] = static_cast<uint16_t>(d[i]);
  Key k;
  pack_raw(x.l, x.j, e, k);
  return k;
}

SemiElement KeyCodec::unpack(const Key& k) const {
  uint16_t e[256];
  int l, j;
  unpack_raw(k, l, j, e);
  Matrix g(amb_.F, amb_.n, amb_.n);
  for (int i = 0; i < amb_.n; ++i)
    for (int c = 0; c < amb_.n; ++c) g.at(i, c) = e[i * amb_.n + c];
  return SemiElement(g, j, l);
}

ElementSet::ElementSet(KeyCodec codec, std::vector<Key> sorted) : codec_(std::move(codec)), keys_(std::move(sorted)) {
  size_t cap = 16;
  while (cap < 2 * keys_.size() + 2) cap <<= 1;
  slots_.assign(cap, 0);
  mask_ = cap - 1;
  KeyHash h;
  for (size_t i = 0; i < keys_.size(); ++i) {
    size_t s = h(keys_[i]) & mask_;
    while (slots_[s]) s = (s + 1) & mask_;
    slots_[s] = static_cast<uint32_t>(i + 1);
  }
}

size_t ElementSet::find(const Key& k) const {
  size_t s = KeyHash{}(k)&mask_;
  while (slots_[s]) {
    if (keys_[slots_[s] - 1] == k) return slots_[s] - 1;
    s = (s + 1) & mask_;
  }
  return npos;
}

bool ElementSet::contains(const SemiElement& x) const {
  const Ambient& a = codec_.ambient();
  if (x.n() != a.n || !x.field()->same(*a.F)) return false;
  if ((x.l && !a.allow_iota) || (x.j && !a.allow_phi)) return false;
  return contains(codec_.pack(x));
}

namespace {

struct Raw {
  int l = 0, j = 0;
  uint16_t e[256];
};

class RawOps {
 public:
  explicit RawOps(const Ambient& amb) : F_(*amb.F), n_(amb.n), f_(static_cast<int>(amb.F->f())) {}

  // c = a * b
  void mul(const Raw& a, const Raw& b, Raw& c) const {
    const uint16_t* left = a.e;
    uint16_t tmp[256];
    if (b.l) {
      inv_transpose(a.e, tmp);
      left = tmp;
    }
    if (b.j) {
      if (left != tmp) {
        std::copy(a.e, a.e + n_ * n_, tmp);
        left = tmp;
      }
      for (int i = 0; i < n_ * n_; ++i) tmp[i] = static_cast<uint16_t>(F_.frobenius(tmp[i], b.j));
    }
    for (int i = 0; i < n_; ++i)
      for (int k = 0; k < n_; ++k) {
        Elt s = 0;
        for (int m = 0; m < n_; ++m) {
          Elt x = left[i * n_ + m], y = b.e[m * n_ + k];
          if (x && y) s = F_.add(s, F_.mul(x, y));
        }
        c.e[i * n_ + k] = static_cast<uint16_t>(s);
      }
    c.l = a.l ^ b.l;
    c.j = (a.j + b.j) % f_;
  }

  bool is_identity(const Raw& a) const {
    if (a.l || a.j) return false;
    for (int i = 0; i < n_; ++i)
      for (int k = 0; k < n_; ++k)
        if (a.e[i * n_ + k] != (i == k ? 1 : 0)) return false;
    return true;
  }

 private:
  void inv_transpose(const uint16_t* g, uint16_t* out) const {
    // Gauss-Jordan on [g | I]
    uint16_t m[16][32];
    for (int i = 0; i < n_; ++i)
      for (int k = 0; k < 2 * n_; ++k) m[i][k] = k < n_ ? g[i * n_ + k] : (k - n_ == i ? 1 : 0);
    for (int c = 0; c < n_; ++c) {
      int piv = c;
      while (piv < n_ && !m[piv][c]) ++piv;
      if (piv == n_) throw SingularMatrix("singular element during closure");
      if (piv != c)
        for (int k = 0; k < 2 * n_; ++k) std::swap(m[piv][k], m[c][k]);
      Elt ip = F_.inv(m[c][c]);
      for (int k = 0; k < 2 * n_; ++k) m[c][k] = static_cast<uint16_t>(F_.mul(m[c][k], ip));
      for (int i = 0; i < n_; ++i) {
        if (i == c || !m[i][c]) continue;
        Elt t = F_.neg(m[i][c]);
        for (int k = 0; k < 2 * n_; ++k) m[i][k] = static_cast<uint16_t>(F_.add(m[i][k], F_.mul(t, m[c][k])));
      }
    }
    for (int i = 0; i < n_; ++i)
      for (int k = 0; k < n_; ++k) out[k * n_ + i] = m[i][n_ + k];
  }

  const Field& F_;
  int n_, f_;
};

// open-addressing set of keys stored in an external vector
class KeyIndex {
 public:
  explicit KeyIndex(const std::vector<Key>& keys) : keys_(keys) { slots_.assign(1024, 0), mask_ = 1023; }
  bool contains(const Key& k) const {
    size_t s = KeyHash{}(k)&mask_;
    while (slots_[s]) {
      if (keys_[slots_[s] - 1] == k) return true;
      s = (s + 1) & mask_;
    }
    return false;
  }
  // call after keys_.push_back(k)
  void added() {
    if (2 * keys_.size() + 2 > slots_.size()) {
      slots_.assign(slots_.size() * 2, 0);
      mask_ = slots_.size() - 1;
      for (size_t i = 0; i < keys_.size(); ++i) insert(i);
    } else {
      insert(keys_.size() - 1);
    }
  }

 private:
  void insert(size_t i) {
    size_t s = KeyHash{}(keys_[i]) & mask_;
    while (slots_[s]) s = (s + 1) & mask_;
    slots_[s] = static_cast<uint32_t>(i + 1);
  }
  const std::vector<Key>& keys_;
  std::vector<uint32_t> slots_;
  size_t mask_;
};

}  // namespace

std::shared_ptr<const ElementSet> closure(const Ambient& amb, const std::vector<SemiElement>& gens, uint64_t cap) {
  KeyCodec codec(amb);
  RawOps ops(amb);
  const int nn = amb.n * amb.n;
  std::vector<Key> elems;
  KeyIndex index(elems);

  std::vector<Raw> graw;
  for (auto& s : gens) {
    Raw r;
    codec.unpack_raw(codec.pack(s), r.l, r.j, r.e);
    graw.push_back(r);
  }

  Raw id;
  for (int i = 0; i < nn; ++i) id.e[i] = (i % (amb.n + 1) == 0) ? 1 : 0;
  Key idk;
  codec.pack_raw(0, 0, id.e, idk);
  elems.push_back(idk);
  index.added();

  auto add = [&](const Key& k) {
    elems.push_back(k);
    index.added();
    if (elems.size() > cap) throw CapExceeded("closure exceeds cap of " + std::to_string(cap) + " elements");
  };

  std::vector<const Raw*> used;
  Raw h, prod, rep;
  Key k;
  for (const Raw& s : graw) {
    codec.pack_raw(s.l, s.j, s.e, k);
    if (index.contains(k)) continue;
    used.push_back(&s);
    const size_t prev = elems.size();
    // first coset H*s
    for (size_t i = 0; i < prev; ++i) {
      codec.unpack_raw(elems[i], h.l, h.j, h.e);
      ops.mul(h, s, prod);
      codec.pack_raw(prod.l, prod.j, prod.e, k);
      add(k);
    }
    for (size_t rp = prev; rp < elems.size(); rp += prev) {
      codec.unpack_raw(elems[rp], rep.l, rep.j, rep.e);
      for (const Raw* t : used) {
        Raw e;
        ops.mul(rep, *t, e);
        codec.pack_raw(e.l, e.j, e.e, k);
        if (index.contains(k)) continue;
        for (size_t i = 0; i < prev; ++i) {
          codec.unpack_raw(elems[i], h.l, h.j, h.e);
          ops.mul(h, e, prod);
          Key k2;
          codec.pack_raw(prod.l, prod.j, prod.e, k2);
          add(k2);
        }
      }
    }
  }
  std::sort(elems.begin(), elems.end());
  return std::make_shared<const ElementSet>(codec, std::move(elems));
}

struct MatGroup::Impl {
  Ambient amb;
  std::string name;
  std::vector<SemiElement> gens;
  bool gens_known = true;
  Predicate pred;
  Enumerator en;
  std::optional<uint64_t> order;
  std::mutex mu;
  std::shared_ptr<const ElementSet> elems;
};

MatGroup::MatGroup(Ambient amb, std::vector<SemiElement> gens, std::string name) : d_(std::make_shared<Impl>()) {
  for (auto& g : gens) {
    if (g.n() != amb.n || !g.field()->same(*amb.F)) throw DimensionError("generator outside ambient " + amb.str());
    if (g.l && !amb.allow_iota) throw InvalidArgument("iota generator in ambient without iota");
    if (g.j && !amb.allow_phi) throw InvalidArgument("phi generator in ambient without phi");
    if (det(g.g) == 0) throw SingularMatrix("singular generator");
  }
  d_->amb = std::move(amb);
  d_->gens = std::move(gens);
  d_->name = std::move(name);
}

MatGroup MatGroup::structural(Ambient amb, std::vector<SemiElement> gens, Predicate pred, Enumerator en,
                              std::optional<uint64_t> order, std::string name) {
  MatGroup G(std::move(amb), std::move(gens), std::move(name));
  G.d_->pred = std::move(pred);
  G.d_->en = std::move(en);
  G.d_->order = order;
  return G;
}

MatGroup MatGroup::from_elements(Ambient amb, std::shared_ptr<const ElementSet> elems, std::string name) {
  MatGroup G(std::move(amb), {}, std::move(name));
  G.d_->gens_known = false;
  G.d_->order = elems->size();
  G.d_->elems = std::move(elems);
  return G;
}

MatGroup MatGroup::from_list(Ambient amb, const std::vector<SemiElement>& list, std::string name) {
  KeyCodec codec(amb);
  std::vector<Key> keys;
  keys.reserve(list.size());
  for (auto& x : list) keys.push_back(codec.pack(x));
  std::sort(keys.begin(), keys.end());
  keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
  return from_elements(amb, std::make_shared<const ElementSet>(codec, std::move(keys)), std::move(name));
}

const Ambient& MatGroup::ambient() const { return d_->amb; }
const std::string& MatGroup::name() const { return d_->name; }

MatGroup MatGroup::named(std::string name) const {
  MatGroup G;
  G.d_ = std::make_shared<Impl>();
  G.d_->amb = d_->amb;
  G.d_->gens_known = has_gens();
  if (G.d_->gens_known) G.d_->gens = gens();
  G.d_->pred = d_->pred;
  G.d_->en = d_->en;
  G.d_->order = d_->order;
  {
    std::lock_guard<std::mutex> lock(d_->mu);
    G.d_->elems = d_->elems;
  }
  G.d_->name = std::move(name);
  return G;
}

const std::vector<SemiElement>& MatGroup::gens() const {
  {
    std::lock_guard<std::mutex> lock(d_->mu);
    if (d_->gens_known) return d_->gens;
  }
  // greedy generating set in key order
  auto all = element_set();
  std::vector<SemiElement> gens;
  std::shared_ptr<const ElementSet> cur = closure(d_->amb, gens);
  for (size_t i = 0; i < all->size() && cur->size() < all->size(); ++i) {
    if (cur->contains(all->key(i))) continue;
    gens.push_back(all->element(i));
    cur = closure(d_->amb, gens);
  }
  std::lock_guard<std::mutex> lock(d_->mu);
  if (!d_->gens_known) {
    d_->gens = std::move(gens);
    d_->gens_known = true;
  }
  return d_->gens;
}

bool MatGroup::has_gens() const {
  std::lock_guard<std::mutex> lock(d_->mu);
  return d_->gens_known;
}

std::shared_ptr<const ElementSet> MatGroup::element_set(uint64_t cap) const {
  {
    std::lock_guard<std::mutex> lock(d_->mu);
    if (d_->elems) return d_->elems;
  }
  std::shared_ptr<const ElementSet> es;
  if (d_->en) {
    if (d_->order && *d_->order > cap)
      throw CapExceeded("group order " + std::to_string(*d_->order) + " exceeds cap");
    KeyCodec codec(d_->amb);
    std::vector<Key> keys;
    if (d_->order) keys.reserve(*d_->order);
    d_->en([&](const SemiElement& x) {
      keys.push_back(codec.pack(x));
      if (keys.size() > cap) throw CapExceeded("enumeration exceeds cap");
    });
    std::sort(keys.begin(), keys.end());
    keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
    es = std::make_shared<const ElementSet>(codec, std::move(keys));
  } else {
    es = closure(d_->amb, d_->gens, cap);
  }
  std::lock_guard<std::mutex> lock(d_->mu);
  if (!d_->elems) d_->elems = es;
  d_->order = d_->elems->size();
  return d_->elems;
}

const ElementSet& MatGroup::elements(uint64_t cap) const { return *element_set(cap); }

bool MatGroup::enumerated() const {
  std::lock_guard<std::mutex> lock(d_->mu);
  return d_->elems != nullptr;
}

uint64_t MatGroup::order(uint64_t cap) const {
  {
    std::lock_guard<std::mutex> lock(d_->mu);
    if (d_->order) return *d_->order;
  }
  return elements(cap).size();
}

std::optional<uint64_t> MatGroup::order_hint() const {
  std::lock_guard<std::mutex> lock(d_->mu);
  return d_->order;
}

bool MatGroup::has_predicate() const { return static_cast<bool>(d_->pred); }

bool MatGroup::contains(const SemiElement& x) const {
  const Ambient& a = d_->amb;
  if (x.n() != a.n || !x.field()->same(*a.F)) return false;
  if ((x.l && !a.allow_iota) || (x.j && !a.allow_phi)) return false;
  if (d_->pred) return d_->pred(x);
  return elements().contains(x);
}

void MatGroup::for_each(const Visitor& v, uint64_t cap) const {
  const ElementSet& es = elements(cap);
  for (size_t i = 0; i < es.size(); ++i) v(es.element(i));
}

bool member(const MatGroup& G, const SemiElement& x) { return G.contains(x); }

MatGroup intersect(const MatGroup& A, const MatGroup& B, uint64_t cap, int jobs) {
  if (!(A.ambient() == B.ambient())) throw InvalidArgument("intersection of groups in different ambients");
  // enumerate the smaller side, filter by membership in the other
  auto oa = A.order_hint(), ob = B.order_hint();
  bool use_a = true;
  if (A.enumerated() != B.enumerated() && (!oa || !ob))
    use_a = A.enumerated();
  else if (oa && ob)
    use_a = *oa <= *ob;
  else if (!oa && ob)
    use_a = false;
  const MatGroup& small = use_a ? A : B;
  const MatGroup& big = use_a ? B : A;
  const ElementSet& es = small.elements(cap);
  jobs = std::max(1, jobs);
  const size_t N = es.size();
  std::vector<std::vector<Key>> parts(jobs);
  auto work = [&](int t) {
    size_t lo = N * t / jobs, hi = N * (t + 1) / jobs;
    for (size_t i = lo; i < hi; ++i)
      if (big.contains(es.element(i))) parts[t].push_back(es.key(i));
  };
  if (jobs == 1) {
    work(0);
  } else {
    std::vector<std::thread> th;
    for (int t = 0; t < jobs; ++t) th.emplace_back(work, t);
    for (auto& x : th) x.join();
  }
  std::vector<Key> keys;
  for (auto& p : parts) keys.insert(keys.end(), p.begin(), p.end());
  return MatGroup::from_elements(A.ambient(), std::make_shared<const ElementSet>(es.codec(), std::move(keys)),
                                 "(" + A.name() + ")&(" + B.name() + ")");
}

MatGroup conj_group(const MatGroup& H, const SemiElement& x) {
  std::vector<SemiElement> gens;
  if (H.has_gens())
    for (auto& g : H.gens()) gens.push_back(conj(g, x));
  SemiElement xi = x.inverse();
  MatGroup Hc = H;
  Predicate pred = [Hc, x, xi](const SemiElement& h) { return Hc.contains(x * h * xi); };
  Enumerator en = [Hc, x, xi](const Visitor& v) { Hc.for_each([&](const SemiElement& e) { v(xi * e * x); }); };
  MatGroup R = MatGroup::structural(H.ambient(), gens, pred, en, H.order_hint(), H.name() + "^x");
  if (!H.has_gens()) R.d_->gens_known = false;
  return R;
}

MatGroup core(const MatGroup& S, const std::vector<SemiElement>& g_gens, uint64_t cap) {
  const ElementSet& es = S.elements(cap);
  std::vector<Key> cur(es.keys());
  std::vector<SemiElement> ginv;
  for (auto& t : g_gens) ginv.push_back(t.inverse());
  for (;;) {
    ElementSet set(es.codec(), cur);
    std::vector<Key> next;
    for (size_t i = 0; i < set.size(); ++i) {
      SemiElement k = set.element(i);
      bool ok = true;
      for (size_t t = 0; t < g_gens.size() && ok; ++t) ok = set.contains(ginv[t] * k * g_gens[t]);
      if (ok) next.push_back(set.key(i));
    }
    if (next.size() == cur.size()) break;
    cur = std::move(next);
  }
  return MatGroup::from_elements(S.ambient(), std::make_shared<const ElementSet>(es.codec(), std::move(cur)),
                                 "core(" + S.name() + ")");
}

MatGroup normalizer_in(const MatGroup& H, const MatGroup& K, uint64_t cap) {
  const ElementSet& es = K.elements(cap);
  const auto& hg = H.gens();
  std::vector<Key> keys;
  for (size_t i = 0; i < es.size(); ++i) {
    SemiElement k = es.element(i);
    SemiElement ki = k.inverse();
    bool ok = true;
    for (size_t t = 0; t < hg.size() && ok; ++t) ok = H.contains(ki * hg[t] * k);
    if (ok) keys.push_back(es.key(i));
  }
  return MatGroup::from_elements(K.ambient(), std::make_shared<const ElementSet>(es.codec(), std::move(keys)),
                                 "N(" + H.name() + ")");
}

bool same_elements(const MatGroup& A, const MatGroup& B, uint64_t cap) {
  if (!(A.ambient() == B.ambient())) return false;
  return A.elements(cap).keys() == B.elements(cap).keys();
}

bool is_subgroup_of(const MatGroup& A, const MatGroup& B, uint64_t cap) {
  const ElementSet& es = A.elements(cap);
  for (size_t i = 0; i < es.size(); ++i)
    if (!B.contains(es.element(i))) return false;
  return true;
}

namespace {
bool all_of(const MatGroup& H, bool (*p)(const SemiElement&, bool), bool modulo_phi) {
  const ElementSet& es = H.elements();
  for (size_t i = 0; i < es.size(); ++i)
    if (!p(es.element(i), modulo_phi)) return false;
  return true;
}
}  // namespace

bool is_in_Z(const MatGroup& H, bool modulo_phi) { return all_of(H, elem_in_Z, modulo_phi); }
bool is_in_D(const MatGroup& H, bool modulo_phi) { return all_of(H, elem_in_D, modulo_phi); }
bool is_in_RT(const MatGroup& H, bool modulo_phi) { return all_of(H, elem_in_RT, modulo_phi); }
bool is_in_LT(const MatGroup& H, bool modulo_phi) { return all_of(H, elem_in_LT, modulo_phi); }

}  // namespace sbase
