#pragma once

#include <array>
#include <compare>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "sbase/linalg.hpp"

namespace sbase {

constexpr uint64_t kDefaultClosureCap = 1u << 22;

// Where elements live: GL_n(q), optionally extended by the Frobenius phi and
// by the inverse-transpose automorphism iota (n >= 3 only).
struct Ambient {
  int n = 0;
  FieldPtr F;
  bool allow_phi = false;
  bool allow_iota = false;

  Ambient() = default;
  Ambient(int n, FieldPtr F, bool phi = false, bool iota = false);
  bool operator==(const Ambient& o) const;
  std::string str() const;
};

// iota^l phi^j g, acting as: apply iota^l, then phi^j, then g.
class SemiElement {
 public:
  SemiElement() = default;
  explicit SemiElement(Matrix g, int j = 0, int l = 0);

  static SemiElement identity(const Ambient& amb);
  static SemiElement phi(const Ambient& amb);
  static SemiElement iota(const Ambient& amb);

  int l = 0;
  int j = 0;
  Matrix g;

  int n() const { return g.rows(); }
  const FieldPtr& field() const { return g.field(); }
  bool is_linear() const { return l == 0 && j == 0; }

  SemiElement operator*(const SemiElement& o) const;
  SemiElement inverse() const;
  bool operator==(const SemiElement& o) const { return l == o.l && j == o.j && g == o.g; }
  bool operator!=(const SemiElement& o) const { return !(*this == o); }
  bool operator<(const SemiElement& o) const;

  std::string str() const;
  static SemiElement parse(FieldPtr F, std::string_view text);
};

// x^-1 h x
SemiElement conj(const SemiElement& h, const SemiElement& x);
SemiElement power(const SemiElement& a, int64_t e);
uint64_t element_order(const SemiElement& a, uint64_t cap = 1u << 24);

// element predicates; modulo_phi allows any phi power in front
bool elem_in_Z(const SemiElement& x, bool modulo_phi = false);
bool elem_in_D(const SemiElement& x, bool modulo_phi = false);
bool elem_in_RT(const SemiElement& x, bool modulo_phi = false);
bool elem_in_LT(const SemiElement& x, bool modulo_phi = false);

struct Key {
  std::array<uint64_t, 4> w{};
  friend auto operator<=>(const Key&, const Key&) = default;
};

struct KeyHash {
  size_t operator()(const Key& k) const;
};

// Packs elements of an ambient into 256-bit keys whose order is
// lexicographic in (l, j, row-major codes).
class KeyCodec {
 public:
  explicit KeyCodec(const Ambient& amb);
  static bool fits(const Ambient& amb);
  Key pack(const SemiElement& x) const;
  SemiElement unpack(const Key& k) const;
  void pack_raw(int l, int j, const uint16_t* e, Key& out) const;
  void unpack_raw(const Key& k, int& l, int& j, uint16_t* e) const;
  const Ambient& ambient() const { return amb_; }

 private:
  Ambient amb_;
  int eb_ = 0, jb_ = 0, lb_ = 0;
};

// Sorted element keys with a hash index.
class ElementSet {
 public:
  ElementSet(KeyCodec codec, std::vector<Key> sorted);
  size_t size() const { return keys_.size(); }
  const Key& key(size_t i) const { return keys_[i]; }
  const std::vector<Key>& keys() const { return keys_; }
  SemiElement element(size_t i) const { return codec_.unpack(keys_[i]); }
  bool contains(const Key& k) const { return find(k) != npos; }
  bool contains(const SemiElement& x) const;
  size_t find(const Key& k) const;
  const KeyCodec& codec() const { return codec_; }
  static constexpr size_t npos = static_cast<size_t>(-1);

 private:
  KeyCodec codec_;
  std::vector<Key> keys_;
  std::vector<uint32_t> slots_;  // index + 1, 0 empty
  size_t mask_ = 0;
};

using Predicate = std::function<bool(const SemiElement&)>;
using Visitor = std::function<void(const SemiElement&)>;
using Enumerator = std::function<void(const Visitor&)>;

// Dimino closure of gens; elements sorted by key.
std::shared_ptr<const ElementSet> closure(const Ambient& amb, const std::vector<SemiElement>& gens,
                                          uint64_t cap = kDefaultClosureCap);

class MatGroup {
 public:
  MatGroup() = default;
  MatGroup(Ambient amb, std::vector<SemiElement> gens, std::string name = "");

  // membership decided structurally; enumeration by the given routine
  static MatGroup structural(Ambient amb, std::vector<SemiElement> gens, Predicate pred, Enumerator en,
                             std::optional<uint64_t> order, std::string name = "");
  static MatGroup from_elements(Ambient amb, std::shared_ptr<const ElementSet> elems, std::string name = "");
  static MatGroup from_list(Ambient amb, const std::vector<SemiElement>& elems, std::string name = "");

  const Ambient& ambient() const;
  const std::string& name() const;
  MatGroup named(std::string name) const;
  // generators; for groups given by elements a greedy generating set
  const std::vector<SemiElement>& gens() const;
  bool has_gens() const;

  bool contains(const SemiElement& x) const;
  const ElementSet& elements(uint64_t cap = kDefaultClosureCap) const;
  std::shared_ptr<const ElementSet> element_set(uint64_t cap = kDefaultClosureCap) const;
  bool enumerated() const;
  uint64_t order(uint64_t cap = kDefaultClosureCap) const;
  // known without enumerating
  std::optional<uint64_t> order_hint() const;
  bool has_predicate() const;
  void for_each(const Visitor& v, uint64_t cap = kDefaultClosureCap) const;

 private:
  friend MatGroup conj_group(const MatGroup& H, const SemiElement& x);
  struct Impl;
  std::shared_ptr<Impl> d_;
};

bool member(const MatGroup& G, const SemiElement& x);
MatGroup intersect(const MatGroup& A, const MatGroup& B, uint64_t cap = kDefaultClosureCap, int jobs = 1);
// H^x = x^-1 H x
MatGroup conj_group(const MatGroup& H, const SemiElement& x);
// largest normal subgroup of <g_gens> inside S
MatGroup core(const MatGroup& S, const std::vector<SemiElement>& g_gens, uint64_t cap = kDefaultClosureCap);
// elements of K normalizing H (H given by generators and membership)
MatGroup normalizer_in(const MatGroup& H, const MatGroup& K, uint64_t cap = kDefaultClosureCap);
bool same_elements(const MatGroup& A, const MatGroup& B, uint64_t cap = kDefaultClosureCap);
bool is_subgroup_of(const MatGroup& A, const MatGroup& B, uint64_t cap = kDefaultClosureCap);

bool is_in_Z(const MatGroup& H, bool modulo_phi = false);
bool is_in_D(const MatGroup& H, bool modulo_phi = false);
bool is_in_RT(const MatGroup& H, bool modulo_phi = false);
bool is_in_LT(const MatGroup& H, bool modulo_phi = false);

}  // namespace sbase
