#ifndef SEQCM_RING_HPP
#define SEQCM_RING_HPP

#include <array>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "seqcm/field.hpp"

namespace seqcm {

// Hard cap on ring size; combinatorial dimension search is exponential in it.
inline constexpr int kMaxVars = 12;

// Exponent vector with cached total degree. Entries beyond the ring's nvars stay zero.
struct Expo {
  std::array<uint16_t, kMaxVars> e{};
  uint32_t deg = 0;

  bool operator==(const Expo& o) const { return deg == o.deg && e == o.e; }
  bool operator!=(const Expo& o) const { return !(*this == o); }
  bool is_one() const { return deg == 0; }
};

inline Expo expo_mul(const Expo& a, const Expo& b) {
  Expo r;
  for (int i = 0; i < kMaxVars; ++i) r.e[i] = static_cast<uint16_t>(a.e[i] + b.e[i]);
  r.deg = a.deg + b.deg;
  return r;
}

inline bool expo_divides(const Expo& a, const Expo& b) {  // a | b
  if (a.deg > b.deg) return false;
  for (int i = 0; i < kMaxVars; ++i)
    if (a.e[i] > b.e[i]) return false;
  return true;
}

inline Expo expo_div(const Expo& b, const Expo& a) {  // b / a, assumes a | b
  Expo r;
  for (int i = 0; i < kMaxVars; ++i) r.e[i] = static_cast<uint16_t>(b.e[i] - a.e[i]);
  r.deg = b.deg - a.deg;
  return r;
}

inline Expo expo_lcm(const Expo& a, const Expo& b) {
  Expo r;
  uint32_t d = 0;
  for (int i = 0; i < kMaxVars; ++i) {
    r.e[i] = std::max(a.e[i], b.e[i]);
    d += r.e[i];
  }
  r.deg = d;
  return r;
}

inline Expo expo_gcd(const Expo& a, const Expo& b) {
  Expo r;
  uint32_t d = 0;
  for (int i = 0; i < kMaxVars; ++i) {
    r.e[i] = std::min(a.e[i], b.e[i]);
    d += r.e[i];
  }
  r.deg = d;
  return r;
}

inline bool expo_coprime(const Expo& a, const Expo& b) {
  for (int i = 0; i < kMaxVars; ++i)
    if (a.e[i] && b.e[i]) return false;
  return true;
}

// Total multiplicative well-orders on exponent vectors. A block order compares the
// first `split` variables under `first`, then the rest under `second`; it is the
// elimination order for the leading block.
struct MonomialOrder {
  enum class Kind { lex, grevlex, block };

  Kind kind = Kind::grevlex;
  int split = 0;
  Kind first = Kind::lex;
  Kind second = Kind::grevlex;

  static MonomialOrder lex() { return {Kind::lex, 0, Kind::lex, Kind::lex}; }
  static MonomialOrder grevlex() { return {Kind::grevlex, 0, Kind::lex, Kind::lex}; }
  static MonomialOrder block(int split, Kind first, Kind second) { return {Kind::block, split, first, second}; }

  bool operator==(const MonomialOrder& o) const {
    if (kind != o.kind) return false;
    if (kind != Kind::block) return true;
    return split == o.split && first == o.first && second == o.second;
  }

  std::string str() const;
};

// -1 / 0 / +1 for a < b / a == b / a > b over variables [lo, hi).
inline int cmp_expo_range(MonomialOrder::Kind kind, const Expo& a, const Expo& b, int lo, int hi) {
  if (kind == MonomialOrder::Kind::lex) {
    for (int i = lo; i < hi; ++i) {
      if (a.e[i] != b.e[i]) return a.e[i] > b.e[i] ? 1 : -1;
    }
    return 0;
  }
  // grevlex: total degree first, ties broken by the last differing variable,
  // smaller exponent there being larger.
  uint32_t da = 0, db = 0;
  for (int i = lo; i < hi; ++i) {
    da += a.e[i];
    db += b.e[i];
  }
  if (da != db) return da > db ? 1 : -1;
  for (int i = hi - 1; i >= lo; --i) {
    if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? 1 : -1;
  }
  return 0;
}

inline int cmp_expo(const MonomialOrder& ord, const Expo& a, const Expo& b, int nvars) {
  switch (ord.kind) {
    case MonomialOrder::Kind::lex:
      return cmp_expo_range(MonomialOrder::Kind::lex, a, b, 0, nvars);
    case MonomialOrder::Kind::grevlex:
      if (a.deg != b.deg) return a.deg > b.deg ? 1 : -1;
      return cmp_expo_range(MonomialOrder::Kind::grevlex, a, b, 0, nvars);
    case MonomialOrder::Kind::block: {
      int c = cmp_expo_range(ord.first, a, b, 0, ord.split);
      if (c != 0) return c;
      return cmp_expo_range(ord.second, a, b, ord.split, nvars);
    }
  }
  return 0;
}

struct PolyRing {
  std::vector<std::string> vars;
  FieldSpec field;
  MonomialOrder order;

  int nvars() const { return static_cast<int>(vars.size()); }
  int var_index(const std::string& name) const;
  bool same_ring(const PolyRing& o) const { return vars == o.vars && field == o.field; }
  // Term layout compatibility: same ring and same order.
  bool same_presentation(const PolyRing& o) const { return same_ring(o) && order == o.order; }
};

using RingPtr = std::shared_ptr<const PolyRing>;

RingPtr make_ring(std::vector<std::string> vars, FieldSpec field = FieldSpec::rationals(),
                  MonomialOrder order = MonomialOrder::grevlex());

// Same variables/field under a different order (Gröbner caches do not transfer).
RingPtr with_order(const RingPtr& ring, MonomialOrder order);

void check_same_ring(const RingPtr& a, const RingPtr& b);

}  // namespace seqcm

#endif
