#include "seqcm/ring.hpp"

#include <algorithm>
#include <set>

namespace seqcm {

std::string MonomialOrder::str() const {
  switch (kind) {
    case Kind::lex: return "lex";
    case Kind::grevlex: return "grevlex";
    case Kind::block: {
      auto name = [](Kind k) { return k == Kind::lex ? "lex" : "grevlex"; };
      return std::string("block(") + std::to_string(split) + "," + name(first) + "," + name(second) + ")";
    }
  }
  return "?";
}

int PolyRing::var_index(const std::string& name) const {
  for (int i = 0; i < nvars(); ++i)
    if (vars[i] == name) return i;
  return -1;
}

RingPtr make_ring(std::vector<std::string> vars, FieldSpec field, MonomialOrder order) {
  if (static_cast<int>(vars.size()) > kMaxVars)
    fail(ErrorKind::unsupported, "at most " + std::to_string(kMaxVars) + " variables supported");
  std::set<std::string> seen;
  for (const auto& v : vars) {
    if (v.empty()) fail(ErrorKind::parse, "empty variable name");
    if (!seen.insert(v).second) fail(ErrorKind::parse, "duplicate variable name: " + v);
  }
  if (order.kind == MonomialOrder::Kind::block &&
      (order.split < 0 || order.split > static_cast<int>(vars.size())))
    fail(ErrorKind::unsupported, "block order split out of range");
  auto r = std::make_shared<PolyRing>();
  r->vars = std::move(vars);
  r->field = field;
  r->order = order;
  return r;
}

RingPtr with_order(const RingPtr& ring, MonomialOrder order) {
  return make_ring(ring->vars, ring->field, order);
}

void check_same_ring(const RingPtr& a, const RingPtr& b) {
  if (a.get() == b.get()) return;
  if (!a || !b || !a->same_presentation(*b))
    fail(ErrorKind::ring_mismatch, "operands live in different rings");
}

}  // namespace seqcm
