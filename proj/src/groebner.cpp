#include "seqcm/groebner.hpp"

#include <algorithm>
#include <atomic>
#include <deque>
#include <functional>
#include <map>
#include <queue>
#include <set>
#include <unordered_set>

namespace seqcm {

Ideal::Ideal(RingPtr ring, std::vector<Polynomial> gens) : ring_(std::move(ring)) {
  gens_.reserve(gens.size());
  for (auto& g : gens) {
    if (g.is_zero()) continue;  // zero generators dropped
    check_same_ring(ring_, g.ring());
    gens_.push_back(std::move(g));
  }
}

Ideal Ideal::unit(RingPtr ring) {
  Polynomial one = Polynomial::constant(ring, 1);
  return Ideal(std::move(ring), {one});
}

Ideal Ideal::from_strings(const RingPtr& ring, const std::vector<std::string>& gens) {
  std::vector<Polynomial> ps;
  ps.reserve(gens.size());
  for (const auto& s : gens) ps.push_back(parse_polynomial(s, ring));
  return Ideal(ring, std::move(ps));
}

const ReducedBasis& Ideal::basis() const {
  auto cached = std::atomic_load_explicit(&basis_, std::memory_order_acquire);
  if (!cached) {
    cached = std::make_shared<const ReducedBasis>(reduced_groebner_basis(ring_, gens_));
    std::atomic_store_explicit(&basis_, cached, std::memory_order_release);
  }
  return *std::atomic_load_explicit(&basis_, std::memory_order_acquire);
}

std::vector<std::string> Ideal::gen_strings() const {
  std::vector<std::string> out;
  out.reserve(gens_.size());
  for (const auto& g : gens_) out.push_back(g.str());
  return out;
}

// ---------------------------------------------------------------------------
// Reduction
// ---------------------------------------------------------------------------

namespace {

// Divisor index over stable polynomial addresses, bucketed by leading degree so that
// the search skips generators whose leading monomial is already too big. Supports
// incremental growth; callers must keep the referenced polynomials alive and stable.
struct Reducer {
  const RingPtr& ring;
  std::vector<const Polynomial*> gens;  // sorted ascending by LM degree

  explicit Reducer(const RingPtr& r) : ring(r) {}

  template <typename Container>
  Reducer(const RingPtr& r, const Container& basis) : ring(r) {
    for (const auto& g : basis) add(&g);
  }

  void add(const Polynomial* g) {
    if (g->is_zero()) return;
    auto it = std::upper_bound(gens.begin(), gens.end(), g->lm().deg,
                               [](uint32_t d, const Polynomial* h) { return d < h->lm().deg; });
    gens.insert(it, g);
  }

  const Polynomial* find_divisor(const Expo& m, const Polynomial* exclude = nullptr) const {
    for (const Polynomial* g : gens) {
      if (g->lm().deg > m.deg) break;
      if (g != exclude && expo_divides(g->lm(), m)) return g;
    }
    return nullptr;
  }
};

// In-place normal form on raw term vectors; avoids per-step polynomial temporaries.
std::vector<Term> reduce_terms(std::vector<Term> work, const Reducer& red, const FieldSpec& F,
                               const MonomialOrder& ord, int nv, const Polynomial* exclude = nullptr) {
  std::vector<Term> out, buf;
  size_t head = 0;
  while (head < work.size()) {
    const Polynomial* g = red.find_divisor(work[head].m, exclude);
    if (!g) {
      out.push_back(std::move(work[head]));
      ++head;
      continue;
    }
    const Coeff c = fld_div(F, work[head].c, g->lc());
    const Expo shift = expo_div(work[head].m, g->lm());
    const auto& gt = g->terms();
    buf.clear();
    buf.reserve(work.size() - head + gt.size());
    size_t i = head + 1, j = 1;
    Expo gm;
    if (j < gt.size()) gm = expo_mul(gt[j].m, shift);
    while (i < work.size() && j < gt.size()) {
      int cmp = cmp_expo(ord, work[i].m, gm, nv);
      if (cmp > 0) {
        buf.push_back(std::move(work[i]));
        ++i;
      } else if (cmp < 0) {
        buf.push_back(Term{gm, fld_neg(F, fld_mul(F, gt[j].c, c))});
        ++j;
        if (j < gt.size()) gm = expo_mul(gt[j].m, shift);
      } else {
        Coeff s = fld_sub(F, work[i].c, fld_mul(F, gt[j].c, c));
        if (s != 0) buf.push_back(Term{work[i].m, std::move(s)});
        ++i;
        ++j;
        if (j < gt.size()) gm = expo_mul(gt[j].m, shift);
      }
    }
    for (; i < work.size(); ++i) buf.push_back(std::move(work[i]));
    for (; j < gt.size(); ++j)
      buf.push_back(Term{expo_mul(gt[j].m, shift), fld_neg(F, fld_mul(F, gt[j].c, c))});
    work.swap(buf);
    head = 0;
  }
  return out;
}

Polynomial reduce_full(const Polynomial& f, const Reducer& red, const Polynomial* exclude = nullptr) {
  const auto& ring = f.ring();
  std::vector<Term> r =
      reduce_terms(f.terms(), red, ring->field, ring->order, ring->nvars(), exclude);
  return Polynomial::from_canonical(ring, std::move(r));
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
  const auto& F = f.ring()->field;
  Expo L = expo_lcm(f.lm(), g.lm());
  Polynomial a = f.mul_term(expo_div(L, f.lm()), fld_inv(F, f.lc()));
  Polynomial b = g.mul_term(expo_div(L, g.lm()), fld_inv(F, g.lc()));
  return a - b;
}

struct PairEntry {
  Expo lcm;
  int i, j;
};

struct PairCmp {
  const MonomialOrder* ord;
  int nvars;
  // priority_queue keeps the largest on top; we want the smallest lcm first.
  bool operator()(const PairEntry& a, const PairEntry& b) const {
    int c = cmp_expo(*ord, a.lcm, b.lcm, nvars);
    if (c != 0) return c > 0;
    if (a.j != b.j) return a.j > b.j;
    return a.i > b.i;
  }
};

}  // namespace

ReducedBasis reduced_groebner_basis(const RingPtr& ring, const std::vector<Polynomial>& gens) {
  const auto& ord = ring->order;
  const int nv = ring->nvars();

  std::vector<Polynomial> G;
  G.reserve(gens.size());
  for (const auto& g : gens)
    if (!g.is_zero()) G.push_back(g);
  // Deterministic start independent of generator order and scaling.
  for (auto& g : G) g = g.monic();
  std::sort(G.begin(), G.end(), [&](const Polynomial& a, const Polynomial& b) {
    if (a.terms().size() != b.terms().size()) return a.terms().size() < b.terms().size();
    for (size_t t = 0; t < a.terms().size(); ++t) {
      int c = cmp_expo(ord, a.terms()[t].m, b.terms()[t].m, nv);
      if (c != 0) return c < 0;
      if (a.terms()[t].c != b.terms()[t].c) return a.terms()[t].c < b.terms()[t].c;
    }
    return false;
  });
  G.erase(std::unique(G.begin(), G.end(), [](const Polynomial& a, const Polynomial& b) { return a == b; }),
          G.end());

  // Autoreduce the input: overlapping generator sets (power products in particular)
  // collapse drastically before any S-pair work starts. The basis lives in a deque so
  // that the divisor index can hold stable addresses while it grows.
  std::deque<Polynomial> B;
  Reducer red(ring);
  for (const auto& g : G) {
    Polynomial r = reduce_full(g, red);
    if (r.is_zero()) continue;
    B.push_back(r.monic());
    red.add(&B.back());
  }

  std::priority_queue<PairEntry, std::vector<PairEntry>, PairCmp> queue(PairCmp{&ord, nv});
  std::set<std::pair<int, int>> pending;
  auto push_pairs = [&](int j) {
    for (int i = 0; i < j; ++i) {
      // The S-polynomial of two monomials vanishes; such pairs need no processing,
      // and skipping them here keeps monomial-heavy inputs out of the queue.
      if (B[i].is_monomial() && B[j].is_monomial()) continue;
      queue.push(PairEntry{expo_lcm(B[i].lm(), B[j].lm()), i, j});
      pending.insert({i, j});
    }
  };
  for (int j = 0; j < static_cast<int>(B.size()); ++j) push_pairs(j);

  while (!queue.empty()) {
    PairEntry p = queue.top();
    queue.pop();
    pending.erase({p.i, p.j});
    const Polynomial& f = B[p.i];
    const Polynomial& g = B[p.j];
    // Buchberger's first criterion: coprime leading monomials.
    if (expo_coprime(f.lm(), g.lm())) continue;
    // Buchberger's second criterion: some treated third element divides the lcm.
    bool skip = false;
    for (int k = 0; k < static_cast<int>(B.size()) && !skip; ++k) {
      if (k == p.i || k == p.j) continue;
      if (!expo_divides(B[k].lm(), p.lcm)) continue;
      auto key = [&](int a, int b) { return std::make_pair(std::min(a, b), std::max(a, b)); };
      if (!pending.count(key(p.i, k)) && !pending.count(key(p.j, k))) skip = true;
    }
    if (skip) continue;

    Polynomial r = reduce_full(s_polynomial(f, g), red);
    if (!r.is_zero()) {
      B.push_back(r.monic());
      red.add(&B.back());
      push_pairs(static_cast<int>(B.size()) - 1);
    }
  }

  // Minimalize: drop elements whose leading monomial is divisible by another's.
  std::vector<const Polynomial*> order;
  for (const auto& b : B) order.push_back(&b);
  std::sort(order.begin(), order.end(), [&](const Polynomial* a, const Polynomial* b) {
    return cmp_expo(ord, a->lm(), b->lm(), nv) < 0;
  });
  std::deque<Polynomial> minimal;
  Reducer lead_index(ring);
  for (const Polynomial* g : order) {
    if (lead_index.find_divisor(g->lm()) != nullptr) continue;
    minimal.push_back(*g);
    lead_index.add(&minimal.back());
  }

  // Interreduce tails (leads are pairwise non-divisible, so excluding the element
  // itself from its own reduction yields the canonical reduced basis in one pass).
  Reducer final_index(ring, minimal);
  ReducedBasis basis;
  for (const auto& g : minimal) basis.elements.push_back(reduce_full(g, final_index, &g).monic());
  std::sort(basis.elements.begin(), basis.elements.end(),
            [&](const Polynomial& a, const Polynomial& b) { return cmp_expo(ord, a.lm(), b.lm(), nv) > 0; });
  return basis;
}

Polynomial normal_form(const Polynomial& f, const Ideal& I) {
  check_same_ring(f.ring(), I.ring());
  const ReducedBasis& B = I.basis();
  Reducer red(I.ring(), B.elements);
  return reduce_full(f, red);
}

bool ideal_member(const Polynomial& f, const Ideal& I) { return normal_form(f, I).is_zero(); }

bool ideal_contains(const Ideal& I, const Ideal& J) {
  check_same_ring(I.ring(), J.ring());
  for (const auto& g : J.gens())
    if (!ideal_member(g, I)) return false;
  return true;
}

bool ideal_equal(const Ideal& I, const Ideal& J) {
  check_same_ring(I.ring(), J.ring());
  const auto& a = I.basis().elements;
  const auto& b = J.basis().elements;
  if (a.size() != b.size()) return false;
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return false;
  return true;
}

bool is_unit_ideal(const Ideal& I) { return I.basis().is_unit(); }
bool is_zero_ideal(const Ideal& I) { return I.basis().is_zero(); }

// ---------------------------------------------------------------------------
// Generator-level combinations
// ---------------------------------------------------------------------------

Ideal ideal_sum(const Ideal& I, const Ideal& J) {
  check_same_ring(I.ring(), J.ring());
  std::vector<Polynomial> gens = I.gens();
  gens.insert(gens.end(), J.gens().begin(), J.gens().end());
  return Ideal(I.ring(), std::move(gens));
}

Ideal ideal_product(const Ideal& I, const Ideal& J) {
  check_same_ring(I.ring(), J.ring());
  std::vector<Polynomial> gens;
  gens.reserve(I.gens().size() * J.gens().size());
  for (const auto& f : I.gens())
    for (const auto& g : J.gens()) gens.push_back(f * g);
  return Ideal(I.ring(), std::move(gens));
}

Ideal ideal_power(const Ideal& I, int n) {
  if (n < 0) fail(ErrorKind::unsupported, "negative ideal power");
  if (n == 0) return Ideal::unit(I.ring());
  Ideal acc = I;
  for (int k = 1; k < n; ++k) acc = ideal_product(acc, I);
  return acc;
}

Ideal ideal_combine(CombineKind kind, const Ideal& I, const Ideal& J) {
  switch (kind) {
    case CombineKind::sum: return ideal_sum(I, J);
    case CombineKind::product: return ideal_product(I, J);
    default: fail(ErrorKind::unsupported, "power takes an exponent, not an ideal");
  }
}

Ideal ideal_combine(CombineKind kind, const Ideal& I, int exponent) {
  if (kind != CombineKind::power) fail(ErrorKind::unsupported, "only power takes an exponent");
  return ideal_power(I, exponent);
}

// ---------------------------------------------------------------------------
// Elimination-based operations
// ---------------------------------------------------------------------------

namespace {

const char* kAuxVar = "t@elim";

RingPtr extend_with_aux(const RingPtr& ring) {
  if (ring->nvars() + 1 > kMaxVars) fail(ErrorKind::unsupported, "too many variables for elimination");
  std::vector<std::string> vars;
  vars.reserve(ring->nvars() + 1);
  vars.push_back(kAuxVar);
  vars.insert(vars.end(), ring->vars.begin(), ring->vars.end());
  return make_ring(std::move(vars), ring->field,
                   MonomialOrder::block(1, MonomialOrder::Kind::lex, MonomialOrder::Kind::grevlex));
}

Polynomial shift_up(const Polynomial& f, const RingPtr& ext) {
  std::vector<Term> ts;
  ts.reserve(f.terms().size());
  for (const auto& t : f.terms()) {
    Expo m;
    for (int v = 0; v < kMaxVars - 1; ++v) m.e[v + 1] = t.m.e[v];
    m.deg = t.m.deg;
    ts.push_back(Term{m, t.c});
  }
  return Polynomial(ext, std::move(ts));
}

Polynomial shift_down(const Polynomial& f, const RingPtr& base) {
  std::vector<Term> ts;
  ts.reserve(f.terms().size());
  for (const auto& t : f.terms()) {
    Expo m;
    for (int v = 0; v + 1 < kMaxVars; ++v) m.e[v] = t.m.e[v + 1];
    m.deg = t.m.deg;
    ts.push_back(Term{m, t.c});
  }
  return Polynomial(base, std::move(ts));
}

bool uses_aux(const Polynomial& f) {
  for (const auto& t : f.terms())
    if (t.m.e[0] != 0) return true;
  return false;
}

bool all_monomial_gens(const Ideal& I) {
  for (const auto& g : I.gens())
    if (!g.is_monomial()) return false;
  return true;
}

std::vector<Expo> raw_monomials(const Ideal& I) {
  std::vector<Expo> ms;
  ms.reserve(I.gens().size());
  for (const auto& g : I.gens()) ms.push_back(g.lm());
  return ms;
}

std::vector<Expo> minimalize_monomials(std::vector<Expo> ms) {
  std::sort(ms.begin(), ms.end(), [](const Expo& a, const Expo& b) { return a.deg < b.deg; });
  std::vector<Expo> out;
  for (const auto& m : ms) {
    bool redundant = false;
    for (const auto& n : out)
      if (expo_divides(n, m)) {
        redundant = true;
        break;
      }
    if (!redundant) out.push_back(m);
  }
  return out;
}

Ideal from_monomials(const RingPtr& ring, const std::vector<Expo>& ms) {
  std::vector<Polynomial> gens;
  gens.reserve(ms.size());
  for (const auto& m : ms) gens.push_back(Polynomial::monomial(ring, m));
  return Ideal(ring, std::move(gens));
}

}  // namespace

Ideal ideal_intersection(const Ideal& I, const Ideal& J) {
  check_same_ring(I.ring(), J.ring());
  const RingPtr& ring = I.ring();
  if (is_unit_ideal(I)) return J;
  if (is_unit_ideal(J)) return I;
  if (all_monomial_gens(I) && all_monomial_gens(J)) {
    std::vector<Expo> ms;
    for (const auto& a : raw_monomials(I))
      for (const auto& b : raw_monomials(J)) ms.push_back(expo_lcm(a, b));
    return from_monomials(ring, minimalize_monomials(std::move(ms)));
  }
  RingPtr ext = extend_with_aux(ring);
  Polynomial t = Polynomial::variable(ext, 0);
  Polynomial one_minus_t = Polynomial::constant(ext, 1) - t;
  std::vector<Polynomial> gens;
  for (const auto& f : I.gens()) gens.push_back(t * shift_up(f, ext));
  for (const auto& g : J.gens()) gens.push_back(one_minus_t * shift_up(g, ext));
  ReducedBasis B = reduced_groebner_basis(ext, gens);
  std::vector<Polynomial> kept;
  for (const auto& e : B.elements)
    if (!uses_aux(e)) kept.push_back(shift_down(e, ring));
  return Ideal(ring, std::move(kept));
}

Ideal ideal_colon(const Ideal& I, const Polynomial& g) {
  check_same_ring(I.ring(), g.ring());
  if (g.is_zero()) fail(ErrorKind::zero_ideal, "colon by the zero polynomial");
  if (g.is_constant()) return I;
  if (all_monomial_gens(I) && g.is_monomial()) {
    std::vector<Expo> ms;
    for (const auto& m : raw_monomials(I)) ms.push_back(expo_div(m, expo_gcd(m, g.lm())));
    return from_monomials(I.ring(), minimalize_monomials(std::move(ms)));
  }
  Ideal inter = ideal_intersection(I, Ideal(I.ring(), {g}));
  std::vector<Polynomial> gens;
  gens.reserve(inter.gens().size());
  for (const auto& f : inter.gens()) gens.push_back(exact_divide(f, g));
  return Ideal(I.ring(), std::move(gens));
}

Ideal ideal_colon(const Ideal& I, const Ideal& J) {
  check_same_ring(I.ring(), J.ring());
  if (J.has_zero_gens()) fail(ErrorKind::zero_ideal, "colon by the zero ideal");
  bool first = true;
  Ideal acc;
  for (const auto& g : J.gens()) {
    Ideal c = ideal_colon(I, g);
    acc = first ? c : ideal_intersection(acc, c);
    first = false;
  }
  return acc;
}

SaturationResult saturation(const Ideal& I, const Ideal& J) {
  if (J.has_zero_gens()) fail(ErrorKind::zero_ideal, "saturation by the zero ideal");
  Ideal prev = I;
  int steps = 0;
  // Colon chains stabilize by Noetherianity; the bound only guards against bugs.
  for (int k = 0; k < 1000; ++k) {
    Ideal next = ideal_colon(prev, J);
    if (ideal_equal(next, prev)) return SaturationResult{prev, steps};
    prev = next;
    ++steps;
  }
  fail(ErrorKind::unsupported, "saturation failed to stabilize");
}

// ---------------------------------------------------------------------------
// Combinatorics of the leading-term ideal
// ---------------------------------------------------------------------------

int krull_dimension(const Ideal& I) {
  if (is_unit_ideal(I)) fail(ErrorKind::unit_ideal, "dimension of the unit ideal");
  const int n = I.ring()->nvars();
  std::vector<uint32_t> supports;
  for (const auto& g : I.basis().elements) {
    uint32_t mask = 0;
    for (int v = 0; v < n; ++v)
      if (g.lm().e[v]) mask |= (1u << v);
    supports.push_back(mask);
  }
  // A variable set is independent iff no leading monomial is supported inside it.
  int best = 0;
  for (uint32_t s = 0; s < (1u << n); ++s) {
    bool independent = true;
    for (uint32_t m : supports)
      if ((m & ~s) == 0) {
        independent = false;
        break;
      }
    if (independent) best = std::max(best, __builtin_popcount(s));
  }
  return best;
}

Length colength(const Ideal& I) {
  const ReducedBasis& B = I.basis();
  if (B.is_unit()) return Length::of(0);
  const int n = I.ring()->nvars();
  if (n == 0) return Length::of(B.is_zero() ? 1 : 0);
  std::vector<Expo> lts;
  lts.reserve(B.elements.size());
  for (const auto& g : B.elements) lts.push_back(g.lm());

  std::vector<int> bound(n, -1);
  for (const auto& m : lts) {
    int support = -1;
    for (int v = 0; v < n; ++v)
      if (m.e[v]) {
        if (support >= 0) {
          support = -2;
          break;
        }
        support = v;
      }
    if (support >= 0) {
      int b = m.e[support];
      if (bound[support] < 0 || b < bound[support]) bound[support] = b;
    }
  }
  for (int v = 0; v < n; ++v)
    if (bound[v] < 0) return Length::infinite();

  unsigned long long box = 1;
  for (int v = 0; v < n; ++v) {
    box *= static_cast<unsigned long long>(bound[v]);
    if (box > 80'000'000ULL) fail(ErrorKind::unsupported, "standard monomial box too large");
  }

  // Count exponent vectors below the pure-power box avoiding every leading term.
  unsigned long long count = 0;
  Expo cur;
  std::vector<const Expo*> mixed;
  for (const auto& m : lts) mixed.push_back(&m);
  std::function<void(int)> rec = [&](int v) {
    if (v == n) {
      for (const Expo* m : mixed)
        if (expo_divides(*m, cur)) return;
      ++count;
      return;
    }
    for (int e = 0; e < bound[v]; ++e) {
      cur.e[v] = static_cast<uint16_t>(e);
      cur.deg += e;
      rec(v + 1);
      cur.deg -= e;
    }
    cur.e[v] = 0;
  };
  rec(0);
  return Length::of(count);
}

Length ideal_subquotient_length(const Ideal& U, const Ideal& J) {
  check_same_ring(U.ring(), J.ring());
  unsigned long long total = 0;
  std::vector<Polynomial> prefix = J.gens();
  for (const auto& u : U.gens()) {
    Ideal step(U.ring(), prefix);
    if (is_unit_ideal(step)) break;  // the chain already reached U
    Length c = colength(ideal_colon(step, u));
    if (!c.finite) return Length::infinite();
    total += c.value;
    prefix.push_back(u);
  }
  return Length::of(total);
}

bool is_monomial_ideal(const Ideal& I) {
  // Equivalent to each generator's terms individually belonging to I; the reduced
  // basis of a monomial ideal consists exactly of its minimal monomial generators.
  return I.basis().all_monomials();
}

std::vector<Expo> monomial_gens(const Ideal& I) {
  if (!is_monomial_ideal(I)) fail(ErrorKind::unsupported, "not a monomial ideal");
  std::vector<Expo> ms;
  for (const auto& g : I.basis().elements) ms.push_back(g.lm());
  return ms;
}

Ideal irrelevant_ideal(const RingPtr& ring) {
  std::vector<Polynomial> vars;
  for (int v = 0; v < ring->nvars(); ++v) vars.push_back(Polynomial::variable(ring, v));
  return Ideal(ring, std::move(vars));
}

}  // namespace seqcm
