#include "fc/boundary.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <stdexcept>

namespace fc {

namespace {

int mod1(int x, int n) { return ((x - 1) % n + n) % n + 1; }

Arch ordered(int a, int b) { return a < b ? Arch{a, b} : Arch{b, a}; }

int next_in_block(const NcPartition& p, int i) {
  const auto& b = p.block_containing(i);
  auto it = std::find(b.begin(), b.end(), i);
  return ++it == b.end() ? b.front() : *it;
}

// Arch of label i in layer s of the r-fold superposition.
Arch layer_arch(const NcPartition& p, int i, int s, int r) {
  const int n = p.n();
  int k = mod1(next_in_block(p, i) - 1, n);
  return ordered((2 * i - 2) * r + s, 2 * k * r - s + 1);
}

Arch label_arch(const NcPartition& p, int i) { return layer_arch(p, i, 1, 1); }

NcPartition split_off(const NcPartition& p, int x) {
  std::vector<std::vector<int>> blocks;
  for (const auto& b : p.blocks()) {
    if (std::find(b.begin(), b.end(), x) == b.end()) {
      blocks.push_back(b);
      continue;
    }
    std::vector<int> rest;
    for (int y : b)
      if (y != x) rest.push_back(y);
    blocks.push_back({x});
    if (!rest.empty()) blocks.push_back(rest);
  }
  return NcPartition(p.n(), blocks);
}

bool contains(const std::vector<Arch>& sorted, const Arch& a) {
  return std::binary_search(sorted.begin(), sorted.end(), a);
}

// A partition in an arbitrary rotation frame, primes carried as dotted arches of its Psi image.
struct Marked {
  NcPartition pi;
  std::set<Arch> dots;
};

Marked mark(const PrimedPartition& p) {
  Marked m{p.base(), {}};
  for (int i : p.primed()) m.dots.insert(label_arch(p.base(), i));
  return m;
}

PrimedPartition unmark(const Marked& m) {
  std::set<int> primed;
  for (int i = 1; i <= m.pi.n(); ++i)
    if (m.dots.count(label_arch(m.pi, i))) primed.insert(i);
  return PrimedPartition(m.pi, primed);
}

bool primed_in(const Marked& m, int i) { return m.dots.count(label_arch(m.pi, i)) > 0; }

Marked rotate(const Marked& m, int k) {
  const auto c = rotate_sigma(ChordDiagram(2 * m.pi.n(), psi(m.pi).arches(), {}, {}, m.dots), k);
  return {kreweras_pow(m.pi, k), c.dots()};
}

// Merges the blocks of a and a+1; a dot on a consumed arch moves to the joined arch.
Marked merge_at(const Marked& m, int a) {
  const int n = m.pi.n();
  const int b = mod1(a + 1, n);
  if (m.pi.same_block(a, b)) return m;
  const auto before = psi(m.pi).arches();
  NcPartition q = m.pi.merged(a, b);
  const auto after = psi(q).arches();
  Marked out{q, {}};
  bool moved = false;
  for (const auto& d : m.dots) {
    if (contains(after, d)) {
      out.dots.insert(d);
    } else {
      moved = true;
    }
  }
  if (moved) {
    const Arch cap = ordered(2 * a - 1, 2 * a);
    for (const auto& x : after)
      if (x != cap && !contains(before, x)) out.dots.insert(x);
  }
  return out;
}

Marked keep_surviving(const Marked& m, const NcPartition& q) {
  const auto after = psi(q).arches();
  Marked out{q, {}};
  for (const auto& d : m.dots)
    if (contains(after, d)) out.dots.insert(d);
  return out;
}

using Term = std::pair<Marked, LaurentPoly>;

LaurentPoly one() { return LaurentPoly::constant(1); }

Term small_g(const Marked& m, int p) {
  const int n = m.pi.n();
  const auto& pi = m.pi;
  const int u = n + 1 - p, v = mod1(n + 2 - p, n);
  if (pi.same_block(1, 2) && pi.same_block(v, u)) return {m, tau()};
  if (pi.same_block(1, v) && pi.same_block(2, u) && !pi.same_block(1, 2)) {
    int dotted = static_cast<int>(primed_in(m, 1)) + static_cast<int>(primed_in(m, u));
    Marked out = keep_surviving(m, pi.merged(1, 2).merged(u, v));
    LaurentPoly w = dotted == 0 ? tau_p(p, n) : dotted == 1 ? theta() : tau_prime_p(p);
    return {out, w};
  }
  return {merge_at(merge_at(m, 1), u), one()};
}

Term small_g_n(const Marked& m) {
  const int n = m.pi.n();
  const auto& pi = m.pi;
  const int mid = n / 2 + 1;
  if (n % 2 == 0 && pi.block_containing(mid).size() != 1) return {keep_surviving(m, split_off(pi, mid)), one()};
  if (n % 2 == 1 && n > 1 && !pi.same_block((n + 1) / 2, (n + 3) / 2))
    return {keep_surviving(m, pi.merged((n + 1) / 2, (n + 3) / 2)), one()};
  if (primed_in(m, mid)) {
    Marked out = m;
    out.dots.erase(label_arch(pi, mid));
    return {out, theta()};
  }
  return {m, tau_even()};
}

Term small_g_0(const Marked& m) {
  const int n = m.pi.n();
  const int n1 = next_in_block(m.pi, 1);
  if (n1 == 1) {
    if (primed_in(m, 1)) return {m, tau_left_even()};
    Marked out = m;
    out.dots.insert(label_arch(m.pi, 1));
    return {out, theta()};
  }
  Marked out = keep_surviving(m, split_off(m.pi, 1));
  out.dots.insert(label_arch(out.pi, 1));
  out.dots.insert(label_arch(out.pi, mod1(n + 2 - n1, n)));
  return {out, one()};
}

template <class Sum, class Key, class F>
Sum extend(const Sum& x, F&& f) {
  Sum out;
  for (const auto& [k, c] : x.terms()) {
    const auto y = f(k);
    for (const auto& [k2, c2] : y.terms()) out.add(k2, c * c2);
  }
  return out;
}

std::vector<int> acted_coordinates(int i, int s, int r) {
  if (s < 1 || s > r) throw DomainError("layer count out of range");
  std::vector<int> idx;
  if (i % 2 == 1) {
    for (int t = r - s; t < r; ++t) idx.push_back(t);
  } else {
    for (int t = 0; t < s; ++t) idx.push_back(t);
  }
  return idx;
}

}  // namespace

bool is_symmetric(const NcPartition& p, int epsilon) {
  const int n = p.n();
  for (const auto& b : p.blocks())
    for (size_t j = 1; j < b.size(); ++j)
      if (!p.same_block(mod1(n + 2 - epsilon - b[0], n), mod1(n + 2 - epsilon - b[j], n))) return false;
  return true;
}

std::vector<NcPartition> enumerate_snc(int n, int epsilon) {
  if (epsilon != 0 && epsilon != 1) throw DomainError("epsilon must be 0 or 1");
  std::vector<NcPartition> out;
  for (auto& p : enumerate_ncp(n))
    if (is_symmetric(p, epsilon)) out.push_back(std::move(p));
  return out;
}

BigInt count_snc(int n) { return binomial(n, n / 2); }

int check_snc_recurrences(int nmax) {
  std::vector<BigInt> a(nmax + 1);
  for (int n = 1; n <= nmax; ++n) {
    a[n] = BigInt(enumerate_snc(n, 0).size());
    if (a[n] != count_snc(n)) return n;
    if (n >= 2 && n % 2 == 0 && a[n] != 2 * a[n - 1]) return n;
    if (n >= 3 && n % 2 == 1 && a[n] != 2 * a[n - 1] - catalan((n - 1) / 2)) return n;
  }
  return 0;
}

std::vector<RChain> enumerate_snc_chains(int n, int r) {
  const auto base = enumerate_snc(n, 0);
  std::vector<RChain> out;
  std::vector<NcPartition> cur;
  std::function<void()> go = [&] {
    if (static_cast<int>(cur.size()) == r) {
      out.emplace_back(cur);
      return;
    }
    for (const auto& p : base) {
      if (!cur.empty() && !leq(cur.back(), p)) continue;
      cur.push_back(p);
      go();
      cur.pop_back();
    }
  };
  go();
  std::sort(out.begin(), out.end());
  return out;
}

bool is_mirror_symmetric(const ChordDiagram& c) {
  const int P = c.num_points();
  for (const auto& [a, b] : c.arches())
    if (!contains(c.arches(), {P + 1 - b, P + 1 - a})) return false;
  return true;
}

std::vector<ChordDiagram> enumerate_symmetric_matchings(int n, int r) {
  std::vector<ChordDiagram> out;
  for (auto& c : enumerate_matchings(2 * r * n, r))
    if (is_mirror_symmetric(c)) out.push_back(std::move(c));
  return out;
}

BigInt count_B(int n, int r) { return BigInt(enumerate_symmetric_matchings(n, r).size()); }

ChordDiagram cut_symmetric(const ChordDiagram& full) {
  if (!is_mirror_symmetric(full)) throw DomainError("diagram is not mirror symmetric");
  const int P = full.num_points(), H = P / 2;
  std::vector<Arch> arches;
  std::set<int> re, le;
  for (const auto& a : full.arches()) {
    const bool dotted = full.dots().count(a) > 0;
    if (a.second <= H) {
      if (dotted) throw DomainError("dot on an arch that does not cross the middle");
      arches.push_back(a);
    } else if (a.first <= H) {
      if (a.first + a.second != P + 1) throw DomainError("arch crosses the middle asymmetrically");
      (dotted ? le : re).insert(a.first);
    }
  }
  return ChordDiagram(H, arches, re, le);
}

ChordDiagram uncut(const ChordDiagram& half) {
  const int H = half.num_points(), P = 2 * H;
  std::vector<Arch> arches;
  std::set<Arch> dots;
  for (const auto& [a, b] : half.arches()) {
    arches.push_back({a, b});
    arches.push_back({P + 1 - b, P + 1 - a});
  }
  for (int x : half.right_ends()) arches.push_back({x, P + 1 - x});
  for (int x : half.left_ends()) {
    arches.push_back({x, P + 1 - x});
    dots.insert({x, P + 1 - x});
  }
  return ChordDiagram(P, arches, {}, {}, dots);
}

int order_key(int i, int n) { return 2 * i <= n ? 2 * (i - 1) : 2 * (n - i) + 1; }

bool odd_class(int i, int n) { return 2 * i <= n; }

std::set<int> e_sym(const NcPartition& p) {
  const int n = p.n();
  std::set<int> out;
  for (int i = 1; i <= n; ++i) {
    Arch a = label_arch(p, i);
    if (a.first + a.second == 2 * n + 1) out.insert(i);
  }
  return out;
}

std::vector<int> s_sym(const NcPartition& p) {
  const int n = p.n();
  auto e = e_sym(p);
  std::vector<int> s(e.begin(), e.end());
  std::sort(s.begin(), s.end(), [n](int a, int b) { return order_key(a, n) < order_key(b, n); });
  return s;
}

PrimedPartition::PrimedPartition(NcPartition base, std::set<int> primed)
    : base_(std::move(base)), primed_(std::move(primed)) {
  if (!is_symmetric(base_, 0)) throw DomainError("primed partitions need a symmetric base");
  const auto s = s_sym(base_);
  if (primed_.size() > s.size()) throw DomainError("too many primed labels");
  for (size_t k = 0; k < primed_.size(); ++k)
    if (!primed_.count(s[k])) throw DomainError("primes must follow the linear order from the top");
}

PrimedPartition PrimedPartition::parse(std::string_view text, int n) {
  std::string stripped;
  std::set<int> primed;
  const bool commas = text.find(',') != std::string_view::npos;
  std::string num;
  auto flush = [&](bool prime) {
    if (num.empty()) throw DomainError("misplaced prime in partition text");
    if (prime) primed.insert(std::stoi(num));
  };
  for (size_t k = 0; k < text.size(); ++k) {
    char ch = text[k];
    if (ch == '\'') {
      flush(true);
      continue;
    }
    stripped += ch;
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      if (commas) {
        num += ch;
      } else {
        num = std::string(1, ch);
      }
    } else {
      if (ch != ' ') num.clear();
    }
  }
  return PrimedPartition(NcPartition::parse(stripped, n), primed);
}

std::string PrimedPartition::to_string() const {
  std::string s;
  const bool compact = n() <= 9;
  const auto& blocks = base_.blocks();
  for (size_t i = 0; i < blocks.size(); ++i) {
    if (i) s += '/';
    for (size_t j = 0; j < blocks[i].size(); ++j) {
      if (!compact && j) s += ',';
      s += std::to_string(blocks[i][j]);
      if (is_primed(blocks[i][j])) s += '\'';
    }
  }
  return s;
}

std::vector<PrimedPartition> enumerate_primed(int n) {
  std::vector<PrimedPartition> out;
  for (const auto& c : enumerate_primed_chains(n, 1)) out.push_back(c[1]);
  return out;
}

ChordDiagram primed_to_chord(const PrimedPartition& p) { return primed_chain_to_chord(PrimedChain({p})); }

PrimedPartition chord_to_primed(const ChordDiagram& c) { return chord_to_primed_chain(c, 1)[1]; }

namespace {

struct Slot {
  int left_end;
  int layer;
  int label;
  bool primed;
};

std::vector<Slot> symmetric_slots(const std::vector<PrimedPartition>& parts) {
  const int r = static_cast<int>(parts.size());
  std::vector<Slot> slots;
  for (int s = 1; s <= r; ++s) {
    const auto& p = parts[s - 1];
    for (int b : e_sym(p.base())) slots.push_back({layer_arch(p.base(), b, s, r).first, s, b, p.is_primed(b)});
  }
  std::sort(slots.begin(), slots.end(), [](const Slot& x, const Slot& y) { return x.left_end < y.left_end; });
  return slots;
}

}  // namespace

bool admissible_chain(const std::vector<PrimedPartition>& parts) {
  if (parts.empty()) return false;
  for (size_t i = 1; i < parts.size(); ++i) {
    if (parts[i].n() != parts[0].n()) return false;
    if (!leq(parts[i - 1].base(), parts[i].base())) return false;
  }
  bool seen_plain = false;
  for (const auto& sl : symmetric_slots(parts)) {
    if (sl.primed && seen_plain) return false;
    if (!sl.primed) seen_plain = true;
  }
  return true;
}

PrimedChain::PrimedChain(std::vector<PrimedPartition> parts) : parts_(std::move(parts)) {
  if (!admissible_chain(parts_)) throw DomainError("primed chain violates the chain conditions");
}

PrimedChain PrimedChain::parse(std::string_view text, int n) {
  std::string s;
  for (char ch : text)
    if (ch != ' ' && ch != '[' && ch != ']' && ch != '(' && ch != ')') s += ch;
  std::vector<PrimedPartition> parts;
  size_t start = 0;
  while (true) {
    size_t end = s.find(';', start);
    parts.push_back(PrimedPartition::parse(s.substr(start, end - start), n));
    if (end == std::string::npos) break;
    start = end + 1;
  }
  return PrimedChain(std::move(parts));
}

PrimedChain PrimedChain::plain(const RChain& c) {
  std::vector<PrimedPartition> parts;
  for (const auto& p : c.parts()) parts.emplace_back(p, std::set<int>{});
  return PrimedChain(std::move(parts));
}

RChain PrimedChain::unprimed() const {
  std::vector<NcPartition> ps;
  for (const auto& p : parts_) ps.push_back(p.base());
  return RChain(ps);
}

std::string PrimedChain::to_string() const {
  std::string s = "[";
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ';';
    s += parts_[i].to_string();
  }
  return s + "]";
}

std::vector<PrimedChain> enumerate_primed_chains(int n, int r) {
  std::vector<PrimedChain> out;
  for (const auto& c : enumerate_snc_chains(n, r)) {
    std::vector<PrimedPartition> parts;
    for (const auto& p : c.parts()) parts.emplace_back(p, std::set<int>{});
    const auto slots = symmetric_slots(parts);
    std::vector<std::set<int>> primes(r);
    for (size_t k = 0; k <= slots.size(); ++k) {
      std::vector<PrimedPartition> cur;
      for (int s = 0; s < r; ++s) cur.emplace_back(c.parts()[s], primes[s]);
      out.emplace_back(std::move(cur));
      if (k < slots.size()) primes[slots[k].layer - 1].insert(slots[k].label);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

ChordDiagram primed_chain_to_chord(const PrimedChain& c) {
  const int r = c.r();
  const auto plain = psi_r(c.unprimed());
  std::set<Arch> dots;
  for (int s = 1; s <= r; ++s)
    for (int b : c[s].primed()) dots.insert(layer_arch(c[s].base(), b, s, r));
  return ChordDiagram(plain.num_points(), plain.arches(), {}, {}, dots);
}

PrimedChain chord_to_primed_chain(const ChordDiagram& d, int r) {
  const RChain plain = psi_r_inv(ChordDiagram(d.num_points(), d.arches()), r);
  std::vector<PrimedPartition> parts;
  for (int s = 1; s <= r; ++s) {
    std::set<int> primed;
    for (int b : e_sym(plain[s]))
      if (d.dots().count(layer_arch(plain[s], b, s, r))) primed.insert(b);
    parts.emplace_back(plain[s], primed);
  }
  PrimedChain out(std::move(parts));
  if (primed_chain_to_chord(out) != d) throw DomainError("dots are not on symmetric arches");
  return out;
}

PrimedSum generator_G(int i, const PrimedPartition& p) {
  const int n = p.n();
  if (i < 0 || i > n) throw DomainError("generator index out of range");
  const Marked m = mark(p);
  Term t;
  if (i == 0) {
    t = small_g_0(m);
  } else if (i == n) {
    t = small_g_n(m);
  } else {
    t = small_g(rotate(m, -(i - 1)), i);
    t.first = rotate(t.first, i - 1);
  }
  return PrimedSum::single(unmark(t.first), t.second);
}

NcSum generator_G(int i, const NcPartition& p) {
  if (i < 1 || i > p.n()) throw DomainError("generator index out of range");
  NcSum out;
  const auto y = generator_G(i, PrimedPartition(p, {}));
  for (const auto& [q, c] : y.terms()) {
    if (!q.primed().empty()) throw std::logic_error("one-boundary action produced a prime");
    out.add(q.base(), c);
  }
  return out;
}

NcSum generator_G(int i, const NcSum& x) {
  return extend<NcSum, NcPartition>(x, [i](const NcPartition& p) { return generator_G(i, p); });
}

NcSum generator_G_eps1(int i, const NcPartition& p) {
  if (!is_symmetric(p, 1)) throw DomainError("partition is not symmetric for epsilon = 1");
  NcSum out;
  const auto y = generator_G(i, kreweras(p));
  for (const auto& [q, c] : y.terms()) out.add(kreweras_inv(q), c);
  return out;
}

PrimedChainSum generator_Gs(int i, int s, const PrimedChain& c) {
  const int r = c.r();
  if (i < 0 || i > c.n()) throw DomainError("generator index out of range");
  std::vector<std::pair<std::vector<PrimedPartition>, LaurentPoly>> acc{{c.parts(), one()}};
  for (int t : acted_coordinates(i, s, r)) {
    decltype(acc) next;
    for (const auto& [parts, coef] : acc) {
      const auto y = generator_G(i, parts[t]);
      for (const auto& [q, w] : y.terms()) {
        auto np = parts;
        np[t] = q;
        next.push_back({np, coef * w});
      }
    }
    acc = std::move(next);
  }
  PrimedChainSum out;
  for (auto& [parts, coef] : acc) out.add(PrimedChain(std::move(parts)), coef);
  return out;
}

PrimedChainSum generator_Gs(int i, int s, const PrimedChainSum& x) {
  return extend<PrimedChainSum, PrimedChain>(x, [i, s](const PrimedChain& c) { return generator_Gs(i, s, c); });
}

ChainSum generator_Gs(int i, int s, const RChain& c) {
  if (i < 1) throw DomainError("generator index out of range");
  ChainSum out;
  const auto y = generator_Gs(i, s, PrimedChain::plain(c));
  for (const auto& [q, w] : y.terms()) {
    for (const auto& p : q.parts())
      if (!p.primed().empty()) throw std::logic_error("one-boundary action produced a prime");
    out.add(q.unprimed(), w);
  }
  return out;
}

Diagram tl_state(const NcPartition& p) { return state_from_chord(psi(p), 2 * p.n(), 1, Boundary::none); }

Diagram fc_state(const RChain& c) { return state_from_chord(psi_r(c), 2 * c.n(), c.r(), Boundary::none); }

Diagram one_boundary_state(const RChain& c) {
  return state_from_chord(cut_symmetric(psi_r(c)), c.n(), c.r(), Boundary::right);
}

Diagram two_boundary_state(const PrimedChain& c) {
  return state_from_chord(cut_symmetric(primed_chain_to_chord(c)), c.n(), c.r(), Boundary::both);
}

namespace {

template <class Key, class Sum, class StateFn, class ActFn>
void intertwine(IsoReport& rep, const std::vector<Key>& basis, int lo, int hi, int r, int m, Boundary b, StateFn state,
                ActFn act) {
  for (int i = lo; i <= hi; ++i)
    for (int s = 1; s <= r; ++s) {
      const LaurentElement g = element(generator_E(i, s, m, r, b));
      for (const auto& x : basis) {
        ++rep.checked;
        std::string tag = "E" + std::to_string(i) + "^" + std::to_string(s) + " on " + x.to_string();
        try {
          const LaurentElement lhs = act_on_state(g, element(state(x)));
          LaurentElement rhs;
          const Sum y = act(i, s, x);
          for (const auto& [k, c] : y.terms()) rhs.add(state(k), c);
          if (!(lhs == rhs)) rep.failures.push_back(tag);
        } catch (const std::exception& e) {
          rep.failures.push_back(tag + ": " + e.what());
        }
      }
    }
}

}  // namespace

IsoReport verify_iso_tl(int n) {
  IsoReport rep;
  intertwine<NcPartition, NcSum>(rep, enumerate_ncp(n), 1, 2 * n - 1, 1, 2 * n, Boundary::none, tl_state,
                                 [](int i, int, const NcPartition& p) { return generator_F(i, p); });
  return rep;
}

IsoReport verify_iso_fc(int n, int r) {
  IsoReport rep;
  intertwine<RChain, ChainSum>(rep, enumerate_chains(n, r), 1, 2 * n - 1, r, 2 * n, Boundary::none, fc_state,
                               [](int i, int s, const RChain& c) { return generator_Fs(i, s, c); });
  return rep;
}

IsoReport verify_iso_1b(int n, int r) {
  IsoReport rep;
  intertwine<RChain, ChainSum>(rep, enumerate_snc_chains(n, r), 1, n, r, n, Boundary::right, one_boundary_state,
                               [](int i, int s, const RChain& c) { return generator_Gs(i, s, c); });
  return rep;
}

IsoReport verify_iso_2b(int n, int r) {
  IsoReport rep;
  intertwine<PrimedChain, PrimedChainSum>(
      rep, enumerate_primed_chains(n, r), 0, n, r, n, Boundary::both, two_boundary_state,
      [](int i, int s, const PrimedChain& c) { return generator_Gs(i, s, c); });
  return rep;
}

}  // namespace fc
