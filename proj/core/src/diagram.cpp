#include "fc/diagram.hpp"

#include <algorithm>
#include <climits>
#include <functional>
#include <queue>
#include <set>
#include <sstream>
#include <stdexcept>

namespace fc {

std::string to_string(Boundary b) {
  switch (b) {
    case Boundary::none: return "none";
    case Boundary::right: return "right";
    case Boundary::both: return "both";
  }
  return "none";
}

Boundary parse_boundary(std::string_view s) {
  if (s == "none") return Boundary::none;
  if (s == "right") return Boundary::right;
  if (s == "both") return Boundary::both;
  throw DomainError("unknown boundary mode");
}

bool expected_stub_odd(int m, int r, int node, bool top, bool left) {
  int b = (node % (m * r)) / r + 1;
  if (left) return top ? b % 2 == 0 : b % 2 == 1;
  bool same = (b - m) % 2 == 0;
  return top ? !same : same;
}

namespace {

struct Chord {
  double a, b;
};

bool chords_cross(Chord x, Chord y) {
  if (x.a > x.b) std::swap(x.a, x.b);
  if (y.a > y.b) std::swap(y.a, y.b);
  return (x.a < y.a && y.a < x.b && x.b < y.b) || (y.a < x.a && x.a < y.b && y.b < x.b);
}

}  // namespace

Diagram::Diagram(int m, int r, Boundary b, bool has_top, std::vector<int> links, int lr)
    : m_(m), r_(r), b_(b), has_top_(has_top), links_(std::move(links)), lr_(lr) {
  if (m < 1 || r < 1) throw DomainError("diagram needs m, r >= 1");
  const int N = m * r;
  if (static_cast<int>(links_.size()) != (has_top ? 2 * N : N)) throw DomainError("diagram has the wrong number of nodes");
  if (lr_ < 0 || (lr_ > 0 && b_ != Boundary::both)) throw DomainError("left-right strands need both boundaries");
  for (int v = 0; v < num_nodes(); ++v) {
    int l = links_[v];
    if (is_stub(l)) {
      if (l < kLeftOdd) throw DomainError("unknown stub code");
      if (b_ == Boundary::none) throw DomainError("stub in a diagram without boundary");
      if (stub_left(l) && b_ != Boundary::both) throw DomainError("left stub without a left boundary");
    } else {
      if (l >= num_nodes() || l == v || links_[l] != v) throw DomainError("diagram links are not a matching");
    }
  }
  if (!planar()) throw DomainError("diagram is not planar");
}

Diagram Diagram::identity(int m, int r, Boundary b) {
  const int N = m * r;
  std::vector<int> links(2 * N);
  for (int x = 0; x < N; ++x) {
    links[x] = N + x;
    links[N + x] = x;
  }
  return Diagram(m, r, b, true, links);
}

int Diagram::fold_position(int node) const {
  const int N = slots();
  return node < N ? node + 1 : 2 * N - (node - N);
}

std::vector<int> Diagram::wall(bool left) const {
  const int N = slots();
  std::vector<int> w;
  auto here = [&](int v) { return is_stub(links_[v]) && stub_left(links_[v]) == left; };
  if (left) {
    for (int x = 0; x < N; ++x)
      if (here(x)) w.push_back(x);
  } else {
    for (int x = N - 1; x >= 0; --x)
      if (here(x)) w.push_back(x);
  }
  for (int k = 0; k < lr_; ++k) w.push_back(-1);
  if (has_top_) {
    if (left) {
      for (int x = N - 1; x >= 0; --x)
        if (here(N + x)) w.push_back(N + x);
    } else {
      for (int x = 0; x < N; ++x)
        if (here(N + x)) w.push_back(N + x);
    }
  }
  return w;
}

bool Diagram::planar() const {
  const double rhub = slots() + 0.5, lhub = 0.0;
  std::vector<Chord> chords;
  for (int v = 0; v < num_nodes(); ++v) {
    int l = links_[v];
    double p = fold_position(v);
    if (is_stub(l)) {
      chords.push_back({p, stub_left(l) ? lhub : rhub});
    } else if (l > v) {
      chords.push_back({p, static_cast<double>(fold_position(l))});
    }
  }
  if (lr_ > 0) chords.push_back({lhub, rhub});
  for (size_t i = 0; i < chords.size(); ++i)
    for (size_t j = i + 1; j < chords.size(); ++j)
      if (chords_cross(chords[i], chords[j])) return false;
  return true;
}

bool Diagram::satisfies_fold_condition() const {
  for (int v = 0; v < num_nodes(); ++v) {
    int l = links_[v];
    if (!is_stub(l) && l > v && (fold_position(v) + fold_position(l) - 1) % (2 * r_) != 0) return false;
  }
  return true;
}

bool Diagram::parities_follow_bundles() const {
  for (int v = 0; v < num_nodes(); ++v) {
    int l = links_[v];
    if (is_stub(l) && stub_odd(l) != expected_stub_odd(m_, r_, v, is_top(v), stub_left(l))) return false;
  }
  return true;
}

int Diagram::num_stubs() const {
  return static_cast<int>(std::count_if(links_.begin(), links_.end(), [](int l) { return is_stub(l); }));
}

int Diagram::num_through() const {
  int t = 0;
  for (int x = 0; x < slots() && has_top_; ++x)
    if (!is_stub(links_[x]) && links_[x] >= slots()) ++t;
  return t;
}

std::string Diagram::to_string() const {
  std::ostringstream out;
  const int N = slots();
  auto name = [&](int v) {
    std::string s = v < N ? "b" + std::to_string(v + 1) : "t" + std::to_string(v - N + 1);
    return s;
  };
  out << "{";
  bool first = true;
  for (int v = 0; v < num_nodes(); ++v) {
    int l = links_[v];
    if (!is_stub(l) && l < v) continue;
    if (!first) out << " ";
    first = false;
    out << name(v) << "-";
    if (is_stub(l)) {
      out << (stub_left(l) ? "L" : "R") << (stub_odd(l) ? "o" : "e");
    } else {
      out << name(l);
    }
  }
  if (lr_) out << " lr" << lr_;
  out << "}";
  return out.str();
}

Factors& Factors::operator+=(const Factors& o) {
  loops += o.loops;
  tau_e += o.tau_e;
  tau_o += o.tau_o;
  tau0_e += o.tau0_e;
  tau0_o += o.tau0_o;
  theta += o.theta;
  return *this;
}

std::pair<Diagram, Factors> multiply(const Diagram& x, const Diagram& y, bool star) {
  if (!x.has_top() || x.m() != y.m() || x.r() != y.r() || x.boundary() != y.boundary())
    throw DomainError("incompatible diagrams");
  const int N = x.slots();
  const bool top = y.has_top();
  std::vector<int> res(top ? 2 * N : N, INT_MIN);
  std::vector<char> visited(N, 0);
  Factors f;
  int new_lr = 0;

  // wall positions, x below y
  std::vector<int> posx(2 * N, -1), posy(2 * N, -1);
  int offl = 0, offr = 0;
  {
    auto wl = x.wall(true), wr = x.wall(false);
    for (size_t k = 0; k < wl.size(); ++k)
      if (wl[k] >= 0) posx[wl[k]] = static_cast<int>(k);
    for (size_t k = 0; k < wr.size(); ++k)
      if (wr[k] >= 0) posx[wr[k]] = static_cast<int>(k);
    offl = static_cast<int>(wl.size());
    offr = static_cast<int>(wr.size());
    auto yl = y.wall(true), yr = y.wall(false);
    for (size_t k = 0; k < yl.size(); ++k)
      if (yl[k] >= 0) posy[yl[k]] = offl + static_cast<int>(k);
    for (size_t k = 0; k < yr.size(); ++k)
      if (yr[k] >= 0) posy[yr[k]] = offr + static_cast<int>(k);
  }

  struct End {
    int kind;  // 0 bottom slot, 1 top slot, 2 wall
    int index;
    int code;
    int pos;
  };
  // Walk from node v of x (in_x) or y along its link until leaving the glued edge.
  auto follow = [&](bool in_x, int v) -> End {
    for (;;) {
      const Diagram& D = in_x ? x : y;
      int l = D.link(v);
      if (is_stub(l)) return End{2, v, l, in_x ? posx[v] : posy[v]};
      if (in_x) {
        if (l < N) return End{0, l, 0, 0};
        int k = l - N;
        visited[k] = 1;
        in_x = false;
        v = k;
      } else {
        if (l >= N) return End{1, l - N, 0, 0};
        visited[l] = 1;
        in_x = true;
        v = N + l;
      }
    }
  };
  auto settle = [&](int node, const End& e) {
    if (e.kind == 2) {
      res[node] = e.code;
    } else {
      int other = e.kind == 0 ? e.index : N + e.index;
      res[node] = other;
      res[other] = node;
    }
  };
  for (int b = 0; b < N; ++b)
    if (res[b] == INT_MIN) settle(b, follow(true, b));
  if (top)
    for (int t = 0; t < N; ++t)
      if (res[N + t] == INT_MIN) settle(N + t, follow(false, N + t));

  auto close_wall = [&](int code_a, int pos_a, const End& e) {
    if (e.kind != 2) throw std::logic_error("wall strand ended on an edge");
    bool la = stub_left(code_a), lb = stub_left(e.code);
    if (la != lb) {
      if (star) {
        ++f.theta;
      } else {
        ++new_lr;
      }
      return;
    }
    bool lower_odd = pos_a < e.pos ? stub_odd(code_a) : stub_odd(e.code);
    bool upper_odd = pos_a < e.pos ? stub_odd(e.code) : stub_odd(code_a);
    if (lower_odd == upper_odd) throw std::logic_error("boundary strand joins two end points of the same parity");
    if (!lower_odd) {
      ++(la ? f.tau0_e : f.tau_e);
    } else {
      ++(la ? f.tau0_o : f.tau_o);
    }
  };
  for (int k = 0; k < N; ++k) {
    if (visited[k]) continue;
    if (is_stub(x.link(N + k))) {
      visited[k] = 1;
      close_wall(x.link(N + k), posx[N + k], follow(false, k));
    } else if (is_stub(y.link(k))) {
      visited[k] = 1;
      close_wall(y.link(k), posy[k], follow(true, N + k));
    }
  }
  for (int k = 0; k < N; ++k) {
    if (visited[k]) continue;
    int cur = k;
    do {
      visited[cur] = 1;
      int w = y.link(cur);
      visited[w] = 1;
      cur = x.link(N + w) - N;
    } while (cur != k);
    ++f.loops;
  }
  return {Diagram(x.m(), x.r(), x.boundary(), top, res, x.lr_strands() + y.lr_strands() + new_lr), f};
}

Diagram generator_E(int i, int s, int m, int r, Boundary b) {
  if (s < 1 || s > r) throw DomainError("generator strand count out of range");
  const int N = m * r;
  Diagram id = Diagram::identity(m, r, b);
  std::vector<int> links = id.links();
  if (i >= 1 && i <= m - 1) {
    for (int k = 0; k < s; ++k) {
      int a = i * r - 1 - k, c = i * r + k;
      links[a] = c;
      links[c] = a;
      links[N + a] = N + c;
      links[N + c] = N + a;
    }
  } else if (i == m && b != Boundary::none) {
    for (int j = 0; j < s; ++j) {
      int bot = N - 1 - j, topn = N + N - s + j;
      links[bot] = stub_code(false, expected_stub_odd(m, r, bot, false, false));
      links[topn] = stub_code(false, expected_stub_odd(m, r, topn, true, false));
    }
  } else if (i == 0 && b == Boundary::both) {
    for (int j = 0; j < s; ++j) {
      links[j] = stub_code(true, expected_stub_odd(m, r, j, false, true));
      links[N + j] = stub_code(true, expected_stub_odd(m, r, N + j, true, true));
    }
  } else {
    throw DomainError("generator index does not match the boundary mode");
  }
  return Diagram(m, r, b, true, links);
}

Diagram state_from_chord(const ChordDiagram& c, int m, int r, Boundary b) {
  const int N = m * r;
  if (c.num_points() != N) throw DomainError("chord diagram width does not match the algebra");
  if (!c.dots().empty()) throw DomainError("dotted diagrams are not plain states");
  std::vector<int> links(N, INT_MIN);
  for (const auto& [a, bb] : c.arches()) {
    links[a - 1] = bb - 1;
    links[bb - 1] = a - 1;
  }
  for (int p : c.right_ends()) links[p - 1] = stub_code(false, expected_stub_odd(m, r, p - 1, false, false));
  for (int p : c.left_ends()) links[p - 1] = stub_code(true, expected_stub_odd(m, r, p - 1, false, true));
  return Diagram(m, r, b, false, links);
}

ChordDiagram chord_from_state(const Diagram& d) {
  if (d.has_top()) throw DomainError("not a state");
  std::vector<Arch> arches;
  std::set<int> re, le;
  for (int v = 0; v < d.num_nodes(); ++v) {
    int l = d.link(v);
    if (is_stub(l)) {
      (stub_left(l) ? le : re).insert(v + 1);
    } else if (l > v) {
      arches.push_back({v + 1, l + 1});
    }
  }
  return ChordDiagram(d.num_nodes(), arches, re, le);
}

Weights<LaurentPoly> laurent_weights() {
  return {LaurentPoly::constant(1), tau(), tau_even(), tau_odd(), tau_left_even(), tau_left_odd(), theta()};
}

LaurentElement element(const Diagram& d) { return LaurentElement::basis(d, LaurentPoly::constant(1)); }

std::vector<std::pair<int, int>> parse_word(std::string_view word) {
  std::vector<std::pair<int, int>> out;
  size_t pos = 0;
  auto num = [&]() {
    size_t start = pos;
    while (pos < word.size() && word[pos] >= '0' && word[pos] <= '9') ++pos;
    if (start == pos) throw DomainError("malformed generator word");
    return std::stoi(std::string(word.substr(start, pos - start)));
  };
  while (pos < word.size()) {
    if (word[pos] == ',' || word[pos] == ' ' || word[pos] == '*') {
      ++pos;
      continue;
    }
    if (word[pos] != 'E' && word[pos] != 'e') throw DomainError("malformed generator word");
    ++pos;
    int i = num();
    int s = 0;
    if (pos < word.size() && word[pos] == '^') {
      ++pos;
      if (pos < word.size() && word[pos] == '(') ++pos;
      s = num();
      if (pos < word.size() && word[pos] == ')') ++pos;
    }
    out.push_back({i, s});
  }
  return out;
}

LaurentElement word_product(std::string_view word, int m, int r, Boundary b, bool star) {
  LaurentElement acc = element(Diagram::identity(m, r, b));
  auto w = laurent_weights();
  for (auto [i, s] : parse_word(word)) acc = acc.times(element(generator_E(i, s == 0 ? r : s, m, r, b)), w, star);
  return acc;
}

LaurentElement act_on_state(const LaurentElement& x, const LaurentElement& state, bool star) {
  return x.times(state, laurent_weights(), star);
}

namespace {

std::vector<Diagram> enumerate_diagrams(int m, int r, Boundary b, bool has_top) {
  const int N = m * r, T = has_top ? 2 * N : N;
  const double rhub = N + 0.5, lhub = 0.0;
  std::vector<int> node_at(T + 1);
  Diagram probe = has_top ? Diagram::identity(m, r, Boundary::none) : Diagram();
  for (int v = 0; v < T; ++v) node_at[has_top ? probe.fold_position(v) : v + 1] = v;
  std::vector<int> links(T, INT_MIN);
  std::vector<Chord> chords;
  std::vector<Diagram> out;
  auto free_of_crossings = [&](Chord c) {
    for (const auto& d : chords)
      if (chords_cross(c, d)) return false;
    return true;
  };
  std::function<void(int)> go = [&](int p) {
    while (p <= T && links[node_at[p]] != INT_MIN) ++p;
    if (p > T) {
      out.emplace_back(m, r, b, has_top, links);
      return;
    }
    int v = node_at[p];
    auto try_stub = [&](bool left) {
      Chord c{static_cast<double>(p), left ? lhub : rhub};
      if (!free_of_crossings(c)) return;
      links[v] = stub_code(left, expected_stub_odd(m, r, v, v >= N, left));
      chords.push_back(c);
      go(p + 1);
      chords.pop_back();
      links[v] = INT_MIN;
    };
    if (b != Boundary::none) try_stub(false);
    if (b == Boundary::both) try_stub(true);
    for (int q = p + 1; q <= T; q += 1) {
      int w = node_at[q];
      if (links[w] != INT_MIN || (p + q - 1) % (2 * r) != 0) continue;
      Chord c{static_cast<double>(p), static_cast<double>(q)};
      if (!free_of_crossings(c)) continue;
      links[v] = w;
      links[w] = v;
      chords.push_back(c);
      go(p + 1);
      chords.pop_back();
      links[v] = links[w] = INT_MIN;
    }
  };
  go(1);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<Diagram> enumerate_basis(int m, int r, Boundary b, bool star) {
  if (b == Boundary::both && !star) throw DomainError("the two-boundary algebra is infinite without the theta reduction");
  return enumerate_diagrams(m, r, b, true);
}

std::vector<Diagram> enumerate_states(int m, int r, Boundary b) { return enumerate_diagrams(m, r, b, false); }

BigInt dimension(int m, int r, Boundary b, bool star) { return BigInt(enumerate_basis(m, r, b, star).size()); }

std::vector<Diagram> closure_basis(int m, int r, Boundary b) {
  std::vector<Diagram> gens;
  int lo = b == Boundary::both ? 0 : 1, hi = b == Boundary::none ? m - 1 : m;
  for (int i = lo; i <= hi; ++i)
    for (int s = 1; s <= r; ++s) gens.push_back(generator_E(i, s, m, r, b));
  std::set<Diagram> seen{Diagram::identity(m, r, b)};
  std::queue<Diagram> todo;
  todo.push(*seen.begin());
  while (!todo.empty()) {
    Diagram d = todo.front();
    todo.pop();
    for (const auto& g : gens) {
      Diagram e = multiply(d, g, true).first;
      if (seen.insert(e).second) todo.push(e);
    }
  }
  return {seen.begin(), seen.end()};
}

VKCounts count_VK(int n, int r) {
  VKCounts c;
  c.V_direct = BigInt(enumerate_states(n, r, Boundary::both).size());
  const int P = 2 * r * n;
  for (const auto& d : enumerate_matchings(P, r)) {
    bool sym = true;
    int crossing = 0;
    for (const auto& [a, b] : d.arches()) {
      Arch mir{P + 1 - b, P + 1 - a};
      if (!std::binary_search(d.arches().begin(), d.arches().end(), mir)) sym = false;
      if (a <= P / 2 && b > P / 2) ++crossing;
    }
    if (sym) c.V_weighted += 1 + crossing;
  }
  const int W = 2 * r * n;
  for (const auto& d : enumerate_matchings(2 * W, r)) {
    auto slot = [&](int p) { return p <= W ? std::pair{false, p - 1} : std::pair{true, 2 * W - p}; };
    std::set<std::pair<std::pair<bool, int>, std::pair<bool, int>>> strands;
    for (const auto& [a, b] : d.arches()) {
      auto u = slot(a), v = slot(b);
      if (v < u) std::swap(u, v);
      strands.insert({u, v});
    }
    bool sym = true;
    int vertical = 0, up = 0, down = 0;
    for (const auto& [u, v] : strands) {
      std::pair<bool, int> mu{u.first, W - 1 - u.second}, mv{v.first, W - 1 - v.second};
      if (mv < mu) std::swap(mu, mv);
      if (!strands.count({mu, mv})) sym = false;
      if (u.first != v.first) {
        ++vertical;
      } else {
        bool crosses = std::min(u.second, v.second) < W / 2 && std::max(u.second, v.second) >= W / 2;
        if (crosses) ++(u.first ? up : down);
      }
    }
    if (!sym) continue;
    int half = vertical / 2;
    c.K += half >= 1 ? BigInt(half) : BigInt((1 + up) * (1 + down));
  }
  return c;
}

BigInt count_gamma(int m, int r) {
  BigInt count = 0;
  const int N = m * r;
  for (const auto& d : enumerate_basis(m, r, Boundary::right)) {
    auto mirror = [&](int v) { return v < N ? v + N : v - N; };
    bool ok = d.num_stubs() <= 2 * r;
    for (int v = 0; v < d.num_nodes() && ok; ++v) {
      int l = d.link(v), lm = d.link(mirror(v));
      if (is_stub(l) != is_stub(lm)) ok = false;
      if (!is_stub(l) && lm != mirror(l)) ok = false;
      if (is_stub(l) && (d.bundle_of(v) - m) % 2 != 0) ok = false;
    }
    if (ok) ++count;
  }
  return count;
}

namespace {

LaurentPoly tau_pow(int k) { return tau().pow(static_cast<unsigned>(k)); }

}  // namespace

RelationReport verify_relations(int m, int r) {
  RelationReport rep;
  auto w = laurent_weights();
  const Boundary B = Boundary::none;
  auto E = [&](int i, int s) {
    if (s == 0) return element(Diagram::identity(m, r, B));
    return element(generator_E(i, s, m, r, B));
  };
  auto prod = [&](std::initializer_list<LaurentElement> xs) {
    LaurentElement acc = element(Diagram::identity(m, r, B));
    for (const auto& x : xs) acc = acc.times(x, w);
    return acc;
  };
  auto check = [&](bool ok, const std::string& what) {
    ++rep.checked;
    if (!ok) rep.failures.push_back(what);
  };
  auto label = [](int i, int s) { return "E" + std::to_string(i) + "^" + std::to_string(s); };
  for (int i = 1; i <= m - 1; ++i)
    for (int s = 1; s <= r; ++s)
      for (int t = 1; t <= r; ++t)
        check(prod({E(i, s), E(i, t)}) == E(i, std::max(s, t)).scaled(tau_pow(std::min(s, t))),
              "square " + label(i, s) + label(i, t));
  for (int i = 1; i <= m - 1; ++i)
    for (int j = 1; j <= m - 1; ++j)
      for (int s = 1; s <= r; ++s)
        for (int t = 1; t <= r; ++t) {
          int d = std::abs(i - j);
          if (d > 1 || (d == 1 && s + t <= r))
            check(prod({E(i, s), E(j, t)}) == prod({E(j, t), E(i, s)}), "commute " + label(i, s) + label(j, t));
        }
  // braid-like families: (a, b, a) with b = a + 1 or b = a - 1
  for (int fam = 0; fam < 2; ++fam)
    for (int i = 1; i + 1 <= m - 1; ++i) {
      int a = fam == 0 ? i : i + 1, b = fam == 0 ? i + 1 : i;
      for (int s = 1; s <= r; ++s)
        for (int t = 1; t <= r; ++t)
          for (int u = 1; u <= r; ++u) {
            LaurentElement lhs = prod({E(a, s), E(b, t), E(a, u)});
            LaurentPoly c = tau_pow(r - t);
            std::string name = label(a, s) + label(b, t) + label(a, u);
            if (s == r && u == r) {
              check(lhs == E(a, r).scaled(c), name + " case 1");
            } else {
              if (s <= u && u < r && s + t >= r)
                check(lhs == prod({E(b, r - s), E(a, u)}).scaled(c), name + " case 2");
              if (r > s && s >= u && u + t >= r)
                check(lhs == prod({E(a, s), E(b, r - u)}).scaled(c), name + " case 3");
            }
          }
    }
  return rep;
}

}  // namespace fc
