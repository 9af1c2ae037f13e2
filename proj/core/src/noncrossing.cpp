#include "fc/noncrossing.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace fc {

namespace {

int mod1(int x, int n) { return ((x - 1) % n + n) % n + 1; }

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n + 1) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
  void unite(int a, int b) { parent[find(a)] = find(b); }
  std::vector<std::vector<int>> blocks(int n) {
    std::map<int, std::vector<int>> g;
    for (int i = 1; i <= n; ++i) g[find(i)].push_back(i);
    std::vector<std::vector<int>> out;
    for (auto& [k, v] : g) out.push_back(std::move(v));
    return out;
  }
};

}  // namespace

bool is_noncrossing(int n, const std::vector<std::vector<int>>& blocks) {
  std::vector<int> lab(n + 1, -1);
  for (size_t b = 0; b < blocks.size(); ++b)
    for (int x : blocks[b]) lab[x] = static_cast<int>(b);
  // a<b<c<d with a,c in one block and b,d in another: stack scan
  std::vector<int> last(blocks.size(), 0), count(blocks.size(), 0), seen(blocks.size(), 0);
  for (size_t b = 0; b < blocks.size(); ++b) count[b] = static_cast<int>(blocks[b].size());
  std::vector<int> stack;
  for (int x = 1; x <= n; ++x) {
    int b = lab[x];
    if (seen[b] == 0) {
      stack.push_back(b);
    } else if (stack.empty() || stack.back() != b) {
      return false;
    }
    if (++seen[b] == count[b]) {
      if (stack.empty() || stack.back() != b) return false;
      stack.pop_back();
    }
  }
  return true;
}

NcPartition::NcPartition(int n, std::vector<std::vector<int>> blocks) : n_(n), blocks_(std::move(blocks)) {
  if (n < 0) throw DomainError("negative partition size");
  where_.assign(n + 1, -1);
  for (auto& b : blocks_) {
    if (b.empty()) throw DomainError("empty block");
    std::sort(b.begin(), b.end());
  }
  std::sort(blocks_.begin(), blocks_.end());
  for (size_t i = 0; i < blocks_.size(); ++i)
    for (int x : blocks_[i]) {
      if (x < 1 || x > n) throw DomainError("block element out of range");
      if (where_[x] != -1) throw DomainError("element repeated across blocks");
      where_[x] = static_cast<int>(i);
    }
  for (int x = 1; x <= n; ++x)
    if (where_[x] == -1) throw DomainError("blocks do not cover [1,n]");
  if (!is_noncrossing(n, blocks_)) throw DomainError("partition is crossing");
}

NcPartition NcPartition::parse(std::string_view text, int n) {
  std::vector<std::vector<int>> blocks(1);
  bool commas = text.find(',') != std::string_view::npos;
  std::string num;
  auto flush = [&] {
    if (!num.empty()) {
      blocks.back().push_back(std::stoi(num));
      num.clear();
    }
  };
  for (char ch : text) {
    if (ch == ' ') continue;
    if (ch == '/') {
      flush();
      blocks.emplace_back();
    } else if (ch == ',') {
      flush();
    } else if (ch >= '0' && ch <= '9') {
      if (commas) {
        num += ch;
      } else {
        blocks.back().push_back(ch - '0');
      }
    } else {
      throw DomainError("unexpected character in partition text");
    }
  }
  flush();
  int mx = 0;
  for (const auto& b : blocks) {
    if (b.empty()) throw DomainError("empty block in partition text");
    for (int x : b) mx = std::max(mx, x);
  }
  if (n == 0) n = mx;
  return NcPartition(n, std::move(blocks));
}

NcPartition NcPartition::singletons(int n) {
  std::vector<std::vector<int>> b;
  for (int i = 1; i <= n; ++i) b.push_back({i});
  return NcPartition(n, b);
}

NcPartition NcPartition::one_block(int n) {
  std::vector<int> b(n);
  std::iota(b.begin(), b.end(), 1);
  return NcPartition(n, {b});
}

int NcPartition::block_of(int x) const { return where_[mod1(x, n_)]; }

NcPartition NcPartition::merged(int x, int y) const {
  int a = block_of(x), b = block_of(y);
  if (a == b) return *this;
  std::vector<std::vector<int>> nb;
  std::vector<int> u;
  for (int i = 0; i < num_blocks(); ++i) {
    if (i == a || i == b) {
      u.insert(u.end(), blocks_[i].begin(), blocks_[i].end());
    } else {
      nb.push_back(blocks_[i]);
    }
  }
  nb.push_back(u);
  return NcPartition(n_, nb);
}

NcPartition NcPartition::shifted(int t) const {
  std::vector<std::vector<int>> nb;
  for (const auto& b : blocks_) {
    std::vector<int> c;
    for (int x : b) c.push_back(mod1(x + t, n_));
    nb.push_back(c);
  }
  return NcPartition(n_, nb);
}

std::string NcPartition::to_string() const {
  std::string s;
  bool compact = n_ <= 9;
  for (size_t i = 0; i < blocks_.size(); ++i) {
    if (i) s += '/';
    for (size_t j = 0; j < blocks_[i].size(); ++j) {
      if (!compact && j) s += ',';
      s += std::to_string(blocks_[i][j]);
    }
  }
  return s;
}

std::vector<NcPartition> enumerate_ncp(int n) {
  std::vector<NcPartition> out;
  if (n < 1) return out;
  // each element either opens a block or joins one of the open blocks on the stack top
  std::vector<std::vector<int>> blocks;
  std::vector<int> open;  // indices into blocks, innermost last
  std::function<void(int)> go = [&](int x) {
    if (x > n) {
      out.emplace_back(n, blocks);
      return;
    }
    blocks.push_back({x});
    open.push_back(static_cast<int>(blocks.size()) - 1);
    go(x + 1);
    open.pop_back();
    blocks.pop_back();
    // joining an open block closes every block opened after it
    for (int k = static_cast<int>(open.size()) - 1; k >= 0; --k) {
      std::vector<int> saved(open.begin() + k + 1, open.end());
      int b = open[k];
      open.resize(k + 1);
      blocks[b].push_back(x);
      go(x + 1);
      blocks[b].pop_back();
      open.insert(open.end(), saved.begin(), saved.end());
    }
  };
  go(1);
  std::sort(out.begin(), out.end());
  return out;
}

bool leq(const NcPartition& a, const NcPartition& b) {
  if (a.n() != b.n()) throw DomainError("partition size mismatch");
  for (const auto& blk : a.blocks())
    for (int x : blk)
      if (!b.same_block(blk.front(), x)) return false;
  return true;
}

bool covers(const NcPartition& a, const NcPartition& b) {
  if (a.n() != b.n()) throw DomainError("partition size mismatch");
  return b.rank() == a.rank() + 1 && leq(a, b);
}

NcPartition kreweras(const NcPartition& p) {
  const int n = p.n();
  UnionFind uf(n);
  for (int j = 1; j <= n; ++j) {
    int prev = mod1(j - 1, n);
    int i = p.block_of(j), k = p.block_of(prev);
    int t = j;
    if (i != k) {
      const auto& B = p.blocks()[k];
      auto it = std::find(B.begin(), B.end(), prev);
      ++it;
      t = it == B.end() ? B.front() : *it;
    }
    uf.unite(j, t);
  }
  return NcPartition(n, uf.blocks(n));
}

NcPartition kreweras_inv(const NcPartition& p) { return kreweras(p).shifted(-1); }

NcPartition kreweras_pow(const NcPartition& p, int k) {
  NcPartition x = p;
  const int period = 2 * p.n();
  k = ((k % period) + period) % period;
  if (k > p.n()) {
    for (int i = 0; i < period - k; ++i) x = kreweras_inv(x);
    return x;
  }
  for (int i = 0; i < k; ++i) x = kreweras(x);
  return x;
}

std::vector<std::pair<int, int>> edge_pairs(const NcPartition& p) {
  std::vector<std::pair<int, int>> e;
  for (const auto& b : p.blocks()) {
    for (size_t i = 0; i + 1 < b.size(); ++i) e.push_back({b[i], b[i + 1]});
    e.push_back({b.back(), b.front()});
  }
  std::sort(e.begin(), e.end());
  return e;
}

ChordDiagram psi(const NcPartition& p) {
  const int n = p.n();
  std::vector<Arch> arches;
  for (const auto& [i, j] : edge_pairs(p)) arches.push_back({2 * i - 1, 2 * mod1(j - 1, n)});
  return ChordDiagram(2 * n, arches);
}

NcPartition psi_inv(const ChordDiagram& c) {
  if (c.num_points() % 2 || !c.undecorated()) throw DomainError("not an undecorated chord diagram");
  const int n = c.num_points() / 2;
  UnionFind uf(n);
  for (const auto& [a, b] : c.arches()) {
    if ((a + b) % 2 == 0) throw DomainError("arch joins two points of the same kind");
    int odd = a % 2 ? a : b, even = a % 2 ? b : a;
    uf.unite((odd + 1) / 2, mod1(even / 2 + 1, n));
  }
  NcPartition p(n, uf.blocks(n));
  if (psi(p) != c) throw DomainError("chord diagram is not in the image of psi");
  return p;
}

NcSum small_f(int k, const NcPartition& p) {
  const int n = p.n();
  if (p.same_block(k, k + 1)) return NcSum::single(p, tau());
  (void)n;
  return NcSum::single(p.merged(k, k + 1), LaurentPoly::constant(1));
}

NcSum generator_F(int i, const NcPartition& p) {
  const int n = p.n();
  if (i < 1 || i > 2 * n - 1) throw DomainError("generator index out of range");
  if (i % 2 == 1) return small_f((i + 1) / 2, p);
  NcPartition x = kreweras_pow(p, -(i - 1));
  NcSum y = small_f(1, x);
  NcSum out;
  for (const auto& [q, c] : y.terms()) out.add(kreweras_pow(q, i - 1), c);
  return out;
}

NcSum generator_F(int i, const NcSum& x) {
  return x.apply([i](const NcPartition& p) { return generator_F(i, p); });
}

}  // namespace fc
