#include "fc/chains.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace fc {

RChain::RChain(std::vector<NcPartition> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) throw DomainError("chain needs at least one partition");
  for (size_t i = 1; i < parts_.size(); ++i) {
    if (parts_[i].n() != parts_[0].n()) throw DomainError("chain partitions differ in size");
    if (!leq(parts_[i - 1], parts_[i])) throw DomainError("chain is not increasing");
  }
}

RChain RChain::parse(std::string_view text, int n) {
  std::string s;
  for (char ch : text)
    if (ch != ' ' && ch != '[' && ch != ']' && ch != '(' && ch != ')') s += ch;
  char sep = s.find(';') != std::string::npos ? ';' : ',';
  if (sep == ',' && s.find('/') == std::string::npos && s.find(',') == std::string::npos) sep = ';';
  std::vector<std::string> pieces;
  std::string cur;
  for (char ch : s) {
    if (ch == sep) {
      pieces.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  pieces.push_back(cur);
  std::vector<NcPartition> parts;
  int mx = n;
  if (mx == 0)
    for (const auto& p : pieces) mx = std::max(mx, NcPartition::parse(p).n());
  for (const auto& p : pieces) parts.push_back(NcPartition::parse(p, mx));
  return RChain(std::move(parts));
}

std::string RChain::to_string() const {
  std::string s = "[";
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ';';
    s += parts_[i].to_string();
  }
  return s + "]";
}

std::vector<RChain> enumerate_chains(int n, int r) {
  std::vector<RChain> out;
  if (n < 1 || r < 1) return out;
  auto all = enumerate_ncp(n);
  const size_t m = all.size();
  std::vector<std::vector<size_t>> up(m);
  for (size_t i = 0; i < m; ++i)
    for (size_t j = 0; j < m; ++j)
      if (leq(all[i], all[j])) up[i].push_back(j);
  std::vector<NcPartition> cur;
  std::function<void(size_t)> go = [&](size_t last) {
    if (static_cast<int>(cur.size()) == r) {
      out.emplace_back(cur);
      return;
    }
    for (size_t j : up[last]) {
      cur.push_back(all[j]);
      go(j);
      cur.pop_back();
    }
  };
  for (size_t i = 0; i < m; ++i) {
    cur = {all[i]};
    go(i);
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

struct Piece {
  std::vector<int> elems;  // sorted
  std::string path;
};

std::string level_one_path(int size, int r) {
  std::string w = "U" + std::string(r - 1, 'R');
  for (int k = 1; k < size; ++k) w += "U" + std::string(r, 'R');
  return w + "R";
}

Piece merge_pieces(std::vector<Piece> pieces, int r) {
  std::sort(pieces.begin(), pieces.end(), [](const Piece& a, const Piece& b) { return a.elems.front() < b.elems.front(); });
  Piece acc = pieces.front();
  for (size_t k = 1; k < pieces.size(); ++k) {
    const Piece& p = pieces[k];
    int a = static_cast<int>(std::count_if(acc.elems.begin(), acc.elems.end(), [&](int x) { return x < p.elems.front(); }));
    acc.path.insert(static_cast<size_t>(a) * (r + 1), p.path);
    acc.elems.insert(acc.elems.end(), p.elems.begin(), p.elems.end());
    std::sort(acc.elems.begin(), acc.elems.end());
  }
  return acc;
}

std::string shift_ups(const std::string& w, int dir) {
  std::string out(w.size(), 'R');
  for (size_t i = 0; i < w.size(); ++i) {
    if (w[i] != 'U') continue;
    long j = i == 0 ? 0 : static_cast<long>(i) + dir;
    if (j < 0 || j >= static_cast<long>(w.size()) || out[j] == 'U') throw DomainError("path cannot be shifted");
    out[j] = 'U';
  }
  return out;
}

struct Parsed {
  std::string path;
  std::vector<int> chunks;
};

// Splits a merged path into its block paths; chunk indices are in text order.
std::vector<Parsed> split_blocks(const std::string& w, int r) {
  std::vector<Parsed> out;
  size_t pos = 0;
  int chunk = 0;
  const size_t L = static_cast<size_t>(r) + 1;
  std::function<void()> block = [&] {
    if (pos >= w.size() || w[pos] != 'U') throw DomainError("path does not decompose into blocks");
    Parsed b;
    long h = 0;
    bool first = true;
    while (first || h > 0) {
      if (pos + L > w.size()) throw DomainError("path does not decompose into blocks");
      if (!first && w[pos] == 'U') {
        block();
        continue;
      }
      first = false;
      for (size_t k = 0; k < L; ++k) {
        char ch = w[pos + k];
        b.path += ch;
        h += ch == 'U' ? r : -1;
      }
      b.chunks.push_back(chunk++);
      pos += L;
      if (h < 0) throw DomainError("path does not decompose into blocks");
    }
    out.push_back(std::move(b));
  };
  while (pos < w.size()) block();
  return out;
}

}  // namespace

RDyckPath kappa(const RChain& c) {
  const int r = c.r();
  std::vector<Piece> pieces;
  for (const auto& b : c[1].blocks()) pieces.push_back({b, level_one_path(static_cast<int>(b.size()), r)});
  for (int i = 2; i <= r; ++i) {
    std::vector<Piece> next;
    for (const auto& b : c[i].blocks()) {
      std::vector<Piece> sub;
      for (const auto& p : pieces)
        if (c[i].same_block(b.front(), p.elems.front())) sub.push_back(p);
      Piece m = merge_pieces(sub, r);
      m.path = shift_ups(m.path, -1);
      next.push_back(std::move(m));
    }
    pieces = std::move(next);
  }
  return RDyckPath(merge_pieces(pieces, r).path, r);
}

RChain kappa_inv(const RDyckPath& p) {
  const int r = p.r(), n = p.size();
  std::vector<std::vector<std::vector<int>>> levels(r + 1);
  std::function<void(const std::string&, const std::vector<int>&, int)> descend =
      [&](const std::string& w, const std::vector<int>& labels, int level) {
        for (const auto& b : split_blocks(w, r)) {
          std::vector<int> elems;
          for (int k : b.chunks) elems.push_back(labels[k]);
          levels[level].push_back(elems);
          if (level == 1) {
            if (b.path != level_one_path(static_cast<int>(elems.size()), r))
              throw DomainError("path is not in the image of kappa");
          } else {
            descend(shift_ups(b.path, +1), elems, level - 1);
          }
        }
      };
  std::vector<int> all(n);
  for (int i = 0; i < n; ++i) all[i] = i + 1;
  descend(p.word(), all, r);
  std::vector<NcPartition> parts;
  for (int i = 1; i <= r; ++i) parts.emplace_back(n, levels[i]);
  RChain c(parts);
  if (kappa(c) != p) throw DomainError("path is not in the image of kappa");
  return c;
}

RChain extended_kreweras(const RChain& c) {
  std::vector<NcPartition> parts;
  for (int s = c.r(); s >= 1; --s) parts.push_back(kreweras(c[s]));
  return RChain(parts);
}

RChain extended_kreweras_inv(const RChain& c) {
  std::vector<NcPartition> parts;
  for (int s = c.r(); s >= 1; --s) parts.push_back(kreweras_inv(c[s]));
  return RChain(parts);
}

RChain extended_kreweras_pow(const RChain& c, int k) {
  const int period = 2 * c.n();
  k = ((k % period) + period) % period;
  RChain x = c;
  if (k > c.n()) {
    for (int i = 0; i < period - k; ++i) x = extended_kreweras_inv(x);
  } else {
    for (int i = 0; i < k; ++i) x = extended_kreweras(x);
  }
  return x;
}

ChordDiagram psi_r(const RChain& c) {
  const int r = c.r(), n = c.n();
  std::vector<Arch> arches;
  for (int s = 1; s <= r; ++s)
    for (const auto& [i, j] : edge_pairs(c[s])) {
      int k = ((j - 2) % n + n) % n + 1;
      arches.push_back({(2 * i - 2) * r + s, 2 * k * r - s + 1});
    }
  return ChordDiagram(2 * r * n, arches);
}

RChain psi_r_inv(const ChordDiagram& d, int r) {
  if (r < 1 || d.num_points() % (2 * r) || !d.undecorated()) throw DomainError("diagram has the wrong shape");
  const int n = d.num_points() / (2 * r);
  std::vector<std::vector<Arch>> layers(r + 1);
  auto locate = [&](int x) {
    int b = (x - 1) / r, o = (x - 1) % r;
    if (b % 2 == 0) return std::pair{o + 1, 2 * (b / 2) + 1};
    return std::pair{r - o, 2 * ((b + 1) / 2)};
  };
  for (const auto& [a, b] : d.arches()) {
    auto [sa, pa] = locate(a);
    auto [sb, pb] = locate(b);
    if (sa != sb || (pa + pb) % 2 == 0) throw DomainError("diagram is not a layered superposition");
    layers[sa].push_back({pa, pb});
  }
  std::vector<NcPartition> parts;
  for (int s = 1; s <= r; ++s) parts.push_back(psi_inv(ChordDiagram(2 * n, layers[s])));
  RChain c(parts);
  if (psi_r(c) != d) throw DomainError("diagram is not in the image of psi_r");
  return c;
}

ChordDiagram phi(const RChain& c) { return rotate_sigma(psi_r(c), c.r()); }

ChordDiagram phi_superposed(const RChain& c) {
  const int r = c.r(), n = c.n();
  std::vector<Arch> arches;
  auto place = [&](int p, int s) { return p % 2 == 0 ? (p - 1) * r + s : p * r - s + 1; };
  for (int s = 1; s <= r; ++s) {
    ChordDiagram d = path_to_matching(kappa(RChain({c[s]})).word());
    for (const auto& [a, b] : d.arches()) arches.push_back({place(a, s), place(b, s)});
  }
  return ChordDiagram(2 * r * n, arches);
}

CoverExclusiveTiling build_tiling(const RChain& c) {
  CoverExclusiveTiling t{c.n(), c.r(), {}};
  const int r = c.r();
  for (int i = r; i >= 1; --i) {
    auto blocks = c[i].blocks();
    std::sort(blocks.begin(), blocks.end(), [](const auto& a, const auto& b) { return a.back() < b.back(); });
    for (const auto& q : blocks)
      for (size_t s = 0; s + 1 < q.size(); ++s) t.anchors.push_back({r * (q[s] - 1) + i, r * (q[s + 1] - 1) + r - i + 1});
  }
  return t;
}

std::string base_path(int n, int r) {
  std::string w;
  for (int k = 0; k < n; ++k) w += std::string(r, 'U') + std::string(r, 'R');
  return w;
}

std::string tiling_top_path(const CoverExclusiveTiling& t) {
  const std::string base = base_path(t.n, t.r);
  const int len = static_cast<int>(base.size());
  std::vector<int> downs, ups, height(len + 1, 0);
  for (int k = 0; k < len; ++k) {
    (base[k] == 'U' ? ups : downs).push_back(k + 1);
    height[k + 1] = height[k] + (base[k] == 'U' ? 1 : -1);
  }
  for (const auto& [d, u] : t.anchors) {
    if (d < 1 || u < 1 || d > static_cast<int>(downs.size()) || u > static_cast<int>(ups.size()))
      throw DomainError("tile anchor out of range");
    int pd = downs[d - 1], pu = ups[u - 1];
    if (pd >= pu) throw DomainError("tile anchor is not a down step before an up step");
    for (int k = pd; k < pu; ++k) height[k] += 2;
  }
  std::string w;
  for (int k = 0; k < len; ++k) {
    int step = height[k + 1] - height[k];
    if (step != 1 && step != -1) throw DomainError("tiling does not produce a lattice path");
    w += step == 1 ? 'U' : 'R';
  }
  return w;
}

namespace {

ChainSum f1_s(int s, const RChain& c) {
  const int r = c.r();
  LaurentPoly coef = LaurentPoly::constant(1);
  std::vector<NcPartition> parts = c.parts();
  for (int t = r - s + 1; t <= r; ++t) {
    if (parts[t - 1].same_block(1, 2)) {
      coef *= tau();
    } else {
      parts[t - 1] = parts[t - 1].merged(1, 2);
    }
  }
  return ChainSum::single(RChain(parts), coef);
}

}  // namespace

ChainSum generator_Fs(int i, int s, const RChain& c) {
  if (i < 1 || i > 2 * c.n() - 1 || s < 1 || s > c.r()) throw DomainError("generator index out of range");
  ChainSum y = f1_s(s, extended_kreweras_pow(c, -(i - 1)));
  ChainSum out;
  for (const auto& [x, k] : y.terms()) out.add(extended_kreweras_pow(x, i - 1), k);
  return out;
}

ChainSum generator_Fs(int i, int s, const ChainSum& x) {
  return x.apply([i, s](const RChain& c) { return generator_Fs(i, s, c); });
}

}  // namespace fc
