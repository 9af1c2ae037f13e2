#include "fc/chords.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace fc {

ChordDiagram::ChordDiagram(int num_points, std::vector<Arch> arches, std::set<int> right_ends,
                           std::set<int> left_ends, std::set<Arch> dots)
    : num_points_(num_points),
      arches_(std::move(arches)),
      right_ends_(std::move(right_ends)),
      left_ends_(std::move(left_ends)),
      dots_(std::move(dots)) {
  std::vector<int> seen(num_points_ + 1, 0);
  auto mark = [&](int p) {
    if (p < 1 || p > num_points_) throw DomainError("chord point out of range");
    if (seen[p]++) throw DomainError("chord point used twice");
  };
  for (auto& a : arches_) {
    if (a.first > a.second) std::swap(a.first, a.second);
    if (a.first == a.second) throw DomainError("degenerate arch");
    mark(a.first);
    mark(a.second);
  }
  for (int p : right_ends_) mark(p);
  for (int p : left_ends_) mark(p);
  for (int p = 1; p <= num_points_; ++p)
    if (!seen[p]) throw DomainError("chord point left unmatched");
  std::sort(arches_.begin(), arches_.end());
  for (const auto& d : dots_)
    if (!std::binary_search(arches_.begin(), arches_.end(), d)) throw DomainError("dot on a missing arch");
  if (!is_planar(arches_)) throw DomainError("chord diagram is not planar");
}

std::vector<int> ChordDiagram::partners() const {
  std::vector<int> p(num_points_ + 1, 0);
  for (const auto& [a, b] : arches_) {
    p[a] = b;
    p[b] = a;
  }
  return p;
}

bool arches_cross(const Arch& a, const Arch& b) {
  return (a.first < b.first && b.first < a.second && a.second < b.second) ||
         (b.first < a.first && a.first < b.second && b.second < a.second);
}

bool is_planar(const std::vector<Arch>& arches) {
  std::vector<Arch> sorted = arches;
  for (auto& a : sorted)
    if (a.first > a.second) std::swap(a.first, a.second);
  std::sort(sorted.begin(), sorted.end());
  // stack check over endpoints
  std::vector<std::pair<int, int>> events;
  for (size_t i = 0; i < sorted.size(); ++i) {
    events.push_back({sorted[i].first, static_cast<int>(i)});
    events.push_back({sorted[i].second, static_cast<int>(i)});
  }
  std::sort(events.begin(), events.end());
  std::vector<int> stack;
  for (const auto& [pos, id] : events) {
    if (pos == sorted[id].first) {
      stack.push_back(id);
    } else {
      if (stack.empty() || stack.back() != id) return false;
      stack.pop_back();
    }
  }
  return true;
}

bool check_condA(const ChordDiagram& c, int r) {
  for (const auto& [i, j] : c.arches())
    if ((i + j - 1) % (2 * r) != 0) return false;
  return true;
}

ChordDiagram path_to_matching(std::string_view word) {
  std::vector<int> stack;
  std::vector<Arch> arches;
  for (size_t i = 0; i < word.size(); ++i) {
    int pos = static_cast<int>(i) + 1;
    if (word[i] == 'U') {
      stack.push_back(pos);
    } else if (word[i] == 'R') {
      if (stack.empty()) throw DomainError("word is not a Dyck path");
      arches.push_back({stack.back(), pos});
      stack.pop_back();
    } else {
      throw DomainError("unexpected letter in Dyck word");
    }
  }
  if (!stack.empty()) throw DomainError("word is not a Dyck path");
  return ChordDiagram(static_cast<int>(word.size()), arches);
}

std::string matching_to_word(const ChordDiagram& c) {
  if (!c.undecorated()) throw DomainError("decorated diagram has no Dyck word");
  std::string w(c.num_points(), 'R');
  for (const auto& [a, b] : c.arches()) w[a - 1] = 'U';
  return w;
}

GenChordDiagram make_gen_chord(int n, int r, std::vector<std::vector<int>> blocks) {
  if (static_cast<int>(blocks.size()) != n) throw DomainError("wrong number of blocks");
  std::vector<int> seen((r + 1) * n + 1, 0);
  for (auto& b : blocks) {
    if (static_cast<int>(b.size()) != r + 1) throw DomainError("block has wrong size");
    std::sort(b.begin(), b.end());
    for (int x : b) {
      if (x < 1 || x > (r + 1) * n || seen[x]++) throw DomainError("blocks do not partition the points");
    }
  }
  std::sort(blocks.begin(), blocks.end());
  // consecutive points of each block act as arcs; check pairwise planarity
  std::vector<Arch> arcs;
  for (const auto& b : blocks)
    for (size_t i = 0; i + 1 < b.size(); ++i) arcs.push_back({b[i], b[i + 1]});
  for (size_t i = 0; i < blocks.size(); ++i)
    for (size_t j = i + 1; j < blocks.size(); ++j) {
      const auto& A = blocks[i];
      const auto& B = blocks[j];
      // crossing iff B has points both inside and outside some gap of A
      for (size_t k = 0; k + 1 < A.size(); ++k)
        for (size_t l = 0; l + 1 < B.size(); ++l)
          if (arches_cross({A[k], A[k + 1]}, {B[l], B[l + 1]})) throw DomainError("blocks cross");
      int lo = A.front(), hi = A.back();
      bool inside = false, outside = false;
      for (int x : B) (x > lo && x < hi ? inside : outside) = true;
      if (inside && outside) {
        // B inside must sit within a single gap of A
        bool ok = false;
        for (size_t k = 0; k + 1 < A.size(); ++k) {
          bool all = true;
          for (int x : B)
            if (!(x > A[k] && x < A[k + 1])) all = false;
          if (all) ok = true;
        }
        if (!ok) throw DomainError("blocks cross");
      }
    }
  return GenChordDiagram{n, r, std::move(blocks)};
}

GenChordDiagram path_to_gen_chord(const RDyckPath& p) {
  const int n = p.size(), r = p.r(), total = (r + 1) * n;
  std::vector<int> ups;
  for (int i = 0; i < total; ++i)
    if (p.word()[i] == 'U') ups.push_back(i + 1);
  std::vector<char> used(total + 1, 0);
  std::vector<std::vector<int>> blocks;
  for (int i = n - 1; i >= 0; --i) {
    std::vector<int> b;
    for (int x = ups[i]; x <= total && static_cast<int>(b.size()) < r + 1; ++x)
      if (!used[x]) b.push_back(x);
    if (static_cast<int>(b.size()) != r + 1) throw DomainError("path does not yield a chord diagram");
    for (int x : b) used[x] = 1;
    blocks.push_back(b);
  }
  return make_gen_chord(n, r, std::move(blocks));
}

RDyckPath gen_chord_to_path(const GenChordDiagram& g) {
  std::string w((g.r + 1) * g.n, 'R');
  for (const auto& b : g.blocks) w[b.front() - 1] = 'U';
  return RDyckPath(w, g.r);
}

ChordDiagram rotate_sigma(const ChordDiagram& c, int times) {
  const int m = c.num_points();
  if (m == 0) return c;
  int t = ((times % m) + m) % m;
  auto sh = [&](int p) { return (p - 1 + t) % m + 1; };
  auto sha = [&](const Arch& a) {
    Arch b{sh(a.first), sh(a.second)};
    if (b.first > b.second) std::swap(b.first, b.second);
    return b;
  };
  std::vector<Arch> arches;
  for (const auto& a : c.arches()) arches.push_back(sha(a));
  std::set<int> re, le;
  std::set<Arch> dots;
  for (int p : c.right_ends()) re.insert(sh(p));
  for (int p : c.left_ends()) le.insert(sh(p));
  for (const auto& d : c.dots()) dots.insert(sha(d));
  return ChordDiagram(m, arches, re, le, dots);
}

ChordDiagram rotate_sigma_r(const ChordDiagram& c, int r) {
  if (!check_condA(c, r)) throw DomainError("diagram does not satisfy the congruence condition");
  return rotate_sigma(c, r);
}

GenChordDiagram rotate_tilde(const GenChordDiagram& g, int times) {
  const int total = (g.r + 1) * g.n;
  int t = ((times % total) + total) % total;
  std::vector<std::vector<int>> blocks;
  for (const auto& b : g.blocks) {
    std::vector<int> nb;
    for (int x : b) nb.push_back((x - 1 + t) % total + 1);
    blocks.push_back(nb);
  }
  return make_gen_chord(g.n, g.r, std::move(blocks));
}

std::vector<ChordDiagram> enumerate_matchings(int num_points, int r) {
  std::vector<ChordDiagram> out;
  if (num_points % 2) return out;
  std::vector<Arch> arches;
  std::vector<int> stack;
  // scanning left to right; a point either opens or closes the top of the stack
  std::function<void(int)> go = [&](int p) {
    if (p > num_points) {
      if (stack.empty()) out.emplace_back(num_points, arches);
      return;
    }
    int remaining = num_points - p + 1;
    if (static_cast<int>(stack.size()) > remaining) return;
    if (!stack.empty() && (stack.back() + p - 1) % (2 * r) == 0) {
      int o = stack.back();
      stack.pop_back();
      arches.push_back({o, p});
      go(p + 1);
      arches.pop_back();
      stack.push_back(o);
    }
    stack.push_back(p);
    go(p + 1);
    stack.pop_back();
  };
  go(1);
  std::sort(out.begin(), out.end());
  return out;
}

std::string ascii_sketch(const ChordDiagram& c) {
  // one row per nesting depth, arches drawn as horizontal runs
  const int m = c.num_points();
  std::vector<int> depth(c.arches().size(), 0);
  const auto& A = c.arches();
  int maxd = 0;
  for (size_t i = 0; i < A.size(); ++i) {
    for (size_t j = 0; j < A.size(); ++j)
      if (A[j].first > A[i].first && A[j].second < A[i].second) depth[i] = std::max(depth[i], 0);
  }
  // depth = number of arches nested inside, computed bottom-up
  for (size_t pass = 0; pass < A.size(); ++pass)
    for (size_t i = 0; i < A.size(); ++i)
      for (size_t j = 0; j < A.size(); ++j)
        if (A[j].first > A[i].first && A[j].second < A[i].second) depth[i] = std::max(depth[i], depth[j] + 1);
  for (int d : depth) maxd = std::max(maxd, d);
  std::vector<std::string> rows(maxd + 1, std::string(2 * m, ' '));
  for (size_t i = 0; i < A.size(); ++i) {
    auto& row = rows[depth[i]];
    int a = 2 * (A[i].first - 1), b = 2 * (A[i].second - 1);
    for (int x = a; x <= b; ++x) row[x] = '_';
    for (int d = 0; d < depth[i]; ++d) {
      rows[d][a] = '|';
      rows[d][b] = '|';
    }
    row[a] = '|';
    row[b] = '|';
  }
  std::ostringstream out;
  for (int d = maxd; d >= 0; --d) out << rows[d] << "\n";
  std::string labels;
  for (int p = 1; p <= m; ++p) {
    char mark = '.';
    if (c.right_ends().count(p)) mark = '>';
    if (c.left_ends().count(p)) mark = '<';
    labels += mark;
    labels += ' ';
  }
  out << labels << "\n";
  return out.str();
}

}  // namespace fc
