#include "fc/paths.hpp"

#include <algorithm>
#include <cctype>

namespace fc {

bool is_valid_path_word(std::string_view word, int r) {
  if (r < 1) return false;
  long ups = 0, rights = 0;
  for (char c : word) {
    if (c == 'U') {
      ++ups;
    } else if (c == 'R') {
      ++rights;
      if (rights > static_cast<long>(r) * ups) return false;
    } else {
      return false;
    }
  }
  return rights == static_cast<long>(r) * ups;
}

RDyckPath::RDyckPath(std::string word, int r) : word_(std::move(word)), r_(r) {
  if (!is_valid_path_word(word_, r_)) throw DomainError("not a valid " + std::to_string(r) + "-Dyck path: " + word_);
}

std::string expand_word(std::string_view text) {
  std::string out;
  for (size_t i = 0; i < text.size();) {
    char c = text[i++];
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    if (c != 'U' && c != 'R') throw DomainError("unexpected letter in path: " + std::string(1, c));
    int times = 1;
    if (i < text.size() && text[i] == '^') {
      ++i;
      size_t start = i;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
      if (start == i) throw DomainError("missing exponent in path");
      times = std::stoi(std::string(text.substr(start, i - start)));
    }
    out.append(times, c);
  }
  return out;
}

BigInt fuss_catalan(int n, int r) {
  if (n < 0 || r < 1) throw DomainError("fuss_catalan needs n >= 0, r >= 1");
  return binomial((r + 1) * n, n) / (r * n + 1);
}

namespace {
void extend(std::string& w, int ups_left, int ups, int rights, int n, int r, std::vector<RDyckPath>& out) {
  if (ups == n && rights == r * n) {
    out.emplace_back(w, r);
    return;
  }
  if (rights < r * ups) {
    w.push_back('R');
    extend(w, ups_left, ups, rights + 1, n, r, out);
    w.pop_back();
  }
  if (ups_left > 0) {
    w.push_back('U');
    extend(w, ups_left - 1, ups + 1, rights, n, r, out);
    w.pop_back();
  }
}
}  // namespace

std::vector<RDyckPath> enumerate_paths(int n, int r) {
  if (n < 0 || r < 1) throw DomainError("enumerate_paths needs n >= 0, r >= 1");
  std::vector<RDyckPath> out;
  std::string w;
  extend(w, n, 0, 0, n, r, out);
  return out;
}

RYoungTableau path_to_tableau(const RDyckPath& p) {
  RYoungTableau t{p.r(), {}, {}};
  for (size_t i = 0; i < p.word().size(); ++i)
    (p.word()[i] == 'U' ? t.first_row : t.second_row).push_back(static_cast<int>(i) + 1);
  return t;
}

RDyckPath tableau_to_path(const RYoungTableau& t) {
  size_t total = t.first_row.size() + t.second_row.size();
  if (t.second_row.size() != t.first_row.size() * static_cast<size_t>(t.r))
    throw DomainError("tableau rows have incompatible lengths");
  std::string w(total, '?');
  auto place = [&](const std::vector<int>& row, char c) {
    for (size_t i = 0; i < row.size(); ++i) {
      if (i > 0 && row[i] <= row[i - 1]) throw DomainError("tableau row is not increasing");
      if (row[i] < 1 || row[i] > static_cast<int>(total) || w[row[i] - 1] != '?')
        throw DomainError("tableau entries do not partition the range");
      w[row[i] - 1] = c;
    }
  };
  place(t.first_row, 'U');
  place(t.second_row, 'R');
  return RDyckPath(w, t.r);
}

RDyckPath jdt_rotate(const RDyckPath& p) {
  const int r = p.r();
  const int n = p.size();
  if (n == 0) return p;
  RYoungTableau t = path_to_tableau(p);
  auto& top = t.first_row;     // rectangle k holds top[k-1]
  auto& bottom = t.second_row;  // column j holds bottom[j-1]
  // hole starts where the largest entry sat
  bool hole_top = false;
  int hole = r * n;
  for (;;) {
    if (hole_top) {
      if (hole == 1) break;
      top[hole - 1] = top[hole - 2];
      --hole;
      continue;
    }
    int above = (hole + r - 1) / r;
    if (hole == 1 || top[above - 1] > bottom[hole - 2]) {
      bottom[hole - 1] = top[above - 1];
      hole_top = true;
      hole = above;
    } else {
      bottom[hole - 1] = bottom[hole - 2];
      --hole;
    }
  }
  for (int& x : top) ++x;
  for (int& x : bottom) ++x;
  top[0] = 1;
  return tableau_to_path(t);
}

}  // namespace fc
