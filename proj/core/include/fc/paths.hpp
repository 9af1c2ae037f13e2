#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "fc/rings.hpp"

namespace fc {

// Word over {U, R} with n letters U and rn letters R that never goes below the line.
class RDyckPath {
 public:
  RDyckPath(std::string word, int r);

  const std::string& word() const { return word_; }
  int r() const { return r_; }
  int size() const { return static_cast<int>(word_.size()) / (r_ + 1); }

  friend bool operator==(const RDyckPath&, const RDyckPath&) = default;
  friend auto operator<=>(const RDyckPath& a, const RDyckPath& b) {
    if (a.r_ != b.r_) return a.r_ <=> b.r_;
    return a.word_.compare(b.word_) <=> 0;
  }

 private:
  std::string word_;
  int r_;
};

bool is_valid_path_word(std::string_view word, int r);
// Accepts exponent shorthand such as URU^2R^8.
std::string expand_word(std::string_view text);

BigInt fuss_catalan(int n, int r);
std::vector<RDyckPath> enumerate_paths(int n, int r);

struct RYoungTableau {
  int r;
  std::vector<int> first_row;
  std::vector<int> second_row;
  friend bool operator==(const RYoungTableau&, const RYoungTableau&) = default;
};

RYoungTableau path_to_tableau(const RDyckPath& p);
RDyckPath tableau_to_path(const RYoungTableau& t);

// Modified jeu de taquin rotation xi.
RDyckPath jdt_rotate(const RDyckPath& p);

}  // namespace fc
