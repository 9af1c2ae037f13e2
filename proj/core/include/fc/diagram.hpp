#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "fc/chords.hpp"
#include "fc/lincomb.hpp"
#include "fc/rings.hpp"

namespace fc {

enum class Boundary { none, right, both };
std::string to_string(Boundary b);
Boundary parse_boundary(std::string_view s);

// Stub codes stored in place of a partner index.
inline constexpr int kRightEven = -1;
inline constexpr int kRightOdd = -2;
inline constexpr int kLeftEven = -3;
inline constexpr int kLeftOdd = -4;
inline bool is_stub(int code) { return code < 0; }
inline bool stub_left(int code) { return code <= kLeftEven; }
inline bool stub_odd(int code) { return code == kRightOdd || code == kLeftOdd; }
inline int stub_code(bool left, bool odd) { return left ? (odd ? kLeftOdd : kLeftEven) : (odd ? kRightOdd : kRightEven); }

// Planar diagram on m bundles of r strands; bottom slots 0..N-1, top slots N..2N-1.
// A state has no top edge.
class Diagram {
 public:
  Diagram() = default;
  Diagram(int m, int r, Boundary b, bool has_top, std::vector<int> links, int lr = 0);

  static Diagram identity(int m, int r, Boundary b);

  int m() const { return m_; }
  int r() const { return r_; }
  Boundary boundary() const { return b_; }
  int slots() const { return m_ * r_; }
  bool has_top() const { return has_top_; }
  int num_nodes() const { return static_cast<int>(links_.size()); }
  const std::vector<int>& links() const { return links_; }
  int link(int node) const { return links_[node]; }
  int lr_strands() const { return lr_; }
  // Position after folding the top edge down to the right, 1-based.
  int fold_position(int node) const;
  // Bundle (1-based) and edge of a node.
  int bundle_of(int node) const { return (node % slots()) / r_ + 1; }
  bool is_top(int node) const { return node >= slots(); }

  // Wall points bottom to top; entries are node indices, -1 marks a left-right strand.
  std::vector<int> wall(bool left) const;
  bool planar() const;
  bool satisfies_fold_condition() const;
  bool parities_follow_bundles() const;
  int num_stubs() const;
  int num_through() const;

  std::string to_string() const;

  friend bool operator==(const Diagram&, const Diagram&) = default;
  friend auto operator<=>(const Diagram&, const Diagram&) = default;

 private:
  int m_ = 0;
  int r_ = 1;
  Boundary b_ = Boundary::none;
  bool has_top_ = true;
  std::vector<int> links_;
  int lr_ = 0;
};

// Parity a stub at this node must carry.
bool expected_stub_odd(int m, int r, int node, bool top, bool left);

struct Factors {
  int loops = 0;
  int tau_e = 0;
  int tau_o = 0;
  int tau0_e = 0;
  int tau0_o = 0;
  int theta = 0;
  Factors& operator+=(const Factors& o);
  friend bool operator==(const Factors&, const Factors&) = default;
};

// Stacks y on top of x. With star set, left-to-right strands are removed with a factor theta.
std::pair<Diagram, Factors> multiply(const Diagram& x, const Diagram& y, bool star = true);

Diagram generator_E(int i, int s, int m, int r, Boundary b);

// Chord diagram <-> state of the same width.
Diagram state_from_chord(const ChordDiagram& c, int m, int r, Boundary b);
ChordDiagram chord_from_state(const Diagram& d);

template <class T>
struct Weights {
  T one, tau, tau_e, tau_o, tau0_e, tau0_o, theta;
  T factor(const Factors& f) const {
    T x = one;
    for (int k = 0; k < f.loops; ++k) x = x * tau;
    for (int k = 0; k < f.tau_e; ++k) x = x * tau_e;
    for (int k = 0; k < f.tau_o; ++k) x = x * tau_o;
    for (int k = 0; k < f.tau0_e; ++k) x = x * tau0_e;
    for (int k = 0; k < f.tau0_o; ++k) x = x * tau0_o;
    for (int k = 0; k < f.theta; ++k) x = x * theta;
    return x;
  }
};

Weights<LaurentPoly> laurent_weights();

template <class T>
class AlgebraElement {
 public:
  using Sum = LinComb<Diagram, T>;
  AlgebraElement() = default;
  AlgebraElement(Sum s) : sum_(std::move(s)) {}
  static AlgebraElement basis(const Diagram& d, const T& one) { return AlgebraElement(Sum::single(d, one)); }

  const Sum& sum() const { return sum_; }
  const typename Sum::Terms& terms() const { return sum_.terms(); }
  bool empty() const { return sum_.empty(); }
  void add(const Diagram& d, const T& c) { sum_.add(d, c); }
  AlgebraElement scaled(const T& c) const { return AlgebraElement(sum_.scaled(c)); }

  friend AlgebraElement operator+(const AlgebraElement& a, const AlgebraElement& b) {
    return AlgebraElement(a.sum_ + b.sum_);
  }
  friend bool operator==(const AlgebraElement& a, const AlgebraElement& b) { return a.sum_ == b.sum_; }

  AlgebraElement times(const AlgebraElement& y, const Weights<T>& w, bool star = true) const {
    AlgebraElement out;
    for (const auto& [dx, cx] : sum_.terms())
      for (const auto& [dy, cy] : y.sum_.terms()) {
        auto [d, f] = multiply(dx, dy, star);
        out.sum_.add(d, cx * cy * w.factor(f));
      }
    return out;
  }

 private:
  Sum sum_;
};

using LaurentElement = AlgebraElement<LaurentPoly>;

LaurentElement element(const Diagram& d);
// Product of a word such as E2^2,E3^1 read left to right.
LaurentElement word_product(std::string_view word, int m, int r, Boundary b, bool star = true);
std::vector<std::pair<int, int>> parse_word(std::string_view word);
LaurentElement act_on_state(const LaurentElement& x, const LaurentElement& state, bool star = true);

std::vector<Diagram> enumerate_basis(int m, int r, Boundary b, bool star = true);
std::vector<Diagram> enumerate_states(int m, int r, Boundary b);
BigInt dimension(int m, int r, Boundary b, bool star = true);
// Diagrams reachable from the identity by right multiplication with generators.
std::vector<Diagram> closure_basis(int m, int r, Boundary b);

struct VKCounts {
  BigInt V_direct;
  BigInt V_weighted;
  BigInt K;
};
VKCounts count_VK(int n, int r);
BigInt count_gamma(int m, int r);

struct RelationReport {
  int checked = 0;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};
RelationReport verify_relations(int m, int r);

}  // namespace fc
