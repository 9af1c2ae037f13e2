#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "fc/chords.hpp"
#include "fc/lincomb.hpp"
#include "fc/rings.hpp"

namespace fc {

// Non-crossing set partition of [1, n], blocks ascending and ordered by minimum.
class NcPartition {
 public:
  NcPartition() = default;
  NcPartition(int n, std::vector<std::vector<int>> blocks);

  static NcPartition parse(std::string_view text, int n = 0);
  static NcPartition singletons(int n);
  static NcPartition one_block(int n);

  int n() const { return n_; }
  const std::vector<std::vector<int>>& blocks() const { return blocks_; }
  int num_blocks() const { return static_cast<int>(blocks_.size()); }
  int rank() const { return n_ - num_blocks(); }
  // Index into blocks() of the block holding label x (taken mod n).
  int block_of(int x) const;
  bool same_block(int x, int y) const { return block_of(x) == block_of(y); }
  const std::vector<int>& block_containing(int x) const { return blocks_[block_of(x)]; }

  NcPartition merged(int x, int y) const;
  // Labels shifted by t modulo n.
  NcPartition shifted(int t) const;
  std::string to_string() const;

  friend bool operator==(const NcPartition& a, const NcPartition& b) {
    return a.n_ == b.n_ && a.blocks_ == b.blocks_;
  }
  friend auto operator<=>(const NcPartition& a, const NcPartition& b) {
    if (a.n_ != b.n_) return a.n_ <=> b.n_;
    return a.blocks_ <=> b.blocks_;
  }

 private:
  int n_ = 0;
  std::vector<std::vector<int>> blocks_;
  std::vector<int> where_;
};

bool is_noncrossing(int n, const std::vector<std::vector<int>>& blocks);

using NcSum = LinComb<NcPartition, LaurentPoly>;

std::vector<NcPartition> enumerate_ncp(int n);

bool leq(const NcPartition& a, const NcPartition& b);
bool covers(const NcPartition& a, const NcPartition& b);

NcPartition kreweras(const NcPartition& p);
NcPartition kreweras_inv(const NcPartition& p);
NcPartition kreweras_pow(const NcPartition& p, int k);

// Pairs (b_i, b_{i+1}) and (b_last, b_first) of every block.
std::vector<std::pair<int, int>> edge_pairs(const NcPartition& p);
ChordDiagram psi(const NcPartition& p);
NcPartition psi_inv(const ChordDiagram& c);

// f_k merges the blocks of k and k+1 (mod n), or weights by tau when they coincide.
NcSum small_f(int k, const NcPartition& p);
NcSum generator_F(int i, const NcPartition& p);
NcSum generator_F(int i, const NcSum& x);

}  // namespace fc
