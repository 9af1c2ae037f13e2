#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fc/chords.hpp"
#include "fc/noncrossing.hpp"
#include "fc/paths.hpp"

namespace fc {

// Increasing chain pi_1 <= ... <= pi_r of non-crossing partitions.
class RChain {
 public:
  RChain() = default;
  explicit RChain(std::vector<NcPartition> parts);
  static RChain parse(std::string_view text, int n = 0);
  static RChain constant(const NcPartition& p, int r) { return RChain(std::vector<NcPartition>(r, p)); }

  int r() const { return static_cast<int>(parts_.size()); }
  int n() const { return parts_.front().n(); }
  const std::vector<NcPartition>& parts() const { return parts_; }
  // 1-based coordinate access.
  const NcPartition& operator[](int s) const { return parts_[s - 1]; }
  std::string to_string() const;

  friend bool operator==(const RChain&, const RChain&) = default;
  friend auto operator<=>(const RChain& a, const RChain& b) { return a.parts_ <=> b.parts_; }

 private:
  std::vector<NcPartition> parts_;
};

using ChainSum = LinComb<RChain, LaurentPoly>;

std::vector<RChain> enumerate_chains(int n, int r);

RDyckPath kappa(const RChain& c);
RChain kappa_inv(const RDyckPath& p);

RChain extended_kreweras(const RChain& c);
RChain extended_kreweras_inv(const RChain& c);
RChain extended_kreweras_pow(const RChain& c, int k);

ChordDiagram psi_r(const RChain& c);
RChain psi_r_inv(const ChordDiagram& d, int r);
ChordDiagram phi(const RChain& c);
// Superposition of the per-coordinate r = 1 paths, spread over bundles.
ChordDiagram phi_superposed(const RChain& c);

struct CoverExclusiveTiling {
  int n = 0;
  int r = 1;
  std::vector<std::pair<int, int>> anchors;  // (down step index, up step index) in lambda_0
  friend bool operator==(const CoverExclusiveTiling&, const CoverExclusiveTiling&) = default;
};

CoverExclusiveTiling build_tiling(const RChain& c);
std::string tiling_top_path(const CoverExclusiveTiling& t);
std::string base_path(int n, int r);

ChainSum generator_Fs(int i, int s, const RChain& c);
ChainSum generator_Fs(int i, int s, const ChainSum& x);

}  // namespace fc
