#pragma once

#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "fc/chains.hpp"
#include "fc/chords.hpp"
#include "fc/diagram.hpp"
#include "fc/lincomb.hpp"
#include "fc/noncrossing.hpp"

namespace fc {

// Invariance under i -> n+2-epsilon-i (mod n).
bool is_symmetric(const NcPartition& p, int epsilon = 0);
std::vector<NcPartition> enumerate_snc(int n, int epsilon = 0);
BigInt count_snc(int n);
// Both recurrences checked against enumeration up to nmax; returns the first failing n or 0.
int check_snc_recurrences(int nmax);

// Increasing chains of epsilon = 0 symmetric partitions.
std::vector<RChain> enumerate_snc_chains(int n, int r);
bool is_mirror_symmetric(const ChordDiagram& c);
// Mirror-symmetric members of the r-constrained matchings on 2rn points.
std::vector<ChordDiagram> enumerate_symmetric_matchings(int n, int r);
BigInt count_B(int n, int r);

// Left half of a mirror-symmetric diagram; symmetric arches become right ends, dotted ones left ends.
ChordDiagram cut_symmetric(const ChordDiagram& full);
ChordDiagram uncut(const ChordDiagram& half);

// Position in the linear order 1 > n > 2 > n-1 > ...; smaller is greater.
int order_key(int i, int n);
bool odd_class(int i, int n);
std::set<int> e_sym(const NcPartition& p);
std::vector<int> s_sym(const NcPartition& p);

// Symmetric partition (epsilon = 0) with primes on an initial segment of S^sym.
class PrimedPartition {
 public:
  PrimedPartition() = default;
  PrimedPartition(NcPartition base, std::set<int> primed);
  static PrimedPartition parse(std::string_view text, int n = 0);
  const NcPartition& base() const { return base_; }
  const std::set<int>& primed() const { return primed_; }
  int n() const { return base_.n(); }
  bool is_primed(int i) const { return primed_.count(i) > 0; }
  std::string to_string() const;
  friend bool operator==(const PrimedPartition&, const PrimedPartition&) = default;
  friend auto operator<=>(const PrimedPartition&, const PrimedPartition&) = default;

 private:
  NcPartition base_;
  std::set<int> primed_;
};

std::vector<PrimedPartition> enumerate_primed(int n);
ChordDiagram primed_to_chord(const PrimedPartition& p);
PrimedPartition chord_to_primed(const ChordDiagram& c);

class PrimedChain {
 public:
  PrimedChain() = default;
  explicit PrimedChain(std::vector<PrimedPartition> parts);
  static PrimedChain parse(std::string_view text, int n = 0);
  static PrimedChain plain(const RChain& c);
  int r() const { return static_cast<int>(parts_.size()); }
  int n() const { return parts_.front().n(); }
  const std::vector<PrimedPartition>& parts() const { return parts_; }
  const PrimedPartition& operator[](int s) const { return parts_[s - 1]; }
  RChain unprimed() const;
  std::string to_string() const;
  friend bool operator==(const PrimedChain&, const PrimedChain&) = default;
  friend auto operator<=>(const PrimedChain&, const PrimedChain&) = default;

 private:
  std::vector<PrimedPartition> parts_;
};

// Conditions (a) and (b).
bool admissible_chain(const std::vector<PrimedPartition>& parts);
std::vector<PrimedChain> enumerate_primed_chains(int n, int r);
// Superposed chord diagram on 2rn points with dots on the primed layers.
ChordDiagram primed_chain_to_chord(const PrimedChain& c);
PrimedChain chord_to_primed_chain(const ChordDiagram& d, int r);

using PrimedSum = LinComb<PrimedPartition, LaurentPoly>;
using PrimedChainSum = LinComb<PrimedChain, LaurentPoly>;

// Two-boundary G_i, 0 <= i <= n.
PrimedSum generator_G(int i, const PrimedPartition& p);
// One-boundary G_i, 1 <= i <= n, on symmetric partitions.
NcSum generator_G(int i, const NcPartition& p);
NcSum generator_G(int i, const NcSum& x);
// Same action transported to epsilon = 1 partitions through rho.
NcSum generator_G_eps1(int i, const NcPartition& p);

PrimedChainSum generator_Gs(int i, int s, const PrimedChain& c);
PrimedChainSum generator_Gs(int i, int s, const PrimedChainSum& x);
ChainSum generator_Gs(int i, int s, const RChain& c);

// States of the diagram algebras attached to each basis.
Diagram tl_state(const NcPartition& p);
Diagram fc_state(const RChain& c);
Diagram one_boundary_state(const RChain& c);
Diagram two_boundary_state(const PrimedChain& c);

struct IsoReport {
  long checked = 0;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};
IsoReport verify_iso_tl(int n);
IsoReport verify_iso_fc(int n, int r);
IsoReport verify_iso_1b(int n, int r = 1);
IsoReport verify_iso_2b(int n, int r = 1);

}  // namespace fc
