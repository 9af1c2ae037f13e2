#pragma once

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "fc/paths.hpp"

namespace fc {

using Arch = std::pair<int, int>;

// Planar matching on points 1..num_points, optionally decorated.
class ChordDiagram {
 public:
  ChordDiagram() = default;
  ChordDiagram(int num_points, std::vector<Arch> arches, std::set<int> right_ends = {},
               std::set<int> left_ends = {}, std::set<Arch> dots = {});

  int num_points() const { return num_points_; }
  const std::vector<Arch>& arches() const { return arches_; }
  const std::set<int>& right_ends() const { return right_ends_; }
  const std::set<int>& left_ends() const { return left_ends_; }
  const std::set<Arch>& dots() const { return dots_; }
  bool undecorated() const { return right_ends_.empty() && left_ends_.empty() && dots_.empty(); }
  // Partner of each point (1-based), or 0 for end points.
  std::vector<int> partners() const;

  friend bool operator==(const ChordDiagram&, const ChordDiagram&) = default;
  friend auto operator<=>(const ChordDiagram&, const ChordDiagram&) = default;

 private:
  int num_points_ = 0;
  std::vector<Arch> arches_;
  std::set<int> right_ends_;
  std::set<int> left_ends_;
  std::set<Arch> dots_;
};

bool arches_cross(const Arch& a, const Arch& b);
bool is_planar(const std::vector<Arch>& arches);
bool check_condA(const ChordDiagram& c, int r);

// Dyck word (r = 1) <-> matching; U marks arch openers.
ChordDiagram path_to_matching(std::string_view word);
std::string matching_to_word(const ChordDiagram& c);

struct GenChordDiagram {
  int n = 0;
  int r = 1;
  std::vector<std::vector<int>> blocks;  // sorted, ordered by minimum
  friend bool operator==(const GenChordDiagram&, const GenChordDiagram&) = default;
};

GenChordDiagram make_gen_chord(int n, int r, std::vector<std::vector<int>> blocks);
GenChordDiagram path_to_gen_chord(const RDyckPath& p);
RDyckPath gen_chord_to_path(const GenChordDiagram& g);

ChordDiagram rotate_sigma(const ChordDiagram& c, int times = 1);
ChordDiagram rotate_sigma_r(const ChordDiagram& c, int r);
GenChordDiagram rotate_tilde(const GenChordDiagram& g, int times = 1);

// All planar matchings on 2m points satisfying the congruence for r.
std::vector<ChordDiagram> enumerate_matchings(int num_points, int r);

std::string ascii_sketch(const ChordDiagram& c);

}  // namespace fc
