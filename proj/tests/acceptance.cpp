#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "fc/boundary.hpp"
#include "fc/chains.hpp"
#include "fc/chords.hpp"
#include "fc/diagram.hpp"
#include "fc/integrability.hpp"
#include "fc/noncrossing.hpp"
#include "fc/paths.hpp"
#include "oracle.hpp"

using namespace fc;

namespace {

constexpr std::uint64_t kSeed = 20240607;

// Runtime limits in seconds.
constexpr double kCountingLimit = 5.0;
constexpr double kAlgebraLimit = 60.0;
constexpr double kIntegrabilityLimit = 30.0;

// Exact equality for every check below.
constexpr int kTolerance = 0;

class Checks {
 public:
  void expect(bool ok, const std::string& what) {
    ++total_;
    if (!ok) failures_.push_back(what);
  }
  template <class A, class B>
  void eq(const A& a, const B& b, const std::string& what) {
    std::ostringstream s;
    s << what << " (got " << a << ", want " << b << ")";
    expect(a == b, s.str());
  }
  void guard(const std::string& what, const std::function<void()>& f) {
    try {
      f();
    } catch (const std::exception& e) {
      expect(false, what + " threw " + e.what());
    }
  }
  int total() const { return total_; }
  const std::vector<std::string>& failures() const { return failures_; }

 private:
  int total_ = 0;
  std::vector<std::string> failures_;
};

void counting(Checks& c) {
  for (int r = 1; r <= 3; ++r)
    for (int n = 0; n <= 5 && r * n <= 10; ++n)
      c.eq(fuss_catalan(n, r), BigInt(oracle::dyck_words(n, r).size()),
           "fuss_catalan(" + std::to_string(n) + "," + std::to_string(r) + ") vs brute force");
  c.eq(enumerate_ncp(3).size(), 5u, "|NC_3|");
  c.eq(enumerate_chains(3, 2).size(), 12u, "|NC_3^(2)|");
  c.eq(enumerate_snc(4, 1).size(), 6u, "|SNC_4| (epsilon 1)");
  c.eq(enumerate_snc(5, 0).size(), 10u, "|SNC_5|");
  c.eq(check_snc_recurrences(10), 0, "SNC recurrences up to n = 10, first failing n");
  c.eq(count_B(2, 2), BigInt(3), "B_2^(2)");
  c.eq(count_B(3, 2), BigInt(6), "B_3^(2)");
  c.eq(count_B(4, 2), BigInt(17), "B_4^(2)");
  c.eq(enumerate_primed(3).size(), 8u, "|SNC'_3|");
  for (int n = 1; n <= 8; ++n)
    c.eq(enumerate_primed(n).size(), std::size_t{1} << n, "|SNC'_" + std::to_string(n) + "| = 2^n");
  c.eq(count_VK(2, 2).V_direct, BigInt(9), "V_2^(2)");
  std::set<std::vector<std::pair<int, int>>> tilings;
  for (const auto& ch : enumerate_chains(3, 2)) {
    auto a = build_tiling(ch).anchors;
    std::sort(a.begin(), a.end());
    tilings.insert(a);
  }
  c.eq(tilings.size(), 12u, "cover-exclusive tilings over (U^2R^2)^3");
  c.eq(base_path(3, 2), std::string("UURRUURRUURR"), "lowest path");
}

void bijections(Checks& c) {
  for (int r = 1; r <= 3; ++r)
    for (int n = 1; n <= 4; ++n)
      for (const auto& p : enumerate_paths(n, r)) {
        c.expect(tableau_to_path(path_to_tableau(p)) == p, "path<->tableau " + p.word());
        c.expect(gen_chord_to_path(path_to_gen_chord(p)) == p, "path<->generalized chord " + p.word());
      }
  for (int n = 1; n <= 4; ++n)
    for (const auto& p : enumerate_ncp(n)) c.expect(psi_inv(psi(p)) == p, "Psi round trip " + p.to_string());
  for (int r = 1; r <= 3; ++r)
    for (int n = 1; n <= 4; ++n)
      for (const auto& ch : enumerate_chains(n, r)) {
        c.expect(psi_r_inv(psi_r(ch), r) == ch, "Psi^(r) round trip " + ch.to_string());
        c.expect(kappa_inv(kappa(ch)) == ch, "kappa round trip " + ch.to_string());
      }
  for (int r = 1; r <= 2; ++r)
    for (int n = 1; n <= 4; ++n)
      for (const auto& pc : enumerate_primed_chains(n, r))
        c.expect(chord_to_primed_chain(primed_chain_to_chord(pc), r) == pc, "SNC' <-> 2-SC " + pc.to_string());
  c.eq(jdt_rotate(RDyckPath("URURRR", 2)).word(), std::string("URRURR"), "xi(URURRR)");
  c.eq(kreweras(NcPartition::parse("136/2/4/5/78")).to_string(), std::string("17/23/456/8"), "rho(136/2/4/5/78)");
  c.eq(matching_to_word(psi(NcPartition::parse("12/3/4"))), std::string("URUURURR"), "Psi(12/3/4)");
  c.eq(kappa(RChain::parse("[1/2/3/4;14/23;1234]")).word(), expand_word("URU^2R^2UR^9"), "kappa(1/2/3/4;14/23;1234)");
  c.eq(kappa_inv(RDyckPath(expand_word("URU^2R^8"), 3)).to_string(), std::string("[1/2/3;13/2;123]"),
       "kappa^-1(URU^2R^8)");
  const auto g0 = generator_G(0, PrimedPartition::parse("13456/2/7"));
  c.expect(g0 == PrimedSum::single(PrimedPartition::parse("1'/2/3456'/7"), LaurentPoly::constant(1)),
           "g_0(13456/2/7) = 1'/2/3456'/7");
}

void structure_maps(Checks& c) {
  for (int n = 1; n <= 6; ++n)
    for (const auto& p : enumerate_ncp(n)) {
      c.expect(kreweras_pow(p, 2 * n) == p, "rho^2n " + p.to_string());
      c.expect(kreweras(p).rank() + p.rank() == n - 1, "rank complement " + p.to_string());
    }
  for (int r = 1; r <= 2; ++r)
    for (int n = 1; n <= 3; ++n)
      for (const auto& ch : enumerate_chains(n, r)) {
        const RDyckPath p = kappa(ch);
        RDyckPath x = p;
        for (int k = 0; k <= r; ++k) x = jdt_rotate(x);
        const RDyckPath rho2 = kappa(extended_kreweras_pow(ch, 2));
        c.expect(x == rho2, "xi^(r+1) = rho^2 at " + ch.to_string());
        c.expect(gen_chord_to_path(rotate_tilde(path_to_gen_chord(p), r + 1)) == rho2,
                 "sigma~^(r+1) = rho^2 at " + ch.to_string());
        c.expect(phi(ch) == rotate_sigma_r(psi_r(ch), r), "Phi = sigma^(r) Psi^(r) at " + ch.to_string());
        c.expect(phi(ch) == path_to_matching(tiling_top_path(build_tiling(ch))), "Phi = lambda at " + ch.to_string());
      }
  for (int n = 1; n <= 5; ++n)
    for (const auto& p : enumerate_ncp(n)) {
      const auto lhs = rotate_sigma(path_to_matching(kappa(RChain::constant(p, 1)).word()));
      const auto rhs = path_to_matching(kappa(RChain::constant(kreweras(p), 1)).word());
      c.expect(lhs == rhs, "sigma kappa = kappa rho at " + p.to_string());
    }
}

void algebra(Checks& c) {
  for (auto [m, r] : {std::pair{3, 2}, std::pair{4, 2}}) {
    const auto rep = verify_relations(m, r);
    c.expect(rep.ok() && rep.checked > 0, "relations at m=" + std::to_string(m) + " r=" + std::to_string(r) +
                                              (rep.ok() ? "" : ": " + rep.failures.front()));
  }
  c.expect(word_product("E2^2,E3^1,E1^2,E2^2", 4, 2, Boundary::none) ==
               word_product("E2^2,E3^2,E1^1,E2^2", 4, 2, Boundary::none),
           "E2^2 E3^1 E1^2 E2^2 = E2^2 E3^2 E1^1 E2^2");
  for (int r = 1; r <= 8; ++r)
    for (int m = 1; r * m <= 8; ++m)
      c.eq(dimension(m, r, Boundary::none), fuss_catalan(m, r),
           "dim(m=" + std::to_string(m) + ",r=" + std::to_string(r) + ",none) = fuss_catalan");
  for (int r = 1; r <= 2; ++r)
    for (int m = 1; m <= 3; ++m) {
      const std::string at = "(m=" + std::to_string(m) + ",r=" + std::to_string(r) + ")";
      c.eq(dimension(m, r, Boundary::right), count_B(2 * m, r), "dim" + at + " right = B_2m");
      c.eq(BigInt(enumerate_snc_chains(2 * m, r).size()), count_B(2 * m, r), "B_2m by symmetric chains " + at);
      c.eq(dimension(m, r, Boundary::both), count_VK(m, r).K, "dim" + at + " both = K");
      c.eq(BigInt(closure_basis(m, r, Boundary::both).size()), dimension(m, r, Boundary::both),
           "dim" + at + " both, closure vs enumeration");
      c.eq(count_gamma(m, r), count_B(m + 1, r), "|Gamma|" + at + " = B_m+1");
    }
}

void isomorphisms(Checks& c) {
  auto add = [&](const IsoReport& rep, const std::string& what) {
    c.expect(rep.ok() && rep.checked > 0, what + (rep.ok() ? "" : ": " + rep.failures.front()));
  };
  for (int n = 1; n <= 4; ++n) add(verify_iso_tl(n), "F_i/e_i at n=" + std::to_string(n));
  for (int n = 2; n <= 3; ++n) add(verify_iso_fc(n, 2), "F_i^(s)/E_i^(s) at n=" + std::to_string(n) + " r=2");
  for (int n = 1; n <= 5; ++n) add(verify_iso_1b(n), "one-boundary G_i at n=" + std::to_string(n));
  for (int r = 1; r <= 2; ++r)
    for (int n = 1; n <= 4; ++n)
      add(verify_iso_2b(n, r), "two-boundary G_i^(s) at n=" + std::to_string(n) + " r=" + std::to_string(r));
}

void integrability(Checks& c) {
  auto add = [&](const VerifyReport& rep, int want) {
    c.expect(rep.ok() && static_cast<int>(rep.samples.size()) >= want,
             rep.name + " " + std::to_string(rep.passed()) + "/" + std::to_string(rep.samples.size()));
  };
  add(verify_normalization(50, kSeed), 50);
  add(verify_ybe(100, kSeed), 100);
  for (KBranch b : {KBranch::generic_plus, KBranch::generic_minus, KBranch::degenerate_e, KBranch::degenerate_o}) {
    add(verify_re(50, kSeed, b), 50);
    add(verify_conditions(50, kSeed, b), 50);
  }
}

struct Criterion {
  int id;
  const char* name;
  double limit;
  void (*run)(Checks&);
};

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> all = {
      {1, "counting", kCountingLimit, counting},       {2, "bijections", 0, bijections},
      {3, "structure maps", 0, structure_maps},        {4, "algebra", kAlgebraLimit, algebra},
      {5, "isomorphisms", 0, isomorphisms},            {6, "integrability", kIntegrabilityLimit, integrability},
  };
  std::set<int> only;
  for (int k = 1; k < argc; ++k) only.insert(std::stoi(argv[k]));
  static_assert(kTolerance == 0);

  bool all_ok = true;
  for (const auto& cr : all) {
    if (!only.empty() && !only.count(cr.id)) continue;
    Checks checks;
    const auto t0 = std::chrono::steady_clock::now();
    checks.guard(cr.name, [&] { cr.run(checks); });
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (cr.limit > 0 && secs > cr.limit) {
      std::ostringstream s;
      s << "runtime " << secs << "s over " << cr.limit << "s";
      checks.expect(false, s.str());
    }
    const bool ok = checks.failures().empty();
    all_ok = all_ok && ok;
    std::printf("criterion %d %s: %s (%d checks, %zu failed, %.2fs)\n", cr.id, cr.name, ok ? "PASS" : "FAIL",
                checks.total(), checks.failures().size(), secs);
    for (const auto& f : checks.failures()) std::printf("    failed: %s\n", f.c_str());
  }
  return all_ok ? 0 : 1;
}
