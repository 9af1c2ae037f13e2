#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fc/diagram.hpp"
#include "fc/rings.hpp"

namespace fc {

using RationalElement = AlgebraElement<Rational>;
using QuadElement = AlgebraElement<QuadExt>;

Rational r1(const Rational& w, const Rational& tau);
// Throws DivisionByZero at the pole tau^2 - 1 = w.
Rational r2(const Rational& w, const Rational& tau);

// 1 + r1 E_i^(1) + r2 E_i^(2) in the r = 2 algebra on m bundles.
RationalElement build_R(int i, const Rational& w, const Rational& tau, int m, Boundary b = Boundary::none);

enum class KBranch { generic_plus, generic_minus, degenerate_e, degenerate_o };
std::string to_string(KBranch b);
KBranch parse_branch(std::string_view s);

struct KParams {
  Rational tau, tau_e, tau_o;
  KBranch branch = KBranch::generic_plus;
};

// C1^2 for the generic branch.
Rational discriminant(const KParams& p);
Rational c2_constant(const KParams& p);
// Throws DomainError when the parameters violate the branch conditions.
void check_branch(const KParams& p);

struct KCoeffs {
  QuadExt k1, k2;
};
// degenerate-o carries k2 = 0; the shared closed form below holds only for degenerate-e.
KCoeffs k_coeffs(const Rational& w, const KParams& p);
KCoeffs k_coeffs_shared_degenerate(const Rational& w, const KParams& p);
// 1 + k1 E_2^(1) + k2 E_2^(2) on two bundles with the right wall.
QuadElement build_K(const Rational& w, const KParams& p);

Weights<Rational> rational_weights(const Rational& tau, const Rational& tau_e = 1, const Rational& tau_o = 1,
                                   const Rational& tau0_e = 1, const Rational& tau0_o = 1,
                                   const Rational& theta = 1);
Weights<QuadExt> lift(const Weights<Rational>& w, const Rational& d);
QuadElement lift(const RationalElement& x, const Rational& d);

struct SampleRecord {
  int index = 0;
  std::vector<std::pair<std::string, std::string>> params;
  bool pass = false;
};

struct VerifyReport {
  std::string name;
  std::vector<SampleRecord> samples;
  int passed() const;
  bool ok() const { return !samples.empty() && passed() == static_cast<int>(samples.size()); }
};

// Seeded source of small nonzero rationals.
class RationalSampler {
 public:
  explicit RationalSampler(std::uint64_t seed) : gen_(seed) {}
  Rational next();

 private:
  std::mt19937_64 gen_;
};

VerifyReport verify_normalization(int samples, std::uint64_t seed);
VerifyReport verify_ybe(int samples, std::uint64_t seed);
VerifyReport verify_re(int samples, std::uint64_t seed, KBranch branch);
using KFamily = std::function<KCoeffs(const Rational& w, const KParams& p)>;
VerifyReport verify_re_with(int samples, std::uint64_t seed, KBranch branch, const KFamily& coeffs);
// Scalar identities on the coefficient functions: four coefficient equations, two normalization
// equations and the separation constant.
VerifyReport verify_conditions(int samples, std::uint64_t seed, KBranch branch);

// Left-wall reflection equation for K_0(w) = 1 + k1(w) E_0^(1) + k2(w) E_0^(2) on two bundles.
using LeftCoeffs = std::function<std::pair<Rational, Rational>(const Rational& w)>;
bool check_re_left(const Rational& w, const Rational& z, const Rational& tau, const Rational& tau0_e,
                   const Rational& tau0_o, const LeftCoeffs& k);
VerifyReport verify_re_left(int samples, std::uint64_t seed, const std::function<LeftCoeffs(
                                                                const Rational& tau, const Rational& tau0_e,
                                                                const Rational& tau0_o)>& family);

}  // namespace fc
