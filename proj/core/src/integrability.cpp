#include "fc/integrability.hpp"

#include <stdexcept>

namespace fc {

namespace {

QuadExt q(const Rational& a, const Rational& d) { return QuadExt::scalar(a, d); }

template <class T>
AlgebraElement<T> identity_element(int m, Boundary b, const T& one) {
  return AlgebraElement<T>::basis(Diagram::identity(m, 2, b), one);
}

template <class T>
AlgebraElement<T> spectral(int i, int m, Boundary b, const T& one, const T& c1, const T& c2) {
  AlgebraElement<T> x = identity_element(m, b, one);
  x.add(generator_E(i, 1, m, 2, b), c1);
  x.add(generator_E(i, 2, m, 2, b), c2);
  return x;
}

std::string str(const Rational& x) { return to_string(x); }

}  // namespace

Rational r1(const Rational& w, const Rational& tau) {
  if (tau == 0) throw DivisionByZero("tau must be nonzero");
  return (w - 1) / tau;
}

Rational r2(const Rational& w, const Rational& tau) {
  Rational den = tau * tau - 1 - w;
  if (den == 0) throw DivisionByZero("pole of r2");
  return w * (w - 1) / den;
}

RationalElement build_R(int i, const Rational& w, const Rational& tau, int m, Boundary b) {
  return spectral<Rational>(i, m, b, Rational(1), r1(w, tau), r2(w, tau));
}

std::string to_string(KBranch b) {
  switch (b) {
    case KBranch::generic_plus:
      return "generic+";
    case KBranch::generic_minus:
      return "generic-";
    case KBranch::degenerate_e:
      return "degenerate-e";
    case KBranch::degenerate_o:
      return "degenerate-o";
  }
  return "";
}

KBranch parse_branch(std::string_view s) {
  for (auto b : {KBranch::generic_plus, KBranch::generic_minus, KBranch::degenerate_e, KBranch::degenerate_o})
    if (s == to_string(b)) return b;
  throw DomainError("unknown branch '" + std::string(s) + "'");
}

Rational discriminant(const KParams& p) {
  const auto &t = p.tau, &te = p.tau_e, &to = p.tau_o;
  Rational den = (t * t - 1) * te * to * (t * te - to);
  if (den == 0) throw DivisionByZero("discriminant denominator vanishes");
  return (t * to - te) / den;
}

Rational c2_constant(const KParams& p) {
  Rational den = p.tau * p.tau_o - p.tau_e;
  if (den == 0) throw DivisionByZero("C2 denominator vanishes");
  return -(p.tau * p.tau - 1) / den;
}

void check_branch(const KParams& p) {
  const auto &t = p.tau, &te = p.tau_e, &to = p.tau_o;
  if (t == 0 || te == 0 || to == 0) throw DomainError("loop weights must be nonzero");
  switch (p.branch) {
    case KBranch::generic_plus:
    case KBranch::generic_minus:
      if (t * te == to || t * to == te || t * t == 1) throw DomainError("parameters are not generic");
      break;
    case KBranch::degenerate_e:
      if (t * te != to) throw DomainError("degenerate-e needs tau tau_e = tau_o");
      break;
    case KBranch::degenerate_o:
      if (t * to != te) throw DomainError("degenerate-o needs tau tau_o = tau_e");
      break;
  }
}

KCoeffs k_coeffs_shared_degenerate(const Rational& w, const KParams& p) {
  if (p.tau_e == 0 || p.tau_o == 0 || w == 0) throw DivisionByZero("zero weight or spectral parameter");
  const Rational w2 = w * w;
  return {q(-(w2 - 1) / (p.tau_e * w2), 0), q(p.tau * (w2 - 1) / (p.tau_o * p.tau_e * w2), 0)};
}

KCoeffs k_coeffs(const Rational& w, const KParams& p) {
  check_branch(p);
  if (w == 0) throw DivisionByZero("spectral parameter must be nonzero");
  const auto &t = p.tau, &te = p.tau_e, &to = p.tau_o;
  if (p.branch == KBranch::degenerate_e || p.branch == KBranch::degenerate_o) {
    Rational d = 0;
    Rational w2 = w * w;
    if (p.branch == KBranch::degenerate_o) return {q(-(w2 - 1) / (te * w2), d), q(0, d)};
    return {q(-(w2 - 1) / (te * w2), d), q(t * (w2 - 1) / (to * te * w2), d)};
  }
  const Rational d = discriminant(p);
  const QuadExt c1 = p.branch == KBranch::generic_plus ? QuadExt::generator(d) : -QuadExt::generator(d);
  const QuadExt c2 = q(c2_constant(p), d);
  const QuadExt W = q(w, d), one = q(1, d);
  const QuadExt den = W * (one - q(2 * to * te * w, d) * c1 * c2 + q(t * te * te * w, d) * c1 * c2 +
                           q(te * w * w, d) * c2);
  const QuadExt w2m1 = q(w * w - 1, d);
  return {-(c2 * w2m1 * (W - q(to, d) * c1)) / den, -(q(t, d) * c1 * c2 * w2m1) / den};
}

QuadElement build_K(const Rational& w, const KParams& p) {
  const KCoeffs k = k_coeffs(w, p);
  return spectral<QuadExt>(2, 2, Boundary::right, q(1, k.k1.d()), k.k1, k.k2);
}

Weights<Rational> rational_weights(const Rational& tau, const Rational& tau_e, const Rational& tau_o,
                                   const Rational& tau0_e, const Rational& tau0_o, const Rational& theta) {
  return {Rational(1), tau, tau_e, tau_o, tau0_e, tau0_o, theta};
}

Weights<QuadExt> lift(const Weights<Rational>& w, const Rational& d) {
  return {q(w.one, d), q(w.tau, d), q(w.tau_e, d), q(w.tau_o, d), q(w.tau0_e, d), q(w.tau0_o, d), q(w.theta, d)};
}

QuadElement lift(const RationalElement& x, const Rational& d) {
  QuadElement out;
  for (const auto& [dg, c] : x.terms()) out.add(dg, q(c, d));
  return out;
}

int VerifyReport::passed() const {
  int k = 0;
  for (const auto& s : samples) k += s.pass;
  return k;
}

Rational RationalSampler::next() {
  while (true) {
    long num = static_cast<long>(gen_() % 25) - 12;
    long den = static_cast<long>(gen_() % 7) + 1;
    if (num != 0) return Rational(num, den);
  }
}

namespace {

// Draws until the callback accepts the sample; the callback throws on inadmissible parameters.
template <class F>
void sample_loop(VerifyReport& rep, int samples, std::uint64_t seed, F&& one_sample) {
  RationalSampler rng(seed);
  int guard = 0;
  while (static_cast<int>(rep.samples.size()) < samples) {
    if (++guard > 100 * samples + 1000) throw std::runtime_error("could not draw admissible samples");
    SampleRecord rec;
    rec.index = static_cast<int>(rep.samples.size());
    try {
      rec.pass = one_sample(rng, rec);
    } catch (const DivisionByZero&) {
      continue;
    } catch (const DomainError&) {
      continue;
    }
    rep.samples.push_back(std::move(rec));
  }
}

KParams draw_k_params(RationalSampler& rng, KBranch branch) {
  KParams p;
  p.branch = branch;
  p.tau = rng.next();
  p.tau_e = rng.next();
  p.tau_o = rng.next();
  if (branch == KBranch::degenerate_e) p.tau_o = p.tau * p.tau_e;
  if (branch == KBranch::degenerate_o) p.tau_e = p.tau * p.tau_o;
  check_branch(p);
  return p;
}

void record_k(SampleRecord& rec, const KParams& p) {
  rec.params.push_back({"tau", str(p.tau)});
  rec.params.push_back({"tau_e", str(p.tau_e)});
  rec.params.push_back({"tau_o", str(p.tau_o)});
}

}  // namespace

VerifyReport verify_normalization(int samples, std::uint64_t seed) {
  VerifyReport rep{"normalization", {}};
  sample_loop(rep, samples, seed, [](RationalSampler& rng, SampleRecord& rec) {
    const Rational w = rng.next();
    KParams kp = draw_k_params(rng, static_cast<KBranch>(rec.index % 4));
    const Rational tau = kp.tau;
    rec.params = {{"w", str(w)}, {"branch", to_string(kp.branch)}};
    record_k(rec, kp);
    const auto W = rational_weights(tau);
    const auto one = identity_element<Rational>(3, Boundary::none, Rational(1));
    bool ok = build_R(1, Rational(1), tau, 3) == one;
    ok = ok && build_R(1, w, tau, 3).times(build_R(1, 1 / w, tau, 3), W) == one;
    const KCoeffs k1 = k_coeffs(Rational(1), kp);
    const Rational d = k1.k1.d();
    const auto WK = lift(rational_weights(kp.tau, kp.tau_e, kp.tau_o), d);
    const auto oneK = identity_element<QuadExt>(2, Boundary::right, q(1, d));
    ok = ok && build_K(Rational(1), kp) == oneK;
    ok = ok && build_K(w, kp).times(build_K(1 / w, kp), WK) == oneK;
    return ok;
  });
  return rep;
}

VerifyReport verify_ybe(int samples, std::uint64_t seed) {
  VerifyReport rep{"ybe", {}};
  sample_loop(rep, samples, seed, [](RationalSampler& rng, SampleRecord& rec) {
    const Rational w = rng.next(), tau = rng.next();
    // every tenth sample sits on the diagonal w = z
    const Rational z = rec.index % 10 == 0 ? w : rng.next();
    if (tau * tau == 1) throw DomainError("tau^2 = 1");
    rec.params = {{"w", str(w)}, {"z", str(z)}, {"tau", str(tau)}};
    const auto W = rational_weights(tau);
    auto R = [&](int i, const Rational& x) { return build_R(i, x, tau, 3); };
    const auto lhs = R(1, w).times(R(2, w * z), W).times(R(1, z), W);
    const auto rhs = R(2, z).times(R(1, w * z), W).times(R(2, w), W);
    return lhs == rhs;
  });
  return rep;
}

VerifyReport verify_re(int samples, std::uint64_t seed, KBranch branch) {
  return verify_re_with(samples, seed, branch, k_coeffs);
}

VerifyReport verify_re_with(int samples, std::uint64_t seed, KBranch branch, const KFamily& coeffs) {
  VerifyReport rep{"re " + to_string(branch), {}};
  sample_loop(rep, samples, seed, [&](RationalSampler& rng, SampleRecord& rec) {
    const KParams kp = draw_k_params(rng, branch);
    const Rational w = rng.next(), z = rng.next();
    rec.params = {{"w", str(w)}, {"z", str(z)}, {"branch", to_string(branch)}};
    record_k(rec, kp);
    const auto K = [&](const Rational& x) {
      const KCoeffs k = coeffs(x, kp);
      return spectral<QuadExt>(2, 2, Boundary::right, q(1, k.k1.d()), k.k1, k.k2);
    };
    const Rational d = coeffs(w, kp).k1.d();
    const auto W = lift(rational_weights(kp.tau, kp.tau_e, kp.tau_o), d);
    const auto R = [&](const Rational& x) { return lift(build_R(1, x, kp.tau, 2, Boundary::right), d); };
    const auto lhs = K(w).times(R(1 / (w * z)), W).times(K(z), W).times(R(w / z), W);
    const auto rhs = R(w / z).times(K(z), W).times(R(1 / (w * z)), W).times(K(w), W);
    // equality of both components of every coefficient
    return lhs == rhs;
  });
  return rep;
}

VerifyReport verify_conditions(int samples, std::uint64_t seed, KBranch branch) {
  VerifyReport rep{"conditions " + to_string(branch), {}};
  sample_loop(rep, samples, seed, [branch](RationalSampler& rng, SampleRecord& rec) {
    const KParams kp = draw_k_params(rng, branch);
    const Rational w = rng.next(), z = rng.next();
    rec.params = {{"w", str(w)}, {"z", str(z)}, {"branch", to_string(branch)}};
    record_k(rec, kp);
    const KCoeffs kw = k_coeffs(w, kp), kz = k_coeffs(z, kp), kiw = k_coeffs(1 / w, kp);
    const Rational d = kw.k1.d();
    const QuadExt t = q(kp.tau, d), te = q(kp.tau_e, d), to = q(kp.tau_o, d);
    const QuadExt r1a = q(r1(w / z, kp.tau), d), r1b = q(r1(1 / (z * w), kp.tau), d);
    const QuadExt r2a = q(r2(w / z, kp.tau), d), r2b = q(r2(1 / (z * w), kp.tau), d);
    const QuadExt &k1w = kw.k1, &k2w = kw.k2, &k1z = kz.k1, &k2z = kz.k2;
    const QuadExt c11 = r1a * k2w + r1b * k2w + t * r1a * r1b * k2w + te * r1a * k1z * k2w + te * r1b * k1z * k2w +
                        t * te * r1a * r1b * k1z * k2w + r1a * k2z - r1b * k2z + te * r1a * k1w * k2z -
                        te * r1b * k1w * k2z + te * te * r1a * k2w * k2z + to * te * r1a * r1b * k2w * k2z;
    const QuadExt c12 = r2a * k1w + t * r1b * r2a * k1w + r2b * k1w + t * r1a * r2b * k1w + t * t * r2a * r2b * k1w +
                        r2a * k1z + t * r1b * r2a * k1z - r2b * k1z - t * r1a * r2b * k1z + te * r2a * k1w * k1z +
                        t * te * r1b * r2a * k1w * k1z + t * to * r2a * r2b * k1w * k1z + to * r1b * r2a * k2z -
                        to * r1a * r2b * k2z + to * te * r1b * r2a * k1w * k2z + to * to * r2a * r2b * k1w * k2z;
    const QuadExt c22 = r2a * k2w + t * r1b * r2a * k2w + r2b * k2w + t * r1a * r2b * k2w + t * t * r2a * r2b * k2w +
                        te * r2a * k1z * k2w + t * te * r1b * r2a * k1z * k2w + t * to * r2a * r2b * k1z * k2w +
                        r2a * k2z - r2b * k2z + te * r2a * k1w * k2z + te * te * r2a * k2w * k2z +
                        to * te * r1b * r2a * k2w * k2z + to * to * r2a * r2b * k2w * k2z;
    const QuadExt c212 = r2b * k1z * k2w + t * r1a * r2b * k1z * k2w - r2b * k1w * k2z + to * r1a * r2b * k2w * k2z;
    const QuadExt n1 = k1w + kiw.k1 + te * k1w * kiw.k1;
    const QuadExt n2 = k2w + te * k1w * kiw.k2 + kiw.k2 + te * kiw.k1 * k2w + te * te * k2w * kiw.k2;
    bool ok = c11.is_zero() && c12.is_zero() && c22.is_zero() && c212.is_zero() && n1.is_zero() && n2.is_zero();
    if (branch == KBranch::generic_plus || branch == KBranch::generic_minus) {
      const QuadExt c1 = branch == KBranch::generic_plus ? QuadExt::generator(d) : -QuadExt::generator(d);
      const QuadExt sep = q(w, d) * k2w - c1 * (t * k1w + to * k2w);
      ok = ok && sep.is_zero();
    } else if (branch == KBranch::degenerate_e) {
      ok = ok && (t * k1w + to * k2w).is_zero();
    } else {
      ok = ok && k2w.is_zero();
    }
    return ok;
  });
  return rep;
}

bool check_re_left(const Rational& w, const Rational& z, const Rational& tau, const Rational& tau0_e,
                   const Rational& tau0_o, const LeftCoeffs& k) {
  const auto W = rational_weights(tau, 1, 1, tau0_e, tau0_o);
  const auto K = [&](const Rational& x) {
    auto [a, b] = k(x);
    return spectral<Rational>(0, 2, Boundary::both, Rational(1), a, b);
  };
  const auto R = [&](const Rational& x) { return build_R(1, x, tau, 2, Boundary::both); };
  const auto lhs = K(z).times(R(z * w), W).times(K(w), W).times(R(w / z), W);
  const auto rhs = R(w / z).times(K(w), W).times(R(w * z), W).times(K(z), W);
  return lhs == rhs;
}

VerifyReport verify_re_left(int samples, std::uint64_t seed,
                            const std::function<LeftCoeffs(const Rational&, const Rational&, const Rational&)>& family) {
  VerifyReport rep{"re-left", {}};
  sample_loop(rep, samples, seed, [&family](RationalSampler& rng, SampleRecord& rec) {
    const Rational tau = rng.next(), t0e = rng.next(), t0o = rng.next(), w = rng.next(), z = rng.next();
    rec.params = {{"w", str(w)}, {"z", str(z)}, {"tau", str(tau)}, {"tau0_e", str(t0e)}, {"tau0_o", str(t0o)}};
    return check_re_left(w, z, tau, t0e, t0o, family(tau, t0e, t0o));
  });
  return rep;
}

}  // namespace fc
