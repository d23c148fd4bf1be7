#include "ek/charfn.hpp"

#include <cmath>
#include <numeric>
#include <optional>
#include <string>

#include "ek/analytic.hpp"
#include "ek/errors.hpp"

namespace ek {
namespace {

struct SimpsonPanel {
  double a, b, fa, fm, fb, whole;
};

double simpson(double a, double b, double fa, double fm, double fb) {
  return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

double refine(const std::function<double(double)>& f, const SimpsonPanel& s, double eps,
              int depth) {
  const double m = 0.5 * (s.a + s.b);
  const double lm = 0.5 * (s.a + m);
  const double rm = 0.5 * (m + s.b);
  const double flm = f(lm);
  const double frm = f(rm);
  const double left = simpson(s.a, m, s.fa, flm, s.fm);
  const double right = simpson(m, s.b, s.fm, frm, s.fb);
  const double delta = left + right - s.whole;
  if (depth <= 0 || std::abs(delta) <= 15.0 * eps)
    return left + right + delta / 15.0;
  return refine(f, {s.a, m, s.fa, flm, s.fm, left}, 0.5 * eps, depth - 1) +
         refine(f, {m, s.b, s.fm, frm, s.fb, right}, 0.5 * eps, depth - 1);
}

} // namespace

std::uint64_t GenPolynomial::mass() const noexcept {
  return std::accumulate(coeffs.begin(), coeffs.end(), std::uint64_t{0});
}

GenPolynomial gen_polynomial(const JointHistogram& h, int k) {
  if (k < 1 || k >= static_cast<int>(JointHistogram::dim))
    throw PreconditionError("k must lie in [1, 63], got " + std::to_string(k));
  GenPolynomial poly{k, h.x(), h.w(), std::vector<std::uint64_t>(JointHistogram::dim, 0)};
  for (std::size_t l = 0; l < JointHistogram::dim; ++l)
    for (std::size_t m = 0; m < JointHistogram::dim; ++m)
      poly.coeffs[l] += h.at(static_cast<std::size_t>(k), l, m);
  while (poly.coeffs.size() > 1 && poly.coeffs.back() == 0)
    poly.coeffs.pop_back();
  return poly;
}

Complex eval(const GenPolynomial& poly, Complex z) {
  Complex acc = 0.0;
  for (auto it = poly.coeffs.rbegin(); it != poly.coeffs.rend(); ++it)
    acc = acc * z + static_cast<double>(*it);
  return acc;
}

std::vector<double> coeffs_by_roots_of_unity(const GenPolynomial& poly, int L) {
  if (L <= static_cast<int>(poly.degree()))
    throw AliasingError("need more than deg f = " + std::to_string(poly.degree()) +
                        " roots of unity, got " + std::to_string(L));
  std::vector<Complex> values(static_cast<std::size_t>(L));
  for (int j = 0; j < L; ++j)
    values[j] = eval(poly, std::polar(1.0, 2.0 * pi * j / L));
  std::vector<double> out(static_cast<std::size_t>(L));
  for (int l = 0; l < L; ++l) {
    Complex sum = 0.0;
    for (int j = 0; j < L; ++j)
      sum += values[j] * std::polar(1.0, -2.0 * pi * ((static_cast<long>(j) * l) % L) / L);
    out[l] = sum.real() / L;
  }
  return out;
}

std::vector<CharFnSample> charfn_samples(const GenPolynomial& poly, double T,
                                         std::span<const double> ts, bool with_xi,
                                         const EulerProductConfig& cfg) {
  if (!(T > 0.0))
    throw DomainError("characteristic function samples need T > 0");
  const double root = std::sqrt(T);
  for (const double t : ts)
    if (std::abs(t) > root * (1.0 + 1e-12))
      throw PreconditionError("sample point |t| exceeds sqrt T");

  const double pi_k = static_cast<double>(poly.mass());
  const double log_log_w = iterated_log2(static_cast<double>(poly.w));
  const double llx = iterated_log2(static_cast<double>(poly.x));
  std::optional<XiEvaluator> xi_eval;
  if (with_xi)
    xi_eval.emplace(poly.x, poly.w, poly.k, cfg);
  const double r = (poly.k - 1) / llx;

  std::vector<CharFnSample> out;
  out.reserve(ts.size());
  for (const double t : ts) {
    const Complex z = std::polar(1.0, t / root);
    CharFnSample s;
    s.t = t;
    s.T = T;
    const Complex centring = std::polar(1.0, -t * root);
    s.exact = centring * eval(poly, z);
    Complex main = h_k(r, z, cfg);
    if (xi_eval)
      main += r * (*xi_eval)(z) / llx;
    // (log w)^{z - 1}, with the same centring as the exact side
    s.predicted = pi_k * centring * std::exp((z - 1.0) * log_log_w) * main;
    out.push_back(s);
  }
  return out;
}

double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                        double rel_tol, int max_depth) {
  // Coarse composite estimate sets the absolute target for the refinement.
  constexpr int panels = 16;
  const double width = (b - a) / panels;
  std::vector<SimpsonPanel> parts;
  double coarse = 0.0;
  double f_left = f(a);
  for (int i = 0; i < panels; ++i) {
    const double lo = a + i * width;
    const double hi = i + 1 == panels ? b : lo + width;
    const double fm = f(0.5 * (lo + hi));
    const double fr = f(hi);
    parts.push_back({lo, hi, f_left, fm, fr, simpson(lo, hi, f_left, fm, fr)});
    coarse += std::abs(parts.back().whole);
    f_left = fr;
  }
  const double eps = std::max(rel_tol * coarse, 1e-300) / panels;
  double total = 0.0;
  for (const auto& part : parts)
    total += refine(f, part, eps, max_depth);
  return total;
}

double berry_esseen_integral(const GenPolynomial& poly, double T, std::uint64_t pi_k) {
  if (pi_k == 0)
    throw EmptyClassError("Berry-Esseen integral on an empty class");
  if (!(T > 0.0))
    throw DomainError("Berry-Esseen integral needs T > 0");
  const double root = std::sqrt(T);
  const double mass = static_cast<double>(pi_k);
  const auto integrand = [&](double t) {
    const Complex exact = std::polar(1.0, -t * root) * eval(poly, std::polar(1.0, t / root));
    return std::abs(exact - mass * std::exp(-0.5 * t * t)) / t;
  };
  if (root <= berry_esseen_epsilon)
    return 0.0;
  return 2.0 * adaptive_simpson(integrand, berry_esseen_epsilon, root);
}

} // namespace ek
