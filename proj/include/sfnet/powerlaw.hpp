#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <vector>

#include "sfnet/error.hpp"
#include "sfnet/rng.hpp"

namespace sfnet {

/// Hurwitz zeta sum_{k>=0} (a+k)^-s via a short series plus Euler-Maclaurin
/// tail corrections. Accurate to ~1e-13 relative for s in (1, 10], a >= 1.
inline double hurwitz_zeta(double s, double a) {
  constexpr int kTerms = 16;
  double sum = 0.0;
  for (int k = 0; k < kTerms; ++k) sum += std::pow(a + k, -s);
  const double big = a + kTerms;
  sum += std::pow(big, 1.0 - s) / (s - 1.0);
  sum += 0.5 * std::pow(big, -s);
  sum += s * std::pow(big, -s - 1.0) / 12.0;
  sum -= s * (s + 1.0) * (s + 2.0) * std::pow(big, -s - 3.0) / 720.0;
  sum += s * (s + 1.0) * (s + 2.0) * (s + 3.0) * (s + 4.0) * std::pow(big, -s - 5.0) / 30240.0;
  return sum;
}

/// Discrete power law p(k) = k^-alpha / zeta(alpha, x_min) on k >= x_min.
/// Sampling is exact inverse-CDF; the CDF table grows lazily and reuses
/// zeta(alpha, k+1) = zeta(alpha, k) - k^-alpha so each new entry costs one pow.
class DiscretePowerLaw {
 public:
  DiscretePowerLaw(double alpha, int x_min)
      : alpha_(alpha), x_min_(x_min), z_(hurwitz_zeta(alpha, x_min)) {
    if (!(alpha > 1.0)) throw ConfigInvalid("power-law exponent must exceed 1");
    if (x_min < 1) throw ConfigInvalid("x_min must be >= 1");
    surv_.push_back(z_ - std::pow(static_cast<double>(x_min_), -alpha_));
    cdf_.push_back(1.0 - surv_.back() / z_);
  }

  double alpha() const { return alpha_; }
  int x_min() const { return x_min_; }

  double log_pmf(int k) const {
    return -alpha_ * std::log(static_cast<double>(k)) - std::log(z_);
  }

  /// P(K <= k) for k >= x_min.
  double cdf(int k) const { return 1.0 - hurwitz_zeta(alpha_, k + 1.0) / z_; }

  int sample(Rng& rng) {
    const double u = rng.unit();
    while (cdf_.back() < u) {
      if (!grow()) break;  // ran into the hard cap; clamp to the table end
    }
    const auto it = std::lower_bound(cdf_.begin(), cdf_.end(), u);
    const std::size_t i = it == cdf_.end() ? cdf_.size() - 1 : static_cast<std::size_t>(it - cdf_.begin());
    return x_min_ + static_cast<int>(i);
  }

 private:
  bool grow() {
    constexpr std::size_t kMaxTable = std::size_t(1) << 26;
    if (cdf_.size() >= kMaxTable) return false;
    const std::size_t chunk = std::max<std::size_t>(64, cdf_.size());
    for (std::size_t c = 0; c < chunk; ++c) {
      const double k = static_cast<double>(x_min_) + static_cast<double>(cdf_.size());
      double s = surv_.back() - std::pow(k, -alpha_);
      if (s < 0.0) s = 0.0;
      surv_.push_back(s);
      cdf_.push_back(1.0 - s / z_);
    }
    return true;
  }

  double alpha_;
  int x_min_;
  double z_;
  std::vector<double> surv_;  // surv_[i] = zeta(alpha, x_min + i + 1)
  std::vector<double> cdf_;   // cdf_[i]  = P(K <= x_min + i)
};

/// Result of fitting a discrete power law to the tail of a degree sequence.
struct TailFit {
  double alpha = 0.0;  // MLE exponent at the selected x_min
  int x_min = 0;       // smallest degree included in the tail
  int n_tail = 0;      // observations >= x_min
  double ks = 0.0;     // Kolmogorov-Smirnov distance of the selected fit
};

namespace detail {

inline double pl_loglik(double alpha, double n_tail, double sum_ln, double x_min) {
  return -n_tail * std::log(hurwitz_zeta(alpha, x_min)) - alpha * sum_ln;
}

/// Golden-section maximization; the discrete power-law log-likelihood is
/// concave in alpha (zeta is log-convex).
inline double mle_alpha(double n_tail, double sum_ln, double x_min) {
  constexpr double kGold = 0.6180339887498949;
  double lo = 1.0 + 1e-6, hi = 8.0;
  double x1 = hi - kGold * (hi - lo);
  double x2 = lo + kGold * (hi - lo);
  double f1 = pl_loglik(x1, n_tail, sum_ln, x_min);
  double f2 = pl_loglik(x2, n_tail, sum_ln, x_min);
  while (hi - lo > 1e-7) {
    if (f1 < f2) {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + kGold * (hi - lo);
      f2 = pl_loglik(x2, n_tail, sum_ln, x_min);
    } else {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - kGold * (hi - lo);
      f1 = pl_loglik(x1, n_tail, sum_ln, x_min);
    }
  }
  return 0.5 * (lo + hi);
}

/// KS distance between the empirical tail CDF and the fitted model, evaluated
/// at the distinct observed tail values. vals must be sorted ascending and
/// vals[idx..] is the tail.
inline double ks_distance(const std::vector<int>& vals, std::size_t idx, double alpha,
                          int x_min) {
  const double n_tail = static_cast<double>(vals.size() - idx);
  const double z = hurwitz_zeta(alpha, x_min);
  double worst = 0.0;
  std::size_t i = idx;
  while (i < vals.size()) {
    std::size_t j = i;
    while (j < vals.size() && vals[j] == vals[i]) ++j;
    const double emp = static_cast<double>(j - idx) / n_tail;
    const double model = 1.0 - hurwitz_zeta(alpha, vals[i] + 1.0) / z;
    worst = std::max(worst, std::abs(emp - model));
    i = j;
  }
  return worst;
}

}  // namespace detail

/// Fits the discrete power law to a degree sequence. x_min is scanned over the
/// distinct positive observed values (excluding the largest, so every tail
/// keeps at least two distinct values and the exponent stays identified),
/// the exponent is the MLE at each candidate, and the candidate with the
/// smallest KS distance wins; KS ties resolve toward the smaller x_min.
inline TailFit fit_tail(const std::vector<int>& degrees) {
  std::vector<int> vals;
  vals.reserve(degrees.size());
  for (int k : degrees)
    if (k >= 1) vals.push_back(k);
  std::sort(vals.begin(), vals.end());
  std::vector<int> distinct(vals);
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  if (distinct.size() < 2) throw DegenerateSequence();

  std::vector<double> suffix_ln(vals.size() + 1, 0.0);
  for (std::size_t i = vals.size(); i-- > 0;)
    suffix_ln[i] = suffix_ln[i + 1] + std::log(static_cast<double>(vals[i]));

  bool found = false;
  TailFit best{};
  for (std::size_t c = 0; c + 1 < distinct.size(); ++c) {
    const int xm = distinct[c];
    const std::size_t idx = static_cast<std::size_t>(
        std::lower_bound(vals.begin(), vals.end(), xm) - vals.begin());
    const std::size_t n_tail = vals.size() - idx;
    if (n_tail < 2) continue;
    const double alpha = detail::mle_alpha(static_cast<double>(n_tail), suffix_ln[idx], xm);
    const double ks = detail::ks_distance(vals, idx, alpha, xm);
    if (!found || ks < best.ks) {
      best = TailFit{alpha, xm, static_cast<int>(n_tail), ks};
      found = true;
    }
  }
  if (!found) throw TailTooSmall();
  return best;
}

/// Goodness-of-fit bootstrap verdict.
struct GofResult {
  double p_value = 0.0;
  int bootstrap_reps = 0;
};

/// Semi-parametric bootstrap p-value for a tail fit. Each replicate keeps the
/// body empirical (values below x_min resampled with replacement) and draws the
/// tail from the fitted power law, is refitted from scratch, and contributes
/// its KS distance; p is the fraction of replicate distances >= the observed
/// one. Replicates that fail to fit count as KS = 1. Replicate r uses the rng
/// stream derive_seed(seed, r), so replicates are order-independent.
inline GofResult gof_pvalue(const std::vector<int>& degrees, const TailFit& fit, int reps,
                            std::uint64_t seed) {
  if (reps < 50) throw ConfigInvalid("bootstrap reps must be >= 50");
  if (degrees.empty()) throw DegenerateSequence();
  std::vector<int> body;
  for (int k : degrees)
    if (k < fit.x_min) body.push_back(k);
  const std::size_t n = degrees.size();
  const double tail_prob = static_cast<double>(n - body.size()) / static_cast<double>(n);
  DiscretePowerLaw model(fit.alpha, fit.x_min);

  int at_least = 0;
  std::vector<int> replicate(n);
  for (int r = 0; r < reps; ++r) {
    Rng rng(derive_seed(seed, static_cast<std::uint64_t>(r)));
    for (std::size_t i = 0; i < n; ++i) {
      if (body.empty() || rng.bernoulli(tail_prob))
        replicate[i] = model.sample(rng);
      else
        replicate[i] = body[rng.below(body.size())];
    }
    double ks_rep = 1.0;
    try {
      ks_rep = fit_tail(replicate).ks;
    } catch (const Error&) {
      ks_rep = 1.0;
    }
    if (ks_rep >= fit.ks) ++at_least;
  }
  return GofResult{static_cast<double>(at_least) / reps, reps};
}

enum class Alternative { Exponential, Lognormal };

inline const char* to_string(Alternative a) {
  return a == Alternative::Exponential ? "exponential" : "lognormal";
}

/// Normalized log-likelihood ratio verdict (Vuong construction).
struct LrResult {
  double r = 0.0;    // positive favors the power law
  double p_r = 1.0;  // two-sided significance of the sign of r
  Alternative alternative = Alternative::Exponential;
};

namespace detail {

/// ln of the normalizer of the discrete lognormal on j >= x_min: the sum is
/// taken exactly near x_min and closed with the Gaussian integral of the
/// continuous envelope.
inline double lognormal_log_norm(double mu, double sigma, int x_min) {
  constexpr double kSqrt2 = 1.4142135623730951;
  constexpr double kSqrt2Pi = 2.5066282746310002;
  long double w = 0.0L;
  int j = x_min;
  const int cut = x_min + 5000;
  for (; j < cut; ++j) {
    const double t = (std::log(static_cast<double>(j)) - mu) / sigma;
    w += std::exp(-0.5 * t * t) / j;
    if (std::log(static_cast<double>(j)) > mu + 10.0 * sigma) {
      ++j;
      break;
    }
  }
  const double zlo = (std::log(j - 0.5) - mu) / sigma;
  w += sigma * kSqrt2Pi * 0.5 * std::erfc(zlo / kSqrt2);
  return std::log(static_cast<double>(w));
}

struct LognormalTail {
  double mu = 0.0;
  double sigma = 1.0;
  double log_norm = 0.0;
  int x_min = 1;

  double log_pmf(int k) const {
    const double lk = std::log(static_cast<double>(k));
    const double t = (lk - mu) / sigma;
    return -lk - 0.5 * t * t - log_norm;
  }
};

/// MLE of the discrete lognormal on the tail via Nelder-Mead over
/// (mu, ln sigma).
inline LognormalTail fit_lognormal_tail(const std::vector<int>& tail, int x_min) {
  const std::size_t n = tail.size();
  double mean_ln = 0.0;
  for (int k : tail) mean_ln += std::log(static_cast<double>(k));
  mean_ln /= static_cast<double>(n);
  double var_ln = 0.0;
  for (int k : tail) {
    const double d = std::log(static_cast<double>(k)) - mean_ln;
    var_ln += d * d;
  }
  var_ln /= static_cast<double>(n);

  const auto neg_loglik = [&](double mu, double ls) {
    if (ls < -9.0 || ls > 4.0 || mu < -20.0 || mu > 30.0) return 1e18;
    const double sigma = std::exp(ls);
    const double log_norm = lognormal_log_norm(mu, sigma, x_min);
    if (!std::isfinite(log_norm)) return 1e18;
    double s = 0.0;
    for (int k : tail) {
      const double lk = std::log(static_cast<double>(k));
      const double t = (lk - mu) / sigma;
      s += lk + 0.5 * t * t;
    }
    return s + static_cast<double>(n) * log_norm;
  };

  struct Vertex {
    double mu, ls, f;
  };
  const double mu0 = mean_ln;
  const double ls0 = std::log(std::sqrt(var_ln) + 1e-3);
  std::vector<Vertex> simplex = {{mu0, ls0, 0.0}, {mu0 + 0.5, ls0, 0.0}, {mu0, ls0 + 0.5, 0.0}};
  for (auto& v : simplex) v.f = neg_loglik(v.mu, v.ls);
  const auto by_f = [](const Vertex& a, const Vertex& b) { return a.f < b.f; };
  for (int iter = 0; iter < 300; ++iter) {
    std::sort(simplex.begin(), simplex.end(), by_f);
    if (std::abs(simplex[2].f - simplex[0].f) < 1e-9) break;
    const double cmu = 0.5 * (simplex[0].mu + simplex[1].mu);
    const double cls = 0.5 * (simplex[0].ls + simplex[1].ls);
    Vertex refl{cmu + (cmu - simplex[2].mu), cls + (cls - simplex[2].ls), 0.0};
    refl.f = neg_loglik(refl.mu, refl.ls);
    if (refl.f < simplex[0].f) {
      Vertex expd{cmu + 2.0 * (cmu - simplex[2].mu), cls + 2.0 * (cls - simplex[2].ls), 0.0};
      expd.f = neg_loglik(expd.mu, expd.ls);
      simplex[2] = expd.f < refl.f ? expd : refl;
    } else if (refl.f < simplex[1].f) {
      simplex[2] = refl;
    } else {
      Vertex contr{cmu + 0.5 * (simplex[2].mu - cmu), cls + 0.5 * (simplex[2].ls - cls), 0.0};
      contr.f = neg_loglik(contr.mu, contr.ls);
      if (contr.f < simplex[2].f) {
        simplex[2] = contr;
      } else {
        for (int i = 1; i < 3; ++i) {
          simplex[i].mu = simplex[0].mu + 0.5 * (simplex[i].mu - simplex[0].mu);
          simplex[i].ls = simplex[0].ls + 0.5 * (simplex[i].ls - simplex[0].ls);
          simplex[i].f = neg_loglik(simplex[i].mu, simplex[i].ls);
        }
      }
    }
  }
  std::sort(simplex.begin(), simplex.end(), by_f);
  if (!std::isfinite(simplex[0].f) || simplex[0].f >= 1e18)
    throw AlternativeFitFailed("lognormal");
  LognormalTail out;
  out.mu = simplex[0].mu;
  out.sigma = std::exp(simplex[0].ls);
  out.x_min = x_min;
  out.log_norm = lognormal_log_norm(out.mu, out.sigma, x_min);
  return out;
}

}  // namespace detail

/// Vuong-normalized log-likelihood ratio of the fitted power law against an
/// MLE-fitted alternative over the tail observations. r > 0 favors the power
/// law; p_r is the two-sided normal significance of the sign. When the
/// per-point ratios carry no variance the data do not permit a distinction and
/// (r = 0, p_r = 1) is returned.
inline LrResult likelihood_ratio(const std::vector<int>& degrees, const TailFit& fit,
                                 Alternative alt = Alternative::Exponential) {
  std::vector<int> tail;
  for (int k : degrees)
    if (k >= fit.x_min) tail.push_back(k);
  const std::size_t n = tail.size();
  if (n < 2) throw TailTooSmall();

  const double log_z = std::log(hurwitz_zeta(fit.alpha, fit.x_min));
  std::vector<double> diff(n);
  for (std::size_t i = 0; i < n; ++i)
    diff[i] = -fit.alpha * std::log(static_cast<double>(tail[i])) - log_z;

  if (alt == Alternative::Exponential) {
    // Shifted geometric on k >= x_min: P(k) = (1-q) q^(k-x_min), MLE
    // q = m/(1+m) with m the mean excess over x_min.
    double m = 0.0;
    for (int k : tail) m += k - fit.x_min;
    m /= static_cast<double>(n);
    if (m > 0.0) {
      const double q = m / (1.0 + m);
      const double lq = std::log(q);
      const double l1q = std::log(1.0 - q);
      for (std::size_t i = 0; i < n; ++i) diff[i] -= l1q + (tail[i] - fit.x_min) * lq;
    }
    // m == 0 puts all geometric mass on x_min: per-point log-likelihood 0.
  } else {
    const detail::LognormalTail ln_fit = detail::fit_lognormal_tail(tail, fit.x_min);
    for (std::size_t i = 0; i < n; ++i) diff[i] -= ln_fit.log_pmf(tail[i]);
  }

  double mean = 0.0;
  for (double d : diff) mean += d;
  mean /= static_cast<double>(n);
  double var = 0.0;
  for (double d : diff) var += (d - mean) * (d - mean);
  var /= static_cast<double>(n);
  if (var < 1e-12) return LrResult{0.0, 1.0, alt};

  const double r = mean * std::sqrt(static_cast<double>(n)) / std::sqrt(var);
  const double p = std::erfc(std::abs(r) / 1.4142135623730951);
  return LrResult{r, p, alt};
}

}  // namespace sfnet
