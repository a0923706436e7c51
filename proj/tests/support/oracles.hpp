#pragma once

// Reference computations used only by tests.  Each one is written from the
// textbook definition and shares no code with the library.

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "mism/binary_mask.hpp"
#include "mism/confusion.hpp"

namespace mism::testing {

struct NaiveCounts {
  std::uint64_t tp = 0, fp = 0, tn = 0, fn = 0;
};

/// Per-pixel double loop with a four-way branch.
inline NaiveCounts naive_confusion(const BinaryMask& gt, const BinaryMask& pred) {
  NaiveCounts c;
  for (std::size_t y = 0; y < gt.height(); ++y) {
    for (std::size_t x = 0; x < gt.width(); ++x) {
      const bool g = gt.is_foreground(x, y);
      const bool p = pred.is_foreground(x, y);
      if (g && p) {
        ++c.tp;
      } else if (!g && p) {
        ++c.fp;
      } else if (!g && !p) {
        ++c.tn;
      } else {
        ++c.fn;
      }
    }
  }
  return c;
}

inline bool same_counts(const NaiveCounts& n, const ConfusionMatrix& m) {
  return n.tp == m.tp && n.fp == m.fp && n.tn == m.tn && n.fn == m.fn;
}

/// Weighted specificity as a function of the realized FP/N ratio r.
inline double wspec_closed_form(double alpha, double r) {
  return alpha * (1.0 - r) / ((1.0 - alpha) * r + alpha * (1.0 - r));
}

/// MCC from the four marginal products, evaluated in long double.
inline long double mcc_brute_force(std::uint64_t tp, std::uint64_t fp, std::uint64_t tn,
                                   std::uint64_t fn) {
  const long double a = tp, b = fp, c = tn, d = fn;
  const long double den = (a + b) * (a + d) * (c + b) * (c + d);
  if (den == 0) return 0;
  return (a * c - b * d) / std::sqrt(den);
}

inline BinaryMask random_mask(std::mt19937_64& rng, std::size_t w, std::size_t h,
                              double fg_probability) {
  std::bernoulli_distribution fg(fg_probability);
  std::vector<Label> labels(w * h);
  for (auto& l : labels) l = fg(rng) ? Label::Foreground : Label::Background;
  return BinaryMask(w, h, std::move(labels));
}

/// Random nonempty matrix.  Roughly one draw in four lands on a corner where
/// some cells are zero, so the definition gaps get exercised.
inline ConfusionMatrix random_matrix(std::mt19937_64& rng, std::uint64_t max_count = 100000) {
  std::uniform_int_distribution<std::uint64_t> count(0, max_count);
  std::uniform_int_distribution<int> shape(0, 15);
  ConfusionMatrix m;
  do {
    const int mask = shape(rng);
    m.tp = (mask & 1) ? count(rng) : 0;
    m.fp = (mask & 2) ? count(rng) : 0;
    m.tn = (mask & 4) ? count(rng) : 0;
    m.fn = (mask & 8) ? count(rng) : 0;
  } while (m.total() == 0);
  return m;
}

/// Alpha drawn from the open interval (0, 1).
inline double random_alpha(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  double a = 0.0;
  while (a <= 0.0 || a >= 1.0) a = u(rng);
  return a;
}

}  // namespace mism::testing
