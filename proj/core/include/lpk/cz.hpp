#pragma once

#include <vector>

#include "lpk/dyadic.hpp"
#include "lpk/grid.hpp"

namespace lpk {

struct StoppingCover {
  double alpha = 0.0;
  std::vector<DyadicInterval> intervals;
  std::vector<double> averages;
  bool average_ok = true;  // every average >= alpha / 4
  bool cover_ok = true;    // {Mf > alpha} inside the union of the I*
};

// Maximal dyadic intervals whose average of |f| exceeds alpha / 4.
StoppingCover cz_cover(const GridFunction& f, double alpha);

struct BadPiece {
  DyadicInterval interval;
  cplx average;
  GridFunction b;
};

struct CZDecomposition {
  double alpha = 0.0;
  std::vector<DyadicInterval> intervals;
  std::vector<double> averages;  // average of |f| on each interval
  GridFunction good;
  std::vector<BadPiece> bad;
};

// Requires alpha > ||f||_1.
CZDecomposition cz_decompose(const GridFunction& f, double alpha);

struct CZCheck {
  bool disjoint = true;
  double reconstruction = 0.0;  // max |f - g - Σ b_k|
  double reconstruction_tol = 0.0;  // rounding of (f - mean) + mean
  bool supported = true;
  double max_bad_mean = 0.0;
  double measure = 0.0;  // Σ |I_k|
  double measure_bound = 0.0;
  bool averages_in_range = true;  // in (alpha, 2 alpha]
  double good_l2sq = 0.0;
  double good_bound = 0.0;
  double worst_bad_ratio = 0.0;  // max ||b_k||_1 / (4 alpha |I_k|)
  bool ok() const;
};
CZCheck check_cz(const GridFunction& f, const CZDecomposition& d);

}  // namespace lpk
