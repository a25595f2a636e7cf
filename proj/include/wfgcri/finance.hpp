#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace wfgcri {

// Daily closes with strictly increasing ISO-8601 dates and positive prices.
struct PriceSeries {
  std::vector<std::string> dates;
  std::vector<double> closes;
  std::size_t dropped_rows = 0;  // rows discarded at ingestion
};

// Reads `date,close` CSV (header required; extra columns ignored). Rows with
// missing or nonpositive closes are dropped and counted.
PriceSeries load_price_csv(const std::string& path);

// Log returns shifted by the global minimum so all values are >= 0.
struct ReturnSeries {
  std::vector<std::string> dates;  // date of price t in R_t; empty if synthetic
  std::vector<double> raw;         // R_t = ln P_t - ln P_{t-1}
  std::vector<double> shifted;     // Z_t = R_t - min_t R_t
  double shift = 0.0;              // min_t R_t
};

ReturnSeries log_returns(const PriceSeries& prices);

// Synthetic construction from raw return values (no dates).
ReturnSeries make_return_series(std::vector<double> raw_returns);

struct RollCell {
  std::size_t window_index = 0;
  std::string window_start;  // first return's date, or its index if undated
  double beta = 0.0;
  double alpha = 0.0;
  double value = 0.0;
  bool degenerate = false;  // window had < 2 distinct shifted values
};

// Fixed-width rolling single-sample estimates on the shifted returns, one
// cell per (window, beta, alpha). Windows start at multiples of `step`.
// per_window_shift re-anchors each window at its own minimum return instead
// of the global one (sensitivity analysis; off by default).
std::vector<RollCell> rolling_wfgcri(const ReturnSeries& returns,
                                     std::size_t window, std::size_t step,
                                     const std::vector<double>& betas,
                                     const std::vector<double>& alphas,
                                     double weight_exp = 1.0,
                                     bool per_window_shift = false,
                                     int jobs = 1);

struct CompareCell {
  double beta = 0.0;
  double value = 0.0;
};

// Two-sample estimates over the full shifted series (each series shifted by
// its own minimum).
std::vector<CompareCell> compare_series(const ReturnSeries& truth,
                                        const ReturnSeries& reference,
                                        const std::vector<double>& betas,
                                        double weight_exp = 1.0);

}  // namespace wfgcri
