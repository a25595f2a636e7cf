#include "wfgcri/finance.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <optional>

#include "wfgcri/errors.hpp"
#include "wfgcri/estimators.hpp"
#include "wfgcri/parallel.hpp"

namespace wfgcri {

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::string cur;
  for (char ch : line) {
    if (ch == ',') {
      fields.push_back(cur);
      cur.clear();
    } else if (ch != '\r') {
      cur += ch;
    }
  }
  fields.push_back(cur);
  return fields;
}

std::string trim(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t");
  return s.substr(a, b - a + 1);
}

std::string lower(std::string s) {
  for (char& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return s;
}

}  // namespace

PriceSeries load_price_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::io, "cannot open price CSV: " + path);
  std::string line;
  if (!std::getline(in, line))
    throw Error(ErrorCode::parse, "price CSV is empty: " + path);
  auto header = split_csv_line(line);
  std::ptrdiff_t date_col = -1, close_col = -1;
  for (std::size_t i = 0; i < header.size(); ++i) {
    std::string name = lower(trim(header[i]));
    if (name == "date") date_col = static_cast<std::ptrdiff_t>(i);
    if (name == "close") close_col = static_cast<std::ptrdiff_t>(i);
  }
  if (date_col < 0 || close_col < 0)
    throw Error(ErrorCode::parse,
                "price CSV must have 'date' and 'close' columns: " + path);

  PriceSeries out;
  std::size_t row = 1;
  while (std::getline(in, line)) {
    ++row;
    if (trim(line).empty()) continue;
    auto fields = split_csv_line(line);
    if (fields.size() <= static_cast<std::size_t>(std::max(date_col, close_col))) {
      ++out.dropped_rows;
      continue;
    }
    std::string date = trim(fields[static_cast<std::size_t>(date_col)]);
    std::string close_text = trim(fields[static_cast<std::size_t>(close_col)]);
    char* end = nullptr;
    double close = std::strtod(close_text.c_str(), &end);
    bool parsed = end && *end == '\0' && !close_text.empty();
    if (date.empty() || !parsed || !std::isfinite(close) || close <= 0.0) {
      ++out.dropped_rows;
      continue;
    }
    if (!out.dates.empty() && !(out.dates.back() < date))
      throw Error(ErrorCode::parse,
                  "price CSV dates must be strictly increasing (row " +
                      std::to_string(row) + ")");
    out.dates.push_back(std::move(date));
    out.closes.push_back(close);
  }
  if (out.dropped_rows > 0)
    std::fprintf(stderr, "note: dropped %zu unusable rows from %s\n",
                 out.dropped_rows, path.c_str());
  if (out.closes.size() < 2)
    throw Error(ErrorCode::degenerate,
                "price series needs at least 2 usable rows: " + path);
  return out;
}

ReturnSeries log_returns(const PriceSeries& prices) {
  if (prices.closes.size() < 2)
    throw Error(ErrorCode::degenerate, "need at least 2 prices for returns");
  ReturnSeries out;
  out.raw.reserve(prices.closes.size() - 1);
  for (std::size_t t = 1; t < prices.closes.size(); ++t) {
    double p1 = prices.closes[t], p0 = prices.closes[t - 1];
    if (!(p1 > 0.0 && p0 > 0.0))
      throw Error(ErrorCode::domain, "nonpositive price at row " +
                                         std::to_string(t + 1));
    out.raw.push_back(std::log(p1) - std::log(p0));
    if (!prices.dates.empty()) out.dates.push_back(prices.dates[t]);
  }
  out.shift = *std::min_element(out.raw.begin(), out.raw.end());
  out.shifted.reserve(out.raw.size());
  for (double r : out.raw) out.shifted.push_back(r - out.shift);
  return out;
}

ReturnSeries make_return_series(std::vector<double> raw_returns) {
  if (raw_returns.empty())
    throw Error(ErrorCode::degenerate, "return series is empty");
  for (double r : raw_returns)
    if (!std::isfinite(r)) throw_domain("returns must be finite");
  ReturnSeries out;
  out.raw = std::move(raw_returns);
  out.shift = *std::min_element(out.raw.begin(), out.raw.end());
  out.shifted.reserve(out.raw.size());
  for (double r : out.raw) out.shifted.push_back(r - out.shift);
  return out;
}

std::vector<RollCell> rolling_wfgcri(const ReturnSeries& returns,
                                     std::size_t window, std::size_t step,
                                     const std::vector<double>& betas,
                                     const std::vector<double>& alphas,
                                     double weight_exp, bool per_window_shift,
                                     int jobs) {
  if (window < 2) throw_domain("window length must be >= 2");
  if (step < 1) throw_domain("step must be >= 1");
  if (betas.empty() || alphas.empty())
    throw_domain("rolling grid needs at least one beta and one alpha");
  const std::size_t t_len = returns.shifted.size();
  if (t_len < window)
    throw Error(ErrorCode::degenerate,
                "return series shorter than one window");
  const std::size_t n_windows = (t_len - window) / step + 1;

  // one sorted window sample, shared read-only across the (beta, alpha) grid
  std::vector<std::optional<EmpiricalSample>> samples(n_windows);
  std::vector<bool> degenerate(n_windows, false);
  for (std::size_t wi = 0; wi < n_windows; ++wi) {
    std::size_t start = wi * step;
    std::vector<double> values;
    if (per_window_shift) {
      values.assign(returns.raw.begin() + start,
                    returns.raw.begin() + start + window);
      double local = *std::min_element(values.begin(), values.end());
      for (double& v : values) v -= local;
    } else {
      values.assign(returns.shifted.begin() + start,
                    returns.shifted.begin() + start + window);
    }
    samples[wi].emplace(std::move(values));
    degenerate[wi] = samples[wi]->distinct_count() < 2;
  }

  const std::size_t grid = betas.size() * alphas.size();
  std::vector<RollCell> cells(n_windows * grid);
  parallel_for(cells.size(), jobs, [&](std::size_t idx) {
    std::size_t wi = idx / grid;
    std::size_t rest = idx % grid;
    std::size_t bi = rest / alphas.size();
    std::size_t ai = rest % alphas.size();
    RollCell& cell = cells[idx];
    cell.window_index = wi;
    std::size_t start = wi * step;
    cell.window_start = returns.dates.empty()
                            ? std::to_string(start)
                            : returns.dates[start];
    cell.beta = betas[bi];
    cell.alpha = alphas[ai];
    if (degenerate[wi]) {
      cell.value = 0.0;
      cell.degenerate = true;
      return;
    }
    cell.value =
        estimate_wfgcri_phr(*samples[wi], betas[bi], alphas[ai], weight_exp);
  });
  return cells;
}

std::vector<CompareCell> compare_series(const ReturnSeries& truth,
                                        const ReturnSeries& reference,
                                        const std::vector<double>& betas,
                                        double weight_exp) {
  if (betas.empty()) throw_domain("comparison needs at least one beta");
  EmpiricalSample sx(truth.shifted);
  EmpiricalSample sy(reference.shifted);
  std::vector<CompareCell> out(betas.size());
  for (std::size_t i = 0; i < betas.size(); ++i) {
    out[i].beta = betas[i];
    out[i].value = estimate_wfgcri_two_sample(sx, sy, betas[i], weight_exp);
  }
  return out;
}

}  // namespace wfgcri
