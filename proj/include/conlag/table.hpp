#pragma once

// Sample tables of L_n^m(x^a/a) over an x grid, one column per a, for
// plotting with external tools.

#include "conlag/alpha_calc.hpp"
#include "conlag/errors.hpp"
#include "conlag/laguerre.hpp"

#include <charconv>
#include <cmath>
#include <cstddef>
#include <span>
#include <string>
#include <system_error>
#include <vector>

namespace conlag {

/// Shortest decimal that round-trips to the same double.
inline std::string format_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  if (res.ec != std::errc{}) throw std::runtime_error("format_double: conversion failed");
  return std::string(buf, res.ptr);
}

struct SampleTable {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;  // rows[i][0] is x, then one value per a
};

inline std::string column_name(LaguerreIndex idx, double alpha) {
  return "L_{" + std::to_string(idx.n) + "}^{" + std::to_string(idx.m) + "}(alpha=" + format_double(alpha) + ")";
}

/// Evenly spaced samples on [x_min, x_max], both ends included.
inline SampleTable build_table(LaguerreIndex idx, std::span<const double> alphas, double x_min, double x_max,
                               std::size_t samples) {
  if (!(x_min >= 0.0)) throw domain_error("x_min must be >= 0");
  if (!(x_max > x_min)) throw domain_error("x_max must exceed x_min");
  if (samples < 2) throw domain_error("at least 2 samples are required");
  if (alphas.empty()) throw domain_error("at least one alpha is required");

  std::vector<AlphaValue> orders;
  orders.reserve(alphas.size());
  for (double a : alphas) orders.emplace_back(a);

  const ExpPoly poly = assoc_closed(idx.n, idx.m);
  SampleTable table;
  table.columns.push_back("x");
  for (double a : alphas) table.columns.push_back(column_name(idx, a));

  const double step = (x_max - x_min) / static_cast<double>(samples - 1);
  table.rows.reserve(samples);
  for (std::size_t i = 0; i < samples; ++i) {
    const double x = i + 1 == samples ? x_max : x_min + step * static_cast<double>(i);
    std::vector<double> row{x};
    for (const auto& a : orders) {
      const double v = eval(poly, x, a);
      if (!std::isfinite(v)) throw domain_error("non-finite value at x = " + format_double(x));
      row.push_back(v);
    }
    table.rows.push_back(std::move(row));
  }
  return table;
}

inline std::string to_csv(const SampleTable& table) {
  std::string out;
  for (std::size_t c = 0; c < table.columns.size(); ++c) {
    if (c != 0) out += ',';
    out += table.columns[c];
  }
  out += '\n';
  for (const auto& row : table.rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c != 0) out += ',';
      out += format_double(row[c]);
    }
    out += '\n';
  }
  return out;
}

}  // namespace conlag
