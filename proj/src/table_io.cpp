// SPDX-License-Identifier: Apache-2.0
//
// torus-beam: phase-only passive beamforming for RIS-assisted MISO links
// Copyright (C) 2026 The torus-beam authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include "torus_beam/table_io.hpp"

#include "torus_beam/errors.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

namespace torus_beam::experiment {

std::string format_real(double x) {
  if (std::isnan(x))
    return "nan";
  if (std::isinf(x))
    return x > 0 ? "inf" : "-inf";
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x, std::chars_format::general, 9);
  if (ec != std::errc())
    throw std::runtime_error("format_real: conversion failed");
  return std::string(buf, ptr);
}

namespace {

std::vector<std::string> leading_values(const ResultRow& row) {
  return {row.experiment,        std::to_string(row.point.N), std::to_string(row.point.n_t),
          format_real(row.point.K1), format_real(row.point.K2), std::to_string(row.trials)};
}

std::string json_number(double x) {
  const std::string s = format_real(x);
  return std::isfinite(x) ? s : "\"" + s + "\"";
}

} // namespace

std::string to_csv(const ResultTable& table) {
  std::string out;
  bool first = true;
  for (const std::string& c : leading_columns()) {
    out += first ? "" : ",";
    out += c;
    first = false;
  }
  for (const std::string& c : table.metric_columns)
    out += "," + c;
  out += '\n';
  for (const ResultRow& row : table.rows) {
    if (row.values.size() != table.metric_columns.size())
      throw std::invalid_argument("to_csv: row width does not match the header");
    const auto lead = leading_values(row);
    for (std::size_t i = 0; i < lead.size(); ++i)
      out += (i ? "," : "") + lead[i];
    for (double v : row.values)
      out += "," + format_real(v);
    out += '\n';
  }
  return out;
}

std::string to_json(const ResultTable& table) {
  if (table.rows.empty())
    return "[]\n";
  const auto& lead_cols = leading_columns();
  std::string out = "[\n";
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    const ResultRow& row = table.rows[r];
    if (row.values.size() != table.metric_columns.size())
      throw std::invalid_argument("to_json: row width does not match the header");
    const auto lead = leading_values(row);
    out += "  {";
    out += "\"" + lead_cols[0] + "\": \"" + lead[0] + "\"";
    out += ", \"N\": " + lead[1];
    out += ", \"n_t\": " + lead[2];
    out += ", \"K1\": " + json_number(row.point.K1);
    out += ", \"K2\": " + json_number(row.point.K2);
    out += ", \"trials\": " + lead[5];
    for (std::size_t i = 0; i < row.values.size(); ++i)
      out += ", \"" + table.metric_columns[i] + "\": " + json_number(row.values[i]);
    out += r + 1 < table.rows.size() ? "},\n" : "}\n";
  }
  out += "]\n";
  return out;
}

std::string render(const ResultTable& table, OutputFormat format) {
  return format == OutputFormat::CSV ? to_csv(table) : to_json(table);
}

void emit(const ResultTable& table, const std::string& path, OutputFormat format) {
  const std::string text = render(table, format);
  if (path == "-") {
    std::cout << text << std::flush;
    if (!std::cout)
      throw IoError(path, "failed to write to standard output");
    return;
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out)
    throw IoError(path, "cannot open output file for writing");
  out << text;
  out.flush();
  if (!out)
    throw IoError(path, "write failed");
}

namespace {

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  while (true) {
    const auto comma = line.find(',', pos);
    out.push_back(line.substr(pos, comma == std::string_view::npos ? comma : comma - pos));
    if (comma == std::string_view::npos)
      return out;
    pos = comma + 1;
  }
}

double parse_real_field(std::string_view s) {
  if (s == "inf")
    return INFINITY;
  if (s == "-inf")
    return -INFINITY;
  if (s == "nan")
    return NAN;
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size())
    throw std::invalid_argument("parse_csv: bad number '" + std::string(s) + "'");
  return v;
}

int parse_int_field(std::string_view s) {
  int v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size())
    throw std::invalid_argument("parse_csv: bad integer '" + std::string(s) + "'");
  return v;
}

} // namespace

ResultTable parse_csv(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t pos = 0;
  while (pos < text.size()) {
    const auto nl = text.find('\n', pos);
    lines.push_back(text.substr(pos, nl == std::string_view::npos ? nl : nl - pos));
    pos = nl == std::string_view::npos ? text.size() : nl + 1;
  }
  if (lines.empty())
    throw std::invalid_argument("parse_csv: missing header");

  const auto header = split_fields(lines[0]);
  const auto& lead = leading_columns();
  if (header.size() < lead.size())
    throw std::invalid_argument("parse_csv: header too short");
  for (std::size_t i = 0; i < lead.size(); ++i)
    if (header[i] != lead[i])
      throw std::invalid_argument("parse_csv: unexpected leading column '" +
                                  std::string(header[i]) + "'");

  ResultTable table;
  for (std::size_t i = lead.size(); i < header.size(); ++i)
    table.metric_columns.emplace_back(header[i]);

  for (std::size_t l = 1; l < lines.size(); ++l) {
    const auto f = split_fields(lines[l]);
    if (f.size() != header.size())
      throw std::invalid_argument("parse_csv: line " + std::to_string(l + 1) +
                                  " has " + std::to_string(f.size()) + " fields, expected " +
                                  std::to_string(header.size()));
    ResultRow row;
    row.experiment = std::string(f[0]);
    row.point.N = parse_int_field(f[1]);
    row.point.n_t = parse_int_field(f[2]);
    row.point.K1 = parse_real_field(f[3]);
    row.point.K2 = parse_real_field(f[4]);
    row.trials = parse_int_field(f[5]);
    for (std::size_t i = lead.size(); i < f.size(); ++i)
      row.values.push_back(parse_real_field(f[i]));
    if (table.experiment.empty())
      table.experiment = row.experiment;
    table.rows.push_back(std::move(row));
  }
  return table;
}

} // namespace torus_beam::experiment
