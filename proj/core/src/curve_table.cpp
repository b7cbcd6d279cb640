#include "logpcf/curve_table.hpp"

#include <charconv>
#include <stdexcept>
#include <system_error>

#include <json.hpp>

namespace logpcf {

std::string format_double(double v) {
  char buf[32];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  if (res.ec != std::errc{}) {
    throw std::runtime_error("format_double: conversion failed");
  }
  return std::string(buf, res.ptr);
}

std::string format_double(double v, int significant_digits) {
  char buf[48];
  auto res = std::to_chars(buf, buf + sizeof(buf), v,
                           std::chars_format::general, significant_digits);
  if (res.ec != std::errc{}) {
    throw std::runtime_error("format_double: conversion failed");
  }
  return std::string(buf, res.ptr);
}

CurveTable::CurveTable(std::vector<double> s_grid) : s_grid_(std::move(s_grid)) {
  if (s_grid_.empty()) {
    throw std::invalid_argument("CurveTable: empty s grid");
  }
  for (std::size_t i = 1; i < s_grid_.size(); ++i) {
    if (!(s_grid_[i] > s_grid_[i - 1])) {
      throw std::invalid_argument("CurveTable: s grid must be strictly ascending");
    }
  }
}

void CurveTable::add_column(std::string name, std::vector<double> values) {
  if (values.size() != s_grid_.size()) {
    throw std::invalid_argument("CurveTable: column length must match the s grid");
  }
  if (has_column(name)) {
    throw std::invalid_argument("CurveTable: duplicate column name " + name);
  }
  columns_.emplace_back(std::move(name), std::move(values));
}

std::span<const double> CurveTable::column(const std::string& name) const {
  for (const auto& [col_name, values] : columns_) {
    if (col_name == name) return values;
  }
  throw std::invalid_argument("CurveTable: no column named " + name);
}

bool CurveTable::has_column(const std::string& name) const {
  for (const auto& [col_name, values] : columns_) {
    if (col_name == name) return true;
  }
  return false;
}

std::string CurveTable::to_csv() const {
  std::string out = "s";
  for (const auto& [name, values] : columns_) {
    out += ',';
    out += name;
  }
  out += '\n';
  for (std::size_t row = 0; row < s_grid_.size(); ++row) {
    out += format_double(s_grid_[row], 12);
    for (const auto& [name, values] : columns_) {
      out += ',';
      out += format_double(values[row], 12);
    }
    out += '\n';
  }
  return out;
}

std::string CurveTable::to_json() const {
  nlohmann::json j;
  j["meta"] = {{"n", meta_.n}, {"alpha", meta_.alpha}, {"generator", meta_.generator}};
  j["s"] = s_grid_;
  nlohmann::json cols = nlohmann::json::object();
  for (const auto& [name, values] : columns_) {
    cols[name] = values;
  }
  j["columns"] = cols;
  return j.dump(2) + "\n";
}

}  // namespace logpcf
