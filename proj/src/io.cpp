#include "kinkzeta/io.hpp"

#include <array>
#include <charconv>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

namespace kinkzeta::io {

void Table::add(std::vector<double> row) {
  if (row.size() != columns.size()) throw std::invalid_argument("Table::add: row width mismatch");
  rows.push_back(std::move(row));
}

std::string format_double(double x) {
  std::array<char, 32> buf{};
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), x);
  return std::string(buf.data(), res.ptr);
}

void write_csv(std::ostream& os, const Table& t) {
  for (std::size_t i = 0; i < t.columns.size(); ++i) os << (i ? "," : "") << t.columns[i];
  os << '\n';
  for (const auto& row : t.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << format_double(row[i]);
    os << '\n';
  }
}

namespace {

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> out;
  std::stringstream ss(line);
  std::string cell;
  while (std::getline(ss, cell, ',')) out.push_back(cell);
  return out;
}

double parse_double(const std::string& s) {
  // from_chars rejects these spellings; to_chars produces them.
  if (s == "inf") return INFINITY;
  if (s == "-inf") return -INFINITY;
  if (s == "nan" || s == "-nan") return NAN;
  double v = 0;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc() || res.ptr != s.data() + s.size())
    throw std::invalid_argument("read_csv: not a number: '" + s + "'");
  return v;
}

}  // namespace

Table read_csv(std::istream& is) {
  Table t;
  std::string line;
  if (!std::getline(is, line)) throw std::invalid_argument("read_csv: empty input");
  t.columns = split(line);
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    std::vector<double> row;
    for (const auto& cell : split(line)) row.push_back(parse_double(cell));
    t.add(std::move(row));
  }
  return t;
}

nlohmann::json table_to_json(const Table& t, const nlohmann::json& meta) {
  nlohmann::json j;
  j["meta"] = meta;
  j["columns"] = t.columns;
  j["rows"] = t.rows;
  return j;
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open " + path + " for writing");
  f << text;
}

std::vector<double> parse_grid(const std::string& spec) {
  const auto a = spec.find(':');
  const auto b = a == std::string::npos ? a : spec.find(':', a + 1);
  if (b == std::string::npos) throw std::invalid_argument("grid spec must be a:b:n, got '" + spec + "'");
  double lo = 0, hi = 0;
  long n = 0;
  try {
    lo = std::stod(spec.substr(0, a));
    hi = std::stod(spec.substr(a + 1, b - a - 1));
    n = std::stol(spec.substr(b + 1));
  } catch (const std::exception&) {
    throw std::invalid_argument("grid spec must be a:b:n, got '" + spec + "'");
  }
  if (n < 1) throw std::invalid_argument("grid spec needs n >= 1");
  if (n == 1) return {lo};
  std::vector<double> out;
  for (long i = 0; i < n; ++i) out.push_back(i == n - 1 ? hi : lo + (hi - lo) * i / (n - 1));
  return out;
}

}  // namespace kinkzeta::io
