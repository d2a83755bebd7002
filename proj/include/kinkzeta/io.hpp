// Flat-file output: numeric CSV tables, JSON mirrors, grid specs and a
// bounded parallel map for parameter sweeps.

#ifndef KINKZETA_IO_HPP
#define KINKZETA_IO_HPP

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <functional>
#include <iosfwd>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

namespace kinkzeta::io {

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;

  void add(std::vector<double> row);
};

/// Shortest round-trip decimal form.
std::string format_double(double x);

void write_csv(std::ostream& os, const Table& t);
Table read_csv(std::istream& is);

/// {"meta": meta, "columns": [...], "rows": [[...], ...]}.
nlohmann::json table_to_json(const Table& t, const nlohmann::json& meta);

/// Writes text to path, or to stdout when path is empty or "-".
void write_text(const std::string& path, const std::string& text);

/// "a:b:n" -> n evenly spaced values from a to b inclusive.
std::vector<double> parse_grid(const std::string& spec);

/// Applies f to every item on at most max_workers threads; results keep
/// the input order.  The first exception thrown by f is rethrown.
template <class T, class F>
auto parallel_map(const std::vector<T>& items, F f, unsigned max_workers = 0)
    -> std::vector<decltype(f(items.front()))> {
  using R = decltype(f(items.front()));
  std::vector<R> out(items.size());
  if (max_workers == 0) max_workers = std::max(1u, std::thread::hardware_concurrency());
  const unsigned workers = std::min<std::size_t>(max_workers, items.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto work = [&] {
    for (std::size_t i = next++; i < items.size(); i = next++) {
      try {
        out[i] = f(items[i]);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
      }
    }
  };
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
  }
  if (error) std::rethrow_exception(error);
  return out;
}

}  // namespace kinkzeta::io

#endif  // KINKZETA_IO_HPP
