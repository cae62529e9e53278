#include "sumgraph/kernels.hpp"

#include <atomic>
#include <limits>

#include <omp.h>

namespace sumgraph::kernels {

namespace {

std::optional<Triple> scan_row(std::span<const Element> t, std::size_t n, std::size_t a) {
  for (std::size_t b = 0; b < n; ++b) {
    const std::size_t ab = t[a * n + b];
    for (std::size_t c = 0; c < n; ++c) {
      if (t[ab * n + c] != t[a * n + t[b * n + c]])
        return Triple{Element(a), Element(b), Element(c)};
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<Triple> find_nonassociative_triple_serial(std::span<const Element> table, std::size_t n) {
  for (std::size_t a = 0; a < n; ++a)
    if (auto t = scan_row(table, n, a)) return t;
  return std::nullopt;
}

std::optional<Triple> find_nonassociative_triple(std::span<const Element> table, std::size_t n) {
  // Rows above the best failing row found so far are skipped; the minimum row wins.
  std::atomic<std::size_t> best_row{std::numeric_limits<std::size_t>::max()};
  std::vector<std::optional<Triple>> per_row(n);
  const auto rows = static_cast<std::int64_t>(n);
#pragma omp parallel for schedule(dynamic, 4)
  for (std::int64_t a = 0; a < rows; ++a) {
    if (static_cast<std::size_t>(a) > best_row.load(std::memory_order_relaxed)) continue;
    per_row[a] = scan_row(table, n, static_cast<std::size_t>(a));
    if (per_row[a]) {
      std::size_t cur = best_row.load();
      while (static_cast<std::size_t>(a) < cur && !best_row.compare_exchange_weak(cur, a)) {
      }
    }
  }
  const std::size_t row = best_row.load();
  if (row == std::numeric_limits<std::size_t>::max()) return std::nullopt;
  return per_row[row];
}

std::vector<BitSet> product_adjacency_serial(const Group& g, const BitSet& targets) {
  const std::size_t n = g.order();
  std::vector<BitSet> rows(n, BitSet(n));
  for (Element x = 0; x < n; ++x) {
    auto r = g.row(x);
    for (Element y = 0; y < n; ++y)
      if (y != x && targets.test(r[y])) rows[x].set(y);
  }
  return rows;
}

std::vector<BitSet> product_adjacency(const Group& g, const BitSet& targets) {
  const std::size_t n = g.order();
  std::vector<BitSet> rows(n, BitSet(n));
  const auto count = static_cast<std::int64_t>(n);
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < count; ++i) {
    const auto x = static_cast<Element>(i);
    auto r = g.row(x);
    for (Element y = 0; y < n; ++y)
      if (y != x && targets.test(r[y])) rows[x].set(y);
  }
  return rows;
}

bool is_conjugation_closed_serial(const Group& g, const BitSet& members) {
  for (Element x = 0; x < g.order(); ++x) {
    bool ok = true;
    members.for_each([&](std::size_t h) {
      if (ok && !members.test(g.conjugate(Element(h), x))) ok = false;
    });
    if (!ok) return false;
  }
  return true;
}

bool is_conjugation_closed(const Group& g, const BitSet& members) {
  const auto count = static_cast<std::int64_t>(g.order());
  const auto hs = members.indices();
  bool closed = true;
#pragma omp parallel for schedule(static) reduction(&& : closed)
  for (std::int64_t i = 0; i < count; ++i) {
    for (Element h : hs) {
      if (!members.test(g.conjugate(h, static_cast<Element>(i)))) {
        closed = false;
        break;
      }
    }
  }
  return closed;
}

}  // namespace sumgraph::kernels
