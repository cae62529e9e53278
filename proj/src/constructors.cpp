#include "sumgraph/constructors.hpp"

#include <array>
#include <string>

namespace sumgraph {

namespace {

using Table = std::vector<std::vector<Element>>;

void check_order(std::uint64_t order, std::size_t max_order) {
  if (order > max_order)
    throw Error(ErrorKind::OrderLimit,
                "order " + std::to_string(order) + " exceeds the cap " + std::to_string(max_order));
}

std::string power_label(std::uint32_t i) { return "a^" + std::to_string(i); }

}  // namespace

Group cyclic_group(std::uint32_t n, std::size_t max_order) {
  if (n < 1) throw Error(ErrorKind::BadParameter, "cyclic order must be >= 1");
  check_order(n, max_order);
  Table t(n, std::vector<Element>(n));
  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t j = 0; j < n; ++j) t[i][j] = (i + j) % n;
  return Group::from_table(t, {}, GroupTag{GroupTag::Kind::Cyclic, n, {}}, max_order);
}

Group dihedral_group(std::uint32_t n, std::size_t max_order) {
  if (n < 3) throw Error(ErrorKind::BadParameter, "dihedral parameter n must be >= 3, got " + std::to_string(n));
  check_order(2ull * n, max_order);
  // index i < n is a^i, index n + i is a^i b;  b a^j = a^{-j} b.
  const std::uint32_t size = 2 * n;
  Table t(size, std::vector<Element>(size));
  for (std::uint32_t x = 0; x < size; ++x)
    for (std::uint32_t y = 0; y < size; ++y) {
      const std::uint32_t i = x % n, j = y % n;
      const bool xr = x >= n, yr = y >= n;
      if (!xr && !yr) t[x][y] = (i + j) % n;
      else if (!xr && yr) t[x][y] = n + (i + j) % n;
      else if (xr && !yr) t[x][y] = n + (i + n - j) % n;
      else t[x][y] = (i + n - j) % n;
    }
  std::vector<std::string> labels;
  for (std::uint32_t i = 0; i < n; ++i) labels.push_back(power_label(i));
  for (std::uint32_t i = 0; i < n; ++i) labels.push_back(power_label(i) + "b");
  return Group::from_table(t, std::move(labels), GroupTag{GroupTag::Kind::Dihedral, n, {}}, max_order);
}

Group dicyclic_group(std::uint32_t n, std::size_t max_order) {
  if (n < 2) throw Error(ErrorKind::BadParameter, "dicyclic parameter n must be >= 2, got " + std::to_string(n));
  check_order(4ull * n, max_order);
  // index i < 2n is a^i; index 2n + (i-1) is a^i b for i = 1..2n.
  // b a = a^{-1} b and b^2 = a^n.
  const std::uint32_t m = 2 * n, size = 4 * n;
  auto refl = [&](std::uint32_t i) { return m + ((i + m - 1) % m); };  // a^i b, i mod 2n
  Table t(size, std::vector<Element>(size));
  for (std::uint32_t x = 0; x < size; ++x)
    for (std::uint32_t y = 0; y < size; ++y) {
      const bool xr = x >= m, yr = y >= m;
      const std::uint32_t i = xr ? (x - m + 1) % m : x;
      const std::uint32_t j = yr ? (y - m + 1) % m : y;
      if (!xr && !yr) t[x][y] = (i + j) % m;
      else if (!xr && yr) t[x][y] = refl((i + j) % m);
      else if (xr && !yr) t[x][y] = refl((i + m - j) % m);
      else t[x][y] = (i + m - j + n) % m;
    }
  std::vector<std::string> labels;
  for (std::uint32_t i = 0; i < m; ++i) labels.push_back(power_label(i));
  for (std::uint32_t i = 1; i <= m; ++i) labels.push_back(power_label(i) + "b");
  return Group::from_table(t, std::move(labels), GroupTag{GroupTag::Kind::Dicyclic, n, {}}, max_order);
}

Group quaternion_group() {
  // Elements as (sign, unit) with unit in {1,i,j,k}; index = 2*unit + (sign < 0).
  static constexpr std::array<std::array<int, 4>, 4> unit_mul = {{
      {{1, 2, 3, 4}},      // 1*{1,i,j,k}
      {{2, -1, 4, -3}},    // i*{1,i,j,k} = i, -1, k, -j
      {{3, -4, -1, 2}},    // j*{1,i,j,k} = j, -k, -1, i
      {{4, 3, -2, -1}},    // k*{1,i,j,k} = k, j, -i, -1
  }};
  Table t(8, std::vector<Element>(8));
  for (Element x = 0; x < 8; ++x)
    for (Element y = 0; y < 8; ++y) {
      const int sign = ((x & 1) ^ (y & 1)) ? -1 : 1;
      const int prod = unit_mul[x / 2][y / 2] * sign;
      const int unit = (prod < 0 ? -prod : prod) - 1;
      t[x][y] = static_cast<Element>(2 * unit + (prod < 0 ? 1 : 0));
    }
  return Group::from_table(t, {"1", "-1", "i", "-i", "j", "-j", "k", "-k"},
                           GroupTag{GroupTag::Kind::Quaternion, 8, {}});
}

std::vector<Element> product_coordinates(Element x, const std::vector<std::size_t>& orders) {
  std::vector<Element> c(orders.size());
  for (std::size_t k = orders.size(); k-- > 0;) {
    c[k] = static_cast<Element>(x % orders[k]);
    x = static_cast<Element>(x / orders[k]);
  }
  return c;
}

Element product_index(const std::vector<Element>& coords, const std::vector<std::size_t>& orders) {
  std::size_t x = 0;
  for (std::size_t k = 0; k < orders.size(); ++k) x = x * orders[k] + coords[k];
  return static_cast<Element>(x);
}

Group direct_product(const std::vector<Group>& factors, std::size_t max_order) {
  if (factors.empty()) throw Error(ErrorKind::BadParameter, "direct product needs at least one factor");
  std::vector<std::size_t> orders;
  std::uint64_t total = 1;
  for (const auto& f : factors) {
    orders.push_back(f.order());
    total *= f.order();
    check_order(total, max_order);
  }
  const auto n = static_cast<std::size_t>(total);
  std::vector<std::vector<Element>> coords(n);
  for (std::size_t x = 0; x < n; ++x) coords[x] = product_coordinates(static_cast<Element>(x), orders);

  Table t(n, std::vector<Element>(n));
  std::vector<Element> buf(orders.size());
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      for (std::size_t k = 0; k < orders.size(); ++k) buf[k] = factors[k].mul(coords[x][k], coords[y][k]);
      t[x][y] = product_index(buf, orders);
    }

  std::vector<std::string> labels(n);
  for (std::size_t x = 0; x < n; ++x) {
    std::string s = "(";
    for (std::size_t k = 0; k < orders.size(); ++k) {
      if (k) s += ",";
      s += factors[k].label(coords[x][k]);
    }
    labels[x] = s + ")";
  }
  GroupTag tag{GroupTag::Kind::Product, 0, {}};
  for (const auto& f : factors) tag.factors.push_back(f.tag());
  return Group::from_table(t, std::move(labels), std::move(tag), max_order);
}

Group elementary_abelian_2_group(std::uint32_t t, std::size_t max_order) {
  if (t < 1) throw Error(ErrorKind::BadParameter, "elementary abelian rank must be >= 1");
  if (t >= 63 || (std::uint64_t{1} << t) > max_order)
    throw Error(ErrorKind::OrderLimit, "2^" + std::to_string(t) + " exceeds the cap " + std::to_string(max_order));
  return abelian_group(std::vector<std::uint32_t>(t, 2), max_order);
}

Group abelian_group(const std::vector<std::uint32_t>& cyclic_orders, std::size_t max_order) {
  if (cyclic_orders.empty()) throw Error(ErrorKind::BadParameter, "abelian group needs at least one cyclic factor");
  if (cyclic_orders.size() == 1) return cyclic_group(cyclic_orders.front(), max_order);
  std::uint64_t total = 1;
  for (auto m : cyclic_orders) {
    if (m < 1) throw Error(ErrorKind::BadParameter, "cyclic factor order must be >= 1");
    total *= m;
    check_order(total, max_order);
  }
  std::vector<Group> fs;
  for (auto m : cyclic_orders) fs.push_back(cyclic_group(m, max_order));
  return direct_product(fs, max_order);
}

Group make_group(const GroupDescriptor& d, std::size_t max_order) {
  using K = GroupDescriptor::Kind;
  switch (d.kind) {
    case K::Cyclic: return cyclic_group(d.n, max_order);
    case K::Dihedral: return dihedral_group(d.n, max_order);
    case K::Dicyclic: return dicyclic_group(d.n, max_order);
    case K::ElementaryAbelian2: return elementary_abelian_2_group(d.n, max_order);
    case K::Abelian: return abelian_group(d.invariants, max_order);
    case K::Quaternion: return quaternion_group();
    case K::DirectProduct: {
      std::vector<Group> fs;
      for (const auto& f : d.factors) fs.push_back(make_group(f, max_order));
      return direct_product(fs, max_order);
    }
  }
  throw Error(ErrorKind::BadParameter, "unknown group descriptor");
}

}  // namespace sumgraph
