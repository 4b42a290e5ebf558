#include "wordmaps/group.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <numeric>
#include <sstream>

#include <json.hpp>

namespace wordmaps {

namespace {

std::string join_elements(const std::vector<Element>& xs) {
  std::string out = "(";
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(xs[i]);
  }
  return out + ")";
}

// Any two-sided identity, or n if none.
std::size_t find_identity(std::size_t n, std::span<const Element> t) {
  for (std::size_t e = 0; e < n; ++e) {
    bool ok = true;
    for (std::size_t x = 0; x < n && ok; ++x) ok = t[e * n + x] == x && t[x * n + e] == x;
    if (ok) return e;
  }
  return n;
}

}  // namespace

std::optional<GroupViolation> validate_group(std::size_t n, std::span<const Element> t) {
  if (n == 0) return GroupViolation{"shape", {}, "group order must be positive"};
  if (t.size() != n * n) {
    return GroupViolation{"shape", {}, "table has " + std::to_string(t.size()) + " entries, expected " +
                                           std::to_string(n * n)};
  }
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (t[i] >= n) {
      const std::vector<Element> pair{static_cast<Element>(i / n), static_cast<Element>(i % n)};
      return GroupViolation{"range", pair, "product " + join_elements(pair) + " = " + std::to_string(t[i]) +
                                               " is out of range"};
    }
  }
  const std::size_t e = find_identity(n, t);
  if (e == n) return GroupViolation{"identity", {}, "no two-sided identity element"};
  for (std::size_t a = 0; a < n; ++a) {
    bool found = false;
    for (std::size_t b = 0; b < n && !found; ++b) found = t[a * n + b] == e && t[b * n + a] == e;
    if (!found) {
      return GroupViolation{"inverse", {static_cast<Element>(a)}, "element " + std::to_string(a) + " has no inverse"};
    }
  }
  // First failing triple in lexicographic order; rows are scanned in parallel.
  std::vector<std::int64_t> first_bad(n, -1);
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t a = 0; a < static_cast<std::int64_t>(n); ++a) {
    const auto ua = static_cast<std::size_t>(a);
    for (std::size_t b = 0; b < n && first_bad[ua] < 0; ++b) {
      const std::size_t ab = t[ua * n + b];
      for (std::size_t c = 0; c < n; ++c) {
        if (t[ab * n + c] != t[ua * n + t[b * n + c]]) {
          first_bad[ua] = static_cast<std::int64_t>(b * n + c);
          break;
        }
      }
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    if (first_bad[a] >= 0) {
      const auto bc = static_cast<std::size_t>(first_bad[a]);
      const std::vector<Element> triple{static_cast<Element>(a), static_cast<Element>(bc / n),
                                        static_cast<Element>(bc % n)};
      return GroupViolation{"associativity", triple, "associativity fails at " + join_elements(triple)};
    }
  }
  return std::nullopt;
}

FiniteGroup FiniteGroup::from_table(std::string name, std::size_t n, std::vector<Element> table,
                                    std::vector<std::string> labels) {
  if (auto v = validate_group(n, table)) throw GroupAxiomError(name + ": " + v->message);
  if (labels.empty()) {
    for (std::size_t i = 0; i < n; ++i) labels.push_back("g" + std::to_string(i));
  }
  if (labels.size() != n) throw GroupAxiomError(name + ": expected " + std::to_string(n) + " labels");
  {
    auto sorted = labels;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      throw GroupAxiomError(name + ": labels are not unique");
    }
  }

  // Relabel so the identity is element 0 (swap it with the current element 0).
  const std::size_t e = find_identity(n, table);
  if (e != 0) {
    auto swap_id = [e](Element x) -> Element { return x == 0 ? static_cast<Element>(e) : x == e ? 0 : x; };
    std::vector<Element> relabeled(n * n);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        relabeled[swap_id(static_cast<Element>(a)) * n + swap_id(static_cast<Element>(b))] =
            swap_id(table[a * n + b]);
      }
    }
    table = std::move(relabeled);
    std::swap(labels[0], labels[e]);
  }

  FiniteGroup g;
  g.name_ = std::move(name);
  g.order_ = n;
  g.table_ = std::move(table);
  g.labels_ = std::move(labels);
  g.inverses_.resize(n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (g.table_[a * n + b] == 0) {
        g.inverses_[a] = static_cast<Element>(b);
        break;
      }
    }
  }
  return g;
}

Element FiniteGroup::pow(Element a, std::int64_t k) const {
  Element base = k < 0 ? inv(a) : a;
  std::uint64_t m = k < 0 ? static_cast<std::uint64_t>(-(k + 1)) + 1 : static_cast<std::uint64_t>(k);
  Element acc = identity();
  while (m) {
    if (m & 1u) acc = mul(acc, base);
    base = mul(base, base);
    m >>= 1u;
  }
  return acc;
}

// ---------------------------------------------------------------------------
// Families

FiniteGroup cyclic_group(std::size_t n) {
  if (n < 1 || n > kDefaultOrderCap) throw InvalidArgument("C n needs 1 <= n <= 512");
  std::vector<Element> table(n * n);
  std::vector<std::string> labels(n);
  for (std::size_t a = 0; a < n; ++a) {
    labels[a] = a == 0 ? "e" : a == 1 ? "a" : "a^" + std::to_string(a);
    for (std::size_t b = 0; b < n; ++b) table[a * n + b] = static_cast<Element>((a + b) % n);
  }
  return FiniteGroup::from_table("C" + std::to_string(n), n, std::move(table), std::move(labels));
}

FiniteGroup dihedral_group(std::size_t order) {
  if (order < 4 || order % 2 != 0 || order > kDefaultOrderCap) {
    throw InvalidArgument("D n takes the group order: even n with 4 <= n <= 512");
  }
  const std::size_t m = order / 2;
  auto rot = [](std::size_t k) { return k == 0 ? std::string("e") : k == 1 ? "r" : "r^" + std::to_string(k); };
  std::vector<std::string> labels(order);
  for (std::size_t k = 0; k < m; ++k) {
    labels[k] = rot(k);
    labels[m + k] = k == 0 ? "s" : rot(k) + "*s";
  }
  // Element k < m is r^k, element m + k is r^k s; s r = r^-1 s.
  std::vector<Element> table(order * order);
  for (std::size_t x = 0; x < order; ++x) {
    for (std::size_t y = 0; y < order; ++y) {
      const std::size_t a = x % m, b = y % m;
      const bool xs = x >= m, ys = y >= m;
      const std::size_t k = xs ? (a + m - b) % m : (a + b) % m;
      table[x * order + y] = static_cast<Element>((xs != ys ? m : 0) + k);
    }
  }
  return FiniteGroup::from_table("D" + std::to_string(order), order, std::move(table), std::move(labels));
}

FiniteGroup quaternion_group() {
  // Index 2u + s encodes sign s (0 = +, 1 = -) and unit u in {1, i, j, k}.
  static constexpr int kUnit[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static constexpr int kSign[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
  const std::vector<std::string> labels{"1", "-1", "i", "-i", "j", "-j", "k", "-k"};
  std::vector<Element> table(64);
  for (int x = 0; x < 8; ++x) {
    for (int y = 0; y < 8; ++y) {
      const int u = x / 2, v = y / 2;
      const int sign = (x % 2) ^ (y % 2) ^ kSign[u][v];
      table[static_cast<std::size_t>(x * 8 + y)] = static_cast<Element>(2 * kUnit[u][v] + sign);
    }
  }
  return FiniteGroup::from_table("Q8", 8, std::move(table), labels);
}

namespace {

std::string cycle_label(const Permutation& p) {
  std::string out;
  std::vector<bool> seen(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i] || p[i] == i) continue;
    out += "(";
    for (std::size_t j = i; !seen[j]; j = p[j]) {
      seen[j] = true;
      if (out.back() != '(') out += " ";
      out += std::to_string(j + 1);
    }
    out += ")";
  }
  return out.empty() ? "()" : out;
}

bool is_even(const Permutation& p) {
  std::size_t transpositions = 0;
  std::vector<bool> seen(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    std::size_t len = 0;
    for (std::size_t j = i; !seen[j]; j = p[j], ++len) seen[j] = true;
    if (len > 0) transpositions += len - 1;
  }
  return transpositions % 2 == 0;
}

// perms[0] must be the identity; the list must be closed under composition.
FiniteGroup from_permutation_list(std::string name, const std::vector<Permutation>& perms) {
  const std::size_t n = perms.size();
  std::map<Permutation, Element> index;
  for (std::size_t i = 0; i < n; ++i) index.emplace(perms[i], static_cast<Element>(i));
  std::vector<Element> table(n * n);
  std::vector<std::string> labels(n);
  Permutation prod(perms.empty() ? 0 : perms[0].size());
  for (std::size_t a = 0; a < n; ++a) {
    labels[a] = cycle_label(perms[a]);
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t x = 0; x < prod.size(); ++x) prod[x] = perms[a][perms[b][x]];
      table[a * n + b] = index.at(prod);
    }
  }
  return FiniteGroup::from_table(std::move(name), n, std::move(table), std::move(labels));
}

std::vector<Permutation> all_permutations(int degree) {
  Permutation p(static_cast<std::size_t>(degree));
  std::iota(p.begin(), p.end(), 0u);
  std::vector<Permutation> out;
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

}  // namespace

FiniteGroup symmetric_group(int degree) {
  if (degree < 2 || degree > 5) throw InvalidArgument("S n needs 2 <= n <= 5");
  return from_permutation_list("S" + std::to_string(degree), all_permutations(degree));
}

FiniteGroup alternating_group(int degree) {
  if (degree < 3 || degree > 5) throw InvalidArgument("A n needs 3 <= n <= 5");
  auto perms = all_permutations(degree);
  std::erase_if(perms, [](const Permutation& p) { return !is_even(p); });
  return from_permutation_list("A" + std::to_string(degree), perms);
}

FiniteGroup build_family(std::string_view family, std::size_t parameter) {
  if (family == "C") return cyclic_group(parameter);
  if (family == "D") return dihedral_group(parameter);
  if (family == "Q") {
    if (parameter != 8) throw InvalidArgument("only Q8 is supported");
    return quaternion_group();
  }
  if (family == "S") return symmetric_group(static_cast<int>(std::min<std::size_t>(parameter, 1000)));
  if (family == "A") return alternating_group(static_cast<int>(std::min<std::size_t>(parameter, 1000)));
  throw InvalidArgument("unknown group family '" + std::string(family) + "'");
}

FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h, std::size_t order_cap) {
  const std::size_t m = g.order(), k = h.order();
  if (m * k > order_cap) {
    throw BudgetExceeded("direct product order " + std::to_string(m * k) + " exceeds cap " +
                         std::to_string(order_cap));
  }
  const std::size_t n = m * k;
  std::vector<Element> table(n * n);
  std::vector<std::string> labels(n);
  for (std::size_t x = 0; x < n; ++x) {
    labels[x] = "(" + g.label(static_cast<Element>(x / k)) + "," + h.label(static_cast<Element>(x % k)) + ")";
    for (std::size_t y = 0; y < n; ++y) {
      const Element a = g.mul(static_cast<Element>(x / k), static_cast<Element>(y / k));
      const Element b = h.mul(static_cast<Element>(x % k), static_cast<Element>(y % k));
      table[x * n + y] = static_cast<Element>(a * k + b);
    }
  }
  return FiniteGroup::from_table(g.name() + "x" + h.name(), n, std::move(table), std::move(labels));
}

FiniteGroup from_permutation_generators(const std::vector<Permutation>& generators, std::size_t order_cap,
                                        std::string name) {
  const std::size_t degree = generators.empty() ? 0 : generators.front().size();
  for (const auto& p : generators) {
    if (p.size() != degree) throw InvalidArgument("permutation generators have different degrees");
    std::vector<bool> hit(degree);
    for (Element x : p) {
      if (x >= degree || hit[x]) throw InvalidArgument("permutation generator is not a bijection");
      hit[x] = true;
    }
  }
  Permutation id(degree);
  std::iota(id.begin(), id.end(), 0u);
  std::vector<Permutation> elements{id};
  std::map<Permutation, Element> seen{{id, 0}};
  Permutation prod(degree);
  for (std::size_t i = 0; i < elements.size(); ++i) {
    for (const auto& gen : generators) {
      for (std::size_t x = 0; x < degree; ++x) prod[x] = elements[i][gen[x]];
      if (seen.contains(prod)) continue;
      if (elements.size() >= order_cap) {
        throw BudgetExceeded("permutation closure exceeds order cap " + std::to_string(order_cap));
      }
      seen.emplace(prod, static_cast<Element>(elements.size()));
      elements.push_back(prod);
    }
  }
  if (name.empty()) name = "perm" + std::to_string(elements.size());
  return from_permutation_list(std::move(name), elements);
}

// ---------------------------------------------------------------------------
// Documents and specs

FiniteGroup from_cayley_document(std::string_view text, std::size_t order_cap) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("Cayley document: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("Cayley document must be an object");
  const std::string name = doc.value("name", std::string("custom"));
  try {
    if (doc.contains("perm-gens")) {
      auto gens = doc.at("perm-gens").get<std::vector<Permutation>>();
      return from_permutation_generators(gens, order_cap, name);
    }
    const auto n = doc.at("order").get<std::size_t>();
    if (n > order_cap) throw BudgetExceeded("group order " + std::to_string(n) + " exceeds cap");
    const auto& rows = doc.at("table");
    if (!rows.is_array() || rows.size() != n) throw GroupAxiomError(name + ": table must have " + std::to_string(n) + " rows");
    std::vector<Element> table;
    table.reserve(n * n);
    for (std::size_t r = 0; r < n; ++r) {
      const auto& row = rows[r];
      if (!row.is_array() || row.size() != n) {
        throw GroupAxiomError(name + ": table is not square (row " + std::to_string(r) + ")");
      }
      for (const auto& v : row) {
        const auto x = v.get<std::int64_t>();
        if (x < 0 || static_cast<std::size_t>(x) >= n) {
          throw GroupAxiomError(name + ": index " + std::to_string(x) + " out of range in row " + std::to_string(r));
        }
        table.push_back(static_cast<Element>(x));
      }
    }
    std::vector<std::string> labels;
    if (doc.contains("labels")) labels = doc.at("labels").get<std::vector<std::string>>();
    return FiniteGroup::from_table(name, n, std::move(table), std::move(labels));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("Cayley document: ") + e.what());
  }
}

FiniteGroup from_cayley_file(const std::string& path, std::size_t order_cap) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open group file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return from_cayley_document(buf.str(), order_cap);
}

std::string to_cayley_document(const FiniteGroup& g) {
  nlohmann::ordered_json doc;
  doc["name"] = g.name();
  doc["order"] = g.order();
  doc["labels"] = g.labels();
  auto rows = nlohmann::ordered_json::array();
  for (Element a = 0; a < g.order(); ++a) {
    auto row = g.row(a);
    rows.push_back(std::vector<Element>(row.begin(), row.end()));
  }
  doc["table"] = std::move(rows);
  return doc.dump();
}

namespace {

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

FiniteGroup parse_factor(const std::string& f, std::size_t order_cap) {
  if (f.empty() || !std::isalpha(static_cast<unsigned char>(f[0]))) throw ParseError("bad group factor '" + f + "'");
  const std::string family(1, f[0]);
  std::string digits = trim(std::string_view(f).substr(1));
  if (digits.empty() || digits.size() > 6 ||
      !std::all_of(digits.begin(), digits.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
    throw ParseError("bad group factor '" + f + "'");
  }
  const std::size_t n = std::stoul(digits);
  if (family == "C" || family == "D") {
    if (n > order_cap) throw BudgetExceeded("group order " + std::to_string(n) + " exceeds cap");
  }
  try {
    return build_family(family, n);
  } catch (const InvalidArgument& e) {
    throw ParseError("group spec '" + f + "': " + e.what());
  }
}

}  // namespace

FiniteGroup parse_group_spec(std::string_view spec_in, std::size_t order_cap) {
  const std::string spec = trim(spec_in);
  if (spec.empty()) throw ParseError("empty group spec");
  if (spec[0] == '@') return from_cayley_file(trim(std::string_view(spec).substr(1)), order_cap);
  std::vector<std::string> factors;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = spec.find('x', start);
    factors.push_back(trim(std::string_view(spec).substr(start, pos == std::string::npos ? pos : pos - start)));
    if (pos == std::string::npos) break;
    start = pos + 1;
  }
  FiniteGroup g = parse_factor(factors[0], order_cap);
  for (std::size_t i = 1; i < factors.size(); ++i) g = direct_product(g, parse_factor(factors[i], order_cap), order_cap);
  std::string name;
  for (const auto& f : factors) name += (name.empty() ? "" : "x") + f;
  std::erase_if(name, [](char c) { return std::isspace(static_cast<unsigned char>(c)); });
  g.set_name(name);
  return g;
}

// ---------------------------------------------------------------------------
// Maps

bool satisfies_law(const FiniteGroup& g, std::span<const Element> img, MapKind kind) {
  const std::size_t n = g.order();
  if (img.size() != n || img[0] != FiniteGroup::identity()) return false;
  std::vector<bool> hit(n);
  for (Element x : img) {
    if (x >= n || hit[x]) return false;
    hit[x] = true;
  }
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) {
      const Element lhs = img[g.mul(a, b)];
      const Element rhs = kind == MapKind::kAutomorphism ? g.mul(img[a], img[b]) : g.mul(img[b], img[a]);
      if (lhs != rhs) return false;
    }
  }
  return true;
}

GroupMap GroupMap::inverse() const {
  GroupMap m{group, std::vector<Element>(images.size()), kind};
  for (std::size_t x = 0; x < images.size(); ++x) m.images[images[x]] = static_cast<Element>(x);
  return m;
}

GroupMap identity_map(const FiniteGroup& g) {
  GroupMap m{&g, std::vector<Element>(g.order()), MapKind::kAutomorphism};
  std::iota(m.images.begin(), m.images.end(), 0u);
  return m;
}

GroupMap inner_automorphism(const FiniteGroup& g, Element a) {
  if (a >= g.order()) throw InvalidArgument("inner_automorphism: element out of range");
  GroupMap m{&g, std::vector<Element>(g.order()), MapKind::kAutomorphism};
  const Element ainv = g.inv(a);
  for (Element x = 0; x < g.order(); ++x) m.images[x] = g.mul(g.mul(a, x), ainv);
  return m;
}

GroupMap anti_from_auto(const GroupMap& zeta) {
  if (zeta.kind != MapKind::kAutomorphism) throw InvalidArgument("anti_from_auto expects an automorphism");
  const FiniteGroup& g = *zeta.group;
  GroupMap m{zeta.group, std::vector<Element>(g.order()), MapKind::kAntiAutomorphism};
  for (Element x = 0; x < g.order(); ++x) m.images[x] = zeta.images[g.inv(x)];
  return m;
}

GroupMap auto_from_anti(const GroupMap& gamma) {
  if (gamma.kind != MapKind::kAntiAutomorphism) throw InvalidArgument("auto_from_anti expects an anti-automorphism");
  const FiniteGroup& g = *gamma.group;
  GroupMap m{gamma.group, std::vector<Element>(g.order()), MapKind::kAutomorphism};
  for (Element x = 0; x < g.order(); ++x) m.images[x] = gamma.images[g.inv(x)];
  return m;
}

GroupMap compose(const GroupMap& outer, const GroupMap& inner) {
  if (outer.images.size() != inner.images.size()) throw InvalidArgument("compose: group mismatch");
  GroupMap m{outer.group, std::vector<Element>(inner.images.size()),
             outer.kind == inner.kind ? MapKind::kAutomorphism : MapKind::kAntiAutomorphism};
  for (std::size_t x = 0; x < m.images.size(); ++x) m.images[x] = outer.images[inner.images[x]];
  return m;
}

// ---------------------------------------------------------------------------
// Utilities

std::vector<std::size_t> element_orders(const FiniteGroup& g) {
  std::vector<std::size_t> orders(g.order());
  for (Element a = 0; a < g.order(); ++a) {
    std::size_t k = 1;
    for (Element x = a; x != FiniteGroup::identity(); x = g.mul(x, a)) ++k;
    orders[a] = k;
  }
  return orders;
}

bool is_abelian(const FiniteGroup& g) {
  for (Element a = 0; a < g.order(); ++a) {
    for (Element b = a + 1; b < g.order(); ++b) {
      if (g.mul(a, b) != g.mul(b, a)) return false;
    }
  }
  return true;
}

namespace {

std::vector<bool> generated_subgroup(const FiniteGroup& g, const std::vector<Element>& gens) {
  std::vector<bool> in(g.order());
  std::vector<Element> queue{FiniteGroup::identity()};
  in[0] = true;
  for (std::size_t i = 0; i < queue.size(); ++i) {
    for (Element s : gens) {
      const Element y = g.mul(queue[i], s);
      if (!in[y]) {
        in[y] = true;
        queue.push_back(y);
      }
    }
  }
  return in;
}

/// Backtracking over images of the greedy generators of `g` in `h`; every
/// complete consistent assignment is an injective homomorphism g -> h.
/// `emit` returns false to stop the search.
class EmbeddingSearch {
 public:
  EmbeddingSearch(const FiniteGroup& g, const FiniteGroup& h)
      : g_(g), h_(h), gens_(greedy_generators(g)), g_orders_(element_orders(g)), h_orders_(element_orders(h)) {}

  void run(const std::function<bool(const std::vector<Element>&)>& emit) {
    emit_ = &emit;
    phi_.assign(g_.order(), kUnset);
    used_.assign(h_.order(), false);
    phi_[0] = 0;
    used_[0] = true;
    assigned_ = {0};
    stop_ = false;
    extend(0);
  }

 private:
  static constexpr Element kUnset = static_cast<Element>(-1);

  void extend(std::size_t k) {
    if (stop_) return;
    if (k == gens_.size()) {
      if (assigned_.size() == g_.order() && !(*emit_)(phi_)) stop_ = true;
      return;
    }
    const Element gen = gens_[k];
    for (Element y = 0; y < h_.order() && !stop_; ++y) {
      if (used_[y] || h_orders_[y] != g_orders_[gen]) continue;
      const std::size_t mark = assigned_.size();
      if (close(k, y)) extend(k + 1);
      for (std::size_t i = mark; i < assigned_.size(); ++i) {
        used_[phi_[assigned_[i]]] = false;
        phi_[assigned_[i]] = kUnset;
      }
      assigned_.resize(mark);
    }
  }

  // Extends phi to <gens_[0..k]> given phi(gens_[k]) = y; false on conflict.
  bool close(std::size_t k, Element y) {
    if (!assign(gens_[k], y)) return false;
    for (std::size_t i = 0; i < assigned_.size(); ++i) {
      const Element x = assigned_[i];
      for (std::size_t j = 0; j <= k; ++j) {
        const Element z = g_.mul(x, gens_[j]);
        const Element target = h_.mul(phi_[x], phi_[gens_[j]]);
        if (phi_[z] == kUnset) {
          if (!assign(z, target)) return false;
        } else if (phi_[z] != target) {
          return false;
        }
      }
    }
    return true;
  }

  bool assign(Element x, Element y) {
    if (used_[y]) return false;
    phi_[x] = y;
    used_[y] = true;
    assigned_.push_back(x);
    return true;
  }

  const FiniteGroup& g_;
  const FiniteGroup& h_;
  std::vector<Element> gens_;
  std::vector<std::size_t> g_orders_, h_orders_;
  std::vector<Element> phi_;
  std::vector<bool> used_;
  std::vector<Element> assigned_;
  const std::function<bool(const std::vector<Element>&)>* emit_ = nullptr;
  bool stop_ = false;
};

}  // namespace

std::vector<Element> greedy_generators(const FiniteGroup& g) {
  std::vector<Element> gens;
  std::vector<bool> in = generated_subgroup(g, gens);
  for (Element a = 0; a < g.order(); ++a) {
    if (in[a]) continue;
    gens.push_back(a);
    in = generated_subgroup(g, gens);
  }
  return gens;
}

std::vector<GroupMap> enumerate_automorphisms(const FiniteGroup& g, std::size_t order_cap, std::size_t count_cap) {
  if (g.order() > order_cap) {
    throw BudgetExceeded("automorphism enumeration: order " + std::to_string(g.order()) + " exceeds cap " +
                         std::to_string(order_cap));
  }
  std::vector<GroupMap> out;
  EmbeddingSearch(g, g).run([&](const std::vector<Element>& phi) {
    if (out.size() >= count_cap) {
      throw BudgetExceeded("automorphism enumeration: more than " + std::to_string(count_cap) + " automorphisms");
    }
    out.push_back(GroupMap{&g, phi, MapKind::kAutomorphism});
    return true;
  });
  for (const auto& m : out) {
    if (!satisfies_law(g, m.images, MapKind::kAutomorphism)) {
      throw GroupAxiomError("automorphism enumeration produced a non-homomorphism");
    }
  }
  const GroupMap id = identity_map(g);
  auto it = std::find(out.begin(), out.end(), id);
  std::rotate(out.begin(), it, it + 1);
  return out;
}

bool is_isomorphic(const FiniteGroup& g, const FiniteGroup& h, std::size_t cap) {
  if (g.order() != h.order()) return false;
  if (g.order() > cap) throw BudgetExceeded("is_isomorphic: order exceeds cap " + std::to_string(cap));
  auto pg = element_orders(g), ph = element_orders(h);
  std::sort(pg.begin(), pg.end());
  std::sort(ph.begin(), ph.end());
  if (pg != ph) return false;
  bool found = false;
  EmbeddingSearch(g, h).run([&](const std::vector<Element>&) {
    found = true;
    return false;
  });
  return found;
}

// ---------------------------------------------------------------------------
// Catalog

namespace {

std::size_t factor_order(const std::string& f) {
  if (f == "Q8") return 8;
  const std::size_t n = std::stoul(f.substr(1));
  switch (f[0]) {
    case 'S': return n == 2 ? 2 : n == 3 ? 6 : n == 4 ? 24 : 120;
    case 'A': return n == 3 ? 3 : n == 4 ? 12 : 60;
    default: return n;
  }
}

std::size_t spec_order(const std::string& spec) {
  std::size_t order = 1, start = 0;
  while (true) {
    const std::size_t pos = spec.find('x', start);
    order *= factor_order(spec.substr(start, pos == std::string::npos ? pos : pos - start));
    if (pos == std::string::npos) return order;
    start = pos + 1;
  }
}

}  // namespace

std::vector<std::string> catalog_specs(std::size_t max_order) {
  std::vector<std::string> specs;
  for (std::size_t n = 1; n <= std::min<std::size_t>(max_order, 64); ++n) specs.push_back("C" + std::to_string(n));
  for (std::size_t n = 4; n <= std::min<std::size_t>(max_order, 64); n += 2) specs.push_back("D" + std::to_string(n));
  for (const char* s : {"Q8", "S3", "S4", "S5", "A4", "A5"}) specs.emplace_back(s);
  for (const char* s : {"C2xC2", "C2xC4", "C2xC2xC2", "C3xC3", "C2xC6", "C2xS3", "C2xC8", "C4xC4", "C2xC2xC4",
                        "C2xC2xC2xC2", "C2xD8", "C2xQ8", "C3xC6", "C3xS3", "C2xC10", "C2xC12", "C2xC2xC6", "C2xA4",
                        "C2xD12", "C3xD8", "C3xQ8", "C4xS3", "C5xC5", "C3xC9", "C3xC3xC3", "C2xC14", "C2xC16",
                        "C4xC8", "C2xC2xC8", "C2xC4xC4", "C2xC2xC2xC4", "C2xC2xC2xC2xC2", "C2xD16", "C4xQ8",
                        "C4xD8", "C2xC2xD8", "C2xC2xQ8", "S3xS3", "C3xA4", "C6xS3", "C2xC2xA4", "S3xD8", "Q8xS3",
                        "C2xS4", "C3xQ8xC2"}) {
    specs.emplace_back(s);
  }
  std::erase_if(specs, [&](const std::string& s) { return spec_order(s) > max_order; });
  std::sort(specs.begin(), specs.end(), [](const std::string& a, const std::string& b) {
    const auto oa = spec_order(a), ob = spec_order(b);
    return oa != ob ? oa < ob : a < b;
  });
  return specs;
}

}  // namespace wordmaps
