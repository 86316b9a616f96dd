#include "xpg/group.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "xpg/numth.hpp"

namespace xpg {

FiniteGroup::FiniteGroup(int order, std::vector<int> table, int identity,
                         std::vector<std::string> names)
    : order_(order), table_(std::move(table)), identity_(identity), names_(std::move(names)) {
  if (order_ < 1) throw std::invalid_argument("group order must be positive");
  if (table_.size() != static_cast<std::size_t>(order_) * order_)
    throw std::invalid_argument("multiplication table has the wrong size");
  for (int v : table_)
    if (v < 0 || v >= order_)
      throw std::invalid_argument("multiplication table entry out of range");
  if (identity_ < 0 || identity_ >= order_)
    throw std::invalid_argument("identity index out of range");
  if (names_.empty()) {
    names_.reserve(order_);
    for (int i = 0; i < order_; ++i) names_.push_back(std::to_string(i));
  } else if (names_.size() != static_cast<std::size_t>(order_)) {
    throw std::invalid_argument("name list has the wrong size");
  }
}

int FiniteGroup::inverse(int g) const {
  if (g < 0 || g >= order_) throw std::invalid_argument("inverse: element out of range");
  for (int b = 0; b < order_; ++b)
    if (mul(g, b) == identity_ && mul(b, g) == identity_) return b;
  throw non_group_error("element " + names_[g] + " has no two-sided inverse");
}

bool FiniteGroup::is_abelian() const {
  for (int a = 0; a < order_; ++a)
    for (int b = a + 1; b < order_; ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

std::optional<int> FiniteGroup::element_by_name(const std::string& name) const {
  for (int i = 0; i < order_; ++i)
    if (names_[i] == name) return i;
  return std::nullopt;
}

namespace {

std::string triple_str(int a, int b, int c) {
  return "(" + std::to_string(a) + ", " + std::to_string(b) + ", " + std::to_string(c) + ")";
}

void check_associativity_triple(const FiniteGroup& g, int a, int b, int c) {
  int left = g.mul(g.mul(a, b), c);
  int right = g.mul(a, g.mul(b, c));
  if (left != right)
    throw non_group_error("associativity fails at " + triple_str(a, b, c) + ": (a*b)*c = " +
                          std::to_string(left) + " but a*(b*c) = " + std::to_string(right));
}

}  // namespace

void check_group_axioms(const FiniteGroup& g, AxiomCheck mode) {
  const int n = g.order();
  const int e = g.identity();
  for (int a = 0; a < n; ++a) {
    if (g.mul(e, a) != a)
      throw non_group_error("identity axiom fails: e*" + std::to_string(a) + " = " +
                            std::to_string(g.mul(e, a)));
    if (g.mul(a, e) != a)
      throw non_group_error("identity axiom fails: " + std::to_string(a) + "*e = " +
                            std::to_string(g.mul(a, e)));
  }
  for (int a = 0; a < n; ++a) {
    bool found = false;
    for (int b = 0; b < n && !found; ++b)
      found = g.mul(a, b) == e && g.mul(b, a) == e;
    if (!found)
      throw non_group_error("inverse axiom fails: element " + std::to_string(a) +
                            " has no two-sided inverse");
  }
  if (mode == AxiomCheck::kFull || n <= 256) {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c) check_associativity_triple(g, a, b, c);
  } else {
    std::mt19937 rng(0x9e3779b9u);
    std::uniform_int_distribution<int> pick(0, n - 1);
    for (int t = 0; t < 10000; ++t)
      check_associativity_triple(g, pick(rng), pick(rng), pick(rng));
  }
}

FiniteGroup make_cyclic(int n) {
  if (n < 1 || n > kMaxGroupOrder)
    throw std::invalid_argument("make_cyclic: order must be between 1 and " +
                                std::to_string(kMaxGroupOrder));
  std::vector<int> table(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) table[a * n + b] = (a + b) % n;
  return FiniteGroup(n, std::move(table), 0);
}

FiniteGroup make_direct_product(const FiniteGroup& h, const FiniteGroup& k) {
  long long order = static_cast<long long>(h.order()) * k.order();
  if (order > kMaxGroupOrder)
    throw std::invalid_argument("make_direct_product: order exceeds the cap of " +
                                std::to_string(kMaxGroupOrder));
  const int nh = h.order(), nk = k.order(), n = static_cast<int>(order);
  std::vector<int> table(static_cast<std::size_t>(n) * n);
  std::vector<std::string> names;
  names.reserve(n);
  for (int a = 0; a < nh; ++a)
    for (int b = 0; b < nk; ++b) names.push_back(h.name(a) + "," + k.name(b));
  for (int a = 0; a < nh; ++a)
    for (int b = 0; b < nk; ++b)
      for (int a2 = 0; a2 < nh; ++a2)
        for (int b2 = 0; b2 < nk; ++b2)
          table[(a * nk + b) * n + (a2 * nk + b2)] = h.mul(a, a2) * nk + k.mul(b, b2);
  return FiniteGroup(n, std::move(table), h.identity() * nk + k.identity(), std::move(names));
}

bool is_automorphism(const FiniteGroup& g, const Automorphism& a) {
  const int n = g.order();
  if (a.map.size() != static_cast<std::size_t>(n)) return false;
  std::vector<bool> hit(n, false);
  for (int v : a.map) {
    if (v < 0 || v >= n || hit[v]) return false;
    hit[v] = true;
  }
  if (a.map[g.identity()] != g.identity()) return false;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (a.map[g.mul(x, y)] != g.mul(a.map[x], a.map[y])) return false;
  return true;
}

Automorphism identity_aut(const FiniteGroup& g) {
  Automorphism a;
  a.map.resize(g.order());
  std::iota(a.map.begin(), a.map.end(), 0);
  return a;
}

Automorphism aut_cyclic_mult(int n, int k) {
  if (n < 1) throw std::invalid_argument("aut_cyclic_mult: n must be positive");
  int kk = ((k % n) + n) % n;
  if (std::gcd(kk == 0 ? n : kk, n) != 1)
    throw std::invalid_argument("aut_cyclic_mult: multiplication by " + std::to_string(k) +
                                " is not an automorphism of Z_" + std::to_string(n) +
                                " (gcd(k, n) != 1)");
  Automorphism a;
  a.map.resize(n);
  for (int i = 0; i < n; ++i) a.map[i] = static_cast<int>(static_cast<long long>(i) * kk % n);
  return a;
}

Automorphism inversion_aut(const FiniteGroup& h) {
  if (!h.is_abelian())
    throw std::invalid_argument(
        "inversion_aut: inversion is not a homomorphism on a nonabelian group");
  Automorphism a;
  a.map.resize(h.order());
  for (int g = 0; g < h.order(); ++g) a.map[g] = h.inverse(g);
  return a;
}

Automorphism compose(const Automorphism& f, const Automorphism& g) {
  Automorphism out;
  out.map.resize(g.map.size());
  for (std::size_t i = 0; i < g.map.size(); ++i) out.map[i] = f.map[g.map[i]];
  return out;
}

void validate_hom_to_aut(const FiniteGroup& domain, const FiniteGroup& target,
                         const HomToAut& hom) {
  if (hom.assignment.size() != static_cast<std::size_t>(domain.order()))
    throw std::invalid_argument("semidirect action: one automorphism per domain element required");
  for (int b = 0; b < domain.order(); ++b)
    if (!is_automorphism(target, hom.assignment[b]))
      throw std::invalid_argument("semidirect action: assignment for element " +
                                  domain.name(b) + " is not an automorphism of the target");
  if (hom.assignment[domain.identity()].map != identity_aut(target).map)
    throw std::invalid_argument("semidirect action: identity must act as the identity map");
  for (int b = 0; b < domain.order(); ++b)
    for (int b2 = 0; b2 < domain.order(); ++b2)
      if (hom.assignment[domain.mul(b, b2)].map !=
          compose(hom.assignment[b], hom.assignment[b2]).map)
        throw std::invalid_argument("semidirect action: assignment(" + domain.name(b) + "*" +
                                    domain.name(b2) +
                                    ") differs from the composite assignment (not a homomorphism)");
}

HomToAut trivial_action(const FiniteGroup& domain, const FiniteGroup& target) {
  HomToAut hom;
  hom.assignment.assign(domain.order(), identity_aut(target));
  return hom;
}

HomToAut mult_action(int target_n, int k, int domain_m) {
  HomToAut hom;
  hom.assignment.reserve(domain_m);
  for (int b = 0; b < domain_m; ++b)
    hom.assignment.push_back(
        aut_cyclic_mult(target_n, static_cast<int>(mod_pow(k, b, target_n))));
  return hom;
}

HomToAut inversion_action(const FiniteGroup& target, int domain_m) {
  HomToAut hom;
  auto inv = inversion_aut(target);
  auto id = identity_aut(target);
  hom.assignment.reserve(domain_m);
  for (int b = 0; b < domain_m; ++b) hom.assignment.push_back(b % 2 == 1 ? inv : id);
  return hom;
}

HomToAut hom_to_aut_from_file(const std::string& path, const FiniteGroup& domain,
                              const FiniteGroup& target) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open action table file: " + path);
  HomToAut hom;
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first) || first[0] == '#') continue;
    ls.clear();
    ls.str(line);
    Automorphism a;
    int v;
    while (ls >> v) a.map.push_back(v);
    if (a.map.size() != static_cast<std::size_t>(target.order()))
      throw std::invalid_argument("action table file: each row needs " +
                                  std::to_string(target.order()) + " images");
    hom.assignment.push_back(std::move(a));
  }
  if (hom.assignment.size() != static_cast<std::size_t>(domain.order()))
    throw std::invalid_argument("action table file: expected " +
                                std::to_string(domain.order()) + " rows, got " +
                                std::to_string(hom.assignment.size()));
  return hom;
}

SemidirectProduct make_semidirect(const FiniteGroup& h, const FiniteGroup& k,
                                  const HomToAut& phi) {
  validate_hom_to_aut(k, h, phi);
  long long order = static_cast<long long>(h.order()) * k.order();
  if (order > kMaxGroupOrder)
    throw std::invalid_argument("make_semidirect: order exceeds the cap of " +
                                std::to_string(kMaxGroupOrder));
  const int nh = h.order(), nk = k.order(), n = static_cast<int>(order);
  std::vector<int> table(static_cast<std::size_t>(n) * n);
  std::vector<std::string> names;
  names.reserve(n);
  for (int a = 0; a < nh; ++a)
    for (int b = 0; b < nk; ++b) names.push_back(h.name(a) + "," + k.name(b));
  for (int a = 0; a < nh; ++a)
    for (int b = 0; b < nk; ++b)
      for (int a2 = 0; a2 < nh; ++a2)
        for (int b2 = 0; b2 < nk; ++b2)
          table[(a * nk + b) * n + (a2 * nk + b2)] =
              h.mul(a, phi.assignment[b].map[a2]) * nk + k.mul(b, b2);
  FiniteGroup g(n, std::move(table), h.identity() * nk + k.identity(), std::move(names));
  return SemidirectProduct{std::move(g), h, k, phi};
}

FiniteGroup make_dihedral(int n) {
  if (n < 1) throw std::invalid_argument("make_dihedral: n must be positive");
  auto rotations = make_cyclic(n);
  return make_semidirect(rotations, make_cyclic(2), inversion_action(rotations, 2)).group;
}

namespace {

bool is_even_permutation(const std::vector<int>& p) {
  std::vector<bool> seen(p.size(), false);
  int parity = 0;
  for (std::size_t s = 0; s < p.size(); ++s) {
    if (seen[s]) continue;
    int len = 0;
    for (std::size_t x = s; !seen[x]; x = p[x]) {
      seen[x] = true;
      ++len;
    }
    parity ^= (len - 1) & 1;
  }
  return parity == 0;
}

std::string cycle_name(const std::vector<int>& p) {
  std::string out;
  std::vector<bool> seen(p.size(), false);
  for (std::size_t s = 0; s < p.size(); ++s) {
    if (seen[s] || p[s] == static_cast<int>(s)) {
      seen[s] = true;
      continue;
    }
    out.push_back('(');
    for (std::size_t x = s; !seen[x]; x = p[x]) {
      seen[x] = true;
      out.push_back(static_cast<char>('a' + x));
    }
    out.push_back(')');
  }
  if (out.empty()) out = "(1)";
  return out;
}

FiniteGroup make_permutation_group(int n, bool even_only, const char* what) {
  if (n < 1) throw std::invalid_argument(std::string(what) + ": n must be positive");
  if (n > 26) throw std::invalid_argument(std::string(what) + ": n is too large");
  long long order = 1;
  for (int i = 2; i <= n; ++i) {
    order *= i;
    if (order > 2LL * kMaxGroupOrder) break;
  }
  if (even_only && n >= 2) order /= 2;
  if (order > kMaxGroupOrder)
    throw std::invalid_argument(std::string(what) + ": order exceeds the cap of " +
                                std::to_string(kMaxGroupOrder));

  std::vector<std::vector<int>> perms;
  std::vector<int> base(n);
  std::iota(base.begin(), base.end(), 0);
  do {
    if (!even_only || is_even_permutation(base)) perms.push_back(base);
  } while (std::next_permutation(base.begin(), base.end()));

  std::map<std::vector<int>, int> index;
  for (std::size_t i = 0; i < perms.size(); ++i) index[perms[i]] = static_cast<int>(i);

  const int sz = static_cast<int>(perms.size());
  std::vector<int> table(static_cast<std::size_t>(sz) * sz);
  std::vector<int> composed(n);
  for (int i = 0; i < sz; ++i)
    for (int j = 0; j < sz; ++j) {
      for (int x = 0; x < n; ++x) composed[x] = perms[i][perms[j][x]];
      table[i * sz + j] = index.at(composed);
    }
  std::vector<std::string> names;
  names.reserve(sz);
  for (const auto& p : perms) names.push_back(cycle_name(p));
  // the identity permutation is lexicographically first
  return FiniteGroup(sz, std::move(table), 0, std::move(names));
}

}  // namespace

FiniteGroup make_symmetric(int n) { return make_permutation_group(n, false, "make_symmetric"); }

FiniteGroup make_alternating(int n) { return make_permutation_group(n, true, "make_alternating"); }

FiniteGroup from_cayley_table(std::istream& in) {
  std::vector<int> values;
  std::vector<std::pair<int, std::string>> name_lines;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok)) continue;  // blank line
    if (tok == "#") {
      int idx;
      std::string name;
      if (!(ls >> idx) || !std::getline(ls, name))
        throw std::invalid_argument("cayley table line " + std::to_string(lineno) +
                                    ": name lines are '# <index> <name>'");
      std::size_t start = name.find_first_not_of(" \t");
      if (start == std::string::npos)
        throw std::invalid_argument("cayley table line " + std::to_string(lineno) +
                                    ": name lines are '# <index> <name>'");
      std::size_t end = name.find_last_not_of(" \t\r");
      name_lines.emplace_back(idx, name.substr(start, end - start + 1));
      continue;
    }
    ls.clear();
    ls.str(line);
    while (ls >> tok) {
      try {
        std::size_t used = 0;
        int v = std::stoi(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
        values.push_back(v);
      } catch (const std::exception&) {
        throw std::invalid_argument("cayley table line " + std::to_string(lineno) +
                                    ": '" + tok + "' is not an integer");
      }
    }
  }
  if (values.empty()) throw std::invalid_argument("cayley table: empty input");
  const int n = values[0];
  if (n < 1 || n > kMaxGroupOrder)
    throw std::invalid_argument("cayley table: order " + std::to_string(n) + " out of range");
  if (values.size() != static_cast<std::size_t>(n) * n + 1)
    throw std::invalid_argument("cayley table: expected " + std::to_string(n * n) +
                                " entries after the order, got " +
                                std::to_string(values.size() - 1));
  std::vector<int> table(values.begin() + 1, values.end());
  for (std::size_t i = 0; i < table.size(); ++i)
    if (table[i] < 0 || table[i] >= n)
      throw std::invalid_argument("cayley table: entry at row " + std::to_string(i / n + 1) +
                                  ", column " + std::to_string(i % n + 1) + " is out of range");

  int identity = -1;
  for (int r = 0; r < n && identity < 0; ++r) {
    bool ok = true;
    for (int j = 0; j < n && ok; ++j) ok = table[r * n + j] == j;
    if (ok) identity = r;
  }
  if (identity < 0) throw non_group_error("identity axiom fails: no row equals 0..n-1");

  std::vector<std::string> names;
  if (!name_lines.empty()) {
    names.resize(n);
    for (int i = 0; i < n; ++i) names[i] = std::to_string(i);
    for (auto& [idx, name] : name_lines) {
      if (idx < 0 || idx >= n)
        throw std::invalid_argument("cayley table: name index " + std::to_string(idx) +
                                    " out of range");
      names[idx] = name;
    }
  }
  FiniteGroup g(n, std::move(table), identity, std::move(names));
  check_group_axioms(g, AxiomCheck::kFull);  // external data is untrusted
  return g;
}

FiniteGroup from_cayley_table(const std::string& text) {
  std::istringstream in(text);
  return from_cayley_table(in);
}

FiniteGroup from_cayley_table_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open cayley table file: " + path);
  return from_cayley_table(in);
}

int element_order(const FiniteGroup& g, int a) {
  if (a < 0 || a >= g.order())
    throw std::invalid_argument("element_order: element out of range");
  int x = a, t = 1;
  while (x != g.identity()) {
    x = g.mul(x, a);
    if (++t > g.order())
      throw non_group_error("element " + std::to_string(a) +
                            " has no finite order; the table is not a group");
  }
  return t;
}

int power(const FiniteGroup& g, int a, long long k) {
  if (a < 0 || a >= g.order()) throw std::invalid_argument("power: element out of range");
  if (k < 0) throw std::invalid_argument("power: exponent must be nonnegative");
  int result = g.identity();
  int base = a;
  while (k > 0) {
    if (k & 1) result = g.mul(result, base);
    base = g.mul(base, base);
    k >>= 1;
  }
  return result;
}

CyclicSubgroup cyclic_subgroup(const FiniteGroup& g, int a) {
  CyclicSubgroup c;
  c.generator = a;
  c.elements.push_back(g.identity());
  for (int x = a; x != g.identity(); x = g.mul(x, a)) {
    c.elements.push_back(x);
    if (c.elements.size() > static_cast<std::size_t>(g.order()))
      throw non_group_error("element " + std::to_string(a) +
                            " has no finite order; the table is not a group");
  }
  c.order = static_cast<int>(c.elements.size());
  for (int m = 1; m <= c.order; ++m)
    if (std::gcd(m, c.order) == 1) c.generator_set.push_back(c.elements[m % c.order]);
  std::sort(c.generator_set.begin(), c.generator_set.end());
  return c;
}

std::vector<CyclicSubgroup> all_cyclic_subgroups(const FiniteGroup& g) {
  std::map<std::vector<int>, CyclicSubgroup> dedup;
  for (int a = 0; a < g.order(); ++a) {
    auto c = cyclic_subgroup(g, a);
    auto key = c.elements;
    std::sort(key.begin(), key.end());
    dedup.try_emplace(std::move(key), std::move(c));
  }
  std::vector<std::pair<std::vector<int>, CyclicSubgroup>> items;
  items.reserve(dedup.size());
  for (auto& [key, sub] : dedup) items.emplace_back(key, std::move(sub));
  std::stable_sort(items.begin(), items.end(), [](const auto& a, const auto& b) {
    if (a.second.order != b.second.order) return a.second.order < b.second.order;
    return a.first < b.first;
  });
  std::vector<CyclicSubgroup> out;
  out.reserve(items.size());
  for (auto& [key, sub] : items) out.push_back(std::move(sub));
  return out;
}

bool is_p_group(const FiniteGroup& g, int p) {
  if (!is_prime(p)) throw std::invalid_argument("is_p_group: p must be prime");
  int n = g.order();
  while (n % p == 0) n /= p;
  return n == 1;
}

std::vector<int> primary_elements(const FiniteGroup& g, int q) {
  if (!is_prime(q)) throw std::invalid_argument("primary_elements: q must be prime");
  std::vector<int> out;
  for (int a = 0; a < g.order(); ++a) {
    int o = element_order(g, a);
    while (o % q == 0) o /= q;
    if (o == 1) out.push_back(a);
  }
  return out;
}

FiniteGroup induced_subgroup(const FiniteGroup& g, std::vector<int> elements) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  if (elements.empty()) throw std::invalid_argument("induced_subgroup: empty subset");
  for (int v : elements)
    if (v < 0 || v >= g.order())
      throw std::invalid_argument("induced_subgroup: element out of range");
  auto pos = [&](int v) {
    auto it = std::lower_bound(elements.begin(), elements.end(), v);
    if (it == elements.end() || *it != v) return -1;
    return static_cast<int>(it - elements.begin());
  };
  const int m = static_cast<int>(elements.size());
  std::vector<int> table(static_cast<std::size_t>(m) * m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      int p = pos(g.mul(elements[i], elements[j]));
      if (p < 0)
        throw std::invalid_argument("induced_subgroup: subset is not closed: " +
                                    g.name(elements[i]) + " * " + g.name(elements[j]) +
                                    " lies outside it");
      table[i * m + j] = p;
    }
  int e = pos(g.identity());
  if (e < 0)
    throw std::invalid_argument("induced_subgroup: subset does not contain the identity");
  std::vector<std::string> names;
  names.reserve(m);
  for (int v : elements) names.push_back(g.name(v));
  return FiniteGroup(m, std::move(table), e, std::move(names));
}

bool isomorphic_groups(const FiniteGroup& a, const FiniteGroup& b) {
  if (a.order() > 12 || b.order() > 12)
    throw std::invalid_argument("isomorphic_groups: brute-force matching handles order <= 12 only");
  if (a.order() != b.order()) return false;
  const int n = a.order();
  std::vector<int> orda(n), ordb(n);
  for (int i = 0; i < n; ++i) {
    orda[i] = element_order(a, i);
    ordb[i] = element_order(b, i);
  }
  {
    auto sa = orda, sb = ordb;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return false;
  }
  std::vector<int> image(n, -1);
  std::vector<bool> used(n, false);
  image[a.identity()] = b.identity();
  used[b.identity()] = true;

  // checks every mapped pair whose product is also mapped, so a completed
  // assignment is a verified homomorphism
  auto consistent = [&]() {
    for (int m = 0; m < n; ++m) {
      if (image[m] < 0) continue;
      for (int m2 = 0; m2 < n; ++m2) {
        if (image[m2] < 0) continue;
        int prod = a.mul(m, m2);
        if (image[prod] >= 0 && image[prod] != b.mul(image[m], image[m2])) return false;
      }
    }
    return true;
  };
  std::function<bool()> extend = [&]() {
    int x = -1;
    for (int i = 0; i < n; ++i)
      if (image[i] < 0) {
        x = i;
        break;
      }
    if (x < 0) return true;
    for (int y = 0; y < n; ++y) {
      if (used[y] || orda[x] != ordb[y]) continue;
      image[x] = y;
      used[y] = true;
      if (consistent() && extend()) return true;
      image[x] = -1;
      used[y] = false;
    }
    return false;
  };
  return extend();
}

}  // namespace xpg
