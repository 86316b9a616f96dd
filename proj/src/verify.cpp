#include "xpg/verify.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <tuple>

#include "xpg/digraph.hpp"
#include "xpg/power_graph.hpp"

namespace xpg {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::kPass: return "pass";
    case Verdict::kCounterexample: return "counterexample";
    case Verdict::kNotApplicable: return "not-applicable";
    case Verdict::kResourceExhausted: return "resource-exhausted";
  }
  return "?";
}

namespace {

VerificationReport implication(std::string claim, std::string desc, std::string params,
                               bool hyp, bool concl, std::string witness) {
  VerificationReport r;
  r.claim_id = std::move(claim);
  r.group_description = std::move(desc);
  r.parameters = std::move(params);
  r.hypothesis_holds = hyp;
  r.conclusion_holds = concl;
  r.verdict = !hyp ? Verdict::kNotApplicable
                   : (concl ? Verdict::kPass : Verdict::kCounterexample);
  r.witness = std::move(witness);
  return r;
}

VerificationReport biconditional(std::string claim, std::string desc, std::string params,
                                 bool left, bool right, std::string witness) {
  VerificationReport r;
  r.claim_id = std::move(claim);
  r.group_description = std::move(desc);
  r.parameters = std::move(params);
  r.hypothesis_holds = left;
  r.conclusion_holds = right;
  r.verdict = left == right ? Verdict::kPass : Verdict::kCounterexample;
  r.witness = std::move(witness);
  return r;
}

std::string edge_str(const FiniteGroup& g, std::pair<int, int> e) {
  return g.name(e.first) + " -> " + g.name(e.second);
}

// first edge present in exactly one of the two graphs
std::string first_edge_diff(const FiniteGroup& g, const Digraph& a, const Digraph& b,
                            const std::string& a_tag, const std::string& b_tag) {
  for (auto e : a.edges())
    if (!b.has_edge(e.first, e.second))
      return "edge " + edge_str(g, e) + " in " + a_tag + " but not in " + b_tag;
  for (auto e : b.edges())
    if (!a.has_edge(e.first, e.second))
      return "edge " + edge_str(g, e) + " in " + b_tag + " but not in " + a_tag;
  return "";
}

std::vector<std::vector<int>> canonical_cells(std::vector<std::vector<int>> cells) {
  for (auto& c : cells) std::sort(c.begin(), c.end());
  std::sort(cells.begin(), cells.end());
  return cells;
}

std::string elements_str(const FiniteGroup& g, const std::vector<int>& elems) {
  std::string out = "{";
  for (std::size_t i = 0; i < elems.size(); ++i) {
    if (i) out += ",";
    out += g.name(elems[i]);
  }
  return out + "}";
}

bool coprime_orders(const SemidirectProduct& sp) {
  return std::gcd(sp.left.order(), sp.right.order()) == 1;
}

std::set<int> embedded_pairs(const SemidirectProduct& sp, const std::vector<int>& as,
                             const std::vector<int>& bs) {
  std::set<int> out;
  for (int a : as)
    for (int b : bs) out.insert(sp.pair_index(a, b));
  return out;
}

std::string ab_params(int a, int b) {
  return "a=" + std::to_string(a) + ",b=" + std::to_string(b);
}

}  // namespace

VerificationReport check_no_divisor(const std::string& desc, const FiniteGroup& g,
                                    const ExclusionSet& x) {
  if (!x.all_members_prime())
    throw std::invalid_argument("check_no_divisor: exclusion set must consist of primes");
  const std::string claim = "no-divisor-identity";
  const std::string params = "X=" + x.to_string();
  bool hyp = std::none_of(x.members().begin(), x.members().end(),
                          [&](int p) { return g.order() % p == 0; });
  if (!hyp) return implication(claim, desc, params, false, false, "");
  auto excluded = directed_power_graph(g, x);
  auto full = directed_power_graph(g, ExclusionSet{});
  bool concl = excluded == full;
  return implication(claim, desc, params, true, concl,
                     concl ? "" : first_edge_diff(g, full, excluded, "full", "excluded"));
}

VerificationReport check_all_primes(const std::string& desc, const FiniteGroup& g,
                                    const ExclusionSet& x) {
  if (!x.all_members_prime())
    throw std::invalid_argument("check_all_primes: exclusion set must consist of primes");
  const std::string claim = "all-primes-clique-union";
  const std::string params = "X=" + x.to_string();
  auto factors = prime_factors(g.order());
  bool hyp = std::all_of(factors.begin(), factors.end(), [&](int p) { return x.contains(p); });
  if (!hyp) return implication(claim, desc, params, false, false, "");
  auto graph = directed_power_graph(g, x);
  auto comps = canonical_cells(weak_components(graph).cells);
  auto cells = canonical_cells(generator_partition(g).cells);
  std::string witness;
  bool concl = true;
  if (comps != cells) {
    concl = false;
    witness = "weak components differ from the generator cells";
  } else if (!is_directed_clique_union(graph)) {
    concl = false;
    witness = "a weak component is not a directed clique";
  }
  return implication(claim, desc, params, true, concl, witness);
}

VerificationReport check_intersection(const std::string& desc, const FiniteGroup& g,
                                      const ExclusionSet& x, const ExclusionSet& y) {
  const std::string claim = "exclusion-intersection";
  const std::string params = "X=" + x.to_string() + ",Y=" + y.to_string();
  auto both = directed_power_graph(g, x.union_with(y));
  auto gx = directed_power_graph(g, x);
  auto gy = directed_power_graph(g, y);
  std::vector<std::pair<int, int>> meet;
  std::set_intersection(gx.edges().begin(), gx.edges().end(), gy.edges().begin(),
                        gy.edges().end(), std::back_inserter(meet));
  bool concl = both.edges() == meet;
  std::string witness;
  if (!concl)
    witness = first_edge_diff(g, both, Digraph(g.order(), meet), "union-excluded",
                              "edge intersection");
  return implication(claim, desc, params, true, concl, witness);
}

VerificationReport check_hall_semidirect(const std::string& desc, const SemidirectProduct& sp,
                                         int a, int b) {
  const std::string claim = "hall-semidirect-closure";
  const FiniteGroup& h = sp.left;
  const FiniteGroup& k = sp.right;
  const FiniteGroup& g = sp.group;
  std::string params = ab_params(a, b);
  if (!coprime_orders(sp))
    return implication(claim, desc, params, false, false, "factor orders are not coprime");
  auto pi = ExclusionSet::prime_factors_of(h.order());

  auto ca = cyclic_subgroup(h, a);
  auto cb = cyclic_subgroup(k, b);
  std::set<int> a_copy;  // <a> embedded in G
  for (int x : ca.elements) a_copy.insert(sp.pair_index(x, k.identity()));
  const int bg = sp.pair_index(h.identity(), b);
  const int bg_inv = g.inverse(bg);
  bool normalizes = true, centralizes = true;
  for (int xg : a_copy) {
    int conj = g.mul(g.mul(bg, xg), bg_inv);
    if (a_copy.find(conj) == a_copy.end()) normalizes = false;
    if (conj != xg) centralizes = false;
  }
  params += centralizes ? ",centralizing" : (normalizes ? ",normalizing" : "");
  if (!normalizes)
    return implication(claim, desc, params, false, false, "b does not normalize <a>");

  auto j_pairs = embedded_pairs(sp, ca.elements, cb.elements);
  std::vector<int> j(j_pairs.begin(), j_pairs.end());
  auto dpk = directed_power_graph(g, pi);
  bool ok = true;
  std::string witness;

  for (auto [u, v] : dpk.edges()) {
    if (j_pairs.count(u) && !j_pairs.count(v)) {
      ok = false;
      witness = "out-edge leaves J: " + edge_str(g, {u, v});
      break;
    }
  }

  std::optional<FiniteGroup> jg;
  try {
    jg = induced_subgroup(g, j);
  } catch (const std::invalid_argument&) {
    return implication(claim, desc, params, false, false, "J is not a subgroup");
  }

  if (ok) {
    auto induced = induced_subgraph(dpk, j);
    auto intrinsic = directed_power_graph(*jg, pi);
    if (!(induced == intrinsic)) {
      ok = false;
      witness = "induced subgraph on J differs from the intrinsic excluded power graph: " +
                first_edge_diff(*jg, induced, intrinsic, "induced", "intrinsic");
    }
  }

  if (ok && centralizes) {
    const int ab = sp.pair_index(a, b);
    auto expect = embedded_pairs(sp, ca.generator_set, cb.elements);
    expect.erase(ab);
    std::set<int> actual;
    for (int v : dpk.out_neighbors(ab))
      if (j_pairs.count(v)) actual.insert(v);
    if (actual != expect) {
      ok = false;
      witness = "out-neighbors of ab inside J are not gen<a> x <b> minus itself";
    }
    if (ok) {
      // edges promised by the power graph of K
      auto dk = directed_power_graph(k, ExclusionSet{});
      for (int b2 : dk.out_neighbors(b)) {
        for (int a2 : ca.generator_set) {
          if (!dpk.has_edge(ab, sp.pair_index(a2, b2))) {
            ok = false;
            witness = "missing edge ab -> a'b' for a'=" + h.name(a2) + ", b'=" + k.name(b2);
            break;
          }
        }
        if (!ok) break;
      }
    }
    if (ok) {
      auto qj = excluded_quotient(quotient_power_graph(*jg), pi);
      auto qb = quotient_power_graph(make_cyclic(cb.order));
      auto copies = disjoint_copies_of(qj.unlabeled(), qb.unlabeled());
      int expected = static_cast<int>(divisors(ca.order).size());
      if (!copies || *copies != expected) {
        ok = false;
        witness = "excluded quotient of J is not " + std::to_string(expected) +
                  " copies of the quotient power graph of <b>";
      }
    }
  }
  return implication(claim, desc, params, true, ok, witness);
}

VerificationReport check_direct_product_quotient(const std::string& h_desc,
                                                 const FiniteGroup& h,
                                                 const std::string& k_desc,
                                                 const FiniteGroup& k) {
  const std::string claim = "coprime-product-quotient-copies";
  const std::string desc = h_desc + " x " + k_desc;
  auto pi = ExclusionSet::prime_factors_of(h.order());
  std::string params = "pi=" + pi.to_string();
  if (std::gcd(h.order(), k.order()) != 1)
    return implication(claim, desc, params, false, false, "orders are not coprime");
  auto g = make_direct_product(h, k);
  auto q = excluded_quotient(quotient_power_graph(g), pi);
  auto qk = quotient_power_graph(k);
  auto copies = disjoint_copies_of(q.unlabeled(), qk.unlabeled());
  int expected = static_cast<int>(all_cyclic_subgroups(h).size());
  bool concl = copies.has_value() && *copies == expected;
  auto labeled_copies = disjoint_copies_of(q, qk);
  params += std::string(",labels=") +
            (labeled_copies.has_value() && *labeled_copies == expected ? "agree" : "differ");
  std::string witness;
  if (!concl)
    witness = "expected " + std::to_string(expected) + " copies, found " +
              (copies ? std::to_string(*copies) : std::string("no copy structure"));
  return implication(claim, desc, params, true, concl, witness);
}

VerificationReport check_inversion_sdp(const std::string& desc, const SemidirectProduct& sp,
                                       int a, int b) {
  const std::string claim = "inversion-out-neighbors";
  const FiniteGroup& h = sp.left;
  const FiniteGroup& k = sp.right;
  const FiniteGroup& g = sp.group;
  std::string params = ab_params(a, b);
  if (!h.is_abelian())
    return implication(claim, desc, params, false, false, "H is not abelian");
  if (!coprime_orders(sp))
    return implication(claim, desc, params, false, false, "factor orders are not coprime");
  auto id_map = identity_aut(h).map;
  std::vector<int> inv_map(h.order());
  for (int x = 0; x < h.order(); ++x) inv_map[x] = h.inverse(x);
  for (int c = 0; c < k.order(); ++c)
    if (sp.action.assignment[c].map != id_map && sp.action.assignment[c].map != inv_map)
      return implication(claim, desc, params, false, false,
                         "action image goes beyond identity and inversion");

  auto pi = ExclusionSet::prime_factors_of(h.order());
  auto dpk = directed_power_graph(g, pi);
  const int ab = sp.pair_index(a, b);
  bool acts_by_inversion =
      sp.action.assignment[b].map == inv_map && inv_map != id_map;
  std::set<int> actual;
  for (int v : dpk.out_neighbors(ab)) actual.insert(v);

  bool concl = false;
  std::string witness;
  if (!acts_by_inversion) {
    auto ca = cyclic_subgroup(h, a);
    auto cb = cyclic_subgroup(k, b);
    auto expect = embedded_pairs(sp, ca.generator_set, cb.elements);
    expect.erase(ab);
    concl = actual == expect;
    if (!concl) witness = "out-neighbors differ from gen<a> x <b> minus itself";
  } else {
    const int ob = element_order(k, b);
    std::set<int> expect;
    for (int l = 1; 2 * l < ob; ++l)
      expect.insert(sp.pair_index(a, power(k, b, 2 * l + 1)));
    for (int l = 0; 2 * l < ob; ++l)
      expect.insert(sp.pair_index(h.identity(), power(k, b, 2 * l)));
    auto full = directed_power_graph(g, ExclusionSet{});
    std::set<int> actual_full;
    for (int v : full.out_neighbors(ab)) actual_full.insert(v);
    concl = actual == expect && actual_full == expect;
    if (!concl)
      witness = "out-neighbors of (a,b) differ from the alternating-power formula";
  }
  return implication(claim, desc, params, true, concl, witness);
}

VerificationReport check_nilpotent(
    const std::vector<std::pair<std::string, FiniteGroup>>& sylows,
    const std::vector<int>& rho) {
  const std::string claim = "nilpotent-quotient-copies";
  if (sylows.empty()) throw std::invalid_argument("check_nilpotent: no factors given");
  std::vector<int> primes;
  std::string desc;
  for (const auto& [d, s] : sylows) {
    auto f = prime_factors(s.order());
    if (f.size() != 1)
      throw std::invalid_argument("check_nilpotent: factor " + d +
                                  " is not a nontrivial prime-power group");
    if (std::find(primes.begin(), primes.end(), f[0]) != primes.end())
      throw std::invalid_argument("check_nilpotent: repeated prime " + std::to_string(f[0]));
    primes.push_back(f[0]);
    if (!desc.empty()) desc += " x ";
    desc += d;
  }
  ExclusionSet rho_set{std::vector<int>(rho)};
  std::string params = "rho=" + rho_set.to_string();
  bool proper_nonempty = !rho.empty() && rho.size() < sylows.size();
  for (int p : rho)
    if (std::find(primes.begin(), primes.end(), p) == primes.end()) proper_nonempty = false;
  if (!proper_nonempty)
    return implication(claim, desc, params, false, false,
                       "rho is not a proper nonempty subset of the prime set");

  std::optional<FiniteGroup> whole, kept, removed;
  auto fold = [](std::optional<FiniteGroup>& acc, const FiniteGroup& next) {
    acc = acc ? make_direct_product(*acc, next) : next;
  };
  for (std::size_t i = 0; i < sylows.size(); ++i) {
    fold(whole, sylows[i].second);
    if (rho_set.contains(primes[i]))
      fold(removed, sylows[i].second);
    else
      fold(kept, sylows[i].second);
  }
  auto q = excluded_quotient(quotient_power_graph(*whole), rho_set);
  auto qk = quotient_power_graph(*kept);
  auto copies = disjoint_copies_of(q.unlabeled(), qk.unlabeled());
  int expected = static_cast<int>(all_cyclic_subgroups(*removed).size());
  bool concl = copies.has_value() && *copies == expected;
  std::string witness;
  if (!concl)
    witness = "expected " + std::to_string(expected) + " copies, found " +
              (copies ? std::to_string(*copies) : std::string("no copy structure"));
  return implication(claim, desc, params, true, concl, witness);
}

VerificationReport classify_directed(const std::string& desc, const FiniteGroup& g, int p) {
  const std::string claim = "directed-clique-classification";
  std::string params = "p=" + std::to_string(p);
  bool left = is_directed_clique_union(directed_power_graph(g, ExclusionSet{p}));
  bool right = is_p_group(g, p);
  std::string witness;
  if (left != right)
    witness = left ? "clique union but |G| = " + std::to_string(g.order()) +
                         " is not a power of " + std::to_string(p)
                   : "p-group whose excluded graph is not a union of directed cliques";
  return biconditional(claim, desc, params, left, right, witness);
}

namespace {

// computable form of "cyclic normal Sylow subgroup with a p-group on top":
// |G| = q^s p^t for at most one other prime q, with the q-power-order
// elements forming a cyclic subgroup
std::pair<bool, std::string> cyclic_primary_structure(const FiniteGroup& g, int p) {
  std::vector<int> others;
  for (int q : prime_factors(g.order()))
    if (q != p) others.push_back(q);
  if (others.size() >= 2)
    return {false, "order " + std::to_string(g.order()) + " has two prime factors other than " +
                       std::to_string(p)};
  if (others.empty()) return {true, ""};
  const int q = others.front();
  auto primary = primary_elements(g, q);
  for (int a : primary) {
    auto c = cyclic_subgroup(g, a);
    auto sorted = c.elements;
    std::sort(sorted.begin(), sorted.end());
    if (sorted == primary) return {true, ""};
  }
  return {false, std::to_string(primary.size()) + " elements of " + std::to_string(q) +
                     "-power order do not form a cyclic subgroup"};
}

}  // namespace

VerificationReport classify_undirected(const std::string& desc, const FiniteGroup& g, int p) {
  const std::string claim = "undirected-clique-classification";
  std::string params = "p=" + std::to_string(p);
  bool left = is_clique_union(undirected_power_graph(g, ExclusionSet{p}));
  auto [right, reason] = cyclic_primary_structure(g, p);
  std::string witness;
  if (left != right) witness = left ? reason : "structure holds but the graph is not a clique union";
  return biconditional(claim, desc, params, left, right, witness);
}

VerificationReport check_sdp_components(const std::string& desc, const SemidirectProduct& sp) {
  const std::string claim = "prime-power-sdp-components";
  const FiniteGroup& h = sp.left;
  const FiniteGroup& k = sp.right;
  const FiniteGroup& g = sp.group;
  auto hp = prime_factors(std::max(h.order(), 1));
  auto kp = prime_factors(std::max(k.order(), 1));
  std::string params;
  if (h.order() < 2 || hp.size() != 1)
    return implication(claim, desc, params, false, false,
                       "left factor is not a nontrivial prime power");
  if (k.order() < 2 || kp.size() != 1)
    return implication(claim, desc, params, false, false,
                       "right factor is not a nontrivial p-group");
  const int q = hp.front(), p = kp.front();
  params = "q=" + std::to_string(q) + ",p=" + std::to_string(p);
  if (q == p) return implication(claim, desc, params, false, false, "primes are not distinct");
  const int n = h.order();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (h.mul(x, y) != (x + y) % n)
        return implication(claim, desc, params, false, false,
                           "left factor is not Z_{q^s} in additive form");

  auto dpk = directed_power_graph(g, ExclusionSet{p});
  std::set<std::vector<int>> cells;
  for (auto& c : weak_components(dpk).cells) cells.insert(c);
  auto dh = directed_power_graph(h, ExclusionSet{});
  bool ok = true;
  std::string witness;

  for (int b = 0; b < k.order() && ok; ++b) {
    const int c = sp.action.assignment[b].map[1];
    auto cb = cyclic_subgroup(k, b);
    if (c == 1) {
      std::vector<int> cell;
      for (int a = 0; a < n; ++a)
        for (int b2 : cb.generator_set) cell.push_back(sp.pair_index(a, b2));
      std::sort(cell.begin(), cell.end());
      if (!cells.count(cell)) {
        ok = false;
        witness = "Z_{q^s} x gen<b> is not a weak component for b=" + k.name(b);
        break;
      }
      for (auto [a1, a2] : dh.edges()) {
        for (int b2 : cb.generator_set)
          if (!dpk.has_edge(sp.pair_index(a1, b), sp.pair_index(a2, b2))) {
            ok = false;
            witness = "missing edge (" + h.name(a1) + "," + k.name(b) + ") -> (" +
                      h.name(a2) + "," + k.name(b2) + ")";
            break;
          }
        if (!ok) break;
      }
    } else {
      // powers (a,b)^k = (a(c^k-1)/(c-1), b^k) cycle with period o(b); the
      // admissible exponents are those coprime to p
      const int ob = element_order(k, b);
      const int inv = mod_inverse(c - 1, n);
      for (int a = 0; a < n && ok; ++a) {
        std::vector<int> cell = {sp.pair_index(a, b)};
        for (int kk = 2; kk < ob; ++kk) {
          if (kk % p == 0) continue;
          long long mult = (mod_pow(c, kk, n) - 1 + n) % n * inv % n;
          cell.push_back(sp.pair_index(static_cast<int>(a * mult % n), power(k, b, kk)));
        }
        std::sort(cell.begin(), cell.end());
        if (!cells.count(cell)) {
          ok = false;
          witness = "geometric-sum clique is not a weak component for a=" + h.name(a) +
                    ", b=" + k.name(b);
          break;
        }
        for (int u : cell) {
          for (int v : cell)
            if (u != v && !dpk.has_edge(u, v)) {
              ok = false;
              witness = "component of a=" + h.name(a) + ", b=" + k.name(b) +
                        " is not a directed clique";
              break;
            }
          if (!ok) break;
        }
      }
    }
  }
  return implication(claim, desc, params, true, ok, witness);
}

namespace {

std::vector<ExclusionSet> prime_subsets(const std::vector<int>& primes) {
  std::vector<ExclusionSet> out;
  const int k = static_cast<int>(primes.size());
  for (int mask = 0; mask < (1 << k); ++mask) {
    std::vector<int> members;
    for (int i = 0; i < k; ++i)
      if (mask & (1 << i)) members.push_back(primes[i]);
    out.emplace_back(std::move(members));
  }
  return out;
}

bool action_is_identity_or_inversion(const SemidirectProduct& sp) {
  if (!sp.left.is_abelian()) return false;
  auto id_map = identity_aut(sp.left).map;
  std::vector<int> inv_map(sp.left.order());
  for (int x = 0; x < sp.left.order(); ++x) inv_map[x] = sp.left.inverse(x);
  for (const auto& a : sp.action.assignment)
    if (a.map != id_map && a.map != inv_map) return false;
  return true;
}

bool is_additive_prime_power(const FiniteGroup& g) {
  if (g.order() < 2 || prime_factors(g.order()).size() != 1) return false;
  for (int x = 0; x < g.order(); ++x)
    for (int y = 0; y < g.order(); ++y)
      if (g.mul(x, y) != (x + y) % g.order()) return false;
  return true;
}

}  // namespace

RunResult run_catalog(const RunOptions& opt) {
  std::vector<int> primes = opt.primes;
  std::sort(primes.begin(), primes.end());
  primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
  for (int p : primes)
    if (!is_prime(p))
      throw std::invalid_argument("run_catalog: " + std::to_string(p) + " is not prime");

  CatalogOptions copt;
  copt.max_order = opt.max_order;
  copt.builtin_fixtures = opt.builtin_fixtures;
  copt.fixture_files = opt.fixture_files;
  auto catalog = make_catalog(copt);

  RunResult result;
  auto run = [&](std::string claim, std::string desc, std::string params, auto&& fn) {
    try {
      result.reports.push_back(fn());
    } catch (const resource_exhausted& e) {
      VerificationReport r;
      r.claim_id = std::move(claim);
      r.group_description = std::move(desc);
      r.parameters = std::move(params);
      r.hypothesis_holds = true;
      r.conclusion_holds = false;
      r.verdict = Verdict::kResourceExhausted;
      r.witness = e.what();
      result.reports.push_back(std::move(r));
    }
  };

  auto subsets = prime_subsets(primes);
  for (const auto& entry : catalog) {
    const auto& g = entry.group;
    const auto& desc = entry.description;
    for (const auto& x : subsets) {
      result.reports.push_back(check_no_divisor(desc, g, x));
      result.reports.push_back(check_all_primes(desc, g, x));
    }
    for (std::size_t i = 0; i < subsets.size(); ++i)
      for (std::size_t j = i; j < subsets.size(); ++j)
        result.reports.push_back(check_intersection(desc, g, subsets[i], subsets[j]));
    for (int p : primes) {
      result.reports.push_back(classify_directed(desc, g, p));
      result.reports.push_back(classify_undirected(desc, g, p));
    }
    if (entry.construction && coprime_orders(*entry.construction)) {
      const auto& sp = *entry.construction;
      for (int a = 0; a < sp.left.order(); ++a)
        for (int b = 0; b < sp.right.order(); ++b)
          run("hall-semidirect-closure", desc, ab_params(a, b),
              [&] { return check_hall_semidirect(desc, sp, a, b); });
      if (action_is_identity_or_inversion(sp))
        for (int a = 0; a < sp.left.order(); ++a)
          for (int b = 0; b < sp.right.order(); ++b)
            result.reports.push_back(check_inversion_sdp(desc, sp, a, b));
      if (is_additive_prime_power(sp.left) && sp.right.order() >= 2) {
        auto hp = prime_factors(sp.left.order());
        auto kp = prime_factors(sp.right.order());
        if (kp.size() == 1 && std::binary_search(primes.begin(), primes.end(), hp.front()) &&
            std::binary_search(primes.begin(), primes.end(), kp.front()))
          run("prime-power-sdp-components", desc, "", [&] {
            return check_sdp_components(desc, sp);
          });
      }
    }
  }

  for (const auto& he : catalog)
    for (const auto& ke : catalog) {
      long long prod = static_cast<long long>(he.group.order()) * ke.group.order();
      if (prod > opt.max_order) continue;
      if (std::gcd(he.group.order(), ke.group.order()) != 1) continue;
      run("coprime-product-quotient-copies", he.description + " x " + ke.description, "",
          [&] {
            return check_direct_product_quotient(he.description, he.group, ke.description,
                                                 ke.group);
          });
    }

  // nilpotent sweeps over prime-power entries, two and three factors
  std::vector<std::vector<const CatalogEntry*>> by_prime(primes.size());
  for (const auto& entry : catalog) {
    auto f = prime_factors(std::max(entry.group.order(), 1));
    if (entry.group.order() >= 2 && f.size() == 1)
      for (std::size_t i = 0; i < primes.size(); ++i)
        if (primes[i] == f.front()) by_prime[i].push_back(&entry);
  }
  auto run_nilpotent = [&](std::vector<const CatalogEntry*> parts) {
    long long prod = 1;
    for (auto* e : parts) prod *= e->group.order();
    if (prod > opt.max_order) return;
    std::vector<int> part_primes;
    std::vector<std::pair<std::string, FiniteGroup>> sylows;
    std::string desc;
    for (auto* e : parts) {
      part_primes.push_back(prime_factors(e->group.order()).front());
      sylows.emplace_back(e->description, e->group);
      if (!desc.empty()) desc += " x ";
      desc += e->description;
    }
    for (int mask = 1; mask < (1 << parts.size()) - 1; ++mask) {
      std::vector<int> rho;
      for (std::size_t i = 0; i < parts.size(); ++i)
        if (mask & (1 << i)) rho.push_back(part_primes[i]);
      run("nilpotent-quotient-copies", desc, "rho=" + ExclusionSet(rho).to_string(),
          [&] { return check_nilpotent(sylows, rho); });
    }
  };
  for (std::size_t i = 0; i < primes.size(); ++i)
    for (std::size_t j = i + 1; j < primes.size(); ++j) {
      for (auto* a : by_prime[i])
        for (auto* b : by_prime[j]) run_nilpotent({a, b});
      for (std::size_t l = j + 1; l < primes.size(); ++l)
        for (auto* a : by_prime[i])
          for (auto* b : by_prime[j])
            for (auto* c : by_prime[l]) run_nilpotent({a, b, c});
    }

  std::sort(result.reports.begin(), result.reports.end(),
            [](const VerificationReport& a, const VerificationReport& b) {
              return std::tie(a.group_description, a.claim_id, a.parameters) <
                     std::tie(b.group_description, b.claim_id, b.parameters);
            });
  for (const auto& r : result.reports) {
    switch (r.verdict) {
      case Verdict::kPass: ++result.summary.pass; break;
      case Verdict::kCounterexample: ++result.summary.counterexample; break;
      case Verdict::kNotApplicable: ++result.summary.not_applicable; break;
      case Verdict::kResourceExhausted: ++result.summary.resource_exhausted; break;
    }
  }
  return result;
}

std::string to_line(const VerificationReport& r) {
  std::ostringstream os;
  os << to_string(r.verdict) << "\t" << r.claim_id << "\t" << r.group_description;
  if (!r.parameters.empty()) os << "\t" << r.parameters;
  if (!r.witness.empty()) os << "\twitness: " << r.witness;
  return os.str();
}

}  // namespace xpg
