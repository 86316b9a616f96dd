#pragma once

#include <string>
#include <utility>
#include <vector>

#include "xpg/catalog.hpp"
#include "xpg/group.hpp"
#include "xpg/numth.hpp"

namespace xpg {

enum class Verdict { kPass, kCounterexample, kNotApplicable, kResourceExhausted };

std::string to_string(Verdict v);

// One checked claim instance. For implications, verdict is counterexample
// exactly when the hypothesis holds and the conclusion fails; for
// equivalences, exactly when the two independently computed sides disagree.
struct VerificationReport {
  std::string claim_id;
  std::string group_description;
  std::string parameters;
  bool hypothesis_holds = false;
  bool conclusion_holds = false;
  Verdict verdict = Verdict::kNotApplicable;
  std::string witness;  // concrete edge/element/subgroup data on failure
};

// If no member of x (primes) divides |G|, the x-excluded directed power
// graph equals the full one edge-for-edge.
VerificationReport check_no_divisor(const std::string& desc, const FiniteGroup& g,
                                    const ExclusionSet& x);

// If every prime factor of |G| lies in x, the excluded graph is the disjoint
// union of directed cliques on the generator cells.
VerificationReport check_all_primes(const std::string& desc, const FiniteGroup& g,
                                    const ExclusionSet& x);

// Excluding by a union of sets intersects the edge sets.
VerificationReport check_intersection(const std::string& desc, const FiniteGroup& g,
                                      const ExclusionSet& x, const ExclusionSet& y);

// For G = H x| K with coprime orders and pi the primes of |H|, with
// J = <a><b>: out-neighbors of J stay in J and the induced subgraph is the
// intrinsic excluded power graph of J; when b centralizes <a>, the
// out-neighbors of ab are gen<a> x <b> minus itself and the excluded
// quotient of J is made of copies of the quotient power graph of <b>.
VerificationReport check_hall_semidirect(const std::string& desc, const SemidirectProduct& sp,
                                         int a, int b);

// The pi-excluded quotient power graph of H x K (coprime orders, pi the
// primes of |H|) is a disjoint union of copies of the quotient power graph
// of K, one copy per cyclic subgroup of H.
VerificationReport check_direct_product_quotient(const std::string& h_desc, const FiniteGroup& h,
                                                 const std::string& k_desc, const FiniteGroup& k);

// Out-neighbor formulas for H x|_phi K with phi mapping into
// {identity, inversion}, H abelian, orders coprime.
VerificationReport check_inversion_sdp(const std::string& desc, const SemidirectProduct& sp,
                                       int a, int b);

// For a direct product of p-groups with distinct primes and a proper
// nonempty prime subset rho, the rho-excluded quotient is made of copies of
// the quotient power graph of the factors outside rho.
VerificationReport check_nilpotent(const std::vector<std::pair<std::string, FiniteGroup>>& sylows,
                                   const std::vector<int>& rho);

// The {p}-excluded directed power graph is a disjoint union of directed
// cliques iff the group is a p-group.
VerificationReport classify_directed(const std::string& desc, const FiniteGroup& g, int p);

// The {p}-excluded undirected power graph is a disjoint union of cliques iff
// the order is q^s * p^t for at most one other prime q and the q-power-order
// elements form a cyclic subgroup.
VerificationReport classify_undirected(const std::string& desc, const FiniteGroup& g, int p);

// Weak components of the {p}-excluded graph of Z_{q^s} x|_phi P: per b in P,
// either Z_{q^s} x gen<b> (trivial action) or, with c = phi_b(1) != 1, the
// directed cliques {(a, b)} u {(a(c^k-1)/(c-1), b^k) : 1 < k < o(b), p !| k}.
VerificationReport check_sdp_components(const std::string& desc, const SemidirectProduct& sp);

struct RunOptions {
  int max_order = 60;
  std::vector<int> primes = {2, 3, 5};
  bool builtin_fixtures = true;
  std::vector<std::string> fixture_files;
};

struct RunSummary {
  int pass = 0;
  int counterexample = 0;
  int not_applicable = 0;
  int resource_exhausted = 0;
};

struct RunResult {
  // Sorted by (group description, claim id, parameters).
  std::vector<VerificationReport> reports;
  RunSummary summary;
};

// Applies every checker to every applicable (group, parameter) combination
// from the catalog, with exclusion sets and primes drawn from options.primes.
RunResult run_catalog(const RunOptions& options = {});

std::string to_line(const VerificationReport& r);

}  // namespace xpg
