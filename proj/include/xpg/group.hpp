#pragma once

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace xpg {

inline constexpr int kMaxGroupOrder = 2000;

// Thrown when a multiplication table violates one of the group axioms.
class non_group_error : public std::runtime_error {
 public:
  explicit non_group_error(const std::string& what) : std::runtime_error(what) {}
};

// A finite group as a dense multiplication table over element indices.
// Element identity is positional; names are cosmetic.
class FiniteGroup {
 public:
  FiniteGroup(int order, std::vector<int> table, int identity,
              std::vector<std::string> names = {});

  int order() const { return order_; }
  int identity() const { return identity_; }
  int mul(int a, int b) const { return table_[a * order_ + b]; }
  int inverse(int g) const;
  bool is_abelian() const;
  const std::vector<int>& table() const { return table_; }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(int g) const { return names_[g]; }
  std::optional<int> element_by_name(const std::string& name) const;

 private:
  int order_;
  std::vector<int> table_;
  int identity_;
  std::vector<std::string> names_;
};

enum class AxiomCheck {
  kAuto,  // full associativity up to order 256, randomized 10000-triple check above
  kFull,
};

// Verifies identity, two-sided inverses and associativity; closure is a
// construction invariant. Throws non_group_error naming the failing axiom
// and a witnessing element or triple.
void check_group_axioms(const FiniteGroup& g, AxiomCheck mode = AxiomCheck::kAuto);

struct CyclicSubgroup {
  int generator = 0;
  std::vector<int> elements;       // identity, g, g^2, ... in power order
  int order = 1;
  std::vector<int> generator_set;  // sorted; its size is totient(order)
};

struct Automorphism {
  std::vector<int> map;
};

bool is_automorphism(const FiniteGroup& g, const Automorphism& a);
Automorphism identity_aut(const FiniteGroup& g);
Automorphism aut_cyclic_mult(int n, int k);  // multiplication by k on Z_n; gcd(k, n) = 1
Automorphism inversion_aut(const FiniteGroup& h);  // g -> g^-1; h must be abelian
Automorphism compose(const Automorphism& f, const Automorphism& g);  // f after g

// One automorphism of a target group per element of a domain group, forming
// a homomorphism domain -> Aut(target).
struct HomToAut {
  std::vector<Automorphism> assignment;
};

void validate_hom_to_aut(const FiniteGroup& domain, const FiniteGroup& target,
                         const HomToAut& hom);
HomToAut trivial_action(const FiniteGroup& domain, const FiniteGroup& target);
HomToAut mult_action(int target_n, int k, int domain_m);  // b -> multiplication by k^b on Z_n
HomToAut inversion_action(const FiniteGroup& target, int domain_m);  // b -> inversion^b
HomToAut hom_to_aut_from_file(const std::string& path, const FiniteGroup& domain,
                              const FiniteGroup& target);

FiniteGroup make_cyclic(int n);
FiniteGroup make_direct_product(const FiniteGroup& h, const FiniteGroup& k);

// Product on pairs (a, b): (a, b)(a', b') = (a * phi_b(a'), b * b'), with
// pair (a, b) at index a*|K| + b. Keeps the factors and the action so that
// callers can address elements by part.
struct SemidirectProduct {
  FiniteGroup group;
  FiniteGroup left;
  FiniteGroup right;
  HomToAut action;

  int pair_index(int a, int b) const { return a * right.order() + b; }
  int left_part(int g) const { return g / right.order(); }
  int right_part(int g) const { return g % right.order(); }
};

SemidirectProduct make_semidirect(const FiniteGroup& h, const FiniteGroup& k,
                                  const HomToAut& phi);
FiniteGroup make_dihedral(int n);  // order 2n: Z_n extended by the inversion
FiniteGroup make_symmetric(int n);
FiniteGroup make_alternating(int n);

// Plain-text Cayley table: first value n, then n rows of n element indices
// where row i, column j holds (i-1)*(j-1); optional trailing "# i name"
// lines. The identity is auto-detected and all axioms are fully checked.
FiniteGroup from_cayley_table(std::istream& in);
FiniteGroup from_cayley_table(const std::string& text);
FiniteGroup from_cayley_table_file(const std::string& path);

int element_order(const FiniteGroup& g, int a);    // least t >= 1 with a^t = e
int power(const FiniteGroup& g, int a, long long k);  // a^k by repeated squaring; a^0 = e
CyclicSubgroup cyclic_subgroup(const FiniteGroup& g, int a);

// Each distinct cyclic subgroup exactly once, sorted by order then by
// element set; deduplicated by sorted element sets.
std::vector<CyclicSubgroup> all_cyclic_subgroups(const FiniteGroup& g);

bool is_p_group(const FiniteGroup& g, int p);
std::vector<int> primary_elements(const FiniteGroup& g, int q);  // q-power-order elements, ascending

// Group on a multiplicatively closed element subset, reindexed in ascending
// element order. Throws if the subset is not closed.
FiniteGroup induced_subgroup(const FiniteGroup& g, std::vector<int> elements);

// Brute-force table matching; only for orders <= 12.
bool isomorphic_groups(const FiniteGroup& a, const FiniteGroup& b);

}  // namespace xpg
