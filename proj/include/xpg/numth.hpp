#pragma once

#include <initializer_list>
#include <string>
#include <vector>

namespace xpg {

// Elementary number theory backing the power-graph edge criteria.

int gcd(int a, int b);  // a >= 1, b >= 0; gcd(a, 0) = a
int lcm(int a, int b);

// Count of m in [1, n] with gcd(m, n) = 1.
int totient(int n);

bool is_prime(int n);
std::vector<int> prime_factors(int n);  // distinct primes, ascending
std::vector<int> divisors(int n);       // ascending, includes 1 and n

long long mod_pow(long long base, long long exp, long long mod);
int mod_inverse(int a, int mod);           // requires gcd(a, mod) = 1
int multiplicative_order(int a, int mod);  // least t >= 1 with a^t = 1 (mod)

// Finite set of integers greater than 1; the set of excluded divisors.
class ExclusionSet {
 public:
  ExclusionSet() = default;
  explicit ExclusionSet(std::vector<int> members);
  ExclusionSet(std::initializer_list<int> members);

  static ExclusionSet prime_factors_of(int n);

  bool empty() const { return members_.empty(); }
  const std::vector<int>& members() const { return members_; }
  bool contains(int x) const;
  bool divides_any(int v) const;  // true iff some member divides v
  bool all_members_prime() const;
  ExclusionSet union_with(const ExclusionSet& other) const;
  std::string to_string() const;  // "{2,3,5}", "{}" when empty

  friend bool operator==(const ExclusionSet&, const ExclusionSet&) = default;

 private:
  std::vector<int> members_;  // sorted, distinct, each >= 2
};

// True iff no member of x divides both m and n (1 <= m <= n). Equivalent to
// the progression m, m+n, m+2n, ... containing a term divisible by no member.
bool admissible(int m, int n, const ExclusionSet& x);

}  // namespace xpg
