#include "xpg/numth.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace xpg {

int gcd(int a, int b) {
  if (a < 1) throw std::invalid_argument("gcd: first argument must be positive");
  if (b < 0) throw std::invalid_argument("gcd: second argument must be nonnegative");
  return std::gcd(a, b);
}

int lcm(int a, int b) {
  if (a < 1 || b < 1) throw std::invalid_argument("lcm: arguments must be positive");
  return std::lcm(a, b);
}

int totient(int n) {
  if (n < 1) throw std::invalid_argument("totient: argument must be positive");
  int result = n;
  int m = n;
  for (int p = 2; p * p <= m; ++p) {
    if (m % p != 0) continue;
    result -= result / p;
    while (m % p == 0) m /= p;
  }
  if (m > 1) result -= result / m;
  return result;
}

bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<int> prime_factors(int n) {
  if (n < 1) throw std::invalid_argument("prime_factors: argument must be positive");
  std::vector<int> out;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    out.push_back(p);
    while (n % p == 0) n /= p;
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::vector<int> divisors(int n) {
  if (n < 1) throw std::invalid_argument("divisors: argument must be positive");
  std::vector<int> small, large;
  for (int d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    small.push_back(d);
    if (d != n / d) large.push_back(n / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

long long mod_pow(long long base, long long exp, long long mod) {
  if (mod < 1) throw std::invalid_argument("mod_pow: modulus must be positive");
  if (exp < 0) throw std::invalid_argument("mod_pow: exponent must be nonnegative");
  base %= mod;
  if (base < 0) base += mod;
  long long result = 1 % mod;
  while (exp > 0) {
    if (exp & 1) result = result * base % mod;
    base = base * base % mod;
    exp >>= 1;
  }
  return result;
}

int mod_inverse(int a, int mod) {
  if (mod < 1) throw std::invalid_argument("mod_inverse: modulus must be positive");
  long long t = 0, new_t = 1;
  long long r = mod, new_r = ((a % mod) + mod) % mod;
  while (new_r != 0) {
    long long q = r / new_r;
    long long tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (r != 1) throw std::invalid_argument("mod_inverse: argument is not invertible");
  return static_cast<int>(((t % mod) + mod) % mod);
}

int multiplicative_order(int a, int mod) {
  if (mod < 1) throw std::invalid_argument("multiplicative_order: modulus must be positive");
  int aa = ((a % mod) + mod) % mod;
  if (std::gcd(aa, mod) != 1)
    throw std::invalid_argument("multiplicative_order: gcd(a, mod) != 1");
  if (mod == 1) return 1;
  long long x = 1;
  for (int t = 1; t <= mod; ++t) {
    x = x * aa % mod;
    if (x == 1) return t;
  }
  throw std::logic_error("multiplicative_order: no order found");
}

ExclusionSet::ExclusionSet(std::vector<int> members) : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  for (int x : members_)
    if (x < 2)
      throw std::invalid_argument("exclusion set members must be integers greater than 1, got " +
                                  std::to_string(x));
}

ExclusionSet::ExclusionSet(std::initializer_list<int> members)
    : ExclusionSet(std::vector<int>(members)) {}

ExclusionSet ExclusionSet::prime_factors_of(int n) { return ExclusionSet(prime_factors(n)); }

bool ExclusionSet::contains(int x) const {
  return std::binary_search(members_.begin(), members_.end(), x);
}

bool ExclusionSet::divides_any(int v) const {
  for (int x : members_)
    if (v % x == 0) return true;
  return false;
}

bool ExclusionSet::all_members_prime() const {
  return std::all_of(members_.begin(), members_.end(), is_prime);
}

ExclusionSet ExclusionSet::union_with(const ExclusionSet& other) const {
  std::vector<int> joined = members_;
  joined.insert(joined.end(), other.members_.begin(), other.members_.end());
  return ExclusionSet(std::move(joined));
}

std::string ExclusionSet::to_string() const {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < members_.size(); ++i) {
    if (i > 0) os << ',';
    os << members_[i];
  }
  os << '}';
  return os.str();
}

bool admissible(int m, int n, const ExclusionSet& x) {
  if (m < 1 || m > n) throw std::invalid_argument("admissible: requires 1 <= m <= n");
  return !x.divides_any(std::gcd(m, n));
}

}  // namespace xpg
