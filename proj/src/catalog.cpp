#include "xpg/catalog.hpp"

#include <filesystem>
#include <numeric>
#include <set>

#include "xpg/numth.hpp"

namespace xpg {

namespace {

// Quaternion group of order 8: 1, -1, i, -i, j, -j, k, -k.
constexpr const char* kQuaternionTable =
    "8\n"
    "0 1 2 3 4 5 6 7\n"
    "1 0 3 2 5 4 7 6\n"
    "2 3 1 0 6 7 5 4\n"
    "3 2 0 1 7 6 4 5\n"
    "4 5 7 6 1 0 2 3\n"
    "5 4 6 7 0 1 3 2\n"
    "6 7 4 5 3 2 1 0\n"
    "7 6 5 4 2 3 0 1\n"
    "# 0 1\n"
    "# 1 -1\n"
    "# 2 i\n"
    "# 3 -i\n"
    "# 4 j\n"
    "# 5 -j\n"
    "# 6 k\n"
    "# 7 -k\n";

std::string z(int n) { return "Z" + std::to_string(n); }

}  // namespace

std::vector<CatalogEntry> make_catalog(const CatalogOptions& opt) {
  if (opt.max_order < 1 || opt.max_order > kMaxGroupOrder)
    throw std::invalid_argument("make_catalog: max order must be between 1 and " +
                                std::to_string(kMaxGroupOrder));
  const int mx = opt.max_order;
  std::vector<CatalogEntry> out;
  std::set<std::string> seen;
  auto add = [&](std::string desc, FiniteGroup g, std::optional<SemidirectProduct> rec) {
    check_group_axioms(g);
    if (!seen.insert(desc).second)
      throw std::logic_error("make_catalog: duplicate description " + desc);
    out.push_back(CatalogEntry{std::move(desc), std::move(g), std::move(rec)});
  };

  for (int n = 1; n <= mx; ++n) add(z(n), make_cyclic(n), std::nullopt);

  for (int a = 2; a * a <= mx; ++a)
    for (int b = a; a * b <= mx; ++b) {
      auto h = make_cyclic(a);
      auto k = make_cyclic(b);
      auto sp = make_semidirect(h, k, trivial_action(k, h));
      auto g = sp.group;
      add(z(a) + " x " + z(b), std::move(g), std::move(sp));
    }

  for (int n = 2; 2 * n <= mx; ++n) {
    auto rot = make_cyclic(n);
    auto sp = make_semidirect(rot, make_cyclic(2), inversion_action(rot, 2));
    auto g = sp.group;
    add("D" + std::to_string(2 * n), std::move(g), std::move(sp));
  }

  if (6 <= mx) add("S3", make_symmetric(3), std::nullopt);
  if (12 <= mx) add("A4", make_alternating(4), std::nullopt);
  if (24 <= mx) add("S4", make_symmetric(4), std::nullopt);
  if (60 <= mx) add("A5", make_alternating(5), std::nullopt);

  // cyclic-by-cyclic semidirect products; k = 1 is the direct product above
  for (int n = 3; 2 * n <= mx; ++n)
    for (int m = 2; n * m <= mx; ++m)
      for (int k = 2; k < n; ++k) {
        if (std::gcd(k, n) != 1 || mod_pow(k, m, n) != 1) continue;
        auto sp = make_semidirect(make_cyclic(n), make_cyclic(m), mult_action(n, k, m));
        auto g = sp.group;
        add("sdp(" + z(n) + ", " + z(m) + ", mult=" + std::to_string(k) + ")", std::move(g),
            std::move(sp));
      }

  // generalized dihedral groups over products of two cyclic groups
  for (int a = 2; 2 * a * a <= mx; ++a)
    for (int b = a; 2 * a * b <= mx; ++b) {
      auto h = make_direct_product(make_cyclic(a), make_cyclic(b));
      auto sp = make_semidirect(h, make_cyclic(2), inversion_action(h, 2));
      auto g = sp.group;
      add("sdp(" + z(a) + " x " + z(b) + ", Z2, inv)", std::move(g), std::move(sp));
    }

  if (opt.builtin_fixtures && 8 <= mx)
    add("Q8", from_cayley_table(std::string(kQuaternionTable)), std::nullopt);

  for (const auto& path : opt.fixture_files) {
    auto g = from_cayley_table_file(path);
    if (g.order() > mx) continue;
    add(std::filesystem::path(path).stem().string(), std::move(g), std::nullopt);
  }
  return out;
}

}  // namespace xpg
