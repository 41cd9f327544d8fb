#include "basekit/constructions.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <string>
#include <unordered_map>

#include "basekit/error.hpp"

namespace basekit {

namespace {

std::vector<Point> iota_points(std::size_t n, Point start = 0) {
  std::vector<Point> v(n);
  std::iota(v.begin(), v.end(), start);
  return v;
}

/// g acting on [offset, offset + g.degree()) inside a domain of size `degree`.
Permutation embed(const Permutation& g, std::size_t offset, std::size_t degree) {
  auto images = iota_points(degree);
  for (Point x = 0; x < g.degree(); ++x)
    images[offset + x] = static_cast<Point>(offset + g[x]);
  return Permutation(std::move(images));
}

std::uint64_t checked_power(std::uint64_t base, std::uint32_t exp, std::uint64_t cap) {
  std::uint64_t r = 1;
  for (std::uint32_t i = 0; i < exp; ++i) {
    if (r > cap / base) throw DomainError("construction degree too large");
    r *= base;
  }
  return r;
}

std::uint64_t factorial(std::size_t n) {
  std::uint64_t r = 1;
  for (std::size_t i = 2; i <= n; ++i) r *= i;
  return r;
}

constexpr std::uint64_t kMaxDegree = 1u << 22;

}  // namespace

LabeledDomain LabeledDomain::single(std::string label, std::size_t degree) {
  return LabeledDomain{degree, {DomainBlock{std::move(label), 0, degree}}};
}

const std::string& LabeledDomain::label_of(Point x) const {
  for (const auto& b : blocks)
    if (x >= b.first && x < b.first + b.size) return b.label;
  throw DomainError("point outside labeled domain");
}

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

PermGroup symmetric(std::size_t n) {
  if (n == 0) throw DomainError("symmetric group needs n >= 1");
  if (n == 1) return PermGroup(1);
  return PermGroup(n, {Permutation::from_cycles(n, {{0, 1}}),
                       Permutation::from_cycles(n, {iota_points(n)})});
}

PermGroup cyclic_regular(std::size_t p) {
  if (p < 2) throw DomainError("cyclic_regular needs p >= 2");
  return PermGroup(p, {Permutation::from_cycles(p, {iota_points(p)})});
}

PermGroup elem_abelian_regular(std::uint32_t p, std::uint32_t d) {
  if (!is_prime(p)) throw DomainError("elem_abelian_regular needs a prime, got " + std::to_string(p));
  if (d < 1) throw DomainError("elem_abelian_regular needs d >= 1");
  const auto n = static_cast<std::size_t>(checked_power(p, d, kMaxDegree));
  std::vector<Permutation> gens;
  std::uint64_t weight = 1;
  for (std::uint32_t i = 0; i < d; ++i, weight *= p) {
    std::vector<Point> images(n);
    for (std::size_t x = 0; x < n; ++x) {
      const std::uint64_t digit = (x / weight) % p;
      images[x] = static_cast<Point>(digit + 1 == p ? x - digit * weight : x + weight);
    }
    gens.emplace_back(std::move(images));
  }
  return PermGroup(n, std::move(gens));
}

PermGroup disjoint_product(const PermGroup& g, const PermGroup& h) {
  const std::size_t n = g.degree() + h.degree();
  std::vector<Permutation> gens;
  for (const auto& s : g.generators()) gens.push_back(embed(s, 0, n));
  for (const auto& s : h.generators()) gens.push_back(embed(s, g.degree(), n));
  return PermGroup(n, std::move(gens));
}

PermGroup product_action(const PermGroup& g, const PermGroup& h) {
  const std::size_t m = h.degree();
  const std::size_t n = g.degree() * m;
  if (n > kMaxDegree) throw DomainError("product action degree too large");
  std::vector<Permutation> gens;
  for (const auto& s : g.generators()) {
    std::vector<Point> images(n);
    for (std::size_t x = 0; x < n; ++x) images[x] = static_cast<Point>(s[x / m] * m + x % m);
    gens.emplace_back(std::move(images));
  }
  for (const auto& s : h.generators()) {
    std::vector<Point> images(n);
    for (std::size_t x = 0; x < n; ++x)
      images[x] = static_cast<Point>((x / m) * m + s[static_cast<Point>(x % m)]);
    gens.emplace_back(std::move(images));
  }
  return PermGroup(n, std::move(gens));
}

PermGroup product_action(const std::vector<PermGroup>& factors) {
  if (factors.empty()) throw DomainError("product action needs at least one factor");
  PermGroup result = factors.front();
  for (std::size_t i = 1; i < factors.size(); ++i) result = product_action(result, factors[i]);
  return result;
}

// ---------------------------------------------------------------------------

Construction prescribed_sizes_group(std::vector<int> sizes, std::uint32_t p) {
  if (sizes.empty()) throw DomainError("prescribed size construction needs a non-empty size set");
  if (!is_prime(p)) throw DomainError("prescribed size construction needs a prime p, got " + std::to_string(p));
  std::sort(sizes.begin(), sizes.end());
  sizes.erase(std::unique(sizes.begin(), sizes.end()), sizes.end());
  if (sizes.front() < 1) throw DomainError("prescribed sizes must be positive");

  if (sizes.front() > 1) {
    // Shift down to a set containing 1 and add Sym(x_1) on the side.
    const int x1 = sizes.front();
    std::vector<int> shifted{1};
    for (std::size_t i = 1; i < sizes.size(); ++i) shifted.push_back(sizes[i] - x1 + 1);
    Construction inner = prescribed_sizes_group(shifted, p);
    auto sym = symmetric(static_cast<std::size_t>(x1));
    LabeledDomain domain;
    domain.degree = sym.degree() + inner.domain.degree;
    domain.blocks.push_back({"Sym(" + std::to_string(x1) + ")", 0, sym.degree()});
    for (auto b : inner.domain.blocks) {
      b.first += static_cast<Point>(sym.degree());
      domain.blocks.push_back(std::move(b));
    }
    return {disjoint_product(sym, inner.group), std::move(domain)};
  }

  const std::size_t count = sizes.size();
  const auto top = static_cast<std::uint32_t>(sizes.back());
  if (count == 1) {
    auto g = elem_abelian_regular(p, 1);
    return {g, LabeledDomain::single("Delta_1", g.degree())};
  }

  // Regular blocks Delta_1, ..., Delta_{count-1} with their ranks, then
  // top p-cycles Delta_{count,1}, ..., Delta_{count,top}.
  std::vector<std::uint32_t> ranks{top};
  for (std::size_t j = 2; j + 1 <= count; ++j)
    ranks.push_back(top - static_cast<std::uint32_t>(sizes[count - j]) + 1);

  LabeledDomain domain;
  std::vector<PermGroup> regular;
  for (std::size_t j = 0; j < ranks.size(); ++j) {
    regular.push_back(elem_abelian_regular(p, ranks[j]));
    domain.blocks.push_back({"Delta_" + std::to_string(j + 1),
                             static_cast<Point>(domain.degree), regular.back().degree()});
    domain.degree += regular.back().degree();
  }
  const std::size_t cycles_start = domain.degree;
  for (std::uint32_t i = 0; i < top; ++i) {
    domain.blocks.push_back({"Delta_" + std::to_string(count) + "," + std::to_string(i + 1),
                             static_cast<Point>(domain.degree), p});
    domain.degree += p;
  }

  auto cycle = cyclic_regular(p).generators().front();
  std::vector<Permutation> gens;
  for (std::uint32_t i = 0; i < top; ++i) {
    auto images = iota_points(domain.degree);
    for (std::size_t j = 0; j < regular.size(); ++j) {
      if (i >= ranks[j]) continue;
      const auto& g = regular[j].generators()[i];
      const Point offset = domain.blocks[j].first;
      for (Point x = 0; x < g.degree(); ++x) images[offset + x] = offset + g[x];
    }
    const auto offset = static_cast<Point>(cycles_start + i * p);
    for (Point x = 0; x < p; ++x) images[offset + x] = offset + cycle[x];
    gens.emplace_back(std::move(images));
  }
  return {PermGroup(domain.degree, std::move(gens)), std::move(domain)};
}

std::vector<std::size_t> interval_product_factors(int a, int b, SizeKind kind) {
  if (a < 2) throw DomainError("interval product needs a >= 2");
  if (b < a) throw DomainError("interval product needs a <= b");
  const auto sa = static_cast<std::size_t>(a);
  if (a == b) return {sa + 1};
  const int t = b / (a - 1);
  const int r = b % (a - 1);
  std::vector<std::size_t> degrees;
  if (kind == SizeKind::Minimal) {
    degrees.assign(static_cast<std::size_t>(t), sa + 1);
    if (r > 0) degrees.push_back(static_cast<std::size_t>(r + 2));
  } else if (r > 0) {
    degrees.assign(static_cast<std::size_t>(t), sa + 1);
    degrees.push_back(static_cast<std::size_t>(r + 1));
  } else {
    // t copies of S_{a+1} would give I = b + 1; trade one copy for S_a.
    degrees.assign(static_cast<std::size_t>(t - 1), sa + 1);
    degrees.push_back(sa);
  }
  return degrees;
}

PermGroup interval_product_group(int a, int b, SizeKind kind) {
  std::vector<PermGroup> factors;
  for (std::size_t n : interval_product_factors(a, b, kind)) factors.push_back(symmetric(n));
  return product_action(factors);
}

// ---------------------------------------------------------------------------
// Wreath product S_n wr C_k and its coset action

PermGroup wreath_imprimitive(std::size_t n, std::size_t k) {
  if (n < 2 || k < 2) throw DomainError("wreath product needs n >= 2 and k >= 2");
  const std::size_t deg = n * k;
  std::vector<Permutation> gens;
  const PermGroup sym_n = symmetric(n);
  for (const auto& s : sym_n.generators()) gens.push_back(embed(s, 0, deg));
  std::vector<Point> rotate(deg);
  for (std::size_t x = 0; x < deg; ++x) rotate[x] = static_cast<Point>((x + n) % deg);
  gens.emplace_back(std::move(rotate));
  return PermGroup(deg, std::move(gens));
}

PermGroup wreath_point_subgroup(std::size_t n, std::size_t k) {
  if (n < 2 || k < 2) throw DomainError("wreath product needs n >= 2 and k >= 2");
  const std::size_t deg = n * k;
  std::vector<Permutation> gens;
  const PermGroup sym_n = symmetric(n);
  const PermGroup sym_point = symmetric(n - 1);
  for (std::size_t block = 0; block + 2 < k; ++block)
    for (const auto& s : sym_n.generators()) gens.push_back(embed(s, block * n, deg));
  if (n >= 3)
    for (const auto& s : sym_point.generators()) gens.push_back(embed(s, (k - 2) * n, deg));
  return PermGroup(deg, std::move(gens));
}

namespace {

std::uint64_t lex_rank(const std::vector<Point>& perm) {
  std::uint64_t rank = 0;
  const std::size_t n = perm.size();
  for (std::size_t i = 0; i < n; ++i) {
    std::uint64_t smaller = 0;
    for (std::size_t j = i + 1; j < n; ++j)
      if (perm[j] < perm[i]) ++smaller;
    rank += smaller * factorial(n - 1 - i);
  }
  return rank;
}

std::vector<Point> lex_unrank(std::uint64_t rank, std::size_t n) {
  std::vector<Point> pool = iota_points(n);
  std::vector<Point> perm;
  for (std::size_t i = 0; i < n; ++i) {
    const std::uint64_t f = factorial(n - 1 - i);
    const auto idx = static_cast<std::size_t>(rank / f);
    rank %= f;
    perm.push_back(pool[idx]);
    pool.erase(pool.begin() + static_cast<long>(idx));
  }
  return perm;
}

}  // namespace

std::size_t wreath_coset_label(std::size_t n, std::size_t k, const Permutation& g) {
  const std::size_t last = (k - 1) * n;
  const std::size_t j = g[static_cast<Point>(last)] / n;
  std::vector<Point> z(n);
  for (std::size_t p = 0; p < n; ++p) z[p] = g[static_cast<Point>(last + p)] % n;
  const std::size_t a = g[static_cast<Point>((k - 2) * n + n - 1)] % n;
  return static_cast<std::size_t>((j * n + a) * factorial(n) + lex_rank(z));
}

PermGroup wreath_coset_action(std::size_t n, std::size_t k, std::size_t max_index) {
  if (n < 2 || k < 2) throw DomainError("wreath_coset needs n >= 2 and k >= 2");
  const PermGroup top = wreath_imprimitive(n, k);
  const PermGroup sub = wreath_point_subgroup(n, k);
  const auto sub_orbits = orbit_partition(sub).orbits;

  // Hg maps each subgroup orbit O onto O^g; the images bucket the cosets and
  // membership of x * rep^-1 in the subgroup decides equality.
  auto bucket_key = [&](const Permutation& g) {
    std::vector<Point> key;
    key.reserve(g.degree() + sub_orbits.size());
    for (const auto& o : sub_orbits) {
      const std::size_t start = key.size();
      for (Point x : o) key.push_back(g[x]);
      std::sort(key.begin() + static_cast<long>(start), key.end());
      key.push_back(static_cast<Point>(-1));
    }
    return key;
  };

  std::vector<Permutation> reps{Permutation::identity(n * k)};
  std::map<std::vector<Point>, std::vector<std::size_t>> buckets;
  buckets[bucket_key(reps[0])].push_back(0);

  auto find_or_add = [&](Permutation x) -> std::size_t {
    auto& bucket = buckets[bucket_key(x)];
    for (std::size_t c : bucket)
      if (sub.contains(compose(x, inverse(reps[c])))) return c;
    if (reps.size() >= max_index)
      throw BudgetExceeded("coset index above " + std::to_string(max_index));
    bucket.push_back(reps.size());
    reps.push_back(std::move(x));
    return reps.size() - 1;
  };

  const auto& gens = top.generators();
  std::vector<std::vector<Point>> images(gens.size());
  for (std::size_t c = 0; c < reps.size(); ++c)
    for (std::size_t s = 0; s < gens.size(); ++s)
      images[s].push_back(static_cast<Point>(find_or_add(compose(reps[c], gens[s]))));

  std::vector<Permutation> action;
  for (auto& im : images) action.emplace_back(std::move(im));
  return PermGroup(reps.size(), std::move(action));
}

PermGroup wreath_coset_action_by_labels(std::size_t n, std::size_t k) {
  if (n < 2 || k < 2) throw DomainError("wreath_coset needs n >= 2 and k >= 2");
  const PermGroup top = wreath_imprimitive(n, k);
  const std::uint64_t nf = factorial(n);
  const std::size_t index = static_cast<std::size_t>(k * n * nf);
  std::vector<Permutation> action;
  for (const auto& s : top.generators()) {
    std::vector<Point> images(index);
    for (std::size_t label = 0; label < index; ++label) {
      const std::size_t ja = label / nf;
      const std::size_t j = ja / n;
      const std::size_t a = ja % n;
      const auto z = lex_unrank(label % nf, n);
      // A representative element's images of the last block and of (k-2, n-1).
      std::vector<Point> last(n);
      for (std::size_t p = 0; p < n; ++p) last[p] = s[static_cast<Point>(j * n + z[p])];
      const Point marked = s[static_cast<Point>(((j + k - 1) % k) * n + a)];
      std::vector<Point> z2(n);
      for (std::size_t p = 0; p < n; ++p) z2[p] = last[p] % n;
      const std::size_t j2 = last[0] / n;
      images[label] = static_cast<Point>((j2 * n + marked % n) * nf + lex_rank(z2));
    }
    action.emplace_back(std::move(images));
  }
  return PermGroup(index, std::move(action));
}

// ---------------------------------------------------------------------------

std::vector<std::vector<Point>> k_subsets(std::size_t n, std::size_t k) {
  std::vector<std::vector<Point>> result;
  std::vector<Point> current(k);
  std::iota(current.begin(), current.end(), Point{0});
  if (k > n) return result;
  while (true) {
    result.push_back(current);
    std::size_t i = k;
    while (i > 0 && current[i - 1] == n - k + i - 1) --i;
    if (i == 0) break;
    ++current[i - 1];
    for (std::size_t j = i; j < k; ++j) current[j] = current[j - 1] + 1;
  }
  return result;
}

PermGroup k_subset_action(std::size_t n, std::size_t k) {
  if (k < 1 || 2 * k > n) throw DomainError("k_subsets needs 1 <= k <= n/2");
  const auto subsets = k_subsets(n, k);
  std::map<std::vector<Point>, Point> rank;
  for (std::size_t i = 0; i < subsets.size(); ++i) rank[subsets[i]] = static_cast<Point>(i);
  std::vector<Permutation> gens;
  const PermGroup sym_n = symmetric(n);
  for (const auto& s : sym_n.generators()) {
    std::vector<Point> images(subsets.size());
    for (std::size_t i = 0; i < subsets.size(); ++i) {
      std::vector<Point> image;
      for (Point x : subsets[i]) image.push_back(s[x]);
      std::sort(image.begin(), image.end());
      images[i] = rank.at(image);
    }
    gens.emplace_back(std::move(images));
  }
  return PermGroup(subsets.size(), std::move(gens));
}

// ---------------------------------------------------------------------------

namespace {

using Vec4 = unsigned;  // bit i = coordinate i

int top_bit(Vec4 v) { return v ? 31 - __builtin_clz(v) : -1; }

/// Reduced echelon basis (pivot = highest bit) of span{u, v}.
std::pair<Vec4, Vec4> echelon(Vec4 u, Vec4 v) {
  std::array<Vec4, 3> nonzero{u, v, u ^ v};
  std::sort(nonzero.begin(), nonzero.end(), [](Vec4 x, Vec4 y) { return top_bit(x) > top_bit(y); });
  // Two vectors share the top pivot; the third has a lower one.
  Vec4 low = nonzero[2];
  Vec4 high = nonzero[0];
  if (high >> top_bit(low) & 1) high ^= low;
  return {high, low};
}

Vec4 apply(const std::array<Vec4, 4>& rows, Vec4 v) {
  Vec4 r = 0;
  for (int i = 0; i < 4; ++i)
    if (v >> i & 1) r ^= rows[i];
  return r;
}

}  // namespace

PermGroup gl42_on_2subspaces() {
  std::vector<std::pair<Vec4, Vec4>> planes;
  for (Vec4 u = 1; u < 16; ++u)
    for (Vec4 v = u + 1; v < 16; ++v) planes.push_back(echelon(u, v));
  std::sort(planes.begin(), planes.end());
  planes.erase(std::unique(planes.begin(), planes.end()), planes.end());

  std::map<std::pair<Vec4, Vec4>, Point> index;
  for (std::size_t i = 0; i < planes.size(); ++i) index[planes[i]] = static_cast<Point>(i);

  // Transvection e_0 -> e_0 + e_1 and the cyclic shift e_i -> e_{i+1}.
  const std::array<std::array<Vec4, 4>, 2> matrices{{{0b0011, 0b0010, 0b0100, 0b1000},
                                                     {0b0010, 0b0100, 0b1000, 0b0001}}};
  std::vector<Permutation> gens;
  for (const auto& m : matrices) {
    std::vector<Point> images(planes.size());
    for (std::size_t i = 0; i < planes.size(); ++i)
      images[i] = index.at(echelon(apply(m, planes[i].first), apply(m, planes[i].second)));
    gens.emplace_back(std::move(images));
  }
  return PermGroup(planes.size(), std::move(gens));
}

}  // namespace basekit
