#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "basekit/group.hpp"

namespace basekit {

/// A named run of consecutive points, e.g. ("Delta_2", 128, 8).
struct DomainBlock {
  std::string label;
  Point first = 0;
  std::size_t size = 0;
};

/// Blocks partition {0, ..., degree-1} in order.
struct LabeledDomain {
  std::size_t degree = 0;
  std::vector<DomainBlock> blocks;

  static LabeledDomain single(std::string label, std::size_t degree);
  /// Label of the block containing x.
  const std::string& label_of(Point x) const;
};

struct Construction {
  PermGroup group;
  LabeledDomain domain;
};

// Point encodings:
//   elem_abelian_regular(p, d): vector (v_0, ..., v_{d-1}) <-> sum v_i p^i.
//   product_action(G, H):       (delta, lambda) <-> delta * deg(H) + lambda.
//   disjoint_product(G, H):     H's points are shifted by deg(G).
//   k_subset_action(n, k):      lexicographic rank of the sorted k-subset.
//   wreath on n*k points:       (block i, position a) <-> i * n + a.

/// Natural action, generated by (0 1) and (0 1 ... n-1).
PermGroup symmetric(std::size_t n);

/// A single p-cycle on p points.
PermGroup cyclic_regular(std::size_t p);

/// Regular elementary abelian group of order p^d; generator i adds the i-th unit vector.
PermGroup elem_abelian_regular(std::uint32_t p, std::uint32_t d);

PermGroup disjoint_product(const PermGroup& g, const PermGroup& h);
PermGroup product_action(const PermGroup& g, const PermGroup& h);
PermGroup product_action(const std::vector<PermGroup>& factors);

bool is_prime(std::uint64_t p);

/// Group whose minimal bases have exactly the sizes in `sizes`.
Construction prescribed_sizes_group(std::vector<int> sizes, std::uint32_t p = 2);

enum class SizeKind { Minimal, Irredundant };

/// Degrees n_1, ..., n_t of the symmetric factors whose product action
/// realizes the interval [a, b] as the M-set (Minimal) or I-set (Irredundant).
std::vector<std::size_t> interval_product_factors(int a, int b, SizeKind kind);
PermGroup interval_product_group(int a, int b, SizeKind kind);

/// S_n wr C_k on its n*k points (block 0 carries the S_n generators, the
/// last generator rotates blocks i -> i+1 mod k).
PermGroup wreath_imprimitive(std::size_t n, std::size_t k);

/// The subgroup S_n^{k-2} x (S_n)_{n-1} x 1 of wreath_imprimitive(n, k).
PermGroup wreath_point_subgroup(std::size_t n, std::size_t k);

/**
 * Action of S_n wr C_k on the right cosets of wreath_point_subgroup(n, k).
 * Cosets are numbered in breadth-first order from the subgroup itself,
 * following the generators of wreath_imprimitive(n, k). Throws
 * BudgetExceeded when the index passes `max_index`.
 */
PermGroup wreath_coset_action(std::size_t n, std::size_t k, std::size_t max_index = 100000);

/// The same action built from the coset labels (block of the image of the
/// last block, position of the image of point (k-2, n-1), permutation of
/// the last block), numbered ((j * n) + a) * n! + lexrank(z).
PermGroup wreath_coset_action_by_labels(std::size_t n, std::size_t k);

/// Label id (as numbered by wreath_coset_action_by_labels) of the coset H g.
std::size_t wreath_coset_label(std::size_t n, std::size_t k, const Permutation& g);

/// S_n on the k-subsets of {0, ..., n-1}.
PermGroup k_subset_action(std::size_t n, std::size_t k);
std::vector<std::vector<Point>> k_subsets(std::size_t n, std::size_t k);

/// GL(4,2) on the 35 two-dimensional subspaces of F_2^4 (sorted by their
/// reduced echelon basis).
PermGroup gl42_on_2subspaces();

// ---------------------------------------------------------------------------
// Construction expressions

struct GroupSpec;

namespace spec {
struct Sym { std::size_t n; };
struct CyclicRegular { std::size_t p; };
struct ElemAbelianRegular { std::uint32_t p; std::uint32_t d; };
struct DisjointProduct { std::vector<GroupSpec> factors; };
struct ProductAction { std::vector<GroupSpec> factors; };
struct PrescribedSizes { std::vector<int> sizes; std::uint32_t p = 2; };
struct IntervalProduct { int a; int b; SizeKind kind; };
struct WreathCoset { std::size_t n; std::size_t k; };
struct KSubsets { std::size_t n; std::size_t k; };
struct GL42Planes {};
struct Explicit { std::size_t degree; std::vector<Permutation> generators; };
}  // namespace spec

struct GroupSpec {
  using Node = std::variant<spec::Sym, spec::CyclicRegular, spec::ElemAbelianRegular,
                            spec::DisjointProduct, spec::ProductAction, spec::PrescribedSizes,
                            spec::IntervalProduct, spec::WreathCoset, spec::KSubsets,
                            spec::GL42Planes, spec::Explicit>;
  Node node;
};

/// Checks the parameter invariants; throws DomainError.
void validate(const GroupSpec& spec);

/// Evaluates the expression; throws DomainError on invalid parameters.
Construction build_group(const GroupSpec& spec);

/// Short human label, e.g. "Sym(3) x Sym(3)".
std::string describe(const GroupSpec& spec);

}  // namespace basekit
