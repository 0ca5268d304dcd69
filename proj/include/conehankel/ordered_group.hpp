#pragma once

#include <optional>
#include <vector>

#include "conehankel/types.hpp"

namespace conehankel {

enum class OrderKind {
  Lex,             // lexicographic on Z^d
  Quadratic,       // d = 2, n >= 0 iff n1 + n2*sqrt(m) >= 0, m non-square
  BrokenHalfPlane  // deliberately invalid "cone" {n : n1 >= 0}, for validation demos
};

enum class Ordering { LT, EQ, GT };
enum class ConeSign { Positive, Negative };

/// An admissible translation-invariant total order on Z^d, given by its
/// positive cone. Lex always satisfies the axioms; Quadratic is the standard
/// dense order on Z^2 without a smallest positive element. BrokenHalfPlane
/// violates antisymmetry and exists so the validator has something to catch.
class OrderSpec {
 public:
  static OrderSpec lex(int dim);
  static OrderSpec quadratic(Coord m);  // dim fixed at 2
  static OrderSpec broken_half_plane(int dim);

  int dim() const { return dim_; }
  OrderKind kind() const { return kind_; }
  Coord quadratic_weight() const { return m_; }

  /// Membership n in X+ (includes 0). Total for all kinds, including broken
  /// ones; consistency across n and -n is what validate_order checks.
  bool in_positive_cone(const GroupElement& n) const;

  /// Sign of n in the order: +1 on X+\{0}, 0 at 0, -1 on X-.
  /// Requires a kind whose cone is an actual order (not BrokenHalfPlane).
  int sign(const GroupElement& n) const;

  bool is_zero(const GroupElement& n) const { return n.isZero(); }

  void require_dim(const GroupElement& n) const;

  bool operator==(const OrderSpec& other) const {
    return dim_ == other.dim_ && kind_ == other.kind_ && m_ == other.m_;
  }

 private:
  OrderSpec(int dim, OrderKind kind, Coord m) : dim_(dim), kind_(kind), m_(m) {}

  int dim_;
  OrderKind kind_;
  Coord m_ = 0;
};

/// m <= n iff n - m in X+.
Ordering compare(const OrderSpec& spec, const GroupElement& m, const GroupElement& n);

struct OrderViolation {
  std::string axiom;  // one of: contains_unit, antisymmetry, totality, additive_closure
  std::vector<GroupElement> witness;
  std::string detail;
};

struct ValidationReport {
  int radius = 0;
  std::vector<OrderViolation> violations;
  long checked_pairs = 0;
  bool passed() const { return violations.empty(); }
};

/// Exhaustively checks the cone axioms on the box [-radius, radius]^d:
/// 0 in X+, X+ and -X+ meet only in 0, X+ union -X+ covers the box, and
/// X+ + X+ stays in X+ where sums remain in the box. Witnesses are reported
/// smallest (sup-norm shells) first.
ValidationReport validate_order(const OrderSpec& spec, int radius);

struct SmallestPositiveResult {
  std::optional<GroupElement> element;
  /// For orders without a minimum: strictly decreasing positive elements,
  /// the minimum of X+ \cap box(r) for each r at which it improves.
  std::vector<GroupElement> certificate;
};

/// Smallest element of X+ \ {0} if one exists. Lex has (0,...,0,1); Quadratic
/// has none, and the search emits a strictly decreasing certificate chain
/// found within the given box radius.
SmallestPositiveResult smallest_positive(const OrderSpec& spec, int search_radius);

/// Finite ordered section of a cone: X+ (with 0) or X- (without 0) inside a
/// box, ascending in the spec's order. Rows/columns of every operator
/// truncation are ConeSlabs.
struct ConeSlab {
  OrderSpec spec;
  ConeSign sign;
  std::vector<GroupElement> elements;            // strictly ascending
  GroupElementMap<Index> position;               // element -> offset

  Index size() const { return static_cast<Index>(elements.size()); }
  const GroupElement& operator[](Index i) const { return elements[static_cast<size_t>(i)]; }
  std::optional<Index> find(const GroupElement& n) const;

  /// Builds a slab from explicit elements (sorted here; sign-checked).
  static ConeSlab from_elements(const OrderSpec& spec, ConeSign sign,
                                std::vector<GroupElement> elements);
};

ConeSlab cone_slab(const OrderSpec& spec, ConeSign sign, int box_radius);

/// All points of [-radius, radius]^d, enumerated by sup-norm shells
/// (deterministic; smallest witnesses first).
std::vector<GroupElement> box_points(int dim, int radius);

}  // namespace conehankel
