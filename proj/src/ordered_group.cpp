#include "conehankel/ordered_group.hpp"

#include <algorithm>
#include <cmath>

namespace conehankel {

namespace {

int sign_of_coord(Coord x) { return (x > 0) - (x < 0); }

bool is_perfect_square(Coord m) {
  if (m < 0) return false;
  Coord r = static_cast<Coord>(std::llround(std::sqrt(static_cast<double>(m))));
  for (Coord c = std::max<Coord>(0, r - 2); c <= r + 2; ++c) {
    if (c * c == m) return true;
  }
  return false;
}

// Exact sign of a + b*sqrt(m), m non-square. Mixed signs reduce to comparing
// a^2 against m*b^2 in 128-bit arithmetic; ties are impossible for non-square m.
int quadratic_sign(Coord a, Coord b, Coord m) {
  if (a == 0 && b == 0) return 0;
  if (a >= 0 && b >= 0) return 1;
  if (a <= 0 && b <= 0) return -1;
  __int128 lhs = static_cast<__int128>(a) * a;
  __int128 rhs = static_cast<__int128>(m) * b * b;
  int cmp = (lhs > rhs) - (lhs < rhs);
  return a > 0 ? cmp : -cmp;
}

}  // namespace

OrderSpec OrderSpec::lex(int dim) {
  if (dim < 1) throw InvalidInput("order spec: dim must be >= 1");
  return OrderSpec(dim, OrderKind::Lex, 0);
}

OrderSpec OrderSpec::quadratic(Coord m) {
  if (m < 1) throw InvalidInput("order spec: quadratic weight m must be positive");
  if (is_perfect_square(m))
    throw InvalidInput("order spec: quadratic weight m must be non-square");
  return OrderSpec(2, OrderKind::Quadratic, m);
}

OrderSpec OrderSpec::broken_half_plane(int dim) {
  if (dim < 1) throw InvalidInput("order spec: dim must be >= 1");
  return OrderSpec(dim, OrderKind::BrokenHalfPlane, 0);
}

void OrderSpec::require_dim(const GroupElement& n) const {
  if (n.size() != dim_)
    throw InvalidInput("group element has dimension " + std::to_string(n.size()) +
                       ", order spec expects " + std::to_string(dim_));
}

bool OrderSpec::in_positive_cone(const GroupElement& n) const {
  require_dim(n);
  switch (kind_) {
    case OrderKind::Lex:
    case OrderKind::Quadratic:
      return sign(n) >= 0;
    case OrderKind::BrokenHalfPlane:
      return n(0) >= 0;
  }
  throw InternalError("unreachable order kind");
}

int OrderSpec::sign(const GroupElement& n) const {
  require_dim(n);
  switch (kind_) {
    case OrderKind::Lex:
      for (Index i = 0; i < n.size(); ++i) {
        if (n(i) != 0) return sign_of_coord(n(i));
      }
      return 0;
    case OrderKind::Quadratic:
      return quadratic_sign(n(0), n(1), m_);
    case OrderKind::BrokenHalfPlane:
      throw InvalidInput("broken order has no well-defined sign; validate it instead");
  }
  throw InternalError("unreachable order kind");
}

Ordering compare(const OrderSpec& spec, const GroupElement& m, const GroupElement& n) {
  spec.require_dim(m);
  spec.require_dim(n);
  int s = spec.sign(n - m);
  return s > 0 ? Ordering::LT : (s < 0 ? Ordering::GT : Ordering::EQ);
}

std::vector<GroupElement> box_points(int dim, int radius) {
  std::vector<GroupElement> out;
  GroupElement n(dim);
  // odometer over the full box, emitted in sup-norm shells
  std::vector<GroupElement> all;
  n.setConstant(-radius);
  while (true) {
    all.push_back(n);
    int i = dim - 1;
    while (i >= 0 && n(i) == radius) {
      n(i) = -radius;
      --i;
    }
    if (i < 0) break;
    ++n(i);
  }
  out.reserve(all.size());
  for (int shell = 0; shell <= radius; ++shell) {
    for (const auto& p : all) {
      if (p.cwiseAbs().maxCoeff() == shell) out.push_back(p);
    }
  }
  return out;
}

ValidationReport validate_order(const OrderSpec& spec, int radius) {
  if (radius < 1) throw InvalidInput("validate_order: radius must be >= 1");
  ValidationReport report;
  report.radius = radius;
  const int max_witnesses_per_axiom = 8;
  auto add = [&](const std::string& axiom, std::vector<GroupElement> w,
                 const std::string& detail) {
    int seen = 0;
    for (const auto& v : report.violations)
      if (v.axiom == axiom) ++seen;
    if (seen < max_witnesses_per_axiom)
      report.violations.push_back({axiom, std::move(w), detail});
  };

  GroupElement zero = GroupElement::Zero(spec.dim());
  if (!spec.in_positive_cone(zero))
    add("contains_unit", {zero}, "0 must lie in the positive cone");

  const auto pts = box_points(spec.dim(), radius);
  std::vector<char> pos(pts.size());
  for (size_t i = 0; i < pts.size(); ++i)
    pos[i] = spec.in_positive_cone(pts[i]) ? 1 : 0;

  for (size_t i = 0; i < pts.size(); ++i) {
    const auto& p = pts[i];
    if (p.isZero()) continue;
    GroupElement q = -p;
    bool p_pos = pos[i];
    bool q_pos = spec.in_positive_cone(q);
    if (p_pos && q_pos) {
      // report each +/- pair once, larger representative first
      if (CoordLess{}(p, q)) continue;
      add("antisymmetry", {p, q}, "both n and -n lie in the positive cone");
    } else if (!p_pos && !q_pos) {
      if (CoordLess{}(p, q)) continue;
      add("totality", {p, q}, "neither n nor -n lies in the positive cone");
    }
  }

  // closure of X+ under addition, where the sum stays inside the box
  std::vector<size_t> positive_idx;
  for (size_t i = 0; i < pts.size(); ++i)
    if (pos[i] && !pts[i].isZero()) positive_idx.push_back(i);
  for (size_t a : positive_idx) {
    for (size_t b : positive_idx) {
      if (b < a) continue;
      GroupElement s = pts[a] + pts[b];
      if (s.cwiseAbs().maxCoeff() > radius) continue;
      ++report.checked_pairs;
      if (!spec.in_positive_cone(s))
        add("additive_closure", {pts[a], pts[b], s},
            "sum of positive elements left the positive cone");
    }
  }
  return report;
}

SmallestPositiveResult smallest_positive(const OrderSpec& spec, int search_radius) {
  if (search_radius < 1) throw InvalidInput("smallest_positive: radius must be >= 1");
  SmallestPositiveResult result;
  if (spec.kind() == OrderKind::Lex) {
    GroupElement chi1 = GroupElement::Zero(spec.dim());
    chi1(spec.dim() - 1) = 1;
    result.element = chi1;
    return result;
  }
  if (spec.kind() != OrderKind::Quadratic)
    throw InvalidInput("smallest_positive: order must be Lex or Quadratic");

  // Minimum of X+ \cap box(r) for growing r; every strict improvement extends
  // the certificate chain. No minimum exists, so the chain never stalls for
  // long (the order is dense at 0).
  std::optional<GroupElement> best;
  for (int r = 1; r <= search_radius; ++r) {
    for (const auto& p : box_points(2, r)) {
      if (p.cwiseAbs().maxCoeff() != r && r > 1) continue;  // inner shells already seen
      if (p.isZero() || spec.sign(p) <= 0) continue;
      if (!best || compare(spec, p, *best) == Ordering::LT) {
        best = p;
        result.certificate.push_back(p);
      }
    }
  }
  return result;
}

std::optional<Index> ConeSlab::find(const GroupElement& n) const {
  auto it = position.find(n);
  if (it == position.end()) return std::nullopt;
  return it->second;
}

ConeSlab ConeSlab::from_elements(const OrderSpec& spec, ConeSign sign,
                                 std::vector<GroupElement> elements) {
  for (const auto& n : elements) {
    spec.require_dim(n);
    int s = spec.sign(n);
    if (sign == ConeSign::Positive ? s < 0 : s >= 0)
      throw InvalidInput("cone slab element " + to_string(n) + " has the wrong sign");
  }
  std::sort(elements.begin(), elements.end(),
            [&](const GroupElement& a, const GroupElement& b) {
              return compare(spec, a, b) == Ordering::LT;
            });
  ConeSlab slab{spec, sign, std::move(elements), {}};
  for (Index i = 0; i < slab.size(); ++i) {
    if (i > 0 && compare(spec, slab.elements[i - 1], slab.elements[i]) != Ordering::LT)
      throw InvalidInput("cone slab elements are not distinct");
    slab.position.emplace(slab.elements[i], i);
  }
  return slab;
}

ConeSlab cone_slab(const OrderSpec& spec, ConeSign sign, int box_radius) {
  if (box_radius < 1) throw InvalidInput("cone_slab: box_radius must be >= 1");
  std::vector<GroupElement> elems;
  for (const auto& p : box_points(spec.dim(), box_radius)) {
    int s = spec.sign(p);
    if (sign == ConeSign::Positive ? s >= 0 : s < 0) elems.push_back(p);
  }
  return ConeSlab::from_elements(spec, sign, std::move(elems));
}

}  // namespace conehankel
