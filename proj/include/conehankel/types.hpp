#pragma once

#include <Eigen/Dense>

#include <complex>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>

namespace conehankel {

using Complex = std::complex<double>;
using Coord = std::int64_t;
using Index = Eigen::Index;

/// A point of Z^d, identified with the character t |-> t_1^{n_1}...t_d^{n_d}.
/// Group operation is vector addition, inversion is negation.
using GroupElement = Eigen::Matrix<Coord, Eigen::Dynamic, 1>;

using MatrixXc = Eigen::MatrixXcd;
using VectorXc = Eigen::VectorXcd;

inline GroupElement group_element(std::initializer_list<Coord> coords) {
  GroupElement n(static_cast<Index>(coords.size()));
  Index i = 0;
  for (Coord c : coords) n(i++) = c;
  return n;
}

/// Structural (storage) order on coordinate vectors; unrelated to any group
/// order. Used only to key deterministic maps.
struct CoordLess {
  bool operator()(const GroupElement& a, const GroupElement& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    for (Index i = 0; i < a.size(); ++i) {
      if (a(i) != b(i)) return a(i) < b(i);
    }
    return false;
  }
};

template <typename T>
using GroupElementMap = std::map<GroupElement, T, CoordLess>;

/// Invalid caller-supplied data (bad dimensions, malformed files, ...).
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An internal invariant failed; indicates a bug, not bad input.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

inline std::string to_string(const GroupElement& n) {
  std::string s = "(";
  for (Index i = 0; i < n.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(n(i));
  }
  s += ")";
  return s;
}

}  // namespace conehankel
