#include "phipade/quadrature.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <vector>

#include "phipade/big_value.hpp"
#include "phipade/errors.hpp"
#include "phipade/special.hpp"

namespace phipade {

namespace mp = boost::multiprecision;

namespace {

constexpr int kMaxAbscissaIndex = 7; // |u| <= 7 covers t in (e^-861, e^861)

struct Node {
  Real t;
  Real weight; // dt/du
};

// Nodes of one level, ordered outward: for level 0, u = 0, +-1, +-2, ...;
// for level L > 0, the odd multiples of 2^-L. Entries are generated lazily up
// to the furthest node a caller has needed. Deques keep references stable
// while a nested integration extends the same table.
struct LevelNodes {
  std::deque<Node> positive;
  std::deque<Node> negative;
};

class NodeCache {
public:
  const Node& node(int level, bool positive, std::size_t index) {
    auto& levels = tables_[Real::default_precision()];
    if (levels.size() <= static_cast<std::size_t>(level)) levels.resize(level + 1);
    auto& side = positive ? levels[level].positive : levels[level].negative;
    while (side.size() <= index) side.push_back(make(level, positive, side.size()));
    return side[index];
  }

  static Real abscissa(int level, std::size_t index) {
    // level 0: u = index (index 0 is the centre, stored on the positive side)
    if (level == 0) return Real(static_cast<long>(index));
    Real h = mp::ldexp(Real(1), -level);
    return h * Real(static_cast<long>(2 * index + 1));
  }

private:
  static Node make(int level, bool positive, std::size_t index) {
    Real u = abscissa(level, index);
    if (!positive) u = -u;
    const Real half_pi = pi() / 2;
    Real s = half_pi * mp::sinh(u);
    Real t = mp::exp(s);
    Real w = half_pi * mp::cosh(u) * t;
    return {std::move(t), std::move(w)};
  }

  std::map<unsigned, std::deque<LevelNodes>> tables_;
};

thread_local NodeCache cache;

// Sum of f(t) dt/du over one level's new nodes, walking outward on each side
// until terms stop contributing relative to `reference`.
BigComplex level_sum(const ComplexIntegrand& f, int level, const Real& reference_in,
                     const Real& eps) {
  BigComplex sum;
  Real reference = reference_in;
  for (bool positive : {true, false}) {
    int small_run = 0;
    for (std::size_t index = 0;; ++index) {
      if (level == 0 && !positive && index == 0) continue; // centre counted once
      Real u = NodeCache::abscissa(level, index);
      if (u > kMaxAbscissaIndex) break;
      const Node& node = cache.node(level, positive, index);
      BigComplex term = f(node.t) * node.weight;
      sum += term;
      Real size = abs(term);
      reference = std::max<Real>(reference, abs(sum));
      if (size <= eps * reference) {
        if (++small_run >= 3) break;
      } else {
        small_run = 0;
      }
    }
  }
  return sum;
}

} // namespace

QuadratureResult integrate_half_line(const ComplexIntegrand& f, const Real& tolerance,
                                     int max_levels) {
  const Real eps = tolerance * pow10(-10);
  BigComplex total = level_sum(f, 0, Real(0), eps);
  BigComplex previous = total;
  Real estimate = abs(total) + 1;
  for (int level = 1; level <= max_levels; ++level) {
    Real reference = abs(total);
    total += level_sum(f, level, reference, eps);
    BigComplex current = total * mp::ldexp(Real(1), -level);
    estimate = abs(current - previous);
    previous = current;
    if (level >= 3 && estimate <= tolerance * std::max<Real>(Real(1), abs(current))) {
      return {std::move(current), std::move(estimate), level};
    }
  }
  throw QuadratureError("no convergence after " + std::to_string(max_levels) +
                        " levels, error estimate " + format_real(estimate, 6));
}

QuadratureResult integrate_half_line(const RealIntegrand& f, const Real& tolerance,
                                     int max_levels) {
  return integrate_half_line(
      ComplexIntegrand([&f](const Real& t) { return BigComplex(f(t)); }), tolerance,
      max_levels);
}

} // namespace phipade
