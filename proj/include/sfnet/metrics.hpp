#pragma once

#include <cmath>
#include <cstddef>
#include <optional>

#include "sfnet/error.hpp"
#include "sfnet/graph.hpp"

namespace sfnet {

/// Fraction of links rewired by a successful attack.
inline double effectiveness(std::size_t rewired, std::size_t total_links) {
  if (total_links == 0) throw ZeroEdges();
  return static_cast<double>(rewired) / static_cast<double>(total_links);
}

/// Relative structural changes between an original network and its adversarial
/// counterpart, |after - before| / before for L, C and D. A delta whose
/// baseline is zero is reported as absent rather than poisoning downstream
/// aggregation with NaNs.
///
/// L here keeps the fixed 2/(n(n-1)) normalization of the average-distance
/// definition: unreachable pairs contribute nothing to the sum but stay in the
/// denominator. On connected graphs this equals the plain connected-pair mean;
/// on graphs an attack has disconnected it keeps the baseline and the
/// adversarial value on the same footing. The connected-pair counts are
/// reported alongside.
struct ConcealmentReport {
  double l_before = 0.0, l_after = 0.0;
  double c_before = 0.0, c_after = 0.0;
  double d_before = 0.0, d_after = 0.0;
  std::size_t pairs_before = 0, pairs_after = 0;  // connected pairs entering L
  std::optional<double> delta_l, delta_c, delta_d;
};

namespace detail {

inline double fixed_denominator_l(const Graph::PathStats& stats, int n) {
  const double all_pairs = 0.5 * static_cast<double>(n) * (n - 1);
  return stats.average * static_cast<double>(stats.connected_pairs) / all_pairs;
}

}  // namespace detail

inline ConcealmentReport concealment(const Graph& original, const Graph& adversarial) {
  if (original.node_count() != adversarial.node_count())
    throw ConfigInvalid("concealment requires identical node counts");
  const int n = original.node_count();
  ConcealmentReport rep;
  if (n >= 2 && original.edge_count() > 0) {
    const auto pb = original.avg_shortest_path();
    rep.l_before = detail::fixed_denominator_l(pb, n);
    rep.pairs_before = pb.connected_pairs;
  }
  if (n >= 2 && adversarial.edge_count() > 0) {
    const auto pa = adversarial.avg_shortest_path();
    rep.l_after = detail::fixed_denominator_l(pa, n);
    rep.pairs_after = pa.connected_pairs;
  }
  rep.c_before = original.avg_clustering();
  rep.c_after = adversarial.avg_clustering();
  rep.d_before = original.diagonal_distance();
  rep.d_after = adversarial.diagonal_distance();

  if (rep.l_before > 0.0) rep.delta_l = std::abs(rep.l_after - rep.l_before) / rep.l_before;
  if (rep.c_before > 0.0) rep.delta_c = std::abs(rep.c_after - rep.c_before) / rep.c_before;
  if (rep.d_before > 0.0) rep.delta_d = std::abs(rep.d_after - rep.d_before) / rep.d_before;
  return rep;
}

}  // namespace sfnet
