#include "mfn/grids.hpp"

#include <cmath>
#include <stdexcept>

namespace mfn {
namespace {

// 15-point Gauss-Legendre on [-1, 1], symmetric (node 0 plus 7 pairs).
constexpr double kX15[8] = {
    0.000000000000000000000000000000000, 0.201194093997434522300628303394596,
    0.394151347077563369897207370981045, 0.570972172608538847537226737253911,
    0.724417731360170047416186054613938, 0.848206583410427216200648320774217,
    0.937273392400705904307758947710209, 0.987992518020485428489565718586613};
constexpr double kW15[8] = {
    0.202578241925561272880620199967519, 0.198431485327111576456118326443839,
    0.186161000015562211026800561866423, 0.166269205816993933553200860481209,
    0.139570677926154314447804794511028, 0.107159220467171935011869546685869,
    0.070366047488108124709267416450667, 0.030753241996117268354628393577204};

void append_panel(FiberGrid& g, double a, double b) {
  const double c = 0.5 * (a + b), h = 0.5 * (b - a);
  for (int i = 7; i >= 1; --i) {
    g.nodes.push_back(c - h * kX15[i]);
    g.weights.push_back(h * kW15[i]);
  }
  g.nodes.push_back(c);
  g.weights.push_back(h * kW15[0]);
  for (int i = 1; i <= 7; ++i) {
    g.nodes.push_back(c + h * kX15[i]);
    g.weights.push_back(h * kW15[i]);
  }
}

}  // namespace

XiSpec XiSpec::integers(long n_min, long n_max) {
  XiSpec s;
  s.discrete = true;
  s.n_min = n_min;
  s.n_max = n_max;  // n_max < n_min is the empty window
  return s;
}

XiSpec XiSpec::grid(double min, double max, double step) {
  if (!(step > 0.0)) throw std::invalid_argument("XiSpec: step must be positive");
  XiSpec s;
  s.min = min;
  s.max = max;  // max < min is the empty window
  s.step = step;
  return s;
}

std::vector<DualFrequency> XiSpec::frequencies() const {
  std::vector<DualFrequency> out;
  if (discrete) {
    for (long n = n_min; n <= n_max; ++n) out.push_back(DualFrequency::integer(n));
  } else if (max >= min) {
    const long count = lround(std::floor((max - min) / step + 0.5)) + 1;
    out.reserve(size_t(count));
    for (long j = 0; j < count; ++j) out.push_back(DualFrequency::real(min + double(j) * step));
  }
  return out;
}

std::vector<double> XiSpec::q_weights() const {
  const auto freqs = frequencies();
  std::vector<double> w(freqs.size(), discrete ? 1.0 : step);
  if (!discrete && w.size() >= 2) {
    w.front() *= 0.5;
    w.back() *= 0.5;
  }
  return w;
}

FiberGrid make_fiber_grid(const ModelGeometry& g, const FiberGridSpec& spec) {
  if (spec.n < 4) throw std::invalid_argument("fiber grid needs at least 4 panels");
  const FiberDomain dom = fiber_domain(g);
  FiberGrid grid;
  grid.lo = dom.lower;

  double hi = dom.upper;
  if (dom.unbounded()) {
    hi = spec.span > 0.0 ? spec.span : (g.kind == GeometryKind::Elliptic ? 8.0 : 60.0);
  }
  grid.hi = hi;

  // Panel edges: geometric ladders toward both endpoints joined at the
  // midpoint. Singular densities (lambda < 0) and sharp boundary layers of
  // exponential profiles both live at the ends.
  const int side = spec.n / 2;
  const double m = 0.5 * (grid.lo + hi);
  std::vector<double> edges;
  edges.push_back(grid.lo);
  for (int k = side; k >= 1; --k) {
    const double t = grid.lo + (m - grid.lo) * std::pow(spec.grading, k);
    if (t > edges.back()) edges.push_back(t);
  }
  if (m > edges.back()) edges.push_back(m);
  for (int k = 1; k <= side; ++k) {
    const double t = hi - (hi - m) * std::pow(spec.grading, k);
    if (t > edges.back() && t < hi) edges.push_back(t);
  }
  edges.push_back(hi);

  grid.nodes.reserve((edges.size() - 1) * 15);
  grid.weights.reserve((edges.size() - 1) * 15);
  for (size_t i = 0; i + 1 < edges.size(); ++i) append_panel(grid, edges[i], edges[i + 1]);
  return grid;
}

}  // namespace mfn
