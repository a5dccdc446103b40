#include "traintrack/itm.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

#include "traintrack/errors.hpp"
#include "traintrack/format.hpp"

namespace tt {

namespace {

double cubic(double x) { return ((x - 1.0) * x - 3.0) * x + 1.0; }

constexpr double kMergeTol = 1e-12;
constexpr double kMinPiece = 1e-15;

}  // namespace

double solve_alpha() {
  // p(0) = 1 > 0 > p(1) = -2; bisect, then Newton to full precision.
  double lo = 0.0, hi = 1.0;
  for (int i = 0; i < 80; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (cubic(mid) > 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  double x = 0.5 * (lo + hi);
  for (int i = 0; i < 8; ++i) {
    const double d = (3.0 * x - 2.0) * x - 3.0;
    x -= cubic(x) / d;
  }
  return x;
}

ItmConfig ItmConfig::validated(double x1, double x2, double s_a, double s_b,
                               double s_c) {
  if (!(0.0 < x1) || !(x1 < x2) || !(x2 < 1.0)) {
    throw MalformedInputError("ITM breakpoints must satisfy 0 < x1 < x2 < 1");
  }
  ItmConfig cfg;
  cfg.x1 = x1;
  cfg.x2 = x2;
  cfg.shift[0] = s_a;
  cfg.shift[1] = s_b;
  cfg.shift[2] = s_c;
  const double lo_by[3] = {0.0, x1, x2};
  const double hi_by[3] = {x1, x2, 1.0};
  for (int i = 0; i < 3; ++i) {
    if (lo_by[i] + cfg.shift[i] < -kMergeTol || hi_by[i] + cfg.shift[i] > 1.0 + kMergeTol) {
      throw MalformedInputError("ITM branch does not map into [0, 1]");
    }
  }
  return cfg;
}

ItmConfig bk_config() {
  const double a = solve_alpha();
  return ItmConfig::validated(1.0 - a, 1.0 - a * a, a, a * a, a * a - 1.0);
}

double itm_apply(const ItmConfig& cfg, double x) {
  if (x < 0.0 || x > 1.0) {
    throw MalformedInputError("ITM point outside [0, 1]");
  }
  if (x < cfg.x1) return x + cfg.shift[0];
  if (x < cfg.x2) return x + cfg.shift[1];
  return x + cfg.shift[2];
}

IntervalUnion itm_forward_intervals(const ItmConfig& cfg, std::size_t n) {
  IntervalUnion u;
  u.parts = {{0.0, 1.0}};
  const double dom_lo[3] = {0.0, cfg.x1, cfg.x2};
  const double dom_hi[3] = {cfg.x1, cfg.x2, 1.0};

  for (std::size_t step = 0; step < n; ++step) {
    std::vector<std::pair<double, double>> pieces;
    for (const auto& [a, b] : u.parts) {
      for (int k = 0; k < 3; ++k) {
        const double lo = std::max(a, dom_lo[k]);
        const double hi = std::min(b, dom_hi[k]);
        if (hi - lo > kMinPiece) {
          pieces.emplace_back(lo + cfg.shift[k], hi + cfg.shift[k]);
        }
      }
    }
    std::sort(pieces.begin(), pieces.end());
    std::vector<std::pair<double, double>> merged;
    for (const auto& [a, b] : pieces) {
      if (!merged.empty() && a <= merged.back().second + kMergeTol) {
        merged.back().second = std::max(merged.back().second, b);
      } else {
        merged.emplace_back(a, b);
      }
    }
    u.parts = std::move(merged);
  }
  return u;
}

std::string itm_itinerary(const ItmConfig& cfg, double x, std::size_t n) {
  if (x < 0.0 || x > 1.0) {
    throw MalformedInputError("ITM point outside [0, 1]");
  }
  std::string s;
  s.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (x < cfg.x1) {
      s += 'a';
    } else if (x < cfg.x2) {
      s += 'b';
    } else {
      s += 'c';
    }
    x = itm_apply(cfg, x);
  }
  return s;
}

double itm_dimension_estimate(const ItmConfig& cfg, std::size_t depth) {
  if (depth < 6) {
    throw PreconditionError("depth", "dimension estimate needs depth >= 6");
  }
  // y = d x through the origin, with y = ln(piece count) and
  // x = -ln(mean piece length); this is the defining relation
  // N ~ s^-d of the box dimension read off the survivor pieces.
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t n = (depth + 1) / 2; n <= depth; ++n) {
    const IntervalUnion u = itm_forward_intervals(cfg, n);
    const double count = static_cast<double>(u.piece_count());
    const double mean = u.total_length() / count;
    const double x = -std::log(mean);
    const double y = std::log(count);
    sxx += x * x;
    sxy += x * y;
  }
  if (sxx < 1e-9) {
    // No fragmentation at all (e.g. the identity configuration); fall back
    // to box counting the survivor union itself.
    return box_counting_dimension(itm_forward_intervals(cfg, depth), dyadic_scales())
        .dimension;
  }
  return sxy / sxx;
}

void write_survivor_csv(std::ostream& os, const ItmConfig& cfg, std::size_t n) {
  os << "depth,index,lo,hi\n";
  for (std::size_t d = 0; d <= n; ++d) {
    const IntervalUnion u = itm_forward_intervals(cfg, d);
    for (std::size_t i = 0; i < u.parts.size(); ++i) {
      os << d << ',' << i << ',' << fmt12(u.parts[i].first) << ','
         << fmt12(u.parts[i].second) << '\n';
    }
  }
}

void write_itm_summary_json(std::ostream& os, const ItmConfig& cfg, std::size_t depth) {
  const IntervalUnion u = itm_forward_intervals(cfg, depth);
  os << "{\n"
     << "  \"alpha\": " << fmt12(solve_alpha()) << ",\n"
     << "  \"depth\": " << depth << ",\n"
     << "  \"pieceCount\": " << u.piece_count() << ",\n"
     << "  \"totalLength\": " << fmt12(u.total_length()) << ",\n"
     << "  \"dimensionEstimate\": " << fmt12(itm_dimension_estimate(cfg, depth)) << "\n"
     << "}\n";
}

}  // namespace tt
