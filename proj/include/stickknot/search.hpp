#pragma once

// Random configurations and hill climbing on the figure-8 count.
//
// All randomness comes from std::mt19937_64 streams seeded explicitly; bounded
// draws use rejection sampling so a seed produces the same configuration on
// every platform.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "stickknot/census.hpp"
#include "stickknot/config_io.hpp"
#include "stickknot/geometry.hpp"

namespace stickknot {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

/// Seed of the index-th item of a batch (or worker) under a master seed.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
  return splitmix64(master ^ splitmix64(index));
}

/// Uniform integer in [lo, hi].
inline long long uniform_int(std::mt19937_64& rng, long long lo, long long hi) {
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  if (span == 0) return static_cast<long long>(rng());
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return lo + static_cast<long long>(x % span);
}

inline constexpr int kMaxAttempts = 1000;

/// n lattice points uniform in [-bound, bound]^3, redrawn until in general
/// position.
inline Configuration random_configuration(std::uint64_t seed, long long bound, std::size_t n = 7) {
  if (bound < 4) throw PreconditionError("coordinate bound must be at least 4");
  std::mt19937_64 rng(seed);
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    std::vector<Point3> pts;
    for (std::size_t i = 0; i < n; ++i) {
      const long long x = uniform_int(rng, -bound, bound);
      const long long y = uniform_int(rng, -bound, bound);
      const long long z = uniform_int(rng, -bound, bound);
      pts.push_back(make_point(x, y, z));
    }
    try {
      return Configuration(std::move(pts));
    } catch (const DegeneracyError&) {
    }
  }
  throw ExhaustionError("no general-position configuration after " + std::to_string(kMaxAttempts) + " draws");
}

/// Moves one uniformly chosen vertex by an integer offset of max-norm at most
/// `magnitude`, redrawing while general position fails.
inline Configuration perturb(const Configuration& c, std::uint64_t seed, long long magnitude) {
  if (magnitude < 0) throw PreconditionError("negative perturbation magnitude");
  if (magnitude == 0) return c;
  std::mt19937_64 rng(seed);
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    std::vector<Point3> pts(c.points().begin(), c.points().end());
    auto& p = pts[static_cast<std::size_t>(uniform_int(rng, 0, static_cast<long long>(pts.size()) - 1))];
    p.x += uniform_int(rng, -magnitude, magnitude);
    p.y += uniform_int(rng, -magnitude, magnitude);
    p.z += uniform_int(rng, -magnitude, magnitude);
    try {
      return Configuration(std::move(pts));
    } catch (const DegeneracyError&) {
    }
  }
  throw ExhaustionError("perturbation kept breaking general position");
}

struct SearchParams {
  std::uint64_t budget = 100000;  // census evaluations
  std::uint64_t seed = 1;
  long long bound = 100;
  std::uint64_t stall_window = 200;
};

struct TraceEvent {
  enum class Kind { Restart, Move };
  Kind kind = Kind::Restart;
  std::uint64_t seed = 0;
  long long magnitude = 0;  // Move only
  friend bool operator==(const TraceEvent&, const TraceEvent&) = default;
};

struct SearchScore {
  std::size_t figure8 = 0;
  std::size_t trefoil = 0;
  friend auto operator<=>(const SearchScore&, const SearchScore&) = default;
};

struct SearchResult {
  Configuration best;
  SearchScore score;
  std::uint64_t evaluations = 0;
  std::uint64_t restarts = 0;
  /// Restarts and accepted moves, enough to rebuild every accepted state.
  std::vector<TraceEvent> trace;
  /// Figure-8 cycles of every configuration that reached 3 during the run.
  std::vector<std::vector<Cycle>> witness_cycles;
};

namespace detail {

inline bool lex_less(const Configuration& a, const Configuration& b) {
  const auto pa = a.points(), pb = b.points();
  for (std::size_t i = 0; i < std::min(pa.size(), pb.size()); ++i)
    for (auto [x, y] : {std::pair{&pa[i].x, &pb[i].x}, std::pair{&pa[i].y, &pb[i].y},
                        std::pair{&pa[i].z, &pb[i].z}})
      if (*x != *y) return *x < *y;
  return pa.size() < pb.size();
}

/// Guard: more than three figure-8 cycles is a bound violation,
/// so the run stops and carries the configuration in the message.
inline SearchScore evaluate(const Configuration& c, CensusReport* keep = nullptr) {
  CensusReport r = run_census(c, {.tables = false, .triples = false});
  if (r.figure8 > 3)
    throw InconsistencyError("census found " + std::to_string(r.figure8) +
                             " figure-8 cycles; configuration:\n" + format_config(c));
  SearchScore s{r.figure8, r.trefoil};
  if (keep) *keep = std::move(r);
  return s;
}

class BestTracker {
 public:
  void offer(const Configuration& c, SearchScore s) {
    if (!best_ || s > score_ || (s == score_ && lex_less(c, *best_))) {
      best_ = c;
      score_ = s;
    }
  }
  const Configuration& best() const { return *best_; }
  SearchScore score() const { return score_; }

 private:
  std::optional<Configuration> best_;
  SearchScore score_;
};

}  // namespace detail

/// Random-restart hill climbing. A move perturbs the current configuration
/// and is kept when its (figure-8, trefoil) score does not drop; after
/// `stall_window` evaluations without strict improvement the climb restarts
/// from a fresh random configuration. Stops early at three figure-8 cycles.
inline SearchResult search_max_fig8(const SearchParams& params) {
  if (params.budget < 1) throw PreconditionError("search budget must be at least 1");
  std::mt19937_64 master(params.seed);
  detail::BestTracker best;
  std::vector<TraceEvent> trace;
  std::vector<std::vector<Cycle>> witnesses;
  std::uint64_t evals = 0, restarts = 0, stall = 0;

  auto note_witness = [&](const CensusReport& r) {
    if (r.figure8 != 3) return;
    std::vector<Cycle> cycles;
    for (const auto* rec : r.of_class(KnotClass::FigureEight)) cycles.push_back(rec->cycle);
    if (std::find(witnesses.begin(), witnesses.end(), cycles) == witnesses.end()) witnesses.push_back(cycles);
  };

  std::optional<Configuration> current;
  SearchScore current_score;
  auto restart = [&] {
    const std::uint64_t s = master();
    current = random_configuration(s, params.bound);
    CensusReport r;
    current_score = detail::evaluate(*current, &r);
    note_witness(r);
    ++evals;
    ++restarts;
    stall = 0;
    trace.push_back({TraceEvent::Kind::Restart, s, 0});
    best.offer(*current, current_score);
  };

  restart();
  const long long max_magnitude = std::max(1LL, params.bound / 5);
  while (evals < params.budget && best.score().figure8 < 3) {
    if (stall >= params.stall_window) {
      restart();
      continue;
    }
    const std::uint64_t s = master();
    const long long magnitude = uniform_int(master, 1, max_magnitude);
    Configuration candidate = perturb(*current, s, magnitude);
    CensusReport r;
    const SearchScore score = detail::evaluate(candidate, &r);
    ++evals;
    if (score >= current_score) {
      stall = score > current_score ? 0 : stall + 1;
      current = std::move(candidate);
      current_score = score;
      note_witness(r);
      trace.push_back({TraceEvent::Kind::Move, s, magnitude});
      best.offer(*current, current_score);
    } else {
      ++stall;
    }
  }
  return SearchResult{best.best(), best.score(), evals, restarts - 1, std::move(trace), std::move(witnesses)};
}

/// Rebuilds the best configuration of a run from its trace alone.
inline Configuration replay_trace(const std::vector<TraceEvent>& trace, long long bound) {
  if (trace.empty() || trace.front().kind != TraceEvent::Kind::Restart)
    throw PreconditionError("trace must start with a restart");
  detail::BestTracker best;
  std::optional<Configuration> current;
  for (const auto& ev : trace) {
    if (ev.kind == TraceEvent::Kind::Restart)
      current = random_configuration(ev.seed, bound);
    else
      current = perturb(*current, ev.seed, ev.magnitude);
    best.offer(*current, detail::evaluate(*current));
  }
  return best.best();
}

/// A witness has exactly three figure-8 Hamiltonian cycles and passes every
/// bound check. Always recomputed from the coordinates.
inline bool verify_witness(const Configuration& c) {
  if (c.size() != 7) return false;
  const CensusReport r = run_census(c);
  return r.figure8 == 3 && all_passed(verify_bounds(r)) && all_passed(verify_consistency(r));
}

}  // namespace stickknot
