#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "bbd/digraph.hpp"
#include "bbd/verify.hpp"

namespace bbd {

enum class GenMode { Random, Structured, Exhaustive };

std::string_view to_string(GenMode mode);
GenMode parse_gen_mode(std::string_view text);

inline constexpr int kExhaustiveMaxHalfOrder = 3;

struct GenSpec {
  int half_order = 5;
  GenMode mode = GenMode::Random;
  double arc_density = 0.5;  // per directed arc
  std::uint64_t seed = 0;
  std::int64_t count = 1;    // instance indices 0..count-1

  /// Throws std::invalid_argument on out-of-range fields.
  void validate() const;
};

/// Per-instance random stream: std::mt19937_64 seeded with
/// splitmix64(seed ^ splitmix64(index)). Conversions to doubles and bounded
/// integers are done here rather than through <random> distributions, whose
/// output is implementation-defined, so streams match across toolchains.
class InstanceRng {
 public:
  InstanceRng(std::uint64_t seed, std::uint64_t index);

  std::uint64_t next() { return engine_(); }
  double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  bool bernoulli(double p) { return uniform01() < p; }
  /// Uniform in [0, n) for n >= 1; rejection sampling, no modulo bias.
  std::uint64_t below(std::uint64_t n);

 private:
  std::mt19937_64 engine_;
};

std::uint64_t splitmix64(std::uint64_t x);

/// Every one of the 2a^2 directed arcs present independently with
/// probability arc_density.
BipartiteDigraph gen_random(const GenSpec& spec, std::uint64_t index);

/// Instance shaped like V = A u B u {u} with no A-B arcs, |B| in {1, 2},
/// then repaired towards strong + B_0 with at most 4a added arcs.
/// Returns nullopt when the repaired digraph still fails a hypothesis.
/// Every returned digraph is strong, satisfies B_0, and has a non-2-connected
/// underlying graph.
std::optional<BipartiteDigraph> gen_structured(const GenSpec& spec, std::uint64_t index);

/// Labeled digraph number `code` (base-4 digits, x0y0 least significant).
BipartiteDigraph decode_labeled(int a, std::uint64_t code);
std::uint64_t labeled_count(int a);

/// Every labeled digraph of half-order a <= 3 accepted by `filter`, once each
/// (or once per isomorphism class when dedup is set), in code order.
std::vector<BipartiteDigraph> enumerate_all(int a,
                                            const std::function<bool(const BipartiteDigraph&)>& filter = {},
                                            bool dedup = false);

struct Counterexample {
  std::uint64_t index = 0;
  std::string digraph;  // text format
  TheoremVerdict verdict;
};

struct HuntReport {
  TheoremId theorem = TheoremId::T16;
  GenSpec spec;
  std::int64_t tested = 0;
  std::int64_t discarded = 0;  // structured instances the repair loop could not fix
  std::int64_t hypotheses_met = 0;
  std::map<std::string, std::int64_t> rejections;  // first failed hypothesis kind
  std::vector<Counterexample> counterexamples;
  std::int64_t distinct_canonical_forms = 0;
  double duration_ms = 0;
};

/// Runs the generator over indices 0..count-1 split across `workers` threads
/// and verifies each instance. The report (apart from duration_ms) depends
/// only on theorem and spec.
HuntReport hunt_counterexamples(TheoremId theorem, const GenSpec& spec, int workers = 1);

/// Generator dispatch by mode; nullopt for discarded structured instances.
std::optional<BipartiteDigraph> generate(const GenSpec& spec, std::uint64_t index);

}  // namespace bbd
