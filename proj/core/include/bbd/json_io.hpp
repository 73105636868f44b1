#pragma once

// JSON documents with fixed key order. All functions return a single
// pretty-printed document without a trailing newline.

#include <string>

#include "bbd/analysis.hpp"
#include "bbd/cycles.hpp"
#include "bbd/hunt.hpp"
#include "bbd/verify.hpp"

namespace bbd {

// {order, strong, underlying_2connected, cut_vertices, dominating_pairs,
//  max_bk, wang, sum_condition, degrees}
std::string to_json(const ConditionReport& r);

// Array of lengths, increasing.
std::string to_json(const Spectrum& s);

// {theorem, hypotheses_met, failed_hypotheses, conclusion_holds,
//  escape_clause, witness, counterexample}
std::string to_json(const TheoremVerdict& v);

// {theorem, spec, tested, discarded, hypotheses_met, rejections,
//  counterexamples, distinct_canonical_forms, duration_ms}
// Without timing, duration_ms is omitted so the document depends on the
// inputs alone.
std::string to_json(const HuntReport& r, bool with_timing = true);

}  // namespace bbd
