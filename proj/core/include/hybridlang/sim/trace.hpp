#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "hybridlang/sim/value.hpp"

namespace hybridlang::sim {

struct TraceRow {
  double time = 0.0;
  std::vector<Value> values;
};

// Time-indexed table of recorded variables; row k holds time k*dt.
struct Trace {
  std::vector<std::string> columns;
  std::vector<TraceRow> rows;
};

// CSV with one column per scalar; vector/matrix values expand to
// path.i / path.r.c. Reals print with `digits` significant digits
// (17 round-trips doubles exactly).
void write_csv(const Trace& trace, std::ostream& os, int digits = 17);

// Reads a CSV written by write_csv back as a scalar-column trace.
Trace read_csv(std::istream& is);

// One JSON object per row: {"t": ..., "<path>": ...}.
void write_jsonl(const Trace& trace, std::ostream& os, int digits = 17);

// The scalar-column view write_csv produces (helper for round-trip checks).
Trace expand_to_scalars(const Trace& trace);

}  // namespace hybridlang::sim
