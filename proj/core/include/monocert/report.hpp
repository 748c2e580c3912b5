#pragma once

// JSON (schema_version 1) and CSV serialization. Floating-point numbers are
// written with 17 significant digits so values round-trip exactly; output
// depends only on the inputs, never on timing or thread count.

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "monocert/certify.hpp"
#include "monocert/counterexample.hpp"
#include "monocert/dynamics.hpp"

namespace monocert {

inline constexpr int kSchemaVersion = 1;

using Json = nlohmann::ordered_json;

Json to_json(Vec2 p);
Json to_json(const Region& r);
Json to_json(const GridSpec& g);
Json to_json(const Check& c);
Json to_json(const Certificate& cert);
Json to_json(const SkewAffineFit& fit);
Json to_json(const RefutationWitness& w);
/// Includes lattice coordinates and the value table as rows (index j, then i).
Json to_json(const PotentialTable& t);
Json to_json(const AffinityClassification& a);
Json to_json(const CounterexampleCertificate& c);
/// Summary only; iterates go to CSV.
Json to_json(const SolveTrace& t);

/// Wraps a payload as a versioned report: {"schema_version": 1, "kind": kind, ...payload}.
Json make_report(std::string_view kind, const Json& payload);

/// Pretty-printed JSON, two-space indent, 17 significant digits for floats,
/// non-finite numbers as null, trailing newline.
std::string dump_json(const Json& j);

std::string format_double(double v);

/// Header "x,y,metric" then one row per grid point in row-major order.
void write_grid_csv(std::ostream& os, const Region& region, const GridSpec& grid,
                    const std::vector<double>& values);
/// Header "k,x,y,residual" then one row per kept iterate.
void write_trace_csv(std::ostream& os, const SolveTrace& trace);

}  // namespace monocert
