#pragma once

#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "suliciu/lax_friedrichs.hpp"
#include "suliciu/verification.hpp"

namespace suliciu::io {

/// "%.12e"; every float written by the library goes through this.
std::string format_double(double x);

/// `snap_t<time>.csv` with the time printed to six decimals.
std::string snapshot_filename(double t);

/// Header `x,rho,u,v`, one row per cell center.
void write_snapshot_csv(std::ostream& os, const fv::Field& f, const fv::Grid& grid, const Params& p);

/// Header `N,shock_err,weight_err_rel,L1_rho,L1_u,L1_v`; missing values are
/// left empty.
void write_convergence_csv(std::ostream& os, std::span<const verify::ConvergenceRow> rows);

/// Minimal streaming JSON writer with insertion-ordered keys and fixed float
/// formatting, so equal inputs give byte-identical documents.
class JsonWriter {
 public:
  JsonWriter& begin_object(std::string_view key = {});
  JsonWriter& end_object();
  JsonWriter& begin_array(std::string_view key = {});
  JsonWriter& end_array();

  JsonWriter& value(std::string_view key, double x);
  JsonWriter& value(std::string_view key, std::optional<double> x);  // skipped when empty
  JsonWriter& value(std::string_view key, long long x);
  JsonWriter& value(std::string_view key, std::size_t x);
  JsonWriter& value(std::string_view key, bool x);
  JsonWriter& value(std::string_view key, std::string_view x);
  JsonWriter& value(std::string_view key, const char* x) { return value(key, std::string_view(x)); }
  JsonWriter& array(std::string_view key, std::span<const double> xs);

  /// Pretty-printed document with a trailing newline.
  std::string str() const;

 private:
  void prefix(std::string_view key);

  std::string out_;
  std::vector<bool> first_;  // per nesting level: no element emitted yet
};

std::string escape_json(std::string_view s);

/// Fields of the report; optional fields are omitted when absent.
void write_report(JsonWriter& json, const verify::ResidualReport& rep);

}  // namespace suliciu::io
