#include "suliciu/output.hpp"

#include <cmath>
#include <cstdio>

namespace suliciu::io {

std::string format_double(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12e", x);
  return buf;
}

std::string snapshot_filename(double t) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "snap_t%.6f.csv", t);
  return buf;
}

void write_snapshot_csv(std::ostream& os, const fv::Field& f, const fv::Grid& grid, const Params& p) {
  os << "x,rho,u,v\n";
  for (std::size_t j = 0; j < f.cells.size(); ++j) {
    const State s = to_primitive(f.cells[j], p);
    os << format_double(grid.center(j)) << ',' << format_double(s.rho) << ',' << format_double(s.u) << ','
       << format_double(s.v) << '\n';
  }
}

void write_convergence_csv(std::ostream& os, std::span<const verify::ConvergenceRow> rows) {
  const auto opt = [](const std::optional<double>& x) { return x ? format_double(*x) : std::string(); };
  os << "N,shock_err,weight_err_rel,L1_rho,L1_u,L1_v\n";
  for (const auto& r : rows) {
    os << r.n_cells << ',' << opt(r.shock_error) << ',' << opt(r.weight_error_rel) << ','
       << format_double(r.l1_errors[0]) << ',' << format_double(r.l1_errors[1]) << ','
       << format_double(r.l1_errors[2]) << '\n';
  }
}

std::string escape_json(std::string_view s) {
  std::string out;
  out.reserve(s.size() + 2);
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      case '\r': out += "\\r"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof(buf), "\\u%04x", c);
          out += buf;
        } else {
          out += c;
        }
    }
  }
  return out;
}

void JsonWriter::prefix(std::string_view key) {
  if (!first_.empty()) {
    if (!first_.back()) out_ += ',';
    first_.back() = false;
    out_ += '\n';
    out_.append(2 * first_.size(), ' ');
  }
  if (!key.empty()) {
    out_ += '"';
    out_ += escape_json(key);
    out_ += "\": ";
  }
}

JsonWriter& JsonWriter::begin_object(std::string_view key) {
  prefix(key);
  out_ += '{';
  first_.push_back(true);
  return *this;
}

JsonWriter& JsonWriter::end_object() {
  const bool empty = first_.back();
  first_.pop_back();
  if (!empty) {
    out_ += '\n';
    out_.append(2 * first_.size(), ' ');
  }
  out_ += '}';
  return *this;
}

JsonWriter& JsonWriter::begin_array(std::string_view key) {
  prefix(key);
  out_ += '[';
  first_.push_back(true);
  return *this;
}

JsonWriter& JsonWriter::end_array() {
  const bool empty = first_.back();
  first_.pop_back();
  if (!empty) {
    out_ += '\n';
    out_.append(2 * first_.size(), ' ');
  }
  out_ += ']';
  return *this;
}

JsonWriter& JsonWriter::value(std::string_view key, double x) {
  prefix(key);
  // JSON has no nan/inf literals.
  out_ += std::isfinite(x) ? format_double(x) : "null";
  return *this;
}

JsonWriter& JsonWriter::value(std::string_view key, std::optional<double> x) {
  if (x) value(key, *x);
  return *this;
}

JsonWriter& JsonWriter::value(std::string_view key, long long x) {
  prefix(key);
  out_ += std::to_string(x);
  return *this;
}

JsonWriter& JsonWriter::value(std::string_view key, std::size_t x) {
  prefix(key);
  out_ += std::to_string(x);
  return *this;
}

JsonWriter& JsonWriter::value(std::string_view key, bool x) {
  prefix(key);
  out_ += x ? "true" : "false";
  return *this;
}

JsonWriter& JsonWriter::value(std::string_view key, std::string_view x) {
  prefix(key);
  out_ += '"';
  out_ += escape_json(x);
  out_ += '"';
  return *this;
}

JsonWriter& JsonWriter::array(std::string_view key, std::span<const double> xs) {
  prefix(key);
  out_ += '[';
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out_ += ", ";
    out_ += std::isfinite(xs[i]) ? format_double(xs[i]) : "null";
  }
  out_ += ']';
  return *this;
}

std::string JsonWriter::str() const { return out_ + "\n"; }

void write_report(JsonWriter& json, const verify::ResidualReport& rep) {
  json.value("shock_position", rep.shock_position)
      .value("shock_position_error", rep.shock_position_error)
      .value("weight_estimate", rep.weight_estimate)
      .value("weight_exact", rep.weight_exact)
      .value("weight_error_rel", rep.weight_error_rel)
      .value("peak_density", rep.peak_density)
      .array("weak_residuals", rep.weak_residuals)
      .array("linf_errors_away_from_shock", rep.linf_errors_away_from_shock)
      .array("l1_errors", rep.l1_errors);
}

}  // namespace suliciu::io
