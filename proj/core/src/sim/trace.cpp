#include <cstdlib>
#include <istream>
#include <ostream>
#include <sstream>

#include "hybridlang/sim/trace.hpp"
#include "hybridlang/util/number_format.hpp"

namespace hybridlang::sim {

namespace {

void expand_header(const Trace& trace, const TraceRow& first, std::vector<std::string>& names,
                   std::vector<std::pair<size_t, std::pair<int, int>>>& cells) {
  for (size_t c = 0; c < trace.columns.size(); ++c) {
    const Value& v = first.values.at(c);
    if (v.is_vector()) {
      for (size_t i = 0; i < v.as_vector().size(); ++i) {
        names.push_back(trace.columns[c] + "." + std::to_string(i));
        cells.push_back({c, {static_cast<int>(i), -1}});
      }
    } else if (v.is_matrix()) {
      const auto& m = v.as_matrix();
      for (size_t r = 0; r < m.size(); ++r)
        for (size_t j = 0; j < m[r].size(); ++j) {
          names.push_back(trace.columns[c] + "." + std::to_string(r) + "." + std::to_string(j));
          cells.push_back({c, {static_cast<int>(r), static_cast<int>(j)}});
        }
    } else {
      names.push_back(trace.columns[c]);
      cells.push_back({c, {-1, -1}});
    }
  }
}

std::string cell_text(const Value& v, std::pair<int, int> at, int digits) {
  if (at.first < 0) {
    if (v.is_real()) return util::format_double(v.as_real(), digits);
    if (v.is_bool()) return v.as_bool() ? "true" : "false";
    if (v.is_text()) return v.as_text();
    throw EvalError(std::string("trace column changed shape mid-run: ") + v.type_name());
  }
  if (at.second < 0) return util::format_double(v.as_vector().at(at.first), digits);
  return util::format_double(v.as_matrix().at(at.first).at(at.second), digits);
}

}  // namespace

void write_csv(const Trace& trace, std::ostream& os, int digits) {
  if (trace.rows.empty()) {
    os << "time\n";
    return;
  }
  std::vector<std::string> names;
  std::vector<std::pair<size_t, std::pair<int, int>>> cells;
  expand_header(trace, trace.rows.front(), names, cells);

  os << "time";
  for (const auto& n : names) os << ',' << n;
  os << '\n';
  for (const auto& row : trace.rows) {
    os << util::format_double(row.time, digits);
    for (size_t i = 0; i < cells.size(); ++i)
      os << ',' << cell_text(row.values.at(cells[i].first), cells[i].second, digits);
    os << '\n';
  }
}

Trace read_csv(std::istream& is) {
  Trace trace;
  std::string line;
  if (!std::getline(is, line)) throw EvalError("empty CSV");

  auto split = [](const std::string& s) {
    std::vector<std::string> parts;
    std::string cur;
    for (char c : s) {
      if (c == ',') {
        parts.push_back(cur);
        cur.clear();
      } else if (c != '\r') {
        cur += c;
      }
    }
    parts.push_back(cur);
    return parts;
  };

  std::vector<std::string> header = split(line);
  if (header.empty() || header[0] != "time") throw EvalError("CSV header must start with time");
  trace.columns.assign(header.begin() + 1, header.end());

  while (std::getline(is, line)) {
    if (line.empty()) continue;
    std::vector<std::string> parts = split(line);
    if (parts.size() != header.size())
      throw EvalError("CSV row width " + std::to_string(parts.size()) + " != header width " +
                      std::to_string(header.size()));
    TraceRow row;
    row.time = std::strtod(parts[0].c_str(), nullptr);
    for (size_t i = 1; i < parts.size(); ++i)
      row.values.emplace_back(std::strtod(parts[i].c_str(), nullptr));
    trace.rows.push_back(std::move(row));
  }
  return trace;
}

Trace expand_to_scalars(const Trace& trace) {
  Trace out;
  if (trace.rows.empty()) return out;
  std::vector<std::pair<size_t, std::pair<int, int>>> cells;
  expand_header(trace, trace.rows.front(), out.columns, cells);
  for (const auto& row : trace.rows) {
    TraceRow r;
    r.time = row.time;
    for (const auto& cell : cells) {
      const Value& v = row.values.at(cell.first);
      if (cell.second.first < 0)
        r.values.push_back(v);
      else if (cell.second.second < 0)
        r.values.emplace_back(v.as_vector().at(cell.second.first));
      else
        r.values.emplace_back(v.as_matrix().at(cell.second.first).at(cell.second.second));
    }
    out.rows.push_back(std::move(r));
  }
  return out;
}

namespace {

void json_value(std::ostream& os, const Value& v, int digits) {
  if (v.is_real()) {
    os << util::format_double(v.as_real(), digits);
  } else if (v.is_bool()) {
    os << (v.as_bool() ? "true" : "false");
  } else if (v.is_text()) {
    os << '"';
    for (char c : v.as_text()) {
      if (c == '"' || c == '\\') os << '\\';
      os << c;
    }
    os << '"';
  } else if (v.is_vector()) {
    os << '[';
    const auto& vec = v.as_vector();
    for (size_t i = 0; i < vec.size(); ++i) {
      if (i) os << ',';
      os << util::format_double(vec[i], digits);
    }
    os << ']';
  } else {
    os << '[';
    const auto& m = v.as_matrix();
    for (size_t r = 0; r < m.size(); ++r) {
      if (r) os << ',';
      os << '[';
      for (size_t c = 0; c < m[r].size(); ++c) {
        if (c) os << ',';
        os << util::format_double(m[r][c], digits);
      }
      os << ']';
    }
    os << ']';
  }
}

}  // namespace

void write_jsonl(const Trace& trace, std::ostream& os, int digits) {
  for (const auto& row : trace.rows) {
    os << "{\"t\":" << util::format_double(row.time, digits);
    for (size_t c = 0; c < trace.columns.size(); ++c) {
      os << ",\"";
      for (char ch : trace.columns[c]) {
        if (ch == '"' || ch == '\\') os << '\\';
        os << ch;
      }
      os << "\":";
      json_value(os, row.values.at(c), digits);
    }
    os << "}\n";
  }
}

}  // namespace hybridlang::sim
