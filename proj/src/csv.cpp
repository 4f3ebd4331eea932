#include "charwave/csv.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "charwave/errors.hpp"

namespace charwave {

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

namespace {

void append_row(std::string& out, std::initializer_list<double> vals) {
  bool first = true;
  for (double v : vals) {
    if (!first) out.push_back(',');
    out += format_double(v);
    first = false;
  }
  out.push_back('\n');
}

}  // namespace

std::string samples_csv(const PhysicalSamples& samples) {
  std::string out = std::string("t,x,u,") + samples.a_name + "," + samples.b_name + "\n";
  for (const auto& r : samples.rows) append_row(out, {r.t, r.x, r.u, r.a, r.b});
  return out;
}

std::string state1_csv(const Grid1& grid, const State1& state) {
  std::string out = "T,Y,u,v,xi\n";
  const std::size_t n = grid.T.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (grid.inside(i, j))
        append_row(out, {grid.T[i], grid.Y[j], state.u.at(i, j), state.v.at(i, j),
                         state.xi.at(i, j)});
  return out;
}

std::string state2_csv(const Grid2& grid, const State2& state) {
  std::string out = "X,Y,u,w,v,p,q\n";
  const std::size_t n = grid.X.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (grid.inside(i, j))
        append_row(out, {grid.X[i], grid.Y[j], state.u.at(i, j), state.w.at(i, j),
                         state.v.at(i, j), state.p.at(i, j), state.q.at(i, j)});
  return out;
}

std::string history1_csv(const ConvergenceHistory& history) {
  std::string out = "iter,weighted,plain\n";
  for (const auto& r : history.rows) {
    out += std::to_string(r.iter);
    out.push_back(',');
    out += format_double(r.weighted);
    out.push_back(',');
    out += format_double(r.plain);
    out.push_back('\n');
  }
  return out;
}

std::string history2_csv(const ConvergenceHistory2& history) {
  std::string out = "iter,weighted,plain,p_min,p_max,q_min,q_max\n";
  for (const auto& r : history.rows) {
    out += std::to_string(r.iter);
    for (double v : {r.weighted, r.plain, r.p_min, r.p_max, r.q_min, r.q_max}) {
      out.push_back(',');
      out += format_double(v);
    }
    out.push_back('\n');
  }
  return out;
}

namespace {

void json_escape(std::string& out, const std::string& s) {
  out.push_back('"');
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof(buf), "\\u%04x", c);
          out += buf;
        } else {
          out.push_back(c);
        }
    }
  }
  out.push_back('"');
}

void dump_value(std::string& out, const nlohmann::ordered_json& v, int indent, int depth) {
  const std::string pad(static_cast<std::size_t>(indent) * (depth + 1), ' ');
  const std::string close_pad(static_cast<std::size_t>(indent) * depth, ' ');
  switch (v.type()) {
    case nlohmann::ordered_json::value_t::object: {
      if (v.empty()) {
        out += "{}";
        return;
      }
      out += "{\n";
      bool first = true;
      for (auto it = v.begin(); it != v.end(); ++it) {
        if (!first) out += ",\n";
        first = false;
        out += pad;
        json_escape(out, it.key());
        out += ": ";
        dump_value(out, it.value(), indent, depth + 1);
      }
      out += "\n" + close_pad + "}";
      return;
    }
    case nlohmann::ordered_json::value_t::array: {
      if (v.empty()) {
        out += "[]";
        return;
      }
      out += "[\n";
      bool first = true;
      for (const auto& e : v) {
        if (!first) out += ",\n";
        first = false;
        out += pad;
        dump_value(out, e, indent, depth + 1);
      }
      out += "\n" + close_pad + "]";
      return;
    }
    case nlohmann::ordered_json::value_t::string:
      json_escape(out, v.get_ref<const std::string&>());
      return;
    case nlohmann::ordered_json::value_t::boolean:
      out += v.get<bool>() ? "true" : "false";
      return;
    case nlohmann::ordered_json::value_t::number_integer:
      out += std::to_string(v.get<long long>());
      return;
    case nlohmann::ordered_json::value_t::number_unsigned:
      out += std::to_string(v.get<unsigned long long>());
      return;
    case nlohmann::ordered_json::value_t::number_float: {
      const double d = v.get<double>();
      if (std::isfinite(d)) {
        out += format_double(d);
      } else {
        out += "null";  // JSON has no inf/nan; emitted only by diverged runs
      }
      return;
    }
    default:
      out += "null";
      return;
  }
}

}  // namespace

std::string dump_json(const nlohmann::ordered_json& doc, int indent) {
  std::string out;
  dump_value(out, doc, indent, 0);
  out.push_back('\n');
  return out;
}

void write_text_file(const std::string& path, const std::string& content) {
  namespace fs = std::filesystem;
  std::error_code ec;
  const fs::path p(path);
  if (p.has_parent_path()) {
    fs::create_directories(p.parent_path(), ec);
    if (ec) throw IoError("cannot create directory " + p.parent_path().string() + ": " + ec.message());
  }
  std::ofstream f(p, std::ios::binary | std::ios::trunc);
  if (!f) throw IoError("cannot open " + path + " for writing");
  f.write(content.data(), static_cast<std::streamsize>(content.size()));
  if (!f) throw IoError("write failed for " + path);
}

}  // namespace charwave
