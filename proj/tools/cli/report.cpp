#include "cli/report.hpp"

#include <cstdint>
#include <cstdio>
#include <sstream>

namespace eqloc::cli {

std::string fnv1a64(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string dataset_digest(const Dataset& d) { return fnv1a64(dataset_to_json(d).dump()); }

Json rational_json(const Rational& q) { return to_string(q); }

Json vector_json(const std::vector<Rational>& v) {
  Json out = Json::array();
  for (const auto& q : v) out.push_back(rational_json(q));
  return out;
}

Json matrix_json(const std::vector<std::vector<Rational>>& m) {
  Json out = Json::array();
  for (const auto& row : m) out.push_back(vector_json(row));
  return out;
}

Json Report::to_json() const {
  Json j;
  j["command"] = command;
  j["input_digest"] = input_digest;
  j["parameters"] = parameters;
  j["results"] = results;
  j["warnings"] = warnings;
  j["pass"] = pass;
  return j;
}

namespace {

bool scalar_row(const Json& j) {
  if (!j.is_array()) return false;
  for (const auto& e : j)
    if (e.is_structured()) return false;
  return true;
}

std::string inline_value(const Json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (scalar_row(j)) {
    std::string out = "[";
    for (std::size_t i = 0; i < j.size(); ++i) out += (i ? ", " : "") + inline_value(j[i]);
    return out + "]";
  }
  return j.dump();
}

void render_text(std::ostringstream& out, const Json& j, int indent) {
  std::string pad(indent, ' ');
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) {
      if (v.is_structured() && !scalar_row(v)) {
        out << pad << k << ":\n";
        render_text(out, v, indent + 2);
      } else {
        out << pad << k << ": " << inline_value(v) << "\n";
      }
    }
  } else if (j.is_array()) {
    for (const auto& v : j) {
      if (v.is_object()) {
        out << pad << "-\n";
        render_text(out, v, indent + 2);
      } else {
        out << pad << "- " << inline_value(v) << "\n";
      }
    }
  } else {
    out << pad << inline_value(j) << "\n";
  }
}

}  // namespace

std::string Report::to_text() const {
  std::ostringstream out;
  out << command << ": " << (pass ? "PASS" : "FAIL") << "\n";
  out << "input digest: " << input_digest << "\n";
  if (!parameters.empty()) {
    out << "parameters:\n";
    render_text(out, parameters, 2);
  }
  out << "results:\n";
  render_text(out, results, 2);
  for (const auto& w : warnings) out << "warning: " << w << "\n";
  return out.str();
}

std::string render(const Report& r, const std::string& format) {
  if (format == "text") return r.to_text();
  return r.to_json().dump(2) + "\n";
}

}  // namespace eqloc::cli
