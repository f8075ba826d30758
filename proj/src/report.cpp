#include "seqfam/report.hpp"

#include <json.hpp>
#include <ostream>
#include <sstream>

#include "seqfam/errors.hpp"

namespace seqfam::report {

namespace {

using nlohmann::ordered_json;

template <class T>
std::string join(const std::vector<T>& v, char sep = ',') {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i > 0) out += sep;
    out += std::to_string(static_cast<unsigned long long>(v[i]));
  }
  return out;
}

ordered_json witness_json(const measures::Witness& w) {
  if (const auto* spec = std::get_if<measures::CorrelationSpec>(&w)) {
    ordered_json j;
    j["type"] = "correlation";
    j["I"] = spec->rows;
    j["D"] = spec->shifts;
    j["M"] = spec->window;
    if (!spec->pattern.empty()) {
      std::vector<unsigned> pattern(spec->pattern.begin(), spec->pattern.end());
      j["W"] = pattern;
    }
    if (!spec->bijections.empty()) j["phi"] = spec->bijections;
    return j;
  }
  if (const auto* pat = std::get_if<SpecificationPattern>(&w)) {
    ordered_json j;
    j["type"] = "specification";
    j["positions"] = pat->positions;
    j["pattern"] = std::vector<unsigned>(pat->symbols.begin(), pat->symbols.end());
    return j;
  }
  return nullptr;
}

ordered_json measure_json(const measures::MeasureResult& m) {
  ordered_json j;
  j["record"] = "measure";
  j["name"] = m.name;
  j["subject"] = m.subject;
  j["order"] = m.order;
  j["value"] = m.value_string();
  j["value_exact"] = m.value_exact;
  j["approx"] = m.approx;
  j["error_bound"] = m.error_bound;
  j["mode"] = std::string(measures::mode_name(m.mode));
  j["witness"] = witness_json(m.witness);
  return j;
}

ordered_json bound_json(const bounds::BoundReport& b) {
  ordered_json j;
  j["record"] = "bound";
  j["name"] = b.name;
  j["subject"] = b.subject;
  j["mode"] = std::string(measures::mode_name(b.mode));
  j["strength"] = std::string(bounds::strength_name(b.strength));
  j["direction"] = std::string(bounds::direction_name(b.direction));
  ordered_json params = ordered_json::object();
  for (const auto& [key, value] : b.params) params[key] = value;
  j["params"] = params;
  j["theoretical"] = b.theoretical;
  j["measured"] = b.measured;
  j["satisfied"] = b.satisfied;
  j["ratio"] = b.ratio ? ordered_json(*b.ratio) : ordered_json(nullptr);
  j["note"] = b.note;
  return j;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

void emit_json(const Report& r, std::ostream& out) {
  ordered_json j = ordered_json::array();
  for (const auto& m : r.measures) j.push_back(measure_json(m));
  for (const auto& b : r.bounds) j.push_back(bound_json(b));
  out << j.dump(2) << '\n';
}

void emit_csv(const Report& r, std::ostream& out) {
  out << "record,name,subject,order,mode,value,theoretical,satisfied,strength,detail\n";
  for (const auto& m : r.measures) {
    out << "measure," << m.name << ',' << m.subject << ',' << m.order << ',' << measures::mode_name(m.mode) << ','
        << m.value_string() << ",,,," << csv_field(witness_string(m.witness)) << '\n';
  }
  for (const auto& b : r.bounds) {
    std::string params;
    for (const auto& [key, value] : b.params) params += (params.empty() ? "" : " ") + key + "=" + value;
    out << "bound," << b.name << ',' << b.subject << ",," << measures::mode_name(b.mode) << ','
        << csv_field(b.measured) << ','
        << csv_field(b.theoretical) << ',' << (b.satisfied ? "true" : "false") << ','
        << bounds::strength_name(b.strength) << ',' << csv_field(params) << '\n';
  }
}

void emit_text(const Report& r, std::ostream& out) {
  if (r.family) {
    out << "family " << r.family->construction << ": p=" << r.family->p << " d=" << r.family->d
        << " k=" << r.family->k << " N=" << r.family->length << " F=" << r.family->size << '\n';
  }
  for (const auto& m : r.measures) {
    out << m.name;
    if (m.name != "fc") out << '_' << m.order;
    out << '(' << m.subject << ") = " << m.value_string();
    if (!m.value_exact) out << " (+-" << m.error_bound << ')';
    out << "  [" << measures::mode_name(m.mode) << "]  " << witness_string(m.witness) << '\n';
  }
  for (const auto& b : r.bounds) {
    out << (b.satisfied ? "ok    " : "FAIL  ") << b.name << '(' << b.subject << ") measured " << b.measured
        << (b.direction == bounds::Direction::upper   ? " <= "
            : b.direction == bounds::Direction::lower ? " >= "
                                                      : " == ")
        << b.theoretical << "  [" << bounds::strength_name(b.strength) << ']';
    if (!b.note.empty()) out << "  " << b.note;
    out << '\n';
  }
}

}  // namespace

Format parse_format(std::string_view name) {
  if (name == "json") return Format::json;
  if (name == "csv") return Format::csv;
  if (name == "text") return Format::text;
  throw ParameterError("unknown format '" + std::string(name) + "' (expected json, csv, text)");
}

FamilyInfo FamilyInfo::of(const Family& fam) {
  return {fam.construction(), fam.prime(), fam.degree(), fam.alphabet(), fam.length(), fam.size()};
}

std::string witness_string(const measures::Witness& witness) {
  if (const auto* spec = std::get_if<measures::CorrelationSpec>(&witness)) {
    std::string s = "I=" + join(spec->rows) + " D=" + join(spec->shifts) + " M=" + std::to_string(spec->window);
    if (!spec->pattern.empty()) s += " W=" + join(spec->pattern);
    if (!spec->bijections.empty()) {
      s += " phi=";
      for (std::size_t j = 0; j < spec->bijections.size(); ++j) s += (j ? "|" : "") + join(spec->bijections[j]);
    }
    return s;
  }
  if (const auto* pat = std::get_if<SpecificationPattern>(&witness)) {
    return "positions=" + join(pat->positions) + " pattern=" + join(pat->symbols);
  }
  return "-";
}

std::vector<measures::MeasureResult> read_measures(std::string_view json_text) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw ParameterError(std::string("report: invalid JSON: ") + e.what());
  }
  if (!doc.is_array()) throw ParameterError("report: expected a JSON array of records");
  std::vector<measures::MeasureResult> out;
  try {
    for (const auto& j : doc) {
      if (j.value("record", "") != "measure") continue;
      measures::MeasureResult m;
      m.name = j.at("name").get<std::string>();
      m.subject = j.at("subject").get<std::string>();
      m.order = j.at("order").get<unsigned>();
      m.value_exact = j.at("value_exact").get<bool>();
      if (m.value_exact) m.value = Rational::parse(j.at("value").get<std::string>());
      m.approx = j.at("approx").get<double>();
      m.error_bound = j.at("error_bound").get<double>();
      const auto mode = j.at("mode").get<std::string>();
      if (mode != "exact" && mode != "sampled-lower-bound") throw ParameterError("report: unknown mode '" + mode + "'");
      m.mode = mode == "exact" ? measures::Mode::exact : measures::Mode::sampled;
      const auto& w = j.at("witness");
      if (w.is_object() && w.at("type") == "correlation") {
        measures::CorrelationSpec spec;
        spec.rows = w.at("I").get<std::vector<std::size_t>>();
        spec.shifts = w.at("D").get<std::vector<std::size_t>>();
        spec.window = w.at("M").get<std::size_t>();
        if (w.contains("W")) {
          for (auto s : w.at("W").get<std::vector<unsigned>>()) spec.pattern.push_back(static_cast<Symbol>(s));
        }
        if (w.contains("phi")) spec.bijections = w.at("phi").get<std::vector<std::vector<unsigned>>>();
        m.witness = std::move(spec);
      } else if (w.is_object() && w.at("type") == "specification") {
        SpecificationPattern pat;
        pat.positions = w.at("positions").get<std::vector<std::size_t>>();
        for (auto s : w.at("pattern").get<std::vector<unsigned>>()) pat.symbols.push_back(static_cast<Symbol>(s));
        m.witness = std::move(pat);
      }
      out.push_back(std::move(m));
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParameterError(std::string("report: malformed measure record: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw ParameterError(std::string("report: malformed value: ") + e.what());
  }
  return out;
}

void emit_report(const Report& report, Format format, std::ostream& out) {
  if (report.measures.empty() && report.bounds.empty()) throw ParameterError("report: nothing to emit");
  switch (format) {
    case Format::json:
      emit_json(report, out);
      break;
    case Format::csv:
      emit_csv(report, out);
      break;
    case Format::text:
      emit_text(report, out);
      break;
  }
}

std::string render(const Report& report, Format format) {
  std::ostringstream out;
  emit_report(report, format, out);
  return out.str();
}

}  // namespace seqfam::report
