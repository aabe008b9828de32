#include "polycomp/io.hpp"

#include <fstream>
#include <sstream>

namespace polycomp::io {

json parse_document(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("JSON parse error: ") + e.what());
  }
}

json load_document(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_document(ss.str());
}

json field_to_json(const Field& f) {
  if (f.is_rational()) return "Q";
  return json{{"GF", f.modulus()}};
}

Field field_from_json(const json& j) {
  if (j.is_string()) {
    if (j.get<std::string>() == "Q") return Field::rationals();
    throw ParseError("unknown field descriptor '" + j.get<std::string>() + "'");
  }
  if (j.is_object() && j.contains("GF")) return Field::gf(j.at("GF").get<std::uint32_t>());
  throw ParseError("field descriptor must be \"Q\" or {\"GF\": p}");
}

json poly_to_json(const Poly& p) {
  json arr = json::array();
  for (const auto& c : p.coeffs()) arr.push_back(c.to_string());
  return arr;
}

Poly poly_from_json(const json& j, const Field& f) {
  if (!j.is_array()) throw ParseError("polynomial must be an array of coefficient strings");
  std::vector<FieldElem> cs;
  cs.reserve(j.size());
  for (const auto& c : j) {
    if (c.is_string())
      cs.push_back(FieldElem::parse(f, c.get<std::string>()));
    else if (c.is_number_integer())
      cs.push_back(FieldElem::from_int(f, c.get<long long>()));
    else
      throw ParseError("polynomial coefficients must be strings or integers");
  }
  return Poly::from_coeffs(f, std::move(cs));
}

json matrix_to_json(const RatMatrix& m) {
  json entries = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.cols(); ++j) {
      const RatFunc& e = m.at(i, j);
      row.push_back(json{{"num", poly_to_json(e.num())}, {"den", poly_to_json(e.den())}});
    }
    entries.push_back(std::move(row));
  }
  return json{{"field", field_to_json(m.field())},
              {"rows", m.rows()},
              {"cols", m.cols()},
              {"entries", std::move(entries)}};
}

RatMatrix matrix_from_json(const json& j) {
  if (!j.is_object()) throw ParseError("matrix document must be an object");
  Field f = field_from_json(j.at("field"));
  int rows = j.at("rows").get<int>();
  int cols = j.at("cols").get<int>();
  const json& entries = j.at("entries");
  if (!entries.is_array() || static_cast<int>(entries.size()) != rows)
    throw ParseError("matrix entries must be an array of " + std::to_string(rows) + " rows");
  RatMatrix m(f, rows, cols);
  for (int i = 0; i < rows; ++i) {
    const json& row = entries[static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<int>(row.size()) != cols)
      throw ParseError("matrix row " + std::to_string(i) + " must have " +
                       std::to_string(cols) + " entries");
    for (int c = 0; c < cols; ++c) {
      const json& e = row[static_cast<std::size_t>(c)];
      if (e.is_array()) {  // bare coefficient list: a polynomial entry
        m.at(i, c) = RatFunc::from_poly(poly_from_json(e, f));
      } else if (e.is_object()) {
        Poly num = poly_from_json(e.at("num"), f);
        Poly den = e.contains("den") ? poly_from_json(e.at("den"), f) : Poly::one(f);
        m.at(i, c) = RatFunc::make(std::move(num), std::move(den));
      } else {
        throw ParseError("matrix entry must be a coefficient array or {num, den}");
      }
    }
  }
  return m;
}

namespace {

json polys_to_json(const std::vector<Poly>& v) {
  json arr = json::array();
  for (const Poly& p : v) arr.push_back(poly_to_json(p));
  return arr;
}

std::vector<Poly> polys_from_json(const json& j, const Field& f) {
  if (!j.is_array()) throw ParseError("expected an array of polynomials");
  std::vector<Poly> out;
  out.reserve(j.size());
  for (const auto& e : j) out.push_back(poly_from_json(e, f));
  return out;
}

}  // namespace

json target_to_json(const PrescribedData& t, const Field& f) {
  (void)f;
  json j{{"mode", to_string(t.mode)}, {"z", t.z}, {"x", t.x}};
  if (t.numerators) j["numerators"] = polys_to_json(*t.numerators);
  if (t.denominators) j["denominators"] = polys_to_json(*t.denominators);
  if (t.orders) j["orders"] = *t.orders;
  if (t.first_order) j["first_order"] = *t.first_order;
  if (t.col_indices) j["col_indices"] = *t.col_indices;
  if (t.row_indices) j["row_indices"] = *t.row_indices;
  return j;
}

PrescribedData target_from_json(const json& j, const Field& f) {
  if (!j.is_object()) throw ParseError("target document must be an object");
  PrescribedData t;
  auto mode = mode_from_string(j.at("mode").get<std::string>());
  if (!mode) throw ParseError("unknown mode '" + j.at("mode").get<std::string>() + "'");
  t.mode = *mode;
  t.z = j.at("z").get<int>();
  t.x = j.at("x").get<int>();
  if (j.contains("numerators")) t.numerators = polys_from_json(j.at("numerators"), f);
  if (j.contains("denominators")) t.denominators = polys_from_json(j.at("denominators"), f);
  if (j.contains("orders")) t.orders = j.at("orders").get<std::vector<int>>();
  if (j.contains("first_order")) t.first_order = j.at("first_order").get<int>();
  if (j.contains("col_indices")) t.col_indices = j.at("col_indices").get<std::vector<int>>();
  if (j.contains("row_indices")) t.row_indices = j.at("row_indices").get<std::vector<int>>();
  return t;
}

json structure_to_json(const StructuralData& d) {
  json j{{"schema", "polycomp.structure/1"},
         {"field", field_to_json(d.field)},
         {"rows", d.rows},
         {"cols", d.cols},
         {"rank", d.rank},
         {"eta", polys_to_json(d.eta)},
         {"phi", polys_to_json(d.phi)},
         {"orders", d.orders},
         {"col_indices", d.col_indices},
         {"row_indices", d.row_indices}};
  if (d.is_polynomial()) {
    if (d.rank > 0)
      j["degree"] = -d.orders.front();
    else
      j["degree"] = nullptr;  // zero matrix: minus-infinity marker
  } else {
    j["degree"] = nullptr;
  }
  return j;
}

StructuralData structure_from_json(const json& j) {
  StructuralData d;
  d.field = field_from_json(j.at("field"));
  d.rows = j.at("rows").get<int>();
  d.cols = j.at("cols").get<int>();
  d.rank = j.at("rank").get<int>();
  d.eta = polys_from_json(j.at("eta"), d.field);
  d.phi = polys_from_json(j.at("phi"), d.field);
  d.orders = j.at("orders").get<std::vector<int>>();
  d.col_indices = j.at("col_indices").get<std::vector<int>>();
  d.row_indices = j.at("row_indices").get<std::vector<int>>();
  d.validate();
  return d;
}

namespace {

std::string ints_text(const std::vector<int>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += std::to_string(v[i]);
  }
  return s + ")";
}

}  // namespace

std::string structure_to_text(const StructuralData& d) {
  std::ostringstream out;
  out << "field: " << d.field.to_string() << "\n";
  out << "size: " << d.rows << "x" << d.cols << "\n";
  out << "rank: " << d.rank << "\n";
  out << "eta:";
  for (const Poly& p : d.eta) out << " " << p.to_display();
  out << "\nphi:";
  for (const Poly& p : d.phi) out << " " << p.to_display();
  out << "\norders at infinity: " << ints_text(d.orders) << "\n";
  out << "column minimal indices: " << ints_text(d.col_indices) << "\n";
  out << "row minimal indices: " << ints_text(d.row_indices) << "\n";
  if (d.is_polynomial() && d.rank > 0)
    out << "degree: " << -d.orders.front() << "\n";
  else
    out << "degree: " << (d.is_polynomial() ? "-inf" : "n/a (rational)") << "\n";
  return out.str();
}

json verdict_to_json(const Verdict& v, Mode mode, Ring ring) {
  json conds = json::array();
  for (const Condition& c : v.trace)
    conds.push_back(json{{"id", c.id},
                         {"description", c.description},
                         {"holds", c.holds},
                         {"lhs", c.lhs},
                         {"rhs", c.rhs}});
  return json{{"schema", "polycomp.verdict/1"},
              {"status", to_string(v.status)},
              {"mode", to_string(mode)},
              {"ring", to_string(ring)},
              {"conditions", std::move(conds)}};
}

Verdict verdict_from_json(const json& j) {
  if (!j.is_object() || j.value("schema", "") != "polycomp.verdict/1")
    throw ParseError("not a polycomp.verdict/1 document");
  Verdict v;
  const std::string status = j.at("status").get<std::string>();
  if (status == "feasible")
    v.status = Feasibility::feasible;
  else if (status == "infeasible")
    v.status = Feasibility::infeasible;
  else if (status == "hypothesis-violated")
    v.status = Feasibility::hypothesis_violated;
  else
    throw ParseError("unknown verdict status '" + status + "'");
  for (const auto& c : j.at("conditions"))
    v.trace.push_back({c.at("id").get<std::string>(), c.at("description").get<std::string>(),
                       c.at("holds").get<bool>(), c.at("lhs").get<std::string>(),
                       c.at("rhs").get<std::string>()});
  return v;
}

std::string verdict_to_text(const Verdict& v, Mode mode, Ring ring, bool explain) {
  std::ostringstream out;
  out << to_string(v.status) << " (mode " << to_string(mode) << ", ring " << to_string(ring)
      << ")\n";
  if (explain) {
    for (const Condition& c : v.trace) {
      out << "  [" << (c.holds ? "ok" : "FAIL") << "] " << c.id << ": " << c.description;
      if (!c.lhs.empty() || !c.rhs.empty()) {
        out << "  |  " << c.lhs;
        if (!c.rhs.empty()) out << " vs " << c.rhs;
      }
      out << "\n";
    }
  } else {
    for (const Condition& c : v.trace)
      if (!c.holds)
        out << "  failed: " << c.id << " (" << c.description << ")\n";
  }
  return out.str();
}

json report_to_json(const OracleReport& r) {
  json dis = json::array();
  for (const auto& d : r.disagreements)
    dis.push_back(json{{"target", d.target},
                       {"predicate_feasible", d.predicate_feasible},
                       {"ground_truth_feasible", d.ground_truth_feasible}});
  return json{{"schema", "polycomp.oracle-report/1"},
              {"kind", r.kind},
              {"mode", to_string(r.mode)},
              {"targets_checked", r.targets_checked},
              {"feasible_targets", r.feasible_targets},
              {"exhaustive", r.exhaustive},
              {"disagreements", std::move(dis)}};
}

std::string report_to_text(const OracleReport& r) {
  std::ostringstream out;
  out << r.kind << " mode=" << to_string(r.mode)
      << (r.exhaustive ? " exhaustive" : " sampled") << " targets=" << r.targets_checked
      << " feasible=" << r.feasible_targets << " disagreements=" << r.disagreements.size()
      << "\n";
  for (const auto& d : r.disagreements)
    out << "  DISAGREE " << d.target << " predicate=" << (d.predicate_feasible ? "yes" : "no")
        << " ground-truth=" << (d.ground_truth_feasible ? "yes" : "no") << "\n";
  return out.str();
}

}  // namespace polycomp::io
