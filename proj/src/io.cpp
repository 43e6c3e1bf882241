#include "swr/io.hpp"

#include <fstream>
#include <sstream>

namespace swr {

json scalar_to_json(const Scalar& s) {
  if (s.is_rational()) return rational_str(s.rational());
  const MultiPoly& p = s.poly();
  json vars = json::array();
  for (Var v : p.ring().vars()) vars.push_back(var_name(v));
  json terms = json::array();
  for (const auto& [exps, coeff] : p.to_records()) {
    json rec;
    rec["exponents"] = exps;
    rec["coefficient"] = rational_str(coeff);
    terms.push_back(std::move(rec));
  }
  return json{{"vars", vars}, {"terms", terms}};
}

Scalar scalar_from_json(const json& j) {
  if (j.is_string()) return Scalar(parse_rational(j.get<std::string>()));
  if (!j.is_object() || !j.contains("vars") || !j.contains("terms"))
    throw usage_error("malformed scalar JSON");
  Ring ring;
  for (const auto& name : j["vars"]) {
    auto v = var_from_name(name.get<std::string>());
    if (!v) throw usage_error("unknown indeterminate in scalar JSON");
    ring = ring.with(*v);
  }
  std::vector<std::pair<std::vector<unsigned>, Rational>> records;
  for (const auto& rec : j["terms"]) {
    records.emplace_back(rec["exponents"].get<std::vector<unsigned>>(),
                         parse_rational(rec["coefficient"].get<std::string>()));
  }
  return Scalar(MultiPoly::from_records(ring, records));
}

json triangle_to_json(const Triangle& tri) {
  const Params& p = tri.params();
  json params;
  params["a1"] = scalar_to_json(p.a1);
  params["a2"] = scalar_to_json(p.a2);
  params["b1"] = scalar_to_json(p.b1);
  params["b2"] = scalar_to_json(p.b2);
  params["lam"] = scalar_to_json(p.lam);
  json rows = json::array();
  for (int n = 0; n <= tri.max_row(); ++n) {
    json row = json::array();
    for (const auto& x : tri.row(n)) row.push_back(scalar_to_json(x));
    rows.push_back(std::move(row));
  }
  return json{{"schema", "swr.triangle.v1"},
              {"ring", p.all_rational() ? "rational" : "symbolic"},
              {"params", params},
              {"rows", rows}};
}

Triangle triangle_from_json(const json& j) {
  if (!j.is_object() || j.value("schema", "") != "swr.triangle.v1")
    throw usage_error("not a swr.triangle.v1 document");
  const json& jp = j.at("params");
  Params p{scalar_from_json(jp.at("a1")), scalar_from_json(jp.at("a2")),
           scalar_from_json(jp.at("b1")), scalar_from_json(jp.at("b2")),
           scalar_from_json(jp.at("lam"))};
  int max_row = static_cast<int>(j.at("rows").size()) - 1;
  Triangle tri = Triangle::build(p, max_row);
  // The rows are redundant given the parameters; verify they match rather
  // than trusting them blindly.
  for (int n = 0; n <= max_row; ++n) {
    const json& row = j.at("rows").at(n);
    if (static_cast<int>(row.size()) != n + 1)
      throw usage_error("triangle JSON row has wrong length");
    for (int k = 0; k <= n; ++k) {
      if (scalar_from_json(row.at(k)) != tri.at(n, k))
        throw usage_error("triangle JSON rows disagree with the recurrence");
    }
  }
  return tri;
}

std::string triangle_to_csv(const Triangle& tri) {
  std::ostringstream os;
  os << "n,k,value\n";
  for (int n = 0; n <= tri.max_row(); ++n)
    for (int k = 0; k <= n; ++k)
      os << n << "," << k << "," << tri.at(n, k).str() << "\n";
  return os.str();
}

json cf_to_json(const JacobiCF& cf) {
  json s = json::array(), r = json::array();
  for (const auto& x : cf.s) s.push_back(scalar_to_json(x));
  for (const auto& x : cf.r) r.push_back(scalar_to_json(x));
  return json{{"schema", "swr.cf.v1"}, {"s", s}, {"r", r}};
}

JacobiCF cf_from_json(const json& j) {
  if (!j.is_object() || j.value("schema", "") != "swr.cf.v1")
    throw usage_error("not a swr.cf.v1 document");
  JacobiCF cf;
  for (const auto& x : j.at("s")) cf.s.push_back(scalar_from_json(x));
  for (const auto& x : j.at("r")) cf.r.push_back(scalar_from_json(x));
  return cf;
}

json series_to_json(const std::vector<Scalar>& series) {
  json out = json::array();
  for (const auto& x : series) out.push_back(scalar_to_json(x));
  return out;
}

json minor_witness_to_json(const MinorWitness& w) {
  return json{{"rows", w.rows}, {"cols", w.cols},
              {"minor", scalar_to_json(w.minor)}};
}

MinorWitness minor_witness_from_json(const json& j) {
  MinorWitness w;
  w.rows = j.at("rows").get<std::vector<int>>();
  w.cols = j.at("cols").get<std::vector<int>>();
  w.minor = scalar_from_json(j.at("minor"));
  return w;
}

json root_boxes_to_json(const std::vector<RootBox>& boxes) {
  json out = json::array();
  for (const auto& b : boxes) {
    json rec{{"lo", rational_str(b.lo)}, {"hi", rational_str(b.hi)}};
    if (b.exact) rec["exact"] = true;
    if (b.multiplicity != 1) rec["multiplicity"] = b.multiplicity;
    out.push_back(std::move(rec));
  }
  return out;
}

BFile parse_bfile(std::istream& in, const std::string& id) {
  BFile bf;
  bf.id = id;
  std::string line;
  long line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    size_t start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos) continue;
    if (line[start] == '#') continue;
    std::istringstream fields(line.substr(start));
    long index;
    std::string value;
    if (!(fields >> index >> value))
      throw usage_error("garbled b-file line " + std::to_string(line_no) +
                        ": '" + line + "'");
    std::string rest;
    if (fields >> rest)
      throw usage_error("trailing junk on b-file line " +
                        std::to_string(line_no));
    mpz_class v;
    if (v.set_str(value, 10) != 0)
      throw usage_error("bad integer on b-file line " +
                        std::to_string(line_no) + ": '" + value + "'");
    if (!bf.records.empty() && index <= bf.records.back().first)
      throw usage_error("b-file indices not strictly increasing at line " +
                        std::to_string(line_no));
    bf.records.emplace_back(index, std::move(v));
  }
  return bf;
}

BFile load_bfile(const std::string& path, const std::string& id) {
  std::ifstream in(path);
  if (!in) throw usage_error("cannot open b-file: " + path);
  return parse_bfile(in, id);
}

}  // namespace swr
