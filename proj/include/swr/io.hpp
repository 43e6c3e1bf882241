#pragma once

#include <json.hpp>

#include <iosfwd>
#include <string>
#include <vector>

#include "swr/jacobi.hpp"
#include "swr/positivity.hpp"
#include "swr/sturm.hpp"
#include "swr/triangle.hpp"

namespace swr {

using nlohmann::json;

/// Rationals serialize as "num/den" strings ("num" when den = 1);
/// polynomials as {"vars": [...], "terms": [{"exponents": [...],
/// "coefficient": "..."}]} with terms in canonical (leading-first) order.
json scalar_to_json(const Scalar& s);
Scalar scalar_from_json(const json& j);

/// {"schema":"swr.triangle.v1","ring":"rational"|"symbolic",
///  "params":{...},"rows":[[...],...]}
json triangle_to_json(const Triangle& tri);
Triangle triangle_from_json(const json& j);

/// CSV with header n,k,value.
std::string triangle_to_csv(const Triangle& tri);

/// {"schema":"swr.cf.v1","s":[...],"r":[...]}
json cf_to_json(const JacobiCF& cf);
JacobiCF cf_from_json(const json& j);

json series_to_json(const std::vector<Scalar>& series);

json minor_witness_to_json(const MinorWitness& w);
MinorWitness minor_witness_from_json(const json& j);

json root_boxes_to_json(const std::vector<RootBox>& boxes);

/// One OEIS b-file: "index value" records, '#' comments ignored, indices
/// strictly increasing.
struct BFile {
  std::string id;
  std::vector<std::pair<long, mpz_class>> records;
};

BFile parse_bfile(std::istream& in, const std::string& id);
BFile load_bfile(const std::string& path, const std::string& id);

}  // namespace swr
