#include "leib3/io.hpp"

#include <fstream>
#include <sstream>

namespace leib3 {

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& why) {
  throw ParseError(where + ": " + why);
}

bool is_count(const Json& v) {
  return v.is_number_unsigned() ||
         (v.is_number_integer() && v.get<std::int64_t>() >= 0);
}

std::uint64_t get_count(const Json& j, const char* key, const std::string& where) {
  if (!j.contains(key)) fail(where, std::string("missing \"") + key + "\"");
  const Json& v = j.at(key);
  if (!is_count(v)) fail(where + "." + key, "expected a non-negative integer");
  return v.get<std::uint64_t>();
}

}  // namespace

Json field_to_json(const FieldSpec& f) {
  if (f.is_prime_field()) return Json{{"Fp", f.p}};
  return Json("Q");
}

FieldSpec field_from_json(const Json& j) {
  if (j.is_string()) {
    if (j.get<std::string>() == "Q") return FieldSpec::rationals();
    fail("field", "expected \"Q\" or {\"Fp\": p}, got \"" + j.get<std::string>() + "\"");
  }
  if (j.is_object() && j.contains("Fp") && is_count(j.at("Fp"))) {
    try {
      return FieldSpec::prime(j.at("Fp").get<std::uint32_t>());
    } catch (const UsageError& e) {
      fail("field.Fp", e.what());
    }
  }
  fail("field", "expected \"Q\" or {\"Fp\": p}");
}

Json vec_to_json(const Vec& v) {
  Json out = Json::array();
  for (const Scalar& s : v) out.push_back(s.str());
  return out;
}

Vec vec_from_json(const FieldSpec& f, std::size_t n, const Json& j,
                  const std::string& where) {
  if (!j.is_array()) fail(where, "expected an array of scalar strings");
  if (j.size() != n)
    fail(where, "expected length " + std::to_string(n) + ", got " +
                    std::to_string(j.size()));
  Vec out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Json& cell = j.at(i);
    if (!cell.is_string())
      fail(where + "[" + std::to_string(i) + "]", "expected a scalar string");
    try {
      out.push_back(Scalar::parse(f, cell.get<std::string>()));
    } catch (const ParseError& e) {
      fail(where + "[" + std::to_string(i) + "]", e.what());
    }
  }
  return out;
}

Json algebra_to_json(const Algebra3& a) {
  Json brackets = Json::array();
  for (const auto& [key, coeffs] : a.tensor().entries()) {
    Json entry;
    entry["i"] = key[0];
    entry["j"] = key[1];
    entry["k"] = key[2];
    entry["value"] = vec_to_json(coeffs);
    brackets.push_back(std::move(entry));
  }
  Json out;
  out["field"] = field_to_json(a.field());
  out["dim"] = a.dim();
  out["brackets"] = std::move(brackets);
  return out;
}

// Everything here is dense in the ambient dimension; keep hostile files
// from demanding gigabyte tables.
constexpr std::uint64_t kMaxDim = 128;

Algebra3 algebra_from_json(const Json& j) {
  if (!j.is_object()) fail("algebra", "expected an object");
  if (!j.contains("field")) fail("algebra", "missing \"field\"");
  const FieldSpec f = field_from_json(j.at("field"));
  const std::uint64_t n = get_count(j, "dim", "algebra");
  if (n > kMaxDim) fail("algebra.dim", "dimension exceeds the supported maximum 128");
  if (!j.contains("brackets") || !j.at("brackets").is_array())
    fail("algebra.brackets", "expected an array");

  StructureTensor tensor(f, n);
  std::size_t pos = 0;
  for (const Json& entry : j.at("brackets")) {
    const std::string where = "algebra.brackets[" + std::to_string(pos++) + "]";
    if (!entry.is_object()) fail(where, "expected an object");
    const std::uint64_t i = get_count(entry, "i", where);
    const std::uint64_t jj = get_count(entry, "j", where);
    const std::uint64_t k = get_count(entry, "k", where);
    if (i >= n || jj >= n || k >= n)
      fail(where, "index out of range for dim " + std::to_string(n));
    if (!entry.contains("value")) fail(where, "missing \"value\"");
    if (tensor.find(i, jj, k) != nullptr)
      fail(where, "duplicate triple (" + std::to_string(i) + "," +
                      std::to_string(jj) + "," + std::to_string(k) + ")");
    // all-zero values are legal input; the tensor drops them (canonical form)
    tensor.set(i, jj, k, vec_from_json(f, n, entry.at("value"), where + ".value"));
  }
  return Algebra3(std::move(tensor));
}

Json subspace_to_json(const Subspace& s) {
  Json basis = Json::array();
  for (std::size_t r = 0; r < s.dim(); ++r) basis.push_back(vec_to_json(s.basis().row(r)));
  Json out;
  out["ambient_dim"] = s.ambient_dim();
  out["basis"] = std::move(basis);
  return out;
}

Subspace subspace_from_json(const FieldSpec& f, const Json& j) {
  if (!j.is_object()) fail("subspace", "expected an object");
  const std::uint64_t n = get_count(j, "ambient_dim", "subspace");
  if (n > kMaxDim) fail("subspace.ambient_dim", "dimension exceeds the supported maximum 128");
  if (!j.contains("basis") || !j.at("basis").is_array())
    fail("subspace.basis", "expected an array of vectors");
  std::vector<Vec> rows;
  std::size_t pos = 0;
  for (const Json& row : j.at("basis"))
    rows.push_back(vec_from_json(f, n, row, "subspace.basis[" + std::to_string(pos++) + "]"));
  return Subspace::span_of(f, n, rows);
}

Json matrix_to_json(const Matrix& m) {
  Json entries = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) entries.push_back(vec_to_json(m.row(r)));
  Json out;
  out["rows"] = m.rows();
  out["cols"] = m.cols();
  out["entries"] = std::move(entries);
  return out;
}

Json report_to_json(const BoundReport& rep) {
  Json out;
  out["d"] = rep.d;
  out["r"] = rep.r;
  out["d0"] = rep.d0;
  out["dim_derived"] = rep.dim_derived;
  out["bound_thm"] = rep.bound_thm;
  out["bound_cor1"] = rep.bound_cor1;
  out["lie3"] = rep.lie3;
  if (rep.bound_cor2) out["bound_cor2"] = *rep.bound_cor2;
  out["holds_thm"] = rep.holds_thm;
  out["holds_cor1"] = rep.holds_cor1;
  if (rep.holds_cor2) out["holds_cor2"] = *rep.holds_cor2;
  return out;
}

Json summary_to_json(const EnumerationSummary& s) {
  Json out;
  out["field"] = field_to_json(s.field);
  out["dim"] = s.dim;
  out["candidates"] = s.candidates;
  out["valid_count"] = s.valid_count;
  out["bound_violations"] = s.bound_violations;
  out["min_gap_thm"] = s.min_gap_thm;
  out["min_gap_cor1"] = s.min_gap_cor1;
  out["witness_files"] = s.witness_files;
  return out;
}

Json violations_to_json(const std::vector<Violation>& violations, bool valid) {
  Json list = Json::array();
  for (const Violation& v : violations) {
    Json entry;
    entry["quintuple"] = v.quintuple;
    entry["defect"] = vec_to_json(v.defect);
    list.push_back(std::move(entry));
  }
  Json out;
  out["valid"] = valid;
  out["violations"] = std::move(list);
  return out;
}

std::string canonical_dump(const Json& j) { return j.dump(2) + "\n"; }

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_text_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot write " + path.string());
  out << content;
}

namespace {

Json parse_json_file(const std::filesystem::path& path) {
  const std::string text = read_text_file(path);
  Json j = Json::parse(text, nullptr, false);
  if (j.is_discarded()) throw ParseError(path.string() + ": malformed JSON");
  return j;
}

}  // namespace

Algebra3 read_algebra_file(const std::filesystem::path& path) {
  try {
    return algebra_from_json(parse_json_file(path));
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

void write_algebra_file(const std::filesystem::path& path, const Algebra3& a) {
  write_text_file(path, canonical_dump(algebra_to_json(a)));
}

Subspace read_subspace_file(const std::filesystem::path& path, const FieldSpec& f) {
  try {
    return subspace_from_json(f, parse_json_file(path));
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

void write_subspace_file(const std::filesystem::path& path, const Subspace& s) {
  write_text_file(path, canonical_dump(subspace_to_json(s)));
}

}  // namespace leib3
