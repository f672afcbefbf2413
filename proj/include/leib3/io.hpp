#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "leib3/bounds.hpp"
#include "leib3/explorer.hpp"
#include "leib3/structure.hpp"

namespace leib3 {

using Json = nlohmann::ordered_json;

// Scalars travel as strings so exact values survive JSON round trips.
Json field_to_json(const FieldSpec& f);               // "Q" | {"Fp": p}
FieldSpec field_from_json(const Json& j);
Json vec_to_json(const Vec& v);
Vec vec_from_json(const FieldSpec& f, std::size_t n, const Json& j, const std::string& where);

/// { "field": ..., "dim": n, "brackets": [ {"i","j","k","value"}, ... ] }
/// with triples in lexicographic order and zero values omitted; writers are
/// byte-stable, so write-read-write is an identity on files.
Json algebra_to_json(const Algebra3& a);
Algebra3 algebra_from_json(const Json& j);

/// { "ambient_dim": n, "basis": [[...], ...] } — basis rows in RREF.
Json subspace_to_json(const Subspace& s);
Subspace subspace_from_json(const FieldSpec& f, const Json& j);

/// { "rows": r, "cols": c, "entries": [[...], ...] }
Json matrix_to_json(const Matrix& m);

Json report_to_json(const BoundReport& rep);
Json summary_to_json(const EnumerationSummary& s);
Json violations_to_json(const std::vector<Violation>& violations, bool valid);

/// Canonical file bytes: two-space indent plus trailing newline.
std::string canonical_dump(const Json& j);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& content);

Algebra3 read_algebra_file(const std::filesystem::path& path);
void write_algebra_file(const std::filesystem::path& path, const Algebra3& a);
Subspace read_subspace_file(const std::filesystem::path& path, const FieldSpec& f);
void write_subspace_file(const std::filesystem::path& path, const Subspace& s);

}  // namespace leib3
