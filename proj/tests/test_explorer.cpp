#include <doctest.h>

#include <filesystem>

#include "corpus.hpp"
#include "leib3/explorer.hpp"
#include "leib3/io.hpp"

using namespace leib3;
using leib3::testing::build_corpus;

TEST_SUITE("explorer") {

TEST_CASE("brute force oracle on hand-checked inputs") {
  const FieldSpec Q = FieldSpec::rationals();
  CHECK(brute_force_validate(abelian(3, Q)));
  CHECK(brute_force_validate(a2(Q)));
  CHECK(brute_force_validate(filippov4(Q)));

  StructureTensor t(Q, 2);
  t.set(0, 0, 0, unit_vec(Q, 2, 0));
  CHECK(!brute_force_validate(Algebra3(std::move(t))));
}

TEST_CASE("oracle agrees with validate across the corpus") {
  for (const auto& entry : build_corpus()) {
    if (entry.algebra.dim() > 5) continue;  // nested evaluation is O(n^5 n^3)
    INFO(entry.name);
    CHECK(brute_force_validate(entry.algebra) == entry.algebra.validate().empty());
  }
}

TEST_CASE("candidate materialization is lexicographic") {
  const FieldSpec f3 = FieldSpec::prime(3);
  CHECK(enumeration_candidate(f3, 1, 0).tensor().entry_count() == 0);
  // index 1: least significant digit = coefficient (0,0,0,0) -> [e0,e0,e0] = e0
  const Algebra3 a = enumeration_candidate(f3, 1, 1);
  REQUIRE(a.tensor().find(0, 0, 0) != nullptr);
  CHECK((*a.tensor().find(0, 0, 0))[0].res() == 1);
  const Algebra3 b = enumeration_candidate(f3, 1, 2);
  CHECK((*b.tensor().find(0, 0, 0))[0].res() == 2);
}

TEST_CASE("dim-1 exhaustive counts match the hand computation") {
  // defect of [e,e,e] = c e against the identity is -2 c^2 e, so valid
  // candidates are exactly those with 2 c^2 = 0
  EnumerateOptions opts;
  opts.check_oracle = true;

  const EnumerationSummary f2 = enumerate_all(FieldSpec::prime(2), 1, opts);
  CHECK(f2.candidates == 2);
  CHECK(f2.valid_count == 2);  // 2 = 0 in F_2
  CHECK(f2.bound_violations == 0);

  const EnumerationSummary f3 = enumerate_all(FieldSpec::prime(3), 1, opts);
  CHECK(f3.candidates == 3);
  CHECK(f3.valid_count == 1);  // only c = 0

  const EnumerationSummary f5 = enumerate_all(FieldSpec::prime(5), 1, opts);
  CHECK(f5.candidates == 5);
  CHECK(f5.valid_count == 1);
}

TEST_CASE("budget refusal carries the exact count") {
  try {
    enumerate_all(FieldSpec::prime(3), 2, {});
    FAIL("expected BudgetExceededError");
  } catch (const BudgetExceededError& e) {
    CHECK(e.candidates == "43046721");  // 3^16
  }
  CHECK_THROWS_AS(enumerate_all(FieldSpec::rationals(), 1, {}), UsageError);
}

TEST_CASE("parallel and serial enumerations agree") {
  EnumerateOptions opts;
  const FieldSpec f2 = FieldSpec::prime(2);
  CHECK(enumerate_all(f2, 1, opts) == enumerate_all_serial(f2, 1, opts));
  // dim 2 over F_2 exercises the chunked parallel path (65536 candidates)
  const EnumerationSummary par = enumerate_all(f2, 2, opts);
  const EnumerationSummary ser = enumerate_all_serial(f2, 2, opts);
  CHECK(par == ser);
  CHECK(par.bound_violations == 0);
}

TEST_CASE("witness emission is deterministic") {
  namespace fs = std::filesystem;
  const fs::path base = fs::temp_directory_path() / "leib3_witness_test";
  fs::remove_all(base);

  auto run = [&](const fs::path& dir) {
    EnumerateOptions opts;
    opts.out_dir = dir;
    opts.max_witness_files = 4;
    return enumerate_all(FieldSpec::prime(3), 1, opts);
  };
  const EnumerationSummary first = run(base / "a");
  const EnumerationSummary second = run(base / "b");
  CHECK(first == second);
  CHECK(first.witness_files > 0);

  std::vector<fs::path> files_a, files_b;
  for (const auto& p : fs::directory_iterator(base / "a")) files_a.push_back(p.path());
  for (const auto& p : fs::directory_iterator(base / "b")) files_b.push_back(p.path());
  std::sort(files_a.begin(), files_a.end());
  std::sort(files_b.begin(), files_b.end());
  REQUIRE(files_a.size() == files_b.size());
  CHECK(files_a.size() == first.witness_files);
  for (std::size_t i = 0; i < files_a.size(); ++i) {
    CHECK(files_a[i].filename() == files_b[i].filename());
    CHECK(read_text_file(files_a[i]) == read_text_file(files_b[i]));
    // every witness file parses back to a valid algebra
    CHECK(read_algebra_file(files_a[i]).validate().empty());
  }
  fs::remove_all(base);
}

}  // TEST_SUITE
