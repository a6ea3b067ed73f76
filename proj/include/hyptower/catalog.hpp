#pragma once

#include <functional>
#include <string>
#include <vector>

#include "hyptower/report.hpp"
#include "hyptower/towers.hpp"

namespace hyptower {

// A named, self-contained verification: each entry rebuilds its candidate
// from scratch, runs the relevant verifier and reports against a pinned
// expected verdict.
struct CatalogEntry {
  std::string name;
  std::string description;
  std::string expected_verdict;
  std::function<VerificationReport(const VerifyOptions&)> run;
};

const std::vector<CatalogEntry>& catalog_entries();  // sorted by name

std::vector<std::string> list_entries();

struct EntryOutcome {
  std::string name;
  std::string expected_verdict;
  VerificationReport report;
  bool as_expected = false;  // report ok and verdict matches
};

EntryOutcome run_entry(const std::string& name, const VerifyOptions& opts = {});
std::vector<EntryOutcome> run_all(int jobs = 1, const VerifyOptions& opts = {});

// The floor candidates behind some entries, reused by tests.
FloorCandidate moebius_floor_candidate();
FloorCandidate klein_floor_candidate();
FloorCandidate orientable_template_candidate(int genus);        // genus >= 2
FloorCandidate nonorientable_template_candidate(int crosscaps); // naive, any q >= 3
FloorCandidate nonorientable_companion_candidate();             // q = 4 resolution
FloorCandidate genus2_over_torus_candidate();
FloorCandidate h1_floor_candidate();
FloorCandidate h2_floor_candidate();

}  // namespace hyptower
