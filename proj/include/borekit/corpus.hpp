#pragma once

#include "borekit/equivalence.hpp"
#include "borekit/io.hpp"

#include <filesystem>
#include <string>
#include <vector>

namespace borekit {

struct CorpusEntry {
  std::string name;
  TheoremInput input;
  bool expectPass = true;
};

struct CorpusResult {
  std::string name;
  bool expectPass = true;
  int maxDim = 0, degreeBound = 0;
  OverBGChoice overBG = OverBGChoice::Hcolim;
  TheoremReport report;
  std::string error;  // set when the pipeline threw before producing a report
  double seconds = 0;

  bool passed() const { return error.empty() && report.passed(); }
  bool asExpected() const { return passed() == expectPass; }
};

struct CorpusSummary {
  std::vector<CorpusResult> results;  // manifest order
  double seconds = 0;

  /// Entries whose outcome differs from their expectation.
  std::vector<std::string> flagged() const;
  bool ok() const { return flagged().empty(); }
};

/// Worker count from BOREKIT_THREADS; unset or 0 means hardware concurrency.
unsigned threadsFromEnv();

/// Runs every entry through verifyTheorem on up to `threads` workers.
CorpusSummary corpusRun(const std::vector<CorpusEntry>& entries, unsigned threads);

/// Manifest: {entries: [{name, group, gspace, maxDim, degreeBound?, overBG?, expect?}]}
/// with group and gspace as references relative to the manifest. degreeBound defaults
/// to maxDim - 1.
std::vector<CorpusEntry> loadManifest(const std::filesystem::path& path);

/// Per-entry reports and the summary. Timings are left out so reruns are identical.
Json toJson(const CorpusSummary& s);

}  // namespace borekit
