#include "borekit/corpus.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <thread>

namespace borekit {

std::vector<std::string> CorpusSummary::flagged() const {
  std::vector<std::string> out;
  for (const auto& r : results)
    if (!r.asExpected()) out.push_back(r.name);
  return out;
}

unsigned threadsFromEnv() {
  unsigned n = 0;
  if (const char* v = std::getenv("BOREKIT_THREADS")) {
    char* end = nullptr;
    const long parsed = std::strtol(v, &end, 10);
    if (end == v || *end != '\0' || parsed < 0) throw ParseError("BOREKIT_THREADS must be a nonnegative integer");
    n = static_cast<unsigned>(parsed);
  }
  return n ? n : std::max(1u, std::thread::hardware_concurrency());
}

CorpusSummary corpusRun(const std::vector<CorpusEntry>& entries, unsigned threads) {
  using Clock = std::chrono::steady_clock;
  const auto start = Clock::now();
  CorpusSummary summary;
  summary.results.resize(entries.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < entries.size(); i = next++) {
      const auto t0 = Clock::now();
      auto& out = summary.results[i];
      out.name = entries[i].name;
      out.expectPass = entries[i].expectPass;
      out.maxDim = entries[i].input.maxDim;
      out.degreeBound = entries[i].input.degreeBound;
      out.overBG = entries[i].input.overBG;
      try {
        out.report = verifyTheorem(entries[i].input);
      } catch (const std::exception& e) {
        out.error = e.what();
      }
      out.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
    }
  };
  const unsigned workers = std::clamp<unsigned>(threads, 1, std::max<std::size_t>(entries.size(), 1));
  {
    std::vector<std::jthread> pool;
    for (unsigned w = 1; w < workers; ++w) pool.emplace_back(work);
    work();
  }
  summary.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  return summary;
}

std::vector<CorpusEntry> loadManifest(const std::filesystem::path& path) {
  const Json manifest = readJson(path);
  if (manifest.contains("schema") && manifest.at("schema") != schemaTag("corpus"))
    throw ParseError("expected schema " + schemaTag("corpus"));
  const Loader loader = Loader::forFile(path);
  std::vector<CorpusEntry> entries;
  if (!manifest.contains("entries") || !manifest.at("entries").is_array()) throw ParseError("manifest needs an entries list");
  for (const auto& e : manifest.at("entries")) {
    try {
      CorpusEntry entry;
      entry.name = e.at("name").get<std::string>();
      const auto group = loader.group(e.at("group"));
      entry.input.space = loader.gspace(e.at("gspace"), group);
      entry.input.maxDim = e.at("maxDim").get<int>();
      entry.input.degreeBound = e.value("degreeBound", entry.input.maxDim - 1);
      entry.input.overBG = overBGChoiceFrom(e.value("overBG", std::string("hcolim")));
      const auto expect = e.value("expect", std::string("pass"));
      if (expect != "pass" && expect != "fail") throw ParseError("expect must be pass or fail");
      entry.expectPass = expect == "pass";
      entries.push_back(std::move(entry));
    } catch (const Json::exception& ex) {
      throw ParseError(std::string("manifest entry: ") + ex.what());
    }
  }
  return entries;
}

Json toJson(const CorpusSummary& s) {
  Json entries = Json::array();
  std::size_t passed = 0;
  for (const auto& r : s.results) {
    passed += r.passed();
    Json entry = {{"name", r.name},
                  {"expect", r.expectPass ? "pass" : "fail"},
                  {"maxDim", r.maxDim},
                  {"degreeBound", r.degreeBound},
                  {"overBG", toString(r.overBG)},
                  {"passed", r.passed()},
                  {"asExpected", r.asExpected()},
                  {"report", r.error.empty() ? toJson(r.report) : Json(nullptr)}};
    if (!r.error.empty()) entry["error"] = r.error;
    entries.push_back(std::move(entry));
  }
  return {{"schema", schemaTag("corpus-report")},
          {"entries", entries},
          {"summary", {{"total", s.results.size()}, {"passed", passed}, {"flagged", s.flagged()}, {"ok", s.ok()}}}};
}

}  // namespace borekit
