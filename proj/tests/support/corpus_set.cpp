#include "corpus_set.hpp"

#include <algorithm>
#include <filesystem>

#include "pmsat/corpus.hpp"
#include "pmsat/io.hpp"
#include "pmsat/reduce.hpp"

namespace testing_corpus {

std::vector<std::pair<std::string, std::string>> fixture_files() {
  std::vector<std::pair<std::string, std::string>> out;
  for (const auto& entry : std::filesystem::directory_iterator(PMSAT_FIXTURE_DIR)) {
    if (entry.path().extension() == ".cnf") {
      out.push_back({entry.path().filename().string(), pmsat::read_file(entry.path().string())});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Item> base() {
  std::vector<Item> out;
  for (std::uint32_t k = 2; k <= 7; ++k) {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      out.push_back({"dahlhaus-" + std::to_string(k) + "-" + std::to_string(seed), pmsat::gen_dahlhaus({seed, k})});
    }
  }
  for (std::uint32_t k = 2; k <= 10; ++k) {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      out.push_back({"monotone-" + std::to_string(k) + "-" + std::to_string(seed),
                     pmsat::gen_planar_monotone({seed, k})});
    }
  }
  for (std::size_t i = 0; i < pmsat::kratochvil_fixture_count(); ++i) {
    auto f = pmsat::gen_kratochvil_fixture(i);
    out.push_back({"kratochvil-" + f.name, f.instance});
  }
  for (const auto& [name, text] : fixture_files()) out.push_back({name, pmsat::parse_dimacs(text)});
  return out;
}

std::vector<Item> with_intermediates() {
  std::vector<Item> out = base();
  const std::size_t n = out.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (const char* rule : {"gold", "e3", "ring-t3"}) {
      try {
        auto r = pmsat::apply_rule(rule, out[i].instance);
        out.push_back({out[i].name + "/" + rule, std::move(r.instance)});
      } catch (const pmsat::PreconditionError&) {
      }
    }
  }
  // One more gold -> e3 step so multiset-e4 sees exactly-3 instances from
  // mixed sources.
  const std::size_t m = out.size();
  for (std::size_t i = n; i < m; ++i) {
    if (out[i].name.ends_with("/gold")) {
      try {
        auto r = pmsat::apply_rule("e3", out[i].instance);
        out.push_back({out[i].name + "/e3", std::move(r.instance)});
      } catch (const pmsat::PreconditionError&) {
      }
    }
  }
  return out;
}

}  // namespace testing_corpus
