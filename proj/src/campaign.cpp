#include <map>

#include "wvc/harness.hpp"
#include "wvc/io.hpp"

namespace wvc {

GenSpec tuned_spec(std::string_view check) {
  GenSpec spec;
  spec.mode = GenMode::grow;
  spec.require_prime = true;
  spec.max_weight = 3;
  spec.max_attempts = 200;
  if (check == "long-odd-hole-triangle-free") {
    spec.filter = {Pattern::house(), Pattern::co_dart()};
    spec.seed_structure = SeedStructure::hole;
    spec.hole_min = 7;
    spec.hole_max = 9;
    spec.min_n = 8;
    spec.n = 12;
    spec.p = 0.3;
  } else if (check == "p5dart-c5-small-or-triad-free") {
    spec.filter = {Pattern::path(5), Pattern::dart()};
    spec.seed_structure = SeedStructure::hole;
    spec.hole_min = spec.hole_max = 5;
    spec.min_n = 8;
    spec.n = 22;
    spec.p = 0.6;
  } else if (check == "hammer-house-perfect-or-triangle-free") {
    spec.filter = {Pattern::hammer(), Pattern::house()};
    spec.min_n = 6;
    spec.n = 11;
    spec.p = 0.6;
  } else if (check == "house-bull-p5c5-free-or-triangle-free") {
    spec.filter = {Pattern::house(), Pattern::bull()};
    spec.min_n = 6;
    spec.n = 11;
    spec.p = 0.6;
  } else if (check == "forkbull-long-hole") {
    spec.filter = {Pattern::fork(), Pattern::bull()};
    spec.seed_structure = SeedStructure::hole;
    spec.hole_min = 6;
    spec.hole_max = 8;
    spec.min_n = 6;
    spec.n = 12;
    spec.p = 0.5;
  } else if (check == "forkbull-p5-class") {
    spec.filter = {Pattern::fork(), Pattern::bull()};
    spec.seed_structure = SeedStructure::p5;
    spec.min_n = 6;
    spec.n = 12;
    spec.p = 0.7;
  } else if (check == "bull-hole-neighborhood") {
    spec.filter = {Pattern::bull()};
    spec.seed_structure = SeedStructure::hole;
    spec.hole_min = 6;
    spec.hole_max = 8;
    spec.min_n = 7;
    spec.n = 12;
    spec.p = 0.4;
    spec.require_prime = false;
  } else if (check.starts_with("c5-")) {
    spec.filter = {Pattern::path(5), Pattern::dart()};
    spec.seed_structure = SeedStructure::hole;
    spec.hole_min = spec.hole_max = 5;
    spec.min_n = 7;
    spec.n = 16;
    spec.p = 0.5;
  } else {
    spec.mode = GenMode::erdos_renyi;
    spec.require_prime = false;
    spec.min_n = 4;
    spec.n = 12;
    spec.max_attempts = 5000;
  }
  return spec;
}

int CampaignResult::failures() const {
  int total = 0;
  for (const auto& t : tallies) total += t.fail;
  return total;
}

nlohmann::json CampaignResult::to_json() const {
  nlohmann::json doc;
  doc["trials"] = trials;
  doc["generation_failures"] = generation_failures;
  doc["checks"] = nlohmann::json::array();
  for (const auto& t : tallies) {
    doc["checks"].push_back({{"check", t.check},
                             {"pass", t.pass},
                             {"vacuous", t.vacuous},
                             {"fail", t.fail},
                             {"vacuity_rate", t.vacuity_rate()},
                             {"flagged_all_vacuous", t.flagged()},
                             {"pass_outcomes", t.pass_outcomes},
                             {"vacuous_outcomes", t.vacuous_outcomes},
                             {"failure_files", t.failure_files},
                             {"failure_details", t.failure_details}});
  }
  return doc;
}

CampaignResult campaign(const GenSpec& spec, std::span<const std::string> checks, int trials,
                        const CampaignOptions& options) {
  CampaignResult result;
  for (const auto& id : checks) {
    if (!is_check_id(id)) throw InputError("unknown check '" + id + "'");
    CheckTally tally;
    tally.check = id;
    result.tallies.push_back(std::move(tally));
  }
  for (int k = 0; k < trials; ++k) {
    ++result.trials;
    GenSpec trial = spec;
    trial.seed = trial_seed(spec.seed, static_cast<std::uint64_t>(k));
    const auto g = generate(trial);
    if (!g) {
      ++result.generation_failures;
      for (auto& t : result.tallies) {
        ++t.vacuous;
        ++t.vacuous_outcomes["generation failed"];
      }
      continue;
    }
    for (auto& t : result.tallies) {
      const auto report = check_structure(t.check, *g, options.check);
      switch (report.verdict) {
        case Verdict::pass:
          ++t.pass;
          ++t.pass_outcomes[report.detail];
          break;
        case Verdict::vacuous:
          ++t.vacuous;
          ++t.vacuous_outcomes[report.detail];
          break;
        case Verdict::fail: {
          ++t.fail;
          t.failure_details.push_back("trial " + std::to_string(k) + ": " + report.detail);
          if (options.out_dir) {
            const auto file = *options.out_dir / (t.check + "-" + std::to_string(k) + ".json");
            write_text_file(file, graph_to_json(*g).dump() + "\n");
            t.failure_files.push_back(file.string());
          }
          break;
        }
      }
    }
  }
  return result;
}

}  // namespace wvc
