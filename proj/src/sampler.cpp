// Copyright 2026 The svkit developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "svkit/sampler.hpp"

#include <cmath>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "svkit/rng.hpp"

namespace svkit {

SampleRecord sample_outcomes(const StateVector& state, const ShotPlan& plan) {
  if (plan.shots_per_triple < 1) {
    throw std::invalid_argument("sample_outcomes: shots_per_triple must be >= 1");
  }
  SampleRecord record;
  record.plan = plan;
  for (int t = 0; t < 8; ++t) {
    const std::array<MeasurementSetting, 3> triple = {
        plan.scenario.party_settings[0][(t >> 2) & 1],
        plan.scenario.party_settings[1][(t >> 1) & 1],
        plan.scenario.party_settings[2][t & 1]};
    const OutcomeDistribution dist = outcome_distribution(state, triple);
    // Inverse CDF over the fixed outcome index order.
    std::array<double, 8> cdf{};
    double acc = 0.0;
    for (int o = 0; o < 8; ++o) {
      acc += dist.probabilities[o];
      cdf[o] = acc;
    }
    const CounterRng rng(plan.seed, static_cast<std::uint64_t>(t));
    for (std::uint64_t shot = 0; shot < plan.shots_per_triple; ++shot) {
      const double u = rng.uniform_at(shot);
      int o = 0;
      while (o < 7 && u >= cdf[o]) ++o;
      ++record.counts[t][o];
    }
  }
  return record;
}

EstimateReport estimate(const SampleRecord& record) {
  const std::uint64_t shots = record.plan.shots_per_triple;
  if (shots == 0) {
    throw std::invalid_argument("estimate: record has zero shots");
  }
  EstimateReport report;
  double variance = 0.0;
  for (int t = 0; t < 8; ++t) {
    std::uint64_t total = 0;
    std::int64_t signed_sum = 0;
    for (int o = 0; o < 8; ++o) {
      total += record.counts[t][o];
      signed_sum += outcome_product(o) *
                    static_cast<std::int64_t>(record.counts[t][o]);
    }
    if (total != shots) {
      throw std::invalid_argument(
          "estimate: counts do not sum to shots_per_triple");
    }
    const double e = double(signed_sum) / double(shots);
    const double se = std::sqrt(std::max(0.0, 1.0 - e * e) / double(shots));
    report.correlator_estimates[t] = e;
    report.standard_errors[t] = se;
    report.sv_estimate += svetlichny_sign(t) * e;
    variance += se * se;
  }
  report.sv_standard_error = std::sqrt(variance);
  report.sigma_above_4 =
      (std::abs(report.sv_estimate) - kClassicalBound) /
      report.sv_standard_error;
  return report;
}

void write_csv(const SampleRecord& record, std::ostream& out) {
  out << "triple,a_setting,b_setting,c_setting,outcome_a,outcome_b,"
         "outcome_c,count\n";
  for (int t = 0; t < 8; ++t) {
    const MeasurementSetting& a =
        record.plan.scenario.party_settings[0][(t >> 2) & 1];
    const MeasurementSetting& b =
        record.plan.scenario.party_settings[1][(t >> 1) & 1];
    const MeasurementSetting& c =
        record.plan.scenario.party_settings[2][t & 1];
    for (int o = 0; o < 8; ++o) {
      if (record.counts[t][o] == 0) continue;
      out << t << ',' << a.label << ',' << b.label << ',' << c.label << ','
          << (((o >> 2) & 1) ? -1 : 1) << ',' << (((o >> 1) & 1) ? -1 : 1)
          << ',' << ((o & 1) ? -1 : 1) << ',' << record.counts[t][o] << '\n';
    }
  }
}

std::string to_csv(const SampleRecord& record) {
  std::ostringstream out;
  write_csv(record, out);
  return out.str();
}

}  // namespace svkit
