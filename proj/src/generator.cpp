#include "legnet/generator.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>

#include "legnet/error.hpp"
#include "legnet/random.hpp"

namespace legnet {
namespace {

constexpr char kSectorLetter[kSectorCount] = {'K', 'A', 'L', 'M', 'P', 'J'};

template <std::size_t N>
void check_weights(const std::array<double, N>& weights, const char* name) {
  double total = 0;
  for (double w : weights) {
    if (!(w >= 0) || !std::isfinite(w)) {
      throw ConfigError("corpus-io", std::string(name) + " must be finite and non-negative");
    }
    total += w;
  }
  if (total <= 0) throw ConfigError("corpus-io", std::string(name) + " must not all be zero");
}

template <std::size_t N>
std::size_t draw(Rng& rng, const std::array<double, N>& weights, double total) {
  double u = rng.uniform() * total;
  for (std::size_t i = 0; i < N; ++i) {
    if (u < weights[i]) return i;
    u -= weights[i];
  }
  for (std::size_t i = N; i-- > 0;) {
    if (weights[i] > 0) return i;
  }
  return 0;
}

}  // namespace

std::vector<std::size_t> GeneratorConfig::docs_schedule() const {
  const std::size_t years = static_cast<std::size_t>(last_year - first_year + 1);
  if (!schedule.empty()) return schedule;
  std::vector<std::size_t> out(years);
  for (std::size_t t = 0; t < years; ++t) {
    out[t] = static_cast<std::size_t>(
        std::llround(static_cast<double>(docs_per_year) * std::pow(1.0 + growth_rate, t)));
  }
  return out;
}

void GeneratorConfig::validate() const {
  if (first_year < 1 || last_year > 9999 || first_year > last_year) {
    throw ConfigError("corpus-io", "year range must satisfy 1 <= first_year <= last_year <= 9999");
  }
  const std::size_t years = static_cast<std::size_t>(last_year - first_year + 1);
  if (!schedule.empty() && schedule.size() != years) {
    throw ConfigError("corpus-io", "schedule needs one entry per year");
  }
  if (schedule.empty() && docs_per_year == 0) {
    throw ConfigError("corpus-io", "docs_per_year must be positive");
  }
  if (!(growth_rate > -1.0) || !std::isfinite(growth_rate)) {
    throw ConfigError("corpus-io", "growth_rate must exceed -1");
  }
  if (!(densification_exponent >= 1.0 && densification_exponent <= 2.0)) {
    throw ConfigError("corpus-io", "densification_exponent must lie in [1, 2]");
  }
  if (!(preferential_mixing >= 0.0 && preferential_mixing <= 1.0)) {
    throw ConfigError("corpus-io", "preferential_mixing must lie in [0, 1]");
  }
  if (!(citation_copying >= 0.0 && citation_copying <= 1.0)) {
    throw ConfigError("corpus-io", "citation_copying must lie in [0, 1]");
  }
  if (!(sunset_probability >= 0.0 && sunset_probability <= 1.0)) {
    throw ConfigError("corpus-io", "sunset_probability must lie in [0, 1]");
  }
  if (sunset_horizon_years < 1) throw ConfigError("corpus-io", "sunset_horizon_years must be >= 1");
  if (!(initial_out_degree > 0) || !std::isfinite(initial_out_degree)) {
    throw ConfigError("corpus-io", "initial_out_degree must be positive");
  }
  check_weights(sector_weights, "sector_weights");
  check_weights(reftype_weights, "reftype_weights");

  const auto counts = docs_schedule();
  const double first = static_cast<double>(counts.front());
  if (counts.front() == 0) throw ConfigError("corpus-io", "the first year needs at least one document");
  if (initial_out_degree * first > first * (first - 1) / 2) {
    char buf[160];
    std::snprintf(buf, sizeof buf,
                  "infeasible schedule: %.0f citations requested in the first year but only "
                  "%.0f backward targets exist",
                  initial_out_degree * first, first * (first - 1) / 2);
    throw ConfigError("corpus-io", buf);
  }
}

LegislationGraph generate(const GeneratorConfig& config) {
  config.validate();
  Rng rng(derive_seed(config.seed, "generator"));
  const auto counts = config.docs_schedule();
  const double n1 = static_cast<double>(counts.front());
  const double sector_total =
      std::accumulate(config.sector_weights.begin(), config.sector_weights.end(), 0.0);

  // Amendments are drawn as a single event; slot amended_by is never drawn.
  std::array<double, kRefTypeCount> kind_weights = config.reftype_weights;
  kind_weights[reftype_slot(RefType::amendment_to)] =
      (config.reftype_weights[reftype_slot(RefType::amended_by)] +
       config.reftype_weights[reftype_slot(RefType::amendment_to)]) /
      2;
  kind_weights[reftype_slot(RefType::amended_by)] = 0;
  const double kind_total = std::accumulate(kind_weights.begin(), kind_weights.end(), 0.0);
  if (kind_total <= 0) throw ConfigError("corpus-io", "reftype_weights leave nothing to draw");

  LegislationGraph g;
  std::vector<NodeIndex> tickets;               // node v appears in-degree(v) + 1 times
  std::vector<std::vector<NodeIndex>> cites;    // outgoing citation targets per node
  std::vector<NodeIndex> chosen;
  std::size_t edges_so_far = 0;

  auto target_edges = [&](double cumulative) {
    return config.initial_out_degree * n1 * std::pow(cumulative / n1, config.densification_exponent);
  };

  for (std::size_t t = 0; t < counts.size(); ++t) {
    const int year = config.first_year + static_cast<int>(t);
    const Date jan1(year, 1, 1);
    const std::int32_t days_in_year = Date(year, 12, 31).serial() - jan1.serial() + 1;

    struct Pending {
      std::int32_t day;
      Sector sector;
    };
    std::vector<Pending> pending(counts[t]);
    for (auto& p : pending) {
      p.day = static_cast<std::int32_t>(rng.below(static_cast<std::uint64_t>(days_in_year)));
      p.sector = static_cast<Sector>(draw(rng, config.sector_weights, sector_total) + 1);
    }
    std::stable_sort(pending.begin(), pending.end(),
                     [](const Pending& a, const Pending& b) { return a.day < b.day; });

    const int width = counts[t] > 99999 ? 7 : 5;
    for (std::size_t k = 0; k < pending.size(); ++k) {
      const Date effect = Date::from_serial(jan1.serial() + pending[k].day);
      Date expiry = Date::sentinel();
      if (config.sunset_probability > 0 && rng.bernoulli(config.sunset_probability)) {
        expiry = effect.plus_years(static_cast<int>(rng.between(1, config.sunset_horizon_years)));
      }
      char id[40];
      std::snprintf(id, sizeof id, "%d%04d%c%0*zu", sector_code(pending[k].sector), year,
                    kSectorLetter[sector_slot(pending[k].sector)], width, k + 1);
      const NodeIndex self = g.add_document({DocId(id), pending[k].sector, effect, expiry, false});
      cites.emplace_back();

      const std::size_t available = self;  // every earlier document
      const double target = target_edges(static_cast<double>(self) + 1);
      long long budget = static_cast<long long>(std::floor(target)) - static_cast<long long>(edges_so_far);
      chosen.clear();
      std::size_t amended_by_edges = 0;

      auto cite = [&](NodeIndex to) {
        const auto kind = static_cast<RefType>(draw(rng, kind_weights, kind_total));
        chosen.push_back(to);
        cites[self].push_back(to);
        g.add_edge(self, to, kind);
        tickets.push_back(to);
        ++edges_so_far;
        --budget;
        if (kind == RefType::amendment_to) {
          g.add_edge(to, self, RefType::amended_by);
          ++amended_by_edges;
          ++edges_so_far;
          --budget;
        }
      };
      auto is_chosen = [&](NodeIndex v) {
        return std::find(chosen.begin(), chosen.end(), v) != chosen.end();
      };

      while (budget > 0 && chosen.size() < available) {
        NodeIndex to = 0;
        bool found = false;
        for (int attempt = 0; attempt < 64 && !found; ++attempt) {
          if (!tickets.empty() && rng.bernoulli(config.preferential_mixing)) {
            to = tickets[rng.below(tickets.size())];
          } else {
            to = static_cast<NodeIndex>(rng.below(available));
          }
          found = !is_chosen(to);
        }
        if (!found) {
          // Nearly every earlier document is already cited: take the first free one.
          for (NodeIndex v = 0; v < available && !found; ++v) {
            if (!is_chosen(v)) {
              to = v;
              found = true;
            }
          }
        }
        cite(to);
        if (budget > 0 && config.citation_copying > 0 && rng.bernoulli(config.citation_copying)) {
          const auto& inherited = cites[to];
          if (!inherited.empty()) {
            const NodeIndex copy = inherited[rng.below(inherited.size())];
            if (!is_chosen(copy)) cite(copy);
          }
        }
      }
      tickets.push_back(self);
      for (std::size_t i = 0; i < amended_by_edges; ++i) tickets.push_back(self);
    }
  }
  g.seal();
  return g;
}

}  // namespace legnet
