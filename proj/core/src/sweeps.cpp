#include "twobridge/sweeps.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

#include "twobridge/arf.hpp"
#include "twobridge/bounds.hpp"
#include "twobridge/error.hpp"
#include "twobridge/invariants.hpp"
#include "twobridge/search.hpp"

namespace twobridge {

namespace {

void compose(int remaining, std::vector<int>& prefix, const std::function<void(const ConwayWord&)>& f) {
  if (remaining == 0) {
    f(ConwayWord(prefix));
    return;
  }
  for (int first = 1; first <= remaining; ++first) {
    prefix.push_back(first);
    compose(remaining - first, prefix, f);
    prefix.pop_back();
  }
}

std::string word3(int a, int b, int c) { return ConwayWord({a, b, c}).str(); }

}  // namespace

void for_each_word(int total, const std::function<void(const ConwayWord&)>& f) {
  if (total <= 0) return;
  std::vector<int> prefix;
  compose(total, prefix, f);
}

std::string Table1Row::str() const {
  std::string out = "C(";
  for (std::size_t i = 0; i < pattern.size(); ++i) {
    if (i) out += ",";
    out += pattern[i] == 0 ? "c" + std::to_string(i + 1) : std::to_string(pattern[i]);
  }
  return out + ")";
}

const std::vector<Table1Row>& table1_rows() {
  static const std::vector<Table1Row> rows = [] {
    std::vector<Table1Row> r;
    const auto exact = [&](std::vector<int> p) { r.push_back({std::move(p), 1, true}); };
    const auto bound = [&](std::vector<int> p) { r.push_back({std::move(p), 2, false}); };
    exact({2, 0, 2, 0});
    exact({0, 2, 0, 2});
    bound({6, 0, 2});
    bound({4, 0, 4});
    bound({2, 0, 6});
    bound({4, 0, 2});
    bound({2, 0, 4});
    bound({6, 0, 2, 0});
    bound({4, 0, 4, 0});
    bound({2, 0, 6, 0});
    bound({4, 0, 2, 0});
    bound({2, 0, 4, 0});
    bound({4, 0, 2, 0, 2});
    bound({2, 0, 4, 0, 2});
    bound({2, 0, 2, 0, 4});
    bound({2, 0, 2, 0, 2});
    bound({4, 0, 2, 0, 2, 0});
    bound({2, 0, 4, 0, 2, 0});
    bound({2, 0, 2, 0, 4, 0});
    bound({2, 0, 2, 0, 2, 0});
    bound({2, 0, 2, 0, 2, 0, 2});
    bound({2, 0, 2, 0, 2, 0, 2, 0});
    return r;
  }();
  return rows;
}

std::vector<ConwayWord> instantiate(const Table1Row& row, int param_max) {
  std::vector<ConwayWord> out;
  std::vector<int> entries = row.pattern;
  std::vector<std::size_t> free;
  for (std::size_t i = 0; i < entries.size(); ++i)
    if (entries[i] == 0) free.push_back(i);
  std::vector<int> values(free.size(), 1);
  while (true) {
    for (std::size_t k = 0; k < free.size(); ++k) entries[free[k]] = values[k];
    out.emplace_back(entries);
    std::size_t k = 0;
    while (k < values.size() && values[k] == param_max) values[k++] = 1;
    if (k == values.size()) break;
    ++values[k];
  }
  return out;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"cmn-exact", "certificates", "arf-knots", "arf-welldef", "table1", "euler"};
  return names;
}

SweepReport run_suite(const std::string& name, const SweepParams& params) {
  if (name == "cmn-exact") return sweep_cmn_exact(params.max_crossings.value_or(12));
  if (name == "certificates") return sweep_certificates(params.max_crossings.value_or(16));
  if (name == "arf-knots") return sweep_arf_knots(params.max_crossings.value_or(14));
  if (name == "arf-welldef") return sweep_arf_welldef(params.max_crossings.value_or(10));
  if (name == "table1") return sweep_table1(params.param_max.value_or(4));
  if (name == "euler") return sweep_euler(params.max_crossings.value_or(20));
  throw std::invalid_argument("unknown suite '" + name + "'");
}

SweepReport sweep_cmn_exact(int max_crossings) {
  SweepReport report;
  report.suite = "cmn-exact";
  for (int m = 1; m <= 8; ++m) {
    for (int n = 1; n <= 8 && m + n <= max_crossings; ++n) {
      const ConwayWord w({m, n});
      if (!classify(w).admissible()) continue;
      ++report.checked;
      const int expected = ur_cmn(m, n).value;
      const auto found = exact_ur_word(w).result;
      if (found.status == SearchStatus::LimitExceeded) report.budget_exhausted = true;
      if (found.status != SearchStatus::Found || found.value != expected) {
        std::ostringstream msg;
        msg << w.str() << ": closed form " << expected << ", search " << to_string(found.status);
        if (found.status == SearchStatus::Found) msg << ' ' << found.value;
        report.failures.push_back(msg.str());
      }
    }
  }
  return report;
}

SweepReport sweep_certificates(int max_crossings) {
  SweepReport report;
  report.suite = "certificates";
  for (int total = 1; total <= max_crossings; ++total) {
    for_each_word(total, [&](const ConwayWord& w) {
      if (!classify(w).admissible()) return;
      const Diagram d = build_diagram(w);
      for (const auto& r : all_bounds(w)) {
        ++report.checked;
        std::string problem;
        const int size = static_cast<int>(r.certificate.labels.size());
        std::vector<int> ids;
        for (const auto& label : r.certificate.labels)
          if (auto id = d.find_region(label)) ids.push_back(*id);
        if (size != r.value) {
          problem = "certificate has " + std::to_string(size) + " regions";
        } else if (static_cast<int>(ids.size()) != size) {
          problem = "certificate names a missing region";
        } else if (!is_trivial(d.flipped(d.effect(ids)))) {
          problem = "Jones polynomial after the changes is not trivial";
        }
        if (!problem.empty())
          report.failures.push_back(w.str() + " " + to_string(r.theorem) + " value " + std::to_string(r.value) +
                                    " " + r.certificate.str() + ": " + problem);
      }
    });
  }
  return report;
}

SweepReport sweep_arf_knots(int max_crossings) {
  SweepReport report;
  report.suite = "arf-knots";
  for (int m = 1; m < max_crossings; ++m) {
    for (int n = 1; m + n <= max_crossings; ++n) {
      if (m % 2 == 1 && n % 2 == 1) continue;
      ++report.checked;
      const int formula = arf_formula_cmn(m, n).value;
      const ConwayWord w({m, n});
      const int oracle = arf_oracle(w);
      if (formula != oracle)
        report.failures.push_back(w.str() + ": formula " + std::to_string(formula) + ", determinant " +
                                  std::to_string(determinant(w)) + " gives " + std::to_string(oracle));
    }
  }
  for (int m = 1; m < max_crossings; ++m) {
    for (int p = 1; m + p < max_crossings; ++p) {
      for (int n = 1; m + p + n <= max_crossings; ++n) {
        const bool one_even = (m % 2 == 0) != (n % 2 == 0);
        const bool all_odd = m % 2 == 1 && p % 2 == 1 && n % 2 == 1;
        if (!one_even && !all_odd) continue;
        ++report.checked;
        const int formula = arf_formula_cmpn(m, p, n).value;
        const ConwayWord w({m, p, n});
        const int oracle = arf_oracle(w);
        if (formula != oracle)
          report.failures.push_back(word3(m, p, n) + ": formula " + std::to_string(formula) + ", determinant " +
                                    std::to_string(determinant(w)) + " gives " + std::to_string(oracle));
      }
    }
  }
  return report;
}

SweepReport sweep_arf_welldef(int max_crossings, int max_selection) {
  SweepReport report;
  report.suite = "arf-welldef";
  for (int total = 1; total <= max_crossings; ++total) {
    for_each_word(total, [&](const ConwayWord& w) {
      const LinkClass k = classify(w);
      if (!k.admissible()) return;
      std::vector<Orientation> variants{Orientation::A};
      if (!k.is_knot()) variants.push_back(Orientation::B);
      for (Orientation v : variants) {
        const Diagram d = build_diagram(w, v);
        if (!d.is_reduced()) return;
        const auto selections = trivializing_selections(d, max_selection);
        std::optional<int> reference;
        for (const auto& ids : selections) {
          ++report.checked;
          const int sum = region_sum(d, ids);
          const std::string where = w.str() + (k.is_knot() ? "" : v == Orientation::A ? " [A]" : " [B]") + " " +
                                    selection_for(d, ids).str();
          if (sum % 2 != 0) {
            report.failures.push_back(where + ": odd sum " + std::to_string(sum));
            continue;
          }
          if (!reference) reference = sum;
          if (((sum - *reference) % 4 + 4) % 4 != 0)
            report.failures.push_back(where + ": sum " + std::to_string(sum) + " disagrees with " +
                                      std::to_string(*reference) + " mod 4");
        }
      }
    });
  }
  return report;
}

SweepReport sweep_table1(int param_max) {
  SweepReport report;
  report.suite = "table1";
  for (const auto& row : table1_rows()) {
    for (const auto& w : instantiate(row, param_max)) {
      if (!classify(w).admissible()) continue;
      ++report.checked;
      SearchResult found;
      try {
        found = exact_ur_word(w).result;
      } catch (const Error& e) {
        if (e.code() != ErrorCode::TooManyCrossings) throw;
        report.budget_exhausted = true;
        report.failures.push_back(row.str() + " " + w.str() + ": " + e.what());
        continue;
      }
      if (found.status == SearchStatus::LimitExceeded) report.budget_exhausted = true;
      const bool have = found.status == SearchStatus::Found;
      std::string problem;
      if (row.exact) {
        if (!have || found.value != row.value) problem = "search value differs from " + std::to_string(row.value);
      } else {
        const int bound = best_bound(w).value;
        if (bound > row.value) problem = "best bound " + std::to_string(bound);
        if (!have || found.value > row.value) problem += (problem.empty() ? "" : "; ") + std::string("search value exceeds bound");
      }
      if (!problem.empty())
        report.failures.push_back(row.str() + " " + w.str() + ": " + problem +
                                  (have ? " (search " + std::to_string(found.value) + ")" : ""));
    }
  }
  return report;
}

SweepReport sweep_euler(int max_crossings) {
  SweepReport report;
  report.suite = "euler";
  for (int total = 1; total <= max_crossings; ++total) {
    for_each_word(total, [&](const ConwayWord& w) {
      ++report.checked;
      const Diagram d = build_diagram(w);
      if (d.face_count() != d.crossing_count() + 2)
        report.failures.push_back(w.str() + ": " + std::to_string(d.face_count()) + " faces for " +
                                  std::to_string(d.crossing_count()) + " crossings");
    });
  }
  return report;
}

}  // namespace twobridge
