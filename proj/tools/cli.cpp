#include "cli.hpp"

#include <CLI11.hpp>
#include <chrono>
#include <fstream>
#include <json.hpp>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>

#include "twobridge/arf.hpp"
#include "twobridge/bounds.hpp"
#include "twobridge/error.hpp"
#include "twobridge/export.hpp"
#include "twobridge/invariants.hpp"
#include "twobridge/search.hpp"
#include "twobridge/sweeps.hpp"

namespace twobridge::cli {

namespace {

using Json = nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

struct InfoOptions {
  std::string word;
  bool exact = false;
  bool arf = false;
  bool json = false;
  bool deterministic = false;
  std::string orientation = "A";
  std::optional<int> max_size;
};

struct RenderOptions {
  std::string word;
  std::string output = "-";
  std::string highlight;
  std::string orientation = "A";
  bool no_labels = false;
};

struct VerifyOptions {
  std::string suite;
  std::optional<int> max_crossings;
  std::optional<int> param_max;
};

double elapsed_ms(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

Orientation orientation_of(const std::string& s) { return s == "B" ? Orientation::B : Orientation::A; }

Json labels_json(const RegionSelection& s) {
  Json out = Json::array();
  for (const auto& label : s.labels) out.push_back(label.str());
  return out;
}

Json bound_json(const BoundReport& r) {
  return Json{{"theorem", to_string(r.theorem)},
              {"kind", to_string(r.kind)},
              {"value", r.value},
              {"certificate", labels_json(r.certificate)},
              {"verified", r.verified},
              {"note", r.note}};
}

std::string bound_line(const BoundReport& r) {
  std::ostringstream s;
  s << to_string(r.theorem) << ' ' << to_string(r.kind) << ' ' << r.value << ' ' << r.certificate.str();
  if (!r.verified) s << " [unverified]";
  if (!r.note.empty()) s << "  (" << r.note << ')';
  return s.str();
}

Json arf_json(const ArfResult& a) {
  Json j{{"source", to_string(a.source)}, {"value", a.value}};
  if (a.region_sum) j["region_sum"] = *a.region_sum;
  if (a.literal_sum) j["literal_sum"] = *a.literal_sum;
  if (a.swapped) j["swapped"] = true;
  if (!a.note.empty()) j["note"] = a.note;
  return j;
}

std::string classification_text(const LinkClass& k) {
  if (k.is_knot()) return "knot";
  return "2-component link, linking number " + std::to_string(*k.linking_number) +
         (k.admissible() ? ", proper" : ", not proper");
}

int cmd_info(const InfoOptions& o, std::ostream& out, std::ostream& err) {
  const ConwayWord w = parse_conway(o.word);
  const Orientation variant = orientation_of(o.orientation);
  const LinkClass k = classify(w);
  const Fraction f = fraction(w);
  Json report{{"schema", 1}, {"word", w.str()}, {"entries", w.entries()}};
  report["classification"] = Json{{"kind", k.is_knot() ? "knot" : "link"},
                                  {"components", k.is_knot() ? 1 : 2},
                                  {"linking_number", k.linking_number ? Json(*k.linking_number) : Json(nullptr)},
                                  {"proper", k.admissible()}};
  report["fraction"] = Json{{"alpha", f.alpha}, {"beta", f.beta}};
  std::ostringstream text;
  text << "word: " << w.str() << '\n';
  text << "classification: " << classification_text(k) << '\n';
  text << "fraction: " << f.alpha << '/' << f.beta << '\n';
  Json timings = Json::object();

  const auto emit = [&](int code) {
    if (!o.deterministic) report["timings_ms"] = timings;
    if (o.json)
      out << report.dump(2) << '\n';
    else
      out << text.str();
    return code;
  };

  const Diagram d = build_diagram(w, variant);
  if (d.crossing_count() <= kOracleCrossingLimit) {
    const auto start = Clock::now();
    const LaurentPoly v = jones(d);
    timings["jones"] = elapsed_ms(start);
    report["jones"] = Json{{"variable", "t^(1/2)"}, {"terms", v.serialize()}};
    text << "jones: " << format_jones(v) << '\n';
  }

  if (!k.admissible()) {
    text << "region crossing changes cannot trivialize a link with odd linking number\n";
    report["infeasible"] = true;
    if (!o.json) err << "improper link: no region selection trivializes " << w.str() << '\n';
    return emit(kImproper);
  }

  auto start = Clock::now();
  const auto reports = all_bounds(w);
  const BoundReport best = best_bound(w);
  timings["bounds"] = elapsed_ms(start);
  report["bounds"] = Json::array();
  for (const auto& r : reports) report["bounds"].push_back(bound_json(r));
  report["best_bound"] = bound_json(best);
  text << "best bound: " << bound_line(best) << '\n';
  text << "bounds:\n";
  for (const auto& r : reports) text << "  " << bound_line(r) << '\n';

  int code = kOk;
  if (o.exact) {
    SearchOptions options;
    options.max_size = o.max_size;
    start = Clock::now();
    const auto found = exact_ur(d, options);
    timings["exact"] = elapsed_ms(start);
    const bool knot_exact = w.length() <= 2;
    Json j{{"status", to_string(found.status)}, {"explored", found.explored}};
    text << "exact: " << to_string(found.status);
    if (found.status == SearchStatus::Found) {
      j["value"] = found.value;
      j["certificate"] = labels_json(found.certificate);
      j["qualifier"] = knot_exact ? "exact" : "upper-bound";
      text << ' ' << found.value << ' ' << found.certificate.str()
           << (knot_exact ? " (the invariant itself)" : " (diagram value, bounds the invariant)");
    }
    text << ", " << found.explored << " effect vectors\n";
    report["exact"] = j;
    if (found.status == SearchStatus::LimitExceeded) code = kLimit;
    if (found.status == SearchStatus::Infeasible) code = kImproper;
  }

  if (o.arf) {
    Json results = Json::array();
    text << "arf:\n";
    const auto add = [&](const ArfResult& a, const std::string& extra) {
      results.push_back(arf_json(a));
      text << "  " << to_string(a.source) << ": " << a.value << extra << '\n';
    };
    const auto& c = w.entries();
    try {
      if (w.length() == 2) add(arf_formula_cmn(c[0], c[1], variant), "");
      if (w.length() == 3 && k.is_knot()) add(arf_formula_cmpn(c[0], c[1], c[2]), "");
    } catch (const Error& e) {
      if (e.code() != ErrorCode::ImproperInput && e.code() != ErrorCode::NotAKnot) throw;
    }
    if (best.verified && d.is_reduced()) {
      const auto a = arf_via_regions(d, best.certificate);
      add(a, " (sum " + std::to_string(*a.region_sum) + " over " + best.certificate.str() + ")");
    }
    if (k.is_knot() && d.crossing_count() <= kOracleCrossingLimit) {
      ArfResult a;
      a.source = ArfSource::DeterminantOracle;
      a.value = arf_oracle(d);
      Json j = arf_json(a);
      j["determinant"] = determinant(d);
      results.push_back(j);
      text << "  " << to_string(a.source) << ": " << a.value << " (determinant " << determinant(d) << ")\n";
    }
    Json arf{{"results", results}};
    if (!k.is_knot()) arf["orientation"] = o.orientation;
    report["arf"] = arf;
  }
  if (!o.deterministic) {
    text << "timings (ms):";
    for (const auto& [name, ms] : timings.items()) text << ' ' << name << '=' << ms.get<double>();
    text << '\n';
  }
  return emit(code);
}

int cmd_render(const RenderOptions& o, std::ostream& out, std::ostream& err) {
  const ConwayWord w = parse_conway(o.word);
  const Diagram d = build_diagram(w, orientation_of(o.orientation));
  SvgOptions svg;
  svg.labels = !o.no_labels;
  if (!o.highlight.empty()) {
    const auto reports = all_bounds(w);
    const BoundReport* chosen = nullptr;
    for (const auto& r : reports)
      if (tag_matches(o.highlight, r.theorem)) {
        chosen = &r;
        break;
      }
    if (!chosen) {
      err << "no " << o.highlight << " bound applies to " << w.str() << '\n';
      return kParseError;
    }
    svg.highlight = d.resolve(chosen->certificate);
  }
  const std::string image = render_svg(d, svg);
  if (o.output == "-") {
    out << image;
    return kOk;
  }
  std::ofstream file(o.output, std::ios::binary);
  if (!file || !(file << image) || !file.flush()) {
    err << "cannot write " << o.output << '\n';
    return kIoError;
  }
  return kOk;
}

int cmd_verify(const VerifyOptions& o, std::ostream& out) {
  SweepParams params;
  params.max_crossings = o.max_crossings;
  params.param_max = o.param_max;
  const SweepReport r = run_suite(o.suite, params);
  for (const auto& f : r.failures) out << "FAIL " << f << '\n';
  out << r.suite << ": " << r.checked << " checked, " << r.failures.size() << " failed"
      << (r.budget_exhausted ? ", budget exhausted" : "") << '\n';
  if (!r.failures.empty()) return kVerifyFailed;
  return r.budget_exhausted ? kLimit : kOk;
}

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::EmptyWord:
    case ErrorCode::NonPositiveEntry:
    case ErrorCode::MalformedSyntax:
    case ErrorCode::UnknownRegionLabel:
    case ErrorCode::Overflow:
      return kParseError;
    case ErrorCode::ImproperInput:
      return kImproper;
    case ErrorCode::TooManyCrossings:
      return kLimit;
    default:
      return kVerifyFailed;
  }
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Region crossing changes on 2-bridge knots and links", "twobridge"};
  app.require_subcommand(1);

  InfoOptions info;
  auto* info_cmd = app.add_subcommand("info", "Classification, bounds and optional exact value for a word");
  info_cmd->add_option("word", info.word, "Conway word such as \"C(2,3,4)\"")->required();
  info_cmd->add_flag("--exact", info.exact, "Run the exhaustive region search");
  info_cmd->add_flag("--arf", info.arf, "Report Arf invariants from every available route");
  info_cmd->add_flag("--json", info.json, "Structured output");
  info_cmd->add_option("--orientation", info.orientation, "Link orientation variant")->check(CLI::IsMember({"A", "B"}));
  info_cmd->add_option("--max-size", info.max_size, "Largest selection size searched")->check(CLI::NonNegativeNumber);
  info_cmd->add_flag("--deterministic", info.deterministic, "Omit timings so output is byte-stable");

  RenderOptions render;
  auto* render_cmd = app.add_subcommand("render", "Write the standard diagram as SVG");
  render_cmd->add_option("word", render.word, "Conway word")->required();
  render_cmd->add_option("output", render.output, "Output path, - for standard output");
  render_cmd->add_option("-o,--out", render.output, "Output path, - for standard output");
  render_cmd->add_option("--highlight", render.highlight, "Shade the certificate of a bound tag such as T2.8");
  render_cmd->add_option("--orientation", render.orientation, "Link orientation variant")
      ->check(CLI::IsMember({"A", "B"}));
  render_cmd->add_flag("--no-labels", render.no_labels, "Omit region labels");

  VerifyOptions verify;
  auto* verify_cmd = app.add_subcommand("verify", "Run a verification sweep");
  verify_cmd->add_option("suite", verify.suite, "Suite name")->required()->check(CLI::IsMember(suite_names()));
  verify_cmd->add_option("--max-crossings", verify.max_crossings, "Crossing budget")->check(CLI::PositiveNumber);
  verify_cmd->add_option("--param-max", verify.param_max, "Largest free entry for table sweeps")
      ->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kParseError;
  }

  try {
    if (*info_cmd) return cmd_info(info, out, err);
    if (*render_cmd) return cmd_render(render, out, err);
    if (*verify_cmd) return cmd_verify(verify, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kVerifyFailed;
  }
  return kParseError;
}

}  // namespace twobridge::cli
