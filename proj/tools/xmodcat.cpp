// Command-line front end: validate, eval, build, verify, export, catalog.
//
// Exit codes: 0 success, 1 a law or validation failure, 2 an input error.

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "xmodcat.hpp"

namespace {

using namespace xmodcat;

constexpr int kOk = 0;
constexpr int kFail = 1;
constexpr int kInput = 2;

struct Output {
  bool pretty = false;

  void line(const json& j) const {
    if (pretty) std::cout << j.dump(2) << "\n";
    else std::cout << j.dump() << "\n";
  }

  void violation(const Violation& v) const {
    if (pretty) {
      std::cout << "FAIL " << v.law << " witness " << json(v.witness).dump();
      if (!v.detail.empty()) std::cout << " (" << v.detail << ")";
      std::cout << "\n";
      return;
    }
    json j{{"law", v.law}, {"witness", v.witness}};
    if (!v.detail.empty()) j["detail"] = v.detail;
    std::cout << j.dump() << "\n";
  }

  /// One line per law with its counts, then one per listed violation.
  void report(const Report& r, bool per_law) const {
    if (per_law) {
      for (const auto& [law, t] : r.tally()) {
        if (pretty)
          std::cout << (t.failures ? "FAIL " : "pass ") << law << "  " << t.checks << " checks, " << t.failures
                    << " failures\n";
        else
          line({{"law", law}, {"status", t.failures ? "fail" : "pass"}, {"checks", t.checks},
                {"failures", t.failures}});
      }
    }
    for (const auto& v : r.violations()) violation(v);
  }

  void error(const Error& e) const {
    json j{{"error", std::string(to_string(e.kind()))}, {"message", e.what()}};
    if (const auto* p = dynamic_cast<const ParseError*>(&e)) {
      j["line"] = p->line();
      j["column"] = p->column();
    } else if (!e.witness().empty()) {
      j["witness"] = e.witness();
    }
    if (pretty) std::cerr << e.what() << "\n";
    else std::cerr << j.dump() << "\n";
  }
};

/// Library errors that describe malformed input rather than a failed law.
bool is_input_error(ErrorKind k) {
  return k == ErrorKind::Io || k == ErrorKind::Format || k == ErrorKind::MalformedTable ||
         k == ErrorKind::SyntaxError;
}

int summary(const Output& out, const std::string& verb, const Report& r, json extra = json::object()) {
  extra["verb"] = verb;
  extra["ok"] = r.ok();
  extra["violations"] = r.total();
  out.line(extra);
  return r.ok() ? kOk : kFail;
}

// ---------------------------------------------------------------------------

int cmd_validate(const Output& out, const std::string& kind, const std::string& path) {
  Report r;
  try {
    if (kind == "group") {
      try {
        (void)group_from_json(read_json_file(path));
      } catch (const Error& e) {
        if (is_input_error(e.kind())) throw;
        r.add(std::string(to_string(e.kind())), e.witness(), e.what());
      }
    } else if (kind == "xmod") {
      const CrossedModule xm = load_xmod(path);
      try {
        r = validate_crossed_module(xm);
      } catch (const Error& e) {
        r.add(std::string(to_string(e.kind())), e.witness(), e.what());
      }
    } else if (kind == "category") {
      try {
        const FiniteCategory c = category_from_json(read_json_file(path));
        r = validate_category(c);
      } catch (const Error& e) {
        if (is_input_error(e.kind())) throw;
        r.add(std::string(to_string(e.kind())), e.witness(), e.what());
      }
    } else {
      const StrictAction a = load_action(path);
      try {
        r = validate_strict_action(a);
      } catch (const Error& e) {
        r.add(std::string(to_string(e.kind())), e.witness(), e.what());
      }
    }
  } catch (const Error& e) {
    out.error(e);
    return kInput;
  }
  out.report(r, false);
  return summary(out, "validate", r, {{"kind", kind}, {"path", path}});
}

int cmd_eval(const Output& out, const std::string& path, bool check_interchange) {
  ParsedGrid g;
  try {
    const fs::path p(path);
    g = p.extension() == ".json" ? grid_from_json(read_json_file(p), detail::dir_of(p)) : parse_grid_file(p);
  } catch (const Error& e) {
    out.error(e);
    return is_input_error(e.kind()) && !dynamic_cast<const ParseError*>(&e) ? kInput : kFail;
  }
  const Quintet q = evaluate_grid(g.grid);
  if (check_interchange) {
    const Quintet alt = evaluate_grid(g.grid, FoldOrder::ColumnsFirst);
    if (!(alt == q)) {
      out.line({{"error", "InterchangeViolation"}, {"rows_first", quintet_to_json(q)},
                {"columns_first", quintet_to_json(alt)}});
      return kFail;
    }
  }
  out.line(quintet_to_json(q));
  return kOk;
}

std::optional<StrictAction> load_target(const Output& out, const std::string& action_path,
                                        const std::string& adjoint_path, int& code) {
  try {
    if (!adjoint_path.empty()) {
      const CrossedModule xm = load_xmod(adjoint_path);
      if (auto r = validate_crossed_module(xm); !r.ok()) {
        out.report(r, false);
        code = summary(out, "load", r, {{"path", adjoint_path}});
        return std::nullopt;
      }
      return adjoint_action(xm);
    }
    return load_action(action_path);
  } catch (const Error& e) {
    out.error(e);
    code = is_input_error(e.kind()) ? kInput : kFail;
    return std::nullopt;
  }
}

int cmd_build(const Output& out, const std::string& action_path, const std::string& adjoint_path,
              const std::string& out_path, bool h2cat, bool v2cat, const std::string& dot_dir) {
  int code = kOk;
  auto act = load_target(out, action_path, adjoint_path, code);
  if (!act) return code;
  std::optional<TransDoubleCat> d;
  try {
    d.emplace(build_transformation_double(*act));
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::InvalidAction && e.kind() != ErrorKind::ComponentInvalid) throw;
    Report r;
    try {
      r = validate_strict_action(*act);
    } catch (const Error& inner) {
      r.add(std::string(to_string(inner.kind())), inner.witness(), inner.what());
    }
    out.report(r, false);
    return summary(out, "build", r);
  }

  const TransposeViews tv = transpose_views(*d);
  json doc = tdc_to_json(*d);
  Report checks = tv.report;
  if (h2cat) {
    const auto t = horizontal_2category(*d);
    checks.merge(t.report);
    doc["h2cat"] = two_cells_to_json(t, "horizontal");
  }
  if (v2cat) {
    const auto t = vertical_2category(*d);
    checks.merge(t.report);
    doc["v2cat"] = two_cells_to_json(t, "vertical");
  }
  try {
    if (out_path.empty()) out.line(doc);
    else write_text_file(out_path, doc.dump(1) + "\n");
    if (!dot_dir.empty()) {
      const auto& G = d->xm().G();
      const auto& H = d->xm().H();
      const Index nh = H.order();
      const Index no = d->objects();
      const Index nm = d->horizontal().morphisms();
      write_text_file(fs::path(dot_dir) / "objects.dot",
                      groupoid_to_dot(tv.objects, "objects", {}, [&](Index m) { return G.name(m / no); }));
      write_text_file(fs::path(dot_dir) / "morphisms.dot",
                      groupoid_to_dot(tv.morphisms, "morphisms", {}, [&](Index m) {
                        const Index k = m / nm;
                        return "(" + G.name(k / nh) + "," + H.name(k % nh) + ")";
                      }));
    }
  } catch (const Error& e) {
    out.error(e);
    return kInput;
  }
  out.report(checks, false);
  return summary(out, "build", checks,
                 {{"objects", d->objects()},
                  {"horizontal", d->horizontal().morphisms()},
                  {"vertical", d->vertical().morphisms()},
                  {"squares", d->squares()},
                  {"object_components", connected_components(*tv.objects.cat).count},
                  {"morphism_components", connected_components(*tv.morphisms.cat).count}});
}

int cmd_verify(const Output& out, const std::string& action_path, const std::string& adjoint_path,
               const VerifyOptions& opt) {
  int code = kOk;
  auto act = load_target(out, action_path, adjoint_path, code);
  if (!act) return code;
  Report all(opt.cap);
  try {
    all.merge(validate_strict_action(*act, opt.cap));
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::ComponentInvalid) throw;
    all.add("action.components", e.witness(), e.what());
    out.report(all, true);
    return summary(out, "verify", all);
  }
  all.merge(validate_crossed_module(*act->xm, opt.cap));
  all.merge(verify_quintet_laws(*act->xm, opt));
  const TransDoubleCat d = TransDoubleCat::build_unchecked(*act);
  all.merge(verify_double_category(d, opt));
  if (all.ok()) {
    // These constructions assume a lawful double category.
    all.merge(transpose_views(d, opt.cap).report);
    all.merge(nested_inclusions(d, opt.cap).report);
    all.merge(horizontal_2category(d, opt.cap).report);
    all.merge(vertical_2category(d, opt.cap).report);
    all.merge(check_compositor_coherence(identity_compositor(*act), opt.cap));
  }
  if (!adjoint_path.empty()) {
    const auto& xm = *act->xm;
    for (Index f = 0; f < act->cat->morphisms(); ++f)
      for (Index g = 0; g < xm.G().order(); ++g)
        for (Index c = 0; c < xm.H().order(); ++c) {
          const Mor2G m = mor_at(xm, f);
          all.expect(mor_index(adjoint_by_quintets(xm, g, c, m.g, m.eta)) == act->mor(g, c, f),
                     "adjoint.quintet_array", {g, c, f});
        }
  }
  out.report(all, true);
  const char* mode = opt.mode == VerifyOptions::Mode::Exhaustive ? "exhaustive"
                     : opt.mode == VerifyOptions::Mode::Sampled  ? "sampled"
                                                                 : "auto";
  return summary(out, "verify", all, {{"mode", mode}, {"samples", opt.samples}, {"seed", opt.seed}});
}

int cmd_export(const Output& out, const std::string& action_path, const std::string& adjoint_path,
               const std::string& what, const std::string& out_path) {
  int code = kOk;
  auto act = load_target(out, action_path, adjoint_path, code);
  if (!act) return code;
  json doc;
  if (what == "action") doc = action_to_json(*act, !adjoint_path.empty());
  else if (what == "category") doc = category_to_json(*act->cat);
  else if (what == "xmod") doc = xmod_to_json(*act->xm);
  else doc = tdc_to_json(TransDoubleCat::build_unchecked(*act));
  try {
    if (out_path.empty()) out.line(doc);
    else write_text_file(out_path, doc.dump(1) + "\n");
  } catch (const Error& e) {
    out.error(e);
    return kInput;
  }
  return kOk;
}

int cmd_catalog(const Output& out, const std::string& out_dir) {
  std::vector<CrossedModule> all = fixture_catalog();
  all.push_back(bad_peiffer());
  for (const auto& xm : all) {
    const bool ok = validate_crossed_module(xm, 1).ok();
    std::string file;
    if (!out_dir.empty()) {
      std::string stem = xm.name();
      for (auto& ch : stem) ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
      file = (fs::path(out_dir) / (stem + ".json")).string();
      try {
        write_text_file(file, xmod_to_json(xm).dump(1) + "\n");
      } catch (const Error& e) {
        out.error(e);
        return kInput;
      }
    }
    json j{{"name", xm.name()}, {"G", xm.G().order()}, {"H", xm.H().order()}, {"valid", ok}};
    if (!file.empty()) j["file"] = file;
    out.line(j);
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"xmodcat: crossed modules, quintets and transformation double categories"};
  app.require_subcommand(1);
  app.fallthrough();
  Output out;
  app.add_flag("--pretty", out.pretty, "Human-readable output instead of JSON lines");

  std::string kind = "xmod", path;
  auto* validate = app.add_subcommand("validate", "Validate a group, crossed module, category or action file");
  validate->add_option("--kind", kind, "group | xmod | category | action")
      ->check(CLI::IsMember({"group", "xmod", "category", "action"}));
  validate->add_option("path", path, "JSON file")->required();

  bool check_interchange = false;
  auto* eval = app.add_subcommand("eval", "Evaluate a quintet grid (text format, or JSON by extension)");
  eval->add_option("path", path, "Grid file")->required();
  eval->add_flag("--check-interchange", check_interchange, "Also fold columns first and compare");

  std::string adjoint, out_path, dot_dir, what = "action";
  bool h2cat = false, v2cat = false;
  auto* build = app.add_subcommand("build", "Build the transformation double category of an action");
  auto* build_path = build->add_option("action", path, "Action JSON file");
  auto* build_adj = build->add_option("--adjoint", adjoint, "Crossed module whose adjoint action to use");
  build_path->excludes(build_adj);
  build->add_option("--out", out_path, "Write the double category JSON here");
  build->add_flag("--h2cat", h2cat, "Include the horizontal 2-cell table");
  build->add_flag("--v2cat", v2cat, "Include the vertical 2-cell table");
  build->add_option("--dot", dot_dir, "Write objects.dot and morphisms.dot into this directory");

  bool exhaustive = false;
  std::optional<std::uint64_t> samples;
  std::uint64_t seed = 1;
  auto* verify = app.add_subcommand("verify", "Run every law suite on an action");
  auto* verify_path = verify->add_option("action", path, "Action JSON file");
  auto* verify_adj = verify->add_option("--adjoint", adjoint, "Crossed module whose adjoint action to use");
  verify_path->excludes(verify_adj);
  auto* ex_flag = verify->add_flag("--exhaustive", exhaustive, "Enumerate every instance");
  verify->add_option("--samples", samples, "Sample this many instances per law")->excludes(ex_flag);
  verify->add_option("--seed", seed, "Sampling seed");

  auto* exp = app.add_subcommand("export", "Write an action, its category, crossed module or double category");
  auto* exp_path = exp->add_option("action", path, "Action JSON file");
  auto* exp_adj = exp->add_option("--adjoint", adjoint, "Crossed module whose adjoint action to use");
  exp_path->excludes(exp_adj);
  exp->add_option("--what", what, "action | category | xmod | tdc")
      ->check(CLI::IsMember({"action", "category", "xmod", "tdc"}));
  exp->add_option("--out", out_path, "Output file (default: standard output)");

  std::string catalog_dir;
  auto* catalog = app.add_subcommand("catalog", "List the fixture crossed modules, optionally writing them");
  catalog->add_option("--out", catalog_dir, "Write one JSON file per fixture into this directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    std::cerr << app.help();
    return kInput;
  }

  try {
    if (*validate) return cmd_validate(out, kind, path);
    if (*eval) return cmd_eval(out, path, check_interchange);
    if (*build) {
      if (path.empty() && adjoint.empty()) {
        std::cerr << "build: give an action file or --adjoint\n" << build->help();
        return kInput;
      }
      return cmd_build(out, path, adjoint, out_path, h2cat, v2cat, dot_dir);
    }
    if (*verify) {
      if (path.empty() && adjoint.empty()) {
        std::cerr << "verify: give an action file or --adjoint\n" << verify->help();
        return kInput;
      }
      VerifyOptions opt;
      opt.seed = seed;
      if (exhaustive) opt.mode = VerifyOptions::Mode::Exhaustive;
      if (samples) {
        opt.mode = VerifyOptions::Mode::Sampled;
        opt.samples = *samples;
      }
      return cmd_verify(out, path, adjoint, opt);
    }
    if (*exp) {
      if (path.empty() && adjoint.empty()) {
        std::cerr << "export: give an action file or --adjoint\n" << exp->help();
        return kInput;
      }
      return cmd_export(out, path, adjoint, what, out_path);
    }
    if (*catalog) return cmd_catalog(out, catalog_dir);
  } catch (const Error& e) {
    out.error(e);
    return is_input_error(e.kind()) ? kInput : kFail;
  }
  return kInput;
}
