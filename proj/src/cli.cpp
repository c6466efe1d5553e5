#include "waring/cli.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <sstream>

#include "waring/binary.hpp"
#include "waring/io.hpp"

namespace waring {

namespace {

struct Output {
  Json json;
  std::string text;
};

struct Common {
  std::string out_path;
  bool json = false;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw UsageError("invalid JSON in " + path + ": " + e.what());
  }
}

Points read_points(const std::string& path) { return pointset_from_json(read_json_file(path)); }

// "ci:d1,d2" -> (d1, d2).
std::pair<int, int> parse_ci(const std::string& spec) {
  if (spec.rfind("ci:", 0) != 0) throw UsageError("expected ci:d1,d2, got " + spec);
  const auto d = parse_int_list(std::string_view(spec).substr(3));
  if (d.size() != 2) throw UsageError("expected two degrees in " + spec);
  return {std::min(d[0], d[1]), std::max(d[0], d[1])};
}

// "lambda0", "lambda0+1/10", "lambda0-1" or a scalar.
Cyclotomic parse_lambda(const std::string& text, const std::function<Cyclotomic()>& lambda0) {
  if (text.rfind("lambda0", 0) == 0) {
    const std::string rest = text.substr(7);
    if (rest.empty()) return lambda0();
    if (rest[0] == '+') return lambda0() + parse_scalar(rest.substr(1));
    if (rest[0] == '-') return lambda0() - parse_scalar(rest.substr(1));
    throw UsageError("cannot parse lambda " + text);
  }
  return parse_scalar(text);
}

std::string roots_text(const Decomposition& dec) {
  std::ostringstream os;
  if (dec.numeric && dec.status != DecompositionStatus::VerifiedExact) {
    for (std::size_t i = 0; i < dec.numeric->points.size(); ++i) {
      os << "  c=" << dec.numeric->coeffs[i] << "  l=(";
      for (std::size_t j = 0; j < dec.numeric->points[i].size(); ++j)
        os << (j ? ", " : "") << dec.numeric->points[i][j];
      os << ")\n";
    }
    os << "  residual " << dec.numeric->residual << "\n";
    return os.str();
  }
  for (Index i = 0; i < dec.points.size(); ++i) {
    os << "  " << format_scalar(dec.coeffs[static_cast<std::size_t>(i)]) << " * (";
    for (int j = 0; j < dec.points[i].nvars(); ++j) os << (j ? ", " : "") << format_scalar(dec.points[i][j]);
    os << ")^" << dec.degree() << "\n";
  }
  return os.str();
}

std::string decomposition_text(const Decomposition& dec) {
  return "length " + std::to_string(dec.length()) + " (" + std::string(status_name(dec.status)) + ")\n" + roots_text(dec);
}

std::string certificate_text(const RankCertificate& cert) {
  std::string s = "f = " + format_poly(cert.target) + "\nrank " + std::to_string(cert.claimed_rank) + "\n";
  if (cert.lambda0) s += "lambda0 " + format_scalar(*cert.lambda0) + "\n";
  for (const auto& b : cert.lower_bounds)
    s += "lower " + std::to_string(b.value) + " " + std::string(provenance_name(b.provenance)) + " " + b.method + "\n";
  if (cert.upper_bound)
    s += "upper " + std::to_string(cert.upper_bound->length()) + " " +
         std::string(provenance_name(cert.upper_provenance)) + "\n" + roots_text(*cert.upper_bound);
  s += std::string("machine-certified ") + (cert.machine_certified() ? "yes" : "no") + "\n";
  return s;
}

Output cmd_ann(const std::string& f_text, int nvars, int tmax) {
  const Form f = parse_poly(f_text, nvars);
  const auto gens = ann_generators(f, tmax);
  Json degrees = Json::array(), forms = Json::array();
  std::string text;
  for (const auto& [t, m] : gens.degrees) {
    degrees.push_back({{"degree", t}, {"count", m}});
    text += "(" + std::to_string(t) + ", " + std::to_string(m) + ")\n";
  }
  for (const auto& g : gens.generators) {
    forms.push_back(format_poly(g));
    text += "  " + format_poly(g) + "\n";
  }
  return {Json{{"schema", "ann-v1"}, {"f", format_poly(f)}, {"generators", degrees}, {"forms", forms}}, text};
}

Output cmd_cat(const std::string& f_text, int nvars, int p) {
  const Form f = parse_poly(f_text, nvars);
  const auto cat = catalecticant(f, p);
  const Index rank = rank_of<Cyclotomic>(cat.entries);
  Json rows = Json::array();
  std::string text = "rank " + std::to_string(rank) + "\n";
  for (Index r = 0; r < cat.entries.rows(); ++r) {
    Json row = Json::array();
    for (Index c = 0; c < cat.entries.cols(); ++c) {
      row.push_back(scalar_json(cat.entries(r, c)));
      text += (c ? " " : "") + format_scalar(cat.entries(r, c));
    }
    text += "\n";
    rows.push_back(row);
  }
  return {Json{{"schema", "catalecticant-v1"},
               {"f", format_poly(f)},
               {"p", p},
               {"d", f.degree()},
               {"rows", cat.entries.rows()},
               {"cols", cat.entries.cols()},
               {"rank", rank},
               {"matrix", rows}},
          text};
}

Output cmd_hf(const std::string& path, int tmax) {
  const Points x = read_points(path);
  const int reg = regularity(x);
  if (tmax < 0) tmax = reg + 1;
  std::vector<int> hf;
  for (int t = 0; t <= tmax; ++t) hf.push_back(static_cast<int>(hilbert_function(x, t)));
  return {Json{{"schema", "hf-v1"}, {"hf", hf}, {"regularity", reg}, {"points", x.size()}}, join_ints(hf) + "\n"};
}

Output cmd_dh(const std::string& path, const std::string& declared) {
  const DhSequence d = declared.empty() ? dh(read_points(path)) : DhSequence(parse_int_list(declared));
  const std::string diagram = render_dh(d);
  Json j = dh_json(d);
  j["diagram"] = diagram;
  return {j, join_ints(d.values) + "\n" + diagram};
}

Output cmd_cb(const std::string& path, int d) {
  const Points x = read_points(path);
  const auto r = cayley_bacharach(x, d);
  Json j{{"schema", "cb-v1"}, {"d", d}, {"holds", r.holds}};
  j["failing_point"] = r.failing_point ? Json(*r.failing_point) : Json(nullptr);
  return {j, r.holds ? "holds\n" : "fails at point " + std::to_string(*r.failing_point) + "\n"};
}

Output cmd_liaison(const std::string& union_spec, const std::string& x_path, const std::string& x_dh) {
  const auto [d1, d2] = parse_ci(union_spec);
  const DhSequence u = ci_dh(d1, d2);
  std::optional<Points> x;
  DhSequence dx;
  if (!x_path.empty()) {
    x = read_points(x_path);
    dx = dh(*x);
  } else if (!x_dh.empty()) {
    dx = DhSequence(parse_int_list(x_dh));
  } else {
    throw UsageError("liaison needs --x or --x-dh");
  }
  const DhSequence y = liaison_dh(u, dx, d1, d2);
  Json j = dh_json(y);
  j["union"] = {{"ci", {d1, d2}}, {"dh", u.values}};
  j["x"] = dx.values;
  const std::string diagram = render_dh(u, dx);
  j["diagram"] = diagram;
  std::string text = join_ints(y.values) + "\n" + diagram;
  if (x) {
    const ResolutionDegrees res = generator_degrees(*x, regularity(*x) + 1);
    const auto linked = liaison_resolution_degrees(res, d1, d2);
    j["resolution"] = {{"x", resolution_json(res)},
                       {"residual_non_minimal", resolution_json(linked.non_minimal)},
                       {"residual", resolution_json(linked.minimal)},
                       {"cancelled", linked.cancelled}};
    text += "residual generators " + join_ints(linked.minimal.generators, ",") + " syzygies " +
            join_ints(linked.minimal.syzygies, ",") + "\n";
  }
  return {j, text};
}

Output cmd_resolve(const std::string& path, int tmax, const std::string& gens, const std::string& syz,
                   const std::string& ci) {
  ResolutionDegrees res;
  Json j{{"schema", "resolution-v1"}};
  if (!path.empty()) {
    const Points x = read_points(path);
    if (tmax < 0) tmax = regularity(x) + 1;
    res = generator_degrees(x, tmax);
    j["hilbert_series_identity"] = hilbert_series_identity(dh(x), res, x.nvars());
  } else if (!gens.empty()) {
    res.generators = parse_int_list(gens);
    if (!syz.empty()) res.syzygies = parse_int_list(syz);
    res.sort();
  } else {
    throw UsageError("resolve-degrees needs --points or --gens");
  }
  j["generators"] = res.generators;
  j["syzygies"] = res.syzygies;
  std::string text = "generators " + join_ints(res.generators, ",") + "\nsyzygies " + join_ints(res.syzygies, ",") + "\n";
  if (!ci.empty()) {
    const auto [d1, d2] = parse_ci(ci);
    const auto linked = liaison_resolution_degrees(res, d1, d2);
    j["liaison"] = {{"ci", {d1, d2}},
                    {"non_minimal", resolution_json(linked.non_minimal)},
                    {"minimal", resolution_json(linked.minimal)},
                    {"cancelled", linked.cancelled}};
    text += "linked generators " + join_ints(linked.minimal.generators, ",") + " syzygies " +
            join_ints(linked.minimal.syzygies, ",") + "\n";
  }
  return {j, text};
}

Output decomposition_output(const Decomposition& dec) {
  Json j = decomposition_json(dec);
  std::string text = "f = " + format_poly(dec.target) + "\n" + decomposition_text(dec);
  if (dec.status != DecompositionStatus::Unverified) {
    const auto ir = irredundant(dec);
    j["irredundant"] = ir.irredundant;
    if (!ir.irredundant) {
      j["witness"] = ir.witness;
      Json wc = Json::array();
      for (const auto& c : ir.witness_coeffs) wc.push_back(scalar_json(c));
      j["witness_coeffs"] = wc;
    }
    text += std::string("irredundant ") + (ir.irredundant ? "yes" : "no") + "\n";
  }
  return {j, text};
}

Output cmd_sylvester(const std::string& f_text) {
  const Form f = parse_poly(f_text, 2);
  const auto r = sylvester_rank(f);
  Json j{{"schema", "certificate-v1"},
         {"f", format_poly(f)},
         {"claimed_rank", r.rank},
         {"generator_degrees", {r.deg_f1, r.deg_f2}},
         {"witness", format_poly(r.witness)}};
  j["upper_bound"] = {{"value", r.decomposition.length()},
                      {"provenance", "COMPUTED"},
                      {"decomposition", decomposition_json(r.decomposition)}};
  j["lower_bounds"] = Json::array({{{"value", r.rank}, {"provenance", "COMPUTED"}, {"method", "sylvester"}}});
  std::string text = "rank " + std::to_string(r.rank) + "\ngenerator degrees " + std::to_string(r.deg_f1) + ", " +
                     std::to_string(r.deg_f2) + "\nwitness " + format_poly(r.witness) + "\n" +
                     decomposition_text(r.decomposition);
  return {j, text};
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Waring decompositions, apolar ideals and point-set liaison", "waring_lab"};
  app.require_subcommand(1);
  Common common;
  std::function<Output()> action;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--out", common.out_path, "write the JSON result to this path");
    sub->add_flag("--json", common.json, "print JSON instead of text");
  };

  std::string f_text, points_path, dh_list, union_spec, x_dh, gens, syz, ci, ell, lambda_text, ab, alpha, l1, l2,
      inner;
  int nvars = 0, tmax = -1, p = 1, d = 0, k = 0, n = 2, trials = 200, max_k = 4;
  std::optional<std::uint64_t> seed;
  bool ternary = false, binary = false, overcomplete = false;

  auto* ann = app.add_subcommand("ann", "minimal generators of the apolar ideal");
  ann->add_option("--f", f_text, "form, e.g. x^2*y^2*z^2")->required();
  ann->add_option("--nvars", nvars);
  ann->add_option("--tmax", tmax);
  add_common(ann);
  ann->callback([&] { action = [&] { return cmd_ann(f_text, nvars, tmax); }; });

  auto* cat = app.add_subcommand("cat", "catalecticant matrix and rank");
  cat->add_option("--f", f_text)->required();
  cat->add_option("--p", p)->required();
  cat->add_option("--nvars", nvars);
  add_common(cat);
  cat->callback([&] { action = [&] { return cmd_cat(f_text, nvars, p); }; });

  auto* hf = app.add_subcommand("hf", "Hilbert function of a point set");
  hf->add_option("--points", points_path)->required();
  hf->add_option("--tmax", tmax);
  add_common(hf);
  hf->callback([&] { action = [&] { return cmd_hf(points_path, tmax); }; });

  auto* dhc = app.add_subcommand("dh", "first difference of the Hilbert function");
  auto* dh_points = dhc->add_option("--points", points_path);
  dhc->add_option("--dh", dh_list, "declared sequence, e.g. 1,2,1,1")->excludes(dh_points);
  add_common(dhc);
  dhc->callback([&] {
    if (points_path.empty() && dh_list.empty()) throw CLI::ValidationError("dh", "needs --points or --dh");
    action = [&] { return cmd_dh(points_path, dh_list); };
  });

  auto* cb = app.add_subcommand("cb", "Cayley-Bacharach property in degree d");
  cb->add_option("--points", points_path)->required();
  cb->add_option("--d", d)->required();
  add_common(cb);
  cb->callback([&] { action = [&] { return cmd_cb(points_path, d); }; });

  auto* liaison = app.add_subcommand("liaison", "residual Dh inside a complete intersection");
  liaison->add_option("--union", union_spec, "ci:d1,d2")->required();
  liaison->add_option("--x", points_path);
  liaison->add_option("--x-dh", x_dh);
  add_common(liaison);
  liaison->callback([&] { action = [&] { return cmd_liaison(union_spec, points_path, x_dh); }; });

  auto* resolve = app.add_subcommand("resolve-degrees", "generator and syzygy degrees");
  resolve->add_option("--points", points_path);
  resolve->add_option("--tmax", tmax);
  resolve->add_option("--gens", gens);
  resolve->add_option("--syz", syz);
  resolve->add_option("--ci", ci, "ci:d1,d2 for the linked resolution");
  add_common(resolve);
  resolve->callback([&] { action = [&] { return cmd_resolve(points_path, tmax, gens, syz, ci); }; });

  auto* decompose = app.add_subcommand("decompose", "solve or construct a Waring decomposition");
  decompose->add_option("--f", f_text);
  decompose->add_option("--points", points_path);
  decompose->add_option("--ci", ci, "n,k for the monomial complete intersection");
  decompose->add_option("--alpha", alpha);
  decompose->add_option("--through", ell, "point l for the decomposition through l");
  decompose->add_option("--k", k);
  decompose->add_flag("--overcomplete", overcomplete, "binary x^k y^k from L1 X^(k+1) + L2 Y^(k+1)");
  decompose->add_option("--l1", l1);
  decompose->add_option("--l2", l2);
  add_common(decompose);
  decompose->callback([&] {
    action = [&]() -> Output {
      if (overcomplete) {
        if (k < 1 || l1.empty() || l2.empty()) throw UsageError("--overcomplete needs --k, --l1, --l2");
        return decomposition_output(binary_overcomplete(k, parse_poly(l1, 2), parse_poly(l2, 2)));
      }
      if (!ci.empty()) {
        const auto nk = parse_int_list(ci);
        if (nk.size() != 2) throw UsageError("--ci expects n,k");
        std::vector<Cyclotomic> a = alpha.empty() ? std::vector<Cyclotomic>(static_cast<std::size_t>(nk[0]), Cyclotomic(1))
                                                  : parse_scalar_list(alpha);
        return decomposition_output(monomial_ci_decomposition(nk[0], nk[1], a));
      }
      if (!ell.empty()) {
        const Point l = parse_point(ell);
        if (k < 1) throw UsageError("--through needs --k");
        return decomposition_output(decomposition_through_point(l.nvars() - 1, k, l).full_decomposition);
      }
      if (f_text.empty() || points_path.empty()) throw UsageError("decompose needs --f with --points, --ci, --through or --overcomplete");
      const Points x = read_points(points_path);
      return decomposition_output(solve_coefficients(parse_poly(f_text, x.nvars()), x));
    };
  });

  auto* syl = app.add_subcommand("sylvester", "rank of a binary form");
  syl->add_option("--f", f_text)->required();
  add_common(syl);
  syl->callback([&] { action = [&] { return cmd_sylvester(f_text); }; });

  auto* classify = app.add_subcommand("classify", "rank certificates");
  classify->add_flag("--ternary", ternary, "(xyz)^k + lambda l^(3k)");
  classify->add_flag("--binary", binary, "x^k y^k + lambda (ax+by)^(2k)");
  classify->add_option("--k", k);
  classify->add_option("--ell", ell);
  classify->add_option("--ab", ab);
  classify->add_option("--lambda", lambda_text, "scalar, lambda0 or lambda0+q");
  classify->add_option("--max-k", max_k);
  classify->add_option("--f", f_text, "generic bounds for a ternary form");
  classify->add_option("--points", points_path, "user decomposition for --f");
  add_common(classify);
  classify->callback([&] {
    action = [&]() -> Output {
      if (ternary) {
        if (k < 1 || ell.empty() || lambda_text.empty()) throw UsageError("--ternary needs --k, --ell, --lambda");
        const Point l = parse_point(ell);
        const Cyclotomic lambda =
            parse_lambda(lambda_text, [&] { return decomposition_through_point(2, k, l).lambda0; });
        const auto cert = classify_ternary_binomial(k, l, lambda, max_k);
        return {certificate_json(cert), certificate_text(cert)};
      }
      if (binary) {
        if (k < 1 || ab.empty() || lambda_text.empty()) throw UsageError("--binary needs --k, --ab, --lambda");
        const auto c = parse_scalar_list(ab);
        if (c.size() != 2) throw UsageError("--ab expects a,b");
        const Cyclotomic lambda =
            parse_lambda(lambda_text, [&] { return decomposition_through_point(1, k, Point{c[0], c[1]}).lambda0; });
        const auto r = classify_binary_binomial(k, c[0], c[1], lambda);
        Json j{{"schema", "certificate-v1"},
               {"f", format_poly(r.decomposition.target)},
               {"claimed_rank", r.rank},
               {"sylvester_rank", r.sylvester},
               {"agrees", r.agrees}};
        if (r.lambda0) j["lambda0"] = scalar_json(*r.lambda0);
        j["upper_bound"] = {{"value", r.decomposition.length()},
                            {"provenance", "COMPUTED"},
                            {"decomposition", decomposition_json(r.decomposition)}};
        j["lower_bounds"] = Json::array({{{"value", r.sylvester}, {"provenance", "COMPUTED"}, {"method", "sylvester"}}});
        return {j, "rank " + std::to_string(r.rank) + "\nsylvester " + std::to_string(r.sylvester) + "\n" +
                       decomposition_text(r.decomposition)};
      }
      if (!f_text.empty()) {
        const Form f = parse_poly(f_text, 3);
        std::optional<Points> user;
        if (!points_path.empty()) user = read_points(points_path);
        const auto b = rank_bounds(f, user);
        Json j{{"schema", "bounds-v1"}, {"f", format_poly(f)}, {"lower", b.lower}, {"lower_provenance", "COMPUTED"}};
        j["upper"] = b.upper ? Json(*b.upper) : Json(nullptr);
        if (b.upper) {
          j["upper_source"] = b.upper_source;
          j["decomposition"] = decomposition_json(*b.decomposition);
        }
        return {j, "lower " + std::to_string(b.lower) + "\nupper " + (b.upper ? std::to_string(*b.upper) : "unknown") + "\n"};
      }
      throw UsageError("classify needs --ternary, --binary or --f");
    };
  });

  auto* l0 = app.add_subcommand("lambda0", "lambda_0 from the decomposition through a point");
  l0->add_option("--n", n);
  l0->add_option("--k", k)->required();
  l0->add_option("--ell", ell)->required();
  add_common(l0);
  l0->callback([&] {
    action = [&]() -> Output {
      const Point l = parse_point(ell);
      if (l.nvars() != n + 1) throw UsageError("--ell needs n+1 coordinates");
      const auto cert = decomposition_through_point(n, k, l);
      Json j{{"schema", "lambda0-v1"},
             {"n", n},
             {"k", k},
             {"ell", point_json(l)},
             {"lambda0", scalar_json(cert.lambda0)},
             {"decomposition", decomposition_json(cert.full_decomposition)}};
      return {j, "lambda0 " + format_scalar(cert.lambda0) + "\n" + decomposition_text(cert.full_decomposition)};
    };
  });

  auto* exp = app.add_subcommand("overcomplete-experiment", "redundancy of length (k+1)^2+1 decompositions");
  exp->add_option("--k", k)->required();
  exp->add_option("--trials", trials);
  exp->add_option("--seed", seed, "falls back to WARING_LAB_SEED");
  add_common(exp);
  exp->callback([&] {
    action = [&]() -> Output {
      std::uint64_t s = 0;
      if (seed) {
        s = *seed;
      } else if (const char* env = std::getenv("WARING_LAB_SEED")) {
        try {
          s = std::stoull(env);
        } catch (const std::exception&) {
          throw UsageError(std::string("WARING_LAB_SEED is not an integer: ") + env);
        }
      }
      const auto r = overcomplete_redundancy_experiment(k, trials, s);
      Json details = Json::array();
      for (const auto& t : r.details)
        details.push_back({{"index", t.index},
                           {"seed", t.seed},
                           {"roots", t.roots},
                           {"extra_point", t.extra_point},
                           {"resamples", t.resamples},
                           {"redundant", t.redundant},
                           {"witness", t.witness}});
      Json j{{"schema", "experiment-v1"},
             {"k", r.k},
             {"trials", r.trials},
             {"seed", r.seed},
             {"redundant", r.redundant_count},
             {"counterexamples", r.counterexamples},
             {"details", details}};
      return {j, "redundant " + std::to_string(r.redundant_count) + "/" + std::to_string(r.trials) + "\n"};
    };
  });

  auto* render = app.add_subcommand("render-dh", "ASCII diagram of a Dh sequence");
  render->add_option("--dh", dh_list);
  render->add_option("--inner", inner, "sequence drawn with '#' inside the outer one");
  render->add_option("--union", union_spec, "ci:d1,d2 as the outer sequence");
  add_common(render);
  render->callback([&] {
    action = [&]() -> Output {
      DhSequence outer;
      if (!union_spec.empty()) {
        const auto [a, b] = parse_ci(union_spec);
        outer = ci_dh(a, b);
      } else if (!dh_list.empty()) {
        outer = DhSequence(parse_int_list(dh_list));
      } else {
        throw UsageError("render-dh needs --dh or --union");
      }
      std::optional<DhSequence> in;
      if (!inner.empty()) in = DhSequence(parse_int_list(inner));
      const std::string diagram = render_dh(outer, in);
      Json j = dh_json(outer);
      j["diagram"] = diagram;
      return {j, diagram};
    };
  });

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 1;
  }

  auto emit_error = [&](const Json& j, const std::string& message, int code) {
    err << "error: " << message << "\n";
    if (common.json) out << j.dump(2) << "\n";
    if (!common.out_path.empty()) {
      std::ofstream f(common.out_path);
      f << j.dump(2) << "\n";
    }
    return code;
  };
  try {
    const Output o = action();
    if (!common.out_path.empty()) {
      std::ofstream f(common.out_path);
      if (!f) throw UsageError("cannot write " + common.out_path);
      f << o.json.dump(2) << "\n";
    }
    if (common.json) out << o.json.dump(2) << "\n";
    else out << o.text;
    return 0;
  } catch (const UsageError& e) {
    return emit_error(Json{{"schema", "error-v1"}, {"error", {{"code", "Usage"}, {"message", e.what()}}}}, e.what(), 1);
  } catch (const Error& e) {
    const bool usage = e.code() == ErrorCode::SyntaxError || e.code() == ErrorCode::NonHomogeneous ||
                       e.code() == ErrorCode::InvalidArgument;
    return emit_error(error_json(e), std::string(error_code_name(e.code())) + ": " + e.what(), usage ? 1 : 2);
  } catch (const nlohmann::json::exception& e) {
    return emit_error(Json{{"schema", "error-v1"}, {"error", {{"code", "Usage"}, {"message", e.what()}}}}, e.what(), 1);
  }
}

}  // namespace waring
