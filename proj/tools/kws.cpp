// kws — command-line front end for the kummerws shared library.
//
// Everything below talks to the library through the C interface in
// kummerws.h only.

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "kummerws.h"

namespace {

using json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 2;
constexpr int kExitCheckFailed = 3;

struct CliError {
  int exit_code;
  std::string message;
};

[[noreturn]] void fail(int code, const std::string& message) {
  throw CliError{code, message};
}

void require_ok(kws_status s) {
  if (s == KWS_OK)
    return;
  const std::string detail = kws_last_error();
  const std::string msg = std::string(kws_status_str(s)) + (detail.empty() ? "" : ": " + detail);
  fail(s == KWS_ECHECK ? kExitCheckFailed : kExitInvalid, msg);
}

std::vector<int64_t> parse_lambdas(const std::string& csv) {
  std::vector<int64_t> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      out.push_back(std::stoll(item));
    } catch (const std::exception&) {
      fail(kExitInvalid, "bad multiplicity list: " + csv);
    }
  }
  if (out.empty())
    fail(kExitInvalid, "empty multiplicity list");
  return out;
}

// "inf" or "ram:<1-based index>"
int parse_place(const std::string& s) {
  if (s == "inf")
    return KWS_PLACE_INF;
  if (s.rfind("ram:", 0) == 0) {
    try {
      const int idx = std::stoi(s.substr(4));
      if (idx >= 1)
        return idx;
    } catch (const std::exception&) {
    }
  }
  fail(kExitInvalid, "bad place '" + s + "' (expected inf or ram:<index>)");
}

std::pair<int, int> parse_places(const std::string& s) {
  const auto comma = s.find(',');
  if (comma == std::string::npos)
    fail(kExitInvalid, "expected two comma-separated places");
  return {parse_place(s.substr(0, comma)), parse_place(s.substr(comma + 1))};
}

struct CurveHandle {
  kws_curve* c = nullptr;
  ~CurveHandle() { kws_curve_destroy(c); }
};

struct FamilyHandle {
  kws_family* f = nullptr;
  ~FamilyHandle() { kws_family_destroy(f); }
};

void make_curve(int64_t m, const std::vector<int64_t>& lambdas, CurveHandle& out) {
  require_ok(kws_curve_create(m, lambdas.data(), lambdas.size(), &out.c));
}

std::vector<std::pair<int64_t, int64_t>> pairvec_to_vector(kws_pairvec* v) {
  std::vector<std::pair<int64_t, int64_t>> out;
  out.reserve(kws_pairvec_size(v));
  for (size_t i = 0; i < kws_pairvec_size(v); ++i) {
    int64_t a = 0, b = 0;
    kws_pairvec_at(v, i, &a, &b);
    out.emplace_back(a, b);
  }
  kws_pairvec_destroy(v);
  return out;
}

json params_to_json(const kws_code_params& p) {
  json out;
  out["n"] = p.n;
  out["k"] = p.k;
  out["d_lower"] = p.d_lower;
  if (p.has_exact)
    out["d_exact"] = p.d_exact;
  out["provenance"] = p.provenance;
  return out;
}

bool g_no_meta = false;

void emit(const std::string& command, json inputs, json results) {
  json record;
  record["schema_version"] = "1";
  record["command"] = command;
  record["inputs"] = std::move(inputs);
  record["results"] = std::move(results);
  if (!g_no_meta)
    record["meta"] = {{"generated_at", static_cast<int64_t>(std::time(nullptr))}};
  std::cout << record.dump(2) << '\n';
}

// Output files land in $KWS_OUTPUT_DIR when set and the path is relative.
std::string resolve_output(const std::string& path) {
  const char* dir = std::getenv("KWS_OUTPUT_DIR");
  if (!dir || path.empty() || path.front() == '/')
    return path;
  return std::string(dir) + "/" + path;
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out)
    fail(kExitInvalid, "cannot open output file " + path);
  out << contents;
}

// ---- subcommands -----------------------------------------------------------

int cmd_gaps(int64_t m, const std::string& lambdas_csv, const std::string& place_str) {
  const auto lambdas = parse_lambdas(lambdas_csv);
  const int place = parse_place(place_str);
  CurveHandle curve;
  make_curve(m, lambdas, curve);
  kws_intvec* gaps = nullptr;
  require_ok(kws_gap_set(curve.c, place, &gaps));
  json values = json::array();
  for (size_t i = 0; i < kws_intvec_size(gaps); ++i)
    values.push_back(kws_intvec_at(gaps, i));
  kws_intvec_destroy(gaps);
  emit("gaps", {{"m", m}, {"lambdas", lambdas}, {"place", place_str}},
       {{"genus", kws_curve_genus(curve.c)}, {"gaps", std::move(values)}});
  return kExitOk;
}

int cmd_gamma(int64_t m, const std::string& lambdas_csv, const std::string& places_str) {
  const auto lambdas = parse_lambdas(lambdas_csv);
  const auto [p1, p2] = parse_places(places_str);
  CurveHandle curve;
  make_curve(m, lambdas, curve);
  kws_pairvec* pairs = nullptr;
  require_ok(kws_gamma(curve.c, p1, p2, &pairs));
  json out = json::array();
  for (const auto& [a, b] : pairvec_to_vector(pairs))
    out.push_back({a, b});
  emit("gamma", {{"m", m}, {"lambdas", lambdas}, {"places", places_str}},
       {{"count", out.size()}, {"pairs", std::move(out)}});
  return kExitOk;
}

int cmd_puregaps(int64_t m, const std::string& lambdas_csv, const std::string& places_str,
                 const std::string& method) {
  const auto lambdas = parse_lambdas(lambdas_csv);
  const auto [p1, p2] = parse_places(places_str);
  kws_puregap_method mode = KWS_PUREGAPS_GLB;
  if (method == "sigma")
    mode = KWS_PUREGAPS_SIGMA;
  else if (method == "both")
    mode = KWS_PUREGAPS_BOTH;
  else if (method != "glb")
    fail(kExitInvalid, "method must be glb, sigma or both");
  CurveHandle curve;
  make_curve(m, lambdas, curve);
  kws_pairvec* pairs = nullptr;
  require_ok(kws_pure_gaps(curve.c, p1, p2, mode, &pairs));
  json out = json::array();
  for (const auto& [a, b] : pairvec_to_vector(pairs))
    out.push_back({a, b});
  json results = {{"count", out.size()}, {"pure_gaps", std::move(out)}};
  if (method == "both")
    results["methods_agree"] = true;
  emit("puregaps",
       {{"m", m}, {"lambdas", lambdas}, {"places", places_str}, {"method", method}},
       std::move(results));
  return kExitOk;
}

int cmd_code(const std::string& family, int64_t p, int64_t q, int64_t n, int64_t m,
             const std::string& construction, std::optional<int64_t> a,
             std::optional<int64_t> k_mult, std::optional<int64_t> c1,
             std::optional<int64_t> c2) {
  kws_code_params params{};
  const auto need = [&](const std::optional<int64_t>& v, const char* flag) {
    if (!v)
      fail(kExitInvalid, std::string("construction ") + construction + " needs --" + flag);
    return *v;
  };
  if (construction == "thm51") {
    FamilyHandle f;
    require_ok(kws_family_create(family.c_str(), p, q, n, m, &f.f));
    require_ok(kws_one_point_code(f.f, need(a, "a"), &params));
  } else if (construction == "cor") {
    require_ok(kws_corollary_code(family.c_str(), p, q, n, need(a, "a"), &params));
  } else if (construction == "prop56") {
    require_ok(kws_bm_one_point_code(q, n, m, need(k_mult, "kmult"), &params));
  } else if (construction == "prop62") {
    require_ok(kws_two_point_code_inf(q, n, need(a, "a"), &params));
  } else if (construction == "prop63") {
    require_ok(kws_two_point_code_01(n, need(c1, "c1"), need(c2, "c2"), &params));
  } else {
    fail(kExitInvalid, "construction must be one of thm51, cor, prop56, prop62, prop63");
  }
  json inputs = {{"family", family}, {"construction", construction}};
  if (p) inputs["p"] = p;
  if (q) inputs["q"] = q;
  if (n) inputs["n"] = n;
  if (m) inputs["m"] = m;
  if (a) inputs["a"] = *a;
  if (k_mult) inputs["kmult"] = *k_mult;
  if (c1) inputs["c1"] = *c1;
  if (c2) inputs["c2"] = *c2;
  emit("code", std::move(inputs), params_to_json(params));
  return kExitOk;
}

int cmd_tables(int which, bool check, const std::string& out_path) {
  char* csv = nullptr;
  require_ok(kws_table_csv(which, &csv));
  const std::string content = csv;
  kws_string_destroy(csv);
  if (!out_path.empty())
    write_file(resolve_output(out_path), content);
  else
    std::cout << content;
  if (check) {
    int ok = 0;
    require_ok(kws_table_check(which, &ok));
    if (!ok) {
      std::cerr << "table " << which << " does not match the golden rows\n";
      return kExitCheckFailed;
    }
    std::cerr << "table " << which << ": all rows match\n";
  }
  return kExitOk;
}

int cmd_verify(int64_t mmax, int64_t rmax, int threads) {
  kws_verify_report report{};
  char* message = nullptr;
  const kws_status s = kws_verify_sweep(mmax, rmax, threads, &report, &message);
  json results = {{"curves", report.curves},
                  {"places", report.places},
                  {"gamma_pairs", report.gamma_pairs},
                  {"failures", report.failures}};
  if (message) {
    results["first_failure"] = message;
    kws_string_destroy(message);
  }
  emit("verify", {{"mmax", mmax}, {"rmax", rmax}}, std::move(results));
  if (s == KWS_ECHECK || report.failures > 0)
    return kExitCheckFailed;
  require_ok(s);
  return kExitOk;
}

std::string scatter_svg(const std::vector<std::pair<int64_t, int64_t>>& gamma,
                        const std::vector<std::pair<int64_t, int64_t>>& pure) {
  int64_t max_x = 1, max_y = 1;
  for (const auto& [x, y] : gamma) {
    max_x = std::max(max_x, x);
    max_y = std::max(max_y, y);
  }
  for (const auto& [x, y] : pure) {
    max_x = std::max(max_x, x);
    max_y = std::max(max_y, y);
  }
  const double w = 640.0, h = 640.0, margin = 40.0;
  const double sx = (w - 2 * margin) / static_cast<double>(max_x);
  const double sy = (h - 2 * margin) / static_cast<double>(max_y);
  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\"" << h
      << "\" viewBox=\"0 0 " << w << " " << h << "\">\n";
  svg << "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  svg << "  <line x1=\"" << margin << "\" y1=\"" << h - margin << "\" x2=\"" << w - margin
      << "\" y2=\"" << h - margin << "\" stroke=\"black\"/>\n";
  svg << "  <line x1=\"" << margin << "\" y1=\"" << margin << "\" x2=\"" << margin << "\" y2=\""
      << h - margin << "\" stroke=\"black\"/>\n";
  const auto dot = [&](int64_t x, int64_t y, const char* color) {
    svg << "  <circle cx=\"" << margin + sx * static_cast<double>(x) << "\" cy=\""
        << h - margin - sy * static_cast<double>(y) << "\" r=\"2.5\" fill=\"" << color
        << "\"/>\n";
  };
  for (const auto& [x, y] : gamma)
    dot(x, y, "black");
  for (const auto& [x, y] : pure)
    dot(x, y, "red");
  svg << "</svg>\n";
  return svg.str();
}

int cmd_plot(int64_t m, const std::string& lambdas_csv, const std::string& places_str,
             const std::string& out_prefix) {
  const auto lambdas = parse_lambdas(lambdas_csv);
  const auto [p1, p2] = parse_places(places_str);
  CurveHandle curve;
  make_curve(m, lambdas, curve);
  kws_pairvec* gamma_raw = nullptr;
  require_ok(kws_gamma(curve.c, p1, p2, &gamma_raw));
  const auto gamma = pairvec_to_vector(gamma_raw);
  kws_pairvec* pure_raw = nullptr;
  require_ok(kws_pure_gaps(curve.c, p1, p2, KWS_PUREGAPS_GLB, &pure_raw));
  const auto pure = pairvec_to_vector(pure_raw);
  std::ostringstream csv;
  csv << "set,x,y\n";
  for (const auto& [x, y] : gamma)
    csv << "gamma," << x << ',' << y << '\n';
  for (const auto& [x, y] : pure)
    csv << "puregap," << x << ',' << y << '\n';
  const std::string csv_path = resolve_output(out_prefix + ".csv");
  const std::string svg_path = resolve_output(out_prefix + ".svg");
  write_file(csv_path, csv.str());
  write_file(svg_path, scatter_svg(gamma, pure));
  emit("plot", {{"m", m}, {"lambdas", lambdas}, {"places", places_str}},
       {{"gamma_count", gamma.size()},
        {"puregap_count", pure.size()},
        {"csv", csv_path},
        {"svg", svg_path}});
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Weierstrass gap sets, pure gaps and AG code parameters on Kummer extensions"};
  app.require_subcommand(1);
  app.add_flag("--no-meta", g_no_meta, "omit the timestamp field from output records");

  int64_t m = 0, q = 0, n = 0, p = 0, fam_m = 0;
  std::string lambdas, place, places, method = "glb", family, construction;
  std::optional<int64_t> a, k_mult, c1, c2;
  int which = 0;
  bool check = false;
  std::string out_path, out_prefix;
  int64_t mmax = 12, rmax = 4;
  int threads = 0;

  auto* gaps = app.add_subcommand("gaps", "gap set at a totally ramified place");
  gaps->fallthrough();
  gaps->add_option("--m", m)->required();
  gaps->add_option("--lambdas", lambdas)->required();
  gaps->add_option("--place", place)->required();

  auto* gamma = app.add_subcommand("gamma", "minimal generating set at two places");
  gamma->fallthrough();
  gamma->add_option("--m", m)->required();
  gamma->add_option("--lambdas", lambdas)->required();
  gamma->add_option("--places", places)->required();

  auto* puregaps = app.add_subcommand("puregaps", "pure gaps at two places");
  puregaps->fallthrough();
  puregaps->add_option("--m", m)->required();
  puregaps->add_option("--lambdas", lambdas)->required();
  puregaps->add_option("--places", places)->required();
  puregaps->add_option("--method", method, "glb, sigma or both");

  auto* code = app.add_subcommand("code", "AG code parameters");
  code->fallthrough();
  code->add_option("--family", family);
  code->add_option("--construction", construction)->required();
  code->add_option("--p", p);
  code->add_option("--q", q);
  code->add_option("--n", n);
  code->add_option("--m", fam_m);
  code->add_option("--a", a);
  code->add_option("--kmult", k_mult);
  code->add_option("--c1", c1);
  code->add_option("--c2", c2);

  auto* tables = app.add_subcommand("tables", "reproduce the code tables as CSV");
  tables->fallthrough();
  tables->add_option("--which", which)->required();
  tables->add_flag("--check", check, "diff against embedded golden values");
  tables->add_option("--out", out_path, "write CSV to a file instead of stdout");

  auto* verify = app.add_subcommand("verify", "invariant sweep over all small curves");
  verify->fallthrough();
  verify->add_option("--mmax", mmax);
  verify->add_option("--rmax", rmax);
  verify->add_option("--threads", threads);

  auto* plot = app.add_subcommand("plot", "scatter of Gamma and the pure gaps");
  plot->fallthrough();
  plot->add_option("--m", m)->required();
  plot->add_option("--lambdas", lambdas)->required();
  plot->add_option("--places", places)->required();
  plot->add_option("--out", out_prefix, "output path prefix")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInvalid;
  }

  try {
    if (gaps->parsed())
      return cmd_gaps(m, lambdas, place);
    if (gamma->parsed())
      return cmd_gamma(m, lambdas, places);
    if (puregaps->parsed())
      return cmd_puregaps(m, lambdas, places, method);
    if (code->parsed())
      return cmd_code(family, p, q, n, fam_m, construction, a, k_mult, c1, c2);
    if (tables->parsed())
      return cmd_tables(which, check, out_path);
    if (verify->parsed())
      return cmd_verify(mmax, rmax, threads);
    if (plot->parsed())
      return cmd_plot(m, lambdas, places, out_prefix);
  } catch (const CliError& e) {
    std::cerr << "error: " << e.message << '\n';
    return e.exit_code;
  }
  return kExitInvalid;
}
