// pi0 — exact detectors, Frobenius statistics, envelope probes and group
// counts over F_ell, wired into reproducible CLI runs with JSON reports.
//
// Exit codes: 0 ok; 1 usage/validation error; 2 singular curve; 3 unwritable
// or unreadable path; 4 empty input; 5 nori needs ell > n; 6 enumeration
// budget exceeded (partial report emitted).

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "pi0/pi0.hpp"

namespace {

struct empty_input_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::pair<long long, long long> parse_pair(const std::string& text, const char* what) {
  auto comma = text.find(',');
  if (comma == std::string::npos)
    throw CLI::ValidationError(std::string(what) + " must be 'x,y', got '" + text + "'");
  try {
    return {std::stoll(text.substr(0, comma)), std::stoll(text.substr(comma + 1))};
  } catch (const std::exception&) {
    throw CLI::ValidationError(std::string(what) + " must be 'x,y', got '" + text + "'");
  }
}

// Inclusive prime range "a..b" (or a single prime "a").
std::vector<std::uint64_t> parse_ell_range(const std::string& text) {
  std::uint64_t lo = 0, hi = 0;
  auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      lo = hi = std::stoull(text);
    } else {
      lo = std::stoull(text.substr(0, dots));
      hi = std::stoull(text.substr(dots + 2));
    }
  } catch (const std::exception&) {
    throw CLI::ValidationError("--ell-range must be 'a..b', got '" + text + "'");
  }
  if (lo > hi) throw CLI::ValidationError("--ell-range is empty: " + text);
  std::vector<std::uint64_t> out;
  for (std::uint64_t p : pi0::primes_up_to(hi))
    if (p >= lo) out.push_back(p);
  if (out.empty()) throw CLI::ValidationError("no primes in range " + text);
  return out;
}

void emit(const pi0::json& j, const std::string& out_path) {
  std::string text = pi0::dump_json(j);
  if (out_path.empty())
    std::cout << text;
  else
    pi0::write_text_file(out_path, text);
}

struct Options {
  std::string curve, in_path, out_path, spec_text = "cartan2", family, generators, expected,
              ell_range;
  std::uint64_t cutoff = 0, ell = 0, budget = 0, seed = pi0::kDefaultSeed;
  std::uint64_t mod = 0;
  std::string table_out, csv_out;
};

int cmd_ap_scan(const Options& o) {
  auto [a, b] = parse_pair(o.curve, "--curve");
  pi0::CurveSpec curve{a, b, ""};
  auto records = pi0::frobenius_stream(curve, o.cutoff);
  pi0::persist_csv_file(records, o.out_path);
  auto bad = pi0::bad_primes(curve, o.cutoff);
  pi0::json j{{"command", "ap-scan"},
              {"curve", {{"A", a}, {"B", b}}},
              {"cutoff", o.cutoff},
              {"rows", records.size()},
              {"out", o.out_path},
              {"bad_primes", bad.primes}};
  std::cout << pi0::dump_json(j);
  return 0;
}

int cmd_detect(const Options& o) {
  pi0::TensorSpec spec = pi0::parse_tensor_spec(o.spec_text);
  std::vector<pi0::FrobeniusRecord> records;
  std::uint64_t cutoff = 0;
  pi0::json source;
  if (!o.in_path.empty()) {
    auto ingest = pi0::ingest_csv_file(o.in_path);
    records = std::move(ingest.records);
    source = pi0::json{{"csv", o.in_path}, {"rejected_rows", ingest.rejected.size()}};
    cutoff = records.empty() ? 0 : records.back().p + 1;
  } else {
    auto [a, b] = parse_pair(o.curve, "--curve");
    pi0::CurveSpec curve{a, b, ""};
    records = pi0::frobenius_stream(curve, o.cutoff);
    source = pi0::json{{"curve", {{"A", a}, {"B", b}}}};
    cutoff = o.cutoff;
  }
  if (records.empty()) throw empty_input_error("no usable records in input");

  std::optional<std::pair<long, long>> expected;
  if (!o.expected.empty()) {
    auto [k, den] = parse_pair(o.expected, "--expected");
    expected = std::make_pair(static_cast<long>(k), static_cast<long>(den));
  }
  std::optional<std::uint64_t> mod;
  if (o.mod) mod = o.mod;

  pi0::DensityReport rep = pi0::density_test(records, spec, cutoff, expected, mod);
  pi0::json j{{"command", "detect"}, {"source", source}, {"density", pi0::to_json(rep)}};
  if (mod) {
    std::vector<pi0::CharPoint<pi0::Fp>> reduced;
    reduced.reserve(records.size());
    for (const auto& r : records)
      if (r.p % *mod != 0) reduced.push_back(pi0::reduce_record(r, *mod));
    j["classification"] = pi0::to_json(pi0::classify_gl2_image(reduced, *mod));
  }
  emit(j, o.out_path);
  return 0;
}

int cmd_nori(const Options& o) {
  std::ifstream in(o.generators);
  if (!in) throw pi0::io_error("cannot read '" + o.generators + "'");
  pi0::json spec = pi0::json::parse(in);
  std::uint64_t ell = o.ell ? o.ell : spec.value("ell", std::uint64_t{0});
  if (!ell) throw CLI::ValidationError("no ell: pass --ell or put \"ell\" in the generators file");
  if (!spec.contains("generators") || !spec["generators"].is_array() || spec["generators"].empty())
    throw empty_input_error("generators file has no \"generators\" array");

  std::vector<pi0::Mat<pi0::Fp>> gens;
  int n = 0;
  for (const auto& gj : spec["generators"]) {
    const int rows = static_cast<int>(gj.size());
    if (n == 0) n = rows;
    pi0::Mat<pi0::Fp> m(rows);
    for (int i = 0; i < rows; ++i) {
      if (static_cast<int>(gj[i].size()) != rows)
        throw CLI::ValidationError("generator matrices must be square");
      for (int j = 0; j < rows; ++j)
        m.at(i, j) = pi0::Fp(ell, gj[i][j].get<long long>());
    }
    gens.push_back(std::move(m));
  }

  std::uint64_t budget = o.budget ? o.budget : pi0::kDefaultEnumBudget;
  pi0::FiniteSubgroup G(ell, n, std::move(gens));
  pi0::NoriReport rep = pi0::nori_lie_dimension(G, budget, o.seed);
  pi0::json j{{"command", "nori"}, {"report", pi0::to_json(rep)}};
  j["partial"] = !rep.enumeration_complete;
  emit(j, o.out_path);
  return rep.enumeration_complete ? 0 : 6;
}

int cmd_orders(const Options& o) {
  auto ells = parse_ell_range(o.ell_range);
  pi0::GroupSpec g = pi0::parse_group(o.family, ells.front());
  std::vector<pi0::CountReport> reports = pi0::verify_gpbound(g, ells);
  pi0::json j{{"command", "orders"}, {"family", g.name()}, {"rows", pi0::to_json(reports)}};
  emit(j, o.out_path);
  if (!o.out_path.empty() || !o.table_out.empty()) {
    std::string table = pi0::render_count_table(reports);
    if (o.table_out.empty())
      std::cout << table;
    else
      pi0::write_text_file(o.table_out, table);
  }
  if (!o.csv_out.empty()) pi0::write_text_file(o.csv_out, pi0::count_reports_csv(reports));
  return 0;
}

int cmd_slice(const Options& o) {
  auto ells = parse_ell_range(o.ell_range);
  pi0::TensorSpec spec = pi0::parse_tensor_spec(o.spec_text);
  pi0::GroupSpec g = pi0::parse_group(o.family, ells.front());
  std::uint64_t budget = o.budget ? o.budget : 5'000'000;

  std::vector<pi0::CountReport> rows;
  bool exceeded = false;
  std::string exceeded_at;
  for (std::uint64_t ell : ells) {
    try {
      rows.push_back(pi0::count_slice(pi0::GroupSpec::make(g.family, g.param, ell), spec, budget));
    } catch (const pi0::budget_exceeded_error& e) {
      exceeded = true;
      exceeded_at = e.what();
      break;
    }
  }
  pi0::ScalingStudy st;
  for (const auto& r : rows) {
    pi0::BigRat ratio = *r.slice_ratio;
    pi0::BigRat scaled = ratio * pi0::BigRat(static_cast<unsigned long>(r.ell));
    if (!st.max_ratio_times_ell || scaled > *st.max_ratio_times_ell) st.max_ratio_times_ell = scaled;
    if (!st.min_ratio || ratio < *st.min_ratio) st.min_ratio = ratio;
  }
  st.rows = std::move(rows);

  pi0::json j{{"command", "slice"},
              {"family", g.name()},
              {"spec", pi0::to_json(spec)},
              {"study", pi0::to_json(st)},
              {"partial", exceeded}};
  if (exceeded) j["budget_error"] = exceeded_at;
  emit(j, o.out_path);
  if (!o.out_path.empty() || !o.table_out.empty()) {
    std::string table = pi0::render_count_table(st.rows);
    if (o.table_out.empty())
      std::cout << table;
    else
      pi0::write_text_file(o.table_out, table);
  }
  if (!o.csv_out.empty()) pi0::write_text_file(o.csv_out, pi0::count_reports_csv(st.rows));
  return exceeded ? 6 : 0;
}

// Options whose values may begin with '-' (negative curve coefficients);
// fold "--opt value" into "--opt=value" so the parser cannot mistake the
// value for a flag.
std::vector<std::string> preprocess(int argc, char** argv) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) {
    std::string a = argv[i];
    if ((a == "--curve" || a == "--expected") && i + 1 < argc) {
      args.push_back(a + "=" + argv[++i]);
    } else {
      args.push_back(std::move(a));
    }
  }
  return args;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact component-group comparison toolkit"};
  app.set_config("--config");
  app.require_subcommand(1);

  Options o;

  auto* scan = app.add_subcommand("ap-scan", "write Frobenius trace CSV for an elliptic curve");
  scan->add_option("--curve", o.curve, "coefficients A,B of y^2 = x^3 + Ax + B")->required();
  scan->add_option("--cutoff", o.cutoff, "record all good primes p < cutoff")
      ->required()
      ->check(CLI::Range(std::uint64_t{3}, std::uint64_t{1} << 31));
  scan->add_option("--out", o.out_path, "output CSV path")->required();

  auto* detect = app.add_subcommand("detect", "run the component detector over Frobenius records");
  detect->add_option("--in", o.in_path, "input CSV of p,ap rows");
  detect->add_option("--curve", o.curve, "coefficients A,B (with --cutoff)");
  detect->add_option("--cutoff", o.cutoff, "prime cutoff when --curve is used");
  detect->add_option("--spec", o.spec_text, "tensor spec preset or triples a,b,m;...");
  detect->add_option("--mod", o.mod, "evaluate mod this prime and classify the image");
  detect->add_option("--expected", o.expected, "expected density k,order-of-pi0");
  detect->add_option("--out", o.out_path, "JSON report path (default stdout)");

  auto* nori = app.add_subcommand("nori", "unipotent-envelope probe of a finite matrix group");
  nori->add_option("--generators", o.generators, "JSON file with ell and generator matrices")
      ->required();
  nori->add_option("--ell", o.ell, "field characteristic (overrides the file)");
  nori->add_option("--budget", o.budget, "enumeration budget (default 1000000)");
  nori->add_option("--seed", o.seed, "word-sampling seed");
  nori->add_option("--out", o.out_path, "JSON report path (default stdout)");

  auto* orders = app.add_subcommand("orders", "exact group orders and order bounds");
  orders->add_option("--family", o.family, "gl<n>|sl<n>|sp4|gsp4|gm<r>")->required();
  orders->add_option("--ell-range", o.ell_range, "inclusive prime range a..b")->required();
  orders->add_option("--out", o.out_path, "JSON report path (default stdout)");
  orders->add_option("--table", o.table_out, "text table path");
  orders->add_option("--csv", o.csv_out, "plotting CSV path");

  auto* slice = app.add_subcommand("slice", "exhaustive detector-slice counts over F_ell");
  slice->add_option("--family", o.family,
                    "gl<n>|sl<n>|sp4|gsp4|gm<r>|cartan-split|cartan-nonsplit")
      ->required();
  slice->add_option("--spec", o.spec_text, "tensor spec preset or triples");
  slice->add_option("--ell-range", o.ell_range, "inclusive prime range a..b")->required();
  slice->add_option("--budget", o.budget, "enumeration budget (default 5000000)");
  slice->add_option("--out", o.out_path, "JSON report path (default stdout)");
  slice->add_option("--table", o.table_out, "text table path");
  slice->add_option("--csv", o.csv_out, "plotting CSV path");

  auto args = preprocess(argc, argv);
  try {
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;  // fold CLI11's exit-code zoo into "1 = usage"
  }

  try {
    if (scan->parsed()) return cmd_ap_scan(o);
    if (detect->parsed()) {
      if (o.in_path.empty() == o.curve.empty())
        throw CLI::ValidationError("detect needs exactly one of --in or --curve/--cutoff");
      return cmd_detect(o);
    }
    if (nori->parsed()) return cmd_nori(o);
    if (orders->parsed()) return cmd_orders(o);
    if (slice->parsed()) return cmd_slice(o);
  } catch (const pi0::singular_curve_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const pi0::io_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const empty_input_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const pi0::dimension_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 5;
  } catch (const pi0::budget_exceeded_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 6;
  } catch (const CLI::Error& e) {
    std::cerr << "error: " << e.get_name() << ": " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
