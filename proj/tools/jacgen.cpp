// Command-line workbench: emits the Euler-characteristic tables and series,
// runs the necklace and universal-Jacobian classification routines, and
// manages the on-disk series cache.
//
// Exit codes: 0 success, 2 invalid flags or input, 3 a wall of the stability
// decomposition was hit exactly, 4 the requested truncation leaves the Tate
// regime, 1 unexpected internal failure.

#include <jacgen/genfun.hpp>
#include <jacgen/necklace.hpp>
#include <jacgen/series_io.hpp>
#include <jacgen/universal.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace jacgen;
using ordered_json = nlohmann::ordered_json;

std::string partition_str(const Partition& lam) {
  std::string s = "[";
  for (size_t i = 0; i < lam.size(); ++i) {
    s += std::to_string(lam[i]);
    if (i + 1 < lam.size()) s += ",";
  }
  return s + "]";
}

std::string multideg_str(const MultiDeg& d) {
  std::string s = "(";
  for (size_t i = 0; i < d.size(); ++i) {
    s += std::to_string(d[i]);
    if (i + 1 < d.size()) s += ",";
  }
  return s + ")";
}

std::string coeff_pretty(const Motive& m) {
  if (m.is_tate()) return m.tate().pretty();
  return m.str();
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) throw CLI::ValidationError("list", "empty entry in list");
    out.push_back(std::stoi(item));
  }
  return out;
}

std::vector<Rat> parse_rat_list(const std::string& text) {
  std::vector<Rat> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_fraction(item));
  return out;
}

ordered_json fcj_to_json(const NecklaceFcj& fcj) {
  ordered_json j;
  j["n"] = fcj.n;
  j["d"] = fcj.d;
  j["rho"] = fcj.rho;
  j["seq"] = fcj.seq;
  j["base"] = fcj.base;
  j["components"] = fcj.components;
  ordered_json nodes = ordered_json::array();
  for (const auto& [node, md] : fcj.nodes) {
    ordered_json e;
    e["node"] = node;
    e["multidegree"] = md;
    nodes.push_back(std::move(e));
  }
  j["nodes"] = std::move(nodes);
  j["smoothable"] = fcj.smoothable;
  if (fcj.smoothable) {
    ordered_json phi = ordered_json::array();
    for (const auto& v : polarisation_of(fcj).phi)
      phi.push_back(format_fraction(v));
    j["polarisation"] = std::move(phi);
  }
  return j;
}

ordered_json ffunction_to_json(const FFunction& f) {
  ordered_json values = ordered_json::array();
  for (uint32_t mask = 1; mask <= f.full_mask(); ++mask) {
    ordered_json e;
    e["subset"] = mask_to_elements(mask);
    e["value"] = f.values[mask];
    values.push_back(std::move(e));
  }
  ordered_json j;
  j["n"] = f.n;
  j["values"] = std::move(values);
  return j;
}

FFunction ffunction_from_json(const ordered_json& j) {
  FFunction f = FFunction::zero(j.at("n").get<int>());
  size_t seen = 0;
  for (const auto& e : j.at("values")) {
    uint32_t mask = elements_to_mask(e.at("subset").get<std::vector<int>>());
    f.value(mask) = e.at("value").get<long long>();
    ++seen;
  }
  if (seen != f.full_mask())
    throw CLI::ValidationError("f-file", "wrong number of subset values");
  return f;
}

ordered_json gfunction_to_json(const GFunction& g) {
  ordered_json values = ordered_json::array();
  for (const auto& [mask, v] : g.values) {
    ordered_json e;
    e["subset"] = mask_to_elements(mask);
    e["value"] = v;
    values.push_back(std::move(e));
  }
  ordered_json j;
  j["n"] = g.n;
  j["values"] = std::move(values);
  return j;
}

GFunction gfunction_from_json(const ordered_json& j) {
  GFunction g = GFunction::zero(j.at("n").get<int>());
  size_t seen = 0;
  for (const auto& e : j.at("values")) {
    uint32_t mask = elements_to_mask(e.at("subset").get<std::vector<int>>());
    if (!g.values.count(mask))
      throw CLI::ValidationError("g-file", "subset needs at least two elements");
    g.values[mask] = e.at("value").get<long long>();
    ++seen;
  }
  if (seen != g.values.size())
    throw CLI::ValidationError("g-file", "wrong number of subset values");
  return g;
}

ordered_json certificate_to_json(const FarkasCertificate& cert) {
  ordered_json lines = ordered_json::array();
  for (const auto& l : cert.lines) {
    ordered_json e;
    e["subset"] = mask_to_elements(l.subset_mask);
    e["side"] = l.upper ? "upper" : "lower";
    e["multiplier"] = format_fraction(l.weight);
    lines.push_back(std::move(e));
  }
  return lines;
}

FFunction resolve_ffunction(const std::string& named, const std::string& file,
                            int n) {
  if (!file.empty()) {
    return ffunction_from_json(ordered_json::parse(read_file(file)));
  }
  if (n < 1 || n > 20)
    throw CLI::ValidationError("--n", "marking count must be between 1 and 20");
  if (named == "exotic") return exotic_f(n);
  if (named == "zero") return FFunction::zero(n);
  throw CLI::ValidationError("--f", "expected 'exotic', 'zero' or --file");
}

struct Output {
  std::ostringstream buf;
  void flush() { std::cout << buf.str() << std::flush; }
};

// -------------------------------------------------------------- gf / table

int run_gf(const std::string& series, int max_n, const std::string& basis_name_,
           const std::string& format, Output& out) {
  SeriesTag tag = series_tag_from_name(series);
  Basis basis = Basis::schur;
  if (basis_name_ == "schur")
    basis = Basis::schur;
  else if (basis_name_ == "powersum")
    basis = Basis::powersum;
  else if (basis_name_ == "homogeneous")
    basis = Basis::homogeneous;
  else
    throw CLI::ValidationError("--basis", "unknown basis " + basis_name_);

  SeriesEngine engine;
  SymSeries s = engine.get(tag, max_n);

  if (format == "structured") {
    out.buf << series_to_json(s, basis).dump(1) << "\n";
    return 0;
  }
  BasisExpansion terms = change_basis(s, basis);
  if (format == "pretty") {
    for (const auto& [lam, coeff] : terms)
      out.buf << "n=" << partition_size(lam) << " " << partition_str(lam) << " "
              << coeff_pretty(coeff) << "\n";
    return 0;
  }
  if (format == "csv") {
    out.buf << "n,partition,L_coeffs_ascending\n";
    for (const auto& [lam, coeff] : terms) {
      if (!coeff.is_tate())
        throw CLI::ValidationError("--format",
                                   "csv needs L-polynomial coefficients");
      TatePoly t = coeff.tate();
      out.buf << partition_size(lam) << ",\"" << partition_str(lam) << "\",\"[";
      for (int i = 0; i <= t.degree(); ++i) {
        out.buf << format_fraction(t.coeff(i));
        if (i < t.degree()) out.buf << ",";
      }
      out.buf << "]\"\n";
    }
    return 0;
  }
  throw CLI::ValidationError("--format", "unknown format " + format);
}

int run_table(const std::string& series, int max_n, Output& out) {
  SeriesTag tag = series_tag_from_name(series);
  SeriesEngine engine;
  SymSeries s = engine.get(tag, max_n);
  BasisExpansion terms = change_basis(s, Basis::schur, true);
  out.buf << "n\tlambda\te\n";
  for (const auto& [lam, coeff] : terms) {
    if (lam.empty()) continue;
    out.buf << partition_size(lam) << "\t" << partition_str(lam) << "\t"
            << coeff_pretty(coeff) << "\n";
  }
  return 0;
}

// ---------------------------------------------------------------- necklace

int run_necklace_enumerate(int n, long long degree, const std::string& format,
                           Output& out) {
  auto all = enumerate_smoothable(n, degree);
  if (format == "structured") {
    ordered_json j;
    j["n"] = n;
    j["degree"] = degree;
    j["count"] = all.size();
    ordered_json arr = ordered_json::array();
    for (const auto& fcj : all) arr.push_back(fcj_to_json(fcj));
    j["jacobians"] = std::move(arr);
    out.buf << j.dump(1) << "\n";
    return 0;
  }
  for (const auto& fcj : all) {
    out.buf << "(";
    for (size_t i = 0; i < fcj.seq.size(); ++i) {
      out.buf << fcj.seq[i];
      if (i + 1 < fcj.seq.size()) out.buf << " ";
    }
    out.buf << ")";
    for (const auto& comp : fcj.components) out.buf << " " << multideg_str(comp);
    out.buf << " phi=(";
    auto phi = polarisation_of(fcj).phi;
    for (size_t i = 0; i < phi.size(); ++i) {
      out.buf << format_fraction(phi[i]);
      if (i + 1 < phi.size()) out.buf << ",";
    }
    out.buf << ")\n";
  }
  return 0;
}

int run_necklace_validate(int n, const std::string& seq_text,
                          const std::string& format, Output& out) {
  std::vector<int> seq = parse_int_list(seq_text);
  SeqValidation v = validate_seq(n, seq);
  bool smoothable = v.valid && static_cast<int>(seq.size()) == n;
  if (format == "structured") {
    ordered_json j;
    j["valid"] = v.valid;
    if (v.valid) {
      j["rho"] = v.rho;
      j["smoothable"] = smoothable;
    } else {
      j["reason"] = v.reason;
    }
    out.buf << j.dump(1) << "\n";
  } else {
    if (v.valid)
      out.buf << "valid, rho=" << v.rho << ", smoothable="
              << (smoothable ? "true" : "false") << "\n";
    else
      out.buf << "invalid: " << v.reason << "\n";
  }
  return 0;
}

// ---------------------------------------------------------------- universal

int run_universal_check_f(const FFunction& f, Output& out) {
  auto rep = is_mildly_superadditive(f);
  ordered_json j;
  j["n"] = f.n;
  j["superadditive"] = rep.ok;
  if (!rep.ok) {
    j["violating_pair"] = {mask_to_elements(rep.first_I),
                           mask_to_elements(rep.first_J)};
  }
  out.buf << j.dump(1) << "\n";
  return 0;
}

int run_universal_realizable(const FFunction& f, Output& out) {
  RealizabilityResult res = realizable_phi(f);
  ordered_json j;
  j["n"] = f.n;
  j["feasible"] = res.feasible;
  j["margin"] = format_fraction(res.margin);
  if (res.feasible) {
    ordered_json x = ordered_json::array();
    for (const auto& v : res.x) x.push_back(format_fraction(v));
    j["x"] = std::move(x);
  } else {
    j["certificate"] = certificate_to_json(*res.certificate);
    j["certificate_verified"] = verify_certificate(f, *res.certificate);
  }
  out.buf << j.dump(1) << "\n";
  return 0;
}

int run_universal_exotic(int n, bool check, Output& out) {
  FFunction f = exotic_f(n);
  ordered_json j;
  j["n"] = n;
  j["f"] = ffunction_to_json(f)["values"];
  if (check) {
    j["superadditive"] = is_mildly_superadditive(f).ok;
    RealizabilityResult res = realizable_phi(f);
    j["feasible"] = res.feasible;
    if (!res.feasible) {
      j["certificate"] = certificate_to_json(*res.certificate);
      j["certificate_verified"] = verify_certificate(f, *res.certificate);
    }
  }
  out.buf << j.dump(1) << "\n";
  return 0;
}

int run_universal_count(int n, int bound, Output& out) {
  long long count = count_translation_classes(n, bound);
  ordered_json j;
  j["n"] = n;
  j["translation_classes"] = count;
  out.buf << j.dump(1) << "\n";
  return 0;
}

int run_universal_pair_check(const FFunction& f, const std::string& g_file,
                             long long d, Output& out) {
  GFunction g = g_file.empty()
                    ? GFunction::zero(f.n)
                    : gfunction_from_json(ordered_json::parse(read_file(g_file)));
  PairRecord rec = pair_check(f, g, d);
  ordered_json j;
  j["n"] = rec.n;
  j["d"] = rec.d;
  j["valid"] = rec.valid;
  j["f"] = ffunction_to_json(rec.f)["values"];
  j["g"] = gfunction_to_json(rec.g)["values"];
  if (rec.valid) j["polarised_origin"] = realizable_phi(rec.f).feasible;
  out.buf << j.dump(1) << "\n";
  return 0;
}

int run_universal_f_from_phi(int n, const std::string& x_text, Output& out) {
  std::vector<Rat> x = parse_rat_list(x_text);
  if (static_cast<int>(x.size()) != n - 1)
    throw CLI::ValidationError("--x", "expected n-1 coordinates");
  FFunction f = f_from_phi(x);
  out.buf << ffunction_to_json(f).dump(1) << "\n";
  return 0;
}

// -------------------------------------------------------------------- cache

int run_cache_status(Output& out) {
  namespace fs = std::filesystem;
  fs::path dir = default_cache_dir();
  ordered_json j;
  j["cache_dir"] = dir.string();
  ordered_json entries = ordered_json::array();
  std::vector<std::string> names;
  if (fs::exists(dir))
    for (const auto& e : fs::directory_iterator(dir))
      if (e.is_regular_file() && e.path().extension() == ".series")
        names.push_back(e.path().filename().string());
  std::sort(names.begin(), names.end());
  for (const auto& name : names) {
    ordered_json entry;
    entry["file"] = name;
    entry["bytes"] = fs::file_size(dir / name);
    entries.push_back(std::move(entry));
  }
  j["entries"] = std::move(entries);
  out.buf << j.dump(1) << "\n";
  return 0;
}

void require_writable_cache_dir() {
  namespace fs = std::filesystem;
  fs::path dir = default_cache_dir();
  std::error_code ec;
  fs::create_directories(dir, ec);
  fs::path probe = dir / (".probe." + std::to_string(::getpid()));
  std::ofstream test(probe);
  if (ec || !test) throw CLI::ValidationError("cache", "cache directory is not writable: " + dir.string());
  test.close();
  fs::remove(probe, ec);
}

int run_cache_clear(Output& out) {
  namespace fs = std::filesystem;
  require_writable_cache_dir();
  fs::path dir = default_cache_dir();
  size_t removed = 0;
  if (fs::exists(dir)) {
    for (const auto& e : fs::directory_iterator(dir))
      if (e.is_regular_file() && e.path().extension() == ".series") {
        fs::remove(e.path());
        ++removed;
      }
  }
  ordered_json j;
  j["removed"] = removed;
  out.buf << j.dump(1) << "\n";
  return 0;
}

int run_cache_warm(const std::string& series, int max_n, Output& out) {
  require_writable_cache_dir();
  SeriesEngine engine;
  engine.get(series_tag_from_name(series), max_n);
  ordered_json j;
  j["warmed"] = series;
  j["max_n"] = max_n;
  out.buf << j.dump(1) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"workbench for genus-1 compactified Jacobian combinatorics and tables"};
  app.require_subcommand(1);

  Output out;
  int rc = 0;
  std::function<int()> action;

  // gf
  auto* gf = app.add_subcommand("gf", "emit a generating function");
  std::string gf_series, gf_basis = "schur", gf_format = "pretty";
  int gf_max_n = 0;
  gf->add_option("--series", gf_series,
                 "one of a0, a1, b0prime, b1nr, b1, jbar")->required();
  gf->add_option("--max-n", gf_max_n, "truncation degree")->required();
  gf->add_option("--basis", gf_basis, "schur, powersum or homogeneous");
  gf->add_option("--format", gf_format, "pretty, csv or structured");
  gf->callback([&] { action = [&] { return run_gf(gf_series, gf_max_n, gf_basis, gf_format, out); }; });

  // table
  auto* table = app.add_subcommand("table", "print a table in the published layout");
  std::string table_series = "jbar";
  int table_max_n = 8;
  table->add_option("--series", table_series, "jbar or b1");
  table->add_option("--max-n", table_max_n, "largest number of markings");
  table->callback([&] { action = [&] { return run_table(table_series, table_max_n, out); }; });

  // necklace
  auto* necklace = app.add_subcommand("necklace", "necklace-curve Jacobians");
  necklace->require_subcommand(1);
  auto* nk_enum = necklace->add_subcommand("enumerate", "all smoothable Jacobians");
  int nk_n = 0;
  long long nk_degree = 0;
  std::string nk_format = "pretty";
  nk_enum->add_option("--n", nk_n, "number of components")->required();
  nk_enum->add_option("--degree", nk_degree, "total degree")->required();
  nk_enum->add_option("--format", nk_format, "pretty or structured");
  nk_enum->callback([&] { action = [&] { return run_necklace_enumerate(nk_n, nk_degree, nk_format, out); }; });

  auto* nk_val = necklace->add_subcommand("validate", "check a node sequence");
  int nkv_n = 0;
  std::string nkv_seq, nkv_format = "pretty";
  nk_val->add_option("--n", nkv_n, "number of components")->required();
  nk_val->add_option("--seq", nkv_seq, "comma-separated node sequence")->required();
  nk_val->add_option("--format", nkv_format, "pretty or structured");
  nk_val->callback([&] { action = [&] { return run_necklace_validate(nkv_n, nkv_seq, nkv_format, out); }; });

  // universal
  auto* universal = app.add_subcommand("universal", "universal-Jacobian classification");
  universal->require_subcommand(1);

  auto* uv_check = universal->add_subcommand("check-f", "mild superadditivity check");
  std::string uvc_f = "zero", uvc_file;
  int uvc_n = 0;
  uv_check->add_option("--f", uvc_f, "named function: exotic or zero");
  uv_check->add_option("--file", uvc_file, "function file");
  uv_check->add_option("--n", uvc_n, "number of markings");
  uv_check->callback([&] { action = [&] { return run_universal_check_f(resolve_ffunction(uvc_f, uvc_file, uvc_n), out); }; });

  auto* uv_real = universal->add_subcommand("realizable", "polarised-origin decision");
  std::string uvr_f = "zero", uvr_file;
  int uvr_n = 0;
  uv_real->add_option("--f", uvr_f, "named function: exotic or zero");
  uv_real->add_option("--file", uvr_file, "function file");
  uv_real->add_option("--n", uvr_n, "number of markings");
  uv_real->callback([&] { action = [&] { return run_universal_realizable(resolve_ffunction(uvr_f, uvr_file, uvr_n), out); }; });

  auto* uv_exotic = universal->add_subcommand("exotic", "the non-polarised family");
  int uve_n = 6;
  bool uve_check = false;
  uv_exotic->add_option("--n", uve_n, "number of markings")->required();
  uv_exotic->add_flag("--check", uve_check, "verify superadditivity and emit the refutation");
  uv_exotic->callback([&] { action = [&] { return run_universal_exotic(uve_n, uve_check, out); }; });

  auto* uv_count = universal->add_subcommand("count", "count translation classes");
  int uvn_n = 0, uvn_bound = 6;
  uv_count->add_option("--n", uvn_n, "number of markings")->required();
  uv_count->add_option("--bound", uvn_bound, "largest permitted n");
  uv_count->callback([&] { action = [&] { return run_universal_count(uvn_n, uvn_bound, out); }; });

  auto* uv_pair = universal->add_subcommand("pair-check", "validate an (f, g) pair");
  std::string uvp_f = "zero", uvp_file, uvp_gfile;
  int uvp_n = 0;
  long long uvp_d = 0;
  uv_pair->add_option("--f", uvp_f, "named function: exotic or zero");
  uv_pair->add_option("--file", uvp_file, "f-function file");
  uv_pair->add_option("--g-file", uvp_gfile, "g-function file (zero when absent)");
  uv_pair->add_option("--n", uvp_n, "number of markings");
  uv_pair->add_option("--d", uvp_d, "total degree");
  uv_pair->callback([&] { action = [&] { return run_universal_pair_check(resolve_ffunction(uvp_f, uvp_file, uvp_n), uvp_gfile, uvp_d, out); }; });

  auto* uv_ffp = universal->add_subcommand("f-from-phi", "floor of subset sums");
  int uvf_n = 0;
  std::string uvf_x;
  uv_ffp->add_option("--n", uvf_n, "number of markings")->required();
  uv_ffp->add_option("--x", uvf_x, "comma-separated rational coordinates")->required();
  uv_ffp->callback([&] { action = [&] { return run_universal_f_from_phi(uvf_n, uvf_x, out); }; });

  // cache
  auto* cache = app.add_subcommand("cache", "series cache management");
  cache->require_subcommand(1);
  auto* c_status = cache->add_subcommand("status", "list cache entries");
  c_status->callback([&] { action = [&] { return run_cache_status(out); }; });
  auto* c_clear = cache->add_subcommand("clear", "remove cache entries");
  c_clear->callback([&] { action = [&] { return run_cache_clear(out); }; });
  auto* c_warm = cache->add_subcommand("warm", "precompute a series");
  std::string cw_series;
  int cw_max_n = 0;
  c_warm->add_option("--series", cw_series, "series tag")->required();
  c_warm->add_option("--max-n", cw_max_n, "truncation degree")->required();
  c_warm->callback([&] { action = [&] { return run_cache_warm(cw_series, cw_max_n, out); }; });

  try {
    app.parse(argc, argv);
    rc = action ? action() : 2;
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  } catch (const NonTateRegime& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const DegenerateWall& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const DegeneratePolarisation& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const InvalidSequence& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const NTooSmall& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }

  out.flush();
  return rc;
}
