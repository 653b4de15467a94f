// Command-line front end: build, inspect, verify, and tabulate.
// Exit codes: 0 = all checks passed, 1 = a verification failed,
// 2 = usage or parse error.

#include <CLI11.hpp>

#include <climits>
#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "arithcx/alpha.hpp"
#include "arithcx/complex.hpp"
#include "arithcx/golden.hpp"
#include "arithcx/homology.hpp"
#include "arithcx/identities.hpp"
#include "arithcx/json_io.hpp"
#include "arithcx/rng.hpp"
#include "arithcx/sheaf.hpp"
#include "arithcx/sweeps.hpp"

using namespace arithcx;

namespace {

std::uint64_t default_seed() {
  if (const char* env = std::getenv("RH_SEED")) return std::strtoull(env, nullptr, 10);
  return 0;
}

template <typename T>
void print_matrix(const Matrix<T>& m, const std::string& indent) {
  std::vector<std::vector<std::string>> cells(static_cast<std::size_t>(m.rows()));
  std::vector<std::size_t> width(static_cast<std::size_t>(m.cols()), 0);
  for (long r = 0; r < m.rows(); ++r)
    for (long c = 0; c < m.cols(); ++c) {
      std::string s;
      if constexpr (std::is_same_v<T, mpz_class>)
        s = m(r, c).get_str();
      else if constexpr (std::is_same_v<T, Fp>)
        s = m(r, c).to_string();
      else
        s = m(r, c).to_string();
      width[static_cast<std::size_t>(c)] = std::max(width[static_cast<std::size_t>(c)], s.size());
      cells[static_cast<std::size_t>(r)].push_back(std::move(s));
    }
  for (long r = 0; r < m.rows(); ++r) {
    std::cout << indent << "[";
    for (long c = 0; c < m.cols(); ++c) {
      const std::string& s = cells[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
      std::cout << std::string(width[static_cast<std::size_t>(c)] - s.size(), ' ') << s;
      if (c + 1 < m.cols()) std::cout << "  ";
    }
    std::cout << "]\n";
  }
}

template <typename T>
void print_complex_text(const ArithmeticComplex<T>& c, const std::string& ring) {
  std::cout << "C" << c.weights.to_string() << ": d = " << c.d() << ", ring " << ring << "\n";
  for (int k = c.d(); k >= 0; --k) {
    std::cout << "degree " << k << ", rank " << c.chain.rank_at(k) << ", basis:";
    for (const Composition& b : c.bases[static_cast<std::size_t>(k)])
      std::cout << " " << b.to_string();
    std::cout << "\n";
    if (k >= 1) {
      std::cout << "d_" << k << ":\n";
      print_matrix(c.chain.diff_at(k), "  ");
    }
  }
}

void print_report_text(const Report& r) {
  for (const Check& c : r.checks) {
    std::cout << (c.pass ? "pass" : "FAIL") << "  " << c.claim << " @ degree " << c.degree;
    if (c.witness)
      std::cout << "  [(" << c.witness->row << "," << c.witness->col << "): " << c.witness->lhs
                << " vs " << c.witness->rhs << "]";
    std::cout << "\n";
  }
  for (const auto& [key, value] : r.notes) std::cout << "note: " << key << " = " << value << "\n";
}

std::string latex_group_table(const GroupTable& t) {
  std::string out = "\\begin{tabular}{ll}\ni & H^i \\\\\n\\hline\n";
  for (const auto& [i, g] : t) {
    std::string name = g.is_trivial() ? "0" : g.to_string();
    std::string converted;
    for (std::size_t pos = 0; pos < name.size();) {
      if (name.compare(pos, 1, "Z") == 0) {
        converted += "\\mathbb{Z}";
        ++pos;
      } else if (name.compare(pos, 3, "\u2295") == 0) {
        converted += "\\oplus";
        pos += 3;
      } else {
        converted += name[pos];
        ++pos;
      }
    }
    out += std::to_string(i) + " & $" + converted + "$ \\\\\n";
  }
  return out + "\\end{tabular}\n";
}

std::string latex_dim_table(const DimTable& t) {
  std::string out = "\\begin{tabular}{ll}\ni & \\dim H^i \\\\\n\\hline\n";
  for (const auto& [i, dim] : t) out += std::to_string(i) + " & " + std::to_string(dim) + " \\\\\n";
  return out + "\\end{tabular}\n";
}

// ---- complex -------------------------------------------------------------

struct ComplexOptions {
  std::string w0;
  std::string tail;
  bool has_eval = false;
  long eval = 0;
  long mod = 0;
  std::string format = "text";
};

int cmd_complex(const ComplexOptions& opt) {
  WeightVector w = parse_weight_vector(opt.w0, opt.tail);
  if (w.affine_w0() && !opt.has_eval && opt.mod != 0)
    throw CLI::ValidationError("--mod needs an integer complex; add --eval");

  if (w.affine_w0() && !opt.has_eval) {
    auto c = build_complex(w);
    if (opt.format == "json")
      std::cout << complex_to_json(c).dump(2) << "\n";
    else
      print_complex_text(c, "IVPoly");
    return 0;
  }
  ArithmeticComplex<mpz_class> cz =
      w.affine_w0() ? specialize(build_complex(w), opt.eval) : build_complex_over_Z(w);
  if (opt.mod != 0) {
    auto cp = reduce_mod(cz, opt.mod);
    if (opt.format == "json")
      std::cout << complex_to_json(cp).dump(2) << "\n";
    else
      print_complex_text(cp, "Fp:" + std::to_string(opt.mod));
    return 0;
  }
  if (opt.format == "json")
    std::cout << complex_to_json(cz).dump(2) << "\n";
  else
    print_complex_text(cz, "Z");
  return 0;
}

// ---- verify ---------------------------------------------------------------

struct VerifyOptions {
  std::string w0;
  std::string tail;
  int dmax = 8;
  int samples = 200;
  std::uint64_t seed = 0;
  std::string format = "text";
};

int cmd_verify(const VerifyOptions& opt) {
  json out;
  out["seed"] = opt.seed;
  bool pass = true;
  if (!opt.w0.empty()) {
    WeightVector w = parse_weight_vector(opt.w0, opt.tail);
    std::string note = "composites vanish for " + w.to_string();
    try {
      if (w.affine_w0()) {
        auto c = build_complex(w);
        Rng rng(opt.seed);
        for (int i = 0; i < 5; ++i) {
          long m = rng.uniform(-20, 20);
          auto direct = build_complex_over_Z(
              WeightVector::integer(w.x_coeff * m + w.w0_const, w.tail));
          if (!(specialize(c, m).chain == direct.chain)) {
            pass = false;
            note = "specialization does not commute at x = " + std::to_string(m);
          }
        }
        bool all_ones = true;
        for (int t : w.tail) all_ones &= (t == 1);
        if (all_ones && w.d() >= 1) cone_decompose(c); // throws on block mismatch
      } else {
        build_complex_over_Z(w);
      }
    } catch (const std::logic_error& e) {
      pass = false;
      note = e.what();
    }
    out["checks"] = json::array({{{"claim", note}, {"pass", pass}}});
  } else {
    SweepResult sweep = dd_zero_sweep(opt.seed, opt.dmax, opt.samples);
    pass = sweep.pass;
    out["checks"] = json::array({{{"claim", "composite differentials vanish on the weight grid"},
                                  {"pass", sweep.pass},
                                  {"built", sweep.built},
                                  {"witness", sweep.first_failure}}});
  }
  if (opt.format == "json")
    std::cout << out.dump(2) << "\n";
  else
    for (const auto& c : out["checks"])
      std::cout << (c["pass"].get<bool>() ? "pass" : "FAIL") << "  "
                << c["claim"].get<std::string>() << "\n";
  return pass ? 0 : 1;
}

// ---- iso -------------------------------------------------------------------

struct IsoOptions {
  int d = 3;
  bool golden = false;
  std::string check = "all";
  std::string format = "text";
};

int cmd_iso(const IsoOptions& opt) {
  bool pass = true;
  std::vector<Report> reports;
  if (opt.golden) {
    if (opt.d != 3) throw CLI::ValidationError("--golden is defined for --d 3");
    Report r;
    r.claim = "golden alpha matrices";
    const auto& golden = golden_d3_alpha();
    for (int k = 0; k <= 3; ++k) {
      bool ok = alpha_map(3, k) == golden[static_cast<std::size_t>(k)];
      r.add({"golden alpha", k, ok, std::nullopt});
    }
    reports.push_back(std::move(r));
  }
  auto want = [&](const std::string& name) { return opt.check == "all" || opt.check == name; };
  if (want("chain") && opt.d >= 1) reports.push_back(verify_chain_map(opt.d));
  if (want("triangular")) reports.push_back(verify_triangular(opt.d));
  if (want("blocks") && opt.d >= 1) reports.push_back(verify_block_structure(opt.d).report);
  if (want("homotopy") && opt.d >= 2) reports.push_back(verify_homotopy(opt.d));
  if (want("certificate")) {
    IsoCertificate cert = iso_certificate(opt.d);
    Report r;
    r.claim = "unit determinants";
    for (int k = 0; k <= opt.d; ++k) {
      const mpz_class& det = cert.determinants[static_cast<std::size_t>(k)];
      bool ok = det == 1 || det == -1;
      r.add({"determinant " + det.get_str(), k, ok, std::nullopt});
    }
    reports.push_back(std::move(r));
  }
  for (const Report& r : reports) pass &= r.pass();

  if (opt.format == "json") {
    json out = json::array();
    for (const Report& r : reports) out.push_back(report_to_json(r));
    std::cout << out.dump(2) << "\n";
  } else {
    for (const Report& r : reports) {
      std::cout << "== " << r.claim << " (d = " << opt.d << ")\n";
      print_report_text(r);
    }
  }
  return pass ? 0 : 1;
}

// ---- homology ---------------------------------------------------------------

struct HomologyOptions {
  std::string w0;
  std::string tail;
  bool has_eval = false;
  long eval = 0;
  long mod = 0;
  bool rational = false;
  int degree = INT_MIN;
  std::string format = "text";
};

int cmd_homology(const HomologyOptions& opt) {
  WeightVector w = parse_weight_vector(opt.w0, opt.tail);
  if (w.affine_w0() && !opt.has_eval)
    throw CLI::ValidationError("affine w0 needs --eval to pick an integer complex");
  ArithmeticComplex<mpz_class> cz =
      w.affine_w0() ? specialize(build_complex(w), opt.eval) : build_complex_over_Z(w);

  auto in_range = [&](int k) { return opt.degree == INT_MIN || k == opt.degree; };

  if (opt.mod != 0) {
    auto cp = reduce_mod(cz, opt.mod);
    DimTable dims;
    for (int k = 0; k <= cz.d(); ++k)
      if (in_range(k)) dims[k] = homology_field(cp.chain, k);
    if (opt.format == "json") {
      std::cout << json({{"weights", w.to_string()},
                         {"ring", "Fp:" + std::to_string(opt.mod)},
                         {"dims", dim_table_to_json(dims)}})
                       .dump(2)
                << "\n";
    } else if (opt.format == "csv") {
      std::cout << "degree,dim\n";
      for (const auto& [k, dim] : dims) std::cout << k << "," << dim << "\n";
    } else {
      for (const auto& [k, dim] : dims) std::cout << "dim H_" << k << " = " << dim << "\n";
    }
    return 0;
  }
  if (opt.rational) {
    std::cout << "exact over Q: " << (is_exact_over_Q(cz.chain) ? "yes" : "no") << "\n";
    return 0;
  }
  GroupTable groups;
  for (int k = 0; k <= cz.d(); ++k)
    if (in_range(k)) groups[k] = homology_Z(cz.chain, k);
  if (opt.format == "json") {
    json table = json::array();
    for (const auto& [k, g] : groups) table.push_back({{"k", k}, {"group", group_to_json(g)}});
    std::cout << json({{"weights", w.to_string()}, {"ring", "Z"}, {"homology", table}}).dump(2)
              << "\n";
  } else if (opt.format == "csv") {
    std::cout << "degree,free_rank,torsion\n";
    for (const auto& [k, g] : groups) {
      std::cout << k << "," << g.free_rank << ",";
      for (std::size_t i = 0; i < g.invariant_factors.size(); ++i) {
        if (i > 0) std::cout << ";";
        std::cout << g.invariant_factors[i].get_str();
      }
      std::cout << "\n";
    }
  } else {
    for (const auto& [k, g] : groups) std::cout << "H_" << k << " = " << g.to_string() << "\n";
  }
  return 0;
}

// ---- sheaf -------------------------------------------------------------------

struct RibbonOptions {
  std::string lambda;
  std::string mu;
  std::string w_csv;
  long mod = 0;
  std::string format = "text";
};

std::vector<int> parse_csv(const std::string& csv) {
  std::vector<int> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(std::stoi(item));
  return out;
}

int cmd_sheaf_ribbon(const RibbonOptions& opt) {
  std::vector<int> w;
  if (!opt.w_csv.empty()) {
    w = parse_csv(opt.w_csv);
  } else {
    SkewShape shape(parse_csv(opt.lambda), opt.mu.empty() ? std::vector<int>{} : parse_csv(opt.mu));
    if (!validate_ribbon(shape)) throw CLI::ValidationError("shape is not a ribbon");
    w = ribbon_columns(shape);
  }
  std::cout << "columns:";
  for (int h : w) std::cout << " " << h;
  std::cout << "\n";
  if (opt.mod != 0) {
    DimTable t = stable_cohomology_ribbon_mod_p(w, opt.mod);
    if (opt.format == "json")
      std::cout << dim_table_to_json(t).dump(2) << "\n";
    else if (opt.format == "latex")
      std::cout << latex_dim_table(t);
    else
      std::cout << dim_table_to_string(t);
  } else {
    GroupTable t = stable_cohomology_ribbon(w);
    if (opt.format == "json")
      std::cout << group_table_to_json(t).dump(2) << "\n";
    else if (opt.format == "latex")
      std::cout << latex_group_table(t);
    else
      std::cout << group_table_to_string(t);
  }
  return 0;
}

struct TwoColumnOptions {
  int m = 0;
  int d = 0;
  bool check_duality = false;
  long mod = 0;
  std::string format = "text";
};

int cmd_sheaf_two_column(const TwoColumnOptions& opt) {
  TwoColumnShape shape(opt.m, opt.d);
  bool pass = true;
  TwoColumnTable t = stable_cohomology_two_column(shape);
  pass &= t.routes_agree;
  if (opt.format == "json") {
    json out = {{"m", opt.m},
                {"d", opt.d},
                {"table", group_table_to_json(t.table)},
                {"routes_agree", t.routes_agree}};
    if (opt.check_duality) {
      Report rz = verify_identification_Z(shape);
      pass &= rz.pass();
      out["duality_Z"] = report_to_json(rz);
      json field = json::array();
      for (long p : opt.mod != 0 ? std::vector<long>{opt.mod} : std::vector<long>{2, 3, 5, 7}) {
        Report rp = verify_identification_field(shape, p);
        pass &= rp.pass();
        field.push_back(report_to_json(rp));
      }
      out["duality_Fp"] = std::move(field);
    }
    std::cout << out.dump(2) << "\n";
  } else {
    if (opt.format == "latex")
      std::cout << latex_group_table(t.table);
    else
      std::cout << group_table_to_string(t.table);
    if (!t.routes_agree) std::cout << "FAIL  " << t.note << "\n";
    if (opt.check_duality) {
      Report rz = verify_identification_Z(shape);
      pass &= rz.pass();
      std::cout << "== " << rz.claim << "\n";
      print_report_text(rz);
      for (long p : opt.mod != 0 ? std::vector<long>{opt.mod} : std::vector<long>{2, 3, 5, 7}) {
        Report rp = verify_identification_field(shape, p);
        pass &= rp.pass();
        std::cout << "== " << rp.claim << " (p = " << p << ")\n";
        print_report_text(rp);
      }
    }
  }
  return pass ? 0 : 1;
}

// ---- identities -----------------------------------------------------------------

struct IdentitiesOptions {
  std::uint64_t seed = 0;
  int count = 1000;
  int dmax = 10;
  long max_vandermonde = 30;
  long max_szekely = 8;
  std::string which = "all";
};

int cmd_identities(const IdentitiesOptions& opt) {
  std::vector<FuzzRecord> records;
  auto want = [&](const std::string& name) { return opt.which == "all" || opt.which == name; };
  if (want("steps") || want("altsum")) {
    for (FuzzRecord& rec : fuzz_composition_identities(opt.seed, opt.count, opt.dmax)) {
      if (rec.identity == "product-steps" && !want("steps") && opt.which != "all") continue;
      if (rec.identity == "alternating-sum" && !want("altsum") && opt.which != "all") continue;
      records.push_back(std::move(rec));
    }
  }
  // under --which all the classical identities get a share of the budget
  if (want("vandermonde"))
    for (FuzzRecord& rec :
         fuzz_vandermonde(opt.seed, opt.which == "all" ? opt.count / 2 : opt.count,
                          opt.max_vandermonde))
      records.push_back(std::move(rec));
  if (want("szekely"))
    for (FuzzRecord& rec : fuzz_szekely(opt.seed, opt.which == "all" ? opt.count / 5 : opt.count,
                                        opt.max_szekely))
      records.push_back(std::move(rec));

  long failures = 0;
  for (const FuzzRecord& rec : records) {
    std::cout << "{\"identity\":\"" << rec.identity << "\",\"context\":" << rec.context
              << ",\"pass\":" << (rec.pass ? "true" : "false") << "}\n";
    if (!rec.pass) ++failures;
  }
  std::cout << "{\"summary\":{\"seed\":" << opt.seed << ",\"records\":" << records.size()
            << ",\"failures\":" << failures << "}}\n";
  return failures == 0 ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact arithmetic complexes, their isomorphism, and homology tables"};
  app.require_subcommand(1);

  ComplexOptions complex_opt;
  CLI::App* complex_cmd = app.add_subcommand("complex", "build and print a complex");
  complex_cmd->add_option("--w0", complex_opt.w0, "leftmost weight: x, -x-6, or an integer")
      ->required();
  complex_cmd->add_option("--tail", complex_opt.tail, "comma-separated tail weights");
  CLI::Option* eval_opt =
      complex_cmd->add_option("--eval", complex_opt.eval, "evaluate x at this integer");
  complex_cmd->add_option("--mod", complex_opt.mod, "reduce modulo a prime");
  complex_cmd->add_option("--format", complex_opt.format, "text|json")
      ->check(CLI::IsMember({"text", "json"}));

  VerifyOptions verify_opt;
  verify_opt.seed = default_seed();
  CLI::App* verify_cmd =
      app.add_subcommand("verify", "check vanishing composites (one vector or a sweep)");
  verify_cmd->add_option("--w0", verify_opt.w0, "single weight vector: leftmost weight");
  verify_cmd->add_option("--tail", verify_opt.tail, "single weight vector: tail");
  verify_cmd->add_option("--dmax", verify_opt.dmax, "sweep: largest edge count");
  verify_cmd->add_option("--samples", verify_opt.samples, "sweep: seeded samples per d");
  verify_cmd->add_option("--seed", verify_opt.seed, "rng seed (default: RH_SEED or 0)");
  verify_cmd->add_option("--format", verify_opt.format, "text|json")
      ->check(CLI::IsMember({"text", "json"}));

  IsoOptions iso_opt;
  CLI::App* iso_cmd = app.add_subcommand("iso", "verify the degreewise isomorphism");
  iso_cmd->add_option("--d", iso_opt.d, "edge count")->required();
  iso_cmd->add_flag("--golden", iso_opt.golden, "compare d = 3 matrices to the stored goldens");
  iso_cmd->add_option("--check", iso_opt.check, "all|chain|triangular|blocks|homotopy|certificate")
      ->check(CLI::IsMember({"all", "chain", "triangular", "blocks", "homotopy", "certificate"}));
  iso_cmd->add_option("--format", iso_opt.format, "text|json")
      ->check(CLI::IsMember({"text", "json"}));

  HomologyOptions homology_opt;
  CLI::App* homology_cmd = app.add_subcommand("homology", "homology of an integer complex");
  homology_cmd->add_option("--w0", homology_opt.w0, "leftmost weight")->required();
  homology_cmd->add_option("--tail", homology_opt.tail, "comma-separated tail weights");
  CLI::Option* heval =
      homology_cmd->add_option("--eval", homology_opt.eval, "evaluate x at this integer");
  homology_cmd->add_option("--mod", homology_opt.mod, "dimensions over F_p instead of groups");
  homology_cmd->add_flag("--rational", homology_opt.rational, "report rational exactness only");
  homology_cmd->add_option("--degree", homology_opt.degree, "restrict to one degree");
  homology_cmd->add_option("--format", homology_opt.format, "text|json|csv")
      ->check(CLI::IsMember({"text", "json", "csv"}));

  CLI::App* sheaf_cmd = app.add_subcommand("sheaf", "stable cohomology tables");
  sheaf_cmd->require_subcommand(1);
  RibbonOptions ribbon_opt;
  CLI::App* ribbon_cmd = sheaf_cmd->add_subcommand("ribbon", "table for a ribbon shape");
  ribbon_cmd->add_option("--lambda", ribbon_opt.lambda, "outer partition, comma-separated");
  ribbon_cmd->add_option("--mu", ribbon_opt.mu, "inner partition, comma-separated");
  ribbon_cmd->add_option("--w", ribbon_opt.w_csv, "column heights directly");
  ribbon_cmd->add_option("--mod", ribbon_opt.mod, "dimensions over F_p");
  ribbon_cmd->add_option("--format", ribbon_opt.format, "text|json|latex")
      ->check(CLI::IsMember({"text", "json", "latex"}));

  TwoColumnOptions twocol_opt;
  CLI::App* twocol_cmd = sheaf_cmd->add_subcommand("two-column", "table for a two-column shape");
  twocol_cmd->add_option("--m", twocol_opt.m, "first column length")->required();
  twocol_cmd->add_option("--d", twocol_opt.d, "second column length")->required();
  twocol_cmd->add_flag("--check-duality", twocol_opt.check_duality,
                       "verify the hook identification over Z and F_p");
  twocol_cmd->add_option("--mod", twocol_opt.mod, "restrict the field checks to one prime");
  twocol_cmd->add_option("--format", twocol_opt.format, "text|json|latex")
      ->check(CLI::IsMember({"text", "json", "latex"}));

  IdentitiesOptions id_opt;
  id_opt.seed = default_seed();
  CLI::App* id_cmd = app.add_subcommand("identities", "seeded identity fuzzing, JSONL output");
  id_cmd->add_option("--seed", id_opt.seed, "rng seed (default: RH_SEED or 0)");
  id_cmd->add_option("--count", id_opt.count, "contexts to draw");
  id_cmd->add_option("--dmax", id_opt.dmax, "largest d for composition contexts");
  id_cmd->add_option("--max-vandermonde", id_opt.max_vandermonde, "bound for vandermonde inputs");
  id_cmd->add_option("--max-szekely", id_opt.max_szekely, "bound for three-binomial inputs");
  id_cmd->add_option("--which", id_opt.which, "all|steps|altsum|vandermonde|szekely")
      ->check(CLI::IsMember({"all", "steps", "altsum", "vandermonde", "szekely"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    std::cerr << app.help() << "\n";
    return 2;
  }

  complex_opt.has_eval = eval_opt->count() > 0;
  homology_opt.has_eval = heval->count() > 0;

  try {
    if (complex_cmd->parsed()) return cmd_complex(complex_opt);
    if (verify_cmd->parsed()) return cmd_verify(verify_opt);
    if (iso_cmd->parsed()) return cmd_iso(iso_opt);
    if (homology_cmd->parsed()) return cmd_homology(homology_opt);
    if (sheaf_cmd->parsed()) {
      if (ribbon_cmd->parsed()) return cmd_sheaf_ribbon(ribbon_opt);
      if (twocol_cmd->parsed()) return cmd_sheaf_two_column(twocol_opt);
    }
    if (id_cmd->parsed()) return cmd_identities(id_opt);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
