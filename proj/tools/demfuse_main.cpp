#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "demfuse/verify.hpp"

using namespace demfuse;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

long long parse_ll(const std::string& s) {
  size_t pos = 0;
  long long v = std::stoll(s, &pos);
  if (pos != s.size()) throw UsageError("bad integer: " + s);
  return v;
}

// "a1w1+a2w2+..." with integer coefficients; "0" is the zero weight.
// Coweights use the "wv" marker: "a1wv1+...".
std::vector<int> parse_coords(const std::string& text, const std::string& marker, int rank) {
  std::vector<int> c(rank, 0);
  if (text == "0") return c;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, '+')) {
    size_t m = tok.find(marker);
    if (m == std::string::npos) throw UsageError("bad term '" + tok + "' (expected " + marker + ")");
    long long coeff = 1;
    std::string cs = tok.substr(0, m);
    if (cs == "-") {
      coeff = -1;
    } else if (!cs.empty()) {
      coeff = parse_ll(cs);
    }
    long long idx = parse_ll(tok.substr(m + marker.size()));
    if (idx < 1 || idx > rank) throw UsageError("index out of range in '" + tok + "'");
    c[idx - 1] += static_cast<int>(coeff);
  }
  return c;
}

Weight parse_weight(const std::string& s, const RootSystem& rs) {
  if (s.find("wv") != std::string::npos)
    throw UsageError("expected a weight, got a coweight: " + s);
  return Weight(parse_coords(s, "w", rs.rank()));
}

Coweight parse_coweight(const std::string& s, const RootSystem& rs) {
  return Coweight(parse_coords(s, "wv", rs.rank()));
}

Rational parse_rational(const std::string& s) {
  Rational r;
  if (r.set_str(s, 10) != 0) throw UsageError("bad rational: " + s);
  r.canonicalize();
  return r;
}

// Factor syntax: V(<weight>) for an evaluation module, D(<level>,<mu>) for the
// Demazure module with mu = level * iota(lambda^vee).
ModulePtr parse_factor(const std::string& s, const RootSystem& rs) {
  if (s.size() < 3 || s.back() != ')') throw UsageError("bad factor: " + s);
  if (s.rfind("V(", 0) == 0) {
    Weight la = parse_weight(s.substr(2, s.size() - 3), rs);
    if (!la.dominant()) throw UsageError("non-dominant weight in " + s);
    return CurrentModule::irreducible_evaluation(la, rs);
  }
  if (s.rfind("D(", 0) == 0) {
    std::string body = s.substr(2, s.size() - 3);
    size_t comma = body.find(',');
    if (comma == std::string::npos) throw UsageError("bad factor: " + s);
    int level = static_cast<int>(parse_ll(body.substr(0, comma)));
    Weight mu = parse_weight(body.substr(comma + 1), rs);
    if (level < 0) throw UsageError("negative level in " + s);
    if (level == 0) {
      if (!mu.is_zero()) throw UsageError("level 0 requires weight 0 in " + s);
      return CurrentModule::trivial(rs);
    }
    Coweight lv = Coweight::zero(rs.rank());
    for (int i = 0; i < rs.rank(); ++i) {
      if (mu.fc[i] % level != 0)
        throw UsageError("weight of " + s + " is not level * iota(coweight)");
      lv.fc[i] = mu.fc[i] / level;
    }
    if (!(rs.coweight_embed(lv) * level == mu) || !lv.dominant())
      throw UsageError("weight of " + s + " is not level * iota(dominant coweight)");
    return demazure_module_explicit(level, lv, rs);
  }
  throw UsageError("bad factor: " + s);
}

std::string char_tsv(const GradedCharacter& ch, int level) {
  std::ostringstream out;
  out << "level\t" << level << "\n";
  std::vector<std::pair<std::pair<int, std::vector<int>>, long long>> rows;
  for (const auto& [k, m] : ch.terms()) rows.push_back({{k.second, k.first}, m});
  std::sort(rows.begin(), rows.end());
  for (const auto& [qk, m] : rows) {
    out << qk.first << "\t";
    for (size_t i = 0; i < qk.second.size(); ++i) out << (i ? "," : "") << qk.second[i];
    out << "\t" << m << "\n";
  }
  return out.str();
}

std::string char_pretty(const GradedCharacter& ch, int level) {
  std::ostringstream out;
  out << "level " << level << ", dimension " << ch.dimension() << "\n";
  if (ch.empty()) return out.str();
  for (int q = ch.min_q(); q <= ch.max_q(); ++q) {
    if (ch.dim_at_q(q) == 0) continue;
    out << "q^" << q << " (dim " << ch.dim_at_q(q) << "):";
    for (const auto& [k, m] : ch.terms()) {
      if (k.second != q) continue;
      out << "  [";
      for (size_t i = 0; i < k.first.size(); ++i) out << (i ? "," : "") << k.first[i];
      out << "]x" << m;
    }
    out << "\n";
  }
  return out.str();
}

std::string render_char(const GradedCharacter& ch, int level, const std::string& fmt) {
  if (fmt == "tsv") return char_tsv(ch, level);
  if (fmt == "pretty") return char_pretty(ch, level);
  return ch.to_json(level) + "\n";
}

void emit(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw UsageError("cannot open output file: " + path);
  f << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Demazure / fusion-product character engine"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format = "json";
  std::string output;
  app.add_option("--format", format, "json, tsv or pretty")
      ->check(CLI::IsMember({"json", "tsv", "pretty"}));
  app.add_option("--output", output, "write to a file instead of stdout");

  auto* cmd_char = app.add_subcommand("char", "print a character");
  std::string char_type;
  std::vector<std::string> dem_args, chain_args;
  std::string weyl_arg;
  int dmax = -1;
  cmd_char->add_option("type", char_type, "root system label, e.g. A2")->required();
  cmd_char->add_option("--demazure", dem_args, "LEVEL MU: graded character of D(LEVEL, MU)")
      ->expected(2);
  cmd_char->add_option("--weyl", weyl_arg, "finite character of V(LAMBDA)");
  cmd_char->add_option("--chain", chain_args,
                       "L,COWEIGHT pairs; last pair is the final (level, nu)")
      ->expected(-1);
  cmd_char->add_option("--dmax", dmax, "q-degree truncation for --demazure");

  auto* cmd_fusion = app.add_subcommand("fusion", "fusion product of cyclic modules");
  std::string fus_type;
  std::vector<std::string> fus_factors;
  std::string fus_points;
  cmd_fusion->add_option("type", fus_type)->required();
  cmd_fusion->add_option("factors", fus_factors, "V(...) or D(l,...) factors")->required();
  cmd_fusion->add_option("--points", fus_points, "comma-separated distinct rationals");

  auto* cmd_verify = app.add_subcommand("verify", "run a claim's instance matrix");
  std::string ver_type, ver_claim;
  VerifyOptions vopt;
  cmd_verify->add_option("type", ver_type)->required();
  cmd_verify
      ->add_option("claim", ver_claim,
                   "cor-fusion-demazure, qsystem, param-independence, associativity, remark-2.4")
      ->required();
  cmd_verify->add_option("--lmax", vopt.lmax, "maximal level");
  cmd_verify->add_option("--kmax", vopt.kmax, "maximal chain length");
  cmd_verify->add_option("--weight-cap", vopt.weight_cap, "cap on <2rho, sum of coweights>");
  cmd_verify->add_option("--cap", vopt.ambient_cap, "ambient dimension cap");
  cmd_verify->add_option("--trials", vopt.trials, "random point tuples per instance");
  cmd_verify->add_option("--seed", vopt.seed, "base RNG seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (cmd_char->parsed()) {
      RootSystem rs = RootSystem::parse(char_type);
      int picked = (!dem_args.empty()) + !weyl_arg.empty() + !chain_args.empty();
      if (picked != 1) throw UsageError("pick exactly one of --demazure, --weyl, --chain");
      if (!dem_args.empty()) {
        int level = static_cast<int>(parse_ll(dem_args[0]));
        Weight mu = parse_weight(dem_args[1], rs);
        GradedCharacter ch = dmax >= 0 ? affine_demazure_character(level, mu, rs, dmax)
                                       : affine_demazure_character_full(level, mu, rs);
        emit(render_char(ch, level, format), output);
      } else if (!weyl_arg.empty()) {
        Weight la = parse_weight(weyl_arg, rs);
        if (!la.dominant()) throw UsageError("--weyl needs a dominant weight");
        emit(render_char(weyl_character(la, rs), 0, format), output);
      } else {
        std::vector<int> ells;
        std::vector<Coweight> lvs;
        for (const auto& part : chain_args) {
          size_t comma = part.find(',');
          if (comma == std::string::npos) throw UsageError("bad chain pair: " + part);
          ells.push_back(static_cast<int>(parse_ll(part.substr(0, comma))));
          lvs.push_back(parse_coweight(part.substr(comma + 1), rs));
        }
        int ell_last = ells.back();
        Coweight nu = lvs.back();
        ells.pop_back();
        lvs.pop_back();
        GradedCharacter ch = demazure_chain_character(ells, lvs, ell_last, nu, rs);
        emit(render_char(ch, ells.empty() ? ell_last : ells[0], format), output);
      }
      return 0;
    }

    if (cmd_fusion->parsed()) {
      RootSystem rs = RootSystem::parse(fus_type);
      std::vector<ModulePtr> factors;
      for (const auto& f : fus_factors) factors.push_back(parse_factor(f, rs));
      std::vector<Rational> points;
      if (fus_points.empty()) {
        points = default_points(static_cast<int>(factors.size()));
      } else {
        std::stringstream ss(fus_points);
        std::string tok;
        while (std::getline(ss, tok, ',')) points.push_back(parse_rational(tok));
      }
      FusionResult fr = fusion_product(factors, points, false);
      int level = 0;
      std::ostringstream s;
      if (format == "pretty") {
        s << "stage dims:";
        for (int d : fr.filtration.stage_dims) s << " " << d;
        s << "\n" << char_pretty(fr.character, level);
      } else if (format == "tsv") {
        s << "stage_dims\t";
        for (size_t i = 0; i < fr.filtration.stage_dims.size(); ++i)
          s << (i ? "," : "") << fr.filtration.stage_dims[i];
        s << "\n" << char_tsv(fr.character, level);
      } else {
        s << "{\"character\":" << fr.character.to_json(level) << ",\"stage_dims\":[";
        for (size_t i = 0; i < fr.filtration.stage_dims.size(); ++i)
          s << (i ? "," : "") << fr.filtration.stage_dims[i];
        s << "],\"top_degree\":" << fr.filtration.top_degree << "}\n";
      }
      emit(s.str(), output);
      return 0;
    }

    RootSystem rs = RootSystem::parse(ver_type);
    VerifyReport rep = run_claim(ver_claim, rs, vopt);
    std::ostringstream s;
    if (format == "pretty") {
      s << "claim " << rep.claim << ": " << (rep.pass ? "pass" : "FAIL") << "\n";
      for (const auto& in : rep.instances) {
        s << "  " << in.input << ": "
          << (in.skipped ? "skipped" : (in.equal ? "equal" : "NOT EQUAL"));
        if (!in.skipped) s << " (qshift " << in.qshift << ")";
        if (!in.note.empty()) s << " [" << in.note << "]";
        s << "\n";
      }
    } else if (format == "tsv") {
      for (const auto& in : rep.instances)
        s << in.input << "\t" << (in.skipped ? "skipped" : (in.equal ? "equal" : "unequal"))
          << "\t" << in.qshift << "\n";
      s << "pass\t" << (rep.pass ? "true" : "false") << "\n";
    } else {
      s << rep.to_json() << "\n";
    }
    emit(s.str(), output);
    return rep.pass ? 0 : 1;
  } catch (const UsageError& e) {
    std::cout << "{\"error\":\"" << e.what() << "\"}\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cout << "{\"error\":\"" << e.what() << "\"}\n";
    return 2;
  } catch (const NonClosureError& e) {
    std::cout << "{\"error\":\"" << e.what() << "\",\"achieved_dim\":" << e.achieved_dim << "}\n";
    return 1;
  } catch (const std::exception& e) {
    std::cout << "{\"error\":\"" << e.what() << "\"}\n";
    return 3;
  }
}
