#include "qmzv_cli/dispatch.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>

#include "qmzv/constructor.hpp"
#include "qmzv/genfun.hpp"
#include "qmzv/models.hpp"
#include "qmzv/transforms.hpp"
#include "qmzv/verify.hpp"

namespace qmzv::cli {

namespace {

/// Malformed flag values; reported like CLI11 parse errors.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  if (text.empty()) return out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, sep)) out.push_back(item);
  if (text.back() == sep) out.emplace_back();
  return out;
}

int parse_int_token(const std::string& flag, const std::string& token) {
  try {
    std::size_t used = 0;
    const int v = std::stoi(token, &used);
    if (used == token.size()) return v;
  } catch (const std::exception&) {
  }
  throw UsageError(flag + ": expected an integer, got '" + token + "'");
}

std::vector<int> parse_csv(const std::string& flag, const std::string& text) {
  std::vector<int> out;
  for (const auto& t : split(text, ',')) out.push_back(parse_int_token(flag, t));
  return out;
}

/// Entries are positive integers or "b" for a bar (stored as 0); SZ indices take 0 instead.
std::vector<int> parse_index(const std::string& flag, const std::string& text, bool zeros_allowed,
                             bool bars_allowed) {
  std::vector<int> out;
  for (const auto& t : split(text, ',')) {
    if (t == "b") {
      if (!bars_allowed) throw UsageError(flag + ": bar entries are not accepted here");
      out.push_back(0);
      continue;
    }
    const int v = parse_int_token(flag, t);
    if (v < 0 || (v == 0 && !zeros_allowed)) {
      throw UsageError(flag + ": entries must be positive" + std::string(bars_allowed ? " or 'b'" : ""));
    }
    out.push_back(v);
  }
  return out;
}

Rational parse_q(const std::string& flag, const std::string& text) {
  try {
    return parse_rational(text);
  } catch (const DomainError&) {
    throw UsageError(flag + ": expected a rational like 2, -1/2, got '" + text + "'");
  }
}

std::vector<std::vector<Rational>> parse_polys(const std::string& text) {
  std::vector<std::vector<Rational>> out;
  for (const auto& poly : split(text, ';')) {
    std::vector<Rational> coeffs;
    for (const auto& t : split(poly, ',')) coeffs.push_back(parse_q("--poly", t));
    out.push_back(std::move(coeffs));
  }
  return out;
}

std::string join(const std::vector<int>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

std::string bar_text(const std::vector<int>& raw) { return to_text(BarIndex(raw)); }

// --- eval ----------------------------------------------------------------------------------

struct EvalArgs {
  std::string model;
  std::string index;
  std::string c;
  std::optional<int> N;
  int M = 0;
  std::optional<std::string> q;
  int eps = 0;
  std::string poly;
  std::string kind = "zeta";
  int order = 10;
  bool json = false;
};

int run_eval(const EvalArgs& a, std::ostream& out) {
  const ModelName model = parse_model_name(a.model);
  nlohmann::ordered_json j;
  j["model"] = a.model;
  std::optional<QSeries> series;
  std::optional<Rational> value;

  auto need_N = [&]() -> int {
    if (!a.N) throw UsageError("--N is required for model '" + a.model + "'");
    return *a.N;
  };
  const FiniteEvalParams p{a.M, a.N.value_or(1), a.order};

  switch (model) {
    case ModelName::Dagger:
    case ModelName::BZ:
    case ModelName::DiamondBZ:
    case ModelName::DiamondDagger: {
      const bool dagger = model == ModelName::Dagger;
      const auto raw = parse_index("--index", a.index, false, dagger);
      j["index"] = bar_text(raw);
      const BarIndex k(raw);
      const bool diamond = model == ModelName::DiamondBZ || model == ModelName::DiamondDagger;
      if (a.q) {
        const int N = need_N();
        const FiniteModel fm = dagger ? FiniteModel::Dagger
                               : model == ModelName::BZ ? FiniteModel::BZ
                               : model == ModelName::DiamondBZ ? FiniteModel::DiamondBZ
                                                               : FiniteModel::DiamondDagger;
        const Rational q = parse_q("--q", *a.q);
        j["N"] = N;
        j["M"] = a.M;
        j["q"] = to_string(q);
        value = eval_at_rational_q(fm, k, N, q, a.M);
      } else if (a.N || diamond) {
        j["N"] = need_N();
        j["M"] = a.M;
        if (dagger) {
          series = zeta_dagger_finite(k, p);
        } else if (model == ModelName::BZ) {
          series = zeta_bz_finite(raw, p);
        } else {
          series = zeta_diamond_finite(model == ModelName::DiamondBZ ? DiamondVariant::BZ : DiamondVariant::Dagger,
                                       raw, p);
        }
      } else {
        series = dagger ? zeta_dagger_infinite(k, a.order) : zeta_bz_infinite(raw, a.order);
      }
      break;
    }
    case ModelName::SZ: {
      const auto raw = parse_index("--index", a.index, true, false);
      j["index"] = join(raw);
      series = zeta_sz_infinite(raw, a.order);
      break;
    }
    case ModelName::Poly: {
      PolyModelArg arg{parse_index("--index", a.index, false, false), parse_polys(a.poly)};
      j["index"] = join(arg.k);
      j["poly"] = a.poly;
      series = zeta_q_poly(arg, a.order);
      break;
    }
    case ModelName::Xi: {
      const std::string& src = a.c.empty() ? a.index : a.c;
      const PairIndex c(parse_csv("--c", src));
      j["eps"] = a.eps;
      j["c"] = c.flat();
      j["N"] = need_N();
      j["M"] = a.M;
      series = xi(a.eps, c, p);
      break;
    }
    case ModelName::Classical: {
      const int N = need_N();
      j["kind"] = a.kind;
      j["N"] = N;
      if (a.kind == "zeta" || a.kind == "diamond") {
        const auto k = parse_index("--index", a.index, false, false);
        j["index"] = join(k);
        value = a.kind == "zeta" ? classical_zeta(k, N) : classical_diamond(k, N);
      } else if (a.kind == "binom") {
        const PairIndex c(parse_csv("--c", a.c.empty() ? a.index : a.c));
        j["c"] = c.flat();
        value = classical_binom(c, N);
      } else {
        throw UsageError("--kind must be zeta, diamond or binom");
      }
      break;
    }
  }

  if (series) {
    if (a.json) {
      j["value"] = to_json(*series);
      out << j.dump(2) << "\n";
    } else {
      out << to_text(*series) << "\n";
    }
  } else {
    if (a.json) {
      j["value"] = to_string(*value);
      out << j.dump(2) << "\n";
    } else {
      out << to_string(*value) << "\n";
    }
  }
  return kOk;
}

// --- word ----------------------------------------------------------------------------------

int run_word(const std::string& which, const std::string& ctext, bool json, std::ostream& out) {
  const PairIndex c(parse_csv("--c", ctext));
  AlgebraElement u;
  if (which == "0" || which == "E") {
    u = E_q(0, c);
  } else if (which == "1") {
    u = E_q(1, c);
  } else if (which == "D") {
    u = D_q(c);
  } else if (which == "classical-E") {
    u = E_classical(0, c);
  } else if (which == "classical-D") {
    u = D_classical(c);
  } else {
    throw UsageError("--eps must be one of 0, 1, E, D, classical-E, classical-D");
  }
  if (json) {
    nlohmann::ordered_json j;
    j["constructor"] = which;
    j["c"] = c.flat();
    j["element"] = to_json(u);
    j["text"] = to_text(u);
    out << j.dump(2) << "\n";
  } else {
    out << to_text(u) << "\n";
  }
  return kOk;
}

// --- transform -----------------------------------------------------------------------------

int run_transform(const std::string& direction, const std::optional<std::string>& l, const std::string& k,
                  bool json, std::ostream& out) {
  Direction dir{};
  if (direction == "sz-from-dagger") {
    dir = Direction::SZ_from_dagger;
  } else if (direction == "dagger-from-sz") {
    dir = Direction::dagger_from_SZ;
  } else {
    throw UsageError("--direction must be sz-from-dagger or dagger-from-sz");
  }
  const Index kk = parse_index("--k", k, false, false);
  const Index ll = l ? parse_index("--l", *l, false, false) : Index{};
  const auto terms = expand(dir, l.has_value(), ll, kk);
  const bool target_dagger = dir == Direction::SZ_from_dagger;
  auto render = [&](const TransformTerm& t) {
    if (target_dagger) return "dagger(" + to_text(pairs_to_bar(PairIndex::from_lk(t.l, t.k))) + ")";
    return "sz(" + join(sz_zero_blocks(t.l, t.k)) + ")";
  };
  if (json) {
    nlohmann::ordered_json j;
    j["direction"] = direction;
    if (l) j["l"] = ll;
    j["k"] = kk;
    j["source"] = target_dagger ? "sz(" + join(sz_zero_blocks(l ? ll : Index(kk.size(), 1), kk)) + ")"
                                : "dagger(" + to_text(pairs_to_bar(PairIndex::from_lk(l ? ll : Index(kk.size(), 1), kk))) + ")";
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& t : terms) {
      nlohmann::ordered_json e;
      e["coeff"] = to_string(t.coeff);
      e["l"] = t.l;
      e["k"] = t.k;
      e["target"] = render(t);
      arr.push_back(e);
    }
    j["terms"] = arr;
    out << j.dump(2) << "\n";
  } else {
    for (const auto& t : terms) out << to_string(t.coeff) << " " << render(t) << "\n";
  }
  return kOk;
}

// --- verify --------------------------------------------------------------------------------

struct VerifyArgs {
  std::string identity;
  int eps = 0;
  std::string c;
  std::string l;
  std::string k;
  int N = 2;
  int M = 0;
  int order = 12;
  int r = 1;
  int maxdeg = 2;
  int formula = 1;
  int max_weight = 4;
  std::string word;
  std::string model = "dagger";
  std::string q = "2,1/2,3,-2,5/7";
  std::string fault = "none";
  bool json = false;
};

SignFault parse_fault(const std::string& name) {
  if (name == "none") return SignFault::none;
  if (name == "term1_sign") return SignFault::term1_sign;
  if (name == "eo_factor") return SignFault::eo_factor;
  if (name == "theta_sign") return SignFault::theta_sign;
  if (name == "d_prefactor") return SignFault::d_prefactor;
  throw UsageError("--fault must be none, term1_sign, eo_factor, theta_sign or d_prefactor");
}

std::vector<Rational> parse_q_list(const std::string& text) {
  std::vector<Rational> out;
  for (const auto& t : split(text, ',')) out.push_back(parse_q("--q", t));
  return out;
}

Report run_identity(const VerifyArgs& a) {
  const std::string& id = a.identity;
  auto pair = [&] { return PairIndex(parse_csv("--c", a.c)); };
  auto ks = [&] { return parse_index("--k", a.k, false, false); };
  auto ls = [&] { return parse_index("--l", a.l, false, false); };
  const SignFault fault = parse_fault(a.fault);
  if (id == "main_finite") return verify_main_finite(a.eps, pair(), a.N, a.order, fault);
  if (id == "main_finite_bz") return verify_main_finite_bz(pair(), a.N, a.order, parse_q_list(a.q), fault);
  if (id == "main_infinite") return verify_main_infinite(pair(), a.order);
  if (id == "G_diff") return verify_G_diff(a.eps, a.M, a.N, a.r, a.maxdeg, a.order);
  if (id == "recurrence") return verify_recurrence(a.eps, a.M, a.N, a.r, a.maxdeg, a.order);
  if (id == "recurrence_corollary") return verify_recurrence_corollary(a.eps, a.N, a.r, a.maxdeg, a.order);
  if (id == "B_diff") return verify_B_diff(a.eps, a.M, a.N, a.maxdeg, a.order);
  if (id == "transform") {
    const bool bars = a.formula == 1 || a.formula == 3;
    return verify_transform(a.formula, bars ? ls() : Index{}, ks(), a.order);
  }
  if (id == "transform_round_trip") return verify_round_trip(!a.l.empty(), a.l.empty() ? Index{} : ls(), ks());
  if (id == "dual_flat" || id == "dual_diamond" || id == "qmsw") {
    return verify_remarks(parse_remark_kind(id), id == "qmsw" ? Index{} : ls(), ks(), a.N, a.order);
  }
  if (id == "classical") return verify_classical(pair(), a.N);
  if (id == "bridge") {
    const auto qs = parse_q_list(a.q);
    std::vector<Report> parts;
    for (const auto& q : qs) parts.push_back(verify_bridge(Word(a.word), a.N, q));
    nlohmann::ordered_json params;
    params["word"] = a.word;
    params["N"] = a.N;
    return parts.size() == 1 ? parts.front() : combine("bridge", params, parts);
  }
  if (id == "independence") {
    std::vector<int> Ns;
    for (int n = 1; n <= a.N; ++n) Ns.push_back(n);
    const ZModel m = a.model == "bz" ? ZModel::BZFinite : ZModel::DaggerFinite;
    if (a.model != "bz" && a.model != "dagger") throw UsageError("--model must be dagger or bz");
    return independence_check(m, a.max_weight, Ns, a.order);
  }
  if (id == "membership") return check_membership(pair());
  if (id == "symmetry") return check_symmetry(pair());
  if (id == "theta_involution") return check_theta_involution(pair());
  if (id == "telescoping") return check_telescoping(a.N, a.r, a.order);
  if (id == "binomial_expansion") return check_binomial_expansion(a.eps, a.N, a.r, a.order);
  throw UsageError("unknown identity '" + id + "'");
}

// --- suite ---------------------------------------------------------------------------------

SuiteConfig load_config(const std::string& path) {
  SuiteConfig cfg;
  if (path != "default") {
    std::ifstream in(path);
    if (!in) throw DomainError("cannot read config file '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    cfg = parse_suite_config(buf.str());
  }
  if (const char* env = std::getenv("QMZV_PARALLELISM"); env != nullptr && *env != '\0') {
    cfg.parallelism = parse_int_token("QMZV_PARALLELISM", env);
    validate(cfg);
  }
  return cfg;
}

}  // namespace

void emit_reports(const std::vector<Report>& reports, bool json, std::ostream& out) {
  if (json) {
    out << reports_to_json(reports).dump(2) << "\n";
    return;
  }
  for (const auto& r : reports) {
    out << (r.pass ? "pass " : "FAIL ") << r.identity << " " << r.params.dump();
    if (r.witness) {
      out << " witness: q^" << r.witness->exponent;
      if (!r.witness->u_exponents.empty()) out << " u^(" << join(r.witness->u_exponents) << ")";
      out << " lhs=" << r.witness->lhs << " rhs=" << r.witness->rhs;
    }
    out << "\n";
  }
}

int dispatch(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact q-MZV evaluation and identity checking", "qmzv"};
  app.require_subcommand(1);

  EvalArgs ea;
  auto* eval = app.add_subcommand("eval", "Evaluate a model at an index");
  eval->add_option("--model", ea.model, "dagger|bz|sz|poly|diamond-bz|diamond-dagger|xi|classical")->required();
  eval->add_option("--index", ea.index, "Comma-separated index; 'b' marks a bar entry");
  eval->add_option("--c", ea.c, "Flattened (l1,k1,...) for xi and classical binom");
  eval->add_option("--N", ea.N, "Right truncation (finite models)");
  eval->add_option("--M", ea.M, "Left truncation");
  eval->add_option("--q", ea.q, "Evaluate exactly at this rational q");
  eval->add_option("--eps", ea.eps, "0 or 1 for xi");
  eval->add_option("--poly", ea.poly, "Polynomials for the poly model: 'a0,a1;b0,b1,b2'");
  eval->add_option("--kind", ea.kind, "classical kind: zeta|diamond|binom");
  eval->add_option("--order", ea.order, "Series truncation order")->check(CLI::NonNegativeNumber);
  eval->add_flag("--json", ea.json, "JSON output");

  std::string word_eps;
  std::string word_c;
  bool word_json = false;
  auto* word = app.add_subcommand("word", "Print a constructor word");
  word->add_option("--eps", word_eps, "0|1|E|D|classical-E|classical-D")->required();
  word->add_option("--c", word_c, "Flattened (c1,...,c2r)")->required();
  word->add_flag("--json", word_json, "JSON output");

  std::string tr_dir;
  std::optional<std::string> tr_l;
  std::string tr_k;
  bool tr_json = false;
  auto* transform = app.add_subcommand("transform", "Expand between the SZ and dagger models");
  transform->add_option("--direction", tr_dir, "sz-from-dagger|dagger-from-sz")->required();
  transform->add_option("--l", tr_l, "Bar/zero block lengths (omit for plain indices)");
  transform->add_option("--k", tr_k, "Index entries")->required();
  transform->add_flag("--json", tr_json, "JSON output");

  VerifyArgs va;
  std::string positional_identity;
  auto* verify = app.add_subcommand("verify", "Check one identity instance");
  verify->add_option("identity_name", positional_identity, "Identity name (or use --identity)");
  verify->add_option("--identity", va.identity, "Identity name");
  verify->add_option("--eps", va.eps);
  verify->add_option("--c", va.c);
  verify->add_option("--l", va.l);
  verify->add_option("--k", va.k);
  verify->add_option("--N", va.N);
  verify->add_option("--M", va.M);
  verify->add_option("--order", va.order)->check(CLI::NonNegativeNumber);
  verify->add_option("--r", va.r, "Depth for generating functions; m for the series identities");
  verify->add_option("--maxdeg", va.maxdeg)->check(CLI::NonNegativeNumber);
  verify->add_option("--formula", va.formula, "Transform formula 1..4");
  verify->add_option("--max-weight", va.max_weight);
  verify->add_option("--word", va.word, "Word over x, y for bridge checks");
  verify->add_option("--model", va.model, "dagger|bz for independence");
  verify->add_option("--q", va.q, "Comma-separated rational q samples");
  verify->add_option("--fault", va.fault, "Inject a sign fault into the constructors (main_finite*)");
  verify->add_flag("--json", va.json, "JSON output");

  std::string config_path = "default";
  std::string filter;
  bool suite_text = false;
  auto* suite = app.add_subcommand("suite", "Run the verification suite");
  suite->add_option("--config", config_path, "Config file, or 'default'");
  suite->add_option("--filter", filter, "Run only this identity");
  suite->add_flag("--text", suite_text, "One line per case instead of JSON");

  std::vector<std::string> args;
  for (int i = argc - 1; i > 0; --i) args.emplace_back(argv[i]);
  try {
    app.parse(std::move(args));
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsageError;
  }

  try {
    if (*eval) return run_eval(ea, out);
    if (*word) return run_word(word_eps, word_c, word_json, out);
    if (*transform) return run_transform(tr_dir, tr_l, tr_k, tr_json, out);
    if (*verify) {
      if (va.identity.empty()) va.identity = positional_identity;
      if (va.identity.empty()) throw UsageError("verify needs an identity name");
      const Report r = run_identity(va);
      emit_reports({r}, va.json, out);
      return r.pass ? kOk : kVerificationFailed;
    }
    if (*suite) {
      const SuiteConfig cfg = load_config(config_path);
      const SuiteResult result = run_suite(cfg, filter);
      if (suite_text) {
        emit_reports(result.reports, false, out);
      } else {
        nlohmann::ordered_json j;
        j["config"] = suite_config_to_json(cfg);
        j["summary"] = suite_summary(result);
        j["reports"] = reports_to_json(result.reports);
        out << j.dump(2) << "\n";
      }
      return result.all_pass() ? kOk : kVerificationFailed;
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsageError;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kDomainError;
  }
  return kUsageError;
}

}  // namespace qmzv::cli
