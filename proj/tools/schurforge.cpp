// schurforge: compute Schur polynomials, check their structural identities,
// and judge irreducibility over finite fields.
//
// Exit codes: 0 success, 1 failed identity or inconsistent verdict, 2 usage or
// configuration error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "schurforge/schurforge.hpp"

namespace sf = schurforge;

namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

struct Options {
  std::string c;
  std::string field = "Q";
  std::optional<std::uint32_t> cap;
  std::string format;
  std::string output;
  std::uint64_t seed = 1;
  std::size_t workers = 1;
  std::size_t var = 0;
  bool certify = false;
  bool timing = false;
  bool inject_mutation = false;
  bool no_rationals = false;
  std::uint32_t amax = 9;
  std::uint32_t bmax = 12;
  std::uint32_t cmax = 8;
  std::uint32_t nmax = 4;
  std::uint32_t kmax = 10;
  std::uint32_t squarefree_kmax = 30;
  std::vector<std::uint32_t> primes;
};

class UsageError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::size_t default_workers() {
  if (const char* env = std::getenv("SCHURFORGE_WORKERS")) {
    try {
      const long v = std::stol(env);
      if (v >= 1) return static_cast<std::size_t>(v);
    } catch (const std::exception&) {
    }
    throw UsageError(std::string("SCHURFORGE_WORKERS must be a positive integer, got '") + env + "'");
  }
  return 1;
}

// Writes the main output to -o or stdout; the summary goes to stdout when the
// main output went to a file, otherwise to stderr.
void emit(const Options& opt, const std::string& body, const std::string& summary = "") {
  if (opt.output.empty()) {
    std::cout << body;
    if (!summary.empty()) std::cerr << summary << '\n';
    return;
  }
  std::ofstream out(opt.output, std::ios::binary);
  if (!out || !(out << body) || !out.flush()) throw UsageError("cannot write " + opt.output);
  if (!summary.empty()) std::cout << summary << '\n';
}

std::string join(const std::vector<std::uint32_t>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

void require_format(const std::string& format, std::initializer_list<const char*> allowed) {
  for (const char* a : allowed)
    if (format == a) return;
  throw UsageError("unsupported --format '" + format + "' for this command");
}

// Worker count is deliberately not recorded.
sf::Json base_config(const Options& opt) {
  return sf::Json{{"c", opt.c}, {"field", opt.field}, {"format", opt.format}};
}

int cmd_show(const Options& opt) {
  require_format(opt.format, {"text", "json"});
  const auto c = sf::ExponentSequence::parse(opt.c);
  const auto ctx = sf::parse_field_spec(opt.field);
  return std::visit(
      [&](const auto& f) {
        const auto s = sf::schur_poly(c, f);
        const auto v = sf::vandermonde(c, f);
        if (opt.format == "json") {
          auto doc = sf::document("show", base_config(opt));
          doc["field"] = sf::field_json(f);
          doc["c"] = c.values();
          doc["gaps"] = c.gaps();
          doc["partition"] = c.partition();
          doc["total_degree"] = c.schur_degree();
          doc["schur"] = sf::to_string(s);
          doc["vandermonde"] = sf::to_string(v);
          emit(opt, doc.dump(2) + "\n");
        } else {
          std::ostringstream out;
          out << "S: " << sf::to_string(s) << '\n'
              << "V: " << sf::to_string(v) << '\n'
              << "field: " << f.name() << '\n'
              << "total_degree: " << c.schur_degree() << '\n'
              << "partition: " << join(c.partition()) << '\n'
              << "gaps: " << join(c.gaps()) << '\n';
          emit(opt, out.str());
        }
        return kOk;
      },
      ctx);
}

int cmd_expand(const Options& opt) {
  require_format(opt.format, {"text", "json"});
  const auto c = sf::ExponentSequence::parse(opt.c);
  if (c.size() != 3) throw UsageError("expand works on sequences of length 3");
  if (c[0] != 0) throw UsageError("expand needs c_0 = 0");
  if (opt.var > 2) throw UsageError("--var must be 0, 1 or 2");
  const std::uint32_t a = c[1], b = c[2];
  const auto ctx = sf::parse_field_spec(opt.field);
  return std::visit(
      [&](const auto& f) {
        using F = std::decay_t<decltype(f)>;
        const auto s = sf::schur_poly(c, f);
        const auto table = sf::expand_in_var(s, opt.var);
        std::vector<std::size_t> yz;
        for (std::size_t v = 0; v < 3; ++v)
          if (v != opt.var) yz.push_back(v);
        const auto ca = sf::ck_biv(a, f, 3, yz[0], yz[1]);
        const auto cba = sf::ck_biv(b - a, f, 3, yz[0], yz[1]);
        const std::string na = "C" + std::to_string(a), nba = "C" + std::to_string(b - a);
        sf::Json rows = sf::Json::array();
        std::ostringstream text;
        text << "expansion of S_(" << c.to_string() << ") over " << f.name() << " in x" << opt.var << '\n';
        for (std::size_t i = 0; i < table.coeffs.size(); ++i) {
          const auto& p = table.coeffs[i];
          const std::uint32_t power = table.offset + static_cast<std::uint32_t>(i);
          auto flags = [&](const sf::MPoly<F>& ck) {
            if (p.is_zero()) return std::pair<bool, bool>{false, true};
            return std::pair<bool, bool>{sf::monomial_associate(p, ck).has_value(), sf::exact_divide(p, ck).has_value()};
          };
          const auto [assoc_a, div_a] = flags(ca);
          const auto [assoc_ba, div_ba] = flags(cba);
          rows.push_back(sf::Json{{"i", power},
                                  {"P", sf::to_string(p)},
                                  {"assoc_" + na, assoc_a},
                                  {"assoc_" + nba, assoc_ba},
                                  {"div_" + na, div_a},
                                  {"div_" + nba, div_ba}});
          auto yes = [](bool v) { return v ? "true" : "false"; };
          text << "i=" << power << " P=" << sf::to_string(p) << " assoc_" << na << '=' << yes(assoc_a) << " assoc_" << nba
               << '=' << yes(assoc_ba) << " div_" << na << '=' << yes(div_a) << " div_" << nba << '=' << yes(div_ba)
               << '\n';
        }
        if (opt.format == "json") {
          auto cfg = base_config(opt);
          cfg["var"] = opt.var;
          auto doc = sf::document("expand", cfg);
          doc["field"] = sf::field_json(f);
          doc["rows"] = rows;
          emit(opt, doc.dump(2) + "\n");
        } else {
          emit(opt, text.str());
        }
        return kOk;
      },
      ctx);
}

int cmd_verify_facts(const Options& opt) {
  require_format(opt.format, {"text", "json"});
  if (opt.bmax > 16) throw UsageError("--bmax is limited to 16");
  if (opt.nmax < 2 || opt.nmax > sf::kMaxDeterminantSize - 1) throw UsageError("--nmax must be between 2 and 5");
  if (opt.cmax > 12) throw UsageError("--cmax is limited to 12");
  std::vector<sf::FieldCtx> fields;
  for (auto p : opt.primes) {
    if (!sf::is_prime(p)) throw UsageError(std::to_string(p) + " is not prime");
    fields.emplace_back(sf::make_prime_field(p));
  }
  if (!opt.no_rationals) fields.emplace_back(sf::Rationals{});
  const sf::FactOptions fopt{opt.inject_mutation};

  std::vector<std::function<sf::FactReport()>> tasks;
  for (const auto& ctx : fields)
    for (std::uint32_t b = 4; b <= opt.bmax; ++b)
      for (std::uint32_t a = 2; a + 1 < b; ++a) {
        tasks.push_back([=] { return std::visit([&](const auto& f) { return sf::verify_expansion_fact(a, b, f, fopt); }, ctx); });
        if (a > b - a)
          tasks.push_back([=] { return std::visit([&](const auto& f) { return sf::verify_mirror_fact(a, b, f); }, ctx); });
      }
  // Sequences (0, c_1, ..., c_{n-1}) with c_{n-1} <= cmax.
  std::vector<sf::ExponentSequence> seqs;
  for (std::uint32_t n = 3; n <= opt.nmax; ++n) {
    std::vector<std::uint32_t> cur{0};
    std::function<void()> rec = [&] {
      if (cur.size() == n) {
        seqs.emplace_back(cur);
        return;
      }
      for (std::uint32_t v = cur.back() + 1; v <= opt.cmax; ++v) {
        cur.push_back(v);
        rec();
        cur.pop_back();
      }
    };
    rec();
  }
  for (const auto& ctx : fields)
    for (const auto& c : seqs)
      tasks.push_back([=] { return std::visit([&](const auto& f) { return sf::verify_minmax_fact(c, f, fopt); }, ctx); });
  for (auto p : opt.primes) {
    for (std::uint32_t k = 1; k <= opt.kmax; ++k)
      if (sf::ck_splitting_field_fits(k, p)) tasks.push_back([=] { return sf::verify_ck_roots(k, p); });
    for (std::uint32_t k = 1; k <= opt.squarefree_kmax; ++k)
      tasks.push_back([=] {
        sf::FactReport r{"ck_squarefree", {{"k", k}, {"p", p}}, true, {}};
        const bool got = sf::ck_squarefree(k, p), want = k % p != 0;
        if (got != want) {
          r.passed = false;
          r.witness = std::string("gcd(x^k - 1, k x^(k-1)) ") + (got ? "is 1" : "is not 1") + " but p " +
                      (want ? "does not divide" : "divides") + " k";
        }
        return r;
      });
  }

  const auto reports = sf::parallel_map(tasks.size(), opt.workers, [&](std::size_t i) { return tasks[i](); });
  std::size_t failures = 0;
  for (const auto& r : reports) failures += !r.passed;
  const std::string summary = std::to_string(reports.size()) + " checks, " + std::to_string(reports.size() - failures) +
                              " passed, " + std::to_string(failures) + " failed";
  if (opt.format == "json") {
    auto cfg = sf::Json{{"primes", opt.primes},     {"rationals", !opt.no_rationals}, {"bmax", opt.bmax},
                        {"nmax", opt.nmax},         {"cmax", opt.cmax},               {"kmax", opt.kmax},
                        {"squarefree_kmax", opt.squarefree_kmax}, {"inject_mutation", opt.inject_mutation}};
    auto doc = sf::document("verify-facts", cfg);
    doc["reports"] = sf::Json::array();
    for (const auto& r : reports) doc["reports"].push_back(sf::to_json(r));
    doc["summary"] = summary;
    emit(opt, doc.dump(2) + "\n", summary);
  } else {
    std::ostringstream out;
    for (const auto& r : reports) {
      out << (r.passed ? "pass " : "FAIL ") << r.fact << ' ' << r.params.dump();
      if (!r.passed) out << " -- " << r.witness;
      out << '\n';
    }
    emit(opt, out.str(), summary);
  }
  return failures == 0 ? kOk : kFailed;
}

sf::GaloisField finite_field(const std::string& spec) {
  const auto ctx = sf::parse_field_spec(spec);
  if (!std::holds_alternative<sf::GaloisField>(ctx)) throw UsageError("this command needs a finite field, not Q");
  return std::get<sf::GaloisField>(ctx);
}

int cmd_irred(const Options& opt) {
  require_format(opt.format, {"text", "json"});
  const auto c = sf::ExponentSequence::parse(opt.c);
  const auto f = finite_field(opt.field);
  const auto check = sf::theorem_conditions(c, f.characteristic());
  const auto s = sf::schur_poly(c, f);
  sf::Verdict verdict;
  if (c.size() > 0 && c[0] > 0) {
    // The monomial factor settles it; the divisor search assumes none.
    auto w = sf::shifted_reducibility_witness(c, f);
    verdict.kind = sf::VerdictKind::Reducible;
    verdict.factor = std::move(w.factor);
    verdict.cofactor = std::move(w.cofactor);
  } else if (s.is_constant()) {
    throw UsageError("S_c is constant for c = " + c.to_string() + "; irreducibility is undefined");
  } else {
    verdict = sf::brute_force_verdict(s, opt.cap, opt.workers);
  }
  const bool consistent = sf::is_consistent(check, verdict);
  std::optional<sf::Certificate> cert;
  if (opt.certify && c.size() >= 3 && !s.is_constant()) cert = sf::specialization_certificate(s, opt.seed);

  if (opt.format == "json") {
    auto cfg = base_config(opt);
    cfg["cap"] = opt.cap ? sf::Json(*opt.cap) : sf::Json(nullptr);
    cfg["seed"] = opt.seed;
    cfg["certify"] = opt.certify;
    auto doc = sf::document("irred", cfg);
    doc["field"] = sf::field_json(f);
    doc["c"] = c.values();
    doc["total_degree"] = s.total_degree();
    doc["theorem"] = sf::theorem_json(check);
    doc["verdict"] = sf::verdict_json(verdict);
    doc["consistent"] = consistent;
    if (cert) {
      sf::Json subst = sf::Json::array();
      for (const auto& [alpha, beta] : cert->substitution) subst.push_back({f.to_string(alpha), f.to_string(beta)});
      doc["certificate"] = sf::Json{{"certified", cert->certified}, {"attempts", cert->attempts}, {"substitution", subst}};
      if (cert->image) doc["certificate"]["image"] = sf::to_string(*cert->image);
    }
    emit(opt, doc.dump(2) + "\n");
  } else {
    std::ostringstream out;
    std::string failures;
    for (const auto& x : check.failures) failures += (failures.empty() ? "" : ",") + x;
    out << "c: " << c.to_string() << '\n'
        << "field: " << f.name() << '\n'
        << "total_degree: " << s.total_degree() << '\n'
        << "theorem_applies: " << (check.applies ? "true" : "false") << '\n'
        << "only_if_holds: " << (check.only_if_holds ? "true" : "false") << '\n'
        << "failed_conditions: " << (failures.empty() ? "none" : failures) << '\n'
        << "verdict: " << sf::to_string(verdict.kind) << '\n';
    if (verdict.factor)
      out << "witness: " << sf::to_string(*verdict.factor) << '\n' << "cofactor: " << sf::to_string(*verdict.cofactor) << '\n';
    out << "searched_degree: " << verdict.searched_degree << '\n'
        << "candidates_tested: " << verdict.candidates_tested << '\n'
        << "consistent: " << (consistent ? "true" : "false") << '\n';
    if (cert) {
      out << "certificate: " << (cert->certified ? "certified" : "unknown") << " after " << cert->attempts << " attempt(s)";
      if (cert->image) out << ", image " << sf::to_string(*cert->image);
      out << '\n';
    }
    emit(opt, out.str());
  }
  return consistent ? kOk : kFailed;
}

int cmd_survey(const Options& opt) {
  require_format(opt.format, {"csv", "json"});
  sf::SurveyConfig cfg;
  cfg.a_max = opt.amax;
  cfg.primes = opt.primes;
  cfg.cap = opt.cap;
  cfg.workers = opt.workers;
  cfg.timing = opt.timing;
  const auto records = sf::survey(cfg);
  const auto summary = sf::summarize(records);
  if (opt.format == "json") {
    auto config = sf::Json{{"amax", opt.amax},
                           {"primes", opt.primes},
                           {"cap", opt.cap ? sf::Json(*opt.cap) : sf::Json(nullptr)},
                           {"timing", opt.timing}};
    auto doc = sf::document("survey", config);
    doc["records"] = sf::Json::array();
    for (const auto& r : records) doc["records"].push_back(sf::survey_record_json(r));
    doc["summary"] = summary.line();
    emit(opt, doc.dump(2) + "\n", summary.line());
  } else {
    emit(opt, sf::survey_csv(records), summary.line());
  }
  return summary.inconsistent == 0 ? kOk : kFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Schur polynomial toolkit: construction, structural identities, irreducibility"};
  app.require_subcommand(1);
  app.set_version_flag("--version", sf::kVersion);
  Options opt;
  try {
    opt.workers = default_workers();
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }

  auto add_common = [&](CLI::App* sub, const std::string& default_format, bool with_field) {
    if (with_field) sub->add_option("-f,--field", opt.field, "field: p, p:m, or Q")->capture_default_str();
    sub->add_option("--format", opt.format, "output format (default " + default_format + ")");
    sub->add_option("-o,--output", opt.output, "write the main output to this file");
    sub->add_option("--workers", opt.workers, "worker threads (default: SCHURFORGE_WORKERS or 1)")->check(CLI::PositiveNumber);
  };

  auto* show = app.add_subcommand("show", "print S_c, V_c and derived data");
  show->add_option("-c", opt.c, "exponent sequence, e.g. 0,2,5")->required();
  add_common(show, "text", true);

  auto* expand = app.add_subcommand("expand", "expand S_(0,a,b) in one variable with divisibility flags");
  expand->add_option("-c", opt.c, "exponent sequence (0,a,b)")->required();
  expand->add_option("--var", opt.var, "variable to expand in (0, 1 or 2)")->capture_default_str();
  add_common(expand, "text", true);

  auto* verify = app.add_subcommand("verify-facts", "check the structural identities over a parameter grid");
  verify->add_option("--bmax", opt.bmax, "largest b for (0,a,b) expansion checks")->capture_default_str();
  verify->add_option("--primes", opt.primes, "comma-separated primes (default 2,3,5,7,11)")->delimiter(',');
  verify->add_option("--cmax", opt.cmax, "largest c_{n-1} for min/max checks")->capture_default_str();
  verify->add_option("--nmax", opt.nmax, "largest n for min/max checks")->capture_default_str();
  verify->add_option("--kmax", opt.kmax, "largest k for roots of C_k")->capture_default_str();
  verify->add_option("--squarefree-kmax", opt.squarefree_kmax, "largest k for squarefreeness of x^k - 1")->capture_default_str();
  verify->add_flag("--no-rationals", opt.no_rationals, "skip checks over Q");
  verify->add_flag("--inject-mutation", opt.inject_mutation, "perturb S_c before checking (harness self-test)");
  add_common(verify, "text", false);

  auto* irred = app.add_subcommand("irred", "judge irreducibility of S_c over a finite field");
  irred->add_option("-c", opt.c, "exponent sequence")->required();
  irred->add_option("--cap", opt.cap, "largest candidate factor degree");
  irred->add_option("--seed", opt.seed, "seed for --certify")->capture_default_str();
  irred->add_flag("--certify", opt.certify, "also try a bivariate specialization certificate");
  add_common(irred, "text", true);

  auto* survey = app.add_subcommand("survey", "judge every (0,a,b) with b <= amax over each prime");
  survey->add_option("--amax", opt.amax, "largest b")->capture_default_str();
  survey->add_option("--primes", opt.primes, "comma-separated primes (default 2,3,5,7)")->delimiter(',');
  survey->add_option("--cap", opt.cap, "largest candidate factor degree");
  survey->add_flag("--timing", opt.timing, "record wall-clock time per instance (output is then not reproducible)");
  add_common(survey, "csv", false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  if (opt.format.empty()) opt.format = survey->parsed() ? "csv" : "text";
  if (opt.primes.empty()) {
    if (verify->parsed()) opt.primes = {2, 3, 5, 7, 11};
    if (survey->parsed()) opt.primes = {2, 3, 5, 7};
  }

  try {
    if (show->parsed()) return cmd_show(opt);
    if (expand->parsed()) return cmd_expand(opt);
    if (verify->parsed()) return cmd_verify_facts(opt);
    if (irred->parsed()) return cmd_irred(opt);
    if (survey->parsed()) return cmd_survey(opt);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const sf::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
