#include "burau_forge/cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "burau_forge/artin.hpp"
#include "burau_forge/error.hpp"
#include "burau_forge/hyperbolic.hpp"
#include "burau_forge/modular.hpp"
#include "burau_forge/quantum.hpp"
#include "burau_forge/triangle.hpp"

namespace burau_forge {

namespace {

struct Range {
  long lo = 0, hi = 0;
};

Range parse_range(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) throw ParseError("range must look like A..B");
  Range r;
  try {
    std::size_t used = 0;
    r.lo = std::stol(text.substr(0, dots), &used);
    if (used != dots) throw ParseError("bad range start");
    const std::string rest = text.substr(dots + 2);
    r.hi = std::stol(rest, &used);
    if (used != rest.size()) throw ParseError("bad range end");
  } catch (const std::logic_error&) {
    throw ParseError("range must look like A..B");
  }
  if (r.lo > r.hi) throw ParseError("range start exceeds its end");
  return r;
}

bool is_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

GroupWord parse_gamma_word(const std::string& text) { return GroupWord::parse(text, gamma_alphabet(), GroupContext::free()); }

void verify_suite(const std::string& suite, const Range& r, Report& rep) {
  rep.params["range"] = std::to_string(r.lo) + ".." + std::to_string(r.hi);
  std::vector<long> skipped;
  for (long v = r.lo; v <= r.hi; ++v) {
    if (suite == "even") {
      rep.claims.push_back(verify_even_orbit(v));
    } else if (suite == "odd") {
      rep.claims.push_back(verify_odd_orbit(v));
    } else if (suite == "oddlem") {
      rep.claims.push_back(verify_embedding_orbit(v));
    } else if (suite == "kernel") {
      if (v == 1 || v == 6) {
        skipped.push_back(v);
        continue;
      }
      rep.claims.push_back(verify_kernel_orbit(v));
    } else if (suite == "onerel") {
      rep.claims.push_back(verify_one_relator(v));
    } else if (suite == "psl") {
      if (v % 2 == 1 && v >= 5) {
        rep.claims.push_back(verify_psi_relations(v));
        rep.claims.push_back(verify_ab_images(v));
      }
      rep.claims.push_back(verify_psl_order(v));
    } else if (suite == "st" || suite == "presentation") {
      if (v % 2 == 0) {
        skipped.push_back(v);
        continue;
      }
      rep.claims.push_back(suite == "st" ? verify_st_kernel(v) : verify_presentation(v));
    }
  }
  if (!skipped.empty()) rep.params["skipped"] = skipped;
}

void certify_free(long order, const std::string& xs, const std::string& ys, int max_len, bool pingpong,
                  const PingPongConfig& cfg, Report& rep) {
  const CyclotomicNumber q = CyclotomicNumber::root_of_unity(order, 1);
  const GroupWord x = parse_gamma_word(xs);
  const GroupWord y = parse_gamma_word(ys);
  const GammaGenerators g = gamma_generators(q);
  const ProjMatrix2 X = eval_matrix_word(x, {g.A, g.B});
  const ProjMatrix2 Y = eval_matrix_word(y, {g.A, g.B});
  rep.results["classification"] = to_json(classify(q));

  const RelationSearch rs = short_relation_oracle(X, Y, max_len);
  Claim oracle{"no-short-relation", "free-commutator-subgroup", status_of(!rs.witness), {{"max_len", max_len}}};
  oracle.witnesses.push_back({{"words_enumerated", rs.words_enumerated}});
  if (rs.witness) oracle.witnesses.push_back({{"relation", rs.witness->to_string()}, {"length", rs.witness->length()}});
  rep.claims.push_back(oracle);
  if (!pingpong || rs.witness) return;

  Claim pp{"ping-pong", "free-commutator-subgroup", ClaimStatus::Flagged,
           {{"max_power", cfg.max_power}, {"precision", cfg.precision}}};
  const auto embeddings = indefinite_embeddings(q);
  if (embeddings.empty()) {
    pp.note = "no embedding with an indefinite invariant form";
    rep.claims.push_back(pp);
    return;
  }
  const PingPongResult res = ping_pong_certify(q, embeddings.front(), x, y, cfg);
  pp.params["embedding"] = embeddings.front();
  if (res.outcome == SearchOutcome::PrecisionExhausted) throw PrecisionExhausted(res.detail);
  if (res.outcome == SearchOutcome::NotFound) {
    pp.note = res.detail;
  } else {
    const bool ok = verify_certificate(*res.certificate);
    pp.status = status_of(ok);
    pp.witnesses.push_back({{"powers", {{"a", res.certificate->a}, {"b", res.certificate->b}}},
                            {"margin", rational_to_string(res.certificate->margin)},
                            {"reverified", ok}});
    rep.results["certificate"] = to_json(*res.certificate);
  }
  rep.claims.push_back(pp);
}

void verify_cert(const std::string& path, Report& rep) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read " + path);
  Json j;
  try {
    j = Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("certificate file is not JSON: ") + e.what());
  }
  if (j.contains("certificate")) j = j["certificate"];
  const PingPongCertificate c = certificate_from_json(j);
  Claim claim{"certificate-verified", "free-commutator-subgroup", status_of(verify_certificate(c)), {{"file", path}}};
  claim.witnesses.push_back({{"powers", {{"a", c.a}, {"b", c.b}}}, {"recheck_precision", 2 * c.precision}});
  rep.claims.push_back(claim);
}

void artin_cmd(const std::string& text, int strand, int depth, Report& rep) {
  const GroupWord braid = GroupWord::parse(text, braid_alphabet(3), GroupContext::braid(3));
  const MagnusSeries m = longitude_magnus(braid, strand, depth);
  const GroupWord l = longitude(braid, strand);
  const auto d = series_depth(m);
  rep.results["longitude"] = l.to_string();
  rep.results["magnus"] = to_json(m);
  rep.results["depth"] = d ? Json(*d) : Json(nullptr);
  Claim c{"longitude-expansion", "longitude-magnus-depth", status_of(magnus_expansion(l, depth) == m)};
  c.witnesses.push_back({{"route", "word"}, {"agrees_with", "cocycle"}});
  rep.claims.push_back(c);
  const bool relation = artin_action(GroupWord::parse("g1 g2 g1", braid_alphabet(3), GroupContext::braid(3))) ==
                        artin_action(GroupWord::parse("g2 g1 g2", braid_alphabet(3), GroupContext::braid(3)));
  rep.claims.push_back(Claim{"braid-relation", "artin-action", status_of(relation)});
}

void euler_cmd(long n, Report& rep) {
  const auto [orbifold, surface] = euler_characteristic(n);
  rep.results["orbifold_euler_characteristic"] = rational_to_string(orbifold);
  rep.results["euler_characteristic"] = rational_to_string(surface);
  rep.results["psl_order"] = psl_order(n);
  Claim c{"euler-characteristic", "euler-characteristic", ClaimStatus::Pass, {{"n", n}}};
  const bool integral = surface.get_den() == 1 && mpz_class(surface.get_num() % 2) == 0;
  c.status = status_of(integral && surface == orbifold * psl_order(n));
  if (integral) rep.results["genus"] = mpz_class(1 - surface.get_num() / 2).get_str();
  rep.claims.push_back(c);
}

void f_cmd(long n, Report& rep) {
  const mpq_class f = f_of_n(n);
  rep.results["f"] = rational_to_string(f);
  Claim c{"surface-generator-count", "surface-generator-count", ClaimStatus::Pass, {{"n", n}}};
  const auto [orbifold, surface] = euler_characteristic(n);
  bool ok = f == -surface;
  c.witnesses.push_back({{"formula", "psl_order(n) (n - 6) / (6n)"}, {"value", rational_to_string(f)}});
  if (is_prime(n)) {
    const mpq_class closed = f_prime_closed_form(n);
    c.witnesses.push_back({{"formula", "(n + 1)(n - 1)(n - 6) / 12"}, {"value", rational_to_string(closed)}});
    ok = ok && closed == f;
  }
  c.status = status_of(ok);
  rep.claims.push_back(c);
}

std::string utc_now() {
  const std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&t, &tm);
  std::ostringstream s;
  s << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return s.str();
}

void summarize(const Report& rep, bool strict, std::ostream& err) {
  int pass = 0, fail = 0, flagged = 0;
  for (const auto& c : rep.claims) {
    if (c.status == ClaimStatus::Pass) ++pass;
    if (c.status == ClaimStatus::Fail) ++fail;
    if (c.status == ClaimStatus::Flagged) ++flagged;
  }
  err << rep.command << ": " << rep.claims.size() << " claims, " << pass << " pass, " << fail << " fail, " << flagged
      << " flagged -> " << (rep.failed(strict) ? "FAIL" : "PASS") << "\n";
  for (const auto& c : rep.claims) {
    if (c.status == ClaimStatus::Pass) continue;
    err << "  " << to_string(c.status) << ": " << c.id << " " << c.params.dump() << (c.note.empty() ? "" : " (" + c.note + ")")
        << "\n";
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact verification of Burau images of B_3 at roots of unity", "burau-forge"};
  app.require_subcommand(1);
  app.fallthrough();
  bool strict = false, timestamps = false;
  app.add_flag("--strict", strict, "Treat flagged claims as failures");
  app.add_flag("--timestamps", timestamps, "Add a generation timestamp to the report");

  long order = 0, p = 0, n = 0;
  std::string suite, range, xs, ys, file, braid;
  int max_len = 0, strand = 0, depth = 0;
  bool pingpong = false;
  PingPongConfig cfg;

  auto* classify_cmd = app.add_subcommand("classify", "Classify the image group at q = zeta_N");
  classify_cmd->add_option("--order", order, "Order N of q")->required()->check(CLI::PositiveNumber);

  auto* verify_cmd = app.add_subcommand("verify", "Run a verification suite over a parameter range");
  verify_cmd->add_option("--suite", suite, "Suite name")
      ->required()
      ->check(CLI::IsMember({"even", "odd", "oddlem", "kernel", "onerel", "psl", "st", "presentation"}));
  verify_cmd->add_option("--range", range, "Parameter range A..B")->required();

  auto* params_cmd = app.add_subcommand("params", "Quantum representation parameters at level p");
  params_cmd->add_option("--p", p, "Level p")->required();

  auto* twist_cmd = app.add_subcommand("twist-order", "Projective order of the Dehn twist at level p");
  twist_cmd->add_option("--p", p, "Level p")->required();

  auto* cert_cmd = app.add_subcommand("certify-free", "Search for relations and ping-pong certificates");
  cert_cmd->add_option("--order", order, "Order N of q")->required()->check(CLI::PositiveNumber);
  cert_cmd->add_option("--x", xs, "Word in A, B")->required();
  cert_cmd->add_option("--y", ys, "Word in A, B")->required();
  cert_cmd->add_option("--max-len", max_len, "Maximum relation length")->required()->check(CLI::PositiveNumber);
  cert_cmd->add_flag("--pingpong", pingpong, "Also search for a ping-pong certificate");
  cert_cmd->add_option("--max-power", cfg.max_power, "Largest power of x and y tried")->check(CLI::PositiveNumber);
  cert_cmd->add_option("--precision", cfg.precision, "Starting precision in bits")->check(CLI::Range(16u, 4096u));

  auto* vcert_cmd = app.add_subcommand("verify-cert", "Re-check a ping-pong certificate");
  vcert_cmd->add_option("--file", file, "Certificate or certify-free report")->required();

  auto* artin_sub = app.add_subcommand("artin", "Longitude of a pure 3-braid and its Magnus expansion");
  artin_sub->add_option("--braid", braid, "Braid word in g1, g2")->required();
  artin_sub->add_option("--strand", strand, "Strand 1..3")->required()->check(CLI::Range(1, 3));
  artin_sub->add_option("--depth", depth, "Truncation degree")->required()->check(CLI::Range(1, 12));

  auto* euler_sub = app.add_subcommand("euler", "Euler characteristics of the kernel surface group");
  euler_sub->add_option("--n", n, "Odd n >= 7")->required();

  auto* f_sub = app.add_subcommand("f", "f(n) for odd n >= 7");
  f_sub->add_option("--n", n, "Odd n >= 7")->required();

  std::vector<std::string> argv(args.rbegin(), args.rend());
  try {
    app.parse(argv);
  } catch (const CLI::CallForHelp& e) {
    err << app.help();
    return kExitPass;
  } catch (const CLI::CallForAllHelp& e) {
    err << app.help("", CLI::AppFormatMode::All);
    return kExitPass;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kExitUsage;
  }

  Report rep;
  try {
    if (*classify_cmd) {
      rep.command = "classify";
      rep.params["order"] = order;
      const TriangleClassification t = classify_order(order);
      rep.results["classification"] = to_json(t);
      Claim c{"classification", "triangle-classification", ClaimStatus::Pass, {{"order", order}}};
      c.witnesses.push_back(to_json(t));
      rep.claims.push_back(c);
    } else if (*verify_cmd) {
      rep.command = "verify";
      rep.params["suite"] = suite;
      verify_suite(suite, parse_range(range), rep);
    } else if (*params_cmd) {
      rep.command = "params";
      rep.params["p"] = p;
      rep.results["quantum_params"] = to_json(build_params(p));
      rep.claims.push_back(verify_quantum_orders(p));
      if (p >= 5) rep.claims.push_back(verify_gamma_at_p(p));
    } else if (*twist_cmd) {
      rep.command = "twist-order";
      rep.params["p"] = p;
      rep.results["twist_order"] = twist_projective_order(p);
      rep.claims.push_back(verify_twist_order(p));
    } else if (*cert_cmd) {
      rep.command = "certify-free";
      rep.params = {{"order", order}, {"x", xs}, {"y", ys}, {"max_len", max_len}, {"pingpong", pingpong}};
      if (pingpong) {
        rep.params["max_power"] = cfg.max_power;
        rep.params["precision"] = cfg.precision;
      }
      certify_free(order, xs, ys, max_len, pingpong, cfg, rep);
    } else if (*vcert_cmd) {
      rep.command = "verify-cert";
      rep.params["file"] = file;
      verify_cert(file, rep);
    } else if (*artin_sub) {
      rep.command = "artin";
      rep.params = {{"braid", braid}, {"strand", strand}, {"depth", depth}};
      artin_cmd(braid, strand, depth, rep);
    } else if (*euler_sub) {
      rep.command = "euler";
      rep.params["n"] = n;
      euler_cmd(n, rep);
    } else if (*f_sub) {
      rep.command = "f";
      rep.params["n"] = n;
      f_cmd(n, rep);
    }
  } catch (const PrecisionExhausted& e) {
    err << "precision exhausted: " << e.what() << "\n";
    return kExitPrecision;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitFail;
  }

  Json j = rep.to_json(strict);
  if (timestamps) j["timestamp"] = utc_now();
  out << j.dump(2) << "\n";
  summarize(rep, strict, err);
  return rep.failed(strict) ? kExitFail : kExitPass;
}

}  // namespace burau_forge
