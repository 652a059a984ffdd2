#include "dwork/cli.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <fstream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "dwork/deformation.hpp"
#include "dwork/errors.hpp"
#include "dwork/json_io.hpp"
#include "dwork/oracle.hpp"

namespace dwork {

namespace {

struct JobSpec {
  std::string command;
  int n = 0;
  int d = 0;
  std::string w;
  std::string v;
  std::string coords = "lambda";
  std::size_t order = 40;
  long p = 0;
  unsigned prec = 0;
  std::string f0;
  bool raw = false;
  std::string format = "json";
  unsigned jobs = 1;
  bool mutate = false;
  bool timing = false;
};

using Clock = std::chrono::steady_clock;

FamilyData family_of(const JobSpec& spec) { return validate_family(spec.n, spec.d, parse_int_list(spec.w)); }

CharVector char_vector_of(const JobSpec& spec, const FamilyData& family) {
  if (spec.v.empty()) throw UsageError("--v is required for '" + spec.command + "'");
  return make_char_vector(family, parse_int_list(spec.v));
}

void require_totally_nonzero(const FamilyData& family, const CharVector& v) {
  if (!is_totally_nonzero(v)) {
    throw DomainError("v = " + to_string(v) + " is not totally nonzero (rank " + std::to_string(rank(family, v)) +
                      "); no form ω_V exists");
  }
}

void require_order(const JobSpec& spec, int r) {
  if (spec.order < 1 || spec.order < static_cast<std::size_t>(r)) {
    throw UsageError("--order must be at least the rank " + std::to_string(r));
  }
}

Json base_record(const JobSpec& spec, const FamilyData& family) {
  return Json{{"command", spec.command}, {"family", to_json(family)}};
}

void emit(const JobSpec& spec, const Json& j, const std::string& text, std::ostream& out) {
  if (spec.format == "text") {
    out << text;
  } else {
    out << j.dump(2) << "\n";
  }
}

int cmd_family(const JobSpec& spec, std::ostream& out) {
  const FamilyData family = family_of(spec);
  Json j = base_record(spec, family);
  std::ostringstream text;
  text << "family n=" << family.n << " d=" << family.d << " dW=" << family.dW << " b=";
  for (std::size_t i = 0; i < family.b.size(); ++i) text << (i ? "," : "") << family.b[i];
  text << "\n";
  Json reps = Json::array();
  for (const auto& cls : symmetry_classes(family)) {
    const CharVector& v = cls.representative;
    const bool cyclic = cyclic_basis_expected(family, v);
    reps.push_back(Json{{"v", to_string(v)},
                        {"rank", rank(family, v)},
                        {"deg", v.deg},
                        {"N", v.N},
                        {"I", index_set_I(family, v)},
                        {"J", index_set_J(family, v)},
                        {"exponents", solution_exponents(family, v)},
                        {"cyclic_basis_fails", !cyclic},
                        {"orbit_count", cls.orbit_count}});
    text << "  V=(" << to_string(v) << ") rank=" << rank(family, v) << " orbits=" << cls.orbit_count
         << (cyclic ? "" : " cyclic basis fails") << "\n";
  }
  Json orbits = Json::array();
  for (const auto& v : representatives(family)) orbits.push_back(Json{{"v", to_string(v)}, {"rank", rank(family, v)}});
  j["representatives"] = reps;
  j["orbit_representatives"] = orbits;
  emit(spec, j, text.str(), out);
  return kExitOk;
}

DiffOperator reduced_operator(const JobSpec& spec, const FamilyData& family, const CharVector& v) {
  if (!spec.mutate) return reduce_P(family, v);
  DworkFactors f = factors_P(family, v);
  if (!f.right_params.empty()) f.right_params[0] += 1;
  return f.expand();
}

int cmd_operator(const JobSpec& spec, std::ostream& out) {
  const FamilyData family = family_of(spec);
  const CharVector v = char_vector_of(spec, family);
  require_totally_nonzero(family, v);
  Json j = base_record(spec, family);
  j["v"] = to_string(v);
  j["coords"] = spec.coords;
  j["rank"] = rank(family, v);
  j["N"] = v.N;
  std::ostringstream text;
  if (spec.coords == "lambda") {
    const DworkFactors f = factors_P(family, v);
    j["operator"] = to_json(reduce_P(family, v));
    j["factored"] = to_text(f);
    text << "P = " << to_text(f) << "\n";
    if (spec.raw) {
      const DworkFactors fr = factors_P_prime(family, v);
      j["raw"] = Json{{"operator", to_json(build_P_prime(family, v))}, {"factored", to_text(fr)}};
      text << "P' = " << to_text(fr) << "\n";
    }
  } else {
    const HypParams raw = build_hyp_prime(family, v);
    const HypParams h = cancel(raw);
    j["hyp"] = to_json(h);
    j["operator"] = to_json(expand(h));
    j["factored"] = to_text(h);
    text << to_text(h) << "\n";
    if (spec.raw) {
      j["raw"] = Json{{"hyp", to_json(raw)}, {"operator", to_json(expand(raw))}, {"factored", to_text(raw)}};
      text << "raw " << to_text(raw) << "\n";
    }
  }
  emit(spec, j, text.str(), out);
  return kExitOk;
}

struct Verdict {
  std::string v;
  std::string which;
  VerifyReport report;
  long ms = 0;
};

std::vector<Verdict> verify_one(const JobSpec& spec, const JacobianBasisCache& cache, const CharVector& v) {
  const FamilyData& family = cache.family();
  std::vector<Verdict> out;
  const std::pair<std::string, DiffOperator> ops[] = {{"P'", build_P_prime(family, v)},
                                                      {"P", reduced_operator(spec, family, v)}};
  for (const auto& [name, op] : ops) {
    const auto start = Clock::now();
    Verdict vd{to_string(v), name, verify_annihilation_report(cache, v, op), 0};
    vd.ms = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
    out.push_back(vd);
  }
  return out;
}

int cmd_verify(const JobSpec& spec, std::ostream& out) {
  const FamilyData family = family_of(spec);
  std::vector<CharVector> targets;
  if (spec.v.empty()) {
    targets = representatives(family);
  } else {
    CharVector v = char_vector_of(spec, family);
    require_totally_nonzero(family, v);
    targets.push_back(v);
  }
  JacobianBasisCache cache(family);
  std::vector<std::vector<Verdict>> results(targets.size());
  std::vector<std::exception_ptr> errors(targets.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < targets.size(); i = next++) {
      try {
        results[i] = verify_one(spec, cache, targets[i]);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const unsigned jobs = std::max(1U, std::min<unsigned>(spec.jobs, static_cast<unsigned>(targets.size())));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < jobs; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);

  Json j = base_record(spec, family);
  Json records = Json::array();
  std::ostringstream text;
  bool all = true;
  for (const auto& group : results)
    for (const auto& vd : group) {
      Json r{{"family", to_json(family)},
             {"v", vd.v},
             {"operator", vd.which},
             {"annihilates", vd.report.annihilates},
             {"top_pole_order", vd.report.top_pole_order}};
      if (spec.timing) r["wall_time_ms"] = vd.ms;
      records.push_back(r);
      all = all && vd.report.annihilates;
      text << "V=(" << vd.v << ") " << vd.which << (vd.report.annihilates ? " annihilates" : " does NOT annihilate")
           << " (top pole order " << vd.report.top_pole_order << ")\n";
    }
  j["results"] = records;
  j["mutated"] = spec.mutate;
  j["all_annihilate"] = all;
  emit(spec, j, text.str(), out);
  return all ? kExitOk : kExitFalse;
}

int cmd_deformation(const JobSpec& spec, std::ostream& out) {
  const FamilyData family = family_of(spec);
  const CharVector v = char_vector_of(spec, family);
  require_totally_nonzero(family, v);
  const int r = rank(family, v);
  require_order(spec, r);
  const Deformation def = compute_deformation(family, v, spec.order);
  Json j = base_record(spec, family);
  j["v"] = to_string(v);
  j["rank"] = r;
  j["order"] = spec.order;
  j["exponents"] = def.basis.exponents;
  j["cyclic"] = !def.change.has_value();
  j["A"] = to_json(def.a);
  j["connection"] = to_json(def.connection);
  j["basis_change"] = def.change ? to_json(def.change->b) : Json(nullptr);
  std::ostringstream text;
  text << "A(λ) for V=(" << to_string(v) << "), " << r << "x" << r << ", order " << spec.order << "\n";
  if (def.change) {
    text << "basis change B:\n";
    for (std::size_t i = 0; i < def.change->b.rows(); ++i) {
      for (std::size_t k = 0; k < def.change->b.cols(); ++k) text << "  " << to_string(def.change->b(i, k));
      text << "\n";
    }
  }
  for (std::size_t i = 0; i < def.a.rows(); ++i)
    for (std::size_t k = 0; k < def.a.cols(); ++k) {
      text << "A[" << i << "][" << k << "] =";
      for (std::size_t m = 0; m < def.a.order(); ++m)
        if (def.a(i, k)[m] != 0) text << " " << (def.a(i, k)[m] > 0 ? "+" : "") << to_string(def.a(i, k)[m]) << "*λ^" << m;
      text << "\n";
    }
  emit(spec, j, text.str(), out);
  return kExitOk;
}

int cmd_frobenius(const JobSpec& spec, std::ostream& out) {
  const FamilyData family = family_of(spec);
  const CharVector v = char_vector_of(spec, family);
  require_totally_nonzero(family, v);
  if (spec.p == 0) throw UsageError("--p is required for 'frobenius'");
  if (!is_prime(spec.p)) throw DomainError("p = " + std::to_string(spec.p) + " is not prime");
  const int r = rank(family, v);
  require_order(spec, std::max(r, 2));
  const CharVector v1 = frobenius_pullback(family, v, spec.p);
  RationalMatrix f0 = RationalMatrix::identity(static_cast<std::size_t>(r));
  if (!spec.f0.empty()) {
    std::ifstream in(spec.f0);
    if (!in) throw UsageError("cannot open F0 file '" + spec.f0 + "'");
    f0 = read_rational_matrix(in);
  }
  const std::size_t order1 = (spec.order + static_cast<std::size_t>(spec.p) - 1) / static_cast<std::size_t>(spec.p);
  const Deformation dv = compute_deformation(family, v, spec.order);
  const Deformation d1 = compute_deformation(family, v1, std::max<std::size_t>(order1, static_cast<std::size_t>(r)));
  const FrobeniusResult fr = frobenius_matrix(family, dv.a, d1.a, f0, spec.p, spec.order);
  const bool horizontal = horizontality_residual(fr.f, dv.connection, d1.connection, spec.p).is_zero();

  Json j = base_record(spec, family);
  j["v"] = to_string(v);
  j["v1"] = to_string(v1);
  j["p"] = spec.p;
  j["order"] = spec.order;
  j["F0"] = to_json(f0);
  j["F0_source"] = spec.f0.empty() ? "identity" : "file";
  j["F"] = to_json(fr.f);
  j["horizontality"] = Json{{"residual_zero", horizontal}, {"checked_to_order", spec.order - 1}};
  std::ostringstream text;
  text << "F(λ) for V=(" << to_string(v) << "), V1=(" << to_string(v1) << "), p=" << spec.p << ", order "
       << spec.order << "\nhorizontality residual " << (horizontal ? "zero" : "NONZERO") << " to order "
       << spec.order - 1 << "\n";
  if (spec.prec > 0) {
    Json coeffs = Json::array();
    for (const auto& pm : reduce_mod_p(fr.f, Integer(spec.p), spec.prec)) coeffs.push_back(to_json(pm));
    j["mod"] = Json{{"p", spec.p}, {"N", spec.prec}, {"coefficients", coeffs}};
  }
  emit(spec, j, text.str(), out);
  return horizontal ? kExitOk : kExitFalse;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  JobSpec spec;
  CLI::App app{"Picard-Fuchs operators, Griffiths-Dwork verification and deformation matrices for generalized Dwork families"};
  app.require_subcommand(1);

  auto add_family = [&spec](CLI::App* sub) {
    sub->add_option("--n", spec.n, "number of variables")->required();
    sub->add_option("--d", spec.d, "degree")->required();
    sub->add_option("--w", spec.w, "weights, comma separated")->required();
    sub->add_option("--format", spec.format, "json or text")->check(CLI::IsMember({"json", "text"}));
    sub->add_flag("--timing", spec.timing, "report wall-clock times (makes output non-deterministic)");
  };

  auto* family = app.add_subcommand("family", "representatives, ranks, index sets");
  add_family(family);

  auto* op = app.add_subcommand("operator", "reduced Picard-Fuchs operator P(V,W) or Hyp(V,W,b)");
  add_family(op);
  op->add_option("--v", spec.v, "character vector, comma separated")->required();
  op->add_option("--coords", spec.coords, "lambda or t")->check(CLI::IsMember({"lambda", "t"}));
  op->add_flag("--raw", spec.raw, "also print the unreduced operator");

  auto* verify = app.add_subcommand("verify", "check P' and P against the Griffiths-Dwork oracle");
  add_family(verify);
  verify->add_option("--v", spec.v, "character vector; all orbit representatives when omitted");
  verify->add_option("--jobs", spec.jobs, "worker threads over representatives")->check(CLI::PositiveNumber);
  verify->add_flag("--mutate", spec.mutate, "test hook: shift one parameter of P by +1");

  auto* deform = app.add_subcommand("deformation", "deformation matrix A(λ)");
  add_family(deform);
  deform->add_option("--v", spec.v, "character vector")->required();
  deform->add_option("--order", spec.order, "series truncation order");

  auto* frob = app.add_subcommand("frobenius", "Frobenius matrix F(λ) = A(λ)^-1 F0 A(λ^p)");
  add_family(frob);
  frob->add_option("--v", spec.v, "character vector")->required();
  frob->add_option("--order", spec.order, "series truncation order");
  frob->add_option("--p", spec.p, "prime")->required();
  frob->add_option("--prec", spec.prec, "also reduce modulo p^N");
  frob->add_option("--f0", spec.f0, "JSON file holding F(0) as an array of \"p/q\" rows (default identity)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  for (auto* sub : app.get_subcommands()) spec.command = sub->get_name();

  try {
    if (spec.command == "family") return cmd_family(spec, out);
    if (spec.command == "operator") return cmd_operator(spec, out);
    if (spec.command == "verify") return cmd_verify(spec, out);
    if (spec.command == "deformation") return cmd_deformation(spec, out);
    return cmd_frobenius(spec, out);
  } catch (const ResourceCapExceeded& e) {
    err << "resource cap exceeded: " << e.what() << "\n";
    return kExitResourceCap;
  } catch (const UnsupportedCase& e) {
    err << "unsupported case: " << e.what() << "\n";
    return kExitUnsupported;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace dwork
