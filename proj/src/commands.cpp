#include "homleib/commands.hpp"

#include <fstream>

#include "homleib/acceptance.hpp"
#include "homleib/lifting.hpp"
#include "homleib/sdpuce.hpp"

namespace homleib::cli {

namespace {

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError(path, 0, 0, "cannot write file");
  out << text;
}

template <class S>
io::json vector_json(const Vec<S>& v) {
  io::json out = io::json::array();
  for (Index i = 0; i < v.size(); ++i) out.push_back(io::write_scalar(v(i)));
  return out;
}

/// Loads the field-determining document, then runs body<S> for S = Rational
/// or Fp under the file's modulus. Errors become report entries.
template <class Body>
Report run(std::string command, std::vector<std::string> args, const std::string& file, Body&& body) {
  Report r(std::move(command), std::move(args));
  try {
    const io::Document doc = io::load_document(file);
    const std::string tag = io::field_of(doc);
    const std::uint64_t p = io::parse_field(tag, doc);
    r.fact("field", tag);
    if (p == 0) {
      body.template operator()<Rational>(r, doc);
    } else {
      const Fp::Modulus scope(p);
      body.template operator()<Fp>(r, doc);
    }
  } catch (const InputError& e) {
    r.error(e.what());
  } catch (const PreconditionError& e) {
    r.error(std::string("precondition ") + e.what());
  } catch (const DimensionError& e) {
    r.error(std::string("dimension: ") + e.what());
  } catch (const TheoremViolation& e) {
    r.check("theorem", CheckResult::fail(e.what(), {}));
  }
  return r;
}

template <class S>
void algebra_facts(Report& r, const std::string& prefix, const HomAlgebra<S>& L) {
  r.fact(prefix + "name", L.name);
  r.fact(prefix + "dim", L.dim());
}

/// Reference to an algebra from a document, rewritten relative to out_dir.
io::json rebase_ref(const io::Document& doc, const io::json& ref, const std::filesystem::path& out_dir) {
  if (!ref.is_string()) return ref;
  const auto target = std::filesystem::weakly_canonical(doc.dir / ref.get<std::string>());
  return target.lexically_relative(std::filesystem::weakly_canonical(out_dir)).generic_string();
}

}  // namespace

Report validate(const std::string& file, const Options&) {
  return run("validate", {file}, file, [&]<class S>(Report& r, const io::Document& doc) {
    const HomAlgebra<S> L = io::read_algebra<S>(doc);
    const AlgebraReport<S> a = analyze(L);
    algebra_facts(r, "", L);
    r.check("hom-leibniz identity", a.hom_leibniz);
    r.check("multiplicative", a.multiplicative);
    r.fact("perfect", a.perfect);
    r.fact("alpha-perfect", a.alpha_perfect);
    r.fact("antisymmetric", a.antisymmetric);
    r.fact("center dim", a.center.dim());
    r.fact("derived dim", a.derived.dim());
    r.fact("alpha image dim", a.alpha_image.dim());
    r.fact("ann ideal dim", a.ann_ideal.dim());
    r.fact("hl1 dim", L.dim() - a.derived.dim());
    for (const auto& w : a.warnings) r.note(w);
  });
}

Report uce(const std::string& file, const Options& opt) {
  std::vector<std::string> args = {file};
  if (opt.alpha) args.push_back("--alpha");
  return run("uce", args, file, [&]<class S>(Report& r, const io::Document& doc) {
    const HomAlgebra<S> L = io::read_algebra<S>(doc);
    algebra_facts(r, "", L);
    const UceResult<S> u = opt.alpha ? uce_alpha(L) : homleib::uce(L);
    r.fact("mode", opt.alpha ? "alpha" : "plain");
    r.fact("tensor dim", L.dim() * L.dim());
    r.fact("I_L generators", L.dim() * L.dim() * L.dim());
    r.fact("I_L dim", u.relations.dim());
    r.fact("carrier dim", u.carrier.dim());
    r.fact("uce dim", u.dim());
    r.fact("hl2 dim", u.hl2.dim());
    r.fact("centrally closed", u.hl2.is_zero());
    r.check("", u.checks);
    if (!opt.algebra_out.empty()) write_file(opt.algebra_out, io::format(io::write_algebra(u.alg)));
  });
}

Report semidirect(const std::string& action_file, const Options& opt) {
  std::vector<std::string> args = {action_file};
  if (!opt.name.empty()) args.push_back("--name " + opt.name);
  return run("semidirect", args, action_file, [&]<class S>(Report& r, const io::Document& doc) {
    const HomAction<S> a = io::read_action<S>(doc);
    algebra_facts(r, "actor ", a.actor);
    algebra_facts(r, "target ", a.target);
    const ActionCheck axioms = check_action_axioms(a);
    r.check("action axioms", axioms.first_failure);
    if (axioms.b_c_mismatch) r.note(axioms.first_failure.detail);
    if (!axioms) return;
    const Semidirect<S> sd = homleib::semidirect(a, opt.name);
    algebra_facts(r, "product ", sd.algebra);
    r.check("product hom-leibniz", check_hom_leibniz(sd.algebra));
    r.check("product multiplicative", check_multiplicative(sd.algebra));
    r.check("canonical sequence split exact", validate_split(split_extension_of(sd)));
    r.check("alpha sigma = sigma alpha_L", expect(Mat<S>(sd.algebra.alpha * sd.sigma.map) == Mat<S>(sd.sigma.map * a.actor.alpha)));
    r.check("alpha i = i alpha_M", expect(Mat<S>(sd.algebra.alpha * sd.i.map) == Mat<S>(sd.i.map * a.target.alpha)));
    if (!opt.algebra_out.empty()) write_file(opt.algebra_out, io::format(io::write_algebra(sd.algebra)));
    if (!opt.split_out.empty()) {
      if (opt.algebra_out.empty()) throw InputError(opt.split_out, 0, 0, "writing a split extension needs the product algebra path as well");
      const std::filesystem::path out_dir = std::filesystem::absolute(opt.split_out).parent_path();
      io::json se;
      se["format_version"] = io::kFormatVersion;
      se["kind"] = "split_extension";
      se["M"] = rebase_ref(doc, doc.value["target"], out_dir);
      se["B"] = std::filesystem::absolute(opt.algebra_out).lexically_relative(out_dir).generic_string();
      se["C"] = rebase_ref(doc, doc.value["actor"], out_dir);
      se["i"] = io::write_matrix(sd.i.map);
      se["pi"] = io::write_matrix(sd.pi.map);
      se["s"] = io::write_matrix(sd.sigma.map);
      write_file(opt.split_out, io::format(se));
    }
  });
}

Report check_split(const std::string& file, const Options&) {
  return run("check-split", {file}, file, [&]<class S>(Report& r, const io::Document& doc) {
    const SplitExtension<S> se = io::read_split_extension<S>(doc);
    algebra_facts(r, "M ", se.M);
    algebra_facts(r, "B ", se.B);
    algebra_facts(r, "C ", se.C);
    const CheckResult valid = validate_split(se);
    r.check("split extension valid", valid);
    if (!valid) return;
    const SplitEquivalence<S> eq = check_split_equivalence(se);
    r.check("phi: M x| C -> B isomorphism over the sequences", eq.result);
    r.check("induced action axioms", check_action_axioms(eq.action).first_failure);
    const SplitEquivalence<S> again = check_split_equivalence(split_extension_of(eq.rebuilt));
    r.check("rebuilt semidirect induces the same action", expect(again.result.ok && again.action == eq.action));
    r.fact("induced action trivial", is_zero_matrix(eq.action.lambda) && is_zero_matrix(eq.action.rho));
  });
}

namespace {

template <class S>
void lift_common(Report& r, const io::Document& doc, const std::string& matrix_file, const Options& opt,
                 bool automorphism) {
  const AlphaCover<S> cov = make_alpha_cover(io::read_cover<S>(doc));
  algebra_facts(r, "cover ", cov.cover());
  algebra_facts(r, "base ", cov.base());
  r.fact("Ker U dim", cov.uce_dst.hl2.dim());
  r.fact("C dim", cov.C.dim());
  r.check("cover", cov.checks);
  const Index n = cov.base().dim();
  const Mat<S> m = io::read_matrix_document<S>(io::load_document(matrix_file), n, n);
  const LiftResult<S> res = automorphism ? lift_automorphism(cov, m, opt.seed) : lift_derivation(cov, m, opt.seed);
  r.fact("lifts", res.lift.has_value());
  if (res.lift) {
    r.check("lift", res.checks);
    if (!opt.lift_out.empty()) write_file(opt.lift_out, io::format(io::write_matrix_document(*res.lift)));
  } else {
    r.fact("obstruction", vector_json(*res.obstruction));
    r.fact("image of obstruction", vector_json(Vec<S>(res.induced * *res.obstruction)));
    r.check("obstruction vector in C with image outside C", expect(obstruction_holds(cov, res)));
  }
}

}  // namespace

Report lift_aut(const std::string& cover_file, const std::string& matrix_file, const Options& opt) {
  return run("lift-aut", {cover_file, matrix_file, "--seed " + std::to_string(opt.seed)}, cover_file,
             [&]<class S>(Report& r, const io::Document& doc) { lift_common<S>(r, doc, matrix_file, opt, true); });
}

Report lift_der(const std::string& cover_file, const std::string& matrix_file, const Options& opt) {
  return run("lift-der", {cover_file, matrix_file, "--seed " + std::to_string(opt.seed)}, cover_file,
             [&]<class S>(Report& r, const io::Document& doc) { lift_common<S>(r, doc, matrix_file, opt, false); });
}

namespace {

void add_dims(Report& r, const std::vector<Dimension>& dims) {
  for (const auto& d : dims) r.fact("dim " + d.name, d.value);
}

}  // namespace

Report check_s5(const std::string& setup_file, const Options& opt) {
  return run("check-s5", {setup_file, "--seed " + std::to_string(opt.seed)}, setup_file,
             [&]<class S>(Report& r, const io::Document& doc) {
               const std::string kind = io::expect_kind(doc, {"split_extension", "action"});
               const SplitExtension<S> se = kind == "action" ? split_extension_of(homleib::semidirect(io::read_action<S>(doc)))
                                                             : io::read_split_extension<S>(doc);
               const SdpSetup<S> s = make_setup(se);
               algebra_facts(r, "M ", se.M);
               algebra_facts(r, "Q ", se.C);
               algebra_facts(r, "G ", se.B);
               r.fact("symmetric", s.symmetric);
               r.check("setup", s.checks);
               const SdpReport s123 = check_statement_1_2_3(s);
               add_dims(r, s123.dims);
               r.check("", s123.checks);
               if (!s.symmetric) {
                 r.note("action is not symmetric: statements 4-5 and the equivalences are not checked");
                 return;
               }
               const SdpReport s45 = check_statement_4_5(s);
               add_dims(r, s45.dims);
               r.check("", s45.checks);
               const Equivalences<S> eq = check_theorem_equivalences(s, opt.seed);
               r.fact("a: Phi central", eq.phi_central);
               r.fact("b: action on Ker U_M trivial", eq.action_trivial);
               r.fact("c: tau x| sigma bijective", eq.tau_sigma_bijective);
               r.fact("d: tau injective", eq.tau_injective);
               r.check("", eq.report.checks);
               if (is_zero_matrix(s.action.lambda) && is_zero_matrix(s.action.rho)) {
                 const SdpReport dp = check_direct_product(s);
                 r.check("direct product", dp.checks);
               }
             });
}

Report corpus(const Options& opt) {
  Report r("corpus", {"--seed " + std::to_string(opt.seed)});
  r.fact("corpus", "shipped");
  try {
    for (const auto& c : acceptance::run(opt.seed)) {
      CheckResult summary = CheckResult::pass();
      for (const auto& sub : c.checks)
        if (!sub.result.ok) {
          summary = CheckResult::fail(sub.name + (sub.result.what.empty() ? "" : ": " + sub.result.what), sub.result.witness);
          break;
        }
      r.fact("criterion " + std::to_string(c.id) + " checks", c.checks.size());
      r.check("criterion " + std::to_string(c.id) + ": " + c.title, summary);
    }
  } catch (const std::exception& e) {
    r.error(e.what());
  }
  return r;
}

}  // namespace homleib::cli
