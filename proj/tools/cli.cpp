#include "cli.hpp"

#include <so3zi/covol.hpp>
#include <so3zi/domains.hpp>
#include <so3zi/io.hpp>
#include <so3zi/lattice.hpp>
#include <so3zi/number_theory.hpp>

#include <CLI11.hpp>

#include <cmath>
#include <ostream>

namespace so3zi::cli {

namespace {

using io::json;

struct NumericFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

DomainKind kind_arg(const std::string& s) {
  auto k = parse_domain_kind(s);
  if (!k) throw std::invalid_argument("unknown domain '" + s + "' (gamma-h3, picard-h3, gamma-int-h2, sl2z-h2)");
  return *k;
}

void cmd_member(const std::string& text, bool as_json, std::ostream& out) {
  CMat m = io::cmat_from_json(io::parse_json(text));
  auto g = classify(m);
  if (as_json) {
    json j;
    j["member"] = g.has_value();
    if (g) {
      j["element"] = io::to_json(*g);
      j["coset"] = io::to_json(coset_of(*g));
    }
    out << j.dump() << '\n';
    return;
  }
  if (g)
    out << "member, i=" << g->i << ", delta=" << g->delta << '\n';
  else
    out << "not a member\n";
}

void cmd_member_real(const std::string& text, bool as_json, std::ostream& out) {
  SqrtTwoMatrix m = io::sqrt2_matrix_from_json(io::parse_json(text));
  auto g = is_member_real(m);
  if (as_json) {
    json j;
    j["member"] = g.has_value();
    if (g) j["element"] = io::to_json(*g);
    out << j.dump() << '\n';
    return;
  }
  if (g)
    out << "member, delta=" << g->delta << '\n';
  else
    out << "not a member\n";
}

void cmd_hecke(const std::string& text, std::ostream& out) {
  GMat a = io::gmat_from_json(io::parse_json(text));
  HeckeResult h = hecke_decompose(a);
  json j;
  j["xi"] = io::to_json(h.xi);
  j["m"] = io::to_json(h.m);
  j["x"] = io::to_json(h.x);
  j["xi_class"] = to_string(xi_classify(h.xi));
  out << j.dump() << '\n';
}

void cmd_cosets(std::ostream& out) {
  json arr = json::array();
  for (const CosetLabel& l : coset_labels()) {
    LatticeElem g = coset_rep(l);
    json j;
    j["label"] = io::to_json(l);
    j["element"] = io::to_json(g);
    j["matrix"] = io::to_json(g.matrix());
    arr.push_back(j);
  }
  out << arr.dump(2) << '\n';
}

void cmd_reduce(const std::string& domain, const std::string& point, bool self_check, int cap, std::ostream& out) {
  DomainKind k = kind_arg(domain);
  json j;
  j["domain"] = to_string(k);
  ReductionResult r;
  Region reg;
  double mismatch = 0.0;
  try {
    if (is_h3(k)) {
      H3Point z = io::parse_h3_point(point);
      j["input"] = io::to_json(z);
      r = reduce(k, z, cap);
      H3Point p = std::get<H3Point>(r.point);
      reg = contains(k, p);
      H3Point q = act(r.numeric, z);
      mismatch = std::max(std::abs(q.x - p.x), std::abs(q.y - p.y)) / std::max(1.0, std::abs(p.y));
    } else {
      H2Point z = io::parse_h2_point(point);
      j["input"] = io::to_json(z);
      r = reduce(k, z, cap);
      H2Point p = std::get<H2Point>(r.point);
      reg = contains(k, p);
      RMat g{r.numeric.a.real(), r.numeric.b.real(), r.numeric.c.real(), r.numeric.d.real()};
      H2Point q = act_h2(g, z);
      mismatch = std::max(std::abs(q.x - p.x), std::abs(q.y - p.y)) / std::max(1.0, std::abs(p.y));
    }
  } catch (const ReductionError& e) {
    throw NumericFailure(e.what());
  } catch (const GeometryError& e) {
    throw NumericFailure(e.what());
  }
  json rj = io::to_json(r);
  for (auto it = rj.begin(); it != rj.end(); ++it) j[it.key()] = it.value();
  j["region"] = to_string(reg);
  if (self_check) {
    bool ok = mismatch <= 1e-8 && reg != Region::Outside;
    j["self_check"] = ok;
    out << j.dump() << '\n';
    if (!ok) throw NumericFailure("self-check failed: mismatch " + io::fmt(mismatch));
    return;
  }
  out << j.dump() << '\n';
}

void cmd_domain(const std::string& kind, int n, std::ostream& out) {
  DomainKind k = kind_arg(kind);
  auto pts = boundary_samples(k, n);
  out << "x1,x2,y\n";
  for (auto& p : pts) out << io::fmt(p[0]) << ',' << io::fmt(p[1]) << ',' << io::fmt(p[2]) << '\n';
}

void cmd_volume(const std::string& kind, std::ostream& out) {
  if (!kind.empty()) {
    DomainKind k = kind_arg(kind);
    try {
      out << io::to_json(hyp_volume(k)).dump() << '\n';
    } catch (const QuadratureError& e) {
      throw NumericFailure(e.what());
    }
    return;
  }
  json j;
  j["zeta_qi_2"] = std::strtod(io::fmt(zeta_qi(2.0, 1e-8).value).c_str(), nullptr);
  j["V2"] = std::strtod(io::fmt(covolume_sl_n(2)).c_str(), nullptr);
  j["covol_gamma"] = std::strtod(io::fmt(covolume_gamma()).c_str(), nullptr);
  j["covol_gamma_int"] = std::strtod(io::fmt(covolume_gamma_int()).c_str(), nullptr);
  out << j.dump() << '\n';
}

void cmd_zeta(double s, double tol, std::ostream& out) {
  if (!(s > 1)) throw std::invalid_argument("--s must be > 1");
  if (!(tol > 0)) throw std::invalid_argument("--tol must be > 0");
  ZetaValue z = zeta_qi(s, tol);
  json j = io::to_json(z);
  j["lambda"] = std::strtod(io::fmt(std::pow(M_PI, -s) * std::tgamma(s) * z.value).c_str(), nullptr);
  out << j.dump() << '\n';
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact arithmetic and fundamental domains for SO(3, Z[i])", "so3zi"};
  app.require_subcommand(1);

  std::string matrix, domain, point, kind;
  bool as_json = false, self_check = false;
  int cap = kReduceCap, samples = 0;
  double s = 2.0, tol = 1e-8;

  auto* member = app.add_subcommand("member", "classify a 2x2 matrix over Z[w8, 1/(1+i)]");
  member->add_option("matrix", matrix, "matrix JSON {\"a\",\"b\",\"c\",\"d\"}")->required();
  member->add_flag("--json", as_json, "print the normal form as JSON");

  auto* member_real = app.add_subcommand("member-real", "real-form membership of n/sqrt2^k matrices");
  member_real->add_option("matrix", matrix, "matrix JSON with integer entries and optional \"sqrt2_pow\"")->required();
  member_real->add_flag("--json", as_json, "print the normal form as JSON");

  auto* hecke = app.add_subcommand("hecke", "Hecke decomposition of an integral matrix");
  hecke->add_option("matrix", matrix, "matrix JSON over Z[i]")->required();

  auto* cosets = app.add_subcommand("cosets", "the six coset representatives");

  auto* red = app.add_subcommand("reduce", "reduce a point into a fundamental domain");
  red->add_option("--domain", domain, "gamma-h3 | picard-h3 | gamma-int-h2 | sl2z-h2")->required();
  red->add_option("--point", point, "x1,x2,y (H3) or x,y (H2)")->required();
  red->add_flag("--self-check", self_check, "verify element(input) == output");
  red->add_option("--cap", cap, "iteration cap")->check(CLI::PositiveNumber);

  auto* dom = app.add_subcommand("domain", "sample the lower boundary of a domain as CSV");
  dom->add_option("--kind", kind, "domain kind")->required();
  dom->add_option("--emit-boundary", samples, "number of samples")->required()->check(CLI::PositiveNumber);

  auto* vol = app.add_subcommand("volume", "hyperbolic volume by quadrature, or the zeta covolumes");
  vol->add_option("--kind", kind, "domain kind");

  auto* zeta = app.add_subcommand("zeta", "Dedekind zeta of Q(i) by a lattice sum");
  zeta->add_option("--s", s, "argument s > 1");
  zeta->add_option("--tol", tol, "tail bound target");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }

  try {
    if (*member) cmd_member(matrix, as_json, out);
    else if (*member_real) cmd_member_real(matrix, as_json, out);
    else if (*hecke) cmd_hecke(matrix, out);
    else if (*cosets) cmd_cosets(out);
    else if (*red) cmd_reduce(domain, point, self_check, cap, out);
    else if (*dom) cmd_domain(kind, samples, out);
    else if (*vol) cmd_volume(kind, out);
    else if (*zeta) cmd_zeta(s, tol, out);
  } catch (const NumericFailure& e) {
    err << "numerical failure: " << e.what() << '\n';
    return 2;
  } catch (const QuadratureError& e) {
    err << "numerical failure: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "invalid input: " << e.what() << '\n';
    return 1;
  } catch (const std::domain_error& e) {
    err << "invalid input: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}

}  // namespace so3zi::cli
