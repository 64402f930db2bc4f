#include "novcup/cli/commands.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "novcup/cli/checks.hpp"
#include "novcup/cli/document.hpp"
#include "novcup/cuplen/cuplen.hpp"
#include "novcup/massey/massey.hpp"

namespace novcup {

namespace {

class Report {
 public:
  void section(const std::string& name) { os_ << '[' << name << "]\n"; }
  template <class... Ts>
  void line(const std::string& key, const Ts&... vals) {
    os_ << key;
    ((os_ << ' ' << vals), ...);
    os_ << '\n';
  }
  template <class T>
  void list(const std::string& key, const std::vector<T>& vals) {
    os_ << key;
    for (const auto& v : vals) os_ << ' ' << v;
    os_ << '\n';
  }
  std::string str() const { return os_.str(); }

 private:
  std::ostringstream os_;
};

struct Failure {
  int code;
  std::string message;
};

std::string read_input(const std::string& input) {
  if (input.rfind("example:", 0) == 0) return emit_document(build(input.substr(8)));
  if (input == "-") return std::string(std::istreambuf_iterator<char>(std::cin), {});
  std::ifstream in(input, std::ios::binary);
  if (!in) throw Failure{1, "cannot open " + input};
  return std::string(std::istreambuf_iterator<char>(in), {});
}

std::string vec_str(const Vec& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + v[i].str();
  return s;
}

std::string labels(const FieldElem& a) { return "a=" + a.str() + " a_inv=" + a.inverse().str(); }

Diagnostics full_validation(const LoadedInput& in) {
  Diagnostics d = validate(in.x, in.xi, in.bundles);
  for (const auto& e : in.x.construction_defects()) d.errors.push_back(e);
  for (const auto& [n, c] : in.classes)
    if (auto bad = cocycle_violation(in.x, c)) d.errors.push_back("class " + n + " fails the cocycle condition on " + simplex_str(*bad));
  if (!in.cut.empty()) {
    try {
      auto res = cut_along(in.x, in.cut, FlatBundle::trivial(in.x, *in.field));
      auto v = validate_cut(res.cut);
      d.errors.insert(d.errors.end(), v.errors.begin(), v.errors.end());
      if (!is_integral_coboundary(in.x, res.dual + in.xi.negated()) && !is_integral_coboundary(in.x, res.dual + in.xi))
        d.errors.push_back("cut is not dual to xi");
    } catch (const ComplexError& e) {
      d.errors.push_back(std::string("cut: ") + e.what());
    }
  }
  return d;
}

void header(Report& r, const CommandOptions& o, const std::string& text, const LoadedInput& in) {
  r.line("novcup-report", 1);
  r.line("version", kToolVersion);
  r.line("command", o.command);
  r.line("input", o.input);
  r.line("input_digest", "fnv1a64:" + fnv1a_digest(text));
  r.line("field", in.field->name());
  r.section("space");
  if (!in.name.empty()) r.line("name", in.name);
  r.line("vertices", in.x.vertex_count());
  std::vector<std::size_t> counts;
  for (int q = 0; q <= in.x.dim(); ++q) counts.push_back(in.x.count(q));
  r.list("simplices", counts);
  r.line("euler", in.x.euler_characteristic());
  r.line("dim", in.x.dim());
  r.line("xi_zero_in_cohomology", is_integral_coboundary(in.x, in.xi) ? "true" : "false");
  std::vector<std::string> names;
  for (const auto& b : in.bundles) names.push_back(b.name() + "(rank " + std::to_string(b.rank()) + ")");
  r.list("bundles", names);
}

void novikov_section(Report& r, const LoadedInput& in, const FlatBundle& f, const std::string& label, int& status) {
  r.section("novikov " + label);
  auto rep = novikov_numbers(in.x, in.xi, f);
  r.line("content", rep.content);
  r.list("b", rep.b());
  for (const auto& m : rep.modules) r.line("module", m.degree, m.str());
  for (const auto& d : rep.degrees) {
    for (const auto& j : d.jumps) r.line("jump degree", d.q, labels(j.a), "multiplicity", j.multiplicity);
    for (const auto& p : d.residual_factors) r.line("residual degree", d.q, p.str(), "(roots after extension)");
  }
  if (rep.check_point) {
    r.line("check_point", labels(*rep.check_point));
    r.line("check", rep.generic_check ? "agree" : "differ");
    if (!rep.generic_check) status = 2;
  } else {
    r.line("check_point", "none");
  }
  if (label != "k") {
    auto g = xi_generic_test(in.x, in.xi, f);
    if (g.generic)
      r.line("xi_generic", "yes (rank-one slice)");
    else
      r.line("xi_generic", "no degree", g.witness->degree, "factor", g.witness->factor.str());
  }
}

void pages_section(Report& r, const LoadedInput& in, int max_page, int& status) {
  r.section("massey");
  const FlatBundle k = FlatBundle::trivial(in.x, *in.field);
  const auto pages = spectral_pages(in.x, in.xi, k, max_page);
  for (const auto& p : pages) {
    r.list("page " + std::to_string(p.r) + " dims", p.dims);
    r.list("page " + std::to_string(p.r) + " ranks", p.ranks);
  }
  r.line("stable_page", pages.back().stable ? std::to_string(pages.back().r) : std::string("beyond --max-page"));
  auto chain = check_pages("input", in.x, in.xi, *in.field);
  r.line("chain_level", chain.ok ? "agree" : "differ", chain.detail);
  if (!chain.ok) status = 2;
  if (!in.cut.empty()) {
    auto res = cut_along(in.x, in.cut, k);
    const bool same_sign = is_integral_coboundary(in.x, res.dual + in.xi.negated());
    auto cut_pages = spectral_pages(deformation_complex(res.cut), max_page);
    if (same_sign) {
      const bool agree = cut_pages == pages;
      r.line("cut_model", agree ? "agree" : "differ");
      if (!agree) status = 2;
    } else {
      r.line("cut_model", "skipped (cut is dual to -xi)");
    }
  }
}

void survivors_section(Report& r, const LoadedInput& in, const std::string& label, const IntegralCocycle& z) {
  r.section("survivors " + label);
  const auto all = all_survivors(in.x, z, FlatBundle::trivial(in.x, *in.field));
  for (const auto& b : all) {
    r.line("degree", b.degree, "dim", b.classes.size(), "certificate_order", b.order);
    for (const auto& c : b.classes) r.line("class", b.degree, vec_str(c));
  }
}

void cup_section(Report& r, const std::string& title, const CupLengthReport& c, int& status) {
  r.section(title);
  r.line("label", "certified lower bound for cl_k(xi)");
  r.line("mode", c.mode == CupLengthReport::Mode::massey ? "massey" : "generic");
  if (c.mode == CupLengthReport::Mode::massey) r.line("strict_dual", c.strict_dual ? "true" : "false");
  r.line("has_bound", c.has_bound ? "true" : "false");
  r.line("m", c.m);
  r.line("critical_bound", c.critical_bound);
  for (const auto& w : c.witness) r.line("witness degree", w.degree, "bundle", w.bundle);
  if (c.has_bound) r.line("product", c.product_bundle, "degree", c.product_degree);
  r.line("verified", c.verified ? "true" : "false");
  r.line("dim_x", c.dim_x);
  r.line("within_dimension_bound", c.within_dimension_bound() ? "true" : "false");
  if (!c.survivor_dims.empty()) r.list("survivor_dims", c.survivor_dims);
  if (!c.second_survivor_dims.empty()) r.list("second_survivor_dims", c.second_survivor_dims);
  if (c.mode == CupLengthReport::Mode::generic) {
    r.line("validity", "for all but finitely many a");
    r.line("parameter", "a deforms E1 to a^xi (x) E1 and E2 to a^-xi (x) E2; a = 1 is the supplied pair");
    for (const auto& a : c.excluded_roots) r.line("excluded_root", labels(a));
    for (const auto& p : c.excluded_factors) r.line("excluded_factor", p.str());
  }
  if ((c.has_bound && !c.verified) || !c.within_dimension_bound()) status = 2;
}

std::optional<CupLengthReport> generic_report(Report& r, const LoadedInput& in, int& status) {
  if (!in.generic) return std::nullopt;
  const FlatBundle* e1 = in.bundle(in.generic->first);
  const FlatBundle* e2 = in.bundle(in.generic->second);
  try {
    auto c = cuplength_generic(in.x, in.xi, *e1, *e2, in.bundles);
    cup_section(r, "cuplength generic", c, status);
    return c;
  } catch (const CupLengthError& e) {
    r.section("cuplength generic");
    r.line("error", e.what());
    r.line("offending_bundle", e.bundle, "degree", e.degree, "factor", e.factor.str());
    status = std::max(status, 1);
    return std::nullopt;
  }
}

}  // namespace

int run_command(const CommandOptions& o, std::ostream& out, std::ostream& err) {
  const auto start = std::chrono::steady_clock::now();
  try {
    if (o.command == "example") {
      std::string name = o.input.rfind("example:", 0) == 0 ? o.input.substr(8) : o.input;
      out << emit_document(build(name));
      return 0;
    }
    if (o.command == "selftest") {
      int status = 0;
      for (const auto& c : selftest_suite(o.seed)) {
        out << (c.ok ? "PASS " : "FAIL ") << c.name << (c.detail.empty() ? "" : ": " + c.detail) << '\n';
        if (!c.ok) status = 2;
      }
      return status;
    }
    static const std::vector<std::string> known{"validate", "novikov", "massey", "survivors", "cuplength", "bound"};
    if (std::find(known.begin(), known.end(), o.command) == known.end()) throw Failure{1, "unknown command " + o.command};

    const std::string text = read_input(o.input);
    const InputDocument doc = parse_document(text);
    const FieldSpec& field = FieldSpec::parse(o.field ? *o.field : doc.field);
    const LoadedInput in = load(doc, field);

    Report r;
    header(r, o, text, in);
    const Diagnostics diag = full_validation(in);
    r.section("validate");
    r.line("status", diag.ok() ? "ok" : "failed");
    for (const auto& e : diag.errors) r.line("error", e);
    int status = diag.ok() ? 0 : 1;

    if (diag.ok() && o.command != "validate") {
      const FlatBundle k = FlatBundle::trivial(in.x, field);
      if (o.command == "novikov" || o.command == "bound") {
        novikov_section(r, in, k, "k", status);
        if (o.command == "novikov")
          for (const auto& b : in.bundles) novikov_section(r, in, b, b.name(), status);
      }
      if (o.command == "massey" || o.command == "bound") pages_section(r, in, o.max_page, status);
      if (o.command == "survivors") {
        survivors_section(r, in, "xi", in.xi);
        survivors_section(r, in, "-xi", in.xi.negated());
      }
      if (o.command == "cuplength" || o.command == "bound") {
        auto massey = cuplength_massey(in.x, in.xi, field, in.bundles, {o.strict_dual});
        cup_section(r, "cuplength massey", massey, status);
        auto generic = generic_report(r, in, status);
        if (o.command == "bound") {
          r.section("bound");
          int best = massey.critical_bound;
          std::string source = "massey";
          if (generic && generic->critical_bound > best) {
            best = generic->critical_bound;
            source = "generic";
          }
          r.line("critical_bound", best);
          r.line("source", massey.has_bound || (generic && generic->has_bound) ? source : "none (no bound)");
          r.line("statement", "every closed 1-form in the class xi has at least", best, "critical point(s)");
        }
      }
    }
    out << r.str();
    if (o.timing) {
      const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
      out << "[timing]\nelapsed_ms " << ms.count() << '\n';
    }
    return status;
  } catch (const Failure& f) {
    err << "error: " << f.message << '\n';
    return f.code;
  } catch (const DocumentError& e) {
    err << "error: " << o.input << ": " << e.what() << '\n';
    return 1;
  } catch (const CorpusError& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const AlgebraError& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const ComplexError& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return 2;
  }
}

}  // namespace novcup
