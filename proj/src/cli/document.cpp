#include "novcup/cli/document.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <set>
#include <sstream>

namespace novcup {

namespace {

std::vector<std::string> tokens(std::string_view line) {
  std::vector<std::string> out;
  std::istringstream is{std::string(line)};
  std::string t;
  while (is >> t) out.push_back(t);
  return out;
}

template <class T>
T number(const std::string& s, std::size_t line, const char* what) {
  T v{};
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size()) throw DocumentError(line, std::string("bad ") + what + " '" + s + "'");
  return v;
}

Simplex vertex_list(const std::vector<std::string>& t, std::size_t from, std::size_t line) {
  Simplex s;
  for (std::size_t i = from; i < t.size(); ++i) s.push_back(number<std::uint32_t>(t[i], line, "vertex"));
  return s;
}

EdgeValue edge_value(const std::vector<std::string>& t, std::size_t from, std::size_t line) {
  if (t.size() != from + 3) throw DocumentError(line, "expected <u> <v> <value>");
  return {number<std::uint32_t>(t[from], line, "vertex"), number<std::uint32_t>(t[from + 1], line, "vertex"),
          number<long>(t[from + 2], line, "value"), line};
}

void need(bool ok, std::size_t line, const std::string& what) {
  if (!ok) throw DocumentError(line, what);
}

IntegralCocycle resolve(const SimplicialComplex& x, const std::vector<EdgeValue>& vals) {
  IntegralCocycle z(x);
  for (const auto& ev : vals) {
    Simplex e{std::min(ev.u, ev.v), std::max(ev.u, ev.v)};
    auto i = x.index(e);
    if (!i) throw DocumentError(ev.line, "edge " + simplex_str(e) + " is not in the complex");
    z.set(*i, z.at(*i) + (ev.u < ev.v ? ev.value : -ev.value));
  }
  return z;
}

void emit_cocycle(std::ostream& os, const std::string& prefix, const SimplicialComplex& x, const IntegralCocycle& z) {
  for (std::size_t e = 0; e < z.size(); ++e)
    if (z.at(e) != 0) os << prefix << x.simplex(1, e)[0] << ' ' << x.simplex(1, e)[1] << ' ' << z.at(e) << '\n';
}

}  // namespace

InputDocument parse_document(std::string_view text) {
  InputDocument doc;
  bool have_vertices = false;
  std::set<std::string> bundle_names;
  std::size_t lineno = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    std::string_view raw = text.substr(pos, end - pos);
    pos = end + 1;
    ++lineno;
    if (auto h = raw.find('#'); h != std::string_view::npos) raw = raw.substr(0, h);
    const auto t = tokens(raw);
    if (t.empty()) {
      if (end == text.size()) break;
      continue;
    }
    const std::string& kw = t[0];
    if (kw == "novcup-input") {
      need(t.size() == 2 && t[1] == "1", lineno, "unsupported document version");
    } else if (kw == "name") {
      need(t.size() == 2, lineno, "expected name <text>");
      doc.name = t[1];
    } else if (kw == "field") {
      need(t.size() == 2, lineno, "expected field <spec>");
      doc.field = t[1];
    } else if (kw == "vertices") {
      need(t.size() == 2, lineno, "expected vertices <n>");
      doc.vertices = number<std::uint32_t>(t[1], lineno, "vertex count");
      have_vertices = true;
    } else if (kw == "facet" || kw == "simplex") {
      need(have_vertices, lineno, "vertices must precede simplices");
      need(t.size() >= 2, lineno, "empty simplex");
      Simplex s = vertex_list(t, 1, lineno);
      for (auto v : s) need(v < doc.vertices, lineno, "vertex " + std::to_string(v) + " out of range");
      (kw == "facet" ? doc.facets : doc.simplices).push_back(std::move(s));
    } else if (kw == "xi") {
      doc.xi.push_back(edge_value(t, 1, lineno));
    } else if (kw == "class") {
      need(t.size() == 5, lineno, "expected class <name> <u> <v> <value>");
      auto it = std::find_if(doc.classes.begin(), doc.classes.end(), [&](const auto& c) { return c.first == t[1]; });
      if (it == doc.classes.end()) it = doc.classes.insert(doc.classes.end(), {t[1], {}});
      it->second.push_back(edge_value(t, 2, lineno));
    } else if (kw == "bundle") {
      need(t.size() >= 4, lineno, "expected bundle <name> <kind> ...");
      need(bundle_names.insert(t[1]).second, lineno, "bundle " + t[1] + " declared twice");
      BundleDecl b;
      b.name = t[1];
      b.line = lineno;
      if (t[2] == "power" || t[2] == "root") {
        need(t.size() == 5, lineno, "expected bundle <name> " + t[2] + " <param> <exponent>");
        b.kind = t[2] == "power" ? BundleDecl::Kind::power : BundleDecl::Kind::root;
        b.param = t[3];
        if (b.kind == BundleDecl::Kind::root) need(number<std::uint64_t>(t[3], lineno, "order") > 0, lineno, "order 0");
        b.exponent = number<int>(t[4], lineno, "exponent");
      } else if (t[2] == "matrix") {
        need(t.size() == 4, lineno, "expected bundle <name> matrix <rank>");
        b.kind = BundleDecl::Kind::matrix;
        b.rank = number<std::size_t>(t[3], lineno, "rank");
        need(b.rank > 0, lineno, "rank 0");
      } else {
        throw DocumentError(lineno, "unknown bundle kind '" + t[2] + "'");
      }
      doc.bundles.push_back(std::move(b));
    } else if (kw == "transport") {
      need(t.size() >= 4, lineno, "expected transport <name> <u> <v> <entries>");
      auto it = std::find_if(doc.bundles.begin(), doc.bundles.end(), [&](const auto& b) { return b.name == t[1]; });
      need(it != doc.bundles.end(), lineno, "unknown bundle " + t[1]);
      need(it->kind == BundleDecl::Kind::matrix, lineno, "bundle " + t[1] + " is not a matrix bundle");
      need(t.size() == 4 + it->rank * it->rank, lineno, "expected " + std::to_string(it->rank * it->rank) + " entries");
      BundleDecl::Transport tr;
      tr.u = number<std::uint32_t>(t[2], lineno, "vertex");
      tr.v = number<std::uint32_t>(t[3], lineno, "vertex");
      tr.entries.assign(t.begin() + 4, t.end());
      tr.line = lineno;
      it->transports.push_back(std::move(tr));
    } else if (kw == "cut") {
      need(have_vertices, lineno, "vertices must precede the cut");
      Simplex c = vertex_list(t, 1, lineno);
      for (auto v : c) need(v < doc.vertices, lineno, "vertex " + std::to_string(v) + " out of range");
      doc.cut.insert(doc.cut.end(), c.begin(), c.end());
    } else if (kw == "option") {
      need(t.size() >= 2, lineno, "expected option <key> ...");
      if (t[1] == "generic") {
        need(t.size() == 4, lineno, "expected option generic <E1> <E2>");
        doc.generic = {t[2], t[3]};
      } else {
        throw DocumentError(lineno, "unknown option '" + t[1] + "'");
      }
    } else {
      throw DocumentError(lineno, "unknown statement '" + kw + "'");
    }
    if (end == text.size()) break;
  }
  if (!have_vertices) throw DocumentError(lineno, "missing vertices statement");
  if (doc.generic)
    for (const auto& n : {doc.generic->first, doc.generic->second})
      if (!bundle_names.count(n)) throw DocumentError(lineno, "option generic names unknown bundle " + n);
  std::sort(doc.cut.begin(), doc.cut.end());
  doc.cut.erase(std::unique(doc.cut.begin(), doc.cut.end()), doc.cut.end());
  return doc;
}

std::string emit_document(const NamedSpace& s) {
  std::ostringstream os;
  os << "novcup-input 1\n";
  os << "name " << s.name << '\n';
  os << "field " << s.default_field << '\n';
  os << "vertices " << s.x.vertex_count() << '\n';
  std::set<Simplex> covered;
  for (int q = s.x.dim(); q >= 0; --q)
    for (const auto& sv : s.x.simplices(q)) {
      if (covered.count(sv)) continue;
      os << "facet";
      for (auto v : sv) os << ' ' << v;
      os << '\n';
      const std::size_t k = sv.size();
      for (unsigned mask = 1; mask + 1 < (1u << k); ++mask) {
        Simplex f;
        for (std::size_t i = 0; i < k; ++i)
          if (mask & (1u << i)) f.push_back(sv[i]);
        covered.insert(f);
      }
    }
  emit_cocycle(os, "xi ", s.x, s.xi);
  for (const auto& [n, c] : s.classes) emit_cocycle(os, "class " + n + " ", s.x, c);
  for (const auto& b : s.bundles) {
    if (b.root_order > 0)
      os << "bundle " << b.name << " root " << b.root_order << ' ' << b.exponent << '\n';
    else
      os << "bundle " << b.name << " power " << b.generic_value << ' ' << b.exponent << '\n';
  }
  if (!s.cut_vertices.empty()) {
    os << "cut";
    for (auto v : s.cut_vertices) os << ' ' << v;
    os << '\n';
  }
  auto has = [&](const std::string& n) {
    return std::any_of(s.bundles.begin(), s.bundles.end(), [&](const auto& b) { return b.name == n; });
  };
  if (has("E1") && has("E2"))
    os << "option generic E1 E2\n";
  else if (s.bundles.size() == 1)
    os << "option generic " << s.bundles[0].name << ' ' << s.bundles[0].name << '\n';
  return os.str();
}

const FlatBundle* LoadedInput::bundle(const std::string& n) const {
  for (const auto& b : bundles)
    if (b.name() == n) return &b;
  return nullptr;
}

LoadedInput load(const InputDocument& doc, const FieldSpec& field) {
  LoadedInput in;
  in.name = doc.name;
  in.field = &field;
  if (doc.facets.empty()) {
    in.x = SimplicialComplex::from_simplices(doc.vertices, doc.simplices);
  } else {
    std::vector<Simplex> all = doc.simplices;
    const auto closed = SimplicialComplex::from_facets(doc.vertices, doc.facets);
    std::set<Simplex> listed;
    for (auto s : doc.simplices) {
      std::sort(s.begin(), s.end());
      listed.insert(s);
    }
    for (int q = 0; q <= closed.dim(); ++q)
      for (const auto& s : closed.simplices(q))
        if (!listed.count(s)) all.push_back(s);
    in.x = SimplicialComplex::from_simplices(doc.vertices, all);
  }
  in.xi = resolve(in.x, doc.xi);
  for (const auto& [n, vals] : doc.classes) in.classes.emplace_back(n, resolve(in.x, vals));
  NamedSpace proxy;
  proxy.x = in.x;
  proxy.xi = in.xi;
  for (const auto& b : doc.bundles) {
    if (b.kind == BundleDecl::Kind::matrix) {
      std::vector<Mat> g(in.x.count(1), Mat::identity(field, b.rank));
      for (const auto& tr : b.transports) {
        Simplex e{std::min(tr.u, tr.v), std::max(tr.u, tr.v)};
        auto i = in.x.index(e);
        if (!i) throw DocumentError(tr.line, "edge " + simplex_str(e) + " is not in the complex");
        Mat m(field, b.rank);
        for (std::size_t k = 0; k < tr.entries.size(); ++k) {
          try {
            m.at(k / b.rank, k % b.rank) = field.parse_elem(tr.entries[k]);
          } catch (const std::exception& ex) {
            throw DocumentError(tr.line, "bad field element '" + tr.entries[k] + "': " + ex.what());
          }
        }
        if (m.det().is_zero()) throw DocumentError(tr.line, "transport is not invertible");
        g[*i] = tr.u < tr.v ? m : m.inverse();
      }
      in.bundles.emplace_back(field, b.rank, std::move(g), b.name);
      continue;
    }
    BundleRecipe r;
    r.name = b.name;
    r.exponent = b.exponent;
    if (b.kind == BundleDecl::Kind::root) {
      r.root_order = number<std::uint64_t>(b.param, b.line, "order");
      in.bundles.push_back(realize(r, proxy, field));
    } else {
      FieldElem a;
      try {
        a = field.parse_elem(b.param);
      } catch (const std::exception& ex) {
        throw DocumentError(b.line, "bad field element '" + b.param + "': " + ex.what());
      }
      if (a.is_zero()) throw DocumentError(b.line, "bundle parameter vanishes in " + field.name());
      FlatBundle fb = FlatBundle::power(in.x, a.pow(b.exponent), in.xi);
      fb.set_name(b.name);
      in.bundles.push_back(std::move(fb));
    }
  }
  in.cut = doc.cut;
  in.generic = doc.generic;
  return in;
}

std::string fnv1a_digest(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace novcup
