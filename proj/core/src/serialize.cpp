#include "primehopf/serialize.hpp"

#include "json.hpp"

#include <sstream>

namespace primehopf {

using json = nlohmann::ordered_json;

namespace {

json spec_json(const FamilySpec& s) {
  json j;
  j["family"] = family_name(s.family);
  switch (s.family) {
    case Family::Taft:
      j["n"] = s.n;
      j["t"] = s.t;
      j["xi"] = s.xi.str();
      break;
    case Family::Liu:
      j["n"] = s.n;
      j["w"] = s.w;
      j["i0"] = s.i0;
      j["theta"] = s.theta.str();
      j["xi"] = s.xi.str();
      break;
    default:
      break;
  }
  return j;
}

json records_json(const std::vector<AxiomRecord>& recs) {
  json a = json::array();
  for (const auto& r : recs) {
    a.push_back({{"axiom", r.axiom}, {"sample", r.sample}, {"pass", r.pass}, {"witness", r.witness}});
  }
  return a;
}

json sparse_json(const TwistorAlgebra& T, const SparseVector& v) {
  json j = json::object();
  for (const auto& [k, c] : v) j[T.label(k)] = c.str();
  return j;
}

std::string dump(const json& j) { return j.dump(2); }

std::string join(const std::vector<std::string>& v) {
  std::string out;
  for (const auto& s : v) out += (out.empty() ? "" : ", ") + s;
  return out;
}

const char* mark(bool ok) { return ok ? "PASS" : "FAIL"; }

}  // namespace

std::string to_json(const Presentation& h) {
  json j;
  j["label"] = h.label();
  j["spec"] = spec_json(h.spec());
  j["letters"] = h.letters();
  json atoms = json::array();
  for (const Atom& a : h.atoms()) {
    json t = json::array();
    for (const auto& [k, c] : a.delta) {
      t.push_back({{"coeff", c.str()}, {"left", h.monomial_str(k[0])}, {"right", h.monomial_str(k[1])}});
    }
    atoms.push_back({{"name", a.name},
                     {"monomial", h.monomial_str(a.mono)},
                     {"coproduct", t},
                     {"counit", a.eps.str()},
                     {"antipode", format_terms(h, a.antipode)}});
  }
  j["atoms"] = atoms;
  json rels = json::array();
  for (const Relation& r : h.relations()) {
    std::string rhs;
    for (const auto& [c, w] : r.rhs) rhs += (rhs.empty() ? "" : " + ") + ("(" + c.str() + ") * " + word_str(w));
    rels.push_back({{"label", r.label}, {"lhs", word_str(r.lhs)}, {"rhs", rhs.empty() ? "0" : rhs}});
  }
  j["relations"] = rels;
  return dump(j);
}

std::string to_text(const Presentation& h) {
  std::ostringstream o;
  o << h.label() << "\n";
  o << "letters: " << join(h.letters()) << "\n";
  for (const Atom& a : h.atoms()) {
    o << "  " << a.name << ":  Delta =";
    std::string d;
    for (const auto& [k, c] : a.delta) {
      d += (d.empty() ? "" : " + ") + ("(" + c.str() + ") " + h.monomial_str(k[0]) + " (x) " + h.monomial_str(k[1]));
    }
    o << " [" << d << "], eps = " << a.eps.str() << ", S = " << format_terms(h, a.antipode) << "\n";
  }
  o << "relations:\n";
  for (const Relation& r : h.relations()) {
    std::string rhs;
    for (const auto& [c, w] : r.rhs) rhs += (rhs.empty() ? "" : " + ") + ("(" + c.str() + ") " + word_str(w));
    o << "  " << r.label << ": " << word_str(r.lhs) << " = " << (rhs.empty() ? "0" : rhs) << "\n";
  }
  return o.str();
}

std::string to_json(const AxiomReport& r) {
  json j;
  j["presentation"] = r.presentation;
  j["all_pass"] = r.all_pass();
  j["failures"] = r.failures();
  j["records"] = records_json(r.records);
  return dump(j);
}

std::string to_text(const AxiomReport& r) {
  std::ostringstream o;
  o << r.presentation << ": " << r.records.size() << " checks, " << r.failures() << " failures\n";
  if (const AxiomRecord* f = r.first_failure()) {
    o << "first failure: " << f->axiom << " on " << f->sample << "\n  lhs - rhs = " << f->witness << "\n";
  } else {
    o << "all Hopf algebra axioms hold on the samples\n";
  }
  return o.str();
}

std::string to_json(const InvariantReport& r) {
  json j;
  j["family"] = r.family;
  j["params"] = spec_json(r.spec);
  j["label"] = r.label;
  j["io"] = r.io;
  j["im"] = r.im;
  j["pi_degree"] = r.pi_degree;
  j["h_l0_gens"] = r.h_l0_gens;
  j["h_r0_gens"] = r.h_r0_gens;
  j["h0_gens"] = r.h0_gens;
  j["jiq_gens"] = r.jiq_gens;
  j["dichotomy"] = r.dichotomy;
  j["integral_character"] = r.integral_character;
  return dump(j);
}

std::string to_text(const InvariantReport& r) {
  std::ostringstream o;
  o << r.label << "\n"
    << "  io = " << r.io << ", im = " << r.im << ", PI-degree = " << r.pi_degree << "\n"
    << "  integral character: " << r.integral_character << "\n"
    << "  H^l_0 = k<" << join(r.h_l0_gens) << ">\n"
    << "  H^r_0 = k<" << join(r.h_r0_gens) << ">\n"
    << "  H_0   = k<" << join(r.h0_gens) << "> (" << r.dichotomy << ")\n"
    << "  J_iq  = (" << join(r.jiq_gens) << ")\n";
  return o.str();
}

std::string to_json(const GrouplikeSearch& g) {
  json j;
  j["window"] = g.window;
  j["certified"] = g.certified;
  j["certificate"] = g.certificate;
  json a = json::array();
  for (const auto& e : g.grouplikes) a.push_back(e.str());
  j["grouplikes"] = a;
  return dump(j);
}

std::string to_text(const GrouplikeSearch& g) {
  std::ostringstream o;
  o << g.grouplikes.size() << " group-likes in window " << g.window << (g.certified ? " (complete)" : " (not certified)")
    << "\n";
  for (const auto& e : g.grouplikes) o << "  " << e.str() << "\n";
  o << "certificate: " << g.certificate << "\n";
  return o.str();
}

std::string to_json(const TwistorAlgebra& T) {
  json j;
  j["source"] = T.source ? T.source->label() : "";
  j["n"] = T.n;
  j["q"] = T.q.str();
  j["dimension"] = T.dim();
  json basis = json::array();
  for (int k = 0; k < T.dim(); ++k) basis.push_back(T.label(k));
  j["basis"] = basis;
  json mult = json::array();
  for (int a = 0; a < T.dim(); ++a) {
    for (int b = 0; b < T.dim(); ++b) {
      const SparseVector& p = T.mult[static_cast<std::size_t>(a * T.dim() + b)];
      if (p.empty()) continue;
      mult.push_back({{"left", T.label(a)}, {"right", T.label(b)}, {"product", sparse_json(T, p)}});
    }
  }
  j["multiplication"] = mult;
  json eps = json::object();
  json anti = json::object();
  for (int k = 0; k < T.dim(); ++k) {
    eps[T.label(k)] = T.counit[static_cast<std::size_t>(k)].str();
    anti[T.label(k)] = sparse_json(T, T.antipode[static_cast<std::size_t>(k)]);
  }
  j["counit"] = eps;
  j["antipode"] = anti;
  json cop = json::array();
  for (int i = 0; i < T.n; ++i) {
    for (int jj = 0; jj < T.n; ++jj) {
      for (const auto& [st, c] : T.coproduct[static_cast<std::size_t>(T.index(i, jj))]) {
        cop.push_back({{"i", i}, {"j", jj}, {"s", st.first}, {"t", st.second}, {"c", c.str()}});
      }
    }
  }
  j["coproduct"] = cop;
  return dump(j);
}

std::string to_text(const TwistorAlgebra& T) {
  std::ostringstream o;
  o << "twistor of " << (T.source ? T.source->label() : "?") << ": dimension " << T.dim() << ", q = " << T.q.str()
    << "\n";
  o << "Delta(v_ij) = sum_s c^{ij}_{ss} v_is (x) v_sj with c^{0j}_{ss}:\n";
  for (int jj = 0; jj < T.n; ++jj) {
    o << "  j = " << jj << ":";
    for (int s = 0; s < T.n; ++s) o << " " << T.coefficient(0, jj, s, s).str();
    o << "\n";
  }
  return o.str();
}

std::string to_json(const IsoVerdict& v) {
  json j;
  j["verdict"] = iso_kind_name(v.verdict);
  j["reason"] = v.reason;
  j["witness"] = v.witness ? json(v.witness->str()) : json(nullptr);
  j["inverse"] = v.inverse ? json(v.inverse->str()) : json(nullptr);
  return dump(j);
}

std::string to_text(const IsoVerdict& v) {
  std::ostringstream o;
  o << iso_kind_name(v.verdict) << ": " << v.reason << "\n";
  if (v.witness) o << "  map:     " << v.witness->str() << "\n";
  if (v.inverse) o << "  inverse: " << v.inverse->str() << "\n";
  return o.str();
}

std::string to_json(const Classification& c) {
  json j;
  j["io"] = c.query.io;
  j["im"] = c.query.im;
  j["dichotomy"] = dichotomy_name(c.query.dichotomy);
  j["status"] = c.status;
  json fams = json::array();
  for (const auto& f : c.families) {
    json inst = json::array();
    for (const auto& s : f.instances) inst.push_back(spec_json(s));
    fams.push_back({{"family", family_name(f.family)}, {"name", f.name}, {"dichotomy", f.dichotomy}, {"instances", inst}});
  }
  j["families"] = fams;
  j["note"] = c.note;
  return dump(j);
}

std::string to_text(const Classification& c) {
  std::ostringstream o;
  o << "io = " << c.query.io << ", im = " << c.query.im << ", " << dichotomy_name(c.query.dichotomy) << ": " << c.status
    << "\n";
  if (c.families.empty()) o << "  no families\n";
  for (const auto& f : c.families) {
    o << "  " << f.name << " [" << f.dichotomy << "], " << f.instances.size() << " instances\n";
  }
  if (!c.note.empty()) o << "  " << c.note << "\n";
  return o.str();
}

std::string to_json(const SuiteResult& s) {
  json j;
  j["presentation"] = s.label;
  j["window"] = s.window;
  j["all_pass"] = s.all_pass();
  json a = json::array();
  for (const auto& c : s.checks) a.push_back({{"area", c.area}, {"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
  j["checks"] = a;
  return dump(j);
}

std::string to_text(const SuiteResult& s) {
  std::ostringstream o;
  o << s.label << " (window " << s.window << ")\n";
  for (const auto& c : s.checks) o << "  " << mark(c.pass) << "  " << c.area << "/" << c.name << "  " << c.detail << "\n";
  o << (s.all_pass() ? "all checks pass" : std::to_string(s.failures()) + " checks fail") << "\n";
  return o.str();
}

std::string elements_json(const std::string& title, const std::vector<Element>& elems) {
  json j;
  json a = json::array();
  for (const auto& e : elems) a.push_back(e.str());
  j[title] = a;
  return dump(j);
}

std::string elements_text(const std::string& title, const std::vector<Element>& elems) {
  std::ostringstream o;
  o << title << " (" << elems.size() << "):\n";
  for (const auto& e : elems) o << "  " << e.str() << "\n";
  return o.str();
}

}  // namespace primehopf
