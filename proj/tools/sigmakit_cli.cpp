// sigmakit command line. Exit codes: 0 success, 1 a computation or
// verification failed (including budget overruns), 2 bad usage or input.

#include "sigmakit/characters.hpp"
#include "sigmakit/complex.hpp"
#include "sigmakit/groupoid.hpp"
#include "sigmakit/homology.hpp"
#include "sigmakit/houghton.hpp"
#include "sigmakit/matchings.hpp"
#include "sigmakit/stein_farley.hpp"
#include "sigmakit/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using json = nlohmann::json;
using namespace sigmakit;

namespace {

struct Global {
  bool json = false;
  std::uint64_t seed = 42;
  std::size_t budget_faces = Budget{}.max_faces;
  std::size_t budget_entries = Budget{}.max_entries;

  Budget budget() const {
    Budget b;
    b.max_faces = budget_faces;
    b.max_entries = budget_entries;
    return b;
  }
};

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Prints `text` or `data` depending on --json.
int emit(const Global& g, const std::string& text, const json& data, int code = 0) {
  if (g.json)
    std::cout << data.dump(2) << '\n';
  else
    std::cout << text;
  return code;
}

std::string line(std::string text) {
  if (text.empty() || text.back() != '\n')
    text += '\n';
  return text;
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ','))
    out.push_back(item);
  return out;
}

std::vector<int> parse_ints(const std::string& text) {
  std::vector<int> out;
  for (const auto& s : split_list(text)) {
    std::size_t used = 0;
    const int v = std::stoi(s, &used);
    if (used != s.size())
      throw UsageError("not an integer list: " + text);
    out.push_back(v);
  }
  return out;
}

json homology_json(const HomologyReport& rep) {
  json degrees = json::array();
  for (const auto& d : rep.degrees) {
    json torsion = json::array();
    for (const auto& t : d.torsion)
      torsion.push_back(to_string(t));
    degrees.push_back({{"degree", d.degree}, {"betti", d.betti}, {"torsion", torsion}});
  }
  return {{"reduced", rep.reduced}, {"complete", rep.complete}, {"degrees", degrees}};
}

json basis_json(const BasisValues& v) {
  return {{"chi0", v.chi0}, {"chi1", v.chi1}, {"psi", v.psi}};
}

std::string basis_text(const BasisValues& v) {
  std::ostringstream out;
  out << "chi0=" << v.chi0 << " chi1=" << v.chi1;
  for (std::size_t i = 0; i < v.psi.size(); ++i)
    out << " psi" << i << '=' << v.psi[i];
  return out.str();
}

SimplicialComplex load_complex(const std::string& path) {
  if (path == "-")
    return read_complex(std::cin);
  std::ifstream in(path);
  if (!in)
    throw UsageError("cannot open " + path);
  return read_complex(in);
}

std::vector<Rational> parse_rationals(const std::string& text) {
  std::vector<Rational> out;
  for (const auto& s : split_list(text))
    out.push_back(parse_rational(s));
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sigma-invariant toolkit for Stein-Thompson and Houghton groups"};
  app.require_subcommand(1);
  app.fallthrough();
  Global g;
  app.add_flag("--json", g.json, "machine-readable output");
  app.add_option("--seed", g.seed, "random seed");
  app.add_option("--budget-faces", g.budget_faces, "face enumeration limit");
  app.add_option("--budget-entries", g.budget_entries, "matrix entry limit");

  std::function<int()> action;

  // element
  auto* element = app.add_subcommand("element", "groupoid elements [minus, plus]");
  element->require_subcommand(1);
  int arity = 0;
  std::string a_text, b_text;
  auto* mul = element->add_subcommand("mul", "product, first then second");
  mul->add_option("a", a_text)->required();
  mul->add_option("b", b_text)->required();
  mul->add_option("--n", arity, "arity (inferred when 0)");
  mul->callback([&] {
    action = [&] {
      const Element a = parse_element(a_text, arity);
      const Element b = parse_element(b_text, arity);
      const Element p = multiply(a, b);
      return emit(g, render(p) + '\n', {{"product", render(p)}});
    };
  });
  auto* inv = element->add_subcommand("inv", "inverse");
  inv->add_option("a", a_text)->required();
  inv->add_option("--n", arity);
  inv->callback([&] {
    action = [&] {
      const Element e = invert(parse_element(a_text, arity));
      return emit(g, render(e) + '\n', {{"inverse", render(e)}});
    };
  });
  auto* reduce_cmd = element->add_subcommand("reduce", "reduced form");
  reduce_cmd->add_option("a", a_text)->required();
  reduce_cmd->add_option("--n", arity);
  reduce_cmd->callback([&] {
    action = [&] {
      const Element e = parse_element(a_text, arity);
      return emit(g, render(e) + '\n', {{"reduced", render(e)}});
    };
  });
  std::string element_chi;
  auto* el_char = element->add_subcommand("char", "value of a character on an element");
  el_char->add_option("a", a_text)->required();
  el_char->add_option("--n", arity)->required();
  el_char->add_option("--chi", element_chi)->required();
  el_char->callback([&] {
    action = [&] {
      const CharacterF chi = parse_character(element_chi, arity);
      const Rational v = eval(chi, parse_element(a_text, arity));
      return emit(g, to_string(v) + '\n', {{"character", render(chi)}, {"value", to_string(v)}});
    };
  });
  auto* chars = element->add_subcommand("chars", "basis character values");
  chars->add_option("a", a_text)->required();
  chars->add_option("--n", arity);
  chars->callback([&] {
    action = [&] {
      const BasisValues v = eval_basis(parse_element(a_text, arity));
      return emit(g, basis_text(v) + '\n', basis_json(v));
    };
  });

  // char
  auto* character = app.add_subcommand("char", "characters of F_n");
  character->require_subcommand(1);
  int n = 3;
  std::string chi_text;
  auto* ch_eval = character->add_subcommand("eval", "evaluate a character on an element");
  ch_eval->add_option("--n", n)->required();
  ch_eval->add_option("--chi", chi_text)->required();
  ch_eval->add_option("element", a_text)->required();
  ch_eval->callback([&] {
    action = [&] {
      const CharacterF chi = parse_character(chi_text, n);
      const Rational v = eval(chi, parse_element(a_text, n));
      return emit(g, to_string(v) + '\n', {{"character", render(chi)}, {"value", to_string(v)}});
    };
  });
  auto* ch_basis = character->add_subcommand("basis", "basis matrix and its determinant");
  ch_basis->add_option("--n", n)->required();
  ch_basis->callback([&] {
    action = [&] {
      const auto m = basis_matrix(n);
      std::ostringstream out;
      json rows = json::array();
      for (Eigen::Index i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
          out << (j ? " " : "") << to_string(m(i, j));
          row.push_back(to_string(m(i, j)));
        }
        out << '\n';
        rows.push_back(row);
      }
      const Integer det = determinant(m);
      out << "det " << to_string(det) << '\n';
      return emit(g, out.str(), {{"matrix", rows}, {"determinant", to_string(det)}});
    };
  });

  // matching
  auto* matching = app.add_subcommand("matching", "matching complexes of Delta^n(r)");
  matching->require_subcommand(1);
  int r = 0, q = 0, p = 1, max_degree = -1;
  std::string d_text = "0";
  auto* m_hom = matching->add_subcommand("homology", "reduced homology of M_D(Delta^n(r))");
  m_hom->add_option("--n", n)->required();
  m_hom->add_option("--r", r)->required();
  m_hom->add_option("--D", d_text, "comma-separated interval lengths");
  m_hom->add_option("--max-degree", max_degree);
  m_hom->callback([&] {
    action = [&] {
      const auto D = parse_ints(d_text);
      const auto c = build_matching_complex(D, n, r, max_degree < 0 ? -1 : max_degree + 1, g.budget());
      const auto rep = reduced_homology(c, max_degree, g.budget());
      json out = homology_json(rep);
      out["f_vector"] = c.f_vector();
      std::ostringstream text;
      text << "f-vector";
      for (auto f : c.f_vector())
        text << ' ' << f;
      text << '\n' << line(rep.summary());
      return emit(g, text.str(), out);
    };
  });
  auto* m_sigma = matching->add_subcommand("sigmaq", "the simplex sigma_q");
  m_sigma->add_option("--n", n)->required();
  m_sigma->add_option("--r", r)->required();
  m_sigma->add_option("--q", q)->required();
  m_sigma->callback([&] {
    action = [&] {
      const SigmaQ s = sigma_q(n, r, q);
      std::vector<std::string> labels;
      std::string text = "s=" + std::to_string(s.s) + " {";
      for (const auto& a : s.members) {
        labels.push_back(atom_label(a));
        text += (labels.size() > 1 ? ", " : "") + labels.back();
      }
      return emit(g, text + "}\n", {{"q", s.q}, {"s", s.s}, {"members", labels}});
    };
  });
  auto* m_asc = matching->add_subcommand("ascending", "ascending link of a vertex with f = r");
  m_asc->add_option("--n", n)->required();
  m_asc->add_option("--r", r)->required();
  m_asc->add_option("--chi", chi_text)->required();
  m_asc->add_option("--p", p);
  m_asc->add_option("--q", q, "upper feet bound (default 9r)");
  m_asc->add_option("--max-degree", max_degree);
  m_asc->callback([&] {
    action = [&] {
      const CharacterF chi = parse_character(chi_text, n);
      const auto lk = ascending_link_complex(chi, n, r, p, q > 0 ? q : 9 * r);
      std::vector<std::string> atoms;
      for (const auto& a : lk.atoms())
        atoms.push_back(atom_label(a));
      const int top = max_degree < 0 ? 1 : max_degree;
      const auto c = lk.materialize(top + 1, g.budget());
      json out = {{"atoms", atoms}, {"f_vector", c.f_vector()}};
      std::string text = std::to_string(atoms.size()) + " vertices\n";
      if (c.empty()) {
        out["empty"] = true;
        text += "empty\n";
      } else {
        const auto rep = reduced_homology(c, top, g.budget());
        out["homology"] = homology_json(rep);
        text += line(rep.summary());
      }
      return emit(g, text, out);
    };
  });

  // complex
  auto* complex = app.add_subcommand("complex", "simplicial complexes in the text format");
  complex->require_subcommand(1);
  std::string path;
  auto* c_hom = complex->add_subcommand("homology", "reduced homology of a complex file");
  c_hom->add_option("file", path, "path, or - for stdin")->required();
  c_hom->add_option("--max-degree", max_degree);
  c_hom->callback([&] {
    action = [&] {
      const auto c = load_complex(path);
      const auto rep = reduced_homology(c, max_degree, g.budget());
      json out = homology_json(rep);
      out["euler_characteristic"] = euler_characteristic(c);
      out["euler_consistent"] = euler_consistent(c, rep);
      return emit(g, line(rep.summary()), out);
    };
  });

  // houghton
  auto* hough = app.add_subcommand("houghton", "Houghton groups and monoids");
  hough->require_subcommand(1);
  std::string a_list, map_text;
  long long cap = -1;
  auto* h_class = hough->add_subcommand("classify", "classify [chi] in S(H_n)");
  h_class->add_option("--n", n)->required();
  h_class->add_option("--a", a_list, "coefficients of chi_1..chi_n")->required();
  h_class->callback([&] {
    action = [&] {
      const auto a = parse_rationals(a_list);
      if (static_cast<int>(a.size()) != n)
        throw UsageError("--a needs " + std::to_string(n) + " coefficients");
      const auto c = houghton::sigma_classify_H(a);
      json normalized = json::array();
      for (const auto& x : c.normalized.a)
        normalized.push_back(to_string(x));
      return emit(g, c.summary() + '\n',
                  {{"normalized", normalized}, {"order", c.normalized.order}, {"m", c.normalized.m},
                   {"member_of", c.member_of}, {"conjectured_not", c.conjectured_not},
                   {"proven", c.conjecture_proven}});
    };
  });
  auto* h_info = hough->add_subcommand("info", "f value, characters and neighbours of a map");
  h_info->add_option("map", map_text)->required();
  h_info->callback([&] {
    action = [&] {
      const auto phi = houghton::parse_map(map_text);
      const auto nb = houghton::neighbors(phi);
      std::ostringstream text;
      text << "f=" << phi.f_value() << " bijective=" << (phi.is_bijective() ? "yes" : "no")
           << " up=" << nb.up.size() << " down=" << nb.down.size() << '\n';
      return emit(g, text.str(),
                  {{"map", houghton::render(phi)}, {"f", phi.f_value()}, {"chi", phi.char_values()},
                   {"up", nb.up.size()}, {"down", nb.down.size()}});
    };
  });
  auto* h_link = hough->add_subcommand("link", "homology of a link in the f-sublevel complex");
  h_link->add_option("map", map_text)->required();
  h_link->add_option("--cap", cap, "feet cap (default 3n-3)");
  h_link->add_option("--a", a_list, "character for the ascending link");
  std::string kind = "full";
  h_link->add_option("--kind", kind)->check(CLI::IsMember({"full", "descending", "ascending"}));
  h_link->callback([&] {
    action = [&] {
      const auto phi = houghton::parse_map(map_text);
      const long long c = cap >= 0 ? cap : houghton::default_feet_cap(phi.rays());
      houghton::Link lk;
      if (kind == "descending")
        lk = houghton::descending_link(phi, g.budget());
      else if (kind == "ascending") {
        if (a_list.empty())
          throw UsageError("--kind ascending needs --a");
        lk = houghton::ascending_link(phi, parse_rationals(a_list), c, g.budget());
      } else
        lk = houghton::link(phi, c, g.budget());
      json out = {{"vertices", lk.complex.labels()}, {"f_vector", lk.complex.f_vector()}};
      std::string text = std::to_string(lk.vertices.size()) + " vertices\n";
      if (lk.complex.empty()) {
        out["empty"] = true;
        text += "empty\n";
      } else {
        const auto rep = reduced_homology(lk.complex, max_degree, g.budget());
        out["homology"] = homology_json(rep);
        text += line(rep.summary());
      }
      return emit(g, text, out);
    };
  });

  // classify
  auto* classify = app.add_subcommand("classify", "Sigma^m(F_n) membership of [chi]");
  int m = 2;
  classify->add_option("--n", n)->required();
  classify->add_option("--chi", chi_text)->required();
  classify->add_option("--m", m);
  classify->callback([&] {
    action = [&] {
      const CharacterF chi = parse_character(chi_text, n);
      const bool in = sigma_classify_F(chi, m) == SigmaVerdict::member_sigma_infinity;
      const std::string verdict = in ? "in Sigma^infinity" : "not in Sigma^" + std::to_string(m);
      return emit(g, render(chi) + ": " + verdict + '\n',
                  {{"character", render(chi)}, {"m", m}, {"member", in}, {"verdict", verdict}});
    };
  });

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "run the verification suite");
  std::string suite = "all";
  int max_r = -1;
  bool serial = false;
  verify_cmd->add_option("suite", suite, "all or one check name");
  verify_cmd->add_option("--max-r", max_r, "cap r in the matching check");
  verify_cmd->add_flag("--serial", serial, "run checks one at a time");
  verify_cmd->callback([&] {
    action = [&] {
      verify::Options o;
      o.seed = g.seed;
      o.budget = g.budget();
      o.max_r = max_r;
      o.parallel = !serial;
      const auto report = verify::run(suite, o);
      json checks = json::array();
      for (const auto& c : report.checks)
        checks.push_back({{"id", c.id}, {"name", c.name}, {"anchor", c.anchor},
                          {"passed", c.passed}, {"detail", c.detail}});
      return emit(g, report.text(),
                  {{"suite", report.suite}, {"seed", report.seed}, {"passed", report.passed()},
                   {"checks", checks}},
                  report.passed() ? 0 : 1);
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }
  try {
    return action();
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << '\n';
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
