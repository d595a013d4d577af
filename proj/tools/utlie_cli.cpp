// utlie_cli.cpp -- command-line front end: parse, reduce, identity testing,
// enumeration, ranks, embeddings, family bases, derivations, and the
// characteristic-2 chain reports.
#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "utlie/utlie.hpp"

using nlohmann::json;

namespace {

struct Global {
  std::string format = "text";
  long long seed = 0;
  bool seedSet = false;
  bool timings = false;
};

// Mathematical "no" answers exit 1; usage and parse problems exit 2.
constexpr int kExitTrue = 0;
constexpr int kExitFalse = 1;
constexpr int kExitUsage = 2;

std::string step_text(const utlie::DerivationStep& st) {
  using namespace utlie;
  std::ostringstream out;
  std::visit(
      [&](const auto& s) {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, RenameStep>) {
          out << "rename @" << s.input << ":";
          for (const auto& [a, b] : s.map)
            out << " " << print_variable(a) << "->" << print_variable(b);
        } else if constexpr (std::is_same_v<T, SubstituteZStep>) {
          out << "substitute @" << s.input << ": " << print_variable(s.var) << " -> "
              << print_word(s.replacement.letters());
        } else if constexpr (std::is_same_v<T, BracketRightStep>) {
          out << "bracket @" << s.input << ":";
          for (const auto& v : s.vars) out << " " << print_variable(v);
        } else {
          out << "combine:";
          for (const auto& [idx, c] : s.parts) out << " " << c.str() << "*@" << idx;
        }
      },
      st);
  return out.str();
}

json step_json(const utlie::DerivationStep& st) {
  using namespace utlie;
  json j;
  std::visit(
      [&](const auto& s) {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, RenameStep>) {
          j["kind"] = "rename";
          j["input"] = s.input;
          json m = json::object();
          for (const auto& [a, b] : s.map) m[print_variable(a)] = print_variable(b);
          j["map"] = m;
        } else if constexpr (std::is_same_v<T, SubstituteZStep>) {
          j["kind"] = "substitute";
          j["input"] = s.input;
          j["var"] = print_variable(s.var);
          j["replacement"] = print_word(s.replacement.letters());
        } else if constexpr (std::is_same_v<T, BracketRightStep>) {
          j["kind"] = "bracket";
          j["input"] = s.input;
          json vs = json::array();
          for (const auto& v : s.vars) vs.push_back(print_variable(v));
          j["vars"] = vs;
        } else {
          j["kind"] = "combine";
          json ps = json::array();
          for (const auto& [idx, c] : s.parts) ps.push_back(json::array({idx, c.str()}));
          j["parts"] = ps;
        }
      },
      st);
  return j;
}

std::vector<std::string> read_lines(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open file '" + path + "'");
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) lines.push_back(line);
  return lines;
}

bool blank(const std::string& s) {
  return s.find_first_not_of(" \t\r\n") == std::string::npos;
}

class Emitter {
 public:
  Emitter(const Global& g, std::string command) : g_(g) {
    rep_["command"] = std::move(command);
    if (g.seedSet) rep_["seed"] = g.seed;
    start_ = std::chrono::steady_clock::now();
  }
  json& rep() { return rep_; }
  void text_line(const std::string& line) { textLines_.push_back(line); }

  void finish() {
    if (g_.timings) {
      auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                    std::chrono::steady_clock::now() - start_)
                    .count();
      rep_["elapsed_ms"] = ms;
      textLines_.push_back("elapsed_ms: " + std::to_string(ms));
    }
    if (g_.format == "json") {
      std::cout << rep_.dump(2) << "\n";
    } else {
      for (const auto& l : textLines_) std::cout << l << "\n";
    }
  }

 private:
  const Global& g_;
  json rep_;
  std::vector<std::string> textLines_;
  std::chrono::steady_clock::time_point start_;
};

int cmd_reduce(const Global& g, int n, unsigned p, const std::string& expr) {
  using namespace utlie;
  Emitter em(g, "reduce");
  FieldSpec F = make_field(p);
  LiePoly r = reduce_any(parse_combo(expr, n, F), n);
  em.rep()["n"] = n;
  em.rep()["char"] = p;
  em.rep()["inputs"] = json::array({expr});
  em.rep()["result"] = print_poly(r);
  em.text_line(print_poly(r));
  em.finish();
  return kExitTrue;
}

int cmd_ident(const Global& g, int n, unsigned p, const std::string& expr) {
  using namespace utlie;
  Emitter em(g, "ident");
  FieldSpec F = make_field(p);
  bool ok = is_graded_identity(parse_combo(expr, n, F), n, F);
  em.rep()["n"] = n;
  em.rep()["char"] = p;
  em.rep()["inputs"] = json::array({expr});
  em.rep()["result"] = ok;
  em.text_line(ok ? "true" : "false");
  em.finish();
  return ok ? kExitTrue : kExitFalse;
}

int cmd_enumerate(const Global& g, int n, const std::string& mdText) {
  using namespace utlie;
  Emitter em(g, "enumerate");
  Multidegree md = parse_multidegree(mdText, n);
  std::vector<NormalMonomial> mons = enumerate_normal_monomials(n, md);
  em.rep()["n"] = n;
  em.rep()["inputs"] = json::array({mdText});
  json arr = json::array();
  for (const auto& m : mons) {
    arr.push_back(print_word(m.word()));
    em.text_line(print_word(m.word()));
  }
  em.rep()["result"] = arr;
  em.rep()["count"] = mons.size();
  em.finish();
  return kExitTrue;
}

int cmd_rank(const Global& g, int n, unsigned p, const std::string& path) {
  using namespace utlie;
  Emitter em(g, "rank");
  FieldSpec F = make_field(p);
  std::vector<LiePoly> polys;
  std::vector<int> lineNo;  // 1-based source lines of the parsed rows
  std::vector<std::string> lines = read_lines(path);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (blank(lines[i])) continue;
    polys.push_back(reduce_any(parse_combo(lines[i], n, F), n));
    lineNo.push_back(static_cast<int>(i) + 1);
  }
  IndependenceResult ir = independence_rank(polys, n, F);
  em.rep()["n"] = n;
  em.rep()["char"] = p;
  em.rep()["inputs"] = json::array({path});
  em.rep()["rank"] = ir.rank;
  em.rep()["result"] = ir.rank;
  json dep = json::array();
  std::string depText;
  for (int i : ir.dependent) {
    dep.push_back(lineNo[static_cast<std::size_t>(i)]);
    if (!depText.empty()) depText += ",";
    depText += std::to_string(lineNo[static_cast<std::size_t>(i)]);
  }
  em.rep()["dependent"] = dep;
  em.text_line("rank: " + std::to_string(ir.rank));
  em.text_line("dependent: " + (depText.empty() ? "none" : depText));
  em.finish();
  return kExitTrue;
}

int cmd_embed(const Global& g, int k, const std::string& v1, const std::string& v2) {
  using namespace utlie;
  Emitter em(g, "embed");
  SeqVector x = parse_seq(v1, k);
  SeqVector y = parse_seq(v2, k);
  auto wit = seq_embed(x, y);
  em.rep()["inputs"] = json::array({v1, v2});
  em.rep()["k"] = k;
  if (wit) {
    json phi = json::array();
    std::string t;
    for (int i : wit->phi) {
      phi.push_back(i);
      if (!t.empty()) t += ",";
      t += std::to_string(i);
    }
    em.rep()["result"] = true;
    em.rep()["witness"] = phi;
    em.text_line(t.empty() ? "empty embedding" : t);
  } else {
    em.rep()["result"] = false;
    em.text_line("no embedding");
  }
  em.finish();
  return wit ? kExitTrue : kExitFalse;
}

int cmd_basis(const Global& g, int n, unsigned p, const std::string& path) {
  using namespace utlie;
  Emitter em(g, "basis");
  FieldSpec F = make_field(p);
  std::vector<LiePoly> polys;
  std::vector<int> lineNo;
  std::vector<std::string> lines = read_lines(path);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (blank(lines[i])) continue;
    polys.push_back(reduce_any(parse_combo(lines[i], n, F), n));
    lineNo.push_back(static_cast<int>(i) + 1);
  }
  // make_generator_set drops zero members, which would break the line map
  for (std::size_t i = 0; i < polys.size(); ++i)
    if (polys[i].terms.empty())
      throw std::invalid_argument("line " + std::to_string(lineNo[i]) +
                                  " reduces to zero; remove it from the family");
  GeneratorSet Fam = make_generator_set(polys, n, F);
  ReducedFamily R = reduce_family(Fam);
  bool ok = verify_family(Fam, R);
  em.rep()["n"] = n;
  em.rep()["char"] = p;
  em.rep()["inputs"] = json::array({path});
  json basis = json::array();
  em.text_line("basis size: " + std::to_string(R.basis.polys.size()));
  for (std::size_t j = 0; j < R.basis.polys.size(); ++j) {
    basis.push_back(json{{"poly", print_poly(R.basis.polys[j])},
                         {"line", lineNo[static_cast<std::size_t>(R.basisOrigin[j])]}});
    em.text_line("b" + std::to_string(j) + " (line " +
                 std::to_string(lineNo[static_cast<std::size_t>(R.basisOrigin[j])]) +
                 "): " + print_poly(R.basis.polys[j]));
  }
  em.rep()["result"] = basis;
  json certs = json::array();
  for (const auto& cert : R.certificates) {
    json elims = json::array();
    std::string et;
    for (const auto& e : cert.elims) {
      elims.push_back(json{{"basis", e.basisIndex}, {"coeff", e.coeff.str()}});
      if (!et.empty()) et += ", ";
      et += e.coeff.str() + "*b" + std::to_string(e.basisIndex);
    }
    certs.push_back(json{{"line", lineNo[static_cast<std::size_t>(cert.member)]},
                         {"eliminations", elims},
                         {"residual", cert.residualBasisIndex}});
    em.text_line("line " + std::to_string(lineNo[static_cast<std::size_t>(cert.member)]) +
                 ": eliminations [" + et + "] residual " +
                 (cert.residualBasisIndex < 0 ? std::string("zero")
                                              : "b" + std::to_string(cert.residualBasisIndex)));
  }
  em.rep()["certificate"] = certs;
  em.rep()["verified"] = ok;
  em.text_line(std::string("verified: ") + (ok ? "true" : "false"));
  em.finish();
  return ok ? kExitTrue : kExitFalse;
}

int cmd_derive(const Global& g, int n, unsigned p, const std::string& fText,
               const std::string& gText) {
  using namespace utlie;
  Emitter em(g, "derive");
  FieldSpec F = make_field(p);
  LiePoly f = reduce_any(parse_combo(fText, n, F), n);
  LiePoly gp = reduce_any(parse_combo(gText, n, F), n);
  if (gp.terms.size() != 1 || !(gp.terms.begin()->second == Scalar::one(F)))
    throw std::invalid_argument("target must reduce to a single monomial with coefficient 1");
  NormalMonomial target = gp.terms.begin()->first;
  em.rep()["n"] = n;
  em.rep()["char"] = p;
  em.rep()["inputs"] = json::array({fText, gText});
  Derivation d;
  try {
    d = derive_consequence(f, target);
  } catch (const std::invalid_argument& e) {
    std::string msg = e.what();
    bool mathematical = msg.find("not comparable") != std::string::npos ||
                        msg.find("occurrence renaming") != std::string::npos ||
                        msg.find("interior insertion") != std::string::npos;
    if (!mathematical) throw;
    em.rep()["result"] = false;
    em.rep()["reason"] = msg;
    em.text_line("not derivable: " + msg);
    em.finish();
    return kExitFalse;
  }
  bool ok = verify_derivation(d);
  json steps = json::array();
  for (const auto& st : d.steps) {
    steps.push_back(step_json(st));
    em.text_line(step_text(st));
  }
  em.rep()["certificate"] = steps;
  em.rep()["result"] = print_poly(d.result);
  em.rep()["verified"] = ok;
  em.text_line("result: " + print_poly(d.result));
  em.text_line(std::string("verified: ") + (ok ? "true" : "false"));
  em.finish();
  return ok ? kExitTrue : kExitFalse;
}

int cmd_ml(const Global& g, int n, unsigned p, const std::string& expr) {
  using namespace utlie;
  Emitter em(g, "ml");
  FieldSpec F = make_field(p);
  LiePoly f = reduce_any(parse_combo(expr, n, F), n);
  auto [ml, cl] = leading(f);
  em.rep()["n"] = n;
  em.rep()["char"] = p;
  em.rep()["inputs"] = json::array({expr});
  em.rep()["result"] = json{{"ml", print_word(ml.word())}, {"cl", cl.str()}};
  em.text_line("ml: " + print_word(ml.word()));
  em.text_line("cl: " + cl.str());
  em.finish();
  return kExitTrue;
}

int cmd_counterexample(const Global& g, int kmax) {
  using namespace utlie;
  Emitter em(g, "counterexample");
  ChainReport rep = chain_report(kmax);
  em.rep()["n"] = 3;
  em.rep()["char"] = 2;
  em.rep()["inputs"] = json::array({std::to_string(kmax)});
  json rows = json::array();
  for (const auto& row : rep.rows) {
    rows.push_back(json{{"k", row.k},
                        {"expand_ok", row.expandOK},
                        {"separated", row.span.separated},
                        {"rank_family", row.span.rankAllS},
                        {"rank_with_h", row.span.rankWithH},
                        {"witness", print_cmonomial(row.span.witness)},
                        {"witness_ok", row.span.witnessOK}});
    std::ostringstream line;
    line << "k=" << row.k << " expand=" << (row.expandOK ? "ok" : "FAIL")
         << " rank_family=" << row.span.rankAllS << " rank_with_h=" << row.span.rankWithH
         << " separated=" << (row.span.separated ? "yes" : "NO")
         << " witness=" << print_cmonomial(row.span.witness)
         << " witness_ok=" << (row.span.witnessOK ? "yes" : "NO");
    em.text_line(line.str());
  }
  em.rep()["result"] = rows;
  em.rep()["all_strict"] = rep.allStrict;
  em.text_line(rep.allStrict
                   ? "strict chain verified up to k=" + std::to_string(kmax)
                   : "chain verification FAILED");
  em.finish();
  return rep.allStrict ? kExitTrue : kExitFalse;
}

int cmd_contrast(const Global& g, int k, unsigned p) {
  using namespace utlie;
  Emitter em(g, "contrast");
  Scalar s = char_contrast(k, make_field(p));
  em.rep()["n"] = 3;
  em.rep()["char"] = p;
  em.rep()["inputs"] = json::array({std::to_string(k)});
  em.rep()["result"] = s.str();
  em.text_line(s.str());
  em.finish();
  return s.is_zero() ? kExitFalse : kExitTrue;
}

}  // namespace

int main(int argc, char** argv) {
  Global g;
  CLI::App app{"exact engine for graded identities of upper triangular Lie algebras"};
  app.require_subcommand(1);
  app.add_option("--format", g.format, "output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  app.add_option("--seed", g.seed, "seed recorded in reports")->each([&](const std::string&) {
    g.seedSet = true;
  });
  app.add_flag("--timings", g.timings, "include elapsed_ms in the report");

  int n = 0, k = 0, kmax = 0;
  unsigned chr = 0;
  std::string expr, file, mdText, vec1, vec2, fText, gText;
  std::function<int()> run;

  auto* reduceCmd = app.add_subcommand("reduce", "canonical form of an expression");
  reduceCmd->add_option("--n", n, "matrix size")->required();
  reduceCmd->add_option("--char", chr, "field characteristic (0 or prime)");
  reduceCmd->add_option("expr", expr, "expression")->required();
  reduceCmd->callback([&] { run = [&] { return cmd_reduce(g, n, chr, expr); }; });

  auto* identCmd = app.add_subcommand("ident", "graded identity test");
  identCmd->add_option("--n", n, "matrix size")->required();
  identCmd->add_option("--char", chr, "field characteristic")->required();
  identCmd->add_option("expr", expr, "expression")->required();
  identCmd->callback([&] { run = [&] { return cmd_ident(g, n, chr, expr); }; });

  auto* enumCmd = app.add_subcommand("enumerate", "normal monomials of a multidegree");
  enumCmd->add_option("--n", n, "matrix size")->required();
  enumCmd->add_option("--multidegree", mdText, "e.g. z1@1,z2@1,y1:2")->required();
  enumCmd->callback([&] { run = [&] { return cmd_enumerate(g, n, mdText); }; });

  auto* rankCmd = app.add_subcommand("rank", "independence rank of expressions from a file");
  rankCmd->add_option("--n", n, "matrix size")->required();
  rankCmd->add_option("--char", chr, "field characteristic")->required();
  rankCmd->add_option("file", file, "one expression per line")->required();
  rankCmd->callback([&] { run = [&] { return cmd_rank(g, n, chr, file); }; });

  auto* embedCmd = app.add_subcommand("embed", "sequence embedding witness");
  embedCmd->add_option("vec1", vec1, "tuples 'a,b;c,d'")->required();
  embedCmd->add_option("vec2", vec2, "tuples 'a,b;c,d'")->required();
  embedCmd->add_option("--k", k, "tuple arity")->required();
  embedCmd->callback([&] { run = [&] { return cmd_embed(g, k, vec1, vec2); }; });

  auto* basisCmd = app.add_subcommand("basis", "reduce a family to a leading-term basis");
  basisCmd->add_option("file", file, "one expression per line")->required();
  basisCmd->add_option("--n", n, "matrix size")->required();
  basisCmd->add_option("--char", chr, "field characteristic (default 0)");
  basisCmd->callback([&] { run = [&] { return cmd_basis(g, n, chr, file); }; });

  auto* deriveCmd = app.add_subcommand("derive", "certified consequence derivation");
  deriveCmd->add_option("--n", n, "matrix size")->required();
  deriveCmd->add_option("--char", chr, "field characteristic (default 0)");
  deriveCmd->add_option("f", fText, "source monomial")->required();
  deriveCmd->add_option("g", gText, "target monomial")->required();
  deriveCmd->callback([&] { run = [&] { return cmd_derive(g, n, chr, fText, gText); }; });

  auto* mlCmd = app.add_subcommand("ml", "leading monomial and coefficient");
  mlCmd->add_option("--n", n, "matrix size")->required();
  mlCmd->add_option("--char", chr, "field characteristic (default 0)");
  mlCmd->add_option("expr", expr, "expression")->required();
  mlCmd->callback([&] { run = [&] { return cmd_ml(g, n, chr, expr); }; });

  auto* ceCmd = app.add_subcommand("counterexample", "characteristic-2 strict chain report");
  ceCmd->add_option("--kmax", kmax, "largest chain index")->required();
  ceCmd->callback([&] { run = [&] { return cmd_counterexample(g, kmax); }; });

  auto* contrastCmd = app.add_subcommand("contrast", "surviving coefficient away from char 2");
  contrastCmd->add_option("--k", k, "chain index")->required();
  contrastCmd->add_option("--char", chr, "field characteristic, not 2")->required();
  contrastCmd->callback([&] { run = [&] { return cmd_contrast(g, k, chr); }; });

  // let the global flags (--format, --seed, --timings) trail the subcommand
  for (CLI::App* sub : app.get_subcommands([](const CLI::App*) { return true; }))
    sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    return run();
  } catch (const utlie::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
