#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "shpl/batch.hpp"
#include "shpl/core.hpp"
#include "shpl/insertion.hpp"
#include "shpl/jdt.hpp"
#include "shpl/rewriting.hpp"
#include "shpl/ssdt.hpp"
#include "shpl/symfunc.hpp"

using nlohmann::json;
using namespace shpl;

namespace {

// command-line syntax problems (exit 2), as opposed to domain errors (exit 1)
struct usage_failure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// conversion helpers: token-level parse failures are usage errors
template <typename F>
auto convert(F&& f) {
  try {
    return f();
  } catch (const error& e) {
    if (std::string(e.what()).rfind("cannot parse", 0) == 0) throw usage_failure(e.what());
    throw;
  }
}

word arg_word(const std::string& s) {
  return convert([&] { return parse_word(s); });
}
shifted_tableau arg_tableau(const std::string& s) {
  return convert([&] { return parse_tableau(s); });
}
strict_partition arg_partition(const std::string& s) {
  return convert([&] { return parse_partition(s); });
}
decomposition_tableau arg_ssdt(const std::string& s) {
  return convert([&] { return parse_ssdt(s); });
}

int default_budget() {
  if (const char* e = std::getenv("SHPL_MAX_SIZE")) {
    try {
      return std::stoi(e);
    } catch (std::exception&) {
    }
  }
  return 8;
}

std::string format_poly(const sparse_polynomial& p) {
  if (p.coeffs.empty()) return "0";
  std::string out;
  for (auto& [mono, c] : p.coeffs) {
    if (!out.empty()) out += " + ";
    std::string term;
    for (size_t i = 0; i < mono.size(); ++i) {
      if (mono[i] == 0) continue;
      if (!term.empty()) term += ' ';
      term += "x" + std::to_string(i + 1);
      if (mono[i] > 1) term += "^" + std::to_string(mono[i]);
    }
    if (c != 1 || term.empty()) out += std::to_string(c) + (term.empty() ? "" : " ");
    out += term;
  }
  return out;
}

json poly_to_json(const sparse_polynomial& p) {
  json terms = json::array();
  for (auto& [mono, c] : p.coeffs) terms.push_back({{"exponents", mono}, {"coefficient", c}});
  return {{"vars", p.vars}, {"terms", terms}};
}

// the 75 four-letter words over initial alphabet segments, in table row order
const std::vector<std::string> appendix_words = {
    "1111", "1112", "1121", "1211", "2111", "1222", "2221", "2212", "2122", "1122", "1221",
    "1212", "2112", "2121", "2211", "1123", "1231", "1213", "2113", "1132", "1312", "3112",
    "1321", "3121", "3211", "2131", "2311", "1223", "2231", "2213", "2123", "1232", "1322",
    "3122", "2321", "3221", "3212", "2132", "2312", "1233", "2331", "2313", "2133", "1332",
    "1323", "3123", "3321", "3231", "3213", "3132", "3312", "1234", "2341", "2314", "2134",
    "1342", "1324", "3124", "1243", "1423", "4123", "2143", "2413", "3142", "3412", "3421",
    "3241", "3214", "2431", "4231", "4213", "1432", "4132", "4312", "4321"};

std::string emit_appendix_table() {
  std::string out;
  std::string group, mix, rsk;
  auto flush = [&] {
    if (!group.empty()) out += group + " | " + mix + " | " + rsk + "\n";
  };
  for (auto& w : appendix_words) {
    word v = parse_word(w);
    std::string m = format_tableau(mixed_insertion(v).p);
    std::string r = format_young(rsk_insertion(v).p);
    if (m == mix && r == rsk) {
      group += " " + w;
    } else {
      flush();
      group = w;
      mix = m;
      rsk = r;
    }
  }
  flush();
  return out;
}

bool run_verify_suite(const std::string& suite, int budget) {
  if (suite == "cauchy") return cauchy_check(2, 1, 3, std::max(4, budget));
  if (suite == "niltlb") return nil_tl_b_check(budget);
  if (suite == "pieri") {
    for (int n = 0; n <= std::min(budget - 1, 6); ++n) {
      auto mus = n == 0 ? std::vector<strict_partition>{{}} : strict_partitions_of(n);
      for (auto& mu : mus)
        for (int k = 1; k <= 4 && n + k <= 10; ++k) {
          auto e = pieri_expand(mu, k);
          for (auto& lam : strict_partitions_of(n + k)) {
            long long want = e.count(lam) ? e.at(lam) : 0;
            if (want != lr_coeff_plactic(lam, mu, {k})) return false;
          }
        }
    }
    return true;
  }
  if (suite == "lr-agreement") {
    auto r = lr_agreement_sweep(std::min(budget, 10));
    return r.mismatches == 0;
  }
  throw usage_failure("unknown suite '" + suite + "'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"shifted plactic monoid toolkit"};
  app.require_subcommand(1);
  std::string format = "text";
  app.add_option("--format", format, "output format (text or json)")
      ->check(CLI::IsMember({"text", "json"}));
  int budget = default_budget();
  app.add_option("--max-size", budget, "enumeration budget (default 8, env SHPL_MAX_SIZE)");

  std::string word_arg, tab_arg, ssdt_arg, content_arg, kind = "shifted";
  std::string lam_arg, mu_arg, nu_arg, method = "all", basis = "P", outer_arg, inner_arg,
              filling_arg, suite;
  int vars = 2;

  auto* c_im = app.add_subcommand("insert-mixed", "mixed insertion of a word");
  c_im->add_option("word", word_arg, "input word")->required();
  c_im->callback([&] {
    auto pr = mixed_insertion(arg_word(word_arg));
    if (format == "json")
      std::cout << json{{"p", format_tableau(pr.p)}, {"q", format_tableau(pr.q)}}.dump() << "\n";
    else
      std::cout << "P: " << format_tableau(pr.p) << "\nQ: " << format_tableau(pr.q) << "\n";
  });

  auto* c_is = app.add_subcommand("insert-sk", "row-bumping insertion into a decomposition tableau");
  c_is->add_option("word", word_arg, "input word")->required();
  c_is->callback([&] {
    auto pr = sk_insertion(arg_word(word_arg));
    if (format == "json")
      std::cout << json{{"p", format_ssdt(pr.p)}, {"q", format_tableau(pr.q)}}.dump() << "\n";
    else
      std::cout << "P: " << format_ssdt(pr.p) << "\nQ: " << format_tableau(pr.q) << "\n";
  });

  auto* c_rsk = app.add_subcommand("rsk", "ordinary row insertion");
  c_rsk->add_option("word", word_arg, "input word")->required();
  c_rsk->callback([&] {
    auto pr = rsk_insertion(arg_word(word_arg));
    if (format == "json")
      std::cout << json{{"p", format_young(pr.p)}, {"q", format_young(pr.q)}}.dump() << "\n";
    else
      std::cout << "P: " << format_young(pr.p) << "\nQ: " << format_young(pr.q) << "\n";
  });

  auto* c_mr = app.add_subcommand("mread", "mixed reading word of a shifted tableau");
  c_mr->add_option("tableau", tab_arg, "shifted tableau, rows split by '/'")->required();
  c_mr->callback([&] {
    word w = mread(arg_tableau(tab_arg));
    if (format == "json")
      std::cout << json{{"word", w}}.dump() << "\n";
    else
      std::cout << format_word(w) << "\n";
  });

  auto* c_phi = app.add_subcommand("phi", "decomposition tableau to shifted tableau");
  c_phi->add_option("ssdt", ssdt_arg, "decomposition tableau, rows split by '/'")->required();
  c_phi->callback([&] {
    auto t = phi(arg_ssdt(ssdt_arg));
    if (format == "json")
      std::cout << json{{"tableau", format_tableau(t)}}.dump() << "\n";
    else
      std::cout << format_tableau(t) << "\n";
  });

  auto* c_psi = app.add_subcommand("psi", "shifted tableau to decomposition tableau");
  c_psi->add_option("tableau", tab_arg, "shifted tableau, rows split by '/'")->required();
  c_psi->callback([&] {
    auto r = psi(arg_tableau(tab_arg));
    if (format == "json")
      std::cout << json{{"ssdt", format_ssdt(r)}}.dump() << "\n";
    else
      std::cout << format_ssdt(r) << "\n";
  });

  auto* c_cl = app.add_subcommand("classes", "partition all words of a content into classes");
  c_cl->add_option("--content", content_arg, "letter multiplicities, e.g. 3,2")->required();
  c_cl->add_option("--kind", kind, "shifted or plactic")
      ->check(CLI::IsMember({"shifted", "plactic"}));
  c_cl->callback([&] {
    std::vector<int> content;
    for (int x : arg_partition(content_arg)) content.push_back(x);
    json arr = json::array();
    if (kind == "shifted") {
      for (auto& c : enumerate_shifted_classes(content, budget)) {
        if (format == "json") {
          json ms = json::array();
          for (auto& w : c.members) ms.push_back(format_word(w));
          arr.push_back({{"members", ms}, {"tableau", format_tableau(c.tableau)}});
        } else {
          std::string line;
          for (auto& w : c.members) line += (line.empty() ? "" : ", ") + format_word(w);
          std::cout << line << " | " << format_tableau(c.tableau) << "\n";
        }
      }
    } else {
      for (auto& c : enumerate_plactic_classes(content, budget)) {
        if (format == "json") {
          json ms = json::array();
          for (auto& w : c.members) ms.push_back(format_word(w));
          arr.push_back({{"members", ms}, {"tableau", format_young(c.tableau)}});
        } else {
          std::string line;
          for (auto& w : c.members) line += (line.empty() ? "" : ", ") + format_word(w);
          std::cout << line << " | " << format_young(c.tableau) << "\n";
        }
      }
    }
    if (format == "json") std::cout << arr.dump() << "\n";
  });

  auto* c_lr = app.add_subcommand("lrcoef", "structure constant of the P basis");
  c_lr->add_option("--lambda", lam_arg, "outer shape")->required();
  c_lr->add_option("--mu", mu_arg, "first factor shape")->required();
  c_lr->add_option("--nu", nu_arg, "second factor shape")->required();
  c_lr->add_option("--method", method, "all, plactic, rectify or boxadd")
      ->check(CLI::IsMember({"all", "plactic", "rectify", "boxadd"}));
  c_lr->callback([&] {
    auto lam = arg_partition(lam_arg), mu = arg_partition(mu_arg), nu = arg_partition(nu_arg);
    auto one = [&](const std::string& m) {
      if (m == "plactic") return lr_coeff_plactic(lam, mu, nu);
      if (m == "rectify") return lr_coeff_stembridge(lam, mu, nu);
      return lr_coeff_boxadd(lam, mu, nu);
    };
    if (method == "all") {
      long long p = one("plactic"), r = one("rectify"), b = one("boxadd");
      if (format == "json")
        std::cout << json{{"plactic", p}, {"rectify", r}, {"boxadd", b}}.dump() << "\n";
      else
        std::cout << "plactic: " << p << "\nrectify: " << r << "\nboxadd: " << b << "\n";
    } else {
      long long c = one(method);
      if (format == "json")
        std::cout << json{{"coefficient", c}, {"method", method}}.dump() << "\n";
      else
        std::cout << c << "\n";
    }
  });

  auto* c_g = app.add_subcommand("gcoef", "Schur expansion coefficient of a P polynomial");
  c_g->add_option("--lambda", lam_arg, "shifted shape")->required();
  c_g->add_option("--mu", mu_arg, "ordinary shape")->required();
  c_g->add_option("--method", method, "all, plactic or rectify")
      ->check(CLI::IsMember({"all", "plactic", "rectify"}));
  c_g->callback([&] {
    auto lam = arg_partition(lam_arg), mu = arg_partition(mu_arg);
    auto one = [&](const std::string& m) {
      return m == "plactic" ? g_coeff_plactic(lam, mu) : g_coeff_rectify(lam, mu);
    };
    if (method == "all") {
      long long p = one("plactic"), r = one("rectify");
      if (format == "json")
        std::cout << json{{"plactic", p}, {"rectify", r}}.dump() << "\n";
      else
        std::cout << "plactic: " << p << "\nrectify: " << r << "\n";
    } else {
      long long c = one(method);
      if (format == "json")
        std::cout << json{{"coefficient", c}, {"method", method}}.dump() << "\n";
      else
        std::cout << c << "\n";
    }
  });

  auto* c_sc = app.add_subcommand("schur", "Schur P/Q/s polynomial in finitely many variables");
  c_sc->add_option("--basis", basis, "P, Q or s")->check(CLI::IsMember({"P", "Q", "s"}));
  c_sc->add_option("--shape", lam_arg, "shape")->required();
  c_sc->add_option("--vars", vars, "number of variables")->required();
  c_sc->add_option("--inner", inner_arg,
                   "skew inner shape (experimental rectification classes, basis P only)");
  c_sc->callback([&] {
    auto shape = arg_partition(lam_arg);
    if (!inner_arg.empty()) {
      if (basis != "P") throw usage_failure("--inner requires --basis P");
      auto classes = skew_pschur_expand(shape, arg_partition(inner_arg), vars, budget + 2);
      if (format == "json") {
        json arr = json::array();
        for (auto& [t, c] : classes) arr.push_back({{"tableau", format_tableau(t)}, {"count", c}});
        std::cout << json{{"experimental", true}, {"classes", arr}}.dump() << "\n";
      } else {
        std::cout << "EXPERIMENTAL: rectification class multiset of skew fillings\n";
        for (auto& [t, c] : classes) std::cout << format_tableau(t) << "  x" << c << "\n";
      }
      return;
    }
    sparse_polynomial p;
    if (basis == "P")
      p = schur_p_poly(shape, vars);
    else if (basis == "Q")
      p = schur_q_poly(shape, vars);
    else
      p = schur_s_poly(shape, vars);
    if (format == "json")
      std::cout << poly_to_json(p).dump() << "\n";
    else
      std::cout << format_poly(p) << "\n";
  });

  auto* c_rf = app.add_subcommand("rectify", "jeu de taquin rectification of a standard skew filling");
  c_rf->add_option("--outer", outer_arg, "outer shape")->required();
  c_rf->add_option("--inner", inner_arg, "inner shape")->required();
  c_rf->add_option("--filling", filling_arg, "rows split by '/', entries 1..n")->required();
  c_rf->callback([&] {
    skew_tableau t;
    t.outer = arg_partition(outer_arg);
    t.inner = arg_partition(inner_arg);
    t.rows = convert([&] {
      std::vector<word> rows;
      std::string cur;
      for (char ch : filling_arg + "/") {
        if (ch == '/') {
          rows.push_back(parse_word(cur));
          cur.clear();
        } else {
          cur += ch;
        }
      }
      return rows;
    });
    while (!t.rows.empty() && t.rows.back().empty()) t.rows.pop_back();
    auto r = shifted_jdt_rectify(t);
    if (format == "json")
      std::cout << json{{"tableau", format_tableau(r)}}.dump() << "\n";
    else
      std::cout << format_tableau(r) << "\n";
  });

  auto* c_dl = app.add_subcommand("delta", "remove the first entry and slide");
  c_dl->add_option("tableau", tab_arg, "standard shifted tableau")->required();
  c_dl->callback([&] {
    auto r = delta(arg_tableau(tab_arg));
    if (format == "json")
      std::cout << json{{"tableau", format_tableau(r)}}.dump() << "\n";
    else
      std::cout << format_tableau(r) << "\n";
  });

  auto* c_st = app.add_subcommand("stan", "standardize a word, tableau or decomposition tableau");
  auto* o_w = c_st->add_option("--word", word_arg, "word to standardize");
  auto* o_t = c_st->add_option("--tableau", tab_arg, "shifted tableau to standardize");
  auto* o_r = c_st->add_option("--ssdt", ssdt_arg, "decomposition tableau to standardize");
  c_st->callback([&] {
    int given = (int)o_w->count() + (int)o_t->count() + (int)o_r->count();
    if (given != 1) throw usage_failure("stan needs exactly one of --word, --tableau, --ssdt");
    if (o_w->count()) {
      word w = stan_word(arg_word(word_arg));
      if (format == "json")
        std::cout << json{{"word", w}}.dump() << "\n";
      else
        std::cout << format_word(w) << "\n";
    } else if (o_t->count()) {
      auto t = stan_tableau(arg_tableau(tab_arg));
      if (format == "json")
        std::cout << json{{"tableau", format_tableau(t)}}.dump() << "\n";
      else
        std::cout << format_tableau(t) << "\n";
    } else {
      auto r = stan_ssdt(arg_ssdt(ssdt_arg));
      if (format == "json")
        std::cout << json{{"ssdt", format_ssdt(r)}}.dump() << "\n";
      else
        std::cout << format_ssdt(r) << "\n";
    }
  });

  auto* c_vf = app.add_subcommand("verify", "run a verification suite");
  c_vf->add_option("--suite", suite, "cauchy, niltlb, pieri or lr-agreement")
      ->required()
      ->check(CLI::IsMember({"cauchy", "niltlb", "pieri", "lr-agreement"}));
  c_vf->callback([&] {
    bool ok = run_verify_suite(suite, budget);
    if (format == "json")
      std::cout << json{{"suite", suite}, {"ok", ok}}.dump() << "\n";
    else
      std::cout << "suite " << suite << ": " << (ok ? "ok" : "FAILED") << "\n";
    if (!ok) throw filling_error("suite " + suite + " failed");
  });

  auto* c_ap = app.add_subcommand("appendix", "four-letter class table");
  c_ap->callback([&] {
    if (format == "json") {
      json arr = json::array();
      for (auto& line : [] {
             std::vector<std::string> ls;
             std::string cur, all = emit_appendix_table();
             for (char ch : all)
               if (ch == '\n') {
                 ls.push_back(cur);
                 cur.clear();
               } else {
                 cur += ch;
               }
             return ls;
           }())
        arr.push_back(line);
      std::cout << arr.dump() << "\n";
    } else {
      std::cout << emit_appendix_table();
    }
  });

  for (auto* sc : app.get_subcommands([](CLI::App*) { return true; })) sc->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_name() == "CallForHelp" || e.get_name() == "CallForAllHelp") {
      std::cout << app.help();
      return 0;
    }
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const usage_failure& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
