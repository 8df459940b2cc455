#include "bmf/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "bmf/centralizer.hpp"
#include "bmf/codes.hpp"
#include "bmf/error.hpp"
#include "bmf/json_io.hpp"
#include "bmf/monodromy.hpp"

namespace bmf {

namespace {

constexpr std::uint64_t kDefaultSeed = 20240611;

struct Globals {
  std::string format = "text";
  int threads = 1;
  std::uint64_t seed = kDefaultSeed;
  bool json() const { return format == "json"; }
};

std::string perm_to_string(const std::vector<int>& perm) {
  std::ostringstream os;
  for (std::size_t i = 0; i < perm.size(); ++i) os << (i ? " " : "") << perm[i];
  return os.str();
}

std::string complex_to_string(cplx z) {
  std::ostringstream os;
  os << std::setprecision(10) << z.real() << (z.imag() < 0 ? " - " : " + ") << std::abs(z.imag()) << "i";
  return os.str();
}

json complex_json(cplx z) { return {{"re", z.real()}, {"im", z.imag()}}; }

void print_factorization_text(std::ostream& out, const Factorization& f) {
  out << "p = " << f.strands() << ", " << f.size() << " factors"
      << (f.cuspidal() ? " (cuspidal)" : "") << "\n";
  for (std::size_t k = 0; k < f.size(); ++k) {
    const Factor& t = f.factors()[k];
    out << "  " << k + 1 << ": ";
    if (t.is_half_twist()) {
      out << "Q = [" << t.conjugator().to_string() << "], rho = " << t.rho() << "\n";
    } else {
      out << "[" << t.word().to_string() << "]\n";
    }
  }
}

Factorization load_factorization(const std::string& path) {
  return factorization_from_json(read_json_file(path));
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Braid monodromy factorizations: braids, Hurwitz moves, centralizers, path codes"};
  app.name("bmf");
  app.require_subcommand(1);
  Globals g;
  app.add_option("--format", g.format, "Output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  app.add_option("--threads", g.threads, "Worker threads for parallel kernels")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--seed", g.seed, "Seed for all randomness")->capture_default_str();
  app.set_version_flag("--version", std::string("bmf format schema ") + kSchemaVersion);
  app.fallthrough();

  int code = kExitYes;
  std::function<void()> action;

  // ---- braid --------------------------------------------------------------------
  auto* braid = app.add_subcommand("braid", "Braid words")->require_subcommand(1);
  int p = 0;
  std::string w1, w2;
  {
    auto* eq = braid->add_subcommand("eq", "Exit 0 iff two words are the same braid");
    eq->add_option("--p", p, "Strand count")->required();
    eq->add_option("a", w1)->required();
    eq->add_option("b", w2)->required();
    eq->callback([&] {
      action = [&] {
        const bool same = equals(BraidWord::parse(p, w1), BraidWord::parse(p, w2));
        if (g.json()) {
          out << json{{"equal", same}}.dump() << "\n";
        } else {
          out << (same ? "equal" : "not equal") << "\n";
        }
        code = same ? kExitYes : kExitNo;
      };
    });
    auto* image = braid->add_subcommand("image", "Action on the free group generators");
    image->add_option("--p", p, "Strand count")->required();
    image->add_option("word", w1)->required();
    image->callback([&] {
      action = [&] {
        const ArtinImage im = artin_image(BraidWord::parse(p, w1));
        if (g.json()) {
          json j = json::array();
          for (int k = 1; k <= p; ++k) j.push_back(im.image(k));
          out << json{{"p", p}, {"images", j}}.dump() << "\n";
        } else {
          for (int k = 1; k <= p; ++k) out << "f" << k << " -> " << free_word_to_string(im.image(k)) << "\n";
        }
      };
    });
    auto* perm = braid->add_subcommand("permutation", "Induced permutation of the strands");
    perm->add_option("--p", p, "Strand count")->required();
    perm->add_option("word", w1)->required();
    perm->callback([&] {
      action = [&] {
        const auto pm = permutation(BraidWord::parse(p, w1));
        if (g.json()) {
          out << json{{"permutation", pm}}.dump() << "\n";
        } else {
          out << perm_to_string(pm) << "\n";
        }
      };
    });
    auto* ex = braid->add_subcommand("exp", "Exponent sum");
    ex->add_option("--p", p, "Strand count")->required();
    ex->add_option("word", w1)->required();
    ex->callback([&] {
      action = [&] {
        const long e = exponent_sum(BraidWord::parse(p, w1));
        if (g.json()) {
          out << json{{"exponent_sum", e}}.dump() << "\n";
        } else {
          out << e << "\n";
        }
      };
    });
  }

  // ---- fact ---------------------------------------------------------------------
  auto* fact = app.add_subcommand("fact", "Factorizations")->require_subcommand(1);
  std::string file1, file2;
  {
    auto* val = fact->add_subcommand("validate", "Exit 0 iff the product is the full twist");
    val->add_option("file", file1)->required()->check(CLI::ExistingFile);
    val->callback([&] {
      action = [&] {
        const Factorization f = load_factorization(file1);
        const bool ok = validate(f);
        const long sum = total_exponent(f);
        const long want = static_cast<long>(f.strands()) * (f.strands() - 1);
        if (g.json()) {
          out << json{{"valid", ok}, {"sum_rho", sum}, {"expected", want}, {"factors", f.size()}}.dump()
              << "\n";
        } else {
          out << (ok ? "valid" : "invalid") << ": sum rho = " << sum << " (p(p-1) = " << want << "), "
              << f.size() << " factors\n";
        }
        code = ok ? kExitYes : kExitNo;
      };
    });
    auto* prof = fact->add_subcommand("profile", "Singularity counts of a cuspidal factorization");
    prof->add_option("file", file1)->required()->check(CLI::ExistingFile);
    prof->callback([&] {
      action = [&] {
        const SingularityProfile sp = profile(load_factorization(file1));
        if (g.json()) {
          out << json{{"branch_points", sp.branch_points}, {"nodes", sp.nodes}, {"cusps", sp.cusps}}.dump()
              << "\n";
        } else {
          out << "branch points " << sp.branch_points << ", nodes " << sp.nodes << ", cusps " << sp.cusps
              << "\n";
        }
      };
    });
    auto* ev = fact->add_subcommand("evaluate", "Product of the factors as one word");
    ev->add_option("file", file1)->required()->check(CLI::ExistingFile);
    ev->callback([&] {
      action = [&] {
        const Factorization f = load_factorization(file1);
        const BraidWord w = evaluate(f);
        if (g.json()) {
          out << json{{"p", f.strands()}, {"word", w.to_ints()}}.dump() << "\n";
        } else {
          out << w.to_string() << "\n";
        }
      };
    });
  }

  // ---- hurwitz ------------------------------------------------------------------
  auto* hur = app.add_subcommand("hurwitz", "Hurwitz moves and equivalence search")->require_subcommand(1);
  std::string moves_file;
  int n_moves = 10;
  std::size_t budget = SearchOptions{}.budget;
  bool no_conj = false;
  std::string moves_out;
  {
    auto* ap = hur->add_subcommand("apply", "Replay a move sequence");
    ap->add_option("file", file1)->required()->check(CLI::ExistingFile);
    ap->add_option("--moves", moves_file, "Move sequence JSON")->required()->check(CLI::ExistingFile);
    ap->callback([&] {
      action = [&] {
        const Factorization f = load_factorization(file1);
        const MoveSequence m = moves_from_json(read_json_file(moves_file), f.strands());
        const Factorization r = replay(f, m);
        if (g.json()) {
          out << to_json(r).dump() << "\n";
        } else {
          print_factorization_text(out, r);
        }
      };
    });
    auto* sc = hur->add_subcommand("scramble", "Apply seeded random moves");
    sc->add_option("file", file1)->required()->check(CLI::ExistingFile);
    sc->add_option("--n", n_moves, "Number of moves")->capture_default_str()->check(CLI::NonNegativeNumber);
    sc->add_option("--moves-out", moves_out, "Write the applied moves to this file");
    sc->callback([&] {
      action = [&] {
        const Factorization f = load_factorization(file1);
        const Scrambled s = scramble(f, n_moves, g.seed);
        if (!moves_out.empty()) {
          std::ofstream mo(moves_out);
          if (!mo) throw InputError("cannot write " + moves_out);
          mo << to_json(s.moves).dump() << "\n";
        }
        if (g.json()) {
          json j = to_json(s.factorization);
          j["seed"] = g.seed;
          out << j.dump() << "\n";
        } else {
          out << "# seed " << g.seed << "\n";
          print_factorization_text(out, s.factorization);
        }
      };
    });
    auto* se = hur->add_subcommand("search", "Bounded search for a Hurwitz equivalence");
    se->add_option("a", file1)->required()->check(CLI::ExistingFile);
    se->add_option("b", file2)->required()->check(CLI::ExistingFile);
    se->add_option("--budget", budget, "Distinct states explored")->capture_default_str();
    se->add_flag("--no-conj", no_conj, "Moves only, no simultaneous conjugation");
    se->callback([&] {
      action = [&] {
        SearchOptions opts;
        opts.budget = budget;
        opts.conjugations = !no_conj;
        opts.threads = g.threads;
        const auto verdict =
            search_equivalence(load_factorization(file1), load_factorization(file2), opts);
        if (const auto* eq = std::get_if<Equivalent>(&verdict)) {
          if (g.json()) {
            json j = to_json(eq->witness);
            j["verdict"] = "equivalent";
            out << j.dump() << "\n";
          } else {
            out << "equivalent\n" << to_json(eq->witness).dump() << "\n";
          }
          code = kExitYes;
        } else if (const auto* d = std::get_if<Distinguished>(&verdict)) {
          if (g.json()) {
            out << json{{"verdict", "distinguished"}, {"invariant", d->invariant}}.dump() << "\n";
          } else {
            out << "not equivalent: " << d->invariant << " differs\n";
          }
          code = kExitNo;
        } else {
          const auto& u = std::get<Unknown>(verdict);
          if (g.json()) {
            out << json{{"verdict", "unknown"}, {"states_explored", u.states_explored}}.dump() << "\n";
          } else {
            out << "unknown: budget exhausted after " << u.states_explored << " states\n";
          }
          code = kExitUnknown;
        }
      };
    });
  }

  // ---- central --------------------------------------------------------------------
  auto* cen = app.add_subcommand("central", "Centralizer of X_1^nu")->require_subcommand(1);
  int nu = 1;
  int depth = MembershipOptions{}.max_depth;
  std::size_t mem_budget = MembershipOptions{}.state_budget;
  int maxlen = 4;
  {
    auto add_pnu = [&](CLI::App* c) {
      c->add_option("--p", p, "Strand count")->required()->check(CLI::Range(2, 64));
      c->add_option("--nu", nu, "Exponent of the half-twist")->required()->check(CLI::PositiveNumber);
    };
    auto* gens = cen->add_subcommand("gens", "Generating set");
    add_pnu(gens);
    gens->callback([&] {
      action = [&] {
        const auto set = generators(p, nu);
        if (g.json()) {
          json j = json::array();
          for (const auto& x : set.generators) j.push_back({{"name", x.name()}, {"word", x.word.to_ints()}});
          out << json{{"p", p}, {"nu", nu}, {"generators", j}}.dump() << "\n";
        } else {
          for (const auto& x : set.generators) out << x.name() << ": " << x.word.to_string() << "\n";
        }
      };
    });
    auto* ver = cen->add_subcommand("verify", "Check that every generator commutes with X_1^nu");
    add_pnu(ver);
    ver->callback([&] {
      action = [&] {
        const auto set = generators(p, nu);
        const BraidWord x = power(BraidWord::generator(p, 1), nu);
        json j = json::array();
        bool all = true;
        for (const auto& gen : set.generators) {
          const bool ok = commutes_with(gen.word, x);
          all = all && ok;
          if (g.json()) {
            j.push_back({{"name", gen.name()}, {"commutes", ok}});
          } else {
            out << gen.name() << ": " << (ok ? "commutes" : "DOES NOT COMMUTE") << "\n";
          }
        }
        if (g.json()) out << json{{"all_commute", all}, {"generators", j}}.dump() << "\n";
        code = all ? kExitYes : kExitNo;
      };
    });
    auto* mem = cen->add_subcommand("member", "Express a braid in the generators");
    add_pnu(mem);
    mem->add_option("word", w1)->required();
    mem->add_option("--depth", depth, "Maximum word length in the generators")->capture_default_str();
    mem->add_option("--budget", mem_budget, "Distinct braids explored")->capture_default_str();
    mem->callback([&] {
      action = [&] {
        MembershipOptions opts;
        opts.max_depth = depth;
        opts.state_budget = mem_budget;
        const auto set = generators(p, nu);
        const auto r = membership_search(BraidWord::parse(p, w1), p, nu, opts);
        if (const auto* wit = std::get_if<MembershipWitness>(&r)) {
          const std::string sym = wit->to_string(set);
          const BraidWord word = wit->expand(set);
          if (g.json()) {
            out << json{{"verdict", "member"}, {"witness", sym}, {"word", word.to_ints()}}.dump() << "\n";
          } else {
            out << "member: " << (sym.empty() ? "1" : sym) << "\n" << word.to_string() << "\n";
          }
          code = kExitYes;
        } else if (std::holds_alternative<NotInCentralizer>(r)) {
          if (g.json()) {
            out << json{{"verdict", "not_in_centralizer"}}.dump() << "\n";
          } else {
            out << "not in the centralizer\n";
          }
          code = kExitNo;
        } else {
          const auto& ex = std::get<SearchExhausted>(r);
          if (g.json()) {
            out << json{{"verdict", "unknown"}, {"states_explored", ex.states_explored}}.dump() << "\n";
          } else {
            out << "unknown: search exhausted after " << ex.states_explored << " states\n";
          }
          code = kExitUnknown;
        }
      };
    });
    auto* en = cen->add_subcommand("enumerate", "Short words commuting with X_1^nu");
    add_pnu(en);
    en->add_option("--len", maxlen, "Maximum word length")->capture_default_str()->check(CLI::NonNegativeNumber);
    en->callback([&] {
      action = [&] {
        EnumerateOptions opts;
        opts.threads = g.threads;
        const auto words = enumerate_commuting(p, nu, maxlen, opts);
        if (g.json()) {
          json j = json::array();
          for (const auto& w : words) j.push_back(w.to_ints());
          out << json{{"p", p}, {"nu", nu}, {"words", j}}.dump() << "\n";
        } else {
          for (const auto& w : words) out << (w.length() ? w.to_string() : "(identity)") << "\n";
        }
      };
    });
  }

  // ---- code ---------------------------------------------------------------------
  auto* cod = app.add_subcommand("code", "Loop and path codes")->require_subcommand(1);
  int s_index = 0;
  {
    auto* red = cod->add_subcommand("reduce", "Cancel adjacent inverse pairs");
    red->add_option("--p", p, "Number of points")->required()->check(CLI::Range(2, 1000));
    red->add_option("code", w1)->required();
    red->callback([&] {
      action = [&] {
        const codes::Code c = codes::reduce(codes::parse_code(p, w1));
        if (g.json()) {
          out << json{{"code", codes::to_string(c, p)}}.dump() << "\n";
        } else {
          out << codes::to_string(c, p) << "\n";
        }
      };
    });
    auto* eqc = cod->add_subcommand("equal", "Exit 0 iff the reduced codes coincide");
    eqc->add_option("--p", p, "Number of points")->required()->check(CLI::Range(2, 1000));
    eqc->add_option("a", w1)->required();
    eqc->add_option("b", w2)->required();
    eqc->callback([&] {
      action = [&] {
        const bool same = codes::codes_equal(codes::parse_code(p, w1), codes::parse_code(p, w2));
        if (g.json()) {
          out << json{{"equal", same}}.dump() << "\n";
        } else {
          out << (same ? "equal" : "not equal") << "\n";
        }
        code = same ? kExitYes : kExitNo;
      };
    });
    auto* act = cod->add_subcommand("act", "Image of the frame loop around q_s under H(path)^nu");
    act->add_option("--p", p, "Number of points")->required()->check(CLI::Range(2, 1000));
    act->add_option("--nu", nu, "Even exponent")->required();
    act->add_option("--s", s_index, "Puncture index of the frame loop")->required();
    act->add_option("path", w1)->required();
    act->callback([&] {
      action = [&] {
        const codes::Code c = codes::act_on_frame_loop(codes::parse_code(p, w1), p, nu, s_index);
        const FreeWord fw = codes::loop_to_free_word(c, p);
        const bool moved = !codes::codes_equal(c, codes::frame_loop(s_index, p));
        if (g.json()) {
          out << json{{"code", codes::to_string(c, p)}, {"free_word", fw}, {"moved", moved}}.dump() << "\n";
        } else {
          out << codes::to_string(c, p) << "\n" << free_word_to_string(fw) << "\n";
        }
      };
    });
  }

  // ---- mono ---------------------------------------------------------------------
  auto* mono = app.add_subcommand("mono", "Braid monodromy of an affine curve")->require_subcommand(1);
  MonodromyOptions mopts;
  bool loops_only = false;
  bool no_promote = false;
  bool random_cubic = false;
  std::string dump_paths;
  {
    auto* comp = mono->add_subcommand("compute", "Factorization from a polynomial");
    comp->add_option("file", file1, "Polynomial JSON")->check(CLI::ExistingFile);
    comp->add_flag("--random-cubic", random_cubic, "Use a seeded random smooth cubic instead of a file");
    comp->add_option("--tol", mopts.cluster_tol, "Critical-value clustering tolerance")->capture_default_str();
    comp->add_option("--retries", mopts.retries, "Projection-rotation retries")->capture_default_str();
    comp->add_flag("--loops-only", loops_only, "Report the loop braids without checking the product");
    comp->add_flag("--no-promote", no_promote, "Keep factors as raw words");
    comp->add_option("--dump-paths", dump_paths, "Write sampled root trajectories to this file");
    comp->callback([&] {
      action = [&] {
        if (random_cubic == !file1.empty()) throw InputError("give exactly one of a polynomial file or --random-cubic");
        const BivariatePoly f = random_cubic ? random_smooth_cubic(g.seed) : polynomial_from_json(read_json_file(file1));
        mopts.seed = g.seed;
        mopts.threads = g.threads;
        mopts.validate = !loops_only;
        mopts.promote = !no_promote;
        const MonodromyResult r = braid_monodromy(f, mopts);
        if (!dump_paths.empty()) {
          std::ofstream d(dump_paths);
          if (!d) throw InputError("cannot write " + dump_paths);
          d << std::setprecision(12);
          for (std::size_t j = 0; j < r.tails.size(); ++j) {
            for (const auto* tr : {&r.tails[j], &r.circles[j]}) {
              d << "# loop " << j + 1 << (tr == &r.tails[j] ? " tail" : " circle") << "\n";
              for (std::size_t k = 0; k < tr->samples.size(); ++k) {
                d << tr->t[k];
                for (const auto& y : tr->samples[k]) d << " " << y.real() << " " << y.imag();
                d << "\n";
              }
            }
          }
        }
        if (g.json()) {
          json loops = json::array();
          for (const auto& l : r.loops) {
            json e{{"critical", complex_json(l.critical)},
                   {"disc_multiplicity", l.disc_multiplicity},
                   {"local_degree", l.local_degree},
                   {"steps", l.steps},
                   {"min_separation", l.min_separation}};
            if (l.rho) e["rho"] = *l.rho;
            if (l.consistent) e["consistent"] = *l.consistent;
            loops.push_back(e);
          }
          json j{{"seed", g.seed},
                 {"polynomial", to_json(f)},
                 {"factorization", to_json(r.factorization)},
                 {"diagnostics",
                  {{"base_point", complex_json(r.crit.base)},
                   {"projection_angle", r.projection_angle},
                   {"min_separation", r.min_separation},
                   {"max_steps", r.max_steps},
                   {"validated", r.validated},
                   {"loops", loops}}}};
          out << j.dump() << "\n";
        } else {
          out << "# seed " << g.seed << "\n";
          out << "curve: " << f.to_string() << "\n";
          out << "base point u = " << complex_to_string(r.crit.base) << "\n";
          for (std::size_t k = 0; k < r.loops.size(); ++k) {
            const auto& l = r.loops[k];
            out << "loop " << k + 1 << " around " << complex_to_string(l.critical)
                << ": disc multiplicity " << l.disc_multiplicity << ", local degree " << l.local_degree
                << ", steps " << l.steps;
            if (l.rho) out << ", rho " << *l.rho;
            if (l.consistent && !*l.consistent) out << " (rho differs from discriminant multiplicity)";
            out << "\n";
          }
          print_factorization_text(out, r.factorization);
          out << (r.validated ? "product equals the full twist\n" : "product not checked (--loops-only)\n");
        }
      };
    });
  }

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::Success& e) {
    std::ostringstream o, e2;
    app.exit(e, o, e2);
    out << o.str();
    return kExitYes;
  } catch (const CLI::ParseError& e) {
    std::ostringstream o, e2;
    app.exit(e, o, e2);
    err << e2.str() << o.str();
    if (e.get_exit_code() == static_cast<int>(CLI::ExitCodes::Success)) return kExitYes;
    err << app.help();
    return kExitInputError;
  }

  try {
    if (action) action();
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const NumericalError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const ResourceError& e) {
    err << "resource limit: " << e.what() << "\n";
    return kExitResource;
  } catch (const std::bad_alloc&) {
    err << "resource limit: out of memory\n";
    return kExitResource;
  }
  return code;
}

}  // namespace bmf
