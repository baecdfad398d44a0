// cob: exact calculator for surgery-triplet presentations of 3-cobordisms.
//
// Subcommands operate on presentation files (JSON, integers as decimal
// strings) and mapping-class matrix files. Exit codes: 0 success, 1 negative
// answer under --strict, 2 usage/input error, 3 internal invariant violation.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cob/compose.hpp"
#include "cob/generate.hpp"
#include "cob/json_io.hpp"
#include "cob/kirby.hpp"
#include "cob/mcg.hpp"
#include "cob/suite.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInternal = 3;

std::string yesno(bool b) { return b ? "yes" : "no"; }

void print_rat_matrix(const std::string& label, const cob::RatMatrix& m) {
  std::cout << label << ": " << m.to_string() << "\n";
}

void write_presentation(const cob::TripletPresentation& t, const std::string& out) {
  if (out.empty())
    std::cout << cob::presentation_to_json(t).dump(2) << "\n";
  else
    cob::save_presentation(t, out);
}

int run(int argc, char** argv) {
  CLI::App app{"exact 3-cobordism calculator over surgery-triplet linking data"};
  app.require_subcommand(1);
  int rc = kExitOk;

  // --- validate ---------------------------------------------------------
  std::string validate_file;
  bool validate_strict = false;
  auto* cmd_validate = app.add_subcommand("validate", "check block dimensions and symmetry");
  cmd_validate->add_option("file", validate_file, "presentation file")->required();
  cmd_validate->add_flag("--strict", validate_strict, "exit 1 when violations exist");
  cmd_validate->callback([&] {
    auto t = cob::load_presentation(validate_file);
    auto violations = cob::validate(t);
    if (violations.empty()) {
      std::cout << "ok\n";
    } else {
      for (const auto& v : violations) std::cout << "violation: " << v << "\n";
      if (validate_strict) rc = kExitNegative;
    }
  });

  // --- h1 ----------------------------------------------------------------
  std::string h1_file;
  bool h1_cob = false, h1_fill = false;
  auto* cmd_h1 = app.add_subcommand("h1", "first homology of the cobordism or its filling");
  cmd_h1->add_option("file", h1_file, "presentation file")->required();
  auto* opt_cob = cmd_h1->add_flag("--cobordism", h1_cob, "homology of the cobordism (default)");
  auto* opt_fill = cmd_h1->add_flag("--filling", h1_fill, "homology of the filling");
  opt_cob->excludes(opt_fill);
  cmd_h1->callback([&] {
    auto t = cob::load_presentation(h1_file);
    if (h1_fill)
      std::cout << "H1(filling) = " << cob::h1_filling(t).to_string() << "\n";
    else
      std::cout << "H1(cobordism) = " << cob::h1_cobordism(t).second.to_string() << "\n";
  });

  // --- classify -----------------------------------------------------------
  std::string classify_file;
  bool classify_strict = false;
  auto* cmd_classify = app.add_subcommand(
      "classify", "homology-sphere and semi-Lagrangian classification");
  cmd_classify->add_option("file", classify_file, "presentation file")->required();
  cmd_classify->add_flag("--strict", classify_strict,
                         "exit 1 unless a semi-Lagrangian Q-cobordism (rational form)");
  cmd_classify->callback([&] {
    auto t = cob::load_presentation(classify_file);
    auto rep = cob::classify(t);
    std::cout << "Q-cobordism: " << yesno(rep.is_q) << "\n";
    std::cout << "Z-cobordism: " << yesno(rep.is_z) << "\n";
    std::cout << "semi-Lagrangian (integral): " << yesno(rep.semi_lagrangian_integral) << "\n";
    std::cout << "semi-Lagrangian (rational): " << yesno(rep.semi_lagrangian_matrix) << "\n";
    if (rep.is_q) {
      print_rat_matrix("bottom defect (D - B A^-1 B^T)", *rep.bottom_defect);
      print_rat_matrix("top defect (F - C A^-1 C^T)", *rep.top_defect);
      print_rat_matrix("cross term (B A^-1 C^T)", *rep.cross_term);
    }
    if (classify_strict && !(rep.is_q && rep.semi_lagrangian_matrix)) rc = kExitNegative;
  });

  // --- compose -------------------------------------------------------------
  std::string compose_a, compose_b, compose_out;
  auto* cmd_compose = app.add_subcommand("compose", "glue top of FILE1 to bottom of FILE2");
  cmd_compose->add_option("file1", compose_a, "lower presentation")->required();
  cmd_compose->add_option("file2", compose_b, "upper presentation")->required();
  cmd_compose->add_option("-o,--output", compose_out, "output presentation file");
  cmd_compose->callback([&] {
    auto t1 = cob::load_presentation(compose_a);
    auto t2 = cob::load_presentation(compose_b);
    auto built = cob::compose(t1, t2);
    write_presentation(built.result, compose_out);
    std::cerr << "interface genus " << built.interface_genus << ", components:";
    for (const auto& r : built.component_order)
      std::cerr << " " << r.label << "x" << r.count;
    std::cerr << "\n";
  });

  // --- s ---------------------------------------------------------------------
  std::string s_a, s_b;
  auto* cmd_s = app.add_subcommand("s", "decomposition invariant of a glued pair");
  cmd_s->add_option("file1", s_a, "lower presentation")->required();
  cmd_s->add_option("file2", s_b, "upper presentation")->required();
  cmd_s->callback([&] {
    auto t1 = cob::load_presentation(s_a);
    auto t2 = cob::load_presentation(s_b);
    std::cout << "s = " << cob::s_invariant(t1, t2) << "\n";
  });

  // --- bullet ------------------------------------------------------------------
  std::string bullet_a, bullet_b, bullet_out;
  auto* cmd_bullet = app.add_subcommand(
      "bullet", "horizontal product of two empty-bottom presentations");
  cmd_bullet->add_option("file1", bullet_a, "first presentation")->required();
  cmd_bullet->add_option("file2", bullet_b, "second presentation")->required();
  cmd_bullet->add_option("-o,--output", bullet_out, "output presentation file");
  cmd_bullet->callback([&] {
    auto t1 = cob::load_presentation(bullet_a);
    auto t2 = cob::load_presentation(bullet_b);
    write_presentation(cob::bullet(t1, t2), bullet_out);
  });

  // --- kirby ----------------------------------------------------------------
  std::string kirby_file, kirby_moves_file, kirby_out;
  std::uint64_t kirby_seed = 0;
  long long kirby_random = -1;
  auto* cmd_kirby = app.add_subcommand("kirby", "apply Kirby moves to a presentation");
  cmd_kirby->add_option("file", kirby_file, "presentation file")->required();
  auto* opt_moves = cmd_kirby->add_option("--moves", kirby_moves_file,
                                          "move log file, one move per line");
  auto* opt_random = cmd_kirby->add_option("--random", kirby_random,
                                           "apply N random legal moves");
  cmd_kirby->add_option("--seed", kirby_seed, "seed for --random");
  cmd_kirby->add_option("-o,--output", kirby_out, "output presentation file");
  opt_moves->excludes(opt_random);
  cmd_kirby->callback([&] {
    auto t = cob::load_presentation(kirby_file);
    if (!kirby_moves_file.empty()) {
      std::ifstream in(kirby_moves_file);
      if (!in) throw cob::ParseError("cannot open move log: " + kirby_moves_file);
      std::string text((std::istreambuf_iterator<char>(in)),
                       std::istreambuf_iterator<char>());
      for (const auto& m : cob::parse_move_log(text)) t = cob::apply_move(t, m);
      write_presentation(t, kirby_out);
    } else if (kirby_random >= 0) {
      auto [moved, log] =
          cob::random_moves(t, kirby_seed, static_cast<std::size_t>(kirby_random));
      // The generated log is the primary output; keep stdout machine-readable
      // when the presentation also goes there.
      if (kirby_out.empty()) {
        std::cerr << cob::format_move_log(log);
        write_presentation(moved, kirby_out);
      } else {
        std::cout << cob::format_move_log(log);
        write_presentation(moved, kirby_out);
      }
    } else {
      throw CLI::RequiredError("one of --moves or --random");
    }
  });

  // --- mcg ------------------------------------------------------------------
  auto* cmd_mcg = app.add_subcommand("mcg", "mapping class group via its homology action");
  cmd_mcg->require_subcommand(1);
  std::string mcg_check_file, mcg_heegaard_file;
  auto* cmd_mcg_check = cmd_mcg->add_subcommand(
      "check", "symplectic and Lagrangian-subgroup membership");
  cmd_mcg_check->add_option("matrixfile", mcg_check_file, "2g x 2g integer matrix (JSON)")
      ->required();
  cmd_mcg_check->callback([&] {
    cob::IntMatrix w = cob::load_matrix(mcg_check_file);
    if (w.rows() != w.cols() || w.rows() % 2 != 0)
      throw cob::DimensionError("matrix must be square of even dimension");
    std::size_t g = w.rows() / 2;
    bool symp = cob::is_symplectic(w, g);
    std::cout << "symplectic: " << yesno(symp) << "\n";
    bool lagr = symp && cob::in_lagrangian_subgroup(cob::SymplecticMap::make(w));
    std::cout << "lagrangian-subgroup: " << yesno(lagr) << "\n";
  });
  auto* cmd_mcg_heegaard = cmd_mcg->add_subcommand(
      "heegaard", "homology of the Heegaard filling of a mapping class");
  cmd_mcg_heegaard->add_option("matrixfile", mcg_heegaard_file, "2g x 2g integer matrix (JSON)")
      ->required();
  cmd_mcg_heegaard->callback([&] {
    cob::IntMatrix w = cob::load_matrix(mcg_heegaard_file);
    if (w.rows() != w.cols() || w.rows() % 2 != 0)
      throw cob::DimensionError("matrix must be square of even dimension");
    auto map = cob::SymplecticMap::make(w);
    std::cout << "H1(Heegaard filling) = " << cob::heegaard_h1(map).to_string() << "\n";
  });

  // --- gen -----------------------------------------------------------------
  std::string gen_family, gen_out;
  cob::GeneratorParams gen_params;
  auto* cmd_gen = app.add_subcommand("gen", "generate a random semi-Lagrangian presentation");
  cmd_gen->add_option("--family", gen_family, "z or q")
      ->required()
      ->check(CLI::IsMember({"z", "q"}));
  cmd_gen->add_option("--g1", gen_params.g_bottom, "bottom genus")->required();
  cmd_gen->add_option("--g2", gen_params.g_top, "top genus")->required();
  cmd_gen->add_option("--n", gen_params.n_link, "link components")->required();
  cmd_gen->add_option("--seed", gen_params.seed, "generator seed")->required();
  cmd_gen->add_option("--bound", gen_params.entry_bound, "entry bound (default 3)");
  cmd_gen->add_option("-o,--output", gen_out, "output presentation file");
  cmd_gen->callback([&] {
    gen_params.family = gen_family == "z" ? cob::Family::Z : cob::Family::Q;
    write_presentation(cob::gen_semilagrangian(gen_params), gen_out);
  });

  // --- suite ------------------------------------------------------------------
  std::size_t suite_trials = 0;
  std::uint64_t suite_seed = 0;
  bool suite_json = false;
  auto* cmd_suite = app.add_subcommand("suite", "run the seeded theorem suite");
  cmd_suite->add_option("--trials", suite_trials, "number of trials")->required();
  cmd_suite->add_option("--seed", suite_seed, "suite seed");
  cmd_suite->add_flag("--json", suite_json, "emit the report as JSON");
  cmd_suite->callback([&] {
    auto report = cob::run_suite(suite_trials, suite_seed);
    if (suite_json)
      std::cout << report.to_json().dump(2) << "\n";
    else
      std::cout << report.to_text();
    if (!report.all_passed()) rc = kExitInternal;
  });

  // --- prop4 ---------------------------------------------------------------
  std::size_t prop4_g = 0;
  auto* cmd_prop4 = app.add_subcommand(
      "prop4", "homology of the complement of an embedded chain graph");
  cmd_prop4->add_option("--g", prop4_g, "genus")->required();
  cmd_prop4->callback([&] {
    auto h = cob::chain_graph_complement_h1(prop4_g);
    std::cout << "H1(chain graph complement, g=" << prop4_g
              << ") = " << h.to_string() << "\n";
    if (!h.torsion.empty() || h.free_rank != prop4_g)
      throw cob::InternalError("chain graph complement homology is not Z^g");
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  } catch (const cob::InternalError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  } catch (const cob::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return rc;
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
