// Command-line front end: analyze center arrangements, generate seeded
// random instances, synthesize and triangulate image tuples, and run the
// randomized cross-check battery. All file payloads are exact rational
// JSON; reruns with the same flags and seed are byte-identical.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "mvv/arrangement.hpp"
#include "mvv/generate.hpp"
#include "mvv/io.hpp"
#include "mvv/triangulation.hpp"
#include "mvv/verify.hpp"
#include "mvv/version.hpp"

namespace {

constexpr int exit_ok = 0;
constexpr int exit_usage = 1;
constexpr int exit_under_determined = 2;
constexpr int exit_inconsistent = 3;
constexpr int exit_budget = 4;

void emit(const mvv::json& payload, const std::string& out_path) {
  std::cout << payload.dump(2) << "\n";
  if (!out_path.empty()) mvv::write_json_file(out_path, payload);
}

/// MVV_SEED in the environment wins over --seed.
std::uint64_t effective_seed(std::uint64_t flag_seed) {
  if (const char* env = std::getenv("MVV_SEED")) return std::strtoull(env, nullptr, 10);
  return flag_seed;
}

struct common_flags {
  std::uint64_t seed = 0;
  int trials = 10;
  long entry_bound = mvv::default_entry_bound;
  int partition_cap = mvv::default_partition_cap;
  int feasibility_cap = mvv::default_feasibility_cap;
  std::string out_path;
};

void add_common(CLI::App* cmd, common_flags& flags) {
  cmd->add_option("--seed", flags.seed, "random seed (MVV_SEED overrides)");
  cmd->add_option("--trials", flags.trials, "sampling trials per cross-check");
  cmd->add_option("--entry-bound", flags.entry_bound, "integer entry bound for sampling")
      ->check(CLI::Range(2l, 1000000l));
  cmd->add_option("--partition-cap", flags.partition_cap, "max views for partition enumeration");
  cmd->add_option("--feasibility-cap", flags.feasibility_cap, "max views for feasibility search");
  cmd->add_option("--out", flags.out_path, "also write the JSON output to this file");
}

mvv::analysis_options to_options(const common_flags& flags, bool assume_generic) {
  mvv::analysis_options opt;
  opt.seed = effective_seed(flags.seed);
  opt.trials = flags.trials;
  opt.partition_cap = flags.partition_cap;
  opt.feasibility_cap = flags.feasibility_cap;
  opt.entry_bound = flags.entry_bound;
  opt.assume_generic = assume_generic;
  return opt;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact invariants and triangulation for projective camera arrangements"};
  app.set_version_flag("--version", mvv::version_string);
  app.require_subcommand(1);

  // analyze
  common_flags an_flags;
  std::string an_input;
  int an_k = 0;
  bool an_generic = false;
  CLI::App* an = app.add_subcommand("analyze", "compute all invariants of an arrangement");
  an->add_option("--in", an_input, "arrangement JSON file")->required();
  an->add_option("--k", an_k, "feature dimension k")->required();
  an->add_flag("--assume-generic", an_generic,
               "treat the centers as generic (enables the exact upsilon formula)");
  add_common(an, an_flags);

  // gen
  common_flags gen_flags;
  bool gen_scene = false;
  int gen_ambient = 3;
  int gen_k = 0;
  std::vector<int> gen_centers;
  std::vector<int> gen_image_dims;
  CLI::App* gen = app.add_subcommand("gen", "generate a seeded random arrangement or scene");
  gen->set_help_flag("--help", "print help");  // frees -h/--h for image dimensions
  gen->add_option("--N", gen_ambient, "ambient projective dimension")->required();
  gen->add_flag("--scene", gen_scene, "generate a camera scene instead of an arrangement");
  gen->add_option("--centers", gen_centers, "center dimensions, e.g. 0,0,1")->delimiter(',');
  gen->add_option("--k", gen_k, "feature dimension (scenes only)");
  gen->add_option("--h", gen_image_dims, "camera image dimensions, e.g. 2,2")->delimiter(',');
  add_common(gen, gen_flags);

  // synthesize
  common_flags syn_flags;
  std::string syn_scene, syn_plane, syn_world_out;
  CLI::App* syn = app.add_subcommand("synthesize", "project a world plane into every camera");
  syn->add_option("--scene", syn_scene, "scene JSON file")->required();
  syn->add_option("--plane", syn_plane, "world plane JSON file (sampled when omitted)");
  syn->add_option("--world-out", syn_world_out, "write the world plane used to this file");
  add_common(syn, syn_flags);

  // triangulate
  common_flags tri_flags;
  std::string tri_scene, tri_tuple;
  CLI::App* tri = app.add_subcommand("triangulate", "recover the world plane from a tuple");
  tri->add_option("--scene", tri_scene, "scene JSON file")->required();
  tri->add_option("--tuple", tri_tuple, "image tuple JSON file")->required();
  add_common(tri, tri_flags);

  // verify
  common_flags ver_flags;
  long ver_cases = 100;
  int ver_max_ambient = 5;
  int ver_max_views = 4;
  bool ver_reference = false;
  CLI::App* ver = app.add_subcommand("verify", "run randomized cross-checks between formulas");
  ver->add_option("--cases", ver_cases, "randomized cases per check");
  ver->add_option("--maxN", ver_max_ambient, "largest ambient dimension");
  ver->add_option("--maxn", ver_max_views, "largest number of views");
  ver->add_flag("--paper-examples", ver_reference, "replay the pinned reference examples");
  add_common(ver, ver_flags);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? exit_ok : exit_usage;
  }

  try {
    if (*an) {
      const mvv::center_arrangement arr =
          mvv::arrangement_from_json(mvv::load_json_file(an_input), an_input);
      const mvv::analysis_report rep = mvv::analyze(arr, an_k, to_options(an_flags, an_generic));
      emit(mvv::report_to_json(rep), an_flags.out_path);
      return rep.consistent ? exit_ok : exit_inconsistent;
    }

    if (*gen) {
      const std::uint64_t seed = effective_seed(gen_flags.seed);
      mvv::json payload;
      if (gen_scene) {
        if (gen_image_dims.empty())
          throw mvv::error("--scene generation needs --h image dimensions");
        const mvv::scene sc =
            mvv::random_scene(gen_ambient, gen_k, gen_image_dims, seed, gen_flags.entry_bound);
        payload = mvv::scene_to_json(sc);
      } else {
        if (gen_centers.empty()) throw mvv::error("arrangement generation needs --centers");
        for (int d : gen_centers)
          if (d < -1 || d >= gen_ambient)
            throw mvv::error("center dimension " + std::to_string(d) + " out of range");
        const mvv::center_arrangement arr =
            mvv::random_arrangement(gen_ambient, gen_centers, seed, gen_flags.entry_bound);
        payload = mvv::arrangement_to_json(arr, /*with_lattice=*/true);
      }
      payload["meta"] = mvv::options_to_json(to_options(gen_flags, false));
      emit(payload, gen_flags.out_path);
      return exit_ok;
    }

    if (*syn) {
      const mvv::scene sc = mvv::scene_from_json(mvv::load_json_file(syn_scene), syn_scene);
      const std::uint64_t seed = effective_seed(syn_flags.seed);
      const mvv::subspace world =
          syn_plane.empty()
              ? mvv::random_world_plane(sc, seed, syn_flags.entry_bound)
              : mvv::subspace_from_json(mvv::load_json_file(syn_plane), syn_plane);
      const mvv::image_tuple tuple = mvv::synthesize(sc, world);
      mvv::json payload = mvv::tuple_to_json(tuple);
      payload["meta"] = mvv::options_to_json(to_options(syn_flags, false));
      emit(payload, syn_flags.out_path);
      if (!syn_world_out.empty()) mvv::write_json_file(syn_world_out, mvv::subspace_to_json(world));
      return exit_ok;
    }

    if (*tri) {
      const mvv::scene sc = mvv::scene_from_json(mvv::load_json_file(tri_scene), tri_scene);
      const mvv::image_tuple tuple =
          mvv::tuple_from_json(mvv::load_json_file(tri_tuple), tri_tuple);
      const mvv::tri_result result = mvv::triangulate(sc, tuple);
      mvv::json payload;
      payload["status"] = mvv::to_string(result.status);
      payload["intersection_dim"] = result.intersection_dim;
      payload["plane"] = result.status == mvv::tri_status::exact
                             ? mvv::subspace_to_json(result.plane)
                             : mvv::json(nullptr);
      payload["meta"] = mvv::options_to_json(to_options(tri_flags, false));
      emit(payload, tri_flags.out_path);
      switch (result.status) {
        case mvv::tri_status::exact: return exit_ok;
        case mvv::tri_status::under_determined: return exit_under_determined;
        case mvv::tri_status::inconsistent: return exit_inconsistent;
      }
      return exit_ok;
    }

    if (*ver) {
      const std::uint64_t seed = effective_seed(ver_flags.seed);
      const std::vector<mvv::check_outcome> outcomes =
          ver_reference ? mvv::run_reference_examples(seed == 0 ? 20240901 : seed)
                        : mvv::run_verification(ver_cases, ver_max_ambient, ver_max_views, seed,
                                                ver_flags.trials, ver_flags.entry_bound);
      bool all_passed = true;
      mvv::json checks = mvv::json::array();
      for (const mvv::check_outcome& c : outcomes) {
        all_passed = all_passed && c.passed();
        checks.push_back(mvv::json{{"name", c.name},
                                   {"cases", c.cases},
                                   {"failures", c.failures},
                                   {"first_failure", c.failures > 0 ? c.first_failure
                                                                    : mvv::json(nullptr)}});
        std::cerr << (c.passed() ? "PASS" : "FAIL") << "  " << c.name << "  (" << c.cases
                  << " cases)\n";
      }
      mvv::json payload{{"checks", std::move(checks)}, {"passed", all_passed}};
      payload["meta"] = mvv::options_to_json(to_options(ver_flags, false));
      emit(payload, ver_flags.out_path);
      return all_passed ? exit_ok : exit_inconsistent;
    }
  } catch (const mvv::parse_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_usage;
  } catch (const mvv::partition_budget_exceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_budget;
  } catch (const mvv::feasibility_budget_exceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_budget;
  } catch (const mvv::error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_usage;
  }
  return exit_ok;
}
