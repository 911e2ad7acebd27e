#include "pa/cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "pa/builder.hpp"
#include "pa/census.hpp"
#include "pa/documents.hpp"
#include "pa/errors.hpp"
#include "pa/generators.hpp"
#include "pa/lattice.hpp"
#include "pa/polytope.hpp"
#include "pa/poset.hpp"
#include "pa/tubing.hpp"

namespace pa {

namespace {

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream os;
    os << std::cin.rdbuf();
    return os.str();
  }
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot read '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

Poset load_from(const std::string& path) { return load_poset(read_input(path)); }

std::vector<long long> parse_fvector(const std::string& text) {
  std::vector<long long> out;
  std::string item;
  std::istringstream is(text);
  while (std::getline(is, item, ','))
    try {
      out.push_back(std::stoll(item));
    } catch (const std::exception&) {
      throw Error(ErrorCode::ParseError, "bad f-vector entry '" + item + "'");
    }
  if (out.empty()) throw Error(ErrorCode::ParseError, "empty f-vector");
  return out;
}

void print_lattice_text(const FaceLattice& l, std::ostream& out) {
  for (std::size_t i = 0; i < l.faces.size(); ++i) {
    out << i << " dim=" << l.faces[i].dim << ' ' << l.faces[i].label << " covers=";
    for (std::size_t k = 0; k < l.faces[i].covers.size(); ++k)
      out << (k ? "," : "") << l.faces[i].covers[k];
    out << '\n';
  }
}

void print_schedule(const std::vector<TruncationStep>& steps, std::ostream& out) {
  if (steps.empty()) {
    out << "schedule: empty (point or product case)\n";
    return;
  }
  for (std::size_t i = 0; i < steps.size(); ++i) {
    out << "step " << i + 1 << ": size=" << steps[i].size << " face=[";
    for (std::size_t k = 0; k < steps[i].face.size(); ++k)
      out << (k ? "," : "") << steps[i].face[k];
    out << "] new=" << steps[i].new_label << '\n';
  }
}

struct CheckFailure {};

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"poset associahedra: tubings, truncations, and census"};
  app.require_subcommand(1);

  long long budget = kDefaultBudget;

  auto* tubes_cmd = app.add_subcommand("tubes", "list the tubes of a poset document");
  std::string tubes_file;
  tubes_cmd->add_option("file", tubes_file, "poset document ('-' = stdin)")->required();

  auto* tubings_cmd = app.add_subcommand("tubings", "list the tubings of a poset document");
  std::string tubings_file;
  int max_size = -1;
  tubings_cmd->add_option("file", tubings_file)->required();
  tubings_cmd->add_option("--max-size", max_size, "largest tubing size to emit");
  tubings_cmd->add_option("--budget", budget);

  auto* fvector_cmd = app.add_subcommand("fvector", "f-vector of the poset associahedron");
  std::string fvector_file, method = "oracle";
  fvector_cmd->add_option("file", fvector_file)->required();
  fvector_cmd->add_option("--method", method)->check(CLI::IsMember({"oracle", "build"}));
  fvector_cmd->add_option("--budget", budget);

  auto* lattice_cmd = app.add_subcommand("lattice", "face lattice (text or DOT)");
  std::string lattice_file, lattice_format = "text";
  lattice_cmd->add_option("file", lattice_file)->required();
  lattice_cmd->add_option("--format", lattice_format)->check(CLI::IsMember({"text", "dot"}));
  lattice_cmd->add_option("--budget", budget);

  auto* build_cmd = app.add_subcommand("build", "recursive truncation construction");
  std::string build_file, root;
  bool show_schedule = false;
  build_cmd->add_option("file", build_file)->required();
  build_cmd->add_flag("--schedule", show_schedule, "print the outermost truncation schedule");
  build_cmd->add_option("--root", root, "truncation root override");

  auto* check_cmd = app.add_subcommand("check", "full invariant suite incl. oracle comparison");
  std::string check_file;
  check_cmd->add_option("file", check_file)->required();
  check_cmd->add_option("--budget", budget);

  auto* iso_cmd = app.add_subcommand("iso", "compare two poset associahedra lattices");
  std::string iso_a, iso_b;
  iso_cmd->add_option("a", iso_a)->required();
  iso_cmd->add_option("b", iso_b)->required();
  iso_cmd->add_option("--budget", budget);

  auto* gen_cmd = app.add_subcommand("gen", "emit a named family poset");
  std::string gen_name, gen_out, gen_format = "json";
  int gen_size = 0;
  gen_cmd->add_option("name", gen_name)->required()->check(
      CLI::IsMember(standard_family_names()));
  gen_cmd->add_option("size", gen_size)->required();
  gen_cmd->add_option("-o,--output", gen_out, "write to file instead of stdout");
  gen_cmd->add_option("--format", gen_format)->check(CLI::IsMember({"json", "dot"}));

  auto* search_cmd = app.add_subcommand("search", "two-rank census up to isomorphism");
  int ranks = 2, max_elements = 0;
  std::string match_fvector, reference_file;
  bool nontrivial_bundle = false;
  search_cmd->add_option("--ranks", ranks)->required();
  search_cmd->add_option("--max-elements", max_elements)->required();
  search_cmd->add_option("--match-fvector", match_fvector, "filter, e.g. 68,136,88,20");
  search_cmd->add_option("--reference", reference_file,
                         "poset document; report lattice-iso matches against it");
  search_cmd->add_flag("--nontrivial-bundle", nontrivial_bundle,
                       "only posets with a maximal bundle of size >= 2");
  search_cmd->add_option("--budget", budget);

  try {
    std::vector<const char*> argv;
    argv.push_back("pa");
    for (const auto& a : args) argv.push_back(a.c_str());
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return 1;
  }

  try {
    if (*tubes_cmd) {
      Poset p = load_from(tubes_file);
      for (Mask t : tubes(p)) out << p.set_label(t) << '\n';
    } else if (*tubings_cmd) {
      Poset p = load_from(tubings_file);
      EnumOptions opts;
      opts.budget = budget;
      if (max_size >= 0) opts.max_size = max_size;
      for (const Tubing& t : tubings(p, opts)) out << tubing_label(p, t) << '\n';
    } else if (*fvector_cmd) {
      Poset p = load_from(fvector_file);
      std::vector<long long> f = method == "oracle"
                                     ? f_vector(p, budget)
                                     : face_lattice(build(p)).f_vector();
      out << fvec_to_string(f) << '\n';
    } else if (*lattice_cmd) {
      Poset p = load_from(lattice_file);
      FaceLattice l = face_poset(p, budget);
      if (lattice_format == "dot")
        out << lattice_to_dot(l);
      else
        print_lattice_text(l, out);
    } else if (*build_cmd) {
      Poset p = load_from(build_file);
      std::vector<TruncationStep> steps;
      BuildOptions opts;
      if (!root.empty()) opts.root = root;
      opts.schedule_out = &steps;
      SimplePolytope q = build(p, opts);
      if (show_schedule) print_schedule(steps, out);
      out << "dimension " << q.dim << '\n';
      out << "vertices " << q.vertices.size() << '\n';
      out << "facets " << q.facets.size() << '\n';
      for (const auto& l : q.facet_labels_sorted()) out << l << '\n';
    } else if (*check_cmd) {
      Poset p = load_from(check_file);
      out << "elements " << p.n() << ", bundles " << p.bundle_count() << ", dimension "
          << dimension(p) << '\n';
      FaceLattice lo = face_poset(p, budget);
      out << "f-vector: " << fvec_to_string(lo.f_vector()) << '\n';
      bool ok = true;
      auto report = [&](const char* name, bool value) {
        out << name << ": " << (value ? "yes" : "no") << '\n';
        ok = ok && value;
      };
      report("graded", graded_check(lo));
      report("euler", euler_check(lo));
      report("diamond", diamond_check(lo));
      bool full_rank = true;  // every positive-dimensional face covers something
      for (const auto& f : lo.faces)
        if (f.dim > 0 && f.covers.empty()) full_rank = false;
      report("maximal tubings of size n-b", full_rank);
      OracleReport rep = verify_against_oracle(p, budget);
      report("facet labels = tubes", rep.facet_labels_match);
      report("oracle ≅ build", rep.isomorphic);
      if (!ok) throw CheckFailure{};
    } else if (*iso_cmd) {
      Poset a = load_from(iso_a), b = load_from(iso_b);
      bool iso = lattice_iso(face_poset(a, budget), face_poset(b, budget)).has_value();
      out << (iso ? "isomorphic" : "not isomorphic") << '\n';
      if (!iso) return 2;
    } else if (*gen_cmd) {
      Poset p = standard(gen_name, gen_size);
      std::string payload = gen_format == "dot" ? poset_to_dot(p) : poset_to_json(p);
      if (gen_out.empty()) {
        out << payload;
      } else {
        std::ofstream f(gen_out);
        if (!f) throw Error(ErrorCode::ParseError, "cannot write '" + gen_out + "'");
        f << payload;
      }
    } else if (*search_cmd) {
      if (ranks != 2) throw Error(ErrorCode::BadSize, "only --ranks 2 is supported");
      std::vector<Poset> cands = two_rank_posets(max_elements, nontrivial_bundle);
      std::optional<std::vector<long long>> filter;
      if (!match_fvector.empty()) filter = parse_fvector(match_fvector);
      if (reference_file.empty()) {
        for (const Poset& p : cands) {
          std::vector<long long> f = f_vector(p, budget);
          if (filter && f != *filter) continue;
          std::ostringstream blocks;
          bool first = true;
          for (int i = 0; i < p.n(); ++i)
            if (p.boundary(i)) {
              blocks << (first ? "" : ",") << p.set_label(p.boundary(i));
              first = false;
            }
          out << "minimals=" << popcount(p.bundle(0)) << " boundaries=[" << blocks.str()
              << "] f=" << fvec_to_string(f) << '\n';
        }
        out << "total " << cands.size() << " posets\n";
      } else {
        FaceLattice ref = face_poset(load_from(reference_file), budget);
        CensusReport rep = census_compare(ref, cands, budget);
        out << "candidates " << rep.candidates << '\n';
        out << "f-vector matches " << rep.fvector_matches << '\n';
        out << "lattice-isomorphic matches " << rep.iso_matches << '\n';
      }
    }
  } catch (const CheckFailure&) {
    err << "check failed\n";
    return 2;
  } catch (const Error& e) {
    err << e.what() << '\n';
    if (e.code() == ErrorCode::BudgetExceeded) return 3;
    return e.is_input_error() ? 1 : 2;
  }
  return 0;
}

}  // namespace pa
