#include "skewswitch/cli.hpp"

#include <algorithm>
#include <chrono>
#include <iomanip>
#include <ostream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "skewswitch/algfrontend.hpp"
#include "skewswitch/census.hpp"
#include "skewswitch/errors.hpp"
#include "skewswitch/eulerian.hpp"
#include "skewswitch/matrix_io.hpp"
#include "skewswitch/pointcomplex.hpp"
#include "skewswitch/skewmat.hpp"

namespace skewswitch::cli {

namespace {

using json = io::Json;

struct Reference {
  const char* label;
  int modulus;
  bool eulerian;
  std::vector<const char*> values;  // n = 1, 2, ...
};

// Published census values; `tables --check` recomputes and diffs them.
const std::vector<Reference>& reference_tables() {
  static const std::vector<Reference> tables = {
      {"s(2,n) [OEIS A002854]", 2, false,
       {"1", "1", "2", "3", "7", "16", "54", "243", "2038", "33120", "1182004"}},
      {"s(3,n) [OEIS A240973]", 3, false,
       {"1", "1", "2", "4", "14", "120", "3222", "271287", "64154817", "41653775052",
        "74220906305025"}},
      {"t(4,n)", 4, true, {"1", "1", "3", "8", "62", "1760"}},
  };
  return tables;
}

void emit(std::ostream& out, const json& doc) { out << io::format_document(doc); }

int check_vertex(const AltMatrix& m, int v) {
  if (v < 1 || v > m.size()) {
    throw OutOfRange("vertex " + std::to_string(v) + " is outside 1.." + std::to_string(m.size()));
  }
  return v - 1;
}

json witness_json(const std::optional<EquivWitness>& w) {
  if (!w) return json{{"equivalent", false}, {"permutation", nullptr}, {"switch_exponents", nullptr}};
  return json{{"equivalent", true},
              {"permutation", io::permutation_to_json(w->sigma)},
              {"switch_exponents", io::exponents_to_json(w->exponents)}};
}

json permutation_or_null(const std::optional<Permutation>& sigma) {
  return sigma ? io::permutation_to_json(*sigma) : json(nullptr);
}

json buckets_json(const RowSumProfile& p) {
  json out = json::array();
  for (const auto& bucket : p.buckets) {
    json b = json::array();
    for (int v : bucket) b.push_back(v + 1);
    out.push_back(std::move(b));
  }
  return out;
}

CensusOptions census_options(const std::string& solver, unsigned workers) {
  CensusOptions opts;
  opts.solver = solver == "smith" ? LinearSolver::kSmith : LinearSolver::kAuto;
  opts.workers = workers;
  return opts;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Switching classes of skew-symmetric matrices over Z/lZ", "skewswitch"};
  app.require_subcommand(1);

  int vertex = 0;
  std::string file_a, file_b;
  bool explain = false;
  std::string via = "triples";
  bool components = false, emit_dot = false;
  int modulus = 0, n = 0;
  std::string what = "classes";
  std::string solver = "auto";
  unsigned workers = 0;
  bool brute_force = false, list = false, check = false;

  auto* sw = app.add_subcommand("switch", "Apply the switching at one vertex");
  sw->add_option("-v,--vertex", vertex, "Vertex (1-based)")->required();
  sw->add_option("file", file_a, "Matrix file")->required();

  auto* iso_v = app.add_subcommand("isolate", "Switch a vertex to have zero row and column");
  iso_v->add_option("-v,--vertex", vertex, "Vertex (1-based)")->required();
  iso_v->add_option("file", file_a, "Matrix file")->required();

  auto* eul = app.add_subcommand("eulerize", "Switch to the modular Eulerian matrix of the orbit");
  eul->add_option("file", file_a, "Matrix file")->required();
  eul->add_flag("--explain", explain, "Also print s, row-sum buckets and exponents");

  auto* equiv = app.add_subcommand("equiv", "Decide switching equivalence");
  auto* iso = app.add_subcommand("iso", "Decide matrix isomorphism");
  auto* ciso = app.add_subcommand("complex-iso", "Decide isomorphism of point complexes");
  auto* cls = app.add_subcommand("classify", "Full classification report for two algebras");
  for (auto* sub : {equiv, iso, ciso, cls}) {
    sub->add_option("a", file_a, "First matrix file")->required();
    sub->add_option("b", file_b, "Second matrix file")->required();
  }

  auto* cx = app.add_subcommand("complex", "Point simplicial complex");
  cx->add_option("file", file_a, "Matrix file")->required();
  cx->add_option("--via", via, "Facet algorithm")
      ->check(CLI::IsMember({"triples", "isolations"}));
  cx->add_flag("--components", components, "List the linear components P(F)");
  cx->add_flag("--emit-dot", emit_dot, "Print the matrix as graphviz text instead");

  auto* cnt = app.add_subcommand("count", "Exact Burnside count");
  auto* cen = app.add_subcommand("census", "Counts, optionally with representatives");
  for (auto* sub : {cnt, cen}) {
    sub->add_option("--modulus", modulus, "l")->required()->check(CLI::Range(2, 1 << 20));
    sub->add_option("--n", n, "Number of vertices")->required()->check(CLI::Range(1, 64));
    sub->add_option("--solver", solver, "Linear solver")
        ->check(CLI::IsMember({"auto", "smith"}));
    sub->add_option("--workers", workers, "Worker threads (0 = hardware)");
  }
  cnt->add_option("--what", what, "classes or eulerian")
      ->check(CLI::IsMember({"classes", "eulerian"}));
  cen->add_flag("--brute-force", brute_force, "Enumerate every matrix instead");
  cen->add_flag("--list", list, "Include the Eulerian class representatives");

  auto* tab = app.add_subcommand("tables", "Recompute the reference census tables");
  tab->add_flag("--check", check, "Exit nonzero on any mismatch");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (app.exit(e, out, err) == 0) return kYes;
    err << app.help();
    return kUsage;
  }

  try {
    if (sw->parsed() || iso_v->parsed()) {
      const AltMatrix m = io::load_matrix(file_a);
      const int v = check_vertex(m, vertex);
      emit(out, io::matrix_to_json(sw->parsed() ? switch_at(m, v) : isolate(m, v)));
      return kYes;
    }

    if (eul->parsed()) {
      const Eulerization e = eulerize(io::load_matrix(file_a));
      json doc = io::matrix_to_json(e.matrix);
      if (explain) {
        doc["s"] = e.inverse_of_size;
        doc["row_sums"] = e.profile.sums;
        doc["buckets"] = buckets_json(e.profile);
        doc["switch_exponents"] = io::exponents_to_json(e.exponents);
      }
      emit(out, doc);
      return kYes;
    }

    if (equiv->parsed()) {
      const auto w = switching_equivalent(io::load_matrix(file_a), io::load_matrix(file_b));
      emit(out, witness_json(w));
      return w ? kYes : kNo;
    }

    if (iso->parsed()) {
      const auto sigma = isomorphic(io::load_matrix(file_a), io::load_matrix(file_b));
      emit(out, json{{"equivalent", sigma.has_value()},
                     {"permutation", permutation_or_null(sigma)},
                     {"switch_exponents", nullptr}});
      return sigma ? kYes : kNo;
    }

    if (cx->parsed()) {
      const AltMatrix m = io::load_matrix(file_a);
      if (emit_dot) {
        out << io::to_dot(m);
        return kYes;
      }
      const SimplicialComplex delta = via == "isolations" ? facets_via_isolations(m) : facets(m);
      json doc{{"facets", io::facets_to_json(delta)}, {"dimension", dimension(delta)}};
      if (components) {
        json comps = json::array();
        for (const auto& c : variety_components(delta)) {
          json support = json::array();
          for (int v : c.support) support.push_back(v + 1);
          comps.push_back({{"support", support}, {"projective_dimension", c.projective_dimension}});
        }
        doc["components"] = comps;
      }
      emit(out, doc);
      return kYes;
    }

    if (ciso->parsed()) {
      const SimplicialComplex a = facets(io::load_matrix(file_a));
      const SimplicialComplex b = facets(io::load_matrix(file_b));
      const auto sigma = complexes_isomorphic(a, b);
      emit(out, json{{"equivalent", sigma.has_value()},
                     {"permutation", permutation_or_null(sigma)},
                     {"facets_a", io::facets_to_json(a)},
                     {"facets_b", io::facets_to_json(b)}});
      return sigma ? kYes : kNo;
    }

    if (cls->parsed()) {
      const AltMatrix a = io::load_matrix(file_a);
      const AltMatrix b = io::load_matrix(file_b);
      const ClassificationReport r = classify_pair(SkewAlgebraSpec(a), SkewAlgebraSpec(b));
      const json w = witness_json(r.grmod_equivalent);
      json grmod{{"holds", w["equivalent"]},
                 {"permutation", w["permutation"]},
                 {"switch_exponents", w["switch_exponents"]}};
      if (r.grmod_equivalent) {
        json lambdas = json::array();
        for (const auto& l : grmod_witness_as_lambdas(*r.grmod_equivalent, a.modulus())) {
          lambdas.push_back({{"variable", l.variable + 1}, {"exponent", l.exponent}});
        }
        grmod["rescaling"] = lambdas;
      }
      json doc{
          {"equivalent", r.grmod_equivalent.has_value()},
          {"algebra_isomorphic",
           {{"holds", r.algebra_isomorphic.has_value()},
            {"permutation", permutation_or_null(r.algebra_isomorphic)}}},
          {"grmod_equivalent", grmod},
          {"complexes_isomorphic",
           {{"holds", r.complexes_isomorphic.has_value()},
            {"permutation", permutation_or_null(r.complexes_isomorphic)}}},
          {"facets_a", io::facets_to_json(r.facets_a)},
          {"facets_b", io::facets_to_json(r.facets_b)},
          {"variety_dimension_a", r.variety_dimension_a},
          {"variety_dimension_b", r.variety_dimension_b},
      };
      if (!r.note.empty()) doc["note"] = r.note;
      emit(out, doc);
      return r.grmod_equivalent ? kYes : kNo;
    }

    if (cnt->parsed()) {
      const auto opts = census_options(solver, workers);
      const BigInt value = what == "eulerian" ? count_eulerian_classes(modulus, n, opts)
                                              : count_switching_classes(modulus, n, opts);
      out << value.get_str() << '\n';
      return kYes;
    }

    if (cen->parsed()) {
      CensusResult result;
      if (brute_force) {
        result = brute_force_census(modulus, n);
        if (!list) result.representatives.reset();
      } else {
        const auto opts = census_options(solver, workers);
        result.modulus = modulus;
        result.n = n;
        result.s = count_switching_classes(modulus, n, opts);
        result.t = count_eulerian_classes(modulus, n, opts);
        if (list) result.representatives = enumerate_eulerian_representatives(modulus, n);
      }
      json doc{{"modulus", result.modulus},
               {"n", result.n},
               {"s", io::bigint_to_json(result.s)},
               {"t", io::bigint_to_json(result.t)},
               {"method", brute_force ? "brute-force" : "burnside"}};
      if (result.representatives) {
        json reps = json::array();
        for (const auto& m : *result.representatives) reps.push_back(io::matrix_to_json(m));
        doc["representatives"] = reps;
      }
      emit(out, doc);
      return kYes;
    }

    if (tab->parsed()) {
      bool all_ok = true;
      for (const auto& table : reference_tables()) {
        out << table.label << '\n';
        for (std::size_t k = 0; k < table.values.size(); ++k) {
          const int size = static_cast<int>(k) + 1;
          const BigInt got = table.eulerian ? count_eulerian_classes(table.modulus, size)
                                            : count_switching_classes(table.modulus, size);
          const BigInt expected(table.values[k]);
          out << "  n=" << std::setw(2) << size << "  " << std::setw(16) << got.get_str();
          if (check) {
            const bool ok = got == expected;
            all_ok = all_ok && ok;
            out << (ok ? "  ok" : "  MISMATCH, expected " + expected.get_str());
          }
          out << '\n';
        }
      }
      if (check) out << (all_ok ? "all tables match\n" : "tables differ\n");
      return all_ok ? kYes : kMismatch;
    }
  } catch (const GuardExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kResource;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::logic_error& e) {
    err << "internal error: " << e.what() << '\n';
    return kMismatch;
  }
  return kUsage;
}

}  // namespace skewswitch::cli
