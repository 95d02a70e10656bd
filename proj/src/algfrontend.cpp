#include "skewswitch/algfrontend.hpp"

#include <stdexcept>
#include <string>

#include "skewswitch/errors.hpp"

namespace skewswitch {

ClassificationReport classify_pair(const SkewAlgebraSpec& a, const SkewAlgebraSpec& b) {
  if (a.modulus() != b.modulus()) {
    throw IncomparableSpec("algebras use different roots of unity: l = " +
                           std::to_string(a.modulus()) + " vs " + std::to_string(b.modulus()));
  }
  SimplicialComplex fa = facets(a.exponents());
  SimplicialComplex fb = facets(b.exponents());
  const int da = dimension(fa);
  const int db = dimension(fb);

  if (a.variables() != b.variables()) {
    return ClassificationReport{
        std::nullopt, std::nullopt,  std::nullopt,
        std::move(fa), std::move(fb), da, db,
        "different numbers of variables: graded module categories are never equivalent"};
  }

  ClassificationReport report{isomorphic(a.exponents(), b.exponents()),
                              switching_equivalent(a.exponents(), b.exponents()),
                              complexes_isomorphic(fa, fb),
                              std::move(fa),
                              std::move(fb),
                              da,
                              db,
                              {}};
  if (report.algebra_isomorphic && !report.grmod_equivalent) {
    throw std::logic_error("isomorphic algebras reported as not graded-module equivalent");
  }
  if (report.grmod_equivalent && !report.complexes_isomorphic) {
    throw std::logic_error("graded-module equivalent algebras with non-isomorphic complexes");
  }
  return report;
}

std::vector<Rescaling> grmod_witness_as_lambdas(const EquivWitness& w, int modulus) {
  if (w.exponents.modulus() != modulus) throw ShapeMismatch("witness uses a different modulus");
  std::vector<Rescaling> out;
  for (int i = 0; i < w.exponents.size(); ++i) out.push_back({i, w.exponents[i]});
  return out;
}

SkewAlgebraSpec apply_rescaling(const SkewAlgebraSpec& a, const std::vector<Rescaling>& lambdas,
                                const Permutation& sigma) {
  std::vector<int> exps(static_cast<std::size_t>(a.variables()), 0);
  for (const auto& r : lambdas) {
    if (r.variable < 0 || r.variable >= a.variables()) throw OutOfRange("rescaled variable out of range");
    exps[static_cast<std::size_t>(r.variable)] = r.exponent;
  }
  return SkewAlgebraSpec(relabel(switch_many(a.exponents(), SwitchExponents(a.modulus(), exps)), sigma));
}

SkewAlgebraSpec central_variable_form(const SkewAlgebraSpec& a, int i) {
  return SkewAlgebraSpec(isolate(a.exponents(), i));
}

}  // namespace skewswitch
