#pragma once

#include <optional>
#include <string>
#include <vector>

#include "skewswitch/pointcomplex.hpp"
#include "skewswitch/skewmat.hpp"

namespace skewswitch {

// A standard graded skew polynomial algebra at l-th roots of unity, carried
// by its exponent matrix: x_i x_j = zeta^{m_ij} x_j x_i for a fixed
// primitive l-th root zeta that is never materialized.
class SkewAlgebraSpec {
 public:
  explicit SkewAlgebraSpec(AltMatrix exponents) : exponents_(std::move(exponents)) {}

  int modulus() const { return exponents_.modulus(); }
  int variables() const { return exponents_.size(); }
  const AltMatrix& exponents() const { return exponents_; }

  friend bool operator==(const SkewAlgebraSpec&, const SkewAlgebraSpec&) = default;

 private:
  AltMatrix exponents_;
};

// Answers to the three classification questions for a pair of algebras.
// Positive answers carry witnesses; algebra_isomorphic implies
// grmod_equivalent implies complexes_isomorphic.
struct ClassificationReport {
  std::optional<Permutation> algebra_isomorphic;
  std::optional<EquivWitness> grmod_equivalent;
  std::optional<Permutation> complexes_isomorphic;
  SimplicialComplex facets_a;
  SimplicialComplex facets_b;
  // Dimension of each point variety (largest P(F)).
  int variety_dimension_a;
  int variety_dimension_b;
  // Set when the verdicts follow from a structural fact rather than a
  // search, e.g. different numbers of variables.
  std::string note;
};

// Throws IncomparableSpec when the moduli differ.
ClassificationReport classify_pair(const SkewAlgebraSpec& a, const SkewAlgebraSpec& b);

// x_i -> zeta^{exponent} x_i, before relabeling by sigma.
struct Rescaling {
  int variable;
  int exponent;

  friend bool operator==(const Rescaling&, const Rescaling&) = default;
};

std::vector<Rescaling> grmod_witness_as_lambdas(const EquivWitness& w, int modulus);

// alpha'_{sigma(i) sigma(j)} = lambda_i^{-1} lambda_j alpha_ij, in exponents.
SkewAlgebraSpec apply_rescaling(const SkewAlgebraSpec& a, const std::vector<Rescaling>& lambdas,
                                const Permutation& sigma);

// The graded-module-equivalent algebra in which x_i is central.
SkewAlgebraSpec central_variable_form(const SkewAlgebraSpec& a, int i);

}  // namespace skewswitch
