#pragma once

#include <polycontact/adjacency.hpp>
#include <polycontact/algebra.hpp>
#include <polycontact/cylinder_poly.hpp>
#include <polycontact/logic.hpp>

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace polycontact {

using MaskValuation = std::map<std::string, std::uint64_t>;

struct CountermodelCertificate {
  std::string formula_text;
  FormulaPtr formula;

  AdjacencySpace discrete;
  MaskValuation discrete_valuation;

  AdjacencySpace untied;
  std::vector<Cell> pmorphism;  // untied cell -> discrete cell
  MaskValuation untied_valuation;
  std::size_t untie_steps = 0;

  Cell root = 0;
  std::vector<Cell> arrangement;
  int dim = 1;
  std::vector<CylinderPolytope> images;  // per untied cell
  std::map<std::string, CylinderPolytope> geometric_valuation;

  bool discrete_value = true;
  bool untied_value = true;
  bool geometric_value = true;
};

// x in v'(p) iff map[x] in v(p).
MaskValuation preimage_valuation(const std::vector<Cell>& map, const MaskValuation& v);

// Discrete countermodel, untying, lifted valuation, projection onto R^dim with
// root cell 0 of the untied space, merged polytope valuation. Each stage is
// re-evaluated and a VerificationError names the identity that failed.
std::optional<CountermodelCertificate> synthesize(const std::string& formula_text, std::size_t max_cells, int dim,
                                                  unsigned jobs = 1);

struct CertificateReport {
  std::vector<AxiomCheck> checks;

  bool all_passed() const;
  const AxiomCheck& check(const std::string& name) const;
  std::string text() const;
};

// Re-runs every stage check from the certificate's own data.
CertificateReport verify(const CountermodelCertificate& cert);

std::string to_string(const CountermodelCertificate& cert);
CountermodelCertificate parse_certificate(std::string_view text);

}  // namespace polycontact
