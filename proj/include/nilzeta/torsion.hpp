#pragma once

#include "nilzeta/lattice.hpp"
#include "nilzeta/repdecomp.hpp"
#include "nilzeta/spectral.hpp"
#include "nilzeta/zeta.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace nilzeta {

enum class Provenance { Exact, PaperTrusted, Numeric };
std::string to_string(Provenance p);

struct TrustedConstant {
  std::string name;
  double value = 0;
  Provenance provenance = Provenance::Exact;
  std::string note;
  int truncation = 0;  // Numeric only
  double error = 0;    // Numeric only
};

class CutoffInsufficient : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct TorsionOptions {
  SpectralConfig spectral;
  double cutoff = 4.0;
  double cutoff_tol = 0.05;  // allowed outer-shell share of the direct sum
  ZetaOptions zeta;
};

// Super zeta functions of numerically realized labels, computed once per label.
class SpectralCache {
 public:
  explicit SpectralCache(SpectralConfig cfg = {}) : cfg_(cfg) {}
  const RuminSpectra& get(const RepLabel& label);
  const SpectralConfig& config() const { return cfg_; }
  std::size_t size() const { return store_.size(); }

 private:
  SpectralConfig cfg_;
  std::map<std::vector<double>, RuminSpectra> store_;
};

ZetaValue to_zeta_value(const SuperZeta& z);

ZetaValue zeta_I(const LatticeSpec& spec, const Character& chi, cplx s, const ZetaOptions& opt = {});
ZetaValue zeta_II(const LatticeSpec& spec, const Character& chi, cplx s, SpectralCache& cache,
                  const ZetaOptions& opt = {});

struct FactorEntry {
  std::string name;
  std::optional<cplx> value;
  Provenance provenance = Provenance::Exact;
  std::string note;
};

struct ZetaIIIResult {
  std::optional<ZetaValue> direct;  // Re s > 10/(2 kappa)
  double spectral_error = 0;        // sum of m * abs_error over labels
  double shell_share = 0;           // |outer shell| / |sum|
  int terms = 0;
  int distinct_spectra = 0;
  ZetaValue epstein_factor;         // Z^{(Gamma'')^*}((2 kappa s - 4)/3; lambda0, mu0)
  std::vector<FactorEntry> factors;
};
// Throws CutoffInsufficient when the outer shell exceeds cutoff_tol of the direct sum.
ZetaIIIResult zeta_III_structural(const LatticeSpec& spec, const Character& chi, cplx s, SpectralCache& cache,
                                  const TorsionOptions& opt = {});

// Dual lattice of Gamma'' with (lambda0, mu0) as shift, in basis coordinates.
ShiftedLattice2 dual_shifted_lattice(const LatticeSpec& spec, const Character& chi);

struct PoleEntry {
  std::string factor;
  double location = 0;
  std::optional<double> residue;
  Provenance provenance = Provenance::Exact;
  std::string note;
};

struct TorsionReport {
  TrustedConstant zetaI_prime0, zetaII_prime0, zetaIII_prime0;
  TrustedConstant zetaI0, zetaII0, zetaIII0;
  double log_tau = 0;
  double tau = 1;
  bool acyclic = true;
  std::vector<PoleEntry> poles;
  std::vector<std::string> provenance;  // "<term>: <tag>"
};
TorsionReport torsion_report(const LatticeSpec& spec, const Character& chi);

struct CheckRow {
  std::string name;
  bool pass = false;
  bool asserted = true;
  double measured = 0;
  double tolerance = 0;
  std::string detail;
};
// Exact cross-check of the scalar residue identity plus reported numeric residues.
std::vector<CheckRow> consistency_checks(const SpectralConfig& cfg = {}, bool numeric_residue = false);

// zeta_I + zeta_II + zeta_III(direct) against the label-by-label sum over decompose(cutoff).
struct DecompositionCheck {
  double s = 0;
  cplx factor_side{0}, direct_side{0};
  double difference = 0;
  double combined_error = 0;
  double relative = 0;
  int terms = 0;
  int spectra = 0;
  bool pass = false;
};
DecompositionCheck decomposition_identity_check(const LatticeSpec& spec, const Character& chi, double s,
                                                const TorsionOptions& opt = {});

}  // namespace nilzeta
