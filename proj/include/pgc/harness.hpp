#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "pgc/closedform.hpp"
#include "pgc/connectivity.hpp"

namespace pgc {

inline constexpr const char* kToolVersion = "pgconn 1.0.0";

struct Caps {
  int oracle_cap = 40;       // vertex-mode oracle graph size
  int class_cap = 24;        // class-mode eligible twin classes
  int vertex_cap = 300;      // class-mode graph size
  i64 kappa_order_cap = 2000;  // max graph order for the max-flow oracle
};

enum class AgreementState { Agree, Disagree, Skipped };

// One row of a sweep. Oracle fields are nullopt when the instance exceeded a
// cap ("skipped", never guessed). Agreement flags are always recomputed from
// the paired fields.
struct ConnectivityReport {
  GroupSpec spec;
  i64 order = 0;

  std::optional<i64> kappa_oracle;
  std::optional<ConnectivityValue> ckappa_oracle;
  std::optional<bool> separable_oracle;

  KappaAnswer kappa_closed;
  CkappaAnswer ckappa_closed;
  bool separable_closed = false;
  // oracle kappa of the cyclic graph the closed ckappa refers to (C_n for
  // cyclic/dihedral, C_2n for dicyclic); used when ckappa_closed carries no
  // number of its own
  std::optional<i64> ckappa_reference_kappa;

  std::vector<int> kappa_witness;   // element codes
  std::vector<int> ckappa_witness;  // element codes, empty when infinite/skipped

  double ms_kappa = 0, ms_ckappa = 0, ms_separable = 0;

  AgreementState kappa_agreement() const;
  AgreementState ckappa_agreement() const;
  AgreementState separable_agreement() const;
  bool any_disagreement() const;
};

ConnectivityReport analyze(const GroupSpec& spec, const Caps& caps = {},
                           ExecPolicy policy = ExecPolicy::Parallel);

enum class LemmaCheckId {
  L_DEG,      // degree formula
  L_FORCED,   // universal vertices belong to every cutset
  L_YK,       // explicit minimal cutset family Y_k
  L_ALPHA,    // alpha(n) upper bound on kappa
  L_KAPPA2,   // exact kappa for two prime factors
  T_SEP_C,    // cyclic separability characterization
  L_NBHD,     // class neighborhood size formula
  L_NBHD_PP,  // prime-power specialization
  L_MONO,     // neighborhood monotonicity in the exponent
  P_MINCUT,   // minimum-cutset proposition audit (both readings)
  L_NEQ,      // kappa != ckappa cases incl. the 4p value
  T_EQ_C,     // kappa = ckappa characterization
  T_SEP_D,    // dihedral separability
  T_SEP_Q,    // dicyclic separability
  T_NEQ_DQ    // kappa != ckappa for dihedral and dicyclic
};

const std::vector<std::pair<LemmaCheckId, std::string>>& lemma_check_ids();
std::optional<LemmaCheckId> parse_lemma_id(const std::string& token);
std::string lemma_id_name(LemmaCheckId id);
std::string lemma_description(LemmaCheckId id);
i64 lemma_default_range(LemmaCheckId id);

struct LemmaOutcome {
  LemmaCheckId id;
  i64 range = 0;
  i64 checked = 0;  // instances examined
  bool pass = true;
  bool informational = false;  // reported, not asserted (the audit check)
  std::vector<std::string> counterexamples;
  std::string note;
};

LemmaOutcome verify_lemma(LemmaCheckId id, i64 to, const Caps& caps = {},
                          ExecPolicy policy = ExecPolicy::Parallel, u64 seed = 1);

// Single-instance slice of a check, used by sweep's --check columns.
std::vector<std::string> lemma_check_instance_failures(LemmaCheckId id, Family family, i64 n,
                                                       const Caps& caps, ExecPolicy policy,
                                                       u64 seed);

struct SweepResult {
  std::vector<ConnectivityReport> rows;
  std::vector<std::string> check_failures;
  bool any_disagreement() const;
};

SweepResult sweep(Family family, i64 from, i64 to, const std::set<LemmaCheckId>& checks = {},
                  const Caps& caps = {}, ExecPolicy policy = ExecPolicy::Parallel, u64 seed = 1);

// Fixed, versioned CSV layout; JSON mirrors the same fields one-to-one.
// Wall times are deliberately not serialized so identical inputs produce
// byte-identical output.
std::string to_csv(const SweepResult& r);
std::string to_json(const SweepResult& r);
std::string report_text(const ConnectivityReport& r);  // human-readable, with timings
std::string report_json(const ConnectivityReport& r);

struct Certificate {
  GroupSpec spec;
  i64 order = 0;
  i64 kappa = 0;
  std::vector<int> kappa_witness;
  bool kappa_verified = false;
  ConnectivityValue ckappa;
  std::vector<int> ckappa_witness;
  bool ckappa_verified = false;
  std::optional<i64> exhaustion_bound;  // set when ckappa is infinite
  bool separable = false;
  u64 seed = 0;
};

Certificate certify(const GroupSpec& spec, const Caps& caps = {},
                    ExecPolicy policy = ExecPolicy::Parallel, u64 seed = 1);
std::string certificate_json(const Certificate& c);

}  // namespace pgc
