#include <chrono>
#include <sstream>

#include "json.hpp"
#include "pgc/harness.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace pgc {

namespace {

using json = nlohmann::json;

double ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

GroupSpec make_spec(Family family, i64 n) {
  switch (family) {
    case Family::Cyclic: return GroupSpec::cyclic(n);
    case Family::Dihedral: return GroupSpec::dihedral(n);
    case Family::Dicyclic: return GroupSpec::dicyclic(n);
  }
  throw std::invalid_argument("unknown family");
}

SearchOptions search_options(const Caps& caps, ExecPolicy policy) {
  SearchOptions o;
  o.mode = SearchMode::ClassQuotient;
  o.oracle_cap = caps.oracle_cap;
  o.class_cap = caps.class_cap;
  o.vertex_cap = caps.vertex_cap;
  o.policy = policy;
  return o;
}

std::string join_codes(const std::vector<int>& codes) {
  std::string s;
  for (std::size_t i = 0; i < codes.size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(codes[i]);
  }
  return s;
}

std::string agreement_name(AgreementState a) {
  switch (a) {
    case AgreementState::Agree: return "yes";
    case AgreementState::Disagree: return "no";
    case AgreementState::Skipped: return "skipped";
  }
  return "?";
}

std::string kappa_kind_name(KappaKind k) {
  return k == KappaKind::Exact ? "exact" : "upper_bound";
}

std::string ckappa_kind_name(CkappaAnswer::Kind k) {
  switch (k) {
    case CkappaAnswer::Kind::Infinite: return "infinite";
    case CkappaAnswer::Kind::Exact: return "exact";
    case CkappaAnswer::Kind::EqualsKappa: return "equals_kappa";
  }
  return "?";
}

}  // namespace

AgreementState ConnectivityReport::kappa_agreement() const {
  if (!kappa_oracle) return AgreementState::Skipped;
  const bool ok = kappa_closed.kind == KappaKind::Exact
                      ? *kappa_oracle == kappa_closed.value
                      : *kappa_oracle <= kappa_closed.value;
  return ok ? AgreementState::Agree : AgreementState::Disagree;
}

AgreementState ConnectivityReport::ckappa_agreement() const {
  if (!ckappa_oracle) return AgreementState::Skipped;
  switch (ckappa_closed.kind) {
    case CkappaAnswer::Kind::Infinite:
      return ckappa_oracle->infinite ? AgreementState::Agree : AgreementState::Disagree;
    case CkappaAnswer::Kind::Exact:
      return *ckappa_oracle == ConnectivityValue::finite(*ckappa_closed.value)
                 ? AgreementState::Agree
                 : AgreementState::Disagree;
    case CkappaAnswer::Kind::EqualsKappa: {
      std::optional<i64> target = ckappa_closed.value;
      if (!target) target = ckappa_reference_kappa;
      if (!target) return AgreementState::Skipped;
      return *ckappa_oracle == ConnectivityValue::finite(*target) ? AgreementState::Agree
                                                                  : AgreementState::Disagree;
    }
  }
  return AgreementState::Skipped;
}

AgreementState ConnectivityReport::separable_agreement() const {
  if (!separable_oracle) return AgreementState::Skipped;
  return *separable_oracle == separable_closed ? AgreementState::Agree : AgreementState::Disagree;
}

bool ConnectivityReport::any_disagreement() const {
  return kappa_agreement() == AgreementState::Disagree ||
         ckappa_agreement() == AgreementState::Disagree ||
         separable_agreement() == AgreementState::Disagree;
}

ConnectivityReport analyze(const GroupSpec& spec, const Caps& caps, ExecPolicy policy) {
  ConnectivityReport r;
  r.spec = spec;
  r.order = group_order(spec);

  // closed forms
  switch (spec.family) {
    case Family::Cyclic:
      r.kappa_closed = kappa_closed_cyclic(spec.n);
      r.ckappa_closed = ckappa_closed_cyclic(spec.n);
      r.separable_closed = separable_cyclic(spec.n).separable;
      break;
    case Family::Dihedral:
      r.kappa_closed = {KappaKind::Exact, 1};
      r.ckappa_closed = ckappa_closed_cyclic(spec.n);
      r.separable_closed = separable_dihedral(spec.n).separable;
      break;
    case Family::Dicyclic:
      r.kappa_closed = {KappaKind::Exact, 2};
      r.ckappa_closed = ckappa_closed_cyclic(2 * spec.n);
      r.separable_closed = separable_dicyclic(spec.n).separable;
      break;
  }

  if (r.order > caps.kappa_order_cap) return r;  // all oracle fields skipped

  const PowerGraph g = build(spec);

  {
    auto t0 = std::chrono::steady_clock::now();
    auto kr = vertex_connectivity(g);
    r.ms_kappa = ms_since(t0);
    r.kappa_oracle = kr.value.value;
    if (kr.witness) r.kappa_witness = kr.witness->element_codes;
  }

  {
    auto t0 = std::chrono::steady_clock::now();
    try {
      auto cr = cyclic_vertex_connectivity(g, search_options(caps, policy));
      r.ckappa_oracle = cr.value;
      if (cr.witness) r.ckappa_witness = cr.witness->element_codes;
      r.separable_oracle = !cr.value.infinite;
    } catch (const CapExceeded&) {
      // skipped, never guessed
    }
    r.ms_ckappa = ms_since(t0);
    r.ms_separable = 0;
  }

  if (r.ckappa_closed.kind == CkappaAnswer::Kind::EqualsKappa && !r.ckappa_closed.value) {
    const i64 ref_n = spec.family == Family::Dicyclic ? 2 * spec.n : spec.n;
    if (ref_n <= caps.kappa_order_cap)
      r.ckappa_reference_kappa = vertex_connectivity(build(GroupSpec::cyclic(ref_n))).value.value;
  }
  return r;
}

bool SweepResult::any_disagreement() const {
  if (!check_failures.empty()) return true;
  for (const auto& row : rows)
    if (row.any_disagreement()) return true;
  return false;
}

namespace {

bool check_applies_to(LemmaCheckId id, Family family) {
  switch (id) {
    case LemmaCheckId::L_FORCED: return true;
    case LemmaCheckId::T_SEP_D: return family == Family::Dihedral;
    case LemmaCheckId::T_SEP_Q: return family == Family::Dicyclic;
    case LemmaCheckId::T_NEQ_DQ: return family != Family::Cyclic;
    default: return family == Family::Cyclic;
  }
}

}  // namespace

SweepResult sweep(Family family, i64 from, i64 to, const std::set<LemmaCheckId>& checks,
                  const Caps& caps, ExecPolicy policy, u64 seed) {
  const i64 lo = std::max<i64>(from, family == Family::Cyclic     ? 1
                                      : family == Family::Dihedral ? 3
                                                                   : 2);
  if (lo > to) throw std::invalid_argument("sweep: empty range");
  for (LemmaCheckId id : checks)
    if (!check_applies_to(id, family))
      throw std::invalid_argument("sweep: check " + lemma_id_name(id) +
                                  " does not apply to the " + family_name(family) + " family");

  const int count = static_cast<int>(to - lo + 1);
  SweepResult out;
  out.rows.resize(count);
  std::vector<std::vector<std::string>> fails(count);

  auto run_one = [&](int i) {
    const i64 n = lo + i;
    out.rows[i] = analyze(make_spec(family, n), caps, ExecPolicy::Serial);
    for (LemmaCheckId id : checks) {
      auto f = lemma_check_instance_failures(id, family, n, caps, ExecPolicy::Serial, seed);
      fails[i].insert(fails[i].end(), f.begin(), f.end());
    }
  };

#ifdef _OPENMP
  if (policy == ExecPolicy::Parallel) {
#pragma omp parallel for schedule(dynamic, 1)
    for (int i = 0; i < count; ++i) run_one(i);
  } else {
    for (int i = 0; i < count; ++i) run_one(i);
  }
#else
  for (int i = 0; i < count; ++i) run_one(i);
#endif

  for (auto& f : fails) out.check_failures.insert(out.check_failures.end(), f.begin(), f.end());
  return out;
}

namespace {

std::string csv_kappa_closed(const ConnectivityReport& r) { return std::to_string(r.kappa_closed.value); }

std::string csv_ckappa_closed(const ConnectivityReport& r) {
  switch (r.ckappa_closed.kind) {
    case CkappaAnswer::Kind::Infinite: return "inf";
    case CkappaAnswer::Kind::Exact: return std::to_string(*r.ckappa_closed.value);
    case CkappaAnswer::Kind::EqualsKappa:
      return r.ckappa_closed.value ? std::to_string(*r.ckappa_closed.value) : "";
  }
  return "";
}

std::string csv_opt(const std::optional<i64>& v) { return v ? std::to_string(*v) : "skipped"; }

std::string csv_ckappa_oracle(const ConnectivityReport& r) {
  if (!r.ckappa_oracle) return "skipped";
  return r.ckappa_oracle->infinite ? "inf" : std::to_string(r.ckappa_oracle->value);
}

std::string csv_separable(const std::optional<bool>& v) {
  return v ? (*v ? "true" : "false") : "skipped";
}

constexpr const char* kCsvVersion = "# pgconn report v1";
constexpr const char* kCsvHeader =
    "family,n,order,kappa_oracle,kappa_closed,kappa_kind,agree_kappa,ckappa_oracle,"
    "ckappa_closed,ckappa_kind,agree_ckappa,separable_oracle,separable_closed,"
    "agree_separable,kappa_witness,ckappa_witness";

json row_json(const ConnectivityReport& r) {
  json j;
  j["family"] = family_name(r.spec.family);
  j["n"] = r.spec.n;
  j["order"] = r.order;
  j["kappa_oracle"] = csv_opt(r.kappa_oracle);
  j["kappa_closed"] = csv_kappa_closed(r);
  j["kappa_kind"] = kappa_kind_name(r.kappa_closed.kind);
  j["agree_kappa"] = agreement_name(r.kappa_agreement());
  j["ckappa_oracle"] = csv_ckappa_oracle(r);
  j["ckappa_closed"] = csv_ckappa_closed(r);
  j["ckappa_kind"] = ckappa_kind_name(r.ckappa_closed.kind);
  j["agree_ckappa"] = agreement_name(r.ckappa_agreement());
  j["separable_oracle"] = csv_separable(r.separable_oracle);
  j["separable_closed"] = r.separable_closed ? "true" : "false";
  j["agree_separable"] = agreement_name(r.separable_agreement());
  j["kappa_witness"] = join_codes(r.kappa_witness);
  j["ckappa_witness"] = join_codes(r.ckappa_witness);
  return j;
}

}  // namespace

std::string to_csv(const SweepResult& r) {
  std::string out = std::string(kCsvVersion) + "\n" + kCsvHeader + "\n";
  for (const auto& row : r.rows) {
    out += family_name(row.spec.family) + "," + std::to_string(row.spec.n) + "," +
           std::to_string(row.order) + "," + csv_opt(row.kappa_oracle) + "," +
           csv_kappa_closed(row) + "," + kappa_kind_name(row.kappa_closed.kind) + "," +
           agreement_name(row.kappa_agreement()) + "," + csv_ckappa_oracle(row) + "," +
           csv_ckappa_closed(row) + "," + ckappa_kind_name(row.ckappa_closed.kind) + "," +
           agreement_name(row.ckappa_agreement()) + "," + csv_separable(row.separable_oracle) +
           "," + (row.separable_closed ? "true" : "false") + "," +
           agreement_name(row.separable_agreement()) + "," + join_codes(row.kappa_witness) + "," +
           join_codes(row.ckappa_witness) + "\n";
  }
  return out;
}

std::string to_json(const SweepResult& r) {
  json j;
  j["version"] = kCsvVersion + 2;  // drop the "# "
  j["rows"] = json::array();
  for (const auto& row : r.rows) j["rows"].push_back(row_json(row));
  j["check_failures"] = r.check_failures;
  return j.dump(2) + "\n";
}

std::string report_text(const ConnectivityReport& r) {
  std::ostringstream os;
  os << family_name(r.spec.family) << " n=" << r.spec.n << " (order " << r.order << ")\n";
  os << "  kappa:     oracle=" << csv_opt(r.kappa_oracle) << "  closed=" << csv_kappa_closed(r)
     << " (" << kappa_kind_name(r.kappa_closed.kind) << ")  agree=" << agreement_name(r.kappa_agreement())
     << "  [" << r.ms_kappa << " ms]\n";
  os << "  ckappa:    oracle=" << csv_ckappa_oracle(r) << "  closed=" << csv_ckappa_closed(r)
     << " (" << ckappa_kind_name(r.ckappa_closed.kind) << ")  agree="
     << agreement_name(r.ckappa_agreement()) << "  [" << r.ms_ckappa << " ms]\n";
  os << "  separable: oracle=" << csv_separable(r.separable_oracle)
     << "  closed=" << (r.separable_closed ? "true" : "false")
     << "  agree=" << agreement_name(r.separable_agreement()) << "\n";
  if (!r.kappa_witness.empty()) os << "  kappa witness:  " << join_codes(r.kappa_witness) << "\n";
  if (!r.ckappa_witness.empty()) os << "  ckappa witness: " << join_codes(r.ckappa_witness) << "\n";
  return os.str();
}

std::string report_json(const ConnectivityReport& r) { return row_json(r).dump(2) + "\n"; }

Certificate certify(const GroupSpec& spec, const Caps& caps, ExecPolicy policy, u64 seed) {
  if (group_order(spec) > caps.kappa_order_cap)
    throw CapExceeded("certify refused: group order " + std::to_string(group_order(spec)) +
                      " exceeds the oracle cap of " + std::to_string(caps.kappa_order_cap));
  Certificate c;
  c.spec = spec;
  c.order = group_order(spec);
  c.seed = seed;

  const PowerGraph g = build(spec);
  auto kr = vertex_connectivity(g);
  c.kappa = kr.value.value;
  if (kr.witness) {
    c.kappa_witness = kr.witness->element_codes;
    c.kappa_verified = kr.witness->is_cutset &&
                       static_cast<i64>(kr.witness->vertices.size()) == c.kappa;
  } else {
    c.kappa_verified = true;  // complete graph, no cutset exists by convention
  }

  auto cr = cyclic_vertex_connectivity(g, search_options(caps, policy));
  c.ckappa = cr.value;
  if (cr.witness) {
    c.ckappa_witness = cr.witness->element_codes;
    c.ckappa_verified = cr.witness->is_cyclic &&
                        static_cast<i64>(cr.witness->vertices.size()) == cr.value.value;
  } else {
    c.ckappa_verified = true;  // exhaustion: all class unions searched
    c.exhaustion_bound = cr.exhaustion_bound;
  }
  c.separable = !cr.value.infinite;
  return c;
}

std::string certificate_json(const Certificate& c) {
  json j;
  j["family"] = family_name(c.spec.family);
  j["n"] = c.spec.n;
  j["order"] = c.order;
  j["kappa"] = {{"value", c.kappa},
                {"witness", c.kappa_witness},
                {"verified", c.kappa_verified}};
  if (c.ckappa.infinite) {
    j["ckappa"] = {{"value", "infinite"},
                   {"exhaustion_bound", c.exhaustion_bound ? json(*c.exhaustion_bound) : json()},
                   {"verified", c.ckappa_verified}};
  } else {
    j["ckappa"] = {{"value", c.ckappa.value},
                   {"witness", c.ckappa_witness},
                   {"verified", c.ckappa_verified}};
  }
  j["separable"] = c.separable;
  j["toolVersion"] = kToolVersion;
  j["seed"] = c.seed;
  return j.dump(2) + "\n";
}

}  // namespace pgc
