#ifndef GROVERWALK_REPORT_HPP
#define GROVERWALK_REPORT_HPP

#include <json.hpp>

#include <ostream>
#include <string>

#include "groverwalk/chebyshev.hpp"
#include "groverwalk/relations.hpp"
#include "groverwalk/spectral.hpp"

namespace groverwalk {

using Json = nlohmann::ordered_json;

inline std::string to_string(PgstOutcome o) {
  switch (o) {
    case PgstOutcome::Yes: return "yes";
    case PgstOutcome::No: return "no";
    default: return "unknown";
  }
}

inline std::string to_string(LatticeMode m) {
  return m == LatticeMode::Exact ? "exact" : "heuristic";
}

inline std::string to_string(CertificateType t) {
  switch (t) {
    case CertificateType::LatticeAllEven: return "lattice_all_even";
    case CertificateType::ParityViolation: return "parity_violation";
    case CertificateType::CospectralityFailure: return "cospectrality_failure";
    case CertificateType::OrderObstruction: return "order_obstruction";
    default: return "search_bounds";
  }
}

inline std::string to_string(PstOutcome o) {
  switch (o) {
    case PstOutcome::Found: return "found";
    case PstOutcome::AbsentWithinPeriod: return "absent_within_period";
    default: return "inconclusive";
  }
}

inline Json certificate_to_json(const PgstVerdict& v) {
  const PgstCertificate& c = v.certificate;
  Json j;
  j["type"] = to_string(c.type);
  switch (c.type) {
    case CertificateType::ParityViolation:
      j["relation"] = c.relation;
      j["angles"] = c.angles;
      j["minus_weights"] = c.minus_weights;
      break;
    case CertificateType::LatticeAllEven:
      j["basis"] = c.basis;
      j["angles"] = c.angles;
      j["minus_weights"] = c.minus_weights;
      break;
    case CertificateType::CospectralityFailure:
      j["eigenvalue"] = c.eigenvalue;
      break;
    case CertificateType::OrderObstruction:
      j["element"] = c.witness_element;
      j["order"] = c.element_order;
      break;
    case CertificateType::SearchBounds:
      j["precision"] = v.precision_digits;
      j["coeff_bound"] = v.coeff_bound;
      break;
  }
  if (!c.detail.empty()) j["detail"] = c.detail;
  return j;
}

inline Json verdict_to_json(const PgstVerdict& v) {
  Json j;
  j["outcome"] = to_string(v.outcome);
  j["certificate"] = certificate_to_json(v);
  j["mode"] = to_string(v.mode);
  j["precision"] = v.precision_digits;
  j["coeff_bound"] = v.coeff_bound;
  if (!v.caveats.empty()) j["caveats"] = v.caveats;
  return j;
}

inline Json spectrum_to_json(const SpectralDecomposition& dec, double support_tol = 1e-8) {
  Json j;
  j["schema"] = "1";
  Json values = Json::array();
  const int n = dec.projectors.empty() ? 0 : static_cast<int>(dec.projectors.front().rows());
  for (std::size_t i = 0; i < dec.eigenvalues.size(); ++i) {
    Json entry;
    entry["value"] = dec.eigenvalues[i];
    entry["multiplicity"] = dec.multiplicities[i];
    Json support = Json::array();
    for (int u = 0; u < n; ++u)
      support.push_back(dec.projectors[i].col(u).norm() > support_tol);
    entry["support"] = support;
    values.push_back(std::move(entry));
  }
  j["eigenvalues"] = std::move(values);
  return j;
}

inline Json pst_to_json(const PstVerdict& v) {
  Json j;
  j["outcome"] = to_string(v.outcome);
  if (v.outcome == PstOutcome::Found) j["tau"] = v.tau;
  if (v.period) j["period"] = *v.period;
  j["best_fidelity"] = v.best_fidelity;
  j["searched_up_to"] = v.searched_up_to;
  return j;
}

inline void write_trace_csv(std::ostream& out, const FidelityTrace& trace) {
  out << "tau,fidelity\n";
  for (std::size_t tau = 0; tau < trace.samples.size(); ++tau) {
    out << tau << ',';
    const auto old = out.precision(17);
    out << trace.samples[tau] << '\n';
    out.precision(old);
  }
}

}  // namespace groverwalk

#endif  // GROVERWALK_REPORT_HPP
